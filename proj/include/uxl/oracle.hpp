#ifndef UXL_ORACLE_HPP
#define UXL_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uxl/interval_set.hpp"
#include "uxl/support.hpp"

// Definitional oracles. This header deliberately stays below the closed-form
// layer: nothing here may call support_compare, ext_rel, ext_min or ext_max.

namespace uxl {

struct FiniteBruteforceReport {
  int n = 0;
  std::size_t relation_instances = 0;  // pairs x 4 relations
  std::size_t operation_instances = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string to_text() const;
};

// X = Fin(n): principal ultrafilters as raw families over all 2^n subsets, the
// literal double-membership evaluation of <~, <=~, >~, >=~ and of min~/max~
// membership for every subset, checked against the original relations and
// operations. Also certifies that no non-principal ultrafilter exists (the
// co-singletons intersect to the empty set). 1 <= n <= 6.
FiniteBruteforceReport finite_bruteforce(int n);

// u R~ v by the definition: A = {x : {y : x R y} in v}, then A in u, using
// only segment transforms and definitional membership.
bool oracle_ext_rel(const OrderTerm& t, SegRel rel, const UltraToken& u, const UltraToken& v);

enum class MinMax { Min, Max };

// S in op~(u,v) by the definition: the piecewise-constant predicate
// P(x) = [{y : op(x,y) in S} in v] is evaluated per region after splitting at
// the boundaries of S and the support boundary of v, assembled into
// {x : P(x)} and tested for membership in u.
bool oracle_minmax_membership(const OrderTerm& t, MinMax op, const UltraToken& u,
                              const UltraToken& v, const IntervalSet& S);

}  // namespace uxl

#endif
