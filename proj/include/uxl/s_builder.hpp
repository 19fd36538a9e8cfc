#ifndef UXL_S_BUILDER_HPP
#define UXL_S_BUILDER_HPP

#include <string>
#include <variant>
#include <vector>

#include "uxl/support_order.hpp"

namespace uxl {

// A locus of s(X): an element or a cut of the ground term.
using Locus = std::variant<Pos, Cut>;

// Supports living at the locus, in support order: at an element p,
// [LeftHalf(before p) if p is a left limit] ++ [Point(p)] ++ [RightHalf(after
// p) if p is a right limit]; at a gap both halves; at an end cut the single
// valid half; at a jump nothing.
std::vector<Support> local_contribution(const OrderTerm& t, const Locus& locus);

// Closed-form order type of the support order for the scattered fragment
// (finite, w, w*, z and their sums/products); terms containing Eta raise
// NotClosedForm, the empty order raises EmptyOrder. Result is normalized.
OrderTerm s_of_term(const OrderTerm& t);

// n-fold iteration of s_of_term (n >= 1).
OrderTerm s_iterate(const OrderTerm& t, std::size_t n);

struct DenseBlockReport {
  std::string locus;
  std::size_t block_size = 0;  // 3 at a rational point, 2 at a gap
  bool consecutive = false;    // no enumerated support strictly inside
};

struct DenseProfileReport {
  std::vector<DenseBlockReport> blocks;
  bool bottom_end_ok = false;  // RightHalf(bottom) below every sampled support
  bool top_end_ok = false;
  bool ok() const;
  std::string to_text() const;
};

// Signature checks for the dense case: every sampled rational contributes a
// consecutive 3-block, every sampled gap a consecutive 2-block, plus a single
// support at each end.
DenseProfileReport dense_profile_check(const OrderTerm& t, const GapRegistry& reg,
                                       const std::vector<Pos>& points,
                                       const std::vector<std::string>& gap_names,
                                       std::size_t budget = 12);

}  // namespace uxl

#endif
