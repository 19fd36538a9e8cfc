#ifndef UXL_SKEW_LATTICE_HPP
#define UXL_SKEW_LATTICE_HPP

#include <functional>
#include <string>
#include <vector>

#include "uxl/relations.hpp"

namespace uxl {

// Closed form of the extended operations: min~(u,v) = u iff u <=~ v or u = v,
// else v (and then u >=~ v holds); max~ mirrors it. Always quasi-trivial.
UltraToken ext_min(const OrderTerm& t, const UltraToken& u, const UltraToken& v);
UltraToken ext_max(const OrderTerm& t, const UltraToken& u, const UltraToken& v);

// The band congruence xyx=x and yxy=y, evaluated on min~ directly; provably
// equal to equiv.
bool d_related(const OrderTerm& t, const UltraToken& u, const UltraToken& v);

enum class ClassKind { Singleton, MinLeftZero, MinRightZero };

ClassKind equiv_class_kind(const UltraToken& u);

enum class LawStatus { Pass, Fail, Vacuous };

struct LawOutcome {
  std::string law;
  LawStatus status = LawStatus::Pass;
  std::size_t instances = 0;
  std::vector<std::string> counterexamples;  // canonically sorted
};

struct LawReport {
  std::size_t universe_size = 0;
  std::vector<LawOutcome> laws;
  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

using BinaryOp = std::function<UltraToken(const OrderTerm&, const UltraToken&, const UltraToken&)>;

// Exhaustive law check over the universe: the 12 identity laws (associativity,
// idempotency, absorption x4, distributivity x4), quasi-triviality,
// min/max duality, the commutativity-failure-set characterization
// (noncommuting pairs = distinct tokens with equal supports), D = equiv,
// rectangular classes (left-zero/right-zero per support side), and the
// quotient isomorphism onto the support order. Operations are pluggable so
// mutants can be probed; defaults are the closed forms.
LawReport check_axioms(const OrderTerm& t, const std::vector<UltraToken>& universe,
                       const BinaryOp& min_op = ext_min, const BinaryOp& max_op = ext_max);

struct QuotientClass {
  Support support;
  std::vector<UltraToken> members;
  ClassKind kind = ClassKind::Singleton;
};

struct QuotientLattice {
  std::vector<QuotientClass> classes;  // sorted by support order
  // class-index tables for the induced operations
  std::vector<std::vector<std::size_t>> min_table;
  std::vector<std::vector<std::size_t>> max_table;
  bool isomorphic_to_support_lattice = false;
  std::string to_text() const;
};

// Partitions by equiv, verifies the induced operations are well defined
// (throws CongruenceViolation otherwise) and compares the class tables with
// min/max under the support order.
QuotientLattice quotient_lattice(const OrderTerm& t, const std::vector<UltraToken>& universe,
                                 const BinaryOp& min_op = ext_min, const BinaryOp& max_op = ext_max);

}  // namespace uxl

#endif
