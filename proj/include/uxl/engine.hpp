#ifndef UXL_ENGINE_HPP
#define UXL_ENGINE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uxl/error.hpp"
#include "uxl/order_term.hpp"
#include "uxl/rational.hpp"

namespace uxl {

enum class Ord { LT, EQ, GT };

// ---------------------------------------------------------------------------
// Element positions. Shape mirrors the term shape: Nat for Fin/Omega, Star(k)
// = k-th element from the top of OmegaStar, Int for Zeta, Rational for Eta,
// (part, sub) for Sum and (inner, outer) for Prod.
// ---------------------------------------------------------------------------
class Pos {
 public:
  enum class Kind { Nat, Star, Int, Rational, SumPart, ProdPair };

  static Pos nat(std::uint64_t k);
  static Pos star(std::uint64_t k);
  static Pos integer(std::int64_t k);
  static Pos rational(const Rat& q);
  static Pos sum_part(std::size_t part, Pos sub);
  static Pos prod_pair(Pos inner, Pos outer);

  Kind kind() const { return kind_; }
  std::uint64_t nat_index() const { return nat_; }
  std::uint64_t star_index() const { return nat_; }
  std::int64_t int_value() const { return int_; }
  const Rat& rat_value() const { return rat_; }
  std::size_t part_index() const { return part_; }
  const Pos& sub() const { return *sub_; }
  const Pos& inner() const { return *sub_; }
  const Pos& outer() const { return *outer_; }

  bool operator==(const Pos& other) const;
  bool operator!=(const Pos& other) const { return !(*this == other); }

 private:
  Pos() = default;
  Kind kind_ = Kind::Nat;
  std::uint64_t nat_ = 0;
  std::int64_t int_ = 0;
  Rat rat_{0};
  std::size_t part_ = 0;
  std::shared_ptr<const Pos> sub_;
  std::shared_ptr<const Pos> outer_;
};

// Strict total order on same-shape positions; Prod compares outer first.
Ord pos_compare(const Pos& a, const Pos& b);

void validate_position(const OrderTerm& t, const Pos& p);  // throws InvalidPosition

std::string pos_to_string(const Pos& p);
// Shape-directed: "3", "3*", "-2", "1/2", "1.3" (sum part 1, sub 3), "(a,b)".
Pos parse_position(const OrderTerm& t, const std::string& text);

// ---------------------------------------------------------------------------
// Registered gaps of Eta: a named decidable cut of Q.
// ---------------------------------------------------------------------------
struct GapSpec {
  std::string name;
  RatCutPred below;  // true iff q lies under the gap
};

class GapRegistry {
 public:
  // sqrt2, sqrt3, e_minus_2
  static GapRegistry standard();

  // Validates that the predicate has witnesses on both sides within the probe
  // budget and spot-checks monotonicity; throws ConfigError otherwise.
  void register_gap(const std::string& name, RatCutPred below);

  std::shared_ptr<const GapSpec> find(const std::string& name) const;
  std::vector<std::shared_ptr<const GapSpec>> all() const;

 private:
  std::map<std::string, std::shared_ptr<const GapSpec>> gaps_;
};

// ---------------------------------------------------------------------------
// Cuts in canonical form. A cut is the initial segment I (J = X \ I implied).
//   Idx(k)      Fin/Omega: I = first k elements
//   StarIdx(k)  OmegaStar: J = top k elements
//   IntIdx(k)   Zeta: I = {x < k}
//   RatIdx(q,i) Eta: I = {x < q} or, with incl, {x <= q}
//   Reg(spec)   Eta: registered gap
//   BottomAll / TopAll   I = empty / I = X (leaf terms without finite ends)
//   SumAt(i, sub)        canonical unless sub is part i's bottom with i > 0
//   OuterAt(cut)         Prod: I = inner x I_out
//   InnerAt(q, cut)      Prod: I = copies below q plus I_cut inside copy q;
//                        canonical only for proper inner cuts
// ---------------------------------------------------------------------------
class Cut {
 public:
  enum class Kind { Idx, StarIdx, IntIdx, RatIdx, Reg, BottomAll, TopAll, SumAt, OuterAt, InnerAt };

  static Cut idx(std::uint64_t k);
  static Cut star_idx(std::uint64_t k);
  static Cut int_idx(std::int64_t k);
  static Cut rat_idx(const Rat& q, bool inclusive);
  static Cut reg(std::shared_ptr<const GapSpec> spec);
  static Cut bottom_all();
  static Cut top_all();
  static Cut sum_at(std::size_t part, Cut sub);
  static Cut outer_at(Cut out);
  static Cut inner_at(Pos at, Cut sub);

  Kind kind() const { return kind_; }
  std::uint64_t index() const { return nat_; }
  std::int64_t int_index() const { return int_; }
  const Rat& rat() const { return rat_; }
  bool inclusive() const { return incl_; }
  const GapSpec& gap_spec() const { return *spec_; }
  const std::shared_ptr<const GapSpec>& gap_spec_ptr() const { return spec_; }
  std::size_t part_index() const { return part_; }
  const Cut& sub() const { return *sub_; }
  const Pos& at() const { return *at_; }

  // Structural equality; Reg compares by gap name.
  bool operator==(const Cut& other) const;
  bool operator!=(const Cut& other) const { return !(*this == other); }

 private:
  Cut() = default;
  Kind kind_ = Kind::BottomAll;
  std::uint64_t nat_ = 0;
  std::int64_t int_ = 0;
  Rat rat_{0};
  bool incl_ = false;
  std::shared_ptr<const GapSpec> spec_;
  std::size_t part_ = 0;
  std::shared_ptr<const Cut> sub_;
  std::shared_ptr<const Pos> at_;
};

Cut bottom_cut(const OrderTerm& t);
Cut top_cut(const OrderTerm& t);
bool is_bottom_cut(const OrderTerm& t, const Cut& c);
bool is_top_cut(const OrderTerm& t, const Cut& c);

// Canonical cuts at an element: I = X_{<p} resp. I = X_{<=p}.
Cut cut_before(const OrderTerm& t, const Pos& p);
Cut cut_after(const OrderTerm& t, const Pos& p);

// Re-establishes the canonical-form invariants after raw construction.
Cut canonicalize_cut(const OrderTerm& t, Cut c);

// true iff p lies in the initial segment I of c.
bool cut_below(const OrderTerm& t, const Cut& c, const Pos& p);

// One side of a cut: empty, has an extreme element (greatest of I / least of
// J), or is nonempty without one.
struct SideInfo {
  enum class Kind { Empty, Extreme, Open } kind = Kind::Empty;
  std::optional<Pos> extreme;  // set iff kind == Extreme
  bool empty() const { return kind == Kind::Empty; }
  bool open() const { return kind == Kind::Open; }
};

SideInfo cut_left_info(const OrderTerm& t, const Cut& c);   // about I
SideInfo cut_right_info(const OrderTerm& t, const Cut& c);  // about J

bool cut_is_gap(const OrderTerm& t, const Cut& c);

struct CmpResult {
  Ord ord = Ord::EQ;
  // false when two registered gaps could not be separated within the probe
  // budget and were ordered by name instead.
  bool verified = true;
};

CmpResult cut_compare_checked(const OrderTerm& t, const Cut& a, const Cut& b);
Ord cut_compare(const OrderTerm& t, const Cut& a, const Cut& b);

// ---------------------------------------------------------------------------
// Positions in the Dedekind completion extended with the two end boundaries.
// GapAt wraps a cut that is a proper gap.
// ---------------------------------------------------------------------------
class CompletionPos {
 public:
  enum class Kind { Bottom, Top, Elem, GapAt };

  static CompletionPos bottom();
  static CompletionPos top();
  static CompletionPos elem(Pos p);
  static CompletionPos gap_at(Cut c);

  Kind kind() const { return kind_; }
  const Pos& pos() const { return *pos_; }
  const Cut& cut() const { return *cut_; }
  bool is_elem() const { return kind_ == Kind::Elem; }

  bool operator==(const CompletionPos& other) const;
  bool operator!=(const CompletionPos& other) const { return !(*this == other); }

 private:
  CompletionPos() = default;
  Kind kind_ = Kind::Bottom;
  std::shared_ptr<const Pos> pos_;
  std::shared_ptr<const Cut> cut_;
};

void validate_completion_pos(const OrderTerm& t, const CompletionPos& c);

// sup I as a completion position (requires I nonempty without greatest), and
// inf J dually. For gap cuts both agree on GapAt(c).
CompletionPos cut_sup_pos(const OrderTerm& t, const Cut& c);
CompletionPos cut_inf_pos(const OrderTerm& t, const Cut& c);

CmpResult completion_compare_checked(const OrderTerm& t, const CompletionPos& a,
                                     const CompletionPos& b);
Ord position_compare(const OrderTerm& t, const CompletionPos& a, const CompletionPos& b);

// {x : x > c} resp. {x : x < c}; Extreme means least resp. greatest.
SideInfo above_info(const OrderTerm& t, const CompletionPos& c);
SideInfo below_info(const OrderTerm& t, const CompletionPos& c);

// Some element strictly between lo and hi (pre: lo < hi). Structural, no
// unbounded search.
bool exists_between(const OrderTerm& t, const CompletionPos& lo, const CompletionPos& hi);

// Constructive sibling of exists_between; Stern-Brocot descent decides the
// dense cases.
std::optional<Pos> witness_between(const OrderTerm& t, const CompletionPos& lo,
                                   const CompletionPos& hi);

struct PointClass {
  bool is_min = false;
  bool is_max = false;
  bool is_left_limit = false;   // X_{<p} nonempty with no greatest
  bool is_right_limit = false;  // X_{>p} nonempty with no least
};

PointClass classify_position(const OrderTerm& t, const Pos& p);

std::optional<Pos> term_least(const OrderTerm& t);
std::optional<Pos> term_greatest(const OrderTerm& t);
// Some canonical element when the order is nonempty.
std::optional<Pos> any_element(const OrderTerm& t);
std::optional<Pos> successor(const OrderTerm& t, const Pos& p);
std::optional<Pos> predecessor(const OrderTerm& t, const Pos& p);

enum class Direction { Front, Back };

// Strictly monotone ladder of n positions from the chosen end; throws
// NoCanonicalLadder when the end is not reachable or the ladder runs short.
std::vector<Pos> enumerate_elements(const OrderTerm& t, Direction dir, std::size_t n);

// Deterministic sorted sample used by support enumeration and the suites.
// Leaf ladders have length `budget`; Eta uses the dyadic ladder; Prod factors
// are sampled with min(budget, 6) each.
std::vector<Pos> sample_elements(const OrderTerm& t, std::size_t budget);

// All structural proper gaps discoverable at the given budget: Sum part
// boundaries that are gaps, Prod copy boundaries at sampled outer positions,
// and their recursive lifts. Registered gaps are not included.
std::vector<Cut> structural_gaps(const OrderTerm& t, std::size_t budget);

// Paths of Eta leaves reachable through Sum parts only (no Prod ambiguity);
// used to resolve "gap:<name>" literals.
std::optional<std::vector<std::size_t>> unique_eta_sum_path(const OrderTerm& t);

// Wraps an Eta-leaf cut along a Sum path into a cut of the whole term.
Cut lift_cut_along_sum_path(const OrderTerm& t, const std::vector<std::size_t>& path, Cut leaf);

std::string completion_to_string(const OrderTerm& t, const CompletionPos& c);
// "elem:<pos>", "bottom", "top", or a gap literal: "gap:<name>",
// "structgap:<i>|<j>", "copygap:<outerpos>", "part:<i>:<gap>", "in:<pos>:<gap>",
// "outercut:<cut>".
CompletionPos parse_completion_pos(const OrderTerm& t, const GapRegistry& reg,
                                   const std::string& text);

// "bottom" | "top" | "before:<pos>" | "after:<pos>" | "at:<gap literal>".
std::string cut_to_string(const OrderTerm& t, const Cut& c);
Cut parse_cut_literal(const OrderTerm& t, const GapRegistry& reg, const std::string& text);

}  // namespace uxl

#endif
