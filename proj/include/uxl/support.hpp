#ifndef UXL_SUPPORT_HPP
#define UXL_SUPPORT_HPP

#include <string>
#include <vector>

#include "uxl/engine.hpp"
#include "uxl/interval_set.hpp"

namespace uxl {

// Support of an ultrafilter: a point for principal ones, otherwise the
// unbounded half of a cut on which the ultrafilter concentrates. LeftHalf(c)
// requires I nonempty with no greatest; RightHalf(c) requires J nonempty with
// no least.
class Support {
 public:
  enum class Kind { Point, LeftHalf, RightHalf };

  static Support point(Pos p);
  static Support left_half(Cut c);
  static Support right_half(Cut c);

  Kind kind() const { return kind_; }
  bool is_point() const { return kind_ == Kind::Point; }
  const Pos& pos() const { return *pos_; }
  const Cut& cut() const { return *cut_; }

  bool operator==(const Support& other) const;
  bool operator!=(const Support& other) const { return !(*this == other); }

 private:
  Support() = default;
  Kind kind_ = Kind::Point;
  std::shared_ptr<const Pos> pos_;
  std::shared_ptr<const Cut> cut_;
};

// Validated construction from parts or from a literal
// ("pt:<pos>" | "L:<cut>" | "R:<cut>" with cut ::= "bottom" | "top" |
// "before:<pos>" | "after:<pos>" | "at:gap:<name>" | "at:structgap:<i>|<j>" |
// "at:copygap:<outerpos>").
Support make_support(const OrderTerm& t, Support raw);
Support make_support(const OrderTerm& t, const GapRegistry& reg, const std::string& literal);

std::string support_to_string(const OrderTerm& t, const Support& s);

// Formal ultrafilter: support plus identity label. A point support admits
// exactly one token (empty canonical label); half-cut supports admit any
// number of labeled tokens.
struct UltraToken {
  Support support;
  std::string label;

  bool operator==(const UltraToken& other) const {
    return support == other.support && label == other.label;
  }
  bool operator!=(const UltraToken& other) const { return !(*this == other); }
};

UltraToken make_token(const OrderTerm& t, Support s, std::string label = "");
// "<support>#<label>"; labels are mandatory for half-cut supports here and
// rejected for principal ones.
UltraToken parse_token(const OrderTerm& t, const GapRegistry& reg, const std::string& literal);
std::string token_to_string(const OrderTerm& t, const UltraToken& u);

// Decides S in u from the support definition alone: point containment for
// principal tokens; for LeftHalf, some interval of S covers a whole final
// segment of I (witnessed against the cut boundary); dually for RightHalf.
// Never consults the support order.
bool interval_membership(const OrderTerm& t, const IntervalSet& S, const UltraToken& u);

// {x : {y : x rel y} in v} as an interval set, read off the three-case support
// shape by the same covering analysis (reproduces the twelve Table-style
// cells).
IntervalSet transform_under_relation(const OrderTerm& t, SegRel rel, const UltraToken& v);

// Deterministic support battery: points at sampled elements, half-cuts at
// sampled limit points, both halves of every discovered structural gap and of
// each registered gap, plus the valid end halves. Sorted by the support order.
std::vector<Support> enumerate_supports(const OrderTerm& t, const GapRegistry& reg,
                                        std::size_t budget);

}  // namespace uxl

#endif
