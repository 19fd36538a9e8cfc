#ifndef UXL_INTERVAL_SET_HPP
#define UXL_INTERVAL_SET_HPP

#include <string>
#include <vector>

#include "uxl/engine.hpp"

namespace uxl {

enum class SegRel { LT, LE, GT, GE };

// One bound of an interval. closed is meaningful only at element positions;
// gap/bottom/top bounds canonicalize to open.
struct Bound {
  CompletionPos pos;
  bool closed = false;
};

struct Interval {
  Bound lo, hi;
};

// Finite union of disjoint, non-adjacent, nonempty intervals over one term,
// kept in a unique canonical form: bounds tightened to closed element bounds
// where a successor/predecessor exists, touching intervals merged, empty ones
// dropped. The definable-subset algebra of the ground order.
class IntervalSet {
 public:
  static IntervalSet empty(const OrderTerm& t);
  static IntervalSet all(const OrderTerm& t);
  static IntervalSet singleton(const OrderTerm& t, const Pos& p);
  // X_{<b}, X_{<=b}, X_{>b}, X_{>=b}; at gap/boundary positions the closed
  // variants coincide with the open ones.
  static IntervalSet from_segment(const OrderTerm& t, SegRel rel, const CompletionPos& b);
  static IntervalSet interval(const OrderTerm& t, Bound lo, Bound hi);
  // Canonicalizes a batch of possibly overlapping or empty raw intervals.
  static IntervalSet from_intervals(const OrderTerm& t, std::vector<Interval> raw);

  const OrderTerm& term() const { return term_; }
  const std::vector<Interval>& intervals() const { return ivs_; }
  bool is_empty() const { return ivs_.empty(); }

  bool contains(const Pos& p) const;

  IntervalSet complement() const;
  IntervalSet unite(const IntervalSet& other) const;      // throws MixedTerms
  IntervalSet intersect(const IntervalSet& other) const;  // throws MixedTerms

  bool operator==(const IntervalSet& other) const;
  bool operator!=(const IntervalSet& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  explicit IntervalSet(OrderTerm t) : term_(std::move(t)) {}
  void canonicalize();

  OrderTerm term_;
  std::vector<Interval> ivs_;
};

}  // namespace uxl

#endif
