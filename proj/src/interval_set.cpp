#include "uxl/interval_set.hpp"

#include <algorithm>

#include "uxl/error.hpp"

namespace uxl {

namespace {

bool is_elem(const CompletionPos& p) { return p.kind() == CompletionPos::Kind::Elem; }

Bound normalize_bound(Bound b) {
  if (!is_elem(b.pos)) b.closed = false;  // nothing sits at gaps or boundaries
  return b;
}

// Sort key order for lower bounds: earlier start first (closed before open at
// the same element).
Ord lower_cmp(const OrderTerm& t, const Bound& a, const Bound& b) {
  Ord byPos = completion_compare_checked(t, a.pos, b.pos).ord;
  if (byPos != Ord::EQ) return byPos;
  if (a.closed == b.closed) return Ord::EQ;
  return a.closed ? Ord::LT : Ord::GT;
}

// Later reach first would be GT: closed upper bounds reach past open ones.
Ord upper_cmp(const OrderTerm& t, const Bound& a, const Bound& b) {
  Ord byPos = completion_compare_checked(t, a.pos, b.pos).ord;
  if (byPos != Ord::EQ) return byPos;
  if (a.closed == b.closed) return Ord::EQ;
  return a.closed ? Ord::GT : Ord::LT;
}

bool bound_eq(const Bound& a, const Bound& b) { return a.pos == b.pos && a.closed == b.closed; }

}  // namespace

IntervalSet IntervalSet::empty(const OrderTerm& t) { return IntervalSet(t); }

IntervalSet IntervalSet::all(const OrderTerm& t) {
  return interval(t, Bound{CompletionPos::bottom(), false}, Bound{CompletionPos::top(), false});
}

IntervalSet IntervalSet::singleton(const OrderTerm& t, const Pos& p) {
  validate_position(t, p);
  return interval(t, Bound{CompletionPos::elem(p), true}, Bound{CompletionPos::elem(p), true});
}

IntervalSet IntervalSet::interval(const OrderTerm& t, Bound lo, Bound hi) {
  IntervalSet s(t);
  s.ivs_.push_back(Interval{normalize_bound(std::move(lo)), normalize_bound(std::move(hi))});
  s.canonicalize();
  return s;
}

IntervalSet IntervalSet::from_intervals(const OrderTerm& t, std::vector<Interval> raw) {
  IntervalSet s(t);
  s.ivs_ = std::move(raw);
  s.canonicalize();
  return s;
}

IntervalSet IntervalSet::from_segment(const OrderTerm& t, SegRel rel, const CompletionPos& b) {
  validate_completion_pos(t, b);
  switch (rel) {
    case SegRel::LT:
      return interval(t, Bound{CompletionPos::bottom(), false}, Bound{b, false});
    case SegRel::LE:
      return interval(t, Bound{CompletionPos::bottom(), false}, Bound{b, is_elem(b)});
    case SegRel::GT:
      return interval(t, Bound{b, false}, Bound{CompletionPos::top(), false});
    case SegRel::GE:
      return interval(t, Bound{b, is_elem(b)}, Bound{CompletionPos::top(), false});
  }
  throw Error("from_segment: corrupt relation");
}

void IntervalSet::canonicalize() {
  std::vector<Interval> work = std::move(ivs_);
  ivs_.clear();
  std::vector<Interval> kept;
  for (auto& iv : work) {
    Bound lo = normalize_bound(iv.lo);
    Bound hi = normalize_bound(iv.hi);
    // Tighten open bounds to the neighbouring element where one exists; the
    // canonical form prefers closed element bounds.
    if (!lo.closed) {
      SideInfo above = above_info(term_, lo.pos);
      if (above.kind == SideInfo::Kind::Empty) continue;  // nothing to the right
      if (above.kind == SideInfo::Kind::Extreme)
        lo = Bound{CompletionPos::elem(*above.extreme), true};
    }
    if (!hi.closed) {
      SideInfo below = below_info(term_, hi.pos);
      if (below.kind == SideInfo::Kind::Empty) continue;
      if (below.kind == SideInfo::Kind::Extreme)
        hi = Bound{CompletionPos::elem(*below.extreme), true};
    }
    // Emptiness: some element must satisfy both bounds.
    bool nonempty = false;
    if (lo.closed) {
      Ord o = completion_compare_checked(term_, lo.pos, hi.pos).ord;
      nonempty = (o == Ord::LT) || (o == Ord::EQ && hi.closed);
    }
    if (!nonempty && hi.closed) {
      Ord o = completion_compare_checked(term_, lo.pos, hi.pos).ord;
      nonempty = o == Ord::LT;  // hi's element lies above the open start
    }
    if (!nonempty) nonempty = exists_between(term_, lo.pos, hi.pos);
    if (!nonempty) continue;
    kept.push_back(Interval{std::move(lo), std::move(hi)});
  }
  std::sort(kept.begin(), kept.end(), [&](const Interval& a, const Interval& b) {
    Ord o = lower_cmp(term_, a.lo, b.lo);
    if (o != Ord::EQ) return o == Ord::LT;
    return upper_cmp(term_, a.hi, b.hi) == Ord::LT;
  });
  for (auto& iv : kept) {
    if (ivs_.empty()) {
      ivs_.push_back(std::move(iv));
      continue;
    }
    Interval& prev = ivs_.back();
    Ord gap = completion_compare_checked(term_, prev.hi.pos, iv.lo.pos).ord;
    bool contiguous = false;
    if (gap == Ord::GT) {
      contiguous = true;
    } else if (gap == Ord::EQ) {
      contiguous = !is_elem(prev.hi.pos) || prev.hi.closed || iv.lo.closed;
    } else {
      contiguous = prev.hi.closed && iv.lo.closed &&
                   !exists_between(term_, prev.hi.pos, iv.lo.pos);
    }
    if (contiguous) {
      if (upper_cmp(term_, prev.hi, iv.hi) == Ord::LT) prev.hi = std::move(iv.hi);
    } else {
      ivs_.push_back(std::move(iv));
    }
  }
}

bool IntervalSet::contains(const Pos& p) const {
  validate_position(term_, p);
  CompletionPos x = CompletionPos::elem(p);
  for (const auto& iv : ivs_) {
    Ord lo = completion_compare_checked(term_, iv.lo.pos, x).ord;
    bool above_lo = lo == Ord::LT || (lo == Ord::EQ && iv.lo.closed);
    if (!above_lo) continue;
    Ord hi = completion_compare_checked(term_, x, iv.hi.pos).ord;
    if (hi == Ord::LT || (hi == Ord::EQ && iv.hi.closed)) return true;
  }
  return false;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out(term_);
  Bound cursor{CompletionPos::bottom(), false};
  for (const auto& iv : ivs_) {
    Bound up{iv.lo.pos, is_elem(iv.lo.pos) && !iv.lo.closed};
    out.ivs_.push_back(Interval{cursor, std::move(up)});
    cursor = Bound{iv.hi.pos, is_elem(iv.hi.pos) && !iv.hi.closed};
  }
  out.ivs_.push_back(Interval{std::move(cursor), Bound{CompletionPos::top(), false}});
  out.canonicalize();
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  if (term_ != other.term_) throw MixedTerms();
  IntervalSet out(term_);
  out.ivs_ = ivs_;
  out.ivs_.insert(out.ivs_.end(), other.ivs_.begin(), other.ivs_.end());
  out.canonicalize();
  return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  if (term_ != other.term_) throw MixedTerms();
  IntervalSet out(term_);
  for (const auto& a : ivs_) {
    for (const auto& b : other.ivs_) {
      const Bound& lo = lower_cmp(term_, a.lo, b.lo) == Ord::GT ? a.lo : b.lo;
      const Bound& hi = upper_cmp(term_, a.hi, b.hi) == Ord::LT ? a.hi : b.hi;
      out.ivs_.push_back(Interval{lo, hi});
    }
  }
  out.canonicalize();
  return out;
}

bool IntervalSet::operator==(const IntervalSet& other) const {
  if (term_ != other.term_ || ivs_.size() != other.ivs_.size()) return false;
  for (std::size_t i = 0; i < ivs_.size(); ++i)
    if (!bound_eq(ivs_[i].lo, other.ivs_[i].lo) || !bound_eq(ivs_[i].hi, other.ivs_[i].hi))
      return false;
  return true;
}

std::string IntervalSet::to_string() const {
  if (ivs_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < ivs_.size(); ++i) {
    if (i) out += " u ";
    const auto& iv = ivs_[i];
    out += iv.lo.closed ? "[" : "(";
    out += completion_to_string(term_, iv.lo.pos);
    out += ", ";
    out += completion_to_string(term_, iv.hi.pos);
    out += iv.hi.closed ? "]" : ")";
  }
  return out;
}

}  // namespace uxl
