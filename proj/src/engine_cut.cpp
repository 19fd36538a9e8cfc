#include "uxl/engine.hpp"
#include "uxl/error.hpp"

namespace uxl {

Cut Cut::idx(std::uint64_t k) {
  Cut c;
  c.kind_ = Kind::Idx;
  c.nat_ = k;
  return c;
}

Cut Cut::star_idx(std::uint64_t k) {
  Cut c;
  c.kind_ = Kind::StarIdx;
  c.nat_ = k;
  return c;
}

Cut Cut::int_idx(std::int64_t k) {
  Cut c;
  c.kind_ = Kind::IntIdx;
  c.int_ = k;
  return c;
}

Cut Cut::rat_idx(const Rat& q, bool inclusive) {
  Cut c;
  c.kind_ = Kind::RatIdx;
  c.rat_ = q;
  c.incl_ = inclusive;
  return c;
}

Cut Cut::reg(std::shared_ptr<const GapSpec> spec) {
  Cut c;
  c.kind_ = Kind::Reg;
  c.spec_ = std::move(spec);
  return c;
}

Cut Cut::bottom_all() {
  Cut c;
  c.kind_ = Kind::BottomAll;
  return c;
}

Cut Cut::top_all() {
  Cut c;
  c.kind_ = Kind::TopAll;
  return c;
}

Cut Cut::sum_at(std::size_t part, Cut sub) {
  Cut c;
  c.kind_ = Kind::SumAt;
  c.part_ = part;
  c.sub_ = std::make_shared<const Cut>(std::move(sub));
  return c;
}

Cut Cut::outer_at(Cut out) {
  Cut c;
  c.kind_ = Kind::OuterAt;
  c.sub_ = std::make_shared<const Cut>(std::move(out));
  return c;
}

Cut Cut::inner_at(Pos at, Cut sub) {
  Cut c;
  c.kind_ = Kind::InnerAt;
  c.at_ = std::make_shared<const Pos>(std::move(at));
  c.sub_ = std::make_shared<const Cut>(std::move(sub));
  return c;
}

bool Cut::operator==(const Cut& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Idx:
    case Kind::StarIdx:
      return nat_ == other.nat_;
    case Kind::IntIdx:
      return int_ == other.int_;
    case Kind::RatIdx:
      return rat_ == other.rat_ && incl_ == other.incl_;
    case Kind::Reg:
      return spec_->name == other.spec_->name;
    case Kind::BottomAll:
    case Kind::TopAll:
      return true;
    case Kind::SumAt:
      return part_ == other.part_ && *sub_ == *other.sub_;
    case Kind::OuterAt:
      return *sub_ == *other.sub_;
    case Kind::InnerAt:
      return *at_ == *other.at_ && *sub_ == *other.sub_;
  }
  return false;
}

// --------------------------------------------------------------------------
// Canonical bottom/top and canonicalization
// --------------------------------------------------------------------------

Cut bottom_cut(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
      return Cut::idx(0);
    case OrderTerm::Kind::OmegaStar:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return Cut::bottom_all();
    case OrderTerm::Kind::Sum:
      return Cut::sum_at(0, bottom_cut(t.part(0)));
    case OrderTerm::Kind::Prod:
      return Cut::outer_at(bottom_cut(t.outer()));
  }
  throw Error("bottom_cut: corrupt term");
}

Cut top_cut(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      return Cut::idx(t.fin_size());
    case OrderTerm::Kind::Omega:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return Cut::top_all();
    case OrderTerm::Kind::OmegaStar:
      return Cut::star_idx(0);
    case OrderTerm::Kind::Sum:
      return Cut::sum_at(t.arity() - 1, top_cut(t.part(t.arity() - 1)));
    case OrderTerm::Kind::Prod:
      return Cut::outer_at(top_cut(t.outer()));
  }
  throw Error("top_cut: corrupt term");
}

bool is_bottom_cut(const OrderTerm& t, const Cut& c) { return c == bottom_cut(t); }
bool is_top_cut(const OrderTerm& t, const Cut& c) { return c == top_cut(t); }

Cut canonicalize_cut(const OrderTerm& t, Cut c) {
  switch (c.kind()) {
    case Cut::Kind::SumAt: {
      std::size_t i = c.part_index();
      if (i >= t.arity()) throw InvalidPosition("sum cut part index out of range");
      Cut sub = canonicalize_cut(t.part(i), c.sub());
      // The boundary below part i is the boundary above part i-1.
      while (i > 0 && is_bottom_cut(t.part(i), sub)) {
        --i;
        sub = top_cut(t.part(i));
      }
      return Cut::sum_at(i, std::move(sub));
    }
    case Cut::Kind::OuterAt:
      return Cut::outer_at(canonicalize_cut(t.outer(), c.sub()));
    case Cut::Kind::InnerAt: {
      Cut sub = canonicalize_cut(t.inner(), c.sub());
      if (is_bottom_cut(t.inner(), sub))
        return Cut::outer_at(cut_before(t.outer(), c.at()));
      if (is_top_cut(t.inner(), sub))
        return Cut::outer_at(cut_after(t.outer(), c.at()));
      return Cut::inner_at(c.at(), std::move(sub));
    }
    default:
      return c;
  }
}

Cut cut_before(const OrderTerm& t, const Pos& p) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
      return Cut::idx(p.nat_index());
    case OrderTerm::Kind::OmegaStar:
      return Cut::star_idx(p.star_index() + 1);
    case OrderTerm::Kind::Zeta:
      return Cut::int_idx(p.int_value());
    case OrderTerm::Kind::Eta:
      return Cut::rat_idx(p.rat_value(), false);
    case OrderTerm::Kind::Sum:
      return canonicalize_cut(
          t, Cut::sum_at(p.part_index(), cut_before(t.part(p.part_index()), p.sub())));
    case OrderTerm::Kind::Prod:
      return canonicalize_cut(t, Cut::inner_at(p.outer(), cut_before(t.inner(), p.inner())));
  }
  throw Error("cut_before: corrupt term");
}

Cut cut_after(const OrderTerm& t, const Pos& p) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
      return Cut::idx(p.nat_index() + 1);
    case OrderTerm::Kind::OmegaStar:
      return Cut::star_idx(p.star_index());
    case OrderTerm::Kind::Zeta:
      return Cut::int_idx(p.int_value() + 1);
    case OrderTerm::Kind::Eta:
      return Cut::rat_idx(p.rat_value(), true);
    case OrderTerm::Kind::Sum:
      return canonicalize_cut(
          t, Cut::sum_at(p.part_index(), cut_after(t.part(p.part_index()), p.sub())));
    case OrderTerm::Kind::Prod:
      return canonicalize_cut(t, Cut::inner_at(p.outer(), cut_after(t.inner(), p.inner())));
  }
  throw Error("cut_after: corrupt term");
}

// --------------------------------------------------------------------------
// Membership and side information
// --------------------------------------------------------------------------

bool cut_below(const OrderTerm& t, const Cut& c, const Pos& p) {
  switch (c.kind()) {
    case Cut::Kind::Idx:
      return p.nat_index() < c.index();
    case Cut::Kind::StarIdx:
      return p.star_index() >= c.index();  // J = top k elements
    case Cut::Kind::IntIdx:
      return p.int_value() < c.int_index();
    case Cut::Kind::RatIdx:
      return c.inclusive() ? p.rat_value() <= c.rat() : p.rat_value() < c.rat();
    case Cut::Kind::Reg:
      return c.gap_spec().below(p.rat_value());
    case Cut::Kind::BottomAll:
      return false;
    case Cut::Kind::TopAll:
      return true;
    case Cut::Kind::SumAt:
      if (p.part_index() != c.part_index()) return p.part_index() < c.part_index();
      return cut_below(t.part(c.part_index()), c.sub(), p.sub());
    case Cut::Kind::OuterAt:
      return cut_below(t.outer(), c.sub(), p.outer());
    case Cut::Kind::InnerAt: {
      Ord o = pos_compare(p.outer(), c.at());
      if (o != Ord::EQ) return o == Ord::LT;
      return cut_below(t.inner(), c.sub(), p.inner());
    }
  }
  throw Error("cut_below: corrupt cut");
}

namespace {

SideInfo info_empty() { return SideInfo{SideInfo::Kind::Empty, std::nullopt}; }
SideInfo info_open() { return SideInfo{SideInfo::Kind::Open, std::nullopt}; }
SideInfo info_extreme(Pos p) { return SideInfo{SideInfo::Kind::Extreme, std::move(p)}; }

SideInfo lift_sum(SideInfo s, std::size_t part) {
  if (s.kind == SideInfo::Kind::Extreme)
    return info_extreme(Pos::sum_part(part, *std::move(s.extreme)));
  return s;
}

SideInfo lift_prod(SideInfo s, const Pos& outer) {
  if (s.kind == SideInfo::Kind::Extreme)
    return info_extreme(Pos::prod_pair(*std::move(s.extreme), outer));
  return s;
}

}  // namespace

std::optional<Pos> term_least(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      if (t.fin_size() == 0) return std::nullopt;
      return Pos::nat(0);
    case OrderTerm::Kind::Omega:
      return Pos::nat(0);
    case OrderTerm::Kind::OmegaStar:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return std::nullopt;
    case OrderTerm::Kind::Sum: {
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (t.part(i).is_empty()) continue;
        auto sub = term_least(t.part(i));
        if (!sub) return std::nullopt;
        return Pos::sum_part(i, *std::move(sub));
      }
      return std::nullopt;
    }
    case OrderTerm::Kind::Prod: {
      auto in = term_least(t.inner());
      auto out = term_least(t.outer());
      if (!in || !out) return std::nullopt;
      return Pos::prod_pair(*std::move(in), *std::move(out));
    }
  }
  return std::nullopt;
}

std::optional<Pos> term_greatest(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      if (t.fin_size() == 0) return std::nullopt;
      return Pos::nat(t.fin_size() - 1);
    case OrderTerm::Kind::OmegaStar:
      return Pos::star(0);
    case OrderTerm::Kind::Omega:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return std::nullopt;
    case OrderTerm::Kind::Sum: {
      for (std::size_t i = t.arity(); i-- > 0;) {
        if (t.part(i).is_empty()) continue;
        auto sub = term_greatest(t.part(i));
        if (!sub) return std::nullopt;
        return Pos::sum_part(i, *std::move(sub));
      }
      return std::nullopt;
    }
    case OrderTerm::Kind::Prod: {
      auto in = term_greatest(t.inner());
      auto out = term_greatest(t.outer());
      if (!in || !out) return std::nullopt;
      return Pos::prod_pair(*std::move(in), *std::move(out));
    }
  }
  return std::nullopt;
}

SideInfo cut_left_info(const OrderTerm& t, const Cut& c) {
  switch (c.kind()) {
    case Cut::Kind::Idx:
      return c.index() == 0 ? info_empty() : info_extreme(Pos::nat(c.index() - 1));
    case Cut::Kind::StarIdx:
      return info_extreme(Pos::star(c.index()));
    case Cut::Kind::IntIdx:
      return info_extreme(Pos::integer(c.int_index() - 1));
    case Cut::Kind::RatIdx:
      return c.inclusive() ? info_extreme(Pos::rational(c.rat())) : info_open();
    case Cut::Kind::Reg:
      return info_open();
    case Cut::Kind::BottomAll:
      return info_empty();
    case Cut::Kind::TopAll: {
      auto g = term_greatest(t);
      return g ? info_extreme(*std::move(g)) : info_open();
    }
    case Cut::Kind::SumAt: {
      std::size_t i = c.part_index();
      SideInfo sub = cut_left_info(t.part(i), c.sub());
      if (sub.kind != SideInfo::Kind::Empty) return lift_sum(std::move(sub), i);
      // I reaches exactly up to the end of part i-1.
      for (std::size_t j = i; j-- > 0;) {
        if (t.part(j).is_empty()) continue;
        auto g = term_greatest(t.part(j));
        return g ? info_extreme(Pos::sum_part(j, *std::move(g))) : info_open();
      }
      return info_empty();
    }
    case Cut::Kind::OuterAt: {
      SideInfo out = cut_left_info(t.outer(), c.sub());
      if (out.kind == SideInfo::Kind::Empty) return info_empty();
      if (out.kind == SideInfo::Kind::Open) return info_open();
      auto g = term_greatest(t.inner());
      return g ? info_extreme(Pos::prod_pair(*std::move(g), *out.extreme)) : info_open();
    }
    case Cut::Kind::InnerAt: {
      SideInfo sub = cut_left_info(t.inner(), c.sub());
      if (sub.kind == SideInfo::Kind::Empty)
        throw Error("cut_left_info: non-canonical InnerAt cut");
      return lift_prod(std::move(sub), c.at());
    }
  }
  throw Error("cut_left_info: corrupt cut");
}

SideInfo cut_right_info(const OrderTerm& t, const Cut& c) {
  switch (c.kind()) {
    case Cut::Kind::Idx:
      if (t.kind() == OrderTerm::Kind::Fin && c.index() >= t.fin_size()) return info_empty();
      return info_extreme(Pos::nat(c.index()));
    case Cut::Kind::StarIdx:
      return c.index() == 0 ? info_empty() : info_extreme(Pos::star(c.index() - 1));
    case Cut::Kind::IntIdx:
      return info_extreme(Pos::integer(c.int_index()));
    case Cut::Kind::RatIdx:
      return c.inclusive() ? info_open() : info_extreme(Pos::rational(c.rat()));
    case Cut::Kind::Reg:
      return info_open();
    case Cut::Kind::TopAll:
      return info_empty();
    case Cut::Kind::BottomAll: {
      auto l = term_least(t);
      return l ? info_extreme(*std::move(l)) : info_open();
    }
    case Cut::Kind::SumAt: {
      std::size_t i = c.part_index();
      SideInfo sub = cut_right_info(t.part(i), c.sub());
      if (sub.kind != SideInfo::Kind::Empty) return lift_sum(std::move(sub), i);
      for (std::size_t j = i + 1; j < t.arity(); ++j) {
        if (t.part(j).is_empty()) continue;
        auto l = term_least(t.part(j));
        return l ? info_extreme(Pos::sum_part(j, *std::move(l))) : info_open();
      }
      return info_empty();
    }
    case Cut::Kind::OuterAt: {
      SideInfo out = cut_right_info(t.outer(), c.sub());
      if (out.kind == SideInfo::Kind::Empty) return info_empty();
      if (out.kind == SideInfo::Kind::Open) return info_open();
      auto l = term_least(t.inner());
      return l ? info_extreme(Pos::prod_pair(*std::move(l), *out.extreme)) : info_open();
    }
    case Cut::Kind::InnerAt: {
      SideInfo sub = cut_right_info(t.inner(), c.sub());
      if (sub.kind == SideInfo::Kind::Empty)
        throw Error("cut_right_info: non-canonical InnerAt cut");
      return lift_prod(std::move(sub), c.at());
    }
  }
  throw Error("cut_right_info: corrupt cut");
}

bool cut_is_gap(const OrderTerm& t, const Cut& c) {
  return cut_left_info(t, c).open() && cut_right_info(t, c).open();
}

// --------------------------------------------------------------------------
// Cut comparison
// --------------------------------------------------------------------------

namespace {

CmpResult cmp_result(Ord o, bool verified = true) { return CmpResult{o, verified}; }

template <typename T>
Ord ord_of(const T& a, const T& b) {
  if (a < b) return Ord::LT;
  if (b < a) return Ord::GT;
  return Ord::EQ;
}

// Separating rational between two registered gaps, searched along the
// Stern-Brocot tree. Returns {LT/GT, true} on separation, {name order, false}
// once the probe budget runs out.
CmpResult compare_reg_gaps(const GapSpec& a, const GapSpec& b) {
  if (a.name == b.name) return cmp_result(Ord::EQ);
  auto differs = stern_brocot_between(
      [&](const Rat& q) { return a.below(q) == b.below(q) && a.below(q); },
      [&](const Rat& q) { return a.below(q) == b.below(q) && !a.below(q); });
  if (differs) {
    bool a_below = a.below(*differs);  // q in I_b \ I_a means a's cut is lower
    return cmp_result(a_below ? Ord::GT : Ord::LT);
  }
  return cmp_result(ord_of(a.name, b.name), false);
}

}  // namespace

CmpResult cut_compare_checked(const OrderTerm& t, const Cut& a, const Cut& b) {
  // Bottom/top sentinels appear in any shape.
  if (a.kind() == Cut::Kind::BottomAll || b.kind() == Cut::Kind::BottomAll) {
    if (a.kind() == b.kind()) return cmp_result(Ord::EQ);
    if (a.kind() == Cut::Kind::BottomAll)
      return cmp_result(is_bottom_cut(t, b) ? Ord::EQ : Ord::LT);
    return cmp_result(is_bottom_cut(t, a) ? Ord::EQ : Ord::GT);
  }
  if (a.kind() == Cut::Kind::TopAll || b.kind() == Cut::Kind::TopAll) {
    if (a.kind() == b.kind()) return cmp_result(Ord::EQ);
    if (a.kind() == Cut::Kind::TopAll) return cmp_result(is_top_cut(t, b) ? Ord::EQ : Ord::GT);
    return cmp_result(is_top_cut(t, a) ? Ord::EQ : Ord::LT);
  }
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
      return cmp_result(ord_of(a.index(), b.index()));
    case OrderTerm::Kind::OmegaStar:
      return cmp_result(ord_of(b.index(), a.index()));
    case OrderTerm::Kind::Zeta:
      return cmp_result(ord_of(a.int_index(), b.int_index()));
    case OrderTerm::Kind::Eta: {
      if (a.kind() == Cut::Kind::RatIdx && b.kind() == Cut::Kind::RatIdx) {
        Ord byq = ord_of(a.rat(), b.rat());
        if (byq != Ord::EQ) return cmp_result(byq);
        if (a.inclusive() == b.inclusive()) return cmp_result(Ord::EQ);
        return cmp_result(a.inclusive() ? Ord::GT : Ord::LT);
      }
      if (a.kind() == Cut::Kind::Reg && b.kind() == Cut::Kind::RatIdx)
        return cmp_result(a.gap_spec().below(b.rat()) ? Ord::GT : Ord::LT);
      if (a.kind() == Cut::Kind::RatIdx && b.kind() == Cut::Kind::Reg)
        return cmp_result(b.gap_spec().below(a.rat()) ? Ord::LT : Ord::GT);
      return compare_reg_gaps(a.gap_spec(), b.gap_spec());
    }
    case OrderTerm::Kind::Sum: {
      Ord byPart = ord_of(a.part_index(), b.part_index());
      if (byPart != Ord::EQ) return cmp_result(byPart);
      return cut_compare_checked(t.part(a.part_index()), a.sub(), b.sub());
    }
    case OrderTerm::Kind::Prod: {
      bool a_outer = a.kind() == Cut::Kind::OuterAt;
      bool b_outer = b.kind() == Cut::Kind::OuterAt;
      if (a_outer && b_outer) return cut_compare_checked(t.outer(), a.sub(), b.sub());
      if (!a_outer && !b_outer) {
        Ord byCopy = pos_compare(a.at(), b.at());
        if (byCopy != Ord::EQ) return cmp_result(byCopy);
        return cut_compare_checked(t.inner(), a.sub(), b.sub());
      }
      // An outer cut vs. a cut inside a copy: nothing lies strictly between
      // the outer cuts just below and just above that copy.
      const Cut& outer_cut = a_outer ? a : b;
      const Cut& inner_cut = a_outer ? b : a;
      CmpResult low =
          cut_compare_checked(t.outer(), outer_cut.sub(), cut_before(t.outer(), inner_cut.at()));
      Ord o;
      if (low.ord != Ord::GT) {
        o = Ord::LT;
      } else {
        o = Ord::GT;
      }
      if (!a_outer) o = (o == Ord::LT) ? Ord::GT : Ord::LT;
      return cmp_result(o, low.verified);
    }
  }
  throw Error("cut_compare: corrupt term");
}

Ord cut_compare(const OrderTerm& t, const Cut& a, const Cut& b) {
  return cut_compare_checked(t, a, b).ord;
}

}  // namespace uxl
