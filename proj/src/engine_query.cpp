#include <algorithm>

#include "uxl/engine.hpp"
#include "uxl/error.hpp"

namespace uxl {

// --------------------------------------------------------------------------
// CompletionPos
// --------------------------------------------------------------------------

CompletionPos CompletionPos::bottom() { return CompletionPos(); }

CompletionPos CompletionPos::top() {
  CompletionPos c;
  c.kind_ = Kind::Top;
  return c;
}

CompletionPos CompletionPos::elem(Pos p) {
  CompletionPos c;
  c.kind_ = Kind::Elem;
  c.pos_ = std::make_shared<const Pos>(std::move(p));
  return c;
}

CompletionPos CompletionPos::gap_at(Cut cut) {
  CompletionPos c;
  c.kind_ = Kind::GapAt;
  c.cut_ = std::make_shared<const Cut>(std::move(cut));
  return c;
}

bool CompletionPos::operator==(const CompletionPos& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Elem) return *pos_ == *other.pos_;
  if (kind_ == Kind::GapAt) return *cut_ == *other.cut_;
  return true;
}

namespace {

void validate_cut(const OrderTerm& t, const Cut& c) {
  switch (c.kind()) {
    case Cut::Kind::BottomAll:
    case Cut::Kind::TopAll:
      return;
    case Cut::Kind::Idx:
      if (t.kind() == OrderTerm::Kind::Fin) {
        if (c.index() > t.fin_size()) throw InvalidPosition("cut index out of range");
        return;
      }
      if (t.kind() != OrderTerm::Kind::Omega) throw InvalidPosition("Idx cut needs a Fin/w term");
      return;
    case Cut::Kind::StarIdx:
      if (t.kind() != OrderTerm::Kind::OmegaStar) throw InvalidPosition("StarIdx cut needs w*");
      return;
    case Cut::Kind::IntIdx:
      if (t.kind() != OrderTerm::Kind::Zeta) throw InvalidPosition("IntIdx cut needs z");
      return;
    case Cut::Kind::RatIdx:
    case Cut::Kind::Reg:
      if (t.kind() != OrderTerm::Kind::Eta) throw InvalidPosition("rational cut needs e");
      return;
    case Cut::Kind::SumAt:
      if (t.kind() != OrderTerm::Kind::Sum || c.part_index() >= t.arity())
        throw InvalidPosition("sum cut does not match term");
      validate_cut(t.part(c.part_index()), c.sub());
      return;
    case Cut::Kind::OuterAt:
      if (t.kind() != OrderTerm::Kind::Prod) throw InvalidPosition("outer cut needs a product");
      validate_cut(t.outer(), c.sub());
      return;
    case Cut::Kind::InnerAt:
      if (t.kind() != OrderTerm::Kind::Prod) throw InvalidPosition("inner cut needs a product");
      validate_position(t.outer(), c.at());
      validate_cut(t.inner(), c.sub());
      if (is_bottom_cut(t.inner(), c.sub()) || is_top_cut(t.inner(), c.sub()))
        throw InvalidPosition("inner cut must be proper (canonicalize first)");
      return;
  }
  throw InvalidPosition("corrupt cut");
}

std::optional<Pos> some_element(const OrderTerm& t) {
  if (auto l = term_least(t)) return l;
  switch (t.kind()) {
    case OrderTerm::Kind::OmegaStar:
      return Pos::star(0);
    case OrderTerm::Kind::Zeta:
      return Pos::integer(0);
    case OrderTerm::Kind::Eta:
      return Pos::rational(Rat(0));
    case OrderTerm::Kind::Sum:
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (auto w = some_element(t.part(i))) return Pos::sum_part(i, *std::move(w));
      }
      return std::nullopt;
    case OrderTerm::Kind::Prod: {
      auto in = some_element(t.inner());
      auto out = some_element(t.outer());
      if (!in || !out) return std::nullopt;
      return Pos::prod_pair(*std::move(in), *std::move(out));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Pos> any_element(const OrderTerm& t) { return some_element(t); }

void validate_completion_pos(const OrderTerm& t, const CompletionPos& c) {
  switch (c.kind()) {
    case CompletionPos::Kind::Bottom:
    case CompletionPos::Kind::Top:
      return;
    case CompletionPos::Kind::Elem:
      validate_position(t, c.pos());
      return;
    case CompletionPos::Kind::GapAt:
      validate_cut(t, c.cut());
      if (!cut_is_gap(t, c.cut()))
        throw InvalidPosition("completion position cut is not a proper gap");
      return;
  }
}

CompletionPos cut_sup_pos(const OrderTerm& t, const Cut& c) {
  SideInfo right = cut_right_info(t, c);
  switch (right.kind) {
    case SideInfo::Kind::Extreme:
      return CompletionPos::elem(*right.extreme);
    case SideInfo::Kind::Empty:
      return CompletionPos::top();
    case SideInfo::Kind::Open:
      return CompletionPos::gap_at(c);
  }
  throw Error("cut_sup_pos: corrupt side info");
}

CompletionPos cut_inf_pos(const OrderTerm& t, const Cut& c) {
  SideInfo left = cut_left_info(t, c);
  switch (left.kind) {
    case SideInfo::Kind::Extreme:
      return CompletionPos::elem(*left.extreme);
    case SideInfo::Kind::Empty:
      return CompletionPos::bottom();
    case SideInfo::Kind::Open:
      return CompletionPos::gap_at(c);
  }
  throw Error("cut_inf_pos: corrupt side info");
}

CmpResult completion_compare_checked(const OrderTerm& t, const CompletionPos& a,
                                     const CompletionPos& b) {
  using K = CompletionPos::Kind;
  if (a.kind() == K::Bottom || b.kind() == K::Bottom) {
    if (a.kind() == b.kind()) return {Ord::EQ, true};
    return {a.kind() == K::Bottom ? Ord::LT : Ord::GT, true};
  }
  if (a.kind() == K::Top || b.kind() == K::Top) {
    if (a.kind() == b.kind()) return {Ord::EQ, true};
    return {a.kind() == K::Top ? Ord::GT : Ord::LT, true};
  }
  if (a.kind() == K::Elem && b.kind() == K::Elem) return {pos_compare(a.pos(), b.pos()), true};
  if (a.kind() == K::Elem) return {cut_below(t, b.cut(), a.pos()) ? Ord::LT : Ord::GT, true};
  if (b.kind() == K::Elem) return {cut_below(t, a.cut(), b.pos()) ? Ord::GT : Ord::LT, true};
  return cut_compare_checked(t, a.cut(), b.cut());
}

Ord position_compare(const OrderTerm& t, const CompletionPos& a, const CompletionPos& b) {
  validate_completion_pos(t, a);
  validate_completion_pos(t, b);
  return completion_compare_checked(t, a, b).ord;
}

SideInfo above_info(const OrderTerm& t, const CompletionPos& c) {
  switch (c.kind()) {
    case CompletionPos::Kind::Bottom:
      return cut_right_info(t, bottom_cut(t));
    case CompletionPos::Kind::Top:
      return SideInfo{SideInfo::Kind::Empty, std::nullopt};
    case CompletionPos::Kind::Elem:
      return cut_right_info(t, cut_after(t, c.pos()));
    case CompletionPos::Kind::GapAt:
      return cut_right_info(t, c.cut());
  }
  throw Error("above_info: corrupt position");
}

SideInfo below_info(const OrderTerm& t, const CompletionPos& c) {
  switch (c.kind()) {
    case CompletionPos::Kind::Top:
      return cut_left_info(t, top_cut(t));
    case CompletionPos::Kind::Bottom:
      return SideInfo{SideInfo::Kind::Empty, std::nullopt};
    case CompletionPos::Kind::Elem:
      return cut_left_info(t, cut_before(t, c.pos()));
    case CompletionPos::Kind::GapAt:
      return cut_left_info(t, c.cut());
  }
  throw Error("below_info: corrupt position");
}

bool exists_between(const OrderTerm& t, const CompletionPos& lo, const CompletionPos& hi) {
  if (completion_compare_checked(t, lo, hi).ord != Ord::LT) return false;
  SideInfo above = above_info(t, lo);
  switch (above.kind) {
    case SideInfo::Kind::Empty:
      return false;
    case SideInfo::Kind::Extreme:
      return completion_compare_checked(t, CompletionPos::elem(*above.extreme), hi).ord == Ord::LT;
    case SideInfo::Kind::Open:
      // No least element above lo: the elements above lo accumulate toward it,
      // so some of them fall under any strictly larger position.
      return true;
  }
  return false;
}

std::optional<Pos> successor(const OrderTerm& t, const Pos& p) {
  SideInfo above = cut_right_info(t, cut_after(t, p));
  if (above.kind == SideInfo::Kind::Extreme) return above.extreme;
  return std::nullopt;
}

std::optional<Pos> predecessor(const OrderTerm& t, const Pos& p) {
  SideInfo below = cut_left_info(t, cut_before(t, p));
  if (below.kind == SideInfo::Kind::Extreme) return below.extreme;
  return std::nullopt;
}

PointClass classify_position(const OrderTerm& t, const Pos& p) {
  validate_position(t, p);
  SideInfo below = below_info(t, CompletionPos::elem(p));
  SideInfo above = above_info(t, CompletionPos::elem(p));
  PointClass out;
  out.is_min = below.empty();
  out.is_left_limit = below.open();
  out.is_max = above.empty();
  out.is_right_limit = above.open();
  return out;
}

// --------------------------------------------------------------------------
// Witness construction
// --------------------------------------------------------------------------

namespace {

// An outer element q with q in J(low) and q in I(high); the helpers below keep
// the search structural.
std::optional<Pos> outer_elem_in(const OrderTerm& outer, const Cut& low, const Cut& high) {
  SideInfo right = cut_right_info(outer, low);
  if (right.kind == SideInfo::Kind::Empty) return std::nullopt;
  if (right.kind == SideInfo::Kind::Extreme) {
    if (cut_below(outer, high, *right.extreme)) return right.extreme;
    return std::nullopt;
  }
  SideInfo left = cut_left_info(outer, high);
  if (left.kind == SideInfo::Kind::Empty) return std::nullopt;
  if (left.kind == SideInfo::Kind::Extreme) {
    if (!cut_below(outer, low, *left.extreme)) return left.extreme;
    return std::nullopt;
  }
  return witness_between(outer, cut_inf_pos(outer, low), cut_sup_pos(outer, high));
}

struct SumLoc {
  std::size_t part;
  CompletionPos local;
};

SumLoc sum_locate(const OrderTerm& t, const CompletionPos& c) {
  switch (c.kind()) {
    case CompletionPos::Kind::Bottom:
      return {0, CompletionPos::bottom()};
    case CompletionPos::Kind::Top:
      return {t.arity() - 1, CompletionPos::top()};
    case CompletionPos::Kind::Elem:
      return {c.pos().part_index(), CompletionPos::elem(c.pos().sub())};
    case CompletionPos::Kind::GapAt: {
      const Cut& cut = c.cut();
      std::size_t i = cut.part_index();
      if (is_top_cut(t.part(i), cut.sub())) return {i, CompletionPos::top()};
      return {i, CompletionPos::gap_at(cut.sub())};
    }
  }
  throw Error("sum_locate: corrupt position");
}

struct ProdLoc {
  bool in_copy = false;
  Pos copy = Pos::nat(0);
  CompletionPos local = CompletionPos::bottom();
  Cut at_outer = Cut::bottom_all();
};

ProdLoc prod_locate(const OrderTerm& t, const CompletionPos& c) {
  ProdLoc loc;
  switch (c.kind()) {
    case CompletionPos::Kind::Bottom:
      loc.at_outer = bottom_cut(t.outer());
      return loc;
    case CompletionPos::Kind::Top:
      loc.at_outer = top_cut(t.outer());
      return loc;
    case CompletionPos::Kind::Elem:
      loc.in_copy = true;
      loc.copy = c.pos().outer();
      loc.local = CompletionPos::elem(c.pos().inner());
      return loc;
    case CompletionPos::Kind::GapAt:
      if (c.cut().kind() == Cut::Kind::InnerAt) {
        loc.in_copy = true;
        loc.copy = c.cut().at();
        loc.local = CompletionPos::gap_at(c.cut().sub());
        return loc;
      }
      loc.at_outer = c.cut().sub();
      return loc;
  }
  throw Error("prod_locate: corrupt position");
}

std::optional<Pos> witness_in_leaf(const OrderTerm& t, const CompletionPos& lo,
                                   const CompletionPos& hi) {
  // Reached only when the elements above lo have no least one.
  switch (t.kind()) {
    case OrderTerm::Kind::OmegaStar: {
      if (hi.kind() == CompletionPos::Kind::Top) return Pos::star(0);
      if (hi.is_elem()) return Pos::star(hi.pos().star_index() + 1);
      return std::nullopt;
    }
    case OrderTerm::Kind::Zeta: {
      if (hi.kind() == CompletionPos::Kind::Top) return Pos::integer(0);
      if (hi.is_elem()) return Pos::integer(hi.pos().int_value() - 1);
      return std::nullopt;
    }
    case OrderTerm::Kind::Eta: {
      auto lo_blocks = [&](const Rat& q) {
        switch (lo.kind()) {
          case CompletionPos::Kind::Bottom:
            return false;
          case CompletionPos::Kind::Elem:
            return q <= lo.pos().rat_value();
          case CompletionPos::Kind::GapAt:
            return cut_below(t, lo.cut(), Pos::rational(q));
          default:
            return true;
        }
      };
      auto hi_blocks = [&](const Rat& q) {
        switch (hi.kind()) {
          case CompletionPos::Kind::Top:
            return false;
          case CompletionPos::Kind::Elem:
            return q >= hi.pos().rat_value();
          case CompletionPos::Kind::GapAt:
            return !cut_below(t, hi.cut(), Pos::rational(q));
          default:
            return true;
        }
      };
      if (auto q = stern_brocot_between(lo_blocks, hi_blocks)) return Pos::rational(*q);
      throw Error("witness_between: rational witness search budget exceeded");
    }
    default:
      throw Error("witness_between: unexpected leaf shape");
  }
}

}  // namespace

std::optional<Pos> witness_between(const OrderTerm& t, const CompletionPos& lo,
                                   const CompletionPos& hi) {
  if (completion_compare_checked(t, lo, hi).ord != Ord::LT) return std::nullopt;
  SideInfo above = above_info(t, lo);
  if (above.kind == SideInfo::Kind::Empty) return std::nullopt;
  if (above.kind == SideInfo::Kind::Extreme) {
    if (completion_compare_checked(t, CompletionPos::elem(*above.extreme), hi).ord == Ord::LT)
      return above.extreme;
    return std::nullopt;
  }
  switch (t.kind()) {
    case OrderTerm::Kind::Sum: {
      SumLoc a = sum_locate(t, lo);
      SumLoc b = sum_locate(t, hi);
      if (a.part == b.part) {
        if (auto w = witness_between(t.part(a.part), a.local, b.local))
          return Pos::sum_part(a.part, *std::move(w));
        return std::nullopt;
      }
      if (auto w = witness_between(t.part(a.part), a.local, CompletionPos::top()))
        return Pos::sum_part(a.part, *std::move(w));
      for (std::size_t j = a.part + 1; j < b.part; ++j)
        if (auto w = some_element(t.part(j))) return Pos::sum_part(j, *std::move(w));
      if (auto w = witness_between(t.part(b.part), CompletionPos::bottom(), b.local))
        return Pos::sum_part(b.part, *std::move(w));
      return std::nullopt;
    }
    case OrderTerm::Kind::Prod: {
      ProdLoc a = prod_locate(t, lo);
      ProdLoc b = prod_locate(t, hi);
      if (a.in_copy && b.in_copy && pos_compare(a.copy, b.copy) == Ord::EQ) {
        if (auto w = witness_between(t.inner(), a.local, b.local))
          return Pos::prod_pair(*std::move(w), a.copy);
        return std::nullopt;
      }
      if (a.in_copy) {
        if (auto w = witness_between(t.inner(), a.local, CompletionPos::top()))
          return Pos::prod_pair(*std::move(w), a.copy);
      }
      Cut low_cut = a.in_copy ? cut_after(t.outer(), a.copy) : a.at_outer;
      Cut high_cut = b.in_copy ? cut_before(t.outer(), b.copy) : b.at_outer;
      if (auto q = outer_elem_in(t.outer(), low_cut, high_cut)) {
        if (auto w = some_element(t.inner())) return Pos::prod_pair(*std::move(w), *std::move(q));
      }
      if (b.in_copy) {
        if (auto w = witness_between(t.inner(), CompletionPos::bottom(), b.local))
          return Pos::prod_pair(*std::move(w), b.copy);
      }
      return std::nullopt;
    }
    default:
      return witness_in_leaf(t, lo, hi);
  }
}

// --------------------------------------------------------------------------
// Ladders and samples
// --------------------------------------------------------------------------

std::vector<Pos> enumerate_elements(const OrderTerm& t, Direction dir, std::size_t n) {
  std::vector<Pos> out;
  if (n == 0) return out;
  std::optional<Pos> cur = (dir == Direction::Front) ? term_least(t) : term_greatest(t);
  if (!cur)
    throw NoCanonicalLadder(dir == Direction::Front
                                ? "term has no least element to start a front ladder"
                                : "term has no greatest element to start a back ladder");
  while (out.size() < n) {
    out.push_back(*cur);
    if (out.size() == n) break;
    cur = (dir == Direction::Front) ? successor(t, *cur) : predecessor(t, *cur);
    if (!cur)
      throw NoCanonicalLadder("ladder exhausted after " + std::to_string(out.size()) +
                              " element(s)");
  }
  return out;
}

std::vector<Pos> sample_elements(const OrderTerm& t, std::size_t budget) {
  std::vector<Pos> out;
  if (budget == 0) return out;
  switch (t.kind()) {
    case OrderTerm::Kind::Fin: {
      std::uint64_t n = t.fin_size();
      if (n <= 2 * budget) {
        for (std::uint64_t k = 0; k < n; ++k) out.push_back(Pos::nat(k));
      } else {
        for (std::uint64_t k = 0; k < budget; ++k) out.push_back(Pos::nat(k));
        for (std::uint64_t k = n - budget; k < n; ++k) out.push_back(Pos::nat(k));
      }
      return out;
    }
    case OrderTerm::Kind::Omega:
      for (std::uint64_t k = 0; k < budget; ++k) out.push_back(Pos::nat(k));
      return out;
    case OrderTerm::Kind::OmegaStar:
      for (std::uint64_t k = budget; k-- > 0;) out.push_back(Pos::star(k));
      return out;
    case OrderTerm::Kind::Zeta: {
      std::vector<std::int64_t> vals;
      std::int64_t k = 0;
      while (vals.size() < budget) {
        vals.push_back(k);
        if (vals.size() < budget && k != 0) vals.push_back(-k);
        ++k;
      }
      std::sort(vals.begin(), vals.end());
      for (auto v : vals) out.push_back(Pos::integer(v));
      return out;
    }
    case OrderTerm::Kind::Eta: {
      std::vector<Rat> vals;
      for (std::size_t i = 0; i < budget; ++i) vals.push_back(dyadic_sample(i));
      std::sort(vals.begin(), vals.end());
      for (const auto& v : vals) out.push_back(Pos::rational(v));
      return out;
    }
    case OrderTerm::Kind::Sum:
      for (std::size_t i = 0; i < t.arity(); ++i)
        for (auto& p : sample_elements(t.part(i), budget))
          out.push_back(Pos::sum_part(i, std::move(p)));
      return out;
    case OrderTerm::Kind::Prod: {
      std::size_t f = std::min<std::size_t>(budget, 6);
      auto ins = sample_elements(t.inner(), f);
      auto outs = sample_elements(t.outer(), f);
      for (const auto& po : outs)
        for (const auto& pi : ins) out.push_back(Pos::prod_pair(pi, po));
      return out;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Structural gaps
// --------------------------------------------------------------------------

namespace {

std::vector<Cut> gap_candidates(const OrderTerm& t, std::size_t budget) {
  std::vector<Cut> out;
  switch (t.kind()) {
    case OrderTerm::Kind::Sum: {
      for (std::size_t i = 0; i + 1 < t.arity(); ++i)
        out.push_back(Cut::sum_at(i, top_cut(t.part(i))));
      for (std::size_t i = 0; i < t.arity(); ++i)
        for (auto& c : gap_candidates(t.part(i), budget))
          out.push_back(Cut::sum_at(i, std::move(c)));
      return out;
    }
    case OrderTerm::Kind::Prod: {
      for (auto& c : gap_candidates(t.outer(), budget)) out.push_back(Cut::outer_at(std::move(c)));
      auto inner_gaps = gap_candidates(t.inner(), budget);
      for (const auto& q : sample_elements(t.outer(), std::min<std::size_t>(budget, 6))) {
        out.push_back(Cut::outer_at(cut_before(t.outer(), q)));
        out.push_back(Cut::outer_at(cut_after(t.outer(), q)));
        for (const auto& c : inner_gaps)
          out.push_back(canonicalize_cut(t, Cut::inner_at(q, c)));
      }
      return out;
    }
    default:
      return out;
  }
}

}  // namespace

std::vector<Cut> structural_gaps(const OrderTerm& t, std::size_t budget) {
  std::vector<Cut> found;
  for (auto& c : gap_candidates(t, budget)) {
    if (!cut_is_gap(t, c)) continue;
    bool seen = false;
    for (const auto& other : found)
      if (other == c) {
        seen = true;
        break;
      }
    if (!seen) found.push_back(std::move(c));
  }
  std::sort(found.begin(), found.end(),
            [&](const Cut& a, const Cut& b) { return cut_compare(t, a, b) == Ord::LT; });
  return found;
}

std::optional<std::vector<std::size_t>> unique_eta_sum_path(const OrderTerm& t) {
  if (t.kind() == OrderTerm::Kind::Eta) return std::vector<std::size_t>{};
  if (t.kind() != OrderTerm::Kind::Sum) return std::nullopt;
  std::optional<std::size_t> holder;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (t.part(i).contains_eta()) {
      if (holder) return std::nullopt;
      holder = i;
    }
  }
  if (!holder) return std::nullopt;
  auto sub = unique_eta_sum_path(t.part(*holder));
  if (!sub) return std::nullopt;
  sub->insert(sub->begin(), *holder);
  return sub;
}

Cut lift_cut_along_sum_path(const OrderTerm& t, const std::vector<std::size_t>& path, Cut leaf) {
  if (path.empty()) return leaf;
  const OrderTerm* cur = &t;
  std::vector<const OrderTerm*> stack;
  for (std::size_t step : path) {
    stack.push_back(cur);
    if (cur->kind() != OrderTerm::Kind::Sum || step >= cur->arity())
      throw InvalidPosition("bad sum path");
    cur = &cur->part(step);
  }
  Cut c = std::move(leaf);
  for (std::size_t i = path.size(); i-- > 0;) c = Cut::sum_at(path[i], std::move(c));
  return c;
}

// --------------------------------------------------------------------------
// Literals
// --------------------------------------------------------------------------

namespace {

std::string gap_literal(const OrderTerm& t, const Cut& c);

std::string cut_literal(const OrderTerm& t, const Cut& c) {
  if (is_bottom_cut(t, c)) return "bottom";
  if (is_top_cut(t, c)) return "top";
  SideInfo right = cut_right_info(t, c);
  if (right.kind == SideInfo::Kind::Extreme) return "before:" + pos_to_string(*right.extreme);
  SideInfo left = cut_left_info(t, c);
  if (left.kind == SideInfo::Kind::Extreme) return "after:" + pos_to_string(*left.extreme);
  return "at:" + gap_literal(t, c);
}

std::string gap_literal(const OrderTerm& t, const Cut& c) {
  switch (c.kind()) {
    case Cut::Kind::Reg:
      return "gap:" + c.gap_spec().name;
    case Cut::Kind::SumAt: {
      std::size_t i = c.part_index();
      if (is_top_cut(t.part(i), c.sub()))
        return "structgap:" + std::to_string(i) + "|" + std::to_string(i + 1);
      return "part:" + std::to_string(i) + ":" + gap_literal(t.part(i), c.sub());
    }
    case Cut::Kind::InnerAt:
      return "in:" + pos_to_string(c.at()) + ":" + gap_literal(t.inner(), c.sub());
    case Cut::Kind::OuterAt: {
      SideInfo left = cut_left_info(t.outer(), c.sub());
      if (left.kind == SideInfo::Kind::Extreme &&
          c.sub() == cut_after(t.outer(), *left.extreme))
        return "copygap:" + pos_to_string(*left.extreme);
      return "outercut:" + cut_literal(t.outer(), c.sub());
    }
    default:
      throw InvalidPosition("cut has no gap literal form");
  }
}

Cut parse_gap_literal(const OrderTerm& t, const GapRegistry& reg, const std::string& text);

Cut parse_cut_text(const OrderTerm& t, const GapRegistry& reg, const std::string& text) {
  if (text == "bottom") return bottom_cut(t);
  if (text == "top") return top_cut(t);
  if (text.rfind("before:", 0) == 0) return cut_before(t, parse_position(t, text.substr(7)));
  if (text.rfind("after:", 0) == 0) return cut_after(t, parse_position(t, text.substr(6)));
  if (text.rfind("at:", 0) == 0) return parse_gap_literal(t, reg, text.substr(3));
  throw SyntaxError("unrecognized cut literal '" + text + "'", 0);
}

Cut parse_gap_literal(const OrderTerm& t, const GapRegistry& reg, const std::string& text) {
  if (text.rfind("gap:", 0) == 0) {
    std::string name = text.substr(4);
    auto spec = reg.find(name);
    if (!spec) throw InvalidPosition("unknown gap name '" + name + "'");
    auto path = unique_eta_sum_path(t);
    if (!path)
      throw InvalidPosition("term has no unique e leaf reachable through sum parts; "
                            "qualify the gap with part:/in: instead");
    return lift_cut_along_sum_path(t, *path, Cut::reg(std::move(spec)));
  }
  if (text.rfind("structgap:", 0) == 0) {
    std::string rest = text.substr(10);
    auto bar = rest.find('|');
    if (bar == std::string::npos) throw SyntaxError("structgap needs <i>|<j>", 0);
    std::size_t i = std::stoul(rest.substr(0, bar));
    std::size_t j = std::stoul(rest.substr(bar + 1));
    if (t.kind() != OrderTerm::Kind::Sum || j != i + 1 || j >= t.arity())
      throw InvalidPosition("structgap:<i>|<i+1> requires adjacent parts of a sum term");
    return Cut::sum_at(i, top_cut(t.part(i)));
  }
  if (text.rfind("copygap:", 0) == 0) {
    if (t.kind() != OrderTerm::Kind::Prod)
      throw InvalidPosition("copygap requires a product term");
    Pos q = parse_position(t.outer(), text.substr(8));
    return Cut::outer_at(cut_after(t.outer(), q));
  }
  if (text.rfind("part:", 0) == 0) {
    if (t.kind() != OrderTerm::Kind::Sum) throw InvalidPosition("part: requires a sum term");
    std::string rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw SyntaxError("part needs part:<i>:<gap>", 0);
    std::size_t i = std::stoul(rest.substr(0, colon));
    if (i >= t.arity()) throw InvalidPosition("part index out of range");
    return canonicalize_cut(t,
                            Cut::sum_at(i, parse_gap_literal(t.part(i), reg, rest.substr(colon + 1))));
  }
  if (text.rfind("in:", 0) == 0) {
    if (t.kind() != OrderTerm::Kind::Prod) throw InvalidPosition("in: requires a product term");
    std::string rest = text.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw SyntaxError("in needs in:<pos>:<gap>", 0);
    Pos q = parse_position(t.outer(), rest.substr(0, colon));
    return canonicalize_cut(
        t, Cut::inner_at(std::move(q), parse_gap_literal(t.inner(), reg, rest.substr(colon + 1))));
  }
  if (text.rfind("outercut:", 0) == 0) {
    if (t.kind() != OrderTerm::Kind::Prod)
      throw InvalidPosition("outercut requires a product term");
    return Cut::outer_at(parse_cut_text(t.outer(), reg, text.substr(9)));
  }
  throw SyntaxError("unrecognized gap literal '" + text + "'", 0);
}

}  // namespace

std::string cut_to_string(const OrderTerm& t, const Cut& c) { return cut_literal(t, c); }

Cut parse_cut_literal(const OrderTerm& t, const GapRegistry& reg, const std::string& text) {
  Cut c = parse_cut_text(t, reg, text);
  validate_cut(t, c);
  return c;
}

std::string completion_to_string(const OrderTerm& t, const CompletionPos& c) {
  switch (c.kind()) {
    case CompletionPos::Kind::Bottom:
      return "bottom";
    case CompletionPos::Kind::Top:
      return "top";
    case CompletionPos::Kind::Elem:
      return "elem:" + pos_to_string(c.pos());
    case CompletionPos::Kind::GapAt:
      return gap_literal(t, c.cut());
  }
  return "?";
}

CompletionPos parse_completion_pos(const OrderTerm& t, const GapRegistry& reg,
                                   const std::string& text) {
  if (text == "bottom") return CompletionPos::bottom();
  if (text == "top") return CompletionPos::top();
  if (text.rfind("elem:", 0) == 0)
    return CompletionPos::elem(parse_position(t, text.substr(5)));
  Cut c = parse_gap_literal(t, reg, text);
  CompletionPos out = CompletionPos::gap_at(std::move(c));
  validate_completion_pos(t, out);
  return out;
}

}  // namespace uxl
