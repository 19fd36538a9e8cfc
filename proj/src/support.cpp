#include "uxl/support.hpp"

#include <algorithm>

#include "uxl/error.hpp"
#include "uxl/support_order.hpp"

namespace uxl {

Support Support::point(Pos p) {
  Support s;
  s.kind_ = Kind::Point;
  s.pos_ = std::make_shared<const Pos>(std::move(p));
  return s;
}

Support Support::left_half(Cut c) {
  Support s;
  s.kind_ = Kind::LeftHalf;
  s.cut_ = std::make_shared<const Cut>(std::move(c));
  return s;
}

Support Support::right_half(Cut c) {
  Support s;
  s.kind_ = Kind::RightHalf;
  s.cut_ = std::make_shared<const Cut>(std::move(c));
  return s;
}

bool Support::operator==(const Support& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Point) return *pos_ == *other.pos_;
  return *cut_ == *other.cut_;
}

Support make_support(const OrderTerm& t, Support raw) {
  switch (raw.kind()) {
    case Support::Kind::Point:
      validate_position(t, raw.pos());
      return raw;
    case Support::Kind::LeftHalf: {
      Cut c = canonicalize_cut(t, raw.cut());
      SideInfo left = cut_left_info(t, c);
      if (left.kind == SideInfo::Kind::Empty)
        throw InvalidSupport("left half-cut has an empty initial segment",
                             SupportDefect::empty_side);
      if (left.kind == SideInfo::Kind::Extreme)
        throw InvalidSupport("initial segment has a greatest element (" +
                                 pos_to_string(*left.extreme) + ")",
                             SupportDefect::has_greatest);
      return Support::left_half(std::move(c));
    }
    case Support::Kind::RightHalf: {
      Cut c = canonicalize_cut(t, raw.cut());
      SideInfo right = cut_right_info(t, c);
      if (right.kind == SideInfo::Kind::Empty)
        throw InvalidSupport("right half-cut has an empty final segment",
                             SupportDefect::empty_side);
      if (right.kind == SideInfo::Kind::Extreme)
        throw InvalidSupport("final segment has a least element (" +
                                 pos_to_string(*right.extreme) + ")",
                             SupportDefect::has_least);
      return Support::right_half(std::move(c));
    }
  }
  throw Error("make_support: corrupt support");
}

Support make_support(const OrderTerm& t, const GapRegistry& reg, const std::string& literal) {
  if (literal.rfind("pt:", 0) == 0)
    return make_support(t, Support::point(parse_position(t, literal.substr(3))));
  if (literal.rfind("L:", 0) == 0)
    return make_support(t, Support::left_half(parse_cut_literal(t, reg, literal.substr(2))));
  if (literal.rfind("R:", 0) == 0)
    return make_support(t, Support::right_half(parse_cut_literal(t, reg, literal.substr(2))));
  throw SyntaxError("support literal must start with pt:/L:/R:", 0);
}

std::string support_to_string(const OrderTerm& t, const Support& s) {
  switch (s.kind()) {
    case Support::Kind::Point:
      return "pt:" + pos_to_string(s.pos());
    case Support::Kind::LeftHalf:
      return "L:" + cut_to_string(t, s.cut());
    case Support::Kind::RightHalf:
      return "R:" + cut_to_string(t, s.cut());
  }
  return "?";
}

UltraToken make_token(const OrderTerm& t, Support s, std::string label) {
  Support checked = make_support(t, std::move(s));
  if (checked.is_point() && !label.empty())
    throw Error("principal supports admit exactly one token; omit the label");
  return UltraToken{std::move(checked), std::move(label)};
}

UltraToken parse_token(const OrderTerm& t, const GapRegistry& reg, const std::string& literal) {
  auto hash = literal.find('#');
  std::string sup = literal.substr(0, hash == std::string::npos ? literal.size() : hash);
  std::string label = hash == std::string::npos ? "" : literal.substr(hash + 1);
  Support s = make_support(t, reg, sup);
  if (!s.is_point() && label.empty())
    throw Error("half-cut supports need a token label, e.g. \"" + sup + "#a\"");
  return make_token(t, std::move(s), std::move(label));
}

std::string token_to_string(const OrderTerm& t, const UltraToken& u) {
  std::string s = support_to_string(t, u.support);
  if (!u.label.empty()) s += "#" + u.label;
  return s;
}

// --------------------------------------------------------------------------
// Definitional membership
// --------------------------------------------------------------------------

bool interval_membership(const OrderTerm& t, const IntervalSet& S, const UltraToken& u) {
  if (t != S.term()) throw MixedTerms();
  switch (u.support.kind()) {
    case Support::Kind::Point:
      return S.contains(u.support.pos());
    case Support::Kind::LeftHalf: {
      // S is in u iff one of its intervals covers a whole final segment of I:
      // it must reach the cut from inside I and extend up to it.
      CompletionPos sup = cut_sup_pos(t, u.support.cut());
      for (const auto& iv : S.intervals()) {
        Ord reach = completion_compare_checked(t, iv.hi.pos, sup).ord;
        if (reach == Ord::LT) continue;
        Ord start = completion_compare_checked(t, iv.lo.pos, sup).ord;
        if (start == Ord::LT) return true;
      }
      return false;
    }
    case Support::Kind::RightHalf: {
      CompletionPos inf = cut_inf_pos(t, u.support.cut());
      for (const auto& iv : S.intervals()) {
        Ord start = completion_compare_checked(t, iv.lo.pos, inf).ord;
        if (start == Ord::GT) continue;
        Ord reach = completion_compare_checked(t, iv.hi.pos, inf).ord;
        if (reach == Ord::GT) return true;
      }
      return false;
    }
  }
  throw Error("interval_membership: corrupt support");
}

IntervalSet transform_under_relation(const OrderTerm& t, SegRel rel, const UltraToken& v) {
  switch (v.support.kind()) {
    case Support::Kind::Point:
      return IntervalSet::from_segment(t, rel, CompletionPos::elem(v.support.pos()));
    case Support::Kind::LeftHalf: {
      CompletionPos sup = cut_sup_pos(t, v.support.cut());
      bool forward = rel == SegRel::LT || rel == SegRel::LE;
      return IntervalSet::from_segment(t, forward ? SegRel::LT : SegRel::GE, sup);
    }
    case Support::Kind::RightHalf: {
      CompletionPos inf = cut_inf_pos(t, v.support.cut());
      bool forward = rel == SegRel::LT || rel == SegRel::LE;
      return IntervalSet::from_segment(t, forward ? SegRel::LE : SegRel::GT, inf);
    }
  }
  throw Error("transform_under_relation: corrupt support");
}

// --------------------------------------------------------------------------
// Support enumeration
// --------------------------------------------------------------------------

std::vector<Support> enumerate_supports(const OrderTerm& t, const GapRegistry& reg,
                                        std::size_t budget) {
  if (!any_element(t)) throw EmptyOrder();
  std::vector<Support> out;
  auto push = [&](Support s) {
    for (const auto& other : out)
      if (other == s) return;
    out.push_back(std::move(s));
  };
  for (const auto& p : sample_elements(t, budget)) {
    PointClass pc = classify_position(t, p);
    if (pc.is_left_limit) push(Support::left_half(cut_before(t, p)));
    push(Support::point(p));
    if (pc.is_right_limit) push(Support::right_half(cut_after(t, p)));
  }
  if (!term_has_least(t)) push(Support::right_half(bottom_cut(t)));
  if (!term_has_greatest(t)) push(Support::left_half(top_cut(t)));
  for (const auto& g : structural_gaps(t, budget)) {
    push(Support::left_half(g));
    push(Support::right_half(g));
  }
  if (auto path = unique_eta_sum_path(t)) {
    for (const auto& spec : reg.all()) {
      Cut g = lift_cut_along_sum_path(t, *path, Cut::reg(spec));
      push(Support::left_half(g));
      push(Support::right_half(g));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Support& a, const Support& b) {
    return support_compare(t, a, b) == Ord::LT;
  });
  return out;
}

}  // namespace uxl
