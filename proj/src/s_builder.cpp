#include "uxl/s_builder.hpp"

#include <algorithm>

#include "uxl/error.hpp"
#include "uxl/support.hpp"

namespace uxl {

std::vector<Support> local_contribution(const OrderTerm& t, const Locus& locus) {
  std::vector<Support> out;
  if (std::holds_alternative<Pos>(locus)) {
    const Pos& p = std::get<Pos>(locus);
    PointClass pc = classify_position(t, p);
    if (pc.is_left_limit) out.push_back(Support::left_half(cut_before(t, p)));
    out.push_back(Support::point(p));
    if (pc.is_right_limit) out.push_back(Support::right_half(cut_after(t, p)));
    return out;
  }
  Cut c = canonicalize_cut(t, std::get<Cut>(locus));
  if (cut_left_info(t, c).open()) out.push_back(Support::left_half(c));
  if (cut_right_info(t, c).open()) out.push_back(Support::right_half(c));
  return out;
}

// --------------------------------------------------------------------------
// Closed-form s(tau) on the scattered fragment
// --------------------------------------------------------------------------

namespace {

OrderTerm s_interior(const OrderTerm& t);

// Supports contributed strictly between two adjacent blocks shaped like the
// given terms: one for each open side of the separating cut.
std::uint64_t boundary_width(const OrderTerm& left, const OrderTerm& right) {
  return (term_has_greatest(left) ? 0 : 1) + (term_has_least(right) ? 0 : 1);
}

OrderTerm prod_interior(const OrderTerm& in, const OrderTerm& out) {
  OrderTerm block = s_interior(in);
  std::uint64_t b = boundary_width(in, in);
  switch (out.kind()) {
    case OrderTerm::Kind::Fin: {
      std::vector<OrderTerm> parts;
      for (std::uint64_t i = 0; i < out.fin_size(); ++i) {
        if (i) parts.push_back(OrderTerm::fin(b));
        parts.push_back(block);
      }
      return OrderTerm::sum(std::move(parts));
    }
    case OrderTerm::Kind::Omega: {
      // block (b block)(b block)(b block)...
      OrderTerm rep = normalize_term(OrderTerm::sum({OrderTerm::fin(b), block}));
      return OrderTerm::sum({block, OrderTerm::prod(std::move(rep), OrderTerm::omega())});
    }
    case OrderTerm::Kind::OmegaStar: {
      OrderTerm rep = normalize_term(OrderTerm::sum({block, OrderTerm::fin(b)}));
      return OrderTerm::sum({OrderTerm::prod(std::move(rep), OrderTerm::omega_star()), block});
    }
    case OrderTerm::Kind::Zeta: {
      OrderTerm rep = normalize_term(OrderTerm::sum({OrderTerm::fin(b), block}));
      return OrderTerm::prod(std::move(rep), OrderTerm::zeta());
    }
    case OrderTerm::Kind::Sum: {
      std::vector<OrderTerm> parts;
      for (std::size_t i = 0; i < out.arity(); ++i) {
        if (i) {
          const OrderTerm& prev = out.part(i - 1);
          const OrderTerm& next = out.part(i);
          std::uint64_t width = ((term_has_greatest(prev) && term_has_greatest(in)) ? 0 : 1) +
                                ((term_has_least(next) && term_has_least(in)) ? 0 : 1);
          parts.push_back(OrderTerm::fin(width));
        }
        parts.push_back(prod_interior(in, out.part(i)));
      }
      return OrderTerm::sum(std::move(parts));
    }
    case OrderTerm::Kind::Prod:
      return prod_interior(normalize_term(OrderTerm::prod(in, out.inner())), out.outer());
    case OrderTerm::Kind::Eta:
      throw NotClosedForm("dense order types have no closed-form s(tau)");
  }
  throw Error("prod_interior: corrupt term");
}

OrderTerm s_interior(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
    case OrderTerm::Kind::OmegaStar:
    case OrderTerm::Kind::Zeta:
      // Every point of a scattered leaf is isolated within it; only the
      // context can turn its edge points into limits.
      return t;
    case OrderTerm::Kind::Eta:
      throw NotClosedForm("dense order types have no closed-form s(tau)");
    case OrderTerm::Kind::Sum: {
      std::vector<OrderTerm> parts;
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) parts.push_back(OrderTerm::fin(boundary_width(t.part(i - 1), t.part(i))));
        parts.push_back(s_interior(t.part(i)));
      }
      return OrderTerm::sum(std::move(parts));
    }
    case OrderTerm::Kind::Prod:
      return prod_interior(t.inner(), t.outer());
  }
  throw Error("s_interior: corrupt term");
}

}  // namespace

OrderTerm s_of_term(const OrderTerm& t) {
  OrderTerm tn = normalize_term(t);
  if (tn.is_empty()) throw EmptyOrder();
  if (tn.contains_eta())
    throw NotClosedForm("term contains dense content; use local_contribution/dense profile");
  std::vector<OrderTerm> parts;
  if (!term_has_least(tn)) parts.push_back(OrderTerm::fin(1));
  parts.push_back(s_interior(tn));
  if (!term_has_greatest(tn)) parts.push_back(OrderTerm::fin(1));
  return normalize_term(OrderTerm::sum(std::move(parts)));
}

OrderTerm s_iterate(const OrderTerm& t, std::size_t n) {
  if (n == 0) throw OutOfRange("s_iterate needs n >= 1");
  OrderTerm cur = t;
  for (std::size_t i = 0; i < n; ++i) cur = s_of_term(cur);
  return cur;
}

// --------------------------------------------------------------------------
// Dense profile
// --------------------------------------------------------------------------

bool DenseProfileReport::ok() const {
  if (!bottom_end_ok || !top_end_ok) return false;
  for (const auto& b : blocks)
    if (!b.consecutive) return false;
  return true;
}

std::string DenseProfileReport::to_text() const {
  std::string out;
  for (const auto& b : blocks) {
    out += b.locus + ": block of " + std::to_string(b.block_size) +
           (b.consecutive ? " (consecutive)" : " (INTERLEAVED)") + "\n";
  }
  out += bottom_end_ok ? "bottom end: single least support\n" : "bottom end: VIOLATED\n";
  out += top_end_ok ? "top end: single greatest support\n" : "top end: VIOLATED\n";
  return out;
}

DenseProfileReport dense_profile_check(const OrderTerm& t, const GapRegistry& reg,
                                       const std::vector<Pos>& points,
                                       const std::vector<std::string>& gap_names,
                                       std::size_t budget) {
  if (!t.contains_eta()) throw InvalidPosition("dense profile needs a term with e content");
  DenseProfileReport report;
  std::vector<Support> universe = enumerate_supports(t, reg, budget);
  auto consecutive = [&](const std::vector<Support>& block) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      for (const auto& s : universe) {
        if (support_compare(t, block[i], s) == Ord::LT &&
            support_compare(t, s, block[i + 1]) == Ord::LT)
          return false;
      }
    }
    return true;
  };
  for (const auto& p : points) {
    std::vector<Support> block = local_contribution(t, Locus{p});
    report.blocks.push_back(
        DenseBlockReport{"elem:" + pos_to_string(p), block.size(), consecutive(block)});
  }
  auto path = unique_eta_sum_path(t);
  for (const auto& name : gap_names) {
    auto spec = reg.find(name);
    if (!spec || !path) throw InvalidPosition("cannot resolve gap '" + name + "' in this term");
    Cut g = lift_cut_along_sum_path(t, *path, Cut::reg(spec));
    std::vector<Support> block = local_contribution(t, Locus{g});
    report.blocks.push_back(DenseBlockReport{"gap:" + name, block.size(), consecutive(block)});
  }
  Support bottom = Support::right_half(bottom_cut(t));
  Support top = Support::left_half(top_cut(t));
  report.bottom_end_ok = true;
  report.top_end_ok = true;
  for (const auto& s : universe) {
    if (support_compare(t, bottom, s) == Ord::GT) report.bottom_end_ok = false;
    if (support_compare(t, top, s) == Ord::LT) report.top_end_ok = false;
  }
  return report;
}

}  // namespace uxl
