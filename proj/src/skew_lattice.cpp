#include "uxl/skew_lattice.hpp"

#include <algorithm>

#include <json.hpp>

#include "uxl/error.hpp"

namespace uxl {

UltraToken ext_min(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return (ext_rel(t, SegRel::LE, u, v) || u == v) ? u : v;
}

UltraToken ext_max(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return (ext_rel(t, SegRel::LE, u, v) || u == v) ? v : u;
}

bool d_related(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return ext_min(t, ext_min(t, u, v), u) == u && ext_min(t, ext_min(t, v, u), v) == v;
}

ClassKind equiv_class_kind(const UltraToken& u) {
  switch (u.support.kind()) {
    case Support::Kind::Point:
      return ClassKind::Singleton;
    case Support::Kind::LeftHalf:
      return ClassKind::MinLeftZero;
    case Support::Kind::RightHalf:
      return ClassKind::MinRightZero;
  }
  throw Error("equiv_class_kind: corrupt support");
}

bool LawReport::all_passed() const {
  for (const auto& law : laws)
    if (law.status == LawStatus::Fail) return false;
  return true;
}

namespace {

const char* status_name(LawStatus s) {
  switch (s) {
    case LawStatus::Pass:
      return "pass";
    case LawStatus::Fail:
      return "fail";
    case LawStatus::Vacuous:
      return "vacuous";
  }
  return "?";
}

constexpr std::size_t kMaxStoredCounterexamples = 8;

struct LawChecker {
  const OrderTerm& t;
  const std::vector<UltraToken>& u;
  const BinaryOp& fmin;
  const BinaryOp& fmax;
  LawReport& report;

  std::string tok(const UltraToken& x) const { return token_to_string(t, x); }

  void finish(LawOutcome& law, bool vacuous = false) {
    std::sort(law.counterexamples.begin(), law.counterexamples.end());
    if (!law.counterexamples.empty())
      law.status = LawStatus::Fail;
    else
      law.status = vacuous ? LawStatus::Vacuous : LawStatus::Pass;
    report.laws.push_back(std::move(law));
  }

  void record(LawOutcome& law, std::string cex) {
    if (law.counterexamples.size() < kMaxStoredCounterexamples)
      law.counterexamples.push_back(std::move(cex));
  }

  template <typename F>
  void binary_law(const std::string& name, F&& check) {
    LawOutcome law;
    law.law = name;
    for (const auto& x : u)
      for (const auto& y : u) {
        ++law.instances;
        if (auto cex = check(x, y)) record(law, *cex);
      }
    finish(law);
  }

  template <typename F>
  void ternary_law(const std::string& name, F&& check) {
    LawOutcome law;
    law.law = name;
    for (const auto& x : u)
      for (const auto& y : u)
        for (const auto& z : u) {
          ++law.instances;
          if (auto cex = check(x, y, z)) record(law, *cex);
        }
    finish(law);
  }

  using MaybeCex = std::optional<std::string>;

  void run() {
    auto mi = [&](const UltraToken& a, const UltraToken& b) { return fmin(t, a, b); };
    auto ma = [&](const UltraToken& a, const UltraToken& b) { return fmax(t, a, b); };

    ternary_law("associativity(min)", [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
      if (mi(mi(x, y), z) == mi(x, mi(y, z))) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
    });
    ternary_law("associativity(max)", [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
      if (ma(ma(x, y), z) == ma(x, ma(y, z))) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
    });

    {
      LawOutcome law;
      law.law = "idempotency(min)";
      for (const auto& x : u) {
        ++law.instances;
        if (!(mi(x, x) == x)) record(law, "x=" + tok(x));
      }
      finish(law);
    }
    {
      LawOutcome law;
      law.law = "idempotency(max)";
      for (const auto& x : u) {
        ++law.instances;
        if (!(ma(x, x) == x)) record(law, "x=" + tok(x));
      }
      finish(law);
    }

    binary_law("absorption(min-max)", [&](const auto& x, const auto& y) -> MaybeCex {
      if (mi(x, ma(x, y)) == x) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y);
    });
    binary_law("absorption(max-min)", [&](const auto& x, const auto& y) -> MaybeCex {
      if (ma(x, mi(x, y)) == x) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y);
    });
    binary_law("absorption(min-max,right)", [&](const auto& x, const auto& y) -> MaybeCex {
      if (mi(ma(x, y), y) == y) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y);
    });
    binary_law("absorption(max-min,right)", [&](const auto& x, const auto& y) -> MaybeCex {
      if (ma(mi(x, y), y) == y) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y);
    });

    ternary_law("distributivity(min-over-max,left)",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  if (mi(x, ma(y, z)) == ma(mi(x, y), mi(x, z))) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });
    ternary_law("distributivity(max-over-min,left)",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  if (ma(x, mi(y, z)) == mi(ma(x, y), ma(x, z))) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });
    ternary_law("distributivity(min-over-max,right)",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  if (mi(ma(x, y), z) == ma(mi(x, z), mi(y, z))) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });
    ternary_law("distributivity(max-over-min,right)",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  if (ma(mi(x, y), z) == mi(ma(x, z), ma(y, z))) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });

    // The conjugated (sandwiched) forms hold even where the one-sided
    // identities break on same-support pairs.
    ternary_law("distributivity(sandwiched,min)",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  UltraToken lhs = mi(mi(x, ma(y, z)), x);
                  UltraToken rhs = ma(mi(mi(x, y), x), mi(mi(x, z), x));
                  if (lhs == rhs) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });
    ternary_law("distributivity(sandwiched,max)",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  UltraToken lhs = ma(ma(x, mi(y, z)), x);
                  UltraToken rhs = mi(ma(ma(x, y), x), ma(ma(x, z), x));
                  if (lhs == rhs) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });

    binary_law("quasi-triviality(min)", [&](const auto& x, const auto& y) -> MaybeCex {
      UltraToken r = mi(x, y);
      if (r == x || r == y) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y) + " min=" + tok(r);
    });
    binary_law("quasi-triviality(max)", [&](const auto& x, const auto& y) -> MaybeCex {
      UltraToken r = ma(x, y);
      if (r == x || r == y) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y) + " max=" + tok(r);
    });

    binary_law("min-max-duality", [&](const auto& x, const auto& y) -> MaybeCex {
      if ((mi(x, y) == x) == (ma(x, y) == y)) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y);
    });

    // Noncommuting pairs are exactly the distinct same-support pairs.
    {
      LawOutcome law;
      law.law = "commutativity-failure-set";
      bool any_shared_support = false;
      for (const auto& x : u)
        for (const auto& y : u) {
          ++law.instances;
          bool expected = !(x == y) && support_compare(t, x.support, y.support) == Ord::EQ;
          if (expected) any_shared_support = true;
          bool min_fails = !(mi(x, y) == mi(y, x));
          bool max_fails = !(ma(x, y) == ma(y, x));
          if (min_fails != expected)
            record(law, "min x=" + tok(x) + " y=" + tok(y) + (expected ? " commutes" : " differs"));
          if (max_fails != expected)
            record(law, "max x=" + tok(x) + " y=" + tok(y) + (expected ? " commutes" : " differs"));
        }
      finish(law, !any_shared_support);
    }

    binary_law("d-equals-equiv", [&](const auto& x, const auto& y) -> MaybeCex {
      bool d = mi(mi(x, y), x) == x && mi(mi(y, x), y) == y;
      if (d == equiv(t, x, y)) return std::nullopt;
      return "x=" + tok(x) + " y=" + tok(y) + (d ? " D without equiv" : " equiv without D");
    });

    // Each class is a left-zero band for one operation and right-zero for the
    // other, by the side of its support.
    {
      LawOutcome law;
      law.law = "rectangular-classes";
      for (const auto& x : u)
        for (const auto& y : u) {
          if (!(support_compare(t, x.support, y.support) == Ord::EQ)) continue;
          ++law.instances;
          bool ok = true;
          switch (equiv_class_kind(x)) {
            case ClassKind::Singleton:
              ok = mi(x, y) == x && ma(x, y) == x;
              break;
            case ClassKind::MinLeftZero:
              ok = mi(x, y) == x && ma(x, y) == y;
              break;
            case ClassKind::MinRightZero:
              ok = mi(x, y) == y && ma(x, y) == x;
              break;
          }
          if (!ok) record(law, "x=" + tok(x) + " y=" + tok(y));
        }
      finish(law);
    }

    // Transitivity degeneracies: the two mixed case splits collapse onto the
    // principal diagonal.
    ternary_law("degenerate-mixed-cases",
                [&](const auto& x, const auto& y, const auto& z) -> MaybeCex {
                  auto le = [&](const UltraToken& a, const UltraToken& b) {
                    return ext_rel(t, SegRel::LE, a, b);
                  };
                  auto ge = [&](const UltraToken& a, const UltraToken& b) {
                    return ext_rel(t, SegRel::GE, a, b);
                  };
                  bool case3 = le(x, y) && ge(x, z) && le(y, z);
                  bool case6 = ge(x, y) && le(x, z) && ge(y, z);
                  if (!case3 && !case6) return std::nullopt;
                  if (x == y && y == z && x.support.is_point()) return std::nullopt;
                  return "x=" + tok(x) + " y=" + tok(y) + " z=" + tok(z);
                });

    {
      LawOutcome law;
      law.law = "quotient-iso";
      law.instances = u.size() * u.size();
      try {
        QuotientLattice q = quotient_lattice(t, u, fmin, fmax);
        if (!q.isomorphic_to_support_lattice)
          record(law, "induced class operations disagree with the support lattice");
      } catch (const CongruenceViolation& e) {
        record(law, e.what());
      }
      finish(law);
    }
  }
};

}  // namespace

LawReport check_axioms(const OrderTerm& t, const std::vector<UltraToken>& universe,
                       const BinaryOp& min_op, const BinaryOp& max_op) {
  if (universe.empty()) throw EmptyUniverse();
  LawReport report;
  report.universe_size = universe.size();
  LawChecker checker{t, universe, min_op, max_op, report};
  checker.run();
  return report;
}

QuotientLattice quotient_lattice(const OrderTerm& t, const std::vector<UltraToken>& universe,
                                 const BinaryOp& min_op, const BinaryOp& max_op) {
  if (universe.empty()) throw EmptyUniverse();
  QuotientLattice q;
  for (const auto& tok : universe) {
    bool placed = false;
    for (auto& cls : q.classes) {
      if (support_compare(t, cls.support, tok.support) == Ord::EQ) {
        cls.members.push_back(tok);
        placed = true;
        break;
      }
    }
    if (!placed) q.classes.push_back(QuotientClass{tok.support, {tok}, equiv_class_kind(tok)});
  }
  std::sort(q.classes.begin(), q.classes.end(), [&](const QuotientClass& a, const QuotientClass& b) {
    return support_compare(t, a.support, b.support) == Ord::LT;
  });
  auto class_of = [&](const UltraToken& tok) -> std::size_t {
    for (std::size_t i = 0; i < q.classes.size(); ++i)
      if (support_compare(t, q.classes[i].support, tok.support) == Ord::EQ) return i;
    throw CongruenceViolation("operation left the token universe's support set");
  };
  std::size_t n = q.classes.size();
  q.min_table.assign(n, std::vector<std::size_t>(n, 0));
  q.max_table.assign(n, std::vector<std::size_t>(n, 0));
  q.isomorphic_to_support_lattice = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::size_t> min_class, max_class;
      for (const auto& a : q.classes[i].members) {
        for (const auto& b : q.classes[j].members) {
          std::size_t mc = class_of(min_op(t, a, b));
          std::size_t xc = class_of(max_op(t, a, b));
          if (!min_class) min_class = mc;
          if (!max_class) max_class = xc;
          if (*min_class != mc || *max_class != xc)
            throw CongruenceViolation("induced operation depends on the representative");
        }
      }
      q.min_table[i][j] = *min_class;
      q.max_table[i][j] = *max_class;
      std::size_t expect_min = (i <= j) ? i : j;
      std::size_t expect_max = (i <= j) ? j : i;
      if (q.min_table[i][j] != expect_min || q.max_table[i][j] != expect_max)
        q.isomorphic_to_support_lattice = false;
    }
  }
  return q;
}

std::string LawReport::to_text() const {
  std::string out = "universe size " + std::to_string(universe_size) + "\n";
  for (const auto& law : laws) {
    out += law.law;
    out += ": ";
    out += status_name(law.status);
    out += " (" + std::to_string(law.instances) + " instances";
    if (!law.counterexamples.empty())
      out += ", e.g. " + law.counterexamples.front();
    out += ")\n";
  }
  return out;
}

std::string LawReport::to_json() const {
  nlohmann::json j;
  j["universe_size"] = universe_size;
  auto& laws_json = j["laws"];
  laws_json = nlohmann::json::array();
  for (const auto& law : laws) {
    nlohmann::json lj;
    lj["law"] = law.law;
    lj["status"] = status_name(law.status);
    lj["instances"] = law.instances;
    lj["counterexamples"] = law.counterexamples;
    laws_json.push_back(std::move(lj));
  }
  return j.dump(2);
}

std::string QuotientLattice::to_text() const {
  std::string out = std::to_string(classes.size()) + " class(es)\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out += "  [" + std::to_string(i) + "] size " + std::to_string(classes[i].members.size());
    switch (classes[i].kind) {
      case ClassKind::Singleton:
        out += " singleton";
        break;
      case ClassKind::MinLeftZero:
        out += " left-zero for min";
        break;
      case ClassKind::MinRightZero:
        out += " right-zero for min";
        break;
    }
    out += "\n";
  }
  out += isomorphic_to_support_lattice ? "quotient = support lattice\n"
                                       : "quotient DIFFERS from support lattice\n";
  return out;
}

}  // namespace uxl
