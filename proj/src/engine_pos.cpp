#include <cctype>

#include "uxl/engine.hpp"
#include "uxl/error.hpp"

namespace uxl {

Pos Pos::nat(std::uint64_t k) {
  Pos p;
  p.kind_ = Kind::Nat;
  p.nat_ = k;
  return p;
}

Pos Pos::star(std::uint64_t k) {
  Pos p;
  p.kind_ = Kind::Star;
  p.nat_ = k;
  return p;
}

Pos Pos::integer(std::int64_t k) {
  Pos p;
  p.kind_ = Kind::Int;
  p.int_ = k;
  return p;
}

Pos Pos::rational(const Rat& q) {
  Pos p;
  p.kind_ = Kind::Rational;
  p.rat_ = q;
  return p;
}

Pos Pos::sum_part(std::size_t part, Pos sub) {
  Pos p;
  p.kind_ = Kind::SumPart;
  p.part_ = part;
  p.sub_ = std::make_shared<const Pos>(std::move(sub));
  return p;
}

Pos Pos::prod_pair(Pos inner, Pos outer) {
  Pos p;
  p.kind_ = Kind::ProdPair;
  p.sub_ = std::make_shared<const Pos>(std::move(inner));
  p.outer_ = std::make_shared<const Pos>(std::move(outer));
  return p;
}

bool Pos::operator==(const Pos& other) const { return pos_compare(*this, other) == Ord::EQ; }

namespace {

template <typename T>
Ord cmp3(const T& a, const T& b) {
  if (a < b) return Ord::LT;
  if (b < a) return Ord::GT;
  return Ord::EQ;
}

}  // namespace

Ord pos_compare(const Pos& a, const Pos& b) {
  if (a.kind() != b.kind()) throw InvalidPosition("comparing positions of different shapes");
  switch (a.kind()) {
    case Pos::Kind::Nat:
      return cmp3(a.nat_index(), b.nat_index());
    case Pos::Kind::Star:
      return cmp3(b.star_index(), a.star_index());  // k-th from the top
    case Pos::Kind::Int:
      return cmp3(a.int_value(), b.int_value());
    case Pos::Kind::Rational:
      return cmp3(a.rat_value(), b.rat_value());
    case Pos::Kind::SumPart: {
      Ord byPart = cmp3(a.part_index(), b.part_index());
      if (byPart != Ord::EQ) return byPart;
      return pos_compare(a.sub(), b.sub());
    }
    case Pos::Kind::ProdPair: {
      Ord byOuter = pos_compare(a.outer(), b.outer());  // antilex
      if (byOuter != Ord::EQ) return byOuter;
      return pos_compare(a.inner(), b.inner());
    }
  }
  throw InvalidPosition("corrupt position");
}

void validate_position(const OrderTerm& t, const Pos& p) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      if (p.kind() != Pos::Kind::Nat || p.nat_index() >= t.fin_size())
        throw InvalidPosition("position out of range for finite order");
      return;
    case OrderTerm::Kind::Omega:
      if (p.kind() != Pos::Kind::Nat) throw InvalidPosition("w position must be a natural index");
      return;
    case OrderTerm::Kind::OmegaStar:
      if (p.kind() != Pos::Kind::Star) throw InvalidPosition("w* position must be a top-index k*");
      return;
    case OrderTerm::Kind::Zeta:
      if (p.kind() != Pos::Kind::Int) throw InvalidPosition("z position must be an integer");
      return;
    case OrderTerm::Kind::Eta:
      if (p.kind() != Pos::Kind::Rational) throw InvalidPosition("e position must be a rational");
      return;
    case OrderTerm::Kind::Sum:
      if (p.kind() != Pos::Kind::SumPart || p.part_index() >= t.arity())
        throw InvalidPosition("sum position must be (part, sub) within range");
      validate_position(t.part(p.part_index()), p.sub());
      return;
    case OrderTerm::Kind::Prod:
      if (p.kind() != Pos::Kind::ProdPair)
        throw InvalidPosition("product position must be (inner, outer)");
      validate_position(t.inner(), p.inner());
      validate_position(t.outer(), p.outer());
      return;
  }
}

std::string pos_to_string(const Pos& p) {
  switch (p.kind()) {
    case Pos::Kind::Nat:
      return std::to_string(p.nat_index());
    case Pos::Kind::Star:
      return std::to_string(p.star_index()) + "*";
    case Pos::Kind::Int:
      return std::to_string(p.int_value());
    case Pos::Kind::Rational:
      return rat_to_string(p.rat_value());
    case Pos::Kind::SumPart:
      return std::to_string(p.part_index()) + "." + pos_to_string(p.sub());
    case Pos::Kind::ProdPair:
      return "(" + pos_to_string(p.inner()) + "," + pos_to_string(p.outer()) + ")";
  }
  return "?";
}

namespace {

struct PosParser {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, i); }

  char peek() const { return i < s.size() ? s[i] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "' in position literal");
    ++i;
  }

  std::uint64_t parse_nat() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    return v;
  }

  std::int64_t parse_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    }
    std::uint64_t v = parse_nat();
    return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  }

  Rat parse_rat() {
    long long num = parse_int();
    if (peek() == '/') {
      ++i;
      std::uint64_t den = parse_nat();
      if (den == 0) fail("zero denominator");
      return Rat(num, static_cast<long long>(den));
    }
    return Rat(num);
  }

  Pos parse(const OrderTerm& t) {
    switch (t.kind()) {
      case OrderTerm::Kind::Fin:
      case OrderTerm::Kind::Omega:
        return Pos::nat(parse_nat());
      case OrderTerm::Kind::OmegaStar: {
        std::uint64_t k = parse_nat();
        expect('*');
        return Pos::star(k);
      }
      case OrderTerm::Kind::Zeta:
        return Pos::integer(parse_int());
      case OrderTerm::Kind::Eta:
        return Pos::rational(parse_rat());
      case OrderTerm::Kind::Sum: {
        std::uint64_t part = parse_nat();
        expect('.');
        if (part >= t.arity()) fail("sum part index out of range");
        return Pos::sum_part(part, parse(t.part(part)));
      }
      case OrderTerm::Kind::Prod: {
        expect('(');
        Pos in = parse(t.inner());
        expect(',');
        Pos out = parse(t.outer());
        expect(')');
        return Pos::prod_pair(std::move(in), std::move(out));
      }
    }
    fail("unsupported term shape");
  }
};

}  // namespace

Pos parse_position(const OrderTerm& t, const std::string& text) {
  PosParser p{text};
  Pos result = p.parse(t);
  if (p.i != text.size()) throw SyntaxError("trailing input in position literal", p.i);
  validate_position(t, result);
  return result;
}

// --------------------------------------------------------------------------
// Gap registry
// --------------------------------------------------------------------------

GapRegistry GapRegistry::standard() {
  GapRegistry reg;
  reg.register_gap("sqrt2", [](const Rat& q) { return below_sqrt2(q); });
  reg.register_gap("sqrt3", [](const Rat& q) { return below_sqrt3(q); });
  reg.register_gap("e_minus_2", [](const Rat& q) { return below_e_minus_2(q); });
  return reg;
}

void GapRegistry::register_gap(const std::string& name, RatCutPred below) {
  if (name.empty()) throw ConfigError("gap name must be nonempty");
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw ConfigError("gap name must be alphanumeric/underscore: " + name);
  // Probe for witnesses on both sides and spot-check monotonicity.
  bool seen_below = false, seen_above = false;
  std::vector<Rat> probes;
  for (int k = 0; k <= 8; ++k) {
    probes.push_back(Rat(k));
    probes.push_back(Rat(-k));
    probes.push_back(Rat(2 * k + 1, 2));
    probes.push_back(Rat(2 * k + 1, 3));
    probes.push_back(Rat(-(2 * k + 1), 2));
  }
  for (std::size_t idx = 0; idx < 64; ++idx) probes.push_back(dyadic_sample(idx));
  for (const Rat& q : probes) (below(q) ? seen_below : seen_above) = true;
  if (!seen_below || !seen_above)
    throw ConfigError("gap predicate '" + name + "' needs witnesses on both sides");
  for (const Rat& a : probes)
    for (const Rat& b : probes)
      if (a < b && below(b) && !below(a))
        throw ConfigError("gap predicate '" + name + "' is not monotone");
  auto spec = std::make_shared<GapSpec>();
  spec->name = name;
  spec->below = std::move(below);
  gaps_[name] = std::move(spec);
}

std::shared_ptr<const GapSpec> GapRegistry::find(const std::string& name) const {
  auto it = gaps_.find(name);
  return it == gaps_.end() ? nullptr : it->second;
}

std::vector<std::shared_ptr<const GapSpec>> GapRegistry::all() const {
  std::vector<std::shared_ptr<const GapSpec>> out;
  for (const auto& [name, spec] : gaps_) out.push_back(spec);
  return out;
}

}  // namespace uxl
