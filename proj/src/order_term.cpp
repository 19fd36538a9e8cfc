#include "uxl/order_term.hpp"

#include <cctype>
#include <cstdlib>

#include "uxl/error.hpp"

namespace uxl {

OrderTerm OrderTerm::fin(std::uint64_t n) { return OrderTerm(Kind::Fin, n, {}); }
OrderTerm OrderTerm::omega() { return OrderTerm(Kind::Omega, 0, {}); }
OrderTerm OrderTerm::omega_star() { return OrderTerm(Kind::OmegaStar, 0, {}); }
OrderTerm OrderTerm::zeta() { return OrderTerm(Kind::Zeta, 0, {}); }
OrderTerm OrderTerm::eta() { return OrderTerm(Kind::Eta, 0, {}); }

OrderTerm OrderTerm::sum(std::vector<OrderTerm> parts) {
  if (parts.empty()) return fin(0);
  if (parts.size() == 1) return parts.front();
  return OrderTerm(Kind::Sum, 0, std::move(parts));
}

OrderTerm OrderTerm::prod(OrderTerm inner, OrderTerm outer) {
  std::vector<OrderTerm> ps;
  ps.push_back(std::move(inner));
  ps.push_back(std::move(outer));
  return OrderTerm(Kind::Prod, 0, std::move(ps));
}

bool OrderTerm::operator==(const OrderTerm& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Fin) return fin_size_ == other.fin_size_;
  if (parts_.size() != other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (!(parts_[i] == other.parts_[i])) return false;
  return true;
}

bool OrderTerm::contains_eta() const {
  if (kind_ == Kind::Eta) return true;
  for (const auto& p : parts_)
    if (p.contains_eta()) return true;
  return false;
}

// --------------------------------------------------------------------------
// Parsing
// --------------------------------------------------------------------------

namespace {

struct Token {
  enum class Type { Nat, Omega, OmegaStar, Zeta, Eta, Plus, Times, LParen, RParen, End };
  Type type;
  std::uint64_t value = 0;
  std::size_t offset = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t at = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::uint64_t digit = static_cast<std::uint64_t>(text[i] - '0');
        if (v > (UINT64_MAX - digit) / 10) throw SyntaxError("finite cardinality overflows", at);
        v = v * 10 + digit;
        ++i;
      }
      out.push_back({Token::Type::Nat, v, at});
    } else if (c == 'w') {
      // '*' glued to 'w' is the w* constant; a separated '*' is the product.
      if (i + 1 < text.size() && text[i + 1] == '*') {
        out.push_back({Token::Type::OmegaStar, 0, at});
        i += 2;
      } else {
        out.push_back({Token::Type::Omega, 0, at});
        ++i;
      }
    } else if (c == 'z') {
      out.push_back({Token::Type::Zeta, 0, at});
      ++i;
    } else if (c == 'e') {
      out.push_back({Token::Type::Eta, 0, at});
      ++i;
    } else if (c == '+') {
      out.push_back({Token::Type::Plus, 0, at});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::Type::Times, 0, at});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Type::LParen, 0, at});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Type::RParen, 0, at});
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
  }
  out.push_back({Token::Type::End, 0, text.size()});
  return out;
}

class TermParser {
 public:
  explicit TermParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  OrderTerm parse() {
    OrderTerm t = parse_sum();
    expect(Token::Type::End, "trailing input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  void expect(Token::Type type, const char* what) {
    if (peek().type != type) throw SyntaxError(std::string("expected ") + what, peek().offset);
    ++pos_;
  }

  OrderTerm parse_sum() {
    std::vector<OrderTerm> parts;
    parts.push_back(parse_product());
    while (peek().type == Token::Type::Plus) {
      take();
      parts.push_back(parse_product());
    }
    return OrderTerm::sum(std::move(parts));
  }

  OrderTerm parse_product() {
    OrderTerm t = parse_atom();
    while (peek().type == Token::Type::Times) {
      take();
      t = OrderTerm::prod(std::move(t), parse_atom());
    }
    return t;
  }

  OrderTerm parse_atom() {
    Token tok = take();
    switch (tok.type) {
      case Token::Type::Nat:
        return OrderTerm::fin(tok.value);
      case Token::Type::Omega:
        return OrderTerm::omega();
      case Token::Type::OmegaStar:
        return OrderTerm::omega_star();
      case Token::Type::Zeta:
        return OrderTerm::zeta();
      case Token::Type::Eta:
        return OrderTerm::eta();
      case Token::Type::LParen: {
        OrderTerm t = parse_sum();
        expect(Token::Type::RParen, "')'");
        return t;
      }
      default:
        throw SyntaxError("expected a term", tok.offset);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

OrderTerm parse_order_term(const std::string& text) { return TermParser(lex(text)).parse(); }

std::string to_string(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      return std::to_string(t.fin_size());
    case OrderTerm::Kind::Omega:
      return "w";
    case OrderTerm::Kind::OmegaStar:
      return "w*";
    case OrderTerm::Kind::Zeta:
      return "z";
    case OrderTerm::Kind::Eta:
      return "e";
    case OrderTerm::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += " + ";
        if (t.part(i).kind() == OrderTerm::Kind::Sum) {
          out += "(" + to_string(t.part(i)) + ")";
        } else {
          out += to_string(t.part(i));
        }
      }
      return out;
    }
    case OrderTerm::Kind::Prod: {
      auto factor = [](const OrderTerm& f) {
        std::string s = to_string(f);
        if (f.kind() == OrderTerm::Kind::Sum || f.kind() == OrderTerm::Kind::Prod)
          return "(" + s + ")";
        return s;
      };
      return factor(t.inner()) + " * " + factor(t.outer());
    }
  }
  return "?";
}

// --------------------------------------------------------------------------
// Structural queries
// --------------------------------------------------------------------------

bool term_has_least(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      return t.fin_size() > 0;
    case OrderTerm::Kind::Omega:
      return true;
    case OrderTerm::Kind::OmegaStar:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return false;
    case OrderTerm::Kind::Sum:
      for (const auto& p : t.parts())
        if (!p.is_empty()) return term_has_least(p);
      return false;
    case OrderTerm::Kind::Prod:
      if (t.inner().is_empty() || t.outer().is_empty()) return false;
      return term_has_least(t.inner()) && term_has_least(t.outer());
  }
  return false;
}

bool term_has_greatest(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
      return t.fin_size() > 0;
    case OrderTerm::Kind::OmegaStar:
      return true;
    case OrderTerm::Kind::Omega:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return false;
    case OrderTerm::Kind::Sum:
      for (std::size_t i = t.arity(); i-- > 0;)
        if (!t.part(i).is_empty()) return term_has_greatest(t.part(i));
      return false;
    case OrderTerm::Kind::Prod:
      if (t.inner().is_empty() || t.outer().is_empty()) return false;
      return term_has_greatest(t.inner()) && term_has_greatest(t.outer());
  }
  return false;
}

bool omega_led(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Omega:
      return true;
    case OrderTerm::Kind::Sum: {
      for (const auto& p : t.parts()) {
        if (p.is_empty()) continue;
        if (p.kind() == OrderTerm::Kind::Fin) continue;  // finite prefix folds in
        return omega_led(p);
      }
      return false;
    }
    case OrderTerm::Kind::Prod:
      return term_has_least(t.outer()) && omega_led(t.inner());
    default:
      return false;
  }
}

bool omega_star_tailed(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::OmegaStar:
      return true;
    case OrderTerm::Kind::Sum: {
      for (std::size_t i = t.arity(); i-- > 0;) {
        const auto& p = t.part(i);
        if (p.is_empty()) continue;
        if (p.kind() == OrderTerm::Kind::Fin) continue;
        return omega_star_tailed(p);
      }
      return false;
    }
    case OrderTerm::Kind::Prod:
      return term_has_greatest(t.outer()) && omega_star_tailed(t.inner());
    default:
      return false;
  }
}

// --------------------------------------------------------------------------
// Normalization
// --------------------------------------------------------------------------

namespace {

bool simplify_sum_parts(std::vector<OrderTerm>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].kind() == OrderTerm::Kind::Fin) {
      // Fin(a) + Fin(b) -> Fin(a+b)
      if (i + 1 < parts.size() && parts[i + 1].kind() == OrderTerm::Kind::Fin) {
        parts[i] = OrderTerm::fin(parts[i].fin_size() + parts[i + 1].fin_size());
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        return true;
      }
      // n + (w-led part) -> part
      if (i + 1 < parts.size() && omega_led(parts[i + 1])) {
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      // (w*-tailed part) + n -> part
      if (i > 0 && omega_star_tailed(parts[i - 1])) {
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
    }
    // X + X*w' -> X*w' when 1 + w' = w'
    if (i + 1 < parts.size() && parts[i + 1].kind() == OrderTerm::Kind::Prod &&
        parts[i + 1].inner() == parts[i] && omega_led(parts[i + 1].outer())) {
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
    // X*w'' + X -> X*w'' when w'' + 1 = w''
    if (i + 1 < parts.size() && parts[i].kind() == OrderTerm::Kind::Prod &&
        parts[i].inner() == parts[i + 1] && omega_star_tailed(parts[i].outer())) {
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return true;
    }
  }
  return false;
}

}  // namespace

OrderTerm normalize_term(const OrderTerm& t) {
  switch (t.kind()) {
    case OrderTerm::Kind::Fin:
    case OrderTerm::Kind::Omega:
    case OrderTerm::Kind::OmegaStar:
    case OrderTerm::Kind::Zeta:
    case OrderTerm::Kind::Eta:
      return t;
    case OrderTerm::Kind::Sum: {
      std::vector<OrderTerm> parts;
      for (const auto& raw : t.parts()) {
        OrderTerm p = normalize_term(raw);
        if (p.is_empty()) continue;
        if (p.kind() == OrderTerm::Kind::Sum) {
          for (auto& q : p.parts()) parts.push_back(q);
        } else {
          parts.push_back(std::move(p));
        }
      }
      while (simplify_sum_parts(parts)) {
      }
      return OrderTerm::sum(std::move(parts));
    }
    case OrderTerm::Kind::Prod: {
      OrderTerm in = normalize_term(t.inner());
      OrderTerm out = normalize_term(t.outer());
      if (in.is_empty() || out.is_empty()) return OrderTerm::fin(0);
      if (out.kind() == OrderTerm::Kind::Sum) {
        // x * (a + b) = x*a + x*b (outer-many copies split along the sum)
        std::vector<OrderTerm> parts;
        for (const auto& q : out.parts()) parts.push_back(OrderTerm::prod(in, q));
        return normalize_term(OrderTerm::sum(std::move(parts)));
      }
      if (out.kind() == OrderTerm::Kind::Fin) {
        if (out.fin_size() == 1) return in;
        std::vector<OrderTerm> parts(out.fin_size(), in);
        return normalize_term(OrderTerm::sum(std::move(parts)));
      }
      if (in.kind() == OrderTerm::Kind::Fin && in.fin_size() == 1) return out;
      if (in.kind() == OrderTerm::Kind::Prod) {
        // (a*b)*c = a*(b*c)
        return normalize_term(OrderTerm::prod(in.inner(), OrderTerm::prod(in.outer(), out)));
      }
      if (in.kind() == OrderTerm::Kind::Fin) {
        if (out.kind() == OrderTerm::Kind::Omega) return OrderTerm::omega();
        if (out.kind() == OrderTerm::Kind::OmegaStar) return OrderTerm::omega_star();
      }
      if (in.kind() == OrderTerm::Kind::Sum) {
        bool out_shifts_down =
            out.kind() == OrderTerm::Kind::Omega || out.kind() == OrderTerm::Kind::Zeta;
        bool out_shifts_up =
            out.kind() == OrderTerm::Kind::OmegaStar || out.kind() == OrderTerm::Kind::Zeta;
        const auto& ps = in.parts();
        // (A + n) * w = A * w when n + A = A; blocks renumber by a shift.
        if (out_shifts_down && ps.back().kind() == OrderTerm::Kind::Fin) {
          std::vector<OrderTerm> rest(ps.begin(), ps.end() - 1);
          OrderTerm head = OrderTerm::sum(std::move(rest));
          if (omega_led(head)) return normalize_term(OrderTerm::prod(head, out));
        }
        if (out_shifts_up && ps.front().kind() == OrderTerm::Kind::Fin) {
          std::vector<OrderTerm> rest(ps.begin() + 1, ps.end());
          OrderTerm tail = OrderTerm::sum(std::move(rest));
          if (omega_star_tailed(tail)) return normalize_term(OrderTerm::prod(tail, out));
        }
      }
      return OrderTerm::prod(std::move(in), std::move(out));
    }
  }
  return t;
}

}  // namespace uxl
