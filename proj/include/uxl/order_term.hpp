#ifndef UXL_ORDER_TERM_HPP
#define UXL_ORDER_TERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace uxl {

// Symbolic linear order type. Prod is antilexicographic: Prod(inner, outer)
// means "outer-many copies of inner", so Prod(Fin(2), Omega) = 2*w = w and
// Prod(Omega, Fin(2)) = w*2 = w + w.
class OrderTerm {
 public:
  enum class Kind { Fin, Omega, OmegaStar, Zeta, Eta, Sum, Prod };

  static OrderTerm fin(std::uint64_t n);
  static OrderTerm omega();
  static OrderTerm omega_star();
  static OrderTerm zeta();
  static OrderTerm eta();
  static OrderTerm sum(std::vector<OrderTerm> parts);
  static OrderTerm prod(OrderTerm inner, OrderTerm outer);

  Kind kind() const { return kind_; }
  std::uint64_t fin_size() const { return fin_size_; }

  // Sum parts, or {inner, outer} for Prod.
  const std::vector<OrderTerm>& parts() const { return parts_; }
  const OrderTerm& part(std::size_t i) const { return parts_[i]; }
  std::size_t arity() const { return parts_.size(); }
  const OrderTerm& inner() const { return parts_[0]; }
  const OrderTerm& outer() const { return parts_[1]; }

  bool operator==(const OrderTerm& other) const;
  bool operator!=(const OrderTerm& other) const { return !(*this == other); }

  bool is_empty() const { return kind_ == Kind::Fin && fin_size_ == 0; }
  bool contains_eta() const;

 private:
  OrderTerm(Kind k, std::uint64_t n, std::vector<OrderTerm> parts)
      : kind_(k), fin_size_(n), parts_(std::move(parts)) {}

  Kind kind_;
  std::uint64_t fin_size_ = 0;
  std::vector<OrderTerm> parts_;
};

// Grammar: t ::= <nat> | w | w* | z | e | t + t | t * t | (t)
// '*' immediately after 'w' (no whitespace) lexes as the w* constant; the
// product operator needs separation, e.g. "w * 2" or "(w)*2".
// Throws SyntaxError. No normalization is applied.
OrderTerm parse_order_term(const std::string& text);

std::string to_string(const OrderTerm& t);

// Confluent rewriting to the canonical form of the supported fragment:
// sums flatten, Fin(0) drops, Prod(a,Fin(n)) unrolls, finite factors and
// finite summands absorb into w / w* per the antilex conventions
// (2w = w, w2 = w + w).
OrderTerm normalize_term(const OrderTerm& t);

// Structural end queries (on the term as written, no normalization).
bool term_has_least(const OrderTerm& t);
bool term_has_greatest(const OrderTerm& t);

// True iff prefixing finitely many points is an order isomorphism
// (the term starts with an w-style block), resp. the dual.
bool omega_led(const OrderTerm& t);
bool omega_star_tailed(const OrderTerm& t);

}  // namespace uxl

#endif
