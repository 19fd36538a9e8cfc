#include "uxl/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>

#include "uxl/error.hpp"

namespace uxl {

std::string rat_to_string(const Rat& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::optional<Rat> rat_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parse_ll = [](const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtoll(s.c_str(), &end, 10);
    return errno == 0 && end == s.c_str() + s.size();
  };
  auto slash = text.find('/');
  long long num = 0, den = 1;
  if (slash == std::string::npos) {
    if (!parse_ll(text, num)) return std::nullopt;
  } else {
    if (!parse_ll(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_ll(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rat(num, den);
}

namespace {

struct Frac128 {
  __int128 num;
  __int128 den;  // > 0
};

}  // namespace

std::optional<Rat> stern_brocot_between(const std::function<bool(const Rat&)>& lo_blocks,
                                        const std::function<bool(const Rat&)>& hi_blocks,
                                        int max_depth) {
  // Extended Stern-Brocot tree over all of Q: bounds start at -1/0 and 1/0.
  Frac128 left{-1, 0}, right{1, 0};
  if (max_depth > 80) max_depth = 80;  // keeps mediants within long long
  for (int depth = 0; depth < max_depth; ++depth) {
    Frac128 mid{left.num + right.num, left.den + right.den};
    if (mid.den == 0) mid = Frac128{0, 1};  // tree root: both bounds are infinite
    Rat q(static_cast<long long>(mid.num), static_cast<long long>(mid.den));
    if (lo_blocks(q)) {
      left = mid;
    } else if (hi_blocks(q)) {
      right = mid;
    } else {
      return q;
    }
  }
  return std::nullopt;
}

Rat dyadic_sample(std::size_t index) {
  if (index == 0) return Rat(0);
  if (index == 1) return Rat(1);
  // Level k >= 1 holds the 2^k odd-numerator dyadics p/2^k in [0, 2).
  std::size_t base = 2;
  std::uint64_t level = 1;
  for (;; ++level) {
    std::uint64_t count = 1ull << level;
    if (index < base + count) {
      std::uint64_t offset = index - base;
      return Rat(static_cast<long long>(2 * offset + 1), static_cast<long long>(1ull << level));
    }
    base += count;
  }
}

namespace {

bool below_sqrt_of(const Rat& q, unsigned radicand) {
  if (q.numerator() < 0) return true;
  unsigned __int128 p = static_cast<unsigned __int128>(q.numerator());
  unsigned __int128 d = static_cast<unsigned __int128>(q.denominator());
  return p * p < static_cast<unsigned __int128>(radicand) * d * d;
}

}  // namespace

bool below_sqrt2(const Rat& q) { return below_sqrt_of(q, 2); }
bool below_sqrt3(const Rat& q) { return below_sqrt_of(q, 3); }

bool below_e_minus_2(const Rat& q) {
  using boost::multiprecision::cpp_int;
  if (q.numerator() <= 0) return true;
  if (q >= Rat(1)) return false;
  // e - 2 = [0; 1, 2, 1, 1, 4, 1, 1, 6, ...]: a_{3k+2} = 2(k+1), others 1.
  auto cf_term = [](std::size_t i) -> cpp_int {
    if (i == 0) return 0;
    if (i >= 2 && (i - 2) % 3 == 0) return 2 * ((i - 2) / 3 + 1);
    return 1;
  };
  cpp_int h_prev = 1, h = 0;  // h_{-1}, h_0 with a_0 = 0
  cpp_int k_prev = 0, k = 1;
  cpp_int qn = q.numerator(), qd = q.denominator();
  for (std::size_t i = 1;; ++i) {
    cpp_int a = cf_term(i);
    cpp_int h_next = a * h + h_prev;
    cpp_int k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    // Odd-indexed convergents exceed e-2, even-indexed ones fall below it.
    int cmp = (qn * k < h * qd) ? -1 : (qn * k > h * qd ? 1 : 0);
    bool conv_above = (i % 2 == 1);
    if (conv_above) {
      if (cmp >= 0) return false;  // q >= an upper convergent
    } else {
      if (cmp <= 0) return true;  // q <= a lower convergent
    }
    // Once the bracket is tighter than 1/(2 den(q)^2), an undecided q would
    // have to be a convergent itself and would have compared equal above.
    if (k_prev * k > 2 * qd * qd) {
      // q lies strictly between the final brackets: impossible.
      break;
    }
  }
  throw Error("below_e_minus_2: undecidable input (unreachable)");
}

}  // namespace uxl
