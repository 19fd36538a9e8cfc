#ifndef UXL_RATIONAL_HPP
#define UXL_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace uxl {

using Rat = boost::rational<long long>;

std::string rat_to_string(const Rat& q);

// Parses "p", "-p", "p/q"; returns nullopt on malformed input or q == 0.
std::optional<Rat> rat_from_string(const std::string& text);

// A decidable cut of Q: below(q) is true iff q lies under the cut. Registered
// gap predicates must be monotone and have witnesses on both sides.
using RatCutPred = std::function<bool(const Rat&)>;

// Stern-Brocot descent: a rational strictly above `lo` and strictly below `hi`,
// where each argument is "is q on my low side" / "is q on my high side" style
// predicate: lo_below(q) true iff q <= the lo cut (q is not a valid witness),
// hi_above(q) true iff q >= the hi cut. Returns nullopt once the tree depth
// budget is exhausted (only possible if the cuts touch or are extensionally
// equal).
std::optional<Rat> stern_brocot_between(const std::function<bool(const Rat&)>& lo_blocks,
                                        const std::function<bool(const Rat&)>& hi_blocks,
                                        int max_depth = 128);

// Deterministic dense sample of Q used by ladders and probes:
// 0, 1, 1/2, 3/2, 1/4, 3/4, 5/4, 7/4, 1/8, ... (dyadics in [0,2)).
Rat dyadic_sample(std::size_t index);

// q < sqrt(2), q < sqrt(3): overflow-safe sign tests.
bool below_sqrt2(const Rat& q);
bool below_sqrt3(const Rat& q);
// q < e - 2, decided via continued-fraction convergents of e.
bool below_e_minus_2(const Rat& q);

}  // namespace uxl

#endif
