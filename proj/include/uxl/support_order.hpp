#ifndef UXL_SUPPORT_ORDER_HPP
#define UXL_SUPPORT_ORDER_HPP

#include "uxl/support.hpp"

namespace uxl {

// (sup I, -1) for a left half, (point, 0) for a point, (inf J, +1) for a right
// half. Lexicographic key order realizes the natural order of supports cell by
// cell; the map is injective on valid supports of one term.
struct SupportKey {
  CompletionPos pos;
  int tag = 0;  // -1 / 0 / +1
};

SupportKey support_key(const OrderTerm& t, const Support& s);

CmpResult support_compare_checked(const OrderTerm& t, const Support& a, const Support& b);
Ord support_compare(const OrderTerm& t, const Support& a, const Support& b);

}  // namespace uxl

#endif
