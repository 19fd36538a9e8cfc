#ifndef UXL_RELATIONS_HPP
#define UXL_RELATIONS_HPP

#include "uxl/support_order.hpp"

namespace uxl {

// Closed form of the extended relations: u <~ v iff supp(u) < supp(v) or both
// supports are the same left half; u <=~ v additionally on the principal
// diagonal; >~ and >=~ dually. One implementation parameterized by direction
// and strictness keeps the case split auditable.
bool ext_rel(const OrderTerm& t, SegRel rel, const UltraToken& u, const UltraToken& v);

// The amalgam u <=~ v or v >=~ u: a linear pre-order whose quotient is the
// support order.
bool tri_leq(const OrderTerm& t, const UltraToken& u, const UltraToken& v);
bool equiv(const OrderTerm& t, const UltraToken& u, const UltraToken& v);

enum class ReflexivityKind { LtReflexive, GtReflexive, Principal };

ReflexivityKind reflexivity_kind(const UltraToken& u);

}  // namespace uxl

#endif
