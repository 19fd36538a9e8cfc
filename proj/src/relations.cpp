#include "uxl/relations.hpp"

#include "uxl/error.hpp"

namespace uxl {

namespace {

// Theorem-style case split shared by all four relations: direction picks the
// support-order side, strictness adds the principal diagonal.
bool ext_rel_impl(const OrderTerm& t, bool forward, bool strict, const UltraToken& u,
                  const UltraToken& v) {
  Ord cmp = support_compare(t, u.support, v.support);
  if (cmp == (forward ? Ord::LT : Ord::GT)) return true;
  if (cmp == Ord::EQ) {
    Support::Kind side = forward ? Support::Kind::LeftHalf : Support::Kind::RightHalf;
    if (u.support.kind() == side) return true;  // reflexive side of the half-cut
    if (!strict && u.support.is_point() && u == v) return true;
  }
  return false;
}

}  // namespace

bool ext_rel(const OrderTerm& t, SegRel rel, const UltraToken& u, const UltraToken& v) {
  switch (rel) {
    case SegRel::LT:
      return ext_rel_impl(t, true, true, u, v);
    case SegRel::LE:
      return ext_rel_impl(t, true, false, u, v);
    case SegRel::GT:
      return ext_rel_impl(t, false, true, u, v);
    case SegRel::GE:
      return ext_rel_impl(t, false, false, u, v);
  }
  throw Error("ext_rel: corrupt relation");
}

bool tri_leq(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return ext_rel(t, SegRel::LE, u, v) || ext_rel(t, SegRel::GE, v, u);
}

bool equiv(const OrderTerm& t, const UltraToken& u, const UltraToken& v) {
  return tri_leq(t, u, v) && tri_leq(t, v, u);
}

ReflexivityKind reflexivity_kind(const UltraToken& u) {
  switch (u.support.kind()) {
    case Support::Kind::LeftHalf:
      return ReflexivityKind::LtReflexive;
    case Support::Kind::RightHalf:
      return ReflexivityKind::GtReflexive;
    case Support::Kind::Point:
      return ReflexivityKind::Principal;
  }
  throw Error("reflexivity_kind: corrupt support");
}

}  // namespace uxl
