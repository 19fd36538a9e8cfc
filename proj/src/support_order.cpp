#include "uxl/support_order.hpp"

#include "uxl/error.hpp"

namespace uxl {

SupportKey support_key(const OrderTerm& t, const Support& s) {
  switch (s.kind()) {
    case Support::Kind::Point:
      return SupportKey{CompletionPos::elem(s.pos()), 0};
    case Support::Kind::LeftHalf:
      return SupportKey{cut_sup_pos(t, s.cut()), -1};
    case Support::Kind::RightHalf:
      return SupportKey{cut_inf_pos(t, s.cut()), +1};
  }
  throw Error("support_key: corrupt support");
}

CmpResult support_compare_checked(const OrderTerm& t, const Support& a, const Support& b) {
  SupportKey ka = support_key(t, a);
  SupportKey kb = support_key(t, b);
  CmpResult byPos = completion_compare_checked(t, ka.pos, kb.pos);
  if (byPos.ord != Ord::EQ) return byPos;
  Ord byTag = ka.tag < kb.tag ? Ord::LT : (ka.tag > kb.tag ? Ord::GT : Ord::EQ);
  return CmpResult{byTag, byPos.verified};
}

Ord support_compare(const OrderTerm& t, const Support& a, const Support& b) {
  return support_compare_checked(t, a, b).ord;
}

}  // namespace uxl
