#include "mcg/registry.hpp"

namespace mcg {

// Chain curves c1..c5 carry the classes B1, A1, B1+B2, A2, B2 and the loops of
// the standard presentation <a1,b1,a2,b2 | [a1,b1][a2,b2]>.  Non-chain
// curves of the three lanterns get the classes forced by the lantern
// transvection identities; delta, h and hbar are the separating members.
// Interior curves of a lantern are disjoint from its boundary curves and meet
// each other twice; pairs not listed are unknown.
std::string_view Registry::standard_text() {
  return R"(# genus-2 surface curve registry
[curves]
c1 nonsep (h1: 0 1 0 0) [pi1: b1]
c2 nonsep (h1: 1 0 0 0) [pi1: a1]
c3 nonsep (h1: 0 1 0 1) [pi1: b1 b2]
c4 nonsep (h1: 0 0 1 0) [pi1: a2]
c5 nonsep (h1: 0 0 0 1) [pi1: b2]
delta sep (h1: 0 0 0 0)
x nonsep (h1: 0 1 0 -1)
kbar nonsep (h1: 0 2 0 1)
hbar sep (h1: 0 0 0 0)
k nonsep (h1: 0 1 0 2)
h sep (h1: 0 0 0 0)
[intersections]
c1 c2 1
c1 c3 0
c1 c4 0
c1 c5 0
c2 c3 1
c2 c4 0
c2 c5 0
c3 c4 1
c3 c5 0
c4 c5 1
c1 delta 0
c1 x 0
c5 delta 0
c5 x 0
c3 delta 2
c3 x 2
delta x 2
c1 kbar 0
c1 hbar 0
c3 kbar 0
c3 hbar 0
c5 kbar 2
c5 hbar 2
kbar hbar 2
c3 k 0
c3 h 0
c5 k 0
c5 h 0
c1 k 2
c1 h 2
k h 2
[lanterns]
L1: c5 c5 c1 c1 -> c3 delta x
L2: c1 c1 c3 c3 -> kbar hbar c5
L3: c3 c3 c5 c5 -> c1 k h
)";
}

const Registry& Registry::standard() {
  static const Registry reg = Registry::parse(standard_text());
  return reg;
}

}  // namespace mcg
