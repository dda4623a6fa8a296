#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "tkt/diagram.hpp"
#include "tkt/errors.hpp"

using tkt::CrossingTuple;
using tkt::LinkDiagram;

namespace {

const char* kTrefoilPd = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";

// relabel arcs by a pseudo-random permutation and shuffle crossing order
LinkDiagram relabeled(const LinkDiagram& d, unsigned long long seed) {
  unsigned long long state = seed * 2654435761ull + 1;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<int> perm(d.arc_count());
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = d.arc_count() - 1; i > 0; --i)
    std::swap(perm[i], perm[next() % (i + 1)]);
  std::vector<CrossingTuple> xs = d.crossings();
  for (auto& t : xs)
    for (int s = 0; s < 4; ++s) t[s] = perm[t[s] - 1];
  for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i)
    std::swap(xs[i], xs[next() % (i + 1)]);
  return LinkDiagram::make(std::move(xs), d.unknot_components());
}

}  // namespace

TEST_CASE("pd parsing") {
  LinkDiagram u = LinkDiagram::parse_pd("PD[];U=1");
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(u.canonical_key() == "U1");

  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(t.arc_count() == 6);

  // whitespace-insensitive
  CHECK(LinkDiagram::parse_pd(" PD[ X(1,4,2,5), X(3,6,4,1),\nX(5,2,6,3) ] ")
            .canonical_key() == t.canonical_key());

  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD[X(1,4,2,5),X(3,6,4,1)]"),
                  tkt::ValidationError);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD[X(1,4,2)]"), tkt::ParseError);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD[]"), tkt::ValidationError);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD[];U=1;X"), tkt::ParseError);
  // an arc forced to run in two directions
  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD[X(1,3,2,4),X(1,4,2,3)]"),
                  tkt::ValidationError);

  CHECK(LinkDiagram::parse_pd(t.to_pd()).canonical_key() == t.canonical_key());
}

TEST_CASE("writhe and signs") {
  CHECK(LinkDiagram::unknot().writhe() == 0);
  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  CHECK(t.writhe() == 3);
  for (int x = 0; x < 3; ++x) CHECK(t.sign(x) == 1);

  // positive and negative kinks
  CHECK(LinkDiagram::parse_pd("PD[X(1,2,2,1)]").writhe() == 1);
  CHECK(LinkDiagram::parse_pd("PD[X(1,1,2,2)]").writhe() == -1);
}

TEST_CASE("mirroring") {
  LinkDiagram u = LinkDiagram::unknot();
  CHECK(u.mirrored().canonical_key() == u.canonical_key());

  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  LinkDiagram m = t.mirrored();
  CHECK(m.writhe() == -3);
  CHECK(m.component_count() == 1);
  CHECK(m.crossing_count() == 3);
  CHECK(m.canonical_key() != t.canonical_key());
  CHECK(m.mirrored().canonical_key() == t.canonical_key());
}

TEST_CASE("disjoint union") {
  LinkDiagram u = LinkDiagram::unknot();
  LinkDiagram uu = disjoint_union(u, u);
  CHECK(uu.component_count() == 2);
  CHECK(uu.crossing_count() == 0);

  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  LinkDiagram tu = disjoint_union(t, u);
  CHECK(tu.component_count() == 2);
  CHECK(tu.crossing_count() == 3);

  LinkDiagram a = disjoint_union(disjoint_union(t, u), t);
  LinkDiagram b = disjoint_union(t, disjoint_union(u, t));
  CHECK(a.canonical_key() == b.canonical_key());
}

TEST_CASE("components partition the arcs") {
  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  auto [r, assign] = components(t);
  CHECK(r == 1);
  for (int a = 1; a <= t.arc_count(); ++a) CHECK(assign[a] == 0);

  LinkDiagram two = disjoint_union(t, t);
  auto [r2, assign2] = components(two);
  CHECK(r2 == 2);
  int comp_of_first = assign2[1];
  bool saw_other = false;
  for (int a = 1; a <= two.arc_count(); ++a)
    if (assign2[a] != comp_of_first) saw_other = true;
  CHECK(saw_other);
}

TEST_CASE("simplification") {
  // one-kink unknot
  LinkDiagram kink = LinkDiagram::parse_pd("PD[X(1,2,2,1)]");
  LinkDiagram s = kink.simplified();
  CHECK(s.crossing_count() == 0);
  CHECK(s.component_count() == 1);

  // double kink
  LinkDiagram kk = LinkDiagram::parse_pd("PD[X(1,2,2,3),X(3,4,4,1)]");
  CHECK(kk.writhe() == 2);
  CHECK(kk.simplified().crossing_count() == 0);
  CHECK(kk.simplified().component_count() == 1);

  // the trefoil admits no R1/R2 move
  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  CHECK(t.simplified().canonical_key() == t.canonical_key());

  // component count survives simplification
  LinkDiagram tu = disjoint_union(t, kink);
  LinkDiagram tu_s = tu.simplified();
  CHECK(tu_s.component_count() == tu.component_count());
  CHECK(tu_s.crossing_count() == 3);
}

TEST_CASE("canonical keys are relabeling-invariant") {
  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  for (unsigned long long seed = 1; seed <= 25; ++seed)
    CHECK(relabeled(t, seed).canonical_key() == t.canonical_key());

  LinkDiagram tt = disjoint_union(t, t.mirrored());
  for (unsigned long long seed = 1; seed <= 10; ++seed)
    CHECK(relabeled(tt, seed).canonical_key() == tt.canonical_key());

  CHECK(LinkDiagram::unknot().canonical_key() == "U1");
}

TEST_CASE("a component that never passes under still orients") {
  // a circle lying entirely over an unknotted strand
  LinkDiagram d = LinkDiagram::parse_pd("PD[X(2,3,1,4),X(1,3,2,4)]");
  CHECK(d.component_count() == 2);
  CHECK(d.canonical_key() ==
        LinkDiagram::parse_pd("PD[X(2,3,1,4),X(1,3,2,4)]").canonical_key());
  LinkDiagram s = d.simplified();
  CHECK(s.crossing_count() == 0);
  CHECK(s.component_count() == 2);
}

TEST_CASE("switch and smooth surgeries") {
  LinkDiagram t = LinkDiagram::parse_pd(kTrefoilPd);
  LinkDiagram sw = t.switched(0);
  CHECK(sw.writhe() == 1);
  CHECK(sw.component_count() == 1);
  // switching a crossing of the trefoil unknots it
  CHECK(sw.simplified().crossing_count() == 0);

  LinkDiagram sm = t.smoothed(0);
  CHECK(sm.crossing_count() == 2);
  CHECK(sm.component_count() == 2);  // smoothing a knot crossing splits it

  // smoothing a kink frees a circle
  LinkDiagram kink = LinkDiagram::parse_pd("PD[X(1,2,2,1)]");
  LinkDiagram smk = kink.smoothed(0);
  CHECK(smk.crossing_count() == 0);
  CHECK(smk.component_count() == 2);
}
