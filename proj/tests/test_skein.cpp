#include <doctest.h>

#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "tkt/errors.hpp"
#include "tkt/skein.hpp"

using tkt::LaurentPoly2;
using tkt::LinkDiagram;
using tkt::SkeinEngine;

TEST_CASE("axioms: unknot and split unlinks") {
  SkeinEngine engine;
  CHECK(engine.homfly(fx::unknot()) == LaurentPoly2::one());
  CHECK(engine.homfly(LinkDiagram::parse_pd("PD[];U=2")) ==
        LaurentPoly2::delta());
  CHECK(engine.homfly(LinkDiagram::parse_pd("PD[];U=3")) ==
        LaurentPoly2::delta_power(2));
  // a kinked unknot next to a free circle
  CHECK(engine.homfly(LinkDiagram::parse_pd("PD[X(1,2,2,1)];U=1")) ==
        LaurentPoly2::delta());
}

TEST_CASE("frozen small links") {
  SkeinEngine engine;
  CHECK(engine.homfly(fx::trefoil_pd()) == fx::trefoil_poly());
  CHECK(engine.homfly(fx::braid_closure(2, {1, 1, 1})) == fx::trefoil_poly());
  CHECK(engine.homfly(fx::braid_closure(3, {1, 2, 1, 2})) ==
        fx::trefoil_poly());
  CHECK(engine.homfly(fx::hopf()) == fx::hopf_poly());

  // the figure-eight is amphichiral
  LaurentPoly2 f8 = engine.homfly(fx::fig8());
  CHECK(f8 == f8.invert_l());
  CHECK(tkt::ell_degrees(f8) == std::pair<int, int>{2, -2});
}

TEST_CASE("the meridian link fixture reproduces its frozen polynomial") {
  SkeinEngine engine;
  tkt::LinkDiagram link = fx::fig8_meridian_link();
  CHECK(link.component_count() == 2);
  CHECK(engine.homfly(link) == fx::fig8_meridian_poly());
  CHECK(tkt::ell_degrees(fx::fig8_meridian_poly()) ==
        std::pair<int, int>{5, -1});
}

TEST_CASE("skein relation holds at every crossing of every fixture") {
  SkeinEngine engine;
  for (const LinkDiagram& d : fx::property_fixtures()) {
    LaurentPoly2 pd = engine.homfly(d);
    for (int x = 0; x < d.crossing_count(); ++x) {
      LaurentPoly2 p_switch = engine.homfly(d.switched(x));
      LaurentPoly2 p_smooth = engine.homfly(d.smoothed(x));
      LaurentPoly2 lhs;
      if (d.sign(x) > 0) {
        // l P(d) + l^-1 P(switched) + m P(smoothed)
        lhs = pd.shifted(1, 0) + p_switch.shifted(-1, 0) +
              p_smooth.shifted(0, 1);
      } else {
        lhs = p_switch.shifted(1, 0) + pd.shifted(-1, 0) +
              p_smooth.shifted(0, 1);
      }
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("mirror substitution and union multiplicativity") {
  SkeinEngine engine;
  for (const LinkDiagram& d : fx::property_fixtures()) {
    CHECK(engine.homfly(d.mirrored()) == engine.homfly(d).invert_l());
  }
  LaurentPoly2 pt = engine.homfly(fx::trefoil_pd());
  LaurentPoly2 ph = engine.homfly(fx::hopf());
  CHECK(engine.homfly(disjoint_union(fx::trefoil_pd(), fx::hopf())) ==
        LaurentPoly2::delta() * pt * ph);
}

TEST_CASE("simplification is invisible to the polynomial") {
  SkeinEngine plain;
  SkeinEngine raw(SkeinEngine::Options{.node_cap = 10000000,
                                       .use_simplify = false});
  for (const LinkDiagram& d : fx::property_fixtures()) {
    LinkDiagram s = d.simplified();
    CHECK(s.crossing_count() <= d.crossing_count());
    CHECK(s.component_count() == d.component_count());
    CHECK(plain.homfly(s) == plain.homfly(d));
    if (d.crossing_count() <= 5) CHECK(raw.homfly(d) == plain.homfly(d));
  }
}

TEST_CASE("random braid closures satisfy the global checks") {
  SkeinEngine engine;
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 24; ++trial) {
    int strands = 2 + static_cast<int>(next() % 3);
    int len = 4 + static_cast<int>(next() % 6);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(next() % (strands - 1));
      word.push_back(next() % 2 ? g : -g);
    }
    LinkDiagram d = fx::braid_closure(strands, word);
    CHECK(engine.jones_check(d).matches);
    CHECK(engine.homfly(d.mirrored()) == engine.homfly(d).invert_l());
    // skein relation at one crossing of each sample
    if (d.crossing_count() > 0) {
      int x = static_cast<int>(next() % d.crossing_count());
      LaurentPoly2 pd = engine.homfly(d);
      LaurentPoly2 psw = engine.homfly(d.switched(x));
      LaurentPoly2 psm = engine.homfly(d.smoothed(x));
      LaurentPoly2 lhs =
          d.sign(x) > 0
              ? pd.shifted(1, 0) + psw.shifted(-1, 0) + psm.shifted(0, 1)
              : psw.shifted(1, 0) + pd.shifted(-1, 0) + psm.shifted(0, 1);
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("node cap reports instead of truncating") {
  SkeinEngine tiny(SkeinEngine::Options{.node_cap = 1, .use_simplify = true});
  CHECK_THROWS_AS(tiny.homfly(fx::trefoil_pd()), tkt::ResourceCapError);
}

TEST_CASE("jones specialization equals (-2)^(r-1)") {
  SkeinEngine engine;
  for (const LinkDiagram& d : fx::property_fixtures()) {
    auto res = engine.jones_check(d);
    CHECK(res.matches);
    CHECK(res.components == d.component_count());
  }
  auto u = engine.jones_check(fx::unknot());
  CHECK(u.value == tkt::GaussInt(1, 0));
  auto h = engine.jones_check(fx::hopf());
  CHECK(h.value == tkt::GaussInt(-2, 0));
}

TEST_CASE("alexander genus lower bound") {
  SkeinEngine engine;
  CHECK(tkt::alexander_genus_lb(LaurentPoly2::one()) == 0);
  CHECK(tkt::alexander_genus_lb(engine.homfly(fx::trefoil_pd())) == 1);
  CHECK(tkt::alexander_genus_lb(engine.homfly(fx::torus2(5))) == 2);
  CHECK(tkt::alexander_genus_lb(engine.homfly(fx::torus2(7))) == 3);
  CHECK(tkt::alexander_genus_lb(engine.homfly(fx::fig8())) == 1);
  // link polynomials are rejected
  CHECK_THROWS_AS(tkt::alexander_genus_lb(LaurentPoly2::delta()),
                  tkt::ValidationError);
}

TEST_CASE("twist closed form") {
  LaurentPoly2 p0 = fx::trefoil_poly();
  LaurentPoly2 pinf = fx::fig8_meridian_poly();

  CHECK(tkt::twist_closed_form(p0, pinf, 0) == p0);
  CHECK(tkt::twist_closed_form(p0, pinf, 1) ==
        p0.shifted(2, 0, -1) + pinf.shifted(1, 1, -1));
  // n = 2: l^4 P0 + (1 - l^2)(-l m) Pinf
  LaurentPoly2 n2 = p0.shifted(4, 0) +
                    (LaurentPoly2::one() - fx::mono(2, 0, 1)) *
                        pinf.shifted(1, 1, -1);
  CHECK(tkt::twist_closed_form(p0, pinf, 2) == n2);
  CHECK_THROWS_AS(tkt::twist_closed_form(p0, pinf, -1), tkt::ValidationError);

  // one-step recursion: P_n = -l^2 P_{n-1} - l m P_inf
  for (int n = 1; n <= 6; ++n) {
    CHECK(tkt::twist_closed_form(p0, pinf, n) ==
          tkt::twist_closed_form(p0, pinf, n - 1).shifted(2, 0, -1) +
              pinf.shifted(1, 1, -1));
  }
}

TEST_CASE("twist degree formula") {
  LaurentPoly2 one = LaurentPoly2::one();
  LaurentPoly2 pinf = fx::fig8_meridian_poly();  // E = 5, e = -1

  CHECK(tkt::twist_degrees(one, pinf, 3) == std::pair<int, int>{10, 0});
  CHECK(tkt::twist_degrees(one, pinf, 0) == std::pair<int, int>{4, 0});

  // hypothesis gate: E[P0] = E[Pinf] - 1
  LaurentPoly2 p4 = fx::mono(4, 0, 1);
  CHECK_THROWS_AS(tkt::twist_degrees(p4, pinf, 1), tkt::ValidationError);

  // the formula matches the exact degrees of the closed form for n >= 1
  LaurentPoly2 p0 = fx::trefoil_poly();
  for (int n = 1; n <= 5; ++n) {
    LaurentPoly2 pn = tkt::twist_closed_form(p0, pinf, n);
    CHECK(tkt::ell_degrees(pn) == tkt::twist_degrees(p0, pinf, n));
  }
}

TEST_CASE("wrap-2 degree rule verdict") {
  LaurentPoly2 one = LaurentPoly2::one();
  LaurentPoly2 pinf = fx::fig8_meridian_poly();
  CHECK(tkt::wrap2_stable_check(one, pinf).applicable);
  CHECK(tkt::wrap2_stable_check(one, pinf).stable_braid_index == 1);
  CHECK(tkt::wrap2_stable_check(one, pinf).stable_crossing == 2);
  CHECK(tkt::wrap2_stable_check(one, one).applicable);  // 0 != -1
  CHECK_FALSE(tkt::wrap2_stable_check(fx::mono(4, 0, 1), pinf).applicable);
}

TEST_CASE("memo table is safe to share between threads") {
  SkeinEngine engine;
  std::vector<LinkDiagram> ds = fx::property_fixtures();
  std::vector<LaurentPoly2> expected;
  for (const auto& d : ds) expected.push_back(SkeinEngine().homfly(d));

  std::vector<std::thread> threads;
  std::vector<int> failures(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < ds.size(); ++i)
        if (engine.homfly(ds[i]) != expected[i]) ++failures[t];
    });
  }
  for (auto& th : threads) th.join();
  for (int f : failures) CHECK(f == 0);
}

TEST_CASE("engine statistics accumulate") {
  SkeinEngine engine;
  engine.homfly(fx::trefoil_pd());
  auto s1 = engine.stats();
  CHECK(s1.nodes > 0);
  engine.homfly(fx::trefoil_pd());
  auto s2 = engine.stats();
  CHECK(s2.memo_hits > s1.memo_hits);  // the root is served from the memo
}
