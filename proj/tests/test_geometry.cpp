#include <bit>

#include "doctest.h"
#include "rs12/fixtures.hpp"
#include "rs12/geometry.hpp"
#include "rs12/search.hpp"

using namespace rs12;

TEST_CASE("rank-one loci of the fixed blocks") {
    auto B1 = fixtures::b1();
    auto scroll = geom::rank1_locus(B1);
    auto hs = scroll.hilbert();
    CHECK(hs.proj_dim == 2);
    CHECK(hs.degree == 3);
    CHECK(poly::is_smooth(scroll, 2).verdict == poly::Smoothness::Smooth);

    auto A1 = fixtures::a1(1);
    auto curve = geom::rank1_locus(A1);
    auto hc = curve.hilbert();
    CHECK(hc.proj_dim == 1);
    CHECK(hc.degree == 4);
    CHECK(poly::is_smooth(curve, 1).verdict == poly::Smoothness::Smooth);
}

TEST_CASE("the degenerate linear block gives a cone over a twisted cubic") {
    Field F(5);
    ExtAlg E(F);
    EMatrix B1bad(F, FreeEModule{{0, 0, 0}}, FreeEModule{{1, 1}});
    B1bad.set(0, 0, E.gen(0));
    B1bad.set(0, 1, E.gen(1));
    B1bad.set(1, 0, E.gen(1));
    B1bad.set(1, 1, E.gen(2));
    B1bad.set(2, 0, E.gen(2));
    B1bad.set(2, 1, E.gen(3));
    auto cone = geom::rank1_locus(B1bad);
    auto h = cone.hilbert();
    CHECK(h.proj_dim == 2);
    CHECK(h.degree == 3);
    auto rep = poly::is_smooth(cone, 2);
    CHECK(rep.verdict == poly::Smoothness::NotSmooth);
}

TEST_CASE("disjointness over F5, intersection over F3") {
    auto CA = geom::rank1_locus(fixtures::a1(1));
    auto SB = geom::rank1_locus(fixtures::b1(5));
    CHECK(geom::disjoint(CA, SB));
    CHECK_FALSE(geom::disjoint(CA, CA));

    auto CA3 = geom::rank1_locus(fixtures::a1_f3());
    auto SB3 = geom::rank1_locus(fixtures::b1(3));
    CHECK_FALSE(geom::disjoint(CA3, SB3));
}

TEST_CASE("intersection counts match the rank invariants") {
    // r = 120 - N for the first listed linear block, and 7 over F_3
    auto cnt = geom::zazb_intersection(fixtures::a1(1), fixtures::b1(5));
    CHECK(cnt.finite);
    CHECK(cnt.methods_agree);
    CHECK(cnt.r == 6);  // N = 114
    auto cnt3 = geom::zazb_intersection(fixtures::a1_f3(), fixtures::b1(3));
    CHECK(cnt3.finite);
    CHECK(cnt3.methods_agree);
    CHECK(cnt3.r == 7);  // N = 113
}

TEST_CASE("planted columns force shared Veronese points") {
    Field F(5);
    Rng rng(42);
    auto B1 = fixtures::b1(5);
    auto A1 = search::planted_A1(F, rng, 2);
    auto en = geom::enumerate_intersection(A1, B1);
    CHECK(en.distinct_leq3 >= 2);
}

TEST_CASE("pluecker relations vanish on random points of both Veronese images") {
    Field F(5);
    ExtAlg E(F);
    Rng rng(5);
    auto A1 = fixtures::a1(1);
    auto B1 = fixtures::b1(5);
    for (int t = 0; t < 50; ++t) {
        // a random point of the 3-fold image: wedge of a random column combo
        ExtElem f = E.zero(), g = E.zero();
        for (int c = 0; c < 4; ++c) {
            Field::Elem l = rng.elem(F);
            f = E.add(f, E.scale(l, A1.at(0, c)));
            g = E.add(g, E.scale(l, A1.at(1, c)));
        }
        ExtElem w = E.wedge(f, g);
        if (w.is_zero()) continue;
        CHECK(E.wedge(w, w).is_zero());  // the Pluecker quadrics on G(2,5)
        // and of the surface image
        ExtElem h = E.zero(), k = E.zero();
        for (int r = 0; r < 3; ++r) {
            Field::Elem m = rng.elem(F);
            h = E.add(h, E.scale(m, B1.at(r, 0)));
            k = E.add(k, E.scale(m, B1.at(r, 1)));
        }
        ExtElem w2 = E.wedge(h, k);
        if (!w2.is_zero()) CHECK(E.wedge(w2, w2).is_zero());
    }
}

TEST_CASE("lemma bounds hold on the fixtures") {
    auto rep = geom::lemma_bounds_check(fixtures::a1(1), fixtures::b1(5));
    CHECK(rep.N == 114);
    CHECK(rep.r == 6);
    CHECK(rep.finite);
    CHECK(rep.c1_smooth);
    CHECK(rep.c2_disjoint);
    CHECK(rep.upper_bound_ok);
    CHECK(rep.six_point_bound_ok);

    auto rep3 = geom::lemma_bounds_check(fixtures::a1_f3(), fixtures::b1(3));
    CHECK(rep3.N == 113);
    CHECK(rep3.r == 7);
    CHECK(rep3.upper_bound_ok);       // 113 <= 120 - 7
    CHECK_FALSE(rep3.c2_disjoint);    // the six-point bound does not apply
    CHECK(rep3.six_point_bound_ok);
}
