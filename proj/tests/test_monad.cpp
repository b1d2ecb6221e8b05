#include "doctest.h"
#include "rs12/fixtures.hpp"
#include "rs12/monad.hpp"

using namespace rs12;

TEST_CASE("euler characteristics and the expected cohomology table") {
    CHECK(chi_ideal_sheaf(5) == 5);
    CHECK(chi_ideal_sheaf(-1) == -13);
    CHECK(chi_ideal_sheaf(2) == 2);   // 15 - 13
    CHECK(chi_ideal_sheaf(6) == 29);  // 210 - 181
    CHECK(chi_ideal_sheaf(7) == 77);  // 330 - 253
    auto t = NaturalCohomologyTable::expected();
    CHECK(t.h(3, -1) == 13);
    CHECK(t.h(2, 1) == 4);
    CHECK(t.h(2, 2) == 2);
    CHECK(t.h(1, 3) == 2);
    CHECK(t.h(1, 4) == 3);
    CHECK(t.h(0, 5) == 5);
    CHECK(t.h(0, 4) == 0);
    // at most one nonzero row per column, alternating sum = chi
    for (int j = -1; j <= 5; ++j) {
        long alt = 0;
        int nonzero = 0;
        for (int i = 0; i <= 4; ++i) {
            long v = t.h(i, j);
            if (v) ++nonzero;
            alt += (i % 2 == 0 ? v : -v);
        }
        CHECK(nonzero <= 1);
        CHECK(alt == chi_ideal_sheaf(j));
    }
}

TEST_CASE("the fixture B is accepted and determines A_B") {
    auto B = fixtures::b_f5();
    auto cls = classify_B(B);
    CHECK(cls.accepted());
    CHECK(cls.a1 == 5);
    CHECK(cls.a2 == 0);
    auto A = build_AB(B);
    CHECK(A.source().twists == std::vector<int>{3, 3, 3, 3});
    CHECK(B.compose(A).is_zero());
    // linear rows, quadratic rows
    for (size_t c = 0; c < 4; ++c) {
        for (size_t r = 0; r < 2; ++r) CHECK((A.at(r, c).is_zero() || A.at(r, c).word == 1));
        for (size_t r = 2; r < 4; ++r) CHECK((A.at(r, c).is_zero() || A.at(r, c).word == 2));
    }
    auto rep = check_AB(A);
    CHECK(rep.ok);
    CHECK(rep.observed == std::map<int, long>{{5, 13}});
}

TEST_CASE("a B failing the shape gate is rejected with the observed table") {
    Field F(5);
    Rng rng(99);
    // a random B: overwhelmingly not of the required resolution shape
    auto B2 = EMatrix::random(F, FreeEModule{{0, 0, 0}}, FreeEModule{{2, 2}}, rng);
    auto B = hcat(B2, fixtures::b1());
    auto cls = classify_B(B);
    REQUIRE_FALSE(cls.accepted());
    CHECK_THROWS_AS(build_AB(B), BettiShapeError);
}

TEST_CASE("random homogeneous 4-column matrices fail the syzygy gate") {
    Field F(5);
    Rng rng(123);
    int checked = 0;
    while (checked < 3) {
        auto A = EMatrix::random(F, FreeEModule{{2, 2, 1, 1}}, FreeEModule{{3, 3, 3, 3}}, rng);
        auto rep = check_AB(A);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.observed.empty());
        ++checked;
    }
}

TEST_CASE("exact window to the left of the fixture monad") {
    auto B = fixtures::b_f5();
    auto A = build_AB(B);
    Monad m(A, B);
    auto win = tate_left_window(m, 2);
    REQUIRE(win.size() == 3);
    CHECK(win[0] == std::map<int, long>{{3, 4}});
    CHECK(win[1] == std::map<int, long>{{5, 13}});
    CHECK(win[1] == expected_tate_step(1));
    CHECK(win[2] == expected_tate_step(2));
    CHECK(expected_tate_step(2) == std::map<int, long>{{6, 37}});
}

TEST_CASE("build_AB output is stable under kernel-basis changes up to GL4") {
    // randomizing the choice of the four twist-3 generators only composes
    // A_B with an automorphism of 4E(3); B o A_B stays zero and the section
    // homology is literally the same subquotient
    Field F(5);
    auto B = fixtures::b_f5();
    auto A = build_AB(B);
    Rng rng(7);
    ExtAlg E(F);
    // A' = A o g for random invertible constant g
    FMatrix g(F, 4, 4);
    do {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) g.at(i, j) = rng.elem(F);
    } while (g.rank() < 4);
    EMatrix gmat(F, A.source(), A.source());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) gmat.set(i, j, E.unit(g.at(i, j)));
    auto A2 = A.compose(gmat);
    CHECK(B.compose(A2).is_zero());
    Bott bott(F);
    MonadSections s1(bott, Monad(A, B));
    MonadSections s2(bott, Monad(A2, B));
    for (int k = 1; k <= 2; ++k) CHECK(s1.homology_dim(k) == s2.homology_dim(k));
    // identical subspaces of S_5
    auto q1 = s1.forms(1), q2 = s2.forms(1);
    REQUIRE(q1.size() == q2.size());
    for (size_t i = 0; i < q1.size(); ++i)
        CHECK(poly::p_str(F, q1[i]) == poly::p_str(F, q2[i]));
}

TEST_CASE("homology sections of the fixture monad: 5 quintics, 29 sextics, 77 septics") {
    Field F(5);
    auto B = fixtures::b_f5();
    auto A = build_AB(B);
    Monad m(A, B);
    Bott bott(F);
    MonadSections sec(bott, m);
    CHECK(sec.section_chi(1) == 5);
    CHECK(sec.section_chi(2) == 29);
    CHECK(sec.section_chi(3) == 77);
    CHECK(sec.homology_dim(1) == 5);
    CHECK(sec.homology_dim(2) == 29);
    CHECK(sec.homology_dim(3) == 77);
    CHECK(sec.psi_solution_dim() == 211);  // 1 + 3 * dim S_4
    CHECK(sec.psi_action_dim() == 1);
    CHECK(sec.forms(1).size() == 5);
    for (const auto& f : sec.forms(1)) CHECK(f.deg() == 5);
    CHECK(sec.forms(2).size() == 29);
    CHECK(sec.forms(3).size() == 77);
}
