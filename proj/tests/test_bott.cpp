#include "doctest.h"
#include "rs12/bott.hpp"
#include "rs12/fixtures.hpp"
#include "rs12/monad.hpp"

using namespace rs12;

TEST_CASE("section-space dimensions match the closed formula") {
    Field F(5);
    Bott bott(F);
    CHECK(Bott::h0(3, 4) == 5);
    CHECK(Bott::h0(2, 3) == 10);
    CHECK(Bott::h0(1, 2) == 10);
    CHECK(Bott::h0(2, 4) == 45);
    CHECK(Bott::h0(1, 3) == 40);
    CHECK(Bott::h0(3, 5) == 24);
    // the formula is re-verified against an explicit Koszul-kernel rank by
    // the sections() constructor itself
    CHECK(bott.sections(3, 1).dim() == 5);
    CHECK(bott.sections(2, 1).dim() == 10);
    CHECK(bott.sections(1, 1).dim() == 10);
    CHECK(bott.sections(2, 2).dim() == 45);
    CHECK(bott.sections(1, 2).dim() == 40);
    CHECK(bott.sections(3, 2).dim() == 24);
    // no sections at offset zero
    for (int i = 1; i <= 4; ++i) CHECK(bott.sections(i, 0).dim() == 0);
    CHECK(bott.sections(0, 2).dim() == 15);
}

TEST_CASE("contraction images satisfy the target Koszul relation") {
    Field F(5);
    Bott bott(F);
    ExtAlg E(F);
    // exhaustive over the basis of wedge^3 W (x) S_1 and generators of V:
    // the contraction of a section stays a section
    const SectionSpace& src = bott.sections(3, 1);
    for (const auto& b : src.basis) {
        for (int j = 0; j < kVars; ++j) {
            auto img = bott.contract_ambient(E.gen(j), 3, 1, b);
            CHECK_NOTHROW(bott.sections(2, 1).coords_of(F, img));
        }
        // and by a wedge-square element
        auto img2 = bott.contract_ambient(E.parse("e_{13}-2e_{02}"), 3, 1, b);
        CHECK_NOTHROW(bott.sections(1, 1).coords_of(F, img2));
    }
}

TEST_CASE("induced map of the fixture B at offset 1 has rank 15 and kernel 25") {
    Field F(5);
    Bott bott(F);
    auto B = fixtures::b_f5();
    auto M = bott.induced_map(B, 1);
    CHECK(M.rows() == 15);
    CHECK(M.cols() == 40);
    CHECK(M.rank() == 15);
    CHECK(M.cols() - M.rank() == 25);
}

TEST_CASE("zero matrix induces the zero map") {
    Field F(5);
    Bott bott(F);
    EMatrix Z(F, FreeEModule{{0, 0, 0}}, FreeEModule{{2, 2, 1, 1}});
    auto M = bott.induced_map(Z, 1);
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) CHECK(F.is_zero(M.at(i, j)));
}

TEST_CASE("functoriality: induced map of a composition is the composition") {
    Field F(5);
    Bott bott(F);
    Rng rng(7);
    for (int t = 0; t < 5; ++t) {
        auto M = EMatrix::random(F, FreeEModule{{0, 1}}, FreeEModule{{2, 1}}, rng);
        auto N = EMatrix::random(F, FreeEModule{{2, 1}}, FreeEModule{{3, 3}}, rng);
        for (int k = 1; k <= 2; ++k) {
            auto lhs = bott.induced_map(M.compose(N), k);
            auto rhs = bott.induced_map(M, k).mul(bott.induced_map(N, k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("wedge pairing lands in honest polynomials") {
    Field F(5);
    Bott bott(F);
    // pair a section of Omega^1(6)-type hom space with a section of
    // Omega^3(4): result must be a well-defined quintic (the unembedding
    // itself verifies the Koszul-image identity)
    const SectionSpace& hom = bott.sections(1, 5);
    const SectionSpace& arg = bott.sections(3, 1);
    REQUIRE(hom.dim() == Bott::h0(1, 6));
    auto f = bott.pair_to_poly(1, hom.basis[0], 3, 1, arg.basis[0]);
    CHECK(f.size() == bott.monos(5).size());
}

TEST_CASE("pairing action at offset 1 is faithful on the hom space") {
    // the linear map Hom(Omega^3(3), O(4)) -> Lin(H^0(Omega^3(4)), S_5)
    // has full rank 420, so imposing composite conditions on sections at
    // offset 1 pins bundle maps exactly
    Field F(5);
    Bott bott(F);
    const SectionSpace& hom = bott.sections(1, 5);
    const SectionSpace& arg = bott.sections(3, 1);
    size_t s5 = bott.monos(5).size();
    FMatrix act(F, arg.dim() * s5, hom.dim());
    for (size_t h = 0; h < hom.dim(); ++h)
        for (size_t a = 0; a < arg.dim(); ++a) {
            auto f = bott.pair_to_poly(1, hom.basis[h], 3, 1, arg.basis[a]);
            for (size_t m = 0; m < s5; ++m) act.at(a * s5 + m, h) = f[m];
        }
    CHECK(hom.dim() == 420);
    CHECK(act.rank() == 420);
}
