#include "doctest.h"
#include "oracles.hpp"
#include "rs12/ff.hpp"

using namespace rs12;

TEST_CASE("rref of the identity and of zero") {
    Field F(5);
    auto id = FMatrix::identity(F, 3);
    auto [R, piv] = id.rref();
    CHECK(R == id);
    CHECK(piv == std::vector<size_t>{0, 1, 2});

    FMatrix z(F, 2, 4);
    auto rz = z.rref();
    CHECK(rz.R == z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
    for (uint32_t p : {3u, 5u}) {
        Field F(p);
        Rng rng(42 + p);
        for (int trial = 0; trial < 50; ++trial) {
            size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
            FMatrix M(F, r, c);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) M.at(i, j) = rng.elem(F);
            auto rr = M.rref();
            auto rr2 = rr.R.rref();
            CHECK(rr2.R == rr.R);
            CHECK(rr2.pivots == rr.pivots);
            CHECK(M.rank() + M.kernel_basis().size() == c);
            // kernel vectors really are in the kernel
            for (const auto& v : M.kernel_basis()) {
                auto w = M.mul_vec(v);
                for (auto x : w) CHECK(F.is_zero(x));
            }
        }
    }
}

TEST_CASE("kernel of full-rank square matrices is trivial (rank-by-minors oracle)") {
    Field F(5);
    Rng rng(7);
    int found = 0;
    while (found < 25) {
        size_t n = 2 + rng.below(3);  // 2..4
        FMatrix M(F, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) M.at(i, j) = rng.elem(F);
        size_t oracle = oracles::rank_by_minors(M);
        CHECK(M.rank() == oracle);
        if (oracle == n) {
            CHECK(M.kernel_basis().empty());
            ++found;
        }
    }
}

TEST_CASE("solve: identity, zero system, and substitution oracle") {
    Field F(5);
    auto id = FMatrix::identity(F, 4);
    std::vector<Field::Elem> b{1, 4, 2, 3};
    CHECK(id.solve(b).value() == b);

    FMatrix z(F, 3, 3);
    std::vector<Field::Elem> zero3(3, 0);
    CHECK(z.solve(zero3).value() == zero3);
    CHECK_FALSE(z.solve({1, 0, 0}).has_value());

    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        FMatrix M(F, 2, 2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) M.at(i, j) = rng.elem(F);
        std::vector<Field::Elem> rhs{rng.elem(F), rng.elem(F)};
        auto x = M.solve(rhs);
        if (!x) continue;
        auto back = M.mul_vec(*x);
        CHECK(back == rhs);
    }
}

TEST_CASE("extension fields: construction, inverses, Frobenius additivity") {
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
        Field F(p, k);
        uint64_t q = 1;
        for (uint32_t i = 0; i < k; ++i) q *= p;
        CHECK(F.q() == q);
        Rng rng(100 * p + k);
        for (int t = 0; t < 200; ++t) {
            auto a = rng.elem(F), b = rng.elem(F);
            // Frobenius is additive and fixes the prime field
            CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
            if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
        CHECK(F.frobenius(F.from_int(2)) == F.from_int(2));
        // x^(q) == x for all x (enumeration coverage)
        for (uint64_t i = 0; i < F.q(); ++i) {
            auto x = F.nth(i);
            CHECK(F.pow(x, F.q()) == x);
            CHECK(F.index(x) == i);
        }
    }
}

TEST_CASE("reducible modulus is rejected") {
    // t^2 - 1 = (t-1)(t+1) over F_5
    CHECK_THROWS(Field(5, 2, {4, 0, 0}));
}

TEST_CASE("extension-field rref agrees with rank over random small matrices") {
    Field F(5, 2);
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        size_t n = 2 + rng.below(3);
        FMatrix M(F, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) M.at(i, j) = rng.elem(F);
        CHECK(M.rank() == oracles::rank_by_minors(M));
        CHECK(M.rank() + M.kernel_basis().size() == n);
    }
}

TEST_CASE("rng child streams are deterministic") {
    Rng a = Rng::child(99, 3), b = Rng::child(99, 3), c = Rng::child(99, 4);
    CHECK(a.next() == b.next());
    CHECK(a.next() == b.next());
    CHECK(Rng::child(99, 3).next() != c.next());
}
