#include "rs12/search.hpp"

#include <cassert>

#include "rs12/fixtures.hpp"

namespace rs12::search {

namespace {

const std::vector<unsigned>& masks1() {
    static const std::vector<unsigned> m = ExtAlg::graded_basis(-1);
    return m;
}
const std::vector<unsigned>& masks2() {
    static const std::vector<unsigned> m = ExtAlg::graded_basis(-2);
    return m;
}
const std::vector<unsigned>& masks3() {
    static const std::vector<unsigned> m = ExtAlg::graded_basis(-3);
    return m;
}

size_t mask_pos(const std::vector<unsigned>& ms, unsigned m) {
    for (size_t i = 0; i < ms.size(); ++i)
        if (ms[i] == m) return i;
    throw std::logic_error("mask not found");
}

}  // namespace

EMatrix fixed_B1(const Field& F) { return fixtures::b1(F.p()); }

EMatrix random_B2(const Field& F, Rng& rng) {
    ExtAlg E(F);
    EMatrix B2(F, FreeEModule{{0, 0, 0}}, FreeEModule{{2, 2}});
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 2; ++c) B2.set(r, c, E.random(rng, 2));
    return B2;
}

EMatrix assemble_B(const EMatrix& B2, const EMatrix& B1) { return hcat(B2, B1); }

bool quick_filter(const EMatrix& B) {
    auto fl = B.flatten(-3);
    return fl.rows() == 30 && fl.cols() == 30 && fl.rank() == 26;
}

FMatrix build_linear_system(const EMatrix& A1, const EMatrix& B1) {
    const Field& F = A1.field();
    if (!(B1.field() == F)) throw std::invalid_argument("field mismatch");
    if (A1.rows() != 2 || A1.cols() != 4 || B1.rows() != 3 || B1.cols() != 2)
        throw std::invalid_argument("A1 must be 2x4 and B1 3x2");
    FMatrix M(F, 120, 140);
    auto acol = [&](size_t k, size_t l, size_t mi) { return (k * 4 + l) * 10 + mi; };
    auto bcol = [&](size_t i, size_t k, size_t mi) { return 80 + (i * 2 + k) * 10 + mi; };
    const auto& m2 = masks2();
    const auto& m3 = masks3();
    for (size_t i = 0; i < 3; ++i)
        for (size_t l = 0; l < 4; ++l) {
            size_t base = (i * 4 + l) * 10;
            for (size_t k = 0; k < 2; ++k) {
                // B1[i][k] ^ A2'[k][l]
                const ExtElem& b = B1.at(i, k);
                for (unsigned em = 0; em < kMasks; ++em) {
                    if (F.is_zero(b.c[em])) continue;
                    for (size_t mi = 0; mi < 10; ++mi) {
                        unsigned m = m2[mi];
                        if (em & m) continue;
                        Field::Elem v = b.c[em];
                        if (wedge_sign(em, m) < 0) v = F.neg(v);
                        size_t row = base + mask_pos(m3, em | m);
                        size_t col = acol(k, l, mi);
                        M.at(row, col) = F.add(M.at(row, col), v);
                    }
                }
                // B2'[i][k] ^ A1[k][l]
                const ExtElem& a = A1.at(k, l);
                for (size_t mi = 0; mi < 10; ++mi) {
                    unsigned m = m2[mi];
                    for (unsigned em = 0; em < kMasks; ++em) {
                        if (F.is_zero(a.c[em]) || (em & m)) continue;
                        Field::Elem v = a.c[em];
                        if (wedge_sign(m, em) < 0) v = F.neg(v);
                        size_t row = base + mask_pos(m3, m | em);
                        size_t col = bcol(i, k, mi);
                        M.at(row, col) = F.add(M.at(row, col), v);
                    }
                }
            }
        }
    return M;
}

int n_invariant(const EMatrix& A1, const EMatrix& B1) {
    return int(build_linear_system(A1, B1).rank());
}

SolutionSpace solve_system(const EMatrix& A1, const EMatrix& B1) {
    const Field& F = A1.field();
    auto M = build_linear_system(A1, B1);
    auto kb = M.kernel_basis();
    SolutionSpace out;
    out.N = int(140 - kb.size());
    RowSpan proj(F, 60);
    for (const auto& v : kb) proj.add(std::vector<Field::Elem>(v.begin() + 80, v.end()));
    out.b_basis = proj.rows();

    // B1-combination subspace: B2 = B1 o C over all 2x2 C with entries in V
    ExtAlg E(F);
    RowSpan combos(F, 60);
    for (size_t k = 0; k < 2; ++k)
        for (size_t l = 0; l < 2; ++l)
            for (int i = 0; i < kVars; ++i) {
                EMatrix C(F, FreeEModule{{1, 1}}, FreeEModule{{2, 2}});
                C.set(k, l, E.gen(i));
                combos.add(coords_from_b2(B1.compose(C)));
            }
    out.b1_combos = combos.rows();
    return out;
}

std::vector<Field::Elem> coords_from_b2(const EMatrix& B2) {
    const auto& m2 = masks2();
    std::vector<Field::Elem> v(60, 0);
    for (size_t i = 0; i < 3; ++i)
        for (size_t k = 0; k < 2; ++k) {
            const ExtElem& e = B2.at(i, k);
            if (e.is_zero()) continue;
            for (size_t mi = 0; mi < 10; ++mi) v[(i * 2 + k) * 10 + mi] = e.c[m2[mi]];
        }
    return v;
}

EMatrix b2_from_coords(const Field& F, const std::vector<Field::Elem>& coords) {
    if (coords.size() != 60) throw std::invalid_argument("need 60 coordinates");
    const auto& m2 = masks2();
    EMatrix B2(F, FreeEModule{{0, 0, 0}}, FreeEModule{{2, 2}});
    for (size_t i = 0; i < 3; ++i)
        for (size_t k = 0; k < 2; ++k) {
            ExtElem e;
            bool any = false;
            for (size_t mi = 0; mi < 10; ++mi) {
                Field::Elem x = coords[(i * 2 + k) * 10 + mi];
                if (!F.is_zero(x)) {
                    e.c[m2[mi]] = x;
                    any = true;
                }
            }
            e.word = any ? 2 : -1;
            B2.set(i, k, e);
        }
    return B2;
}

B2Sample sample_B2_from_solutions(const SolutionSpace& sol, const Field& F, Rng& rng) {
    if (sol.N >= 120)
        throw std::invalid_argument("N = 120: every solution's B-part is a B1-combination");
    RowSpan degen(F, 60);
    for (const auto& v : sol.b1_combos) degen.add(v);
    int attempts = 0;
    while (true) {
        ++attempts;
        std::vector<Field::Elem> v(60, 0);
        for (const auto& b : sol.b_basis) {
            Field::Elem c = rng.elem(F);
            if (F.is_zero(c)) continue;
            for (size_t j = 0; j < 60; ++j) v[j] = F.add(v[j], F.mul(c, b[j]));
        }
        if (degen.contains(v)) continue;  // degenerate: inside the B1-combination space
        return B2Sample{b2_from_coords(F, v), attempts, (140 - sol.N - 1) - 20};
    }
}

EMatrix random_A1(const Field& F, Rng& rng) {
    ExtAlg E(F);
    EMatrix A1(F, FreeEModule{{2, 2}}, FreeEModule{{3, 3, 3, 3}});
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 4; ++c) A1.set(r, c, E.random(rng, 1));
    return A1;
}

EMatrix planted_A1(const Field& F, Rng& rng, int planted) {
    if (planted < 0 || planted > 3) throw std::invalid_argument("planted columns must be 0..3");
    ExtAlg E(F);
    auto B1 = fixed_B1(F);
    EMatrix A1 = random_A1(F, rng);
    for (int c = 0; c < planted; ++c) {
        // random vector of the row space of B1: a pair of linear forms
        ExtElem top = E.zero(), bot = E.zero();
        for (size_t r = 0; r < 3; ++r) {
            Field::Elem co = rng.elem(F);
            top = E.add(top, E.scale(co, B1.at(r, 0)));
            bot = E.add(bot, E.scale(co, B1.at(r, 1)));
        }
        A1.set(0, c, top);
        A1.set(1, c, bot);
    }
    return A1;
}

std::optional<EMatrix> find_A1_with_N(const Field& F, int targetN, Rng& rng, int max_tries) {
    int planted = targetN == 119 ? 1 : targetN == 118 ? 2 : 0;
    auto B1 = fixed_B1(F);
    for (int t = 0; t < max_tries; ++t) {
        auto A1 = planted_A1(F, rng, planted);
        if (n_invariant(A1, B1) == targetN) return A1;
    }
    return std::nullopt;
}

std::vector<Field::Elem> v1_coords(const EMatrix& Aprime) {
    const Field& F = Aprime.field();
    std::vector<Field::Elem> v(120, 0);
    size_t off = 0;
    for (size_t r = 0; r < 4; ++r) {
        const auto& ms = r < 2 ? masks1() : masks2();
        for (size_t c = 0; c < 4; ++c) {
            const ExtElem& e = Aprime.at(r, c);
            for (size_t mi = 0; mi < ms.size(); ++mi) v[off + mi] = e.is_zero() ? F.zero() : e.c[ms[mi]];
            off += ms.size();
        }
    }
    assert(off == 120);
    return v;
}

std::vector<Field::Elem> v2_coords(const EMatrix& Bprime) {
    const Field& F = Bprime.field();
    std::vector<Field::Elem> v(90, 0);
    size_t off = 0;
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 4; ++c) {
            const auto& ms = c < 2 ? masks2() : masks1();
            const ExtElem& e = Bprime.at(r, c);
            for (size_t mi = 0; mi < ms.size(); ++mi) v[off + mi] = e.is_zero() ? F.zero() : e.c[ms[mi]];
            off += ms.size();
        }
    assert(off == 90);
    return v;
}

std::vector<Field::Elem> v3_coords(const EMatrix& P) {
    const Field& F = P.field();
    std::vector<Field::Elem> v(120, 0);
    size_t off = 0;
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 4; ++c) {
            const ExtElem& e = P.at(r, c);
            for (size_t mi = 0; mi < 10; ++mi) v[off + mi] = e.is_zero() ? F.zero() : e.c[masks3()[mi]];
            off += 10;
        }
    assert(off == 120);
    return v;
}

FMatrix dphi_matrix(const Monad& m) {
    const Field& F = m.A.field();
    ExtAlg E(F);
    FMatrix D(F, 120, 210);
    size_t col = 0;
    // V1 directions: A' elementary
    for (size_t r = 0; r < 4; ++r) {
        const auto& ms = r < 2 ? masks1() : masks2();
        for (size_t c = 0; c < 4; ++c)
            for (unsigned mask : ms) {
                EMatrix Ap(F, m.A.target(), m.A.source());
                Ap.set(r, c, E.monomial(mask, F.one()));
                auto img = v3_coords(m.B.compose(Ap));
                for (size_t i = 0; i < 120; ++i) D.at(i, col) = img[i];
                ++col;
            }
    }
    // V2 directions: B' elementary
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 4; ++c) {
            const auto& ms = c < 2 ? masks2() : masks1();
            for (unsigned mask : ms) {
                EMatrix Bp(F, m.B.target(), m.B.source());
                Bp.set(r, c, E.monomial(mask, F.one()));
                auto img = v3_coords(Bp.compose(m.A));
                for (size_t i = 0; i < 120; ++i) D.at(i, col) = img[i];
                ++col;
            }
        }
    assert(col == 210);
    return D;
}

ModuliReport tangent_dimension(const Monad& m, std::optional<int> N) {
    ModuliReport r;
    auto D = dphi_matrix(m);
    r.dim_ker_dphi = long(210 - D.rank());
    r.tangent = r.dim_ker_dphi - (r.group_dim - 1);
    r.construction1_moduli = r.tangent - kB1ParamDim;
    r.N = N;
    return r;
}

std::pair<EMatrix, EMatrix> lie_direction(const Monad& m, Rng& rng) {
    const Field& F = m.A.field();
    ExtAlg E(F);
    // Lie algebra elements: f in gl4, g in Lie(H) (block lower triangular
    // with 2x2 corners and a 2x2 V-block), h in gl3
    EMatrix f(F, m.A.source(), m.A.source());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) f.set(i, j, E.unit(rng.elem(F)));
    EMatrix g(F, m.A.target(), m.A.target());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            g.set(i, j, E.unit(rng.elem(F)));          // C block (E(2) -> E(2))
            g.set(2 + i, 2 + j, E.unit(rng.elem(F)));  // D block (E(1) -> E(1))
            g.set(2 + i, j, E.random(rng, 1));         // v block (E(2) -> E(1))
        }
    EMatrix h(F, m.B.target(), m.B.target());
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) h.set(i, j, E.unit(rng.elem(F)));

    // d/dt of (g A f^{-1}, h B g^{-1}) at identity: (gA - Af, hB - Bg)
    auto neg = [&](EMatrix M) {
        EMatrix r(F, M.target(), M.source());
        for (size_t i = 0; i < M.rows(); ++i)
            for (size_t j = 0; j < M.cols(); ++j) {
                ExtElem e = M.at(i, j);
                if (!e.is_zero())
                    for (auto& c : e.c) c = F.neg(c);
                r.set(i, j, e);
            }
        return r;
    };
    auto add = [&](const EMatrix& X, const EMatrix& Y) {
        EMatrix r(F, X.target(), X.source());
        ExtAlg EE(F);
        for (size_t i = 0; i < X.rows(); ++i)
            for (size_t j = 0; j < X.cols(); ++j) r.set(i, j, EE.add(X.at(i, j), Y.at(i, j)));
        return r;
    };
    EMatrix Ap = add(g.compose(m.A), neg(m.A.compose(f)));
    EMatrix Bp = add(h.compose(m.B), neg(m.B.compose(g)));
    return {Ap, Bp};
}

}  // namespace rs12::search
