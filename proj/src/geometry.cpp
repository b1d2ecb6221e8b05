#include "rs12/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rs12/search.hpp"

namespace rs12::geom {

using poly::Ideal;
using poly::Mono;
using poly::Order;
using poly::Poly;

std::vector<std::vector<Poly>> as_linear_forms(const EMatrix& M) {
    const Field& F = M.field();
    Order o;
    std::vector<std::vector<Poly>> out(M.rows(), std::vector<Poly>(M.cols()));
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) {
            const ExtElem& e = M.at(r, c);
            if (e.is_zero()) continue;
            if (e.word != 1) throw std::invalid_argument("entries must be linear");
            Poly f;
            for (int i = 0; i < kVars; ++i) {
                Field::Elem co = e.c[1u << i];
                if (!F.is_zero(co)) f.t.push_back({Mono::var(i), co});
            }
            out[r][c] = p_resort(o, std::move(f));
        }
    return out;
}

namespace {

// coordinate vector of a linear exterior element
std::array<Field::Elem, kVars> vec_of(const Field& F, const ExtElem& e) {
    std::array<Field::Elem, kVars> v{};
    if (e.is_zero()) return v;
    for (int i = 0; i < kVars; ++i) v[i] = e.c[1u << i];
    return v;
}

}  // namespace

bool rank2_condition(const EMatrix& M) {
    const Field& F = M.field();
    bool columns = M.rows() == 2;  // 2x4: columns; 3x2: rows
    size_t pairs = columns ? M.cols() : M.rows();
    for (size_t i = 0; i < pairs; ++i) {
        const ExtElem& a = columns ? M.at(0, i) : M.at(i, 0);
        const ExtElem& b = columns ? M.at(1, i) : M.at(i, 1);
        ExtAlg E(F);
        if (E.wedge(a, b).is_zero()) return false;
    }
    return true;
}

Ideal rank1_locus(const EMatrix& M) {
    const Field& F = M.field();
    Order o;
    auto forms = as_linear_forms(M);
    std::vector<Poly> minors;
    for (size_t r1 = 0; r1 < M.rows(); ++r1)
        for (size_t r2 = r1 + 1; r2 < M.rows(); ++r2)
            for (size_t c1 = 0; c1 < M.cols(); ++c1)
                for (size_t c2 = c1 + 1; c2 < M.cols(); ++c2) {
                    Poly det = p_sub(F, o, p_mul(F, o, forms[r1][c1], forms[r2][c2]),
                                     p_mul(F, o, forms[r1][c2], forms[r2][c1]));
                    if (!det.is_zero()) minors.push_back(std::move(det));
                }
    return Ideal(F, std::move(minors), 5);
}

bool disjoint(const Ideal& I, const Ideal& J) {
    return I.plus(J).dimension_degree().first < 0;
}

EnumCount enumerate_intersection(const EMatrix& A1, const EMatrix& B1) {
    const Field& F0 = A1.field();
    if (!(B1.field() == F0)) throw std::invalid_argument("field mismatch");
    EnumCount out;
    out.per_degree.assign(3, 0);
    long long n[4] = {0, 0, 0, 0};
    for (uint32_t k = 1; k <= 3; ++k) {
        Field Fx(F0.p(), k);
        // lift the coefficient vectors into the extension
        std::array<std::array<Field::Elem, kVars>, 4> acolTop{}, acolBot{};
        for (int c = 0; c < 4; ++c) {
            acolTop[c] = vec_of(F0, A1.at(0, c));
            acolBot[c] = vec_of(F0, A1.at(1, c));
        }
        std::array<std::array<Field::Elem, kVars>, 3> browL{}, browR{};
        for (int r = 0; r < 3; ++r) {
            browL[r] = vec_of(F0, B1.at(r, 0));
            browR[r] = vec_of(F0, B1.at(r, 1));
        }
        std::set<std::vector<Field::Elem>> points;
        // enumerate normalized mu in P^2(F_{p^k})
        std::vector<Field::Elem> mu(3, 0);
        auto handle_mu = [&]() {
            std::array<Field::Elem, kVars> h{}, kk{};
            for (int i = 0; i < kVars; ++i)
                for (int r = 0; r < 3; ++r) {
                    h[i] = Fx.add(h[i], Fx.mul(mu[r], browL[r][i]));
                    kk[i] = Fx.add(kk[i], Fx.mul(mu[r], browR[r][i]));
                }
            // functionals annihilating span{h, k}: kernel of the 5x2 transpose
            FMatrix hk(Fx, 2, kVars);
            for (int i = 0; i < kVars; ++i) {
                hk.at(0, i) = h[i];
                hk.at(1, i) = kk[i];
            }
            if (hk.rank() < 2) return;  // degenerate row pair; not a Grassmannian point
            auto ann = hk.kernel_basis();  // 3 functionals phi with phi(h) = phi(k) = 0
            // conditions on lambda: phi(f_lambda) = 0 and phi(g_lambda) = 0
            FMatrix sys(Fx, 2 * ann.size(), 4);
            for (size_t a = 0; a < ann.size(); ++a)
                for (int c = 0; c < 4; ++c) {
                    Field::Elem top = 0, bot = 0;
                    for (int i = 0; i < kVars; ++i) {
                        top = Fx.add(top, Fx.mul(ann[a][i], acolTop[c][i]));
                        bot = Fx.add(bot, Fx.mul(ann[a][i], acolBot[c][i]));
                    }
                    sys.at(2 * a, c) = top;
                    sys.at(2 * a + 1, c) = bot;
                }
            auto lam = sys.kernel_basis();
            if (lam.empty()) return;
            if (lam.size() > 2) {
                out.suspect_infinite = true;
                return;
            }
            // enumerate the projective kernel (usually a single point)
            std::vector<std::vector<Field::Elem>> cands;
            if (lam.size() == 1) {
                cands.push_back(lam[0]);
            } else {
                out.suspect_infinite = true;  // a positive-dimensional lambda family
                for (uint64_t s = 0; s < Fx.q() + 1; ++s) {
                    std::vector<Field::Elem> v(4, 0);
                    for (int i = 0; i < 4; ++i)
                        v[i] = s < Fx.q() ? Fx.add(lam[0][i], Fx.mul(Fx.nth(s), lam[1][i])) : lam[1][i];
                    cands.push_back(std::move(v));
                }
            }
            ExtAlg E(Fx);
            for (const auto& lv : cands) {
                // the wedge point f ^ g in the Grassmannian
                ExtElem f, g;
                f.word = 1;
                g.word = 1;
                bool fz = true, gz = true;
                for (int i = 0; i < kVars; ++i) {
                    Field::Elem fc = 0, gc = 0;
                    for (int c = 0; c < 4; ++c) {
                        fc = Fx.add(fc, Fx.mul(lv[c], acolTop[c][i]));
                        gc = Fx.add(gc, Fx.mul(lv[c], acolBot[c][i]));
                    }
                    f.c[1u << i] = fc;
                    g.c[1u << i] = gc;
                    fz = fz && Fx.is_zero(fc);
                    gz = gz && Fx.is_zero(gc);
                }
                if (fz || gz) continue;
                ExtElem w = E.wedge(f, g);
                if (w.is_zero()) continue;  // not a 2-plane: skip
                // verify the plane equals span{h, k}: w proportional to h ^ k
                ExtElem hh, kk2;
                hh.word = 1;
                kk2.word = 1;
                for (int i = 0; i < kVars; ++i) {
                    hh.c[1u << i] = h[i];
                    kk2.c[1u << i] = kk[i];
                }
                ExtElem whk = E.wedge(hh, kk2);
                // normalize both wedges and compare
                auto normalize = [&](const ExtElem& x) {
                    std::vector<Field::Elem> v;
                    Field::Elem lead = 0;
                    for (int m2 = 0; m2 < kMasks; ++m2) {
                        if (std::popcount(unsigned(m2)) != 2) continue;
                        if (Fx.is_zero(lead) && !Fx.is_zero(x.c[m2])) lead = x.c[m2];
                    }
                    Field::Elem inv = Fx.inv(lead);
                    for (int m2 = 0; m2 < kMasks; ++m2)
                        if (std::popcount(unsigned(m2)) == 2) v.push_back(Fx.mul(inv, x.c[m2]));
                    return v;
                };
                auto wn = normalize(w);
                if (normalize(whk) != wn) continue;  // plane differs after all
                points.insert(std::move(wn));
            }
        };
        for (int lead = 2; lead >= 0; --lead) {
            std::fill(mu.begin(), mu.end(), Fx.zero());
            mu[lead] = Fx.one();
            uint64_t total = 1;
            for (int i = lead + 1; i < 3; ++i) total *= Fx.q();
            for (uint64_t idx = 0; idx < total; ++idx) {
                uint64_t v = idx;
                for (int i = lead + 1; i < 3; ++i) {
                    mu[i] = Fx.nth(v % Fx.q());
                    v /= Fx.q();
                }
                handle_mu();
            }
        }
        n[k] = (long long)points.size();
    }
    // closed points by residue degree: c1 = n1, c2 = (n2 - n1)/2, c3 = (n3 - n1)/3
    out.per_degree[0] = int(n[1]);
    out.per_degree[1] = int((n[2] - n[1]) / 2);
    out.per_degree[2] = int((n[3] - n[1]) / 3);
    out.distinct_leq3 = n[2] + n[3] - n[1];
    if (out.distinct_leq3 > 30) out.suspect_infinite = true;
    return out;
}

namespace {

// 3x3 minors of the stacked 4x5 matrix [f_lambda; g_lambda; h_mu; k_mu] in
// the 7-variable ring (lambda = x0..x3, mu = x4..x6)
std::vector<Poly> stacked_minors(const EMatrix& A1, const EMatrix& B1) {
    const Field& F = A1.field();
    Order o;
    // rows as vectors of linear 7-variable polys
    std::vector<std::vector<Poly>> rows(4, std::vector<Poly>(kVars));
    for (int i = 0; i < kVars; ++i) {
        Poly f, g, h, kk;
        for (int c = 0; c < 4; ++c) {
            Field::Elem top = vec_of(F, A1.at(0, c))[i];
            Field::Elem bot = vec_of(F, A1.at(1, c))[i];
            if (!F.is_zero(top)) f.t.push_back({Mono::var(c), top});
            if (!F.is_zero(bot)) g.t.push_back({Mono::var(c), bot});
        }
        for (int r = 0; r < 3; ++r) {
            Field::Elem L = vec_of(F, B1.at(r, 0))[i];
            Field::Elem R = vec_of(F, B1.at(r, 1))[i];
            if (!F.is_zero(L)) h.t.push_back({Mono::var(4 + r), L});
            if (!F.is_zero(R)) kk.t.push_back({Mono::var(4 + r), R});
        }
        rows[0][i] = p_resort(o, std::move(f));
        rows[1][i] = p_resort(o, std::move(g));
        rows[2][i] = p_resort(o, std::move(h));
        rows[3][i] = p_resort(o, std::move(kk));
    }
    std::vector<Poly> minors;
    int rsel[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (auto& rs : rsel)
        for (int c1 = 0; c1 < kVars; ++c1)
            for (int c2 = c1 + 1; c2 < kVars; ++c2)
                for (int c3 = c2 + 1; c3 < kVars; ++c3) {
                    std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3));
                    int cs[3] = {c1, c2, c3};
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) m[a][b] = rows[rs[a]][cs[b]];
                    Poly det = p_det(F, o, m);
                    if (!det.is_zero()) minors.push_back(std::move(det));
                }
    return minors;
}

// bigraded Hilbert function of the quotient by the leading terms: count
// standard monomials with lambda-degree s and mu-degree t
long long bigraded_hf(const poly::GB& gb, int s, int t) {
    auto lam = poly::monomials_of_degree(s, 4);
    // mu monomials: degree t in 3 variables, shifted to slots 4..6
    auto mu0 = poly::monomials_of_degree(t, 3);
    long long count = 0;
    for (const auto& a : lam)
        for (const auto& b : mu0) {
            Mono m = a;
            for (int i = 0; i < 3; ++i) m.e[4 + i] = b.e[i];
            bool div = false;
            for (const auto& g : gb.g)
                if (g.lt().m.divides(m)) {
                    div = true;
                    break;
                }
            if (!div) ++count;
        }
    return count;
}

}  // namespace

IntersectionCount zazb_intersection(const EMatrix& A1, const EMatrix& B1) {
    if (!rank2_condition(A1) || !rank2_condition(B1))
        throw std::invalid_argument("Veronese images need rank-2 column/row pairs");
    IntersectionCount out;
    auto en = enumerate_intersection(A1, B1);
    out.by_enumeration = en.distinct_leq3;
    out.points_per_degree = en.per_degree;

    const Field& F = A1.field();
    Ideal I(F, stacked_minors(A1, B1), 7);
    Ideal sat = I.saturate({0, 1, 2, 3}).saturate({4, 5, 6});
    auto h = sat.hilbert();
    // two cone directions over a finite set of points
    out.finite = h.affine_dim <= 2;
    if (!out.finite) throw std::runtime_error("infinite intersection of the Veronese images");
    const auto& gb = sat.groebner();
    long long v1 = bigraded_hf(gb, 5, 5), v2 = bigraded_hf(gb, 6, 6), v3 = bigraded_hf(gb, 6, 5);
    if (v1 != v2 || v2 != v3) {
        v1 = bigraded_hf(gb, 8, 8);
        v2 = bigraded_hf(gb, 9, 9);
        if (v1 != v2) throw std::runtime_error("bigraded count did not stabilize");
    }
    out.by_groebner = v1;
    out.methods_agree = (out.by_groebner == out.by_enumeration) && !en.suspect_infinite;
    if (out.methods_agree) {
        out.r = out.by_enumeration;
    } else {
        out.r = out.by_groebner;
        out.note = "points of residue degree > 3 undetected by enumeration; settled by the Groebner count";
    }
    return out;
}

LemmaReport lemma_bounds_check(const EMatrix& A1, const EMatrix& B1, std::optional<int> N) {
    LemmaReport rep;
    auto cnt = zazb_intersection(A1, B1);
    rep.r = cnt.r;
    rep.finite = cnt.finite;
    rep.N = N ? *N : search::n_invariant(A1, B1);
    auto CA = rank1_locus(A1);
    auto SB = rank1_locus(B1);
    auto hc = CA.hilbert();
    bool curve_ok = hc.proj_dim == 1 && hc.degree == 4;
    rep.c1_smooth =
        curve_ok && poly::is_smooth(CA, 1).verdict == poly::Smoothness::Smooth;
    rep.c2_disjoint = disjoint(CA, SB);
    rep.upper_bound_ok = rep.N <= 120 - rep.r;
    if (rep.c1_smooth && rep.c2_disjoint) rep.six_point_bound_ok = rep.r <= 6;
    return rep;
}

}  // namespace rs12::geom
