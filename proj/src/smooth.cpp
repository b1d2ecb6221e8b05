#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <map>

#include "rs12/poly.hpp"

namespace rs12::poly {

namespace {

constexpr int kNV = 5;

struct CompiledPoly {
    std::vector<std::array<uint8_t, kMaxVars>> exps;
    std::vector<Field::Elem> coeff;
    int maxdeg = 0;
};

CompiledPoly compile(const Poly& f) {
    CompiledPoly c;
    for (const auto& t : f.t) {
        c.exps.push_back(t.m.e);
        c.coeff.push_back(t.c);
        for (int i = 0; i < kNV; ++i) c.maxdeg = std::max(c.maxdeg, int(t.m.e[i]));
    }
    return c;
}

Field::Elem eval(const Field& F, const CompiledPoly& f,
                 const std::array<std::array<Field::Elem, 16>, kNV>& pw) {
    Field::Elem acc = F.zero();
    for (size_t t = 0; t < f.exps.size(); ++t) {
        Field::Elem v = f.coeff[t];
        for (int i = 0; i < kNV; ++i) {
            uint8_t e = f.exps[t][i];
            if (e) v = F.mul(v, pw[i][e]);
        }
        acc = F.add(acc, v);
    }
    return acc;
}

size_t rank_small(const Field& F, std::vector<std::vector<Field::Elem>> m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!F.is_zero(m[i][c])) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Field::Elem inv = F.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || F.is_zero(m[i][c])) continue;
            Field::Elem f = F.neg(m[i][c]);
            for (size_t j = c; j < cols; ++j) m[i][j] = F.add(m[i][j], F.mul(f, m[r][j]));
        }
        ++r;
    }
    return r;
}

void for_each_point(const Field& Fx, const std::function<void(const std::vector<Field::Elem>&)>& fn) {
    // normalized projective points: leading coordinate 1
    std::vector<Field::Elem> pt(kNV, 0);
    for (int lead = 0; lead < kNV; ++lead) {
        std::fill(pt.begin(), pt.end(), Fx.zero());
        pt[lead] = Fx.one();
        int free = kNV - 1 - lead;
        uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= Fx.q();
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t v = idx;
            for (int i = 0; i < free; ++i) {
                pt[lead + 1 + i] = Fx.nth(v % Fx.q());
                v /= Fx.q();
            }
            fn(pt);
        }
    }
}

std::string point_str(const Field& Fx, const std::vector<Field::Elem>& pt) {
    std::string s = "(";
    for (int i = 0; i < kNV; ++i) {
        if (i) s += ":";
        s += Fx.str(pt[i]);
    }
    return s + ") over " + Fx.label();
}

}  // namespace

std::vector<std::vector<Field::Elem>> rational_points(const Ideal& I, uint32_t ext_degree) {
    Field Fx(I.field().p(), ext_degree);
    std::vector<CompiledPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(compile(g));
    std::vector<std::vector<Field::Elem>> out;
    for_each_point(Fx, [&](const std::vector<Field::Elem>& pt) {
        std::array<std::array<Field::Elem, 16>, kNV> pw;
        for (int i = 0; i < kNV; ++i) {
            pw[i][0] = Fx.one();
            for (int e = 1; e < 16; ++e) pw[i][e] = Fx.mul(pw[i][e - 1], pt[i]);
        }
        for (const auto& g : gens)
            if (!Fx.is_zero(eval(Fx, g, pw))) return;
        out.push_back(pt);
    });
    return out;
}

SmoothnessReport is_smooth(const Ideal& I, int expected_proj_dim, const SmoothnessBudget& budget) {
    if (I.nvars() != kNV) throw std::invalid_argument("smoothness certificates live in P^4");
    const Field& F = I.field();
    Order o;
    SmoothnessReport rep;
    rep.codim = 4 - expected_proj_dim;

    std::vector<Poly> gens = Ideal::min_gens(F, I.gens(), kNV);
    std::vector<std::vector<Poly>> jac(gens.size(), std::vector<Poly>(kNV));
    for (size_t i = 0; i < gens.size(); ++i)
        for (int v = 0; v < kNV; ++v) jac[i][v] = p_derivative(F, gens[i], v);

    // Stage 1: rational-point prefilter.  A point of the scheme where the
    // Jacobian has rank < codim certifies a singularity outright.
    std::vector<CompiledPoly> cg, cj;
    for (const auto& g : gens) cg.push_back(compile(g));
    for (const auto& row : jac)
        for (const auto& d : row) cj.push_back(compile(d));
    for (uint32_t k = 1; k <= uint32_t(budget.point_field_degree); ++k) {
        Field Fx(F.p(), k);
        bool found = false;
        std::string witness;
        for_each_point(Fx, [&](const std::vector<Field::Elem>& pt) {
            if (found) return;
            std::array<std::array<Field::Elem, 16>, kNV> pw;
            for (int i = 0; i < kNV; ++i) {
                pw[i][0] = Fx.one();
                for (int e = 1; e < 16; ++e) pw[i][e] = Fx.mul(pw[i][e - 1], pt[i]);
            }
            for (const auto& g : cg)
                if (!Fx.is_zero(eval(Fx, g, pw))) return;
            // on the scheme: check Jacobian rank
            std::vector<std::vector<Field::Elem>> J(gens.size(), std::vector<Field::Elem>(kNV));
            for (size_t i = 0; i < gens.size(); ++i)
                for (int v = 0; v < kNV; ++v) J[i][v] = eval(Fx, cj[i * kNV + v], pw);
            if (rank_small(Fx, J) < size_t(rep.codim)) {
                found = true;
                witness = point_str(Fx, pt);
            }
        });
        if (found) {
            rep.verdict = Smoothness::NotSmooth;
            rep.method = "point";
            rep.witness_point = witness;
            return rep;
        }
    }

    // Stage 2: the singular-locus ideal I + (codim x codim minors of jac).
    std::vector<Poly> sing = gens;
    int c = rep.codim;
    // enumerate row subsets then column subsets of the Jacobian
    std::vector<std::vector<int>> rows_subsets, cols_subsets;
    std::vector<int> cur;
    std::function<void(int, int, int, std::vector<std::vector<int>>&)> subsets =
        [&](int start, int need, int limit, std::vector<std::vector<int>>& out) {
            if (need == 0) {
                out.push_back(cur);
                return;
            }
            for (int i = start; i <= limit - need; ++i) {
                cur.push_back(i);
                subsets(i + 1, need - 1, limit, out);
                cur.pop_back();
            }
        };
    subsets(0, c, int(gens.size()), rows_subsets);
    subsets(0, c, kNV, cols_subsets);
    std::function<Poly(const std::vector<int>&, const std::vector<int>&)> minor =
        [&](const std::vector<int>& rs, const std::vector<int>& cs) -> Poly {
        if (rs.size() == 1) return jac[rs[0]][cs[0]];
        Poly acc;
        for (size_t j = 0; j < cs.size(); ++j) {
            std::vector<int> rs2(rs.begin() + 1, rs.end());
            std::vector<int> cs2;
            for (size_t z = 0; z < cs.size(); ++z)
                if (z != j) cs2.push_back(cs[z]);
            Poly sub = minor(rs2, cs2);
            Poly term = p_mul(I.field(), o, jac[rs[0]][cs[j]], sub);
            acc = (j % 2 == 0) ? p_add(I.field(), o, acc, term) : p_sub(I.field(), o, acc, term);
        }
        return acc;
    };
    for (const auto& rs : rows_subsets)
        for (const auto& cs : cols_subsets) {
            Poly m = minor(rs, cs);
            if (!m.is_zero()) sing.push_back(std::move(m));
        }

    // Stage 3: degree-slice certificate -- if some graded piece of the
    // singular ideal is all of S_d, the locus is empty and the scheme smooth.
    int maxdeg = 0;
    for (const auto& g : sing) maxdeg = std::max(maxdeg, g.deg());
    for (int d = maxdeg; d < maxdeg + budget.slice_tries; ++d) {
        long long target = count_monomials(d, kNV);
        // stream monomial multiples into a row span over S_d
        auto monos_d = monomials_of_degree(d, kNV);
        std::map<uint64_t, size_t> mono_pos;
        for (size_t i = 0; i < monos_d.size(); ++i) mono_pos[monos_d[i].key()] = i;
        RowSpan span(F, monos_d.size());
        bool full = false;
        for (const auto& g : sing) {
            int dd = d - g.deg();
            if (dd < 0) continue;
            for (const auto& m : monomials_of_degree(dd, kNV)) {
                std::vector<Field::Elem> row(monos_d.size(), 0);
                for (const auto& t : g.t) {
                    size_t idx = mono_pos.at(t.m.mul(m).key());
                    row[idx] = F.add(row[idx], t.c);
                }
                span.add(std::move(row));
                if (span.dim() == size_t(target)) { full = true; break; }
            }
            if (full) break;
        }
        if (full) {
            rep.verdict = Smoothness::Smooth;
            rep.method = "slice(d=" + std::to_string(d) + ")";
            return rep;
        }
    }

    // Stage 4: full Groebner dimension of the singular locus, budgeted.
    Ideal Js(F, sing);
    const GB& gb = Js.groebner(o, budget.spair_budget);
    if (!gb.complete) {
        rep.verdict = Smoothness::Undetermined;
        rep.method = "groebner(budget exceeded)";
        return rep;
    }
    auto h = Js.hilbert();
    if (h.proj_dim < 0) {
        rep.verdict = Smoothness::Smooth;
        rep.method = "groebner";
    } else {
        rep.verdict = Smoothness::NotSmooth;
        rep.singular_proj_dim = h.proj_dim;
        rep.method = "groebner";
    }
    return rep;
}

}  // namespace rs12::poly
