#include "rs12/bott.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace rs12 {

namespace {
long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

MonoBasis::MonoBasis(int kk) : k(kk) {
    std::array<uint8_t, kVars> e{};
    // lex-descending enumeration: x0 exponent highest first
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == kVars - 1) {
            e[var] = uint8_t(rem);
            pos[key(e)] = list.size();
            list.push_back(e);
            return;
        }
        for (int a = rem; a >= 0; --a) {
            e[var] = uint8_t(a);
            rec(var + 1, rem - a);
        }
    };
    if (k < 0) throw std::invalid_argument("negative symmetric degree");
    rec(0, k);
}

uint64_t MonoBasis::key(const std::array<uint8_t, kVars>& e) {
    uint64_t r = 0;
    for (int i = 0; i < kVars; ++i) r = (r << 8) | e[i];
    return r;
}

size_t MonoBasis::index(const std::array<uint8_t, kVars>& e) const {
    auto it = pos.find(key(e));
    if (it == pos.end()) throw std::logic_error("monomial not in basis");
    return it->second;
}

std::vector<Field::Elem> SectionSpace::coords_of(const Field& F,
                                                 const std::vector<Field::Elem>& v) const {
    std::vector<Field::Elem> c(dim());
    for (size_t j = 0; j < dim(); ++j) c[j] = v[coord_cols[j]];
    // verify membership: v must equal sum c_j basis_j
    std::vector<Field::Elem> rec = ambient_of(F, c);
    if (rec != v) throw std::logic_error("vector is not in the section space");
    return c;
}

std::vector<Field::Elem> SectionSpace::ambient_of(const Field& F,
                                                  const std::vector<Field::Elem>& c) const {
    std::vector<Field::Elem> v(ambient, 0);
    for (size_t j = 0; j < dim(); ++j) {
        if (F.is_zero(c[j])) continue;
        const auto& b = basis[j];
        for (size_t t = 0; t < ambient; ++t)
            if (!F.is_zero(b[t])) v[t] = F.add(v[t], F.mul(c[j], b[t]));
    }
    return v;
}

long Bott::h0(int i, int t) {
    if (i < 0 || i > 4) return 0;
    if (i == 0) return t >= 0 ? binom(t + 4, 4) : 0;
    if (t <= i) return 0;
    return binom(t + 4 - i, t) * binom(t - 1, i);
}

const MonoBasis& Bott::monos(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = mono_cache_[k];
    if (!slot) slot = std::make_unique<MonoBasis>(k);
    return *slot;
}

const SectionSpace& Bott::sections(int i, int k) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find({i, k});
        if (it != cache_.end()) return *it->second;
    }
    auto sp = compute_sections(i, k);
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = cache_[{i, k}];
    if (!slot) slot = std::move(sp);
    return *slot;
}

std::unique_ptr<SectionSpace> Bott::compute_sections(int i, int k) {
    if (i < 0 || i > 4 || k < 0) throw std::invalid_argument("unsupported section space");
    auto sp = std::make_unique<SectionSpace>();
    sp->i = i;
    sp->k = k;
    sp->wedge_masks = ExtAlg::graded_basis(-i);
    sp->mons = &monos(k);
    size_t nm = sp->mons->size();
    sp->ambient = sp->wedge_masks.size() * nm;
    if (i == 0) {
        // all of S_k
        sp->basis.assign(nm, std::vector<Field::Elem>(nm, 0));
        for (size_t j = 0; j < nm; ++j) {
            sp->basis[j][j] = F_.one();
            sp->coord_cols.push_back(j);
        }
        return sp;
    }
    // kernel of the Koszul differential wedge^i W (x) S_k -> wedge^{i-1} W (x) S_{k+1}
    const MonoBasis& tgt_mons = monos(k + 1);
    auto tgt_masks = ExtAlg::graded_basis(-(i - 1));
    auto tpos = [&](unsigned mask) {
        return size_t(std::lower_bound(tgt_masks.begin(), tgt_masks.end(), mask) - tgt_masks.begin());
    };
    FMatrix D(F_, tgt_masks.size() * tgt_mons.size(), sp->ambient);
    for (size_t wp = 0; wp < sp->wedge_masks.size(); ++wp) {
        unsigned T = sp->wedge_masks[wp];
        for (size_t mp = 0; mp < nm; ++mp) {
            size_t col = sp->amb_index(wp, mp);
            auto mono = sp->mons->list[mp];
            for (int j = 0; j < kVars; ++j) {
                if (!(T & (1u << j))) continue;
                int sign = (std::popcount(T & ((1u << j) - 1)) & 1) ? -1 : 1;
                auto m2 = mono;
                m2[j]++;
                size_t row = tpos(T & ~(1u << j)) * tgt_mons.size() + tgt_mons.index(m2);
                D.at(row, col) = sign > 0 ? F_.one() : F_.neg(F_.one());
            }
        }
    }
    auto kb = D.kernel_basis();
    // record free columns (kernel_basis yields one vector per free column,
    // ascending, with a unit in that slot)
    auto rr = D.rref();
    std::vector<bool> is_pivot(sp->ambient, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    for (size_t c = 0; c < sp->ambient; ++c)
        if (!is_pivot[c]) sp->coord_cols.push_back(c);
    sp->basis = std::move(kb);
    if (long(sp->basis.size()) != h0(i, i + k))
        throw std::logic_error("section-space dimension disagrees with the Bott number");
    return sp;
}

std::vector<Field::Elem> Bott::contract_ambient(const ExtElem& omega, int i, int k,
                                                const std::vector<Field::Elem>& v) {
    int m = omega.is_zero() ? 0 : omega.word;
    const SectionSpace& src = sections(i, k);
    if (v.size() != src.ambient) throw std::invalid_argument("ambient size mismatch");
    int it = i - m;
    if (it < 0) throw std::invalid_argument("contraction drops below wedge^0");
    const SectionSpace& tgt = sections(it, k);
    std::vector<Field::Elem> out(tgt.ambient, 0);
    if (omega.is_zero()) return out;
    size_t nm = src.mons->size();
    auto tgt_masks = tgt.wedge_masks;
    auto tpos = [&](unsigned mask) {
        return size_t(std::lower_bound(tgt_masks.begin(), tgt_masks.end(), mask) - tgt_masks.begin());
    };
    for (size_t wp = 0; wp < src.wedge_masks.size(); ++wp) {
        unsigned T = src.wedge_masks[wp];
        for (unsigned S = 0; S < kMasks; ++S) {
            if (F_.is_zero(omega.c[S]) || (S & ~T)) continue;
            int sg = contract_sign(S, T);
            Field::Elem co = sg < 0 ? F_.neg(omega.c[S]) : omega.c[S];
            size_t tw = tpos(T & ~S);
            for (size_t mp = 0; mp < nm; ++mp) {
                Field::Elem x = v[wp * nm + mp];
                if (F_.is_zero(x)) continue;
                size_t idx = tw * nm + mp;
                out[idx] = F_.add(out[idx], F_.mul(co, x));
            }
        }
    }
    return out;
}

FMatrix Bott::induced_map(const EMatrix& M, int k) {
    const auto& st = M.source().twists;
    const auto& tt = M.target().twists;
    for (int a : st)
        if (a < 0 || a > 4) throw std::invalid_argument("source twist outside bundle range");
    for (int a : tt)
        if (a < 0 || a > 4) throw std::invalid_argument("target twist outside bundle range");
    std::vector<size_t> soff(st.size() + 1, 0), toff(tt.size() + 1, 0);
    for (size_t c = 0; c < st.size(); ++c) soff[c + 1] = soff[c] + sections(st[c], k).dim();
    for (size_t r = 0; r < tt.size(); ++r) toff[r + 1] = toff[r] + sections(tt[r], k).dim();
    FMatrix out(F_, toff.back(), soff.back());
    for (size_t c = 0; c < st.size(); ++c) {
        const SectionSpace& src = sections(st[c], k);
        for (size_t bj = 0; bj < src.dim(); ++bj) {
            for (size_t r = 0; r < tt.size(); ++r) {
                const ExtElem& w = M.at(r, c);
                if (w.is_zero()) continue;
                const SectionSpace& tgt = sections(tt[r], k);
                auto img = contract_ambient(w, st[c], k, src.basis[bj]);
                auto coords = tgt.coords_of(F_, img);
                for (size_t i2 = 0; i2 < coords.size(); ++i2)
                    out.at(toff[r] + i2, soff[c] + bj) = coords[i2];
            }
        }
    }
    return out;
}

std::vector<Field::Elem> Bott::unembed_top(int k, const std::vector<Field::Elem>& u) {
    const MonoBasis& m5 = monos(5 + k);
    const MonoBasis& m4 = monos(4 + k);
    auto masks4 = ExtAlg::graded_basis(-4);
    if (u.size() != masks4.size() * m5.size()) throw std::invalid_argument("ambient size mismatch");
    // component of the mask missing index 0 is x_0 * f
    size_t w0 = size_t(std::lower_bound(masks4.begin(), masks4.end(), 0b11110u) - masks4.begin());
    std::vector<Field::Elem> f(m4.size(), 0);
    for (size_t mp = 0; mp < m5.size(); ++mp) {
        Field::Elem x = u[w0 * m5.size() + mp];
        if (F_.is_zero(x)) continue;
        auto e = m5.list[mp];
        if (e[0] == 0) throw std::logic_error("top component not divisible by x0; not a Koszul image");
        e[0]--;
        f[m4.index(e)] = x;
    }
    // verify: u == delta(E (x) f), i.e. component at mask missing j is
    // (-1)^j x_j f
    for (size_t wp = 0; wp < masks4.size(); ++wp) {
        unsigned T = masks4[wp];
        int j = std::countr_one(T);  // missing index: lowest unset bit
        for (size_t mp = 0; mp < m5.size(); ++mp) {
            auto e = m5.list[mp];
            Field::Elem expect = 0;
            if (e[j] > 0) {
                auto e2 = e;
                e2[j]--;
                Field::Elem fv = f[m4.index(e2)];
                expect = (j % 2 == 0) ? fv : F_.neg(fv);
            }
            if (u[wp * m5.size() + mp] != expect)
                throw std::logic_error("vector is not in the image of the top Koszul embedding");
        }
    }
    return f;
}

std::vector<Field::Elem> Bott::pair_to_poly(int a, const std::vector<Field::Elem>& s, int i, int k,
                                            const std::vector<Field::Elem>& t) {
    if (a + i != 4) throw std::invalid_argument("pairing needs complementary wedge degrees");
    const SectionSpace& A = sections(a, 5);
    const SectionSpace& B = sections(i, k);
    const MonoBasis& m5k = monos(5 + k);
    auto masks4 = ExtAlg::graded_basis(-4);
    std::vector<Field::Elem> u(masks4.size() * m5k.size(), 0);
    size_t na = A.mons->size(), nb = B.mons->size();
    auto pos4 = [&](unsigned mask) {
        return size_t(std::lower_bound(masks4.begin(), masks4.end(), mask) - masks4.begin());
    };
    for (size_t wa = 0; wa < A.wedge_masks.size(); ++wa) {
        unsigned Ta = A.wedge_masks[wa];
        for (size_t ma = 0; ma < na; ++ma) {
            Field::Elem ca = s[wa * na + ma];
            if (F_.is_zero(ca)) continue;
            const auto& ea = A.mons->list[ma];
            for (size_t wb = 0; wb < B.wedge_masks.size(); ++wb) {
                unsigned Tb = B.wedge_masks[wb];
                if (Ta & Tb) continue;
                int sg = wedge_sign(Ta, Tb);
                size_t wout = pos4(Ta | Tb);
                for (size_t mb = 0; mb < nb; ++mb) {
                    Field::Elem cb = t[wb * nb + mb];
                    if (F_.is_zero(cb)) continue;
                    std::array<uint8_t, kVars> e;
                    for (int z = 0; z < kVars; ++z) e[z] = uint8_t(ea[z] + B.mons->list[mb][z]);
                    Field::Elem v = F_.mul(ca, cb);
                    if (sg < 0) v = F_.neg(v);
                    size_t idx = wout * m5k.size() + m5k.index(e);
                    u[idx] = F_.add(u[idx], v);
                }
            }
        }
    }
    return unembed_top(k, u);
}

}  // namespace rs12
