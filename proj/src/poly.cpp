#include "rs12/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rs12::poly {

Order Order::with_last(int v) {
    Order o;
    int pos = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (i != v) o.seq[pos++] = uint8_t(i);
    o.seq[kMaxVars - 1] = uint8_t(v);
    return o;
}

bool Order::gt(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da > db;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        int v = seq[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
    }
    return false;
}

bool Poly::homogeneous() const {
    for (const auto& term : t)
        if (term.m.deg() != t.front().m.deg()) return false;
    return true;
}

Poly p_add(const Field& F, const Order& o, const Poly& a, const Poly& b) {
    Poly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].m == b.t[j].m) {
            Field::Elem c = F.add(a.t[i].c, b.t[j].c);
            if (!F.is_zero(c)) r.t.push_back({a.t[i].m, c});
            ++i, ++j;
        } else if (o.gt(a.t[i].m, b.t[j].m)) {
            r.t.push_back(a.t[i++]);
        } else {
            r.t.push_back(b.t[j++]);
        }
    }
    while (i < a.t.size()) r.t.push_back(a.t[i++]);
    while (j < b.t.size()) r.t.push_back(b.t[j++]);
    return r;
}

Poly p_scale(const Field& F, Field::Elem s, const Poly& a) {
    if (F.is_zero(s)) return Poly{};
    Poly r = a;
    for (auto& t : r.t) t.c = F.mul(s, t.c);
    return r;
}

Poly p_sub(const Field& F, const Order& o, const Poly& a, const Poly& b) {
    return p_add(F, o, a, p_scale(F, F.neg(F.one()), b));
}

Poly p_mul_term(const Field& F, const Poly& a, const Term& t) {
    if (F.is_zero(t.c)) return Poly{};
    Poly r = a;
    for (auto& x : r.t) {
        x.m = x.m.mul(t.m);
        x.c = F.mul(x.c, t.c);
    }
    return r;
}

Poly p_div_term(const Field& F, const Poly& a, const Term& t) {
    Poly r = a;
    Field::Elem inv = F.inv(t.c);
    for (auto& x : r.t) {
        if (!t.m.divides(x.m)) throw std::invalid_argument("term division is not exact");
        x.m = x.m.div(t.m);
        x.c = F.mul(x.c, inv);
    }
    return r;
}

Poly p_mul(const Field& F, const Order& o, const Poly& a, const Poly& b) {
    std::map<uint64_t, Term> acc;
    for (const auto& x : a.t)
        for (const auto& y : b.t) {
            Mono m = x.m.mul(y.m);
            auto [it, fresh] = acc.try_emplace(m.key(), Term{m, F.zero()});
            it->second.c = F.add(it->second.c, F.mul(x.c, y.c));
        }
    Poly r;
    for (auto& [k, t] : acc)
        if (!F.is_zero(t.c)) r.t.push_back(t);
    std::sort(r.t.begin(), r.t.end(), [&](const Term& u, const Term& v) { return o.gt(u.m, v.m); });
    return r;
}

Poly p_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    return p_scale(F, F.inv(a.lt().c), a);
}

Poly p_resort(const Order& o, Poly a) {
    std::sort(a.t.begin(), a.t.end(), [&](const Term& u, const Term& v) { return o.gt(u.m, v.m); });
    return a;
}

Poly p_derivative(const Field& F, const Poly& a, int var) {
    Poly r;
    for (const auto& t : a.t) {
        if (t.m.e[var] == 0) continue;
        Field::Elem c = F.mul(t.c, F.from_int(t.m.e[var]));
        if (F.is_zero(c)) continue;
        Term nt{t.m, c};
        nt.m.e[var]--;
        r.t.push_back(nt);
    }
    return r;  // degrevlex is translation invariant, so the sort survives
}

Poly p_substitute(const Field& F, const Order& o, const Poly& a,
                  const std::vector<std::vector<Field::Elem>>& sub, int nv) {
    std::vector<Poly> img(nv);
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j)
            if (!F.is_zero(sub[i][j])) img[i].t.push_back({Mono::var(j), sub[i][j]});
        img[i] = p_resort(o, img[i]);
    }
    Poly out;
    for (const auto& t : a.t) {
        Poly term;
        term.t.push_back({Mono::one(), t.c});
        for (int i = 0; i < nv; ++i)
            for (int rep = 0; rep < t.m.e[i]; ++rep) term = p_mul(F, o, term, img[i]);
        out = p_add(F, o, out, term);
    }
    return out;
}

Poly p_det(const Field& F, const Order& o, const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> sub(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) sub[r - 1].push_back(m[r][c]);
        Poly term = p_mul(F, o, m[0][j], p_det(F, o, sub));
        acc = (j % 2 == 0) ? p_add(F, o, acc, term) : p_sub(F, o, acc, term);
    }
    return acc;
}

std::string p_str(const Field& F, const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& t : a.t) {
        int64_t v = F.symmetric(t.c);
        std::string coeff;
        if (v < 0) {
            coeff = "-";
            v = -v;
        } else if (!out.empty()) {
            coeff = "+";
        }
        bool constant = t.m.deg() == 0;
        if (v != 1 || constant) coeff += std::to_string(v);
        out += coeff;
        bool first = true;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i]) continue;
            if (!first || v != 1) out += "*";
            out += "x" + std::to_string(i);
            if (t.m.e[i] > 1) out += "^" + std::to_string(int(t.m.e[i]));
            first = false;
        }
    }
    return out;
}

Poly p_parse(const Field& F, const Order& o, const std::string& s) {
    Poly r;
    size_t i = 0;
    auto ws = [&] { while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i; };
    ws();
    while (i < s.size()) {
        int64_t sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
            ws();
        }
        int64_t mag = -1;
        if (i < s.size() && std::isdigit(uint8_t(s[i]))) {
            mag = 0;
            while (i < s.size() && std::isdigit(uint8_t(s[i]))) mag = mag * 10 + (s[i++] - '0');
        }
        Mono m;
        bool any_var = false;
        while (true) {
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                ws();
            }
            if (i >= s.size() || s[i] != 'x') break;
            ++i;
            if (i >= s.size() || !std::isdigit(uint8_t(s[i]))) throw std::invalid_argument("bad variable");
            int v = s[i++] - '0';
            if (v >= kMaxVars) throw std::invalid_argument("variable index out of range");
            int pow = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                pow = 0;
                while (i < s.size() && std::isdigit(uint8_t(s[i]))) pow = pow * 10 + (s[i++] - '0');
            }
            m.e[v] = uint8_t(m.e[v] + pow);
            any_var = true;
        }
        if (mag < 0 && !any_var) throw std::invalid_argument("malformed polynomial: " + s);
        if (mag < 0) mag = 1;
        Field::Elem c = F.from_int(sign * mag);
        if (!F.is_zero(c)) {
            Poly term;
            term.t.push_back({m, c});
            r = p_add(F, o, r, term);
        }
        ws();
    }
    return r;
}

Poly normal_form(const Field& F, const Order& o, Poly f, const std::vector<Poly>& basis) {
    Poly out;
    f = p_resort(o, std::move(f));
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !g.lt().m.divides(f.lt().m)) continue;
            Term q{f.lt().m.div(g.lt().m), F.mul(f.lt().c, F.inv(g.lt().c))};
            f = p_sub(F, o, f, p_mul_term(F, g, q));
            reduced = true;
            break;
        }
        if (!reduced) {
            out.t.push_back(f.lt());
            f.t.erase(f.t.begin());
        }
    }
    return out;
}

namespace {

struct PairEntry {
    size_t i, j;
    Mono lcm;
    int deg;
};

void reduce_gb(const Field& F, const Order& o, std::vector<Poly>& g) {
    std::vector<Poly> kept;
    for (size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (g[j].lt().m.divides(g[i].lt().m) && !(g[i].lt().m == g[j].lt().m && i < j))
                redundant = true;
        }
        if (!redundant) kept.push_back(g[i]);
    }
    std::vector<Poly> fin;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly nf = normal_form(F, o, kept[i], others);
        if (!nf.is_zero()) fin.push_back(p_monic(F, nf));
    }
    std::sort(fin.begin(), fin.end(), [&](const Poly& a, const Poly& b) {
        if (a.lt().m.deg() != b.lt().m.deg()) return a.lt().m.deg() < b.lt().m.deg();
        return o.gt(b.lt().m, a.lt().m);
    });
    g = std::move(fin);
}

}  // namespace

GB buchberger(const Field& F, const Order& o, std::vector<Poly> gens, size_t budget) {
    GB out;
    out.ord = o;
    std::vector<Poly> g;
    for (auto& f : gens) {
        f = p_resort(o, std::move(f));
        if (!f.is_zero()) g.push_back(p_monic(F, f));
    }
    auto pair_less = [&](const PairEntry& a, const PairEntry& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (!(a.lcm == b.lcm)) return o.gt(b.lcm, a.lcm);
        return a.i < b.i || (a.i == b.i && a.j < b.j);
    };
    std::vector<PairEntry> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Mono l = Mono::lcm(g[i].lt().m, g[j].lt().m);
            if (l.deg() == g[i].lt().m.deg() + g[j].lt().m.deg()) continue;  // coprime
            pairs.push_back({i, j, l, l.deg()});
        }
        std::sort(pairs.begin(), pairs.end(), pair_less);
    };
    for (size_t j = 1; j < g.size(); ++j) push_pairs_for(j);

    size_t reductions = 0;
    while (!pairs.empty()) {
        PairEntry pr = pairs.front();
        pairs.erase(pairs.begin());
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || !g[k].lt().m.divides(pr.lcm)) continue;
            bool pending = false;
            for (const auto& q : pairs)
                if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
                    (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k))) {
                    pending = true;
                    break;
                }
            if (!pending) skip = true;  // chain criterion
        }
        if (skip) continue;
        if (reductions >= budget) {
            out.complete = false;
            break;
        }
        ++reductions;
        const Poly &fi = g[pr.i], &fj = g[pr.j];
        Term ti{pr.lcm.div(fi.lt().m), F.one()};
        Term tj{pr.lcm.div(fj.lt().m), F.one()};
        Poly s = p_sub(F, o, p_mul_term(F, fi, ti), p_mul_term(F, fj, tj));
        Poly nf = normal_form(F, o, std::move(s), g);
        if (!nf.is_zero()) {
            g.push_back(p_monic(F, nf));
            push_pairs_for(g.size() - 1);
        }
    }
    reduce_gb(F, o, g);
    out.g = std::move(g);
    out.reductions = reductions;
    return out;
}

std::vector<std::vector<Poly>> syzygy_generators(const Field& F, const Order& o,
                                                 const std::vector<Poly>& gens) {
    // cofactor-tracked Buchberger with NO pair criteria: every S-pair's zero
    // reduction contributes a syzygy, and together they generate the module
    size_t n = gens.size();
    struct Tagged {
        Poly f;
        std::vector<Poly> cof;
    };
    std::vector<Tagged> g;
    for (size_t i = 0; i < n; ++i) {
        if (gens[i].is_zero()) continue;
        Tagged t{p_resort(o, gens[i]), std::vector<Poly>(n)};
        t.cof[i].t.push_back({Mono::one(), F.one()});
        g.push_back(std::move(t));
    }
    std::vector<std::vector<Poly>> syz;
    auto reduce_full = [&](Tagged w) -> Tagged {
        Poly out;
        while (!w.f.is_zero()) {
            bool hit = false;
            for (const auto& b : g) {
                if (!b.f.lt().m.divides(w.f.lt().m)) continue;
                Term q{w.f.lt().m.div(b.f.lt().m), F.mul(w.f.lt().c, F.inv(b.f.lt().c))};
                w.f = p_sub(F, o, w.f, p_mul_term(F, b.f, q));
                for (size_t z = 0; z < n; ++z)
                    if (!b.cof[z].is_zero())
                        w.cof[z] = p_sub(F, o, w.cof[z], p_mul_term(F, b.cof[z], q));
                hit = true;
                break;
            }
            if (!hit) {
                out.t.push_back(w.f.lt());
                w.f.t.erase(w.f.t.begin());
            }
        }
        w.f = std::move(out);
        return w;
    };
    std::vector<PairEntry> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Mono l = Mono::lcm(g[i].f.lt().m, g[j].f.lt().m);
            pairs.push_back({i, j, l, l.deg()});
        }
    };
    for (size_t j = 1; j < g.size(); ++j) push_pairs_for(j);
    auto pair_less = [&](const PairEntry& a, const PairEntry& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (!(a.lcm == b.lcm)) return o.gt(b.lcm, a.lcm);
        return a.i < b.i || (a.i == b.i && a.j < b.j);
    };
    while (!pairs.empty()) {
        std::sort(pairs.begin(), pairs.end(), pair_less);
        PairEntry pr = pairs.front();
        pairs.erase(pairs.begin());
        const Tagged &fi = g[pr.i], &fj = g[pr.j];
        Term ti{pr.lcm.div(fi.f.lt().m), F.inv(fi.f.lt().c)};
        Term tj{pr.lcm.div(fj.f.lt().m), F.inv(fj.f.lt().c)};
        Tagged s;
        s.f = p_sub(F, o, p_mul_term(F, fi.f, ti), p_mul_term(F, fj.f, tj));
        s.cof.resize(n);
        for (size_t z = 0; z < n; ++z) {
            Poly a = fi.cof[z].is_zero() ? Poly{} : p_mul_term(F, fi.cof[z], ti);
            Poly b = fj.cof[z].is_zero() ? Poly{} : p_mul_term(F, fj.cof[z], tj);
            s.cof[z] = p_sub(F, o, a, b);
        }
        Tagged r = reduce_full(std::move(s));
        if (r.f.is_zero()) {
            bool nonzero = false;
            for (const auto& c : r.cof) nonzero = nonzero || !c.is_zero();
            if (nonzero) syz.push_back(std::move(r.cof));
        } else {
            g.push_back(std::move(r));
            push_pairs_for(g.size() - 1);
        }
    }
    return syz;
}

std::vector<Mono> monomials_of_degree(int d, int nv) {
    std::vector<Mono> out;
    if (d < 0) return out;
    Mono m;
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == nv - 1) {
            m.e[var] = uint8_t(rem);
            out.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (int a = rem; a >= 0; --a) {
            m.e[var] = uint8_t(a);
            rec(var + 1, rem - a);
        }
        m.e[var] = 0;
    };
    rec(0, d);
    return out;
}

long long count_monomials(int d, int nv) {
    if (d < 0) return 0;
    long long total = 1;
    for (int i = 1; i <= nv - 1; ++i) total = total * (d + i) / i;
    return total;
}

// --- Hilbert -------------------------------------------------------------------

namespace {

std::vector<Mono> minimalize(std::vector<Mono> gens) {
    std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) { return a.deg() < b.deg(); });
    std::vector<Mono> out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

void poly_addmul(std::vector<long long>& a, const std::vector<long long>& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Mono> gens, int nv) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.size() == 1) {
        if (gens[0].deg() == 0) return {0};
        std::vector<long long> r(gens[0].deg() + 1, 0);
        r[0] = 1;
        r[gens[0].deg()] -= 1;
        return r;
    }
    bool pure = true;
    for (const auto& m : gens) {
        int nz = 0;
        for (int i = 0; i < kMaxVars; ++i) nz += m.e[i] ? 1 : 0;
        if (nz > 1) {
            pure = false;
            break;
        }
    }
    if (pure) {
        std::vector<long long> r{1};
        for (const auto& m : gens) {
            std::vector<long long> f(m.deg() + 1, 0);
            f[0] = 1;
            f[m.deg()] = -1;
            std::vector<long long> nr(r.size() + f.size() - 1, 0);
            for (size_t i = 0; i < r.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) nr[i + j] += r[i] * f[j];
            r = std::move(nr);
        }
        return r;
    }
    // pivot: the most frequent variable among mixed generators; splitting on
    // x_v strictly shrinks both branches
    int counts[kMaxVars] = {0};
    for (const auto& m : gens) {
        int nz = 0;
        for (int i = 0; i < kMaxVars; ++i) nz += m.e[i] ? 1 : 0;
        if (nz < 2) continue;
        for (int i = 0; i < kMaxVars; ++i)
            if (m.e[i]) counts[i]++;
    }
    int v = int(std::max_element(counts, counts + kMaxVars) - counts);
    Mono q = Mono::var(v, 1);
    std::vector<Mono> plus = gens;
    plus.push_back(q);
    std::vector<Mono> colon;
    for (const auto& m : gens) {
        Mono g = m;
        if (g.e[v]) g.e[v]--;
        colon.push_back(g);
    }
    auto np = hilbert_numerator(std::move(plus), nv);
    auto nc = hilbert_numerator(std::move(colon), nv);
    std::vector<long long> out;
    poly_addmul(out, np, 0);
    poly_addmul(out, nc, 1);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int monomial_dim_by_independent_sets(const std::vector<Mono>& gens, int nv) {
    for (const auto& m : gens)
        if (m.deg() == 0) return -1;
    int best = -1;
    for (unsigned T = 0; T < (1u << nv); ++T) {
        bool ok = true;
        for (const auto& m : gens) {
            unsigned supp = 0;
            for (int i = 0; i < nv; ++i)
                if (m.e[i]) supp |= 1u << i;
            if ((supp & ~T) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, int(std::popcount(T)));
    }
    return best;
}

long long HilbertData::hp_eval(long long t) const {
    long long den = 1;
    for (const auto& r : hp) den = std::lcm(den, r.den);
    long long num = 0, pw = 1;
    for (size_t i = 0; i < hp.size(); ++i) {
        num += hp[i].num * (den / hp[i].den) * pw;
        pw *= t;
    }
    if (den == 0 || num % den != 0) throw std::logic_error("non-integral Hilbert polynomial value");
    return num / den;
}

std::string HilbertData::hp_str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = int(hp.size()) - 1; i >= 0; --i) {
        long long n = hp[i].num, d = hp[i].den;
        if (n == 0) continue;
        if (!first) os << (n > 0 ? " + " : " - ");
        else if (n < 0) os << "-";
        long long an = std::llabs(n);
        if (d != 1) os << an << "/" << d;
        else if (an != 1 || i == 0) os << an;
        if (i >= 1) {
            if (d != 1 || an != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::optional<std::array<long long, 3>> HilbertData::surface_invariants() const {
    if (proj_dim != 2 || hp.size() != 3) return std::nullopt;
    long long d = 2 * hp[2].num / hp[2].den;
    long long pi2 = d + 2 - 2 * hp[1].num / hp[1].den;
    long long chi = hp[0].num / hp[0].den;
    if (pi2 % 2 != 0) return std::nullopt;
    return std::array<long long, 3>{d, pi2 / 2, chi};
}

// --- Ideal ---------------------------------------------------------------------

Ideal::Ideal(const Field& F, std::vector<Poly> gens, int nvars) : F_(F), nv_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
    Order o;
    for (auto& g : gens) {
        g = p_resort(o, std::move(g));
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const GB& Ideal::groebner(const Order& o, size_t budget) const {
    auto it = gb_cache_.find(o.key());
    if (it != gb_cache_.end() && it->second.complete) return it->second;
    std::vector<Poly> gens;
    for (auto g : gens_) gens.push_back(p_resort(o, std::move(g)));
    GB gb = buchberger(F_, o, std::move(gens), budget);
    auto [it2, ignored] = gb_cache_.insert_or_assign(o.key(), std::move(gb));
    return it2->second;
}

bool Ideal::contains(const Poly& f) const {
    const GB& gb = groebner();
    return normal_form(F_, gb.ord, f, gb.g).is_zero();
}

bool Ideal::is_one() const {
    const GB& gb = groebner();
    for (const auto& g : gb.g)
        if (g.lt().m.deg() == 0) return true;
    return false;
}

bool Ideal::equals(const Ideal& other) const {
    const GB& a = groebner();
    const GB& b = other.groebner();
    if (a.g.size() != b.g.size()) return false;
    for (size_t i = 0; i < a.g.size(); ++i) {
        if (a.g[i].t.size() != b.g[i].t.size()) return false;
        for (size_t j = 0; j < a.g[i].t.size(); ++j)
            if (!(a.g[i].t[j].m == b.g[i].t[j].m) || a.g[i].t[j].c != b.g[i].t[j].c) return false;
    }
    return true;
}

Ideal Ideal::plus(const Ideal& other) const {
    std::vector<Poly> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(F_, std::move(gens), nv_);
}

long long Ideal::hf(int d) const {
    if (d < 0) return 0;
    const GB& gb = groebner();
    long long count = 0;
    for (const auto& m : monomials_of_degree(d, nv_)) {
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

long long Ideal::slice_dim(int d) const { return count_monomials(d, nv_) - hf(d); }

std::vector<Poly> Ideal::slice_basis(int d) const {
    const GB& gb = groebner();
    std::vector<Poly> ech;
    auto reduce_into = [&](Poly w) -> Poly {
        while (!w.is_zero()) {
            bool hit = false;
            for (const auto& b : ech)
                if (b.lt().m == w.lt().m) {
                    w = p_sub(F_, gb.ord, w, p_scale(F_, w.lt().c, b));
                    hit = true;
                    break;
                }
            if (!hit) break;
        }
        return w;
    };
    for (const auto& g : gb.g) {
        int dd = d - g.lt().m.deg();
        if (dd < 0) continue;
        for (const auto& m : monomials_of_degree(dd, nv_)) {
            Poly w = reduce_into(p_mul_term(F_, g, Term{m, F_.one()}));
            if (!w.is_zero()) ech.push_back(p_monic(F_, w));
        }
    }
    return ech;
}

HilbertData Ideal::hilbert() const {
    const GB& gb = groebner();
    std::vector<Mono> lts;
    for (const auto& g : gb.g) lts.push_back(g.lt().m);
    HilbertData out;
    auto N = hilbert_numerator(lts, nv_);
    bool zero = true;
    for (auto c : N) zero = zero && c == 0;
    int indep = monomial_dim_by_independent_sets(minimalize(lts), nv_);
    if (zero) {
        out.affine_dim = -1;
        out.proj_dim = -2;
        out.degree = 0;
        if (indep != -1) throw std::logic_error("independent-set oracle disagrees (unit ideal)");
        return out;
    }
    auto divisible = [](const std::vector<long long>& f) {
        long long s = 0;
        for (auto c : f) s += c;
        return s == 0;
    };
    // HS(S/I) = N/(1-t)^nv = Nt/(1-t)^{nv-e} after cancelling (1-t)^e
    std::vector<long long> Nt = N;
    int e = 0;
    while (!Nt.empty() && divisible(Nt)) {
        std::vector<long long> q(Nt.size() - 1, 0);
        long long carry = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = Nt[i] + carry;
            carry = q[i];
        }
        Nt = std::move(q);
        ++e;
    }
    out.affine_dim = nv_ - e;
    out.proj_dim = out.affine_dim - 1;
    long long deg = 0;
    for (auto c : Nt) deg += c;
    out.degree = deg;
    if (indep != out.affine_dim)
        throw std::logic_error("Hilbert-series dimension disagrees with the independent-set oracle");
    int kap = out.affine_dim;
    if (kap > 0) {
        std::vector<long long> fact(16, 1);
        for (int i = 1; i < 16; ++i) fact[i] = fact[i - 1] * i;
        std::vector<long long> num(kap, 0);
        for (size_t j = 0; j < Nt.size(); ++j) {
            if (Nt[j] == 0) continue;
            std::vector<long long> pc{1};
            for (int i = 1; i <= kap - 1; ++i) {
                long long shift = (long long)kap - (long long)j - i;
                std::vector<long long> np(pc.size() + 1, 0);
                for (size_t z = 0; z < pc.size(); ++z) {
                    np[z + 1] += pc[z];
                    np[z] += pc[z] * shift;
                }
                pc = std::move(np);
            }
            for (size_t z = 0; z < pc.size(); ++z) num[z] += Nt[j] * pc[z];
        }
        for (int z = 0; z < kap; ++z) {
            long long n = num[z], d2 = fact[kap - 1];
            long long g = std::gcd(std::llabs(n), d2);
            if (g == 0) g = 1;
            out.hp.push_back({n / g, d2 / g});
        }
        while (out.hp.size() > 1 && out.hp.back().num == 0) out.hp.pop_back();
    }
    for (int d = 0; d <= 12; ++d) out.hf.push_back(hf(d));
    return out;
}

std::pair<int, long long> Ideal::dimension_degree() const {
    auto h = hilbert();
    return {h.proj_dim, h.degree};
}

Ideal Ideal::saturate_variable(int v) const {
    Order o = Order::with_last(v);
    const GB& gb = groebner(o);
    if (!gb.complete) throw std::runtime_error("saturation hit the S-pair budget");
    std::vector<Poly> gens;
    for (const auto& g : gb.g) {
        uint8_t minp = 255;
        for (const auto& t : g.t) minp = std::min(minp, t.m.e[v]);
        Poly h = g;
        for (auto& t : h.t) t.m.e[v] = uint8_t(t.m.e[v] - minp);
        gens.push_back(p_resort(Order{}, std::move(h)));
    }
    return Ideal(F_, std::move(gens), nv_);
}

Ideal Ideal::intersect(const Ideal& A, const Ideal& B) {
    const Field& F = A.field();
    if (A.nv_ != B.nv_) throw std::invalid_argument("variable count mismatch");
    if (A.gens_.empty() || B.gens_.empty()) return Ideal(F, {}, A.nv_);
    Order o;
    const auto& ga = A.groebner(o).g;
    const auto& gb = B.groebner(o).g;
    std::vector<Poly> all = ga;
    all.insert(all.end(), gb.begin(), gb.end());
    auto syz = syzygy_generators(F, o, all);
    std::vector<Poly> gens;
    size_t r = ga.size();
    for (const auto& s : syz) {
        Poly f;
        for (size_t i = 0; i < r; ++i)
            if (!s[i].is_zero()) f = p_add(F, o, f, p_mul(F, o, s[i], ga[i]));
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    // return the reduced basis so chained intersections stay small
    GB red = buchberger(F, o, std::move(gens));
    return Ideal(F, std::move(red.g), A.nv_);
}

Ideal Ideal::quotient(const Ideal& J) const {
    // (I : J) = cap_h (I : h);  (I : h) = (I cap <h>) / h
    if (J.gens_.empty()) throw std::invalid_argument("quotient by the zero ideal");
    Order o;
    bool first = true;
    Ideal acc = Ideal(F_, {}, nv_);
    for (const auto& h : J.gens_) {
        Ideal cap = intersect(*this, Ideal(F_, {h}, nv_));
        std::vector<Poly> divided;
        for (const auto& f : cap.gens_) {
            // f = q * h exactly; divide by long division (h's lt divides
            // every step because f is in <h>)
            Poly q, rem = f;
            while (!rem.is_zero()) {
                if (!h.lt().m.divides(rem.lt().m))
                    throw std::logic_error("intersection element not divisible by the principal generator");
                Term step{rem.lt().m.div(h.lt().m), F_.mul(rem.lt().c, F_.inv(h.lt().c))};
                q.t.push_back(step);
                rem = p_sub(F_, o, rem, p_mul_term(F_, h, step));
            }
            divided.push_back(p_resort(o, std::move(q)));
        }
        Ideal Ih(F_, std::move(divided), nv_);
        acc = first ? Ih : intersect(acc, Ih);
        first = false;
    }
    for (const auto& g : gens_)
        if (!acc.contains(g)) throw std::logic_error("quotient lost the original ideal");
    return acc;
}

Ideal Ideal::saturate(const std::vector<int>& vars) const {
    std::vector<int> vs = vars;
    if (vs.empty())
        for (int v = 0; v < nv_; ++v) vs.push_back(v);
    bool first = true;
    Ideal acc = Ideal(F_, {}, nv_);
    for (int v : vs) {
        Ideal sv = saturate_variable(v);
        acc = first ? sv : intersect(acc, sv);
        first = false;
    }
    return acc;
}

std::vector<Poly> Ideal::min_gens(const Field& F, std::vector<Poly> forms, int nv) {
    Order o;
    std::map<int, std::vector<Poly>> by_deg;
    for (auto& f : forms) {
        f = p_resort(o, std::move(f));
        if (!f.is_zero()) {
            if (!f.homogeneous()) throw std::invalid_argument("min_gens expects homogeneous forms");
            by_deg[f.deg()].push_back(std::move(f));
        }
    }
    std::vector<Poly> gens;
    for (auto& [d, polys] : by_deg) {
        std::vector<Poly> ech;
        auto reduce_into = [&](Poly w) -> Poly {
            while (!w.is_zero()) {
                bool hit = false;
                for (const auto& b : ech)
                    if (b.lt().m == w.lt().m) {
                        w = p_sub(F, o, w, p_scale(F, w.lt().c, b));
                        hit = true;
                        break;
                    }
                if (!hit) break;
            }
            return w;
        };
        for (const auto& g : gens) {
            int dd = d - g.deg();
            if (dd < 0) continue;
            for (const auto& m : monomials_of_degree(dd, nv)) {
                Poly w = reduce_into(p_mul_term(F, g, Term{m, F.one()}));
                if (!w.is_zero()) ech.push_back(p_monic(F, w));
            }
        }
        for (auto& f : polys) {
            Poly w = reduce_into(f);
            if (!w.is_zero()) {
                ech.push_back(p_monic(F, w));
                gens.push_back(f);
            }
        }
    }
    return gens;
}

}  // namespace rs12::poly
