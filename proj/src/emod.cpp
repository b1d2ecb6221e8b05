#include "rs12/emod.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rs12 {

size_t FreeEModule::dim_at(int d) const {
    size_t n = 0;
    for (int a : twists) {
        int k = d + a;  // E_k component
        if (k <= 0 && k >= -kVars) {
            // C(5, -k)
            static const size_t binom[6] = {1, 5, 10, 10, 5, 1};
            n += binom[-k];
        }
    }
    return n;
}

DegreeLayout::DegreeLayout(const FreeEModule& mod, int d) : degree(d) {
    for (int a : mod.twists) {
        offset.push_back(dim);
        int k = d + a;
        if (k <= 0 && k >= -kVars) {
            masks.push_back(ExtAlg::graded_basis(k));
            dim += masks.back().size();
        } else {
            masks.push_back({});
        }
    }
}

size_t DegreeLayout::index(size_t summand, unsigned mask) const {
    const auto& ms = masks[summand];
    auto it = std::lower_bound(ms.begin(), ms.end(), mask);
    if (it == ms.end() || *it != mask) throw std::logic_error("mask not in layout");
    return offset[summand] + size_t(it - ms.begin());
}

long BettiTable::at(int step, int twist) const {
    auto it = counts.find({step, twist});
    return it == counts.end() ? 0 : it->second;
}

std::map<int, long> BettiTable::step_twists(int step) const {
    std::map<int, long> r;
    for (const auto& [key, n] : counts)
        if (key.first == step && n != 0) r[key.second] = n;
    return r;
}

std::string BettiTable::render() const {
    if (counts.empty()) return "(empty)\n";
    int smin = 1 << 20, smax = -(1 << 20), rmin = 1 << 20, rmax = -(1 << 20);
    for (const auto& [key, n] : counts) {
        if (n == 0) continue;
        int row = key.first - key.second;
        smin = std::min(smin, key.first);
        smax = std::max(smax, key.first);
        rmin = std::min(rmin, row);
        rmax = std::max(rmax, row);
    }
    std::ostringstream os;
    for (int r = rmax; r >= rmin; --r) {
        os << r << " |";
        for (int s = smin; s <= smax; ++s) {
            long n = at(s, s - r);
            if (n == 0) os << "   .";
            else {
                std::string v = std::to_string(n);
                os << std::string(4 - std::min<size_t>(3, v.size()), ' ') << v;
            }
        }
        os << "\n";
    }
    return os.str();
}

EMatrix::EMatrix(const Field& F, FreeEModule target, FreeEModule source)
    : F_(F), src_(std::move(source)), tgt_(std::move(target)), e_(src_.rank() * tgt_.rank()) {}

void EMatrix::set(size_t r, size_t c, const ExtElem& v) {
    if (!v.is_zero() && v.degree() != tgt_.twists[r] - src_.twists[c])
        throw std::invalid_argument("entry degree violates homogeneity");
    e_[r * cols() + c] = v;
}

EMatrix EMatrix::identity(const Field& F, const FreeEModule& mod) {
    EMatrix m(F, mod, mod);
    ExtAlg E(F);
    for (size_t i = 0; i < mod.rank(); ++i) m.set(i, i, E.unit(F.one()));
    return m;
}

bool EMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool EMatrix::equal(const EMatrix& o) const {
    if (src_.twists != o.src_.twists || tgt_.twists != o.tgt_.twists) return false;
    ExtAlg E(F_);
    for (size_t i = 0; i < e_.size(); ++i)
        if (!E.equal(e_[i], o.e_[i])) return false;
    return true;
}

EMatrix EMatrix::compose(const EMatrix& other) const {
    if (other.tgt_.twists != src_.twists) throw std::invalid_argument("compose shape mismatch");
    ExtAlg E(F_);
    EMatrix r(F_, tgt_, other.src_);
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < other.cols(); ++j) {
            ExtElem acc;
            for (size_t k = 0; k < cols(); ++k)
                acc = E.add(acc, E.wedge(at(i, k), other.at(k, j)));
            r.set(i, j, acc);
        }
    return r;
}

EMatrix EMatrix::dualize() const {
    FreeEModule nsrc, ntgt;
    for (int a : tgt_.twists) nsrc.twists.push_back(-a);
    for (int a : src_.twists) ntgt.twists.push_back(-a);
    EMatrix r(F_, ntgt, nsrc);
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols(); ++j) r.set(j, i, at(i, j));
    return r;
}

FMatrix EMatrix::flatten(int d) const {
    DegreeLayout sl(src_, d), tl(tgt_, d);
    FMatrix m(F_, tl.dim, sl.dim);
    for (size_t c = 0; c < cols(); ++c) {
        for (size_t j = 0; j < sl.masks[c].size(); ++j) {
            unsigned ms = sl.masks[c][j];
            size_t col = sl.offset[c] + j;
            for (size_t r = 0; r < rows(); ++r) {
                const ExtElem& w = at(r, c);
                if (w.is_zero()) continue;
                for (int mw = 0; mw < kMasks; ++mw) {
                    if (F_.is_zero(w.c[mw]) || (mw & ms)) continue;
                    Field::Elem v = w.c[mw];
                    if (wedge_sign(unsigned(mw), ms) < 0) v = F_.neg(v);
                    size_t row = tl.index(r, unsigned(mw) | ms);
                    m.at(row, col) = F_.add(m.at(row, col), v);
                }
            }
        }
    }
    return m;
}

std::pair<int, int> EMatrix::source_degree_range() const {
    int lo = 1, hi = -1;
    for (int a : src_.twists) {
        lo = std::min(lo, -a - kVars);
        hi = std::max(hi, -a);
    }
    if (src_.twists.empty()) return {0, -1};
    return {lo, hi};
}

std::map<int, std::vector<std::vector<Field::Elem>>> EMatrix::kernel_window() const {
    std::map<int, std::vector<std::vector<Field::Elem>>> r;
    auto [lo, hi] = source_degree_range();
    for (int d = lo; d <= hi; ++d) r[d] = flatten(d).kernel_basis();
    return r;
}

std::vector<Field::Elem> EMatrix::right_mul_gen(const std::vector<Field::Elem>& v, int d,
                                                int i) const {
    DegreeLayout from(src_, d), to(src_, d - 1);
    if (v.size() != from.dim) throw std::invalid_argument("vector/layout mismatch");
    std::vector<Field::Elem> r(to.dim, 0);
    for (size_t s = 0; s < src_.rank(); ++s) {
        for (size_t j = 0; j < from.masks[s].size(); ++j) {
            Field::Elem x = v[from.offset[s] + j];
            if (F_.is_zero(x)) continue;
            unsigned m = from.masks[s][j];
            if (m & (1u << i)) continue;  // omega ^ e_i = 0
            Field::Elem val = wedge_sign(m, 1u << i) < 0 ? F_.neg(x) : x;
            size_t idx = to.index(s, m | (1u << i));
            r[idx] = F_.add(r[idx], val);
        }
    }
    return r;
}

EMatrix::MinimalGenerators EMatrix::kernel_minimal_generators() const {
    auto window = kernel_window();
    MinimalGenerators out;
    auto [lo, hi] = source_degree_range();
    // walk degrees downward so that ker_{d+1} is available when handling d
    for (int d = hi; d >= lo; --d) {
        const auto& kd = window[d];
        if (kd.empty()) continue;
        DegreeLayout layout(src_, d);
        RowSpan span(F_, layout.dim);
        if (window.count(d + 1)) {
            for (const auto& v : window[d + 1])
                for (int i = 0; i < kVars; ++i) span.add(right_mul_gen(v, d + 1, i));
        }
        long cnt = 0;
        for (const auto& v : kd) {
            if (span.add(v)) {
                ++cnt;
                out.gens.push_back({-d, v});
            }
        }
        if (cnt) out.counts_by_twist[-d] = cnt;
    }
    std::stable_sort(out.gens.begin(), out.gens.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

EMatrix EMatrix::syzygy_matrix() const { return syzygy_matrix(kernel_minimal_generators()); }

EMatrix EMatrix::syzygy_matrix(const MinimalGenerators& mg) const {
    std::vector<int> col_twists;
    std::vector<std::vector<Field::Elem>> cols;
    for (const auto& [twist, v] : mg.gens) {
        col_twists.push_back(twist);
        cols.push_back(v);
    }
    return from_columns(F_, src_, col_twists, cols);
}

EMatrix EMatrix::from_columns(const Field& F, const FreeEModule& target,
                              const std::vector<int>& col_twists,
                              const std::vector<std::vector<Field::Elem>>& cols) {
    FreeEModule src{col_twists};
    EMatrix m(F, target, src);
    for (size_t c = 0; c < cols.size(); ++c) {
        DegreeLayout layout(target, -col_twists[c]);
        if (cols[c].size() != layout.dim) throw std::invalid_argument("column/layout mismatch");
        for (size_t r = 0; r < target.rank(); ++r) {
            ExtElem entry;
            int word = std::popcount(unsigned(layout.masks[r].empty() ? 0 : layout.masks[r][0]));
            bool any = false;
            for (size_t j = 0; j < layout.masks[r].size(); ++j) {
                Field::Elem x = cols[c][layout.offset[r] + j];
                if (!F.is_zero(x)) {
                    entry.c[layout.masks[r][j]] = x;
                    any = true;
                }
            }
            entry.word = any ? word : -1;
            m.set(r, c, entry);
        }
    }
    return m;
}

BettiTable EMatrix::betti_window(int steps) const {
    if (steps < 1) throw std::invalid_argument("betti_window needs at least one step");
    BettiTable t;
    for (int a : tgt_.twists) t.counts[{0, a}]++;
    if (steps >= 1)
        for (int a : src_.twists) t.counts[{1, a}]++;
    EMatrix cur = *this;
    for (int s = 2; s <= steps; ++s) {
        if (cur.cols() == 0) break;
        auto mg = cur.kernel_minimal_generators();
        for (const auto& [twist, n] : mg.counts_by_twist) t.counts[{s, twist}] += n;
        if (mg.gens.empty()) break;
        cur = cur.syzygy_matrix(mg);
    }
    return t;
}

nlohmann::json EMatrix::to_json() const {
    ExtAlg E(F_);
    nlohmann::ordered_json j;
    j["p"] = F_.p();
    j["source_twists"] = src_.twists;
    j["target_twists"] = tgt_.twists;
    std::vector<std::vector<std::string>> entries;
    for (size_t r = 0; r < rows(); ++r) {
        std::vector<std::string> row;
        for (size_t c = 0; c < cols(); ++c) row.push_back(E.str(at(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = entries;
    return j;
}

EMatrix EMatrix::from_json(const nlohmann::json& j) {
    Field F(j.at("p").get<uint32_t>());
    FreeEModule src{j.at("source_twists").get<std::vector<int>>()};
    FreeEModule tgt{j.at("target_twists").get<std::vector<int>>()};
    EMatrix m(F, tgt, src);
    ExtAlg E(F);
    const auto& entries = j.at("entries");
    if (entries.size() != tgt.rank()) throw std::invalid_argument("entry row count mismatch");
    for (size_t r = 0; r < tgt.rank(); ++r) {
        if (entries[r].size() != src.rank()) throw std::invalid_argument("entry column count mismatch");
        for (size_t c = 0; c < src.rank(); ++c)
            m.set(r, c, E.parse(entries[r][c].get<std::string>()));
    }
    return m;
}

std::string EMatrix::to_json_string() const { return to_json().dump(2); }

EMatrix EMatrix::from_json_string(const std::string& s) {
    return from_json(nlohmann::json::parse(s));
}

EMatrix EMatrix::random(const Field& F, const FreeEModule& target, const FreeEModule& source,
                        Rng& rng) {
    ExtAlg E(F);
    EMatrix m(F, target, source);
    for (size_t r = 0; r < target.rank(); ++r)
        for (size_t c = 0; c < source.rank(); ++c) {
            int deg = target.twists[r] - source.twists[c];
            if (deg > 0 || deg < -kVars) continue;
            m.set(r, c, E.random(rng, -deg));
        }
    return m;
}

EMatrix hcat(const EMatrix& A, const EMatrix& B) {
    if (A.target().twists != B.target().twists) throw std::invalid_argument("hcat target mismatch");
    FreeEModule src;
    src.twists = A.source().twists;
    src.twists.insert(src.twists.end(), B.source().twists.begin(), B.source().twists.end());
    EMatrix m(A.field(), A.target(), src);
    for (size_t r = 0; r < A.rows(); ++r) {
        for (size_t c = 0; c < A.cols(); ++c) m.set(r, c, A.at(r, c));
        for (size_t c = 0; c < B.cols(); ++c) m.set(r, A.cols() + c, B.at(r, c));
    }
    return m;
}

}  // namespace rs12
