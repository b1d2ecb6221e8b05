#include "rs12/ff.hpp"

#include <algorithm>
#include <cassert>

namespace rs12 {

namespace {

// Fixed moduli per (p, k); reproducible extension arithmetic depends on these
// never changing.  Irreducibility for k <= 3 is equivalent to having no root,
// which check_modulus verifies at construction.
std::array<uint32_t, 3> fixed_modulus(uint32_t p, uint32_t k) {
    if (p == 3 && k == 2) return {1, 0, 0};  // t^2 + 1
    if (p == 3 && k == 3) return {1, 2, 0};  // t^3 + 2t + 1
    if (p == 5 && k == 2) return {2, 0, 0};  // t^2 + 2
    if (p == 5 && k == 3) return {1, 1, 0};  // t^3 + t + 1
    if (p == 2 && k == 2) return {1, 1, 0};  // t^2 + t + 1
    if (p == 2 && k == 3) return {1, 1, 0};  // t^3 + t + 1
    if (p == 7 && k == 2) return {1, 0, 0};  // t^2 + 1
    if (p == 7 && k == 3) return {2, 0, 0};  // t^3 + 2
    throw std::invalid_argument("no fixed modulus for this (p, k)");
}

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p) || p > 251) throw std::invalid_argument("modulus must be a small prime");
    if (k < 1 || k > 3) throw std::invalid_argument("extension degree must be 1..3");
    if (k > 1) mod_ = fixed_modulus(p, k);
    q_ = 1;
    for (uint32_t i = 0; i < k; ++i) q_ *= p;
    check_modulus();
}

Field::Field(uint32_t p, uint32_t k, const std::array<uint32_t, 3>& modulus)
    : p_(p), k_(k), mod_(modulus) {
    if (!is_prime(p) || p > 251) throw std::invalid_argument("modulus must be a small prime");
    if (k < 2 || k > 3) throw std::invalid_argument("explicit modulus needs k in 2..3");
    q_ = 1;
    for (uint32_t i = 0; i < k; ++i) q_ *= p;
    check_modulus();
}

void Field::check_modulus() const {
    if (k_ == 1) return;
    for (uint32_t i = 0; i < k_; ++i)
        if (mod_[i] >= p_) throw std::invalid_argument("modulus coefficients must be reduced");
    // no root in F_p  <=>  irreducible, since k <= 3
    for (uint32_t x = 0; x < p_; ++x) {
        uint64_t v = 1, acc = mod_[k_ - 1];
        // Horner on t^k + mod[k-1] t^{k-1} + ... + mod[0]
        acc = (acc + x) % p_;  // t + mod[k-1]
        for (int i = int(k_) - 2; i >= 0; --i) {
            acc = (acc * x + mod_[i]) % p_;
        }
        (void)v;
        if (acc == 0) throw std::invalid_argument("modulus is reducible (has a root)");
    }
}

Field::Elem Field::mul_ext(Elem a, Elem b) const {
    uint32_t ad[3] = {dig(a, 0), dig(a, 1), dig(a, 2)};
    uint32_t bd[3] = {dig(b, 0), dig(b, 1), dig(b, 2)};
    uint32_t c[5] = {0, 0, 0, 0, 0};
    for (uint32_t i = 0; i < k_; ++i)
        for (uint32_t j = 0; j < k_; ++j) c[i + j] += ad[i] * bd[j];
    // reduce t^m for m >= k using t^k = -(mod[k-1] t^{k-1} + ... + mod[0])
    for (int m = int(2 * k_) - 2; m >= int(k_); --m) {
        uint32_t v = c[m] % p_;
        c[m] = 0;
        if (v == 0) continue;
        for (uint32_t j = 0; j < k_; ++j) {
            c[m - k_ + j] += v * (p_ - mod_[j]) % p_ * 1u;
        }
    }
    uint32_t r = 0;
    for (uint32_t i = 0; i < k_; ++i) r |= (c[i] % p_) << (8 * i);
    return r;
}

Field::Elem Field::pow(Elem a, uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

Field::Elem Field::nth(uint64_t i) const {
    if (k_ == 1) return Elem(i % p_);
    Elem r = 0;
    for (uint32_t d = 0; d < k_; ++d) {
        r |= uint32_t(i % p_) << (8 * d);
        i /= p_;
    }
    return r;
}

uint64_t Field::index(Elem a) const {
    if (k_ == 1) return a;
    uint64_t r = 0, m = 1;
    for (uint32_t d = 0; d < k_; ++d) {
        r += uint64_t(dig(a, d)) * m;
        m *= p_;
    }
    return r;
}

int64_t Field::symmetric(Elem a) const {
    if (k_ != 1) throw std::logic_error("symmetric representative needs a prime field");
    int64_t v = a;
    if (2 * v > int64_t(p_)) v -= p_;
    return v;
}

std::string Field::str(Elem a) const {
    if (k_ == 1) return std::to_string(symmetric(a));
    std::string s = "[";
    for (uint32_t d = 0; d < k_; ++d) {
        if (d) s += ",";
        s += std::to_string(dig(a, d));
    }
    return s + "]";
}

std::string Field::label() const { return "F" + std::to_string(q_); }

FMatrix FMatrix::mul(const FMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    FMatrix r(F_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            Elem f = at(i, k);
            if (F_.is_zero(f)) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = F_.add(r.at(i, j), F_.mul(f, o.at(k, j)));
        }
    return r;
}

std::vector<FMatrix::Elem> FMatrix::mul_vec(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        Elem acc = 0;
        const Elem* ri = row(i);
        for (size_t j = 0; j < cols_; ++j)
            if (v[j]) acc = F_.add(acc, F_.mul(ri[j], v[j]));
        r[i] = acc;
    }
    return r;
}

FMatrix FMatrix::transpose() const {
    FMatrix r(F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Elimination core for prime fields with compile-time modulus: the hot path
// for every rank/kernel computation in the project.
template <uint32_t P>
void rref_prime(std::vector<uint32_t>& a, size_t rows, size_t cols,
                std::vector<size_t>& pivots) {
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t sel = rows;
        for (size_t r = prow; r < rows; ++r)
            if (a[r * cols + col] % P != 0) { sel = r; break; }
        if (sel == rows) continue;
        if (sel != prow)
            for (size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[prow * cols + j]);
        uint32_t* piv = &a[prow * cols];
        // normalize pivot to 1
        uint32_t pv = piv[col] % P;
        if (pv != 1) {
            uint32_t inv = 1;
            for (uint32_t t = 1; t < P; ++t)
                if ((t * pv) % P == 1) { inv = t; break; }
            for (size_t j = col; j < cols; ++j) piv[j] = (piv[j] * inv) % P;
        } else {
            for (size_t j = col; j < cols; ++j) piv[j] %= P;
        }
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow) continue;
            uint32_t f = a[r * cols + col] % P;
            if (!f) continue;
            uint32_t nf = P - f;
            uint32_t* rowr = &a[r * cols];
            for (size_t j = col; j < cols; ++j)
                rowr[j] = (rowr[j] + nf * piv[j]) % P;
        }
        pivots.push_back(col);
        ++prow;
    }
}

}  // namespace

RrefResult FMatrix::rref() const {
    FMatrix R = *this;
    std::vector<size_t> pivots;
    if (F_.k() == 1) {
        switch (F_.p()) {
            case 2: rref_prime<2>(R.a_, rows_, cols_, pivots); return {std::move(R), std::move(pivots)};
            case 3: rref_prime<3>(R.a_, rows_, cols_, pivots); return {std::move(R), std::move(pivots)};
            case 5: rref_prime<5>(R.a_, rows_, cols_, pivots); return {std::move(R), std::move(pivots)};
            case 7: rref_prime<7>(R.a_, rows_, cols_, pivots); return {std::move(R), std::move(pivots)};
            default: break;
        }
    }
    // generic field path
    size_t prow = 0;
    for (size_t col = 0; col < cols_ && prow < rows_; ++col) {
        size_t sel = rows_;
        for (size_t r = prow; r < rows_; ++r)
            if (!F_.is_zero(R.at(r, col))) { sel = r; break; }
        if (sel == rows_) continue;
        if (sel != prow)
            for (size_t j = 0; j < cols_; ++j) std::swap(R.at(sel, j), R.at(prow, j));
        Elem inv = F_.inv(R.at(prow, col));
        for (size_t j = col; j < cols_; ++j) R.at(prow, j) = F_.mul(R.at(prow, j), inv);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == prow || F_.is_zero(R.at(r, col))) continue;
            Elem f = F_.neg(R.at(r, col));
            for (size_t j = col; j < cols_; ++j)
                R.at(r, j) = F_.add(R.at(r, j), F_.mul(f, R.at(prow, j)));
        }
        pivots.push_back(col);
        ++prow;
    }
    return {std::move(R), std::move(pivots)};
}

size_t FMatrix::rank() const { return rref().pivots.size(); }

std::vector<std::vector<FMatrix::Elem>> FMatrix::kernel_basis() const {
    auto [R, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elem> v(cols_, 0);
        v[f] = F_.one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F_.neg(R.at(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FMatrix::Elem>> FMatrix::solve(const std::vector<Elem>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    FMatrix aug(F_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto [R, pivots] = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Elem> x(cols_, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R.at(i, cols_);
    return x;
}

bool RowSpan::add(std::vector<Field::Elem> v) {
    v = reduce(std::move(v));
    size_t lead = cols_;
    for (size_t j = 0; j < cols_; ++j)
        if (!F_.is_zero(v[j])) { lead = j; break; }
    if (lead == cols_) return false;
    Field::Elem inv = F_.inv(v[lead]);
    for (size_t j = lead; j < cols_; ++j) v[j] = F_.mul(v[j], inv);
    // keep existing rows reduced against the new one
    for (size_t r = 0; r < rows_.size(); ++r) {
        Field::Elem f = rows_[r][lead];
        if (F_.is_zero(f)) continue;
        Field::Elem nf = F_.neg(f);
        for (size_t j = lead; j < cols_; ++j)
            rows_[r][j] = F_.add(rows_[r][j], F_.mul(nf, v[j]));
    }
    // insert keeping pivot order
    size_t pos = 0;
    while (pos < pivs_.size() && pivs_[pos] < lead) ++pos;
    pivs_.insert(pivs_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<Field::Elem> RowSpan::reduce(std::vector<Field::Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Field::Elem f = v[pivs_[r]];
        if (F_.is_zero(f)) continue;
        Field::Elem nf = F_.neg(f);
        const auto& br = rows_[r];
        for (size_t j = pivs_[r]; j < cols_; ++j)
            v[j] = F_.add(v[j], F_.mul(nf, br[j]));
    }
    return v;
}

bool RowSpan::contains(std::vector<Field::Elem> v) const {
    v = reduce(std::move(v));
    for (auto x : v)
        if (!F_.is_zero(x)) return false;
    return true;
}

}  // namespace rs12
