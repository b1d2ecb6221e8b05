// Small prime fields F_p and their quadratic/cubic extensions, plus dense
// exact linear algebra (RREF, kernels, solving).  Everything downstream --
// exterior-algebra flattenings, section-space kernels, point enumeration --
// reduces to these routines.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs12 {

/// F_{p^k} for small p and k <= 3.  Elements are packed base-p digit vectors
/// (digit i in byte i of a uint32_t); for k == 1 an element is just its
/// residue.  The modulus for each (p, k) is fixed once in a table so that
/// point counts over extensions are reproducible run to run.
class Field {
public:
    using Elem = uint32_t;

    explicit Field(uint32_t p) : Field(p, 1) {}
    Field(uint32_t p, uint32_t k);
    Field(uint32_t p, uint32_t k, const std::array<uint32_t, 3>& modulus);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t q() const { return q_; }
    bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    /// Reduce an integer into the prime subfield.
    Elem from_int(int64_t v) const {
        int64_t r = v % int64_t(p_);
        if (r < 0) r += p_;
        return Elem(r);
    }

    Elem add(Elem a, Elem b) const {
        if (k_ == 1) { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
        uint32_t r = 0;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t s = dig(a, i) + dig(b, i);
            if (s >= p_) s -= p_;
            r |= s << (8 * i);
        }
        return r;
    }
    Elem neg(Elem a) const {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        uint32_t r = 0;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t d = dig(a, i);
            r |= (d == 0 ? 0 : p_ - d) << (8 * i);
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (k_ == 1) return (a * b) % p_;
        return mul_ext(a, b);
    }

    Elem pow(Elem a, uint64_t e) const;
    Elem inv(Elem a) const;
    /// Frobenius x -> x^p (identity on the prime subfield).
    Elem frobenius(Elem a) const { return pow(a, p_); }

    /// Enumeration: elements in bijection with [0, q) by base-p digits.
    Elem nth(uint64_t i) const;
    uint64_t index(Elem a) const;

    /// Symmetric representative in (-p/2, p/2]; prime fields only.
    int64_t symmetric(Elem a) const;

    std::string str(Elem a) const;
    std::string label() const;

private:
    uint32_t p_, k_;
    uint64_t q_;
    std::array<uint32_t, 3> mod_{};  // monic modulus: t^k + mod_[k-1] t^{k-1} + ... + mod_[0]

    static uint32_t dig(Elem a, uint32_t i) { return (a >> (8 * i)) & 0xff; }
    Elem mul_ext(Elem a, Elem b) const;
    void check_modulus() const;
};

struct RrefResult;

/// Dense matrix over a Field, row-major.  Elimination uses first-nonzero
/// pivoting with no randomization, so the reduced form (and every kernel
/// basis derived from it) is deterministic.
class FMatrix {
public:
    using Elem = Field::Elem;

    FMatrix(const Field& F, size_t rows, size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FMatrix identity(const Field& F, size_t n) {
        FMatrix m(F, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
        return m;
    }

    const Field& field() const { return F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Elem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    Elem at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    const Elem* row(size_t r) const { return a_.data() + r * cols_; }
    Elem* row(size_t r) { return a_.data() + r * cols_; }
    bool operator==(const FMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    FMatrix mul(const FMatrix& o) const;
    std::vector<Elem> mul_vec(const std::vector<Elem>& v) const;
    FMatrix transpose() const;

    RrefResult rref() const;
    size_t rank() const;
    /// Basis of the right null space; one vector per non-pivot column, in
    /// ascending column order, each normalized with a 1 in its free slot.
    std::vector<std::vector<Elem>> kernel_basis() const;
    /// A particular solution of M x = b, or nullopt if inconsistent.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const;

private:
    Field F_;
    size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct RrefResult {
    FMatrix R;
    std::vector<size_t> pivots;
};

/// Incremental row-space builder: feed rows one at a time, keeping an
/// echelonized basis.  Used for streaming rank computations (degree slices of
/// ideals, span tests) where the row count dwarfs the rank.
class RowSpan {
public:
    RowSpan(const Field& F, size_t cols) : F_(F), cols_(cols) {}
    /// Reduce v against the current basis; if a nonzero remainder survives,
    /// absorb it and return true.
    bool add(std::vector<Field::Elem> v);
    /// Reduce without absorbing; returns the remainder.
    std::vector<Field::Elem> reduce(std::vector<Field::Elem> v) const;
    bool contains(std::vector<Field::Elem> v) const;
    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<std::vector<Field::Elem>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivs_; }

private:
    Field F_;
    size_t cols_;
    std::vector<std::vector<Field::Elem>> rows_;
    std::vector<size_t> pivs_;
};

/// Deterministic splittable RNG (splitmix64).  All randomness in the project
/// flows from one master seed through Rng::child, so every search and every
/// certificate is replayable.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n) by rejection; portable across platforms.
    uint64_t below(uint64_t n) {
        uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }
    Field::Elem elem(const Field& F) { return F.nth(below(F.q())); }

    /// Child stream for trial #index under a master seed.
    static Rng child(uint64_t master, uint64_t index) {
        Rng r(master ^ (0x9E3779B97F4A7C15ull * (index + 1)));
        r.next();
        return r;
    }
};

}  // namespace rs12
