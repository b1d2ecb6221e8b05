// Commutative graded polynomial algebras over F_p (up to 8 variables, 5 by
// default) with a Buchberger engine: reduced Groebner bases under (permuted)
// degrevlex orders, exact intersections and quotients via cofactor-tracked
// zero reductions, saturation, Hilbert series data (dimension, degree,
// Hilbert polynomial), and the Jacobian smoothness certificate.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rs12/ff.hpp"

namespace rs12::poly {

constexpr int kMaxVars = 8;

struct Mono {
    std::array<uint8_t, kMaxVars> e{};
    int deg() const {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    uint64_t key() const {
        uint64_t r = uint64_t(deg());
        for (int i = 0; i < kMaxVars; ++i) r = (r << 7) | e[i];
        return r;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono mul(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(e[i] + o.e[i]);
        return r;
    }
    Mono div(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(e[i] - o.e[i]);
        return r;
    }
    static Mono lcm(const Mono& a, const Mono& b) {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static Mono var(int i, int pow = 1) {
        Mono r;
        r.e[i] = uint8_t(pow);
        return r;
    }
    static Mono one() { return Mono{}; }
};

/// Degrevlex with a variable priority permutation: seq[0] is the most
/// significant variable, seq.back() the cheapest (the saturation variable).
/// Variables beyond the ring's count always carry exponent zero, so one
/// fixed-width order serves every ring size.
struct Order {
    std::array<uint8_t, kMaxVars> seq{0, 1, 2, 3, 4, 5, 6, 7};
    static Order with_last(int v);
    bool gt(const Mono& a, const Mono& b) const;
    uint64_t key() const {
        uint64_t r = 0;
        for (int i = 0; i < kMaxVars; ++i) r = (r << 8) | seq[i];
        return r;
    }
};

struct Term {
    Mono m;
    Field::Elem c;
};

/// Terms sorted descending under the owning order.
struct Poly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
    int deg() const { return t.empty() ? -1 : t.front().m.deg(); }
    bool homogeneous() const;
};

Poly p_add(const Field& F, const Order& o, const Poly& a, const Poly& b);
Poly p_sub(const Field& F, const Order& o, const Poly& a, const Poly& b);
Poly p_scale(const Field& F, Field::Elem s, const Poly& a);
Poly p_mul_term(const Field& F, const Poly& a, const Term& t);
Poly p_mul(const Field& F, const Order& o, const Poly& a, const Poly& b);
Poly p_monic(const Field& F, const Poly& a);
Poly p_resort(const Order& o, Poly a);
Poly p_derivative(const Field& F, const Poly& a, int var);
/// Exact division by a single term (throws if not divisible).
Poly p_div_term(const Field& F, const Poly& a, const Term& t);
/// Substitute x_i -> linear forms (rows of sub).
Poly p_substitute(const Field& F, const Order& o, const Poly& a,
                  const std::vector<std::vector<Field::Elem>>& sub, int nv);
/// Determinant of a square polynomial matrix (Laplace expansion).
Poly p_det(const Field& F, const Order& o, const std::vector<std::vector<Poly>>& m);

std::string p_str(const Field& F, const Poly& a);
Poly p_parse(const Field& F, const Order& o, const std::string& s);

/// Full normal form against a list of polys.
Poly normal_form(const Field& F, const Order& o, Poly f, const std::vector<Poly>& basis);

struct GB {
    Order ord;
    std::vector<Poly> g;
    bool complete = true;
    size_t reductions = 0;
};

GB buchberger(const Field& F, const Order& o, std::vector<Poly> gens, size_t budget = SIZE_MAX);

/// Generators of the syzygy module of the given polynomials, by cofactor
/// tracking through a criteria-free Buchberger run (every S-pair processed,
/// so the collected zero reductions generate all syzygies).
std::vector<std::vector<Poly>> syzygy_generators(const Field& F, const Order& o,
                                                 const std::vector<Poly>& gens);

/// Enumerate the monomials of degree d in the first nv variables.
std::vector<Mono> monomials_of_degree(int d, int nv);
long long count_monomials(int d, int nv);

// --- Hilbert data ------------------------------------------------------------

struct Rational {
    long long num = 0, den = 1;
};

struct HilbertData {
    int affine_dim = 0;
    int proj_dim = -1;
    long long degree = 0;
    std::vector<Rational> hp;   // Hilbert polynomial coefficients, hp[i] * t^i
    std::vector<long long> hf;  // Hilbert function values 0..(window)
    std::optional<std::array<long long, 3>> surface_invariants() const;
    long long hp_eval(long long t) const;
    std::string hp_str() const;
};

std::vector<long long> hilbert_numerator(std::vector<Mono> gens, int nv);
int monomial_dim_by_independent_sets(const std::vector<Mono>& gens, int nv);

// --- Ideals -------------------------------------------------------------------

class Ideal {
public:
    Ideal(const Field& F, std::vector<Poly> gens, int nvars = 5);
    static Ideal zero(const Field& F, int nvars = 5) { return Ideal(F, {}, nvars); }

    const Field& field() const { return F_; }
    int nvars() const { return nv_; }
    const std::vector<Poly>& gens() const { return gens_; }

    const GB& groebner(const Order& o = Order{}, size_t budget = SIZE_MAX) const;
    bool contains(const Poly& f) const;
    bool is_one() const;
    bool equals(const Ideal& other) const;
    Ideal plus(const Ideal& other) const;

    long long hf(int d) const;
    long long slice_dim(int d) const;
    std::vector<Poly> slice_basis(int d) const;

    HilbertData hilbert() const;
    std::pair<int, long long> dimension_degree() const;

    /// I : x_v^infinity by the reverse-lex trick.
    Ideal saturate_variable(int v) const;
    /// I : m^infinity where m is generated by the listed variables
    /// (default: all of them) -- the intersection of the single-variable
    /// saturations, computed exactly.
    Ideal saturate(const std::vector<int>& vars = {}) const;

    /// Exact intersection (syzygy route).
    static Ideal intersect(const Ideal& A, const Ideal& B);
    /// Exact ideal quotient (I : J).
    Ideal quotient(const Ideal& J) const;

    static std::vector<Poly> min_gens(const Field& F, std::vector<Poly> forms, int nv = 5);

private:
    Field F_;
    int nv_;
    std::vector<Poly> gens_;
    mutable std::map<uint64_t, GB> gb_cache_;
};

// --- smoothness ----------------------------------------------------------------

enum class Smoothness { Smooth, NotSmooth, Undetermined };

struct SmoothnessReport {
    Smoothness verdict = Smoothness::Undetermined;
    int singular_proj_dim = -2;
    std::string witness_point;
    std::string method;
    int codim = 0;
};

struct SmoothnessBudget {
    int point_field_degree = 2;
    int slice_tries = 4;
    size_t spair_budget = 2000000;
};

/// Jacobian criterion for the projective scheme in P^4 cut out by I
/// (5-variable rings only; I saturated, support equidimensional of the given
/// projective dimension).  Never returns a wrong answer.
SmoothnessReport is_smooth(const Ideal& I, int expected_proj_dim,
                           const SmoothnessBudget& budget = SmoothnessBudget{});

/// Points of V(I) in P^4(F_{p^k}), normalized projective tuples.
std::vector<std::vector<Field::Elem>> rational_points(const Ideal& I, uint32_t ext_degree);

}  // namespace rs12::poly
