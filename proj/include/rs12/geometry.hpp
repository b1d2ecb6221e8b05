// Determinantal and Grassmannian geometry of the two linear blocks: the
// rank-one loci (a rational normal quartic for A1, a cubic scroll for B1),
// their disjointness, and the intersection count of the two Veronese images
// in P(wedge^2 V) -- by brute-force point enumeration over F_{p^k} (k <= 3)
// and by a bigraded Groebner degree count, which must agree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rs12/emod.hpp"
#include "rs12/poly.hpp"

namespace rs12::geom {

/// Interpret a matrix of linear exterior entries as a matrix of linear forms
/// (e_i -> x_i).
std::vector<std::vector<poly::Poly>> as_linear_forms(const EMatrix& M);

/// Every column (2x4 input) or row (3x2 input) must span a 2-plane of V.
bool rank2_condition(const EMatrix& M);

/// Ideal of 2x2 minors of a matrix of linear forms (5 variables).
poly::Ideal rank1_locus(const EMatrix& M);

/// Empty projective intersection of supports.
bool disjoint(const poly::Ideal& I, const poly::Ideal& J);

struct IntersectionCount {
    long long r = -1;             // settled count of distinct geometric points
    long long by_enumeration = -1;  // residue degree <= 3
    long long by_groebner = -1;     // bigraded degree count (length)
    bool methods_agree = false;
    bool finite = true;
    std::vector<int> points_per_degree;  // counts of closed points by residue degree 1..3
    std::string note;
};

/// Number of geometric points where the 2-plane spanned by a column pair of
/// A1 coincides with one spanned by a row pair of B1 (the intersection of
/// the two Veronese images in the Grassmannian).  Throws on an infinite
/// intersection.
IntersectionCount zazb_intersection(const EMatrix& A1, const EMatrix& B1);

/// Enumeration side only (cheap); used inside property sweeps.
struct EnumCount {
    long long distinct_leq3 = 0;
    std::vector<int> per_degree;  // closed points of residue degree 1, 2, 3
    bool suspect_infinite = false;
};
EnumCount enumerate_intersection(const EMatrix& A1, const EMatrix& B1);

struct LemmaReport {
    long long r = -1;
    int N = -1;
    bool finite = true;
    bool c1_smooth = false;    // C_{A1} smooth (and of dimension 1, degree 4)
    bool c2_disjoint = false;  // C_{A1} disjoint from the scroll of B1
    bool upper_bound_ok = false;   // N <= 120 - r
    bool six_point_bound_ok = true;  // r <= 6 whenever c1 and c2 hold
};
/// Check the two structural bounds for one (A1, B1) pair; N is recomputed
/// through the linear system when not supplied.
LemmaReport lemma_bounds_check(const EMatrix& A1, const EMatrix& B1, std::optional<int> N = {});

}  // namespace rs12::geom
