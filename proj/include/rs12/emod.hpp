// Graded free modules over the exterior algebra and homogeneous matrices
// between them: degreewise flattening to field matrices, kernel windows,
// minimal generators, iterated syzygy steps (Betti tables), duals.
//
// Matrices act by left wedge multiplication on column vectors; the module
// action used to close kernels under multiplication is from the right, so
// the two commute without Koszul signs.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rs12/extalg.hpp"

namespace rs12 {

/// Direct sum of twists E(a_1) (+) ... (+) E(a_n).  E(a)_d = E_{a+d}, so the
/// generator of E(a) sits in degree -a and the summand is alive only for
/// -5 - a <= d <= -a.
struct FreeEModule {
    std::vector<int> twists;

    size_t rank() const { return twists.size(); }
    /// Dimension of the degree-d component.
    size_t dim_at(int d) const;
};

/// Coordinates of a degree-d element of a free module: for each summand (in
/// order), one field coefficient per monomial mask of E_{d + twist}.
struct DegreeLayout {
    int degree;
    std::vector<size_t> offset;            // per summand
    std::vector<std::vector<unsigned>> masks;  // per summand, ascending
    size_t dim = 0;

    DegreeLayout(const FreeEModule& mod, int d);
    size_t index(size_t summand, unsigned mask) const;
};

struct BettiTable {
    /// counts[(step, twist)] = number of minimal generators.
    std::map<std::pair<int, int>, long> counts;

    long at(int step, int twist) const;
    bool operator==(const BettiTable& o) const { return counts == o.counts; }
    /// Multiset of twists at one homological step.
    std::map<int, long> step_twists(int step) const;
    /// Render in the conventional layout (rows r, columns s, entry = count of
    /// twist s - r generators at step s).
    std::string render() const;
};

class EMatrix {
public:
    EMatrix(const Field& F, FreeEModule target, FreeEModule source);

    const Field& field() const { return F_; }
    const FreeEModule& source() const { return src_; }
    const FreeEModule& target() const { return tgt_; }
    size_t rows() const { return tgt_.rank(); }
    size_t cols() const { return src_.rank(); }

    const ExtElem& at(size_t r, size_t c) const { return e_[r * cols() + c]; }
    /// Entries must be homogeneous of degree target[r] - source[c].
    void set(size_t r, size_t c, const ExtElem& v);

    static EMatrix identity(const Field& F, const FreeEModule& mod);
    bool is_zero() const;
    bool equal(const EMatrix& o) const;

    /// this o other (apply other first); entrywise wedge products.
    EMatrix compose(const EMatrix& other) const;
    /// Transpose with negated twists; dualize(dualize(M)) == M.
    EMatrix dualize() const;

    /// The field matrix of the degree-d component of the map.
    FMatrix flatten(int d) const;

    /// Degrees where the source is nonzero, lowest to highest (with one
    /// degree of slack on each side already implied by emptiness outside).
    std::pair<int, int> source_degree_range() const;

    /// Kernel bases per degree over the full activity window.  Each basis
    /// vector is a coordinate vector in the DegreeLayout of the source.
    std::map<int, std::vector<std::vector<Field::Elem>>> kernel_window() const;

    /// Minimal generators of the kernel: counts by twist and explicit
    /// representatives (twist, coordinate vector).  Representatives are the
    /// lexicographically first RREF basis vectors of ker_d surviving modulo
    /// ker_{d+1} * V.
    struct MinimalGenerators {
        std::map<int, long> counts_by_twist;
        std::vector<std::pair<int, std::vector<Field::Elem>>> gens;  // sorted by twist
    };
    MinimalGenerators kernel_minimal_generators() const;

    /// Assemble the syzygy matrix F_new -> source from kernel generators.
    EMatrix syzygy_matrix() const;
    EMatrix syzygy_matrix(const MinimalGenerators& mg) const;

    /// Betti table of the minimal free resolution of coker(this), computed
    /// through the given number of syzygy steps (step 0 = target twists).
    BettiTable betti_window(int steps) const;

    nlohmann::json to_json() const;
    static EMatrix from_json(const nlohmann::json& j);
    std::string to_json_string() const;
    static EMatrix from_json_string(const std::string& s);

    /// Column c as a degree-(-source.twists[c]) coordinate vector statement:
    /// helper converting a coordinate vector at degree d into matrix columns.
    static EMatrix from_columns(const Field& F, const FreeEModule& target,
                                const std::vector<int>& col_twists,
                                const std::vector<std::vector<Field::Elem>>& cols);

    /// Right action: coordinate vector at degree d times e_i, landing at d-1.
    std::vector<Field::Elem> right_mul_gen(const std::vector<Field::Elem>& v, int d, int i) const;

    /// Random homogeneous matrix with the given twists (entries uniform).
    static EMatrix random(const Field& F, const FreeEModule& target,
                          const FreeEModule& source, Rng& rng);

private:
    Field F_;
    FreeEModule src_, tgt_;
    std::vector<ExtElem> e_;
};

/// Horizontal concatenation [A | B] (same target).
EMatrix hcat(const EMatrix& A, const EMatrix& B);

}  // namespace rs12
