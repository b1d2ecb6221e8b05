// The two construction drivers over small finite fields:
//   I.  random search for the quadratic block B2 with the fixed linear block
//       B1, filtered by the rank/resolution gates;
//   II. the 120x140 linear system attached to a linear block A1, its rank
//       invariant N, and sampling of B2 from the solution space.
// Plus the first-order deformation computation (tangent/moduli dimensions)
// at a monad.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rs12/monad.hpp"

namespace rs12::search {

/// The fixed 3x2 linear block ((e0,e1),(e1,e2),(e3,e4)).
EMatrix fixed_B1(const Field& F);
/// Uniformly random 3x2 block with entries in wedge^2 V (60 coefficients).
EMatrix random_B2(const Field& F, Rng& rng);
/// B = (B2, B1) : 2E(2) (+) 2E(1) -> 3E.
EMatrix assemble_B(const EMatrix& B2, const EMatrix& B1);
/// Rank gate: the 30x30 degree-(-3) flattening must have rank exactly 26
/// (kernel 4, cokernel 4).
bool quick_filter(const EMatrix& B);

/// Coefficient matrix of the relations B2' o A1 + B1 o A2' = 0: 120 rows
/// (entry of the 3x4 product x wedge^3 coordinate), 140 columns (80
/// coefficients of A2' first, then 60 of B2', masks ascending).
FMatrix build_linear_system(const EMatrix& A1, const EMatrix& B1);
/// N invariant = rank of the system.
int n_invariant(const EMatrix& A1, const EMatrix& B1);

struct SolutionSpace {
    int N = 0;
    /// Basis of the projection of the solution space onto the 60
    /// B2'-coordinates (echelonized, deterministic).
    std::vector<std::vector<Field::Elem>> b_basis;
    /// The 20-dimensional subspace of B2's whose columns are E-combinations
    /// of the columns of B1 (in the same 60 coordinates).
    std::vector<std::vector<Field::Elem>> b1_combos;
    int relations_among_b() const { return 60 - int(b_basis.size()); }
};
SolutionSpace solve_system(const EMatrix& A1, const EMatrix& B1);

std::vector<Field::Elem> coords_from_b2(const EMatrix& B2);
EMatrix b2_from_coords(const Field& F, const std::vector<Field::Elem>& coords);

struct B2Sample {
    EMatrix B2;
    int attempts = 0;
    int effective_params = 0;  // (140 - N - 1) - 20
};
/// Random element of the solution projection, resampled while it lies in the
/// degenerate B1-combination subspace.
B2Sample sample_B2_from_solutions(const SolutionSpace& sol, const Field& F, Rng& rng);

/// Uniform 2x4 linear block.
EMatrix random_A1(const Field& F, Rng& rng);
/// Random A1 whose first `planted` columns are random vectors of the row
/// space of B1 (forcing shared points on the two Veronese images, hence
/// N <= 120 - planted).
EMatrix planted_A1(const Field& F, Rng& rng, int planted);
/// Deterministic search for an A1 with the exact N value (planted columns
/// chosen from the target: 119 -> 1, 118 -> 2, else 0).
std::optional<EMatrix> find_A1_with_N(const Field& F, int targetN, Rng& rng, int max_tries);

// ---------------------------------------------------------------------------
// First-order deformations.

/// Dimension of the symmetry group GL4 x H x GL3 acting on monad pairs;
/// its infinitesimal action is verified by lie_direction membership tests.
constexpr long kGroupDim = 53;
/// Dimension of the parameter space of linear blocks B1 up to equivalence.
constexpr long kB1ParamDim = 18;

struct ModuliReport {
    long dim_ker_dphi = 0;  // expected 90
    long group_dim = kGroupDim;
    long tangent = 0;  // dim ker - (group_dim - 1); expected 38
    long construction1_moduli = 0;  // tangent - kB1ParamDim; expected 20
    std::optional<int> N;
    long family_dim() const { return N ? long(*N) - 99 : -1; }
    long family_codim() const { return N ? 120 - long(*N) : -1; }
};

/// The differential of (A', B') |-> B o A' + B' o A at (A, B), as a
/// 120 x 210 field matrix (V3 coordinates by V1 (+) V2 coordinates).
FMatrix dphi_matrix(const Monad& m);
ModuliReport tangent_dimension(const Monad& m, std::optional<int> N = {});

/// Random infinitesimal direction of the group action at (A, B); its image
/// under dphi must vanish.
std::pair<EMatrix, EMatrix> lie_direction(const Monad& m, Rng& rng);

/// Coordinates of a Hom-space element in the layout used by dphi_matrix.
std::vector<Field::Elem> v1_coords(const EMatrix& Aprime);
std::vector<Field::Elem> v2_coords(const EMatrix& Bprime);
std::vector<Field::Elem> v3_coords(const EMatrix& P);

}  // namespace rs12::search
