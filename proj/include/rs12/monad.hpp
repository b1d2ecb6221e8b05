// Assembly and certification of the three-term complexes
//   4E(3) --A--> 2E(2) (+) 2E(1) --B--> 3E
// corresponding to twisted-differential monads on P4 whose middle homology is
// the twisted ideal sheaf of a degree-12, sectional-genus-13 surface:
// derivation of A from B's syzygies, the resolution-shape gates, the
// leftward exact-window check, and the expected cohomology ledger.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rs12/emod.hpp"

namespace rs12 {

/// Euler characteristic chi(I_X(j)) = C(j+4,4) - (6j^2 - 6j + 1) for the
/// ideal sheaf of a surface of degree 12, sectional genus 13, chi(O) = 1.
long chi_ideal_sheaf(long j);

/// The expected cohomology table of I_X(j) for -1 <= j <= 5: at most one
/// nonzero h^i per column, placed on the row forced by the sign of chi and
/// the holes pattern (3,.,2,2,1,1,0), with value |chi|.
struct NaturalCohomologyTable {
    /// row[j - (-1)] = cohomological index carrying the value, or -1 for the
    /// empty column.
    std::vector<int> row;
    std::vector<long> value;

    static NaturalCohomologyTable expected();
    long h(int i, int j) const;  // h^i(I_X(j)) for -1 <= j <= 5
};

struct Monad {
    EMatrix A;  // 4E(3) -> 2E(2) (+) 2E(1)
    EMatrix B;  // 2E(2) (+) 2E(1) -> 3E

    Monad(EMatrix a, EMatrix b);
    bool is_complex() const { return B.compose(A).is_zero(); }
};

/// Thrown by build_AB when B's resolution does not have the required shape;
/// carries the observed table.
struct BettiShapeError : std::runtime_error {
    BettiTable observed;
    explicit BettiShapeError(BettiTable t)
        : std::runtime_error("resolution shape gate failed:\n" + t.render()),
          observed(std::move(t)) {}
};

/// Resolution-shape classification of a candidate B (the step-2/step-3
/// syzygy data): twist-3 count must be 4, and then a1 = twist-4 count at
/// step 2, a2 = twist-4 count at step 3.
struct BettiClass {
    bool head_ok = false;  // step-2 twists are exactly {3: 4, 4: a1}
    long a1 = -1;
    long a2 = -1;
    BettiTable table;  // steps 0..3

    bool accepted() const { return head_ok && a1 == 5 && a2 == 0; }
};
BettiClass classify_B(const EMatrix& B);

/// The four twist-3 minimal syzygies of B assembled as A_B, the unique (up
/// to GL_4) first differential with B o A_B = 0.  Throws BettiShapeError
/// unless classify_B(B).accepted().
EMatrix build_AB(const EMatrix& B);

/// Syzygy gate on A_B: its minimal syzygies must be exactly 13 generators
/// of twist 5 (no linear syzygies, nothing deeper in the window).
struct ABReport {
    bool ok = false;
    std::map<int, long> observed;  // twist -> count
};
ABReport check_AB(const EMatrix& A_B);

/// Iterated minimal syzygy steps leftward from A_B; step 1 must be
/// {13 x E(5)} for accepted monads (step 0 returns the monad's own twists).
std::vector<std::map<int, long>> tate_left_window(const Monad& m, int steps);

/// Twist multisets the exact window should show, propagated from the
/// cohomology table: step 1 = {13 x E(5)}, step 2 = {37 x E(6)}, ...
std::map<int, long> expected_tate_step(int step);

}  // namespace rs12

#include "rs12/bott.hpp"
#include "rs12/poly.hpp"

namespace rs12 {

/// Extraction of the middle homology's equations.  The homology of the
/// section-level complex at offset k computes the degree-(4+k) piece of the
/// surface's ideal abstractly; to obtain honest polynomials we solve for a
/// bundle map from the middle term to O(4) killing the image of A (unique up
/// to the trivial maps factoring through B and one global scalar) and push
/// the kernel of B(k) through it.
class MonadSections {
public:
    MonadSections(Bott& bott, const Monad& m);

    /// dim ker B(k) - dim im A(k); equals h^0(I_X(4+k)) for certified monads.
    long homology_dim(int k) const;
    /// Euler characteristic of the section complex at offset k: must equal
    /// chi(I_X(4+k)) whenever the Bott vanishing applies (k >= 1).
    long section_chi(int k) const;
    /// The extracted forms of degree 4+k (k = 1..3), as genuine polynomials.
    const std::vector<poly::Poly>& forms(int k);

    /// The saturated ideal generated by the extracted forms of degree <= max_deg.
    poly::Ideal surface_ideal(int max_deg = 7);

    /// Dimension of the space of solutions of the hom-solve (expected
    /// 1 + 3 * dim S_4) and of its restricted action on ker B(1) (expected 1).
    size_t psi_solution_dim();
    size_t psi_action_dim();

private:
    Bott& bott_;
    Monad m_;
    std::array<FMatrix, 4> bmap_, amap_;  // index k = 1..3 (slot 0 unused)
    std::array<std::vector<std::vector<Field::Elem>>, 4> kerB_;
    std::array<long, 4> rankA_{};
    std::array<std::vector<poly::Poly>, 4> forms_;
    bool psi_done_ = false;
    size_t psi_dim_ = 0, action_dim_ = 0;
    std::vector<Field::Elem> psi_;  // chosen representative (1710 coords)

    void solve_psi();
    std::vector<Field::Elem> action_on(int k, const std::vector<Field::Elem>& kervec,
                                       const std::vector<std::vector<Field::Elem>>& hom_ambient);
    std::vector<std::vector<Field::Elem>> hom_ambient_blocks(const std::vector<Field::Elem>& sol);
};

}  // namespace rs12
