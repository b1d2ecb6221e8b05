// The exterior algebra E on a 5-dimensional space with generators e_0..e_4,
// graded by deg(e_i) = -1.  Basis monomials are 5-bit subset masks; an
// element stores one coefficient per mask.  The same container doubles for
// the dual side (x-monomials spanning wedge powers of W) -- contraction acts
// on those.
//
// Sign conventions, fixed once for the whole stack:
//   * a monomial is the wedge of its generators in increasing index order
//     with coefficient +1; wedge(a, b) reduces by transposition counting;
//   * contraction by e_j acts from the left with sign
//     (-1)^(number of smaller indices present), and contraction by a
//     monomial e_S applies its generators from the largest index down, so
//     that contract(a ^ b) = contract(a) o contract(b) as operators.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rs12/ff.hpp"

namespace rs12 {

constexpr int kVars = 5;          // rank of V
constexpr int kMasks = 1 << kVars;

/// Homogeneous element of E (or of the dual wedge algebra on W).  word = the
/// number of wedge factors, so the E-degree is -word; word == -1 marks zero.
struct ExtElem {
    int word = -1;
    std::array<Field::Elem, kMasks> c{};

    bool is_zero() const { return word < 0; }
    int degree() const { return -word; }
};

/// Pure mask-level sign helpers (field independent).
int wedge_sign(unsigned a, unsigned b);      // masks disjoint
int contract_sign(unsigned s, unsigned t);   // s subset of t

class ExtAlg {
public:
    explicit ExtAlg(const Field& F) : F_(F) {}
    const Field& field() const { return F_; }

    ExtElem zero() const { return ExtElem{}; }
    ExtElem unit(Field::Elem coeff) const { return monomial(0, coeff); }
    ExtElem gen(int i) const { return monomial(1u << i, F_.one()); }
    ExtElem monomial(unsigned mask, Field::Elem coeff) const;

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem scale(Field::Elem f, const ExtElem& a) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const { return add(a, scale(F_.neg(F_.one()), b)); }
    ExtElem wedge(const ExtElem& a, const ExtElem& b) const;
    /// Interior product: omega in wedge^m V applied to tau in wedge^i W,
    /// landing in wedge^{i-m} W.
    ExtElem contract(const ExtElem& omega, const ExtElem& tau) const;
    bool equal(const ExtElem& a, const ExtElem& b) const;

    /// All monomial masks of the given E-degree (-5 <= d <= 0), ascending.
    static std::vector<unsigned> graded_basis(int degree);

    std::string str(const ExtElem& a, char letter = 'e') const;
    ExtElem parse(const std::string& s, char letter = 'e') const;

    /// Random homogeneous element of the given word length.
    ExtElem random(Rng& rng, int word) const;

private:
    Field F_;
    ExtElem normalized(ExtElem a, int word) const;
};

std::string mask_indices(unsigned mask);

}  // namespace rs12
