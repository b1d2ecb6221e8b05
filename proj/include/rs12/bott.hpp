// Explicit global-section spaces H^0(Omega^i(i+k)) on P4, realized as
// kernels of the Koszul differential inside wedge^i W (x) S_k, together with
// the section-level maps induced by exterior-matrix entries (contraction on
// the wedge factor) and the wedge pairing into twists of O.  This is the
// bridge from exterior data to actual polynomial equations.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "rs12/emod.hpp"

namespace rs12 {

/// Monomial basis of S_k (5 variables), enumerated lexicographically
/// descending (x0-heavy first); provides position lookup and products.
struct MonoBasis {
    int k;
    std::vector<std::array<uint8_t, kVars>> list;
    std::map<uint64_t, size_t> pos;

    explicit MonoBasis(int k);
    static uint64_t key(const std::array<uint8_t, kVars>& e);
    size_t index(const std::array<uint8_t, kVars>& e) const;
    size_t size() const { return list.size(); }
};

/// H^0(Omega^i(i+k)) with an explicit echelonized basis in the ambient space
/// wedge^i W (x) S_k.  Ambient coordinates are (wedge mask, monomial) pairs,
/// masks ascending (colex) major, monomials in MonoBasis order minor.
struct SectionSpace {
    int i = 0, k = 0;
    std::vector<unsigned> wedge_masks;
    const MonoBasis* mons = nullptr;
    size_t ambient = 0;
    std::vector<std::vector<Field::Elem>> basis;  // echelon rows
    std::vector<size_t> coord_cols;               // free columns: coordinates in the span

    size_t dim() const { return basis.size(); }
    size_t amb_index(size_t wedge_pos, size_t mon_pos) const {
        return wedge_pos * mons->size() + mon_pos;
    }
    /// Coordinates of an ambient vector lying in the span (verified).
    std::vector<Field::Elem> coords_of(const Field& F, const std::vector<Field::Elem>& v) const;
    /// Ambient vector from coordinates.
    std::vector<Field::Elem> ambient_of(const Field& F, const std::vector<Field::Elem>& c) const;
};

class Bott {
public:
    explicit Bott(const Field& F) : F_(F) {}
    const Field& field() const { return F_; }

    /// h^0(P4, Omega^i(t)) = C(t+4-i, t) C(t-1, i) for t > i >= 0, else 0
    /// (with the usual conventions at i = 0).
    static long h0(int i, int t);

    const MonoBasis& monos(int k);
    /// Cached section space at bundle index i (0 <= i <= 4) and offset k >= 0.
    const SectionSpace& sections(int i, int k);

    /// Section-level matrix of an exterior matrix whose twists all lie in
    /// 0..4, at offset k: blocks act by contraction on the wedge factor.
    FMatrix induced_map(const EMatrix& M, int k);

    /// Apply contraction by omega (element of wedge^m V) to an ambient
    /// vector of sections(i, k), landing in the ambient of (i - m, k).
    std::vector<Field::Elem> contract_ambient(const ExtElem& omega, int i, int k,
                                              const std::vector<Field::Elem>& v);

    /// Wedge pairing: hom-side section s (ambient of (a, 5)) against an
    /// argument section t (ambient of (i, k)) with a + i = 4, landing in
    /// S_{4+k} coefficients via the top-form unembedding.
    std::vector<Field::Elem> pair_to_poly(int a, const std::vector<Field::Elem>& s, int i, int k,
                                          const std::vector<Field::Elem>& t);

    /// Check that an ambient vector of wedge^4 W (x) S_{5+k} is the Koszul
    /// image of E (x) f and return f in S_{4+k}; throws if not.
    std::vector<Field::Elem> unembed_top(int k, const std::vector<Field::Elem>& u);

private:
    Field F_;
    std::map<int, std::unique_ptr<MonoBasis>> mono_cache_;
    std::map<std::pair<int, int>, std::unique_ptr<SectionSpace>> cache_;
    std::mutex mu_;

    std::unique_ptr<SectionSpace> compute_sections(int i, int k);
};

}  // namespace rs12
