#include <cassert>
#include <stdexcept>

#include "rs12/monad.hpp"

namespace rs12 {

namespace {
// hom-space wedge index for each middle summand: Omega^2 pairs with 2-forms,
// Omega^1 with 3-forms
constexpr int kHomWedge[4] = {2, 2, 3, 3};
constexpr int kArgWedge[4] = {2, 2, 1, 1};
}  // namespace

MonadSections::MonadSections(Bott& bott, const Monad& m)
    : bott_(bott),
      m_(m),
      bmap_{FMatrix(bott.field(), 0, 0), bott.induced_map(m.B, 1), bott.induced_map(m.B, 2),
            bott.induced_map(m.B, 3)},
      amap_{FMatrix(bott.field(), 0, 0), bott.induced_map(m.A, 1), bott.induced_map(m.A, 2),
            bott.induced_map(m.A, 3)} {
    if (!m_.is_complex()) throw std::invalid_argument("maps do not compose to zero");
    const Field& F = bott_.field();
    for (int k = 1; k <= 3; ++k) {
        kerB_[k] = bmap_[k].kernel_basis();
        rankA_[k] = long(amap_[k].rank());
        // the image of A(k) must land in ker B(k): check on each column
        for (size_t c = 0; c < amap_[k].cols(); ++c) {
            std::vector<Field::Elem> col(amap_[k].rows());
            for (size_t r = 0; r < amap_[k].rows(); ++r) col[r] = amap_[k].at(r, c);
            auto img = bmap_[k].mul_vec(col);
            for (auto x : img)
                if (!F.is_zero(x)) throw std::logic_error("section complex is not a complex");
        }
    }
}

long MonadSections::homology_dim(int k) const {
    return long(kerB_[k].size()) - rankA_[k];
}

long MonadSections::section_chi(int k) const {
    // terms sit in cohomological degrees -1, 0, 1
    return -long(amap_[k].cols()) + long(bmap_[k].cols()) - long(bmap_[k].rows());
}

std::vector<std::vector<Field::Elem>> MonadSections::hom_ambient_blocks(
    const std::vector<Field::Elem>& sol) {
    const Field& F = bott_.field();
    std::vector<std::vector<Field::Elem>> blocks;
    size_t off = 0;
    for (int r = 0; r < 4; ++r) {
        const SectionSpace& hom = bott_.sections(kHomWedge[r], 5);
        std::vector<Field::Elem> coords(sol.begin() + off, sol.begin() + off + hom.dim());
        blocks.push_back(hom.ambient_of(F, coords));
        off += hom.dim();
    }
    assert(off == sol.size());
    return blocks;
}

std::vector<Field::Elem> MonadSections::action_on(
    int k, const std::vector<Field::Elem>& kervec,
    const std::vector<std::vector<Field::Elem>>& hom_ambient) {
    const Field& F = bott_.field();
    size_t out_dim = bott_.monos(4 + k).size();
    std::vector<Field::Elem> out(out_dim, 0);
    size_t off = 0;
    for (int r = 0; r < 4; ++r) {
        const SectionSpace& arg = bott_.sections(kArgWedge[r], k);
        std::vector<Field::Elem> coords(kervec.begin() + off, kervec.begin() + off + arg.dim());
        off += arg.dim();
        bool nz = false;
        for (auto x : coords) nz = nz || !F.is_zero(x);
        if (!nz) continue;
        auto amb = arg.ambient_of(F, coords);
        auto f = bott_.pair_to_poly(kHomWedge[r], hom_ambient[r], kArgWedge[r], k, amb);
        for (size_t i = 0; i < out_dim; ++i) out[i] = F.add(out[i], f[i]);
    }
    return out;
}

void MonadSections::solve_psi() {
    if (psi_done_) return;
    const Field& F = bott_.field();
    // unknowns: hom-space coordinates per middle summand
    size_t total = 0;
    std::array<size_t, 4> off{};
    for (int r = 0; r < 4; ++r) {
        off[r] = total;
        total += bott_.sections(kHomWedge[r], 5).dim();
    }
    const SectionSpace& sigma = bott_.sections(3, 1);
    size_t s5 = bott_.monos(5).size();
    // constraints: for each column c of A and source section sigma_j, the
    // composed action into S_5 vanishes
    FMatrix C(F, m_.A.cols() * sigma.dim() * s5, total);
    for (int r = 0; r < 4; ++r) {
        const SectionSpace& hom = bott_.sections(kHomWedge[r], 5);
        for (size_t c = 0; c < m_.A.cols(); ++c) {
            const ExtElem& entry = m_.A.at(r, c);
            if (entry.is_zero()) continue;
            for (size_t j = 0; j < sigma.dim(); ++j) {
                auto t = bott_.contract_ambient(entry, 3, 1, sigma.basis[j]);
                size_t row0 = (c * sigma.dim() + j) * s5;
                for (size_t h = 0; h < hom.dim(); ++h) {
                    auto f = bott_.pair_to_poly(kHomWedge[r], hom.basis[h], kArgWedge[r], 1, t);
                    size_t col = off[r] + h;
                    for (size_t i = 0; i < s5; ++i)
                        if (!F.is_zero(f[i])) C.at(row0 + i, col) = F.add(C.at(row0 + i, col), f[i]);
                }
            }
        }
    }
    auto sols = C.kernel_basis();
    psi_dim_ = sols.size();
    // restricted actions on ker B(1): the trivial solutions (quartic triples
    // composed with B) vanish there, so the action space must be a line
    RowSpan actions(F, kerB_[1].size() * s5);
    bool have_rep = false;
    for (const auto& sol : sols) {
        auto blocks = hom_ambient_blocks(sol);
        std::vector<Field::Elem> row(kerB_[1].size() * s5, 0);
        bool nz = false;
        for (size_t v = 0; v < kerB_[1].size(); ++v) {
            auto f = action_on(1, kerB_[1][v], blocks);
            for (size_t i = 0; i < s5; ++i) {
                row[v * s5 + i] = f[i];
                nz = nz || !F.is_zero(f[i]);
            }
        }
        if (nz && !have_rep) {
            psi_ = sol;
            have_rep = true;
        }
        actions.add(std::move(row));
    }
    action_dim_ = actions.dim();
    if (!have_rep) throw std::logic_error("no hom solution acts nontrivially on ker B(1)");
    if (action_dim_ != 1)
        throw std::logic_error("restricted action space is not a line; conventions or monad broken");
    psi_done_ = true;
}

size_t MonadSections::psi_solution_dim() {
    solve_psi();
    return psi_dim_;
}

size_t MonadSections::psi_action_dim() {
    solve_psi();
    return action_dim_;
}

const std::vector<poly::Poly>& MonadSections::forms(int k) {
    if (k < 1 || k > 3) throw std::out_of_range("offset must be 1..3");
    if (!forms_[k].empty()) return forms_[k];
    solve_psi();
    const Field& F = bott_.field();
    auto blocks = hom_ambient_blocks(psi_);
    size_t nd = bott_.monos(4 + k).size();
    // psi must kill the image of A(k): together with B o A = 0 this pins the
    // image of ker B(k) as the degree-(4+k) slice of the ideal
    for (size_t c = 0; c < amap_[k].cols(); ++c) {
        std::vector<Field::Elem> col(amap_[k].rows());
        for (size_t r = 0; r < amap_[k].rows(); ++r) col[r] = amap_[k].at(r, c);
        auto f = action_on(k, col, blocks);
        for (auto x : f)
            if (!F.is_zero(x))
                throw std::logic_error("hom solution does not kill the image of A at offset " +
                                       std::to_string(k));
    }
    RowSpan span(F, nd);
    for (const auto& v : kerB_[k]) span.add(action_on(k, v, blocks));
    if (long(span.dim()) != homology_dim(k))
        throw std::logic_error("extracted slice dimension disagrees with the homology dimension");
    const MonoBasis& mb = bott_.monos(4 + k);
    poly::Order o;
    for (const auto& row : span.rows()) {
        poly::Poly f;
        for (size_t i = 0; i < nd; ++i) {
            if (F.is_zero(row[i])) continue;
            poly::Mono m;
            for (int z = 0; z < kVars; ++z) m.e[z] = mb.list[i][z];
            f.t.push_back({m, row[i]});
        }
        forms_[k].push_back(p_resort(o, std::move(f)));
    }
    return forms_[k];
}

poly::Ideal MonadSections::surface_ideal(int max_deg) {
    const Field& F = bott_.field();
    std::vector<poly::Poly> all;
    for (int k = 1; k <= 3 && 4 + k <= max_deg; ++k)
        for (const auto& f : forms(k)) all.push_back(f);
    auto gens = poly::Ideal::min_gens(F, std::move(all));
    poly::Ideal I(F, std::move(gens));
    return I.saturate();
}

}  // namespace rs12
