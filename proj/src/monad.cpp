#include "rs12/monad.hpp"

#include <cassert>

namespace rs12 {

namespace {
long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

long chi_ideal_sheaf(long j) { return binom(j + 4, 4) - (6 * j * j - 6 * j + 1); }

NaturalCohomologyTable NaturalCohomologyTable::expected() {
    NaturalCohomologyTable t;
    // rows carrying the single nonzero group, for j = -1..5
    t.row = {3, -1, 2, 2, 1, 1, 0};
    for (int j = -1; j <= 5; ++j) {
        long chi = chi_ideal_sheaf(j);
        int r = t.row[j + 1];
        if (r < 0) {
            if (chi != 0) throw std::logic_error("empty column with nonzero chi");
            t.value.push_back(0);
            continue;
        }
        long v = (r % 2 == 0) ? chi : -chi;
        if (v <= 0) throw std::logic_error("cohomology row placement contradicts chi sign");
        t.value.push_back(v);
    }
    return t;
}

long NaturalCohomologyTable::h(int i, int j) const {
    if (j < -1 || j > 5) throw std::out_of_range("twist outside the table range");
    return (row[j + 1] == i) ? value[j + 1] : 0;
}

Monad::Monad(EMatrix a, EMatrix b) : A(std::move(a)), B(std::move(b)) {
    if (B.source().twists != A.target().twists)
        throw std::invalid_argument("monad maps do not chain");
    if (A.source().twists != std::vector<int>{3, 3, 3, 3} ||
        A.target().twists != std::vector<int>{2, 2, 1, 1} ||
        B.target().twists != std::vector<int>{0, 0, 0})
        throw std::invalid_argument("unexpected monad type");
}

BettiClass classify_B(const EMatrix& B) {
    BettiClass out;
    for (int a : B.target().twists) out.table.counts[{0, a}]++;
    for (int a : B.source().twists) out.table.counts[{1, a}]++;

    auto mg = B.kernel_minimal_generators();
    for (const auto& [twist, n] : mg.counts_by_twist) out.table.counts[{2, twist}] += n;

    auto step2 = out.table.step_twists(2);
    out.a1 = step2.count(4) ? step2[4] : 0;
    std::map<int, long> expect{{3, 4}};
    if (out.a1) expect[4] = out.a1;
    out.head_ok = (step2 == expect);

    if (!mg.gens.empty()) {
        auto S2 = B.syzygy_matrix(mg);
        auto mg3 = S2.kernel_minimal_generators();
        for (const auto& [twist, n] : mg3.counts_by_twist) out.table.counts[{3, twist}] += n;
        out.a2 = out.table.at(3, 4);
    } else {
        out.a2 = 0;
    }
    return out;
}

EMatrix build_AB(const EMatrix& B) {
    auto cls = classify_B(B);
    if (!cls.accepted()) throw BettiShapeError(cls.table);
    auto mg = B.kernel_minimal_generators();
    std::vector<int> twists;
    std::vector<std::vector<Field::Elem>> cols;
    for (const auto& [twist, v] : mg.gens)
        if (twist == 3) {
            twists.push_back(3);
            cols.push_back(v);
        }
    assert(twists.size() == 4);
    auto A = EMatrix::from_columns(B.field(), B.source(), twists, cols);
    assert(B.compose(A).is_zero());
    return A;
}

ABReport check_AB(const EMatrix& A_B) {
    ABReport r;
    auto mg = A_B.kernel_minimal_generators();
    r.observed = mg.counts_by_twist;
    r.ok = (r.observed == std::map<int, long>{{5, 13}});
    return r;
}

std::vector<std::map<int, long>> tate_left_window(const Monad& m, int steps) {
    std::vector<std::map<int, long>> out;
    std::map<int, long> self;
    for (int a : m.A.source().twists) self[a]++;
    out.push_back(self);
    EMatrix cur = m.A;
    for (int s = 1; s <= steps; ++s) {
        auto mg = cur.kernel_minimal_generators();
        out.push_back(mg.counts_by_twist);
        if (mg.gens.empty()) break;
        cur = cur.syzygy_matrix(mg);
    }
    return out;
}

std::map<int, long> expected_tate_step(int step) {
    if (step < 1 || step > 4) throw std::out_of_range("exact-window prediction held for steps 1..4");
    // the only contribution at step s is h^3(I_X(-s)) = -chi(I_X(-s)) in twist s+4
    long v = -chi_ideal_sheaf(-step);
    if (v <= 0) throw std::logic_error("window term should be positive");
    return {{step + 4, v}};
}

}  // namespace rs12
