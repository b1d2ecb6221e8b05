// Test-only independent oracles.  These deliberately avoid the library's own
// computation paths so they can cross-check them.
#pragma once

#include <algorithm>
#include <vector>

#include "rs12/ff.hpp"

namespace rs12::oracles {

// Determinant by cofactor expansion (n <= 4 intended).
inline Field::Elem det_expansion(const Field& F, const std::vector<std::vector<Field::Elem>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Field::Elem acc = F.zero();
    for (size_t j = 0; j < n; ++j) {
        if (F.is_zero(m[0][j])) continue;
        std::vector<std::vector<Field::Elem>> sub(n - 1, std::vector<Field::Elem>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Field::Elem t = F.mul(m[0][j], det_expansion(F, sub));
        acc = (j % 2 == 0) ? F.add(acc, t) : F.sub(acc, t);
    }
    return acc;
}

// Rank as the size of the largest nonsingular minor (n <= 4 intended).
inline size_t rank_by_minors(const FMatrix& M) {
    const Field& F = M.field();
    size_t maxr = std::min(M.rows(), M.cols());
    for (size_t k = maxr; k >= 1; --k) {
        std::vector<size_t> rsel(k), csel(k);
        // enumerate k-subsets of rows and columns
        std::vector<size_t> rows(M.rows()), cols(M.cols());
        for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
        for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        std::vector<bool> rmask(M.rows(), false), cmask(M.cols(), false);
        std::fill(rmask.begin(), rmask.begin() + k, true);
        do {
            std::vector<size_t> ri;
            for (size_t i = 0; i < M.rows(); ++i)
                if (rmask[i]) ri.push_back(i);
            std::vector<bool> cm(M.cols(), false);
            std::fill(cm.begin(), cm.begin() + k, true);
            do {
                std::vector<size_t> ci;
                for (size_t i = 0; i < M.cols(); ++i)
                    if (cm[i]) ci.push_back(i);
                std::vector<std::vector<Field::Elem>> sub(k, std::vector<Field::Elem>(k));
                for (size_t a = 0; a < k; ++a)
                    for (size_t b = 0; b < k; ++b) sub[a][b] = M.at(ri[a], ci[b]);
                if (!F.is_zero(det_expansion(F, sub))) return k;
            } while (std::prev_permutation(cm.begin(), cm.end()));
        } while (std::prev_permutation(rmask.begin(), rmask.end()));
    }
    return 0;
}

// Sign of the permutation sorting `seq` ascending, counted by adjacent
// transpositions; 0 if an index repeats.
inline int sort_sign(std::vector<int> seq) {
    int sign = 1;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) sign = -sign;
        }
    return sign;
}

}  // namespace rs12::oracles
