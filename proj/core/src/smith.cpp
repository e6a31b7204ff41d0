#include "artin/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace artin {

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

} // namespace

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols)
            throw std::invalid_argument("ragged matrix");

    std::vector<long long> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_ll(m[i][j]) < best)) {
                    best = abs_ll(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0)
            break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            // Kill column t below the pivot; a nonzero remainder is strictly
            // smaller than the pivot, so swapping it up makes progress.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                long long q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                long long q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i)
                        std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility: the pivot must divide the trailing submatrix.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            m[t][k] += m[i][k];
                        clean = false;
                    }
        }
        if (m[t][t] < 0)
            m[t][t] = -m[t][t];
        diag.push_back(m[t][t]);
        ++t;
    }
    return diag;
}

} // namespace artin
