#pragma once

#include <cstddef>
#include <vector>

namespace gsp4 {

// Dense exact Gaussian elimination over a field S (Rat or CycScalar).
template <class S>
using DenseMat = std::vector<std::vector<S>>;

template <class S>
struct Echelon {
    DenseMat<S> rows;            // reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t ncols = 0;
};

template <class S>
Echelon<S> rref(DenseMat<S> m, std::size_t ncols) {
    Echelon<S> e;
    e.ncols = ncols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        S inv = S(1) / m[r][c];
        for (std::size_t j = c; j < ncols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            S f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!m[r][j].is_zero()) m[i][j] = m[i][j] - f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

template <class S>
std::size_t rank(const DenseMat<S>& m, std::size_t ncols) {
    return rref(m, ncols).pivots.size();
}

// Solve A x = b (A is rows x n). Returns false when inconsistent; free variables are 0.
template <class S>
bool solve_linear(const DenseMat<S>& a, const std::vector<S>& b, std::size_t n, std::vector<S>& x) {
    DenseMat<S> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon<S> e = rref(aug, n + 1);
    x.assign(n, S(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == n) return false;
        x[e.pivots[r]] = e.rows[r][n];
    }
    return true;
}

// Basis of the right kernel of A (rows x n).
template <class S>
DenseMat<S> kernel(const DenseMat<S>& a, std::size_t n) {
    Echelon<S> e = rref(a, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    DenseMat<S> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(n, S(0));
        v[f] = S(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = S(0) - e.rows[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace gsp4
