#include "crnms/linalg.hpp"

#include <stdexcept>

namespace crnms {

namespace {

/// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::vector<RatVec> kernel_basis(const RatMat& m, std::size_t ncols) {
    RatMat a = m;
    for (const auto& row : a)
        if (row.size() != ncols) throw std::invalid_argument("kernel_basis: ragged matrix");
    auto pivots = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    if (a.empty()) return RatVec{};
    std::size_t cols = a[0].size();
    RatMat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    // Inconsistent iff some pivot lands in the appended column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

std::optional<RatVec> solve_nonneg(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_nonneg: size mismatch");
    const std::size_t m = a.size();
    if (m == 0) return RatVec{};
    const std::size_t n = a[0].size();

    // Phase-1 tableau [A | I | b] with rows flipped so b >= 0; artificial
    // variables n..n+m-1 start basic; minimize their sum.
    RatMat t(m, RatVec(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        int flip = sgn(b[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j] * flip;
        t[i][n + i] = 1;
        t[i][n + m] = b[i] * flip;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced-cost row for cost = sum of artificials: c_j - sum_i t[i][j].
    RatVec cost(n + m + 1, Rat(0));
    for (std::size_t j = 0; j < n + m + 1; ++j) {
        Rat colsum(0);
        for (std::size_t i = 0; i < m; ++i) colsum += t[i][j];
        cost[j] = (j >= n && j < n + m ? Rat(1) : Rat(0)) - colsum;
    }

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;  // optimal
        // Ratio test; Bland tie-break on smallest basis variable index.
        std::size_t leave = m;
        Rat best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // cost unbounded below cannot happen in phase 1
        // Pivot.
        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < n + m + 1; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            Rat f = cost[enter];
            if (sgn(f) != 0)
                for (std::size_t j = 0; j < n + m + 1; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Feasible iff every artificial sits at zero.
    Rat objective(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += t[i][n + m];
    if (sgn(objective) != 0) return std::nullopt;

    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][n + m];
    return x;
}

PositiveKernel positive_kernel(const RatMat& n_mat, std::size_t ncols) {
    PositiveKernel out;
    const std::size_t rows = n_mat.size();
    // lambda >= 1 with N lambda = 0: substitute lambda = mu + 1, mu >= 0.
    RatVec b(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) b[i] -= n_mat[i][j];
    if (auto mu = solve_nonneg(n_mat, b)) {
        out.feasible = true;
        out.lambda = *mu;
        for (auto& v : out.lambda) v += 1;
        return out;
    }
    // Stiemke alternative: u free, w = N^T u, w >= 0, sum w = 1.
    // Variables (u+, u-, w) >= 0; rows: N^T u+ - N^T u- - w = 0; sum w = 1.
    RatMat a(ncols + 1, RatVec(2 * rows + ncols, Rat(0)));
    RatVec rhs(ncols + 1, Rat(0));
    for (std::size_t j = 0; j < ncols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            a[j][i] = n_mat[i][j];
            a[j][rows + i] = -n_mat[i][j];
        }
        a[j][2 * rows + j] = -1;
    }
    for (std::size_t j = 0; j < ncols; ++j) a[ncols][2 * rows + j] = 1;
    rhs[ncols] = 1;
    auto sol = solve_nonneg(a, rhs);
    if (!sol)
        throw std::logic_error("positive_kernel: both alternatives infeasible");
    out.feasible = false;
    out.u.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) out.u[i] = (*sol)[i] - (*sol)[rows + i];
    out.w.assign(sol->begin() + static_cast<long>(2 * rows), sol->end());
    return out;
}

}  // namespace crnms
