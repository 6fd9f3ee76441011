#include <krchar/rational_lp.hpp>

#include <stdexcept>

namespace krchar::lp {

std::vector<std::vector<Rational>> null_space(const Matrix& m, std::size_t cols)
{
    // Reduced row echelon form, then one basis vector per free column.
    Matrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[row]);
        const Rational p = a[row][col];
        for (auto& x : a[row])
            x /= p;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < cols; ++j)
                a[r][j] -= f * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool strictly_feasible(const Matrix& m, std::size_t k)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return true;
    // Columns: z+ (k), z- (k), surplus (rows), artificial (rows), rhs.
    const std::size_t n_surplus = 2 * k;
    const std::size_t n_art = n_surplus + rows;
    const std::size_t n = n_art + rows;
    Matrix t(rows, std::vector<Rational>(n + 1));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != k)
            throw std::invalid_argument("strictly_feasible: ragged matrix");
        for (std::size_t j = 0; j < k; ++j) {
            t[i][j] = m[i][j];
            t[i][k + j] = -m[i][j];
        }
        t[i][n_surplus + i] = -1;
        t[i][n_art + i] = 1;
        t[i][n] = 1;
        basis[i] = n_art + i;
    }
    // Reduced costs of "minimise sum of artificials".
    std::vector<Rational> cost(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (j >= n_art && j < n)
            continue;
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i)
            s += t[i][j];
        cost[j] = -s;
    }
    for (;;) {
        // Bland's rule: smallest index with negative reduced cost.
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n)
            break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][n] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows)
            throw std::logic_error("strictly_feasible: unbounded phase-one problem");
        const Rational p = t[leave][enter];
        for (auto& x : t[leave])
            x /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= n; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= n; ++j)
                if (t[leave][j] != 0)
                    cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // cost[n] holds minus the objective value.
    return cost[n] == 0;
}

bool separable_face(const std::vector<std::vector<int>>& on_face, const std::vector<std::vector<int>>& off_face,
                    std::size_t dim)
{
    // Unknowns y = (phi, c).  Equalities phi(v) - c = 0 on the face are solved
    // first; the remaining strict inequalities phi(v) - c > 0 are homogeneous,
    // so they can be scaled to >= 1.
    const std::size_t cols = dim + 1;
    Matrix eq;
    for (const auto& v : on_face) {
        std::vector<Rational> row(cols);
        for (std::size_t j = 0; j < dim; ++j)
            row[j] = v[j];
        row[dim] = -1;
        eq.push_back(std::move(row));
    }
    std::vector<std::vector<Rational>> basis;
    if (eq.empty()) {
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Rational> e(cols);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = null_space(eq, cols);
    }
    if (off_face.empty())
        return true;
    if (basis.empty())
        return false;
    Matrix ineq;
    for (const auto& v : off_face) {
        std::vector<Rational> row(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Rational s = -basis[b][dim];
            for (std::size_t j = 0; j < dim; ++j)
                s += basis[b][j] * v[j];
            row[b] = s;
        }
        ineq.push_back(std::move(row));
    }
    return strictly_feasible(ineq, basis.size());
}

} // namespace krchar::lp
