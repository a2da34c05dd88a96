#include "tcw/linalg.hpp"

#include <algorithm>

#include "tcw/error.hpp"

namespace tcw {

Int det(Mat m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(Errc::invalid_input, "det: matrix not square");
    if (n == 0) return 1;

    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Mat inverse_unimodular(const Mat& m) {
    const size_t n = m.size();
    Int d = det(m);
    if (d != 1 && d != -1) fail(Errc::invalid_input, "inverse_unimodular: determinant is not +-1");

    // Adjugate via cofactors; n <= 6 so this stays cheap.
    Mat inv(n, IntVec(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Mat minor;
            minor.reserve(n - 1);
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                IntVec row;
                row.reserve(n - 1);
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = det(std::move(minor));
            if ((i + j) % 2 == 1) cof = -cof;
            inv[j][i] = d == 1 ? cof : Int(-cof);
        }
    }
    return inv;
}

static RatMat to_rat(const Mat& m) {
    RatMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const Int& v : m[i]) r[i].emplace_back(v);
    }
    return r;
}

int rank(RatMat m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank(Mat m) { return rank(to_rat(m)); }

std::optional<RatVec> solve(RatMat a, RatVec b) {
    const size_t n = a.size();
    if (n == 0) return RatVec{};
    for (const auto& row : a)
        if (row.size() != n) fail(Errc::invalid_input, "solve: matrix not square");

    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        Rat inv = 1 / a[c][c];
        for (size_t j = c; j < n; ++j) a[c][j] *= inv;
        b[c] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

std::optional<RatVec> solve(const Mat& a, const IntVec& b) {
    RatVec rb;
    rb.reserve(b.size());
    for (const Int& v : b) rb.emplace_back(v);
    return solve(to_rat(a), std::move(rb));
}

// Row Hermite form of m with a running unimodular row transform; used below
// for kernels and column bases via transposition.
static void hnf_rows_with_transform(Mat& m, Mat& u) {
    const size_t rows = m.size();
    if (rows == 0) return;
    const size_t cols = m[0].size();
    u.assign(rows, IntVec(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction within column c, rows r..end.
        while (true) {
            size_t p = rows;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (p == rows || abs(m[i][c]) < abs(m[p][c]))) p = i;
            if (p == rows) break;  // column all zero
            std::swap(m[r], m[p]);
            std::swap(u[r], u[p]);
            bool cleared = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];  // truncated division is fine: we loop
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                    for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                }
                if (m[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0) {
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
        }
        // Reduce the rows above into canonical range.
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
            }
        }
        ++r;
    }
}

std::vector<IntVec> kernel_basis(const Mat& m) {
    if (m.empty()) return {};
    const size_t rows = m.size();
    const size_t cols = m[0].size();

    // Work on the transpose: row-reduce columns of m; rows of the transform
    // that map to zero rows span the kernel lattice exactly.
    Mat t(cols, IntVec(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    Mat u;
    hnf_rows_with_transform(t, u);

    std::vector<IntVec> basis;
    for (size_t i = 0; i < cols; ++i) {
        if (!is_zero_vec(t[i])) continue;
        basis.push_back(u[i]);
    }
    return basis;
}

Mat hnf_row_basis(std::vector<IntVec> generators) {
    Mat u;
    hnf_rows_with_transform(generators, u);
    Mat out;
    for (IntVec& row : generators)
        if (!is_zero_vec(row)) out.push_back(std::move(row));
    return out;
}

Rref rref_with_column_order(RatMat rows, const std::vector<int>& column_order) {
    Rref out;
    std::vector<int> pivot_of_row(rows.size(), -1);
    size_t r = 0;
    for (int c : column_order) {
        if (r >= rows.size()) break;
        size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = 1 / rows[r][c];
        for (Rat& v : rows[r]) v *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_of_row[r] = c;
        ++r;
    }
    out.m = std::move(rows);
    out.pivots = std::move(pivot_of_row);
    return out;
}

}  // namespace tcw
