#include <indcat/gf.hpp>

#include <stdexcept>

namespace indcat::gf {

int mod(long long x, int p) {
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inv(int x, int p) {
    x = mod(x, p);
    if (x == 0) throw std::domain_error("gf::inv of zero");
    for (int y = 1; y < p; ++y)
        if (x * y % p == 1) return y;
    throw std::domain_error("gf::inv: modulus is not prime");
}

Mat identity(int n, int p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("gf::mul: shape mismatch");
    Mat r(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const int xv = x(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) = (r(i, j) + xv * y(k, j)) % x.p;
        }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

Mat hstack(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("gf::hstack: row mismatch");
    Mat r(x.rows, x.cols + y.cols, x.p);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
        for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
    }
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (m(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(row, j), m(sel, j));
        const int s = inv(m(row, col), m.p);
        for (int j = 0; j < m.cols; ++j) m(row, j) = m(row, j) * s % m.p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const int f = m(i, col);
            for (int j = 0; j < m.cols; ++j) m(i, j) = mod(m(i, j) - f * m(row, j), m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Mat nullspace(const Mat& m) {
    Mat r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Mat basis(m.cols, static_cast<int>(free.size()), m.p);
    for (std::size_t k = 0; k < free.size(); ++k) {
        const int fc = free[k];
        basis(fc, static_cast<int>(k)) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], static_cast<int>(k)) = mod(-r(static_cast<int>(i), fc), m.p);
    }
    return basis;
}

std::optional<Affine> solve(const Mat& m, const std::vector<int>& rhs) {
    Mat aug(m.rows, m.cols + 1, m.p);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = mod(rhs[static_cast<std::size_t>(i)], m.p);
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    Affine out;
    out.particular.assign(static_cast<std::size_t>(m.cols), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.particular[static_cast<std::size_t>(pivots[i])] = aug(static_cast<int>(i), m.cols);
    out.kernel = nullspace(m);
    return out;
}

Mat column_basis(const Mat& m) {
    Mat r = m;
    const auto pivots = rref(r);
    Mat out(m.rows, static_cast<int>(pivots.size()), m.p);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows; ++i) out(i, static_cast<int>(k)) = m(i, pivots[k]);
    return out;
}

Quotient quotient(int n, const Mat& relations, int p) {
    Mat rows = transpose(relations);
    if (relations.cols == 0) rows = Mat(0, n, p);
    const auto pivots = rref(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Quotient q;
    q.dim = static_cast<int>(free.size());
    q.project = Mat(q.dim, n, p);
    for (int j = 0; j < n; ++j) {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(j)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const int c = pivots[i];
            const int f = w[static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int k = 0; k < n; ++k)
                w[static_cast<std::size_t>(k)] = mod(w[static_cast<std::size_t>(k)] - f * rows(static_cast<int>(i), k), p);
        }
        for (std::size_t k = 0; k < free.size(); ++k) q.project(static_cast<int>(k), j) = w[static_cast<std::size_t>(free[k])];
    }
    return q;
}

std::vector<Mat> all_matrices(int rows, int cols, int p) {
    std::vector<Mat> out;
    Mat m(rows, cols, p);
    const auto cells = m.a.size();
    while (true) {
        out.push_back(m);
        std::size_t k = 0;
        while (k < cells && ++m.a[k] == p) m.a[k++] = 0;
        if (k == cells) break;
    }
    return out;
}

bool invertible(const Mat& m) { return m.rows == m.cols && rank(m) == m.rows; }

}  // namespace indcat::gf
