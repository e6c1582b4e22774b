#pragma once

#include <optional>
#include <vector>

namespace indcat::gf {

/// Dense matrix over GF(p), row-major.
struct Mat {
    int rows = 0;
    int cols = 0;
    int p = 2;
    std::vector<int> a;

    Mat() = default;
    Mat(int r, int c, int prime) : rows(r), cols(c), p(prime), a(static_cast<std::size_t>(r * c), 0) {}

    int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
    int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }

    friend bool operator==(const Mat&, const Mat&) = default;
};

int mod(long long x, int p);
int inv(int x, int p);

Mat identity(int n, int p);
Mat mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(Mat m);

/// Basis of {v : m v = 0}, as columns of the returned matrix.
Mat nullspace(const Mat& m);

/// All solutions of m x = rhs, as a particular solution plus a nullspace basis.
struct Affine {
    std::vector<int> particular;
    Mat kernel;  // columns
};
std::optional<Affine> solve(const Mat& m, const std::vector<int>& rhs);

/// Columns of `m` reduced to a basis of the column space (as columns).
Mat column_basis(const Mat& m);

/// Quotient of GF(p)^n by the column span of `relations`.
struct Quotient {
    int dim = 0;
    Mat project;  // dim x n
};
Quotient quotient(int n, const Mat& relations, int p);

std::vector<Mat> all_matrices(int rows, int cols, int p);
bool invertible(const Mat& m);

template <typename Fn>
bool for_each_point_impl(const Affine& space, std::size_t cap, Fn&& fn) {
    const int k = space.kernel.cols;
    const int p = space.kernel.p;
    const auto n = space.particular.size();
    std::vector<int> coef(static_cast<std::size_t>(k), 0);
    std::size_t count = 0;
    while (true) {
        if (count++ >= cap) return false;
        std::vector<int> x = space.particular;
        for (int j = 0; j < k; ++j) {
            if (coef[static_cast<std::size_t>(j)] == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                x[i] = (x[i] + coef[static_cast<std::size_t>(j)] * space.kernel(static_cast<int>(i), j)) % p;
        }
        fn(x);
        int j = 0;
        while (j < k && ++coef[static_cast<std::size_t>(j)] == p) coef[static_cast<std::size_t>(j++)] = 0;
        if (j == k) return true;
    }
}

/// Visits particular + sum c_i kernel_i for every coefficient vector, at most `cap` points.
/// Returns false when the cap was hit.
bool for_each_point(const Affine& space, std::size_t cap, const auto& fn) {
    return for_each_point_impl(space, cap, fn);
}

}  // namespace indcat::gf
