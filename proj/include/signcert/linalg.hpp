#pragma once

#include <optional>
#include <vector>

namespace signcert::linalg {

using Vec = std::vector<double>;
// Dense row-major matrix, sized rows x cols.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

double dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double s);
double norm2(const Vec& a);
double norm_inf(const Vec& a);

Vec mat_vec(const Mat& m, const Vec& x);

// Determinant by LU with partial pivoting.
double determinant(Mat m);

// Solve m x = rhs; nullopt if the pivoting breaks down (singular to tolerance).
std::optional<Vec> solve(Mat m, Vec rhs);

std::optional<Mat> inverse(const Mat& m);

// Numerical rank via row elimination with partial pivoting.
std::size_t rank(Mat m, double tol = 1e-9);

// One unit vector spanning the nullspace of an (n-1) x n matrix of full row
// rank; nullopt if the rows are dependent. Used for the direction orthogonal
// to a facet or to a family of separating vectors.
std::optional<Vec> nullspace_direction(const Mat& m, double tol = 1e-9);

}  // namespace signcert::linalg
