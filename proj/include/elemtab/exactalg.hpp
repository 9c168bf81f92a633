#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "elemtab/errors.hpp"

namespace elemtab {

/// Arbitrary-precision rational. GMP keeps every value canonical
/// (lowest terms, positive denominator) after each arithmetic operation.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws ValueError on malformed input or q = 0.
Scalar parse_scalar(std::string_view text);
/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Scalar& x);

/// Dense row-major rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    /// Row-major literal, convenient for tests and fixtures.
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return data_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Mat transpose() const;
    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& c) const;

    bool operator==(const Mat& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::string to_string(const Mat& m);

struct RrefResult {
    Mat reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Inverse of a square matrix; DimensionMismatch if singular.
Mat inverse(const Mat& m);

/// A linear subspace of Q^ambient held in canonical RREF form, one basis
/// vector per row. Equality of subspaces is equality of these bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    /// Span of the rows of `generators`.
    static Subspace span(const Mat& generators);
    static Subspace span(const std::vector<Vec>& generators, std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace join(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// {y : <y, x> = 0 for all x in this}, under the standard pairing.
    Subspace annihilator() const;
    /// Coordinates of v in the canonical basis; v must lie in the subspace.
    Vec coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; its dimension is cols - rank(m).
Subspace kernel_basis(const Mat& m);
/// Image of s under the linear map m (vectors as columns).
Subspace image(const Mat& m, const Subspace& s);

/// True iff m^d = 0 for the d x d input. DimensionMismatch if not square.
bool is_nilpotent(const Mat& m);

/// Matrix of m restricted to the m-invariant subspace s, in s's canonical
/// basis. InvarianceViolated if m s is not contained in s.
Mat restrict_endo(const Mat& m, const Subspace& s);

}  // namespace elemtab
