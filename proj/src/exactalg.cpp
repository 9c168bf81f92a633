#include "elemtab/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elemtab {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw ValueError("malformed rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos && std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
        throw ValueError("zero denominator in '" + std::string(text) + "'");
    std::string canon(text.front() == '+' ? text.substr(1) : text);
    Scalar x(canon, 10);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("Mat: entry count does not match shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("Mat: ragged literal");
        for (long v : r) data_.emplace_back(v);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("Mat::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("Mat product: inner dimensions differ");
    Mat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) p(i, j) += a * o(k, j);
        }
    return p;
}

Vec Mat::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("Mat-vector product: size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat sum: shapes differ");
    Mat s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat difference: shapes differ");
    Mat s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat s = *this;
    for (auto& x : s.data_) x *= c;
    return s;
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

RrefResult rref(const Mat& m) {
    RrefResult res{m, {}, 0};
    Mat& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Scalar inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(a(r, j)) != 0) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat inverse(const Mat& m) {
    if (!m.square()) throw DimensionMismatch("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
        throw DimensionMismatch("inverse: matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
    return inv;
}

Subspace Subspace::full(std::size_t ambient) { return span(Mat::identity(ambient)); }

Subspace Subspace::span(const Mat& generators) {
    Subspace s(generators.cols());
    auto red = rref(generators);
    Mat b(red.rank, generators.cols());
    for (std::size_t i = 0; i < red.rank; ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) b(i, j) = red.reduced(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& generators, std::size_t ambient) {
    return span(Mat::from_rows(generators, ambient));
}

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

Vec Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::coordinates: ambient mismatch");
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    Vec check(ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) check[j] += c[i] * basis_(i, j);
    if (check != v) throw DimensionMismatch("Subspace::coordinates: vector not in subspace");
    return c;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
    // Reduce v by the RREF basis; membership iff the remainder vanishes.
    Vec rem = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar f = rem[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(basis_(i, j)) != 0) rem[j] -= f * basis_(i, j);
    }
    return std::all_of(rem.begin(), rem.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::join(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::join: ambient mismatch");
    Mat stacked(dim() + other.dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked(i, j) = basis_(i, j);
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked(dim() + i, j) = other.basis_(i, j);
    return span(stacked);
}

Subspace Subspace::annihilator() const { return kernel_basis(basis_); }

Subspace Subspace::intersect(const Subspace& other) const {
    // (U ∩ V)^⊥ = U^⊥ + V^⊥
    return annihilator().join(other.annihilator()).annihilator();
}

Subspace kernel_basis(const Mat& m) {
    const std::size_t n = m.cols();
    auto red = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

Subspace image(const Mat& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw DimensionMismatch("image: map domain differs from subspace ambient");
    std::vector<Vec> imgs;
    for (const auto& b : s.basis_vectors()) imgs.push_back(m * b);
    return Subspace::span(imgs, m.rows());
}

bool is_nilpotent(const Mat& m) {
    if (!m.square()) throw DimensionMismatch("is_nilpotent: matrix is not square");
    const std::size_t d = m.rows();
    if (d == 0) return true;
    Mat p = m;
    for (std::size_t k = 1; k < d && !p.is_zero(); ++k) p = p * m;
    return p.is_zero();
}

Mat restrict_endo(const Mat& m, const Subspace& s) {
    if (!m.square() || m.rows() != s.ambient()) throw DimensionMismatch("restrict_endo: shape mismatch");
    const std::size_t d = s.dim();
    Mat out(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Vec img = m * s.basis().row(j);
        if (!s.contains(img)) throw InvarianceViolated("restrict_endo: subspace is not invariant");
        const Vec c = s.coordinates(img);
        for (std::size_t i = 0; i < d; ++i) out(i, j) = c[i];
    }
    return out;
}

}  // namespace elemtab
