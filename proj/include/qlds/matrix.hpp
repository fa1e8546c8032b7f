#ifndef QLDS_MATRIX_HPP
#define QLDS_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quaternion.hpp"

namespace qlds {

/// Quaternion vector. Whether it is a row or a column is decided by the
/// operation it is passed to (A·v versus v·A).
template <typename T>
using QVector = std::vector<Quaternion<T>>;

/// Dense row-major quaternion matrix.
template <typename T>
class Matrix {
 public:
  using value_type = Quaternion<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<value_type>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw PreconditionError("ragged matrix initializer");
      for (const auto& e : r) data_.push_back(e);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value_type(1);
    return m;
  }
  static Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, c); }
  static Matrix diagonal(const QVector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix column(const QVector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  static Matrix row(const QVector<T>& v) {
    Matrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<value_type>& data() const { return data_; }

  QVector<T> col(std::size_t j) const {
    QVector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  QVector<T> row_vec(std::size_t i) const {
    return QVector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& e : a.data_) e = -e;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw PreconditionError("shape mismatch in product: " + a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_);
    // fixed summation order over the inner index
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        value_type acc;
        for (std::size_t t = 0; t < a.cols_; ++t) acc += a(i, t) * b(t, j);
        c(i, j) = acc;
      }
    return c;
  }

  /// q·A (every entry multiplied on the left).
  friend Matrix operator*(const value_type& q, Matrix a) {
    for (auto& e : a.data_) e = q * e;
    return a;
  }
  /// A·q (every entry multiplied on the right).
  friend Matrix operator*(Matrix a, const value_type& q) {
    for (auto& e : a.data_) e = e * q;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw PreconditionError("shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<value_type> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixD = Matrix<double>;

template <typename T>
void require_square(const Matrix<T>& a, const char* what) {
  if (!a.square()) throw PreconditionError(std::string(what) + ": matrix is not square");
}

template <typename T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = conj(a(i, j));
  return r;
}

template <typename T>
Quaternion<T> trace(const Matrix<T>& a) {
  require_square(a, "trace");
  Quaternion<T> s;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

/// A·v for a column v.
template <typename T>
QVector<T> operator*(const Matrix<T>& a, const QVector<T>& v) {
  if (a.cols() != v.size()) throw PreconditionError("shape mismatch in A*v");
  QVector<T> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) r[i] += a(i, t) * v[t];
  return r;
}

/// v·A for a row v.
template <typename T>
QVector<T> operator*(const QVector<T>& v, const Matrix<T>& a) {
  if (a.rows() != v.size()) throw PreconditionError("shape mismatch in v*A");
  QVector<T> r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t t = 0; t < a.rows(); ++t) r[j] += v[t] * a(t, j);
  return r;
}

template <typename T>
QVector<T> operator+(QVector<T> a, const QVector<T>& b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <typename T>
QVector<T> operator-(QVector<T> a, const QVector<T>& b) {
  if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <typename T>
QVector<T> operator-(QVector<T> a) {
  for (auto& e : a) e = -e;
  return a;
}

/// v·q
template <typename T>
QVector<T> operator*(QVector<T> v, const Quaternion<T>& q) {
  for (auto& e : v) e = e * q;
  return v;
}

/// q·v
template <typename T>
QVector<T> operator*(const Quaternion<T>& q, QVector<T> v) {
  for (auto& e : v) e = q * e;
  return v;
}

template <typename T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
  require_square(a, "power");
  Matrix<T> r = Matrix<T>::identity(a.rows());
  for (unsigned t = 0; t < k; ++t) r = r * a;
  return r;
}

/// A with column j replaced by v (the A_{.j}(v) notation).
template <typename T>
Matrix<T> replace_column(Matrix<T> a, std::size_t j, const QVector<T>& v) {
  if (v.size() != a.rows() || j >= a.cols())
    throw PreconditionError("replace_column: bad index or length");
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = v[i];
  return a;
}

/// A with row i replaced by v (the A_{i.}(v) notation).
template <typename T>
Matrix<T> replace_row(Matrix<T> a, std::size_t i, const QVector<T>& v) {
  if (v.size() != a.cols() || i >= a.rows())
    throw PreconditionError("replace_row: bad index or length");
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = v[j];
  return a;
}

/// Submatrix on the given (sorted, 0-based) row and column index lists.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  Matrix<T> r(rows.size(), cols.size());
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = 0; q < cols.size(); ++q) r(p, q) = a(rows[p], cols[q]);
  return r;
}

template <typename T>
Matrix<T> principal(const Matrix<T>& a, const std::vector<std::size_t>& idx) {
  return submatrix(a, idx, idx);
}

/// A with row i and column j deleted.
template <typename T>
Matrix<T> delete_row_col(const Matrix<T>& a, std::size_t i, std::size_t j) {
  std::vector<std::size_t> rs, cs;
  for (std::size_t t = 0; t < a.rows(); ++t)
    if (t != i) rs.push_back(t);
  for (std::size_t t = 0; t < a.cols(); ++t)
    if (t != j) cs.push_back(t);
  return submatrix(a, rs, cs);
}

template <typename T>
double frobenius(const Matrix<T>& a) {
  double s = 0;
  for (const auto& e : a.data()) s += ScalarTraits<T>::to_double(norm2(e));
  return std::sqrt(s);
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("max_abs_diff: shape mismatch");
  double m = 0;
  for (std::size_t t = 0; t < a.data().size(); ++t)
    m = std::max(m, abs(Quaternion<T>(a.data()[t] - b.data()[t])));
  return m;
}

template <typename T>
double max_abs_diff(const QVector<T>& a, const QVector<T>& b) {
  if (a.size() != b.size()) throw PreconditionError("max_abs_diff: length mismatch");
  double m = 0;
  for (std::size_t t = 0; t < a.size(); ++t) m = std::max(m, abs(Quaternion<T>(a[t] - b[t])));
  return m;
}

/// Literal equality in exact mode; entrywise tolerance in float mode.
template <typename T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, double tol = kDefaultTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    for (std::size_t t = 0; t < a.data().size(); ++t)
      if (!approx_equal(a.data()[t], b.data()[t], tol)) return false;
    return true;
  }
}

template <typename T>
bool is_zero(const Matrix<T>& a, double tol = 0.0) {
  for (const auto& e : a.data())
    if (!is_zero(e, is_exact_v<T> ? 0.0 : tol)) return false;
  return true;
}

template <typename T>
bool is_hermitian(const Matrix<T>& a, double tol = kDefaultTolerance) {
  require_square(a, "is_hermitian");
  return approx_equal(a, conj_transpose(a), tol);
}

template <typename T>
bool is_normal(const Matrix<T>& a, double tol = kDefaultTolerance) {
  require_square(a, "is_normal");
  Matrix<T> h = conj_transpose(a);
  return approx_equal(h * a, a * h, tol);
}

template <typename T>
bool is_unitary(const Matrix<T>& a, double tol = kDefaultTolerance) {
  require_square(a, "is_unitary");
  Matrix<T> h = conj_transpose(a);
  Matrix<T> id = Matrix<T>::identity(a.rows());
  return approx_equal(h * a, id, tol) && approx_equal(a * h, id, tol);
}

template <typename T>
bool is_diagonal(const Matrix<T>& a, double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && !is_zero(a(i, j), is_exact_v<T> ? 0.0 : tol)) return false;
  return true;
}

template <typename To, typename From>
Matrix<To> matrix_cast(const Matrix<From>& a) {
  Matrix<To> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = quat_cast<To>(a(i, j));
  return r;
}

template <typename To, typename From>
QVector<To> vector_cast(const QVector<From>& v) {
  QVector<To> r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(quat_cast<To>(e));
  return r;
}

}  // namespace qlds

#endif  // QLDS_MATRIX_HPP
