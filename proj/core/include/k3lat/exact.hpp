#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3lat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (long x : row) a_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != nrows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_column(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw Error("matrix-vector shape mismatch");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
RatVector to_rat(const IntVector& v);
// Throws if some entry is not integral.
IntMatrix to_int(const RatMatrix& m);
IntVector to_int(const RatVector& v);

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);
// x^T g y
Rat bilinear(const IntMatrix& g, const RatVector& x, const RatVector& y);
Int bilinear(const IntMatrix& g, const IntVector& x, const IntVector& y);

Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct SmithForm {
  IntMatrix d, u, v;  // u * m * v == d
};
SmithForm smith_normal_form(const IntMatrix& m);
std::vector<Int> invariant_factors(const IntMatrix& m);

// Saturated integer basis (as columns) of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Rows of the result form a Z-basis of the Z-span of the rows of m.
IntMatrix row_span_basis(const IntMatrix& m);

struct Signature {
  std::size_t pos = 0, zero = 0, neg = 0;
  bool operator==(const Signature&) const = default;
};
std::string to_string(const Signature& s);

// Diagonal of a congruent diagonal form (rank entries, zeros dropped) plus
// the nullity.  Hyperbolic 2x2 pivots are split as <2b, -2b>.
struct CongruenceDiagonal {
  RatVector entries;
  std::size_t nullity = 0;
};
CongruenceDiagonal congruence_diagonal(const RatMatrix& g);

Signature signature(const IntMatrix& g);
Signature signature(const RatMatrix& g);

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

Int gcd_of(const IntVector& v);
Int lcm_denominators(const RatVector& v);
// Representative of x mod m in [0, m).
Rat mod_rat(const Rat& x, const Rat& m);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string to_string(const IntMatrix& m);

}  // namespace k3lat
