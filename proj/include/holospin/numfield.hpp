#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace holospin {

using Rational = mpq_class;

/// Rational from integer numerator/denominator, reduced, positive denominator.
Rational rational(long num, long den = 1);

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  /// Multiplicative inverse; throws std::domain_error at zero.
  GaussianRational inverse() const;

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const;
};

/// Element of Q(i, sqrt2), stored as a + b*sqrt2 with Gaussian rational a and b.
/// The decomposition is unique (sqrt2 is not in Q(i)), so structural equality
/// of the four rational components is value equality.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long v) : a_(rational(v), 0) {}  // NOLINT: implicit on purpose
  FieldScalar(Rational v) : a_(std::move(v), 0) {}
  FieldScalar(GaussianRational a) : a_(std::move(a)) {}
  FieldScalar(GaussianRational a, GaussianRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static FieldScalar i() { return FieldScalar(GaussianRational(0, 1)); }
  static FieldScalar sqrt2() { return FieldScalar(GaussianRational(), GaussianRational(1, 0)); }
  /// 1/sqrt2 == sqrt2/2.
  static FieldScalar inv_sqrt2() {
    return FieldScalar(GaussianRational(), GaussianRational(rational(1, 2), 0));
  }

  const GaussianRational& a() const { return a_; }
  const GaussianRational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && sgn(a_.im) == 0 && a_.re == 1; }
  /// True when the value lies in Q(i).
  bool is_gaussian() const { return b_.is_zero(); }
  /// True when the value lies in Q.
  bool is_rational() const { return b_.is_zero() && sgn(a_.im) == 0; }
  /// True when the value lies in Q(sqrt2), i.e. has no imaginary part.
  bool is_real() const { return sgn(a_.im) == 0 && sgn(b_.im) == 0; }
  /// Rational value; precondition is_rational().
  const Rational& rational_value() const;

  FieldScalar conj_i() const { return {a_.conj(), b_.conj()}; }
  FieldScalar conj_sqrt2() const { return {a_, -b_}; }

  FieldScalar operator-() const { return {-a_, -b_}; }
  FieldScalar operator+(const FieldScalar& o) const { return {a_ + o.a_, b_ + o.b_}; }
  FieldScalar operator-(const FieldScalar& o) const { return {a_ - o.a_, b_ - o.b_}; }
  FieldScalar operator*(const FieldScalar& o) const;
  /// Throws std::domain_error on division by zero.
  FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }
  FieldScalar inverse() const;

  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  bool operator==(const FieldScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  GaussianRational a_;
  GaussianRational b_;
};

using FieldVector = std::vector<FieldScalar>;

/// Dense exact matrix over Q(i, sqrt2), row major, 0-based accessors.
class FieldMatrix {
 public:
  FieldMatrix() : rows_(0), cols_(0) {}
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(rows * cols) {}

  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldScalar& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const FieldScalar& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldScalar& s) const;
  FieldMatrix operator-() const;
  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

  FieldMatrix transpose() const;
  FieldMatrix conj_i() const;
  FieldScalar trace() const;
  bool is_zero() const;

  FieldVector apply(const FieldVector& v) const;
  FieldVector row(std::size_t r) const;
  FieldVector col(std::size_t c) const;

 private:
  std::size_t rows_, cols_;
  std::vector<FieldScalar> d_;
};

/// Kronecker product; the rightmost factor varies fastest in both indices.
FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b);

/// Basis of the right kernel {v : M v = 0} in reduced column-echelon form.
/// Deterministic: pivots are the first nonzero row per column during forward
/// elimination, kernel vectors are emitted per free column, leftmost first,
/// each with entry 1 at its free column.
std::vector<FieldVector> kernel_basis(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

/// Exact span comparison of two vector lists. All vectors must share one
/// length; mismatched lengths throw std::invalid_argument.
bool span_equal(const std::vector<FieldVector>& a, const std::vector<FieldVector>& b);
bool span_contains(const std::vector<FieldVector>& basis, const FieldVector& v);

/// Reduced row echelon form of a list of row vectors: zero rows dropped,
/// pivots 1 with their columns cleared, rows ordered by pivot column. The
/// result is the canonical basis of the row span.
std::vector<FieldVector> rref_rows(std::vector<FieldVector> rows);

// small vector helpers
FieldVector vec_add(const FieldVector& a, const FieldVector& b);
FieldVector vec_scale(const FieldScalar& s, const FieldVector& v);
bool vec_is_zero(const FieldVector& v);
/// Hermitian dot, conjugate linear in the second slot.
FieldScalar vec_dot_herm(const FieldVector& x, const FieldVector& y);

}  // namespace holospin
