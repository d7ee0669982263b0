#include "holospin/numfield.hpp"

#include <sstream>
#include <stdexcept>

namespace holospin {

Rational rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

GaussianRational GaussianRational::inverse() const {
  // 1/(x+yi) = (x-yi)/(x^2+y^2)
  if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = re * re + im * im;
  return {re / n, -im / n};
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  bool have_re = sgn(re) != 0;
  if (have_re) os << re.get_str();
  if (sgn(im) != 0) {
    if (have_re && sgn(im) > 0) os << "+";
    if (im == -1)
      os << "-";
    else if (im != 1)
      os << im.get_str() << "*";
    os << "i";
  }
  return os.str();
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + b1 a2) s,  s = sqrt2
  if (b_.is_zero() && o.b_.is_zero()) return FieldScalar(a_ * o.a_);
  GaussianRational two(2, 0);
  return {a_ * o.a_ + two * (b_ * o.b_), a_ * o.b_ + b_ * o.a_};
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("FieldScalar: division by zero");
  // (a + b s)(a - b s) = a^2 - 2 b^2 lies in Q(i); it is nonzero because
  // sqrt2 is not an element of Q(i).
  if (b_.is_zero()) return FieldScalar(a_.inverse());
  GaussianRational two(2, 0);
  GaussianRational norm = a_ * a_ - two * (b_ * b_);
  GaussianRational ninv = norm.inverse();
  return {a_ * ninv, -b_ * ninv};
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  a_.re += o.a_.re;
  a_.im += o.a_.im;
  b_.re += o.b_.re;
  b_.im += o.b_.im;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  a_.re -= o.a_.re;
  a_.im -= o.a_.im;
  b_.re -= o.b_.re;
  b_.im -= o.b_.im;
  return *this;
}

const Rational& FieldScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("FieldScalar: not rational: " + str());
  return a_.re;
}

std::string FieldScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool have_a = !a_.is_zero();
  if (have_a) {
    bool wrap = sgn(a_.re) != 0 && sgn(a_.im) != 0 && !b_.is_zero();
    if (wrap) os << "(";
    os << a_.str();
    if (wrap) os << ")";
  }
  if (!b_.is_zero()) {
    std::string bs = b_.str();
    if (have_a && bs[0] != '-') os << "+";
    if (bs == "1")
      os << "sqrt2";
    else if (bs == "-1")
      os << "-sqrt2";
    else if (sgn(b_.re) != 0 && sgn(b_.im) != 0)
      os << "(" << bs << ")*sqrt2";
    else
      os << bs << "*sqrt2";
  }
  return os.str();
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = FieldScalar(1);
  return m;
}

static void check_same_shape(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("FieldMatrix: shape mismatch in ") + op);
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  check_same_shape(*this, o, "+");
  FieldMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < d_.size(); ++k) r.d_[k] = d_[k] + o.d_[k];
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  check_same_shape(*this, o, "-");
  FieldMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < d_.size(); ++k) r.d_[k] = d_[k] - o.d_[k];
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FieldMatrix: shape mismatch in *");
  FieldMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldScalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const FieldScalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldScalar& s) const {
  FieldMatrix r(rows_, cols_);
  if (s.is_zero()) return r;
  for (std::size_t k = 0; k < d_.size(); ++k)
    if (!d_[k].is_zero()) r.d_[k] = d_[k] * s;
  return r;
}

FieldMatrix FieldMatrix::operator-() const {
  FieldMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < d_.size(); ++k) r.d_[k] = -d_[k];
  return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FieldMatrix FieldMatrix::conj_i() const {
  FieldMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < d_.size(); ++k) r.d_[k] = d_[k].conj_i();
  return r;
}

FieldScalar FieldMatrix::trace() const {
  FieldScalar t;
  for (std::size_t k = 0; k < rows_ && k < cols_; ++k) t += at(k, k);
  return t;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : d_)
    if (!x.is_zero()) return false;
  return true;
}

FieldVector FieldMatrix::apply(const FieldVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("FieldMatrix::apply: length mismatch");
  FieldVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const FieldScalar& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  return out;
}

FieldVector FieldMatrix::row(std::size_t r) const {
  FieldVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

FieldVector FieldMatrix::col(std::size_t c) const {
  FieldVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const FieldScalar& av = a.at(ia, ja);
      if (av.is_zero()) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          const FieldScalar& bv = b.at(ib, jb);
          if (bv.is_zero()) continue;
          r.at(ia * b.rows() + ib, ja * b.cols() + jb) = av * bv;
        }
    }
  return r;
}

namespace {

// Forward elimination to reduced row echelon form. Pivot rule: scan columns
// left to right, take the first remaining row with a nonzero entry. Returns
// the pivot column per eliminated row.
std::vector<std::size_t> rref_in_place(std::vector<FieldVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    FieldScalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      FieldScalar f = rows[k][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<FieldVector> matrix_rows(const FieldMatrix& m) {
  std::vector<FieldVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

std::vector<FieldVector> kernel_basis(const FieldMatrix& m) {
  std::vector<FieldVector> rows = matrix_rows(m);
  std::vector<std::size_t> pivots = rref_in_place(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<FieldVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FieldVector v(m.cols());
    v[f] = FieldScalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!rows[i][f].is_zero()) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const FieldMatrix& m) {
  std::vector<FieldVector> rows = matrix_rows(m);
  return rref_in_place(rows, m.cols()).size();
}

std::vector<FieldVector> rref_rows(std::vector<FieldVector> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("rref_rows: length mismatch");
  std::vector<std::size_t> pivots = rref_in_place(rows, cols);
  rows.resize(pivots.size());
  return rows;
}

namespace {

// Reduce v against an rref basis; returns true when it lands on zero.
bool reduces_to_zero(const std::vector<FieldVector>& rref, const std::vector<std::size_t>& pivots,
                     FieldVector v) {
  for (std::size_t i = 0; i < rref.size(); ++i) {
    const FieldScalar& f = v[pivots[i]];
    if (f.is_zero()) continue;
    FieldScalar c = f;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!rref[i][j].is_zero()) v[j] -= c * rref[i][j];
  }
  return vec_is_zero(v);
}

std::vector<std::size_t> pivot_cols_of_rref(const std::vector<FieldVector>& rref) {
  std::vector<std::size_t> pivots;
  for (const auto& row : rref) {
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

void check_lengths(const std::vector<FieldVector>& vs, std::size_t len, const char* who) {
  for (const auto& v : vs)
    if (v.size() != len) throw std::invalid_argument(std::string(who) + ": vector length mismatch");
}

}  // namespace

bool span_contains(const std::vector<FieldVector>& basis, const FieldVector& v) {
  if (basis.empty()) return vec_is_zero(v);
  check_lengths(basis, v.size(), "span_contains");
  std::vector<FieldVector> rref = rref_rows(basis);
  return reduces_to_zero(rref, pivot_cols_of_rref(rref), v);
}

bool span_equal(const std::vector<FieldVector>& a, const std::vector<FieldVector>& b) {
  if (a.empty() && b.empty()) return true;
  std::size_t len = a.empty() ? b[0].size() : a[0].size();
  check_lengths(a, len, "span_equal");
  check_lengths(b, len, "span_equal");
  std::vector<FieldVector> ra = rref_rows(a);
  std::vector<FieldVector> rb = rref_rows(b);
  // Canonical form makes span equality literal equality.
  return ra == rb;
}

FieldVector vec_add(const FieldVector& a, const FieldVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  FieldVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

FieldVector vec_scale(const FieldScalar& s, const FieldVector& v) {
  FieldVector r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) r[k] = s * v[k];
  return r;
}

bool vec_is_zero(const FieldVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

FieldScalar vec_dot_herm(const FieldVector& x, const FieldVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vec_dot_herm: length mismatch");
  FieldScalar acc;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero() && !y[k].is_zero()) acc += x[k] * y[k].conj_i();
  return acc;
}

}  // namespace holospin
