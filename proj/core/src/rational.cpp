#include "hdt/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "hdt/errors.hpp"

namespace hdt {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert non-finite double to rational");
  // mpq_set_d is exact for finite doubles.
  return Rational(mpq_class(value));
}

Rational Rational::parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw DomainError("malformed decimal '" + std::string(text) + "'");

  mpz_class numerator(digits, 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw DomainError("rational " + to_string() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

RationalVector RationalVector::from_ints(const std::vector<int>& values) {
  RationalVector out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = Rational(values[i]);
  return out;
}

RationalVector& RationalVector::operator+=(const RationalVector& rhs) {
  if (rhs.size() != size()) throw DomainError("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& rhs) {
  if (rhs.size() != size()) throw DomainError("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

bool RationalVector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw DomainError("matrix-vector dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) acc += m(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix-matrix dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
    case ArithOp::kDiv:
      return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

RationalVector solve_linear(const RationalMatrix& m, const RationalVector& v) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("solve_linear: matrix is not square");
  if (v.size() != n) throw DomainError("solve_linear: right-hand side has wrong dimension");

  RationalMatrix a = m;
  RationalVector b = v;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DomainError("solve_linear: matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
      b[i] -= factor * b[col];
    }
  }
  return b;
}

Rational bilinear(const RationalVector& u, const RationalMatrix& g, const RationalVector& v) {
  if (g.rows() != u.size() || g.cols() != v.size()) throw DomainError("bilinear: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero() && !g(i, j).is_zero()) row += g(i, j) * v[j];
    }
    acc += u[i] * row;
  }
  return acc;
}

}  // namespace hdt
