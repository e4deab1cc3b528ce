#pragma once

// Exact rationals, vectors and small dense matrices over Q.
//
// Rational is a thin value wrapper around GMP's mpq_class: GMP supplies the
// arbitrary-precision arithmetic, this layer supplies canonical form on every
// construction, checked division and the parsing rules the CLI relies on.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hdt {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  /// Parses "[-+]digits[.digits]" exactly. Exponent notation is rejected.
  static Rational parse_decimal(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// Throws DomainError unless the value is an integer that fits in a long.
  [[nodiscard]] long to_long() const;
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class value_;
};

/// Fixed-dimension vector of rationals.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : entries_(dim) {}
  RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static RationalVector from_ints(const std::vector<int>& values);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  RationalVector& operator+=(const RationalVector& rhs);
  RationalVector& operator-=(const RationalVector& rhs);
  RationalVector& operator*=(const Rational& scale);

  friend RationalVector operator+(RationalVector lhs, const RationalVector& rhs) { return lhs += rhs; }
  friend RationalVector operator-(RationalVector lhs, const RationalVector& rhs) { return lhs -= rhs; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }
  friend RationalVector operator*(RationalVector v, const Rational& s) { return v *= s; }
  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector& lhs, const RationalVector& rhs) {
    return lhs.entries_ <=> rhs.entries_;
  }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Rational> entries_;
};

/// Row-major dense rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] RationalMatrix transpose() const;
  friend RationalVector operator*(const RationalMatrix& m, const RationalVector& v);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// Exact binary arithmetic; division by zero throws DomainError.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Solves m * x = v exactly by Gaussian elimination (first nonzero pivot).
/// Throws DomainError if m is not square, dimensions mismatch, or m is singular.
RationalVector solve_linear(const RationalMatrix& m, const RationalVector& v);

/// Exact u^T g v.
Rational bilinear(const RationalVector& u, const RationalMatrix& g, const RationalVector& v);

}  // namespace hdt
