#pragma once

// Root systems of the simple complex Lie algebras of types A-E7, generated
// from the Cartan matrix. Roots are kept as integer coordinate vectors in the
// simple-root basis; all metric data goes through the rational Gram matrix,
// normalized so that long roots have squared length 2. Simple roots use
// Bourbaki numbering (0-based in code).

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hdt/rational.hpp"

namespace hdt {

enum class Family { A, B, C, D, E6, E7 };

struct CartanType {
  Family family;
  int rank;

  /// Throws DomainError when the rank is invalid for the family.
  void validate() const;
  [[nodiscard]] std::string name() const;  // "A3", "E7", ...
  /// Complex dimension of the simple Lie algebra.
  [[nodiscard]] int algebra_dimension() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Integer coordinates of a root in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  [[nodiscard]] std::size_t rank() const { return coeffs.size(); }
  [[nodiscard]] int height() const;
  [[nodiscard]] bool is_positive() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] RationalVector to_vector() const { return RationalVector::from_ints(coeffs); }
  [[nodiscard]] std::string to_string() const;  // "[1,2,1]"

  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator-(const Root& a);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.coeffs <=> b.coeffs; }
};

/// True when b - a has only non-negative coefficients.
bool dominates(const Root& b, const Root& a);

/// A weight given by its coordinates in the fundamental-weight basis
/// (equivalently, its values on the simple coroots).
struct WeightVector {
  RationalVector coords;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.coords <=> b.coords; }
};

class RootSystem {
 public:
  [[nodiscard]] const CartanType& cartan_type() const { return type_; }
  [[nodiscard]] int rank() const { return type_.rank; }

  [[nodiscard]] const std::vector<Root>& simple_roots() const { return simple_; }
  /// All roots, positive ones first, each half sorted by height then coordinates.
  [[nodiscard]] const std::vector<Root>& all_roots() const { return roots_; }
  [[nodiscard]] const std::vector<Root>& positive_roots() const { return positive_; }
  [[nodiscard]] const Root& highest_root() const { return highest_; }
  [[nodiscard]] const RationalMatrix& gram() const { return gram_; }

  /// a_ij = <alpha_j, alpha_i^vee> = 2 (alpha_i|alpha_j) / (alpha_i|alpha_i).
  [[nodiscard]] int cartan_entry(int i, int j) const { return cartan_[i * type_.rank + j]; }

  [[nodiscard]] bool is_root(std::span<const int> v) const;
  [[nodiscard]] bool is_root(const Root& v) const { return is_root(v.coeffs); }

  /// (u|v) for vectors in simple-root coordinates.
  [[nodiscard]] Rational inner(const RationalVector& u, const RationalVector& v) const;
  [[nodiscard]] Rational inner(const Root& a, const Root& b) const;
  [[nodiscard]] Rational squared_length(const Root& a) const { return inner(a, a); }

  /// phi(h_alpha) = 2 (phi|alpha) / (alpha|alpha), phi in simple-root coordinates.
  [[nodiscard]] Rational cartan_integer(const RationalVector& phi, const Root& alpha) const;
  /// Same pairing for a weight given in fundamental-weight coordinates.
  [[nodiscard]] Rational coroot_pairing(const WeightVector& w, const Root& alpha) const;
  /// (w|alpha) for a weight in fundamental-weight coordinates.
  [[nodiscard]] Rational inner(const WeightVector& w, const Root& alpha) const;
  [[nodiscard]] Rational inner(const WeightVector& u, const WeightVector& v) const;

  /// s_alpha(v) = v - v(h_alpha) alpha, v in simple-root coordinates.
  [[nodiscard]] RationalVector reflect(const Root& alpha, const RationalVector& v) const;
  [[nodiscard]] Root reflect(const Root& alpha, const Root& beta) const;
  /// Simple reflection s_i on a weight in fundamental coordinates.
  [[nodiscard]] WeightVector reflect_simple(int i, const WeightVector& w) const;

  /// Simple-root coordinates of a weight given in fundamental-weight coordinates.
  [[nodiscard]] RationalVector to_root_coords(const WeightVector& w) const;
  /// Fundamental-weight coordinates of a vector in simple-root coordinates.
  [[nodiscard]] WeightVector to_weight(const RationalVector& root_coords) const;
  [[nodiscard]] WeightVector to_weight(const Root& root) const { return to_weight(root.to_vector()); }
  [[nodiscard]] WeightVector fundamental_weight(int i) const;

  friend RootSystem build_root_system(const CartanType& t);

 private:
  RootSystem() = default;

  CartanType type_{Family::A, 1};
  std::vector<Root> simple_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  Root highest_;
  RationalMatrix gram_;
  std::vector<int> cartan_;
  std::vector<Rational> simple_lengths_;
  std::set<std::vector<int>> lookup_;
};

/// Gram matrix of the simple roots (long roots squared length 2).
RationalMatrix simple_root_gram(const CartanType& t);

/// Breadth-first closure of the simple roots under simple reflections.
RootSystem build_root_system(const CartanType& t);

}  // namespace hdt
