#include "hdt/root_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hdt/errors.hpp"

namespace hdt {

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A:
      ok = rank >= 1;
      break;
    case Family::B:
    case Family::C:
      ok = rank >= 2;
      break;
    case Family::D:
      ok = rank >= 3;
      break;
    case Family::E6:
      ok = rank == 6;
      break;
    case Family::E7:
      ok = rank == 7;
      break;
  }
  if (!ok) throw DomainError("invalid rank " + std::to_string(rank) + " for Cartan type");
}

std::string CartanType::name() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(rank);
    case Family::B:
      return "B" + std::to_string(rank);
    case Family::C:
      return "C" + std::to_string(rank);
    case Family::D:
      return "D" + std::to_string(rank);
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
  }
  return "?";
}

int CartanType::algebra_dimension() const {
  const int n = rank;
  switch (family) {
    case Family::A:
      return n * (n + 2);
    case Family::B:
    case Family::C:
      return n * (2 * n + 1);
    case Family::D:
      return n * (2 * n - 1);
    case Family::E6:
      return 78;
    case Family::E7:
      return 133;
  }
  return 0;
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  os << ']';
  return os.str();
}

Root operator+(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw DomainError("root rank mismatch");
  Root out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Root operator-(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw DomainError("root rank mismatch");
  Root out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

Root operator-(const Root& a) {
  Root out = a;
  for (int& c : out.coeffs) c = -c;
  return out;
}

bool dominates(const Root& b, const Root& a) {
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (b.coeffs[i] < a.coeffs[i]) return false;
  }
  return true;
}

RationalMatrix simple_root_gram(const CartanType& t) {
  t.validate();
  const int n = t.rank;
  RationalMatrix g(n, n);
  auto link = [&g](int i, int j, const Rational& value) {
    g(i, j) = value;
    g(j, i) = value;
  };

  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n - 1; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 0; i < n - 1; ++i) g(i, i) = 1;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E6:
    case Family::E7:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
  }
  return g;
}

namespace {

bool height_order(const Root& a, const Root& b) {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

}  // namespace

RootSystem build_root_system(const CartanType& t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  const int n = t.rank;
  rs.gram_ = simple_root_gram(t);

  rs.simple_lengths_.resize(n);
  for (int i = 0; i < n; ++i) rs.simple_lengths_[i] = rs.gram_(i, i);

  rs.cartan_.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational a = Rational(2) * rs.gram_(i, j) / rs.gram_(i, i);
      if (!a.is_integer()) throw StructuralError("non-integral Cartan entry");
      rs.cartan_[i * n + j] = static_cast<int>(a.to_long());
    }
  }

  for (int i = 0; i < n; ++i) {
    Root a{std::vector<int>(n, 0)};
    a.coeffs[i] = 1;
    rs.simple_.push_back(a);
  }

  // Closure of the simple roots under simple reflections; every root is
  // W-conjugate to a simple root, so this reaches all of them.
  std::deque<Root> queue(rs.simple_.begin(), rs.simple_.end());
  for (const auto& a : rs.simple_) rs.lookup_.insert(a.coeffs);
  while (!queue.empty()) {
    Root beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // <beta, alpha_i^vee> = sum_k c_k a_{ik}
      int pairing = 0;
      for (int k = 0; k < n; ++k) pairing += beta.coeffs[k] * rs.cartan_[i * n + k];
      if (pairing == 0) continue;
      Root image = beta;
      image.coeffs[i] -= pairing;
      if (rs.lookup_.insert(image.coeffs).second) queue.push_back(std::move(image));
    }
  }

  for (const auto& c : rs.lookup_) {
    Root r{c};
    if (r.is_positive()) rs.positive_.push_back(r);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(), height_order);
  rs.roots_ = rs.positive_;
  for (const auto& r : rs.positive_) rs.roots_.push_back(-r);

  if (static_cast<int>(rs.roots_.size()) != static_cast<int>(rs.lookup_.size())) {
    throw StructuralError("root set is not closed under negation");
  }

  rs.highest_ = rs.positive_.back();
  for (const auto& r : rs.positive_) {
    if (!dominates(rs.highest_, r)) throw StructuralError("highest root does not dominate " + r.to_string());
  }
  return rs;
}

bool RootSystem::is_root(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != rank()) return false;
  return lookup_.contains(std::vector<int>(v.begin(), v.end()));
}

Rational RootSystem::inner(const RationalVector& u, const RationalVector& v) const { return bilinear(u, gram_, v); }

Rational RootSystem::inner(const Root& a, const Root& b) const {
  const int n = rank();
  Rational acc;
  for (int i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    Rational row;
    for (int j = 0; j < n; ++j) {
      if (b.coeffs[j] != 0 && !gram_(i, j).is_zero()) row += gram_(i, j) * Rational(b.coeffs[j]);
    }
    acc += Rational(a.coeffs[i]) * row;
  }
  return acc;
}

Rational RootSystem::cartan_integer(const RationalVector& phi, const Root& alpha) const {
  if (alpha.is_zero()) throw DomainError("cartan_integer: zero root");
  return Rational(2) * inner(phi, alpha.to_vector()) / squared_length(alpha);
}

Rational RootSystem::inner(const WeightVector& w, const Root& alpha) const {
  // (varpi_j | alpha_j) = |alpha_j|^2 / 2
  Rational acc;
  for (int j = 0; j < rank(); ++j) {
    if (alpha.coeffs[j] == 0 || w.coords[j].is_zero()) continue;
    acc += w.coords[j] * Rational(alpha.coeffs[j]) * simple_lengths_[j];
  }
  return acc / Rational(2);
}

Rational RootSystem::coroot_pairing(const WeightVector& w, const Root& alpha) const {
  if (alpha.is_zero()) throw DomainError("coroot_pairing: zero root");
  return Rational(2) * inner(w, alpha) / squared_length(alpha);
}

Rational RootSystem::inner(const WeightVector& u, const WeightVector& v) const {
  const RationalVector x = to_root_coords(u);
  Rational acc;
  for (int j = 0; j < rank(); ++j) {
    if (x[j].is_zero() || v.coords[j].is_zero()) continue;
    acc += x[j] * v.coords[j] * simple_lengths_[j];
  }
  return acc / Rational(2);
}

RationalVector RootSystem::reflect(const Root& alpha, const RationalVector& v) const {
  const Rational k = cartan_integer(v, alpha);
  return v - k * alpha.to_vector();
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  const Rational k = cartan_integer(beta.to_vector(), alpha);
  Root out = beta;
  const long m = k.to_long();
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= static_cast<int>(m) * alpha.coeffs[i];
  return out;
}

WeightVector RootSystem::reflect_simple(int i, const WeightVector& w) const {
  WeightVector out = w;
  const Rational k = w.coords[i];
  if (k.is_zero()) return out;
  for (int j = 0; j < rank(); ++j) {
    const int a = cartan_[j * rank() + i];
    if (a != 0) out.coords[j] -= k * Rational(a);
  }
  return out;
}

RationalVector RootSystem::to_root_coords(const WeightVector& w) const {
  RationalMatrix a(rank(), rank());
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) a(i, j) = cartan_[i * rank() + j];
  }
  return solve_linear(a, w.coords);
}

WeightVector RootSystem::to_weight(const RationalVector& x) const {
  WeightVector w{RationalVector(rank())};
  for (int i = 0; i < rank(); ++i) {
    Rational acc;
    for (int k = 0; k < rank(); ++k) {
      if (!x[k].is_zero() && cartan_[i * rank() + k] != 0) acc += x[k] * Rational(cartan_[i * rank() + k]);
    }
    w.coords[i] = acc;
  }
  return w;
}

WeightVector RootSystem::fundamental_weight(int i) const {
  WeightVector w{RationalVector(rank())};
  w.coords[i] = 1;
  return w;
}

}  // namespace hdt
