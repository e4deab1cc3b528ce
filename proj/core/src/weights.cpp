#include "hdt/weights.hpp"

#include <algorithm>
#include <set>

#include "hdt/errors.hpp"

namespace hdt {

namespace {

constexpr std::size_t kMaxWeights = 200000;

WeightVector half_sum(const RootSystem& rs, const std::vector<Root>& roots) {
  RationalVector sum(static_cast<std::size_t>(rs.rank()));
  for (const auto& a : roots) sum += a.to_vector();
  sum *= Rational(1, 2);
  return rs.to_weight(sum);
}

// mu - k alpha_i in fundamental coordinates: alpha_i has coordinates a_{ji}.
WeightVector shift(const RootSystem& rs, const WeightVector& mu, int i, const Rational& k) {
  WeightVector out = mu;
  for (int j = 0; j < rs.rank(); ++j) {
    const int a = rs.cartan_entry(j, i);
    if (a != 0) out.coords[j] -= k * Rational(a);
  }
  return out;
}

}  // namespace

RhoVectors rho_vectors(const HermitianStructure& hs) {
  const RootSystem& rs = hs.roots();
  return {half_sum(rs, rs.positive_roots()), half_sum(rs, hs.partition().noncompact_pos),
          half_sum(rs, hs.partition().compact_pos)};
}

WeightVector lambda_one(const HermitianStructure& hs) { return hs.roots().fundamental_weight(hs.node()); }

WeightVector lambda0_from_compact(const HermitianStructure& hs, std::span<const long> coords) {
  const auto nodes = hs.pair().compact_nodes();
  if (coords.size() != nodes.size()) {
    throw DomainError("lambda0 needs " + std::to_string(nodes.size()) + " compact coordinates, got " +
                      std::to_string(coords.size()));
  }
  WeightVector w{RationalVector(static_cast<std::size_t>(hs.roots().rank()))};
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (coords[k] < 0) throw DomainError("lambda0 coordinates must be non-negative");
    w.coords[nodes[k]] = Rational(coords[k]);
  }
  return w;
}

WeightVector compact_fundamental_weight(const HermitianStructure& hs, int j) {
  const auto nodes = hs.pair().compact_nodes();
  if (j < 0 || j >= static_cast<int>(nodes.size())) throw DomainError("compact node index out of range");
  return hs.roots().fundamental_weight(nodes[j]);
}

void validate_lambda0(const HermitianStructure& hs, const WeightVector& lambda0) {
  const RootSystem& rs = hs.roots();
  if (static_cast<int>(lambda0.coords.size()) != rs.rank()) throw DomainError("lambda0 has wrong rank");
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational& c = lambda0.coords[i];
    if (i == hs.node()) {
      if (!c.is_zero()) throw DomainError("lambda0 must vanish on the noncompact coroot");
      continue;
    }
    if (!c.is_integer()) throw DomainError("lambda0 is not integral");
    if (c.sign() < 0) throw DomainError("lambda0 is not dominant for the compact roots");
  }
}

KssWeightSystem weight_system(const HermitianStructure& hs, const WeightVector& lambda0, bool with_multiplicities) {
  validate_lambda0(hs, lambda0);
  const RootSystem& rs = hs.roots();
  const auto nodes = hs.pair().compact_nodes();

  std::set<WeightVector> seen{lambda0};
  std::set<WeightVector> work{lambda0};
  while (!work.empty()) {
    const WeightVector mu = *work.begin();
    work.erase(work.begin());
    for (int i : nodes) {
      const Rational m = mu.coords[i];
      if (m.is_zero()) continue;
      // The whole alpha_i-string through mu: mu, mu - alpha_i, ..., s_i mu.
      const long steps = m.to_long();
      const long dir = steps > 0 ? 1 : -1;
      for (long k = 1; k <= steps * dir; ++k) {
        WeightVector next = shift(rs, mu, i, Rational(k * dir));
        if (seen.insert(next).second) {
          if (seen.size() > kMaxWeights) throw DomainError("weight system too large");
          work.insert(std::move(next));
        }
      }
    }
  }

  KssWeightSystem ws;
  ws.highest = lambda0;
  ws.weights.assign(seen.begin(), seen.end());

  for (const auto& mu : ws.weights) {
    WeightVector diff{lambda0.coords - mu.coords};
    const RationalVector beta = rs.to_root_coords(diff);
    for (int i = 0; i < rs.rank(); ++i) {
      const bool ok = beta[i].is_integer() && beta[i].sign() >= 0 && (i != hs.node() || beta[i].is_zero());
      if (!ok) throw StructuralError("weight " + mu.coords.to_string() + " is not below the highest weight");
    }
  }

  if (with_multiplicities) fill_multiplicities(hs, ws);
  return ws;
}

namespace {

void freudenthal_all(const HermitianStructure& hs, const KssWeightSystem& ws, std::map<WeightVector, int>& out) {
  const RootSystem& rs = hs.roots();
  const auto& cpos = hs.partition().compact_pos;
  const WeightVector rho_c = rho_vectors(hs).rho_c;
  const std::set<WeightVector> support(ws.weights.begin(), ws.weights.end());

  // Process weights by depth below the highest weight.
  std::vector<std::pair<Rational, WeightVector>> order;
  order.reserve(ws.weights.size());
  for (const auto& mu : ws.weights) {
    const RationalVector beta = rs.to_root_coords(WeightVector{ws.highest.coords - mu.coords});
    Rational depth;
    for (const auto& b : beta) depth += b;
    order.emplace_back(depth, mu);
  }
  std::sort(order.begin(), order.end());

  for (const auto& [depth, mu] : order) {
    if (depth.is_zero()) {
      out[mu] = 1;
      continue;
    }
    // (Lambda+rho_c|Lambda+rho_c) - (mu+rho_c|mu+rho_c) = (Lambda-mu | Lambda+mu+2rho_c)
    WeightVector plus{ws.highest.coords + mu.coords + rho_c.coords + rho_c.coords};
    const Rational lhs = rs.inner(WeightVector{ws.highest.coords - mu.coords}, plus);
    if (lhs.sign() <= 0) throw StructuralError("Freudenthal denominator vanishes");

    Rational rhs;
    for (const auto& alpha : cpos) {
      const Rational mu_alpha = rs.inner(mu, alpha);
      const Rational len = rs.squared_length(alpha);
      const WeightVector step = rs.to_weight(alpha);
      WeightVector nu = mu;
      for (int k = 1;; ++k) {
        nu.coords += step.coords;
        if (!support.contains(nu)) break;
        const auto it = out.find(nu);
        if (it == out.end()) throw StructuralError("Freudenthal recursion out of order");
        rhs += (mu_alpha + Rational(k) * len) * Rational(it->second);
      }
    }
    const Rational m = Rational(2) * rhs / lhs;
    if (!m.is_integer() || m.sign() <= 0) throw StructuralError("non-integral multiplicity " + m.to_string());
    out[mu] = static_cast<int>(m.to_long());
  }
}

}  // namespace

void fill_multiplicities(const HermitianStructure& hs, KssWeightSystem& ws) {
  ws.multiplicities.clear();
  freudenthal_all(hs, ws, ws.multiplicities);
}

int freudenthal_multiplicity(const HermitianStructure& hs, const KssWeightSystem& ws, const WeightVector& mu) {
  if (!std::binary_search(ws.weights.begin(), ws.weights.end(), mu)) {
    throw DomainError("weight " + mu.coords.to_string() + " is not in the weight system");
  }
  if (const auto it = ws.multiplicities.find(mu); it != ws.multiplicities.end()) return it->second;
  std::map<WeightVector, int> table;
  freudenthal_all(hs, ws, table);
  return table.at(mu);
}

WeightBoundReport verify_weight_bound(const HermitianStructure& hs, const CascadeResult& cr,
                                      const KssWeightSystem& ws) {
  const RootSystem& rs = hs.roots();
  const auto nodes = hs.pair().compact_nodes();
  const Root& top = cr.gammas.back();

  WeightBoundReport rep;
  rep.bound = rs.inner(ws.highest, top);
  rep.max_value = rep.bound;
  bool first = true;

  for (const auto& mu : ws.weights) {
    std::vector<Root> images = cr.gammas;
    WeightVector dom = mu;
    for (bool changed = true; changed;) {
      changed = false;
      for (int i : nodes) {
        if (dom.coords[i].sign() < 0) {
          dom = rs.reflect_simple(i, dom);
          for (auto& g : images) g = rs.reflect(rs.simple_roots()[i], g);
          changed = true;
        }
      }
    }
    const Rational dom_top = rs.inner(dom, top);
    if (dom_top > rep.bound) throw StructuralError("dominant conjugate exceeds the bound on gamma_r");

    for (std::size_t j = 0; j < cr.gammas.size(); ++j) {
      const Rational v = rs.inner(mu, cr.gammas[j]);
      if (first || v > rep.max_value) rep.max_value = v;
      first = false;
      ++rep.pairs_checked;
      if (v > rep.bound) {
        throw StructuralError("(Lambda^s|gamma_" + std::to_string(j + 1) + ") = " + v.to_string() + " exceeds " +
                              rep.bound.to_string());
      }
      if (rs.inner(dom, images[j]) != v) throw StructuralError("Weyl invariance of the pairing fails");
      if (v > dom_top) throw StructuralError("(w Lambda^s | w gamma_j) exceeds (w Lambda^s | gamma_r)");
      if (rs.inner(ws.highest, images[j]) > rep.bound) {
        throw StructuralError("(Lambda_0 | w gamma_j) exceeds (Lambda_0 | gamma_r)");
      }
      ++rep.dominance_checks;
    }
    if (mu == ws.highest && rs.inner(mu, top) == rep.bound) rep.equality_at_top = true;
  }
  if (rep.max_value != rep.bound || !rep.equality_at_top) throw StructuralError("bound not attained at the top");
  return rep;
}

}  // namespace hdt
