#include "hdt/hermitian.hpp"

#include <algorithm>

#include "hdt/errors.hpp"

namespace hdt {

std::vector<int> HermitianPair::compact_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < cartan_type.rank; ++i) {
    if (i != noncompact_node) out.push_back(i);
  }
  return out;
}

int highest_root_coefficient(const RootSystem& rs, int node) {
  if (node < 0 || node >= rs.rank()) throw DomainError("node index out of range");
  return rs.highest_root().coeffs[node];
}

RootPartition partition_roots(const RootSystem& rs, int node) {
  if (node < 0 || node >= rs.rank()) throw DomainError("node index out of range");
  RootPartition out;
  for (const auto& r : rs.positive_roots()) {
    const int c = r.coeffs[node];
    if (c == 0) {
      out.compact_pos.push_back(r);
    } else if (c == 1) {
      out.noncompact_pos.push_back(r);
    } else {
      throw StructuralError("positive root " + r.to_string() + " has noncompact-node coefficient " +
                            std::to_string(c));
    }
  }
  return out;
}

RootPartition partition_roots(const HermitianPair& pair) {
  return partition_roots(build_root_system(pair.cartan_type), pair.noncompact_node);
}

int dim_p_plus(const HermitianPair& pair) {
  return static_cast<int>(partition_roots(pair).noncompact_pos.size());
}

HermitianStructure::HermitianStructure(HermitianPair pair)
    : pair_(std::move(pair)), roots_(std::make_shared<RootSystem>(build_root_system(pair_.cartan_type))) {
  if (highest_root_coefficient(*roots_, pair_.noncompact_node) != 1) {
    throw DomainError("node " + std::to_string(pair_.noncompact_node + 1) + " of " + pair_.cartan_type.name() +
                      " is not cominuscule");
  }
  partition_ = partition_roots(*roots_, pair_.noncompact_node);
}

namespace {

std::vector<HermitianPair> make_catalog() {
  std::vector<HermitianPair> out;
  auto add = [&out](Family f, int rank, int node, std::string label, std::string name) {
    out.push_back(HermitianPair{CartanType{f, rank}, node, std::move(label), std::move(name)});
  };

  for (int n = 2; n <= 8; ++n) {
    for (int p = 1; 2 * p <= n; ++p) {
      const int q = n - p;
      const std::string pq = std::to_string(p) + std::to_string(q);
      add(Family::A, n - 1, p - 1, "su" + pq,
          "AIII su(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }

  // so(2,N): B_n node 1 gives N = 2n-1, D_n node 1 gives N = 2n-2.
  std::vector<std::pair<int, HermitianPair>> so2;
  for (int n = 2; n <= 7; ++n) {
    so2.emplace_back(2 * n - 1, HermitianPair{CartanType{Family::B, n}, 0, "so2_" + std::to_string(2 * n - 1),
                                              "BDI so(2," + std::to_string(2 * n - 1) + ")"});
  }
  for (int n = 4; n <= 7; ++n) {
    so2.emplace_back(2 * n - 2, HermitianPair{CartanType{Family::D, n}, 0, "so2_" + std::to_string(2 * n - 2),
                                              "BDI so(2," + std::to_string(2 * n - 2) + ")"});
  }
  std::sort(so2.begin(), so2.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [n, pair] : so2) out.push_back(std::move(pair));

  for (int n = 2; n <= 7; ++n) {
    add(Family::C, n, n - 1, "sp" + std::to_string(n), "CI sp(" + std::to_string(n) + ",R)");
  }
  for (int n = 4; n <= 7; ++n) {
    add(Family::D, n, n - 1, "sostar" + std::to_string(2 * n), "DIII so*(" + std::to_string(2 * n) + ")");
  }
  add(Family::E6, 6, 0, "e3iii", "EIII e6(-14)");
  add(Family::E7, 7, 6, "e7vii", "EVII e7(-25)");
  return out;
}

}  // namespace

const std::vector<HermitianPair>& catalog() {
  static const std::vector<HermitianPair> pairs = make_catalog();
  return pairs;
}

const HermitianPair& find_pair(const std::string& label) {
  for (const auto& p : catalog()) {
    if (p.label == label) return p;
  }
  throw DomainError("unknown pair label '" + label + "'");
}

}  // namespace hdt
