#pragma once

// Hermitian symmetric pairs (g, k), encoded as a Cartan type plus the one
// simple root whose root space lies in p (a cominuscule node). Positive roots
// with coefficient 1 at that node are noncompact, coefficient 0 compact.

#include <memory>
#include <string>
#include <vector>

#include "hdt/root_system.hpp"

namespace hdt {

struct HermitianPair {
  CartanType cartan_type;
  int noncompact_node;  // 0-based Bourbaki index
  std::string label;    // CLI label: su23, sp3, sostar8, so2_5, e3iii, e7vii
  std::string name;     // display name: "AIII su(2,3)"

  /// 0-based indices of the compact simple roots, in increasing order.
  [[nodiscard]] std::vector<int> compact_nodes() const;
};

struct RootPartition {
  std::vector<Root> compact_pos;     // Delta_c^+
  std::vector<Root> noncompact_pos;  // Delta_n^+
};

/// Root system plus partition for one pair; the unit most callers work with.
class HermitianStructure {
 public:
  /// Builds the root system and validates the cominuscule condition.
  explicit HermitianStructure(HermitianPair pair);

  [[nodiscard]] const HermitianPair& pair() const { return pair_; }
  [[nodiscard]] const RootSystem& roots() const { return *roots_; }
  [[nodiscard]] const RootPartition& partition() const { return partition_; }
  [[nodiscard]] int node() const { return pair_.noncompact_node; }
  [[nodiscard]] bool is_compact(const Root& r) const { return r.coeffs[node()] == 0; }

 private:
  HermitianPair pair_;
  std::shared_ptr<const RootSystem> roots_;
  RootPartition partition_;
};

/// Coefficient of the given node in the highest root.
int highest_root_coefficient(const RootSystem& rs, int node);

/// Every pair of the six Hermitian families within the desk-scale bounds:
/// su(p,q) with p <= q, p+q <= 8; so(2,n), sp(n,R), so*(2n) up to rank 7;
/// E III and E VII.
const std::vector<HermitianPair>& catalog();

/// Looks a pair up by CLI label. Throws DomainError on unknown labels.
const HermitianPair& find_pair(const std::string& label);

/// Splits the positive roots by their coefficient at the noncompact node.
/// Throws StructuralError if some coefficient is neither 0 nor 1.
RootPartition partition_roots(const RootSystem& rs, int node);
RootPartition partition_roots(const HermitianPair& pair);

/// |Delta_n^+| = dim_C p^+.
int dim_p_plus(const HermitianPair& pair);

}  // namespace hdt
