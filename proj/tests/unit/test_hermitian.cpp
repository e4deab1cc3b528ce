#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hdt/errors.hpp"
#include "hdt/hermitian.hpp"

using hdt::Family;
using hdt::HermitianPair;

namespace {

// dim_C p^+ for each family, from the matrix realizations.
int expected_dim_p_plus(const std::string& label) {
  if (label.rfind("sostar", 0) == 0) {
    const int n = std::stoi(label.substr(6)) / 2;
    return n * (n - 1) / 2;
  }
  if (label.rfind("so2_", 0) == 0) return std::stoi(label.substr(4));
  if (label.rfind("su", 0) == 0) return (label[2] - '0') * (label[3] - '0');
  if (label.rfind("sp", 0) == 0) {
    const int n = std::stoi(label.substr(2));
    return n * (n + 1) / 2;
  }
  if (label == "e3iii") return 16;
  if (label == "e7vii") return 27;
  return -1;
}

}  // namespace

TEST(Catalog, CoversSixFamilies) {
  const auto& cat = hdt::catalog();
  EXPECT_GE(cat.size(), 20u);
  std::set<std::string> families;
  for (const auto& p : cat) families.insert(p.name.substr(0, p.name.find(' ')));
  EXPECT_EQ(families, (std::set<std::string>{"AIII", "BDI", "CI", "DIII", "EIII", "EVII"}));
  std::set<std::string> labels;
  for (const auto& p : cat) EXPECT_TRUE(labels.insert(p.label).second) << p.label;
}

TEST(Catalog, DimensionOfPPlus) {
  for (const auto& p : hdt::catalog()) {
    EXPECT_EQ(hdt::dim_p_plus(p), expected_dim_p_plus(p.label)) << p.label;
  }
}

TEST(Catalog, CompactPlusNoncompactIsEverything) {
  for (const auto& p : hdt::catalog()) {
    const hdt::HermitianStructure hs(p);
    const auto& part = hs.partition();
    EXPECT_EQ(part.compact_pos.size() + part.noncompact_pos.size(), hs.roots().positive_roots().size());
    for (const auto& r : part.compact_pos) EXPECT_EQ(r.coeffs[p.noncompact_node], 0);
    for (const auto& r : part.noncompact_pos) EXPECT_EQ(r.coeffs[p.noncompact_node], 1);
    EXPECT_EQ(hdt::highest_root_coefficient(hs.roots(), p.noncompact_node), 1);
  }
}

TEST(Catalog, CompactNodesSkipTheNoncompactOne) {
  const HermitianPair& pair = hdt::find_pair("e7vii");
  EXPECT_EQ(pair.compact_nodes(), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(hdt::find_pair("su23").compact_nodes(), (std::vector<int>{0, 2, 3}));
}

TEST(Catalog, UnknownLabelThrows) {
  EXPECT_THROW(hdt::find_pair("bogus"), hdt::DomainError);
  EXPECT_THROW(hdt::find_pair("su11 "), hdt::DomainError);
}

TEST(Hermitian, NonCominusculeNodeRejected) {
  // B3 node 2 and E7 node 1 have highest-root coefficient 2.
  EXPECT_THROW(hdt::HermitianStructure(HermitianPair{{Family::B, 3}, 1, "x", "x"}), hdt::DomainError);
  EXPECT_THROW(hdt::HermitianStructure(HermitianPair{{Family::E7, 7}, 0, "x", "x"}), hdt::DomainError);
  EXPECT_THROW(hdt::partition_roots(hdt::build_root_system({Family::C, 3}), 0), hdt::StructuralError);
}
