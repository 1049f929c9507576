#pragma once

#include <string>
#include <vector>

#include "mudeg/constructors.hpp"

namespace corpus {

struct Entry {
  std::string name;
  mudeg::PermGroup group;
  bool abelian;
};

// Quaternion group acting on itself by right multiplication. Points:
// 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k.
inline mudeg::PermGroup quaternion() {
  // unit product table for 1,i,j,k with signs
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto right = [&](int u) {
    std::vector<mudeg::Point> img(8);
    for (int p = 0; p < 8; ++p) {
      const int a = p / 2, s = p % 2 ? -1 : 1;
      const int b = unit[a][u], t = s * sign[a][u];
      img[p] = static_cast<mudeg::Point>(2 * b + (t < 0));
    }
    return mudeg::Permutation(img);
  };
  return mudeg::PermGroup(8, {right(1), right(2)});
}

// C3 : C4 with the generator of C4 inverting C3.
inline mudeg::PermGroup dicyclic12() {
  return mudeg::PermGroup(7, {mudeg::Permutation::parse_cycles(7, "(0 1 2)"),
                              mudeg::Permutation::parse_cycles(7, "(0 1)(3 4 5 6)")});
}

inline std::vector<Entry> small_groups() {
  using namespace mudeg;
  auto ab = [](std::vector<std::size_t> orders) { return abelian(orders); };
  return {
      {"C1", cyclic(1), true},          {"C2", cyclic(2), true},          {"C3", cyclic(3), true},
      {"C4", cyclic(4), true},          {"C6", cyclic(6), true},          {"C8", cyclic(8), true},
      {"C12", cyclic(12), true},        {"C2xC2", ab({2, 2}), true},      {"C2xC4", ab({2, 4}), true},
      {"C2^3", ab({2, 2, 2}), true},    {"C2xC6", ab({2, 6}), true},      {"C3xC3", ab({3, 3}), true},
      {"C4xC4", ab({4, 4}), true},      {"C2xC2xC4", ab({2, 2, 4}), true}, {"C2xC12", ab({2, 12}), true},
      {"S3", symmetric(3), false},      {"S4", symmetric(4), false},      {"A4", alternating(4), false},
      {"D4", dihedral(4), false},       {"D6", dihedral(6), false},       {"Q8", quaternion(), false},
      {"C3:C4", dicyclic12(), false},   {"D5", dihedral(5), false},       {"S3xC2", direct_product(symmetric(3), cyclic(2)), false},
  };
}

}  // namespace corpus
