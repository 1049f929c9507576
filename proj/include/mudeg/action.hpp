#pragma once

#include <cstddef>
#include <vector>

#include "mudeg/group.hpp"
#include "mudeg/lattice.hpp"

namespace mudeg {

/// Right-multiplication action of G on the right cosets of H.
struct CosetAction {
  /// Image of G in Sym(|G:H|), with its stabilizer chain.
  PermGroup image;
  /// Image of each generator of G, in generator order.
  std::vector<Permutation> generator_images;
  /// coset_of[e] is the coset containing element e. Cosets are numbered by
  /// their least element index.
  std::vector<std::size_t> coset_of;
};

/// Acts on cosets Hg by Hg -> Hgs. Throws std::invalid_argument if H is not
/// a closed subset of the table.
CosetAction coset_action(const PermGroup& group, const ElementTable& table, const Subgroup& h);

/// True iff the image has the same order as the group.
bool is_faithful_action(const PermGroup& group, const PermGroup& image);

/// Images of G's generators under the direct sum of several coset actions,
/// on sum(|G:H_i|) points.
std::vector<Permutation> combined_action(const PermGroup& group, const ElementTable& table,
                                         const std::vector<const Subgroup*>& subgroups);

}  // namespace mudeg
