#include "mudeg/action.hpp"

#include <stdexcept>

namespace mudeg {

CosetAction coset_action(const PermGroup& group, const ElementTable& table, const Subgroup& h) {
  if (h.members.universe() != table.size() || !is_closed(table, h.members))
    throw std::invalid_argument("coset_action: H is not a subgroup of the element table");
  if (table.size() != group.order())
    throw std::invalid_argument("coset_action: element table does not belong to the group");

  const std::size_t none = table.size();
  std::vector<std::size_t> coset_of(table.size(), none);
  std::vector<std::size_t> representative;
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (coset_of[g] != none) continue;
    const std::size_t id = representative.size();
    representative.push_back(g);
    h.members.for_each([&](std::size_t x) { coset_of[table.product(x, g)] = id; });
  }

  const std::size_t degree = representative.size();
  std::vector<Permutation> images;
  for (const auto& s : group.generators()) {
    const auto si = table.index_of(s);
    if (!si) throw std::invalid_argument("coset_action: generator missing from element table");
    std::vector<Point> img(degree);
    for (std::size_t c = 0; c < degree; ++c)
      img[c] = static_cast<Point>(coset_of[table.product(representative[c], *si)]);
    images.emplace_back(std::move(img));
  }
  PermGroup image(degree, images);
  return CosetAction{std::move(image), std::move(images), std::move(coset_of)};
}

bool is_faithful_action(const PermGroup& group, const PermGroup& image) {
  return image.order() == group.order();
}

std::vector<Permutation> combined_action(const PermGroup& group, const ElementTable& table,
                                         const std::vector<const Subgroup*>& subgroups) {
  std::vector<CosetAction> parts;
  std::size_t total = 0;
  for (const Subgroup* h : subgroups) {
    parts.push_back(coset_action(group, table, *h));
    total += parts.back().image.degree();
  }
  std::vector<Permutation> out;
  for (std::size_t s = 0; s < group.generators().size(); ++s) {
    std::vector<Point> img;
    img.reserve(total);
    std::size_t offset = 0;
    for (const auto& part : parts) {
      for (Point v : part.generator_images[s].images()) img.push_back(static_cast<Point>(offset + v));
      offset += part.image.degree();
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace mudeg
