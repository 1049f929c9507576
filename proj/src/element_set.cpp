#include "mudeg/element_set.hpp"

#include <cstdio>
#include <stdexcept>

namespace mudeg {

std::string ElementSet::to_hex() const {
  std::string out;
  out.reserve(words_.size() * 16);
  char buf[17];
  for (auto it = words_.rbegin(); it != words_.rend(); ++it) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*it));
    out += buf;
  }
  return out;
}

ElementSet ElementSet::from_hex(std::size_t universe, const std::string& hex) {
  ElementSet s(universe);
  if (hex.size() != s.words_.size() * 16) throw std::invalid_argument("element set hex has wrong length");
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    const std::size_t from = (s.words_.size() - 1 - w) * 16;
    s.words_[w] = std::stoull(hex.substr(from, 16), nullptr, 16);
  }
  if (universe % kWordBits != 0 && !s.words_.empty() &&
      (s.words_.back() >> (universe % kWordBits)) != 0)
    throw std::invalid_argument("element set hex has bits beyond the universe");
  return s;
}

}  // namespace mudeg
