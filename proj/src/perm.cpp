#include "mudeg/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mudeg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("permutation images are not a bijection on 0.." +
                                  std::to_string(images_.size()) + "-1");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      if (from >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected a point in cycle notation");
      Point v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<Point>(text[i++] - '0');
      cycle.push_back(v);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t new_degree) const {
  if (offset + degree() > new_degree) throw std::invalid_argument("shifted permutation does not fit");
  Permutation out(new_degree);
  for (std::size_t i = 0; i < degree(); ++i)
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of degree " + std::to_string(p.degree()) +
                                " and " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[static_cast<Point>(i)]];
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& c : p.cycles()) order = std::lcm(order, static_cast<std::uint64_t>(c.size()));
  return order;
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  return compose(compose(p.inverse(), q.inverse()), compose(p, q));
}

bool commute(const Permutation& p, const Permutation& q) { return compose(p, q) == compose(q, p); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mudeg
