#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mudeg/group.hpp"

namespace mudeg {

/// A word in the generators: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

/// Finitely presented group <generators | relators>.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const noexcept { return generators.size(); }
  /// Throws std::invalid_argument if a letter is out of range.
  void validate() const;
};

/// A presentation file: the presentation plus optional subgroup words.
struct PresentationFile {
  Presentation presentation;
  std::vector<Word> subgroup;
};

/// Parses one word. Grammar:
///   word    := "1" | product
///   product := factor ("*" factor)*
///   factor  := primary ("^" exponent)*
///   primary := name | "(" product ")" | "[" product "," product "]"
///   exponent:= ["-"] digits | name          (x^g means g^-1 x g)
/// A relation "lhs = rhs" becomes the relator lhs * rhs^-1.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

/// Parses a presentation file:
///   # comment
///   gens: x y a b
///   x^4
///   a^-1*b*a*b
///   x^a = y
///   subgroup: x, y          (optional; comma separated words)
PresentationFile parse_presentation(std::string_view text);

std::string format_word(const Word& word, const std::vector<std::string>& generators);
Word inverse_word(const Word& word);

/// Product of the images (or their inverses) along the word, left to right.
/// Throws std::out_of_range for a letter with no image.
Permutation evaluate_word(std::span<const Permutation> images, const Word& word, std::size_t degree);
Permutation evaluate_word(std::span<const Permutation> images, const Word& word);

/// Completed coset table. Column 2i is generator i, column 2i+1 its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t generator_count, std::vector<std::vector<std::size_t>> rows)
      : generator_count_(generator_count), rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t generator_count() const noexcept { return generator_count_; }
  std::size_t entry(std::size_t coset, std::size_t column) const { return rows_[coset][column]; }
  /// Follow a word from a coset.
  std::size_t trace(std::size_t coset, const Word& word) const;
  /// Entries are mutually inverse and every relator closes at every coset.
  bool is_consistent(const Presentation& p) const;
  /// Action of each generator on the cosets.
  std::vector<Permutation> generator_permutations() const;

 private:
  std::size_t generator_count_;
  std::vector<std::vector<std::size_t>> rows_;
};

struct Enumeration {
  std::size_t index;
  std::size_t cosets_defined;
  CosetTable table;
};

/// Hasselgrove-Leech-Trotter coset enumeration: define cosets in order,
/// scan every relator at every live coset, fill the row, and resolve
/// coincidences through union-find. Throws CapExceeded if more than
/// `max_cosets` cosets would be defined; that does not prove infiniteness.
Enumeration todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                         std::size_t max_cosets = kDefaultMaxCosets);

/// Every relator evaluates to the identity on `images` and the presented
/// group has order |<images>|. Propagates CapExceeded.
bool verify_presentation_isomorphism(const Presentation& p, std::span<const Permutation> images,
                                     std::size_t max_cosets = kDefaultMaxCosets);

/// <x, y, a, b | x^4, y^4, b^3, a^2, [x,y], x^a = y, x^b = y, y^b = x^-1 y^-1,
/// b^a = b^-1>, the relation set as usually stated for G(4,4,3).
Presentation g443_presentation();
/// The same with the derivable relation y^a = x added.
Presentation g443_presentation_with_ya();

}  // namespace mudeg
