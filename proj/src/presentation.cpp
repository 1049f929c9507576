#include "mudeg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mudeg/errors.hpp"

namespace mudeg {

void Presentation::validate() const {
  const auto g = static_cast<int>(generators.size());
  for (const auto& r : relators)
    for (int letter : r)
      if (letter == 0 || letter > g || -letter > g)
        throw std::invalid_argument("relator letter out of range for " + std::to_string(g) + " generators");
}

Word inverse_word(const Word& word) {
  Word out(word.rbegin(), word.rend());
  for (int& l : out) l = -l;
  return out;
}

namespace {

Word power_word(const Word& w, long long k) {
  const Word base = k < 0 ? inverse_word(w) : w;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Recursive-descent parser over one word; positions are byte offsets into
// the original text so callers can report them.
class WordParser {
 public:
  WordParser(std::string_view text, std::size_t base, const std::vector<std::string>& gens)
      : text_(text), base_(base), gens_(gens) {}

  Word parse_relation() {
    Word lhs = parse_top();
    skip();
    if (peek() == '=') {
      ++pos_;
      Word rhs = parse_top();
      lhs = concat(std::move(lhs), inverse_word(rhs));
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return lhs;
  }

 private:
  Word parse_top() {
    skip();
    if (peek() == '1') {
      const std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == text_.size() || peek() == '=' ) return {};
      pos_ = save;
    }
    return parse_product();
  }

  Word parse_product() {
    Word w = parse_factor();
    for (;;) {
      skip();
      if (peek() != '*') return w;
      ++pos_;
      w = concat(std::move(w), parse_factor());
    }
  }

  Word parse_factor() {
    Word w = parse_primary();
    for (;;) {
      skip();
      if (peek() != '^') return w;
      ++pos_;
      skip();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
        skip();
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        long long k = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) k = k * 10 + (text_[pos_++] - '0');
        w = power_word(w, negative ? -k : k);
      } else if (is_name_start(peek())) {
        Word g = generator_letter(read_name());
        if (negative) g = inverse_word(g);
        w = concat(concat(inverse_word(g), w), g);
      } else {
        fail("expected an exponent or generator name after '^'");
      }
    }
  }

  Word parse_primary() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_product();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_product();
      expect(',');
      Word v = parse_product();
      expect(']');
      return concat(concat(inverse_word(u), inverse_word(v)), concat(u, v));
    }
    if (is_name_start(c)) return generator_letter(read_name());
    fail(c == '\0' ? "unexpected end of word, expected a generator" : "expected a generator, '(' or '['");
  }

  Word generator_letter(const std::string& name) {
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) fail("unknown generator '" + name + "'");
    return {static_cast<int>(it - gens_.begin()) + 1};
  }

  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  std::string read_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(base_ + pos_, msg); }

  std::string_view text_;
  std::size_t base_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr long kUndefined = -1;

class Enumerator {
 public:
  Enumerator(std::size_t generator_count, std::size_t max_cosets)
      : cols_(2 * generator_count), max_cosets_(max_cosets) {
    new_row();
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = alpha;
    std::size_t b = alpha;
    std::ptrdiff_t i = 0;
    auto j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kUndefined) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1U) != kUndefined) b = static_cast<std::size_t>(at(b, w[j--] ^ 1U));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, w[i] ^ 1U, f);
        return;
      }
      define(f, w[i]);
    }
  }

  void fill_row(std::size_t alpha) {
    for (std::size_t x = 0; x < cols_ && alive(alpha); ++x)
      if (at(alpha, x) == kUndefined) define(alpha, x);
  }

  bool alive(std::size_t c) const { return parent_[c] == c; }
  std::size_t defined() const { return parent_.size(); }
  std::size_t live() const { return live_; }

  CosetTable compact(std::size_t generator_count) {
    std::vector<std::size_t> number(parent_.size(), 0);
    std::size_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c)) number[c] = next++;
    std::vector<std::vector<std::size_t>> rows;
    rows.reserve(next);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      std::vector<std::size_t> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(c, x) == kUndefined) throw std::logic_error("coset table incomplete after enumeration");
        row[x] = number[rep(static_cast<std::size_t>(at(c, x)))];
      }
      rows.push_back(std::move(row));
    }
    return CosetTable(generator_count, std::move(rows));
  }

 private:
  long at(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }
  void set(std::size_t c, std::size_t x, std::size_t v) { table_[c * cols_ + x] = static_cast<long>(v); }
  void unset(std::size_t c, std::size_t x) { table_[c * cols_ + x] = kUndefined; }

  std::size_t new_row() {
    if (parent_.size() >= max_cosets_)
      throw CapExceeded("coset", max_cosets_, "enumeration did not close within the coset limit");
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    return c;
  }

  void define(std::size_t alpha, std::size_t x) {
    const std::size_t beta = new_row();
    set(alpha, x, beta);
    set(beta, x ^ 1U, alpha);
  }

  std::size_t rep(std::size_t k) {
    std::size_t root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const std::size_t next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l) {
    const std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::size_t keep = std::min(a, b), drop = std::max(a, b);
    parent_[drop] = keep;
    --live_;
    queue_.push_back(drop);
  }

  void coincidence(std::size_t alpha, std::size_t beta) {
    queue_.clear();
    merge(alpha, beta);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::size_t gamma = queue_[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(gamma, x) == kUndefined) continue;
        const auto delta = static_cast<std::size_t>(at(gamma, x));
        unset(delta, x ^ 1U);
        const std::size_t mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) != kUndefined) {
          merge(nu, static_cast<std::size_t>(at(mu, x)));
        } else if (at(nu, x ^ 1U) != kUndefined) {
          merge(mu, static_cast<std::size_t>(at(nu, x ^ 1U)));
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1U, mu);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::vector<long> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> queue_;
  std::size_t live_ = 0;
};

std::vector<std::size_t> to_columns(const Word& w) {
  std::vector<std::size_t> cols;
  cols.reserve(w.size());
  for (int l : w) cols.push_back(l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1);
  return cols;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return WordParser(text, 0, generators).parse_relation();
}

PresentationFile parse_presentation(std::string_view text) {
  PresentationFile file;
  bool have_gens = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string_view trimmed = trim(line);
    const std::size_t offset =
        line_start + (trimmed.empty() ? 0 : static_cast<std::size_t>(trimmed.data() - line.data()));
    line = trimmed;
    line_start = line_end + 1;
    if (line.empty()) continue;

    if (line.starts_with("gens:")) {
      if (have_gens) throw ParseError(offset, "duplicate 'gens:' line");
      std::string_view rest = line.substr(5);
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && (std::isspace(static_cast<unsigned char>(rest[i])) || rest[i] == ',')) ++i;
        const std::size_t start = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i])) && rest[i] != ',') ++i;
        if (i == start) break;
        std::string name(rest.substr(start, i - start));
        if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
          throw ParseError(offset + 5 + start, "generator names must start with a letter");
        for (char c : name)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError(offset + 5 + start, "invalid generator name '" + name + "'");
        if (std::find(file.presentation.generators.begin(), file.presentation.generators.end(), name) !=
            file.presentation.generators.end())
          throw ParseError(offset + 5 + start, "duplicate generator '" + name + "'");
        file.presentation.generators.push_back(std::move(name));
      }
      if (file.presentation.generators.empty()) throw ParseError(offset, "'gens:' lists no generators");
      have_gens = true;
      continue;
    }
    if (!have_gens) throw ParseError(offset, "expected 'gens:' before relators");

    if (line.starts_with("subgroup:")) {
      std::string_view rest = line.substr(9);
      std::size_t base = offset + 9;
      std::size_t i = 0;
      while (i <= rest.size()) {
        std::size_t comma = rest.find(',', i);
        if (comma == std::string_view::npos) comma = rest.size();
        std::string_view piece = rest.substr(i, comma - i);
        if (!trim(piece).empty())
          file.subgroup.push_back(WordParser(piece, base + i, file.presentation.generators).parse_relation());
        i = comma + 1;
      }
      continue;
    }
    file.presentation.relators.push_back(
        WordParser(line, offset, file.presentation.generators).parse_relation());
  }
  if (!have_gens) throw ParseError(0, "missing 'gens:' line");
  return file;
}

std::string format_word(const Word& word, const std::vector<std::string>& generators) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    const int l = word[i];
    out += generators.at(static_cast<std::size_t>((l > 0 ? l : -l) - 1));
    const long run = static_cast<long>(j - i) * (l > 0 ? 1 : -1);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Permutation evaluate_word(std::span<const Permutation> images, const Word& word, std::size_t degree) {
  Permutation result(degree);
  for (int l : word) {
    const std::size_t g = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    if (l == 0 || g >= images.size())
      throw std::out_of_range("word letter " + std::to_string(l) + " has no image");
    result = compose(result, l > 0 ? images[g] : images[g].inverse());
  }
  return result;
}

Permutation evaluate_word(std::span<const Permutation> images, const Word& word) {
  if (images.empty()) throw std::invalid_argument("evaluate_word needs at least one image");
  return evaluate_word(images, word, images.front().degree());
}

std::size_t CosetTable::trace(std::size_t coset, const Word& word) const {
  for (int l : word)
    coset = rows_[coset][l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1];
  return coset;
}

bool CosetTable::is_consistent(const Presentation& p) const {
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    if (rows_[c].size() != 2 * generator_count_) return false;
    for (std::size_t x = 0; x < rows_[c].size(); ++x) {
      const std::size_t d = rows_[c][x];
      if (d >= rows_.size() || rows_[d][x ^ 1U] != c) return false;
    }
    for (const auto& r : p.relators)
      if (trace(c, r) != c) return false;
  }
  return true;
}

std::vector<Permutation> CosetTable::generator_permutations() const {
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < generator_count_; ++g) {
    std::vector<Point> img(rows_.size());
    for (std::size_t c = 0; c < rows_.size(); ++c) img[c] = static_cast<Point>(rows_[c][2 * g]);
    out.emplace_back(std::move(img));
  }
  return out;
}

Enumeration todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  p.validate();
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
  Presentation sub_check{p.generators, subgroup};
  sub_check.validate();

  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : p.relators) relators.push_back(to_columns(r));
  Enumerator e(p.generator_count(), max_cosets);
  for (const auto& w : subgroup) e.scan_and_fill(0, to_columns(w));
  for (std::size_t alpha = 0; alpha < e.defined(); ++alpha) {
    for (const auto& r : relators) {
      if (!e.alive(alpha)) break;
      e.scan_and_fill(alpha, r);
    }
    if (e.alive(alpha)) e.fill_row(alpha);
  }
  const std::size_t live = e.live();
  const std::size_t defined = e.defined();
  return Enumeration{live, defined, e.compact(p.generator_count())};
}

bool verify_presentation_isomorphism(const Presentation& p, std::span<const Permutation> images,
                                     std::size_t max_cosets) {
  if (images.size() != p.generator_count())
    throw std::invalid_argument("need one image per generator");
  if (images.empty()) return todd_coxeter(p, {}, max_cosets).index == 1;
  for (const auto& r : p.relators)
    if (!evaluate_word(images, r).is_identity()) return false;
  const PermGroup g(images.front().degree(), std::vector<Permutation>(images.begin(), images.end()));
  return todd_coxeter(p, {}, max_cosets).index == g.order();
}

namespace {

constexpr std::string_view kG443Text = R"(gens: x y a b
x^4
y^4
b^3
a^2
[x,y]
x^a = y
x^b = y
y^b = x^-1*y^-1
b^a = b^-1
)";

}  // namespace

Presentation g443_presentation() { return parse_presentation(kG443Text).presentation; }

Presentation g443_presentation_with_ya() {
  Presentation p = g443_presentation();
  p.relators.push_back(parse_word("y^a = x", p.generators));
  return p;
}

}  // namespace mudeg
