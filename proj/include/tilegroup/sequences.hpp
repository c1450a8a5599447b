#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tilegroup/error.hpp"

namespace tilegroup {

/// Ordered finite set of single-character symbols.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  const std::string& letters() const { return letters_; }
  bool contains(char c) const { return letters_.find(c) != std::string::npos; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::string letters_;
};

using SubstitutionRule = std::map<char, std::string>;

/// Bi-infinite fixed point of a substitution, seeded at the pair
/// seed_left|seed_right sitting on indices 0|1.
struct Substitution {
  SubstitutionRule rule;
  char seed_left = 0;
  char seed_right = 0;
};

/// T(i) = word[i mod |word|]; T(0) is the first letter.
struct Periodic {
  std::string word;
};

/// `left` repeated on indices <= 0 (ending with its last letter at 0),
/// `right` repeated on indices >= 1.
struct Spliced {
  std::string left;
  std::string right;
};

struct SequenceSpec {
  std::variant<Substitution, Periodic, Spliced> kind;

  Alphabet alphabet() const;
};

/// Builds a substitution spec, picking the left seed when it is not given.
/// Throws if no seed pair satisfies the two-sided seeding convention.
SequenceSpec make_substitution(SubstitutionRule rule, char seed_right, char seed_left = 0);

/// A finite window of a bi-infinite word: letters[k] = T(start_index + k).
struct IndexedWord {
  long start_index = 0;
  std::string letters;

  long end_index() const { return start_index + static_cast<long>(letters.size()); }  // one past
  std::size_t size() const { return letters.size(); }
  char at(long index) const;
};

std::string apply_substitution(const SubstitutionRule& rule, const std::string& word);

/// sigma^iterations(seed).
std::string expand_substitution(const SubstitutionRule& rule, char seed, int iterations);

/// True when `word` occurs in sigma^k(c) for some letter c and moderate k.
bool is_legal_word(const SubstitutionRule& rule, const std::string& word);

/// T restricted to [-half_width, half_width].
IndexedWord two_sided_window(const SequenceSpec& spec, long half_width);

/// Set of factors of a window, stamped with the truncation that produced it.
struct FactorLanguage {
  std::set<std::string> words;
  long half_width = -1;  // -1 when the language was given directly
  int max_len = 0;

  FactorLanguage() = default;
  explicit FactorLanguage(std::set<std::string> w);

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::vector<std::string> of_length(std::size_t n) const;
  bool is_factorial() const;
  std::string alphabet() const;
};

FactorLanguage factor_language(const IndexedWord& word, int max_len);

}  // namespace tilegroup
