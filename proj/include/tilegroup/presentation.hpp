#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tilegroup/intmatrix.hpp"
#include "tilegroup/table.hpp"

namespace tilegroup {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group with generators 0..n-1.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces on construction.
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord generator(std::size_t gen, int exp = 1) { return FreeWord({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& other) const;
  /// Cyclically reduced, least rotation of the word or its inverse.
  FreeWord cyclic_canonical() const;
  /// Replace each generator by a word.
  FreeWord substitute(const std::vector<FreeWord>& images) const;
  /// Per-generator exponent sums.
  std::vector<long> exponent_sums(std::size_t generators) const;

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
FreeWord reduce_word(const std::vector<Letter>& raw);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  std::size_t generator_index(const std::string& label) const;
  /// Letters written as labels, inverses with a trailing '-'.
  FreeWord parse_word(const std::string& text) const;
  std::string format_word(const FreeWord& w) const;
  /// "gens: a b; rel: a b a- b-"
  std::string to_string() const;
  static Presentation parse(const std::string& text);
};

/// Relators u * v^-1 for each pair; trivial relators are dropped.
Presentation presentation_from_pairs(std::vector<std::string> gens,
                                     const std::vector<std::pair<FreeWord, FreeWord>>& pairs);

/// Relator exponent-sum matrix, one row per relator.
IntMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
  long free_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  std::string to_string() const;
};

AbelianInvariants abelian_invariants(const Presentation& p);

Presentation tietze_simplify(const Presentation& p, int budget);

/// Target of a homomorphism check: decides whether a word over the target
/// generators is trivial in the target group.
enum class TargetGroup { Free, FreeAbelian, Integers };

/// Images are words over the target generators; for TargetGroup::Integers
/// the target has one generator and the image's exponent sum is its value.
bool check_homomorphism(const Presentation& p, const std::vector<FreeWord>& images, TargetGroup target);

/// Presentation of the universal group of a finite partial operation:
/// one generator per element, relator [s][t][s o t]^-1 per defined product.
Presentation universal_presentation_from_table(const OperationTable& table);

/// Named certificates for the isomorphism type.
struct Certificates {
  /// No relators: the group is free on the generators.
  bool free = false;
  long free_rank = 0;
  /// Every pair of generators has its commutator among the relators and every
  /// relator has zero exponent sums, so the group is Z^n.
  bool free_abelian = false;
  long abelian_rank = 0;
};

Certificates certify(const Presentation& p);

}  // namespace tilegroup
