#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilegroup/pointset.hpp"
#include "tilegroup/presentation.hpp"
#include "tilegroup/sequences.hpp"

namespace tilegroup {

struct RelationProvenance {
  std::string u;
  std::string v;
  QR length;
};

struct HarvestReport {
  Presentation presentation;  // over the alphabet, one generator per letter
  long half_width = -1;
  int max_len = 0;
  std::vector<RelationProvenance> provenance;
};

/// One relation u = v per unordered pair of distinct factors of equal length.
HarvestReport harvest_equal_length_relations(const IndexedWord& word, const LengthFunction& lengths, int max_len);

/// Letter-count vectors of u and v agree for every harvested pair.
bool relations_preserve_letter_counts(const HarvestReport& report);

/// Element of the 1-D tiling semigroup S(L): a word of L with out- and
/// in-accents; out_pos == in_pos is the check accent.
struct AccentString {
  std::string word;
  std::size_t out_pos = 0;
  std::size_t in_pos = 0;

  friend auto operator<=>(const AccentString&, const AccentString&) = default;
  std::string to_string() const;
};

bool is_valid(const AccentString& p, const FactorLanguage& lang);

/// p above q, in-letter of p over out-letter of q; nullopt when the overlap
/// disagrees or the glued word is not in L.
std::optional<AccentString> accent_multiply(const AccentString& p, const AccentString& q, const FactorLanguage& lang);
AccentString accent_inverse(const AccentString& p);
/// p <= q: aligning the accents, q's word sits inside p's word.
bool accent_leq(const AccentString& p, const AccentString& q);

/// Every element of S(L) over words of length <= max_len.
std::vector<AccentString> enumerate_SL(const FactorLanguage& lang, std::size_t max_len);

struct CLSets {
  std::vector<AccentString> C;  // out on the first letter, in on the last
  std::vector<AccentString> M;  // C, their inverses
};
CLSets enumerate_CL_and_max(const FactorLanguage& lang, std::size_t max_len);

/// The unique maximal element above p.
AccentString accent_max_above(const AccentString& p);

/// Length-2 members of C(L) whose composite is c.
std::vector<AccentString> decompose_C_into_L2(const AccentString& c);

struct TilingUniversalGroup {
  Presentation presentation;  // free, generators are the length-2 words
  long rank = 0;
};
TilingUniversalGroup universal_group_SL(const FactorLanguage& lang);

/// Image of c in C(L) in the free group on L_2.
FreeWord c_to_free_group(const AccentString& c, const TilingUniversalGroup& g);

/// The four reference cases.
enum class ReferenceCase { Fibonacci, PeriodicAB21, SpliceIrrational, SpliceRational32 };

struct CaseSetup {
  std::string name;
  SequenceSpec spec;
  LengthFunction lengths;
  long half_width = 40;
  int max_len = 12;
  /// Reference H_D rank, -1 when the case has none.
  long reference_hd_rank = 0;
};

CaseSetup case_setup(ReferenceCase c);
ReferenceCase parse_case(const std::string& name);

struct CaseReport {
  std::string name;
  HarvestReport harvest;
  Presentation simplified;
  AbelianInvariants harvest_invariants;
  Certificates certificates;
  bool letter_counts_preserved = false;
  LatticeInvariants hd;
  long reference_hd_rank = 0;
  bool hd_discrepancy = false;
  AbelianInvariants oplus_invariants;
  std::string gd_summary;
};

/// oplus_bound: magnitude bound of the (D - D, (+)) table.
CaseReport run_reference_case(const CaseSetup& setup, const QR& oplus_bound);

}  // namespace tilegroup
