#include "tilegroup/universal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tilegroup/psgamma.hpp"

namespace tilegroup {

namespace {

FreeWord word_over(const std::string& s, const std::vector<std::string>& gens) {
  std::vector<Letter> letters;
  for (char c : s) {
    auto it = std::find(gens.begin(), gens.end(), std::string(1, c));
    if (it == gens.end()) throw InvalidArgument(std::string("letter ") + c + " has no generator");
    letters.push_back(Letter{static_cast<std::size_t>(it - gens.begin()), 1});
  }
  return FreeWord(std::move(letters));
}

QR word_length(const std::string& w, const LengthFunction& lengths) {
  QR total(0);
  for (char c : w) {
    auto it = lengths.find(c);
    if (it == lengths.end()) throw InvalidArgument(std::string("no length for letter ") + c);
    total += it->second;
  }
  return total;
}

std::map<char, long> letter_counts(const std::string& w) {
  std::map<char, long> m;
  for (char c : w) ++m[c];
  return m;
}

}  // namespace

HarvestReport harvest_equal_length_relations(const IndexedWord& word, const LengthFunction& lengths, int max_len) {
  if (max_len < 2) throw InvalidArgument("max_len must be >= 2");
  validate_lengths(lengths);
  const FactorLanguage lang = factor_language(word, max_len);
  std::map<QR, std::vector<std::string>> by_length;
  for (const auto& f : lang.words) by_length[word_length(f, lengths)].push_back(f);

  HarvestReport rep;
  rep.half_width = lang.half_width;
  rep.max_len = max_len;
  for (const auto& [letter, len] : lengths) rep.presentation.generators.emplace_back(1, letter);
  for (const auto& [len, group] : by_length) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        rep.provenance.push_back(RelationProvenance{group[i], group[j], len});
        const FreeWord u = word_over(group[i], rep.presentation.generators);
        const FreeWord v = word_over(group[j], rep.presentation.generators);
        FreeWord r = u * v.inverse();
        if (!r.empty()) rep.presentation.relators.push_back(std::move(r));
      }
    }
  }
  return rep;
}

bool relations_preserve_letter_counts(const HarvestReport& report) {
  return std::all_of(report.provenance.begin(), report.provenance.end(),
                     [](const RelationProvenance& r) { return letter_counts(r.u) == letter_counts(r.v); });
}

std::string AccentString::to_string() const {
  // grave = out, acute = in, check = both
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    out += word[k];
    if (k == out_pos && k == in_pos) {
      out += "^";
    } else if (k == out_pos) {
      out += "`";
    } else if (k == in_pos) {
      out += "'";
    }
  }
  return out;
}

bool is_valid(const AccentString& p, const FactorLanguage& lang) {
  return p.out_pos < p.word.size() && p.in_pos < p.word.size() && lang.contains(p.word);
}

std::optional<AccentString> accent_multiply(const AccentString& p, const AccentString& q, const FactorLanguage& lang) {
  // q's letter k sits under p's letter k + off.
  const long off = static_cast<long>(p.in_pos) - static_cast<long>(q.out_pos);
  const long lo = std::min(0L, off);
  const long hi = std::max(static_cast<long>(p.word.size()), off + static_cast<long>(q.word.size()));
  std::string glued(static_cast<std::size_t>(hi - lo), '\0');
  for (std::size_t k = 0; k < p.word.size(); ++k) glued[static_cast<std::size_t>(static_cast<long>(k) - lo)] = p.word[k];
  for (std::size_t k = 0; k < q.word.size(); ++k) {
    char& slot = glued[static_cast<std::size_t>(static_cast<long>(k) + off - lo)];
    if (slot != '\0' && slot != q.word[k]) return std::nullopt;
    slot = q.word[k];
  }
  if (!lang.contains(glued)) return std::nullopt;
  return AccentString{std::move(glued), static_cast<std::size_t>(static_cast<long>(p.out_pos) - lo),
                      static_cast<std::size_t>(static_cast<long>(q.in_pos) + off - lo)};
}

AccentString accent_inverse(const AccentString& p) { return AccentString{p.word, p.in_pos, p.out_pos}; }

bool accent_leq(const AccentString& p, const AccentString& q) {
  const long off = static_cast<long>(p.out_pos) - static_cast<long>(q.out_pos);
  if (static_cast<long>(p.in_pos) - static_cast<long>(q.in_pos) != off) return false;
  if (off < 0 || off + q.word.size() > p.word.size()) return false;
  return p.word.compare(static_cast<std::size_t>(off), q.word.size(), q.word) == 0;
}

std::vector<AccentString> enumerate_SL(const FactorLanguage& lang, std::size_t max_len) {
  std::vector<AccentString> out;
  for (const auto& w : lang.words) {
    if (w.size() > max_len) continue;
    for (std::size_t o = 0; o < w.size(); ++o)
      for (std::size_t i = 0; i < w.size(); ++i) out.push_back(AccentString{w, o, i});
  }
  return out;
}

CLSets enumerate_CL_and_max(const FactorLanguage& lang, std::size_t max_len) {
  if (max_len < 1) throw InvalidArgument("max_len must be >= 1");
  CLSets s;
  std::set<AccentString> m;
  for (const auto& w : lang.words) {
    if (w.size() > max_len) continue;
    AccentString c{w, 0, w.size() - 1};
    m.insert(c);
    m.insert(accent_inverse(c));
    s.C.push_back(std::move(c));
  }
  s.M.assign(m.begin(), m.end());
  return s;
}

AccentString accent_max_above(const AccentString& p) {
  const std::size_t lo = std::min(p.out_pos, p.in_pos);
  const std::size_t hi = std::max(p.out_pos, p.in_pos);
  return AccentString{p.word.substr(lo, hi - lo + 1), p.out_pos - lo, p.in_pos - lo};
}

std::vector<AccentString> decompose_C_into_L2(const AccentString& c) {
  if (c.word.size() < 2) throw InvalidArgument("decomposition needs a word of length >= 2");
  if (c.out_pos != 0 || c.in_pos != c.word.size() - 1) throw InvalidArgument("element is not in C(L)");
  std::vector<AccentString> out;
  for (std::size_t k = 0; k + 1 < c.word.size(); ++k) out.push_back(AccentString{c.word.substr(k, 2), 0, 1});
  return out;
}

TilingUniversalGroup universal_group_SL(const FactorLanguage& lang) {
  if (lang.max_len < 2) throw InvalidArgument("language must contain words of length 2");
  TilingUniversalGroup g;
  g.presentation.generators = lang.of_length(2);
  g.rank = static_cast<long>(g.presentation.generators.size());
  return g;
}

FreeWord c_to_free_group(const AccentString& c, const TilingUniversalGroup& g) {
  if (c.word.size() == 1) return FreeWord();
  FreeWord out;
  for (const auto& piece : decompose_C_into_L2(c)) {
    out = out * FreeWord::generator(g.presentation.generator_index(piece.word));
  }
  return out;
}

CaseSetup case_setup(ReferenceCase c) {
  const QR tau = QR::golden();
  switch (c) {
    case ReferenceCase::Fibonacci:
      return CaseSetup{"fib", make_substitution({{'a', "ab"}, {'b', "a"}}, 'a'), {{'a', tau}, {'b', QR(1)}}, 40, 12, 2};
    case ReferenceCase::PeriodicAB21:
      return CaseSetup{"periodic-ab-2-1", SequenceSpec{Periodic{"ab"}}, {{'a', QR(2)}, {'b', QR(1)}}, 40, 12, 1};
    case ReferenceCase::SpliceIrrational:
      return CaseSetup{"splice-irrational", SequenceSpec{Spliced{"a", "b"}}, {{'a', tau}, {'b', QR(1)}}, 40, 16, 1};
    case ReferenceCase::SpliceRational32:
      // No reference H_D rank for the rational splice.
      return CaseSetup{"splice-rational-3-2", SequenceSpec{Spliced{"a", "b"}}, {{'a', QR(3)}, {'b', QR(2)}}, 40, 12, -1};
  }
  throw InvalidArgument("unknown case");
}

ReferenceCase parse_case(const std::string& name) {
  for (auto c : {ReferenceCase::Fibonacci, ReferenceCase::PeriodicAB21, ReferenceCase::SpliceIrrational,
                 ReferenceCase::SpliceRational32}) {
    if (case_setup(c).name == name) return c;
  }
  throw InvalidArgument("unknown case '" + name + "'");
}

CaseReport run_reference_case(const CaseSetup& setup, const QR& oplus_bound) {
  CaseReport r;
  r.name = setup.name;
  const IndexedWord window = two_sided_window(setup.spec, setup.half_width);
  r.harvest = harvest_equal_length_relations(window, setup.lengths, setup.max_len);
  r.letter_counts_preserved = relations_preserve_letter_counts(r.harvest);
  r.simplified = tietze_simplify(r.harvest.presentation, 64);
  r.harvest_invariants = abelian_invariants(r.harvest.presentation);
  r.certificates = certify(r.simplified);

  std::vector<QR> lens;
  for (const auto& [letter, len] : setup.lengths) lens.push_back(len);
  r.hd = hd_invariants(lens);
  r.reference_hd_rank = setup.reference_hd_rank;
  r.hd_discrepancy = setup.reference_hd_rank >= 0 && setup.reference_hd_rank != r.hd.rank;

  const PointSet1D ps = build_pointset(window, setup.lengths, QR(0));
  const DiffTable table = maxset_table(ps, oplus_bound);
  r.oplus_invariants = abelian_invariants(universal_presentation_from_table(table.table));

  const std::string stamp = "(h=" + std::to_string(r.harvest.half_width) + ", N=" + std::to_string(r.harvest.max_len) + ")";
  if (r.certificates.free) {
    r.gd_summary = "free of rank " + std::to_string(r.certificates.free_rank) + " (no relations up to " + stamp + ")";
  } else if (r.certificates.free_abelian) {
    r.gd_summary = "Z^" + std::to_string(r.certificates.abelian_rank) + " certificate";
  } else {
    r.gd_summary = "abelianization " + r.harvest_invariants.to_string() + " " + stamp;
  }
  return r;
}

}  // namespace tilegroup
