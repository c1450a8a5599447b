#include "tilegroup/presentation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace tilegroup {

FreeWord reduce_word(const std::vector<Letter>& raw) { return FreeWord(raw); }

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw InvalidArgument("letter exponents must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return FreeWord(std::move(all));
}

FreeWord FreeWord::cyclic_canonical() const {
  std::vector<Letter> w = letters_;
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].gen == w[hi - 1].gen && w[lo].exp == -w[hi - 1].exp) {
    ++lo;
    --hi;
  }
  w = std::vector<Letter>(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
  if (w.empty()) return FreeWord();
  std::vector<Letter> best = w;
  for (const auto& base : {w, FreeWord(w).inverse().letters()}) {
    std::vector<Letter> rot = base;
    for (std::size_t k = 0; k < rot.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  FreeWord out;
  out.letters_ = std::move(best);
  return out;
}

FreeWord FreeWord::substitute(const std::vector<FreeWord>& images) const {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (l.gen >= images.size()) throw InvalidArgument("no image for generator " + std::to_string(l.gen));
    const FreeWord& img = l.exp > 0 ? images[l.gen] : images[l.gen].inverse();
    out.insert(out.end(), img.letters_.begin(), img.letters_.end());
  }
  return FreeWord(std::move(out));
}

std::vector<long> FreeWord::exponent_sums(std::size_t generators) const {
  std::vector<long> sums(generators, 0);
  for (const Letter& l : letters_) {
    if (l.gen >= generators) throw InvalidArgument("generator index out of range");
    sums[l.gen] += l.exp;
  }
  return sums;
}

std::size_t Presentation::generator_index(const std::string& label) const {
  auto it = std::find(generators.begin(), generators.end(), label);
  if (it == generators.end()) throw InvalidArgument("unknown generator '" + label + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

FreeWord Presentation::parse_word(const std::string& text) const {
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    if (tok.size() > 1 && tok.back() == '-') {
      exp = -1;
      tok.pop_back();
    }
    letters.push_back(Letter{generator_index(tok), exp});
  }
  return FreeWord(std::move(letters));
}

std::string Presentation::format_word(const FreeWord& w) const {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generators.at(l.gen);
    if (l.exp < 0) out += '-';
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : generators) out += " " + g;
  for (const auto& r : relators) out += "; rel: " + format_word(r);
  return out;
}

Presentation Presentation::parse(const std::string& text) {
  Presentation p;
  bool have_gens = false;
  std::vector<std::string> rels;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    const auto first = part.find_first_not_of(" \t\n");
    part = first == std::string::npos ? std::string() : part.substr(first);
    if (part.rfind("gens:", 0) == 0) {
      if (have_gens) throw ParseError("duplicate gens section");
      have_gens = true;
      std::istringstream in(part.substr(5));
      std::string g;
      while (in >> g) {
        if (g.back() == '-') throw ParseError("generator label may not end in '-': " + g);
        if (std::find(p.generators.begin(), p.generators.end(), g) != p.generators.end()) {
          throw ParseError("duplicate generator " + g);
        }
        p.generators.push_back(g);
      }
    } else if (part.rfind("rel:", 0) == 0) {
      rels.push_back(part.substr(4));
    } else if (!part.empty()) {
      throw ParseError("expected 'gens:' or 'rel:' in '" + part + "'");
    }
    start = end + 1;
  }
  if (!have_gens) throw ParseError("presentation has no gens section");
  for (const auto& r : rels) {
    try {
      FreeWord w = p.parse_word(r);
      if (!w.empty()) p.relators.push_back(std::move(w));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return p;
}

Presentation presentation_from_pairs(std::vector<std::string> gens,
                                     const std::vector<std::pair<FreeWord, FreeWord>>& pairs) {
  Presentation p;
  p.generators = std::move(gens);
  for (const auto& [u, v] : pairs) {
    for (const auto* w : {&u, &v}) {
      for (const Letter& l : w->letters()) {
        if (l.gen >= p.generators.size()) throw InvalidArgument("word uses unknown generator index");
      }
    }
    FreeWord r = u * v.inverse();
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

IntMatrix relation_matrix(const Presentation& p) {
  const auto n = p.generators.size();
  IntMatrix m(static_cast<Eigen::Index>(p.relators.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto sums = p.relators[i].exponent_sums(n);
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sums[j];
  }
  return m;
}

std::string AbelianInvariants::to_string() const {
  std::string out = "(" + std::to_string(free_rank) + ", [";
  for (std::size_t k = 0; k < torsion.size(); ++k) out += (k ? ", " : "") + torsion[k].get_str();
  return out + "])";
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  AbelianInvariants out;
  const auto n = static_cast<long>(p.generators.size());
  if (p.relators.empty() || n == 0) {
    out.free_rank = n;
    return out;
  }
  const auto snf = smith_normal_form(relation_matrix(p));
  out.free_rank = n - static_cast<long>(snf.rank);
  for (const Integer& d : snf.invariant_factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

namespace {

void normalize_relators(std::vector<FreeWord>& rels) {
  std::set<FreeWord> seen;
  std::vector<FreeWord> out;
  for (const FreeWord& r : rels) {
    FreeWord c = r.cyclic_canonical();
    if (c.empty() || !seen.insert(c).second) continue;
    out.push_back(std::move(c));
  }
  rels = std::move(out);
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
  if (budget < 0) throw InvalidArgument("budget must be non-negative");
  Presentation q = p;
  normalize_relators(q.relators);
  while (budget-- > 0) {
    // A relator x^e or x^e y^f (x != y) defines x in terms of the rest.
    std::optional<std::pair<std::size_t, FreeWord>> elim;
    for (const FreeWord& r : q.relators) {
      const auto& ls = r.letters();
      if (ls.size() == 1) {
        elim = std::make_pair(ls[0].gen, FreeWord());
      } else if (ls.size() == 2 && ls[0].gen != ls[1].gen) {
        // x^e y^f = 1  =>  x = y^(-f e)
        elim = std::make_pair(ls[0].gen, FreeWord::generator(ls[1].gen, -ls[1].exp * ls[0].exp));
      }
      if (elim) break;
    }
    if (!elim) break;
    const std::size_t x = elim->first;
    const std::size_t n = q.generators.size();
    std::vector<FreeWord> images(n);
    for (std::size_t g = 0; g < n; ++g) {
      if (g != x) images[g] = FreeWord::generator(g < x ? g : g - 1);
    }
    FreeWord def = elim->second.substitute(images);
    images[x] = def;
    std::vector<FreeWord> rels;
    for (const FreeWord& r : q.relators) rels.push_back(r.substitute(images));
    q.generators.erase(q.generators.begin() + static_cast<long>(x));
    q.relators = std::move(rels);
    normalize_relators(q.relators);
  }
  return q;
}

bool check_homomorphism(const Presentation& p, const std::vector<FreeWord>& images, TargetGroup target) {
  if (images.size() != p.generators.size()) throw InvalidArgument("image assignment must cover every generator");
  std::size_t target_gens = 0;
  for (const auto& img : images)
    for (const Letter& l : img.letters()) target_gens = std::max(target_gens, l.gen + 1);
  if (target == TargetGroup::Integers && target_gens > 1) {
    throw InvalidArgument("integer target has a single generator");
  }
  for (const FreeWord& r : p.relators) {
    const FreeWord w = r.substitute(images);
    switch (target) {
      case TargetGroup::Free:
        if (!w.empty()) return false;
        break;
      case TargetGroup::FreeAbelian:
      case TargetGroup::Integers:
        for (long s : w.exponent_sums(target_gens)) {
          if (s != 0) return false;
        }
        break;
    }
  }
  return true;
}

Presentation universal_presentation_from_table(const OperationTable& table) {
  Presentation p;
  p.generators = table.labels;
  const std::size_t n = table.labels.size();
  for (const auto& [i, j, k] : table.entries) {
    if (i >= n || j >= n || k >= n) throw InvalidArgument("table entry refers to a missing element");
    FreeWord r({Letter{i, 1}, Letter{j, 1}, Letter{k, -1}});
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

Certificates certify(const Presentation& p) {
  Certificates c;
  const std::size_t n = p.generators.size();
  if (p.relators.empty()) {
    c.free = true;
    c.free_rank = static_cast<long>(n);
  }
  std::set<FreeWord> present;
  for (const FreeWord& r : p.relators) {
    for (long s : r.exponent_sums(n)) {
      if (s != 0) return c;
    }
    present.insert(r.cyclic_canonical());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FreeWord comm({Letter{i, 1}, Letter{j, 1}, Letter{i, -1}, Letter{j, -1}});
      if (!present.count(comm.cyclic_canonical())) return c;
    }
  }
  c.free_abelian = true;
  c.abelian_rank = static_cast<long>(n);
  return c;
}

}  // namespace tilegroup
