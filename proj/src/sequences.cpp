#include "tilegroup/sequences.hpp"

#include <algorithm>

namespace tilegroup {

namespace {

constexpr std::size_t kMaxExpansion = std::size_t{1} << 24;
constexpr int kMaxSeedPeriod = 12;

void validate_rule(const SubstitutionRule& rule) {
  if (rule.empty()) throw InvalidArgument("empty substitution rule");
  for (const auto& [letter, image] : rule) {
    if (image.empty()) throw InvalidArgument(std::string("erasing substitution: ") + letter + " -> empty word");
    for (char c : image) {
      if (!rule.count(c)) throw InvalidArgument(std::string("substitution image uses undefined letter ") + c);
    }
  }
}

long floor_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

bool ends_with(const std::string& s, char c) { return !s.empty() && s.back() == c; }
bool starts_with(const std::string& s, char c) { return !s.empty() && s.front() == c; }

// Smallest k >= 1 with sigma^k(left) ending in left and sigma^k(right)
// starting with right; 0 when none exists within the search bound.
int seed_period(const SubstitutionRule& rule, char left, char right) {
  std::string l(1, left);
  std::string r(1, right);
  for (int k = 1; k <= kMaxSeedPeriod; ++k) {
    l = apply_substitution(rule, l);
    r = apply_substitution(rule, r);
    if (ends_with(l, left) && starts_with(r, right)) return k;
    // Only the boundary letters matter from here on.
    if (l.size() > 64) l = l.substr(l.size() - 1);
    if (r.size() > 64) r = r.substr(0, 1);
  }
  return 0;
}

}  // namespace

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvalidArgument("alphabet must be non-empty");
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("alphabet letters must be distinct");
  }
}

Alphabet SequenceSpec::alphabet() const {
  std::string letters;
  auto add = [&letters](const std::string& w) {
    for (char c : w)
      if (letters.find(c) == std::string::npos) letters.push_back(c);
  };
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Substitution>) {
          for (const auto& [letter, image] : k.rule) add(std::string(1, letter));
        } else if constexpr (std::is_same_v<K, Periodic>) {
          add(k.word);
        } else {
          add(k.left);
          add(k.right);
        }
      },
      kind);
  std::sort(letters.begin(), letters.end());
  return Alphabet(letters);
}

SequenceSpec make_substitution(SubstitutionRule rule, char seed_right, char seed_left) {
  validate_rule(rule);
  if (!rule.count(seed_right)) throw InvalidArgument(std::string("seed letter not in rule: ") + seed_right);
  if (seed_left != 0) {
    if (!rule.count(seed_left)) throw InvalidArgument(std::string("seed letter not in rule: ") + seed_left);
    if (seed_period(rule, seed_left, seed_right) == 0) {
      throw InvalidArgument("seed pair does not determine a two-sided fixed point");
    }
    if (!is_legal_word(rule, std::string{seed_left, seed_right})) {
      throw InvalidArgument("seed pair is not a legal factor");
    }
    return SequenceSpec{Substitution{std::move(rule), seed_left, seed_right}};
  }
  for (const auto& [letter, image] : rule) {
    if (seed_period(rule, letter, seed_right) != 0 && is_legal_word(rule, std::string{letter, seed_right})) {
      return SequenceSpec{Substitution{rule, letter, seed_right}};
    }
  }
  throw InvalidArgument(std::string("no legal seed pair ending in ") + seed_right);
}

char IndexedWord::at(long index) const {
  if (index < start_index || index >= end_index()) {
    throw OutOfTruncation("index " + std::to_string(index) + " outside window [" + std::to_string(start_index) +
                          ", " + std::to_string(end_index()) + ")");
  }
  return letters[static_cast<std::size_t>(index - start_index)];
}

std::string apply_substitution(const SubstitutionRule& rule, const std::string& word) {
  std::string out;
  for (char c : word) {
    auto it = rule.find(c);
    if (it == rule.end()) throw InvalidArgument(std::string("letter without image: ") + c);
    out += it->second;
  }
  return out;
}

std::string expand_substitution(const SubstitutionRule& rule, char seed, int iterations) {
  validate_rule(rule);
  if (iterations < 0) throw InvalidArgument("iterations must be >= 0");
  std::string w(1, seed);
  for (int i = 0; i < iterations; ++i) {
    w = apply_substitution(rule, w);
    if (w.size() > kMaxExpansion) throw InvalidArgument("substitution expansion too long");
  }
  return w;
}

bool is_legal_word(const SubstitutionRule& rule, const std::string& word) {
  const std::size_t target = std::max<std::size_t>(word.size() * 64, 4096);
  for (const auto& [letter, image] : rule) {
    std::string w(1, letter);
    for (int k = 0; k < 64; ++k) {
      if (w.find(word) != std::string::npos) return true;
      if (w.size() >= target) break;
      std::string next = apply_substitution(rule, w);
      if (next.size() == w.size() && next == w) break;
      w = std::move(next);
    }
  }
  return false;
}

IndexedWord two_sided_window(const SequenceSpec& spec, long half_width) {
  if (half_width < 1) throw InvalidArgument("half_width must be >= 1");
  IndexedWord out;
  out.start_index = -half_width;
  const auto n = static_cast<std::size_t>(2 * half_width + 1);
  out.letters.reserve(n);

  if (const auto* p = std::get_if<Periodic>(&spec.kind)) {
    if (p->word.empty()) throw InvalidArgument("periodic word must be non-empty");
    const long len = static_cast<long>(p->word.size());
    for (long i = -half_width; i <= half_width; ++i) out.letters.push_back(p->word[floor_mod(i, len)]);
    return out;
  }
  if (const auto* s = std::get_if<Spliced>(&spec.kind)) {
    if (s->left.empty() || s->right.empty()) throw InvalidArgument("spliced words must be non-empty");
    const long nl = static_cast<long>(s->left.size());
    const long nr = static_cast<long>(s->right.size());
    for (long i = -half_width; i <= half_width; ++i) {
      out.letters.push_back(i <= 0 ? s->left[floor_mod(i - 1, nl)] : s->right[floor_mod(i - 1, nr)]);
    }
    return out;
  }

  const auto& sub = std::get<Substitution>(spec.kind);
  validate_rule(sub.rule);
  const int period = seed_period(sub.rule, sub.seed_left, sub.seed_right);
  if (period == 0) throw InvalidArgument("seed pair does not determine a two-sided fixed point");
  std::string left(1, sub.seed_left);
  std::string right(1, sub.seed_right);
  const auto need_left = static_cast<std::size_t>(half_width + 1);
  const auto need_right = static_cast<std::size_t>(half_width);
  while (left.size() < need_left || right.size() < need_right) {
    const std::size_t before = left.size() + right.size();
    for (int k = 0; k < period; ++k) {
      left = apply_substitution(sub.rule, left);
      right = apply_substitution(sub.rule, right);
    }
    if (left.size() + right.size() == before) throw InvalidArgument("substitution does not grow; no two-sided limit");
    if (left.size() + right.size() > kMaxExpansion) throw InvalidArgument("substitution expansion too long");
  }
  out.letters = left.substr(left.size() - need_left) + right.substr(0, need_right);
  return out;
}

FactorLanguage::FactorLanguage(std::set<std::string> w) : words(std::move(w)) {
  for (const auto& x : words) max_len = std::max(max_len, static_cast<int>(x.size()));
}

std::vector<std::string> FactorLanguage::of_length(std::size_t n) const {
  std::vector<std::string> out;
  for (const auto& w : words)
    if (w.size() == n) out.push_back(w);
  return out;
}

bool FactorLanguage::is_factorial() const {
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        if (!words.count(w.substr(i, len))) return false;
      }
    }
  }
  return true;
}

std::string FactorLanguage::alphabet() const {
  std::string out;
  for (const auto& w : words)
    for (char c : w)
      if (out.find(c) == std::string::npos) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

FactorLanguage factor_language(const IndexedWord& word, int max_len) {
  if (max_len < 1) throw InvalidArgument("max_len must be >= 1");
  FactorLanguage lang;
  lang.max_len = max_len;
  lang.half_width = -word.start_index;
  const std::string& s = word.letters;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t len = 1; len <= static_cast<std::size_t>(max_len) && i + len <= s.size(); ++len) {
      lang.words.insert(s.substr(i, len));
    }
  }
  return lang;
}

}  // namespace tilegroup
