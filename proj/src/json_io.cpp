#include "tilegroup/json_io.hpp"

#include <fstream>

namespace tilegroup {

Json to_json(const QR& x) { return x.to_string(); }

QR qr_from_json(const Json& j) {
  if (j.is_string()) return QR::parse(j.get<std::string>());
  if (j.is_number_integer()) return QR(j.get<long>());
  throw ParseError("exact number must be a string or an integer, got " + j.dump());
}

Json to_json(const WindowSet& w) {
  Json out = Json::array();
  for (const auto& c : w.components()) out.push_back({to_json(c.lo), to_json(c.hi)});
  return out;
}

WindowSet window_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("window must be a list of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw ParseError("window component must be [lo, hi]");
    parts.push_back(Interval{qr_from_json(c[0]), qr_from_json(c[1])});
  }
  return WindowSet(std::move(parts));
}

Json to_json(const PointSet1D& ps) {
  Json pts = Json::array();
  for (const QR& p : ps.points()) pts.push_back(to_json(p));
  Json lengths = Json::object();
  for (const auto& [c, len] : ps.lengths()) lengths[std::string(1, c)] = to_json(len);
  return Json{{"anchor", to_json(ps.anchor())},
              {"first_index", ps.first_index()},
              {"points", std::move(pts)},
              {"gap_word", ps.gap_word().letters},
              {"gap_word_start", ps.gap_word().start_index},
              {"lengths", std::move(lengths)}};
}

Json to_json(const PatternClass& c) {
  Json offs = Json::array();
  for (const QR& o : c.offsets) offs.push_back(to_json(o));
  return Json{{"offsets", std::move(offs)}, {"out", c.out_index}, {"in", c.in_index}};
}

Json to_json(const GxhElement& e) { return Json{{"a", "0"}, {"window", to_json(e.window)}, {"b", to_json(e.beta)}}; }

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(p.format_word(r));
  return Json{{"generators", p.generators}, {"relators", std::move(rels)}, {"text", p.to_string()}};
}

Json to_json(const AbelianInvariants& a) {
  Json tors = Json::array();
  for (const auto& t : a.torsion) tors.push_back(t.get_str());
  return Json{{"free_rank", a.free_rank}, {"torsion", std::move(tors)}};
}

Json to_json(const HarvestReport& h) {
  Json prov = Json::array();
  for (const auto& r : h.provenance) prov.push_back({r.u, r.v, to_json(r.length)});
  return Json{{"presentation", to_json(h.presentation)},
              {"half_width", h.half_width},
              {"max_len", h.max_len},
              {"provenance", std::move(prov)}};
}

Json to_json(const CaseReport& r) {
  Json basis = Json::array();
  for (const QR& b : r.hd.basis) basis.push_back(to_json(b));
  return Json{{"case", r.name},
              {"G_D", r.gd_summary},
              {"H_D", {{"rank", r.hd.rank}, {"basis", std::move(basis)}}},
              {"reference_H_D_rank", r.reference_hd_rank},
              {"H_D_reference_discrepancy", r.hd_discrepancy},
              {"harvest_relations", r.harvest.provenance.size()},
              {"harvest_invariants", to_json(r.harvest_invariants)},
              {"letter_counts_preserved", r.letter_counts_preserved},
              {"certificates",
               {{"free", r.certificates.free},
                {"free_rank", r.certificates.free_rank},
                {"free_abelian", r.certificates.free_abelian},
                {"abelian_rank", r.certificates.abelian_rank}}},
              {"simplified_presentation", to_json(r.simplified)},
              {"oplus_table_invariants", to_json(r.oplus_invariants)},
              {"truncation", {{"half_width", r.harvest.half_width}, {"max_len", r.harvest.max_len}}}};
}

Json to_json(const FactorLanguage& lang) {
  return Json{{"half_width", lang.half_width}, {"max_len", lang.max_len}, {"words", lang.words}};
}

Json to_json(const CutProjectScheme& s) {
  return Json{{"v1", {{"phys", to_json(s.v1().phys)}, {"int", to_json(s.v1().internal)}}},
              {"v2", {{"phys", to_json(s.v2().phys)}, {"int", to_json(s.v2().internal)}}},
              {"window", to_json(s.window())}};
}

CutProjectScheme scheme_from_json(const Json& j) {
  try {
    auto vec = [&](const char* key) {
      const Json& v = j.at(key);
      return LatticeVector{qr_from_json(v.at("phys")), qr_from_json(v.at("int"))};
    };
    return CutProjectScheme(vec("v1"), vec("v2"), window_from_json(j.at("window")));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad scheme: ") + e.what());
  }
}

Json to_json(const SequenceSpec& s) {
  return std::visit(
      [](const auto& k) -> Json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Substitution>) {
          Json rule = Json::object();
          for (const auto& [c, img] : k.rule) rule[std::string(1, c)] = img;
          return Json{{"kind", "substitution"},
                      {"rule", std::move(rule)},
                      {"seed", std::string(1, k.seed_right)},
                      {"seed_left", std::string(1, k.seed_left)}};
        } else if constexpr (std::is_same_v<K, Periodic>) {
          return Json{{"kind", "periodic"}, {"word", k.word}};
        } else {
          return Json{{"kind", "spliced"}, {"left", k.left}, {"right", k.right}};
        }
      },
      s.kind);
}

namespace {

char single_letter(const Json& j, const char* what) {
  const auto s = j.get<std::string>();
  if (s.size() != 1) throw ParseError(std::string(what) + " must be a single letter");
  return s[0];
}

}  // namespace

SequenceSpec sequence_from_json(const Json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "substitution") {
      SubstitutionRule rule;
      for (const auto& [k, v] : j.at("rule").items()) {
        if (k.size() != 1) throw ParseError("rule keys must be single letters");
        rule[k[0]] = v.get<std::string>();
      }
      const char seed = single_letter(j.at("seed"), "seed");
      const char left = j.contains("seed_left") ? single_letter(j.at("seed_left"), "seed_left") : 0;
      return make_substitution(std::move(rule), seed, left);
    }
    if (kind == "periodic") return SequenceSpec{Periodic{j.at("word").get<std::string>()}};
    if (kind == "spliced") {
      return SequenceSpec{Spliced{j.at("left").get<std::string>(), j.at("right").get<std::string>()}};
    }
    throw ParseError("unknown sequence kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad sequence spec: ") + e.what());
  }
}

LengthFunction lengths_from_json(const Json& j) {
  LengthFunction out;
  for (const auto& [k, v] : j.items()) {
    if (k.size() != 1) throw ParseError("length keys must be single letters");
    out[k[0]] = qr_from_json(v);
  }
  validate_lengths(out);
  return out;
}

LengthFunction parse_lengths(const std::string& text) {
  LengthFunction out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq != 1) throw ParseError("length entry must look like a=2, got '" + item + "'");
    out[item[0]] = QR::parse(item.substr(2));
    start = end + 1;
  }
  validate_lengths(out);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace tilegroup
