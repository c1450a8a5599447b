#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "tilegroup/json_io.hpp"
#include "tilegroup/suites.hpp"

using namespace tilegroup;

namespace {

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << '\n';
}

struct Source {
  std::string spec_file;
  std::string periodic;
  std::string lengths;
};

// A spec file holds either a cut-and-project scheme ("v1") or a sequence ("kind").
std::optional<CutProjectScheme> scheme_source(const Source& s) {
  if (s.spec_file.empty()) return std::nullopt;
  const Json j = read_json_file(s.spec_file);
  if (!j.contains("v1")) return std::nullopt;
  return scheme_from_json(j);
}

SequenceSpec sequence_source(const Source& s) {
  if (!s.periodic.empty()) {
    if (!s.spec_file.empty()) throw InvalidArgument("give either --spec or --periodic, not both");
    return SequenceSpec{Periodic{s.periodic}};
  }
  if (s.spec_file.empty()) throw InvalidArgument("no source: give --spec or --periodic");
  return sequence_from_json(read_json_file(s.spec_file));
}

LengthFunction lengths_for(const Source& s) {
  if (!s.lengths.empty()) return parse_lengths(s.lengths);
  if (!s.spec_file.empty()) {
    const Json j = read_json_file(s.spec_file);
    if (j.contains("lengths")) return lengths_from_json(j["lengths"]);
  }
  throw InvalidArgument("tile lengths needed: give --lengths or a \"lengths\" entry in the spec");
}

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--spec", s.spec_file, "JSON scheme or sequence spec")->check(CLI::ExistingFile);
  cmd->add_option("--periodic", s.periodic, "periodic word, e.g. ab");
  cmd->add_option("--lengths", s.lengths, "tile lengths, e.g. a=2,b=1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse semigroups and universal groups of 1-D point sets and tilings"};
  app.require_subcommand(1);
  std::string out;
  long half_width = 40;
  long radius = 50;
  int max_len = 12;

  Source gen_src;
  auto* gen = app.add_subcommand("generate", "dump a point set, model set or factor language");
  add_source(gen, gen_src);
  gen->add_option("--half-width", half_width, "letters on each side of the origin")->check(CLI::PositiveNumber);
  gen->add_option("--radius", radius, "model-set radius")->check(CLI::PositiveNumber);
  gen->add_option("--max-len", max_len, "also dump the factor language up to this length")->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "output file (stdout when absent)");

  Source pres_src;
  std::string case_name;
  long bound = 6;
  auto* pres = app.add_subcommand("present", "universal-group presentation report");
  pres->add_option("--case", case_name, "fib, periodic-ab-2-1, splice-irrational, splice-rational-3-2");
  add_source(pres, pres_src);
  pres->add_option("--half-width", half_width)->check(CLI::PositiveNumber);
  pres->add_option("--max-len", max_len)->check(CLI::Range(2, 64));
  pres->add_option("--bound", bound, "magnitude bound of the difference table")->check(CLI::PositiveNumber);
  pres->add_option("--out", out);

  SuiteOptions opts;
  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite)->check(CLI::IsMember([] {
    auto names = suite_names();
    names.push_back("all");
    return names;
  }()));
  ver->add_option("--pairs", opts.pairs)->check(CLI::PositiveNumber);
  ver->add_option("--seed", opts.seed);
  ver->add_option("--radius", opts.radius)->check(CLI::PositiveNumber);
  ver->add_option("--coeff-bound", opts.coeff_bound)->check(CLI::PositiveNumber);
  ver->add_option("--box-bound", opts.box_bound)->check(CLI::PositiveNumber);
  ver->add_option("--half-width", opts.half_width)->check(CLI::PositiveNumber);
  ver->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Json j;
      if (auto scheme = scheme_source(gen_src)) {
        j["scheme"] = to_json(*scheme);
        j["radius"] = radius;
        j["pointset"] = to_json(generate_modelset(*scheme, QR(radius)));
      } else {
        const SequenceSpec spec = sequence_source(gen_src);
        const IndexedWord w = two_sided_window(spec, half_width);
        j["sequence"] = to_json(spec);
        j["half_width"] = half_width;
        j["window"] = {{"start_index", w.start_index}, {"letters", w.letters}};
        j["pointset"] = to_json(build_pointset(w, lengths_for(gen_src), QR(0)));
        j["language"] = to_json(factor_language(w, max_len));
      }
      emit(j, out);
      return 0;
    }
    if (*pres) {
      CaseSetup setup;
      if (!case_name.empty()) {
        setup = case_setup(parse_case(case_name));
      } else {
        setup.name = "custom";
        setup.spec = sequence_source(pres_src);
        setup.lengths = lengths_for(pres_src);
        setup.reference_hd_rank = -1;
      }
      if (pres->count("--half-width")) setup.half_width = half_width;
      if (pres->count("--max-len")) setup.max_len = max_len;
      const CaseReport r = run_reference_case(setup, QR(bound));
      Json j = to_json(r);
      const auto lang = factor_language(two_sided_window(setup.spec, setup.half_width), 2);
      j["tiling_universal_group_rank"] = universal_group_SL(lang).rank;
      emit(j, out);
      return 0;
    }
    if (*ver) {
      const auto results = run_suite(suite, opts);
      Json arr = Json::array();
      bool all = true;
      for (const auto& c : results) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        arr.push_back({{"suite", c.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all = all && c.pass;
      }
      emit(Json{{"seed", opts.seed}, {"all_pass", all}, {"checks", arr}}, out);
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
