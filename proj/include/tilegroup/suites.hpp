#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tilegroup/modelset.hpp"

namespace tilegroup {

struct SuiteOptions {
  int pairs = 100;
  std::uint32_t seed = 0;
  long radius = 50;
  long pattern_radius = 30;
  long box_bound = 60;
  long coeff_bound = 5;
  long half_width = 40;
  int max_len = 12;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Suites: empire, semigroup-axioms, modelset-vs-substitution, reference-cases,
/// macbeath, chi, all.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<std::string> suite_names();

/// A random pattern pair over the model set: about half are empire-equal by
/// construction (Q = P plus points P forces), the rest are unrelated.
std::pair<std::vector<QR>, std::vector<QR>> sample_pattern_pair(const CutProjectScheme& scheme,
                                                                const std::vector<QR>& points, std::mt19937& rng);

}  // namespace tilegroup
