#include "tilegroup/suites.hpp"

#include <algorithm>
#include <set>

#include "tilegroup/universal.hpp"

namespace tilegroup {

namespace {

CheckResult check(std::string suite, std::string name, bool pass, std::string detail = {}) {
  return CheckResult{std::move(suite), std::move(name), pass, std::move(detail)};
}

std::vector<QR> within(const std::vector<QR>& pts, const QR& r) {
  std::vector<QR> out;
  for (const QR& p : pts)
    if (!(r < abs(p))) out.push_back(p);
  return out;
}

std::vector<QR> random_local_pattern(const std::vector<QR>& points, std::size_t center, std::mt19937& rng) {
  const std::size_t lo = center >= 4 ? center - 4 : 0;
  const std::size_t hi = std::min(points.size() - 1, center + 4);
  std::vector<QR> nbhd(points.begin() + static_cast<long>(lo), points.begin() + static_cast<long>(hi) + 1);
  std::shuffle(nbhd.begin(), nbhd.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(5, nbhd.size()));
  nbhd.resize(size(rng));
  std::sort(nbhd.begin(), nbhd.end());
  return nbhd;
}

std::vector<CheckResult> empire_suite(const SuiteOptions& o) {
  const auto scheme = fibonacci_scheme();
  const auto points = modelset_points(scheme, QR(o.pattern_radius));
  std::mt19937 rng(o.seed);
  long agree = 0, equal_pairs = 0, unequal_pairs = 0, separated = 0, window_ok = 0;
  for (int t = 0; t < o.pairs; ++t) {
    const auto [p, q] = sample_pattern_pair(scheme, points, rng);
    const bool eq = empire_equal(scheme, p, q);
    const auto brute = empire_brute(scheme, p, q, o.box_bound);
    if (eq == brute.equal) ++agree;
    if (eq) {
      ++equal_pairs;
    } else {
      ++unequal_pairs;
      if (brute.separating) {
        ++separated;
        const auto [n, m] = *brute.separating;
        const QR g = scheme.lattice_point(n, m).internal;
        // The separating translation lies in exactly one of the two pattern windows.
        if (pattern_window(scheme, p).contains(g) != pattern_window(scheme, q).contains(g)) ++window_ok;
      }
    }
  }
  const std::string s = "empire";
  return {check(s, "window test agrees with enumeration", agree == o.pairs,
                std::to_string(agree) + "/" + std::to_string(o.pairs)),
          check(s, "separating translation for every unequal pair", separated == unequal_pairs,
                std::to_string(separated) + "/" + std::to_string(unequal_pairs)),
          check(s, "separating translation lies in exactly one window", window_ok == separated,
                std::to_string(window_ok) + "/" + std::to_string(separated)),
          check(s, "both verdicts occur", equal_pairs > 0 && unequal_pairs > 0,
                std::to_string(equal_pairs) + " equal, " + std::to_string(unequal_pairs) + " unequal")};
}

std::vector<CheckResult> modelset_vs_substitution_suite(const SuiteOptions& o) {
  const auto scheme = fibonacci_scheme();
  const QR r(o.radius);
  const auto ms = modelset_points(scheme, r);
  const auto setup = case_setup(ReferenceCase::Fibonacci);
  // Enough letters on each side to cover [-r, r]: every gap is at least 1.
  const auto sub = build_pointset(two_sided_window(setup.spec, o.radius + 2), setup.lengths, QR(0));
  const auto ref = within(sub.points(), r);
  return {check("modelset-vs-substitution", "point sets agree exactly", ms == ref,
                std::to_string(ms.size()) + " model-set points, " + std::to_string(ref.size()) + " substitution points")};
}

std::vector<CheckResult> reference_case_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const std::string s = "reference-cases";
  for (auto c : {ReferenceCase::Fibonacci, ReferenceCase::PeriodicAB21, ReferenceCase::SpliceIrrational,
                 ReferenceCase::SpliceRational32}) {
    auto setup = case_setup(c);
    setup.half_width = o.half_width;
    const auto r = run_reference_case(setup, QR(6));
    switch (c) {
      case ReferenceCase::Fibonacci:
      case ReferenceCase::PeriodicAB21:
        out.push_back(check(s, r.name + ": Z^2 certificate", r.certificates.free_abelian && r.certificates.abelian_rank == 2,
                            r.gd_summary));
        out.push_back(check(s, r.name + ": letter counts preserved", r.letter_counts_preserved));
        out.push_back(check(s, r.name + ": H_D rank", r.hd.rank == (c == ReferenceCase::Fibonacci ? 2 : 1),
                            std::to_string(r.hd.rank)));
        break;
      case ReferenceCase::SpliceIrrational:
        out.push_back(check(s, r.name + ": free of rank 2", r.certificates.free && r.certificates.free_rank == 2,
                            r.gd_summary));
        out.push_back(check(s, r.name + ": H_D rank 2, flagged against the reference rank", r.hd.rank == 2 && r.hd_discrepancy));
        break;
      case ReferenceCase::SpliceRational32:
        out.push_back(check(s, r.name + ": abelianization Z", r.harvest_invariants == AbelianInvariants{1, {}},
                            r.harvest_invariants.to_string()));
        break;
    }
    if (c != ReferenceCase::SpliceIrrational) {
      out.push_back(check(s, r.name + ": oplus table matches harvest", r.oplus_invariants == r.harvest_invariants,
                          r.oplus_invariants.to_string() + " vs " + r.harvest_invariants.to_string()));
    }
  }
  return out;
}

std::vector<CheckResult> macbeath_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const DenseGroup g(QR(1), QR::golden());
  const WindowSet v = WindowSet::interval(QR(0), QR(1));
  std::set<std::array<Coefficients, 3>> prev;
  for (long b = 3; b <= std::max(3L, o.coeff_bound); ++b) {
    const auto md = macbeath_data(g, v, b);
    const auto inv = abelian_invariants(universal_presentation_from_table(md.table()));
    out.push_back(check("macbeath", "bound " + std::to_string(b) + ": abelian invariants (2, [])",
                        inv == AbelianInvariants{2, {}}, inv.to_string()));
    std::set<std::array<Coefficients, 3>> rels;
    for (const auto& [i, j, k] : md.relations) rels.insert({md.elements[i], md.elements[j], md.elements[k]});
    out.push_back(check("macbeath", "bound " + std::to_string(b) + ": relations contain the previous bound's",
                        std::includes(rels.begin(), rels.end(), prev.begin(), prev.end())));
    prev = std::move(rels);
  }
  return out;
}

std::vector<CheckResult> chi_suite(const SuiteOptions& o) {
  const std::string s = "chi";
  const DenseGroup g(QR(1), QR::golden());
  const QR r(1), sv(9);
  const WindowSet x({Interval{QR(0), r}, Interval{sv, sv + r}});
  const auto md = macbeath_data(g, x, o.coeff_bound, OverlapRule::GroupPoint);
  std::vector<long> chi;
  bool well_defined = true;
  for (const QR& e : md.values) {
    try {
      chi.push_back(chi_obstruction(r, sv, e).get_si());
    } catch (const InvalidArgument&) {
      well_defined = false;
      chi.push_back(0);
    }
  }
  long additive_fail = 0;
  for (const auto& [i, j, k] : md.relations) {
    if (chi[i] + chi[j] != chi[k]) ++additive_fail;
  }
  const Presentation p = universal_presentation_from_table(md.table());
  std::vector<FreeWord> images;
  for (long c : chi) images.push_back(c == 0 ? FreeWord() : FreeWord::generator(0, c > 0 ? 1 : -1));
  const bool hom = check_homomorphism(p, images, TargetGroup::Integers);
  const bool s_in_e = overlaps(x.intersect(x.translate(-sv)), OverlapRule::GroupPoint, g);
  const bool chi_s = chi_obstruction(r, sv, sv) == 1;
  const auto mv = macbeath_data(g, WindowSet::interval(QR(0), r), o.coeff_bound, OverlapRule::GroupPoint);
  long nonzero_on_v = 0;
  for (const QR& e : mv.values) {
    if (chi_obstruction(r, sv, e) != 0) ++nonzero_on_v;
  }
  return {check(s, "chi well defined on E(X')", well_defined, std::to_string(md.values.size()) + " elements"),
          check(s, "chi additive on F'(X')", additive_fail == 0, std::to_string(md.relations.size()) + " pairs"),
          check(s, "chi kills every relator", hom),
          check(s, "s in E(X') and chi(s) = 1", s_in_e && chi_s),
          check(s, "chi vanishes on E(V')", nonzero_on_v == 0, std::to_string(mv.values.size()) + " elements")};
}

std::vector<CheckResult> axioms_suite(const SuiteOptions& o) {
  const std::string s = "semigroup-axioms";
  std::vector<CheckResult> out;
  std::mt19937 rng(o.seed);
  const auto setup = case_setup(ReferenceCase::Fibonacci);
  const auto ps = build_pointset(two_sided_window(setup.spec, o.half_width), setup.lengths, QR(0));

  // (D - D, (+)) and M(G, V) as group-like sets.
  {
    const auto dt = maxset_table(ps, QR(6));
    std::vector<std::size_t> inv(dt.values.size());
    std::size_t id = 0;
    for (std::size_t i = 0; i < dt.values.size(); ++i) {
      if (dt.values[i].is_zero()) id = i;
      inv[i] = static_cast<std::size_t>(std::find(dt.values.begin(), dt.values.end(), -dt.values[i]) -
                                        dt.values.begin());
    }
    const auto gl = check_group_like(dt.table, id, inv);
    out.push_back(check(s, "GL1-GL3 for (D - D, (+))", gl.total() == 0, std::to_string(dt.table.entries.size()) + " products"));
  }
  {
    const auto md = macbeath_data(DenseGroup(QR(1), QR::golden()), WindowSet::interval(QR(0), QR(1)), o.coeff_bound);
    std::vector<std::size_t> inv(md.elements.size());
    for (std::size_t i = 0; i < md.elements.size(); ++i) {
      inv[i] = *md.index_of({-md.elements[i].first, -md.elements[i].second});
    }
    const auto gl = check_group_like(md.table(), *md.index_of({0, 0}), inv);
    out.push_back(check(s, "GL1-GL3 for M(G, V)", gl.total() == 0, std::to_string(md.relations.size()) + " products"));
  }

  // Gamma(D) samples.
  {
    std::vector<PatternClass> sample;
    std::uniform_int_distribution<long> start(ps.first_index() + 5, ps.last_index() - 10);
    std::uniform_int_distribution<int> width(0, 4);
    for (int k = 0; k < 40; ++k) {
      const long a = start(rng);
      std::vector<long> idx;
      for (long i = a; i <= a + width(rng); ++i) idx.push_back(i);
      std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
      sample.push_back(make_element(ps, idx, idx[pick(rng)], idx[pick(rng)]));
    }
    long law = 0, comm = 0, purity = 0, morph = 0, below_max = 0;
    for (const auto& x : sample) {
      const auto xx = multiply(x, inverse(x), ps);
      const auto xxx = xx.value ? multiply(*xx.value, x, ps) : ProductResult{};
      if (!xxx.value || !(*xxx.value == x)) ++law;
      if ((phi(x).is_zero()) != is_idempotent(x)) ++purity;
      if (!natural_leq(x, max_above(x))) ++below_max;
      for (const auto& y : sample) {
        const auto xy = multiply(x, y, ps);
        if (xy.value && !(phi(*xy.value) == phi(x) + phi(y))) ++morph;
        if (is_idempotent(x) && is_idempotent(y)) {
          const auto yx = multiply(y, x, ps);
          if (xy.value.has_value() != yx.value.has_value() || (xy.value && !(*xy.value == *yx.value))) ++comm;
        }
      }
    }
    out.push_back(check(s, "Gamma(D): x x^-1 x = x", law == 0));
    out.push_back(check(s, "Gamma(D): idempotents commute", comm == 0));
    out.push_back(check(s, "Gamma(D): phi idempotent pure", purity == 0));
    out.push_back(check(s, "Gamma(D): phi is a morphism", morph == 0));
    out.push_back(check(s, "Gamma(D): x <= max_above(x)", below_max == 0));
  }

  // S(L) for the Fibonacci language.
  {
    const auto lang = factor_language(two_sided_window(setup.spec, o.half_width), 10);
    const auto all = enumerate_SL(lang, 4);
    const auto cl = enumerate_CL_and_max(lang, 10);
    long law = 0, comm = 0, max_count = 0;
    for (const auto& p : all) {
      const auto pp = accent_multiply(p, accent_inverse(p), lang);
      const auto ppp = pp ? accent_multiply(*pp, p, lang) : std::nullopt;
      if (!ppp || !(*ppp == p)) ++law;
      long above = 0;
      for (const auto& m : cl.M) above += accent_leq(p, m) ? 1 : 0;
      if (above != 1) ++max_count;
      if (p.out_pos != p.in_pos) continue;
      for (const auto& q : all) {
        if (q.out_pos != q.in_pos) continue;
        const auto a = accent_multiply(p, q, lang);
        const auto b = accent_multiply(q, p, lang);
        if (a.has_value() != b.has_value() || (a && !(*a == *b))) ++comm;
      }
    }
    out.push_back(check(s, "S(L): p p^-1 p = p", law == 0, std::to_string(all.size()) + " elements"));
    out.push_back(check(s, "S(L): idempotents commute", comm == 0));
    out.push_back(check(s, "S(L): unique maximal element above each element", max_count == 0));
  }

  // Gamma(X, G, H) and the functor from Gamma(D_K).
  {
    const auto scheme = fibonacci_scheme();
    const auto gx = gxh_semigroup(scheme);
    const auto mps = generate_modelset(scheme, QR(o.radius));
    std::vector<std::pair<PatternClass, QR>> placed;
    std::uniform_int_distribution<long> start(mps.first_index() + 2, mps.last_index() - 6);
    std::uniform_int_distribution<int> width(0, 3);
    for (int k = 0; k < 30; ++k) {
      const long a = start(rng);
      std::vector<long> idx;
      for (long i = a; i <= a + width(rng); ++i) idx.push_back(i);
      std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
      auto c = make_element(mps, idx, idx[pick(rng)], idx[pick(rng)]);
      placed.emplace_back(std::move(c), mps.point(a));
    }
    long law = 0, purity = 0, functor = 0, image_purity = 0, valid = 0;
    for (const auto& [x, at] : placed) {
      const auto e = project_functor(scheme, x, at);
      if (!gx.is_valid(e)) ++valid;
      const auto ee = gx.multiply(e, gx.inverse(e));
      const auto eee = ee ? gx.multiply(*ee, e) : std::nullopt;
      if (!eee || !(*eee == e)) ++law;
      if (gx.phi(e).is_zero() != gx.is_idempotent(e)) ++purity;
      if (gx.is_idempotent(e) && !is_idempotent(x)) ++image_purity;
      for (const auto& [y, at_y] : placed) {
        const auto xy = multiply(x, y, mps);
        if (!xy.value) continue;
        const auto lhs = project_functor(scheme, *xy.value, xy.placements.front());
        const auto rhs = gx.multiply(e, project_functor(scheme, y, at_y));
        if (!rhs || !(lhs == *rhs)) ++functor;
      }
    }
    out.push_back(check(s, "Gamma(X,G,H): images are valid orbit labels", valid == 0));
    out.push_back(check(s, "Gamma(X,G,H): x x^-1 x = x", law == 0));
    out.push_back(check(s, "Gamma(X,G,H): phi idempotent pure", purity == 0));
    out.push_back(check(s, "[phi]: image idempotent implies source idempotent", image_purity == 0));
    out.push_back(check(s, "[phi]: morphism on composable pairs", functor == 0));
  }
  return out;
}

}  // namespace

std::pair<std::vector<QR>, std::vector<QR>> sample_pattern_pair(const CutProjectScheme& scheme,
                                                                const std::vector<QR>& points, std::mt19937& rng) {
  if (points.empty()) throw InvalidArgument("no points to sample from");
  std::uniform_int_distribution<std::size_t> centre(0, points.size() - 1);
  const std::size_t c = centre(rng);
  std::vector<QR> p = random_local_pattern(points, c, rng);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    // Q = P together with the nearby points P forces.
    const WindowSet w = pattern_window(scheme, p);
    std::vector<QR> q = p;
    const std::size_t lo = c >= 6 ? c - 6 : 0;
    const std::size_t hi = std::min(points.size() - 1, c + 6);
    for (std::size_t k = lo; k <= hi && q.size() < 5; ++k) {
      if (std::find(q.begin(), q.end(), points[k]) != q.end()) continue;
      if (w.is_subset_of(scheme.window().translate(-scheme.star(points[k])))) q.push_back(points[k]);
    }
    std::sort(q.begin(), q.end());
    if (q != p) return {p, q};
  }
  return {p, random_local_pattern(points, c, rng)};
}

std::vector<std::string> suite_names() {
  return {"empire", "semigroup-axioms", "modelset-vs-substitution", "reference-cases", "macbeath", "chi"};
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "empire") return empire_suite(opts);
  if (name == "semigroup-axioms") return axioms_suite(opts);
  if (name == "modelset-vs-substitution") return modelset_vs_substitution_suite(opts);
  if (name == "reference-cases") return reference_case_suite(opts);
  if (name == "macbeath") return macbeath_suite(opts);
  if (name == "chi") return chi_suite(opts);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace tilegroup
