#include <random>
#include <set>

#include "doctest.h"
#include "tilegroup/modelset.hpp"

using namespace tilegroup;

namespace {

const QR tau = QR::golden();
const QR tau_c = QR(1) - tau;

CutProjectScheme scheme_with(WindowSet k) { return CutProjectScheme({QR(1), QR(1)}, {tau, tau_c}, std::move(k)); }

PointSet1D fib_substitution(long half_width) {
  const auto spec = make_substitution({{'a', "ab"}, {'b', "a"}}, 'a');
  return build_pointset(two_sided_window(spec, half_width), {{'a', tau}, {'b', QR(1)}}, QR(0));
}

std::vector<QR> within(const std::vector<QR>& pts, const QR& r) {
  std::vector<QR> out;
  for (const QR& p : pts)
    if (!(r < abs(p))) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("DenseGroup") {
  const DenseGroup g(QR(1), tau);
  const auto c = g.coefficients(QR(3) * tau - 4);
  REQUIRE(c);
  CHECK(c->first == -4);
  CHECK(c->second == 3);
  CHECK_FALSE(g.contains(QR(Rational(1, 2))));
  CHECK_FALSE(g.contains(QR::sqrt_of(2)));
  CHECK(g.element(2, -1) == QR(2) - tau);
  CHECK_THROWS_AS(DenseGroup(QR(1), QR(3)), InvalidArgument);
  CHECK_THROWS_AS(DenseGroup(tau, QR(2) * tau), InvalidArgument);
}

TEST_CASE("CutProjectScheme validation and star map") {
  const auto s = fibonacci_scheme();
  CHECK(s.star(QR(0)) == QR(0));
  CHECK(s.star(tau) == tau_c);
  CHECK(s.star(QR(2) * tau + 1) == QR(3) - QR(2) * tau);
  CHECK_THROWS_AS(s.star(QR(Rational(1, 3))), InvalidArgument);
  CHECK_FALSE(s.try_star(QR::sqrt_of(2)).has_value());
  // star is additive on the physical group
  for (long n = -5; n <= 5; ++n)
    for (long m = -5; m <= 5; ++m) CHECK(s.star(QR(n) + QR(m) * tau) == QR(n) + QR(m) * tau_c);

  CHECK_THROWS_AS(CutProjectScheme({QR(1), QR(1)}, {QR(2), QR(2)}, WindowSet::interval(QR(0), QR(1))), InvalidArgument);
  CHECK_THROWS_AS(scheme_with(WindowSet()), InvalidArgument);
  CHECK_THROWS_AS(scheme_with(WindowSet::interval(QR(0), QR(0))), InvalidArgument);
}

TEST_CASE("generate_modelset") {
  const auto s = fibonacci_scheme();
  const auto ms = generate_modelset(s, QR(10));
  CHECK(ms.points() == within(fib_substitution(14).points(), QR(10)));
  for (std::size_t k = 1; k < ms.size(); ++k) {
    const QR gap = ms.points()[k] - ms.points()[k - 1];
    CHECK((gap == tau || gap == QR(1)));
  }

  const QR lo = s.window().lower();
  const auto half = modelset_points(scheme_with(WindowSet::interval(lo, lo + tau / QR(2))), QR(10));
  CHECK(half.size() < ms.size());
  std::set<QR> gaps;
  for (std::size_t k = 1; k < half.size(); ++k) gaps.insert(half[k] - half[k - 1]);
  // Three-distance theorem: a generic window length gives three gap values.
  CHECK(gaps.size() == 3);

  CHECK(modelset_points(s, QR(Rational(1, 2))) == std::vector<QR>{QR(0)});
  CHECK_THROWS_AS(generate_modelset(scheme_with(WindowSet::interval(QR(5), QR(6))), QR(Rational(1, 2))), EmptyModelSet);
}

TEST_CASE("generate_modelset agrees with a coefficient-box oracle") {
  const auto s = fibonacci_scheme();
  const QR r(25);
  std::vector<QR> oracle;
  for (long n = -80; n <= 80; ++n)
    for (long m = -80; m <= 80; ++m) {
      const QR y = QR(n) + QR(m) * tau;
      if (!(r < abs(y)) && s.window().contains(QR(n) + QR(m) * tau_c)) oracle.push_back(y);
    }
  std::sort(oracle.begin(), oracle.end());
  CHECK(modelset_points(s, r) == oracle);
}

TEST_CASE("pattern_window") {
  const auto unit = scheme_with(WindowSet::interval(QR(0), QR(1)));
  CHECK(pattern_window(unit, {QR(0)}) == unit.window());
  CHECK(pattern_window(unit, {QR(0), tau}) == WindowSet::interval(tau - 1, QR(1)));
  CHECK_THROWS_AS(pattern_window(unit, {}), InvalidArgument);

  // Two consecutive unit gaps never occur.
  const auto s = fibonacci_scheme();
  CHECK(pattern_window(s, {QR(0), QR(1), QR(2)}).empty());
}

TEST_CASE("empire_equal and empire_brute") {
  const auto s = fibonacci_scheme();
  const std::vector<QR> p{QR(0)};
  const std::vector<QR> q{QR(0), tau};
  CHECK(empire_equal(s, p, p));
  CHECK(empire_brute(s, p, p, 10).equal);
  CHECK_FALSE(empire_equal(s, p, q));
  const auto v = empire_brute(s, p, q, 10);
  CHECK_FALSE(v.equal);
  REQUIRE(v.separating);
  const QR g = s.lattice_point(v.separating->first, v.separating->second).internal;
  CHECK(pattern_window(s, p).contains(g) != pattern_window(s, q).contains(g));

  // A point forced by P leaves the window unchanged.
  const auto pts = modelset_points(s, QR(10));
  const WindowSet w = pattern_window(s, q);
  int forced = 0;
  for (const QR& x : pts) {
    if (x == QR(0) || x == tau) continue;
    std::vector<QR> q2 = q;
    q2.push_back(x);
    if (!(pattern_window(s, q2) == w)) continue;
    ++forced;
    CHECK(empire_equal(s, q, q2));
    CHECK(empire_brute(s, q, q2, 20).equal);
  }
  CHECK(forced > 0);
  CHECK_THROWS_AS(empire_equal(s, {QR(Rational(1, 2))}, p), InvalidArgument);
}

TEST_CASE("a lattice translate of P lies in the model set iff g* is in the window of P") {
  const auto s = fibonacci_scheme();
  const auto pts = modelset_points(s, QR(15));
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int t = 0; t < 20; ++t) {
    std::vector<QR> p{pts[pick(rng)], pts[pick(rng)], pts[pick(rng)]};
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    const WindowSet w = pattern_window(s, p);
    for (long n = -8; n <= 8; ++n)
      for (long m = -8; m <= 8; ++m) {
        const auto g = s.lattice_point(n, m);
        const bool fits = std::all_of(p.begin(), p.end(), [&](const QR& x) { return s.in_model_set(x + g.phys); });
        CHECK(fits == w.contains(g.internal));
      }
  }
}

TEST_CASE("decide_product") {
  const auto s = fibonacci_scheme();
  const PatternClass x{{QR(0), tau}, 1, 0};
  const PatternClass y{{QR(0), QR(1)}, 1, 0};
  const auto xy = decide_product(s, x, y);
  CHECK(xy.outcome == Outcome::Defined);
  REQUIRE(xy.value);
  CHECK(*xy.value == PatternClass{{QR(0), QR(1), QR(1) + tau}, 2, 0});
  CHECK(decide_product(s, y, y).outcome == Outcome::Undefined);

  // Agrees with the truncated search wherever that search finds an embedding.
  const auto ms = generate_modelset(s, QR(40));
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> start(-12, 10);
  std::uniform_int_distribution<int> width(0, 2);
  for (int t = 0; t < 200; ++t) {
    auto pick = [&] {
      const long a = start(rng);
      const long b = a + width(rng);
      std::vector<long> idx;
      for (long i = a; i <= b; ++i) idx.push_back(i);
      return make_element(ms, idx, a, b);
    };
    const auto a = pick(), b = pick();
    const auto exact = decide_product(s, a, b);
    const auto local = multiply(a, b, ms);
    if (local.outcome == Outcome::Defined) CHECK(exact.outcome == Outcome::Defined);
    if (exact.outcome == Outcome::Undefined) CHECK(local.outcome != Outcome::Defined);
  }
}

TEST_CASE("Gamma(X, G, H)") {
  const auto s = fibonacci_scheme();
  const auto gx = gxh_semigroup(s);
  const auto e = gx.identity();
  CHECK(gx.is_valid(e));
  CHECK(gx.is_idempotent(e));

  const auto m = gx.maximal(tau_c);
  REQUIRE(m);
  CHECK(m->window == s.window().intersect(s.window().translate(tau_c)));
  CHECK(*gx.multiply(e, *m) == *m);
  CHECK(*gx.multiply(*m, e) == *m);
  CHECK(gx.phi(gx.inverse(*m)) == -tau_c);
  CHECK(gx.max_above(*m) == *m);
  CHECK_FALSE(gx.maximal(QR(5)).has_value());

  // The functor image of {0, tau} pointed (tau, 0) is the maximal element at tau*.
  const PatternClass x{{QR(0), tau}, 1, 0};
  const auto img = project_functor(s, x, QR(0));
  CHECK(img == *m);
  CHECK(gx.is_valid(img));

  // Single points map to the identity wherever they sit.
  const auto pts = modelset_points(s, QR(10));
  for (const QR& p : pts) CHECK(project_functor(s, PatternClass{{QR(0)}, 0, 0}, p) == e);
  CHECK_THROWS_AS(project_functor(s, PatternClass{{QR(0), QR(1), QR(2)}, 0, 2}, QR(0)), InvalidArgument);
}

TEST_CASE("Gamma(X, G, H): kernel of the functor is the empire relation") {
  const auto s = fibonacci_scheme();
  const auto ms = generate_modelset(s, QR(30));
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> start(-10, 8);
  std::uniform_int_distribution<int> width(0, 3);
  std::vector<std::pair<PatternClass, QR>> xs;
  for (int t = 0; t < 60; ++t) {
    const long a = start(rng);
    std::vector<long> idx;
    for (long i = a; i <= a + width(rng); ++i) idx.push_back(i);
    xs.emplace_back(make_element(ms, idx, a, idx.back()), ms.point(a));
  }
  for (const auto& [x, px] : xs) {
    for (const auto& [y, py] : xs) {
      if (!(phi(x) == phi(y))) continue;
      // Pointed so that the out-points coincide.
      std::vector<QR> p, q;
      for (const QR& o : x.offsets) p.push_back(o - x.out_point());
      for (const QR& o : y.offsets) q.push_back(o - y.out_point());
      const bool same_window = pattern_window(s, p) == pattern_window(s, q);
      CHECK((project_functor(s, x, px) == project_functor(s, y, py)) == same_window);
    }
  }
}

TEST_CASE("macbeath_data") {
  const DenseGroup g(QR(1), tau);
  const auto v = WindowSet::interval(QR(0), QR(1));
  const auto md = macbeath_data(g, v, 3);
  std::set<QR> vals(md.values.begin(), md.values.end());
  for (const QR& x : {QR(0), tau - 1, QR(2) - tau, QR(2) * tau - 3}) CHECK((vals.count(x) && vals.count(-x)));
  // 3 tau - 4 needs coefficient 4.
  CHECK_FALSE(vals.count(QR(3) * tau - 4));
  CHECK(macbeath_data(g, v, 4).index_of({-4, 3}).has_value());

  const auto trivial = macbeath_data(g, v, 0);
  CHECK(trivial.elements == std::vector<Coefficients>{{0, 0}});
  REQUIRE(trivial.relations.size() == 1);

  // g + (-g) = 0 whenever g is in E.
  const auto pm = md.table().product_map();
  for (std::size_t i = 0; i < md.elements.size(); ++i) {
    const auto j = *md.index_of({-md.elements[i].first, -md.elements[i].second});
    CHECK(pm.at({i, j}) == *md.index_of({0, 0}));
  }
  CHECK_THROWS_AS(macbeath_data(g, v, -1), InvalidArgument);
}

TEST_CASE("macbeath_data matches an interval-arithmetic oracle") {
  // For V = (0, 1): g in E iff |g| < 1; (g, h) in F' iff the spread of {0, g, g + h} is < 1.
  const DenseGroup g(QR(1), tau);
  const long b = 4;
  const auto md = macbeath_data(g, WindowSet::interval(QR(0), QR(1)), b);
  std::vector<Coefficients> e;
  for (long n = -b; n <= b; ++n)
    for (long m = -b; m <= b; ++m)
      if (abs(g.element(n, m)) < QR(1)) e.emplace_back(n, m);
  CHECK(md.elements == e);
  std::set<std::array<Coefficients, 2>> expected, got;
  for (const auto& x : e)
    for (const auto& y : e) {
      const Coefficients sum{x.first + y.first, x.second + y.second};
      if (std::abs(sum.first) > b || std::abs(sum.second) > b) continue;
      const QR gx = g.element(x), gy = g.element(x) + g.element(y);
      if (max(max(QR(0), gx), gy) - min(min(QR(0), gx), gy) < QR(1)) expected.insert({x, y});
    }
  for (const auto& [i, j, k] : md.relations) got.insert({md.elements[i], md.elements[j]});
  CHECK(got == expected);

  // Closed X = [0, 1] read through G keeps the boundary translations +-1.
  const auto closed = macbeath_data(g, WindowSet::interval(QR(0), QR(1)), b, OverlapRule::GroupPoint);
  CHECK(closed.index_of({1, 0}).has_value());
  CHECK(closed.index_of({-1, 0}).has_value());
  CHECK_FALSE(md.index_of({1, 0}).has_value());
}

TEST_CASE("chi_obstruction") {
  const QR r(1), s(9);
  CHECK(chi_obstruction(r, s, QR(0)) == 0);
  CHECK(chi_obstruction(r, s, QR(9) + tau - 1) == 1);
  CHECK(chi_obstruction(r, s, -(QR(9) + tau - 1)) == -1);
  CHECK_THROWS_AS(chi_obstruction(r, s, QR(4)), InvalidArgument);
  CHECK_THROWS_AS(chi_obstruction(r, s, QR(18)), InvalidArgument);
  CHECK_THROWS_AS(chi_obstruction(r, QR(8), QR(0)), InvalidArgument);
}
