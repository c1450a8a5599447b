#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "tilegroup/pointset.hpp"

using namespace tilegroup;

namespace {

const QR tau = QR::golden();

PointSet1D fib_pointset(long half_width) {
  const auto spec = make_substitution({{'a', "ab"}, {'b', "a"}}, 'a');
  return build_pointset(two_sided_window(spec, half_width), {{'a', tau}, {'b', QR(1)}}, QR(0));
}

std::set<QR> brute_differences(const std::vector<QR>& pts, const QR& bound) {
  std::set<QR> out;
  for (const QR& x : pts)
    for (const QR& y : pts)
      if (!(bound < abs(x - y))) out.insert(x - y);
  return out;
}

bool brute_chain(const std::vector<QR>& pts, const QR& a, const QR& b) {
  for (const QR& x : pts)
    for (const QR& y : pts)
      for (const QR& z : pts)
        if (x - y == a && y - z == b) return true;
  return false;
}

}  // namespace

TEST_CASE("build_pointset") {
  auto ps = build_pointset(IndexedWord{1, "ab"}, {{'a', QR(2)}, {'b', QR(1)}}, QR(0));
  CHECK(ps.points() == std::vector<QR>{QR(0), QR(2), QR(3)});
  CHECK(ps.first_index() == 0);
  CHECK(ps.anchor() == QR(0));
  CHECK(ps.max_gap() == QR(2));
  CHECK(ps.index_of(QR(3)) == 2);
  CHECK_FALSE(ps.index_of(QR(1)).has_value());
  CHECK_THROWS_AS(ps.point(3), OutOfTruncation);
  CHECK_THROWS_AS(ps.point(-1), OutOfTruncation);

  auto single = build_pointset(IndexedWord{1, "a"}, {{'a', QR(1)}}, QR(0));
  CHECK(single.points() == std::vector<QR>{QR(0), QR(1)});

  auto fib = fib_pointset(10);
  CHECK(fib.point(1) == tau);
  CHECK(fib.point(2) == tau + 1);
  CHECK(fib.point(3) == QR(2) * tau + 1);

  CHECK_THROWS_AS(validate_lengths({{'a', QR(1)}, {'b', QR(1)}}), InvalidArgument);
  CHECK_THROWS_AS(validate_lengths({{'a', QR(0)}}), InvalidArgument);
}

TEST_CASE("build_pointset: prefix sums reconstruct every point") {
  auto ps = fib_pointset(30);
  const auto& w = ps.gap_word();
  for (long i = 1; i <= ps.last_index(); ++i) {
    QR sum(0);
    for (long k = 1; k <= i; ++k) sum += ps.lengths().at(w.at(k));
    CHECK(ps.point(i) == sum);
  }
  for (std::size_t k = 1; k < ps.size(); ++k) CHECK(ps.points()[k - 1] < ps.points()[k]);
}

TEST_CASE("pointset_from_points names gaps by length") {
  auto ps = pointset_from_points({QR(-1), QR(1), QR(2), QR(4)});
  CHECK(ps.anchor() == QR(1));
  CHECK(ps.gap_word().letters == "aba");
  CHECK(ps.lengths().at('a') == QR(2));
  CHECK(ps.lengths().at('b') == QR(1));
}

TEST_CASE("diff_set") {
  auto ps = build_pointset(IndexedWord{1, "ab"}, {{'a', QR(2)}, {'b', QR(1)}}, QR(0));
  std::vector<QR> values;
  for (const auto& d : diff_set(ps, QR(10))) values.push_back(d.value);
  CHECK(values == std::vector<QR>{QR(-3), QR(-2), QR(-1), QR(0), QR(1), QR(2), QR(3)});

  auto zero_only = diff_set(ps, QR(Rational(1, 2)));
  REQUIRE(zero_only.size() == 1);
  CHECK(zero_only[0].value.is_zero());

  auto fib = fib_pointset(20);
  std::set<QR> got;
  for (const auto& d : diff_set(fib, tau + 1)) {
    got.insert(d.value);
    for (const auto& [i, j] : d.witnesses) CHECK(fib.point(i) - fib.point(j) == d.value);
  }
  for (const QR& v : {QR(0), tau, QR(1), tau + 1, -tau, QR(-1), -tau - 1}) CHECK(got.count(v));
  CHECK(got == brute_differences(fib.points(), tau + 1));
}

TEST_CASE("oplus") {
  auto fib = fib_pointset(20);
  auto id = oplus(QR(0), QR(0), fib);
  REQUIRE(id);
  CHECK(id->value.is_zero());

  auto s = oplus(tau, QR(1), fib);
  REQUIRE(s);
  CHECK(s->value == tau + 1);
  CHECK_FALSE(oplus(QR(1), QR(1), fib).has_value());
}

TEST_CASE("oplus agrees with a chain search") {
  auto fib = fib_pointset(12);
  std::vector<QR> vals;
  for (const auto& d : diff_set(fib, QR(4))) vals.push_back(d.value);
  for (const QR& a : vals) {
    for (const QR& b : vals) {
      const auto r = oplus(a, b, fib);
      CHECK(r.has_value() == brute_chain(fib.points(), a, b));
      if (r) CHECK(r->value == a + b);
    }
  }
}

TEST_CASE("generator_set_delta and delta_chain") {
  auto ps = build_pointset(IndexedWord{1, "ab"}, {{'a', QR(2)}, {'b', QR(1)}}, QR(0));
  std::vector<QR> values;
  for (const auto& d : generator_set_delta(ps, QR(2))) values.push_back(d.value);
  CHECK(values == std::vector<QR>{QR(-2), QR(-1), QR(0), QR(1), QR(2)});
  CHECK_THROWS_AS(generator_set_delta(ps, QR(0)), InvalidArgument);
  CHECK_THROWS_AS(generator_set_delta(ps, QR(1)), InvalidArgument);

  auto fib = fib_pointset(20);
  const auto delta = generator_set_delta(fib, tau);
  std::set<QR> dvals;
  for (const auto& d : delta) dvals.insert(d.value);
  CHECK(dvals == std::set<QR>{-tau, QR(-1), QR(0), QR(1), tau});

  // Every difference is a sum of Delta elements along consecutive points.
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> idx(fib.first_index(), fib.last_index());
  for (int t = 0; t < 200; ++t) {
    const long i = idx(rng), j = idx(rng);
    QR sum(0);
    for (const QR& g : delta_chain(fib, i, j)) {
      CHECK(dvals.count(g));
      sum += g;
    }
    CHECK(sum == fib.point(i) - fib.point(j));
  }
}

TEST_CASE("hd_invariants") {
  auto z = hd_invariants({QR(2), QR(1)});
  CHECK(z.rank == 1);
  CHECK(z.basis == std::vector<QR>{QR(1)});

  auto z2 = hd_invariants({tau, QR(1)});
  CHECK(z2.rank == 2);
  CHECK(z2.basis == std::vector<QR>{QR(1), tau});

  CHECK(hd_invariants({QR(0)}).rank == 0);
  CHECK(hd_invariants({QR(3), QR(2)}).basis == std::vector<QR>{QR(1)});
  CHECK(hd_invariants({QR(4), QR(6)}).basis == std::vector<QR>{QR(2)});
}

TEST_CASE("hd_invariants: rank matches a gcd oracle on random integer sets") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> v(-30, 30);
  for (int t = 0; t < 100; ++t) {
    std::vector<QR> vals;
    long g = 0;
    for (int k = 0; k < 4; ++k) {
      const long x = v(rng);
      vals.emplace_back(x);
      g = std::gcd(g, x);
    }
    const auto inv = hd_invariants(vals);
    CHECK(inv.rank == (g == 0 ? 0 : 1));
    if (g != 0) CHECK(inv.basis == std::vector<QR>{QR(g)});
  }
}
