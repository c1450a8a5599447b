#include <numeric>
#include <random>

#include "doctest.h"
#include "tilegroup/presentation.hpp"

using namespace tilegroup;

namespace {

const Presentation kAB = Presentation::parse("gens: a b");

FreeWord w(const std::string& text, const Presentation& p = kAB) { return p.parse_word(text); }

FreeWord random_word(std::mt19937& rng, std::size_t gens, int len) {
  std::uniform_int_distribution<std::size_t> g(0, gens - 1);
  std::uniform_int_distribution<int> e(0, 1);
  std::vector<Letter> ls;
  for (int k = 0; k < len; ++k) ls.push_back(Letter{g(rng), e(rng) ? 1 : -1});
  return FreeWord(ls);
}

// Cofactor expansion; fine for the 3x3 matrices used below.
long det3(const IntMatrix& m) {
  auto v = [&](int i, int j) { return m(i, j).get_si(); };
  return v(0, 0) * (v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1)) - v(0, 1) * (v(1, 0) * v(2, 2) - v(1, 2) * v(2, 0)) +
         v(0, 2) * (v(1, 0) * v(2, 1) - v(1, 1) * v(2, 0));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w("a a-").empty());
  CHECK(w("a b b- a") == w("a a"));
  CHECK(w("a b a- b-").length() == 4);
  CHECK(reduce_word({Letter{0, 1}, Letter{1, 1}, Letter{1, -1}, Letter{0, -1}}).empty());
  CHECK((w("a b") * w("b- a")) == w("a a"));
  CHECK(w("a b").inverse() == w("b- a-"));
  CHECK_THROWS_AS(FreeWord({Letter{0, 2}}), InvalidArgument);
}

TEST_CASE("free group laws on random words") {
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    const FreeWord x = random_word(rng, 3, 8), y = random_word(rng, 3, 8), z = random_word(rng, 3, 8);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).empty());
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
    // Reduced: no adjacent cancelling pair.
    const auto& ls = (x * y).letters();
    for (std::size_t k = 1; k < ls.size(); ++k) CHECK_FALSE((ls[k].gen == ls[k - 1].gen && ls[k].exp == -ls[k - 1].exp));
    // Conjugates share a cyclic normal form.
    CHECK((y * x * y.inverse()).cyclic_canonical() == x.cyclic_canonical());
    CHECK(x.inverse().cyclic_canonical() == x.cyclic_canonical());
  }
}

TEST_CASE("presentation text format") {
  const auto p = Presentation::parse("gens: a b; rel: a b a- b-");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.to_string() == "gens: a b; rel: a b a- b-");
  CHECK(Presentation::parse(p.to_string()).relators == p.relators);
  CHECK(Presentation::parse("gens: x1 x2; rel: x1 x1 x2-").format_word(w("x1 x1 x2-", Presentation::parse("gens: x1 x2"))) ==
        "x1 x1 x2-");
  CHECK_THROWS_AS(Presentation::parse("rel: a"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens: a; rel: b"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens: a a"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens: a; junk"), ParseError);
}

TEST_CASE("presentation_from_pairs") {
  auto p = presentation_from_pairs({"a", "b"}, {{w("a b"), w("b a")}});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == w("a b a- b-"));
  CHECK(presentation_from_pairs({"a", "b"}, {{w("a b"), w("a b")}}).relators.empty());
  auto q = presentation_from_pairs({"a", "b"}, {{w("a a"), w("b b b")}});
  CHECK(q.relators[0] == w("a a b- b- b-"));
  CHECK_THROWS_AS(presentation_from_pairs({"a"}, {{w("a b"), FreeWord()}}), InvalidArgument);
}

TEST_CASE("abelian_invariants") {
  CHECK(abelian_invariants(Presentation::parse("gens: a b; rel: a b a- b-")) == AbelianInvariants{2, {}});
  CHECK(abelian_invariants(Presentation::parse("gens: a b; rel: a a b- b- b-")) == AbelianInvariants{1, {}});
  CHECK(abelian_invariants(Presentation::parse("gens: a")) == AbelianInvariants{1, {}});
  CHECK(abelian_invariants(Presentation::parse("gens: a b; rel: a a; rel: b b b b")) ==
        AbelianInvariants{0, {Integer(2), Integer(4)}});
  CHECK(abelian_invariants(Presentation::parse("gens: a b; rel: a a; rel: b b b")) == AbelianInvariants{0, {Integer(6)}});
  CHECK(AbelianInvariants{1, {Integer(2)}}.to_string() == "(1, [2])");
}

TEST_CASE("abelian_invariants: known groups survive random automorphisms") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(0, 6);
  std::uniform_int_distribution<std::size_t> g3(0, 2);
  for (int t = 0; t < 100; ++t) {
    // Z/d0 x Z/d1 x Z/d2, with d = 0 meaning a free factor.
    std::vector<int> ds{d(rng), d(rng), d(rng)};
    Presentation p;
    p.generators = {"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<Letter> power(static_cast<std::size_t>(ds[i]), Letter{i, 1});
      if (!power.empty()) p.relators.emplace_back(power);
      for (std::size_t j = i + 1; j < 3; ++j) p.relators.emplace_back(std::vector<Letter>{{i, 1}, {j, 1}, {i, -1}, {j, -1}});
    }
    // Nielsen moves x_i -> x_i x_j^{+-1} applied to every relator.
    for (int k = 0; k < 5; ++k) {
      const std::size_t i = g3(rng);
      std::size_t j = g3(rng);
      if (i == j) j = (j + 1) % 3;
      std::vector<FreeWord> images{FreeWord::generator(0), FreeWord::generator(1), FreeWord::generator(2)};
      images[i] = images[i] * FreeWord::generator(j, k % 2 ? 1 : -1);
      for (auto& r : p.relators) r = r.substitute(images);
    }
    long free_rank = 0;
    Integer order = 1;
    for (int x : ds) {
      if (x == 0) ++free_rank;
      else order *= x;
    }
    const auto inv = abelian_invariants(p);
    CHECK(inv.free_rank == free_rank);
    const Integer prod = std::accumulate(inv.torsion.begin(), inv.torsion.end(), Integer(1),
                                         [](const Integer& a, const Integer& b) { return Integer(a * b); });
    CHECK(prod == order);
    for (std::size_t k = 1; k < inv.torsion.size(); ++k) CHECK(inv.torsion[k] % inv.torsion[k - 1] == 0);
    CHECK(abelian_invariants(tietze_simplify(p, 50)) == inv);
  }
}

TEST_CASE("abelian_invariants: finite order equals |det| for square relation matrices") {
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    Presentation p;
    p.generators = {"x", "y", "z"};
    for (int k = 0; k < 3; ++k) p.relators.push_back(random_word(rng, 3, 6));
    const IntMatrix m = relation_matrix(p);
    if (m.rows() != 3) continue;
    const long det = std::abs(det3(m));
    const auto inv = abelian_invariants(p);
    if (det == 0) {
      CHECK(inv.free_rank > 0);
    } else {
      Integer order = 1;
      for (const Integer& x : inv.torsion) order *= x;
      CHECK(inv.free_rank == 0);
      CHECK(order == det);
    }
  }
}

TEST_CASE("tietze_simplify") {
  auto dup = tietze_simplify(Presentation::parse("gens: a b; rel: a b a- b-; rel: a b a- b-"), 10);
  CHECK(dup.relators.size() == 1);

  auto elim = tietze_simplify(Presentation::parse("gens: a b c; rel: c b-"), 10);
  CHECK(elim.generators.size() == 2);
  CHECK(elim.relators.empty());

  auto none = tietze_simplify(Presentation::parse("gens: a b"), 10);
  CHECK(none.generators.size() == 2);

  auto trivial = tietze_simplify(Presentation::parse("gens: e; rel: e e e-"), 10);
  CHECK(trivial.generators.empty());
  CHECK_THROWS_AS(tietze_simplify(none, -1), InvalidArgument);
}

TEST_CASE("check_homomorphism") {
  const auto comm = Presentation::parse("gens: a b; rel: a b a- b-");
  CHECK(check_homomorphism(comm, {FreeWord::generator(0), FreeWord::generator(1)}, TargetGroup::FreeAbelian));
  CHECK_FALSE(check_homomorphism(comm, {FreeWord::generator(0), FreeWord::generator(1)}, TargetGroup::Free));

  const auto rat = Presentation::parse("gens: a b; rel: a a b- b- b-");
  const FreeWord three({Letter{0, 1}, Letter{0, 1}, Letter{0, 1}});
  const FreeWord two({Letter{0, 1}, Letter{0, 1}});
  CHECK(check_homomorphism(rat, {three, two}, TargetGroup::Integers));
  CHECK_FALSE(check_homomorphism(rat, {two, three}, TargetGroup::Integers));

  const auto ab = Presentation::parse("gens: a b; rel: a b");
  CHECK_FALSE(check_homomorphism(ab, {FreeWord::generator(0), FreeWord::generator(1)}, TargetGroup::Free));
  CHECK_THROWS_AS(check_homomorphism(ab, {FreeWord::generator(0)}, TargetGroup::Free), InvalidArgument);
}

TEST_CASE("universal_presentation_from_table and certify") {
  OperationTable one{{"e"}, {{0, 0, 0}}};
  const auto p = universal_presentation_from_table(one);
  CHECK(p.relators.size() == 1);
  CHECK(tietze_simplify(p, 5).generators.empty());
  CHECK(abelian_invariants(p) == AbelianInvariants{0, {}});

  const auto free = certify(Presentation::parse("gens: a b"));
  CHECK(free.free);
  CHECK(free.free_rank == 2);
  const auto z2 = certify(Presentation::parse("gens: a b; rel: a b a- b-; rel: a a b a- a- b-"));
  CHECK(z2.free_abelian);
  CHECK(z2.abelian_rank == 2);
  CHECK_FALSE(certify(Presentation::parse("gens: a b; rel: a a b- b- b-")).free_abelian);
  CHECK_FALSE(certify(Presentation::parse("gens: a b c; rel: a b a- b-")).free_abelian);
}
