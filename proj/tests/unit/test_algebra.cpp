#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "essv/error.hpp"
#include "essv/monoid.hpp"
#include "essv/oracle.hpp"

using namespace essv;
using Catch::Matchers::ContainsSubstring;

namespace {

// {1, m, m²} with m³ = m².
Monoid three_element_nilpotent() {
  return Monoid::from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
}

Monoid z4() { return Monoid::cyclic_group(4); }

}  // namespace

TEST_CASE("make_monoid accepts valid tables") {
  const Monoid t = Monoid::from_table({{0}}, 0);
  CHECK(t.size() == 1);
  CHECK(t.identity() == 0);
  const Monoid z2 = Monoid::from_table({{0, 1}, {1, 0}}, 0);
  CHECK(z2.size() == 2);
  CHECK(z2.is_group());
}

TEST_CASE("make_monoid rejects bad tables") {
  CHECK_THROWS_WITH(Monoid::from_table({{0, 1}, {1, 0}}, 1), ContainsSubstring("identity law violated"));
  CHECK_THROWS_AS(Monoid::from_table({{0, 1}, {1, 2}}, 0), InputError);
  CHECK_THROWS_AS(Monoid::from_table({{0, 1}}, 0), InputError);
  CHECK_THROWS_WITH(Monoid::from_table({{0, 1, 2}, {1, 2, 1}, {2, 2, 2}}, 0),
                    ContainsSubstring("associativity violated"));
  CHECK_THROWS_AS(Monoid::from_table({{0, 1}, {1, 1}}, 0, {"e", "e"}), InputError);
}

TEST_CASE("identity need not be element 0") {
  const Monoid m = Monoid::from_table({{0, 0}, {0, 1}}, 1);
  CHECK(m.identity() == 1);
  CHECK(m.omega(0) == 0);
  CHECK(omega(m, 1) == 1);
}

TEST_CASE("omega") {
  const Monoid z3 = Monoid::cyclic_group(3);
  CHECK(z3.omega(1) == z3.identity());
  CHECK(z3.omega(2) == z3.identity());
  const Monoid m = three_element_nilpotent();
  CHECK(m.omega(1) == 2);
  CHECK(omega(m, 1) == 2);
  CHECK(m.omega(2) == 2);
  CHECK(m.omega(0) == 0);
}

TEST_CASE("omega is an idempotent positive power on all small monoids") {
  for (const auto& m : oracle::enumerate_monoids(4)) {
    for (Element x = 0; x < m.size(); ++x) {
      const Element w = m.omega(x);
      CHECK(m.is_idempotent(w));
      Element p = x;
      bool found = false;
      for (std::size_t i = 0; i <= m.size() && !found; ++i) {
        found = p == w;
        p = m.mul(p, x);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("generated_submonoid") {
  const Monoid z2 = Monoid::cyclic_group(2);
  CHECK(generated_submonoid(z2, std::vector<Element>{}) == ElementSet{0});
  CHECK(generated_submonoid(z2, std::vector<Element>{1}) == ElementSet{0, 1});
  CHECK(generated_submonoid(three_element_nilpotent(), std::vector<Element>{1}) == ElementSet{0, 1, 2});
  CHECK(generated_submonoid(z4(), std::vector<Element>{2}) == ElementSet{0, 2});
}

TEST_CASE("direct_product") {
  const Monoid z2 = Monoid::cyclic_group(2);
  const ProductMonoid p = direct_product(z2, z2);
  CHECK(p.monoid.size() == 4);
  for (Element x = 0; x < 4; ++x) {
    CHECK(p.monoid.mul(x, x) == p.monoid.identity());
    CHECK((x == p.monoid.identity()) == p.monoid.is_idempotent(x));
  }
  CHECK(p.monoid.identity() == p.pair(0, 0));

  const Monoid m = three_element_nilpotent();
  const ProductMonoid t = direct_product(Monoid::trivial(), m);
  CHECK(t.monoid.size() == m.size());
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b) CHECK(t.second(t.monoid.mul(t.pair(0, a), t.pair(0, b))) == m.mul(a, b));

  const Monoid z11 = Monoid::cyclic_group(11);
  CHECK_THROWS_AS(direct_product(z11, z11, 100), InputError);
}

TEST_CASE("product projections are surjective morphisms") {
  const Monoid a = three_element_nilpotent();
  const Monoid b = Monoid::cyclic_group(3);
  const ProductMonoid p = direct_product(a, b);
  std::vector<Element> first, second;
  for (Element e = 0; e < p.monoid.size(); ++e) {
    first.push_back(p.first(e));
    second.push_back(p.second(e));
  }
  CHECK(is_morphism(p.monoid, a, first));
  CHECK(is_morphism(p.monoid, b, second));
}

TEST_CASE("quotient_monoid") {
  const Monoid m = three_element_nilpotent();
  const QuotientMonoid id = quotient_monoid(MonoidCongruence::identity(m));
  CHECK(id.monoid.size() == m.size());
  CHECK(is_morphism(m, id.monoid, id.projection));
  CHECK(isomorphic(id.monoid, m));

  const QuotientMonoid full = quotient_monoid(MonoidCongruence::full(m));
  CHECK(full.monoid.size() == 1);

  const QuotientMonoid z2 = quotient_monoid(MonoidCongruence(z4(), {0, 1, 0, 1}));
  CHECK(z2.monoid.size() == 2);
  CHECK(isomorphic(z2.monoid, Monoid::cyclic_group(2)));
  CHECK(is_morphism(z4(), z2.monoid, z2.projection));

  CHECK_THROWS_WITH(quotient_monoid(MonoidCongruence(z4(), {0, 1, 1, 2})),
                    ContainsSubstring("not a congruence"));
}

TEST_CASE("identity congruence gives an isomorphic quotient on all small monoids") {
  for (const auto& m : oracle::enumerate_monoids(3)) {
    const QuotientMonoid q = quotient_monoid(MonoidCongruence::identity(m));
    CHECK(is_morphism(m, q.monoid, q.projection));
    ElementSet image(q.projection.begin(), q.projection.end());
    std::sort(image.begin(), image.end());
    CHECK(std::unique(image.begin(), image.end()) == image.end());
  }
}

TEST_CASE("divides") {
  const Monoid z4m = z4();
  CHECK(divides(Monoid::trivial(), z4m) == DivisionVerdict::Divides);
  CHECK(divides(Monoid::cyclic_group(2), z4m) == DivisionVerdict::Divides);
  CHECK(divides(Monoid::cyclic_group(3), z4m) == DivisionVerdict::DoesNotDivide);
  CHECK(divides(z4m, Monoid::cyclic_group(2)) == DivisionVerdict::DoesNotDivide);
  CHECK(divides(Monoid::cyclic_group(2), Monoid::cyclic_group(7), DivisionBudget{1, 6}) !=
        DivisionVerdict::Divides);
  CHECK(std::string(to_string(DivisionVerdict::BudgetExhausted)) == "budget exhausted");
}

TEST_CASE("divides is reflexive and transitive on monoids of size at most 4") {
  const auto all = oracle::enumerate_monoids(4);
  const std::size_t n = all.size();
  std::vector<DivisionVerdict> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = divides(all[i], all[j]);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rel[i * n + i] == DivisionVerdict::Divides);
    for (std::size_t j = 0; j < n; ++j) CHECK(rel[i * n + j] != DivisionVerdict::BudgetExhausted);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (rel[a * n + b] == DivisionVerdict::Divides && rel[b * n + c] == DivisionVerdict::Divides)
          CHECK(rel[a * n + c] == DivisionVerdict::Divides);
}
