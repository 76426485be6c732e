#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "essv/builders.hpp"
#include "essv/dfa.hpp"
#include "essv/error.hpp"
#include "essv/oracle.hpp"

using namespace essv;
using essv::testing::make_dfa;

namespace {

const Alphabet kAb = Alphabet::of("ab");
const Alphabet kA = Alphabet::of("a");

Dfa even_a() { return make_dfa(kA, 0, {0}, {{1}, {0}}); }
Dfa a_star() { return universal_language(kA); }
Dfa starts_with(const char* u) { return build_family(kAb, family::Prefix{kAb.parse(u)}); }

bool brute_equal(const Dfa& a, const Dfa& b, std::size_t n = 8) { return oracle::approx_equal(a, b, n); }

}  // namespace

TEST_CASE("alphabet parse and format") {
  CHECK(kAb.parse("abba") == Word{0, 1, 1, 0});
  CHECK(kAb.parse("").empty());
  CHECK(kAb.parse("ε").empty());
  CHECK(kAb.format({}) == "ε");
  CHECK(kAb.format({1, 0}) == "ba");
  CHECK_THROWS_AS(kAb.parse("abc"), InputError);
  const Alphabet multi({"x1", "y"});
  CHECK(multi.parse("x1 y.x1") == Word{0, 1, 0});
  CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
}

TEST_CASE("minimize") {
  const Dfa one = universal_language(kAb);
  CHECK(minimize(one) == one);
  CHECK(minimize(one).state_count() == 1);

  const Dfa dup = make_dfa(kA, 0, {0, 2}, {{1}, {2}, {3}, {0}});
  const Dfa m = minimize(dup);
  CHECK(m.state_count() == 2);
  CHECK(m == minimize(even_a()));
  CHECK(brute_equal(m, dup));

  const Dfa unreachable = make_dfa(kAb, 0, {1}, {{0, 0}, {1, 1}});
  const Dfa e = minimize(unreachable);
  CHECK(e.state_count() == 1);
  CHECK_FALSE(e.is_final(0));
  CHECK(is_empty(e));
}

TEST_CASE("minimize is idempotent and language-preserving on the corpus") {
  testing::Rng rng(7);
  for (const auto& entry : testing::random_minimal_dfas(60, 5, 11)) {
    // Blow up with a redundant copy of every state.
    const Dfa& d = entry.dfa;
    const std::size_t n = d.state_count(), s = d.alphabet().size();
    std::vector<State> delta(2 * n * s);
    std::vector<bool> finals(2 * n);
    for (State q = 0; q < 2 * n; ++q) {
      finals[q] = d.is_final(q % n);
      for (Letter a = 0; a < s; ++a)
        delta[q * s + a] = d.next(q % n, a) + static_cast<State>(testing::pick(rng, 2) * n);
    }
    const Dfa big(d.alphabet(), 2 * n, d.initial(), finals, delta);
    const Dfa m = minimize(big);
    CHECK(m == d);
    CHECK(minimize(m) == m);
    CHECK(brute_equal(m, big, 8));
  }
}

TEST_CASE("boolean operations") {
  const Dfa l = starts_with("ab");
  CHECK(equivalent(complement(complement(l)), l));
  const Dfa plus = complement(finite_language(kAb, {Word{}}));
  CHECK(equivalent(bool_op(BoolOp::Union, starts_with("a"), starts_with("b")), plus));
  CHECK(is_empty(bool_op(BoolOp::Intersection, l, empty_language(kAb))));
  CHECK_THROWS_AS(bool_op(BoolOp::Union, l, a_star()), InputError);
}

TEST_CASE("boolean operations agree with word enumeration") {
  const auto dfas = testing::random_minimal_dfas(20, 4, 3);
  const oracle::WordEnumeration words(kAb, 7);
  for (std::size_t i = 0; i + 1 < dfas.size(); ++i) {
    const Dfa& a = dfas[i].dfa;
    const Dfa& b = dfas[i + 1].dfa;
    const Dfa u = bool_op(BoolOp::Union, a, b);
    const Dfa n = bool_op(BoolOp::Intersection, a, b);
    const Dfa d = bool_op(BoolOp::Difference, a, b);
    const Dfa x = bool_op(BoolOp::SymmetricDifference, a, b);
    for (const Word& w : words.words()) {
      CHECK(u.accepts(w) == (a.accepts(w) || b.accepts(w)));
      CHECK(n.accepts(w) == (a.accepts(w) && b.accepts(w)));
      CHECK(d.accepts(w) == (a.accepts(w) && !b.accepts(w)));
      CHECK(x.accepts(w) == (a.accepts(w) != b.accepts(w)));
    }
  }
}

TEST_CASE("word_quotient") {
  const Dfa l = starts_with("a");
  CHECK(equivalent(word_quotient(l, {}, {}), l));
  CHECK(equivalent(word_quotient(l, kAb.parse("a"), {}), universal_language(kAb)));
  CHECK(equivalent(word_quotient(even_a(), kA.parse("a"), kA.parse("a")), even_a()));
}

TEST_CASE("concat_words") {
  const Dfa l = starts_with("ab");
  CHECK(equivalent(concat_words({}, l, {}), l));
  const Dfa asb = concat_words(kAb.parse("a"), universal_language(kAb), kAb.parse("b"));
  CHECK(equivalent(asb, build_family(kAb, family::InfixLi{{kAb.parse("a")}, {kAb.parse("b")}, {}})));
  CHECK(is_empty(concat_words(kAb.parse("ab"), empty_language(kAb), kAb.parse("b"))));
}

TEST_CASE("quotient and concatenation identities") {
  testing::Rng rng(99);
  for (const auto& entry : testing::random_minimal_dfas(40, 4, 5)) {
    const Dfa& k = entry.dfa;
    const Word x = testing::random_word(rng, kAb, 2);
    const Word y = testing::random_word(rng, kAb, 2);
    CHECK(equivalent(word_quotient(concat_words(x, k, y), x, y), k));
    const Dfa xsy = concat_words(x, universal_language(kAb), y);
    CHECK(equivalent(concat_words(x, word_quotient(k, x, y), y), bool_op(BoolOp::Intersection, xsy, k)));
  }
}

TEST_CASE("ne_preimage") {
  const Dfa l = starts_with("ba");
  CHECK(equivalent(ne_preimage(NeMorphism::identity(kAb), l), l));

  const NeMorphism doubling(kA, kA, {kA.parse("aa")});
  CHECK(equivalent(ne_preimage(doubling, even_a()), a_star()));

  const NeMorphism f(kAb, kAb, {kAb.parse("ab"), kAb.parse("b")});
  const Dfa ends_bb = build_family(kAb, family::Suffix{kAb.parse("bb")});
  const Dfa pre = ne_preimage(f, ends_bb);
  CHECK(equivalent(pre, build_family(kAb, family::InfixLi{{kAb.parse("a"), kAb.parse("b")}, {kAb.parse("b")}, {}})));
  const oracle::WordEnumeration words(kAb, 6);
  for (const Word& w : words.words()) CHECK(pre.accepts(w) == ends_bb.accepts(f.apply(w)));

  CHECK_THROWS_AS(NeMorphism(kAb, kAb, {Word{}, kAb.parse("b")}), InputError);
}

TEST_CASE("ne_preimage commutes with boolean operations") {
  testing::Rng rng(2024);
  const auto dfas = testing::random_minimal_dfas(24, 4, 8);
  for (std::size_t i = 0; i + 1 < dfas.size(); i += 2) {
    Word fa = testing::random_word(rng, kAb, 2), fb = testing::random_word(rng, kAb, 2);
    fa.push_back(0);
    fb.push_back(1);
    const NeMorphism f(kAb, kAb, {fa, fb});
    const Dfa& a = dfas[i].dfa;
    const Dfa& b = dfas[i + 1].dfa;
    for (auto op : {BoolOp::Union, BoolOp::Intersection, BoolOp::Difference}) {
      CHECK(equivalent(ne_preimage(f, bool_op(op, a, b)), bool_op(op, ne_preimage(f, a), ne_preimage(f, b))));
    }
    CHECK(equivalent(ne_preimage(f, complement(a)), complement(ne_preimage(f, a))));
  }
}

TEST_CASE("equivalent and distinguishing_word") {
  const Dfa l = starts_with("ab");
  CHECK(equivalent(l, l));
  CHECK_FALSE(equivalent(even_a(), a_star()));
  CHECK(distinguishing_word(even_a(), a_star()) == kA.parse("a"));
  CHECK_FALSE(distinguishing_word(l, l).has_value());

  const Dfa built = build_family(kAb, family::InfixLi{{kAb.parse("ab")}, {kAb.parse("ba")}, {}});
  const Dfa composed = concat_words(kAb.parse("ab"), universal_language(kAb), kAb.parse("ba"));
  CHECK(equivalent(built, composed));
}

TEST_CASE("reverse") {
  const Dfa l = starts_with("ab");
  CHECK(equivalent(reverse(l), build_family(kAb, family::Suffix{kAb.parse("ba")})));
  for (const auto& entry : testing::random_minimal_dfas(20, 4, 17)) CHECK(equivalent(reverse(reverse(entry.dfa)), entry.dfa));
}
