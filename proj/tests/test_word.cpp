#include "doctest.h"
#include "oracles.hpp"
#include "ripskit/constructions.hpp"

using namespace ripskit;

namespace {

Generator G(const char* n) { return Generator(n); }
Word W(const char* t) { return Word::parse(t); }

std::vector<Syllable> raw(std::initializer_list<std::pair<const char*, long long>> in) {
  std::vector<Syllable> out;
  for (auto& [g, e] : in) out.push_back({G(g), e});
  return out;
}

}  // namespace

TEST_CASE("reduce cancels and merges") {
  CHECK(reduce(raw({{"x", 1}, {"x", -1}, {"y", 1}})) == W("y"));
  CHECK(reduce(raw({{"y", 3}, {"y", 4}})) == W("y^7"));
  CHECK(reduce(raw({{"x", 1}, {"y", 2}, {"y", -2}, {"x", 1}})) == W("x^2"));
  CHECK(reduce(raw({{"x", 0}, {"y", 0}})).empty());
}

TEST_CASE("invert") {
  CHECK(invert(W("x y^-3")) == W("y^3 x^-1"));
  CHECK(invert(Word()).empty());
  CHECK(invert(W("y^6561")) == W("y^-6561"));
  Word w = W("a b^2 c^-5 a");
  CHECK(invert(invert(w)) == w);
  CHECK((w * invert(w)).empty());
}

TEST_CASE("commutator convention") {
  CHECK(commutator(W("y"), W("x")) == W("y x y^-1 x^-1"));
  CHECK(commutator(W("x"), W("x")).empty());
  Word a = miller::a(), c = miller::c();
  Word ac = commutator(a, c);
  oracle::Letters naive = oracle::reduce(oracle::concat(
      oracle::concat(oracle::expand(a), oracle::expand(c)),
      oracle::concat(oracle::inverse(oracle::expand(a)), oracle::inverse(oracle::expand(c)))));
  CHECK_FALSE(naive.empty());
  CHECK(oracle::expand(ac) == naive);
}

TEST_CASE("text syntax") {
  CHECK(W("1").empty());
  CHECK(W("x y^-3 x^6561").to_string() == "x y^-3 x^6561");
  CHECK(Word().to_string() == "1");
  Word big = W("y^123456789012345678901234567890");
  CHECK(big.letter_length() == BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(W("x^"), ParseError);
  CHECK(W("x^0 y") == W("y"));
  CHECK_THROWS_AS(W("x-y"), Error);
}

TEST_CASE("generator names") {
  CHECK(is_valid_generator_name("y1_2"));
  CHECK_FALSE(is_valid_generator_name(""));
  CHECK_FALSE(is_valid_generator_name("x^"));
  CHECK_FALSE(is_valid_generator_name("12"));
}

TEST_CASE("substitute") {
  GenMap m;
  m.assign(G("a"), W("x"));
  m.assign(G("b"), W("y"));
  CHECK(substitute(W("a b"), m)[0] == W("x y"));
  CHECK(substitute(W("a a^-1"), m)[0].empty());
  CHECK_THROWS_WITH_AS(substitute(W("c"), m), doctest::Contains("'c'"), InvalidArgument);

  // omega(y1) = y1^2 under y1 -> b_1
  GenMap mb;
  mb.assign(G("y1"), miller::b(1));
  Word img = substitute(W("y1^2"), mb)[0];
  oracle::Letters b1 = oracle::expand(miller::b(1));
  CHECK(oracle::expand(img) == oracle::reduce(oracle::concat(b1, b1)));

  GenMap pair(2);
  pair.assign(G("a"), {W("a"), W("1")});
  auto t = substitute(W("a^3"), pair);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == W("a^3"));
  CHECK(t[1].empty());
}

TEST_CASE("ladders expand like their letters") {
  Word l = Word::ladder(G("x"), 1, 0, G("y"), 5, 1, 4);  // x y^5 x y^6 x y^7 x y^8
  CHECK(l == W("x y^5 x y^6 x y^7 x y^8"));
  CHECK(l.syllable_count() == 8);
  CHECK(l.letter_length() == 4 + 5 + 6 + 7 + 8);
  CHECK(oracle::expand(l.inverse()) == oracle::inverse(oracle::expand(l)));
  CHECK(oracle::to_word(oracle::expand(l)) == l);
  // cancellation across a ladder boundary
  Word cut = W("y^-8 x^-1") * l;
  CHECK(cut == W("y^-3 x y^6 x y^7 x y^8"));
}

TEST_CASE("property: reduction agrees with the letter oracle") {
  std::mt19937_64 rng(7);
  std::vector<std::string> gens{"a", "b", "c"};
  std::uniform_int_distribution<int> len(0, 200), gi(0, 2), sg(0, 1), ex(1, 3);
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<Syllable> s;
    oracle::Letters letters;
    int n = len(rng);
    while (static_cast<int>(letters.size()) < n) {
      std::string g = gens[static_cast<std::size_t>(gi(rng))];
      int e = ex(rng) * (sg(rng) ? 1 : -1);
      s.push_back({Generator(g), e});
      for (int k = 0; k < std::abs(e); ++k) letters.push_back({g, e > 0 ? 1 : -1});
    }
    Word w = reduce(s);
    CHECK(oracle::expand(w) == oracle::reduce(letters));
    CHECK(w.letter_length() <= BigInt(letters.size()));
    auto again = w.syllables();
    CHECK(reduce(again) == w);
  }
}

TEST_CASE("property: associativity and distributivity") {
  std::mt19937_64 rng(11);
  std::vector<std::string> gens{"a", "b"};
  GenMap m;
  m.assign(G("a"), W("x y^2"));
  m.assign(G("b"), W("y^-1 x^-1"));
  for (int iter = 0; iter < 200; ++iter) {
    Word u = oracle::random_word(rng, gens, 12), v = oracle::random_word(rng, gens, 12),
         w = oracle::random_word(rng, gens, 12);
    CHECK((u * v) * w == u * (v * w));
    CHECK(substitute(u * v, m)[0] == substitute(u, m)[0] * substitute(v, m)[0]);
    CHECK(commutator(u, v) == u * v * invert(u) * invert(v));
  }
}

TEST_CASE("cyclic reduction") {
  CyclicReduction c = cyclic_reduce(W("a b c b^-1 a^-1"));
  CHECK(c.core == W("c"));
  CHECK(c.conjugator == W("a b"));
  CHECK(c.conjugator * c.core * invert(c.conjugator) == W("a b c b^-1 a^-1"));
  CHECK(is_cyclically_reduced(W("a b a^-1")) == false);
  CHECK(is_cyclically_reduced(W("a b")));
  CyclicReduction merged = cyclic_reduce(W("a^2 b a^3"));
  CHECK(merged.core.letter_length() == 6);
  CHECK(is_cyclically_reduced(merged.core));
  CHECK(merged.conjugator * merged.core * invert(merged.conjugator) == W("a^2 b a^3"));
}
