#include "doctest.h"
#include "oracles.hpp"
#include "ripskit/constructions.hpp"
#include "ripskit/pipeline.hpp"
#include "ripskit/semidecide.hpp"
#include "ripskit/smallcancel.hpp"

using namespace ripskit;

namespace {

Presentation P(const char* t) { return Presentation::parse(t); }
Word W(const char* t) { return Word::parse(t); }

std::vector<std::string> names(const Presentation& p) {
  std::vector<std::string> out;
  for (const Generator& g : p.generators()) out.push_back(g.name());
  return out;
}

}  // namespace

TEST_CASE("coset enumeration: small groups") {
  CosetResult c5 = coset_enumerate(P("gens: x\nrel: x^5"), {});
  REQUIRE(c5.finite);
  CHECK(c5.index == 5);
  CHECK(verify_coset_table(P("gens: x\nrel: x^5"), {}, c5));

  CosetResult triv = coset_enumerate(P("gens: x y\nrel: x\nrel: y"), {});
  REQUIRE(triv.finite);
  CHECK(triv.index == 1);

  Presentation s3 = P("gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b");
  CosetResult t = coset_enumerate(s3, {});
  REQUIRE(t.finite);
  CHECK(t.index == 6);
  CHECK(verify_coset_table(s3, {}, t));
  CosetResult sub = coset_enumerate(s3, {W("b")});
  REQUIRE(sub.finite);
  CHECK(sub.index == 2);
  CHECK(verify_coset_table(s3, {W("b")}, sub));
}

TEST_CASE("coset enumeration: exhausted and budgets") {
  CosetResult free2 = coset_enumerate(P("gens: x y"), {}, 10);
  CHECK_FALSE(free2.finite);
  CHECK(free2.serialize() == "outcome: exhausted 10\n");
  CHECK(certify_trivial(P("gens: x y"), 1000) == Certificate::Inconclusive);
  CHECK(certify_trivial(P("gens: x y\nrel: x y^-1\nrel: x")) == Certificate::Trivial);
  CHECK_THROWS_AS(coset_enumerate(P("gens: x"), {}, 0), InvalidArgument);

  Presentation s3 = P("gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b");
  CHECK_FALSE(coset_enumerate(s3, {}, 2).finite);
  // budget monotonicity
  bool seen = false;
  for (std::uint64_t b : {1, 2, 4, 8, 16, 32, 64, 128, 256}) {
    bool fin = coset_enumerate(s3, {}, b).finite;
    if (seen) CHECK(fin);
    seen = seen || fin;
  }
  CHECK(seen);
}

TEST_CASE("coset enumeration: format and determinism") {
  Presentation s3 = P("gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b");
  CosetResult t = coset_enumerate(s3, {});
  CHECK(t.serialize() == coset_enumerate(s3, {}).serialize());
  CosetResult rt = CosetResult::parse(t.serialize());
  CHECK(rt.serialize() == t.serialize());
  CHECK(verify_coset_table(s3, {}, rt));
  CHECK_THROWS_AS(CosetResult::parse("outcome: finite 2\nperm a: 1\n"), ParseError);

  CosetResult broken = t;
  for (std::uint32_t i = 0; i < broken.index; ++i) broken.perms[0][i] = i + 1;
  CHECK_FALSE(verify_coset_table(s3, {}, broken));
}

TEST_CASE("property: finite tables are sound") {
  const char* groups[] = {
      "gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b",
      "gens: a b\nrel: a^4\nrel: b^2\nrel: a b a b",
      "gens: a b\nrel: a^3\nrel: b^3\nrel: a b a b",
      "gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b a b a b a b",
      "gens: x\nrel: x^7",
      "gens: x y\nrel: x^2\nrel: y^2\nrel: x y x y",
  };
  for (const char* text : groups) {
    Presentation p = P(text);
    CosetResult t = coset_enumerate(p, {});
    REQUIRE(t.finite);
    CHECK(verify_coset_table(p, {}, t));
    CHECK(t.perms.size() == p.generators().size());
  }
  CHECK(coset_enumerate(P(groups[3]), {}).index == 60);
}

TEST_CASE("quotient search") {
  QuotientResult k4 = quotient_search(P("gens: x y\nrel: x^2\nrel: y^2\nrel: x y x y"), 5);
  REQUIRE(k4.witness);
  CHECK(k4.witness->degree == 2);
  CHECK(k4.witness->image_order == 2);
  CHECK_FALSE(quotient_search(P("gens: x\nrel: x"), 5).witness);

  Presentation seed = P("gens: y1\nrel: y1");
  Presentation m({Generator("x"), Generator("y")}, miller_sigma(seed, W("y1")));
  CHECK_FALSE(quotient_search(m, 5).witness);

  CHECK_THROWS_AS(quotient_search(P("gens: x"), 7), InvalidArgument);
  CHECK_THROWS_AS(quotient_search(P("gens: x"), 0), InvalidArgument);

  QuotientResult c5 = quotient_search(P("gens: x\nrel: x^5"), 5);
  REQUIRE(c5.witness);
  CHECK(c5.witness->degree == 5);
  CHECK(c5.witness->image_order == 5);
  CHECK(QuotientResult::parse(c5.serialize()).serialize() == c5.serialize());
  QuotientResult none = quotient_search(P("gens: x\nrel: x"), 4);
  CHECK(QuotientResult::parse(none.serialize()).serialize() == "outcome: none 4\n");
}

TEST_CASE("property: quotient witnesses satisfy every relator") {
  const char* groups[] = {
      "gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b",
      "gens: a b\nrel: a^3\nrel: b^3\nrel: a b a b",
      "gens: a b c\nrel: a b c\nrel: a^2 b^-1",
      "gens: a b\nrel: a b a^-1 b^-2",
      "gens: a b c d\nrel: a b a^-1 b^-1 c d c^-1 d^-1",
  };
  for (const char* text : groups) {
    Presentation p = P(text);
    QuotientResult q = quotient_search(p, 4);
    REQUIRE(q.witness);
    const std::size_t n = q.witness->degree;
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i + 1);
    for (const Word& r : p.relators()) CHECK(evaluate_permutation(p, q.witness->images, r) == id);
    bool nontrivial = false;
    for (const Permutation& g : q.witness->images) nontrivial |= g != id;
    CHECK(nontrivial);
    CHECK(q.witness->image_order > 1);
  }
}

TEST_CASE("property: engines agree on finite groups") {
  const char* groups[] = {
      "gens: a b\nrel: a^2\nrel: b^3\nrel: a b a b",
      "gens: a b\nrel: a^4\nrel: b^2\nrel: a b a b",
      "gens: x\nrel: x^6",
  };
  std::mt19937_64 rng(31);
  for (const char* text : groups) {
    Presentation p = P(text);
    CosetResult t = coset_enumerate(p, {});
    REQUIRE(t.finite);
    REQUIRE(t.index <= 60);
    CosetTableOracle table(p, t);
    // The regular representation is faithful, so it decides the word problem too.
    for (int iter = 0; iter < 200; ++iter) {
      Word w = oracle::random_word(rng, names(p), 10);
      bool trivial = table.decide(w) == Triviality::Trivial;
      CHECK(trivial == (coset_act(p, t, 1, w) == 1));
      std::vector<Word> rels = p.relators();
      rels.push_back(w);
      CosetResult with = coset_enumerate(Presentation(p.generators(), rels), {});
      REQUIRE(with.finite);
      CHECK(trivial == (with.index == t.index));
    }
  }
}

TEST_CASE("normal closure membership") {
  Presentation surf = P("gens: a b c d\nrel: a b a^-1 b^-1 c d c^-1 d^-1");
  Word r = surf.relators()[0];
  MembershipResult yes = normal_closure_member(W("a b") * r * W("b^-1 a^-1"), surf);
  CHECK(yes.answer == Membership::Yes);
  CHECK(yes.method == "dehn");
  MembershipResult no = normal_closure_member(W("a"), surf);
  CHECK(no.answer == Membership::No);
  CHECK(no.method == "dehn");
  CHECK(normal_closure_member(Word(), surf).method == "free-reduction");

  Presentation c2 = P("gens: x1\nrel: x1^2");
  for (int e = 1; e <= 6; ++e) {
    Word w = Word::letter(Generator("x1"), e);
    MembershipResult m = normal_closure_member(w, c2);
    bool truth = oracle::cyclic_trivial(w, "x1", 2);
    CHECK(m.answer != Membership::Inconclusive);
    CHECK((m.answer == Membership::Yes) == truth);
    CHECK(m.method == "coset-index");
  }

  MembershipResult free = normal_closure_member(W("x"), P("gens: x y"), 100);
  CHECK(free.answer == Membership::No);
  CHECK(free.method == "dehn");
  MembershipResult open = normal_closure_member(W("y"), P("gens: x y\nrel: x^2"), 100);
  CHECK(open.answer == Membership::Inconclusive);
  CHECK(open.method == "none");
  CHECK_THROWS_AS(normal_closure_member(W("z"), surf), InvalidArgument);
  CHECK(open.serialize().find("answer: inconclusive") == 0);
}

TEST_CASE("miller soundness") {
  Presentation seed = P("gens: y1 y2\nrel: y1");
  Presentation m({Generator("x"), Generator("y")}, miller_sigma(seed, W("y2")));
  CHECK(certify_trivial(m, 100000) == Certificate::Inconclusive);
}

TEST_CASE("pipeline report") {
  Presentation seed = P("gens: y1\nrel: y1");
  PipelineReport a = pipeline_gamma(default_gamma_input(seed, W("y1"), 1), 1000);
  std::string text = a.serialize();
  CHECK(text.find("gamma-relators: 34\n") != std::string::npos);
  CHECK(text.find("count-matches: yes\n") != std::string::npos);
  CHECK(text.find("intermediate-betti: 0\n") != std::string::npos);
  CHECK(text == pipeline_gamma(default_gamma_input(seed, W("y1"), 1), 1000).serialize());
  PipelineReport b = pipeline_gamma(default_gamma_input(seed, W("y1 y1^-1"), 1), 1000);
  CHECK(b.result.gamma.presentation.relators().size() == 34);
}
