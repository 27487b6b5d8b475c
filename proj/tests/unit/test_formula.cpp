#include <doctest.h>

#include <random>

#include "focq/formula.hpp"
#include "focq/kif.hpp"
#include "oracles.hpp"

using namespace focq;

namespace {

Formula k(const char* text) { return kif::parse_formula(text); }

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equal: return true;
    case Formula::Kind::Not: return f.child(0).is_atomic();
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: return false;
    default:
      for (const auto& c : f.children())
        if (!is_nnf(c)) return false;
      return true;
  }
}

}  // namespace

TEST_CASE("conjunctions flatten on construction") {
  auto a = Formula::atom("p", {Term::constant("A")});
  auto b = Formula::atom("q", {Term::constant("B")});
  auto c = Formula::atom("r", {Term::constant("C")});
  auto f = Formula::conjunction({Formula::conjunction({a, b}), c});
  CHECK(f.children().size() == 3);
  CHECK_THROWS_AS(Formula::conjunction({a}), std::invalid_argument);
  CHECK(Formula::equal(Term::constant("A"), Term::constant("B")).kind() == Formula::Kind::Equal);
}

TEST_CASE("free variables in order of first occurrence") {
  auto f = k("(and (p ?Y ?X) (exists (?Z) (q ?Z ?X ?W)))");
  CHECK(free_variables_ordered(f) == std::vector<std::string>{"Y", "X", "W"});
  auto closed = universal_closure(f);
  CHECK(closed.kind() == Formula::Kind::Forall);
  CHECK(closed.variables() == std::vector<std::string>{"Y", "X", "W"});
  CHECK(free_variables(closed).empty());
  auto g = k("(p A)");
  CHECK(universal_closure(g) == g);
}

TEST_CASE("nnf of the worked implications") {
  // not (a => b)  ==  a & ~b
  CHECK(nnf(k("(not (=> (p ?X) (q ?X)))")) == k("(and (p ?X) (not (q ?X)))"));
  // not exists  ==  forall not
  CHECK(nnf(k("(not (exists (?X) (and (instance ?X A) (instance ?X B))))")) ==
        k("(forall (?X) (or (not (instance ?X A)) (not (instance ?X B))))"));
  CHECK(nnf(k("(not (not (p A)))")) == k("(p A)"));
}

TEST_CASE("nnf preserves truth on random finite structures") {
  std::mt19937 rng(7);
  oracle::FormulaGen gen{rng};
  for (int i = 0; i < 300; ++i) {
    auto f = universal_closure(gen.formula({}, 4));
    auto g = nnf(f);
    CHECK(is_nnf(g));
    oracle::Signature sig;
    oracle::collect(f, sig);
    for (int trial = 0; trial < 4; ++trial) {
      auto m = oracle::random_structure(rng, 1 + trial % 3, sig);
      CHECK(oracle::holds(f, m) == oracle::holds(g, m));
      auto nf = nnf(Formula::negation(f));
      CHECK(oracle::holds(nf, m) == !oracle::holds(f, m));
    }
  }
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equivalent(k("(forall (?X) (p ?X ?Z))"), k("(forall (?Y) (p ?Y ?Z))")));
  CHECK_FALSE(alpha_equivalent(k("(forall (?X) (p ?X ?Z))"), k("(forall (?Y) (p ?Y ?W))")));
  CHECK_FALSE(alpha_equivalent(k("(forall (?X ?Y) (p ?X ?Y))"), k("(forall (?X ?Y) (p ?Y ?X))")));
  CHECK(alpha_equivalent(k("(exists (?A) (exists (?B) (r ?A ?B)))"), k("(exists (?B) (exists (?A) (r ?B ?A)))")));
}

TEST_CASE("symbols exclude equality and variables") {
  auto s = symbols(k("(=> (instance ?X Human) (equal (MotherFn ?X) Eve))"));
  CHECK(s == std::set<std::string>{"instance", "Human", "MotherFn", "Eve"});
}
