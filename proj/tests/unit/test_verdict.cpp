#include <doctest.h>

#include "focq/verdict.hpp"

using namespace focq;

namespace {

struct Cell {
  Polarity polarity;
  SzsStatus szs;
  Classification classification;
  Classification effective;
  bool flagged;
};

// Written out by hand rather than derived from the implementation.
const Cell kTable[] = {
    {Polarity::TruthTest, SzsStatus::Theorem, Classification::Passing, Classification::Passing, false},
    {Polarity::TruthTest, SzsStatus::CounterSatisfiable, Classification::NonPassing, Classification::NonPassing, false},
    {Polarity::TruthTest, SzsStatus::Satisfiable, Classification::Unknown, Classification::NonPassing, false},
    {Polarity::TruthTest, SzsStatus::Timeout, Classification::Unknown, Classification::NonPassing, false},
    {Polarity::TruthTest, SzsStatus::GaveUp, Classification::Unknown, Classification::NonPassing, false},
    {Polarity::TruthTest, SzsStatus::ResourceOut, Classification::Unknown, Classification::NonPassing, false},
    {Polarity::TruthTest, SzsStatus::Error, Classification::Unknown, Classification::NonPassing, true},
    {Polarity::TruthTest, SzsStatus::NoStatus, Classification::Unknown, Classification::NonPassing, true},
    {Polarity::FalsityTest, SzsStatus::Theorem, Classification::NonPassing, Classification::NonPassing, false},
    {Polarity::FalsityTest, SzsStatus::CounterSatisfiable, Classification::Passing, Classification::Passing, false},
    {Polarity::FalsityTest, SzsStatus::Satisfiable, Classification::Unknown, Classification::Passing, false},
    {Polarity::FalsityTest, SzsStatus::Timeout, Classification::Unknown, Classification::Passing, false},
    {Polarity::FalsityTest, SzsStatus::GaveUp, Classification::Unknown, Classification::Passing, false},
    {Polarity::FalsityTest, SzsStatus::ResourceOut, Classification::Unknown, Classification::Passing, false},
    {Polarity::FalsityTest, SzsStatus::Error, Classification::Unknown, Classification::Passing, true},
    {Polarity::FalsityTest, SzsStatus::NoStatus, Classification::Unknown, Classification::Passing, true},
};

}  // namespace

TEST_CASE("classification table") {
  for (const auto& c : kTable) {
    CAPTURE(to_string(c.szs));
    CAPTURE(to_string(c.polarity));
    ProverResult r;
    r.szs = c.szs;
    r.wall_seconds = 1.5;
    r.used_axioms = {"a1"};
    auto v = classify(c.polarity, r, "cq_x");
    CHECK(v.classification == c.classification);
    CHECK(v.effective == c.effective);
    CHECK(v.flagged == c.flagged);
    CHECK(v.cq_id == "cq_x");
    CHECK(v.wall_seconds == 1.5);
    CHECK(v.used_axioms == std::vector<std::string>{"a1"});
  }
}

TEST_CASE("classification names round trip") {
  for (auto c : {Classification::Passing, Classification::NonPassing, Classification::Unknown})
    CHECK(classification_from_string(to_string(c)) == c);
  CHECK_THROWS(classification_from_string("maybe"));
  for (auto s : kAllSzsStatuses) CHECK(szs_from_string(to_string(s)) == s);
}
