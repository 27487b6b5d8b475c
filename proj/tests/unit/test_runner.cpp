#include <doctest.h>

#include <chrono>
#include <fstream>
#include <thread>

#include "focq/errors.hpp"
#include "focq/runner.hpp"
#include "focq/store.hpp"
#include "helpers.hpp"

using namespace focq;
using namespace focq::runner;
using testing_support::TempDir;
using testing_support::spit;

namespace {

const char* kTheorem =
    "fof(a, axiom, ![X]: (s__p(X) => s__q(X))).\n"
    "fof(b, axiom, s__p(s__c)).\n"
    "fof(goal, conjecture, s__q(s__c)).\n";
const char* kOpen =
    "fof(a, axiom, ![X]: (s__p(X) => s__q(X))).\n"
    "fof(goal, conjecture, s__q(s__c)).\n";

std::vector<ProblemFile> write_problems(const TempDir& tmp, int n) {
  std::vector<ProblemFile> out;
  for (int i = 0; i < n; ++i) {
    auto id = "cq_" + std::to_string(i);
    spit(tmp / ("problems/" + id + ".p"), i % 2 ? kOpen : kTheorem);
    out.push_back({id, tmp / ("problems/" + id + ".p")});
  }
  return out;
}

RunnerConfig external(const TempDir& tmp, const std::string& cmd, double timeout = 20) {
  RunnerConfig c;
  c.backend = RunnerConfig::Backend::External;
  c.command_template = cmd;
  c.timeout_seconds = timeout;
  c.output_dir = tmp / "out";
  return c;
}

}  // namespace

TEST_CASE("command expansion and validation") {
  CHECK(expand_command("prove {problem} -t {timeout}", "/tmp/a b's.p", 2.1) == "prove '/tmp/a b'\\''s.p' -t 3");
  CHECK(expand_command("x {problem} {problem} {timeout}", "p", 600) == "x 'p' 'p' 600");
  RunnerConfig c;
  c.command_template = "prove {problem}";
  CHECK_THROWS_AS(c.validate(), Error);
  c.command_template = "prove {problem} {timeout}";
  c.validate();
  c.max_parallel = 0;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("external prover through the command line tool") {
  TempDir tmp;
  auto ps = write_problems(tmp, 2);
  auto cfg = external(tmp, testing_support::cli() + " prove {problem} --timeout {timeout}");
  auto r = run_one(ps[0], cfg);
  CHECK(r.szs == SzsStatus::Theorem);
  CHECK(r.used_axioms == std::vector<std::string>{"a", "b"});
  CHECK(std::filesystem::exists(r.raw_output_path));
  CHECK(run_one(ps[1], cfg).szs == SzsStatus::GaveUp);

  // Builtin backend agrees.
  cfg.backend = RunnerConfig::Backend::Builtin;
  CHECK(run_one(ps[0], cfg).szs == SzsStatus::Theorem);
  CHECK(run_one(ps[1], cfg).szs == SzsStatus::GaveUp);
}

TEST_CASE("status of misbehaving provers") {
  TempDir tmp;
  auto ps = write_problems(tmp, 1);
  CHECK(run_one(ps[0], external(tmp, "echo nothing useful # {problem} {timeout}")).szs == SzsStatus::NoStatus);
  CHECK(run_one(ps[0], external(tmp, "exit 3 # {problem} {timeout}")).szs == SzsStatus::Error);
  CHECK(run_one(ps[0], external(tmp, "no-such-prover-binary {problem} {timeout}")).szs == SzsStatus::Error);
  CHECK(run_one(ps[0], external(tmp, "echo '% SZS status CounterSatisfiable for cq_0' # {problem} {timeout}")).szs ==
        SzsStatus::CounterSatisfiable);
}

TEST_CASE("timeouts kill the whole process group") {
  TempDir tmp;
  auto ps = write_problems(tmp, 1);
  auto marker = tmp / "survived";
  // The shell forks a grandchild that would write the marker late.
  auto cfg = external(tmp, "(sleep 3; touch " + testing_support::quote(marker) + ") & sleep 30 # {problem} {timeout}", 1);
  const auto t0 = std::chrono::steady_clock::now();
  auto r = run_one(ps[0], cfg);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.szs == SzsStatus::Timeout);
  CHECK(r.wall_seconds >= 1.0);
  CHECK(elapsed < 2.5);
  std::this_thread::sleep_for(std::chrono::milliseconds(3500));
  CHECK_FALSE(std::filesystem::exists(marker));
}

TEST_CASE("journal: resume, torn lines, parallelism") {
  TempDir tmp;
  auto ps = write_problems(tmp, 6);
  auto cfg = external(tmp, "sleep 0.3; " + testing_support::cli() + " prove {problem} --timeout {timeout}");
  cfg.journal = tmp / "journal.jsonl";
  cfg.max_parallel = 3;

  std::vector<ProblemFile> first(ps.begin(), ps.begin() + 2);
  auto s1 = run_corpus(first, cfg);
  CHECK(s1.executed == 2);
  CHECK(read_journal(cfg.journal).size() == 2);

  // Simulate a crash in the middle of a write.
  {
    std::ofstream(cfg.journal, std::ios::app) << "{\"schema_version\": 1, \"cq_id\": \"cq_";
  }
  CHECK(read_journal(cfg.journal).size() == 2);

  auto s2 = run_corpus(ps, cfg);
  CHECK(s2.skipped == 2);
  CHECK(s2.executed == 4);
  CHECK(s2.peak_parallel <= 3);
  CHECK(s2.peak_parallel >= 2);
  REQUIRE(s2.results.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(s2.results[i].cq_id == "cq_" + std::to_string(i));
    CHECK(s2.results[i].result.szs == (i % 2 ? SzsStatus::GaveUp : SzsStatus::Theorem));
  }
  auto s3 = run_corpus(ps, cfg);
  CHECK(s3.executed == 0);
  CHECK(s3.skipped == 6);

  // A malformed line that is not the last one is an error.
  testing_support::spit(tmp / "bad.jsonl", "not json\n" + to_json(s2.results[0]).dump() + "\n");
  CHECK_THROWS_AS(read_journal(tmp / "bad.jsonl"), MalformedLine);

  auto rec = record_from_json(to_json(s2.results[0]));
  CHECK(rec.cq_id == s2.results[0].cq_id);
  CHECK(rec.result.szs == s2.results[0].result.szs);
  CHECK(rec.result.used_axioms == s2.results[0].result.used_axioms);
}

TEST_CASE("discover") {
  TempDir tmp;
  write_problems(tmp, 3);
  spit(tmp / "problems/readme.txt", "x");
  auto found = discover(tmp / "problems");
  REQUIRE(found.size() == 3);
  CHECK(found[2].cq_id == "cq_2");
  CHECK_THROWS(discover(tmp / "missing"));
}
