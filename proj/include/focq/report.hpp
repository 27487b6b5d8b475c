#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "focq/cqgen.hpp"
#include "focq/verdict.hpp"

namespace focq::report {

// Row groups of the evaluation table.
enum class Family { Antonym, Relation, Event1, Event2, Event3, Creative };

Family family_of(PatternKind k);
std::string_view to_string(Family f);
std::string_view label(Family f);  // "Antonym pattern", "Event pattern #1", ...

struct Row {
  Polarity polarity = Polarity::TruthTest;
  std::optional<Family> family;  // empty for the per-polarity totals row
  long corpus = 0;               // CQs of the corpus falling in this row
  long passing = 0;
  long non_passing = 0;
  long unknown = 0;
  double passing_seconds = 0.0;      // sums of wall_seconds
  double non_passing_seconds = 0.0;

  std::optional<double> mean_passing() const;
  std::optional<double> mean_non_passing() const;
  // P + N + U == corpus
  bool conserved() const { return passing + non_passing + unknown == corpus; }
};

struct Report {
  std::vector<Row> rows;  // per polarity: totals row first, then families
  std::map<std::string, Classification> classifications;
  std::vector<std::string> corpus_ids;  // sorted
  // Unknown CQs implicitly ran for the whole limit; shown as a note.
  std::optional<double> time_limit_seconds;
};

// Throws focq::Error("UnresolvedCqId") for verdicts outside the corpus.
Report summarize(std::span<const Verdict> verdicts, std::span<const CompetencyQuestion> corpus,
                 std::optional<double> time_limit_seconds = std::nullopt);

// "--" when absent, otherwise two decimals.
std::string format_mean(std::optional<double> seconds);

std::string render_text(const Report& r);
std::string render_csv(const Report& r);
nlohmann::json render_json(const Report& r);

struct RowDelta {
  Polarity polarity = Polarity::TruthTest;
  std::optional<Family> family;
  long passing = 0;
  long non_passing = 0;
  long unknown = 0;
};

struct Flip {
  std::string cq_id;
  Classification from = Classification::Unknown;
  Classification to = Classification::Unknown;
};

struct Delta {
  std::vector<RowDelta> rows;  // only rows whose counts changed
  std::vector<Flip> flips;     // sorted by cq id

  bool empty() const { return rows.empty() && flips.empty(); }
};

// b relative to a. Throws focq::Error("CorpusMismatch") when the corpora differ.
Delta diff_reports(const Report& a, const Report& b);

std::string render_delta(const Delta& d);

}  // namespace focq::report
