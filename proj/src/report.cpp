#include "focq/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "focq/errors.hpp"

namespace focq::report {

Family family_of(PatternKind k) {
  switch (k) {
    case PatternKind::AntonymClass:
    case PatternKind::AntonymAttribute: return Family::Antonym;
    case PatternKind::RelationAgent:
    case PatternKind::RelationResult:
    case PatternKind::RelationInstrument: return Family::Relation;
    case PatternKind::Event1_EqEq: return Family::Event1;
    case PatternKind::Event2_EqSub: return Family::Event2;
    case PatternKind::Event3_SubSub: return Family::Event3;
    case PatternKind::Creative: return Family::Creative;
  }
  return Family::Creative;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Antonym: return "antonym";
    case Family::Relation: return "relation";
    case Family::Event1: return "event1";
    case Family::Event2: return "event2";
    case Family::Event3: return "event3";
    case Family::Creative: return "creative";
  }
  return "?";
}

std::string_view label(Family f) {
  switch (f) {
    case Family::Antonym: return "Antonym pattern";
    case Family::Relation: return "Relation pattern";
    case Family::Event1: return "Event pattern #1";
    case Family::Event2: return "Event pattern #2";
    case Family::Event3: return "Event pattern #3";
    case Family::Creative: return "Creative";
  }
  return "?";
}

std::optional<double> Row::mean_passing() const {
  if (passing == 0) return std::nullopt;
  return passing_seconds / static_cast<double>(passing);
}

std::optional<double> Row::mean_non_passing() const {
  if (non_passing == 0) return std::nullopt;
  return non_passing_seconds / static_cast<double>(non_passing);
}

namespace {

constexpr Family kGenerated[] = {Family::Antonym, Family::Relation, Family::Event1, Family::Event2, Family::Event3};

std::size_t row_index(const Report& r, Polarity p, std::optional<Family> f) {
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    if (r.rows[i].polarity == p && r.rows[i].family == f) return i;
  return r.rows.size();
}

void count(Row& row, const Verdict& v) {
  switch (v.classification) {
    case Classification::Passing:
      ++row.passing;
      row.passing_seconds += v.wall_seconds;
      break;
    case Classification::NonPassing:
      ++row.non_passing;
      row.non_passing_seconds += v.wall_seconds;
      break;
    case Classification::Unknown: ++row.unknown; break;
  }
}

std::string with_commas(long n) {
  auto s = std::to_string(n < 0 ? -n : n);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(static_cast<std::size_t>(i), ",");
  return n < 0 ? "-" + s : s;
}

std::string row_label(const Row& row) {
  std::string base = row.family ? "  " + std::string(label(*row.family))
                                : (row.polarity == Polarity::TruthTest ? "Truth-tests" : "Falsity-tests");
  return base + " (" + with_commas(row.corpus) + ")";
}

}  // namespace

Report summarize(std::span<const Verdict> verdicts, std::span<const CompetencyQuestion> corpus,
                 std::optional<double> time_limit_seconds) {
  Report r;
  r.time_limit_seconds = time_limit_seconds;
  std::map<std::string, const CompetencyQuestion*> by_id;
  bool creative = false;
  for (const auto& cq : corpus) {
    by_id.emplace(cq.id, &cq);
    creative = creative || cq.pattern == PatternKind::Creative;
  }
  for (const auto& [id, _] : by_id) r.corpus_ids.push_back(id);

  for (auto p : {Polarity::TruthTest, Polarity::FalsityTest}) {
    r.rows.push_back(Row{p, std::nullopt});
    for (auto f : kGenerated) r.rows.push_back(Row{p, f});
    if (creative) r.rows.push_back(Row{p, Family::Creative});
  }
  for (const auto& [id, cq] : by_id) {
    ++r.rows[row_index(r, cq->polarity, std::nullopt)].corpus;
    ++r.rows[row_index(r, cq->polarity, family_of(cq->pattern))].corpus;
  }
  for (const auto& v : verdicts) {
    auto it = by_id.find(v.cq_id);
    if (it == by_id.end()) throw Error("UnresolvedCqId", "verdict for unknown CQ '" + v.cq_id + "'");
    const auto* cq = it->second;
    count(r.rows[row_index(r, cq->polarity, std::nullopt)], v);
    count(r.rows[row_index(r, cq->polarity, family_of(cq->pattern))], v);
    r.classifications[v.cq_id] = v.classification;
  }
  return r;
}

std::string format_mean(std::optional<double> seconds) {
  if (!seconds) return "--";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *seconds);
  return buf;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-32s %8s %8s %8s %10s %10s\n", "Tests", "P", "N", "U", "t(P)", "t(N)");
  out << line;
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "%-32s %8s %8s %8s %10s %10s%s\n", row_label(row).c_str(),
                  with_commas(row.passing).c_str(), with_commas(row.non_passing).c_str(),
                  with_commas(row.unknown).c_str(), format_mean(row.mean_passing()).c_str(),
                  format_mean(row.mean_non_passing()).c_str(), row.conserved() ? "" : "  ! P+N+U != corpus");
    out << line;
  }
  if (r.time_limit_seconds) {
    out << "Times are mean wall-clock seconds; unknown CQs ran for the full limit of "
        << format_mean(r.time_limit_seconds) << " s.\n";
  }
  return out.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "polarity,family,corpus,P,N,U,t_P,t_N,conserved\n";
  for (const auto& row : r.rows) {
    out << to_string(row.polarity) << ',' << (row.family ? to_string(*row.family) : "total") << ',' << row.corpus
        << ',' << row.passing << ',' << row.non_passing << ',' << row.unknown << ','
        << format_mean(row.mean_passing()) << ',' << format_mean(row.mean_non_passing()) << ','
        << (row.conserved() ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::json render_json(const Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    auto mean = [](std::optional<double> m) { return m ? nlohmann::json(std::stod(format_mean(m))) : nlohmann::json(); };
    rows.push_back({{"polarity", to_string(row.polarity)},
                    {"family", row.family ? std::string(to_string(*row.family)) : "total"},
                    {"corpus", row.corpus},
                    {"P", row.passing},
                    {"N", row.non_passing},
                    {"U", row.unknown},
                    {"t_P", mean(row.mean_passing())},
                    {"t_N", mean(row.mean_non_passing())},
                    {"conserved", row.conserved()}});
  }
  nlohmann::json j{{"rows", rows}};
  if (r.time_limit_seconds) j["time_limit_seconds"] = *r.time_limit_seconds;
  return j;
}

Delta diff_reports(const Report& a, const Report& b) {
  if (a.corpus_ids != b.corpus_ids) throw Error("CorpusMismatch", "reports cover different CQ corpora");
  Delta d;
  for (const auto& rb : b.rows) {
    const auto i = row_index(a, rb.polarity, rb.family);
    const Row ra = i < a.rows.size() ? a.rows[i] : Row{rb.polarity, rb.family};
    RowDelta rd{rb.polarity, rb.family, rb.passing - ra.passing, rb.non_passing - ra.non_passing,
                rb.unknown - ra.unknown};
    if (rd.passing || rd.non_passing || rd.unknown) d.rows.push_back(rd);
  }
  for (const auto& id : a.corpus_ids) {
    auto ia = a.classifications.find(id);
    auto ib = b.classifications.find(id);
    const auto ca = ia == a.classifications.end() ? Classification::Unknown : ia->second;
    const auto cb = ib == b.classifications.end() ? Classification::Unknown : ib->second;
    if (ca != cb) d.flips.push_back(Flip{id, ca, cb});
  }
  return d;
}

std::string render_delta(const Delta& d) {
  std::ostringstream out;
  if (d.empty()) {
    out << "no differences\n";
    return out.str();
  }
  auto signed_num = [](long n) { return (n > 0 ? "+" : "") + std::to_string(n); };
  for (const auto& r : d.rows) {
    out << (r.family ? std::string(label(*r.family)) : std::string("total")) << " [" << to_string(r.polarity)
        << "]: P " << signed_num(r.passing) << ", N " << signed_num(r.non_passing) << ", U " << signed_num(r.unknown)
        << '\n';
  }
  for (const auto& f : d.flips) out << "flip " << f.cq_id << ": " << to_string(f.from) << " -> " << to_string(f.to) << '\n';
  return out.str();
}

}  // namespace focq::report
