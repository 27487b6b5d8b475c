#include "focq/verdict.hpp"

#include "focq/errors.hpp"

namespace focq {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Passing: return "passing";
    case Classification::NonPassing: return "non_passing";
    case Classification::Unknown: return "unknown";
  }
  return "?";
}

Classification classification_from_string(std::string_view s) {
  for (auto c : {Classification::Passing, Classification::NonPassing, Classification::Unknown})
    if (to_string(c) == s) return c;
  throw Error("BadClassification", "unknown classification '" + std::string(s) + "'");
}

Verdict classify(Polarity polarity, const ProverResult& result, std::string cq_id) {
  Verdict v;
  v.cq_id = std::move(cq_id);
  v.polarity = polarity;
  v.szs = result.szs;
  v.wall_seconds = result.wall_seconds;
  v.used_axioms = result.used_axioms;
  v.flagged = result.szs == SzsStatus::Error || result.szs == SzsStatus::NoStatus;

  const bool truth = polarity == Polarity::TruthTest;
  switch (result.szs) {
    case SzsStatus::Theorem:
      v.classification = truth ? Classification::Passing : Classification::NonPassing;
      break;
    case SzsStatus::CounterSatisfiable:
      v.classification = truth ? Classification::NonPassing : Classification::Passing;
      break;
    default:
      v.classification = Classification::Unknown;
  }
  if (v.classification == Classification::Unknown) {
    v.effective = truth ? Classification::NonPassing : Classification::Passing;
  } else {
    v.effective = v.classification;
  }
  return v;
}

}  // namespace focq
