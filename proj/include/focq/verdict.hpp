#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "focq/cqgen.hpp"
#include "focq/prover_result.hpp"

namespace focq {

enum class Classification { Passing, NonPassing, Unknown };

std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view s);

struct Verdict {
  std::string cq_id;
  Polarity polarity = Polarity::TruthTest;
  Classification classification = Classification::Unknown;
  // Unknown truth-tests count as non-passing, unknown falsity-tests as passing.
  Classification effective = Classification::NonPassing;
  SzsStatus szs = SzsStatus::NoStatus;
  double wall_seconds = 0.0;
  std::vector<std::string> used_axioms;
  // Set for Error / NoStatus: the prover run itself needs attention.
  bool flagged = false;
};

Verdict classify(Polarity polarity, const ProverResult& result, std::string cq_id = {});

}  // namespace focq
