#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace focq {

enum class SzsStatus { Theorem, CounterSatisfiable, Satisfiable, Timeout, GaveUp, ResourceOut, Error, NoStatus };

inline constexpr SzsStatus kAllSzsStatuses[] = {
    SzsStatus::Theorem, SzsStatus::CounterSatisfiable, SzsStatus::Satisfiable, SzsStatus::Timeout,
    SzsStatus::GaveUp,  SzsStatus::ResourceOut,        SzsStatus::Error,       SzsStatus::NoStatus,
};

std::string_view to_string(SzsStatus s);
// Inverse of to_string; throws focq::Error on unknown names.
SzsStatus szs_from_string(std::string_view name);

struct ProverResult {
  SzsStatus szs = SzsStatus::NoStatus;
  double wall_seconds = 0.0;
  // Time reported by the prover itself, when its output states one.
  std::optional<double> prover_seconds;
  // Non-empty only for Theorem results with a proof block.
  std::vector<std::string> used_axioms;
  std::string raw_output_path;
};

}  // namespace focq
