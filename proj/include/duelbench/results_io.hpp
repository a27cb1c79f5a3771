#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "duelbench/experiment.hpp"
#include "duelbench/preference_matrix.hpp"

namespace duelbench {

/// K lines of K comma-separated probabilities, no header. Values are written
/// with 17 significant digits so a reload reproduces the matrix exactly.
void write_matrix_csv(std::ostream& os, const PreferenceMatrix& pm);

/// Parses the matrix CSV format and applies PreferenceMatrix::validate.
PreferenceMatrix read_matrix_csv(std::istream& is);

/// Header `policy,game,iteration,round,cum_regret`, one row per checkpoint,
/// regret with 10 significant digits.
void write_results_csv(std::ostream& os, const std::vector<RunResult>& runs);

/// policy -> {rounds, mean, p25, p75, final_winner_accuracy}
nlohmann::json summary_json(const std::map<std::string, PolicySummary>& summaries);

/// Sweep summary: the ordered arm list, one final mean regret entry per
/// (policy, K), and the per-K run summaries.
nlohmann::json sweep_summary_json(const std::vector<ExperimentResult>& results,
                                  const std::vector<std::string>& policy_order);

/// Writes results.csv, summary.json and instances/game_NNN.csv under dir.
void write_experiment(const std::filesystem::path& dir, const ExperimentResult& result);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace duelbench
