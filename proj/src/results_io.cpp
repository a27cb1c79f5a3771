#include "duelbench/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "duelbench/error.hpp"

namespace duelbench {
namespace {

std::string format_g(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_matrix_csv(std::ostream& os, const PreferenceMatrix& pm) {
  for (std::size_t i = 0; i < pm.size(); ++i) {
    for (std::size_t j = 0; j < pm.size(); ++j) {
      if (j) os << ',';
      os << format_g(pm.at(i, j), 17);
    }
    os << '\n';
  }
}

PreferenceMatrix read_matrix_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell = trim(cell);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) {
        throw ValidationError("matrix line " + std::to_string(lineno) + ": bad number '" + cell +
                              "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return PreferenceMatrix::validate(rows);
}

void write_results_csv(std::ostream& os, const std::vector<RunResult>& runs) {
  os << "policy,game,iteration,round,cum_regret\n";
  for (const auto& r : runs) {
    for (const auto& c : r.checkpoints) {
      os << r.policy << ',' << r.game << ',' << r.iteration << ',' << c.round << ','
         << format_g(c.cum_regret, 10) << '\n';
    }
  }
}

nlohmann::json summary_json(const std::map<std::string, PolicySummary>& summaries) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, s] : summaries) {
    j[name] = {{"rounds", s.rounds},
               {"mean", s.mean},
               {"p25", s.p25},
               {"p75", s.p75},
               {"final_winner_accuracy", s.final_winner_accuracy}};
  }
  return j;
}

nlohmann::json sweep_summary_json(const std::vector<ExperimentResult>& results,
                                  const std::vector<std::string>& policy_order) {
  nlohmann::json arms = nlohmann::json::array();
  nlohmann::json finals = nlohmann::json::array();
  nlohmann::json per_k = nlohmann::json::object();
  for (const auto& res : results) {
    arms.push_back(res.arms);
    for (const auto& name : policy_order) {
      const auto it = res.summaries.find(name);
      if (it == res.summaries.end() || it->second.mean.empty()) continue;
      finals.push_back({{"policy", name},
                        {"k", res.arms},
                        {"final_mean_regret", it->second.mean.back()},
                        {"final_p25", it->second.p25.back()},
                        {"final_p75", it->second.p75.back()}});
    }
    per_k[std::to_string(res.arms)] = summary_json(res.summaries);
  }
  return {{"sweep", {{"arms", arms}, {"policies", policy_order}, {"final_regret", finals}}},
          {"per_k", per_k}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw RuntimeError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeError("cannot write " + path.string());
  out << contents;
  if (!out) throw RuntimeError("write failed for " + path.string());
}

void write_experiment(const std::filesystem::path& dir, const ExperimentResult& result) {
  std::ostringstream csv;
  write_results_csv(csv, result.runs);
  write_file(dir / "results.csv", csv.str());
  write_file(dir / "summary.json", summary_json(result.summaries).dump(2) + "\n");
  for (std::size_t g = 0; g < result.instances.size(); ++g) {
    std::ostringstream m;
    write_matrix_csv(m, result.instances[g]);
    char name[32];
    std::snprintf(name, sizeof name, "game_%03zu.csv", g);
    write_file(dir / "instances" / name, m.str());
  }
}

}  // namespace duelbench
