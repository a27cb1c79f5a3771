#include "duelbench/config.hpp"

#include <cstdio>
#include <sstream>
#include <map>

#include "duelbench/error.hpp"

namespace duelbench {
namespace {

struct Value {
  std::vector<std::string> items;  // raw scalar tokens; one entry unless is_list
  bool is_list = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

class Parser {
 public:
  explicit Parser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("config line " + std::to_string(line_) + ": " + msg);
  }

  Value value(const std::string& raw) const {
    Value v;
    if (!raw.empty() && raw.front() == '[') {
      if (raw.back() != ']') fail("unterminated list");
      v.is_list = true;
      std::stringstream ss(raw.substr(1, raw.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) v.items.push_back(item);
      }
      return v;
    }
    v.items.push_back(raw);
    return v;
  }

  std::string scalar(const Value& v) const {
    if (v.is_list) fail("expected a single value, got a list");
    return v.items.front();
  }

  std::string string_of(const std::string& tok) const {
    if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') {
      return tok.substr(1, tok.size() - 2);
    }
    return tok;
  }

  std::uint64_t integer(const std::string& tok) const {
    std::size_t used = 0;
    unsigned long long x = 0;
    try {
      if (!tok.empty() && tok.front() == '-') fail("expected a nonnegative integer, got '" + tok + "'");
      x = std::stoull(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) fail("expected an integer, got '" + tok + "'");
    return x;
  }

  double real(const std::string& tok) const {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) fail("expected a number, got '" + tok + "'");
    return x;
  }

  bool boolean(const std::string& tok) const {
    if (tok == "true") return true;
    if (tok == "false") return false;
    fail("expected true or false, got '" + tok + "'");
  }

 private:
  std::size_t line_;
};

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CliConfig parse_config(const std::string& text) {
  CliConfig cfg;
  ExperimentConfig& ex = cfg.experiment;
  std::map<std::string, PolicySpec> params;
  std::string section;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const Parser p(lineno);
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string::npos) {
      if (line.back() != ']') p.fail("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "sup-klucb" && section != "rucb" && section != "dts" &&
          section != "random") {
        p.fail("unknown section [" + section + "]");
      }
      params[section].name = section;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) p.fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const Value v = p.value(trim(line.substr(eq + 1)));

    if (!section.empty()) {
      PolicySpec& spec = params[section];
      if (section == "sup-klucb" && key == "c1") {
        spec.c1 = p.real(p.scalar(v));
        if (!(spec.c1 > 0.0)) p.fail("c1 must be > 0");
      } else if (section == "sup-klucb" && key == "c2") {
        spec.c2 = p.real(p.scalar(v));
        if (!(spec.c2 >= 0.0)) p.fail("c2 must be >= 0");
      } else if ((section == "rucb" || section == "dts") && key == "alpha") {
        spec.alpha = p.real(p.scalar(v));
        if (!(spec.alpha > 0.5)) p.fail("alpha must be > 0.5");
      } else {
        p.fail("unknown key '" + key + "' in [" + section + "]");
      }
      continue;
    }

    if (key == "seed") {
      ex.seed = p.integer(p.scalar(v));
    } else if (key == "horizon") {
      ex.horizon = p.integer(p.scalar(v));
    } else if (key == "arms") {
      ex.arms.clear();
      for (const auto& tok : v.items) ex.arms.push_back(p.integer(tok));
    } else if (key == "games") {
      ex.games = p.integer(p.scalar(v));
    } else if (key == "iterations") {
      ex.iterations = p.integer(p.scalar(v));
    } else if (key == "min_gap") {
      ex.min_gap = p.real(p.scalar(v));
    } else if (key == "checkpoints") {
      ex.checkpoints = p.integer(p.scalar(v));
    } else if (key == "max_attempts") {
      ex.max_attempts = p.integer(p.scalar(v));
    } else if (key == "threads") {
      ex.threads = p.integer(p.scalar(v));
    } else if (key == "serial") {
      ex.serial = p.boolean(p.scalar(v));
    } else if (key == "out") {
      cfg.out_dir = p.string_of(p.scalar(v));
    } else if (key == "policies") {
      ex.policies.clear();
      for (const auto& tok : v.items) ex.policies.push_back({p.string_of(tok)});
    } else {
      p.fail("unknown key '" + key + "'");
    }
  }
  for (auto& spec : ex.policies) {
    const auto it = params.find(spec.name);
    if (it != params.end()) spec = it->second;
  }
  return cfg;
}

std::string to_config_text(const CliConfig& config) {
  const ExperimentConfig& ex = config.experiment;
  std::ostringstream os;
  os << "seed = " << ex.seed << '\n';
  os << "horizon = " << ex.horizon << '\n';
  os << "arms = [";
  for (std::size_t i = 0; i < ex.arms.size(); ++i) os << (i ? ", " : "") << ex.arms[i];
  os << "]\n";
  os << "games = " << ex.games << '\n';
  os << "iterations = " << ex.iterations << '\n';
  os << "min_gap = " << fmt_real(ex.min_gap) << '\n';
  os << "checkpoints = " << ex.checkpoints << '\n';
  os << "max_attempts = " << ex.max_attempts << '\n';
  os << "policies = [";
  for (std::size_t i = 0; i < ex.policies.size(); ++i) {
    os << (i ? ", " : "") << '"' << ex.policies[i].name << '"';
  }
  os << "]\n";
  os << "out = \"" << config.out_dir << "\"\n";
  for (const auto& spec : ex.policies) {
    if (spec.name == "sup-klucb" && (spec.c1 > 0.0 || spec.c2 >= 0.0)) {
      os << "\n[sup-klucb]\n";
      if (spec.c1 > 0.0) os << "c1 = " << fmt_real(spec.c1) << '\n';
      if (spec.c2 >= 0.0) os << "c2 = " << fmt_real(spec.c2) << '\n';
    } else if ((spec.name == "rucb" || spec.name == "dts") && spec.alpha > 0.0) {
      os << "\n[" << spec.name << "]\nalpha = " << fmt_real(spec.alpha) << '\n';
    }
  }
  return os.str();
}

}  // namespace duelbench
