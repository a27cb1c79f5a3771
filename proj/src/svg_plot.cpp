#include "duelbench/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "duelbench/error.hpp"

namespace duelbench {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 160.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> lo;
  std::vector<double> hi;
};

struct Style {
  const char* color;
  const char* dash;  // empty for solid
};

Style style_for(const std::string& name) {
  if (name == "sup-klucb") return {"#1f77b4", ""};
  if (name == "rucb") return {"#d62728", "8,5"};
  if (name == "dts") return {"#2ca02c", "2,4"};
  if (name == "random") return {"#7f7f7f", "10,4,2,4"};
  return {"#9467bd", "4,2"};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string val(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<double> numbers(const nlohmann::json& j, const char* key, const std::string& who) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ValidationError("summary entry '" + who + "' lacks array '" + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ValidationError("non-numeric value in '" + who + "." + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

class Chart {
 public:
  Chart(double x0, double x1, double y1, bool log_x) : x0_(x0), x1_(x1), y1_(y1), log_x_(log_x) {
    if (log_x_) {
      x0_ = std::log10(std::max(x0_, 1.0));
      x1_ = std::log10(std::max(x1_, 1.0));
    }
    if (x1_ <= x0_) x1_ = x0_ + 1.0;
    if (y1_ <= 0.0) y1_ = 1.0;
  }

  double px(double x) const {
    const double t = log_x_ ? std::log10(std::max(x, 1.0)) : x;
    return kLeft + (t - x0_) / (x1_ - x0_) * (kWidth - kLeft - kRight);
  }
  double py(double y) const { return kHeight - kBottom - y / y1_ * (kHeight - kTop - kBottom); }

  std::string axes(const std::string& xlabel, const std::string& ylabel,
                   const std::vector<double>& xticks) const {
    std::ostringstream os;
    const double xa = kLeft, xb = kWidth - kRight, ya = kTop, yb = kHeight - kBottom;
    os << "<g class=\"axes\" stroke=\"#000\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << num(xa) << "\" y1=\"" << num(yb) << "\" x2=\"" << num(xb) << "\" y2=\""
       << num(yb) << "\"/>\n";
    os << "<line x1=\"" << num(xa) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(xa) << "\" y2=\""
       << num(yb) << "\"/>\n</g>\n";
    os << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double t : xticks) {
      os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(yb + 16)
         << "\" text-anchor=\"middle\">" << val(t) << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
      const double y = y1_ * i / 4.0;
      os << "<text x=\"" << num(xa - 6) << "\" y=\"" << num(py(y) + 4)
         << "\" text-anchor=\"end\">" << val(y) << "</text>\n";
    }
    os << "<text x=\"" << num((xa + xb) / 2) << "\" y=\"" << num(kHeight - 18)
       << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    os << "<text x=\"18\" y=\"" << num((ya + yb) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << num((ya + yb) / 2) << ")\">" << ylabel << "</text>\n</g>\n";
    return os.str();
  }

 private:
  double x0_, x1_, y1_;
  bool log_x_;
};

std::string render(const std::vector<Series>& series, bool log_x, const std::string& xlabel,
                   const std::string& ylabel) {
  double x0 = 0.0, x1 = 1.0, y1 = 0.0;
  bool first = true;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (first) x0 = x1 = s.x[i], first = false;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y1 = std::max({y1, s.mean[i], s.hi[i]});
    }
  }
  const Chart chart(x0, x1, y1 * 1.05, log_x);

  std::vector<double> ticks;
  if (log_x) {
    for (double t = 1.0; t <= x1 * 1.0000001; t *= 10.0) {
      if (t >= x0) ticks.push_back(t);
    }
  } else {
    for (const auto& s : series)
      for (double x : s.x)
        if (std::find(ticks.begin(), ticks.end(), x) == ticks.end()) ticks.push_back(x);
    std::sort(ticks.begin(), ticks.end());
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
     << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  os << chart.axes(xlabel, ylabel, ticks);

  for (const auto& s : series) {
    const Style st = style_for(s.name);
    os << "<polygon class=\"band\" data-policy=\"" << s.name << "\" fill=\"" << st.color
       << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      os << (i ? " " : "") << num(chart.px(s.x[i])) << ',' << num(chart.py(s.hi[i]));
    }
    for (std::size_t i = s.x.size(); i-- > 0;) {
      os << ' ' << num(chart.px(s.x[i])) << ',' << num(chart.py(s.lo[i]));
    }
    os << "\"/>\n";
  }
  std::size_t row = 0;
  for (const auto& s : series) {
    const Style st = style_for(s.name);
    os << "<polyline class=\"mean\" data-policy=\"" << s.name << "\" data-values=\"";
    for (std::size_t i = 0; i < s.mean.size(); ++i) os << (i ? " " : "") << val(s.mean[i]);
    os << "\" fill=\"none\" stroke=\"" << st.color << "\" stroke-width=\"2\"";
    if (*st.dash) os << " stroke-dasharray=\"" << st.dash << '"';
    os << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      os << (i ? " " : "") << num(chart.px(s.x[i])) << ',' << num(chart.py(s.mean[i]));
    }
    os << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(row++);
    const double lx = kWidth - kRight + 15;
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 30)
       << "\" y2=\"" << num(ly) << "\" stroke=\"" << st.color << "\" stroke-width=\"2\"";
    if (*st.dash) os << " stroke-dasharray=\"" << st.dash << '"';
    os << "/>\n<text x=\"" << num(lx + 36) << "\" y=\"" << num(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Series> run_series(const nlohmann::json& summary) {
  std::vector<Series> out;
  for (const auto& [name, entry] : summary.items()) {
    if (!entry.is_object()) throw ValidationError("summary entry '" + name + "' is not an object");
    Series s;
    s.name = name;
    s.x = numbers(entry, "rounds", name);
    s.mean = numbers(entry, "mean", name);
    s.lo = numbers(entry, "p25", name);
    s.hi = numbers(entry, "p75", name);
    if (s.mean.size() != s.x.size() || s.lo.size() != s.x.size() || s.hi.size() != s.x.size()) {
      throw ValidationError("summary entry '" + name + "' has mismatched array lengths");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Series> sweep_series(const nlohmann::json& sweep) {
  if (!sweep.contains("policies") || !sweep.contains("final_regret") ||
      !sweep["final_regret"].is_array()) {
    throw ValidationError("sweep summary lacks 'policies' or 'final_regret'");
  }
  std::vector<Series> out;
  for (const auto& p : sweep["policies"]) {
    Series s;
    s.name = p.get<std::string>();
    for (const auto& e : sweep["final_regret"]) {
      if (!e.contains("policy") || !e.contains("k") || !e.contains("final_mean_regret")) {
        throw ValidationError("malformed final_regret entry");
      }
      if (e["policy"] != s.name) continue;
      const double mean = e["final_mean_regret"].get<double>();
      s.x.push_back(e["k"].get<double>());
      s.mean.push_back(mean);
      s.lo.push_back(e.value("final_p25", mean));
      s.hi.push_back(e.value("final_p75", mean));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string render_svg(const nlohmann::json& summary) {
  if (!summary.is_object()) throw ValidationError("summary must be a JSON object");
  try {
    if (summary.contains("sweep")) {
      return render(sweep_series(summary["sweep"]), false, "number of arms",
                    "mean cumulative regret at horizon");
    }
    return render(run_series(summary), true, "round", "mean cumulative regret");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed summary: ") + e.what());
  }
}

}  // namespace duelbench
