#pragma once

#include <string>

#include "json.hpp"

namespace duelbench {

/// Renders a summary document as an SVG line chart.
///
/// A run summary (policy -> {rounds, mean, p25, p75, ...}) becomes mean
/// cumulative regret against round on a log-scaled x axis, one polyline and
/// one shaded 25-75% band polygon per policy. A sweep summary (has a
/// "sweep" key) becomes final mean regret against arm count. Line styles:
/// rucb dashed, dts dotted, sup-klucb solid.
///
/// The output depends only on the input document. Each polyline carries the
/// plotted values in a data-values attribute. Throws ValidationError on a
/// malformed summary.
std::string render_svg(const nlohmann::json& summary);

}  // namespace duelbench
