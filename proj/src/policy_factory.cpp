#include "duelbench/baselines.hpp"
#include "duelbench/error.hpp"
#include "duelbench/policy.hpp"
#include "duelbench/sup_klucb.hpp"

namespace duelbench {
namespace {

SupKlucbConfig sup_config(const PolicySpec& spec, std::size_t k, std::uint64_t seed) {
  SupKlucbConfig cfg;
  const bool needs_defaults = spec.c1 <= 0.0 || spec.c2 < 0.0;
  if (needs_defaults) cfg = SupKlucbConfig::defaults(k, seed);
  if (spec.c1 > 0.0) cfg.c1 = spec.c1;
  if (spec.c2 >= 0.0) cfg.c2 = spec.c2;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

const std::vector<std::string>& known_policies() {
  static const std::vector<std::string> names{"sup-klucb", "rucb", "dts", "random"};
  return names;
}

void validate_policy(const PolicySpec& spec, std::size_t k) {
  (void)make_policy(spec, k, 0);
}

std::unique_ptr<DuelPolicy> make_policy(const PolicySpec& spec, std::size_t k,
                                        std::uint64_t seed) {
  if (spec.name == "sup-klucb") {
    return std::make_unique<SupKlucbPolicy>(k, sup_config(spec, k, seed));
  }
  if (spec.name == "rucb") {
    return std::make_unique<RucbPolicy>(
        k, spec.alpha > 0.0 ? spec.alpha : RucbPolicy::kDefaultAlpha, seed);
  }
  if (spec.name == "dts") {
    return std::make_unique<DtsPolicy>(k, spec.alpha > 0.0 ? spec.alpha : DtsPolicy::kDefaultAlpha,
                                       seed);
  }
  if (spec.name == "random") return std::make_unique<RandomPolicy>(k, seed);
  throw ValidationError("unknown policy '" + spec.name + "'");
}

}  // namespace duelbench
