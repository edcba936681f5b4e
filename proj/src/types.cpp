#include "sjaya/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace sjaya {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw ConfigError("bounds must have at least one dimension");
  if (lower_.size() != upper_.size())
    throw ConfigError("lower and upper bounds differ in dimension");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || !(lower_[i] < upper_[i]))
      throw ConfigError("invalid bounds in dimension " + std::to_string(i) + ": [" +
                        std::to_string(lower_[i]) + ", " + std::to_string(upper_[i]) + "]");
  }
}

Bounds Bounds::uniform(std::size_t dimension, double lower, double upper) {
  return Bounds(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

bool Bounds::contains(std::span<const double> x) const noexcept {
  if (x.size() != dimension()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(lower_[i] <= x[i] && x[i] <= upper_[i])) return false;
  return true;
}

bool SuccessTarget::met(double fitness) const noexcept {
  switch (kind) {
    case Kind::WithinDistance:
      return std::abs(fitness - value) <= tolerance;
    case Kind::AtMost:
      return fitness <= value;
  }
  return false;
}

std::size_t scan_best(std::span<const Individual> members) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].fitness < members[best].fitness) best = i;
  return best;
}

std::size_t scan_worst(std::span<const Individual> members) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].fitness > members[worst].fitness) worst = i;
  return worst;
}

void OptimizerConfig::validate() const {
  if (pop_size < 2) throw ConfigError("pop_size must be at least 2");
}

std::string to_string(Variant v) { return v == Variant::Jaya ? "jaya" : "sjaya"; }

std::string to_string(RSchedule s) {
  return s == RSchedule::PerGeneration ? "per_generation" : "per_individual";
}

namespace {
std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}
}  // namespace

Variant parse_variant(const std::string& text) {
  const auto s = lowercase(text);
  if (s == "jaya") return Variant::Jaya;
  if (s == "sjaya") return Variant::SJaya;
  throw UsageError("unknown variant '" + text + "' (expected jaya or sjaya)");
}

RSchedule parse_r_schedule(const std::string& text) {
  const auto s = lowercase(text);
  if (s == "per_generation" || s == "per-generation") return RSchedule::PerGeneration;
  if (s == "per_individual" || s == "per-individual") return RSchedule::PerIndividual;
  throw UsageError("unknown r schedule '" + text + "'");
}

}  // namespace sjaya
