#include "polarnet/errors.hpp"

namespace polarnet {

ParseError::ParseError(std::size_t line, const std::string& detail, const std::string& source)
    : FormatError((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " + detail),
      line_(line),
      detail_(detail) {}

DegenerateModularityError::DegenerateModularityError(double modularity, const std::string& what)
    : Error(what), modularity_(modularity) {}

InfeasibleError::InfeasibleError(std::size_t max_achievable, std::size_t target, std::size_t n_target)
    : Error("coverage target " + std::to_string(target) + " of " + std::to_string(n_target) +
            " unreachable; candidates cover at most " + std::to_string(max_achievable)),
      max_achievable_(max_achievable),
      target_(target),
      n_target_(n_target) {}

double InfeasibleError::max_achievable_fraction() const noexcept {
  return n_target_ == 0 ? 1.0 : static_cast<double>(max_achievable_) / static_cast<double>(n_target_);
}

}  // namespace polarnet
