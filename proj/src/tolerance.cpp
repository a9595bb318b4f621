#include "fermihat/tolerance.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "fermihat/errors.hpp"

namespace fermihat {

void ToleranceConfig::validate() const {
  if (!(zero_threshold >= 0.0 && zero_threshold < 1.0)) {
    throw GuardError("zero_threshold must lie in [0, 1)");
  }
  if (!(check_tolerance >= 0.0) || !std::isfinite(check_tolerance)) {
    throw GuardError("check_tolerance must be a finite non-negative number");
  }
}

ToleranceConfig ToleranceConfig::from_env() {
  ToleranceConfig cfg;
  if (const char* env = std::getenv("FERMIHAT_TOL"); env != nullptr) {
    double value = 0.0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value >= 0.0 && std::isfinite(value)) {
      cfg.check_tolerance = value;
    }
  }
  return cfg;
}

}  // namespace fermihat
