#include "tgclaims/grid.hpp"

#include <stdexcept>

namespace tgclaims {

void GridSpec::validate() const {
  if (point_count < 16) throw std::invalid_argument("grid: point_count must be >= 16");
  if (!(coverage_lower > 0.0) || !(coverage_upper < 1.0) ||
      !(coverage_lower < coverage_upper))
    throw std::invalid_argument("grid: need 0 < coverage_lower < coverage_upper < 1");
  if (!(slack >= 0.0)) throw std::invalid_argument("grid: slack must be >= 0");
}

}  // namespace tgclaims
