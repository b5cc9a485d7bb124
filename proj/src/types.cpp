#include "hardy/types.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

UnitCheck check_unit_norm(double norm, double tol, const std::string& what) {
  UnitCheck out;
  out.norm = norm;
  const double dev = std::abs(norm - 1.0);
  if (!std::isfinite(norm) || dev > std::max(tol, kUnitRescaleTol)) {
    throw NonUnitVector(what + " is not a unit vector (norm " +
                        std::to_string(norm) + ")");
  }
  if (dev > 1e-14) {
    out.rescaled = true;
    out.warnings.push_back(what + " rescaled from norm " +
                           std::to_string(norm) + " to 1");
  }
  return out;
}

}  // namespace hardy
