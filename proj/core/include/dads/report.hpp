#pragma once

#include <cstddef>
#include <string>

namespace dads {

/// Result of checking a pointwise Lyapunov-derivative bound along a
/// trajectory: max over samples of (measured - bound)^+.
struct CertificateReport {
  double max_violation = 0.0;
  double violation_time = 0.0;  ///< sample time attaining the largest measured - bound
  std::size_t samples_checked = 0;
  std::string bound_descriptor;
};

}  // namespace dads
