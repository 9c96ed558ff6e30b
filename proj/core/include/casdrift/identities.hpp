#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace casdrift {

/// One row of the algebraic validation suite: an identity checked over
/// random samples against its tolerance.
struct IdentityReport {
  std::string name;
  long samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs the full identity suite: the Fresnel-elimination identities, the
/// real/imaginary-w cavity identities, the grand four-channel identity, the
/// boost invariants, the coth split, the overlap normalization, the
/// Appendix dyadic inversion against direct 3x3 inversion, and the
/// Poynting/shear proportionality.
std::vector<IdentityReport> run_identity_suite(std::uint64_t seed, long samples);

}  // namespace casdrift
