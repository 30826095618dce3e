#pragma once

#include <stdexcept>
#include <string>

#include "geofreq/rational.hpp"

namespace geofreq {

/// Topological class of a hyperbolic surface: genus g >= 2 with n >= 0 cusps.
/// lambda = n/g is the exact cusps-per-genus ratio every asymptotic formula
/// is parameterized by.
struct SurfaceClass {
  long g;
  long n;
  Rational lambda;

  SurfaceClass(long genus, long cusps) : g(genus), n(cusps), lambda(cusps, genus == 0 ? 1 : genus) {
    if (genus < 2)
      throw std::domain_error("SurfaceClass: formulas require genus g >= 2, got g = " +
                              std::to_string(genus));
    if (cusps < 0)
      throw std::domain_error("SurfaceClass: cusp count must be nonnegative, got n = " +
                              std::to_string(cusps));
  }
};

}  // namespace geofreq
