#pragma once

#include <cmath>
#include <complex>

#include "hlab/types.hpp"

namespace hlab::test {

inline Real rel_error(Complex got, Complex want) {
  const Real scale = std::abs(want);
  return scale > 0 ? std::abs(got - want) / scale : std::abs(got);
}

}  // namespace hlab::test
