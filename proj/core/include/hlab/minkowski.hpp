#pragma once

#include <cstddef>
#include <string>

#include "hlab/types.hpp"

namespace hlab {

/// Flat Minkowski space R^d, coordinate 0 is time, timelike vectors have
/// positive gamma_form.
class MinkowskiSpace {
 public:
  explicit MinkowskiSpace(std::size_t dimension);
  std::size_t dimension() const { return dimension_; }
  static constexpr std::size_t kTimeIndex = 0;

 private:
  std::size_t dimension_;
};

enum class CausalClassification {
  future_timelike,
  past_timelike,
  future_lightlike,
  past_lightlike,
  spacelike,
  zero,
};

enum class Branch { future, past };

std::string to_string(CausalClassification c);
std::string to_string(Branch b);

/// v0^2 - v1^2 - ... - v_{d-1}^2
Real gamma_form(const Point& v);

/// Squared Lorentzian distance gamma_form(y - x) of the flat model.
Real big_gamma(const Point& x, const Point& y);

CausalClassification classify(const Point& v);

/// Future/past branch containing y - x, or DomainError if y is not in the
/// open timelike cone of x.
Branch timelike_branch(const Point& x, const Point& y);

}  // namespace hlab
