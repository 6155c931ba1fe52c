#include "hlab/minkowski.hpp"

#include "hlab/errors.hpp"

namespace hlab {

MinkowskiSpace::MinkowskiSpace(std::size_t dimension) : dimension_(dimension) {
  if (dimension < 2) throw DomainError("spacetime dimension must be at least 2");
}

std::string to_string(CausalClassification c) {
  switch (c) {
    case CausalClassification::future_timelike: return "future_timelike";
    case CausalClassification::past_timelike: return "past_timelike";
    case CausalClassification::future_lightlike: return "future_lightlike";
    case CausalClassification::past_lightlike: return "past_lightlike";
    case CausalClassification::spacelike: return "spacelike";
    case CausalClassification::zero: return "zero";
  }
  return "unknown";
}

std::string to_string(Branch b) { return b == Branch::future ? "future" : "past"; }

Real gamma_form(const Point& v) {
  if (v.empty()) throw DomainError("empty vector");
  Real g = v[0] * v[0];
  for (std::size_t i = 1; i < v.size(); ++i) g -= v[i] * v[i];
  return g;
}

Real big_gamma(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DomainError("dimension mismatch");
  Point v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = y[i] - x[i];
  return gamma_form(v);
}

CausalClassification classify(const Point& v) {
  bool all_zero = true;
  for (Real c : v) all_zero = all_zero && c == 0;
  if (all_zero) return CausalClassification::zero;
  const Real g = gamma_form(v);
  if (g < 0) return CausalClassification::spacelike;
  const bool future = v[0] > 0;
  if (g > 0) return future ? CausalClassification::future_timelike : CausalClassification::past_timelike;
  return future ? CausalClassification::future_lightlike : CausalClassification::past_lightlike;
}

Branch timelike_branch(const Point& x, const Point& y) {
  Point v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = y[i] - x[i];
  switch (classify(v)) {
    case CausalClassification::future_timelike: return Branch::future;
    case CausalClassification::past_timelike: return Branch::past;
    default: throw DomainError("point is not timelike related to the base point");
  }
}

}  // namespace hlab
