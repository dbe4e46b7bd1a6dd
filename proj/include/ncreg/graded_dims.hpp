#ifndef NCREG_GRADED_DIMS_HPP
#define NCREG_GRADED_DIMS_HPP

#include <map>

namespace ncreg {

/// Dimensions of the graded pieces of a locally finite module, certified on
/// the window [lo, hi]. Inside the window a missing degree means dimension 0;
/// outside the window dimensions are unknown, not zero.
struct GradedDims {
  std::map<int, int> dims;  // nonzero entries only
  int lo = 0;
  int hi = -1;  // empty window when hi < lo

  int at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  bool in_window(int degree) const { return lo <= degree && degree <= hi; }
  void set(int degree, int dim) {
    if (dim != 0) dims[degree] = dim;
  }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Matlis dual on dimensions: degree j of the dual is degree -j of the input.
inline GradedDims matlis_dual_dims(const GradedDims& d) {
  GradedDims r;
  r.lo = -d.hi;
  r.hi = -d.lo;
  for (const auto& [deg, dim] : d.dims) r.dims[-deg] = dim;
  return r;
}

}  // namespace ncreg

#endif
