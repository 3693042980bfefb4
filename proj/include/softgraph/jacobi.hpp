#pragma once

#include <vector>

#include "softgraph/matrix.hpp"
#include "softgraph/rational.hpp"

namespace softgraph {

// Full symmetric eigendecomposition by cyclic Jacobi rotations; the
// numeric oracle for the exact paths. Eigenvalues ascending; vectors unit
// Euclidean norm with first significant entry positive.
struct NumericEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

NumericEigen numeric_spectrum(std::vector<std::vector<double>> a);
NumericEigen numeric_spectrum(const Mat<Rat>& L);  // throws if non-symmetric

}  // namespace softgraph
