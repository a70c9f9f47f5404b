#pragma once

#include <string>

#include "gwf/gact.hpp"
#include "gwf/glie.hpp"

namespace gwf {

/// Parameters for a concrete gl_n / sl_n instance with an optional Z/m
/// Vinberg block grading given by a diagonal weight vector.
struct BuilderSpec {
  std::string family = "gl";     // "gl" or "sl"
  int n = 2;                     // matrix size
  int p = 5;
  int k = 1;
  std::vector<int> modulus;      // optional, monic degree-k
  int gradingModulus = 1;        // m; 1 means ungraded
  std::vector<int> weights;      // a_1..a_n in Z/m, empty means all zero
  uint64_t groupCap = 1000000;
  bool buildGroup = true;  // skip the closure when only the algebra is needed
};

struct BuiltInstance {
  std::shared_ptr<GradedAlgebra> algebra;
  GroupPtr group;
  std::vector<GroupGen> generators;
};

/// Build the algebra with trace form, the degree-0 group (block-diagonal
/// elementary and diagonal matrices, closed explicitly), and the matrix
/// realisation.  Validates all structural invariants before returning.
BuiltInstance build(const BuilderSpec& spec);

/// Named builtin instances: sl2, gl2, gl3, gl2-z2, gl3-z3.
BuilderSpec builtinSpec(const std::string& name, int p);

}  // namespace gwf
