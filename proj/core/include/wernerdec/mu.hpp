#pragma once

#include "wernerdec/dense.hpp"
#include "wernerdec/werner.hpp"

namespace wernerdec {

/// A positive map given by its Choi matrix; image_of_identity is P(1), the
/// partial trace of the Choi matrix over the first factor.
struct MapDescriptor {
  int da = 0, db = 0;
  DenseSymmetric choi;               // side da*db, factors {da, db}
  DenseSymmetric image_of_identity;  // side db
};

MapDescriptor map_from_choi(int da, int db, DenseSymmetric choi);
MapDescriptor werner_map(const WernerParam& wp);             // W_p
MapDescriptor transposed_werner_map(const WernerParam& wp);  // theta o W_p

struct MuResult {
  double value = 0.0;
  // Set when I (x) P(1) is singular and the pencil was restricted to its
  // support; directions outside the support are checked to be harmless.
  bool support_restricted = false;
};

/// Minimal generalized eigenvalue of the pencil (C_P, I (x) P(1)) on the
/// support of I (x) P(1). The infimum defining mu over completely positive
/// test maps is linear in C_T on the PSD cone, so it is attained at rank one
/// and reduces to this Rayleigh-quotient minimum. Lies in [-1, 1/da] for
/// positive maps, nonnegative exactly for the completely positive ones.
MuResult mu_of_map(const MapDescriptor& p);

struct Interval {
  double lower = 0.0, upper = 0.0;
  bool empty = true;
};

/// ((1 + mu)/2, 1/2), the admissible Werner symmetrization parameters;
/// empty (not an error) when mu >= 0.
Interval symmetrization_interval(const MapDescriptor& p);

/// Checks -I (x) P(1) <= C_P <= da I (x) P(1) by eigenvalue bounds (1e-10).
bool check_block_positive_bounds(const MapDescriptor& p);

}  // namespace wernerdec
