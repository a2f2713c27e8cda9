#pragma once

#include <optional>
#include <vector>

#include "mimodof/rational.hpp"

namespace mimodof {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Exact solution of a square system A x = b; nullopt when A is singular.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

// Rank of an arbitrary rational matrix by exact elimination.
int exact_rank(RatMat a);

// A system {x >= 0, sum_j A[i][j] x_j <= b[i]}. Vertices are the basic
// feasible solutions: every size-n subset of {rows of A} u {x_j = 0} with a
// nonsingular coefficient matrix whose unique solution satisfies all
// constraints. Requires the feasible set to be bounded; enumeration itself
// does not check boundedness.
//
// Returned points are deduplicated and sorted lexicographically.
std::vector<RatVec> enumerate_basic_feasible_points(const RatMat& a,
                                                    const RatVec& b);

}  // namespace mimodof
