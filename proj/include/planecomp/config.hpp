#pragma once

namespace planecomp {

inline constexpr int kDefaultDegreeBound = 13;

/// Degree bound for bounded searches; PLANECOMP_DEGREE_BOUND overrides the
/// default when it holds a positive integer.
int degree_bound();

}  // namespace planecomp
