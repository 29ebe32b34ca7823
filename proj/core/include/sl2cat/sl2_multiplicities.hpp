#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace sl2cat {

/// Catalan number C_k. Valid for k <= 30 in 64 bits; callers here never go
/// past k = 8.
std::int64_t catalan(int k);

/// Multiplicity bookkeeping for tensor powers of the 2-dimensional
/// irreducible: returns the map (highest weight j) -> multiplicity of L(j)
/// in L^{tensor m}, computed by the recursion
///   L(j) (x) L = L(j-1) (+) L(j+1),   L(0) (x) L = L(1).
std::map<int, std::int64_t> tensor_power_multiplicities(int m);

/// dim Hom(L^{tensor m}, L^{tensor n}) = sum_j mult_m(j) * mult_n(j).
/// Zero when m + n is odd.
std::int64_t hom_dimension(int m, int n);

}  // namespace sl2cat
