#include "sl2cat/sl2_multiplicities.hpp"

#include <stdexcept>

namespace sl2cat {

std::int64_t catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan: negative index");
  if (k > 30) throw std::invalid_argument("catalan: index too large for 64 bits");
  // C_0 = 1, C_{k+1} = sum_i C_i C_{k-i}
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[static_cast<std::size_t>(k)];
}

std::map<int, std::int64_t> tensor_power_multiplicities(int m) {
  if (m < 0) throw std::invalid_argument("tensor_power_multiplicities: negative power");
  std::map<int, std::int64_t> mult;
  mult[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::map<int, std::int64_t> next;
    for (const auto& [j, c] : mult) {
      next[j + 1] += c;
      if (j >= 1) next[j - 1] += c;
    }
    mult = std::move(next);
  }
  return mult;
}

std::int64_t hom_dimension(int m, int n) {
  if ((m + n) % 2 != 0) return 0;
  const auto a = tensor_power_multiplicities(m);
  const auto b = tensor_power_multiplicities(n);
  std::int64_t dim = 0;
  for (const auto& [j, c] : a) {
    const auto it = b.find(j);
    if (it != b.end()) dim += c * it->second;
  }
  return dim;
}

}  // namespace sl2cat
