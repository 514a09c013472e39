#pragma once

#include <cstdint>
#include <vector>

#include "orthosum/field.hpp"
#include "orthosum/kernels.hpp"

namespace orthosum::kernels::detail {

// Upper bound on flat ambient spaces any kernel will walk.
inline constexpr std::uint64_t kAmbientLimit = 10'000'000;

std::uint64_t power(std::uint32_t q, int k);

inline void decode(std::uint64_t index, std::uint32_t q, int k, std::uint32_t* out) {
  for (int i = k; i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
}

inline std::uint64_t encode(const std::uint32_t* digits, std::uint32_t q, int k) {
  std::uint64_t idx = 0;
  for (int i = 0; i < k; ++i) idx = idx * q + digits[i];
  return idx;
}

inline std::uint64_t shifted(const Field& f, const std::uint32_t* x, const std::uint32_t* g, int k) {
  std::uint64_t idx = 0;
  for (int i = 0; i < k; ++i) idx = idx * f.q() + f.add(Elem{x[i]}, Elem{g[i]}).v;
  return idx;
}

inline std::uint32_t pairing_trace(const Field& f, const std::uint32_t* a, const std::uint32_t* g, int k) {
  Elem acc{0};
  for (int i = 0; i < k; ++i) acc = f.add(acc, f.mul(Elem{a[i]}, Elem{g[i]}));
  return f.trace(acc);
}

std::vector<std::uint32_t> square_table(const Field& f);

inline bool nonzero_residue(const Field& f, Elem x) { return f.legendre(x) == Legendre::Residue; }

}  // namespace orthosum::kernels::detail
