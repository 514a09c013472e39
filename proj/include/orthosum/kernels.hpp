#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference and an OpenMP version with identical, order-deterministic output.
// Tests compare the two; benchmarks time them against each other.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "orthosum/field.hpp"

namespace orthosum::kernels {

/// Flat element of F_q^k given as digits (one field index per coordinate).
using Digits = std::vector<std::uint32_t>;

/// Generator set over F_q^k, stored digit-major for fast decoding.
struct FlatSet {
  int k = 0;
  std::vector<std::uint32_t> digits;  // size() * k entries

  std::size_t size() const { return k == 0 ? 0 : digits.size() / k; }
  const std::uint32_t* at(std::size_t i) const { return digits.data() + i * k; }
};

constexpr std::int16_t kUnreached = -1;

using Triple = std::array<Elem, 3>;

namespace serial {

/// Indices (big-endian base q) of all x in F_q^d with sum x_i^2 = t, ascending.
std::vector<std::uint64_t> sphere_points(const Field& f, Elem t, int d);

/// lambda_A = sum_g chi(<A, g>) for every A in F_q^k (index order), where
/// <,> is the coordinate dot product.
std::vector<std::complex<double>> character_sums(const Field& f, const FlatSet& gens);

/// Minimal m with x in the m-fold sumset of gens, for every x in F_q^k.
std::vector<std::int16_t> sumset_distances(const Field& f, const FlatSet& gens);

/// Exact next sumset layer: out[x] = 1 iff x = y + g with layer[y] = 1.
std::vector<std::uint8_t> next_layer(const Field& f, const FlatSet& gens, const std::vector<std::uint8_t>& layer);

/// All (L1, L2, mu) with L1 L2 - mu^2 a nonzero square, lexicographic.
std::vector<Triple> realizable_triples(const Field& f);

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> sphere_points(const Field& f, Elem t, int d);
std::vector<std::complex<double>> character_sums(const Field& f, const FlatSet& gens);
std::vector<std::int16_t> sumset_distances(const Field& f, const FlatSet& gens);
std::vector<std::uint8_t> next_layer(const Field& f, const FlatSet& gens, const std::vector<std::uint8_t>& layer);
std::vector<Triple> realizable_triples(const Field& f);

}  // namespace omp

/// Threads OpenMP will use for the next parallel region (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace orthosum::kernels
