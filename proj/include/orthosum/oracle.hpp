#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthosum/field.hpp"
#include "orthosum/kernels.hpp"
#include "orthosum/linalg.hpp"

namespace orthosum::oracle {

/// BFS distances in the Cayley digraph of a generator set: dist[x] is the
/// least m with x in the m-fold sumset, kernels::kUnreached if none.
struct DistanceMap {
  int k = 0;  // flat coordinates per element
  std::vector<std::int16_t> dist;
  int diameter = 0;               // max finite distance
  bool all_reachable = false;
  std::uint64_t diameter_witness = 0;  // least index attaining the diameter

  int at(std::uint64_t index) const { return dist.at(index); }
};

/// Exact closure; throws AmbientTooLarge above 10^7 elements.
DistanceMap sumset_closure(const Field& f, const kernels::FlatSet& gens);
DistanceMap sumset_closure(const Field& f, const std::vector<FqVector>& gens, int d);
/// Matrices are flattened row-major, matching la::index_of.
DistanceMap sumset_closure(const Field& f, const std::vector<FqMatrix>& gens, int d);

kernels::FlatSet flatten(const std::vector<FqVector>& gens, int d);
kernels::FlatSet flatten(const std::vector<FqMatrix>& gens, int d);

/// Indicator of the exact m-fold sumset (m >= 1).
std::vector<std::uint8_t> k_fold_sumset(const Field& f, const kernels::FlatSet& gens, int m);

/// Least number of unit vectors summing to v (-1 if none).
int min_unit_sum(const Field& f, const FqVector& v);
/// Least number of orthogonal matrices summing to A (-1 if none).
int min_orth_sum(const Field& f, const FqMatrix& a);

/// Generators of O(d;q) flattened row-major: enumerate_o2 for d = 2,
/// reflection closure otherwise.
std::vector<FqMatrix> orthogonal_generators(const Field& f, int d);

/// Lengths L such that every plane vector of length L lies in S_1 + S_1.
std::uint64_t good_lengths_bruteforce(const Field& f);
/// 0 = u1 + u2 + u3 with unit u_i in the plane.
bool zero_is_three_unit_sum(const Field& f);

/// Left O(2;q)-orbits on GL_2(q): label[idx] is the orbit id of the matrix
/// with flat index idx, -1 for singular matrices. Ids follow first
/// appearance in index order.
struct OrbitCensus {
  std::uint64_t gl2_order = 0;
  std::uint64_t o2_order = 0;
  std::uint64_t orbit_count = 0;
  std::vector<std::int32_t> label;
};
OrbitCensus congruence_orbits(const Field& f);

struct LedgerRow {
  std::string theorem;
  std::uint64_t q = 0;
  int d = 0;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;

  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::vector<std::uint64_t> qs{3, 5, 7, 9, 11, 13};
  std::vector<int> dims{2, 3};
  /// Random matrices per (q, d) for orthogonal sums when full enumeration
  /// is out of reach.
  int samples = 64;
  std::uint64_t seed = 1;
};

/// Binds each result to its brute-force check, one row per (check, q, d).
std::vector<LedgerRow> verify_suite(const SuiteOptions& opts);

}  // namespace orthosum::oracle
