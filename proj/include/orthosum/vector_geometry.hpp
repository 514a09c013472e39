#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orthosum/field.hpp"
#include "orthosum/linalg.hpp"

namespace orthosum {

/// ||v|| = sum of squared coordinates (a quadratic form, not a metric).
Elem norm(const Field& f, const FqVector& v);

/// All x in F_q^d with ||x|| = t, in lexicographic coordinate order.
std::vector<FqVector> sphere(const Field& f, Elem t, int d);
std::uint64_t sphere_count(const Field& f, Elem t, int d);

/// |S_t| in the plane: q + eta(-1) v(t) with v(0) = q - 1 and v(t) = -1
/// otherwise. This is the sign that agrees with exhaustive counts.
std::uint64_t sphere_size_formula(const Field& f, Elem t);

/// A nonzero plane vector of length L is a sum of two unit vectors iff
/// L != 0 and 4L - L^2 is a square.
bool two_unit_representable(const Field& f, Elem length);

/// Number of lengths L for which every plane vector of length L is a sum of
/// two unit vectors.
std::uint64_t good_set_size(std::uint64_t q);

/// The zero plane vector is a sum of three unit vectors in GF(p^n).
bool zero_three_units_possible(std::uint64_t p, std::uint64_t n);

struct UnitSumDecomposition {
  FqVector target;
  std::vector<FqVector> parts;

  int count() const { return static_cast<int>(parts.size()); }
  /// Parts sum exactly to target and each has norm 1.
  bool verify(const Field& f) const;
};

/// Guaranteed upper bound on the number of parts decompose_unit_sum uses.
int unit_sum_bound(const Field& f, int d, bool target_is_zero);

/// Writes v (dim >= 2) as a sum of unit vectors within unit_sum_bound().
/// Throws DimensionTooSmall for d < 2.
UnitSumDecomposition decompose_unit_sum(const Field& f, const FqVector& v);

/// Plane decomposition with exactly `count` parts (2, 3 or 4). Used by the
/// 2x2 orthogonal construction, which needs exact counts.
UnitSumDecomposition decompose_unit_sum_exact(const Field& f, const FqVector& v, int count);

/// Walk threshold |S_1| >= (2 sqrt(q) / |S_1|)^3.
bool walk_threshold_holds(std::uint64_t q, std::uint64_t s1);
/// Isotropic variant sqrt(|S_1| |S_0|) > (2 sqrt(q) / |S_1|)^3.
bool walk_threshold_isotropic_holds(std::uint64_t q, std::uint64_t s1, std::uint64_t s0);

namespace unit_sum {

/// First (a, b) in lexicographic order with a^2 + b^2 = value.
std::pair<Elem, Elem> two_squares(const Field& f, Elem value);

/// Plane, v != 0 of length L with 4L - L^2 a square: [w, v - w] where w is
/// the least second column of the triangle with sides (L, 1, 1).
std::optional<std::vector<FqVector>> two_in_plane(const Field& f, const FqVector& v);

/// Plane, v != 0 with ||v|| != 0: u + (two-unit split of v - u) where
/// ||v - u|| = L is the first good length compatible with a (||v||, L, 1)
/// triangle. Always succeeds when q = 3 mod 4.
std::optional<std::vector<FqVector>> three_in_plane(const Field& f, const FqVector& v);

/// Plane: first (u1, u2) in sphere order such that v - u1 - u2 splits into
/// two unit vectors.
std::optional<std::vector<FqVector>> four_in_plane(const Field& f, const FqVector& v);

/// d = 3 construction, lifted from the (a, b, 0) or (a, b, 1) normal form
/// by a Witt isometry.
std::vector<FqVector> in_space(const Field& f, const FqVector& v);

/// d >= 4 construction: always exactly two parts.
std::vector<FqVector> high_dimension(const Field& f, const FqVector& v);

}  // namespace unit_sum
}  // namespace orthosum
