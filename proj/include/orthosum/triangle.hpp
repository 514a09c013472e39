#pragma once

#include <cstdint>
#include <vector>

#include "orthosum/field.hpp"
#include "orthosum/linalg.hpp"

namespace orthosum {

/// Column lengths and column dot product of an origin-pinned triangle
/// [0, col0, col1], i.e. of a 2x2 matrix t = [[a, b], [c, d]].
struct TriangleInvariant {
  Elem l1;
  Elem l2;
  Elem mu;

  auto operator<=>(const TriangleInvariant&) const = default;
};

TriangleInvariant invariants(const Field& f, const FqMatrix& t);

/// Every (b, d) with b^2 + d^2 = l2 and a b + c d = mu, ascending.
/// Throws ZeroFirstColumn when (a, c) = (0, 0).
std::vector<FqVector> second_column_solutions(const Field& f, Elem a, Elem c, Elem l2, Elem mu);

/// L1 L2 - mu^2 is a nonzero square.
bool is_realizable(const Field& f, const TriangleInvariant& inv);

/// Throws DegenerateTriangle unless both matrices are invertible.
bool congruent(const Field& f, const FqMatrix& t, const FqMatrix& t2);

/// L3 = L1 + L2 - 2 mu.
Elem third_side(const Field& f, const TriangleInvariant& inv);
/// mu = (L1 + L2 - L3) / 2.
Elem mu_from_sides(const Field& f, Elem l1, Elem l2, Elem l3);

/// A nondegenerate triangle with these side lengths exists iff
/// 2(L1 L2 + L1 L3 + L2 L3) - (L1^2 + L2^2 + L3^2) is a nonzero square.
bool triangle_exists_with_sides(const Field& f, Elem l1, Elem l2, Elem l3);

/// q(q^2 - 1)/2 for q = 1 mod 4, q(q - 1)^2/2 for q = 3 mod 4.
std::uint64_t count_classes(std::uint64_t q);

/// All realizable (L1, L2, mu), lexicographic in canonical element order.
std::vector<TriangleInvariant> enumerate_classes(const Field& f);

/// A matrix with the given invariants: first column is the least vector of
/// length L1, second column the least solution. Throws UnrealizableInvariant.
FqMatrix class_representative(const Field& f, const TriangleInvariant& inv);

}  // namespace orthosum
