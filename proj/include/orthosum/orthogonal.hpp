#pragma once

#include <cstdint>
#include <vector>

#include "orthosum/field.hpp"
#include "orthosum/linalg.hpp"

namespace orthosum {

/// A matrix with A^T A = I, checked on construction.
class OrthogonalMatrix {
 public:
  OrthogonalMatrix(const Field& f, FqMatrix m);

  const FqMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  bool operator==(const OrthogonalMatrix& o) const { return m_ == o.m_; }

 private:
  FqMatrix m_;
};

struct OrthSumDecomposition {
  FqMatrix target;
  std::vector<OrthogonalMatrix> parts;
  std::uint64_t declared_count = 0;

  /// Parts sum exactly to target, count matches, every part orthogonal.
  bool verify(const Field& f) const;
};

bool is_orthogonal(const Field& f, const FqMatrix& a);

/// O(2;q): rotations [[a, -b], [b, a]] then reflections [[a, b], [b, -a]],
/// each over the unit circle in sphere order.
std::vector<OrthogonalMatrix> enumerate_o2(const Field& f);

/// I - 2 w w^T / ||w||. Throws IsotropicMirror when ||w|| = 0.
OrthogonalMatrix reflection(const Field& f, const FqVector& w);

/// An orthogonal map sending u to v (equal nonzero lengths), built from at
/// most two reflections. Throws LengthMismatch or ZeroVector.
OrthogonalMatrix witt_map(const Field& f, const FqVector& u, const FqVector& v);

/// Exact part counts promised for d x d matrices over F_q.
std::uint64_t orth_sum_count(const Field& f, int d);

/// Splits A (d >= 3) into 2 or 3 matrices whose first columns are unit
/// vectors; the remaining columns all go to the first part.
std::vector<FqMatrix> first_col_unit_split(const Field& f, const FqMatrix& a);

/// 2x2: rotation part B plus reflection part C, 8 parts (q = 1 mod 4) or 6.
OrthSumDecomposition decompose_2x2(const Field& f, const FqMatrix& a);

/// d >= 3 by recursion on the lower-right block, exactly orth_sum_count parts.
OrthSumDecomposition decompose_dxd(const Field& f, const FqMatrix& a);

/// Dispatches on dimension.
OrthSumDecomposition decompose_orthogonal(const Field& f, const FqMatrix& a);

/// O(d;q) as the closure of all non-isotropic reflections under
/// multiplication, sorted by matrix index. Intended for small d and q.
std::vector<OrthogonalMatrix> generate_orthogonal_group(const Field& f, int d);

}  // namespace orthosum
