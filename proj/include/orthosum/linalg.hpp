#pragma once

#include <cstdint>
#include <vector>

#include "orthosum/field.hpp"

namespace orthosum {

/// Coordinate vector in F_q^d.
using FqVector = std::vector<Elem>;

/// Square d x d matrix over F_q, row-major.
class FqMatrix {
 public:
  FqMatrix() = default;
  explicit FqMatrix(int d) : d_(d), e_(static_cast<std::size_t>(d) * d) {}
  FqMatrix(int d, std::vector<Elem> row_major);

  static FqMatrix identity(const Field& f, int d);
  /// Builds [[a, b], [c, d]].
  static FqMatrix of2(Elem a, Elem b, Elem c, Elem d);
  static FqMatrix from_columns(const std::vector<FqVector>& cols);

  int dim() const { return d_; }
  Elem& at(int r, int c) { return e_[static_cast<std::size_t>(r) * d_ + c]; }
  Elem at(int r, int c) const { return e_[static_cast<std::size_t>(r) * d_ + c]; }
  const std::vector<Elem>& entries() const { return e_; }

  FqVector column(int c) const;
  FqVector row(int r) const;
  void set_column(int c, const FqVector& v);
  FqMatrix transpose() const;
  /// Lower-right (d-1) x (d-1) block.
  FqMatrix minor11() const;
  /// diag(corner, block) in dimension block.dim() + 1.
  static FqMatrix embed(Elem corner, const FqMatrix& block);

  bool operator==(const FqMatrix&) const = default;

 private:
  int d_ = 0;
  std::vector<Elem> e_;
};

namespace la {

FqVector add(const Field& f, const FqVector& a, const FqVector& b);
FqVector sub(const Field& f, const FqVector& a, const FqVector& b);
FqVector neg(const Field& f, const FqVector& a);
FqVector scale(const Field& f, Elem s, const FqVector& a);
Elem dot(const Field& f, const FqVector& a, const FqVector& b);
bool is_zero(const FqVector& a);
FqVector unit_basis(const Field& f, int d, int k);

FqMatrix add(const Field& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix sub(const Field& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix neg(const Field& f, const FqMatrix& a);
FqMatrix mul(const Field& f, const FqMatrix& a, const FqMatrix& b);
FqVector apply(const Field& f, const FqMatrix& a, const FqVector& v);
Elem trace(const Field& f, const FqMatrix& a);
Elem det(const Field& f, const FqMatrix& a);
int rank(const Field& f, const FqMatrix& a);
bool is_zero(const FqMatrix& a);
FqMatrix sum(const Field& f, const std::vector<FqMatrix>& parts, int d);
FqVector sum(const Field& f, const std::vector<FqVector>& parts, int d);

/// Big-endian base-q index, so index order is lexicographic coordinate order.
std::uint64_t index_of(const Field& f, const FqVector& v);
FqVector vector_at(const Field& f, std::uint64_t index, int d);
std::uint64_t index_of(const Field& f, const FqMatrix& m);
FqMatrix matrix_at(const Field& f, std::uint64_t index, int d);
/// q^k, or throws AmbientTooLarge once it exceeds limit.
std::uint64_t ambient_size(const Field& f, int k, std::uint64_t limit);

}  // namespace la
}  // namespace orthosum
