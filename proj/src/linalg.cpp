#include "orthosum/linalg.hpp"

#include <string>
#include <utility>

#include "orthosum/error.hpp"

namespace orthosum {

FqMatrix::FqMatrix(int d, std::vector<Elem> row_major) : d_(d), e_(std::move(row_major)) {
  if (d < 0 || e_.size() != static_cast<std::size_t>(d) * d) {
    throw Error(ErrorCode::BadShape, "matrix entry count does not match dimension " + std::to_string(d));
  }
}

FqMatrix FqMatrix::identity(const Field& f, int d) {
  FqMatrix m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = f.one();
  return m;
}

FqMatrix FqMatrix::of2(Elem a, Elem b, Elem c, Elem d) { return FqMatrix(2, {a, b, c, d}); }

FqMatrix FqMatrix::from_columns(const std::vector<FqVector>& cols) {
  const int d = static_cast<int>(cols.size());
  FqMatrix m(d);
  for (int c = 0; c < d; ++c) m.set_column(c, cols[c]);
  return m;
}

FqVector FqMatrix::column(int c) const {
  FqVector v(d_);
  for (int r = 0; r < d_; ++r) v[r] = at(r, c);
  return v;
}

FqVector FqMatrix::row(int r) const {
  return FqVector(e_.begin() + static_cast<std::ptrdiff_t>(r) * d_,
                  e_.begin() + static_cast<std::ptrdiff_t>(r + 1) * d_);
}

void FqMatrix::set_column(int c, const FqVector& v) {
  if (static_cast<int>(v.size()) != d_) throw Error(ErrorCode::BadShape, "column length mismatch");
  for (int r = 0; r < d_; ++r) at(r, c) = v[r];
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(d_);
  for (int r = 0; r < d_; ++r)
    for (int c = 0; c < d_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FqMatrix FqMatrix::minor11() const {
  FqMatrix m(d_ - 1);
  for (int r = 1; r < d_; ++r)
    for (int c = 1; c < d_; ++c) m.at(r - 1, c - 1) = at(r, c);
  return m;
}

FqMatrix FqMatrix::embed(Elem corner, const FqMatrix& block) {
  FqMatrix m(block.dim() + 1);
  m.at(0, 0) = corner;
  for (int r = 0; r < block.dim(); ++r)
    for (int c = 0; c < block.dim(); ++c) m.at(r + 1, c + 1) = block.at(r, c);
  return m;
}

namespace la {

namespace {
void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::BadShape, "dimension mismatch");
}
}  // namespace

FqVector add(const Field& f, const FqVector& a, const FqVector& b) {
  require_same(a.size(), b.size());
  FqVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

FqVector sub(const Field& f, const FqVector& a, const FqVector& b) {
  require_same(a.size(), b.size());
  FqVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

FqVector neg(const Field& f, const FqVector& a) {
  FqVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.neg(a[i]);
  return out;
}

FqVector scale(const Field& f, Elem s, const FqVector& a) {
  FqVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

Elem dot(const Field& f, const FqVector& a, const FqVector& b) {
  require_same(a.size(), b.size());
  Elem acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

bool is_zero(const FqVector& a) {
  for (Elem x : a)
    if (x.v != 0) return false;
  return true;
}

FqVector unit_basis(const Field& f, int d, int k) {
  FqVector v(d, f.zero());
  v[k] = f.one();
  return v;
}

FqMatrix add(const Field& f, const FqMatrix& a, const FqMatrix& b) {
  require_same(a.dim(), b.dim());
  std::vector<Elem> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.add(a.entries()[i], b.entries()[i]);
  return FqMatrix(a.dim(), std::move(e));
}

FqMatrix sub(const Field& f, const FqMatrix& a, const FqMatrix& b) {
  require_same(a.dim(), b.dim());
  std::vector<Elem> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.sub(a.entries()[i], b.entries()[i]);
  return FqMatrix(a.dim(), std::move(e));
}

FqMatrix neg(const Field& f, const FqMatrix& a) {
  std::vector<Elem> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.neg(a.entries()[i]);
  return FqMatrix(a.dim(), std::move(e));
}

FqMatrix mul(const Field& f, const FqMatrix& a, const FqMatrix& b) {
  require_same(a.dim(), b.dim());
  const int d = a.dim();
  FqMatrix out(d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Elem acc = f.zero();
      for (int k = 0; k < d; ++k) acc = f.add(acc, f.mul(a.at(r, k), b.at(k, c)));
      out.at(r, c) = acc;
    }
  }
  return out;
}

FqVector apply(const Field& f, const FqMatrix& a, const FqVector& v) {
  require_same(static_cast<std::size_t>(a.dim()), v.size());
  FqVector out(v.size(), f.zero());
  for (int r = 0; r < a.dim(); ++r) {
    Elem acc = f.zero();
    for (int k = 0; k < a.dim(); ++k) acc = f.add(acc, f.mul(a.at(r, k), v[k]));
    out[r] = acc;
  }
  return out;
}

Elem trace(const Field& f, const FqMatrix& a) {
  Elem acc = f.zero();
  for (int i = 0; i < a.dim(); ++i) acc = f.add(acc, a.at(i, i));
  return acc;
}

namespace {
// Row-reduces m in place; returns rank and the determinant as a by-product.
std::pair<int, Elem> eliminate(const Field& f, FqMatrix m) {
  const int d = m.dim();
  Elem det = f.one();
  int rank = 0;
  for (int c = 0; c < d && rank < d; ++c) {
    int pivot = -1;
    for (int r = rank; r < d; ++r) {
      if (m.at(r, c).v != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det = f.zero();
      continue;
    }
    if (pivot != rank) {
      for (int k = 0; k < d; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
      det = f.neg(det);
    }
    const Elem pv = m.at(rank, c);
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (int r = rank + 1; r < d; ++r) {
      const Elem factor = f.mul(m.at(r, c), pinv);
      if (factor.v == 0) continue;
      for (int k = c; k < d; ++k) m.at(r, k) = f.sub(m.at(r, k), f.mul(factor, m.at(rank, k)));
    }
    ++rank;
  }
  if (rank < d) det = f.zero();
  return {rank, det};
}
}  // namespace

Elem det(const Field& f, const FqMatrix& a) {
  if (a.dim() == 2) return f.sub(f.mul(a.at(0, 0), a.at(1, 1)), f.mul(a.at(0, 1), a.at(1, 0)));
  return eliminate(f, a).second;
}

int rank(const Field& f, const FqMatrix& a) { return eliminate(f, a).first; }

bool is_zero(const FqMatrix& a) { return is_zero(a.entries()); }

FqMatrix sum(const Field& f, const std::vector<FqMatrix>& parts, int d) {
  FqMatrix acc(d);
  for (const auto& p : parts) acc = add(f, acc, p);
  return acc;
}

FqVector sum(const Field& f, const std::vector<FqVector>& parts, int d) {
  FqVector acc(d, f.zero());
  for (const auto& p : parts) acc = add(f, acc, p);
  return acc;
}

std::uint64_t index_of(const Field& f, const FqVector& v) {
  std::uint64_t idx = 0;
  for (Elem x : v) idx = idx * f.q() + x.v;
  return idx;
}

FqVector vector_at(const Field& f, std::uint64_t index, int d) {
  FqVector v(d);
  for (int i = d; i-- > 0;) {
    v[i] = Elem{static_cast<std::uint32_t>(index % f.q())};
    index /= f.q();
  }
  return v;
}

std::uint64_t index_of(const Field& f, const FqMatrix& m) { return index_of(f, m.entries()); }

FqMatrix matrix_at(const Field& f, std::uint64_t index, int d) {
  return FqMatrix(d, vector_at(f, index, d * d));
}

std::uint64_t ambient_size(const Field& f, int k, std::uint64_t limit) {
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= f.q();
    if (size > limit) {
      throw Error(ErrorCode::AmbientTooLarge,
                  "q^" + std::to_string(k) + " exceeds the limit of " + std::to_string(limit) + " elements");
    }
  }
  return size;
}

}  // namespace la
}  // namespace orthosum
