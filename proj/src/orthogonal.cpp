#include "orthosum/orthogonal.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orthosum/error.hpp"
#include "orthosum/vector_geometry.hpp"

namespace orthosum {

OrthogonalMatrix::OrthogonalMatrix(const Field& f, FqMatrix m) : m_(std::move(m)) {
  if (!is_orthogonal(f, m_)) throw Error(ErrorCode::BadShape, "matrix is not orthogonal");
}

bool OrthSumDecomposition::verify(const Field& f) const {
  if (parts.size() != declared_count) return false;
  FqMatrix acc(target.dim());
  for (const auto& p : parts) {
    if (p.dim() != target.dim() || !is_orthogonal(f, p.matrix())) return false;
    acc = la::add(f, acc, p.matrix());
  }
  return acc == target;
}

bool is_orthogonal(const Field& f, const FqMatrix& a) {
  return la::mul(f, a.transpose(), a) == FqMatrix::identity(f, a.dim());
}

std::vector<OrthogonalMatrix> enumerate_o2(const Field& f) {
  const auto circle = sphere(f, f.one(), 2);
  std::vector<OrthogonalMatrix> out;
  out.reserve(2 * circle.size());
  for (const auto& u : circle) out.emplace_back(f, FqMatrix::of2(u[0], f.neg(u[1]), u[1], u[0]));
  for (const auto& u : circle) out.emplace_back(f, FqMatrix::of2(u[0], u[1], u[1], f.neg(u[0])));
  return out;
}

OrthogonalMatrix reflection(const Field& f, const FqVector& w) {
  const Elem n = norm(f, w);
  if (n.v == 0) throw Error(ErrorCode::IsotropicMirror, "reflection mirror has length zero");
  const int d = static_cast<int>(w.size());
  const Elem factor = f.div(f.from_int(2), n);
  FqMatrix r = FqMatrix::identity(f, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, f.mul(w[i], w[j])));
  return OrthogonalMatrix(f, std::move(r));
}

OrthogonalMatrix witt_map(const Field& f, const FqVector& u, const FqVector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::BadShape, "vectors differ in dimension");
  if (la::is_zero(u) || la::is_zero(v)) throw Error(ErrorCode::ZeroVector, "Witt map needs nonzero vectors");
  const Elem nu = norm(f, u);
  if (nu != norm(f, v)) throw Error(ErrorCode::LengthMismatch, "vectors have different lengths");
  const int d = static_cast<int>(u.size());
  if (u == v) return OrthogonalMatrix(f, FqMatrix::identity(f, d));

  const FqVector diff = la::sub(f, u, v);
  if (norm(f, diff).v != 0) return reflection(f, diff);
  const FqVector sum = la::add(f, u, v);
  if (norm(f, sum).v != 0 && nu.v != 0) {
    // R_{u+v} u = -v, then R_v (-v) = v.
    return OrthogonalMatrix(f, la::mul(f, reflection(f, v).matrix(), reflection(f, sum).matrix()));
  }

  // u and v isotropic and orthogonal: route through an intermediate z of the
  // same length with non-isotropic differences on both sides.
  const std::uint64_t size = la::ambient_size(f, d, 10'000'000);
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    const FqVector z = la::vector_at(f, idx, d);
    if (norm(f, z) != nu) continue;
    const FqVector to_z = la::sub(f, u, z);
    const FqVector to_v = la::sub(f, z, v);
    if (norm(f, to_z).v == 0 || norm(f, to_v).v == 0) continue;
    return OrthogonalMatrix(f, la::mul(f, reflection(f, to_v).matrix(), reflection(f, to_z).matrix()));
  }
  throw Error(ErrorCode::SearchExhausted, "no intermediate vector for the Witt map");
}

std::uint64_t orth_sum_count(const Field& f, int d) {
  if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "orthogonal sums need d >= 2");
  const bool one_mod_four = f.q_is_1_mod_4();
  if (d == 2) return one_mod_four ? 8 : 6;
  std::uint64_t count = one_mod_four ? 8 : 9;
  for (int i = 2; i < d; ++i) count *= 6;
  return count;
}

std::vector<FqMatrix> first_col_unit_split(const Field& f, const FqMatrix& a) {
  const int d = a.dim();
  if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "first-column split needs d >= 3");
  const auto dec = decompose_unit_sum(f, a.column(0));
  std::vector<FqMatrix> out;
  for (std::size_t k = 0; k < dec.parts.size(); ++k) {
    FqMatrix m = k == 0 ? a : FqMatrix(d);
    m.set_column(0, dec.parts[k]);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

FqMatrix rotation_of(const Field& f, const FqVector& u) { return FqMatrix::of2(u[0], f.neg(u[1]), u[1], u[0]); }
FqMatrix reflection_of(const Field& f, const FqVector& u) { return FqMatrix::of2(u[0], u[1], u[1], f.neg(u[0])); }

FqMatrix swap01(const Field& f, int d) {
  FqMatrix p = FqMatrix::identity(f, d);
  p.at(0, 0) = f.zero();
  p.at(1, 1) = f.zero();
  p.at(0, 1) = f.one();
  p.at(1, 0) = f.one();
  return p;
}

}  // namespace

OrthSumDecomposition decompose_2x2(const Field& f, const FqMatrix& a) {
  if (a.dim() != 2) throw Error(ErrorCode::BadShape, "decompose_2x2 needs a 2x2 matrix");
  const Elem inv2 = f.inv(f.from_int(2));
  const Elem x = f.mul(f.add(a.at(0, 0), a.at(1, 1)), inv2);
  const Elem w = f.mul(f.sub(a.at(0, 0), a.at(1, 1)), inv2);
  const Elem z = f.mul(f.add(a.at(0, 1), a.at(1, 0)), inv2);
  const Elem y = f.mul(f.sub(a.at(1, 0), a.at(0, 1)), inv2);
  const FqVector rot_col{x, y};
  const FqVector ref_col{w, z};

  int rot_count = 4, ref_count = 4;
  if (!f.q_is_1_mod_4()) {
    if (la::is_zero(rot_col)) {
      rot_count = 2;  // B = I + (-I)
    } else if (la::is_zero(ref_col)) {
      ref_count = 2;
    } else {
      rot_count = ref_count = 3;
    }
  }
  const auto rot = decompose_unit_sum_exact(f, rot_col, rot_count);
  const auto ref = decompose_unit_sum_exact(f, ref_col, ref_count);

  OrthSumDecomposition out{a, {}, orth_sum_count(f, 2)};
  for (const auto& u : rot.parts) out.parts.emplace_back(f, rotation_of(f, u));
  for (const auto& u : ref.parts) out.parts.emplace_back(f, reflection_of(f, u));
  return out;
}

OrthSumDecomposition decompose_dxd(const Field& f, const FqMatrix& a) {
  const int d = a.dim();
  if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "decompose_dxd needs d >= 3");
  const std::uint64_t r = orth_sum_count(f, d - 1);
  if (r % 2 != 0) throw std::logic_error("block count must be even for the sign pairing");

  const FqMatrix swap = swap01(f, d);
  const Elem one = f.one(), minus_one = f.neg(f.one());

  OrthSumDecomposition out{a, {}, orth_sum_count(f, d)};
  const auto split = first_col_unit_split(f, a);
  for (const auto& part : split) {
    // W sends the unit first column to e1; undo with W^T at the end.
    const FqMatrix wm = witt_map(f, part.column(0), la::unit_basis(f, d, 0)).matrix();
    const FqMatrix wt = wm.transpose();
    const FqMatrix m = la::mul(f, wm, part);

    auto emit = [&](const FqMatrix& block, bool swap_left, bool swap_right) {
      const auto sub = decompose_orthogonal(f, block);
      for (std::size_t j = 0; j < sub.parts.size(); ++j) {
        FqMatrix lifted = FqMatrix::embed(j % 2 == 0 ? one : minus_one, sub.parts[j].matrix());
        if (swap_left) lifted = la::mul(f, swap, lifted);
        if (swap_right) lifted = la::mul(f, lifted, swap);
        out.parts.emplace_back(f, la::mul(f, wt, lifted));
      }
    };

    // E: lower-right block.
    emit(m.minor11(), false, false);
    // G: first row without its corner, moved to the second row.
    FqMatrix g_block(d - 1);
    for (int c = 1; c < d; ++c) g_block.at(0, c - 1) = m.at(0, c);
    emit(g_block, true, false);
    // H: e1 e1^T = P (e2 e2^T) P.
    FqMatrix h_block(d - 1);
    h_block.at(0, 0) = one;
    emit(h_block, true, true);
  }

  const FqMatrix id = FqMatrix::identity(f, d);
  const FqMatrix neg_id = la::neg(f, id);
  while (out.parts.size() < out.declared_count) {
    out.parts.emplace_back(f, id);
    out.parts.emplace_back(f, neg_id);
  }
  if (out.parts.size() != out.declared_count) throw std::logic_error("part count overshoot");
  return out;
}

OrthSumDecomposition decompose_orthogonal(const Field& f, const FqMatrix& a) {
  if (a.dim() == 2) return decompose_2x2(f, a);
  return decompose_dxd(f, a);
}

std::vector<OrthogonalMatrix> generate_orthogonal_group(const Field& f, int d) {
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "group needs d >= 1");
  const std::uint64_t size = la::ambient_size(f, d, 10'000'000);
  std::vector<FqMatrix> mirrors;
  std::set<std::uint64_t> seen_mirrors;
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    const FqVector w = la::vector_at(f, idx, d);
    if (norm(f, w).v == 0) continue;
    FqMatrix r = reflection(f, w).matrix();
    if (seen_mirrors.insert(la::index_of(f, r)).second) mirrors.push_back(std::move(r));
  }

  std::set<std::uint64_t> seen{la::index_of(f, FqMatrix::identity(f, d))};
  std::vector<FqMatrix> queue{FqMatrix::identity(f, d)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& r : mirrors) {
      FqMatrix next = la::mul(f, r, queue[head]);
      if (seen.insert(la::index_of(f, next)).second) queue.push_back(std::move(next));
    }
  }
  std::vector<OrthogonalMatrix> out;
  out.reserve(seen.size());
  for (std::uint64_t idx : seen) out.emplace_back(f, la::matrix_at(f, idx, d));
  return out;
}

}  // namespace orthosum
