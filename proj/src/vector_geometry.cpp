#include "orthosum/vector_geometry.hpp"

#include <cmath>
#include <string>

#include "orthosum/error.hpp"
#include "orthosum/kernels.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/triangle.hpp"

namespace orthosum {

Elem norm(const Field& f, const FqVector& v) {
  Elem acc = f.zero();
  for (Elem x : v) acc = f.add(acc, f.sqr(x));
  return acc;
}

std::vector<FqVector> sphere(const Field& f, Elem t, int d) {
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "sphere needs d >= 1");
  const auto idx = kernels::omp::sphere_points(f, t, d);
  std::vector<FqVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(la::vector_at(f, i, d));
  return out;
}

std::uint64_t sphere_count(const Field& f, Elem t, int d) {
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "sphere needs d >= 1");
  return kernels::omp::sphere_points(f, t, d).size();
}

std::uint64_t sphere_size_formula(const Field& f, Elem t) {
  const long long q = f.q();
  const long long eta_minus_one = f.q_is_1_mod_4() ? 1 : -1;
  const long long v = t.v == 0 ? q - 1 : -1;
  return static_cast<std::uint64_t>(q + eta_minus_one * v);
}

bool two_unit_representable(const Field& f, Elem length) {
  if (length.v == 0) return false;
  const Elem four = f.from_int(4);
  return f.is_square(f.sub(f.mul(four, length), f.sqr(length)));
}

std::uint64_t good_set_size(std::uint64_t q) { return q % 4 == 3 ? (q + 3) / 2 : (q - 1) / 2; }

bool zero_three_units_possible(std::uint64_t p, std::uint64_t n) {
  const auto r = p % 12;
  return r == 1 || r == 3 || r == 11 || n % 2 == 0;
}

bool UnitSumDecomposition::verify(const Field& f) const {
  const int d = static_cast<int>(target.size());
  for (const auto& part : parts) {
    if (static_cast<int>(part.size()) != d || norm(f, part) != f.one()) return false;
  }
  return !parts.empty() && la::sum(f, parts, d) == target;
}

int unit_sum_bound(const Field& f, int d, bool target_is_zero) {
  if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "unit sums need d >= 2");
  const bool three_mod_four = !f.q_is_1_mod_4();
  if (d == 2) {
    if (f.q() == 3) return 2;
    return (three_mod_four && !target_is_zero) ? 3 : 4;
  }
  if (d == 3) return three_mod_four ? 3 : 2;
  return 2;
}

bool walk_threshold_holds(std::uint64_t q, std::uint64_t s1) {
  const double ratio = 2.0 * std::sqrt(static_cast<double>(q)) / static_cast<double>(s1);
  return static_cast<double>(s1) >= ratio * ratio * ratio;
}

bool walk_threshold_isotropic_holds(std::uint64_t q, std::uint64_t s1, std::uint64_t s0) {
  const double ratio = 2.0 * std::sqrt(static_cast<double>(q)) / static_cast<double>(s1);
  return std::sqrt(static_cast<double>(s1) * static_cast<double>(s0)) > ratio * ratio * ratio;
}

namespace unit_sum {

namespace {

std::vector<FqVector> zero_pair(const Field& f, int d) {
  const FqVector e1 = la::unit_basis(f, d, 0);
  return {e1, la::neg(f, e1)};
}

// Maps parts of a decomposition of `normal_form` onto the same decomposition
// of v.
std::vector<FqVector> lift(const Field& f, const FqVector& normal_form, const FqVector& v,
                           std::vector<FqVector> parts) {
  if (normal_form == v) return parts;
  const FqMatrix w = witt_map(f, normal_form, v).matrix();
  for (auto& p : parts) p = la::apply(f, w, p);
  return parts;
}

}  // namespace

std::pair<Elem, Elem> two_squares(const Field& f, Elem value) {
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    const auto roots = f.sqrt(f.sub(value, f.sqr(Elem{a})));
    if (!roots.empty()) return {Elem{a}, roots.front()};
  }
  throw Error(ErrorCode::SearchExhausted, "no two-squares representation");
}

std::optional<std::vector<FqVector>> two_in_plane(const Field& f, const FqVector& v) {
  if (v.size() != 2 || la::is_zero(v)) return std::nullopt;
  const Elem l = norm(f, v);
  if (!two_unit_representable(f, l)) return std::nullopt;
  const Elem half_l = f.div(l, f.from_int(2));
  const auto sols = second_column_solutions(f, v[0], v[1], f.one(), half_l);
  if (sols.empty()) return std::nullopt;
  return std::vector<FqVector>{sols.front(), la::sub(f, v, sols.front())};
}

std::optional<std::vector<FqVector>> three_in_plane(const Field& f, const FqVector& v) {
  if (v.size() != 2 || la::is_zero(v)) return std::nullopt;
  const Elem tau = norm(f, v);
  if (tau.v == 0) return std::nullopt;
  if (tau == f.one()) return std::vector<FqVector>{v, la::neg(f, v), v};

  const Elem inv2 = f.inv(f.from_int(2));
  for (std::uint32_t li = 1; li < f.q(); ++li) {
    const Elem l{li};
    if (!two_unit_representable(f, l)) continue;
    // Triangle 0, v, u with ||u|| = 1 and ||v - u|| = l.
    const Elem mu = f.mul(f.sub(f.add(tau, f.one()), l), inv2);
    if (!f.is_square(f.sub(tau, f.sqr(mu)))) continue;
    const auto sols = second_column_solutions(f, v[0], v[1], f.one(), mu);
    if (sols.empty()) continue;
    const FqVector u = sols.front();
    const auto rest = two_in_plane(f, la::sub(f, v, u));
    if (!rest) continue;
    return std::vector<FqVector>{u, (*rest)[0], (*rest)[1]};
  }
  return std::nullopt;
}

std::optional<std::vector<FqVector>> four_in_plane(const Field& f, const FqVector& v) {
  if (v.size() != 2) return std::nullopt;
  const auto circle = sphere(f, f.one(), 2);
  for (const auto& u1 : circle) {
    const FqVector r1 = la::sub(f, v, u1);
    for (const auto& u2 : circle) {
      const FqVector w = la::sub(f, r1, u2);
      if (la::is_zero(w)) {
        auto z = zero_pair(f, 2);
        return std::vector<FqVector>{u1, u2, z[0], z[1]};
      }
      if (auto rest = two_in_plane(f, w)) return std::vector<FqVector>{u1, u2, (*rest)[0], (*rest)[1]};
    }
  }
  return std::nullopt;
}

std::vector<FqVector> in_space(const Field& f, const FqVector& v) {
  if (la::is_zero(v)) return zero_pair(f, 3);
  const Elem l = norm(f, v);
  const Elem zero = f.zero(), one = f.one();

  if (l.v != 0) {
    const Elem four = f.from_int(4);
    if (l == four) {
      const FqVector e1 = la::unit_basis(f, 3, 0);
      return lift(f, {f.from_int(2), zero, zero}, v, {e1, e1});
    }
    const auto [a, b] = two_squares(f, l);
    // Find u with 4L - L^2 - 4L u^2 a square; the isoceles triangle with
    // sides (L, 1 - u^2, 1 - u^2) then lifts to two unit vectors.
    const Elem base = f.sub(f.mul(four, l), f.sqr(l));
    const Elem four_l = f.mul(four, l);
    const Elem half_l = f.div(l, f.from_int(2));
    for (std::uint32_t ui = 0; ui < f.q(); ++ui) {
      const Elem u{ui};
      if (!f.is_square(f.sub(base, f.mul(four_l, f.sqr(u))))) continue;
      const auto sols = second_column_solutions(f, a, b, f.sub(one, f.sqr(u)), half_l);
      if (sols.empty()) continue;
      const Elem c = sols.front()[0], t = sols.front()[1];
      std::vector<FqVector> parts{{c, t, u}, {f.sub(a, c), f.sub(b, t), f.neg(u)}};
      return lift(f, {a, b, zero}, v, std::move(parts));
    }
    throw Error(ErrorCode::SearchExhausted, "no lifting height u for length " + std::to_string(l.v));
  }

  if (f.q_is_1_mod_4()) {
    // (1, i, 0) = (1, i, 1) + (0, 0, -1).
    const Elem i = f.i();
    return lift(f, {one, i, zero}, v, {{one, i, one}, {zero, zero, f.neg(one)}});
  }
  // q = 3 mod 4: (a, b, 1) with a^2 + b^2 = -1 needs three parts.
  const auto [a, b] = two_squares(f, f.neg(one));
  auto parts = in_space(f, {a, b, zero});
  parts.push_back({zero, zero, one});
  return lift(f, {a, b, one}, v, std::move(parts));
}

std::vector<FqVector> high_dimension(const Field& f, const FqVector& v) {
  const int d = static_cast<int>(v.size());
  if (la::is_zero(v)) return zero_pair(f, d);
  const Elem l = norm(f, v);
  const Elem zero = f.zero(), one = f.one();
  const Elem four = f.from_int(4);
  const Elem inv2 = f.inv(f.from_int(2));

  FqVector normal(d, zero);
  FqVector p1(d, zero), p2(d, zero);
  if (l == four) {
    normal[0] = f.from_int(2);
    p1[0] = one;
    p2[0] = one;
  } else if (l.v != 0) {
    const auto [a, b] = two_squares(f, l);
    const auto [s, t] = two_squares(f, f.sub(one, f.div(l, four)));
    normal[0] = a;
    normal[1] = b;
    p1 = {f.mul(a, inv2), f.mul(b, inv2), s, t};
    p2 = {f.mul(a, inv2), f.mul(b, inv2), f.neg(s), f.neg(t)};
    p1.resize(d, zero);
    p2.resize(d, zero);
  } else {
    const auto [a, b] = two_squares(f, f.neg(one));
    normal[0] = a;
    normal[1] = b;
    normal[2] = one;
    p1 = {f.mul(a, inv2), f.mul(b, inv2), inv2, one};
    p2 = {f.mul(a, inv2), f.mul(b, inv2), inv2, f.neg(one)};
    p1.resize(d, zero);
    p2.resize(d, zero);
  }
  return lift(f, normal, v, {p1, p2});
}

}  // namespace unit_sum

UnitSumDecomposition decompose_unit_sum(const Field& f, const FqVector& v) {
  const int d = static_cast<int>(v.size());
  if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "unit sums need d >= 2, got " + std::to_string(d));
  UnitSumDecomposition out{v, {}};
  if (d == 2) {
    if (la::is_zero(v)) {
      const FqVector e1 = la::unit_basis(f, 2, 0);
      out.parts = {e1, la::neg(f, e1)};
    } else if (auto two = unit_sum::two_in_plane(f, v)) {
      out.parts = std::move(*two);
    } else if (auto three = unit_sum::three_in_plane(f, v)) {
      out.parts = std::move(*three);
    } else if (auto four = unit_sum::four_in_plane(f, v)) {
      out.parts = std::move(*four);
    } else {
      throw Error(ErrorCode::SearchExhausted, "no plane unit-vector decomposition found");
    }
  } else if (d == 3) {
    out.parts = unit_sum::in_space(f, v);
  } else {
    out.parts = unit_sum::high_dimension(f, v);
  }
  return out;
}

UnitSumDecomposition decompose_unit_sum_exact(const Field& f, const FqVector& v, int count) {
  if (v.size() != 2) throw Error(ErrorCode::BadShape, "exact unit sums are plane-only");
  UnitSumDecomposition out{v, {}};
  const FqVector e1 = la::unit_basis(f, 2, 0);
  const FqVector minus_e1 = la::neg(f, e1);
  std::optional<std::vector<FqVector>> parts;
  switch (count) {
    case 2:
      parts = la::is_zero(v) ? std::optional(std::vector<FqVector>{e1, minus_e1}) : unit_sum::two_in_plane(f, v);
      break;
    case 3:
      parts = unit_sum::three_in_plane(f, v);
      break;
    case 4:
      if (la::is_zero(v)) {
        parts = std::vector<FqVector>{e1, minus_e1, e1, minus_e1};
      } else if (auto two = unit_sum::two_in_plane(f, v)) {
        two->push_back(e1);
        two->push_back(minus_e1);
        parts = std::move(two);
      } else {
        parts = unit_sum::four_in_plane(f, v);
      }
      break;
    default:
      throw Error(ErrorCode::BadShape, "exact plane unit sums support 2, 3 or 4 parts");
  }
  if (!parts) {
    throw Error(ErrorCode::SearchExhausted, "no " + std::to_string(count) + "-part unit decomposition exists here");
  }
  out.parts = std::move(*parts);
  return out;
}

}  // namespace orthosum
