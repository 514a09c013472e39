#include "orthosum/triangle.hpp"

#include <algorithm>

#include "orthosum/error.hpp"
#include "orthosum/kernels.hpp"

namespace orthosum {

TriangleInvariant invariants(const Field& f, const FqMatrix& t) {
  if (t.dim() != 2) throw Error(ErrorCode::BadShape, "triangle invariants need a 2x2 matrix");
  const Elem a = t.at(0, 0), b = t.at(0, 1), c = t.at(1, 0), d = t.at(1, 1);
  return {f.add(f.sqr(a), f.sqr(c)), f.add(f.sqr(b), f.sqr(d)), f.add(f.mul(a, b), f.mul(c, d))};
}

std::vector<FqVector> second_column_solutions(const Field& f, Elem a, Elem c, Elem l2, Elem mu) {
  if (a.v == 0 && c.v == 0) throw Error(ErrorCode::ZeroFirstColumn, "first column must be nonzero");
  const Elem l1 = f.add(f.sqr(a), f.sqr(c));
  std::vector<FqVector> out;

  if (l1.v != 0) {
    // (b, d) = (mu/L1)(a, c) +- (sqrt(L1 L2 - mu^2)/L1)(-c, a). No division by
    // a or c, so the c = 0 case needs no separate branch.
    const Elem disc = f.sub(f.mul(l1, l2), f.sqr(mu));
    const auto roots = f.sqrt(disc);
    const Elem inv_l1 = f.inv(l1);
    const Elem along = f.mul(mu, inv_l1);
    for (Elem r : roots) {
      const Elem across = f.mul(r, inv_l1);
      out.push_back({f.sub(f.mul(along, a), f.mul(across, c)), f.add(f.mul(along, c), f.mul(across, a))});
    }
  } else if (mu.v != 0) {
    // Isotropic first column: a and c are both nonzero and the length
    // constraint becomes linear in the line parameter.
    const Elem inv_c = f.inv(c);
    const Elem offset = f.mul(mu, inv_c);
    const Elem numer = f.mul(f.sub(l2, f.sqr(offset)), c);
    const Elem t = f.div(numer, f.mul(f.from_int(2), f.mul(a, mu)));
    out.push_back({f.neg(f.mul(t, c)), f.add(f.mul(t, a), offset)});
  } else if (l2.v == 0) {
    for (std::uint32_t s = 0; s < f.q(); ++s) {
      const Elem t{s};
      out.push_back({f.neg(f.mul(t, c)), f.mul(t, a)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_realizable(const Field& f, const TriangleInvariant& inv) {
  return f.legendre(f.sub(f.mul(inv.l1, inv.l2), f.sqr(inv.mu))) == Legendre::Residue;
}

bool congruent(const Field& f, const FqMatrix& t, const FqMatrix& t2) {
  if (la::det(f, t).v == 0 || la::det(f, t2).v == 0) {
    throw Error(ErrorCode::DegenerateTriangle, "congruence is only defined for invertible 2x2 matrices");
  }
  return invariants(f, t) == invariants(f, t2);
}

Elem third_side(const Field& f, const TriangleInvariant& inv) {
  return f.sub(f.add(inv.l1, inv.l2), f.add(inv.mu, inv.mu));
}

Elem mu_from_sides(const Field& f, Elem l1, Elem l2, Elem l3) {
  return f.div(f.sub(f.add(l1, l2), l3), f.from_int(2));
}

bool triangle_exists_with_sides(const Field& f, Elem l1, Elem l2, Elem l3) {
  const Elem sigma2 = f.add(f.add(f.mul(l1, l2), f.mul(l1, l3)), f.mul(l2, l3));
  const Elem p2 = f.add(f.add(f.sqr(l1), f.sqr(l2)), f.sqr(l3));
  return f.legendre(f.sub(f.add(sigma2, sigma2), p2)) == Legendre::Residue;
}

std::uint64_t count_classes(std::uint64_t q) {
  if (q % 4 == 1) return q * (q * q - 1) / 2;
  return q * (q - 1) * (q - 1) / 2;
}

std::vector<TriangleInvariant> enumerate_classes(const Field& f) {
  const auto triples = kernels::omp::realizable_triples(f);
  std::vector<TriangleInvariant> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back({t[0], t[1], t[2]});
  return out;
}

FqMatrix class_representative(const Field& f, const TriangleInvariant& inv) {
  if (!is_realizable(f, inv)) throw Error(ErrorCode::UnrealizableInvariant, "L1 L2 - mu^2 is not a nonzero square");
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    for (std::uint32_t c = 0; c < f.q(); ++c) {
      if (a == 0 && c == 0) continue;
      const Elem ea{a}, ec{c};
      if (f.add(f.sqr(ea), f.sqr(ec)) != inv.l1) continue;
      const auto sols = second_column_solutions(f, ea, ec, inv.l2, inv.mu);
      for (const auto& s : sols) {
        FqMatrix t = FqMatrix::of2(ea, s[0], ec, s[1]);
        if (la::det(f, t).v != 0) return t;
      }
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no representative found");
}

}  // namespace orthosum
