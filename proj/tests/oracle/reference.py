"""Naive prime-field reference used to derive the frozen values in
tests/frozen_values.hpp. Shares no code with the C++ library.

Run: python3 tests/oracle/reference.py
"""
import cmath
import itertools
import math


def chi(p, x):
    return cmath.exp(2j * math.pi * (x % p) / p)


def circle(p, t=1):
    return [(x, y) for x in range(p) for y in range(p) if (x * x + y * y) % p == t % p]


def o2(p):
    rot = [((a, (-b) % p), (b, a)) for a, b in circle(p)]
    ref = [((a, b), (b, (-a) % p)) for a, b in circle(p)]
    return rot + ref


def matmul(p, a, b):
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(2)) % p for c in range(2)) for r in range(2))


def trace_pair(p, a, g):
    m = matmul(p, a, g)
    return (m[0][0] + m[1][1]) % p


def eigen(p, a):
    return sum(chi(p, trace_pair(p, a, g)) for g in o2(p))


def all_mats(p):
    for a, b, c, d in itertools.product(range(p), repeat=4):
        yield ((a, b), (c, d))


def bfs(p, gens, size_k):
    """Distances in the Cayley digraph on F_p^size_k, as a dict."""
    dist = {}
    frontier = []
    for g in gens:
        if g not in dist:
            dist[g] = 1
            frontier.append(g)
    m = 1
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((u + v) % p for u, v in zip(x, g))
                if y not in dist:
                    dist[y] = m + 1
                    nxt.append(y)
        frontier = nxt
        m += 1
    return dist


def flat(m):
    return tuple(m[0]) + tuple(m[1])


def orbit_count(p):
    gl = [m for m in all_mats(p) if (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p]
    seen, count = set(), 0
    for m in gl:
        if m in seen:
            continue
        count += 1
        for g in o2(p):
            seen.add(matmul(p, g, m))
    return count, len(gl)


def kloosterman(p, a, b):
    return sum(chi(p, a * x + b * pow(x, -1, p)) for x in range(1, p))


def main():
    p = 5
    ident = ((1, 0), (0, 1))
    print("lambda_I q5", eigen(p, ident))
    print("sphere_fourier (2,0) t1 q5", sum(chi(p, -(2 * x)) for x, y in circle(p)))
    print("kloosterman(1,1) q5", kloosterman(p, 1, 1))
    # (1,1,0) class: identity has L1=L2=1, mu=0
    print("lambda_{1,1,0} q5", eigen(p, ident))
    eigs = {m: eigen(p, m) for m in all_mats(p)}
    mx = max(abs(v) for m, v in eigs.items() if m != ((0, 0), (0, 0)))
    print("n_star q5", p ** 4 / len(o2(p)) * mx, "max", mx)
    print("parseval q5", sum(abs(v) ** 2 for v in eigs.values()), p ** 4 * len(o2(p)))
    for q in (3, 5, 7, 11):
        d = bfs(q, [flat(g) for g in o2(q)], 4)
        print("o2 diameter", q, max(d.values()), "reach", len(d) == q ** 4)
    d5 = bfs(5, [flat(g) for g in o2(5)], 4)
    print("dist [[1,0],[1,0]] q5", d5[(1, 0, 1, 0)])
    u5 = bfs(5, circle(5), 2)
    print("dist (2,2) q5", u5[(2, 2)])
    u3 = bfs(3, circle(3), 2)
    print("q3 unit max dist", max(u3.values()), len(u3))
    for q in (7, 11):
        s3 = [(x, y, z) for x in range(q) for y in range(q) for z in range(q) if (x * x + y * y + z * z) % q == 1]
        d = bfs(q, s3, 3)
        a, b = next((a, b) for a in range(q) for b in range(q) if (a * a + b * b) % q == q - 1)
        print("q", q, "(a,b,1) min", d[(a, b, 1)], "(a,b,-1) min", d[(a, b, q - 1)])
    for q in (3, 5, 7):
        print("orbits", q, orbit_count(q))
    for q in (3, 5, 7, 11, 13):
        s = circle(q)
        two = {((u[0] + v[0]) % q, (u[1] + v[1]) % q) for u in s for v in s}
        good = 0
        for L in range(q):
            vecs = [(x, y) for x in range(q) for y in range(q) if (x * x + y * y) % q == L]
            if all(v in two for v in vecs):
                good += 1
        print("good lengths", q, good)
    for q in (3, 5, 7, 11, 13):
        print("sphere sizes", q, [len(circle(q, t)) for t in range(q)])


if __name__ == "__main__":
    main()
