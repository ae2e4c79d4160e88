"""Slow, independent reference computations used only by the tests.

Nothing here imports the package's character, plethysm or monoid code.
"""
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd


def perm_sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def cycle_type(p):
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            parts.append(length)
    return tuple(sorted(parts, reverse=True))


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def _poly_mul(f, g, cap):
    out = {}
    for a, x in f.items():
        for b, y in g.items():
            e = tuple(i + j for i, j in zip(a, b))
            if max(e) > cap:
                continue
            out[e] = out.get(e, 0) + x * y
    return out


def frobenius_character(lam, mu):
    """chi^lam(mu) as the coefficient of x^(lam+delta) in a_delta * p_mu,
    with as many variables as ``lam`` has rows."""
    m = max(len(lam), 1)
    lam = tuple(lam) + (0,) * (m - len(lam))
    delta = tuple(range(m - 1, -1, -1))
    target = tuple(a + b for a, b in zip(lam, delta))
    cap = max(target)
    poly = {}
    for w in permutations(range(m)):
        poly[tuple(delta[w[i]] for i in range(m))] = perm_sign(w)
    for k in mu:
        pk = {}
        for i in range(m):
            e = [0] * m
            e[i] = k
            pk[tuple(e)] = 1
        poly = _poly_mul(poly, pk, cap)
    return poly.get(target, 0)


def det(rows):
    """Exact determinant by cofactor expansion (small matrices only)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * det(minor)
    return total


def _gcd_of_minors(vectors, k):
    g = 0
    r = len(vectors[0]) if vectors else 0
    for rows in combinations(vectors, k):
        for cols in combinations(range(r), k):
            g = gcd(g, det([[row[c] for c in cols] for row in rows]))
    return g


def rank(vectors):
    vectors = [list(map(Fraction, v)) for v in vectors]
    rk = 0
    if not vectors:
        return 0
    ncols = len(vectors[0])
    for c in range(ncols):
        piv = next((i for i in range(rk, len(vectors)) if vectors[i][c] != 0), None)
        if piv is None:
            continue
        vectors[rk], vectors[piv] = vectors[piv], vectors[rk]
        for i in range(len(vectors)):
            if i != rk and vectors[i][c] != 0:
                f = vectors[i][c] / vectors[rk][c]
                vectors[i] = [a - f * b for a, b in zip(vectors[i], vectors[rk])]
        rk += 1
    return rk


def lattice_contains(gens, v):
    """v in the integer span of gens, via ranks and gcds of maximal minors."""
    gens = [tuple(g) for g in gens if any(g)]
    if not any(v):
        return True
    if not gens:
        return False
    k = rank(gens)
    if rank(gens + [tuple(v)]) != k:
        return False
    return _gcd_of_minors(gens, k) == _gcd_of_minors(gens + [tuple(v)], k)


def _solve_exact(cols, v):
    # exact solve of sum x_i cols_i = v for linearly independent cols
    r = len(v)
    k = len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(r)]
    piv_row = 0
    for c in range(k):
        p = next((i for i in range(piv_row, r) if rows[i][c] != 0), None)
        if p is None:
            return None
        rows[piv_row], rows[p] = rows[p], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [a / pv for a in rows[piv_row]]
        for i in range(r):
            if i != piv_row and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv_row])]
        piv_row += 1
    if any(rows[i][-1] != 0 for i in range(piv_row, r)):
        return None
    return [rows[i][-1] for i in range(k)]


def cone_contains(gens, v):
    """Caratheodory: v is in the cone iff it is a nonnegative combination of
    some linearly independent subset of the generators."""
    if not any(v):
        return True
    gens = [tuple(g) for g in gens if any(g)]
    for k in range(1, len(v) + 1):
        for subset in combinations(gens, k):
            if rank(list(subset)) != k:
                continue
            x = _solve_exact(list(subset), v)
            if x is not None and all(c >= 0 for c in x):
                return True
    return False


def monoid_contains(gens, v, max_coeff):
    """v is a nonnegative integer combination with coefficients <= max_coeff."""
    for coeffs in product(range(max_coeff + 1), repeat=len(gens)):
        if all(sum(c * g[i] for c, g in zip(coeffs, gens)) == v[i] for i in range(len(v))):
            return True
    return False


def latin_squares(n):
    rows = list(permutations(range(n)))

    def extend(square):
        if len(square) == n:
            yield list(square)
            return
        for r in rows:
            if all(r[j] != s[j] for s in square for j in range(n)):
                yield from extend(square + [r])

    yield from extend([])


def latin_square_sign(square):
    n = len(square)
    sign = 1
    for row in square:
        sign *= perm_sign(row)
    for j in range(n):
        sign *= perm_sign([square[i][j] for i in range(n)])
    return sign
