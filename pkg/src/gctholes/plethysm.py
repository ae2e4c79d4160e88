"""Plethysms h_d[h_n] in the power-sum basis and their Schur multiplicities.

``mult_sym_sym(lam, d, n)`` is the multiplicity of the GL-irreducible of
highest weight ``lam`` in Sym^d Sym^n V, for any V with at least
``len(lam)`` dimensions.  It is obtained as a character dot product
against the power-sum expansion.  ``brute_force_mult`` computes the same
number by counting monomials and taking the Weyl alternant; it shares no
code with the character route and serves as the oracle in the tests.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import lcm

from .characters import _mn
from .errors import GuardError, IntegralityError
from .partitions import enumerate_partitions, z_of

__all__ = [
    "PowerSumVector",
    "SchurExpansion",
    "h_in_p",
    "h_plethysm_h",
    "schur_mult",
    "mult_sym_sym",
    "schur_expansion",
    "brute_force_mult",
    "BRUTE_FORCE_MAX_SIZE",
    "BRUTE_FORCE_MAX_ROWS",
]

BRUTE_FORCE_MAX_SIZE = 16
BRUTE_FORCE_MAX_ROWS = 4


@dataclass
class PowerSumVector:
    """Symmetric function of degree ``degree`` as ``{mu: coefficient of p_mu}``."""

    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for mu in self.coeffs:
            if sum(mu) != self.degree:
                raise ValueError(f"{mu} is not a partition of {self.degree}")
        self._scaled = None

    def scaled(self):
        """``(L, {mu: L*c_mu})`` with ``L`` the lcm of all denominators."""
        if self._scaled is None:
            denom = 1
            for c in self.coeffs.values():
                denom = lcm(denom, Fraction(c).denominator)
            ints = {mu: int(c * denom) for mu, c in self.coeffs.items() if c}
            self._scaled = (denom, ints)
        return self._scaled


@dataclass
class SchurExpansion:
    degree: int
    mults: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(m <= 0 for m in self.mults.values()):
            raise ValueError("Schur multiplicities must be positive where present")


def _times(f, g):
    out = {}
    for a, x in f.items():
        for b, y in g.items():
            key = tuple(sorted(a + b, reverse=True))
            out[key] = out.get(key, 0) + x * y
    return out


@lru_cache(maxsize=None)
def h_in_p(n):
    """h_n = sum over rho of p_rho / z_rho."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return PowerSumVector(n, {rho: Fraction(1, z_of(rho)) for rho in enumerate_partitions(n)})


@lru_cache(maxsize=None)
def _pk_of_h(k, n):
    # p_k[h_n]: every cycle of every term is stretched by k
    return {tuple(k * p for p in rho): c for rho, c in h_in_p(n).coeffs.items()}


@lru_cache(maxsize=None)
def h_plethysm_h(d, n):
    """Power-sum expansion of the plethysm h_d[h_n] (degree ``d*n``)."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    total = {}
    for tau in enumerate_partitions(d):
        term = {(): Fraction(1, z_of(tau))}
        for k in tau:
            term = _times(term, _pk_of_h(k, n))
        for mu, c in term.items():
            total[mu] = total.get(mu, 0) + c
    return PowerSumVector(d * n, {mu: c for mu, c in total.items() if c})


def schur_mult(lam, f, expect_nonnegative=False):
    """Coefficient of s_lam in ``f``, using <p_mu, s_lam> = chi^lam(mu)."""
    lam = tuple(lam)
    if sum(lam) != f.degree:
        raise ValueError(f"size mismatch: |{lam}| != {f.degree}")
    denom, ints = f.scaled()
    total = 0
    for mu, c in ints.items():
        total += c * _mn(lam, mu)
    q, r = divmod(total, denom)
    if r:
        raise IntegralityError(f"non-integral Schur coefficient {Fraction(total, denom)} at {lam}")
    if expect_nonnegative and q < 0:
        raise IntegralityError(f"negative multiplicity {q} at {lam}")
    return q


def mult_sym_sym(lam, outer, inner):
    """Multiplicity of highest weight ``lam`` in Sym^outer Sym^inner V."""
    lam = tuple(lam)
    if sum(lam) != outer * inner:
        raise ValueError(f"size mismatch: |{lam}| != {outer}*{inner}")
    return schur_mult(lam, h_plethysm_h(outer, inner), expect_nonnegative=True)


def schur_expansion(outer, inner, max_rows=0):
    """The Schur expansion of Sym^outer Sym^inner, restricted to at most
    ``max_rows`` rows (0 for no restriction)."""
    n = outer * inner
    mults = {}
    for lam in enumerate_partitions(n, max_rows):
        m = mult_sym_sym(lam, outer, inner)
        if m:
            mults[lam] = m
    return SchurExpansion(n, mults)


def _sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv & 1 else 1


def _weight_counts(outer, inner, m, cap):
    # number of size-`outer` multisets of degree-`inner` monomials in m
    # variables, by total exponent vector; exponents above `cap` are pruned
    monomials = []
    for combo in combinations_with_replacement(range(m), inner):
        e = [0] * m
        for v in combo:
            e[v] += 1
        monomials.append(tuple(e))
    layers = [{(0,) * m: 1}] + [{} for _ in range(outer)]
    for alpha in monomials:
        for c in range(1, outer + 1):
            prev, cur = layers[c - 1], layers[c]
            for e, cnt in list(prev.items()):
                new = tuple(x + y for x, y in zip(e, alpha))
                if max(new) > cap:
                    continue
                cur[new] = cur.get(new, 0) + cnt
    return layers[outer]


def brute_force_mult(lam, outer, inner, max_size=BRUTE_FORCE_MAX_SIZE, max_rows=BRUTE_FORCE_MAX_ROWS):
    """Same value as :func:`mult_sym_sym`, from the weight multiplicities of
    Sym^outer Sym^inner C^m (m = number of rows) and the Weyl alternant."""
    lam = tuple(lam)
    if sum(lam) != outer * inner:
        raise ValueError(f"size mismatch: |{lam}| != {outer}*{inner}")
    if outer * inner > max_size or len(lam) > max_rows:
        raise GuardError(f"brute force limited to size <= {max_size} and <= {max_rows} rows")
    m = len(lam)
    if m == 0:
        return 1
    delta = tuple(range(m - 1, -1, -1))
    weights = _weight_counts(outer, inner, m, lam[0] + m - 1)
    total = 0
    for w in permutations(range(m)):
        beta = tuple(lam[i] + delta[i] - delta[w[i]] for i in range(m))
        if min(beta) < 0:
            continue
        total += _sign(w) * weights.get(beta, 0)
    return total
