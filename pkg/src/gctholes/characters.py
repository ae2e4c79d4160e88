"""Irreducible characters of the symmetric group by Murnaghan-Nakayama.

All values are Python integers; inner products are ``Fraction``.  The
recursion strips border strips of length ``mu[0]`` (the largest remaining
cycle) and memoizes on the pair ``(shape, remaining cycle type)``.  Since
``mu`` is consumed from the front, every cached key's cycle type is a
suffix of some caller's ``mu``, which keeps the cache well shared across
a scan.

The cache is unbounded by default; set ``GCTHOLES_CHAR_CACHE`` to a
positive integer to bound it (LRU).
"""
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .partitions import enumerate_partitions, z_of

__all__ = [
    "mn_character",
    "character",
    "square_class",
    "ClassFunction",
    "inner_product",
    "clear_cache",
]


def _cache_size():
    raw = os.environ.get("GCTHOLES_CHAR_CACHE", "")
    try:
        size = int(raw)
    except ValueError:
        return None
    return size if size > 0 else None


@lru_cache(maxsize=_cache_size())
def _mn(shape, mu):
    if not mu:
        return 1
    if len(shape) == 1:
        return 1
    r = mu[0]
    rest = mu[1:]
    n = len(shape)
    # beta numbers (first-column hook lengths), strictly decreasing
    beta = [shape[i] + n - 1 - i for i in range(n)]
    occupied = set(beta)
    total = 0
    for i, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        # leg length = beads strictly between target and b
        leg = 0
        j = i + 1
        while j < n and beta[j] > target:
            leg += 1
            j += 1
        new_beta = beta[:i] + beta[i + 1:j] + [target] + beta[j:]
        new_shape = tuple(x - (n - 1 - k) for k, x in enumerate(new_beta))
        while new_shape and new_shape[-1] == 0:
            new_shape = new_shape[:-1]
        value = _mn(new_shape, rest)
        total += -value if leg & 1 else value
    return total


def mn_character(lam, mu):
    """The character value chi^lam at the class of cycle type ``mu``."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def clear_cache():
    _mn.cache_clear()


def square_class(mu):
    """Cycle type of sigma**2 for sigma of cycle type ``mu``."""
    parts = []
    for c in mu:
        if c % 2:
            parts.append(c)
        else:
            parts.extend((c // 2, c // 2))
    return tuple(sorted(parts, reverse=True))


@dataclass
class ClassFunction:
    """A class function on S_N, stored sparsely over cycle types."""

    size: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        for mu in self.values:
            if sum(mu) != self.size:
                raise ValueError(f"class {mu} is not a partition of {self.size}")

    def __getitem__(self, mu):
        return self.values.get(tuple(mu), 0)

    def __mul__(self, other):
        if self.size != other.size:
            raise ValueError("size mismatch")
        vals = {mu: v * other[mu] for mu, v in self.values.items()}
        return ClassFunction(self.size, {mu: v for mu, v in vals.items() if v})


def character(lam):
    """chi^lam as a :class:`ClassFunction` over all classes of S_|lam|."""
    n = sum(lam)
    vals = {}
    for mu in enumerate_partitions(n):
        v = _mn(tuple(lam), mu)
        if v:
            vals[mu] = v
    return ClassFunction(n, vals)


def inner_product(f, g):
    if f.size != g.size:
        raise ValueError(f"size mismatch: {f.size} != {g.size}")
    total = Fraction(0)
    for mu, v in f.values.items():
        w = g[mu]
        if w:
            total += Fraction(v * w, z_of(mu))
    return total
