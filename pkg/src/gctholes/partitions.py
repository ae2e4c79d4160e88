"""Integer partitions stored as plain tuples.

A partition is a weakly decreasing tuple of positive integers with no
trailing zeros; ``()`` is the unique partition of 0.  The same tuple is
read as a GL highest weight (padded with zeros as needed) or as the cycle
type of a permutation.
"""
from collections import Counter
from math import factorial

__all__ = [
    "make_partition",
    "is_partition",
    "enumerate_partitions",
    "conjugate",
    "z_of",
    "rectangle",
    "add_to_first_row",
    "cut_columns",
    "pad_columns",
    "lambda_of_lemma",
    "is_hook",
    "hook_length_dimension",
    "gl_dimension",
    "format_partition",
    "parse_partition",
]


def make_partition(parts):
    """Canonicalize an iterable of nonnegative integers into a partition.

    Zeros are dropped and the parts are sorted in decreasing order.
    Negative parts raise ``ValueError``.
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(t):
    return (
        isinstance(t, tuple)
        and all(isinstance(p, int) and p > 0 for p in t)
        and all(t[i] >= t[i + 1] for i in range(len(t) - 1))
    )


def _parts_desc(n, max_len, max_part):
    # recursive generator in reverse-lexicographic order
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_len < n:
            break
        for rest in _parts_desc(n - first, max_len - 1, first):
            yield (first,) + rest


def enumerate_partitions(n, max_len=0, max_part=0):
    """All partitions of ``n`` with at most ``max_len`` parts, each at most
    ``max_part``, in reverse-lexicographic order.  A bound of 0 means
    unbounded.

    >>> enumerate_partitions(4, 2)
    [(4,), (3, 1), (2, 2)]
    """
    if n < 0 or max_len < 0 or max_part < 0:
        raise ValueError("size and bounds must be nonnegative")
    return list(_parts_desc(n, max_len or n, max_part or n))


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def z_of(mu):
    """Order of the centralizer of a permutation with cycle type ``mu``."""
    z = 1
    for part, mult in Counter(mu).items():
        z *= part**mult * factorial(mult)
    return z


def rectangle(rows, length):
    """The rectangular partition with ``rows`` rows of length ``length``."""
    if rows < 1 or length < 0:
        raise ValueError("need rows >= 1 and length >= 0")
    return (length,) * rows if length else ()


def add_to_first_row(lam, t):
    if t < 0:
        raise ValueError("cannot add a negative amount")
    if t == 0:
        return tuple(lam)
    if not lam:
        return (t,)
    return (lam[0] + t,) + tuple(lam[1:])


def cut_columns(lam, n, c):
    """Remove ``c`` full columns of length ``n`` from ``lam``.

    Needs ``len(lam) == n`` and ``lam[n-1] >= c`` unless ``c == 0``.
    """
    if c < 0 or n < 1:
        raise ValueError("need n >= 1 and c >= 0")
    if c == 0:
        return tuple(lam)
    if len(lam) != n:
        raise ValueError(f"{lam} does not have exactly {n} rows; cannot cut {c} columns")
    if lam[-1] < c:
        raise ValueError(f"{lam} has a row shorter than {c}")
    return make_partition(p - c for p in lam)


def pad_columns(lam, n, c):
    """Inverse of :func:`cut_columns`: add ``c`` to each of the first ``n`` rows."""
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    padded = list(lam) + [0] * (n - len(lam))
    return make_partition(p + c for p in padded)


def lambda_of_lemma(n, k):
    """Partition of size ``n*k`` occurring in Sym^n Sym^k.

    Start from the two-row rectangle of length ``k(k-1)/2``, append a
    column of length ``k`` and add ``(n-k)k`` boxes to the first row.
    """
    if k < 2 or n < k:
        raise ValueError(f"need n >= k >= 2, got n={n}, k={k}")
    d = k * (k - 1) // 2
    mu = (d + 1, d + 1) + (1,) * (k - 2)
    return add_to_first_row(mu, (n - k) * k)


def is_hook(lam):
    return len(lam) <= 1 or all(p == 1 for p in lam[1:])


def hook_length_dimension(lam):
    """Number of standard Young tableaux of shape ``lam``."""
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // prod


def format_partition(lam):
    return ",".join(map(str, lam)) if lam else "-"


def parse_partition(text):
    """Inverse of :func:`format_partition`; rejects non-partitions."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def gl_dimension(lam, m):
    """Dimension of the irreducible polynomial GL_m-module of highest weight
    ``lam`` (hook-content formula); 0 when ``lam`` has more than ``m`` rows."""
    if len(lam) > m:
        return 0
    conj = conjugate(lam)
    num = den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= m + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den
