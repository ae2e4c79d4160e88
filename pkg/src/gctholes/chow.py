"""Computations specific to the Chow variety of products of linear forms.

Conventions: the *ambient* multiplicity of ``lam`` is its multiplicity in
Sym^d Sym^n (degree-d forms on the space of degree-n forms), the
*normalization* multiplicity is its multiplicity in Sym^n Sym^d.  A
partition with positive ambient and zero normalization multiplicity does
not lie in the monoid of the normalization, hence not in the monoid of the
Chow variety, while still lying in its saturation.
"""
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial

from .errors import GuardError
from .partitions import enumerate_partitions, lambda_of_lemma
from .plethysm import mult_sym_sym

__all__ = [
    "HoleRecord",
    "FamilyVerdict",
    "BoundRecord",
    "normalization_mult",
    "in_S_normalization",
    "chow3_hole_scan",
    "infinite_family_check",
    "bound_D",
    "hilbert_count",
    "alon_tarsi_delta",
    "group_generators",
    "normalization_weights",
    "CHOW3_MAX_DEGREE",
    "FAMILY_MAX_DEGREE",
    "ALON_TARSI_MAX_N",
]

CHOW3_MAX_DEGREE = 10
FAMILY_MAX_DEGREE = 10
ALON_TARSI_MAX_N = 5


@dataclass(frozen=True)
class HoleRecord:
    partition: tuple
    degree: int
    ambient: int
    normalization: int = 0

    def to_json(self):
        return {
            "partition": list(self.partition),
            "degree": self.degree,
            "ambient": self.ambient,
            "normalization": self.normalization,
        }


def normalization_mult(lam, n):
    """Multiplicity of ``lam`` in Sym^n Sym^(|lam|/n); 0 if ``n`` does not
    divide ``|lam|``."""
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    size = sum(lam)
    if size % n:
        return 0
    if size == 0:
        return 1
    return mult_sym_sym(lam, n, size // n)


def in_S_normalization(lam, n):
    return normalization_mult(lam, n) > 0


def chow3_hole_scan(d_max, max_degree=CHOW3_MAX_DEGREE):
    """Partitions ``lam`` of ``3d`` (d <= d_max, at most 3 rows) that occur
    in Sym^d Sym^3 but not in Sym^3 Sym^d."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    if d_max > max_degree:
        raise GuardError(f"d_max={d_max} exceeds the guard {max_degree}")
    holes = []
    for d in range(1, d_max + 1):
        for lam in enumerate_partitions(3 * d, 3):
            amb = mult_sym_sym(lam, d, 3)
            if amb and mult_sym_sym(lam, 3, d) == 0:
                holes.append(HoleRecord(lam, d, amb, 0))
    return holes


@dataclass
class FamilyVerdict:
    j: int
    k: int
    partition: tuple
    degree: int
    ambient: int
    normalization: int
    # (partition, inner degree, multiplicity in Sym^3 Sym^inner) after each cut
    chain: list = field(default_factory=list)

    @property
    def chain_consistent(self):
        mults = {m for _, _, m in self.chain}
        end, inner, _ = self.chain[-1]
        return len(mults) == 1 and end == (5 + 3 * self.j, 1) and inner == 2 + self.j

    @property
    def holds(self):
        return self.ambient > 0 and self.normalization == 0 and self.chain_consistent

    def to_json(self):
        out = asdict(self)
        out["partition"] = list(self.partition)
        out["chain"] = [{"partition": list(p), "inner": i, "mult": m} for p, i, m in self.chain]
        out["holds"] = self.holds
        return out


def infinite_family_check(j, k, max_degree=FAMILY_MAX_DEGREE):
    """Check that (7+4k+3j, 3+4k, 2+4k) is a hole of the Chow monoid for n=3.

    Besides the two multiplicities, the reduction removing 2k+1 pairs of
    length-3 columns is replayed step by step; every step must preserve
    the Sym^3 Sym^* multiplicity and the chain must end at the hook
    (5+3j, 1) in Sym^3 Sym^(2+j).
    """
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    degree = 4 + 4 * k + j
    if degree > max_degree:
        raise GuardError(f"degree {degree} exceeds the guard {max_degree}")
    lam = (7 + 4 * k + 3 * j, 3 + 4 * k, 2 + 4 * k)
    ambient = mult_sym_sym(lam, degree, 3)
    chain = []
    for cut in range(2 * k + 2):
        rows = [p - 2 * cut for p in lam]
        part = tuple(p for p in rows if p)
        inner = degree - 2 * cut
        chain.append((part, inner, mult_sym_sym(part, 3, inner)))
    return FamilyVerdict(j, k, lam, degree, ambient, chain[0][2], chain)


def hilbert_count(n, k):
    """dim Sym^n Sym^k C^n: the Hilbert function of the normalization."""
    return comb(comb(k + n - 1, n - 1) + n - 1, n)


@dataclass
class BoundRecord:
    n: int
    D: Fraction
    bound: int
    hilbert_values: list
    leading_matches: bool

    @property
    def holds(self):
        return self.D < self.bound

    @property
    def ratio(self):
        return Fraction(self.D) / self.bound

    def to_json(self):
        return {
            "n": self.n,
            "D": str(self.D),
            "bound": self.bound,
            "holds": self.holds,
            "hilbert_values": self.hilbert_values,
            "leading_matches": self.leading_matches,
        }


def bound_D(n):
    """D = (n^2-n)! / (n! (n-1)!^n) against n^(n^2-2n), exactly.

    ``leading_matches`` checks D against the Hilbert function: its r-th
    forward difference (r = n^2 - n, the degree) is r! times the leading
    coefficient, which must equal D.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    r = n * n - n
    D = Fraction(factorial(r), factorial(n) * factorial(n - 1) ** n)
    values = [hilbert_count(n, k) for k in range(r + 1)]
    diff = sum((-1) ** (r - i) * comb(r, i) * values[i] for i in range(r + 1))
    return BoundRecord(
        n=n,
        D=D,
        bound=n ** (n * n - 2 * n),
        hilbert_values=[hilbert_count(n, k) for k in range(1, 6)],
        leading_matches=(diff == D),
    )


def alon_tarsi_delta(n, max_n=ALON_TARSI_MAX_N):
    """Number of even minus number of odd Latin squares of size ``n``.

    The sign of a square is the product of the signs of its rows and
    columns read as permutations; it is tracked as an inversion count while
    filling cells row by row.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise GuardError(f"n={n} exceeds the enumeration guard {max_n}")
    grid = [[0] * n for _ in range(n)]
    row_used = [0] * n
    col_used = [0] * n
    delta = 0

    def fill(cell, inversions):
        nonlocal delta
        if cell == n * n:
            delta += -1 if inversions & 1 else 1
            return
        i, j = divmod(cell, n)
        for s in range(n):
            bit = 1 << s
            if row_used[i] & bit or col_used[j] & bit:
                continue
            inv = sum(1 for t in range(j) if grid[i][t] > s)
            inv += sum(1 for t in range(i) if grid[t][j] > s)
            grid[i][j] = s
            row_used[i] |= bit
            col_used[j] |= bit
            fill(cell + 1, inversions + inv)
            row_used[i] &= ~bit
            col_used[j] &= ~bit

    fill(0, 0)
    return delta


def group_generators(n):
    """The partitions (n), (n-1,1) and, for 3 <= k <= n, the partition of
    :func:`lambda_of_lemma`, padded to length ``n``.  For n > 2 they span
    the lattice of integer vectors whose coordinate sum is divisible by n.
    """
    gens = [(n,), (n - 1, 1)] + [lambda_of_lemma(n, k) for k in range(3, n + 1)]
    return [tuple(g) + (0,) * (n - len(g)) for g in gens]


def normalization_weights(n, k_max):
    """All ``lam`` with at most ``n`` rows occurring in Sym^n Sym^k for
    some ``1 <= k <= k_max``, padded to length ``n``."""
    out = []
    for k in range(1, k_max + 1):
        for lam in enumerate_partitions(n * k, n):
            if mult_sym_sym(lam, n, k):
                out.append(tuple(lam) + (0,) * (n - len(lam)))
    return out
