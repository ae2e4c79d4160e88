"""Kronecker and symmetric Kronecker coefficients of S_N.

``sym_kron(lam, mu)`` is the multiplicity of chi^lam in the symmetric
square of chi^mu:

    sum_rho chi^lam(rho) * (chi^mu(rho)**2 + chi^mu(rho**2)) / (2 z_rho)

where rho**2 is the cycle type of the square of a permutation of type rho.
The alternating square uses the minus sign.
"""
from functools import lru_cache
from math import factorial

from .characters import _mn, square_class
from .errors import IntegralityError
from .partitions import enumerate_partitions, z_of

__all__ = ["kron", "sym_kron", "antisym_kron", "in_S_o_det"]


@lru_cache(maxsize=None)
def _classes(n):
    # (rho, z_rho, square class of rho) for every class of S_n
    return tuple((rho, z_of(rho), square_class(rho)) for rho in enumerate_partitions(n))


@lru_cache(maxsize=None)
def _class_values(mu):
    # full character vector of chi^mu together with chi^mu at squared classes;
    # rectangles are reused across entire scans
    n = sum(mu)
    return tuple((_mn(mu, rho), _mn(mu, sq)) for rho, _, sq in _classes(n))


def _check_sizes(*parts):
    sizes = {sum(p) for p in parts}
    if len(sizes) != 1:
        raise ValueError(f"size mismatch among {parts}")
    return sizes.pop()


def _exact(num, den, what):
    q, r = divmod(num, den)
    if r or q < 0:
        raise IntegralityError(f"{what} is not a nonnegative integer: {num}/{den}")
    return q


def kron(lam, mu, nu):
    """The Kronecker coefficient g(lam, mu, nu)."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = _check_sizes(lam, mu, nu)
    # common denominator n!
    nfact = factorial(n)
    total = 0
    for rho, z, _ in _classes(n):
        a = _mn(lam, rho)
        if a:
            total += a * _mn(mu, rho) * _mn(nu, rho) * (nfact // z)
    return _exact(total, nfact, f"g{lam, mu, nu}")


def _sym_and_alt(lam, mu):
    # both parts in one pass; each must be a nonnegative integer, which
    # also enforces 0 <= sym <= kron(lam, mu, mu) since they sum to it
    lam, mu = tuple(lam), tuple(mu)
    n = _check_sizes(lam, mu)
    nfact = factorial(n)
    sym = alt = 0
    for (rho, z, _), (v, vsq) in zip(_classes(n), _class_values(mu)):
        a = _mn(lam, rho)
        if a:
            w = a * (nfact // z)
            sym += w * (v * v + vsq)
            alt += w * (v * v - vsq)
    return (
        _exact(sym, 2 * nfact, f"sk{lam, mu, mu}"),
        _exact(alt, 2 * nfact, f"alternating part at {lam, mu}"),
    )


def sym_kron(lam, mu):
    """Multiplicity of chi^lam in Sym^2 of chi^mu."""
    return _sym_and_alt(lam, mu)[0]


def antisym_kron(lam, mu):
    """Multiplicity of chi^lam in the alternating square of chi^mu."""
    return _sym_and_alt(lam, mu)[1]


def in_S_o_det(lam, n):
    """Whether ``lam`` passes the symmetric Kronecker test for Det_n:
    ``n`` divides ``|lam|`` and sk(lam, n x d, n x d) > 0 with d = |lam|/n."""
    lam = tuple(lam)
    if len(lam) > n * n:
        raise ValueError(f"{lam} has more than {n * n} rows")
    size = sum(lam)
    if size % n:
        return False
    d = size // n
    return sym_kron(lam, (d,) * n if d else ()) > 0
