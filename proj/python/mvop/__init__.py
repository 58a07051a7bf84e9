"""Exact Laguerre-type matrix-valued orthogonal polynomials.

Rationals are passed and returned as ``fractions.Fraction`` (strings "p/q" are
accepted too). Command functions return the same JSON documents as the CLI.
"""

from fractions import Fraction
import json

from . import _mvop

__all__ = [
    "Result",
    "compute_polys",
    "verify",
    "xi",
    "lie",
    "dualhahn",
    "laguerre_poly",
    "dual_hahn",
    "parse_rational",
    "thread_cap",
]


class Result:
    def __init__(self, raw):
        self.data = json.loads(raw.json)
        self.ok = raw.ok
        self.csv = raw.csv

    def __repr__(self):
        return f"Result(command={self.data.get('command')!r}, ok={self.ok})"


def _q(x):
    return str(Fraction(x)) if not isinstance(x, str) else x


def _qs(xs):
    return [] if xs is None else [_q(x) for x in xs]


def compute_polys(N, nu, a=None, delta=None, nmax=5):
    return Result(_mvop.compute_polys(N, _q(nu), _qs(a), _qs(delta), nmax))


def verify(N, nu, a=None, delta=None, nmax=5, suite="all", c=0, d=1):
    return Result(_mvop.verify(N, _q(nu), _qs(a), _qs(delta), nmax, suite, _q(c), _q(d)))


def xi(N, nu, a=None, delta=None, nmax=5):
    return Result(_mvop.xi(N, _q(nu), _qs(a), _qs(delta), nmax))


def lie(phi="x", truncate=0):
    return Result(_mvop.lie(phi, truncate))


def dualhahn(N, nu, c=0, d=1, nmax=4):
    return Result(_mvop.dualhahn(N, _q(nu), _q(c), _q(d), nmax))


def laguerre_poly(alpha, n):
    """Coefficients of L_n^(alpha), lowest degree first."""
    return [Fraction(c) for c in _mvop.laguerre_poly(_q(alpha), n)]


def dual_hahn(k, x, gamma, delta, M):
    return Fraction(_mvop.dual_hahn(k, _q(x), _q(gamma), _q(delta), M))


def parse_rational(s):
    return Fraction(_mvop.parse_rational(s))


def thread_cap():
    return _mvop.thread_cap()
