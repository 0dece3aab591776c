"""Distinguished tableaux and generalized exponents of so_n.

For T of rotated shape mu with entries in 1..n, phi(T) and eps(T) are
recorded in fundamental-weight coordinates (c_1, ..., c_{n-1}).  A partition
is the same as a coordinate vector (c_1, ..., c_n) with c_i = la_i - la_{i+1}.

T is distinguished when, for some partition rho,

    la    = rho + phi(T) + c * w_n     lies in P^(1,1)_n,
    delta = rho + eps(T)               lies in P^(2)_n,

where c is the number of entries equal to n (the last coordinate of wt(T),
invisible to phi and eps).  The minimal rho is rho_T, with c_i(rho_T) equal
to eps_i(T) mod 2 at even i and 0 elsewhere.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from . import partitions as P
from . import tableaux as TB
from .flags import FlagContext, is_flagged_D_companion
from .tableaux import Tableau


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class GradedPolynomial:
    coeffs: tuple  # sorted (exponent, coefficient) pairs, nonzero only

    @classmethod
    def from_map(cls, d) -> "GradedPolynomial":
        return cls(tuple(sorted((int(k), int(v)) for k, v in d.items() if v)))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "GradedPolynomial":
        return cls.from_map({e: c})

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else -1

    def __add__(self, other):
        d = defaultdict(int, self.as_dict())
        for k, v in other.coeffs:
            d[k] += v
        return GradedPolynomial.from_map(d)

    def __mul__(self, other):
        d = defaultdict(int)
        for a, x in self.coeffs:
            for b, y in other.coeffs:
                d[a + b] += x * y
        return GradedPolynomial.from_map(d)

    def truncate(self, D: int) -> "GradedPolynomial":
        return GradedPolynomial.from_map({k: v for k, v in self.coeffs if k <= D})

    def at_one(self) -> int:
        return sum(v for _, v in self.coeffs)

    def divide_exact(self, divisor: "GradedPolynomial") -> "GradedPolynomial":
        """Long division from the top degree; raises unless the remainder is zero."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = defaultdict(int, self.as_dict())
        dd, lead = divisor.coeffs[-1]
        quot = {}
        for e in range(self.degree(), dd - 1, -1):
            c = rem.get(e, 0)
            if not c:
                continue
            if c % lead:
                raise InexactDivision(f"coefficient {c} not divisible by {lead}")
            q = c // lead
            quot[e - dd] = q
            for k, v in divisor.coeffs:
                rem[e - dd + k] -= q * v
        if any(rem.values()):
            raise InexactDivision(f"{self} is not divisible by {divisor}")
        return GradedPolynomial.from_map(quot)

    def to_json(self) -> dict:
        return {"coeffs": {str(k): v for k, v in self.coeffs}}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.coeffs:
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            parts.append(mono if v == 1 and k else f"{v}*{mono}" if k else str(v))
        return " + ".join(parts)


ONE = GradedPolynomial.monomial(0)


@dataclass(frozen=True)
class DistinguishedWitness:
    T: Tableau
    eps: tuple
    phi: tuple
    rho_T: tuple
    lam: tuple
    delta: tuple

    @property
    def exponent(self) -> int:
        return sum(self.lam) // 2


# -- weights ------------------------------------------------------------------------------

def to_coords(la, n: int) -> tuple:
    la = P.canon(la)
    return tuple(P.part(la, i) - P.part(la, i + 1) for i in range(1, n + 1))


def from_coords(c) -> Optional[tuple]:
    """Partition with column multiplicities c, or None if some c_i < 0."""
    if any(x < 0 for x in c):
        return None
    return P.canon(tuple(sum(c[i - 1:]) for i in range(1, len(c) + 1)))


def eps_phi(T: Tableau, n: int) -> tuple:
    if any(x > n for _, _, x in T.cells()):
        raise ValueError(f"tableau has an entry larger than {n}")
    w = TB.reading_word(T)
    return (tuple(TB.word_eps(i, w) for i in range(1, n)),
            tuple(TB.word_phi(i, w) for i in range(1, n)))


def rho_T(eps: tuple, n: int) -> tuple:
    c = [0] * n
    for i in range(2, n, 2):
        c[i - 1] = eps[i - 1] % 2
    return tuple(c)


def _pair(T: Tableau, n: int, eps, phi, rho_c) -> tuple:
    top = sum(1 for _, _, x in T.cells() if x == n)
    lam_c = [r + f for r, f in zip(rho_c, phi + (0,))]
    lam_c[-1] += top
    del_c = [r + e for r, e in zip(rho_c, eps + (0,))]
    return from_coords(lam_c), from_coords(del_c)


def _in_families(la, delta) -> bool:
    return (la is not None and delta is not None
            and P.is_in_family(la, P.Family.EVEN_COLUMNS)
            and P.is_in_family(delta, P.Family.EVEN_ROWS))


def is_distinguished(T: Tableau, n: int) -> Optional[DistinguishedWitness]:
    eps, phi = eps_phi(T, n)
    rc = rho_T(eps, n)
    la, delta = _pair(T, n, eps, phi, rc)
    if not _in_families(la, delta):
        return None
    return DistinguishedWitness(T, eps, phi, from_coords(rc), la, delta)


def distinguished_by_search(T: Tableau, n: int, bound: int = 3) -> list:
    """Every rho with coordinates in 0..bound that makes T distinguished."""
    eps, phi = eps_phi(T, n)
    out = []
    for rc in itertools.product(range(bound + 1), repeat=n):
        if _in_families(*_pair(T, n, eps, phi, rc)):
            out.append(from_coords(rc))
    return out


# -- flagged distinguished sets --------------------------------------------------------------

def tableaux_of_rotated(mu, n: int) -> Iterator[Tableau]:
    outer, inner = TB.rotated_shape(mu)
    if not outer:
        yield TB.EMPTY
        return
    yield from TB.semistandard_tableaux(outer, inner, n)


def flagged_distinguished(mu, n: int) -> list:
    """Distinguished T of rotated shape mu passing the companion-side flag test."""
    mu = P.canon(mu)
    ctx = FlagContext(n, mu)
    out = []
    for T in tableaux_of_rotated(mu, n):
        w = is_distinguished(T, n)
        if w is None:
            continue
        if mu and not is_flagged_D_companion(T, ctx):
            continue
        out.append(w)
    return out


def associated(mu, n: int) -> tuple:
    """mu-bar: the first column of mu replaced by one of height n - l(mu)."""
    mu = P.canon(mu)
    if not P.is_orthogonal_label(mu, n):
        raise ValueError(f"{mu} does not label an O_{n} module")
    c = list(P.conjugate(mu)) or [0]
    c[0] = n - c[0]
    return P.conjugate(P.canon(sorted(c, reverse=True)))


def enumerate_flagged_distinguished(mu, n: int) -> list:
    """The union of the flagged distinguished sets of mu and of mu-bar (once if equal)."""
    mu = P.canon(mu)
    bar = associated(mu, n)
    out = flagged_distinguished(mu, n)
    if bar != mu:
        out += flagged_distinguished(bar, n)
    return out


def distinguished_sum(mu, n: int) -> GradedPolynomial:
    d = defaultdict(int)
    for w in enumerate_flagged_distinguished(mu, n):
        d[w.exponent] += 1
    return GradedPolynomial.from_map(d)


def K_so_odd(mu, m: int) -> GradedPolynomial:
    mu = P.canon(mu)
    if len(mu) > m:
        raise ValueError(f"{mu} has more than {m} parts")
    return distinguished_sum(mu, 2 * m + 1)


def K_so_even(mu, m: int) -> GradedPolynomial:
    mu = P.canon(mu)
    if len(mu) > m:
        raise ValueError(f"{mu} has more than {m} parts")
    if m < 1:
        raise ValueError("rank must be positive")
    s = distinguished_sum(mu, 2 * m)
    return s.divide_exact(GradedPolynomial.from_map({0: 1, m: 1}))


# -- truncated graded identity ------------------------------------------------------------------

def _geometric_product(n: int, D: int) -> GradedPolynomial:
    """prod_{i=1}^{floor(n/2)} 1/(1 - t^{2i}) up to degree D."""
    out = ONE
    for i in range(1, n // 2 + 1):
        g = GradedPolynomial.from_map({k: 1 for k in range(0, D + 1, 2 * i)})
        out = (out * g).truncate(D)
    return out


def double_bracket(n: int, la, mu) -> int:
    from .branching import BranchingQuery, Method, multiplicity
    mu = P.canon(mu)
    bar = associated(mu, n)
    val = multiplicity(BranchingQuery(n, la, mu), Method.FLAGGED)
    if bar != mu:
        val += multiplicity(BranchingQuery(n, la, bar), Method.FLAGGED)
    return val


def graded_branching_series(mu, n: int, D: int) -> GradedPolynomial:
    d = defaultdict(int)
    for la in P.enumerate_family(P.Family.EVEN_COLUMNS, 2 * D, n):
        d[sum(la) // 2] += double_bracket(n, la, mu)
    return GradedPolynomial.from_map(d).truncate(D)


def graded_identity_check(mu, n: int, D: int) -> bool:
    lhs = graded_branching_series(mu, n, D)
    rhs = (distinguished_sum(mu, n) * _geometric_product(n, D)).truncate(D)
    return lhs == rhs
