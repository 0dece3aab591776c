"""Brute-force cross-checks that share no code with the flag or separation modules.

* zero_weight_dim: Freudenthal's recursion for so_{2m+1} (B) and so_{2m} (D);
* lr_brute: every semistandard filling of la/mu with content nu, filtered by
  the classical reverse row-reading lattice test;
* knuth_normal_form: Schensted row insertion, left to right.

Weights are kept in doubled epsilon coordinates so that the half-integral
rho of type B stays integral.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as P
from .tableaux import Tableau, semistandard_tableaux, straight


@dataclass(frozen=True)
class RootSystemData:
    type: str
    m: int
    positive: tuple  # epsilon coordinates

    @classmethod
    def build(cls, typ: str, m: int) -> "RootSystemData":
        typ = typ.upper()
        if typ not in ("B", "D"):
            raise ValueError(f"unknown type {typ}")
        if m < 1 or (typ == "D" and m < 2):
            raise ValueError(f"rank {m} too small for type {typ}")
        roots = []
        for i, j in itertools.combinations(range(m), 2):
            for s in (1, -1):
                v = [0] * m
                v[i], v[j] = 1, s
                roots.append(tuple(v))
        if typ == "B":
            for k in range(m):
                v = [0] * m
                v[k] = 1
                roots.append(tuple(v))
        return cls(typ, m, tuple(roots))

    @property
    def rho2(self) -> tuple:
        """Twice the half sum of positive roots."""
        return tuple(sum(a[k] for a in self.positive) for k in range(self.m))

    def dominant(self, v) -> tuple:
        w = sorted((abs(x) for x in v), reverse=True)
        if self.type == "D" and 0 not in v and sum(x < 0 for x in v) % 2:
            w[-1] = -w[-1]
        return tuple(w)

    def is_dominant(self, v) -> bool:
        if any(v[k] < v[k + 1] for k in range(self.m - 1)):
            return False
        if self.type == "B":
            return v[-1] >= 0
        return self.m < 2 or v[-2] >= abs(v[-1])

    def below(self, mu, nu) -> bool:
        """nu <= mu in dominance order (difference in the positive root cone)."""
        d = [a - b for a, b in zip(mu, nu)]
        s = list(itertools.accumulate(d))
        if self.type == "B":
            return all(x >= 0 for x in s)
        if s[-1] % 2:
            return False
        return all(x >= 0 for x in s[:-2]) and s[-2] * 2 - s[-1] >= 0 and s[-1] >= 0

    def weyl_group(self):
        """Signed permutations (even sign changes for D), as (perm, signs)."""
        for perm in itertools.permutations(range(self.m)):
            for signs in itertools.product((1, -1), repeat=self.m):
                if self.type == "D" and signs.count(-1) % 2:
                    continue
                yield perm, signs


def _perm_sign(perm) -> int:
    s = 1
    seen = set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, k = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        if k % 2 == 0:
            s = -s
    return s


def _ip(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def dominant_multiplicities(typ: str, m: int, mu: tuple) -> dict:
    """Freudenthal: multiplicity of every dominant weight of V^mu."""
    R = RootSystemData.build(typ, m)
    mu = tuple(mu) + (0,) * (m - len(mu))
    if not R.is_dominant(mu):
        raise ValueError(f"{mu} is not dominant for {typ}{m}")
    top = max((abs(x) for x in mu), default=0)
    cands = [v for v in itertools.product(range(-top, top + 1), repeat=m)
             if R.is_dominant(v) and R.below(mu, v)]
    rho2 = R.rho2
    # norms in doubled coordinates: |2v + rho2|^2
    norm = lambda v: _ip([2 * x + r for x, r in zip(v, rho2)], [2 * x + r for x, r in zip(v, rho2)])
    cands.sort(key=lambda v: -norm(v))
    mult = {mu: 1}
    n_mu = norm(mu)
    for v in cands:
        if v == mu:
            continue
        acc = 0
        for a in R.positive:
            k = 1
            while True:
                w = tuple(x + k * y for x, y in zip(v, a))
                dw = R.dominant(w)
                if not R.below(mu, dw):
                    break
                acc += mult.get(dw, 0) * _ip(w, a)
                k += 1
        den = n_mu - norm(v)
        # |mu+rho|^2 - |v+rho|^2 = (n_mu - norm(v)) / 4 and Freudenthal carries a factor 2
        val = Fraction(8 * acc, den)
        if val.denominator != 1 or val < 0:
            raise ArithmeticError(f"non-integral multiplicity {val} at {v}")
        if val:
            mult[v] = int(val)
    return mult


def zero_weight_dim(typ: str, m: int, mu) -> int:
    mu = P.canon(mu)
    if len(mu) > m:
        raise ValueError(f"{mu} has more than {m} parts")
    return dominant_multiplicities(typ.upper(), m, mu).get((0,) * m, 0)


def _orbit(R: RootSystemData, v) -> set:
    out = set()
    for perm, signs in R.weyl_group():
        out.add(tuple(signs[k] * v[perm[k]] for k in range(R.m)))
    return out


def freudenthal_character(typ: str, m: int, mu) -> Counter:
    """Full character as a multiset of weights."""
    R = RootSystemData.build(typ, m)
    mu = P.canon(mu)
    ch = Counter()
    for v, k in dominant_multiplicities(typ.upper(), m, mu).items():
        for w in _orbit(R, v):
            ch[w] += k
    return ch


def _alternant(R: RootSystemData, v2) -> dict:
    out = Counter()
    for perm, signs in R.weyl_group():
        w = tuple(signs[k] * v2[perm[k]] for k in range(R.m))
        out[w] += _perm_sign(perm) * (1 if signs.count(-1) % 2 == 0 else -1)
    return {k: x for k, x in out.items() if x}


def weyl_character_check(typ: str, m: int, mu) -> bool:
    """ch(V^mu) * A_rho == A_{mu+rho}, all in doubled coordinates."""
    R = RootSystemData.build(typ, m)
    mu = tuple(P.canon(mu)) + (0,) * (m - len(P.canon(mu)))
    rho2 = R.rho2
    a_rho = _alternant(R, rho2)
    a_top = _alternant(R, tuple(2 * x + r for x, r in zip(mu, rho2)))
    prod = Counter()
    for w, k in freudenthal_character(typ, m, mu).items():
        for u, s in a_rho.items():
            prod[tuple(2 * x + y for x, y in zip(w, u))] += k * s
    prod = {k: x for k, x in prod.items() if x}
    return prod == a_top


# -- LR coefficients by exhaustion ---------------------------------------------------

def _row_reading_reversed(T: Tableau) -> list:
    out = []
    for r in T.rows:
        out.extend(reversed(r))
    return out


def _yamanouchi(word) -> bool:
    c = Counter()
    for x in word:
        c[x] += 1
        if x > 1 and c[x] > c[x - 1]:
            return False
    return True


def lr_brute(la, mu, nu) -> int:
    la, mu, nu = P.canon(la), P.canon(mu), P.canon(nu)
    if sum(la) != sum(mu) + sum(nu) or not P.contains(la, mu):
        return 0
    if not nu:
        return 1
    content = {i + 1: x for i, x in enumerate(nu)}
    return sum(1 for T in semistandard_tableaux(la, mu, len(nu), content)
               if _yamanouchi(_row_reading_reversed(T)))


# -- plactic normal form ---------------------------------------------------------------

def knuth_normal_form(word) -> Tableau:
    """Schensted row insertion of the word, left to right."""
    rows: list[list[int]] = []
    for a in word:
        for r in rows:
            for k, y in enumerate(r):
                if y > a:
                    r[k], a = a, y
                    break
            else:
                r.append(a)
                a = None
                break
        if a is not None:
            rows.append([a])
    return straight(rows)


def row_word(T: Tableau) -> tuple:
    """Rows bottom to top, each left to right."""
    return tuple(x for r in reversed(T.rows) for x in r)
