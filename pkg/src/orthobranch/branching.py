"""Branching multiplicities from GL_n to O_n (and Sp_n, types B and C).

Three independent routes compute [V^la_{GL_n} : V^mu_{O_n}]:

* DIRECT counts l-highest elements of the spinor model with content la';
* BARRED sums, over delta with even parts, the LR tableaux of shape
  la'/delta' and content mu' that pass the row-side flag condition;
* FLAGGED does the same with anti-lattice LR tableaux of shape la/delta and
  the companion-side condition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import partitions as P
from .flags import (FlagContext, is_barred_C, is_barred_D_row, is_flagged_C,
                    is_flagged_D_companion)
from .lr import Kind as LrKind
from .lr import enumerate_lr, lr_count
from .spinor import enumerate_LRd


class Method(enum.Enum):
    DIRECT = "direct"
    BARRED = "barred"
    FLAGGED = "flagged"


class Group(enum.Enum):
    O = "O"
    SP = "Sp"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class BranchingQuery:
    n: int
    lam: tuple
    mu: tuple
    group: Group = Group.O

    def __post_init__(self):
        object.__setattr__(self, "lam", P.canon(self.lam))
        object.__setattr__(self, "mu", P.canon(self.mu))
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.lam) > self.n:
            raise ValueError(f"{self.lam} has more than n={self.n} rows")
        if self.group is Group.O and not P.is_orthogonal_label(self.mu, self.n):
            raise ValueError(f"{self.mu} does not label an O_{self.n} module")
        if self.group is Group.SP:
            if self.n % 2:
                raise ValueError("Sp_n needs n even")
            if len(self.mu) > self.n // 2:
                raise ValueError(f"{self.mu} is too long for Sp_{self.n}")
        if self.group in (Group.B, Group.C) and len(self.mu) > self.n:
            raise ValueError(f"{self.mu} is too long for n={self.n}")


def delta_family(group: Group):
    return {Group.O: P.Family.EVEN_ROWS, Group.SP: P.Family.EVEN_COLUMNS,
            Group.C: P.Family.EVEN_COLUMNS, Group.B: P.Family.ALL}[group]


def delta_range(q: BranchingQuery) -> list:
    """delta in the parity family with |delta| = |la| - |mu|, delta inside la, l(delta) <= n."""
    w = sum(q.lam) - sum(q.mu)
    if w < 0:
        return []
    fam = delta_family(q.group)
    return [d for d in P.family_of_weight(fam, w, q.n) if P.contains(q.lam, d)]


def barred_set(q: BranchingQuery, delta) -> list:
    """LR tableaux of shape la'/delta' with content mu' passing the row-side condition."""
    la_c, d_c, mu_c = P.conjugate(q.lam), P.conjugate(delta), P.conjugate(q.mu)
    out = []
    for w in enumerate_lr(la_c, d_c, mu_c, LrKind.LATTICE):
        S = w.companion
        if q.group is Group.O:
            ok = is_barred_D_row(S, FlagContext(q.n, q.mu, delta))
        else:
            ok = is_barred_C(S, q.n, delta)
        if ok:
            out.append(S)
    return out


def flagged_set(q: BranchingQuery, delta) -> list:
    """Anti-lattice LR companions of rotated shape mu passing the companion-side condition."""
    out = []
    for w in enumerate_lr(q.lam, delta, q.mu, LrKind.ANTI):
        U = w.companion
        if q.group is Group.O:
            ok = is_flagged_D_companion(U, FlagContext(q.n, q.mu, delta))
        else:
            ok = is_flagged_C(U, q.n, q.mu)
        if ok:
            out.append(U)
    return out


def contributions(q: BranchingQuery, method: Method) -> dict:
    """Per-delta counts (only for the BARRED and FLAGGED routes)."""
    fn = barred_set if method is Method.BARRED else flagged_set
    return {d: len(fn(q, d)) for d in delta_range(q)}


def multiplicity(q: BranchingQuery, method: Method = Method.DIRECT) -> int:
    if method is Method.DIRECT:
        if q.group is not Group.O:
            raise ValueError("the spinor route is implemented for O_n only")
        if (sum(q.lam) - sum(q.mu)) % 2 or sum(q.lam) < sum(q.mu):
            return 0
        return len(enumerate_LRd(q.mu, q.lam, q.n))
    return sum(contributions(q, method).values())


def all_methods(q: BranchingQuery) -> dict:
    return {m.value: multiplicity(q, m) for m in Method}


def littlewood_stable(q: BranchingQuery) -> int:
    """Littlewood's restriction sum, valid for l(la) <= n/2."""
    if 2 * len(q.lam) > q.n:
        raise ValueError(f"{q.lam} is outside the stable range for n={q.n}")
    w = sum(q.lam) - sum(q.mu)
    if w < 0:
        return 0
    if q.group is Group.SP:
        evens = P.family_of_weight(P.Family.EVEN_ROWS, w, q.n)
        return sum(lr_count(q.lam, P.conjugate(d), q.mu) for d in evens)
    fam = delta_family(q.group)
    return sum(lr_count(q.lam, d, q.mu) for d in P.family_of_weight(fam, w, q.n))


def sp_multiplicity(q: BranchingQuery) -> int:
    if q.group is not Group.SP:
        q = BranchingQuery(q.n, q.lam, q.mu, Group.SP)
    return _bc_sum(q)


def bc_multiplicity(q: BranchingQuery, kind: str) -> int:
    group = Group.B if kind.upper() == "B" else Group.C
    return _bc_sum(BranchingQuery(q.n, q.lam, q.mu, group))


def _bc_sum(q: BranchingQuery) -> int:
    row = sum(len(barred_set(q, d)) for d in delta_range(q))
    col = sum(len(flagged_set(q, d)) for d in delta_range(q))
    if row != col:
        from .lr import InvariantError
        raise InvariantError(f"row side {row} and companion side {col} disagree for {q}")
    return row


def enright_willenbring_check(n: int, a: int, b: int, c: int, d: int, lam) -> tuple:
    """(alternating sum, flagged count, equal) for mu = (d, 2^a, 1^b), nu = (d, 2^c, 1^b)."""
    if d < 2 or min(a, b, c) < 1:
        raise ValueError("need d >= 2 and positive a, b, c")
    if 1 + a + b + c != n:
        raise ValueError(f"1 + a + b + c = {1 + a + b + c} differs from n = {n}")
    mu = P.canon((d,) + (2,) * a + (1,) * b)
    nu = P.canon((d,) + (2,) * c + (1,) * b)
    lam = P.canon(lam)
    lam_c = P.conjugate(lam)

    def alt(kappa):
        w = sum(lam) - sum(kappa)
        if w < 0:
            return 0
        return sum(lr_count(lam_c, P.conjugate(x), P.conjugate(kappa))
                   for x in P.family_of_weight(P.Family.EVEN_ROWS, w, n))

    diff = alt(mu) - alt(nu)
    flagged = multiplicity(BranchingQuery(n, lam, mu), Method.FLAGGED)
    return diff, flagged, diff == flagged
