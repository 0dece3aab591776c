"""Flag sequences and the flagged Littlewood-Richardson conditions.

Two sides carry the same information:

* row side: a companion S of straight shape mu' for (la', delta'), with
  first row s_1 <= ... <= s_p and second row t_1 <= ... <= t_q;
* companion side: a companion U of rotated shape mu for (la, delta), whose
  rightmost column read bottom-up is sigma_1 > ... > sigma_p and whose
  second rightmost column read bottom-up is tau_1 > ... > tau_q.

For type D the flag (m_i) and the complementary sequence (n_j) decide
membership; types B and C use a single inequality per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import partitions as P
from .tableaux import Tableau


@dataclass(frozen=True)
class FlagContext:
    n: int
    mu: tuple
    delta: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "mu", P.canon(self.mu))
        object.__setattr__(self, "delta", P.canon(self.delta))
        if len(self.delta) > self.n:
            raise ValueError(f"length of {self.delta} exceeds n={self.n}")

    @property
    def p(self) -> int:
        return P.part(P.conjugate(self.mu), 1)

    @property
    def q(self) -> int:
        return P.part(P.conjugate(self.mu), 2)

    @property
    def r(self) -> int:
        # the positive branch includes the boundary n = 2p, where n - p = p as well
        if self.n - 2 * self.p >= 0:
            return self.p
        return self.n - self.p

    def window(self, i: int) -> range:
        """Admissible values of m_i (1-based, inclusive)."""
        if i <= self.r:
            return range(i, 2 * i)
        return range(i, self.n - self.p + i + 1)

    def delta_rev(self) -> tuple:
        return P.reverse_padded(self.delta, self.n)


@dataclass(frozen=True)
class FlagSequences:
    m: tuple
    nseq: tuple


class _NotInSet:
    """Returned when no flag exists; consumers treat it as a failed condition."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NOT_IN_SET"

    def __bool__(self):
        return False


NOT_IN_SET = _NotInSet()


def complementary(m: tuple, q: int, n: int) -> tuple:
    """n_j = j-th smallest element of {j+1..n} minus {m_{j+1}..m_p}."""
    out = []
    for j in range(1, q + 1):
        used = set(m[j:])
        avail = [k for k in range(j + 1, n + 1) if k not in used]
        if len(avail) < j:
            raise ValueError(f"no {j}-th element available for n_{j}")
        out.append(avail[j - 1])
    return tuple(out)


# -- companion side -------------------------------------------------------------

def _rightmost_columns(U: Tableau) -> tuple:
    cols = U.columns()
    if not cols:
        return (), ()
    sigma = tuple(reversed(cols[-1]))
    tau = tuple(reversed(cols[-2])) if len(cols) >= 2 else ()
    return sigma, tau


def _check_rotated(U: Tableau, ctx: FlagContext):
    from .tableaux import rotated_shape
    if (U.outer, U.inner) != rotated_shape(ctx.mu):
        raise ValueError(f"tableau does not have the rotated shape of {ctx.mu}")


def flags_from_sigma(sigma, ctx: FlagContext) -> FlagSequences:
    n, p = ctx.n, ctx.p
    m = []
    for i in range(1, p + 1):
        cap = 2 * i - 1 if i <= ctx.r else n - p + i
        m.append(min(n - sigma[i - 1] + 1, cap))
    m = tuple(m)
    return FlagSequences(m, complementary(m, ctx.q, n))


def flag_sequences_companion(U: Tableau, ctx: FlagContext) -> FlagSequences:
    _check_rotated(U, ctx)
    sigma, _ = _rightmost_columns(U)
    return flags_from_sigma(sigma, ctx)


def is_flagged_D_companion(U: Tableau, ctx: FlagContext) -> bool:
    _check_rotated(U, ctx)
    sigma, tau = _rightmost_columns(U)
    fl = flags_from_sigma(sigma, ctx)
    return all(tau[j] + fl.nseq[j] <= ctx.n + 1 for j in range(ctx.q))


# -- row side --------------------------------------------------------------------

def _first_rows(S: Tableau, ctx: FlagContext):
    if S.inner or S.outer != P.conjugate(ctx.mu):
        raise ValueError(f"tableau does not have shape {P.conjugate(ctx.mu)}")
    s = S.rows[0] if S.rows else ()
    t = S.rows[1] if len(S.rows) > 1 else ()
    return s, t


def flag_sequences_row(S: Tableau, ctx: FlagContext):
    s, _ = _first_rows(S, ctx)
    drev = ctx.delta_rev()
    m = [0] * ctx.p
    used = set()
    for i in range(ctx.p, 0, -1):
        cands = [k for k in ctx.window(i)
                 if k <= ctx.n and k not in used and drev[k - 1] < s[i - 1]]
        if not cands:
            return NOT_IN_SET
        m[i - 1] = max(cands)
        used.add(m[i - 1])
    m = tuple(m)
    return FlagSequences(m, complementary(m, ctx.q, ctx.n))


def is_barred_D_row(S: Tableau, ctx: FlagContext) -> bool:
    _, t = _first_rows(S, ctx)
    fl = flag_sequences_row(S, ctx)
    if fl is NOT_IN_SET:
        return False
    drev = ctx.delta_rev()
    return all(t[j] > drev[fl.nseq[j] - 1] for j in range(ctx.q))


# -- types B and C ------------------------------------------------------------------

def _drev_at(drev: tuple, k: int) -> float:
    # positions past n carry no room at all
    return drev[k - 1] if k <= len(drev) else float("inf")


def is_flagged_C(U: Tableau, n: int, mu=None) -> bool:
    """sigma_i + 2i <= n + 1 for every i (shared by types B and C)."""
    sigma, _ = _rightmost_columns(U)
    return all(s + 2 * i <= n + 1 for i, s in enumerate(sigma, 1))


is_flagged_B = is_flagged_C


def is_barred_C(S: Tableau, n: int, delta) -> bool:
    """s_i > delta^rev_{2i} for every i (shared by types B and C)."""
    s = S.rows[0] if S.rows else ()
    drev = P.reverse_padded(delta, n)
    return all(x > _drev_at(drev, 2 * i) for i, x in enumerate(s, 1))


is_barred_B = is_barred_C


# -- skew filling form ------------------------------------------------------------------

def sigma_tau_from_skew(filling: Tableau, ctx: FlagContext) -> tuple:
    """Row indices of the leftmost and second leftmost occurrences of p - i + 1."""
    p, q = ctx.p, ctx.q
    occ = {}
    for i, j, x in filling.cells():
        occ.setdefault(x, []).append((j, i))
    for v in occ.values():
        v.sort()
    sigma = tuple(occ[p - i + 1][0][1] + 1 for i in range(1, p + 1))
    tau = tuple(occ[p - j + 1][1][1] + 1 for j in range(1, q + 1))
    return sigma, tau


def flag_from_skew(filling: Tableau, ctx: FlagContext) -> tuple:
    """(FlagSequences, verdict) computed on the skew LR filling itself."""
    sigma, tau = sigma_tau_from_skew(filling, ctx)
    fl = flags_from_sigma(sigma, ctx)
    ok = all(tau[j] + fl.nseq[j] <= ctx.n + 1 for j in range(ctx.q))
    return fl, ok
