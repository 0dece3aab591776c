"""Littlewood-Richardson tableaux, companion tableaux and the conjugation bijection psi.

A filling of la/mu is a LATTICE witness when its reading word is a lattice
word (content nu), and an ANTI witness when its reading word is an
anti-lattice word (content nu rotated, i.e. #i = nu_{l-i+1} with l = l(nu)).

The companion of a filling records row indices: an entry i in row j of the
filling becomes an entry j in row i of the companion.  The companion has
shape nu (lattice) or the rotated shape of nu (anti), and inserting it into
H_mu gives H_la.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import partitions as P
from . import tableaux as TB
from .tableaux import Tableau


class Kind(enum.Enum):
    LATTICE = "lattice"
    ANTI = "anti"


class InvariantError(RuntimeError):
    """A property promised by the theory failed on concrete data."""


@dataclass(frozen=True)
class LrWitness:
    filling: Tableau
    companion: Tableau
    kind: Kind


def _anti_content(nu) -> dict:
    ell = len(nu)
    return {i: nu[ell - i] for i in range(1, ell + 1)}


def content_of(nu, kind: Kind) -> dict:
    nu = P.canon(nu)
    if kind is Kind.LATTICE:
        return {i + 1: x for i, x in enumerate(nu)}
    return _anti_content(nu)


# -- companions ---------------------------------------------------------------

def companion_of(filling: Tableau, nu, kind: Kind) -> Tableau:
    nu = P.canon(nu)
    ell = len(nu)
    rows = [[] for _ in range(ell)]
    for i, _, x in filling.cells():
        if not 1 <= x <= ell:
            raise ValueError(f"entry {x} outside 1..{ell}")
        rows[x - 1].append(i + 1)
    rows = [tuple(sorted(r)) for r in rows]
    want = content_of(nu, kind)
    if [len(r) for r in rows] != [want[i] for i in range(1, ell + 1)]:
        raise ValueError("filling content does not match nu")
    if kind is Kind.LATTICE:
        return TB.straight(rows)
    outer, inner = TB.rotated_shape(nu)
    return Tableau(outer, inner, tuple(rows))


def filling_of(companion: Tableau, la, mu) -> Tableau:
    la, mu = P.canon(la), P.canon(mu)
    rows = [[] for _ in range(len(la))]
    for i, _, j in companion.cells():
        if not 1 <= j <= len(la):
            raise ValueError(f"companion entry {j} outside 1..{len(la)}")
        rows[j - 1].append(i + 1)
    for j, r in enumerate(rows):
        if len(r) != P.part(la, j + 1) - P.part(mu, j + 1):
            raise ValueError("companion does not fit la/mu")
    return Tableau(la, mu, tuple(tuple(sorted(r)) for r in rows))


# -- enumeration ------------------------------------------------------------------

def _fill_lattice(la, mu, need) -> Iterator[dict]:
    # cells in reading order: columns right to left, top to bottom
    width = P.part(la, 1)
    cells = [(i, j) for j in range(width - 1, -1, -1)
             for i in range(len(la)) if P.part(mu, i + 1) <= j < la[i]]
    filled: dict = {}
    cnt = Counter()
    top = max(need, default=0)

    def rec(k):
        if k == len(cells):
            yield dict(filled)
            return
        i, j = cells[k]
        lo, hi = 1, top
        if (i - 1, j) in filled:
            lo = filled[(i - 1, j)] + 1
        if (i, j + 1) in filled:
            hi = min(hi, filled[(i, j + 1)])
        for x in range(lo, hi + 1):
            if cnt[x] >= need.get(x, 0):
                continue
            if x > 1 and cnt[x] + 1 > cnt[x - 1]:
                continue
            filled[(i, j)] = x
            cnt[x] += 1
            yield from rec(k + 1)
            cnt[x] -= 1
            del filled[(i, j)]

    yield from rec(0)


def _fill_anti(la, mu, need) -> Iterator[dict]:
    # reverse reading order: columns left to right, bottom to top
    width = P.part(la, 1)
    cells = [(i, j) for j in range(width)
             for i in range(len(la) - 1, -1, -1) if P.part(mu, i + 1) <= j < la[i]]
    filled: dict = {}
    cnt = Counter()
    top = max(need, default=0)

    def rec(k):
        if k == len(cells):
            yield dict(filled)
            return
        i, j = cells[k]
        lo, hi = 1, top
        if (i + 1, j) in filled:
            hi = filled[(i + 1, j)] - 1
        if (i, j - 1) in filled:
            lo = max(lo, filled[(i, j - 1)])
        for x in range(lo, hi + 1):
            if cnt[x] >= need.get(x, 0):
                continue
            if x + 1 <= top and cnt[x] + 1 > cnt[x + 1]:
                continue
            filled[(i, j)] = x
            cnt[x] += 1
            yield from rec(k + 1)
            cnt[x] -= 1
            del filled[(i, j)]

    yield from rec(0)


def enumerate_lr(la, mu, nu, kind: Kind = Kind.LATTICE) -> list:
    la, mu, nu = P.canon(la), P.canon(mu), P.canon(nu)
    if sum(la) != sum(mu) + sum(nu) or not P.contains(la, mu):
        return []
    need = content_of(nu, kind)
    gen = _fill_lattice if kind is Kind.LATTICE else _fill_anti
    out = []
    for filled in gen(la, mu, need):
        rows = tuple(tuple(filled[(i, j)] for j in range(P.part(mu, i + 1), la[i]))
                     for i in range(len(la)))
        S = Tableau(la, mu, rows)
        out.append(LrWitness(S, companion_of(S, nu, kind), kind))
    out.sort(key=lambda w: [x for r in w.companion.rows for x in r])
    return out


def lr_count(la, mu, nu) -> int:
    return len(enumerate_lr(la, mu, nu, Kind.LATTICE))


def companions(la, mu, nu, kind: Kind = Kind.LATTICE) -> list:
    return [w.companion for w in enumerate_lr(la, mu, nu, kind)]


# -- recording tableaux and psi ---------------------------------------------------

def _strip_tableau(shapes: list, conjugated: bool) -> Tableau:
    """Label sh_i / sh_{i-1} with i; shapes[0] is the base."""
    if conjugated:
        shapes = [P.conjugate(s) for s in shapes]
    base, top = shapes[0], shapes[-1]
    label = {}
    for k in range(1, len(shapes)):
        prev, cur = shapes[k - 1], shapes[k]
        if not P.contains(cur, prev):
            raise InvariantError("insertion shapes are not nested")
        cols = set()
        for i in range(len(cur)):
            for j in range(P.part(prev, i + 1), cur[i]):
                if j in cols:
                    raise InvariantError("recorded strip is not horizontal")
                cols.add(j)
                label[(i, j)] = k
    rows = tuple(tuple(label[(i, j)] for j in range(P.part(base, i + 1), top[i]))
                 for i in range(len(top)))
    return Tableau(top, base, rows)


def recording_rows(U: Tableau, mu) -> tuple:
    """(Q(U -> H_mu), final tableau), inserting the rows of U from the top."""
    H = TB.highest_tableau(mu)
    shapes = [H.outer]
    for row in U.rows:
        H = TB.word_insert(row, H)
        shapes.append(H.outer)
    return _strip_tableau(shapes, conjugated=False), H


def recording_columns(S: Tableau, mu_conj) -> tuple:
    """(Q(S -> H_{mu'}), final tableau), inserting the columns of S from the right.

    The recording tableau lives in the conjugate picture, la/mu with mu = mu_conj'.
    """
    H = TB.highest_tableau(mu_conj)
    shapes = [H.outer]
    for col in reversed(S.columns()):
        H = TB.word_insert(col, H)
        shapes.append(H.outer)
    return _strip_tableau(shapes, conjugated=True), H


def _strips(Q: Tableau) -> list:
    """Shapes base, base+strip1, base+strip1+strip2, ..."""
    labels = max((x for _, _, x in Q.cells()), default=0)
    shapes = []
    for k in range(0, labels + 1):
        rows = []
        for i in range(len(Q.outer)):
            r = Q.rows[i] if i < len(Q.rows) else ()
            rows.append(P.part(Q.inner, i + 1) + sum(1 for x in r if x <= k))
        shapes.append(P.canon(rows))
    return shapes


def _weak_rows(length: int, lo_each: list, hi: int) -> Iterator[tuple]:
    """Weakly increasing tuples with entry k >= lo_each[k], entries <= hi."""
    def rec(k, prev):
        if k == length:
            yield ()
            return
        for x in range(max(prev, lo_each[k]), hi + 1):
            for rest in rec(k + 1, x):
                yield (x,) + rest
    yield from rec(0, 1)


def psi(S: Tableau, la, mu) -> Tableau:
    """psi: companion S of a lattice witness for (la', mu', nu') -> anti companion U.

    S has straight shape nu'; the result has the rotated shape of nu, satisfies
    (U -> H_mu) = H_la, and has the same recording tableau as S.
    """
    la, mu = P.canon(la), P.canon(mu)
    nu = P.conjugate(S.outer)
    Q, final = recording_columns(S, P.conjugate(mu))
    if final != TB.highest_tableau(P.conjugate(la)):
        raise ValueError("S is not a companion for (la', mu')")
    targets = _strips(Q)
    ell = len(nu)
    width = P.part(nu, 1)
    lengths = [nu[ell - i] for i in range(1, ell + 1)]
    hi = len(la)
    sols = []

    def rec(i, H, rows):
        if i == ell:
            if H == TB.highest_tableau(la):
                sols.append(tuple(rows))
            return
        n_i = lengths[i]
        off = width - n_i
        lo_each = []
        for k in range(n_i):
            col = off + k
            above = None
            if i > 0 and col >= width - lengths[i - 1]:
                above = rows[i - 1][col - (width - lengths[i - 1])]
            lo_each.append(1 if above is None else above + 1)
        for row in _weak_rows(n_i, lo_each, hi):
            H2 = TB.word_insert(row, H)
            if H2.outer == targets[i + 1]:
                rec(i + 1, H2, rows + [row])

    rec(0, TB.highest_tableau(mu), [])
    if len(sols) != 1:
        raise InvariantError(f"psi: expected a unique preimage, found {len(sols)}")
    outer, inner = TB.rotated_shape(nu)
    return Tableau(outer, inner, sols[0])


def psi_inverse(U: Tableau, la, mu) -> Tableau:
    la, mu = P.canon(la), P.canon(mu)
    nu = P.conjugate(P.conjugate(U.outer)) if not U.inner else _rotated_partition(U)
    Q, final = recording_rows(U, mu)
    if final != TB.highest_tableau(la):
        raise ValueError("U is not a companion for (la, mu)")
    targets = [P.conjugate(s) for s in _strips(Q)]
    nu_c = P.conjugate(nu)           # shape of S
    heights = P.conjugate(nu_c)      # column heights of S, left to right
    p = len(heights)
    hi = len(P.conjugate(la))
    sols = []

    def rec(i, H, cols):
        # cols: chosen columns from the right
        if i == p:
            if H == TB.highest_tableau(P.conjugate(la)):
                sols.append(list(reversed(cols)))
            return
        h = heights[p - 1 - i]
        right = cols[-1] if cols else None

        def col_rec(k, prev, acc):
            if k == h:
                yield tuple(acc)
                return
            top = hi if right is None or k >= len(right) else right[k]
            for x in range(prev + 1, top + 1):
                acc.append(x)
                yield from col_rec(k + 1, x, acc)
                acc.pop()

        for col in col_rec(0, 0, []):
            H2 = TB.word_insert(col, H)
            if H2.outer == targets[i + 1]:
                rec(i + 1, H2, cols + [col])

    rec(0, TB.highest_tableau(P.conjugate(mu)), [])
    if len(sols) != 1:
        raise InvariantError(f"psi inverse: expected a unique preimage, found {len(sols)}")
    return TB.from_columns(sols[0])


def _rotated_partition(U: Tableau) -> tuple:
    return P.canon(sorted((len(r) for r in U.rows), reverse=True))
