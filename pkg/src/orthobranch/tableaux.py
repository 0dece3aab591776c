"""Semistandard (skew) tableaux, column insertion and type A crystal operators.

Conventions:
  * the reading word runs through the columns from right to left, each
    column from top to bottom;
  * a word w_1 ... w_r is identified with w_1 (x) ... (x) w_r, and the
    tensor rule pairs an i standing to the left of an i+1, so a word is
    highest weight exactly when it is a lattice word;
  * (w -> T) inserts w_1 first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import partitions as P


@dataclass(frozen=True)
class Tableau:
    outer: tuple
    inner: tuple
    rows: tuple  # rows top to bottom, skew cells omitted

    def __post_init__(self):
        outer = P.canon(self.outer)
        inner = P.canon(self.inner)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1] and len(rows) > len(outer):
            rows = rows[:-1]
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        if not P.contains(outer, inner):
            raise ValueError(f"{inner} is not inside {outer}")
        for i in range(max(len(outer), len(rows))):
            want = P.part(outer, i + 1) - P.part(inner, i + 1)
            have = len(rows[i]) if i < len(rows) else 0
            if want != have:
                raise ValueError(f"row {i + 1} has {have} entries, shape needs {want}")
        # pad rows to the outer length
        if len(rows) < len(outer):
            object.__setattr__(self, "rows", rows + ((),) * (len(outer) - len(rows)))

    # -- geometry -----------------------------------------------------
    def cells(self):
        """(row, col, entry) with 0-based absolute coordinates."""
        for i, r in enumerate(self.rows):
            off = P.part(self.inner, i + 1)
            for k, x in enumerate(r):
                yield i, off + k, x

    def entry_map(self) -> dict:
        return {(i, j): x for i, j, x in self.cells()}

    def columns(self) -> list:
        """Columns left to right, each listed top to bottom."""
        width = P.part(self.outer, 1)
        cols = [[] for _ in range(width)]
        for i, j, x in self.cells():
            cols[j].append(x)
        return [tuple(c) for c in cols]

    def is_straight(self) -> bool:
        return not self.inner

    def content(self) -> Counter:
        return Counter(x for _, _, x in self.cells())

    def is_semistandard(self) -> bool:
        m = self.entry_map()
        for (i, j), x in m.items():
            if x < 1:
                return False
            if (i, j + 1) in m and m[(i, j + 1)] < x:
                return False
            if (i + 1, j) in m and m[(i + 1, j)] <= x:
                return False
        return True

    def shape(self):
        return self.outer, self.inner

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner),
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, d: dict) -> "Tableau":
        return cls(tuple(d["outer"]), tuple(d.get("inner", ())), tuple(tuple(r) for r in d["rows"]))

    def __str__(self):
        lines = []
        for i, r in enumerate(self.rows):
            off = P.part(self.inner, i + 1)
            lines.append("   " * off + " ".join(f"{x:2d}" for x in r))
        return "\n".join(lines)


EMPTY = Tableau((), (), ())


def straight(rows: Sequence[Sequence[int]]) -> Tableau:
    rows = [tuple(r) for r in rows if len(r)]
    return Tableau(tuple(len(r) for r in rows), (), tuple(rows))


def from_columns(cols: Sequence[Sequence[int]]) -> Tableau:
    """Straight tableau from its columns (left to right, top to bottom)."""
    cols = [list(c) for c in cols if len(c)]
    if not cols:
        return EMPTY
    h = len(cols[0])
    rows = [[c[i] for c in cols if len(c) > i] for i in range(h)]
    return straight(rows)


def rotated_shape(la: Sequence[int]) -> tuple:
    """(outer, inner) of the 180 degree rotation of la inside its bounding box."""
    la = P.canon(la)
    if not la:
        return (), ()
    ell, w = len(la), la[0]
    inner = tuple(w - la[ell - i] for i in range(1, ell + 1))
    return (w,) * ell, P.canon(inner)


def rotated_from_columns(cols: Sequence[Sequence[int]]) -> Tableau:
    """Tableau of rotated shape from bottom-justified columns given left to right."""
    cols = [list(c) for c in cols]
    if not any(cols):
        return EMPTY
    h = max(len(c) for c in cols)
    rows = []
    for i in range(h):
        rows.append([c[i - (h - len(c))] for c in cols if i >= h - len(c)])
    outer = (len(cols),) * h
    inner = tuple(len(cols) - len(r) for r in rows)
    return Tableau(outer, P.canon(inner), tuple(tuple(r) for r in rows))


def highest_tableau(la: Sequence[int], rotated: bool = False) -> Tableau:
    """H_la (or the rotated H_{la^pi}): each column reads 1, 2, ... from its top."""
    la = P.canon(la)
    if not rotated:
        return straight([[i + 1] * x for i, x in enumerate(la)])
    heights = list(reversed(P.conjugate(la)))
    return rotated_from_columns([list(range(1, h + 1)) for h in heights])


# -- reading words and insertion ---------------------------------------

def reading_word(T: Tableau) -> tuple:
    out = []
    for col in reversed(T.columns()):
        out.extend(col)
    return tuple(out)


def _reading_positions(T: Tableau) -> list:
    m = T.entry_map()
    width = P.part(T.outer, 1)
    pos = []
    for j in range(width - 1, -1, -1):
        for i in sorted(i for (i, jj) in m if jj == j):
            pos.append((i, j))
    return pos


def insert_into_columns(a: int, cols: list) -> None:
    """Column insertion of a, in place, on a list of columns."""
    k = 0
    while True:
        if k == len(cols):
            cols.append([a])
            return
        col = cols[k]
        for idx, y in enumerate(col):
            if y >= a:
                col[idx], a = a, y
                break
        else:
            col.append(a)
            return
        k += 1


def _straight_columns(T: Tableau | None) -> list:
    if T is None:
        return []
    if not T.is_straight():
        raise ValueError("insertion needs a straight-shape tableau")
    return [list(c) for c in T.columns()]


def column_insert(a: int, T: Tableau | None = None) -> Tableau:
    cols = _straight_columns(T)
    insert_into_columns(a, cols)
    return from_columns(cols)


def word_insert(word: Iterable[int], T: Tableau | None = None) -> Tableau:
    cols = _straight_columns(T)
    for a in word:
        insert_into_columns(a, cols)
    return from_columns(cols)


def tableau_insert(S: Tableau, T: Tableau | None = None) -> Tableau:
    return word_insert(reading_word(S), T)


def knuth_normal_form(word: Iterable[int]) -> Tableau:
    return word_insert(word)


def knuth_equivalent(T, S) -> bool:
    """Compare insertion tableaux of the reading words (tableaux or words)."""
    wt = reading_word(T) if isinstance(T, Tableau) else tuple(T)
    ws = reading_word(S) if isinstance(S, Tableau) else tuple(S)
    return word_insert(wt) == word_insert(ws)


# -- lattice conditions -------------------------------------------------

def is_lattice(word: Sequence[int]) -> bool:
    """Every prefix has at least as many i as i+1."""
    cnt = Counter()
    for x in word:
        cnt[x] += 1
        if x > 1 and cnt[x] > cnt[x - 1]:
            return False
    return True


def is_anti_lattice(word: Sequence[int], top: int | None = None) -> bool:
    """Every suffix has at least as many i as i-1, for 1 < i <= top."""
    if top is None:
        top = max(word, default=0)
    cnt = Counter()
    for x in reversed(word):
        cnt[x] += 1
        # adding x can only break the pair (x+1, x)
        if x + 1 <= top and cnt[x] > cnt[x + 1]:
            return False
    return True


def is_l_highest(T) -> bool:
    w = reading_word(T) if isinstance(T, Tableau) else T
    return is_lattice(w)


def is_anti_lattice_tableau(T: Tableau, top: int | None = None) -> bool:
    return is_anti_lattice(reading_word(T), top)


# -- crystal operators ----------------------------------------------------

def _signature(word: Sequence[int], i: int):
    """Unmatched positions of i+1 and of i, after pairing i (left) with i+1 (right)."""
    open_i = []
    lone_up = []
    for k, x in enumerate(word):
        if x == i:
            open_i.append(k)
        elif x == i + 1:
            if open_i:
                open_i.pop()
            else:
                lone_up.append(k)
    return lone_up, open_i


def word_e(i: int, word: Sequence[int]):
    up, _ = _signature(word, i)
    if not up:
        return None
    w = list(word)
    w[up[-1]] = i
    return tuple(w)


def word_f(i: int, word: Sequence[int]):
    _, down = _signature(word, i)
    if not down:
        return None
    w = list(word)
    w[down[0]] = i + 1
    return tuple(w)


def word_eps(i: int, word: Sequence[int]) -> int:
    return len(_signature(word, i)[0])


def word_phi(i: int, word: Sequence[int]) -> int:
    return len(_signature(word, i)[1])


def _rebuild(T: Tableau, word: Sequence[int]) -> Tableau:
    m = {}
    for p, x in zip(_reading_positions(T), word):
        m[p] = x
    rows = []
    for i in range(len(T.rows)):
        rows.append(tuple(m[(i, j)] for j in sorted(jj for (ii, jj) in m if ii == i)))
    return Tableau(T.outer, T.inner, tuple(rows))


def crystal_e(i: int, T: Tableau):
    w = word_e(i, reading_word(T))
    return None if w is None else _rebuild(T, w)


def crystal_f(i: int, T: Tableau):
    w = word_f(i, reading_word(T))
    return None if w is None else _rebuild(T, w)


def eps(i: int, T: Tableau) -> int:
    return word_eps(i, reading_word(T))


def phi(i: int, T: Tableau) -> int:
    return word_phi(i, reading_word(T))


# -- enumeration ------------------------------------------------------------

def semistandard_tableaux(outer, inner=(), max_entry: int = 1, content=None):
    """All SST of shape outer/inner with entries in 1..max_entry (row-major search)."""
    outer, inner = P.canon(outer), P.canon(inner)
    cells = [(i, j) for i in range(len(outer)) for j in range(P.part(inner, i + 1), outer[i])]
    need = None if content is None else dict(content)
    filled = {}
    used = Counter()

    def rec(k):
        if k == len(cells):
            if need is None or all(used[x] == need.get(x, 0) for x in set(used) | set(need)):
                rows = tuple(tuple(filled[(i, j)] for j in range(P.part(inner, i + 1), outer[i]))
                             for i in range(len(outer)))
                yield Tableau(outer, inner, rows)
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filled:
            lo = max(lo, filled[(i, j - 1)])
        if (i - 1, j) in filled:
            lo = max(lo, filled[(i - 1, j)] + 1)
        for x in range(lo, max_entry + 1):
            if need is not None and used[x] >= need.get(x, 0):
                continue
            filled[(i, j)] = x
            used[x] += 1
            yield from rec(k + 1)
            used[x] -= 1
            del filled[(i, j)]

    yield from rec(0)
