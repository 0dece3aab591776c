"""Spinor model for the type D-infinity crystal: two-column tableaux and their chains.

A two-column tableau of shape la(a,b,c) = (2^{b+c}, 1^a)/(1^b) has a right
column of height b+c and a left column of height c+a whose top sits b rows
below the top of the right column.  The bottom a cells of the left column
form the tail, the rest is the body.

An element of the model is a chain (T_l, ..., T_1, T_0) listed left to
right.  Its column factorization is U_{2i} = T_i^L, U_{2i-1} = T_i^R and
U_0 = T_0, and the tensor factor order is U_0, U_1, U_2, ...
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import partitions as P
from . import tableaux as TB
from .lr import InvariantError

INF = float("inf")


class Kind(enum.Enum):
    T = "T"
    TBAR0 = "TBAR0"
    SP_PLUS = "SP_PLUS"
    SP_MINUS = "SP_MINUS"
    EMPTY = "EMPTY"


SP_KINDS = (Kind.SP_PLUS, Kind.SP_MINUS)


def at(col: Sequence[int], i: int):
    """i-th entry from the bottom (1-based), None when out of range."""
    return col[-i] if 1 <= i <= len(col) else None


def is_column(col: Sequence[int]) -> bool:
    return all(x >= 1 for x in col) and all(x < y for x, y in zip(col, col[1:]))


# -- raw two-column geometry -----------------------------------------------------

def fits(left: Sequence[int], right: Sequence[int], b: int) -> bool:
    """Rows weakly increase when the left column starts b rows below the right one."""
    for r, x in enumerate(left):
        k = b + r
        if 0 <= k < len(right) and x > right[k]:
            return False
    return True


def raw_residue(left, right, a: int, b: int) -> int:
    best = 0
    for k in range(1, min(a, b) + 1):
        if fits(left, right, b - k):
            best = k
    return best


def _grid(left, right, b):
    cells = {(b + r, 0): x for r, x in enumerate(left)}
    cells.update({(r, 1): x for r, x in enumerate(right)})
    return cells


def _split(cells):
    left = tuple(v for (i, j), v in sorted(cells.items()) if j == 0)
    right = tuple(v for (i, j), v in sorted(cells.items()) if j == 1)
    return left, right


def raw_E(left, right, a: int, b: int):
    """(left, right, a, b) after the reverse slide into the cell below the right column."""
    r = raw_residue(left, right, a, b)
    a, b = a - r, b - r
    if a == 0:
        return None
    cells = _grid(left, right, b)
    hole = (len(right), 1)
    while True:
        i, j = hole
        up = (i - 1, j) if (i - 1, j) in cells else None
        lf = (i, 0) if j == 1 and (i, 0) in cells else None
        if up is None and lf is None:
            break
        if up is not None and (lf is None or cells[up] >= cells[lf]):
            src = up
        else:
            src = lf
        cells[hole] = cells.pop(src)
        hole = src
    if hole != (b, 0):
        raise InvariantError("reverse slide did not leave through the left column")
    nl, nr = _split(cells)
    return nl, nr, a - 1, b + 1


def raw_F(left, right, a: int, b: int):
    """(left, right, a, b) after the forward slide from the cell above the left column."""
    r = raw_residue(left, right, a, b)
    a, b = a - r, b - r
    if b == 0:
        return None
    cells = _grid(left, right, b)
    hole = (b - 1, 0)
    while True:
        i, j = hole
        rt = (i, 1) if j == 0 and (i, 1) in cells else None
        dn = (i + 1, j) if (i + 1, j) in cells else None
        if rt is None and dn is None:
            break
        if dn is not None and (rt is None or cells[dn] <= cells[rt]):
            src = dn
        else:
            src = rt
        cells[hole] = cells.pop(src)
        hole = src
    if hole != (len(right) - 1, 1):
        raise InvariantError("forward slide did not leave through the right column")
    nl, nr = _split(cells)
    # the left column now starts one row higher
    return nl, nr, a + 1, b - 1


def max_overlap_b(left, right) -> int:
    """The offset b giving the largest semistandard overlap of two columns."""
    hl, hr = len(left), len(right)
    for c in range(min(hl, hr), -1, -1):
        if fits(left, right, hr - c):
            return hr - c
    return hr


# -- components ------------------------------------------------------------------

@dataclass(frozen=True)
class TwoColumn:
    """A component of a spinor element.

    For SP kinds the single column is `left` and `right` is empty.  For TBAR0
    the columns are bottom aligned (a = 0) and `c` counts the full left height,
    so it is odd.
    """

    kind: Kind
    left: tuple = ()
    right: tuple = ()
    a: int = 0
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(int(x) for x in self.left))
        object.__setattr__(self, "right", tuple(int(x) for x in self.right))

    @property
    def c(self) -> int:
        return len(self.left) - self.a

    @property
    def height(self) -> int:
        return len(self.left)

    def tail_lengths(self) -> tuple:
        """(tail of left column, tail of right column)."""
        if self.kind is Kind.T:
            return self.a, 0
        if self.kind is Kind.TBAR0:
            return 1, 1
        if self.kind is Kind.SP_MINUS:
            return 1, 0
        return 0, 0

    def body(self, side="L") -> tuple:
        col = self.left if side == "L" else self.right
        t = self.tail_lengths()[0 if side == "L" else 1]
        return col[:len(col) - t]

    def tail(self, side="L") -> tuple:
        col = self.left if side == "L" else self.right
        t = self.tail_lengths()[0 if side == "L" else 1]
        return col[len(col) - t:]

    def is_valid(self) -> bool:
        if not (is_column(self.left) and is_column(self.right)):
            return False
        k = self.kind
        if k is Kind.EMPTY:
            return not self.left and not self.right
        if k in SP_KINDS:
            return not self.right and len(self.left) % 2 == (k is Kind.SP_MINUS)
        if self.a < 0 or self.b < 0 or self.c < 0:
            return False
        if len(self.right) != self.b + self.c:
            return False
        if not fits(self.left, self.right, self.b):
            return False
        if k is Kind.TBAR0:
            return self.a == 0 and self.b % 2 == 0 and self.c % 2 == 1
        return self.b % 2 == 0 and self.c % 2 == 0 and residue(self) <= 1

    def to_json(self) -> dict:
        d = {"kind": self.kind.value, "a": self.a, "left": list(self.left), "right": list(self.right)}
        return d

    def __str__(self):
        return f"{self.kind.value}(a={self.a}) L={self.left} R={self.right}"


def t_component(a: int, left, right) -> TwoColumn:
    """T(a) component with b determined by the heights."""
    left, right = tuple(left), tuple(right)
    c = len(left) - a
    return TwoColumn(Kind.T, left, right, a, len(right) - c)


def tbar0_component(left, right) -> TwoColumn:
    left, right = tuple(left), tuple(right)
    return TwoColumn(Kind.TBAR0, left, right, 0, len(right) - len(left))


def sp_component(col) -> TwoColumn:
    col = tuple(col)
    return TwoColumn(Kind.SP_MINUS if len(col) % 2 else Kind.SP_PLUS, col, ())


EMPTY_COMPONENT = TwoColumn(Kind.EMPTY)


def component_from_json(d: dict) -> TwoColumn:
    kind = Kind(d["kind"])
    left, right = d.get("left", []), d.get("right", [])
    if kind is Kind.T:
        return t_component(int(d["a"]), left, right)
    if kind is Kind.TBAR0:
        return tbar0_component(left, right)
    if kind is Kind.EMPTY:
        return EMPTY_COMPONENT
    comp = sp_component(left)
    if comp.kind is not kind:
        raise ValueError(f"column of height {len(left)} cannot be {kind.value}")
    return comp


def residue(T: TwoColumn) -> int:
    if T.kind in SP_KINDS:
        return len(T.left) % 2
    if T.kind is Kind.EMPTY:
        return 0
    if T.kind is Kind.TBAR0:
        return 0
    return raw_residue(T.left, T.right, T.a, T.b)


def calE(T: TwoColumn) -> Optional[TwoColumn]:
    out = raw_E(T.left, T.right, T.a, T.b)
    if out is None:
        return None
    l, r, a, b = out
    return TwoColumn(Kind.T, l, r, a, b)


def calF(T: TwoColumn) -> Optional[TwoColumn]:
    out = raw_F(T.left, T.right, T.a, T.b)
    if out is None:
        return None
    l, r, a, b = out
    return TwoColumn(Kind.T, l, r, a, b)


def big_partner(S: TwoColumn, big: int) -> TwoColumn:
    """Embed a spin column S as the left column of some U in T(eps), eps = ht(S) mod 2.

    The right column holds big+1, big+2, ... and is long enough that the
    left column sits strictly inside it, so every comparison with it is won
    by S.
    """
    eps = len(S.left) % 2
    c = len(S.left) - eps
    b = 2
    right = tuple(range(big + 1, big + 1 + b + c))
    return TwoColumn(Kind.T, S.left, right, eps, b)


def star_pair(T: TwoColumn, big: Optional[int] = None) -> tuple:
    """(T^{L*}, T^{R*}); requires residue 1.  Spin columns go through big_partner."""
    if T.kind is Kind.SP_MINUS:
        if big is None:
            big = max(T.left, default=0) + 1
        T = big_partner(T, big)
    if residue(T) != 1:
        raise ValueError("starred pair needs residue 1")
    F = calF(T)
    return F.left, F.right


def lr_pair(T: TwoColumn) -> tuple:
    """(^L T, ^R T) obtained by E^a (residue 0) or E^{a-1} (residue 1)."""
    if T.kind in SP_KINDS:
        return T.left, ()
    k = T.a if residue(T) == 0 else T.a - 1
    for _ in range(k):
        T = calE(T)
        if T is None:
            raise InvariantError("E vanished before reaching the left-right pair")
    return T.left, T.right


# -- admissibility -------------------------------------------------------------------

def _le_all(lhs, rhs, shift: int = 0) -> bool:
    """lhs(i + shift) <= rhs(i) wherever both sides exist (indices from the bottom)."""
    for i in range(1, max(len(lhs), len(rhs)) + 1):
        x, y = at(lhs, i + shift), at(rhs, i)
        if x is not None and y is not None and x > y:
            return False
    return True


def _admissible_T_to_target(T: TwoColumn, S: TwoColumn) -> bool:
    """Case (1): T in T(a), S in T(a') or a spin column."""
    a = T.a
    rT = residue(T)
    if S.kind in SP_KINDS:
        ap = rS = len(S.left) % 2
        SL = LS = SLs = S.left
        eps = 1 if S.kind is Kind.SP_MINUS else 0
    else:
        ap, rS = S.a, residue(S)
        SL = S.left
        LS = lr_pair(S)[0]
        SLs = star_pair(S)[0] if rS == 1 else None
        eps = 0
    if a < ap:
        return False
    both = rT * rS
    # (i)
    if len(T.right) > len(SL) - ap + 2 * both:
        return False
    RT = lr_pair(T)[1]
    if both == 0:
        return _le_all(T.right, LS) and _le_all(RT, SL, a - ap)
    TRs = star_pair(T)[1]
    return _le_all(TRs, LS) and _le_all(RT, SLs, a - ap + eps)


def is_admissible(T: TwoColumn, S: TwoColumn) -> bool:
    tk, sk = T.kind, S.kind
    if tk is Kind.T and (sk is Kind.T or sk in SP_KINDS):
        return _admissible_T_to_target(T, S)
    if tk is Kind.T and sk is Kind.TBAR0:
        return _admissible_T_to_target(T, TwoColumn(Kind.SP_MINUS, S.left))
    if tk is Kind.TBAR0 and sk in (Kind.TBAR0, Kind.SP_MINUS):
        return tbar0_component(T.right, S.left).is_valid()
    raise ValueError(f"no admissibility rule for ({tk.value}, {sk.value})")


def is_admissible_embedded(T: TwoColumn, S: TwoColumn, big: Optional[int] = None) -> bool:
    """Same predicate, with a spin column S replaced by a partner in T(eps)."""
    if S.kind not in SP_KINDS:
        return is_admissible(T, S)
    if big is None:
        big = max(T.left + T.right + S.left, default=0) + 1
    return _admissible_T_to_target(T, big_partner(S, big))


# -- weights and templates -----------------------------------------------------------

@dataclass(frozen=True)
class OrthogonalWeight:
    n: int
    mu: tuple

    def __post_init__(self):
        mu = P.canon(self.mu)
        object.__setattr__(self, "mu", mu)
        if not P.is_orthogonal_label(mu, self.n):
            raise ValueError(f"{mu} is not an O_{self.n} label")

    @property
    def conj(self) -> tuple:
        return P.conjugate(self.mu)

    @property
    def positive(self) -> bool:
        return self.n - 2 * P.part(self.conj, 1) >= 0

    @property
    def mu_bar(self) -> tuple:
        mc = list(self.conj) or [0]
        mc[0] = self.n - mc[0]
        return P.conjugate(P.canon(sorted(mc, reverse=True)))

    @property
    def M(self) -> int:
        return P.part(self.conj, 1) if self.positive else self.n - P.part(self.conj, 1)

    @property
    def q(self) -> int:
        return abs(self.n - 2 * P.part(self.conj, 1)) // 2

    @property
    def r(self) -> int:
        return abs(self.n - 2 * P.part(self.conj, 1)) % 2

    def template(self) -> list:
        """[(kind, a)] for (T_l, ..., T_1, T_0), T_0 always present (maybe EMPTY)."""
        base = self.mu if self.positive else self.mu_bar
        out = [(Kind.T, P.part(base, i)) for i in range(1, self.M + 1)]
        out += [(Kind.T if self.positive else Kind.TBAR0, 0)] * self.q
        if self.r:
            out.append((Kind.SP_PLUS if self.positive else Kind.SP_MINUS, 0))
        else:
            out.append((Kind.EMPTY, 0))
        return out

    @property
    def l(self) -> int:
        return self.n // 2


@dataclass(frozen=True)
class SpinorElement:
    n: int
    mu: tuple
    comps: tuple  # (T_l, ..., T_1, T_0)

    def __post_init__(self):
        object.__setattr__(self, "mu", P.canon(self.mu))
        object.__setattr__(self, "comps", tuple(self.comps))

    @property
    def weight(self) -> OrthogonalWeight:
        return OrthogonalWeight(self.n, self.mu)

    def columns(self) -> list:
        """(U_{2l}, ..., U_1, U_0) left to right; U_0 is () when T_0 is empty."""
        out = []
        for T in self.comps[:-1]:
            out += [T.left, T.right]
        out.append(self.comps[-1].left)
        return out

    def column_tails(self) -> list:
        out = []
        for T in self.comps[:-1]:
            out += list(T.tail_lengths())
        out.append(self.comps[-1].tail_lengths()[0])
        return out

    def factors(self) -> list:
        """Tensor factors U_0, U_1, ... (the empty T_0 is not a factor)."""
        cols = list(reversed(self.columns()))
        if self.comps[-1].kind is Kind.EMPTY:
            cols = cols[1:]
        return cols

    def word(self) -> tuple:
        """w(T_0) w(T_1) ... w(T_l), each w(T_i) = right column then left column."""
        out = []
        for col in self.factors():
            out.extend(col)
        return tuple(out)

    def to_json(self) -> dict:
        return {"n": self.n, "mu": list(self.mu), "components": [T.to_json() for T in self.comps]}

    @classmethod
    def from_json(cls, d: dict) -> "SpinorElement":
        comps = tuple(component_from_json(c) for c in d["components"])
        return cls(int(d["n"]), tuple(d["mu"]), comps)

    def __str__(self):
        return "\n".join(str(T) for T in self.comps)


def from_columns(n: int, mu, cols: Sequence[Sequence[int]]) -> SpinorElement:
    """Group (U_{2l}, ..., U_0) into components following the template of (mu, n)."""
    W = OrthogonalWeight(n, mu)
    tpl = W.template()
    cols = [tuple(c) for c in cols]
    if len(cols) == 2 * (len(tpl) - 1):
        cols = cols + [()]
    if len(cols) != 2 * (len(tpl) - 1) + 1:
        raise ValueError(f"{len(cols)} columns do not match the template of {W.mu}, n={n}")
    comps = []
    for k, (kind, a) in enumerate(tpl[:-1]):
        L, R = cols[2 * k], cols[2 * k + 1]
        comps.append(t_component(a, L, R) if kind is Kind.T else tbar0_component(L, R))
    kind0 = tpl[-1][0]
    if kind0 is Kind.EMPTY:
        if cols[-1]:
            raise ValueError("the last column must be empty for this template")
        comps.append(EMPTY_COMPONENT)
    else:
        comps.append(sp_component(cols[-1]))
    return SpinorElement(n, W.mu, tuple(comps))


def matches_template(E: SpinorElement) -> bool:
    tpl = E.weight.template()
    if len(tpl) != len(E.comps):
        return False
    for (kind, a), T in zip(tpl, E.comps):
        if T.kind is not kind:
            return False
        if kind is Kind.T and T.a != a:
            return False
    return True


def validate_element(E: SpinorElement) -> bool:
    if not matches_template(E) or not all(T.is_valid() for T in E.comps):
        return False
    chain = [T for T in E.comps if T.kind is not Kind.EMPTY]
    return all(is_admissible(chain[k], chain[k + 1]) for k in range(len(chain) - 1))


# -- crystal operators ----------------------------------------------------------------

def _reassemble(E: SpinorElement, factors: list) -> SpinorElement:
    cols = list(reversed(factors))
    if E.comps[-1].kind is Kind.EMPTY:
        cols.append(())
    return from_columns(E.n, E.mu, cols)


def _split_word(E: SpinorElement, word) -> list:
    out, k = [], 0
    for col in E.factors():
        out.append(tuple(word[k:k + len(col)]))
        k += len(col)
    return out


def _zero_signs(col) -> tuple:
    eps = 1 if col[:2] == (1, 2) else 0
    phi = 1 if not col or col[0] >= 3 else 0
    return eps, phi


def _zero_signature(factors) -> tuple:
    """Uncancelled (-) and (+) factor indices for i = 0."""
    plus, minus = [], []
    for k, col in enumerate(factors):
        e, p = _zero_signs(col)
        for _ in range(e):
            if plus:
                plus.pop()
            else:
                minus.append(k)
        plus += [k] * p
    return minus, plus


def d_crystal_e(i: int, E: SpinorElement) -> Optional[SpinorElement]:
    if i >= 1:
        w = TB.word_e(i, E.word())
        return None if w is None else _reassemble(E, _split_word(E, w))
    factors = E.factors()
    minus, _ = _zero_signature(factors)
    if not minus:
        return None
    k = minus[-1]
    factors[k] = factors[k][2:]
    return _reassemble(E, factors)


def d_crystal_f(i: int, E: SpinorElement) -> Optional[SpinorElement]:
    if i >= 1:
        w = TB.word_f(i, E.word())
        return None if w is None else _reassemble(E, _split_word(E, w))
    factors = E.factors()
    _, plus = _zero_signature(factors)
    if not plus:
        return None
    k = plus[0]
    factors[k] = (1, 2) + tuple(factors[k])
    return _reassemble(E, factors)


def is_l_highest_element(E: SpinorElement) -> bool:
    return TB.is_lattice(E.word())


# -- the pseudo highest weight predicate ------------------------------------------------

def _is_initial(col) -> bool:
    return tuple(col) == tuple(range(1, len(col) + 1))


def _prev_c_r(T: TwoColumn) -> tuple:
    """(c, r) of the component to the right, as used by the (H2) bound."""
    if T.kind is Kind.T:
        return T.c, residue(T)
    if T.kind in (Kind.TBAR0, Kind.SP_MINUS):
        return len(T.left) - 1, 1
    return INF, 0


def _h12(T: TwoColumn, prev: TwoColumn) -> bool:
    a, b, c = T.a, T.b, T.c
    R = T.right
    if R and R[:-1] != tuple(range(1, b + c)):
        return False
    if T.left[:c] != tuple(range(1, c + 1)):
        return False
    if a == 0 and not R:
        return True
    r = residue(T)
    if not R:
        return r == 0
    bottom = R[-1]
    if r == 0:
        return bottom == b + c
    cp, rp = _prev_c_r(prev)
    if not (bottom == b + c or bottom >= cp + 1 + rp):
        return False
    return at(T.left, a) == c + 1


def check_Hcirc(E: SpinorElement) -> bool:
    comps = E.comps
    T0 = comps[-1]
    if not _is_initial(T0.left):
        return False
    if E.weight.positive:
        start = len(comps) - 2
    else:
        m = sum(1 for T in comps if T.kind is Kind.TBAR0)
        for T in comps[len(comps) - 1 - m:-1]:
            if not (_is_initial(T.left) and _is_initial(T.right)):
                return False
        start = len(comps) - 2 - m
    for k in range(start, -1, -1):
        if not _h12(comps[k], comps[k + 1]):
            return False
    return True


# -- enumeration of l-highest elements ------------------------------------------------------

def _columns_extending(cnt: list, need: list, top: int, maxh: int) -> Iterator[tuple]:
    """Strictly increasing columns keeping the running word lattice and within content."""
    def rec(prev, acc):
        yield tuple(acc)
        if len(acc) == maxh:
            return
        for x in range(prev + 1, top + 1):
            if cnt[x] >= need[x]:
                continue
            if x > 1 and cnt[x] + 1 > cnt[x - 1]:
                continue
            cnt[x] += 1
            acc.append(x)
            yield from rec(x, acc)
            acc.pop()
            cnt[x] -= 1
    yield from rec(0, [])


def enumerate_LRd(mu, la, n: int) -> list:
    """All l-highest elements of the spinor model for (mu, n) with content la'.

    Components are chosen from the right (T_0 first), column by column in
    the order of the word w(T_0) w(T_1) ..., pruning on the lattice property,
    on the remaining content and on admissibility with the previous component.
    """
    W = OrthogonalWeight(n, mu)
    la = P.canon(la)
    if len(la) > n:
        return []
    lac = P.conjugate(la)
    top = len(lac)
    need = [0] * (top + 2)
    for i, x in enumerate(lac, 1):
        need[i] = x
    cnt = [0] * (top + 2)
    total = sum(la)
    tpl = W.template()
    out = []

    def used():
        return sum(cnt)

    def place(k, chosen):
        # k indexes tpl from the right: tpl[-1 - k]
        if k == len(tpl):
            if used() == total:
                comps = tuple(reversed(chosen))
                out.append(SpinorElement(n, W.mu, comps))
            return
        kind, a = tpl[len(tpl) - 1 - k]
        prev = chosen[-1] if chosen and chosen[-1].kind is not Kind.EMPTY else None
        if kind is Kind.EMPTY:
            place(k + 1, chosen + [EMPTY_COMPONENT])
            return
        if kind in SP_KINDS:
            for col in _columns_extending(cnt, need, top, top):
                if (len(col) % 2 == 1) == (kind is Kind.SP_MINUS):
                    place(k + 1, chosen + [sp_component(col)])
            return
        # the generators keep cnt in step with the columns they yield
        for R in _columns_extending(cnt, need, top, top):
            for L in _columns_extending(cnt, need, top, top):
                if kind is Kind.T:
                    if len(L) < a or (len(L) - a) % 2 or len(R) < len(L) - a:
                        continue
                    T = t_component(a, L, R)
                else:
                    if len(L) % 2 == 0 or len(R) < len(L):
                        continue
                    T = tbar0_component(L, R)
                if not T.is_valid():
                    continue
                if prev is not None and not is_admissible(T, prev):
                    continue
                place(k + 1, chosen + [T])

    place(0, [])
    return out
