"""Sliding and separation of l-highest elements of the spinor model.

Columns are handled in an indexed list `U` with U[j] = U_j, so U[0] is the
rightmost column (possibly empty) and U[2l] the leftmost.  Tail lengths are
tracked alongside, in the same indexing.

Separation peels off the leftmost column after sliding every tail one
component to the left, and recurses on n - 1.  The collected columns form a
tableau whose bodies are H_{(delta')^pi} and whose tails give a tableau of
shape mu'.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from . import partitions as P
from . import tableaux as TB
from .lr import InvariantError
from .spinor import (EMPTY_COMPONENT, Kind, SpinorElement, at, from_columns,
                     is_l_highest_element, max_overlap_b, raw_E, raw_F,
                     validate_element)


# -- bicrystal operators on tuples of columns ------------------------------------------

def _pair_op(op, j: int, U: list):
    L, R = U[j + 1], U[j]
    b = max_overlap_b(L, R)
    c = len(R) - b
    out = op(L, R, len(L) - c, b)
    if out is None:
        return None
    V = list(U)
    V[j + 1], V[j] = out[0], out[1]
    return V


def bicrystal_E(j: int, U: list) -> Optional[list]:
    """E acting on (U_{j+1}, U_j) viewed as a two-column tableau of residue 0."""
    return _pair_op(raw_E, j, U)


def bicrystal_F(j: int, U: list) -> Optional[list]:
    return _pair_op(raw_F, j, U)


def _must(V, what):
    if V is None:
        raise InvariantError(f"{what} vanished during sliding")
    return V


def sliding_S_operators(j: int, U: list, a: int) -> list:
    """S_j as a composite of bicrystal operators."""
    if a == 0:
        return list(U)
    top_tail = at(U[j], a)
    bottom = at(U[j + 1], 1)
    if bottom is None or bottom < top_tail:
        V = list(U)
        for _ in range(a):
            V = _must(bicrystal_F(j, V), "F_j")
        return V
    if bottom == top_tail:
        raise InvariantError(f"equal entries {bottom} at the sliding position j={j}")
    V = _must(bicrystal_F(j - 1, U), "F_{j-1}")
    for _ in range(a - 1):
        V = _must(bicrystal_F(j, V), "F_j")
    V = _must(bicrystal_E(j - 1, V), "E_{j-1}")
    return _must(bicrystal_E(j, V), "E_j")


def sliding_S_closed(j: int, U: list, a: int) -> list:
    """S_j by the explicit description of the moved entries."""
    if a == 0:
        return list(U)
    up, low = U[j + 1], U[j]
    top_tail = at(low, a)
    bottom = at(up, 1)
    V = list(U)
    body, tail = low[:len(low) - a], low[len(low) - a:]
    if bottom is None or bottom < top_tail:
        V[j + 1] = tuple(up) + tuple(tail)
        V[j] = tuple(body)
        return V
    if bottom == top_tail:
        raise InvariantError(f"equal entries {bottom} at the sliding position j={j}")
    if len(up) < 2:
        raise InvariantError("the column above the tail is too short to slide")
    # up[:-2] may be empty when the component had b + c = 2
    V[j + 1] = tuple(up[:-2]) + (up[-2],) + tuple(tail[1:])
    V[j] = tuple(body) + (tail[0], bottom)
    return V


def sliding_S(j: int, U: list, a: int, audit: Optional[Counter] = None) -> list:
    """S_j, computed both ways; the two must agree."""
    closed = sliding_S_closed(j, U, a)
    ops = sliding_S_operators(j, U, a)
    if [tuple(c) for c in closed] != [tuple(c) for c in ops]:
        raise InvariantError(f"S_{j}: closed form {closed} differs from operator form {ops}")
    if audit is not None:
        audit["S_applications"] += 1
        audit["dual_route_agreements"] += 1
    return closed


# -- words ---------------------------------------------------------------------------------

def indexed_word(U: list) -> tuple:
    """w(U_0) w(U_1) ... for an indexed column list."""
    out = []
    for col in U:
        out.extend(col)
    return tuple(out)


def _knuth_check(before: list, after: list, what: str, audit):
    if not TB.knuth_equivalent(indexed_word(before), indexed_word(after)):
        raise InvariantError(f"{what} changed the Knuth class")
    if audit is not None:
        audit["knuth_checks"] += 1


def slide_all(U: list, a_of: dict, js: list, audit: Optional[Counter] = None,
              trace: Optional[list] = None) -> list:
    """Apply S_j for j in js (each j = 2i uses a_of[i]), checking invariants."""
    V = list(U)
    for j in js:
        W = sliding_S(j, V, a_of[j // 2], audit)
        _knuth_check(V, W, f"S_{j}", audit)
        if trace is not None:
            trace.append({"S": j, "columns": [list(c) for c in reversed(W)]})
        V = W
    if len(js) > 1:
        # S_j moves entries only inside (U_{j+1}, U_j), so the order is irrelevant.
        # The operator form also borrows U_{j-1}, so it is only valid in the
        # canonical order (largest j first) and the reverse run uses the closed form.
        X = list(U)
        for j in reversed(js):
            X = sliding_S_closed(j, X, a_of[j // 2])
        if X != V:
            raise InvariantError("sliding operators do not commute")
        if audit is not None:
            audit["commutation_checks"] += 1
    return V


# -- one step ------------------------------------------------------------------------------

def _indexed(E: SpinorElement) -> list:
    return [tuple(c) for c in reversed(E.columns())]


def pad_height(E: SpinorElement) -> int:
    """Even padding height, larger than every entry that could be compared with it."""
    top = max((x for c in E.columns() for x in c), default=0)
    return 2 * (top + E.n + sum(E.mu))


def pad_negative(E: SpinorElement, a: Optional[int] = None) -> SpinorElement:
    """The padded element: T^sharp for n = 3, and V of (eta, N) for n >= 4.

    The padding column H_{(1^a)} becomes the right column of a T(1)
    component whose left column is U_{2m}.
    """
    W = E.weight
    if W.positive:
        raise ValueError("padding is only used when n - 2 mu'_1 < 0")
    if a is None:
        a = pad_height(E)
    if a % 2:
        raise ValueError("padding height must be even")
    pad = tuple(range(1, a + 1))
    m = sum(1 for T in E.comps if T.kind is Kind.TBAR0)
    U = _indexed(E)
    l = len(E.comps) - 1
    if E.n == 3:
        cols = [U[2], U[1], U[0], pad]
        out = from_columns(4, E.mu, cols)
    else:
        eta = P.canon(sorted(list(W.mu_bar) + [1], reverse=True))
        N = 2 * (l - m) + 2
        cols = [U[k] for k in range(2 * l, 2 * m - 1, -1)] + [pad]
        out = from_columns(N, eta, cols)
    if not validate_element(out):
        raise InvariantError(f"padding height {a} is too small for an admissible padded element")
    return out


@dataclass
class StepResult:
    element: SpinorElement
    left: tuple
    left_tail: int
    trace: list = field(default_factory=list)


def _positive_step(E: SpinorElement, audit, trace) -> tuple:
    U = _indexed(E)
    l = len(E.comps) - 1
    a_of = {i: E.comps[l - i].a for i in range(1, l + 1)}
    js = [2 * i for i in range(l - 1, 0, -1)]
    V = slide_all(U, a_of, js, audit, trace)
    return V, l


def slide_step(E: SpinorElement, audit: Optional[Counter] = None, pad: Optional[int] = None,
               trace: Optional[list] = None) -> StepResult:
    """One sliding step: an element for (mu, n) becomes one for (mu_2, mu_3, ...; n - 1)."""
    if not is_l_highest_element(E):
        raise ValueError("sliding needs an l-highest element")
    if E.n <= 3 and E.weight.positive:
        raise ValueError("sliding starts at n = 4 in the positive case")
    trace = [] if trace is None else trace
    W = E.weight
    l = len(E.comps) - 1
    left_tail = E.comps[0].tail_lengths()[0]
    if W.positive:
        V, _ = _positive_step(E, audit, trace)
        new_cols = [V[k] for k in range(2 * l - 1, -1, -1)]
    else:
        padded = pad_negative(E, pad)
        Vp, lp = _positive_step(padded, audit, trace)
        m = sum(1 for T in E.comps if T.kind is Kind.TBAR0)
        U = _indexed(E)
        # Vp[1] is the padding column, untouched by the slides
        new_cols = [Vp[k] for k in range(2 * lp - 1, 1, -1)]
        new_cols += [U[k] for k in range(2 * m - 1, -1, -1)]
    if E.n % 2 == 0:
        new_cols = new_cols[:-1]
    mu_t = E.mu[1:]
    left = E.columns()[0]
    out = from_columns(E.n - 1, mu_t, new_cols)
    if not validate_element(out):
        raise InvariantError("the slid element is not admissible")
    if not TB.knuth_equivalent(E.word(), out.word() + tuple(left)):
        raise InvariantError("sliding step changed the Knuth class")
    if audit is not None:
        audit["steps"] += 1
    return StepResult(out, tuple(left), left_tail, trace)


# -- full separation -------------------------------------------------------------------------

@dataclass(frozen=True)
class SeparationResult:
    delta: tuple
    tail: TB.Tableau
    lam: tuple
    columns: tuple  # (body, tail) pairs, left to right

    def to_json(self) -> dict:
        return {"delta": list(self.delta), "tail": self.tail.to_json(), "lambda": list(self.lam),
                "columns": [{"body": list(b), "tail": list(t)} for b, t in self.columns]}


def _split_col(col, t):
    col = tuple(col)
    return col[:len(col) - t], col[len(col) - t:]


def _base_columns(E: SpinorElement) -> list:
    cols, tails = E.columns(), E.column_tails()
    if E.comps[-1].kind is Kind.EMPTY:
        cols, tails = cols[:-1], tails[:-1]
    return [_split_col(c, t) for c, t in zip(cols, tails)]


def separated_columns(E: SpinorElement, audit: Optional[Counter] = None, pad: Optional[int] = None,
                      steps: Optional[list] = None) -> list:
    """The n columns (body, tail) of the separated tableau."""
    out = []
    cur = E
    while True:
        W = cur.weight
        if cur.n <= 3 and (W.positive or all(T.kind is not Kind.T for T in cur.comps)):
            return out + _base_columns(cur)
        if cur.n == 3:
            sharp = pad_negative(cur, pad)
            inner = separated_columns(sharp, audit, pad, steps)
            # drop the padding column, which is the rightmost one
            return out + inner[:-1]
        res = slide_step(cur, audit, pad)
        if steps is not None:
            steps.append({"n": cur.n, "left": list(res.left), "slides": res.trace})
        out.append(_split_col(res.left, res.left_tail))
        cur = res.element


def separate(E: SpinorElement, audit: Optional[Counter] = None, pad: Optional[int] = None,
             steps: Optional[list] = None) -> SeparationResult:
    if not validate_element(E):
        raise ValueError("not an element of the spinor model")
    if not is_l_highest_element(E):
        raise ValueError("separation needs an l-highest element")
    cols = separated_columns(E, audit, pad, steps)
    if len(cols) != E.n:
        raise InvariantError(f"separation produced {len(cols)} columns for n={E.n}")
    heights = [len(b) for b, _ in cols]
    for b, _ in cols:
        if tuple(b) != tuple(range(1, len(b) + 1)):
            raise InvariantError(f"body column {b} is not 1, 2, ...")
    if any(h % 2 for h in heights) or heights != sorted(heights):
        raise InvariantError(f"body heights {heights} do not come from an even partition")
    delta = P.canon(sorted(heights, reverse=True))
    tails = [t for _, t in cols]
    if [len(t) for t in tails if t] != list(E.mu) or any(tails[k] == () and tails[k + 1] != ()
                                                        for k in range(len(tails) - 1)):
        raise InvariantError(f"tails {tails} do not have shape mu'")
    S = TB.from_columns([t for t in tails if t])
    if not S.is_semistandard():
        raise InvariantError("tail tableau is not semistandard")
    final = TB.tableau_insert(S, TB.highest_tableau(P.conjugate(delta)))
    lam_c = final.outer
    if final != TB.highest_tableau(lam_c):
        raise InvariantError("tail does not insert into a highest tableau")
    content = Counter(E.word())
    if tuple(content[i] for i in range(1, len(lam_c) + 1)) != lam_c or sum(content.values()) != sum(lam_c):
        raise InvariantError("separation changed the content")
    return SeparationResult(delta, S, P.conjugate(lam_c), tuple(cols))


# -- the case n = 4 in reverse --------------------------------------------------------------------

def reconstruct_n4(delta, W: TB.Tableau, mu) -> SpinorElement:
    """The element for n = 4, mu'_1 = 2 separating to (delta, W)."""
    from .flags import NOT_IN_SET, FlagContext, flag_sequences_row, is_barred_D_row
    mu = P.canon(mu)
    if P.part(P.conjugate(mu), 1) != 2:
        raise ValueError("reconstruction at n = 4 needs mu'_1 = 2")
    ctx = FlagContext(4, mu, delta)
    fl = flag_sequences_row(W, ctx)
    if fl is NOT_IN_SET or not is_barred_D_row(W, ctx):
        raise ValueError("tail is outside the flagged set")
    drev = P.reverse_padded(delta, 4)
    # V_i and W_i count from the right
    V = {i: tuple(range(1, drev[4 - i] + 1)) for i in range(1, 5)}
    wc = W.columns()
    Wc = {1: tuple(wc[1]), 2: tuple(wc[0])}
    a1, a2 = len(Wc[1]), len(Wc[2])
    if fl.m[1] == 3:
        cols = [V[4] + Wc[2], V[3], V[2] + Wc[1], V[1]]
    else:
        v3 = V[3] + (at(Wc[1], a1), at(V[2], 1))
        v2 = V[2][:-2]
        # the entry moved into W_1 is the one V_2 gives up, second from its bottom
        w1 = (at(V[2], 2),) + Wc[1][1:]
        cols = [V[4] + Wc[2], v3, v2 + w1, V[1]]
    E = from_columns(4, mu, cols)
    if not validate_element(E) or E.comps[0].a != a2 or E.comps[1].a != a1:
        raise InvariantError("reconstructed element is not admissible")
    return E
