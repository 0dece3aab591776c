"""Cross-check matrix behind `python -m orthobranch verify`.

Each suite walks a fixed list of instances in a fixed order and stops early
when the time budget runs out; the report says how far it got.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from . import partitions as P
from .branching import (BranchingQuery, Group, Method, all_methods, barred_set, delta_range,
                        flagged_set, littlewood_stable, sp_multiplicity)
from .genexp import K_so_even, K_so_odd, graded_identity_check
from .lr import Kind, enumerate_lr, lr_count
from .oracle import lr_brute, zero_weight_dim
from .separation import pad_height, separate
from .spinor import OrthogonalWeight, enumerate_LRd


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    complete: bool = True
    seconds: float = 0.0
    counters: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "complete": self.complete,
                "checked": self.checked, "failures": self.failures[:20],
                "counters": dict(sorted(self.counters.items()))}


class _Clock:
    def __init__(self, budget):
        self.t0 = time.monotonic()
        self.budget = budget

    def expired(self) -> bool:
        return self.budget is not None and time.monotonic() - self.t0 > self.budget

    def elapsed(self) -> float:
        return time.monotonic() - self.t0


def orthogonal_instances(max_n: int, max_size: int):
    """(n, lam, mu) with l(lam) <= n, |lam| <= max_size, mu in P(O_n), |lam| - |mu| even and >= 0."""
    for n in range(1, max_n + 1):
        labels = P.orthogonal_labels(n, max_size)
        for w in range(max_size + 1):
            for lam in P.partitions_of(w, max_length=n):
                for mu in labels:
                    if sum(mu) <= w and (w - sum(mu)) % 2 == 0:
                        yield n, lam, mu


def branching_suite(max_n=6, max_size=8, budget=None) -> SuiteReport:
    rep = SuiteReport("branching")
    clock = _Clock(budget)
    for n, lam, mu in orthogonal_instances(max_n, max_size):
        if clock.expired():
            rep.complete = False
            break
        q = BranchingQuery(n, lam, mu)
        vals = all_methods(q)
        rep.checked += 1
        if len(set(vals.values())) != 1:
            rep.failures.append({"n": n, "lambda": list(lam), "mu": list(mu), "values": vals})
        if 2 * len(lam) <= n and littlewood_stable(q) != vals["flagged"]:
            rep.failures.append({"n": n, "lambda": list(lam), "mu": list(mu), "littlewood": "mismatch"})
    for n in (2, 4, 6):
        for w in range(max_size + 1):
            for lam in P.partitions_of(w, max_length=n):
                for mu in P.orthogonal_labels(n, w):
                    if clock.expired():
                        rep.complete = False
                        break
                    if len(mu) > n // 2 or (w - sum(mu)) % 2:
                        continue
                    q = BranchingQuery(n, lam, mu, Group.SP)
                    v = sp_multiplicity(q)
                    rep.checked += 1
                    if 2 * len(lam) <= n and v != littlewood_stable(q):
                        rep.failures.append({"group": "Sp", "n": n, "lambda": list(lam), "mu": list(mu)})
    rep.seconds = clock.elapsed()
    return rep


def separation_suite(max_n=6, max_size=8, budget=None) -> SuiteReport:
    rep = SuiteReport("separation")
    clock = _Clock(budget)
    audit = Counter()
    for n, lam, mu in orthogonal_instances(max_n, max_size):
        if clock.expired():
            rep.complete = False
            break
        q = BranchingQuery(n, lam, mu)
        image = set()
        elements = enumerate_LRd(mu, lam, n)
        negative = not OrthogonalWeight(n, mu).positive
        for E in elements:
            R = separate(E, audit)
            image.add((R.delta, R.tail))
            if negative:
                R2 = separate(E, None, pad_height(E) + 2)
                audit["padding_checks"] += 1
                if R2 != R:
                    rep.failures.append({"n": n, "lambda": list(lam), "mu": list(mu), "padding": "unstable"})
        barred = {(d, S) for d in delta_range(q) for S in barred_set(q, d)}
        rep.checked += 1
        if len(image) != len(elements) or image != barred:
            rep.failures.append({"n": n, "lambda": list(lam), "mu": list(mu),
                                 "direct": len(elements), "image": len(image), "barred": len(barred)})
    rep.counters = dict(audit)
    rep.seconds = clock.elapsed()
    return rep


def genexp_suite(max_rank=3, max_size=5, identity_degree=4, budget=None) -> SuiteReport:
    rep = SuiteReport("genexp")
    clock = _Clock(budget)
    for m in range(1, max_rank + 1):
        for w in range(max_size + 1):
            for mu in P.partitions_of(w, max_length=m):
                for typ in ("B", "D"):
                    if clock.expired():
                        rep.complete = False
                        break
                    if typ == "D" and m < 2:
                        continue
                    K = K_so_odd(mu, m) if typ == "B" else K_so_even(mu, m)
                    z = zero_weight_dim(typ, m, mu)
                    rep.checked += 1
                    if K.at_one() != z or any(v < 0 for _, v in K.coeffs):
                        rep.failures.append({"type": typ, "rank": m, "mu": list(mu),
                                             "K": K.to_json()["coeffs"], "zero_weight": z})
    for n in range(1, 6):
        for w in range(4):
            for mu in P.partitions_of(w, max_length=n):
                if clock.expired():
                    rep.complete = False
                    break
                if not P.is_orthogonal_label(mu, n):
                    continue
                rep.checked += 1
                if not graded_identity_check(mu, n, identity_degree):
                    rep.failures.append({"n": n, "mu": list(mu), "identity": False})
    rep.seconds = clock.elapsed()
    return rep


def lr_suite(max_size=7, budget=None) -> SuiteReport:
    rep = SuiteReport("lr")
    clock = _Clock(budget)
    for w in range(max_size + 1):
        for la in P.partitions_of(w):
            for k in range(w + 1):
                for mu in P.partitions_of(k):
                    if not P.contains(la, mu):
                        continue
                    for nu in P.partitions_of(w - k):
                        if clock.expired():
                            rep.complete = False
                            break
                        a = lr_count(la, mu, nu)
                        rep.checked += 1
                        if a != lr_brute(la, mu, nu) or a != len(enumerate_lr(la, mu, nu, Kind.ANTI)):
                            rep.failures.append({"lambda": list(la), "mu": list(mu), "nu": list(nu)})
    rep.seconds = clock.elapsed()
    return rep


SUITES = {
    "branching": branching_suite,
    "separation": separation_suite,
    "genexp": genexp_suite,
    "lr": lr_suite,
}


def run_suites(names, budget=None) -> list:
    out = []
    for name in names:
        out.append(SUITES[name](budget=budget))
    return out
