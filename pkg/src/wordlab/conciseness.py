"""Bounds on the verbal subgroup from the number of word values, checked per group.

``lemma_concise_report`` follows the chain: the conjugation action on the
value set has kernel ``C_G(W)``; hence ``|G : C_G(W)| <= m!``; and when ``W``
is abelian every value ``g`` has ``phi(|g|) <= m`` and ``|W| <= L(m)^m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .catalog import catalog_group
from .group import FiniteGroup, centralizer, derived_of, euler_phi, subgroup_generated
from .rationality import RationalityVerdict, rational_on, weakly_rational_on
from .words import (
    BudgetExceeded,
    Commutator,
    Var,
    Word,
    check_budget,
    gamma_power_word,
    word_image,
)


class NotMultilinearCommutator(ValueError):
    """The bound only applies to multilinear commutator words."""


def max_order_with_phi_at_most(m: int) -> int:
    """``L(m) = max{n : phi(n) <= m}``, by scanning ``n <= 2 m^2 + 2``."""
    if m < 1:
        raise ValueError("m must be positive")
    return max(n for n in range(1, 2 * m * m + 3) if euler_phi(n) <= m)


@dataclass
class Inequality:
    name: str
    lhs: int
    rhs: int
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "asserted": self.asserted, "passed": self.passed}


@dataclass
class ConciseReport:
    group: str
    word: str
    m: int
    order_W: int
    order_centralizer: int
    index_centralizer: int
    m_factorial: int
    order_center_W: int
    order_derived_W: int
    W_abelian: bool
    kernel_equals_centralizer: bool
    value_orders: list[tuple[int, int]]  # (|g|, phi(|g|)) per value
    L_m: int
    final_bound: int | None
    weakly_rational: bool
    inequalities: list[Inequality] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.kernel_equals_centralizer and all(q.passed for q in self.inequalities if q.asserted)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "word": self.word,
            "m": self.m,
            "order_W": self.order_W,
            "order_centralizer": self.order_centralizer,
            "index_centralizer": self.index_centralizer,
            "m_factorial": self.m_factorial,
            "order_center_W": self.order_center_W,
            "order_derived_W": self.order_derived_W,
            "W_abelian": self.W_abelian,
            "kernel_equals_centralizer": self.kernel_equals_centralizer,
            "value_orders": [list(p) for p in self.value_orders],
            "L_m": self.L_m,
            "final_bound": self.final_bound,
            "weakly_rational": self.weakly_rational,
            "inequalities": [q.to_dict() for q in self.inequalities],
            "passed": self.passed,
        }

    def table_lines(self) -> list[str]:
        lines = [f"{self.group}  w = {self.word}  m = {self.m}  |W| = {self.order_W}"]
        status = "PASS" if self.kernel_equals_centralizer else "FAIL"
        lines.append(f"  {'kernel of action = C_G(W)':<34} {'':>12}    {status}")
        for q in self.inequalities:
            mark = ("PASS" if q.passed else "FAIL") if q.asserted else "info"
            lines.append(f"  {q.name:<34} {q.lhs:>12} <= {q.rhs:<12} {mark}")
        return lines


def action_kernel(G: FiniteGroup, values: Sequence[int]) -> tuple[int, ...]:
    """Elements acting trivially on ``values`` by conjugation.

    The action is built as permutations of positions in ``values``; a
    non-invariant set raises.
    """
    vals = np.asarray(sorted(values))
    pos = {int(v): i for i, v in enumerate(vals)}
    kernel = []
    ident = list(range(len(vals)))
    for x in range(G.order):
        conj = G.mul[G.mul[G.inv[x], vals], x]
        try:
            perm = [pos[int(c)] for c in conj]
        except KeyError:
            raise ValueError("value set is not closed under conjugation") from None
        if perm == ident:
            kernel.append(x)
    return tuple(kernel)


def lemma_concise_report(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> ConciseReport:
    image = word_image(G, w, budget, jobs)
    m = len(image)
    W = subgroup_generated(G, image)
    CW = centralizer(G, W.members)
    kernel = action_kernel(G, image)
    kernel_ok = kernel == CW.members == centralizer(G, image).members
    center = tuple(x for x in W.members if x in CW.memberset)
    derived = derived_of(G, W)
    abelian = derived.order == 1
    orders = [(int(G.element_orders[g]), euler_phi(int(G.element_orders[g]))) for g in image]
    L = max_order_with_phi_at_most(m)
    mf = math.factorial(m)
    ineqs = [
        Inequality("|G : C_G(W)| <= m!", G.order // CW.order, mf),
        Inequality("|W : Z(W)| <= m!", W.order // len(center), mf),
    ]
    final = None
    if abelian:
        ineqs.append(Inequality("max phi(|g|) over values <= m", max(p for _, p in orders), m))
        final = L ** m
        ineqs.append(Inequality("|W| <= L(m)^m", W.order, final))
    else:
        # only meaningful modulo W'; recorded, not asserted
        ineqs.append(Inequality("max phi(|g|) over values <= m", max(p for _, p in orders), m, asserted=False))
    return ConciseReport(
        group=G.name,
        word=w.text,
        m=m,
        order_W=W.order,
        order_centralizer=CW.order,
        index_centralizer=G.order // CW.order,
        m_factorial=mf,
        order_center_W=len(center),
        order_derived_W=derived.order,
        W_abelian=abelian,
        kernel_equals_centralizer=kernel_ok,
        value_orders=orders,
        L_m=L,
        final_bound=final,
        weakly_rational=weakly_rational_on(G, w, budget, jobs).holds,
        inequalities=ineqs,
    )


def is_multilinear_commutator(w: Word) -> bool:
    seen: list[str] = []

    def walk(node) -> bool:
        if isinstance(node, Var):
            seen.append(node.name)
            return True
        if isinstance(node, Commutator):
            return walk(node.left) and walk(node.right)
        return False

    return walk(w.ast) and len(seen) == len(set(seen))


@dataclass(frozen=True)
class FamBoundReport:
    group: str
    word: str
    m: int
    order_W: int
    bound: int
    holds: bool
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {"group": self.group, "word": self.word, "m": self.m,
                "order_W": self.order_W, "bound": self.bound, "holds": self.holds,
                "degenerate": self.degenerate}


def fam_bound_check(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> FamBoundReport:
    """Compare ``|w(G)|`` with ``(m-1)^(m-1)`` for a multilinear commutator word.

    ``m`` is the raw number of values, identity included.  With ``m = 1``
    the verbal subgroup is trivial and the report is marked degenerate.
    """
    if not is_multilinear_commutator(w):
        raise NotMultilinearCommutator(
            f"{w.text} is not a multilinear commutator word (each variable once, only commutators)"
        )
    image = word_image(G, w, budget, jobs)
    m = len(image)
    W = subgroup_generated(G, image)
    bound = (m - 1) ** (m - 1)
    return FamBoundReport(G.name, w.text, m, W.order, bound, W.order <= bound, degenerate=m < 2)


@dataclass
class CorollaryReport:
    exponents: tuple[int, ...]
    word: str
    verdicts: list[RationalityVerdict]
    skipped: list[tuple[str, str]]  # (group, reason)

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def failures(self) -> list[RationalityVerdict]:
        return [v for v in self.verdicts if not v.holds]

    def to_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "word": self.word,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "skipped": [{"group": g, "reason": r} for g, r in self.skipped],
            "holds": self.holds,
            "scope": "evidence on the listed groups only",
        }


def corollary_check(exponents: Sequence[int], groups: Iterable[str | FiniteGroup],
                    budget: int | None = None, jobs: int = 1) -> CorollaryReport:
    w = gamma_power_word(exponents)
    verdicts = []
    skipped = []
    for spec in groups:
        G = spec if isinstance(spec, FiniteGroup) else catalog_group(spec)
        try:
            check_budget(G, w, budget)
        except BudgetExceeded as exc:
            skipped.append((G.name, str(exc)))
            continue
        verdicts.append(rational_on(G, w, budget, jobs))
    return CorollaryReport(tuple(int(n) for n in exponents), w.text, verdicts, skipped)
