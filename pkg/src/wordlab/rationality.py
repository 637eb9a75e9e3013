"""Per-group weak rationality and rationality of words, plus power-closure of sets.

A word is weakly rational on ``G`` when its value set is closed under
``g -> g^e`` for ``e`` prime to ``|G|``, and rational when the number of
solutions of ``w = g`` and ``w = g^e`` always agree.  Both are decided here
for one finite group at a time; a verdict over a list of groups is evidence,
not a proof for all finite groups.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .group import FiniteGroup
from .words import Word, value_counts, word_image


@dataclass(frozen=True)
class Witness:
    g: int
    e: int
    count_g: Optional[int] = None
    count_ge: Optional[int] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


@dataclass(frozen=True)
class RationalityVerdict:
    mode: str  # "weak" or "full"
    group: str
    word: str
    m: int
    holds: bool
    witness: Optional[Witness] = None
    # full mode also records the variant with e prime to |g| only
    order_g_variant: Optional[bool] = None
    order_g_witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        d = {"mode": self.mode, "group": self.group, "word": self.word, "m": self.m, "holds": self.holds}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.mode == "full":
            d["order_g_variant"] = {"holds": self.order_g_variant}
            if self.order_g_witness is not None:
                d["order_g_variant"]["witness"] = self.order_g_witness.to_dict()
        return d


def _max_divisor_coprime_to(n: int, e: int) -> int:
    d = n
    g = math.gcd(d, e)
    while g > 1:
        d //= g
        g = math.gcd(d, e)
    return d


def normalize_exponent(e: int, order_g: int, order_G: int) -> int:
    """Shift ``e`` to an exponent prime to ``order_G`` acting identically on ``g``.

    Returns ``e + d`` where ``d`` is the largest divisor of ``order_G`` prime
    to ``e``.  Requires ``e >= 1``, ``gcd(e, order_g) == 1`` and
    ``order_g | order_G``.
    """
    if order_g < 1 or order_G < 1:
        raise ValueError("orders must be positive")
    if e < 1:
        raise ValueError(f"exponent must be positive, got {e}")
    if order_G % order_g:
        raise ValueError(f"{order_g} does not divide {order_G}")
    if math.gcd(e, order_g) != 1:
        raise ValueError(f"gcd({e}, {order_g}) != 1")
    return e + _max_divisor_coprime_to(order_G, e)


def coprime_residues(n: int, upto: int | None = None) -> list[int]:
    upto = n if upto is None else upto
    return [e for e in range(1, upto + 1) if math.gcd(e, n) == 1]


def weakly_rational_on(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> RationalityVerdict:
    """For each value ``g`` and each ``e`` prime to ``|g|``, require ``g^e`` to be a value."""
    image = word_image(G, w, budget, jobs)
    members = set(image)
    for g in image:
        o = int(G.element_orders[g])
        for e in coprime_residues(o):
            if G.power(g, e) not in members:
                return RationalityVerdict("weak", G.name, w.text, len(image), False, Witness(g, e))
    return RationalityVerdict("weak", G.name, w.text, len(image), True)


def weakly_rational_by_definition(G: FiniteGroup, w: Word, budget: int | None = None,
                                  jobs: int = 1) -> RationalityVerdict:
    """Same predicate, checked only with exponents prime to ``|G|``.

    Exponents run over residues prime to ``|G|`` in ``1..exp(G)``.  Each
    exponent ``e`` prime to ``|g|`` is also carried through
    :func:`normalize_exponent` and the result must act on ``g`` exactly as
    ``e`` does; a mismatch raises, since it would break the equivalence of
    the two checks.
    """
    image = word_image(G, w, budget, jobs)
    members = set(image)
    N = G.order
    residues = coprime_residues(N, G.exponent)
    for g in image:
        o = int(G.element_orders[g])
        for e in coprime_residues(o):
            e1 = normalize_exponent(e, o, N)
            if math.gcd(e1, N) != 1 or G.power(g, e1) != G.power(g, e):
                raise AssertionError(f"normalize_exponent({e}, {o}, {N}) = {e1} misbehaves on {g}")
        for e in residues:
            if G.power(g, e) not in members:
                return RationalityVerdict("weak", G.name, w.text, len(image), False, Witness(g, e))
    return RationalityVerdict("weak", G.name, w.text, len(image), True)


def rational_on(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> RationalityVerdict:
    """Compare solution counts of ``w = g`` and ``w = g^e``.

    ``holds`` uses ``e`` prime to ``|G|`` in ``1..exp(G)``; the variant with
    ``e`` prime to ``|g|`` only is recorded alongside.
    """
    counts = value_counts(G, w, budget, jobs)
    m = int((counts > 0).sum())
    residues = coprime_residues(G.order, G.exponent)
    witness = None
    for g in range(G.order):
        for e in residues:
            ge = G.power(g, e)
            if counts[g] != counts[ge]:
                witness = Witness(g, e, int(counts[g]), int(counts[ge]))
                break
        if witness:
            break
    variant_witness = None
    for g in range(G.order):
        for e in coprime_residues(int(G.element_orders[g])):
            ge = G.power(g, e)
            if counts[g] != counts[ge]:
                variant_witness = Witness(g, e, int(counts[g]), int(counts[ge]))
                break
        if variant_witness:
            break
    return RationalityVerdict(
        "full", G.name, w.text, m, witness is None, witness,
        order_g_variant=variant_witness is None, order_g_witness=variant_witness,
    )


@dataclass(frozen=True)
class PowerClosure:
    group: str
    size: int
    power_closed: bool
    conjugation_closed: bool
    contains_identity: bool
    witness: Optional[Witness] = None
    conjugation_witness: Optional[tuple[int, int]] = None
    labels: tuple[str, ...] = field(default=())

    def __bool__(self):
        return self.power_closed

    def to_dict(self) -> dict:
        d = {
            "group": self.group,
            "set": list(self.labels),
            "size": self.size,
            "power_closed": self.power_closed,
            "conjugation_closed": self.conjugation_closed,
            "contains_identity": self.contains_identity,
        }
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.conjugation_witness is not None:
            s, x = self.conjugation_witness
            d["conjugation_witness"] = {"s": s, "x": x}
        return d


def power_closed(G: FiniteGroup, S: Iterable[int], labels: Iterable[str] = ()) -> PowerClosure:
    """Is ``S`` closed under ``s -> s^e`` for every ``e`` prime to ``|s|``?"""
    members = sorted(set(int(s) for s in S))
    memberset = set(members)
    witness = None
    for s in members:
        for e in coprime_residues(int(G.element_orders[s])):
            if G.power(s, e) not in memberset:
                witness = Witness(s, e)
                break
        if witness:
            break
    conj_witness = None
    for s in members:
        for x in range(G.order):
            if G.conjugate(s, x) not in memberset:
                conj_witness = (s, x)
                break
        if conj_witness:
            break
    return PowerClosure(
        group=G.name,
        size=len(members),
        power_closed=witness is None,
        conjugation_closed=conj_witness is None,
        contains_identity=0 in memberset,
        witness=witness,
        conjugation_witness=conj_witness,
        labels=tuple(labels),
    )


def class_union(G: FiniteGroup, names: Iterable[str]) -> list[int]:
    T = G.classes
    out: set[int] = set()
    for name in names:
        out.update(T.classes[T.lookup(name)])
    return sorted(out)
