"""Finite permutation groups backed by full multiplication tables.

Elements are indices into a canonically sorted element list (lexicographic
by image sequence), so the identity is always index 0.  Products compose
left to right: ``(a*b)(i) = b(a(i))``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 1000


class GroupError(ValueError):
    """Invalid group input (bad permutation, bad generator file...)."""


class SizeLimitError(GroupError):
    """Closure would exceed the configured order cap."""


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise GroupError(f"not a bijection on 0..{n - 1}: {list(self.images)}")

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse disjoint-cycle notation such as ``"(0 1 2)(3 4)"``."""
        cycles = parse_cycles(text)
        pts = [p for c in cycles for p in c]
        n = max(pts, default=-1) + 1
        if degree is not None:
            if n > degree:
                raise GroupError(f"point {n - 1} outside degree {degree}")
            n = degree
        images = list(range(n))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def extend(self, degree: int) -> "Permutation":
        return Permutation(self.images + tuple(range(self.degree, degree)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self.images[p]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self):
        return self.cycle_string()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    text = text.strip()
    if not text:
        raise GroupError("empty permutation")
    rest = _CYCLE_RE.sub("", text).replace(",", " ").strip()
    if rest:
        raise GroupError(f"malformed cycle notation: {text!r}")
    cycles = []
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        toks = body.replace(",", " ").split()
        if not toks:
            continue
        try:
            pts = [int(t) for t in toks]
        except ValueError:
            raise GroupError(f"non-integer point in {text!r}") from None
        if any(p < 0 for p in pts):
            raise GroupError(f"negative point in {text!r}")
        if len(set(pts)) != len(pts) or seen & set(pts):
            raise GroupError(f"cycles are not disjoint in {text!r}")
        seen |= set(pts)
        cycles.append(pts)
    return cycles


def read_generator_file(path) -> list[Permutation]:
    """One permutation per line, cycle notation; blanks and ``#`` comments skipped."""
    lines = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
    if not lines:
        raise GroupError(f"no generators in {path}")
    perms = [Permutation.from_cycles(line) for line in lines]
    degree = max(p.degree for p in perms)
    return [p.extend(degree) for p in perms]


def _row_keys(rows: np.ndarray):
    """Order-preserving integer keys for permutation rows, or None if they overflow."""
    n, deg = rows.shape
    if deg == 0 or deg ** deg >= 2 ** 62:
        return None
    weights = deg ** np.arange(deg - 1, -1, -1, dtype=np.int64)
    return rows.astype(np.int64) @ weights


class FiniteGroup:
    """A finite permutation group with full multiplication and inverse tables.

    Treat instances as immutable: derived data (element orders, classes) is
    cached on first use.
    """

    def __init__(self, elements: np.ndarray, generators: Sequence[int], name: str):
        self.elements = elements
        self.elements.setflags(write=False)
        self.order = len(elements)
        self.degree = elements.shape[1]
        self.name = name
        self.generators = tuple(generators)
        self.mul = self._build_mul()
        self.mul.setflags(write=False)
        self.inv = np.argmax(self.mul == 0, axis=1).astype(np.int32)
        self.inv.setflags(write=False)

    def _build_mul(self) -> np.ndarray:
        E = self.elements
        n = self.order
        keys = _row_keys(E)
        table = np.empty((n, n), dtype=np.int32)
        if keys is not None:
            for a in range(n):
                # row b of E[:, E[a]] is b(a(.)) = a*b
                prod = _row_keys(E[:, E[a]])
                table[a] = np.searchsorted(keys, prod)
            return table
        lookup = {E[i].tobytes(): i for i in range(n)}
        for a in range(n):
            prod = E[:, E[a]]
            table[a] = [lookup[row.tobytes()] for row in prod]
        return table

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree})"

    def __len__(self):
        return self.order

    def permutation(self, g: int) -> Permutation:
        return Permutation(tuple(int(x) for x in self.elements[g]))

    def cycle_string(self, g: int) -> str:
        return self.permutation(g).cycle_string()

    def index_of(self, perm: Permutation) -> int:
        if perm.degree < self.degree:
            perm = perm.extend(self.degree)
        if perm.degree > self.degree:
            # trailing fixed points are harmless
            if any(perm.images[i] != i for i in range(self.degree, perm.degree)):
                raise GroupError(f"{perm} moves points outside degree {self.degree}")
            perm = Permutation(perm.images[: self.degree])
        row = np.asarray(perm.images)
        hits = np.nonzero((self.elements == row).all(axis=1))[0]
        if len(hits) == 0:
            raise GroupError(f"{perm} is not an element of {self.name}")
        return int(hits[0])

    def parse_element(self, text: str) -> int:
        """Element from an index (``"5"``) or from cycle notation."""
        text = text.strip()
        if re.fullmatch(r"\d+", text):
            g = int(text)
            if g >= self.order:
                raise GroupError(f"element index {g} out of range for order {self.order}")
            return g
        return self.index_of(Permutation.from_cycles(text))

    def power(self, g: int, n: int) -> int:
        n %= int(self.element_orders[g])
        result = 0
        base = g
        while n:
            if n & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            n >>= 1
        return result

    def power_map(self, n: int) -> np.ndarray:
        """Array sending every element to its ``n``-th power."""
        n %= self.exponent
        result = np.zeros(self.order, dtype=np.int32)
        base = np.arange(self.order, dtype=np.int32)
        while n:
            if n & 1:
                result = self.mul[result, base]
            base = self.mul[base, base]
            n >>= 1
        return result

    def conjugate(self, g: int, x: int) -> int:
        """``x^-1 g x``."""
        return int(self.mul[self.mul[self.inv[x], g], x])

    def commutator(self, a: int, b: int) -> int:
        return int(self.mul[self.mul[self.inv[a], self.inv[b]], self.mul[a, b]])

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        cur = np.arange(self.order, dtype=np.int32)
        ident_reached = cur == 0
        k = 1
        while not ident_reached.all():
            cur = self.mul[cur, np.arange(self.order)]
            k += 1
            newly = (cur == 0) & ~ident_reached
            orders[newly] = k
            ident_reached |= newly
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in set(self.element_orders.tolist())))

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def classes(self) -> "ClassTable":
        return conjugacy_classes(self)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self.memberset

    @cached_property
    def memberset(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def is_abelian(self) -> bool:
        m = np.asarray(self.members)
        sub = self.parent.mul[np.ix_(m, m)]
        return bool((sub == sub.T).all())

    def is_normal(self) -> bool:
        G = self.parent
        m = np.asarray(self.members)
        for x in range(G.order):
            conj = G.mul[G.mul[G.inv[x], m], x]
            if not np.isin(conj, m).all():
                return False
        return True


@dataclass(frozen=True)
class ClassTable:
    classes: tuple[tuple[int, ...], ...]
    rep: tuple[int, ...]
    sizes: tuple[int, ...]
    class_of: np.ndarray
    inverse_class: tuple[int, ...]
    rep_orders: tuple[int, ...]
    names: tuple[str, ...]

    def __len__(self):
        return len(self.classes)

    def lookup(self, name: str) -> int:
        """Class index from a ``<order><letter>`` label such as ``5B``."""
        try:
            return self.names.index(name.strip().upper())
        except ValueError:
            raise GroupError(f"no class named {name!r}; have {', '.join(self.names)}") from None


def build_group(gens: Sequence[Permutation], name: str = "G", cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Close ``gens`` under multiplication; refuse once the closure passes ``cap``."""
    gens = list(gens)
    if not gens:
        raise GroupError("need at least one generator")
    for g in gens:
        if not isinstance(g, Permutation):
            raise GroupError(f"generator {g!r} is not a Permutation")
    degree = max(g.degree for g in gens)
    gens = [g.extend(degree) for g in gens]
    ident = tuple(range(degree))
    gen_imgs = [g.images for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gen_imgs:
                q = tuple(s[i] for i in p)  # p then s
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > cap:
                        raise SizeLimitError(f"{name}: closure exceeds order cap {cap}")
        frontier = nxt
    elems = np.array(sorted(seen), dtype=np.int32).reshape(len(seen), degree)
    G = FiniteGroup(elems, [], name)
    G.generators = tuple(G.index_of(g) for g in gens)
    return G


def element_order(G: FiniteGroup, g: int) -> int:
    return int(G.element_orders[g])


def conjugacy_classes(G: FiniteGroup) -> ClassTable:
    """Classes sorted by (representative order, size, smallest member)."""
    class_of = np.full(G.order, -1, dtype=np.int64)
    raw = []
    everything = np.arange(G.order)
    for g in range(G.order):
        if class_of[g] >= 0:
            continue
        orbit = np.unique(G.mul[G.mul[G.inv[everything], g], everything])
        class_of[orbit] = len(raw)
        raw.append(tuple(int(x) for x in orbit))
    orders = G.element_orders
    keyed = sorted(raw, key=lambda c: (int(orders[c[0]]), len(c), c[0]))
    class_of = np.empty(G.order, dtype=np.int64)
    for i, c in enumerate(keyed):
        class_of[list(c)] = i
    class_of.setflags(write=False)
    inverse_class = tuple(int(class_of[G.inv[c[0]]]) for c in keyed)
    rep_orders = tuple(int(orders[c[0]]) for c in keyed)
    names = []
    counter: dict[int, int] = {}
    for o in rep_orders:
        k = counter.get(o, 0)
        counter[o] = k + 1
        names.append(f"{o}{_letters(k)}")
    return ClassTable(
        classes=tuple(keyed),
        rep=tuple(c[0] for c in keyed),
        sizes=tuple(len(c) for c in keyed),
        class_of=class_of,
        inverse_class=inverse_class,
        rep_orders=rep_orders,
        names=tuple(names),
    )


def _letters(k: int) -> str:
    # A..Z, then AA, AB, ...
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(65 + r) + s
    return s


def centralizer(G: FiniteGroup, S: Iterable[int]) -> Subgroup:
    S = np.asarray(sorted(set(int(s) for s in S)), dtype=np.int64)
    if len(S) == 0:
        raise GroupError("centralizer of an empty set")
    # x commutes with s  <=>  mul[x, s] == mul[s, x]
    ok = (G.mul[:, S] == G.mul[S, :].T).all(axis=1)
    return Subgroup(G, tuple(int(x) for x in np.nonzero(ok)[0]))


def subgroup_generated(G: FiniteGroup, S: Iterable[int]) -> Subgroup:
    gens = sorted(set(int(s) for s in S) - {0})
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                p = int(G.mul[h, s])
                if p not in members:
                    members.add(p)
                    nxt.append(p)
        frontier = nxt
    return Subgroup(G, tuple(sorted(members)))


def derived_of(G: FiniteGroup, H: Subgroup) -> Subgroup:
    m = np.asarray(H.members)
    a = m[:, None]
    b = m[None, :]
    comms = G.mul[G.mul[G.inv[a], G.inv[b]], G.mul[a, b]]
    return subgroup_generated(G, np.unique(comms).tolist())


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
