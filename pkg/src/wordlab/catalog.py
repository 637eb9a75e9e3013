"""Named groups: ``C<n>``, ``D<n>`` (dihedral of order 2n), ``S<n>``, ``A<n>``,
``Q8``, ``SL(2,3)`` and ``PSL(2,p)`` for p in {5, 7}.

Degrees: C_n, S_n, A_n and D_n (n >= 3) act on n points; D2 is the Klein
four group on 4 points; Q8 acts regularly on 8 points; SL(2,3) acts on the
8 nonzero vectors of F_3^2; PSL(2,p) acts on the projective line (p+1 points).
"""

from __future__ import annotations

import math
import re

from .group import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupError,
    Permutation,
    SizeLimitError,
    build_group,
    read_generator_file,
)

# Catalog used by the verification sweeps, in increasing order.
STANDARD_CATALOG = (
    "C2", "C3", "C4", "D2", "C5", "C6", "S3", "C7", "C8", "D4", "Q8",
    "D5", "D6", "A4", "S4", "SL(2,3)", "A5", "PSL(2,5)", "S5", "PSL(2,7)",
)


class CatalogError(GroupError):
    """Unrecognised group name."""


_PATTERNS = [
    (re.compile(r"C(\d+)"), "cyclic"),
    (re.compile(r"D(\d+)"), "dihedral"),
    (re.compile(r"S(\d+)"), "symmetric"),
    (re.compile(r"A(\d+)"), "alternating"),
    (re.compile(r"Q8"), "quaternion"),
    (re.compile(r"SL\(2,3\)"), "sl23"),
    (re.compile(r"PSL\(2,(\d+)\)"), "psl2"),
]


def _perm(degree: int, *cycles) -> Permutation:
    images = list(range(degree))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return Permutation(tuple(images))


def predicted_order(spec: str) -> int:
    kind, n = _match(spec)
    if kind == "cyclic":
        return n
    if kind == "dihedral":
        return 2 * n
    if kind == "symmetric":
        return math.factorial(n)
    if kind == "alternating":
        return max(1, math.factorial(n) // 2)
    if kind == "quaternion":
        return 8
    if kind == "sl23":
        return 24
    return n * (n * n - 1) // 2


def _match(spec: str) -> tuple[str, int]:
    s = spec.strip().replace(" ", "").upper()
    for pat, kind in _PATTERNS:
        m = pat.fullmatch(s)
        if not m:
            continue
        n = int(m.group(1)) if m.groups() else 0
        if kind in ("cyclic", "dihedral", "symmetric", "alternating") and n < 1:
            raise CatalogError(f"{spec!r}: index must be positive")
        if kind == "psl2" and n not in (5, 7):
            raise CatalogError(f"{spec!r}: only PSL(2,5) and PSL(2,7) are catalogued")
        return kind, n
    raise CatalogError(f"unknown group {spec!r}")


def canonical_name(spec: str) -> str:
    kind, n = _match(spec)
    return {
        "cyclic": f"C{n}", "dihedral": f"D{n}", "symmetric": f"S{n}",
        "alternating": f"A{n}", "quaternion": "Q8", "sl23": "SL(2,3)",
        "psl2": f"PSL(2,{n})",
    }[kind]


def catalog_group(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    kind, n = _match(spec)
    name = canonical_name(spec)
    if predicted_order(spec) > cap:
        raise SizeLimitError(f"{name} has order {predicted_order(spec)} > cap {cap}")
    return build_group(_generators(kind, n), name=name, cap=cap)


def _generators(kind: str, n: int) -> list[Permutation]:
    if kind == "cyclic":
        if n == 1:
            return [Permutation((0,))]
        return [_perm(n, list(range(n)))]
    if kind == "dihedral":
        if n == 1:
            return [_perm(2, [0, 1])]
        if n == 2:
            return [_perm(4, [0, 1], [2, 3]), _perm(4, [0, 2], [1, 3])]
        refl = tuple((-i) % n for i in range(n))
        return [_perm(n, list(range(n))), Permutation(refl)]
    if kind == "symmetric":
        if n == 1:
            return [Permutation((0,))]
        if n == 2:
            return [_perm(2, [0, 1])]
        return [_perm(n, [0, 1]), _perm(n, list(range(n)))]
    if kind == "alternating":
        if n < 3:
            return [Permutation(tuple(range(max(n, 1))))]
        return [_perm(n, [0, 1, i]) for i in range(2, n)]
    if kind == "quaternion":
        return _quaternion_gens()
    if kind == "sl23":
        return _sl2_gens(3, projective=False)
    return _sl2_gens(n, projective=True)


def _quaternion_gens() -> list[Permutation]:
    # points: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k; left multiplication
    units = ["1", "i", "j", "k"]
    table = {
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    }

    def point(sign, u):
        return 2 * units.index(u) + (0 if sign > 0 else 1)

    gens = []
    for left in ("i", "j"):
        images = [0] * 8
        for u in units:
            for sign in (1, -1):
                s2, v = table[(left, u)]
                images[point(sign, u)] = point(sign * s2, v)
        gens.append(Permutation(tuple(images)))
    return gens


def _sl2_gens(p: int, projective: bool) -> list[Permutation]:
    if projective:
        # projective line: points 0..p-1 and infinity = p
        inf = p
        trans = [(z + 1) % p for z in range(p)] + [inf]
        # z -> -1/z
        inv = []
        for z in range(p):
            inv.append(inf if z == 0 else (-pow(z, -1, p)) % p)
        inv.append(0)
        return [Permutation(tuple(trans)), Permutation(tuple(inv))]
    vectors = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}
    gens = []
    for (m00, m01, m10, m11) in ((1, 1, 0, 1), (1, 0, 1, 1)):
        images = []
        for (a, b) in vectors:
            images.append(index[((m00 * a + m01 * b) % p, (m10 * a + m11 * b) % p)])
        gens.append(Permutation(tuple(images)))
    return gens


def resolve_group(spec: str | None = None, gens_file=None, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Group from exactly one of a catalog name or a generator file."""
    if (spec is None) == (gens_file is None):
        raise GroupError("give exactly one of a group name or a generator file")
    if spec is not None:
        return catalog_group(spec, cap=cap)
    gens = read_generator_file(gens_file)
    return build_group(gens, name=str(gens_file), cap=cap)
