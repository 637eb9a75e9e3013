"""Character tables by the Dixon method, and class-algebra triple counts.

The irreducible characters are found modulo a prime ``p = 1 (mod exp G)`` as
the common eigenvectors of the class matrices, then lifted to complex values
by recovering the eigenvalue multiplicities of each class representative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import modp
from .group import ClassTable, FiniteGroup
from .rationality import normalize_exponent

IMAG_TOL = 1e-8
FORMULA_TOL = 1e-6


class CharacterTableError(RuntimeError):
    """The mod-p computation or its lift produced something inconsistent."""


@dataclass(frozen=True)
class ClassMatrix:
    i: int
    a: np.ndarray  # a[j, k] = #{(x, y) in C_i x C_j : x y = rep_k}


@dataclass(frozen=True)
class ModPCharacterTable:
    prime: int
    primitive_root: int
    exponent: int
    root_of_unity: int  # primitive_root ** ((p-1)/exponent), stands for exp(2 pi i / exponent)
    table: np.ndarray  # characters x classes, residues mod p
    degrees: tuple[int, ...]
    class_table: ClassTable
    group_order: int


@dataclass(frozen=True)
class ComplexCharacterTable:
    values: np.ndarray  # complex, characters x classes
    degrees: tuple[int, ...]
    exponent: int
    multiplicities: tuple  # per character, per class: eigenvalue multiplicities of rep
    class_table: ClassTable
    group_order: int


def class_matrix(G: FiniteGroup, T: ClassTable, i: int) -> ClassMatrix:
    r = len(T)
    Ci = np.asarray(T.classes[i])
    a = np.zeros((r, r), dtype=np.int64)
    inv_ci = G.inv[Ci]
    for k in range(r):
        # x y = rep_k  <=>  y = x^-1 rep_k
        ys = G.mul[inv_ci, T.rep[k]]
        a[:, k] = np.bincount(T.class_of[ys], minlength=r)
    a.setflags(write=False)
    return ClassMatrix(i, a)


def dixon_prime(G: FiniteGroup) -> int:
    m = G.exponent
    bound = 2 * math.sqrt(G.order)
    p = m + 1
    while not (p > bound and modp.is_prime(p)):
        p += m
    return p


def _split(spaces: list[np.ndarray], A: np.ndarray, p: int) -> list[np.ndarray]:
    out = []
    for B in spaces:
        d = B.shape[0]
        if d == 1:
            out.append(B)
            continue
        _, pivots = modp.rref(B, p)
        # rows of B are in reduced echelon form: B[:, pivots] = I
        R = ((A @ B.T) % p)[pivots, :]
        for lam in modp.roots(modp.charpoly(R, p), p):
            C = modp.nullspace((R - lam * np.eye(d, dtype=np.int64)) % p, p)
            if C.shape[0] == 0:
                continue
            out.append(modp.rref((C @ B) % p, p)[0])
    return out


def character_table_mod_p(G: FiniteGroup, T: ClassTable | None = None) -> ModPCharacterTable:
    T = G.classes if T is None else T
    r = len(T)
    p = dixon_prime(G)
    spaces = [np.eye(r, dtype=np.int64)]
    for i in range(r):
        if all(B.shape[0] == 1 for B in spaces):
            break
        spaces = _split(spaces, class_matrix(G, T, i).a, p)
    dims = [B.shape[0] for B in spaces]
    if len(spaces) != r or any(d != 1 for d in dims):
        raise CharacterTableError(
            f"{G.name}: eigenspace splitting left dimensions {dims} (expected {r} lines) mod {p}"
        )
    sizes = np.asarray(T.sizes, dtype=np.int64)
    inv_cls = np.asarray(T.inverse_class)
    size_inv = np.array([pow(int(h), -1, p) for h in sizes], dtype=np.int64)
    rows = []
    degrees = []
    for B in spaces:
        v = B[0]
        if v[0] == 0:
            raise CharacterTableError(f"{G.name}: central character vanishes on the identity class")
        omega = v * pow(int(v[0]), -1, p) % p
        # sum_k omega_k omega_k' / h_k = |G| / chi(1)^2
        s = int((omega * omega[inv_cls] % p * size_inv % p).sum() % p)
        if s == 0:
            raise CharacterTableError(f"{G.name}: degenerate norm for a central character")
        deg_sq = G.order * pow(s, -1, p) % p
        deg = next((t for t in range(1, math.isqrt(G.order) + 1) if t * t % p == deg_sq), None)
        if deg is None:
            raise CharacterTableError(f"{G.name}: no degree with square {deg_sq} mod {p}")
        degrees.append(deg)
        rows.append(deg * omega % p * size_inv % p)
    order = sorted(range(r), key=lambda c: (degrees[c], tuple(int(x) for x in rows[c])))
    table = np.array([rows[c] for c in order], dtype=np.int64)
    table.setflags(write=False)
    g0 = modp.smallest_primitive_root(p)
    return ModPCharacterTable(
        prime=p,
        primitive_root=g0,
        exponent=G.exponent,
        root_of_unity=pow(g0, (p - 1) // G.exponent, p),
        table=table,
        degrees=tuple(degrees[c] for c in order),
        class_table=T,
        group_order=G.order,
    )


def lift_character_table(G: FiniteGroup, t: ModPCharacterTable) -> ComplexCharacterTable:
    """Complex values from the mod-p table via eigenvalue multiplicities.

    For a representative ``g`` of order ``o`` the multiplicity of
    ``exp(2 pi i j / o)`` is ``(1/o) sum_s chi(g^s) z^(-j s)`` with ``z`` the
    matching root of unity mod p.
    """
    p = t.prime
    T = t.class_table
    m = t.exponent
    r = len(T)
    values = np.zeros((r, r), dtype=complex)
    mults = []
    for c in range(r):
        row_mults = []
        for k in range(r):
            g = T.rep[k]
            o = T.rep_orders[k]
            power_classes = [int(T.class_of[G.power(g, s)]) for s in range(o)]
            chi_pows = [int(t.table[c, pc]) for pc in power_classes]
            zo = pow(t.root_of_unity, m // o, p)
            o_inv = pow(o, -1, p)
            mu = []
            for j in range(o):
                zj = pow(zo, (-j) % o, p)
                acc = 0
                zs = 1
                for s in range(o):
                    acc += chi_pows[s] * zs
                    zs = zs * zj % p
                mu.append(acc % p * o_inv % p)
            if any(x > t.degrees[c] for x in mu) or sum(mu) != t.degrees[c]:
                raise CharacterTableError(
                    f"{G.name}: multiplicities {mu} for character {c} at class {T.names[k]} "
                    f"do not lift to degree {t.degrees[c]}"
                )
            values[c, k] = sum(n * cmath.exp(2j * math.pi * j / o) for j, n in enumerate(mu) if n)
            row_mults.append(tuple(mu))
        mults.append(tuple(row_mults))
    values.setflags(write=False)
    return ComplexCharacterTable(
        values=values,
        degrees=t.degrees,
        exponent=m,
        multiplicities=tuple(mults),
        class_table=T,
        group_order=G.order,
    )


def cached_mod_p_table(G: FiniteGroup) -> ModPCharacterTable:
    cache = G.__dict__
    if "_mod_p_table" not in cache:
        cache["_mod_p_table"] = character_table_mod_p(G)
    return cache["_mod_p_table"]


def character_table(G: FiniteGroup) -> ComplexCharacterTable:
    """Lifted character table of ``G``, cached on the group."""
    cache = G.__dict__
    if "_character_table" not in cache:
        cache["_character_table"] = lift_character_table(G, cached_mod_p_table(G))
    return cache["_character_table"]


def mod_p_orthogonality(t: ModPCharacterTable) -> np.ndarray:
    """Gram matrix ``sum_j h_j chi(j) psi(j')`` mod p; equals ``|G| * I`` for a correct table."""
    p = t.prime
    T = t.class_table
    h = np.asarray(T.sizes, dtype=np.int64)
    conj = t.table[:, np.asarray(T.inverse_class)]
    return (t.table * h % p) @ conj.T % p


def complex_orthogonality(ct: ComplexCharacterTable) -> np.ndarray:
    h = np.asarray(ct.class_table.sizes, dtype=float)
    return (ct.values * h) @ ct.values.conj().T


def triple_count_brute(G: FiniteGroup, T: ClassTable, D: int, C: int) -> int:
    """#{(a, b, c) in D^-1 x C^-1 x C : abc = 1}, counted exactly.

    For fixed ``a`` the number of ``(b, c)`` with ``bc = a^-1`` is the same
    for every ``a`` in the class, so only one target is enumerated.
    """
    target = int(G.inv[T.rep[T.inverse_class[D]]])
    cs = np.asarray(T.classes[C])
    bs = G.mul[target, G.inv[cs]]  # b = target c^-1
    hits = int((T.class_of[bs] == T.inverse_class[C]).sum())
    return T.sizes[D] * hits


def triple_count_formula(ct: ComplexCharacterTable, T: ClassTable, D: int, C: int,
                         g: int | None = None, b: int | None = None) -> float:
    """Character sum for the triple count of ``(D, C)``.

    ``g`` (in D) and ``b`` (in C^-1) default to the class representatives.
    """
    g_cls = D if g is None else int(T.class_of[g])
    b_cls = T.inverse_class[C] if b is None else int(T.class_of[b])
    if g_cls != D or b_cls != T.inverse_class[C]:
        raise ValueError("g must lie in D and b in the inverse class of C")
    vals = ct.values
    deg = np.asarray(ct.degrees, dtype=float)
    terms = vals[:, T.inverse_class[D]] * vals[:, b_cls] * vals[:, T.inverse_class[b_cls]] / deg
    total = terms.sum() * (T.sizes[C] ** 2 * T.sizes[D] / ct.group_order)
    scale = max(1.0, abs(total))
    if abs(total.imag) > IMAG_TOL * scale:
        raise CharacterTableError(f"imaginary residue {total.imag:.3g} in triple-count formula")
    return float(total.real)


def class_power_map(G: FiniteGroup, T: ClassTable, e: int) -> tuple[int, ...]:
    """Class of ``x^e`` for ``x`` in each class; ``e`` must be prime to ``|G|``."""
    if math.gcd(e, G.order) != 1:
        raise ValueError(f"exponent {e} is not prime to |G| = {G.order}")
    pm = G.power_map(e)
    out = []
    for k, members in enumerate(T.classes):
        images = set(int(T.class_of[x]) for x in pm[list(members)])
        if len(images) != 1:
            raise CharacterTableError(f"power map {e} is not well defined on class {T.names[k]}")
        out.append(images.pop())
    return tuple(out)


@dataclass(frozen=True)
class TripleCountReport:
    group: str
    D: str
    C: str
    e: int
    e_effective: int
    D_e: str
    C_e: str
    N_brute: int
    N_brute_e: int
    N_formula: float
    N_formula_e: float
    brute_equal: bool
    formula_matches: bool
    formula_matches_e: bool

    @property
    def holds(self) -> bool:
        return self.brute_equal and self.formula_matches and self.formula_matches_e

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "D": self.D, "C": self.C, "e": self.e, "e_effective": self.e_effective,
            "D_e": self.D_e, "C_e": self.C_e,
            "N_brute": self.N_brute, "N_brute_e": self.N_brute_e,
            "N_formula": round(self.N_formula, 9), "N_formula_e": round(self.N_formula_e, 9),
            "brute_equal": self.brute_equal,
            "formula_matches": self.formula_matches,
            "formula_matches_e": self.formula_matches_e,
            "holds": self.holds,
        }


def formula_agrees(formula: float, brute: int) -> bool:
    return round(formula) == brute and abs(formula - brute) < FORMULA_TOL * max(1, brute)


def effective_exponent(G: FiniteGroup, T: ClassTable, D: int, C: int, e: int) -> int:
    """An exponent prime to ``|G|`` that acts like ``e`` on the classes ``D`` and ``C``.

    ``e`` itself when already prime to ``|G|``; otherwise ``e`` must be prime
    to the orders of both representatives and is moved by
    :func:`normalize_exponent`.
    """
    if math.gcd(e, G.order) == 1:
        return e
    o = math.lcm(T.rep_orders[D], T.rep_orders[C])
    if math.gcd(e, o) != 1:
        raise ValueError(f"exponent {e} is not prime to the element orders of {T.names[D]} and {T.names[C]}")
    return normalize_exponent(e % o or o, o, G.order)


def galois_check(G: FiniteGroup, D: int, C: int, e: int, ct: ComplexCharacterTable | None = None) -> TripleCountReport:
    T = G.classes
    ct = ct or character_table(G)
    e_eff = effective_exponent(G, T, D, C, e)
    pm = class_power_map(G, T, e_eff)
    De, Ce = pm[D], pm[C]
    n = triple_count_brute(G, T, D, C)
    ne = triple_count_brute(G, T, De, Ce)
    f = triple_count_formula(ct, T, D, C)
    fe = triple_count_formula(ct, T, De, Ce)
    return TripleCountReport(
        group=G.name, D=T.names[D], C=T.names[C], e=e, e_effective=e_eff, D_e=T.names[De], C_e=T.names[Ce],
        N_brute=n, N_brute_e=ne, N_formula=f, N_formula_e=fe,
        brute_equal=n == ne,
        formula_matches=formula_agrees(f, n),
        formula_matches_e=formula_agrees(fe, ne),
    )


def _clean(x: float) -> float:
    x = round(x, 12)
    return 0.0 if x == 0 else x


def character_table_document(G: FiniteGroup, lift: bool = True, mod_p: bool = False) -> dict:
    T = G.classes
    doc = {
        "group": G.name,
        "order": G.order,
        "classes": [
            {"name": T.names[k], "rep": G.cycle_string(T.rep[k]), "size": T.sizes[k],
             "element_order": T.rep_orders[k]}
            for k in range(len(T))
        ],
    }
    t = cached_mod_p_table(G)
    doc["degrees"] = list(t.degrees)
    if lift:
        ct = character_table(G)
        doc["values"] = [
            [{"re": _clean(v.real), "im": _clean(v.imag)} for v in row] for row in ct.values
        ]
    if mod_p:
        doc["mod_p"] = {
            "prime": t.prime,
            "primitive_root": t.primitive_root,
            "root_of_unity": t.root_of_unity,
            "exponent": t.exponent,
            "table": [[int(x) for x in row] for row in t.table],
        }
    return doc
