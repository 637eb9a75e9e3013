"""Group words: parsing, rendering, evaluation and exhaustive enumeration.

Grammar (whitespace ignored)::

    word := term { term }
    term := atom [ "^" int ]
    atom := var | "(" word ")" | "[" word "," word { "," word } "]"
    var  := "x" digits
    int  := ["-"] digits            (nonzero)

``[u,v]`` is ``u^-1 v^-1 u v``; ``[a,b,c]`` is the left-normed ``[[a,b],c]``.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from . import backend
from .group import FiniteGroup, Subgroup, subgroup_generated

DEFAULT_BUDGET = 10 ** 8


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would need more evaluations than allowed."""

    def __init__(self, needed: int, budget: int, what: str = ""):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}needs {needed} evaluations, budget is {budget}")


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Inverse:
    child: "Node"


@dataclass(frozen=True)
class Power:
    child: "Node"
    exponent: int

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("exponent 0 is not allowed")


@dataclass(frozen=True)
class Product:
    children: tuple["Node", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a product needs at least two factors")


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


Node = Union[Var, Inverse, Power, Product, Commutator]


def _var_key(name: str):
    return (int(name[1:]), name)


def _collect_vars(node: Node, out: set):
    if isinstance(node, Var):
        out.add(node.name)
    elif isinstance(node, (Inverse, Power)):
        _collect_vars(node.child, out)
    elif isinstance(node, Product):
        for c in node.children:
            _collect_vars(c, out)
    else:
        _collect_vars(node.left, out)
        _collect_vars(node.right, out)


@dataclass(frozen=True)
class Word:
    ast: Node

    @property
    def variables(self) -> tuple[str, ...]:
        found: set[str] = set()
        _collect_vars(self.ast, found)
        return tuple(sorted(found, key=_var_key))

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def text(self) -> str:
        return render(self.ast)

    def __str__(self):
        return self.text

    def power(self, n: int) -> "Word":
        return Word(Power(self.ast, n))


# --- parsing ---------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise WordSyntaxError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return self.text[start:self.pos]

    def word(self) -> Node:
        terms = [self.term()]
        while self.peek() in ("x", "(", "["):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def term(self) -> Node:
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            n = sign * int(self.digits())
            if n == 0:
                self.error("exponent 0 is not allowed", start)
            node = Power(node, n)
        return node

    def atom(self) -> Node:
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return Var("x" + self.digits())
        if ch == "(":
            self.pos += 1
            node = self.word()
            self.expect(")")
            return node
        if ch == "[":
            self.pos += 1
            parts = [self.word()]
            self.expect(",")
            parts.append(self.word())
            while self.peek() == ",":
                self.pos += 1
                parts.append(self.word())
            self.expect("]")
            node = parts[0]
            for p in parts[1:]:
                node = Commutator(node, p)
            return node
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")


def parse_word(text: str) -> Word:
    if not text or not text.strip():
        raise WordSyntaxError("empty word", 0, text)
    p = _Parser(text)
    node = p.word()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    return Word(node)


def render(node: Node) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Commutator):
        return f"[{render(node.left)},{render(node.right)}]"
    if isinstance(node, (Power, Inverse)):
        exp = -1 if isinstance(node, Inverse) else node.exponent
        inner = render(node.child)
        if isinstance(node.child, (Product, Power, Inverse)):
            inner = f"({inner})"
        return f"{inner}^{exp}"
    parts = []
    for c in node.children:
        s = render(c)
        parts.append(f"({s})" if isinstance(c, Product) else s)
    return " ".join(parts)


def gamma_power_word(exponents: Sequence[int]) -> Word:
    """``[...[x1^n1, x2]^n2, ..., xk]^nk``; exponent 1 adds no power node."""
    exponents = list(exponents)
    if not exponents:
        raise ValueError("need at least one exponent")
    if any(int(n) < 1 for n in exponents):
        raise ValueError("exponents must be positive integers")

    def pw(node, n):
        return node if n == 1 else Power(node, n)

    node = pw(Var("x1"), exponents[0])
    for i, n in enumerate(exponents[1:], start=2):
        node = pw(Commutator(node, Var(f"x{i}")), n)
    return Word(node)


def lower_central_word(k: int) -> Word:
    return gamma_power_word([1] * k)


# --- evaluation --------------------------------------------------------------

def evaluate_word(G: FiniteGroup, w: Word, assignment: Mapping[str, int]) -> int:
    missing = [v for v in w.variables if v not in assignment]
    if missing:
        raise KeyError(f"no binding for {', '.join(missing)}")
    return _eval(G, w.ast, assignment)


def _eval(G: FiniteGroup, node: Node, a: Mapping[str, int]) -> int:
    if isinstance(node, Var):
        return int(a[node.name])
    if isinstance(node, Inverse):
        return int(G.inv[_eval(G, node.child, a)])
    if isinstance(node, Power):
        g = _eval(G, node.child, a)
        if node.exponent < 0:
            g = int(G.inv[g])
        return G.power(g, abs(node.exponent))
    if isinstance(node, Product):
        g = 0
        for c in node.children:
            g = int(G.mul[g, _eval(G, c, a)])
        return g
    return G.commutator(_eval(G, node.left, a), _eval(G, node.right, a))


def compile_word(G: FiniteGroup, w: Word):
    """Flatten ``w`` into a stack program for the enumeration kernels.

    Returns ``(program, tables)``; program rows are ``(opcode, arg)``.
    """
    var_pos = {v: i for i, v in enumerate(w.variables)}
    tables: list[np.ndarray] = []
    table_ids: dict[int, int] = {}
    prog: list[tuple[int, int]] = []

    def table_for(exp: int) -> int:
        exp %= G.exponent
        if exp not in table_ids:
            table_ids[exp] = len(tables)
            tables.append(G.power_map(exp))
        return table_ids[exp]

    def emit(node):
        if isinstance(node, Var):
            prog.append((backend.OP_VAR, var_pos[node.name]))
        elif isinstance(node, Inverse):
            emit(node.child)
            prog.append((backend.OP_TABLE, table_for(-1)))
        elif isinstance(node, Power):
            emit(node.child)
            prog.append((backend.OP_TABLE, table_for(node.exponent)))
        elif isinstance(node, Product):
            emit(node.children[0])
            for c in node.children[1:]:
                emit(c)
                prog.append((backend.OP_MUL, 0))
        else:
            emit(node.left)
            emit(node.right)
            prog.append((backend.OP_COMM, 0))

    emit(w.ast)
    if not tables:
        tables.append(np.arange(G.order, dtype=np.int32))
    program = np.ascontiguousarray(np.array(prog, dtype=np.int32).reshape(-1, 2))
    return program, np.ascontiguousarray(np.stack(tables).astype(np.int32))


# --- enumeration ------------------------------------------------------------

def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("WORDLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def assignment_count(G: FiniteGroup, w: Word) -> int:
    return G.order ** w.arity


def check_budget(G: FiniteGroup, w: Word, budget: int | None = None) -> int:
    total = assignment_count(G, w)
    limit = resolve_budget(budget)
    if total > limit:
        raise BudgetExceeded(total, limit, f"{w.text} on {G.name}: ")
    return total


def value_counts(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> np.ndarray:
    """Number of assignments sending ``w`` to each element, by exhaustive enumeration.

    The assignment space is split into contiguous blocks that are counted
    independently and summed, so the result never depends on ``jobs``.
    """
    total = check_budget(G, w, budget)
    cache = G.__dict__.setdefault("_value_counts", {})
    key = w.text
    if key in cache:
        return cache[key]
    program, tables = compile_word(G, w)
    blocks = _blocks(total, jobs)

    def run(block):
        start, stop = block
        out = np.zeros(G.order, dtype=np.int64)
        backend.count_values(G.mul, G.inv, tables, program, w.arity, start, stop, out)
        return out

    if len(blocks) == 1:
        counts = run(blocks[0])
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            counts = sum(pool.map(run, blocks))
    counts.setflags(write=False)
    cache[key] = counts
    return counts


def _blocks(total: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, int(jobs))
    if jobs == 1 or total < 4096:
        return [(0, total)]
    step = math.ceil(total / jobs)
    return [(s, min(total, s + step)) for s in range(0, total, step)]


def word_image(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> tuple[int, ...]:
    counts = value_counts(G, w, budget, jobs)
    return tuple(int(g) for g in np.nonzero(counts)[0])


def solution_count(G: FiniteGroup, w: Word, g: int, budget: int | None = None, jobs: int = 1) -> int:
    return int(value_counts(G, w, budget, jobs)[g])


def verbal_subgroup(G: FiniteGroup, w: Word, budget: int | None = None, jobs: int = 1) -> Subgroup:
    return subgroup_generated(G, word_image(G, w, budget, jobs))
