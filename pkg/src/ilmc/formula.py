"""Formula syntax for intuitionistic and modal propositional logic.

Both languages share one set of node classes.  An intuitionistic formula
is a tree over ``Bot``, ``Var``, ``And``, ``Or`` and ``Impl``; a modal
formula is a tree over ``Bot``, ``Var``, ``Impl`` and ``Box``.  A tree
built only from ``Bot``/``Var``/``Impl`` belongs to both languages and the
logic it is checked in decides how ``Impl`` is read.

Nodes are immutable and hash structurally with the hash cached at
construction, so evaluators can key memo tables by subformula cheaply.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

__all__ = [
    "Bot", "Var", "And", "Or", "Impl", "Box", "Formula",
    "BOT", "TOP", "neg", "top", "m_and", "m_or", "diamond",
    "ParseError", "parse_int", "parse_modal", "render",
    "FragmentReport", "analyze", "subformulas", "size", "variables",
    "is_intuitionistic", "is_modal", "substitute",
]

IDENT = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True, eq=True, slots=True)
class Bot:
    _hash: int = field(default=hash(("Bot",)), init=False, repr=False, compare=False)

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, eq=True, slots=True)
class Var:
    name: str
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not IDENT.match(self.name) or self.name in ("true", "false"):
            raise ValueError(f"invalid variable name {self.name!r}")
        object.__setattr__(self, "_hash", hash(("Var", self.name)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, eq=True, slots=True)
class _Binary:
    left: "Formula"
    right: "Formula"
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (type(other) is type(self) and self._hash == other._hash
                and self.left == other.left and self.right == other.right)


@dataclass(frozen=True, eq=False, slots=True)
class And(_Binary):
    pass


@dataclass(frozen=True, eq=False, slots=True)
class Or(_Binary):
    pass


@dataclass(frozen=True, eq=False, slots=True)
class Impl(_Binary):
    pass


@dataclass(frozen=True, eq=True, slots=True)
class Box:
    child: "Formula"
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("Box", self.child)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return type(other) is Box and self._hash == other._hash and self.child == other.child


Formula = Union[Bot, Var, And, Or, Impl, Box]

BOT = Bot()


# ---------------------------------------------------------------- sugar

def neg(phi: Formula) -> Impl:
    return Impl(phi, BOT)


def top() -> Impl:
    return TOP


TOP = Impl(BOT, BOT)


def m_or(phi: Formula, psi: Formula) -> Impl:
    """Modal disjunction, ``(~phi) -> psi``."""
    return Impl(neg(phi), psi)


def m_and(phi: Formula, psi: Formula) -> Impl:
    """Modal conjunction, ``~(phi -> ~psi)``."""
    return neg(Impl(phi, neg(psi)))


def diamond(phi: Formula) -> Impl:
    return neg(Box(neg(phi)))


# ---------------------------------------------------------------- traversal

def subformulas(phi: Formula) -> Iterator[Formula]:
    """Yield every distinct subformula once, children before parents."""
    seen = set()
    stack = [(phi, False)]
    while stack:
        node, expanded = stack.pop()
        if node in seen:
            continue
        if expanded or isinstance(node, (Bot, Var)):
            seen.add(node)
            yield node
            continue
        stack.append((node, True))
        if isinstance(node, Box):
            stack.append((node.child, False))
        else:
            stack.append((node.right, False))
            stack.append((node.left, False))


def size(phi: Formula) -> int:
    """Number of nodes of the formula as a tree (shared subtrees counted each time)."""
    memo: dict[Formula, int] = {}
    for node in subformulas(phi):
        if isinstance(node, (Bot, Var)):
            memo[node] = 1
        elif isinstance(node, Box):
            memo[node] = 1 + memo[node.child]
        else:
            memo[node] = 1 + memo[node.left] + memo[node.right]
    return memo[phi]


def variables(phi: Formula) -> frozenset[str]:
    return frozenset(n.name for n in subformulas(phi) if isinstance(n, Var))


def is_intuitionistic(phi: Formula) -> bool:
    return not any(isinstance(n, Box) for n in subformulas(phi))


def is_modal(phi: Formula) -> bool:
    return not any(isinstance(n, (And, Or)) for n in subformulas(phi))


def substitute(phi: Formula, mapping: dict[str, Formula]) -> Formula:
    """Replace variables simultaneously; unmapped variables stay."""
    memo: dict[Formula, Formula] = {}
    for node in subformulas(phi):
        if isinstance(node, Var):
            memo[node] = mapping.get(node.name, node)
        elif isinstance(node, Bot):
            memo[node] = node
        elif isinstance(node, Box):
            memo[node] = Box(memo[node.child])
        else:
            memo[node] = type(node)(memo[node.left], memo[node.right])
    return memo[phi]


# ---------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(->)|(\[\])|(<>)|([~&|()])|([a-z][a-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        value = m.group(m.lastindex)
        kind = {1: "op", 2: "op", 3: "op", 4: "op", 5: "ident", 6: "bad"}[m.lastindex]
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", start)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, modal: bool):
        if not text.strip():
            raise ParseError("empty input", 0)
        self.tokens = _tokenize(text)
        self.i = 0
        self.modal = modal

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Formula:
        phi = self.impl()
        kind, value, pos = self.peek()
        if kind != "end":
            if value == ")":
                raise ParseError("unbalanced parenthesis", pos)
            raise ParseError(f"unexpected token {value!r}", pos)
        return phi

    # -> is right associative and binds weakest
    def impl(self) -> Formula:
        left = self.disj()
        if self.peek()[1] == "->":
            self.take()
            return Impl(left, self.impl())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.peek()[1] == "|":
            self.take()
            right = self.conj()
            left = m_or(left, right) if self.modal else Or(left, right)
        return left

    def conj(self) -> Formula:
        left = self.prefix()
        while self.peek()[1] == "&":
            self.take()
            right = self.prefix()
            left = m_and(left, right) if self.modal else And(left, right)
        return left

    def prefix(self) -> Formula:
        kind, value, pos = self.peek()
        if value == "~":
            self.take()
            return neg(self.prefix())
        if value in ("[]", "<>"):
            if not self.modal:
                raise ParseError(f"modal operator {value!r} in intuitionistic formula", pos)
            self.take()
            child = self.prefix()
            return Box(child) if value == "[]" else diamond(child)
        return self.atom()

    def atom(self) -> Formula:
        kind, value, pos = self.take()
        if value == "(":
            inner = self.impl()
            k2, v2, p2 = self.take()
            if v2 != ")":
                raise ParseError("unbalanced parenthesis, expected ')'", p2)
            return inner
        if kind == "ident":
            if value == "false":
                return BOT
            if value == "true":
                return TOP
            return Var(value)
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_int(text: str) -> Formula:
    """Parse an intuitionistic formula; ``&``/``|`` become And/Or nodes."""
    return _Parser(text, modal=False).parse()


def parse_modal(text: str) -> Formula:
    """Parse a modal formula; ``&``, ``|``, ``~``, ``true`` and ``<>`` are expanded."""
    return _Parser(text, modal=True).parse()


# ---------------------------------------------------------------- printing

_PREC = {Impl: 1, Or: 2, And: 3}


def render(phi: Formula) -> str:
    """Print with minimal parentheses so that parsing gives back the same tree."""
    memo: dict[Formula, tuple[str, int]] = {}
    for node in subformulas(phi):
        if isinstance(node, Bot):
            memo[node] = ("false", 4)
        elif isinstance(node, Var):
            memo[node] = (node.name, 4)
        elif isinstance(node, Box):
            text, prec = memo[node.child]
            memo[node] = ("[]" + (text if prec == 4 else f"({text})"), 4)
        else:
            p = _PREC[type(node)]
            ltext, lp = memo[node.left]
            rtext, rp = memo[node.right]
            # & and | are left-nested by the parser, -> right-nested
            if isinstance(node, Impl):
                lwrap, rwrap = lp <= p, rp < p
            else:
                lwrap, rwrap = lp < p, rp <= p
            ltext = f"({ltext})" if lwrap else ltext
            rtext = f"({rtext})" if rwrap else rtext
            op = {Impl: "->", Or: "|", And: "&"}[type(node)]
            memo[node] = (f"{ltext} {op} {rtext}", p)
    return memo[phi][0]


# ---------------------------------------------------------------- fragments

@dataclass(frozen=True)
class FragmentReport:
    variable_count: int
    variable_set: frozenset[str]
    implicational: bool
    strictly_implicational: bool
    size: int


def _strict(phi: Formula, memo: dict) -> bool:
    if phi in memo:
        return memo[phi]
    if isinstance(phi, (Bot, Var)):
        ok = True
    elif isinstance(phi, Box) and isinstance(phi.child, Impl):
        ok = _strict(phi.child.left, memo) and _strict(phi.child.right, memo)
    else:
        ok = False
    memo[phi] = ok
    return ok


def analyze(phi: Formula) -> FragmentReport:
    nodes = list(subformulas(phi))
    names = frozenset(n.name for n in nodes if isinstance(n, Var))
    return FragmentReport(
        variable_count=len(names),
        variable_set=names,
        implicational=not any(isinstance(n, (And, Or)) for n in nodes),
        strictly_implicational=_strict(phi, {}),
        size=size(phi),
    )
