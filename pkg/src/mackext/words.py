"""Free graded algebra on the atoms t_i (degree 1) and g_X (degree 2).

Words are plain tuples of :class:`Atom`; an :class:`Element` is a sparse
F_p-linear combination of words.  Nothing in this module reduces modulo the
relations: ``mul_raw`` is bare concatenation.  The relation instances that
define the quotient algebra are produced by :func:`relation_instances`.

Text grammar::

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := [coeff '*'] word | coeff
    word    := atom ('.' atom)* | '1'
    atom    := 't' INT | 'g[' INT (',' INT)* ']'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import ContextMismatch, ParseError, ValidationError, ZeroVector
from .group import (
    GroupCtx,
    Homomorphism,
    Line,
    all_planes,
    canonical_line,
    lines_not_in_kernel,
    lines_of_plane,
    position,
)

TAU = 0
GAMMA = 1


class Atom(NamedTuple):
    """A generator.  Tuple order sorts every t_i before every g_X, and the
    g_X by (position, representative)."""

    kind: int
    pos: int
    rep: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return 1 if self.kind == TAU else 2

    @property
    def is_tau(self) -> bool:
        return self.kind == TAU

    @property
    def line(self) -> Line:
        if self.kind != GAMMA:
            raise ValidationError("t atoms carry no line")
        return Line(self.rep)

    def __str__(self):
        if self.kind == TAU:
            return f"t{self.pos}"
        return "g[" + ",".join(map(str, self.rep)) + "]"


Word = tuple[Atom, ...]

EMPTY: Word = ()


def tau(i: int) -> Atom:
    return Atom(TAU, i)


def gamma(line: Line) -> Atom:
    return Atom(GAMMA, position(line), tuple(line.rep))


def degree(word: Word) -> int:
    return sum(1 if a.kind == TAU else 2 for a in word)


def concat(w1: Word, w2: Word) -> Word:
    return w1 + w2


def word_str(word: Word) -> str:
    return ".".join(map(str, word)) if word else "1"


def word_key(word: Word):
    """Total order on words: degree first, then lexicographic on atoms."""
    return (degree(word), word)


class Element:
    """Finitely supported map Word -> F_p^*.

    Treated as immutable once built.  Arithmetic with elements of another
    context raises :class:`ContextMismatch`.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GroupCtx, terms=None):
        self.ctx = ctx
        p = ctx.p
        clean: dict[Word, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                c = (clean.get(w, 0) + c) % p
                if c:
                    clean[w] = c
                else:
                    clean.pop(w, None)
        self.terms = clean

    @classmethod
    def _raw(cls, ctx, terms):
        # terms already reduced mod p with zeros removed
        e = cls.__new__(cls)
        e.ctx = ctx
        e.terms = terms
        return e

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, {})

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, {EMPTY: 1})

    @classmethod
    def from_word(cls, ctx, word: Iterable[Atom], coeff: int = 1):
        return cls(ctx, {tuple(word): coeff})

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ContextMismatch(
                f"cannot combine elements over {self.ctx} and {other.ctx}"
            )
        return True

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        out = dict(self.terms)
        for w, c in other.terms.items():
            c = (out.get(w, 0) + c) % p
            if c:
                out[w] = c
            else:
                del out[w]
        return Element._raw(self.ctx, out)

    def __neg__(self):
        p = self.ctx.p
        return Element._raw(self.ctx, {w: p - c for w, c in self.terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> "Element":
        c %= self.ctx.p
        if not c:
            return Element.zero(self.ctx)
        p = self.ctx.p
        return Element._raw(self.ctx, {w: v * c % p for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self.items())

    def items(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def support(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def degrees(self) -> set[int]:
        return {degree(w) for w in self.terms}

    @property
    def degree(self):
        """The common degree of all terms; None for zero or mixed elements."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_components(self) -> dict[int, "Element"]:
        out: dict[int, dict] = {}
        for w, c in self.terms.items():
            out.setdefault(degree(w), {})[w] = c
        return {d: Element._raw(self.ctx, t) for d, t in sorted(out.items())}

    def __repr__(self):
        return f"Element(p={self.ctx.p}, r={self.ctx.r}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def mul_raw(e1: Element, e2: Element) -> Element:
    """Bilinear concatenation, no reduction."""
    e1._check(e2)
    p = e1.ctx.p
    out: dict[Word, int] = {}
    for w1, c1 in e1.terms.items():
        for w2, c2 in e2.terms.items():
            w = w1 + w2
            c = (out.get(w, 0) + c1 * c2) % p
            if c:
                out[w] = c
            else:
                out.pop(w, None)
    return Element._raw(e1.ctx, out)


def commutator(a: Element, b: Element) -> Element:
    return mul_raw(a, b) - mul_raw(b, a)


def tau_element(ctx: GroupCtx, i: int, coeff: int = 1) -> Element:
    return Element.from_word(ctx, (tau(i),), coeff)


def gamma_element(ctx: GroupCtx, line: Line, coeff: int = 1) -> Element:
    return Element.from_word(ctx, (gamma(line),), coeff)


def tau_phi(ctx: GroupCtx, phi: Homomorphism) -> Element:
    """t_phi expanded by linearity into sum c_i t_i."""
    return Element(ctx, {(tau(i + 1),): c for i, c in enumerate(phi.covector)})


def gamma_sum(ctx: GroupCtx, lines: Iterable[Line]) -> Element:
    return Element(ctx, [((gamma(x),), 1) for x in lines])


def kernel_sum(ctx: GroupCtx, phi: Homomorphism) -> Element:
    """Sum of g_X over lines X not contained in ker(phi)."""
    return gamma_sum(ctx, lines_not_in_kernel(ctx, phi))


# -- relation instances -----------------------------------------------------

_FAMILY_DEGREE = {
    "R1": 2,
    "R2": 2,
    "R3": 3,
    "R4": 3,
    "R5": 4,
    "L2": 2,
    "L2c": 3,
    "L3": 3,
    "L4": 4,
}


@dataclass
class RelationInstance:
    family: str
    params: dict = field(default_factory=dict)
    element: Element = None

    @property
    def expected_degree(self) -> int:
        return _FAMILY_DEGREE[self.family]

    def label(self) -> str:
        inner = ", ".join(f"{k}={_param_str(v)}" for k, v in self.params.items())
        return f"{self.family}({inner})"


def _param_str(v):
    if isinstance(v, Line):
        return str(v)
    if isinstance(v, tuple) and v and isinstance(v[0], tuple):
        return "<" + ",".join("[" + ",".join(map(str, b)) + "]" for b in v) + ">"
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def tau_square_rhs(ctx: GroupCtx, phi: Homomorphism) -> Element:
    """Value of t_phi^2: zero for p >= 5, minus the kernel sum for p = 3."""
    if ctx.p == 3:
        return -kernel_sum(ctx, phi)
    return Element.zero(ctx)


def anticommutator_rhs(ctx: GroupCtx, i: int, j: int) -> Element:
    """Value of t_i t_j + t_j t_i.

    Obtained by polarising t_phi^2 with t_{phi_i + phi_j} = t_i + t_j, so for
    p = 3 it is  -S(phi_i + phi_j) + S(phi_i) + S(phi_j)  where S is the
    kernel sum.
    """
    if ctx.p != 3:
        return Element.zero(ctx)
    both = ctx.homomorphism(
        [a + b for a, b in zip(ctx.phi(i).covector, ctx.phi(j).covector)]
    )
    return -kernel_sum(ctx, both) + kernel_sum(ctx, ctx.phi(i)) + kernel_sum(
        ctx, ctx.phi(j)
    )


def r_instances(ctx: GroupCtx) -> list[RelationInstance]:
    p, r = ctx.p, ctx.r
    out = []
    for i in range(1, r + 1):
        ti = tau_element(ctx, i)
        out.append(
            RelationInstance(
                "R1", {"i": i}, mul_raw(ti, ti) - tau_square_rhs(ctx, ctx.phi(i))
            )
        )
    for i in range(1, r + 1):
        for j in range(1, i):
            ti, tj = tau_element(ctx, i), tau_element(ctx, j)
            el = mul_raw(ti, tj) + mul_raw(tj, ti) - anticommutator_rhs(ctx, i, j)
            out.append(RelationInstance("R2", {"i": i, "j": j}, el))
    for i in range(1, r + 1):
        el = commutator(tau_element(ctx, i), kernel_sum(ctx, ctx.phi(i)))
        out.append(RelationInstance("R3", {"i": i}, el))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for x in ctx.lines:
                a, b = x.rep[j - 1], x.rep[i - 1]
                if not (a or b):
                    continue
                lhs = tau_element(ctx, i, a) - tau_element(ctx, j, b)
                el = commutator(lhs, gamma_element(ctx, x))
                out.append(RelationInstance("R4", {"i": i, "j": j, "x": x}, el))
    out.extend(_plane_instances(ctx, "R5"))
    return out


def _plane_instances(ctx, family):
    out = []
    for q in all_planes(ctx):
        s = gamma_sum(ctx, lines_of_plane(q, ctx.p))
        for x in lines_of_plane(q, ctx.p):
            el = commutator(gamma_element(ctx, x), s)
            out.append(RelationInstance(family, {"Q": q.basis, "X": x}, el))
    return out


def sample_homomorphisms(ctx: GroupCtx, which: str = "binary") -> list[Homomorphism]:
    """Nonzero homomorphisms with coefficients in {0,1} ("binary") or all."""
    rng = range(2) if which == "binary" else range(ctx.p)
    if which not in ("binary", "all"):
        raise ValidationError(f"unknown homomorphism sample {which!r}")
    return [
        Homomorphism(c)
        for c in itertools.product(rng, repeat=ctx.r)
        if any(c)
    ]


def l_instances(ctx: GroupCtx, which: str = "binary") -> list[RelationInstance]:
    out = []
    for phi in sample_homomorphisms(ctx, which):
        t = tau_phi(ctx, phi)
        coeffs = phi.covector
        out.append(
            RelationInstance(
                "L2", {"phi": coeffs}, mul_raw(t, t) - tau_square_rhs(ctx, phi)
            )
        )
        if ctx.p >= 5:
            out.append(
                RelationInstance(
                    "L2c", {"phi": coeffs}, commutator(t, kernel_sum(ctx, phi))
                )
            )
        for x in ctx.lines:
            if phi.apply(x.rep, ctx.p) == 0:
                out.append(
                    RelationInstance(
                        "L3",
                        {"phi": coeffs, "X": x},
                        commutator(t, gamma_element(ctx, x)),
                    )
                )
    out.extend(_plane_instances(ctx, "L4"))
    return out


def relation_instances(
    ctx: GroupCtx, include_l: bool = True, which: str = "binary"
) -> list[RelationInstance]:
    out = r_instances(ctx)
    if include_l:
        out.extend(l_instances(ctx, which))
    return out


# -- text and JSON forms ----------------------------------------------------


def _signed(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def format_element(e: Element) -> str:
    if not e.terms:
        return "0"
    p = e.ctx.p
    parts = []
    for k, (w, c) in enumerate(e.items()):
        s = _signed(c, p)
        neg = s < 0
        mag = -s if neg else s
        if not w:
            body = str(mag)
        elif mag == 1:
            body = word_str(w)
        else:
            body = f"{mag}*{word_str(w)}"
        if k == 0:
            parts.append(("- " if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


class _Parser:
    def __init__(self, ctx: GroupCtx, text: str):
        self.ctx = ctx
        self.text = text
        self.pos = 0

    def error(self, msg, expected=()):
        raise ParseError(msg, self.text, self.pos, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            found = self.peek()
            self.error(f"unexpected {found!r}" if found else "unexpected end", [repr(ch)])
        self.pos += 1

    def integer(self):
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            self.error("missing integer", ["INT"])
        self.pos += m.end()
        return int(m.group())

    def atom(self):
        c = self.peek()
        if c == "t":
            self.pos += 1
            start = self.pos
            i = self.integer()
            if not 1 <= i <= self.ctx.r:
                self.pos = start
                self.error(f"t index {i} out of range 1..{self.ctx.r}")
            return tau(i)
        if self.text.startswith("g[", self.pos):
            start = self.pos
            self.pos += 2
            coords = [self.integer()]
            while self.peek() == ",":
                self.pos += 1
                coords.append(self.integer())
            self.take("]")
            if len(coords) != self.ctx.r:
                self.pos = start
                self.error(f"line needs {self.ctx.r} coordinates, got {len(coords)}")
            try:
                return gamma(canonical_line(coords, self.ctx.p))
            except ZeroVector:
                self.pos = start
                self.error("zero vector is not a line")
        self.error(
            f"unexpected {c!r}" if c else "unexpected end", ["'t'", "'g['", "'1'"]
        )

    def word(self):
        if self.peek() == "1" and not self.text[self.pos + 1 : self.pos + 2].isdigit():
            self.pos += 1
            return EMPTY
        atoms = [self.atom()]
        while self.peek() == ".":
            self.pos += 1
            atoms.append(self.atom())
        return tuple(atoms)

    def term(self):
        c = self.peek()
        if c.isdigit():
            save = self.pos
            n = self.integer()
            if self.peek() == "*":
                self.pos += 1
                return self.word(), n
            # a bare integer is a scalar multiple of the unit
            if self.peek() == ".":
                self.pos = save
                self.error("a coefficient must be followed by '*'", ["'*'"])
            return EMPTY, n
        return self.word(), 1

    def element(self):
        terms = []
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        w, c = self.term()
        terms.append((w, sign * c))
        while self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            w, c = self.term()
            terms.append((w, sign * c))
        if self.peek():
            self.error(f"unexpected {self.peek()!r}", ["'+'", "'-'", "end"])
        return Element(self.ctx, terms)


def parse_element(ctx: GroupCtx, text: str) -> Element:
    if not text.strip():
        raise ParseError("empty input", text, 0, ["term"])
    return _Parser(ctx, text).element()


def parse_word(ctx: GroupCtx, text: str) -> Word:
    parser = _Parser(ctx, text)
    w = parser.word()
    if parser.peek():
        parser.error(f"unexpected {parser.peek()!r}", ["'.'", "end"])
    return w


def atom_from_str(ctx: GroupCtx, text: str) -> Atom:
    parser = _Parser(ctx, text)
    a = parser.atom()
    if parser.peek():
        parser.error(f"unexpected {parser.peek()!r}", ["end"])
    return a


def element_to_json(e: Element) -> dict:
    return {
        "p": e.ctx.p,
        "r": e.ctx.r,
        "terms": [
            {"coeff": c, "word": [str(a) for a in w]} for w, c in e.items()
        ],
    }


def element_from_json(data: dict) -> Element:
    from .group import GroupCtx

    ctx = GroupCtx(int(data["p"]), int(data["r"]))
    terms = []
    for t in data["terms"]:
        w = tuple(atom_from_str(ctx, s) for s in t["word"])
        terms.append((w, int(t["coeff"])))
    return Element(ctx, terms)
