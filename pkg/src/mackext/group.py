"""Arithmetic in G = (F_p)^r: lines, planes, positions, coordinate homomorphisms.

Lines (subgroups of order p) are stored by a canonical representative whose
last nonzero coordinate is 1.  With the standard coordinate flag
H_i = span(e_1, ..., e_i), the position of a line is then simply the index of
that last nonzero coordinate.

All orderings are by ``(position, rep)`` so output is stable across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import EqualLines, UnsupportedPrime, ValidationError, ZeroVector

Vector = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Line(NamedTuple):
    rep: Vector

    @property
    def position(self) -> int:
        return position(self)

    def __str__(self):
        return "[" + ",".join(map(str, self.rep)) + "]"


class Plane(NamedTuple):
    basis: tuple[Vector, Vector]


class Homomorphism(NamedTuple):
    """A covector G -> F_p."""

    covector: Vector

    def apply(self, v: Sequence[int], p: int) -> int:
        return sum(c * x for c, x in zip(self.covector, v)) % p

    def is_zero(self) -> bool:
        return not any(self.covector)


@dataclass(frozen=True)
class GroupCtx:
    """The group (C_p)^r for an odd prime p."""

    p: int
    r: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.r, int):
            raise ValidationError("p and r must be integers")
        if self.r < 1:
            raise ValidationError(f"rank must be >= 1, got {self.r}")
        if not _is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")
        if self.p == 2:
            raise UnsupportedPrime("p = 2 is not supported; p must be an odd prime")

    @property
    def order(self) -> int:
        return self.p**self.r

    @property
    def num_lines(self) -> int:
        return (self.p**self.r - 1) // (self.p - 1)

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)

    def vector(self, coords: Sequence[int]) -> Vector:
        if len(coords) != self.r:
            raise ValidationError(
                f"expected {self.r} coordinates, got {len(coords)}"
            )
        return tuple(int(c) % self.p for c in coords)

    def line(self, coords: Sequence[int]) -> Line:
        """Parse-and-canonicalize; non-canonical input is scaled, not rejected."""
        return canonical_line(self.vector(coords), self.p)

    def phi(self, i: int) -> Homomorphism:
        """The i-th coordinate homomorphism (1-based)."""
        if not 1 <= i <= self.r:
            raise ValidationError(f"index {i} out of range 1..{self.r}")
        return Homomorphism(tuple(int(k == i - 1) for k in range(self.r)))

    def homomorphism(self, coeffs: Sequence[int]) -> Homomorphism:
        return Homomorphism(self.vector(coeffs))

    @cached_property
    def lines(self) -> tuple[Line, ...]:
        return tuple(
            ln for i in range(1, self.r + 1) for ln in lines_by_position(self, i)
        )

    @cached_property
    def line_index(self) -> dict[Line, int]:
        return {ln: k for k, ln in enumerate(self.lines)}

    def basis_line(self, i: int) -> Line:
        """Y_i, the line of the i-th standard basis vector."""
        return Line(tuple(int(k == i - 1) for k in range(self.r)))

    def elements(self):
        return itertools.product(range(self.p), repeat=self.r)


def make_context(p: int, r: int) -> GroupCtx:
    return GroupCtx(p, r)


def canonical_line(v: Sequence[int], p: int) -> Line:
    v = tuple(int(x) % p for x in v)
    for k in range(len(v) - 1, -1, -1):
        if v[k]:
            s = pow(v[k], -1, p)
            return Line(tuple(x * s % p for x in v))
    raise ZeroVector("the zero vector does not span a line")


def position(line: Line) -> int:
    rep = line.rep
    for k in range(len(rep) - 1, -1, -1):
        if rep[k]:
            return k + 1
    raise ZeroVector("line with zero representative")


def lines_by_position(ctx: GroupCtx, i: int) -> list[Line]:
    if not 1 <= i <= ctx.r:
        raise ValidationError(f"position {i} out of range 1..{ctx.r}")
    tail = (1,) + (0,) * (ctx.r - i)
    return [
        Line(head + tail)
        for head in itertools.product(range(ctx.p), repeat=i - 1)
    ]


def lines_not_in_kernel(ctx: GroupCtx, phi: Homomorphism) -> list[Line]:
    """Lines X with X not contained in ker(phi); empty when phi = 0."""
    return [ln for ln in ctx.lines if phi.apply(ln.rep, ctx.p)]


def _rref_rows(rows: list[list[int]], p: int) -> list[Vector]:
    rows = [list(r) for r in rows]
    out = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        piv = next((r for r in rows if r[col] % p), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        s = pow(piv[col], -1, p)
        piv = [x * s % p for x in piv]
        rows = [[(a - r[col] * b) % p for a, b in zip(r, piv)] for r in rows]
        out = [[(a - r[col] * b) % p for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        col += 1
    return [tuple(r) for r in out if any(r)]


def plane_span(x: Line, y: Line, p: int) -> Plane:
    if x == y:
        raise EqualLines(f"lines {x} and {y} coincide")
    basis = _rref_rows([list(x.rep), list(y.rep)], p)
    if len(basis) != 2:
        raise EqualLines(f"lines {x} and {y} coincide")
    return Plane((basis[0], basis[1]))


def lines_of_plane(q: Plane, p: int) -> list[Line]:
    b1, b2 = q.basis
    found = set()
    for a, b in itertools.product(range(p), repeat=2):
        if a == b == 0:
            continue
        found.add(canonical_line([a * u + b * v for u, v in zip(b1, b2)], p))
    return sorted(found, key=lambda ln: (position(ln), ln.rep))


def all_planes(ctx: GroupCtx) -> list[Plane]:
    """Every 2-dimensional subspace, in RREF, sorted."""
    seen = set()
    lines = ctx.lines
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            seen.add(plane_span(lines[a], lines[b], ctx.p))
    return sorted(seen)
