"""Subgroups of (F_p)^r as row-reduced bases, and the coset spaces G/H."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from ..errors import SizeGuard
from ..group import GroupCtx, Vector

MAX_RANK = 3
MAX_ORDER = 125


def check_guard(ctx: GroupCtx, override: bool = False) -> None:
    if override:
        return
    if ctx.r > MAX_RANK or ctx.order > MAX_ORDER:
        raise SizeGuard(
            f"(p={ctx.p}, r={ctx.r}) exceeds the oracle size guard "
            f"(r <= {MAX_RANK}, p^r <= {MAX_ORDER}); pass override to force"
        )


@dataclass(frozen=True)
class Subgroup:
    """A subspace of F_p^r given by its reduced row echelon basis."""

    p: int
    r: int
    basis: tuple[Vector, ...]

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(k for k, x in enumerate(row) if x) for row in self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return self.p**self.rank

    def canon(self, v) -> Vector:
        """Canonical representative of the coset v + H (zero on pivot columns)."""
        p = self.p
        v = [x % p for x in v]
        for row, pc in zip(self.basis, self.pivots):
            f = v[pc]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.canon(v))

    @cached_property
    def cosets(self) -> tuple[Vector, ...]:
        free = [k for k in range(self.r) if k not in self.pivots]
        out = []
        for vals in itertools.product(range(self.p), repeat=len(free)):
            v = [0] * self.r
            for k, x in zip(free, vals):
                v[k] = x
            out.append(tuple(v))
        return tuple(out)

    @cached_property
    def coset_index(self) -> dict[Vector, int]:
        return {c: k for k, c in enumerate(self.cosets)}

    @property
    def index(self) -> int:
        return len(self.cosets)

    def translate(self, g) -> list[int]:
        """Permutation of G/H induced by adding g."""
        idx = self.coset_index
        return [idx[self.canon([a + b for a, b in zip(c, g)])] for c in self.cosets]

    def elements(self):
        for coeffs in itertools.product(range(self.p), repeat=self.rank):
            v = [0] * self.r
            for c, row in zip(coeffs, self.basis):
                v = [(a + c * b) % self.p for a, b in zip(v, row)]
            yield tuple(v)

    def join(self, other: "Subgroup") -> "Subgroup":
        return span(self.p, self.r, list(self.basis) + list(other.basis))

    def __le__(self, other: "Subgroup") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __str__(self):
        if not self.basis:
            return "1"
        return "<" + ",".join("[" + ",".join(map(str, b)) + "]" for b in self.basis) + ">"


def span(p: int, r: int, vectors) -> Subgroup:
    rows = [list(v) for v in vectors]
    out: list[list[int]] = []
    for col in range(r):
        piv = next((v for v in rows if v[col] % p), None)
        if piv is None:
            continue
        rows.remove(piv)
        s = pow(piv[col] % p, -1, p)
        piv = [x * s % p for x in piv]
        rows = [[(a - v[col] * b) % p for a, b in zip(v, piv)] for v in rows]
        out = [[(a - v[col] * b) % p for a, b in zip(v, piv)] for v in out]
        out.append(piv)
    out.sort(key=lambda v: next(k for k, x in enumerate(v) if x))
    return Subgroup(p, r, tuple(tuple(v) for v in out))


def all_subgroups(ctx: GroupCtx, override: bool = False) -> list[Subgroup]:
    """Every subspace once, ordered by rank and then by echelon basis."""
    check_guard(ctx, override)
    p, r = ctx.p, ctx.r
    out = []
    for k in range(r + 1):
        found = []
        for pivots in itertools.combinations(range(r), k):
            slots = [
                (row, col)
                for row, pc in enumerate(pivots)
                for col in range(pc + 1, r)
                if col not in pivots
            ]
            for vals in itertools.product(range(p), repeat=len(slots)):
                m = [[0] * r for _ in range(k)]
                for row, pc in enumerate(pivots):
                    m[row][pc] = 1
                for (row, col), x in zip(slots, vals):
                    m[row][col] = x
                found.append(Subgroup(p, r, tuple(tuple(v) for v in m)))
        out.extend(sorted(found, key=lambda s: s.basis))
    return out
