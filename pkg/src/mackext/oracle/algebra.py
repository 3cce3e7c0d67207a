"""The Yoshida algebra: End_{kG} of the sum of all k[G/H], for G = (F_p)^r.

Objects are subgroups.  ``Hom(H, K)`` is the space of kG-equivariant maps
k[G/H] -> k[G/K], found by solving the equivariance equations; for
permutation modules these are equalities between matrix entries, so the
solution space is spanned by indicator matrices of the connected classes.
An element of ``Hom(H, K)`` is stored by its coordinates in that basis,
which are just the entries at one representative position per class.

Composition ``a . c`` of ``a in Hom(M, L)`` and ``c in Hom(Q, M)`` lands in
``Hom(Q, L)``; structure constants are cached per triple of objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import fp
from ..errors import InternalCheckFailed, NotNilpotent
from ..group import GroupCtx
from .subgroups import Subgroup, all_subgroups


class HomSpace:
    """Equivariant maps k[G/source] -> k[G/target] as (n_target x n_source) matrices."""

    def __init__(self, source: Subgroup, target: Subgroup):
        self.source = source
        self.target = target
        self.p = source.p
        n_t, n_s = target.index, source.index
        parent = list(range(n_t * n_s))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = source.r
        for k in range(r):
            g = [int(i == k) for i in range(r)]
            pt, ps = target.translate(g), source.translate(g)
            for a in range(n_t):
                for b in range(n_s):
                    u, v = find(a * n_s + b), find(pt[a] * n_s + ps[b])
                    if u != v:
                        parent[max(u, v)] = min(u, v)
        roots: dict[int, int] = {}
        label = np.empty(n_t * n_s, dtype=np.int64)
        reps = []
        for x in range(n_t * n_s):
            root = find(x)
            if root not in roots:
                roots[root] = len(roots)
                reps.append(x)
            label[x] = roots[root]
        self.dim = len(roots)
        self.rep_rows = np.array([x // n_s for x in reps], dtype=np.int64)
        self.rep_cols = np.array([x % n_s for x in reps], dtype=np.int64)
        self.basis = np.zeros((self.dim, n_t, n_s), dtype=np.int64)
        self.basis[label, np.arange(n_t * n_s) // n_s, np.arange(n_t * n_s) % n_s] = 1

    @property
    def shape(self):
        return (self.target.index, self.source.index)

    def expected_dim(self) -> int:
        """|G| / |source . target| from the double coset count."""
        return self.p ** (self.source.r - self.source.join(self.target).rank)

    def coords(self, matrix) -> np.ndarray:
        m = np.asarray(matrix)
        return m[..., self.rep_rows, self.rep_cols] % self.p

    def matrix(self, coords) -> np.ndarray:
        return np.tensordot(np.asarray(coords), self.basis, axes=1) % self.p

    def is_equivariant(self, matrix) -> bool:
        r = self.source.r
        m = np.asarray(matrix) % self.p
        for k in range(r):
            g = [int(i == k) for i in range(r)]
            pt, ps = self.target.translate(g), self.source.translate(g)
            moved = np.empty_like(m)
            moved[np.ix_(pt, ps)] = m
            if not np.array_equal(moved, m):
                return False
        return True

    def dense_solution_dim(self) -> int:
        """Nullity of the equivariance system solved as a dense F_p matrix."""
        n_t, n_s = self.shape
        r = self.source.r
        rows = []
        for k in range(r):
            g = [int(i == k) for i in range(r)]
            pt, ps = self.target.translate(g), self.source.translate(g)
            for a in range(n_t):
                for b in range(n_s):
                    eq = np.zeros(n_t * n_s, dtype=np.int64)
                    eq[a * n_s + b] += 1
                    eq[pt[a] * n_s + ps[b]] -= 1
                    rows.append(eq)
        return n_t * n_s - fp.rank(np.array(rows), self.p)


@dataclass
class SimpleModule:
    """One-dimensional simple supported at the object ``q``.

    ``support`` maps each object index to the dimension found from the
    Brauer quotient trace computation; ``character`` is the augmentation on
    the basis of End(k[G/Q]).
    """

    q: int
    support: dict[int, int]
    character: np.ndarray


class YoshidaAlgebra:
    def __init__(self, ctx: GroupCtx, override: bool = False):
        self.ctx = ctx
        self.p = ctx.p
        self.objects = all_subgroups(ctx, override=override)
        self.index = {h: k for k, h in enumerate(self.objects)}
        self._homs: dict[tuple[int, int], HomSpace] = {}
        self._tensors: dict[tuple[int, int, int], np.ndarray] = {}
        self._rad: dict[tuple[int, int], np.ndarray] = {}

    @property
    def trivial(self) -> int:
        return 0

    def __len__(self):
        return len(self.objects)

    def hom(self, source: int, target: int) -> HomSpace:
        key = (source, target)
        h = self._homs.get(key)
        if h is None:
            h = HomSpace(self.objects[source], self.objects[target])
            self._homs[key] = h
        return h

    def dim(self, source: int, target: int) -> int:
        return self.hom(source, target).dim

    @cached_property
    def total_dim(self) -> int:
        n = len(self)
        return sum(self.dim(i, j) for i in range(n) for j in range(n))

    def compose_tensor(self, l: int, m: int, q: int) -> np.ndarray:
        """T[a, c, o]: coordinate o of (basis a of Hom(m,l)) . (basis c of Hom(q,m))."""
        key = (l, m, q)
        t = self._tensors.get(key)
        if t is None:
            ha, hc, ho = self.hom(m, l), self.hom(q, m), self.hom(q, l)
            left = ha.basis[:, ho.rep_rows, :]  # (dA, dO, nM)
            right = hc.basis[:, :, ho.rep_cols]  # (dC, nM, dO)
            t = np.einsum("aoj,cjo->aco", left, right) % self.p
            self._tensors[key] = t
        return t

    def compose(self, l: int, m: int, q: int, a, c) -> np.ndarray:
        """Coordinates of a . c for coordinate vectors a (Hom(m,l)) and c (Hom(q,m))."""
        t = self.compose_tensor(l, m, q)
        return np.einsum("a,c,aco->o", np.asarray(a), np.asarray(c), t) % self.p

    def identity(self, q: int) -> np.ndarray:
        h = self.hom(q, q)
        return h.coords(np.eye(h.shape[0], dtype=np.int64))

    def character(self, q: int) -> np.ndarray:
        """Augmentation of End(k[G/Q]): the eigenvalue on the sum of all cosets."""
        h = self.hom(q, q)
        return h.basis[:, 0, :].sum(axis=1) % self.p

    def radical_block(self, source: int, target: int) -> np.ndarray:
        """Coordinates (as rows) of a basis of e_target rad e_source."""
        key = (source, target)
        b = self._rad.get(key)
        if b is None:
            d = self.dim(source, target)
            if source != target:
                b = np.eye(d, dtype=np.int64)
            else:
                b = fp.nullspace(self.character(source)[None, :], self.p)
            self._rad[key] = b
        return b

    @cached_property
    def radical_dim(self) -> int:
        n = len(self)
        return sum(len(self.radical_block(i, j)) for i in range(n) for j in range(n))

    def _product_blocks(self, current: dict) -> dict:
        """Blocks of rad . X for X given blockwise as coordinate rows."""
        n = len(self)
        out = {}
        for q in range(n):
            for l in range(n):
                acc = np.zeros((0, self.dim(q, l)), dtype=np.int64)
                for m in range(n):
                    c = current[(q, m)]
                    rad = self.radical_block(m, l)
                    if not len(c) or not len(rad):
                        continue
                    tb = np.einsum("ba,aco->bco", rad, self.compose_tensor(l, m, q))
                    rows = np.einsum("kc,bco->bko", c, tb).reshape(-1, tb.shape[2])
                    acc = fp.row_basis(np.vstack([acc, rows]), self.p)
                out[(q, l)] = acc
        return out

    def radical_powers(self) -> list[int]:
        """Dimensions of rad, rad^2, ... down to 0."""
        n = len(self)
        current = {(i, j): self.radical_block(i, j) for i in range(n) for j in range(n)}
        dims = [sum(len(b) for b in current.values())]
        while dims[-1]:
            if len(dims) > self.total_dim:
                raise NotNilpotent("radical is not nilpotent; the simple list is incomplete")
            current = self._product_blocks(current)
            dims.append(sum(len(b) for b in current.values()))
        return dims

    @cached_property
    def _radical_squared(self) -> dict:
        n = len(self)
        return self._product_blocks(
            {(i, j): self.radical_block(i, j) for i in range(n) for j in range(n)}
        )

    def arrow_block(self, source: int, target: int) -> np.ndarray:
        """Rows of e_target rad e_source spanning a complement of rad^2.

        rad = R0 + rad^2 implies rad = R0 . A, so rad . K = R0 . K for any
        submodule K; this keeps top computations small.
        """
        rad = self.radical_block(source, target)
        sq = self._radical_squared[(source, target)]
        if not len(rad) or not len(sq):
            return rad
        basis, piv = fp.rref(sq, self.p)
        return fp.row_basis(fp.reduce_against(rad, basis, piv, self.p), self.p)

    # -- simples -----------------------------------------------------------

    def brauer_trace_dim(self, h: int, q: int) -> int:
        """dim of the trace image of Hom_k(k[G/H][Q], k) under G/Q."""
        hsub, qsub = self.objects[h], self.objects[q]
        fixed = [
            c
            for c in range(hsub.index)
            if all(hsub.translate(v)[c] == c for v in qsub.basis)
        ]
        if not fixed:
            return 0
        pos = {c: k for k, c in enumerate(fixed)}
        norm = np.zeros((len(fixed), len(fixed)), dtype=np.int64)
        for g in qsub.cosets:
            perm = hsub.translate(g)
            for c in fixed:
                norm[pos[perm[c]], pos[c]] += 1
        return fp.rank(norm, self.p)

    def simple(self, q: int) -> SimpleModule:
        support = {h: self.brauer_trace_dim(h, q) for h in range(len(self))}
        expected = {h: int(h == q) for h in range(len(self))}
        if support != expected:
            raise InternalCheckFailed(
                f"simple at {self.objects[q]} has support {support}, expected only at itself"
            )
        return SimpleModule(q, support, self.character(q))
