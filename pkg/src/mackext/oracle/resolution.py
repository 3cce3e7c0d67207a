"""Minimal projective resolution of the simple S_1 over the Yoshida algebra.

Modules are submodules of free modules P = (+)_j A e_{Q_j}.  Because every
A-module splits by object, a submodule K is stored as one row basis per
object L of e_L K inside e_L P = (+)_j Hom(Q_j, L).

At each stage the top K / rad K is read off object by object; its
dimension at L is the multiplicity of A e_L in the projective cover.  With
all simples one-dimensional, dim Ext^n(S_1, S_Q) is the multiplicity of
A e_Q in P_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import fp
from ..errors import InternalCheckFailed
from ..group import GroupCtx
from .algebra import YoshidaAlgebra


class FreeModule:
    def __init__(self, alg: YoshidaAlgebra, summands: list[int]):
        self.alg = alg
        self.summands = list(summands)
        n = len(alg)
        self.offsets = []
        self.dims = []
        for l in range(n):
            offs, acc = [], 0
            for q in self.summands:
                offs.append(acc)
                acc += alg.dim(q, l)
            self.offsets.append(offs)
            self.dims.append(acc)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def block(self, l: int, j: int) -> slice:
        start = self.offsets[l][j]
        return slice(start, start + self.alg.dim(self.summands[j], l))


@dataclass
class Stage:
    """P_n together with the kernel K_n of P_n -> P_{n-1} (or -> S_1)."""

    free: FreeModule
    kernel: list[np.ndarray]
    multiplicities: dict[int, int] = field(default_factory=dict)

    @property
    def kernel_dim(self) -> int:
        return sum(len(b) for b in self.kernel)


def act(alg: YoshidaAlgebra, module: FreeModule, m: int, l: int, coeffs, vectors) -> np.ndarray:
    """Rows b . v for b in ``coeffs`` (Hom(m,l) coordinates), v in ``vectors`` (e_m P)."""
    p = alg.p
    nb, nv = len(coeffs), len(vectors)
    out = np.zeros((nb * nv, module.dims[l]), dtype=np.int64)
    if not nb or not nv:
        return out
    for j, q in enumerate(module.summands):
        dc = alg.dim(q, m)
        do = alg.dim(q, l)
        if not dc or not do:
            continue
        t = alg.compose_tensor(l, m, q)
        tb = np.einsum("ba,aco->bco", coeffs, t) % p
        v = vectors[:, module.block(m, j)]
        out[:, module.block(l, j)] = np.einsum("kc,bco->bko", v, tb).reshape(nb * nv, do)
    return out % p


def radical_of(
    alg: YoshidaAlgebra, module: FreeModule, sub: list[np.ndarray], chunk: int = 4096
) -> list[np.ndarray]:
    """rad(A) . K, object by object (computed as R0 . K with R0 the arrows)."""
    n = len(alg)
    p = alg.p
    out = []
    for l in range(n):
        acc = np.zeros((0, module.dims[l]), dtype=np.int64)
        for m in range(n):
            if not len(sub[m]):
                continue
            arrows = alg.arrow_block(m, l)
            if not len(arrows):
                continue
            step = max(1, chunk // len(arrows))
            for start in range(0, len(sub[m]), step):
                rows = act(alg, module, m, l, arrows, sub[m][start : start + step])
                acc = fp.row_basis(np.vstack([acc, rows]), p)
        out.append(acc)
    return out


def top_generators(alg, module, sub) -> dict[int, np.ndarray]:
    """Rows of e_L K spanning a complement of e_L rad K, for each L."""
    p = alg.p
    rad = radical_of(alg, module, sub)
    gens = {}
    for l in range(len(alg)):
        k = sub[l]
        if not len(k):
            continue
        if len(rad[l]):
            basis, piv = fp.rref(rad[l], p)
            rest = fp.reduce_against(k, basis, piv, p)
        else:
            rest = k
        g = fp.row_basis(rest, p)
        if len(g):
            gens[l] = g
    return gens


def cover(alg: YoshidaAlgebra, module: FreeModule, sub: list[np.ndarray]) -> Stage:
    """Projective cover of K = sub and the kernel of the covering map."""
    p = alg.p
    gens = top_generators(alg, module, sub)
    summands, vectors = [], []
    for l in sorted(gens):
        for row in gens[l]:
            summands.append(l)
            vectors.append(row)
    new = FreeModule(alg, summands)
    kernel = []
    for nobj in range(len(alg)):
        rows_total = new.dims[nobj]
        d = np.zeros((rows_total, module.dims[nobj]), dtype=np.int64)
        for jp, (q_new, g) in enumerate(zip(summands, vectors)):
            da = alg.dim(q_new, nobj)
            if not da:
                continue
            rows = new.block(nobj, jp)
            for j, q in enumerate(module.summands):
                if not alg.dim(q, nobj) or not alg.dim(q, q_new):
                    continue
                t = alg.compose_tensor(nobj, q_new, q)
                gj = g[module.block(q_new, j)]
                d[rows, module.block(nobj, j)] = np.einsum("c,aco->ao", gj, t) % p
        image_rank = fp.rank(d, p) if d.size else 0
        if image_rank != len(sub[nobj]):
            raise InternalCheckFailed(
                f"cover image has dimension {image_rank} at object {nobj}, "
                f"kernel has {len(sub[nobj])}"
            )
        if rows_total:
            kernel.append(fp.left_nullspace(d, p) if d.size else np.eye(rows_total, dtype=np.int64))
        else:
            kernel.append(np.zeros((0, 0), dtype=np.int64))
    mult = {l: len(g) for l, g in gens.items()}
    stage = Stage(new, kernel, mult)
    sub_dim = sum(len(b) for b in sub)
    if new.dim != sub_dim + stage.kernel_dim:
        raise InternalCheckFailed("rank-nullity failed in resolution stage")
    return stage


def projective(alg: YoshidaAlgebra, q: int) -> tuple[FreeModule, list[np.ndarray]]:
    """A e_Q as a free module, with its full coordinate space as submodule."""
    module = FreeModule(alg, [q])
    full = [np.eye(module.dims[l], dtype=np.int64) for l in range(len(alg))]
    return module, full


def resolve_simple(alg: YoshidaAlgebra, n_max: int, q: int = 0) -> list[Stage]:
    """Stages P_0..P_{n_max} of a minimal resolution of S_q."""
    module, full = projective(alg, q)
    first = Stage(module, radical_of(alg, module, full), {q: 1})
    stages = [first]
    for _ in range(n_max):
        prev = stages[-1]
        stages.append(cover(alg, prev.free, prev.kernel))
    return stages


def top_multiplicities(alg: YoshidaAlgebra, q: int) -> dict[int, int]:
    """dim e_L (A e_Q / rad A e_Q) for every object L."""
    module, full = projective(alg, q)
    gens = top_generators(alg, module, full)
    return {l: len(gens.get(l, ())) for l in range(len(alg))}


def ext_dims(ctx: GroupCtx, n_max: int, override: bool = False, algebra=None) -> list[int]:
    """dim Ext^n(S_1, S_1) for 0 <= n <= n_max."""
    alg = algebra or YoshidaAlgebra(ctx, override=override)
    return [s.multiplicities.get(alg.trivial, 0) for s in resolve_simple(alg, n_max)]
