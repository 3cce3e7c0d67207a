"""Enumeration and counting of admissible words.

An admissible word is a concatenation w_1 ... w_r where w_i only uses t_i
and the g_X of position i, and avoids t_i t_i and g_{Y_i} t_i.  Counting is
done with a four-state automaton per block, independently of the explicit
enumeration and of the rewriter.
"""

from __future__ import annotations

from functools import lru_cache

from .group import GroupCtx, lines_by_position
from .errors import ValidationError
from .words import Atom, Word, gamma, tau

START, AFTER_TAU, AFTER_Y, AFTER_OTHER = range(4)


def block_alphabet(ctx: GroupCtx, i: int) -> list[Atom]:
    return [tau(i)] + [gamma(x) for x in lines_by_position(ctx, i)]


def block_words(ctx: GroupCtx, i: int, d: int) -> list[Word]:
    """All accepted degree-d words of block i, in lexicographic order."""
    if not 1 <= i <= ctx.r:
        raise ValidationError(f"block index {i} out of range 1..{ctx.r}")
    if d < 0:
        return []
    alphabet = block_alphabet(ctx, i)
    t, y = alphabet[0], gamma(ctx.basis_line(i))
    out: list[Word] = []

    def extend(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else None
        for a in alphabet:
            if a.degree > remaining:
                continue
            if a == t and last in (t, y):
                continue
            prefix.append(a)
            extend(prefix, remaining - a.degree)
            prefix.pop()

    extend([], d)
    return out


def block_counts(ctx: GroupCtx, i: int, n: int) -> list[int]:
    """a_0..a_n for block i, by the automaton."""
    return list(_block_counts(ctx.p, i, n))


@lru_cache(maxsize=None)
def _block_counts(p: int, i: int, n: int) -> tuple[int, ...]:
    others = p ** (i - 1) - 1
    # table[d][state] = words of degree d ending in that state
    table = [[0, 0, 0, 0] for _ in range(n + 1)]
    table[0][START] = 1
    for d in range(1, n + 1):
        prev1 = table[d - 1]
        table[d][AFTER_TAU] = prev1[START] + prev1[AFTER_OTHER]
        if d >= 2:
            total2 = sum(table[d - 2])
            table[d][AFTER_Y] = total2
            table[d][AFTER_OTHER] = others * total2
    return tuple(sum(row) for row in table)


def compositions(n: int, parts: int):
    """Weak compositions of n into ``parts`` parts, lexicographically descending."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def admissible_basis(ctx: GroupCtx, n: int) -> list[Word]:
    if n < 0:
        return []
    out: list[Word] = []
    cache: dict[tuple[int, int], list[Word]] = {}
    for comp in compositions(n, ctx.r):
        blocks = []
        for i, d in enumerate(comp, start=1):
            key = (i, d)
            if key not in cache:
                cache[key] = block_words(ctx, i, d)
            blocks.append(cache[key])
        partial: list[Word] = [()]
        for ws in blocks:
            partial = [u + v for u in partial for v in ws]
            if not partial:
                break
        out.extend(partial)
    return out


def count_basis(ctx: GroupCtx, n: int) -> int:
    """|A_n| as the convolution of the per-block automaton counts."""
    if n < 0:
        return 0
    conv = [1] + [0] * n
    for i in range(1, ctx.r + 1):
        a = _block_counts(ctx.p, i, n)
        conv = [sum(conv[k] * a[m - k] for k in range(m + 1)) for m in range(n + 1)]
    return conv[n]


def all_words(ctx: GroupCtx, n: int) -> list[Word]:
    """Every word of degree n over the full alphabet (exponential)."""
    atoms = [tau(i) for i in range(1, ctx.r + 1)] + [gamma(x) for x in ctx.lines]
    by_deg: list[list[Word]] = [[()]]
    for d in range(1, n + 1):
        level = [(a,) + w for a in atoms if a.degree <= d for w in by_deg[d - a.degree]]
        by_deg.append(level)
    return by_deg[n]
