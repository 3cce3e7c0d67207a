"""Reduction of elements to admissible normal form.

A word is admissible when no two consecutive atoms form one of the forbidden
patterns

    S1  t_i t_j        j <= i
    S2  t_i g_X        pos X < i
    S3  g_{Y_i} t_i
    S4  g_X g_Y        pos Y < pos X
    S5  g_X t_i        i < pos X

Each pattern has a replacement derived from the defining relations, so every
rewrite is an identity in the quotient algebra.  Admissible words form a
basis, hence the normal form does not depend on where rules are applied; the
``leftmost``/``rightmost``/``random`` strategies exist so this can be checked.

Normal forms are memoised per word.  Termination is guarded by a fuel budget
and by cycle detection on the reduction tree rather than by a proven order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple, Optional

from .errors import FuelExhausted, ValidationError
from .group import GroupCtx, canonical_line, lines_not_in_kernel
from .words import (
    GAMMA,
    TAU,
    Atom,
    Element,
    Word,
    anticommutator_rhs,
    degree,
    gamma,
    mul_raw,
    relation_instances,
    tau,
    word_str,
)

DEFAULT_FUEL = 10**6
STRATEGIES = ("leftmost", "rightmost", "random")

Fragment = list[tuple[Word, int]]


class RewriteOutcome(NamedTuple):
    rule: str
    site: int
    replacement: Element


def classify(a: Atom, b: Atom) -> Optional[str]:
    """Forbidden-pattern tag of the consecutive pair ``a b``, or None."""
    if a.kind == TAU:
        if b.kind == TAU:
            return "S1" if b.pos <= a.pos else None
        return "S2" if b.pos < a.pos else None
    if b.kind == TAU:
        if a.pos == b.pos and _is_basis_rep(a.rep, a.pos):
            return "S3"
        return "S5" if b.pos < a.pos else None
    return "S4" if b.pos < a.pos else None


def _is_basis_rep(rep, pos):
    return rep[pos - 1] == 1 and not any(rep[: pos - 1])


def violation_sites(word: Word) -> list[int]:
    return [k for k in range(len(word) - 1) if classify(word[k], word[k + 1])]


def is_admissible(word: Word) -> bool:
    return all(classify(word[k], word[k + 1]) is None for k in range(len(word) - 1))


def is_pre_admissible(word: Word) -> bool:
    """True when the word splits as w_1 ... w_r with w_i of type i."""
    return all(word[k].pos <= word[k + 1].pos for k in range(len(word) - 1))


class Rewriter:
    """Rule table and normal-form caches for one group context."""

    def __init__(self, ctx: GroupCtx):
        self.ctx = ctx
        self._rules: dict[tuple[Atom, Atom], tuple[str, Fragment]] = {}
        self._memo: dict[str, dict[Word, dict[Word, int]]] = {
            "leftmost": {},
            "rightmost": {},
        }
        ctx_lines = {i: lines_not_in_kernel(ctx, ctx.phi(i)) for i in range(1, ctx.r + 1)}
        self._kernel_lines = ctx_lines

    # -- rules -------------------------------------------------------------

    def rule(self, a: Atom, b: Atom) -> Optional[tuple[str, Fragment]]:
        key = (a, b)
        hit = self._rules.get(key)
        if hit is None:
            tag = classify(a, b)
            if tag is None:
                return None
            hit = (tag, self._build(tag, a, b))
            self._rules[key] = hit
        return hit

    def _build(self, tag: str, a: Atom, b: Atom) -> Fragment:
        ctx = self.ctx
        p = ctx.p
        if tag == "S1":
            i, j = a.pos, b.pos
            if i == j:
                if p != 3:
                    return []
                return [((gamma(x),), p - 1) for x in self._kernel_lines[i]]
            frag = [((tau(j), tau(i)), p - 1)]
            frag.extend(anticommutator_rhs(ctx, i, j).terms.items())
            return frag
        if tag == "S2":
            return [((b, a), 1)]
        if tag == "S3":
            i = b.pos
            frag = [((b, gamma(x)), 1) for x in self._kernel_lines[i]]
            frag.extend(
                ((gamma(x), b), p - 1)
                for x in self._kernel_lines[i]
                if gamma(x) != a
            )
            return frag
        if tag == "S4":
            x, y = a.rep, b.rep
            frag = [((b, a), 1)]
            for c in range(1, p):
                xc = gamma(canonical_line([u + c * v for u, v in zip(x, y)], p))
                frag.append(((xc, a), 1))
                frag.append(((a, xc), p - 1))
            return frag
        if tag == "S5":
            low, m = b.pos, a.pos
            ratio = a.rep[low - 1] * pow(a.rep[m - 1], -1, p) % p
            frag = [((b, a), 1)]
            if ratio:
                tm = tau(m)
                frag.append(((a, tm), ratio))
                frag.append(((tm, a), p - ratio))
            return frag
        raise AssertionError(tag)

    # -- single steps ------------------------------------------------------

    def replace_at(self, word: Word, site: int) -> tuple[str, dict[Word, int]]:
        hit = self.rule(word[site], word[site + 1])
        if hit is None:
            raise ValidationError(f"no rule applies at site {site} of {word_str(word)}")
        tag, frag = hit
        head, tail = word[:site], word[site + 2 :]
        out: dict[Word, int] = {}
        p = self.ctx.p
        for piece, c in frag:
            w = head + piece + tail
            v = (out.get(w, 0) + c) % p
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return tag, out

    def rewrite_step(self, word: Word, strategy: str = "leftmost", rng=None):
        sites = violation_sites(word)
        if not sites:
            return None
        site = _pick(sites, strategy, rng)
        tag, out = self.replace_at(word, site)
        return RewriteOutcome(tag, site, Element(self.ctx, out))

    # -- normal forms ------------------------------------------------------

    def normal_form(
        self,
        e: Element,
        fuel: int = DEFAULT_FUEL,
        strategy: str = "leftmost",
        rng: Optional[random.Random] = None,
        trace: Optional[Callable] = None,
        memo: Optional[dict] = None,
    ) -> Element:
        if fuel <= 0:
            raise ValidationError("fuel must be positive")
        if strategy not in STRATEGIES:
            raise ValidationError(f"unknown strategy {strategy!r}")
        if memo is None:
            if strategy == "random" or trace is not None:
                memo = {}
            else:
                memo = self._memo[strategy]
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        p = self.ctx.p
        acc: dict[Word, int] = {}
        budget = [fuel]
        for w, c in e.terms.items():
            try:
                nf = self._nf_word(w, memo, strategy, rng, trace, budget)
            except FuelExhausted as exc:
                exc.partial = Element(self.ctx, acc)
                exc.steps = fuel - budget[0]
                raise
            for v, d in nf.items():
                s = (acc.get(v, 0) + c * d) % p
                if s:
                    acc[v] = s
                else:
                    acc.pop(v, None)
        return Element._raw(self.ctx, acc)

    def _nf_word(self, word, memo, strategy, rng, trace, budget):
        hit = memo.get(word)
        if hit is not None:
            return hit
        p = self.ctx.p
        pending: dict[Word, dict[Word, int]] = {}
        active: set[Word] = set()
        stack = [word]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            repl = pending.get(x)
            if repl is None:
                sites = violation_sites(x)
                if not sites:
                    memo[x] = {x: 1}
                    stack.pop()
                    continue
                budget[0] -= 1
                if budget[0] < 0:
                    raise FuelExhausted(
                        f"step budget exhausted while reducing {word_str(word)}"
                    )
                site = _pick(sites, strategy, rng)
                tag, repl = self.replace_at(x, site)
                if trace is not None:
                    trace(tag, site, x, len(repl))
                pending[x] = repl
            missing = [y for y in repl if y not in memo]
            if missing:
                for y in missing:
                    if y in active or y == x:
                        raise FuelExhausted(
                            f"rewrite cycle through {word_str(y)} while reducing "
                            f"{word_str(word)}"
                        )
                active.add(x)
                stack.extend(missing)
                continue
            acc: dict[Word, int] = {}
            for y, c in repl.items():
                for v, d in memo[y].items():
                    s = (acc.get(v, 0) + c * d) % p
                    if s:
                        acc[v] = s
                    else:
                        acc.pop(v, None)
            memo[x] = acc
            active.discard(x)
            del pending[x]
            stack.pop()
        return memo[word]

    def clear_cache(self):
        for m in self._memo.values():
            m.clear()


def _pick(sites, strategy, rng):
    if strategy == "leftmost":
        return sites[0]
    if strategy == "rightmost":
        return sites[-1]
    return rng.choice(sites)


@lru_cache(maxsize=None)
def get_rewriter(ctx: GroupCtx) -> Rewriter:
    return Rewriter(ctx)


def rewrite_step(ctx: GroupCtx, word: Word):
    """Leftmost rewrite of a single word; None when it is already admissible."""
    return get_rewriter(ctx).rewrite_step(tuple(word))


def normal_form(e: Element, fuel: int = DEFAULT_FUEL, **kwargs) -> Element:
    """Admissible normal form, reduced one homogeneous component at a time."""
    return get_rewriter(e.ctx).normal_form(e, fuel=fuel, **kwargs)


def multiply(e1: Element, e2: Element, fuel: int = DEFAULT_FUEL) -> Element:
    return normal_form(mul_raw(e1, e2), fuel=fuel)


# -- checks ------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    ok: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, **info):
        self.ok = False
        self.failures.append(info)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            **self.details,
        }


def check_relations(
    ctx: GroupCtx, include_l: bool = True, which: str = "binary", fuel: int = DEFAULT_FUEL
) -> CheckReport:
    report = CheckReport("relations")
    counts: dict[str, int] = {}
    for inst in relation_instances(ctx, include_l=include_l, which=which):
        report.checked += 1
        counts[inst.family] = counts.get(inst.family, 0) + 1
        el = inst.element
        if el and el.degree != inst.expected_degree:
            report.fail(instance=inst.label(), reason="wrong degree", element=str(el))
            continue
        try:
            nf = normal_form(el, fuel=fuel)
        except FuelExhausted as exc:
            report.fail(instance=inst.label(), reason=str(exc))
            continue
        if nf:
            report.fail(instance=inst.label(), reason="nonzero normal form", residue=str(nf))
    report.details["families"] = counts
    return report


def random_word(ctx: GroupCtx, rng: random.Random, max_degree: int) -> Word:
    """Uniformly chosen atoms until a uniformly chosen degree 1..max_degree."""
    atoms_all = [tau(i) for i in range(1, ctx.r + 1)] + [gamma(x) for x in ctx.lines]
    taus = atoms_all[: ctx.r]
    target = rng.randint(1, max_degree)
    word: list[Atom] = []
    d = 0
    while d < target:
        a = rng.choice(taus if target - d == 1 else atoms_all)
        word.append(a)
        d += a.degree
    return tuple(word)


def check_confluence(
    ctx: GroupCtx,
    sample_count: int = 100,
    max_degree: int = 6,
    seed: int = 0,
    fuel: int = DEFAULT_FUEL,
    words=None,
) -> CheckReport:
    """Reduce sampled words under all three strategies and compare.

    Also verifies that each result has admissible support, keeps the degree,
    and is a fixpoint of another reduction.
    """
    rng = random.Random(seed)
    if words is None:
        words = [random_word(ctx, rng, max_degree) for _ in range(sample_count)]
    rw = get_rewriter(ctx)
    random_memo: dict = {}
    strategy_rng = random.Random(seed + 1)
    report = CheckReport("confluence")
    for w in words:
        w = tuple(w)
        report.checked += 1
        e = Element.from_word(ctx, w)
        try:
            results = {
                "leftmost": rw.normal_form(e, fuel=fuel, strategy="leftmost"),
                "rightmost": rw.normal_form(e, fuel=fuel, strategy="rightmost"),
                "random": rw.normal_form(
                    e, fuel=fuel, strategy="random", rng=strategy_rng, memo=random_memo
                ),
            }
        except FuelExhausted as exc:
            report.fail(word=word_str(w), reason=str(exc))
            continue
        left = results["leftmost"]
        if any(v != left for v in results.values()):
            report.fail(
                word=word_str(w),
                reason="strategies disagree",
                results={k: str(v) for k, v in results.items()},
            )
            continue
        if not all(is_admissible(v) for v in left.terms):
            report.fail(word=word_str(w), reason="inadmissible support")
        elif left and left.degrees() != {degree(w)}:
            report.fail(word=word_str(w), reason="degree changed")
        elif rw.normal_form(left, fuel=fuel) != left:
            report.fail(word=word_str(w), reason="not idempotent")
    return report
