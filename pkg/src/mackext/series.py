"""Exact expansion of the Poincare series

    1 / ((1 - t) * prod_{m=1}^{r-1} (1 - t - (p^m - 1) t^2))

and the dimension recurrence relating ranks r - 1 and r.

The recurrence coefficient p^(r-1) - 1 comes from counting complements of a
hyperplane H < G: a complement is a line not inside H, and there are
(p^r - p^(r-1)) / (p - 1) = p^(r-1) of them; one is the fixed Y_r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import GroupCtx


@dataclass(frozen=True)
class CoeffSeries:
    prefix: tuple[int, ...]

    def __getitem__(self, n):
        return self.prefix[n]

    def __len__(self):
        return len(self.prefix)

    def __iter__(self):
        return iter(self.prefix)


def inverse_quadratic(q: int, n: int) -> list[int]:
    """Coefficients of 1 / (1 - t - q t^2) up to t^n."""
    b = [0] * (n + 1)
    for k in range(n + 1):
        b[k] = 1 if k == 0 else b[k - 1] + (q * b[k - 2] if k >= 2 else 0)
    return b


def _convolve(a: list[int], b: list[int], n: int) -> list[int]:
    return [sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n + 1)]


def poincare_coeffs(ctx: GroupCtx, n: int) -> CoeffSeries:
    return CoeffSeries(tuple(poincare_list(ctx.p, ctx.r, n)))


def poincare_list(p: int, r: int, n: int) -> list[int]:
    if n < 0:
        return []
    c = [1] * (n + 1)  # 1 / (1 - t)
    for m in range(1, r):
        c = _convolve(c, inverse_quadratic(p**m - 1, n), n)
    return c


@dataclass
class RecurrenceReport:
    p: int
    r: int
    upto: int
    ok: bool
    first_failure: int | None = None

    def to_json(self):
        return {
            "check": "recurrence",
            "p": self.p,
            "r": self.r,
            "upto": self.upto,
            "ok": self.ok,
            "first_failure": self.first_failure,
        }


def recurrence_check(ctx: GroupCtx, n: int) -> RecurrenceReport:
    """c^(r)_k = c^(r-1)_k + c^(r)_{k-1} + (p^(r-1) - 1) c^(r)_{k-2} for 2 <= k <= n."""
    p, r = ctx.p, ctx.r
    if r < 2:
        raise ValueError("recurrence needs rank >= 2")
    cur = poincare_list(p, r, n)
    below = poincare_list(p, r - 1, n)
    q = p ** (r - 1) - 1
    for k in range(2, n + 1):
        if cur[k] != below[k] + cur[k - 1] + q * cur[k - 2]:
            return RecurrenceReport(p, r, n, False, k)
    return RecurrenceReport(p, r, n, True)
