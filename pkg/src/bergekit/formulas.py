"""Closed-form Turán-type bounds for Berge paths and cycles, in exact integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor

EXACT = "exact-formula"
UPPER = "upper-bound"
UPPER_FLOORED = "upper-bound-floored"


@dataclass(frozen=True)
class BoundValue:
    """A bound evaluated at concrete parameters.

    ``hypothesis_ok`` only reports whether the cited theorem covers the
    parameters; the value is always computed.
    """

    name: str
    value: int
    exactness: str
    hypothesis_ok: bool
    raw: Fraction | None = None
    regime: str = ""
    note: str = ""

    def row(self, verbose: bool = False) -> str:
        cols = [self.name, str(self.value), self.exactness, "true" if self.hypothesis_ok else "false"]
        if verbose:
            cols.append(str(self.raw if self.raw is not None else self.value))
            cols.append(self.regime or "-")
            cols.append(self.note or "-")
        return "\t".join(cols)


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def core_size(k: int) -> int:
    """floor((k-1)/2), the size of the core set A of the extremal construction."""
    return (k - 1) // 2


def _extremal_value(n: int, k: int, r: int) -> int:
    a = core_size(k)
    even = binom(a, r - 2) if k % 2 == 0 else 0
    return binom(a, r - 1) * (n - a) + binom(a, r) + even


def threshold_N(k: int, r: int) -> int:
    """Vertex count beyond which the connected extremal number is determined."""
    a = core_size(k)
    even = binom(a, r - 2) if k % 2 == 0 else 0
    return binom(r * (k - 1), r) + binom(a, r - 1) * a - binom(a, r) - even + r * (k - 1)


def extremal_count(n: int, k: int, r: int) -> BoundValue:
    """Edge count of the extremal connected BP_k-free r-graph H_{n,k}."""
    ok = k >= 2 * r + 13 and n > threshold_N(k, r)
    return BoundValue(
        "extremal_count",
        _extremal_value(n, k, r),
        EXACT,
        ok,
        regime="connected",
        note="" if ok else "unproven: needs k >= 2r+13 and n > N_{k,r}",
    )


def f_star(n: int, k: int, r: int, a: int) -> int:
    return binom(k - a, r) + (n - k + a) * binom(a, r - 1)


def eg_path_bound(n: int, k: int) -> BoundValue:
    raw = Fraction((k - 1) * n, 2)
    return BoundValue("eg_path_bound", floor(raw), UPPER_FLOORED, n >= k >= 1, raw, "EG1")


def eg_cycle_bound(n: int, k: int) -> BoundValue:
    raw = Fraction((k - 1) * (n - 1), 2)
    return BoundValue("eg_cycle_bound", floor(raw), UPPER_FLOORED, n >= k >= 3, raw, "EG2")


def gkl_bound(n: int, k: int, r: int) -> BoundValue:
    """Non-connected BP_k-free bound: (k-1)n/(r+1) when r >= k, else (n/k)C(k,r).

    The k = r+1 case is covered by the same formula as k > r+1.
    """
    if r >= k:
        raw = Fraction((k - 1) * n, r + 1)
        regime = "GKL1"
        ok = k >= 3
    else:
        raw = Fraction(n * binom(k, r), k)
        regime = "GKL2" if k > r + 1 else "GKL2-davoodi"
        ok = r + 1 > 3
    if k < 3 or r < 2:
        regime, ok = "none", False
    return BoundValue("gkl_bound", floor(raw), UPPER_FLOORED, ok, raw, regime)


def gkl_equality_expected(n: int, k: int, r: int) -> bool:
    """Whether the GKL bound is attained: (r+1)|n or k|n depending on regime."""
    return n % (r + 1) == 0 if r >= k else n % k == 0


def fkl_cycle_bound(n: int, k: int, r: int) -> BoundValue:
    raw = Fraction((n - 1) * binom(k - 1, r), k - 2) if k != 2 else Fraction(0)
    return BoundValue("fkl_cycle_bound", floor(raw), UPPER_FLOORED, k >= r + 3 >= 6, raw, "t1")


def all_bounds(n: int, k: int, r: int, a: int | None = None) -> list[BoundValue]:
    if a is None:
        a = core_size(k)
    return [
        extremal_count(n, k, r),
        BoundValue("threshold_N", threshold_N(k, r), EXACT, True),
        BoundValue("f_star", f_star(n, k, r, a), UPPER, a == core_size(k) and n >= k >= 4 * r >= 12,
                   note=f"a={a}; connected, n >= n'_(k,r) not checked"),
        eg_path_bound(n, k),
        eg_cycle_bound(n, k),
        gkl_bound(n, k, r),
        fkl_cycle_bound(n, k, r),
    ]
