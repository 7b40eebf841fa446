"""Lower and upper bounds on str(Q_n), exact over Python ints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bits import binomial

EXACT_SMALL = {1: 3, 2: 6, 3: 11, 4: 21, 5: 40}
RECURRENCE_BASE = {3: 11, 4: 21, 5: 40}
CLOSED_FORM_MIN_N = 14

# pi to 60 decimals; comparisons use the bracket [PI_LO, PI_HI]
_PI_DIGITS = 3141592653589793238462643383279502884197169399375105820974944
PI_LO = Fraction(_PI_DIGITS, 10**60)
PI_HI = Fraction(_PI_DIGITS + 1, 10**60)


def _ceil_half(a: int) -> int:
    return -(-a // 2)


def lower_bound(n: int) -> int:
    """Best known lower bound: exact values up to n = 5, then the larger formula."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in EXACT_SMALL:
        return EXACT_SMALL[n]
    candidates = [2**n + n]
    if 5 <= n <= 9:
        candidates.append(2**n + 4 * n - 12)
    if n >= 10:
        candidates.append(2**n + n * n // 4 + 4)
    return max(candidates)


def upper_bound_prior(n: int) -> int:
    if n < 3:
        raise ValueError("2^n + 2^(n-2) + 1 is stated for n >= 3")
    return 2**n + 2 ** (n - 2) + 1


def recurrence_step(n: int) -> int:
    """3 * 2^(n-2) + C(n-3, ceil((n-3)/2)) + C(n-2, ceil((n-2)/2))."""
    return 3 * 2 ** (n - 2) + binomial(n - 3, _ceil_half(n - 3)) + binomial(n - 2, _ceil_half(n - 2))


def upper_bound_recurrence(n: int) -> int:
    if n < 3:
        raise ValueError("the recurrence starts at n = 3")
    if n in RECURRENCE_BASE:
        return RECURRENCE_BASE[n]
    start = 4 if n % 2 == 0 else 5
    value = RECURRENCE_BASE[start]
    for m in range(start + 2, n + 1, 2):
        value += recurrence_step(m)
    return value


def upper_bound_closed(n: int) -> int:
    if n < CLOSED_FORM_MIN_N:
        raise ValueError(f"2^n + 2^(n-3) + 28 is stated for n >= {CLOSED_FORM_MIN_N}")
    return 2**n + 2 ** (n - 3) + 28


@dataclass(frozen=True)
class BoundsRow:
    n: int
    lower: int
    upper_prior: int
    upper_recurrence: int
    upper_closed: int | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "lower": self.lower,
            "upper_prior": self.upper_prior,
            "upper_recurrence": self.upper_recurrence,
            "upper_closed": self.upper_closed,
        }


def comparison_table(n_min: int, n_max: int) -> list[BoundsRow]:
    if n_min < 3:
        raise ValueError("bounds table starts at n = 3")
    if n_max < n_min:
        raise ValueError("empty range")
    return [
        BoundsRow(
            n,
            lower_bound(n),
            upper_bound_prior(n),
            upper_bound_recurrence(n),
            upper_bound_closed(n) if n >= CLOSED_FORM_MIN_N else None,
        )
        for n in range(n_min, n_max + 1)
    ]


class CentralBinomialCheck(NamedTuple):
    k: int
    holds_7: bool  # C(2k,k) < 4^k / sqrt(pi k)
    holds_8: bool  # C(2k,k) < 4^(k-1)
    ratio_7: float  # C(2k,k) * sqrt(pi k) / 4^k, informational only


def _below_pi_bound(c: int, k: int) -> bool:
    """Exact test of c < 4^k / sqrt(pi k), i.e. c^2 * pi * k < 16^k."""
    lhs = c * c * k
    rhs = 16**k
    if lhs * PI_HI < rhs:
        return True
    if lhs * PI_LO >= rhs:
        return False
    raise ArithmeticError(f"pi bracket too coarse at k={k}")


def central_binomial_checks(k_max: int) -> list[CentralBinomialCheck]:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    out = []
    for k in range(1, k_max + 1):
        c = binomial(2 * k, k)
        ratio = float(Fraction(c * c * k, 16**k) * PI_LO) ** 0.5
        out.append(CentralBinomialCheck(k, _below_pi_bound(c, k), c < 4 ** (k - 1), ratio))
    return out


def sharper_central_checks(k_max: int) -> list[tuple[int, bool, bool]]:
    """(k, C(2k,k) < 4^k / 8, C(2k,k) < 4^k / 16) for 1 <= k <= k_max."""
    return [(k, 8 * binomial(2 * k, k) < 4**k, 16 * binomial(2 * k, k) < 4**k) for k in range(1, k_max + 1)]


def alternating_sum(N: int, ell: int) -> int:
    return sum((-1) ** k * binomial(N, k) for k in range(ell + 1))
