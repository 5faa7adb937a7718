"""Closed-form values for Sierpinski products of two cycles.

Single source of the expected values used by the search and the harness.
``H = C_{3k+p}`` throughout.
"""

from __future__ import annotations


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def split_cycle_order(m: int) -> tuple[int, int]:
    """``m = 3k + p`` with ``k >= 1`` and ``p in {0, 1, 2}``."""
    if m < 3:
        raise ValueError(f"cycle order must be >= 3, got {m}")
    return m // 3, m % 3


def lower_sierpinski_set(n: int, k: int, p: int) -> tuple[int, ...]:
    """Admissible values of gamma_S(C_n, C_{3k+p}) (one or two values)."""
    if p == 0:
        return (k * n,)
    if p == 1:
        return (k * n, k * n + 1)
    if p == 2:
        base = k * n + n // 2
        return (base, base + 1)
    raise ValueError(f"p must be 0, 1 or 2, got {p}")


def lower_sierpinski_forced(n: int, k: int, p: int) -> int | None:
    """The exact gamma_S(C_n, C_{3k+p}) when it is pinned down, else None."""
    values = lower_sierpinski_set(n, k, p)
    if len(values) == 1:
        return values[0]
    if n % 4 == 0:
        return values[0]
    return None


def upper_sierpinski(n: int, k: int, p: int) -> int:
    """Gamma_S(C_n, C_{3k+p})."""
    if p == 0:
        return k * n
    if p == 1:
        return k * n + ceil_div(n, 3)
    if p == 2:
        return (k + 1) * n
    raise ValueError(f"p must be 0, 1 or 2, got {p}")


def hk_upper(n: int, k: int) -> int:
    """Gamma_S(C_n, H) for every H in the class H_k."""
    return k * n + ceil_div(n, 3)


def elementary_bounds(nG: int, mG: int, gamma_H: int) -> tuple[int, int]:
    """``n(G) gamma(H) - m(G) <= gamma(G (x)_f H) <= n(G) gamma(H)``."""
    return nG * gamma_H - mG, nG * gamma_H


def claim2_size(n: int, k: int) -> int:
    return k * n + ceil_div(n, 3)


def pattern_3k1_size(n: int, k: int) -> int:
    return k * n + ceil_div(n, 4) - n // 4


def pattern_3k2_size(n: int, k: int) -> int:
    """Size of the mod-4 pattern set for C_{3k+2}; exceeds the lower element by one unless 4 | n."""
    return k * n + n // 2 + ceil_div(n, 4) - n // 4
