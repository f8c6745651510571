"""Powers of the position operator in the harmonic-oscillator eigenbasis.

Builds banded matrices of x^p by iterated multiplication of the tridiagonal
x matrix, and evaluates the tabulated closed forms for diagonal elements
<n|x^p|n> (even p) and for the second-order perturbation sums
sum_{k!=n} |<k|x^p|n>|^2 / ((k-n) omega) (odd p), so each route can verify
the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Even powers with a tabulated diagonal closed form.
DIAGONAL_POWERS = (2, 4, 6, 8, 10)

#: Odd powers with a tabulated second-order-sum closed form.
SECOND_ORDER_POWERS = (1, 3, 5, 7)


class UnsupportedPowerError(ValueError):
    """Requested power has no tabulated closed form; use the matrix route."""


@dataclass(frozen=True)
class XPowerMatrix:
    """Truncated-basis matrix of x^p.

    entries is real symmetric with the band |i-j| <= p and exact parity
    zeros (entries[i][j] == 0.0 whenever i+j+p is odd).  scale records the
    prefactor (2 m omega)^(-p/2) already folded into the entries.
    """

    power: int
    basis_size: int
    entries: np.ndarray
    scale: float

    def __post_init__(self) -> None:
        self.entries.setflags(write=False)

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries)


def x_power_matrix(p: int, basis_size: int, m: float = 1.0, omega: float = 1.0) -> XPowerMatrix:
    """Matrix of x^p on the lowest basis_size harmonic eigenstates.

    The product is taken in a working basis enlarged by p rows so that every
    retained entry is free of truncation error, then cut back to
    basis_size x basis_size.
    """
    if p < 1:
        raise ValueError(f"power must be >= 1, got {p}")
    if basis_size < p + 1:
        raise ValueError(f"basis_size must be >= p + 1 = {p + 1}, got {basis_size}")
    work = basis_size + p
    x = np.zeros((work, work))
    off = np.sqrt(np.arange(1, work) / (2.0 * m * omega))
    rows = np.arange(work - 1)
    x[rows, rows + 1] = off
    x[rows + 1, rows] = off
    acc = x
    for _ in range(p - 1):
        acc = acc @ x
    entries = acc[:basis_size, :basis_size]
    entries = 0.5 * (entries + entries.T)
    return XPowerMatrix(p, basis_size, entries, (2.0 * m * omega) ** (-p / 2.0))


def _diagonal_numerator(p: int, n: int) -> int:
    if p == 2:
        return 2 * n + 1
    if p == 4:
        return 3 * (2 * n * n + 2 * n + 1)
    if p == 6:
        return 5 * (2 * n + 1) * (2 * n * n + 2 * n + 3)
    if p == 8:
        return 35 * (2 * n**4 + 4 * n**3 + 10 * n * n + 8 * n + 3)
    if p == 10:
        return 63 * (2 * n + 1) * (2 * n**4 + 4 * n**3 + 18 * n * n + 16 * n + 15)
    raise UnsupportedPowerError(f"no diagonal closed form for p={p}")


def _second_order_numerator(p: int, n: int) -> int:
    if p == 1:
        return 1
    if p == 3:
        return 30 * n * n + 30 * n + 11
    if p == 5:
        return 630 * n**4 + 1260 * n**3 + 2030 * n * n + 1400 * n + 449
    if p == 7:
        return 3 * (
            4004 * n**6
            + 12012 * n**5
            + 42350 * n**4
            + 64680 * n**3
            + 81788 * n * n
            + 51450 * n
            + 14793
        )
    raise UnsupportedPowerError(f"no second-order closed form for p={p}")


def diagonal_closed_form(p: int, n: int, m: float = 1.0, omega: float = 1.0) -> float:
    """Closed form of <n|x^p|n> for p in {2, 4, 6, 8, 10}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _diagonal_numerator(p, n) / (2.0 * m * omega) ** (p // 2)


def second_order_sum_closed(p: int, n: int, m: float = 1.0, omega: float = 1.0) -> float:
    """Closed form of sum_{k!=n} |<k|x^p|n>|^2 / ((k-n) omega) for p in {1, 3, 5, 7}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _second_order_numerator(p, n) / ((2.0 * m * omega) ** p * omega)


def second_order_sum_numeric(
    p: int, n: int, m: float = 1.0, omega: float = 1.0, basis_size: int | None = None
) -> float:
    """Brute-force second-order sum over the banded column of x^p.

    Only |k - n| <= p contributes, so any basis_size >= n + p + 1 returns the
    converged value exactly.
    """
    if p < 1 or p % 2 == 0:
        raise ValueError(f"second-order sums are defined for odd p >= 1, got {p}")
    if basis_size is None:
        basis_size = n + p + 1
    if basis_size < n + p + 1:
        raise ValueError(f"basis_size must be >= n + p + 1 = {n + p + 1}, got {basis_size}")
    column = x_power_matrix(p, basis_size, m, omega).entries[:, n]
    k = np.arange(basis_size)
    mask = k != n
    return float(np.sum(column[mask] ** 2 / ((k[mask] - n) * omega)))


def perturbation_correction(
    kind: str,
    p: int,
    coupling: float,
    n: int,
    m: float = 1.0,
    omega: float = 1.0,
) -> float:
    """Leading level shift of level n from a coupling * x^p perturbation.

    kind "even_order_1" is the first-order shift coupling * <n|x^p|n> (even p,
    always positive for coupling > 0); kind "odd_order_2" is the second-order
    shift -coupling^2 * sum_{k!=n} |<k|x^p|n>|^2 / ((k-n) omega) (odd p,
    always negative for coupling != 0).  Tabulated closed forms are used when
    available, the banded-matrix route otherwise.
    """
    if coupling < 0.0:
        raise ValueError(f"coupling must be >= 0, got {coupling}")
    if kind == "even_order_1":
        if p % 2 != 0 or p < 2:
            raise ValueError(f"even_order_1 needs even p >= 2, got {p}")
        try:
            value = diagonal_closed_form(p, n, m, omega)
        except UnsupportedPowerError:
            value = float(x_power_matrix(p, n + p + 1, m, omega).entries[n, n])
        return coupling * value
    if kind == "odd_order_2":
        if p % 2 != 1:
            raise ValueError(f"odd_order_2 needs odd p >= 1, got {p}")
        try:
            total = second_order_sum_closed(p, n, m, omega)
        except UnsupportedPowerError:
            total = second_order_sum_numeric(p, n, m, omega)
        return -(coupling**2) * total
    raise ValueError(f"unknown correction kind {kind!r}")
