"""Exact safe number of K_m x K_n.

For m, n >= 3 the value is a minimum over two-part splits of the rows and the
columns; for m <= 2 and for m in {3, 4} there are closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, UnsupportedInputError


def ceil_half(x: int) -> int:
    """Mathematical ceiling of ``x / 2``, also for negative ``x``."""
    return -((-x) // 2)


def _check_int(**kw: int) -> None:
    for name, x in kw.items():
        if not isinstance(x, int) or isinstance(x, bool):
            raise InvalidInputError(f"{name} must be an integer, got {x!r}")


@dataclass(frozen=True)
class Partition2:
    """A split ``m = m1 + m2``, ``n = n1 + n2`` into positive parts."""

    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self):
        if min(self.m1, self.m2, self.n1, self.n2) < 1:
            raise InvalidInputError(f"all parts must be positive: {self}")

    @property
    def m(self) -> int:
        return self.m1 + self.m2

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def blocks(self) -> tuple[int, int]:
        """Sizes of the two diagonal blocks, ``m1*n1`` and ``m2*n2``."""
        return self.m1 * self.n1, self.m2 * self.n2

    @property
    def separator(self) -> int:
        """Cells outside both diagonal blocks, ``mn - m1*n1 - m2*n2``."""
        return self.m * self.n - sum(self.blocks)

    def swapped(self) -> Partition2:
        return Partition2(self.m2, self.m1, self.n2, self.n1)

    def nu(self) -> tuple[int, int]:
        """Per-block deficit ``ceil((block - separator) / 2)``; may be negative."""
        sep = self.separator
        b1, b2 = self.blocks
        return ceil_half(b1 - sep), ceil_half(b2 - sep)

    def objective(self) -> int:
        sep = self.separator
        return sep + max(ceil_half(max(self.blocks) - sep), 1)

    def to_json(self) -> list[list[int]]:
        return [[self.m1, self.m2], [self.n1, self.n2]]


@dataclass(frozen=True)
class AlphaResult:
    value: int
    argmin: Partition2
    nu1: int
    nu2: int
    clamp_active: bool

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "argmin": self.argmin.to_json(),
            "nu": [self.nu1, self.nu2],
            "clamp_active": self.clamp_active,
        }


def enumerate_partitions(m: int, n: int) -> list[Partition2]:
    """All of P2(m, n), ordered by ascending ``(m1, n1)``."""
    _check_int(m=m, n=n)
    if m < 2 or n < 2:
        raise InvalidInputError(f"P2({m},{n}) is empty; need m, n >= 2")
    return [Partition2(m1, m - m1, n1, n - n1) for m1 in range(1, m) for n1 in range(1, n)]


def alpha(m: int, n: int) -> AlphaResult:
    """Minimise the separator-plus-deficit objective over P2(m, n).

    Ties go to the first partition in enumeration order.
    """
    _check_int(m=m, n=n)
    if m < 3 or n < 3:
        raise InvalidInputError(f"alpha is defined for m, n >= 3, got ({m},{n})")
    # Same objective as Partition2.objective, inlined: this loop dominates sweeps.
    mn = m * n
    best_value = mn + 1
    best_m1 = best_n1 = 0
    for m1 in range(1, m):
        m2 = m - m1
        for n1 in range(1, n):
            b1 = m1 * n1
            b2 = m2 * (n - n1)
            sep = mn - b1 - b2
            deficit = -((sep - (b1 if b1 > b2 else b2)) // 2)
            v = sep + (deficit if deficit > 1 else 1)
            if v < best_value:
                best_value, best_m1, best_n1 = v, m1, n1
    best = Partition2(best_m1, m - best_m1, best_n1, n - best_n1)
    nu1, nu2 = best.nu()
    return AlphaResult(
        value=best_value,
        argmin=best,
        nu1=nu1,
        nu2=nu2,
        clamp_active=max(nu1, nu2) < 1,
    )


def closed_form(m: int, n: int) -> int:
    _check_int(m=m, n=n)
    if not 1 <= m <= 4 or n < m:
        raise UnsupportedInputError(f"no closed form for ({m},{n}); need 1 <= m <= 4 and n >= m")
    if m == 1:
        return ceil_half(n)
    if m == 2:
        return n
    if m == 3:
        return n + n // 3 + 1
    return n + 4 * (n // 5) + max(n % 5, 1)


def safe_number(m: int, n: int) -> int:
    """s(K_m x K_n), which equals the connected safe number."""
    _check_int(m=m, n=n)
    if m < 1 or n < 1:
        raise InvalidInputError(f"factor orders must be positive, got ({m},{n})")
    m, n = min(m, n), max(m, n)
    if m <= 2:
        return closed_form(m, n)
    return alpha(m, n).value


def check_lemma26(p: Partition2, m: int, n: int) -> bool:
    """At most one diagonal block is larger than the separator."""
    if (p.m, p.n) != (m, n):
        raise InvalidInputError(f"{p} is not a partition of ({m},{n})")
    sep = p.separator
    return sum(sep < b for b in p.blocks) <= 1
