"""Carries of single-digit multiplication and the digit/carry relations.

For an ``(n, b, sigma)``-permutiple ``d`` with carries ``c`` the relation

    b * c[psi(j)] - c[j] == n * d[sigma(j)] - d[j]        for every j

holds, where ``psi`` is the cyclic shift ``j -> j+1 mod (k+1)`` (the carry
out of the top digit is zero, so it wraps onto ``c[0] == 0``).  Conversely,
any digit tuple and base-``n`` carry tuple with ``c[0] == 0`` satisfying the
relation is a permutiple with exactly those carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .digitnum import (
    DigitTuple,
    Perm,
    SizeMismatch,
    apply_perm,
    power,
)


class NotPermutiple(ValueError):
    """``verify`` failed.  ``position`` is the first mismatching digit index,
    or ``None`` when the product overflowed into an extra digit."""

    def __init__(self, message: str, position: int | None = None, overflow: bool = False):
        self.position = position
        self.overflow = overflow
        super().__init__(message)


class InvalidRelation(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


class NonIntegral(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


@dataclass(frozen=True)
class CarryVector:
    multiplier: int
    carries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "carries", tuple(int(c) for c in self.carries))
        if not self.carries:
            raise ValueError("empty carry vector")
        if self.carries[0] != 0:
            raise ValueError(f"c_0 must be 0, got {self.carries[0]}")
        for j, c in enumerate(self.carries):
            if not 0 <= c <= self.multiplier - 1:
                raise ValueError(f"carry c_{j}={c} outside 0..{self.multiplier - 1}")

    def __len__(self):
        return len(self.carries)

    def __getitem__(self, j):
        return self.carries[j]

    def __iter__(self):
        return iter(self.carries)

    @property
    def msf(self) -> tuple[int, ...]:
        return tuple(reversed(self.carries))

    def __str__(self):
        return "(" + ",".join(map(str, self.msf)) + ")"


@dataclass(frozen=True)
class PermutipleWitness:
    n: int
    b: int
    sigma: Perm
    digits: DigitTuple
    carries: CarryVector

    @property
    def multiplicand(self) -> DigitTuple:
        return apply_perm(self.digits, self.sigma)

    def __str__(self):
        return f"{self.digits} = {self.n}*{self.multiplicand}"


@dataclass(frozen=True)
class MultiplyResult:
    product: DigitTuple
    carries: CarryVector
    final_carry: int

    @property
    def overflow(self) -> bool:
        return self.final_carry != 0


def _check_multiplier(n: int, b: int):
    if not 1 < n < b:
        raise ValueError(f"multiplier must satisfy 1 < n < b, got n={n}, b={b}")


def _carry_tuple(carries) -> tuple[int, ...]:
    if isinstance(carries, CarryVector):
        return carries.carries
    return tuple(int(c) for c in carries)


def multiply_with_carries(q: DigitTuple, n: int) -> MultiplyResult:
    """Schoolbook multiplication of ``q`` by the single digit ``n``.

    The product is truncated to ``len(q)`` digits; check ``overflow``.
    """
    _check_multiplier(n, q.base)
    b = q.base
    carries = [0]
    product = []
    c = 0
    for qj in q.digits:
        c, p = divmod(n * qj + c, b)
        product.append(p)
        carries.append(c)
    return MultiplyResult(
        DigitTuple(b, tuple(product)),
        CarryVector(n, tuple(carries[:-1])),
        carries[-1],
    )


def verify(digits: DigitTuple, n: int, sigma: Perm) -> PermutipleWitness:
    """Check that ``digits == n * apply_perm(digits, sigma)``."""
    if sigma.size != len(digits):
        raise SizeMismatch(f"sigma has size {sigma.size}, tuple has {len(digits)} digits")
    res = multiply_with_carries(apply_perm(digits, sigma), n)
    if res.overflow:
        raise NotPermutiple(
            f"{n}*{apply_perm(digits, sigma)} needs {len(digits) + 1} digits", overflow=True
        )
    for j, (got, want) in enumerate(zip(res.product.digits, digits.digits)):
        if got != want:
            raise NotPermutiple(
                f"product digit {j} is {got}, expected {want}", position=j
            )
    return PermutipleWitness(n, digits.base, sigma, digits, res.carries)


def is_permutiple(digits: DigitTuple, n: int, sigma: Perm) -> bool:
    try:
        verify(digits, n, sigma)
    except NotPermutiple:
        return False
    return True


def fundamental_residuals(digits: DigitTuple, sigma: Perm, carries, n: int) -> list[int]:
    """``b*c[psi(j)] - c[j] - (n*d[sigma(j)] - d[j])`` for each ``j``."""
    c = _carry_tuple(carries)
    size = len(digits)
    if sigma.size != size or len(c) != size:
        raise SizeMismatch("digits, sigma and carries must have the same length")
    b = digits.base
    d = digits.digits
    s = sigma.image
    return [
        b * c[(j + 1) % size] - c[j] - (n * d[s[j]] - d[j]) for j in range(size)
    ]


def check_fundamental(digits: DigitTuple, sigma: Perm, carries, n: int) -> bool:
    return not any(fundamental_residuals(digits, sigma, carries, n))


def witness_from_relation(digits: DigitTuple, sigma: Perm, carries, n: int) -> PermutipleWitness:
    """Build a witness from the digit/carry relation alone, without multiplying."""
    _check_multiplier(n, digits.base)
    c = _carry_tuple(carries)
    if not c or c[0] != 0:
        raise ValueError("c_0 must be 0")
    if any(not 0 <= x < n for x in c):
        raise ValueError(f"carries must be base-{n} digits")
    for j, r in enumerate(fundamental_residuals(digits, sigma, c, n)):
        if r:
            raise InvalidRelation(f"relation fails at j={j} (residual {r})", position=j)
    w = PermutipleWitness(n, digits.base, sigma, digits, CarryVector(n, c))
    if __debug__:
        assert verify(digits, n, sigma).carries == w.carries
    return w


def digits_from_carries(carries, sigma: Perm, n: int, b: int) -> DigitTuple:
    """Recover the digits from the carries in closed form.

    ``d_j = sum_l (b*c[psi(s^l(j))] - c[s^l(j)]) * n^l / (n^m - 1)`` where
    ``s = sigma`` and ``m`` is its order.
    """
    _check_multiplier(n, b)
    c = _carry_tuple(carries)
    size = len(c)
    if sigma.size != size:
        raise SizeMismatch("sigma and carries must have the same length")
    m = sigma.order()
    denom = n**m - 1
    powers = [power(sigma, ell).image for ell in range(m)]
    digits = []
    for j in range(size):
        total = 0
        for ell, sl in enumerate(powers):
            i = sl[j]
            total += (b * c[(i + 1) % size] - c[i]) * n**ell
        dj, rem = divmod(total, denom)
        if rem:
            raise NonIntegral(f"d_{j} = {total}/{denom} is not an integer", position=j)
        if not 0 <= dj < b:
            raise NonIntegral(f"d_{j} = {dj} is not a base-{b} digit", position=j)
        digits.append(dj)
    return DigitTuple(b, tuple(digits))


def carries_from_digits(digits: DigitTuple, sigma: Perm, n: int) -> CarryVector:
    """Recover the carries from the digits in closed form.

    ``c_j = sum_l (n*d[s(j+l)] - d[j+l]) * b^l / (b^(k+1) - 1)``, indices mod
    ``k+1``.
    """
    b = digits.base
    _check_multiplier(n, b)
    size = len(digits)
    if sigma.size != size:
        raise SizeMismatch("sigma and digits must have the same length")
    d = digits.digits
    s = sigma.image
    denom = b**size - 1
    carries = []
    for j in range(size):
        total = 0
        for ell in range(size):
            i = (j + ell) % size
            total += (n * d[s[i]] - d[i]) * b**ell
        cj, rem = divmod(total, denom)
        if rem:
            raise NonIntegral(f"c_{j} = {total}/{denom} is not an integer", position=j)
        if not 0 <= cj < n:
            raise NonIntegral(f"c_{j} = {cj} is not a base-{n} digit", position=j)
        carries.append(cj)
    if carries[0] != 0:
        raise NonIntegral(f"c_0 = {carries[0]} is nonzero", position=0)
    return CarryVector(n, tuple(carries))


def first_digit_admissible(d0: int, n: int, b: int) -> bool:
    return d0 % gcd(n, b) == 0

