"""Digit tuples in an arbitrary radix and permutations of their positions.

Digits are stored least significant first: ``digits[0]`` is the units digit.
The text form follows the usual most-significant-first display,
``(d_k,...,d_0)_b``, so parsing and printing reverse the order.

Permutations are stored in one-line form, ``image[j] = p(j)``.  Applying a
permutation ``p`` to a digit tuple ``t`` gives the tuple whose ``j``-th digit
is ``t[p(j)]``; composition is ordinary function composition, so
``apply_perm(apply_perm(t, p), q) == apply_perm(t, compose(p, q))``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence


class SizeMismatch(ValueError):
    pass


class ValueOverflow(ValueError):
    pass


class ParseError(ValueError):
    """Malformed text input.  ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        self.text = text
        self.column = column
        super().__init__(f"{message} (line 1, column {column}): {text!r}")


@dataclass(frozen=True)
class DigitTuple:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if self.base < 3:
            raise ValueError(f"base must be at least 3, got {self.base}")
        if not self.digits:
            raise ValueError("a digit tuple needs at least one digit")
        for j, d in enumerate(self.digits):
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} at index {j} is not a base-{self.base} digit")

    @classmethod
    def from_msf(cls, digits: Iterable[int], base: int) -> DigitTuple:
        """Build from most-significant-first digits, the usual written order."""
        return cls(base, tuple(reversed(tuple(digits))))

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, j):
        return self.digits[j]

    def __iter__(self):
        return iter(self.digits)

    @property
    def msf(self) -> tuple[int, ...]:
        return tuple(reversed(self.digits))

    @property
    def value(self) -> int:
        return to_integer(self)

    def multiset(self) -> Counter:
        return Counter(self.digits)

    def sort_key(self):
        # equal-length tuples: comparing msf digits is comparing values
        return self.msf

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.msf) + f")_{self.base}"


def to_integer(t: DigitTuple) -> int:
    value = 0
    for d in reversed(t.digits):
        value = value * t.base + d
    return value


def from_integer(value: int, base: int, width: int) -> DigitTuple:
    if value < 0:
        raise ValueError("only natural numbers have digit tuples")
    if width < 1:
        raise ValueError("width must be positive")
    if value >= base**width:
        raise ValueOverflow(f"{value} needs more than {width} base-{base} digits")
    digits = []
    for _ in range(width):
        value, d = divmod(value, base)
        digits.append(d)
    return DigitTuple(base, tuple(digits))


@dataclass(frozen=True, order=True)
class Perm:
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(i) for i in self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"{list(self.image)} is not a permutation of 0..{len(self.image) - 1}")

    @classmethod
    def identity(cls, size: int) -> Perm:
        return cls(tuple(range(size)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], size: int) -> Perm:
        """Product of the given cycles, rightmost applied first."""
        result = cls.identity(size)
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"cycle {tuple(cyc)} repeats an entry")
            image = list(range(size))
            for i, a in enumerate(cyc):
                if not 0 <= a < size:
                    raise ValueError(f"cycle entry {a} outside 0..{size - 1}")
                image[a] = cyc[(i + 1) % len(cyc)]
            result = compose(result, cls(tuple(image)))
        return result

    def __len__(self):
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __pow__(self, m: int) -> Perm:
        return power(self, m)

    @property
    def size(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.image))

    def inverse(self) -> Perm:
        return inverse(self)

    def order(self) -> int:
        return order(self)

    def conjugate(self, by: Perm) -> Perm:
        return conjugate(self, by)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.image[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> list[int]:
        return sorted(len(c) for c in self.cycles(include_fixed=True))

    def cycle_notation(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def oneline(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"

    def __str__(self):
        return self.cycle_notation()


def _check_sizes(*perms: Perm):
    sizes = {p.size for p in perms}
    if len(sizes) > 1:
        raise SizeMismatch(f"permutation sizes differ: {sorted(sizes)}")


def compose(p: Perm, q: Perm) -> Perm:
    """``compose(p, q)(j) == p(q(j))``."""
    _check_sizes(p, q)
    return Perm(tuple(p.image[i] for i in q.image))


def inverse(p: Perm) -> Perm:
    inv = [0] * p.size
    for j, i in enumerate(p.image):
        inv[i] = j
    return Perm(tuple(inv))


def order(p: Perm) -> int:
    return lcm(*p.cycle_type()) if p.size else 1


def power(p: Perm, m: int) -> Perm:
    if m < 0:
        p, m = inverse(p), -m
    result = Perm.identity(p.size)
    base = p
    while m:
        if m & 1:
            result = compose(result, base)
        base = compose(base, base)
        m >>= 1
    return result


def conjugate(p: Perm, by: Perm) -> Perm:
    """``by o p o by^-1``."""
    _check_sizes(p, by)
    return compose(compose(by, p), inverse(by))


def cycle_shift(size: int) -> Perm:
    """The full cycle ``(0,1,...,size-1)``: ``j -> j+1 mod size``."""
    if size < 1:
        raise ValueError("size must be positive")
    return Perm(tuple((j + 1) % size for j in range(size)))


def reversal(size: int) -> Perm:
    return Perm(tuple(range(size - 1, -1, -1)))


def apply_perm(t: DigitTuple, p: Perm) -> DigitTuple:
    if p.size != len(t):
        raise SizeMismatch(f"permutation of size {p.size} applied to {len(t)} digits")
    return DigitTuple(t.base, tuple(t.digits[i] for i in p.image))


# -- text formats ------------------------------------------------------------

_TUPLE_RE = re.compile(r"\s*\(\s*([0-9,\s]*)\)\s*_\s*([0-9]+)\s*$")


def parse_tuple(text: str) -> DigitTuple:
    """Parse ``(d_k,...,d_0)_b``."""
    m = _TUPLE_RE.match(text)
    if not m:
        col = _first_bad_column(text)
        raise ParseError("expected a digit tuple like (8,7,9,1,2)_10", text, col)
    body, base = m.group(1), int(m.group(2))
    parts = [s.strip() for s in body.split(",")]
    if not body.strip() or any(not s for s in parts):
        raise ParseError("empty digit in tuple", text, m.start(1) + 1)
    try:
        return DigitTuple.from_msf((int(s) for s in parts), base)
    except ValueError as exc:
        raise ParseError(str(exc), text, m.start(2) + 1) from None


def _first_bad_column(text: str) -> int:
    stripped = text.lstrip()
    offset = len(text) - len(stripped)
    if not stripped.startswith("("):
        return offset + 1
    close = text.find(")")
    if close < 0:
        return len(text) + 1
    rest = text[close + 1:].lstrip()
    if not rest.startswith("_"):
        return close + 2
    for i, ch in enumerate(text[: close], start=1):
        if not (ch.isdigit() or ch in "(, \t"):
            return i
    return close + 2


_PERM_TOKEN = re.compile(
    r"""\s*(?:
        (?P<cycle>\((?P<cbody>[0-9,\s]*)\))
      | (?P<oneline>\[(?P<obody>[0-9,\s]*)\])
      | (?P<name>rho|psi|id|e|identity)(?:\s*\^\s*(?P<exp>-?[0-9]+))?
    )""",
    re.VERBOSE,
)


def parse_perm(text: str, size: int) -> Perm:
    """Parse a permutation on ``{0,...,size-1}``.

    Accepts a product of factors, composed as functions (rightmost applied
    first): cycles ``(0,4)(1,3)``, one-line ``[4,3,2,1,0]``, and the named
    shorthands ``rho``, ``psi``, ``psi^j`` and ``id``.  ``()`` and the empty
    string are the identity.
    """
    result = Perm.identity(size)
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _PERM_TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError("expected a cycle, [one-line] form, rho or psi^j", text, col)
        try:
            factor = _perm_factor(m, size)
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start() + 1 + len(m.group(0)) - len(m.group(0).lstrip())) from None
        result = compose(result, factor)
        pos = m.end()
    return result


def _perm_factor(m: re.Match, size: int) -> Perm:
    if m.group("cycle") is not None:
        body = m.group("cbody").strip()
        if not body:
            return Perm.identity(size)
        return Perm.from_cycles([[int(s) for s in body.split(",")]], size)
    if m.group("oneline") is not None:
        image = tuple(int(s) for s in m.group("obody").split(","))
        if len(image) != size:
            raise SizeMismatch(f"one-line permutation has {len(image)} entries, expected {size}")
        return Perm(image)
    name = m.group("name")
    exp = int(m.group("exp")) if m.group("exp") else 1
    if name == "rho":
        base = reversal(size)
    elif name == "psi":
        base = cycle_shift(size)
    else:
        base = Perm.identity(size)
    return power(base, exp)
