"""Exhaustive ground truth: every permutiple on a fixed digit multiset.

Nothing here uses carries or conjugacy; each distinct arrangement ``X`` of the
multiset is divided by ``n`` and the quotient's digits are compared against
the multiset.  This is what the class machinery is checked against.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .digitnum import DigitTuple, Perm, from_integer, to_integer
from .theorems import PermutipleWitness, verify


@dataclass(frozen=True)
class OracleHit:
    product_arrangement: DigitTuple
    multiplicand_arrangement: DigitTuple
    sigmas: tuple[Perm, ...]


def _as_counter(digits) -> Counter:
    if isinstance(digits, Mapping):
        counts = Counter({int(k): int(v) for k, v in digits.items()})
    else:
        counts = Counter(int(d) for d in digits)
    if any(v < 1 for v in counts.values()):
        raise ValueError("multiplicities must be positive")
    return counts


def arrangements(values: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of ``values`` in lexicographic order (no repeats).

    Standard next-permutation successor, started from the sorted sequence.
    """
    seq = sorted(values)
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def sigmas_between(product: DigitTuple, multiplicand: DigitTuple) -> list[Perm]:
    """All ``s`` with ``product[s(j)] == multiplicand[j]`` for every ``j``."""
    if Counter(product.digits) != Counter(multiplicand.digits):
        return []
    where = {}
    for i, v in enumerate(product.digits):
        where.setdefault(v, []).append(i)
    targets = {}
    for j, v in enumerate(multiplicand.digits):
        targets.setdefault(v, []).append(j)
    values = sorted(where)
    out = []
    for choice in itertools.product(*(itertools.permutations(where[v]) for v in values)):
        image = [0] * len(product)
        for v, srcs in zip(values, choice):
            for j, i in zip(targets[v], srcs):
                image[j] = i
        out.append(Perm(tuple(image)))
    out.sort()
    return out


def _scan(prefix: tuple[int, ...], rest: list[int], n: int, b: int,
          allow_leading_zero: bool, counts: Counter) -> list[OracleHit]:
    hits = []
    width = len(prefix) + len(rest)
    for tail in arrangements(rest):
        msf = prefix + tail
        if not allow_leading_zero and width > 1 and msf[0] == 0:
            continue
        x = DigitTuple.from_msf(msf, b)
        value = to_integer(x)
        if value % n:
            continue
        y = from_integer(value // n, b, width)
        if Counter(y.digits) != counts:
            continue
        hits.append(OracleHit(x, y, tuple(sigmas_between(x, y))))
    return hits


def _scan_args(args):
    return _scan(*args)


def enumerate_all(digits, n: int, b: int, allow_leading_zero: bool = True,
                  parallel: int | None = None) -> list[OracleHit]:
    """Every arrangement ``X`` of ``digits`` with ``X == n * (a rearrangement of X)``.

    ``digits`` is a mapping value -> multiplicity or an iterable of digit
    values.  Hits are sorted by the value of ``X``.  ``parallel`` > 1 shards
    the scan by leading digit across processes.
    """
    if not 1 < n < b:
        raise ValueError(f"multiplier must satisfy 1 < n < b, got n={n}, b={b}")
    counts = _as_counter(digits)
    if not counts:
        raise ValueError("empty digit multiset")
    bad = [d for d in counts if not 0 <= d < b]
    if bad:
        raise ValueError(f"digits {sorted(bad)} are not base-{b} digits")
    values = sorted(counts.elements())

    if not parallel or parallel <= 1 or len(values) < 2:
        hits = _scan((), values, n, b, allow_leading_zero, counts)
    else:
        jobs = []
        for lead in sorted(counts):
            rest = list(values)
            rest.remove(lead)
            jobs.append(((lead,), rest, n, b, allow_leading_zero, counts))
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            hits = [h for chunk in pool.map(_scan_args, jobs) for h in chunk]
    hits.sort(key=lambda h: to_integer(h.product_arrangement))
    return hits


def pair_to_witnesses(hit: OracleHit, n: int) -> list[PermutipleWitness]:
    return [verify(hit.product_arrangement, n, s) for s in hit.sigmas]
