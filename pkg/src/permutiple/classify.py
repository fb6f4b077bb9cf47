"""New permutiples from old: rearrangements of a known permutiple's digits.

A rearrangement ``X = apply_perm(d, pi)`` that is an ``(n, b, tau)``-permutiple
is filed under its base permutation ``beta = pi o tau o pi^-1``.  Two
rearrangements with the same ``beta`` are conjugate and their carries are a
permutation of each other.  When ``n`` divides ``b`` every rearrangement has
carries ``c o pi``, which makes the list of candidate ``beta`` exhaustive and
the whole enumeration a matter of constraint propagation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import oracle
from .digitnum import (
    DigitTuple,
    Perm,
    SizeMismatch,
    apply_perm,
    compose,
    conjugate,
    cycle_shift,
    inverse,
    power,
)
from .theorems import (
    CarryVector,
    PermutipleWitness,
    first_digit_admissible,
    verify,
    witness_from_relation,
)


class PreconditionViolated(ValueError):
    pass


class NotApplicable(ValueError):
    pass


class CrossCheckFailure(AssertionError):
    """The derivations disagreed with the oracle; always a bug."""


class Completeness(str, enum.Enum):
    N_DIVIDES_B = "NDividesB"
    ORACLE_VERIFIED = "OracleVerified"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ClassMember:
    pi: Perm
    tau: Perm
    witness: PermutipleWitness

    @property
    def arrangement(self) -> DigitTuple:
        return self.witness.digits


@dataclass
class ConjugacyClass:
    beta: Perm
    members: list[ClassMember] = field(default_factory=list)
    # set when beta names the same arrangements as an earlier class
    alias_of: Perm | None = None
    # "candidate": beta came from the congruence filter; "oracle": found only
    # by exhaustive search
    origin: str = "candidate"

    @property
    def reference(self) -> ClassMember | None:
        if not self.members:
            return None
        return min(self.members, key=lambda m: m.arrangement.sort_key())

    def arrangements(self) -> set[DigitTuple]:
        return {m.arrangement for m in self.members}

    def __len__(self):
        return len(self.members)


@dataclass
class EnumerationReport:
    witness: PermutipleWitness
    candidates: list[Perm]
    classes: list[ConjugacyClass]
    completeness: Completeness

    def arrangements(self) -> set[DigitTuple]:
        out = set()
        for cls in self.classes:
            out |= cls.arrangements()
        return out

    def nonempty(self) -> list[ConjugacyClass]:
        return [c for c in self.classes if c.members]

    @property
    def total(self) -> int:
        return sum(len(c) for c in self.classes)


def _carries(w: PermutipleWitness) -> tuple[int, ...]:
    return w.carries.carries


def derive_by_mu_pi(w: PermutipleWitness, pi: Perm, mu: Perm) -> PermutipleWitness:
    """Rearrange by ``pi`` and permute the carries by ``mu``.

    Succeeds iff ``b*c[psi(pi(j))] - c[pi(j)] == b*c[mu(psi(j))] - c[mu(j)]``
    for every ``j``; the result is an ``(n, b, pi^-1 sigma pi)``-permutiple
    with carries ``c o mu``.
    """
    size = len(w.digits)
    if pi.size != size or mu.size != size:
        raise SizeMismatch("pi and mu must match the digit count")
    c = _carries(w)
    if c[mu(0)] != 0:
        raise PreconditionViolated(f"c[mu(0)] = c_{mu(0)} = {c[mu(0)]} is not zero")
    b = w.b
    for j in range(size):
        lhs = b * c[(pi(j) + 1) % size] - c[pi(j)]
        rhs = b * c[mu((j + 1) % size)] - c[mu(j)]
        if lhs != rhs:
            raise NotApplicable(f"carry identity fails at j={j}: {lhs} != {rhs}")
    return witness_from_relation(
        apply_perm(w.digits, pi),
        conjugate(w.sigma, inverse(pi)),
        tuple(c[mu(j)] for j in range(size)),
        w.n,
    )


def derive_zero_carry_shift(w: PermutipleWitness, j: int) -> PermutipleWitness:
    """Rotate the digits so that position ``j`` (which has carry 0) becomes
    the units digit."""
    if w.carries[j] != 0:
        raise PreconditionViolated(f"c_{j} = {w.carries[j]} is not zero")
    shift = power(cycle_shift(len(w.digits)), j)
    return derive_by_mu_pi(w, shift, shift)


def _full_cycles(allowed: list[set[int]]):
    """Every single ``size``-cycle ``g`` with ``g(j) in allowed[j]``."""
    size = len(allowed)
    image = [None] * size
    visited = [False] * size
    visited[0] = True

    def walk(cur, depth):
        if depth == size - 1:
            if 0 in allowed[cur]:
                image[cur] = 0
                yield Perm(tuple(image))
            return
        for nxt in sorted(allowed[cur]):
            if not visited[nxt]:
                visited[nxt] = True
                image[cur] = nxt
                yield from walk(nxt, depth + 1)
                visited[nxt] = False

    if size == 1:
        if 0 in allowed[0]:
            yield Perm((0,))
        return
    yield from walk(0, 0)


def class_members_from_reference(w: PermutipleWitness) -> list[tuple[Perm, PermutipleWitness]]:
    """All ``pi`` whose rearrangement of ``w`` is conjugate to ``w``.

    Such ``pi`` are exactly those with ``c[pi(0)] == 0`` and
    ``c[g(j)] == c[j+1]`` where ``g = pi psi pi^-1`` is the cycle
    ``(pi(0), pi(1), ..., pi(k))``.  Sorted by ``pi``.
    """
    c = _carries(w)
    size = len(c)
    allowed = [{i for i in range(size) if c[i] == c[(j + 1) % size]} for j in range(size)]
    starts = [s for s in range(size) if c[s] == 0]
    pis = set()
    for g in _full_cycles(allowed):
        for s in starts:
            image = [s]
            for _ in range(size - 1):
                image.append(g(image[-1]))
            pis.add(Perm(tuple(image)))
    out = []
    for pi in sorted(pis):
        tau = conjugate(w.sigma, inverse(pi))
        digits = apply_perm(w.digits, pi)
        carries = CarryVector(w.n, tuple(c[pi(j)] for j in range(size)))
        member = verify(digits, w.n, tau)
        if member.carries != carries:
            raise CrossCheckFailure(f"carries of {digits} are {member.carries}, expected {carries}")
        out.append((pi, member))
    return out


def candidate_base_permutations(w: PermutipleWitness) -> list[Perm]:
    """Every ``beta`` with ``n*d[beta(j)] == n*d[sigma(j)] (mod b)``, in
    lexicographic order."""
    n, b = w.n, w.b
    d = w.digits.digits
    size = len(d)
    residue = [n * x % b for x in d]
    options = [
        [i for i in range(size) if residue[i] == residue[w.sigma(j)]] for j in range(size)
    ]
    out = []
    image = [0] * size
    used = [False] * size

    def fill(j):
        if j == size:
            out.append(Perm(tuple(image)))
            return
        for i in options[j]:
            if not used[i]:
                used[i] = True
                image[j] = i
                fill(j + 1)
                used[i] = False

    fill(0)
    return out


def search_class(w: PermutipleWitness, beta: Perm, *, carries_follow: bool | None = None):
    """Yield every member ``(pi, tau, witness)`` of the class with base ``beta``,
    in increasing order of ``pi``.

    Position ``j`` of the rearrangement contributes
    ``b*h[j+1] = n*d[beta(pi(j))] - d[pi(j)] + h[j]`` for its carries ``h``,
    so the next carry is forced by the choice of ``pi(j)``.  With
    ``carries_follow`` (the default when ``n`` divides ``b``) the carries are
    also pinned to ``h[j] == c[pi(j)]``, which restricts ``pi(j+1)`` to the
    positions holding that carry.
    """
    n, b = w.n, w.b
    d = w.digits.digits
    c = _carries(w)
    size = len(d)
    if beta.size != size:
        raise SizeMismatch("beta must match the digit count")
    if carries_follow is None:
        carries_follow = b % n == 0
    bimg = beta.image
    image = [0] * size
    hat = [0] * (size + 1)
    used = [False] * size

    def choices(carry):
        for i in range(size):
            if not used[i] and (not carries_follow or c[i] == carry):
                yield i

    def step(j):
        i = image[j]
        num = n * d[bimg[i]] - d[i] + hat[j]
        nxt, rem = divmod(num, b)
        if rem or not 0 <= nxt < n:
            return
        if j == size - 1:
            if nxt == 0:
                yield Perm(tuple(image)), tuple(hat[:size])
            return
        hat[j + 1] = nxt
        for i2 in choices(nxt):
            used[i2] = True
            image[j + 1] = i2
            yield from step(j + 1)
            used[i2] = False

    for i0 in choices(0):
        if not first_digit_admissible(d[i0], n, b):
            continue
        used[i0] = True
        image[0] = i0
        for pi, h in step(0):
            tau = conjugate(beta, inverse(pi))
            wit = witness_from_relation(apply_perm(w.digits, pi), tau, h, n)
            yield ClassMember(pi, tau, wit)
        used[i0] = False


def find_class_representative(w: PermutipleWitness, beta: Perm) -> PermutipleWitness | None:
    """First member of the ``beta`` class in search order (smallest ``pi``),
    or ``None`` when the class is empty."""
    member = _first_member(w, beta)
    return member.witness if member else None


def _first_member(w: PermutipleWitness, beta: Perm) -> ClassMember | None:
    return next(search_class(w, beta), None)


def _stabilizer_maps(d: DigitTuple, target: DigitTuple) -> list[Perm]:
    return oracle.sigmas_between(d, target)


def find_bijection_alpha(rep1: PermutipleWitness, rep2: PermutipleWitness) -> Perm | None:
    """Smallest ``alpha`` with ``n*d[alpha(t2(j))] - d[alpha(j)] == n*d[t1(j)] - d[j]``.

    ``d`` are the digits of ``rep1``; ``t1``, ``t2`` the permutations of the two
    representatives.  ``alpha`` is further required to send ``rep1``'s class
    onto ``rep2``'s, i.e. ``alpha t2 alpha^-1`` is a base permutation of
    ``rep2`` relative to ``d``.  Then ``pi -> alpha o pi`` maps the members of
    one class onto the other with unchanged carries.
    """
    d = rep1.digits.digits
    size = len(d)
    if len(rep2.digits) != size or rep1.digits.multiset() != rep2.digits.multiset():
        raise ValueError("representatives must rearrange the same digits")
    if (rep1.n, rep1.b) != (rep2.n, rep2.b):
        raise ValueError("representatives must share n and b")
    n = rep1.n
    t1, t2 = rep1.sigma.image, rep2.sigma.image
    target = [n * d[t1[j]] - d[j] for j in range(size)]
    bases = {conjugate(rep2.sigma, p) for p in _stabilizer_maps(rep1.digits, rep2.digits)}

    image = [-1] * size
    used = [False] * size

    def consistent(j):
        # constraints touching j whose other index is already assigned
        for i in (j, inverse_t2[j]):
            a, a2 = image[i], image[t2[i]]
            if a >= 0 and a2 >= 0 and n * d[a2] - d[a] != target[i]:
                return False
        return True

    inverse_t2 = inverse(rep2.sigma).image

    def fill(j):
        if j == size:
            alpha = Perm(tuple(image))
            if conjugate(rep2.sigma, alpha) in bases:
                return alpha
            return None
        for a in range(size):
            if used[a]:
                continue
            used[a] = True
            image[j] = a
            if consistent(j):
                found = fill(j + 1)
                if found is not None:
                    return found
            image[j] = -1
            used[a] = False
        return None

    return fill(0)


def class_bijection(source: PermutipleWitness, target: ConjugacyClass) -> tuple[Perm, ClassMember] | None:
    """An ``alpha`` taking ``source``'s class onto ``target``, with the target
    member it sends ``source`` to.

    ``alpha`` preserves carries, so only members carrying exactly the carries
    of ``source`` can serve as the second representative; they are tried in
    arrangement order.
    """
    for m in sorted(target.members, key=lambda m: m.arrangement.sort_key()):
        if m.witness.carries != source.carries:
            continue
        alpha = find_bijection_alpha(source, m.witness)
        if alpha is not None:
            return alpha, m
    return None


def carries_are_permuted(w1: PermutipleWitness, w2: PermutipleWitness, pi: Perm) -> bool:
    """``True`` iff the carries of ``w2`` are ``c o pi`` for the carries ``c`` of ``w1``."""
    size = len(w1.digits)
    if pi.size != size or len(w2.digits) != size:
        raise SizeMismatch("witnesses and pi must have the same size")
    c, hat = _carries(w1), _carries(w2)
    return all(hat[j] == c[pi(j)] for j in range(size))


def nonzero_carries(w: PermutipleWitness) -> tuple[int, ...]:
    """Carries ``(c_k, ..., c_1)``; ``c_0`` is always zero."""
    return w.carries.msf[:-1]


def _members_relative(w: PermutipleWitness, base_pi: Perm, ref: PermutipleWitness) -> list[ClassMember]:
    """Class of ``ref`` (itself ``apply_perm(w.digits, base_pi)``), with every
    ``pi`` expressed relative to ``w``'s digits."""
    out = []
    for pi_rel, member in class_members_from_reference(ref):
        pi = compose(base_pi, pi_rel)
        out.append(ClassMember(pi, member.sigma, member))
    return out


def _collapse(members: list[ClassMember]) -> list[ClassMember]:
    best: dict[DigitTuple, ClassMember] = {}
    for m in members:
        cur = best.get(m.arrangement)
        if cur is None or (m.pi.image, m.tau.image) < (cur.pi.image, cur.tau.image):
            best[m.arrangement] = m
    return sorted(best.values(), key=lambda m: m.arrangement.sort_key())


def enumerate_fixed_digits(w: PermutipleWitness, *, use_oracle: bool | None = None,
                           parallel: int | None = None) -> EnumerationReport:
    """Every permutiple with the digits of ``w`` (same ``n`` and ``b``), grouped
    into conjugacy classes.

    When ``n`` divides ``b`` the candidate base permutations are exhaustive.
    Otherwise the oracle is run as well and any arrangement it finds beyond
    the candidate classes is grouped into extra classes.  ``use_oracle``
    forces the oracle on or off; off with ``n`` not dividing ``b`` leaves
    completeness ``Unknown``.
    """
    n, b = w.n, w.b
    divides = b % n == 0
    if use_oracle is None:
        use_oracle = not divides

    candidates = candidate_base_permutations(w)
    classes: list[ConjugacyClass] = []
    seen: dict[frozenset, Perm] = {}
    for beta in candidates:
        cls = ConjugacyClass(beta)
        first = _first_member(w, beta)
        if first is not None:
            members = _collapse(_members_relative(w, first.pi, first.witness))
            for m in members:
                if conjugate(m.tau, m.pi) != beta:
                    raise CrossCheckFailure(f"{m.pi} does not conjugate {m.tau} to {beta}")
            key = frozenset(m.arrangement for m in members)
            if key in seen:
                cls.alias_of = seen[key]
            else:
                seen[key] = beta
                cls.members = members
        classes.append(cls)

    completeness = Completeness.N_DIVIDES_B if divides else Completeness.UNKNOWN
    if use_oracle:
        hits = oracle.enumerate_all(w.digits.multiset(), n, b, parallel=parallel)
        truth = {h.product_arrangement: h for h in hits}
        derived = set()
        for cls in classes:
            derived |= cls.arrangements()
        extra = derived - truth.keys()
        if extra:
            raise CrossCheckFailure(f"derived arrangements missing from oracle: {sorted(map(str, extra))}")
        pending = sorted(truth.keys() - derived, key=DigitTuple.sort_key)
        extra_classes = []
        while pending:
            x = pending[0]
            hit_witness = oracle.pair_to_witnesses(truth[x], n)[0]
            base_pi = _stabilizer_maps(w.digits, x)[0]
            members = _collapse(_members_relative(w, base_pi, hit_witness))
            beta = conjugate(hit_witness.sigma, base_pi)
            extra_classes.append(ConjugacyClass(beta, members, origin="oracle"))
            got = {m.arrangement for m in members}
            if not got <= truth.keys():
                raise CrossCheckFailure("class members outside the oracle set")
            pending = [p for p in pending if p not in got]
        if divides and extra_classes:
            raise CrossCheckFailure(
                f"n | b but the oracle found {sum(map(len, extra_classes))} arrangements outside the candidate classes"
            )
        classes.extend(sorted(extra_classes, key=lambda c: c.beta.image))
        if not divides:
            completeness = Completeness.ORACLE_VERIFIED
    return EnumerationReport(w, candidates, classes, completeness)
