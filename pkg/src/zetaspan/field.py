"""Ideals of a quadratic field Q(sqrt d), kept in factored form only.

A prime ideal is named by the rational prime below it and a tag: ``SOLE`` for
ramified and inert primes, ``CHOSEN``/``CONJUGATE`` for the two conjugate
primes above a split prime.  Which of the two is "chosen" is a global,
arbitrary labeling; ``QuadField.swapped`` flips it everywhere so that results
can be checked for independence of the choice.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .arith import (
    BoundError,
    SplittingType,
    discriminant,
    factorize,
    require_fundamental,
    splitting_type,
)


class DomainError(ValueError):
    """Interval endpoints that do not divide."""


class Tag(enum.IntEnum):
    SOLE = 0
    CHOSEN = 1
    CONJUGATE = 2


@dataclass(frozen=True, order=True)
class PrimeIdealClass:
    p: int
    tag: Tag
    stype: SplittingType = field(compare=False)

    def __post_init__(self):
        sole = self.stype is not SplittingType.SPLIT
        if sole != (self.tag is Tag.SOLE):
            raise ValueError(f"tag {self.tag.name} incompatible with {self.stype.value} prime {self.p}")

    @property
    def norm(self) -> int:
        return self.p * self.p if self.stype is SplittingType.INERT else self.p

    def conjugate(self) -> PrimeIdealClass:
        if self.tag is Tag.SOLE:
            return self
        other = Tag.CONJUGATE if self.tag is Tag.CHOSEN else Tag.CHOSEN
        return PrimeIdealClass(self.p, other, self.stype)

    def __str__(self) -> str:
        suffix = {Tag.SOLE: "", Tag.CHOSEN: "a", Tag.CONJUGATE: "b"}[self.tag]
        return f"P{self.p}{suffix}"


@dataclass(frozen=True)
class IdealF:
    """An integral ideal as a sorted exponent table over prime ideal classes."""

    exponents: tuple[tuple[PrimeIdealClass, int], ...] = ()

    def __post_init__(self):
        if any(e < 1 for _, e in self.exponents):
            raise ValueError("exponents must be positive")
        if list(self.exponents) != sorted(self.exponents):
            object.__setattr__(self, "exponents", tuple(sorted(self.exponents)))

    @classmethod
    def from_dict(cls, table: dict[PrimeIdealClass, int]) -> IdealF:
        return cls(tuple(sorted((P, e) for P, e in table.items() if e)))

    @cached_property
    def norm(self) -> int:
        out = 1
        for P, e in self.exponents:
            out *= P.norm**e
        return out

    def as_dict(self) -> dict[PrimeIdealClass, int]:
        return dict(self.exponents)

    def exponent(self, P: PrimeIdealClass) -> int:
        return self.as_dict().get(P, 0)

    def exponent_at(self, p: int, tag: Tag) -> int:
        for P, e in self.exponents:
            if P.p == p and P.tag is tag:
                return e
        return 0

    def key(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((P.p, int(P.tag), e) for P, e in self.exponents)

    def __mul__(self, other: IdealF) -> IdealF:
        table = self.as_dict()
        for P, e in other.exponents:
            table[P] = table.get(P, 0) + e
        return IdealF.from_dict(table)

    def divides(self, other: IdealF) -> bool:
        theirs = other.as_dict()
        return all(theirs.get(P, 0) >= e for P, e in self.exponents)

    def conjugate(self) -> IdealF:
        return IdealF.from_dict({P.conjugate(): e for P, e in self.exponents})

    def __str__(self) -> str:
        if not self.exponents:
            return "(1)"
        return "*".join(f"{P}^{e}" for P, e in self.exponents)


UNIT = IdealF()


def norm(a: IdealF) -> int:
    return a.norm


def conjugate(a: IdealF) -> IdealF:
    return a.conjugate()


@dataclass(frozen=True, eq=False)
class IdealInterval:
    lo: IdealF
    hi: IdealF

    def __post_init__(self):
        if not self.lo.divides(self.hi):
            raise DomainError(f"{self.lo} does not divide {self.hi}")

    def norms(self) -> tuple[int, int]:
        return self.lo.norm, self.hi.norm

    def key(self):
        return (self.lo.key(), self.hi.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __eq__(self, other):
        return isinstance(other, IdealInterval) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class QuadField:
    """Q(sqrt d) truncated at norm bound ``N``."""

    d: int
    N: int = 10**4
    swapped: bool = False

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("bound N must be >= 1")
        discriminant(self.d)  # validates d

    @classmethod
    def from_disc(cls, D: int, N: int = 10**4, swapped: bool = False) -> QuadField:
        require_fundamental(D)
        if D == 1:
            raise ValueError("D = 1 is not a quadratic field")
        return cls(D if D % 4 == 1 else D // 4, N, swapped)

    @property
    def D(self) -> int:
        return discriminant(self.d)

    @property
    def chosen(self) -> Tag:
        """The tag playing the role of the fixed prime above each split p."""
        return Tag.CONJUGATE if self.swapped else Tag.CHOSEN

    def stype(self, p: int) -> SplittingType:
        return splitting_type(self.D, p)

    def prime_ideals_above(self, p: int) -> list[PrimeIdealClass]:
        st = self.stype(p)
        if st is SplittingType.SPLIT:
            return [PrimeIdealClass(p, Tag.CHOSEN, st), PrimeIdealClass(p, Tag.CONJUGATE, st)]
        return [PrimeIdealClass(p, Tag.SOLE, st)]

    def check(self, n: int) -> None:
        if not 1 <= n <= self.N:
            raise BoundError(f"norm {n} outside [1, {self.N}]")

    def __str__(self) -> str:
        return f"Q(sqrt({self.d})) [D={self.D}, N={self.N}]"


# -- local building blocks -------------------------------------------------


def local_ideal_count(stype: SplittingType, k: int) -> int:
    if stype is SplittingType.RAMIFIED:
        return 1
    if stype is SplittingType.SPLIT:
        return k + 1
    return 1 if k % 2 == 0 else 0


def local_interval_count(stype: SplittingType, m: int, n: int) -> int:
    """Number of ideal intervals above [p^m, p^n]; 0 <= m <= n."""
    if stype is SplittingType.RAMIFIED:
        return 1
    if stype is SplittingType.SPLIT:
        return (m + 1) * (n - m + 1)
    return 1 if m % 2 == 0 and n % 2 == 0 else 0


def _local_ideals(K: QuadField, p: int, k: int) -> list[dict[PrimeIdealClass, int]]:
    """Exponent tables of the ideals of norm p^k supported above p."""
    primes = K.prime_ideals_above(p)
    st = primes[0].stype
    if st is SplittingType.RAMIFIED:
        return [{primes[0]: k}]
    if st is SplittingType.INERT:
        return [{primes[0]: k // 2}] if k % 2 == 0 else []
    P, Q = primes
    return [{P: i, Q: k - i} for i in range(k + 1)]


def ideal_count(K: QuadField, n: int) -> int:
    K.check(n)
    out = 1
    for p, e in factorize(n):
        out *= local_ideal_count(K.stype(p), e)
    return out


def enumerate_ideals(K: QuadField, n: int) -> list[IdealF]:
    """All ideals of norm ``n``, in canonical (p, tag, exponent) order."""
    K.check(n)
    choices = [_local_ideals(K, p, e) for p, e in factorize(n)]
    out = []
    for combo in itertools.product(*choices):
        table: dict[PrimeIdealClass, int] = {}
        for part in combo:
            table.update(part)
        out.append(IdealF.from_dict(table))
    return sorted(out, key=IdealF.key)


def _check_interval(K: QuadField, a: int, b: int) -> None:
    K.check(b)
    if a < 1 or b % a:
        raise DomainError(f"{a} does not divide {b}")


def interval_count(K: QuadField, a: int, b: int) -> int:
    _check_interval(K, a, b)
    out = 1
    for p, e in factorize(b):
        m = 0
        q = a
        while q % p == 0:
            q //= p
            m += 1
        out *= local_interval_count(K.stype(p), m, e)
    return out


def enumerate_ideal_intervals(K: QuadField, a: int, b: int) -> list[IdealInterval]:
    """All ideal intervals [lo, hi] with N(lo) = a, N(hi) = b, lo | hi."""
    _check_interval(K, a, b)
    choices = []
    for p, e in factorize(b):
        m = 0
        q = a
        while q % p == 0:
            q //= p
            m += 1
        local = []
        for lo in _local_ideals(K, p, m):
            for hi in _local_ideals(K, p, e):
                if all(hi.get(P, 0) >= x for P, x in lo.items()):
                    local.append((lo, hi))
        choices.append(local)
    out = []
    for combo in itertools.product(*choices):
        lo: dict[PrimeIdealClass, int] = {}
        hi: dict[PrimeIdealClass, int] = {}
        for l_part, h_part in combo:
            lo.update(l_part)
            hi.update(h_part)
        out.append(IdealInterval(IdealF.from_dict(lo), IdealF.from_dict(hi)))
    return sorted(out)
