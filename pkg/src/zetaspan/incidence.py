"""Numerical incidence algebras of the division order, truncated at a bound N.

Two levels:

* ``ReducedFn``: functions n -> int on 1..N (the monoid N^x, equivalently
  coefficient tables of formal Dirichlet series);
* ``IntervalFn``: functions [a, b] -> int on intervals a | b <= N of (N, |).

Both store nonzero entries only and use exact Python ints throughout.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from .arith import BoundError

Interval = tuple[int, int]


class BoundMismatch(ValueError):
    pass


def _same_bound(f, g) -> int:
    if f.N != g.N:
        raise BoundMismatch(f"bounds differ: {f.N} vs {g.N}")
    return f.N


def iter_intervals(N: int) -> Iterator[Interval]:
    """All intervals (a, b), a | b <= N, ordered by (b, a)."""
    for b in range(1, N + 1):
        for a in range(1, b + 1):
            if b % a == 0:
                yield a, b


@dataclass(frozen=True)
class ReducedFn:
    N: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for n, v in self.coeffs.items():
            if not 1 <= n <= self.N:
                raise BoundError(f"index {n} outside [1, {self.N}]")
            if v:
                clean[n] = v
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_function(cls, N: int, fn: Callable[[int], int]) -> ReducedFn:
        return cls(N, {n: fn(n) for n in range(1, N + 1)})

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise BoundError(f"index {n} outside [1, {self.N}]")
        return self.coeffs.get(n, 0)

    __call__ = __getitem__

    def __eq__(self, other) -> bool:
        return isinstance(other, ReducedFn) and self.N == other.N and self.coeffs == other.coeffs

    def __add__(self, other: ReducedFn) -> ReducedFn:
        N = _same_bound(self, other)
        out = dict(self.coeffs)
        for n, v in other.coeffs.items():
            out[n] = out.get(n, 0) + v
        return ReducedFn(N, out)

    def __neg__(self) -> ReducedFn:
        return ReducedFn(self.N, {n: -v for n, v in self.coeffs.items()})

    def __sub__(self, other: ReducedFn) -> ReducedFn:
        return self + (-other)

    def __mul__(self, other: ReducedFn) -> ReducedFn:
        return convolve_reduced(self, other)

    def scale(self, c: int) -> ReducedFn:
        return ReducedFn(self.N, {n: c * v for n, v in self.coeffs.items()})

    def restrict(self, N: int) -> ReducedFn:
        return ReducedFn(N, {n: v for n, v in self.coeffs.items() if n <= N})

    def dense(self) -> list[int]:
        """Values at 1..N as a list (index 0 is n = 1)."""
        return [self.coeffs.get(n, 0) for n in range(1, self.N + 1)]

    def to_json(self) -> dict:
        return {
            "kind": "reduced",
            "N": str(self.N),
            "coeffs": [{"index": str(n), "value": str(v)} for n, v in enumerate(self.dense(), 1)],
        }

    @classmethod
    def from_json(cls, data: dict) -> ReducedFn:
        return cls(int(data["N"]), {int(r["index"]): int(r["value"]) for r in data["coeffs"]})

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "value"])
        for n, v in enumerate(self.dense(), 1):
            w.writerow([n, v])
        return buf.getvalue()


@dataclass(frozen=True)
class IntervalFn:
    """Sparse function on intervals, stored under the key (a, b // a)."""

    N: int
    values: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, q), v in self.values.items():
            if a < 1 or q < 1 or a * q > self.N:
                raise BoundError(f"interval [{a},{a * q}] outside bound {self.N}")
            if v:
                clean[a, q] = v
        object.__setattr__(self, "values", clean)

    @classmethod
    def from_intervals(cls, N: int, table: Mapping[Interval, int]) -> IntervalFn:
        out = {}
        for (a, b), v in table.items():
            if b % a:
                raise KeyError(f"[{a},{b}] is not an interval: {a} does not divide {b}")
            out[a, b // a] = v
        return cls(N, out)

    @classmethod
    def from_function(cls, N: int, fn: Callable[[int, int], int]) -> IntervalFn:
        return cls(N, {(a, b // a): fn(a, b) for a, b in iter_intervals(N)})

    def __getitem__(self, key: Interval) -> int:
        a, b = key
        if a < 1 or b % a:
            raise KeyError(f"[{a},{b}] is not an interval: {a} does not divide {b}")
        if b > self.N:
            raise BoundError(f"[{a},{b}] beyond bound {self.N}")
        return self.values.get((a, b // a), 0)

    def __call__(self, a: int, b: int) -> int:
        return self[a, b]

    def items(self) -> Iterator[tuple[Interval, int]]:
        """Nonzero entries as ((a, b), value)."""
        for (a, q), v in self.values.items():
            yield (a, a * q), v

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalFn) and self.N == other.N and self.values == other.values

    def __add__(self, other: IntervalFn) -> IntervalFn:
        N = _same_bound(self, other)
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return IntervalFn(N, out)

    def __neg__(self) -> IntervalFn:
        return IntervalFn(self.N, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: IntervalFn) -> IntervalFn:
        return self + (-other)

    def __mul__(self, other: IntervalFn) -> IntervalFn:
        return convolve_full(self, other)

    def restrict(self, N: int) -> IntervalFn:
        return IntervalFn(N, {(a, q): v for (a, q), v in self.values.items() if a * q <= N})

    def is_translation_invariant(self) -> bool:
        """True when the value at [a, b] depends only on b / a."""
        by_ratio: dict[int, int] = {}
        for a, b in iter_intervals(self.N):
            v = self[a, b]
            if by_ratio.setdefault(b // a, v) != v:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": "interval",
            "N": str(self.N),
            "values": [
                {"index": [str(a), str(b)], "value": str(self[a, b])} for a, b in iter_intervals(self.N)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> IntervalFn:
        table = {(int(r["index"][0]), int(r["index"][1])): int(r["value"]) for r in data["values"]}
        return cls.from_intervals(int(data["N"]), table)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "value"])
        for a, b in iter_intervals(self.N):
            w.writerow([f"[{a},{b}]", self[a, b]])
        return buf.getvalue()


def dumps(fn: ReducedFn | IntervalFn) -> str:
    return json.dumps(fn.to_json(), indent=1)


# -- distinguished elements ------------------------------------------------


def delta_reduced(N: int) -> ReducedFn:
    return ReducedFn(N, {1: 1})


def delta_full(N: int) -> IntervalFn:
    return IntervalFn(N, {(a, 1): 1 for a in range(1, N + 1)})


def zeta_reduced(N: int) -> ReducedFn:
    return ReducedFn(N, {n: 1 for n in range(1, N + 1)})


def zeta_full(N: int) -> IntervalFn:
    return IntervalFn(N, {(a, b // a): 1 for a, b in iter_intervals(N)})


# -- convolution -------------------------------------------------------------


def convolve_reduced(f: ReducedFn, g: ReducedFn) -> ReducedFn:
    """Dirichlet convolution: (f*g)(n) = sum over d | n of f(d) g(n/d)."""
    N = _same_bound(f, g)
    gs = sorted(g.coeffs.items())
    out: dict[int, int] = defaultdict(int)
    for d, x in f.coeffs.items():
        lim = N // d
        for e, y in gs:
            if e > lim:
                break
            out[d * e] += x * y
    return ReducedFn(N, out)


def convolve_full(f: IntervalFn, g: IntervalFn) -> IntervalFn:
    """(f*g)([a,b]) = sum over a | d | b of f([a,d]) g([d,b])."""
    N = _same_bound(f, g)
    g_from: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for (d, q), y in g.values.items():
        g_from[d].append((q, y))
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (a, q1), x in f.values.items():
        for q2, y in g_from.get(a * q1, ()):
            out[a, q1 * q2] += x * y
    return IntervalFn(N, out)


# -- Moebius inversion ---------------------------------------------------------


def mobius_reduced(N: int) -> ReducedFn:
    """mu(1) = 1, mu(n) = -sum over proper divisors d of n of mu(d)."""
    mu = [0] * (N + 1)
    mu[1] = 1
    for d in range(1, N + 1):
        if mu[d]:
            for m in range(2 * d, N + 1, d):
                mu[m] -= mu[d]
    return ReducedFn(N, {n: mu[n] for n in range(1, N + 1)})


def mobius_full(N: int) -> IntervalFn:
    """Interval Moebius function by the defining recursion, one lower endpoint at a time."""
    out = {}
    for a in range(1, N + 1):
        top = N // a
        # mu[q] holds mu([a, a*q]); divisibility a*z | a*q iff z | q
        mu = [0] * (top + 1)
        mu[1] = 1
        for z in range(1, top + 1):
            if mu[z]:
                for q in range(2 * z, top + 1, z):
                    mu[q] -= mu[z]
        for q in range(1, top + 1):
            if mu[q]:
                out[a, q] = mu[q]
    return IntervalFn(N, out)


def phi_even_odd(N: int) -> tuple[ReducedFn, ReducedFn]:
    """Counts of ordered factorizations of n into an even / odd number of factors > 1."""
    even = [0] * (N + 1)
    odd = [0] * (N + 1)
    even[1] = 1
    for m in range(1, N + 1):
        e, o = even[m], odd[m]
        if not (e or o):
            continue
        for d in range(2, N // m + 1):
            even[m * d] += o
            odd[m * d] += e
    return (
        ReducedFn(N, {n: even[n] for n in range(1, N + 1)}),
        ReducedFn(N, {n: odd[n] for n in range(1, N + 1)}),
    )


# -- reduction and pushforward ---------------------------------------------------


def reduce_numerical(f: IntervalFn) -> ReducedFn:
    """Keep only the initial intervals: n -> f([1, n])."""
    return ReducedFn(f.N, {q: v for (a, q), v in f.values.items() if a == 1})


def pushforward_numerical(fiber_counter: Callable, N: int, level: str = "reduced") -> ReducedFn | IntervalFn:
    """Tabulate fiber sizes of a label map: n -> #fiber(n), or [a,b] -> #fiber([a,b])."""
    if level == "reduced":
        return ReducedFn.from_function(N, fiber_counter)
    if level == "full":
        return IntervalFn.from_function(N, fiber_counter)
    raise ValueError(f"unknown level {level!r}")
