"""Objective layer: dual vectors as labeled finite sets over truncated simplicial models.

A ``SpanVec`` is a finite apex set with a label map into the 1-simplices of a
base model.  Convolution is the pullback along (d2, d0) over 2-simplices; since
every 2-simplex in these models is determined by its two outer faces, an apex
element of ``f * g`` is just a composable pair (x, y) labeled by d1 = x . y.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Mapping

from .arith import BoundError, divisors
from .field import (
    UNIT,
    IdealF,
    IdealInterval,
    QuadField,
    enumerate_ideal_intervals,
    enumerate_ideals,
)
from .incidence import IntervalFn, ReducedFn, iter_intervals

Label = Hashable


class BaseMismatch(ValueError):
    pass


class Kind(enum.Enum):
    REDUCED_BASE = "reduced-base"  # N^x
    FULL_BASE = "full-base"  # (N, |)
    REDUCED_IDEAL = "reduced-ideal"  # I_K^x
    FULL_IDEAL = "full-ideal"  # (I_K^+, |)


def ideal_divisors(a: IdealF) -> list[IdealF]:
    ranges = [[(P, k) for k in range(e + 1)] for P, e in a.exponents]
    return sorted((IdealF.from_dict(dict(c)) for c in itertools.product(*ranges)), key=IdealF.key)


def ideal_quotient(c: IdealF, a: IdealF) -> IdealF:
    table = c.as_dict()
    for P, e in a.exponents:
        table[P] -= e
    return IdealF.from_dict(table)


def label_str(label: Label) -> str:
    if isinstance(label, tuple):
        return f"[{label[0]},{label[1]}]"
    return str(label)


@dataclass(frozen=True)
class SimplicialModel:
    kind: Kind
    N: int
    field: QuadField | None = None

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("bound must be >= 1")
        if self.kind in (Kind.REDUCED_IDEAL, Kind.FULL_IDEAL) and self.field is None:
            raise ValueError(f"{self.kind.value} model needs a field")

    @property
    def is_full(self) -> bool:
        return self.kind in (Kind.FULL_BASE, Kind.FULL_IDEAL)

    def grade(self, label: Label) -> int:
        """Truncation grading: the integer, or the norm of the upper endpoint."""
        if self.kind is Kind.REDUCED_BASE:
            return label
        if self.kind is Kind.FULL_BASE:
            return label[1]
        if self.kind is Kind.REDUCED_IDEAL:
            return label.norm
        return label.hi.norm

    def contains(self, label: Label) -> bool:
        k = self.kind
        if k is Kind.REDUCED_BASE:
            return isinstance(label, int) and 1 <= label <= self.N
        if k is Kind.FULL_BASE:
            a, b = label
            return 1 <= a and b <= self.N and b % a == 0
        if k is Kind.REDUCED_IDEAL:
            return isinstance(label, IdealF) and label.norm <= self.N
        return isinstance(label, IdealInterval) and label.hi.norm <= self.N

    def one_simplices(self) -> list[Label]:
        k, N = self.kind, self.N
        if k is Kind.REDUCED_BASE:
            return list(range(1, N + 1))
        if k is Kind.FULL_BASE:
            return list(iter_intervals(N))
        K = self.field
        if k is Kind.REDUCED_IDEAL:
            return [a for n in range(1, N + 1) for a in enumerate_ideals(K, n)]
        return [iv for b in range(1, N + 1) for a in divisors(b) for iv in enumerate_ideal_intervals(K, a, b)]

    def degenerate(self, label: Label) -> bool:
        k = self.kind
        if k is Kind.REDUCED_BASE:
            return label == 1
        if k is Kind.FULL_BASE:
            return label[0] == label[1]
        if k is Kind.REDUCED_IDEAL:
            return label == UNIT
        return label.lo == label.hi

    def compose(self, x: Label, y: Label) -> Label | None:
        """d1 of the 2-simplex with d2 = x and d0 = y, or None if there is none."""
        k = self.kind
        if k is Kind.REDUCED_BASE:
            return x * y
        if k is Kind.FULL_BASE:
            return (x[0], y[1]) if x[1] == y[0] else None
        if k is Kind.REDUCED_IDEAL:
            return x * y
        return IdealInterval(x.lo, y.hi) if x.hi == y.lo else None

    def two_simplices(self, label: Label) -> list[tuple[Label, Label]]:
        """All 2-simplices with d1 = label, as (d2, d0) pairs."""
        k = self.kind
        if k is Kind.REDUCED_BASE:
            return [(d, label // d) for d in divisors(label)]
        if k is Kind.FULL_BASE:
            a, c = label
            return [((a, a * q), (a * q, c)) for q in divisors(c // a)]
        if k is Kind.REDUCED_IDEAL:
            return [(d, ideal_quotient(label, d)) for d in ideal_divisors(label)]
        lo, hi = label.lo, label.hi
        mids = [lo * d for d in ideal_divisors(ideal_quotient(hi, lo))]
        return [(IdealInterval(lo, m), IdealInterval(m, hi)) for m in sorted(mids, key=IdealF.key)]


@dataclass(frozen=True)
class ApexElement:
    label: Any
    payload: str
    parts: tuple[ApexElement, ...] = field(default=(), compare=False, repr=False)

    def leaves(self) -> tuple[str, ...]:
        """Payloads of the generating elements, with convolution brackets forgotten."""
        if not self.parts:
            return (self.payload,)
        return tuple(p for part in self.parts for p in part.leaves())


@dataclass(frozen=True)
class SpanVec:
    base: SimplicialModel
    apex: tuple[ApexElement, ...] = ()

    def __post_init__(self):
        seen = set()
        for x in self.apex:
            if not self.base.contains(x.label):
                raise BoundError(f"label {label_str(x.label)} not a 1-simplex within bound {self.base.N}")
            if x.payload in seen:
                raise ValueError(f"duplicate payload {x.payload!r}")
            seen.add(x.payload)

    def __len__(self) -> int:
        return len(self.apex)

    def fibers(self) -> dict[Label, list[ApexElement]]:
        out: dict[Label, list[ApexElement]] = defaultdict(list)
        for x in self.apex:
            out[x.label].append(x)
        return dict(out)

    def fiber(self, label: Label) -> list[ApexElement]:
        return [x for x in self.apex if x.label == label]

    def to_json(self) -> dict:
        return {
            "base": self.base.kind.value,
            "bound": str(self.base.N),
            "apex": [{"label": label_str(x.label), "payload": x.payload} for x in self.apex],
        }


def _same_base(u: SpanVec, v: SpanVec) -> SimplicialModel:
    if u.base != v.base:
        raise BaseMismatch(f"{u.base} vs {v.base}")
    return u.base


def vector(base: SimplicialModel, labeled: Iterable[tuple[Label, str]]) -> SpanVec:
    return SpanVec(base, tuple(ApexElement(lab, pay) for lab, pay in labeled))


def zeta_span(base: SimplicialModel, prefix: str = "") -> SpanVec:
    """One apex element per 1-simplex."""
    return vector(base, ((x, prefix + label_str(x)) for x in base.one_simplices()))


def delta_span(base: SimplicialModel, prefix: str = "") -> SpanVec:
    return vector(base, ((x, prefix + label_str(x)) for x in base.one_simplices() if base.degenerate(x)))


def span_add(u: SpanVec, v: SpanVec) -> SpanVec:
    """Disjoint union.  Payloads are tagged L./R. only if the two sides collide."""
    base = _same_base(u, v)
    if {x.payload for x in u.apex} & {y.payload for y in v.apex}:
        left = tuple(ApexElement(x.label, "L." + x.payload, x.parts) for x in u.apex)
        right = tuple(ApexElement(y.label, "R." + y.payload, y.parts) for y in v.apex)
        return SpanVec(base, left + right)
    return SpanVec(base, u.apex + v.apex)


def span_convolve(f: SpanVec, g: SpanVec) -> SpanVec:
    """Pullback of f x g along (d2, d0); elements whose d1 leaves the bound are not formed."""
    base = _same_base(f, g)
    N = base.N
    out = []
    k = base.kind
    if k in (Kind.REDUCED_BASE, Kind.REDUCED_IDEAL):
        size = (lambda lab: lab) if k is Kind.REDUCED_BASE else (lambda lab: lab.norm)
        gs = sorted(g.apex, key=lambda y: size(y.label))
        for x in f.apex:
            lim = N // size(x.label)
            for y in gs:
                if size(y.label) > lim:
                    break
                out.append(_pair(base, x, y))
    else:
        start = (lambda lab: lab[0]) if k is Kind.FULL_BASE else (lambda lab: lab.lo)
        end = (lambda lab: lab[1]) if k is Kind.FULL_BASE else (lambda lab: lab.hi)
        by_start: dict[Any, list[ApexElement]] = defaultdict(list)
        for y in g.apex:
            by_start[start(y.label)].append(y)
        for x in f.apex:
            for y in by_start.get(end(x.label), ()):
                out.append(_pair(base, x, y))
    out.sort(key=lambda e: _sort_key(base, e.label))
    return SpanVec(base, tuple(out))


def _pair(base: SimplicialModel, x: ApexElement, y: ApexElement) -> ApexElement:
    return ApexElement(base.compose(x.label, y.label), f"({x.payload})*({y.payload})", (x, y))


def _sort_key(base: SimplicialModel, label: Label):
    k = base.kind
    if k is Kind.REDUCED_BASE:
        return (label,)
    if k is Kind.FULL_BASE:
        return (label[1], label[0])
    if k is Kind.REDUCED_IDEAL:
        return (label.norm, label.key())
    return (label.hi.norm, label.lo.norm, label.key())


def span_cardinality(v: SpanVec) -> ReducedFn | IntervalFn | Counter:
    """Fiber sizes; a numerical incidence function on the integer models, a Counter on ideal models."""
    counts = Counter(x.label for x in v.apex)
    k = v.base.kind
    if k is Kind.REDUCED_BASE:
        return ReducedFn(v.base.N, dict(counts))
    if k is Kind.FULL_BASE:
        return IntervalFn.from_intervals(v.base.N, dict(counts))
    return counts


def span_pushforward(F: Callable[[Label], Label], v: SpanVec, target: SimplicialModel) -> SpanVec:
    out = []
    for x in v.apex:
        y = F(x.label)
        if not target.contains(y):
            raise BoundError(f"image {label_str(y)} outside target bound {target.N}")
        out.append(ApexElement(y, x.payload, x.parts))
    return SpanVec(target, tuple(out))


def norm_reduced(a: IdealF) -> int:
    return a.norm


def norm_full(iv: IdealInterval) -> tuple[int, int]:
    return iv.lo.norm, iv.hi.norm


def phi_star_span(v: SpanVec) -> SpanVec:
    """Keep elements labeled by initial intervals [1, n] and relabel them n."""
    if v.base.kind is not Kind.FULL_BASE:
        raise BaseMismatch("phi_star_span needs a vector on the full base")
    target = SimplicialModel(Kind.REDUCED_BASE, v.base.N)
    kept = tuple(ApexElement(x.label[1], x.payload, x.parts) for x in v.apex if x.label[0] == 1)
    return SpanVec(target, kept)


@dataclass
class BijectionWitness:
    pairs: list[tuple[ApexElement, ApexElement]] = field(default_factory=list)
    leftover_left: list[ApexElement] = field(default_factory=list)
    leftover_right: list[ApexElement] = field(default_factory=list)
    # pairs whose labels disagree under the designated label maps
    mislabeled: list[tuple[ApexElement, ApexElement]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (self.leftover_left or self.leftover_right or self.mislabeled)

    def bad_labels(self) -> set:
        bad = {x.label for x in self.leftover_left} | {y.label for y in self.leftover_right}
        bad |= {x.label for x, _ in self.mislabeled}
        return bad

    def to_json(self) -> dict:
        def el(x):
            return {"label": label_str(x.label), "payload": x.payload}

        return {
            "valid": self.valid,
            "pairs": [[el(x), el(y)] for x, y in self.pairs],
            "leftover_left": [el(x) for x in self.leftover_left],
            "leftover_right": [el(y) for y in self.leftover_right],
        }


def span_equivalence_check(
    u: SpanVec,
    v: SpanVec,
    pairing: Mapping[str, str] | Callable[[ApexElement], str] | None = None,
    label_u: Callable[[Label], Label] | None = None,
    label_v: Callable[[Label], Label] | None = None,
) -> BijectionWitness:
    """Certify a label-preserving bijection u.apex -> v.apex.

    ``pairing`` maps left payloads to right payloads.  Without it, each fiber is
    matched greedily in apex order and any surplus is reported as leftovers.
    """
    lu = label_u or (lambda x: x)
    lv = label_v or (lambda x: x)
    w = BijectionWitness()
    if pairing is None:
        fu: dict[Label, list[ApexElement]] = defaultdict(list)
        fv: dict[Label, list[ApexElement]] = defaultdict(list)
        for x in u.apex:
            fu[lu(x.label)].append(x)
        for y in v.apex:
            fv[lv(y.label)].append(y)
        for lab in list(fu) + [lab for lab in fv if lab not in fu]:
            xs, ys = fu.get(lab, []), fv.get(lab, [])
            w.pairs.extend(zip(xs, ys))
            w.leftover_left.extend(xs[len(ys) :])
            w.leftover_right.extend(ys[len(xs) :])
        return w

    target = pairing if callable(pairing) else (lambda x: pairing.get(x.payload))
    right = {y.payload: y for y in v.apex}
    used: set[str] = set()
    for x in u.apex:
        key = target(x)
        y = right.get(key) if key is not None else None
        if y is None or key in used:
            w.leftover_left.append(x)
            continue
        used.add(key)
        w.pairs.append((x, y))
        if lu(x.label) != lv(y.label):
            w.mislabeled.append((x, y))
    w.leftover_right = [y for y in v.apex if y.payload not in used]
    return w


def associativity_witness(left: SpanVec, right: SpanVec) -> BijectionWitness:
    """Pair (f*g)*h with f*(g*h) by forgetting the bracketing of generators."""
    by_leaves = {y.leaves(): y.payload for y in right.apex}
    return span_equivalence_check(left, right, pairing=lambda x: by_leaves.get(x.leaves()))
