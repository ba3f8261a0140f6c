"""Finite phantom probability spaces.

A phantom measure assigns each outcome a phantom weight whose real part is
a genuine probability and whose reduction (re + ph) is a second, "revised"
probability.  Validity means every weight lies in the admissible zone
(re in [0,1], -re <= ph <= 1-re) and the weights sum to one.  Strict mode
additionally bans nonzero zero-divisor weights, which would make
conditioning on the corresponding events impossible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .ring import (
    Phantom,
    PhantomError,
    SignClass,
    ZERO,
    ONE,
    classify,
    is_invertible,
)

__all__ = [
    "Mode",
    "SampleSpace",
    "Event",
    "PhantomMeasure",
    "RealSelection",
    "ValidationReport",
    "UnknownOutcome",
    "ConditioningDegenerate",
    "BadPartition",
    "BadCoefficients",
    "InvalidMeasure",
    "validate",
    "prob",
    "complement_prob",
    "union_prob",
    "conditional",
    "total_probability",
    "bayes",
    "independent",
    "compound",
    "select_real",
    "in_zone",
]

#: Tolerance for the measure axioms (zone membership, weight sum).
MEASURE_TOL = 1e-9
#: Tolerance for equality of phantom probabilities.
PROB_EQ_TOL = 1e-10


class UnknownOutcome(PhantomError):
    pass


class ConditioningDegenerate(PhantomError):
    pass


class BadPartition(PhantomError):
    pass


class BadCoefficients(PhantomError):
    pass


class InvalidMeasure(PhantomError):
    pass


class Mode(enum.Enum):
    STRICT = "strict"
    LENIENT = "lenient"


@dataclass(frozen=True)
class SampleSpace:
    outcomes: tuple[str, ...]

    def __post_init__(self):
        outcomes = tuple(str(o) for o in self.outcomes)
        if not outcomes:
            raise ValueError("sample space needs at least one outcome")
        if len(set(outcomes)) != len(outcomes):
            raise ValueError("outcome labels must be unique")
        object.__setattr__(self, "outcomes", outcomes)


@dataclass(frozen=True)
class Event:
    members: frozenset[str]

    def __init__(self, members: Iterable[str]):
        object.__setattr__(self, "members", frozenset(str(m) for m in members))

    def __contains__(self, label: str) -> bool:
        return label in self.members


def in_zone(w: Phantom, tol: float = MEASURE_TOL) -> bool:
    """Whether w is an admissible weight: re in [0,1], -re <= ph <= 1-re."""
    return (
        -tol <= w.re <= 1.0 + tol
        and w.ph >= -w.re - tol
        and w.ph <= 1.0 - w.re + tol
    )


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...]

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class PhantomMeasure:
    space: SampleSpace
    weights: Mapping[str, Phantom]
    mode: Mode = Mode.STRICT

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))

    @classmethod
    def from_dict(
        cls,
        weights: Mapping[str, tuple[float, float] | Phantom],
        mode: Mode = Mode.STRICT,
    ) -> "PhantomMeasure":
        space = SampleSpace(tuple(weights))
        w = {
            k: v if isinstance(v, Phantom) else Phantom(*v)
            for k, v in weights.items()
        }
        return cls(space, w, mode)

    def weight(self, outcome: str) -> Phantom:
        if outcome not in self.weights:
            raise UnknownOutcome(outcome)
        return self.weights[outcome]

    def event(self, members: Iterable[str]) -> Event:
        return Event(members)

    @property
    def omega(self) -> Event:
        return Event(self.space.outcomes)


def validate(m: PhantomMeasure, tol: float = MEASURE_TOL) -> ValidationReport:
    """Check the measure axioms; return every violation, not just the first."""
    violations: list[str] = []
    for o in m.space.outcomes:
        if o not in m.weights:
            violations.append(f"outcome {o!r} has no weight")
            continue
        w = m.weights[o]
        if not (-tol <= w.re <= 1.0 + tol):
            violations.append(f"outcome {o!r}: re={w.re} outside [0, 1]")
        if w.ph < -w.re - tol:
            violations.append(f"outcome {o!r}: ph={w.ph} below -re={-w.re}")
        if w.ph > 1.0 - w.re + tol:
            violations.append(f"outcome {o!r}: ph={w.ph} above 1-re={1.0 - w.re}")
        if m.mode is Mode.STRICT and classify(w) is SignClass.ZERO_DIVISOR:
            violations.append(
                f"outcome {o!r}: weight {w} is a nonzero zero divisor (strict mode)"
            )
    extra = set(m.weights) - set(m.space.outcomes)
    for o in sorted(extra):
        violations.append(f"weight for unknown outcome {o!r}")
    total = sum((m.weights.get(o, ZERO) for o in m.space.outcomes), ZERO)
    if abs(total.re - 1.0) > tol or abs(total.ph) > tol:
        violations.append(f"weights sum to {total}, expected (1, 0)")
    return ValidationReport(not violations, tuple(violations))


def _require_valid(m: PhantomMeasure) -> None:
    report = validate(m)
    if not report.valid:
        raise InvalidMeasure("; ".join(report.violations))


def _check_event(m: PhantomMeasure, a: Event) -> None:
    unknown = a.members - set(m.space.outcomes)
    if unknown:
        raise UnknownOutcome(", ".join(sorted(unknown)))


def prob(m: PhantomMeasure, a: Event) -> Phantom:
    _check_event(m, a)
    return sum((m.weight(o) for o in a.members), ZERO)


def complement_prob(m: PhantomMeasure, a: Event) -> Phantom:
    return ONE - prob(m, a)


def union_prob(m: PhantomMeasure, a: Event, b: Event) -> Phantom:
    inter = Event(a.members & b.members)
    return prob(m, a) + prob(m, b) - prob(m, inter)


def conditional(m: PhantomMeasure, a: Event, b: Event) -> Phantom:
    pb = prob(m, b)
    if not is_invertible(pb):
        raise ConditioningDegenerate(f"P(B) = {pb} is not invertible")
    return prob(m, Event(a.members & b.members)) / pb


def _check_partition(m: PhantomMeasure, partition: Sequence[Event]) -> None:
    seen: set[str] = set()
    for block in partition:
        _check_event(m, block)
        if seen & block.members:
            raise BadPartition("partition blocks overlap")
        seen |= block.members
    if seen != set(m.space.outcomes):
        raise BadPartition("partition does not cover the sample space")


def total_probability(
    m: PhantomMeasure, partition: Sequence[Event], b: Event
) -> Phantom:
    _check_partition(m, partition)
    acc = ZERO
    for block in partition:
        acc = acc + prob(m, block) * conditional(m, b, block)
    return acc


def bayes(
    m: PhantomMeasure, partition: Sequence[Event], b: Event, i: int
) -> Phantom:
    total = total_probability(m, partition, b)
    if not is_invertible(total):
        raise ConditioningDegenerate(f"P(B) = {total} is not invertible")
    block = partition[i]
    return prob(m, block) * conditional(m, b, block) / total


def independent(m: PhantomMeasure, a: Event, b: Event,
                tol: float = PROB_EQ_TOL) -> bool:
    inter = prob(m, Event(a.members & b.members))
    product = prob(m, a) * prob(m, b)
    return abs(inter.re - product.re) <= tol and abs(inter.ph - product.ph) <= tol


def compound(
    measures: Sequence[PhantomMeasure], coeffs: Sequence[Phantom]
) -> PhantomMeasure:
    """Mixture sum_i z_i * P_i with admissible coefficients summing to one."""
    if len(measures) != len(coeffs) or not measures:
        raise BadCoefficients("need one coefficient per measure")
    space = measures[0].space
    for m in measures[1:]:
        if m.space.outcomes != space.outcomes:
            raise BadCoefficients("measures must share a sample space")
    for z in coeffs:
        if not in_zone(z):
            raise BadCoefficients(f"coefficient {z} outside the admissible zone")
    total = sum(coeffs, ZERO)
    if abs(total.re - 1.0) > MEASURE_TOL or abs(total.ph) > MEASURE_TOL:
        raise BadCoefficients(f"coefficients sum to {total}, expected (1, 0)")
    weights = {
        o: sum((z * m.weights[o] for z, m in zip(coeffs, measures)), ZERO)
        for o in space.outcomes
    }
    mode = (
        Mode.STRICT
        if all(m.mode is Mode.STRICT for m in measures)
        else Mode.LENIENT
    )
    return PhantomMeasure(space, weights, mode)


@dataclass(frozen=True)
class RealSelection:
    """Interpolation coordinates u in [0,1] per outcome: weight re + u*ph."""

    u: Mapping[str, float]

    def __post_init__(self):
        u = {k: float(v) for k, v in self.u.items()}
        for k, v in u.items():
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"selection coordinate for {k!r} outside [0, 1]")
        object.__setattr__(self, "u", u)

    @classmethod
    def constant(cls, space: SampleSpace, u: float) -> "RealSelection":
        return cls({o: u for o in space.outcomes})


@dataclass(frozen=True)
class SelectedMeasure:
    probabilities: Mapping[str, float]
    renormalization: float  # raw total before rescaling to sum 1


def select_real(m: PhantomMeasure, sel: RealSelection) -> SelectedMeasure:
    """Pick a real probability from each weight's interval and renormalize.

    u = 0 everywhere recovers the real-part measure; u = 1 recovers the
    reduced measure.  Non-constant u can break additivity, so the raw vector
    is rescaled by its total, which is reported alongside.
    """
    raw = {}
    for o in m.space.outcomes:
        w = m.weight(o)
        u = sel.u.get(o, 0.0)
        raw[o] = w.re + u * w.ph
    total = sum(raw.values())
    if total <= 0:
        raise InvalidMeasure(f"selected vector has nonpositive total {total}")
    return SelectedMeasure({o: v / total for o, v in raw.items()}, total)
