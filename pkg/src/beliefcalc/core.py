"""Core belief-function calculus over finite frames.

A mass function assigns exact rational support to nonempty subsets of a
finite outcome space, summing to 1. Belief in an event is the total mass
of subsets contained in it; plausibility is the mass not contradicting it.
Updating on an event H moves each focal set's mass to its intersection
with H, drops empty intersections, and renormalizes.

Everything here is immutable and exact: construction rejects floats, and
normalization is checked by rational equality, not tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    ConditioningImpossible,
    EmptyFocalSet,
    FrameMismatch,
    MassNotNormalized,
    NegativeMass,
)
from .rationals import require_exact

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Frame:
    """A finite outcome space, optionally with distinct outcome labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"frame size must be >= 1, got {self.size}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise ValueError(
                    f"{len(self.labels)} labels for a frame of size {self.size}"
                )
            if len(set(self.labels)) != self.size:
                raise ValueError("outcome labels must be pairwise distinct")

    def outcomes(self) -> range:
        return range(self.size)

    def label_of(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        return str(index)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise KeyError(f"frame has no labels, cannot resolve {label!r}")
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown outcome label {label!r}") from None

    def event(self, members: Iterable[int]) -> EventSet:
        return EventSet(self, frozenset(members))

    def event_of_labels(self, labels: Iterable[str]) -> EventSet:
        return self.event(self.index_of(l) for l in labels)

    def full(self) -> EventSet:
        return self.event(self.outcomes())

    def empty(self) -> EventSet:
        return self.event(())

    def singleton(self, index: int) -> EventSet:
        return self.event((index,))


@dataclass(frozen=True)
class EventSet:
    """A subset of a frame, canonically a frozenset of outcome indices.

    Two events over equal frames compare equal iff their member sets do.
    Set algebra (``&``, ``|``, ``-``, ``<=``) stays within one frame and
    raises FrameMismatch otherwise.
    """

    frame: Frame
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for i in self.members:
            if not 0 <= i < self.frame.size:
                raise FrameMismatch(
                    f"outcome index {i} outside frame of size {self.frame.size}"
                )

    def _check(self, other: EventSet) -> None:
        if self.frame != other.frame:
            raise FrameMismatch("events belong to different frames")

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __and__(self, other: EventSet) -> EventSet:
        self._check(other)
        return EventSet(self.frame, self.members & other.members)

    def __or__(self, other: EventSet) -> EventSet:
        self._check(other)
        return EventSet(self.frame, self.members | other.members)

    def __sub__(self, other: EventSet) -> EventSet:
        self._check(other)
        return EventSet(self.frame, self.members - other.members)

    def __le__(self, other: EventSet) -> bool:
        self._check(other)
        return self.members <= other.members

    def complement(self) -> EventSet:
        return EventSet(self.frame, frozenset(self.frame.outcomes()) - self.members)

    def label_list(self) -> list[str]:
        return [self.frame.label_of(i) for i in sorted(self.members)]


class MassFunction:
    """A basic belief assignment: map from focal events to positive masses.

    Construction accepts an iterable of ``(event, mass)`` pairs (or a
    mapping); events may be EventSets or bare index iterables. Duplicate
    events accumulate. Zero-mass entries are dropped, so every stored
    focal set carries strictly positive mass, and the total must equal 1
    exactly.
    """

    __slots__ = ("frame", "_focal")

    def __init__(self, frame: Frame, entries):
        if isinstance(entries, Mapping):
            entries = entries.items()
        focal: dict[frozenset[int], Fraction] = {}
        total = ZERO
        for event, mass in entries:
            members = self._members_of(frame, event)
            require_exact("mass", mass)
            mass = Fraction(mass)
            if mass < 0:
                raise NegativeMass(f"mass {mass} for {sorted(members)} is negative")
            if not members:
                raise EmptyFocalSet("the empty set cannot carry mass")
            total += mass
            if mass == 0:
                continue
            focal[members] = focal.get(members, ZERO) + mass
        if total != 1:
            raise MassNotNormalized(f"masses sum to {total}, expected exactly 1")
        self.frame = frame
        self._focal = focal

    @staticmethod
    def _members_of(frame: Frame, event) -> frozenset[int]:
        if isinstance(event, EventSet):
            if event.frame != frame:
                raise FrameMismatch("focal event belongs to a different frame")
            return event.members
        members = frozenset(event)
        for i in members:
            if not 0 <= i < frame.size:
                raise FrameMismatch(f"outcome index {i} outside frame of size {frame.size}")
        return members

    @classmethod
    def vacuous(cls, frame: Frame) -> MassFunction:
        """Total ignorance: all mass on the full frame."""
        return cls(frame, [(frame.full(), ONE)])

    @classmethod
    def from_distribution(cls, frame: Frame, probs) -> MassFunction:
        """Embed a probability distribution: mass on singletons only."""
        probs = list(probs)
        if len(probs) != frame.size:
            raise MassNotNormalized(
                f"{len(probs)} probabilities for a frame of size {frame.size}"
            )
        for p in probs:
            require_exact("probability", p)
            if p < 0:
                raise NegativeMass(f"probability {p} is negative")
        if sum(Fraction(p) for p in probs) != 1:
            raise MassNotNormalized("probabilities must sum to exactly 1")
        entries = [((i,), Fraction(p)) for i, p in enumerate(probs) if p > 0]
        return cls(frame, entries)

    # -- inspection ----------------------------------------------------

    def __len__(self) -> int:
        return len(self._focal)

    @property
    def focal_count(self) -> int:
        return len(self._focal)

    def items(self) -> Iterator[tuple[EventSet, Fraction]]:
        """Focal sets and masses in a deterministic (sorted) order."""
        for members in sorted(self._focal, key=sorted):
            yield EventSet(self.frame, members), self._focal[members]

    def mass_of(self, event: EventSet) -> Fraction:
        return self._focal.get(self._members_of(self.frame, event), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._focal == other._focal

    def __hash__(self):
        return hash((self.frame, frozenset(self._focal.items())))

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{{{','.join(ev.label_list())}}}: {mass}" for ev, mass in self.items()
        )
        return f"MassFunction({parts})"

    # -- the calculus --------------------------------------------------

    def belief(self, event: EventSet) -> Fraction:
        """Total mass of focal sets contained in the event."""
        members = self._members_of(self.frame, event)
        return sum(
            (mass for focal, mass in self._focal.items() if focal <= members), ZERO
        )

    def plausibility(self, event: EventSet) -> Fraction:
        """1 - belief(complement): total mass of focal sets meeting the event."""
        members = self._members_of(self.frame, event)
        return sum(
            (mass for focal, mass in self._focal.items() if focal & members), ZERO
        )

    def is_bayesian(self) -> bool:
        """True iff every focal set is a singleton (a probability distribution)."""
        return all(len(focal) == 1 for focal in self._focal)

    def condition(self, event: EventSet) -> MassFunction:
        """Update on an event: intersect focal sets, drop misses, renormalize.

        Raises ConditioningImpossible when no focal set meets the event,
        i.e. when belief in the complement is 1.
        """
        members = self._members_of(self.frame, event)
        kept: dict[frozenset[int], Fraction] = {}
        retained = ZERO
        for focal, mass in self._focal.items():
            hit = focal & members
            if hit:
                kept[hit] = kept.get(hit, ZERO) + mass
                retained += mass
        if retained == 0:
            raise ConditioningImpossible(
                "conditioning event has zero plausibility (belief in its complement is 1)"
            )
        out = MassFunction.__new__(MassFunction)
        out.frame = self.frame
        out._focal = {focal: mass / retained for focal, mass in kept.items()}
        return out
