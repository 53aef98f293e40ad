"""Structured outcome spaces: named products of finite variables.

An identification scenario lives on a product like
``culprit x selected x trait_1 ... trait_n``. This module builds the flat
frame behind such a product (mixed-radix indexing, first variable most
significant) and turns variable predicates into events. The indirect
predicate "the trait variable selected by variable V equals v" covers
hypotheses that point through one coordinate at another.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import EventSet, Frame
from .errors import (
    DuplicateVariableName,
    FrameTooLarge,
    UnknownValue,
    UnknownVariable,
)

# Enumeration beyond ~1M outcomes stops being "seconds"; reject early.
MAX_FRAME_SIZE = 2**20


@dataclass(frozen=True)
class Variable:
    """One coordinate of a product frame: a name and a finite value range."""

    name: str
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"variable {self.name!r} needs size >= 1")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise ValueError(f"variable {self.name!r}: label count != size")

    def resolve(self, value) -> int:
        """Map a value (index or label) to its index."""
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise UnknownValue(f"variable {self.name!r}: unsupported value {value!r}")
        if isinstance(value, str):
            if self.labels is None or value not in self.labels:
                raise UnknownValue(f"variable {self.name!r} has no value {value!r}")
            return self.labels.index(value)
        if not 0 <= value < self.size:
            raise UnknownValue(
                f"variable {self.name!r}: index {value} outside [0, {self.size})"
            )
        return value


def binary(name: str) -> Variable:
    return Variable(name, 2, ("0", "1"))


# -- predicates ---------------------------------------------------------


@dataclass(frozen=True)
class Equals:
    variable: str
    value: int | str


@dataclass(frozen=True)
class In:
    variable: str
    values: tuple


@dataclass(frozen=True)
class IndirectEquals:
    """The family variable picked out by the pointer's value equals `value`.

    Family variables are named ``f"{family_prefix}{k}"`` for the pointer's
    k-th value (1-based), so a pointer over individuals 1..n selects among
    trait variables T1..Tn.
    """

    pointer: str
    family_prefix: str
    value: int | str


@dataclass(frozen=True)
class And:
    parts: tuple

    def __init__(self, *parts):
        # accept And(p, q, ...) as well as And([p, q])
        if len(parts) == 1 and isinstance(parts[0], (list, tuple)):
            parts = tuple(parts[0])
        object.__setattr__(self, "parts", parts)


Predicate = Equals | In | IndirectEquals | And


@dataclass(frozen=True)
class ProductFrame:
    """A frame structured as a named product of variables."""

    variables: tuple[Variable, ...]
    frame: Frame = field(init=False, compare=False)
    _strides: tuple[int, ...] = field(init=False, compare=False, repr=False)
    _index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise DuplicateVariableName(f"duplicate variable names in {names}")
        size = 1
        for v in self.variables:
            size *= v.size
        strides = []
        acc = 1
        for v in reversed(self.variables):
            strides.append(acc)
            acc *= v.size
        object.__setattr__(self, "_strides", tuple(reversed(strides)))
        object.__setattr__(self, "frame", Frame(size))
        object.__setattr__(self, "_index", {v.name: i for i, v in enumerate(self.variables)})

    @property
    def size(self) -> int:
        return self.frame.size

    @property
    def strides(self) -> tuple[int, ...]:
        """Index step per variable (first variable most significant)."""
        return self._strides

    def variable(self, name: str) -> Variable:
        try:
            return self.variables[self._index[name]]
        except KeyError:
            raise UnknownVariable(f"no variable named {name!r}") from None

    def position(self, name: str) -> int:
        if name not in self._index:
            raise UnknownVariable(f"no variable named {name!r}")
        return self._index[name]

    def encode(self, assignment: Sequence[int]) -> int:
        """Flat index of a full assignment (one value index per variable)."""
        return sum(v * s for v, s in zip(assignment, self._strides))

    def decode(self, index: int) -> tuple[int, ...]:
        values = []
        for stride in self._strides:
            q, index = divmod(index, stride)
            values.append(q)
        return tuple(values)

    def describe(self, index: int) -> str:
        parts = []
        for var, value in zip(self.variables, self.decode(index)):
            label = var.labels[value] if var.labels else str(value)
            parts.append(f"{var.name}={label}")
        return " ".join(parts)

    # -- predicate evaluation -------------------------------------------

    def event(self, pred: Predicate) -> EventSet:
        """All outcomes satisfying the predicate.

        Direct constraints factor per variable, so only the satisfying
        sub-product is enumerated; indirect constraints filter the
        candidate assignments one by one.
        """
        allowed: list[list[int]] = [list(range(v.size)) for v in self.variables]
        indirect: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []
        for atom in self._flatten(pred):
            if isinstance(atom, Equals):
                var = self.variable(atom.variable)
                pos = self.position(atom.variable)
                keep = {var.resolve(atom.value)}
                allowed[pos] = [v for v in allowed[pos] if v in keep]
            elif isinstance(atom, In):
                var = self.variable(atom.variable)
                pos = self.position(atom.variable)
                keep = {var.resolve(v) for v in atom.values}
                allowed[pos] = [v for v in allowed[pos] if v in keep]
            elif isinstance(atom, IndirectEquals):
                indirect.append(self._resolve_indirect(atom))
            else:
                raise UnknownVariable(f"unsupported predicate {atom!r}")
        members = set()
        for combo in itertools.product(*allowed):
            ok = True
            for ptr_pos, family_pos, targets in indirect:
                fam = family_pos[combo[ptr_pos]]
                if combo[fam] != targets[combo[ptr_pos]]:
                    ok = False
                    break
            if ok:
                members.add(self.encode(combo))
        return EventSet(self.frame, frozenset(members))

    def _flatten(self, pred: Predicate):
        if isinstance(pred, And):
            for part in pred.parts:
                yield from self._flatten(part)
        else:
            yield pred

    def _resolve_indirect(self, atom: IndirectEquals):
        pointer = self.variable(atom.pointer)
        ptr_pos = self.position(atom.pointer)
        family_pos = []
        targets = []
        for k in range(pointer.size):
            name = f"{atom.family_prefix}{k + 1}"
            if name not in self._index:
                raise UnknownVariable(
                    f"indirect predicate needs variable {name!r} for pointer value {k}"
                )
            family_pos.append(self._index[name])
            targets.append(self.variable(name).resolve(atom.value))
        return ptr_pos, tuple(family_pos), tuple(targets)


def build_product_frame(variables: Iterable[Variable]) -> ProductFrame:
    """Validate sizes and construct the product frame."""
    variables = tuple(variables)
    if not variables:
        raise ValueError("a product frame needs at least one variable")
    size = 1
    for v in variables:
        size *= v.size
    if size > MAX_FRAME_SIZE:
        raise FrameTooLarge(f"frame of {size} outcomes exceeds the {MAX_FRAME_SIZE} bound")
    return ProductFrame(variables)
