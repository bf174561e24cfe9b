"""Finite optimization problems, guarantee pairs and brute-force optima."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .errors import GuaranteeOrderError, IdentifierError, ScaleError

#: Hard cap on |instances| x |solutions| for any enumerated problem.
DEFAULT_ENUM_LIMIT = 20_000_000


def enum_limit() -> int:
    return int(os.environ.get("EXTFORM_ENUM_LIMIT", DEFAULT_ENUM_LIMIT))


def check_scale(count: int, what: str, limit: int | None = None) -> None:
    limit = enum_limit() if limit is None else limit
    if count > limit:
        raise ScaleError(f"{what}: {count} exceeds enumeration limit {limit}")


class Sense(enum.Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"

    @property
    def is_max(self) -> bool:
        return self is Sense.MAXIMIZE

    def best(self, values: Iterable):
        return max(values) if self.is_max else min(values)


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """A finite optimization problem with enumerated solutions and instances.

    Solutions and instances are hashable payloads which double as their
    identifiers. ``row_fn`` may supply a whole value row at once; it must
    agree with ``value_fn``.
    """

    name: str
    solutions: tuple
    instances: tuple
    value_fn: Callable[[Any, Any], Any]
    sense: Sense
    size_fn: Callable[[Any], Any]
    row_fn: Callable[[Any], Sequence] | None = None
    meta: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.solutions or not self.instances:
            raise ValueError(f"{self.name}: solutions and instances must be non-empty")
        if len(set(self.solutions)) != len(self.solutions):
            raise ValueError(f"{self.name}: duplicate solutions")
        if len(set(self.instances)) != len(self.instances):
            raise ValueError(f"{self.name}: duplicate instances")

    @cached_property
    def solution_index(self) -> dict[Hashable, int]:
        return {s: i for i, s in enumerate(self.solutions)}

    @cached_property
    def instance_index(self) -> dict[Hashable, int]:
        return {f: i for i, f in enumerate(self.instances)}

    @cached_property
    def _rows(self) -> dict:
        return {}

    def sol_idx(self, s) -> int:
        try:
            return self.solution_index[s]
        except (KeyError, TypeError):
            raise IdentifierError(f"{self.name}: unknown solution {s!r}") from None

    def inst_idx(self, f) -> int:
        try:
            return self.instance_index[f]
        except (KeyError, TypeError):
            raise IdentifierError(f"{self.name}: unknown instance {f!r}") from None

    def value_row(self, f) -> list[Fraction]:
        """All values ``val_f(s)`` in solution order (cached)."""
        self.inst_idx(f)
        row = self._rows.get(f)
        if row is None:
            if self.row_fn is not None:
                row = [Fraction(v) for v in self.row_fn(f)]
            else:
                row = [Fraction(self.value_fn(f, s)) for s in self.solutions]
            self._rows[f] = row
        return row

    def size(self, f) -> Fraction:
        self.inst_idx(f)
        return Fraction(self.size_fn(f))

    def restrict(self, instances: Iterable, name: str | None = None) -> "ProblemSpec":
        """Subproblem on the given instances (order preserved, duplicates dropped)."""
        seen: dict = {}
        for f in instances:
            self.inst_idx(f)
            seen.setdefault(f, None)
        sub = ProblemSpec(
            name or self.name,
            self.solutions,
            tuple(seen),
            self.value_fn,
            self.sense,
            self.size_fn,
            self.row_fn,
            dict(self.meta),
        )
        for f in sub.instances:
            if f in self._rows:
                sub._rows[f] = self._rows[f]
        return sub


@dataclass(frozen=True)
class Guarantees:
    """Completeness ``C`` and soundness ``S`` per instance."""

    C: Mapping[Hashable, Fraction]
    S: Mapping[Hashable, Fraction]

    def check_order(self, sense: Sense) -> None:
        for f, c in self.C.items():
            s = self.S[f]
            if (sense.is_max and c < s) or (not sense.is_max and c > s):
                raise GuaranteeOrderError(
                    f"guarantee order violated at {f!r}: C={c}, S={s} ({sense.value})"
                )


def eval_value(p: ProblemSpec, f, s) -> Fraction:
    j = p.sol_idx(s)
    return p.value_row(f)[j]


def optimum_with_witness(p: ProblemSpec, f) -> tuple[Fraction, Any]:
    row = p.value_row(f)
    best_j = 0
    for j in range(1, len(row)):
        if (row[j] > row[best_j]) if p.sense.is_max else (row[j] < row[best_j]):
            best_j = j
    witness = p.solutions[best_j]
    # the witness is re-evaluated through the scalar oracle
    assert Fraction(p.value_fn(f, witness)) == row[best_j]
    return row[best_j], witness


def brute_force_optimum(p: ProblemSpec, f) -> Fraction:
    return optimum_with_witness(p, f)[0]


def exact_guarantees(p: ProblemSpec) -> Guarantees:
    """C = S = optimum for every instance."""
    opt = {f: brute_force_optimum(p, f) for f in p.instances}
    return Guarantees(dict(opt), dict(opt))


def proportional_guarantees(p: ProblemSpec, tau, sigma) -> Guarantees:
    tau, sigma = Fraction(tau), Fraction(sigma)
    g = Guarantees(
        {f: tau * p.size(f) for f in p.instances},
        {f: sigma * p.size(f) for f in p.instances},
    )
    g.check_order(p.sense)
    return g


def sound_instances(p: ProblemSpec, g: Guarantees) -> list:
    out = []
    for f in p.instances:
        opt = brute_force_optimum(p, f)
        if (opt <= g.S[f]) if p.sense.is_max else (opt >= g.S[f]):
            out.append(f)
    return out
