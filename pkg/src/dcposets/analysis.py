"""Cached per-poset analysis bundle.

Derived structure (d-intervals, diagonals, hook vectors, a stable
insertion order) is computed once per poset and reused across the many
evaluation points of the verification routines.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .diagonals import DiagonalPartition, compute_diagonals
from .dstructure import AxiomReport, DInterval, check_d_complete, find_d_intervals
from .hooks import HookVector, hook_lengths, hook_polynomial_eval, hook_vectors
from .poset import Poset


class PosetAnalysis:
    """Lazy cache of everything the verification layer derives from a poset."""

    def __init__(self, poset: Poset):
        self.poset = poset

    @cached_property
    def d_intervals(self) -> tuple[DInterval, ...]:
        return find_d_intervals(self.poset)

    @cached_property
    def axiom_report(self) -> AxiomReport:
        return check_d_complete(self.poset, self.d_intervals)

    @property
    def is_d_complete(self) -> bool:
        return self.axiom_report.is_d_complete

    def ensure_d_complete(self) -> None:
        report = self.axiom_report
        if not report.is_d_complete:
            first = report.violations[0]
            raise ValueError(
                f"poset is not d-complete: axiom {first.axiom} fails at {first.witness}"
            )

    @cached_property
    def interval_by_bottom(self) -> dict[int, DInterval]:
        out: dict[int, DInterval] = {}
        for interval in self.d_intervals:
            if interval.bottom in out:
                raise ValueError(
                    f"element {interval.bottom} bottoms several d-intervals; poset is not d-complete"
                )
            out[interval.bottom] = interval
        return out

    @cached_property
    def interval_by_top(self) -> dict[int, DInterval]:
        out: dict[int, DInterval] = {}
        for interval in self.d_intervals:
            if interval.top in out:
                raise ValueError(
                    f"element {interval.top} tops several d-intervals; poset is not d-complete"
                )
            out[interval.top] = interval
        return out

    @cached_property
    def up_map(self) -> tuple[int | None, ...]:
        by_bottom = self.interval_by_bottom
        return tuple(
            by_bottom[p].top if p in by_bottom else None for p in range(self.poset.n)
        )

    @cached_property
    def down_map(self) -> tuple[int | None, ...]:
        by_top = self.interval_by_top
        return tuple(
            by_top[p].bottom if p in by_top else None for p in range(self.poset.n)
        )

    @cached_property
    def diagonals(self) -> DiagonalPartition:
        return compute_diagonals(self.poset, self.d_intervals)

    @cached_property
    def hook_vectors(self) -> tuple[HookVector, ...]:
        return hook_vectors(self.poset, self.diagonals, self.d_intervals)

    @cached_property
    def hook_lengths(self) -> tuple[int, ...]:
        return hook_lengths(self.hook_vectors)

    @cached_property
    def stable_order(self) -> tuple[int, ...]:
        from .rsk import stable_insertion_order

        return stable_insertion_order(self.poset, analysis=self)

    def hook_polynomials(self, x) -> tuple[Fraction, ...]:
        """All hook polynomials H_p evaluated at the rational point x."""
        return tuple(hook_polynomial_eval(v, x) for v in self.hook_vectors)


def analyze(P: Poset) -> PosetAnalysis:
    return PosetAnalysis(P)
