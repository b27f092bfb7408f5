"""Toggle operations and the insertion bijection between fillings.

The map sends nonnegative fillings to order-reversing fillings by
inserting elements along a descending linear extension: the new element
is labeled with the negated input value, then every present element of
its diagonal is toggled.  A toggle replaces a label by
``max(labels of covering elements) + min(labels of covered elements) - label``,
with missing neighbors contributing 0.  All arithmetic is exact; the core
runs on integers after clearing denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, Mapping, Sequence

from .analysis import PosetAnalysis, analyze
from .diagonals import DiagonalPartition
from .dstructure import DInterval
from .poset import Poset, is_descending_extension

Filling = tuple[Fraction, ...]


class NonGenericPoint(RuntimeError):
    """A tie in a toggle selection prevented local-linearity detection."""


def normalize_filling(n: int, values, require_nonnegative: bool = False) -> Filling:
    """Coerce a sequence or mapping of exact values to a tuple of Fractions."""
    if isinstance(values, Mapping):
        missing = [i for i in range(n) if i not in values]
        if missing:
            raise ValueError(f"filling is missing elements {missing}")
        seq = [values[i] for i in range(n)]
    else:
        seq = list(values)
        if len(seq) != n:
            raise ValueError(f"filling has {len(seq)} values for {n} elements")
    out = []
    for v in seq:
        if isinstance(v, float):
            raise TypeError("fillings are exact: pass int or Fraction, not float")
        out.append(Fraction(v))
    if require_nonnegative and any(v < 0 for v in out):
        bad = next(i for i, v in enumerate(out) if v < 0)
        raise ValueError(f"filling must be nonnegative; element {bad} has value {out[bad]}")
    return tuple(out)


def is_order_reversing(P: Poset, s: Sequence[Fraction]) -> bool:
    """True iff labels weakly decrease going up the order."""
    return all(s[a] >= s[b] for a, b in P.covers)


def toggle(P: Poset, state: Mapping[int, Fraction], p: int) -> dict[int, Fraction]:
    """Toggle the label of p against its present neighbors.

    ``state`` may label only part of the poset; absent neighbors read as
    zero.  Returns a new mapping; toggling twice restores the input.
    """
    if p not in state:
        raise ValueError(f"element {p} carries no label")
    above = [state[u] for u in P.upper_covers(p) if u in state]
    below = [state[v] for v in P.lower_covers(p) if v in state]
    sx = max(above) if above else Fraction(0)
    sy = min(below) if below else Fraction(0)
    out = dict(state)
    out[p] = sx + sy - state[p]
    return out


def _validated_order(P: Poset, order, analysis: PosetAnalysis) -> tuple[int, ...]:
    if order is None:
        return analysis.stable_order
    order = tuple(order)
    if not is_descending_extension(P, order):
        raise ValueError("insertion order must be a descending linear extension")
    return order


def _scale(values: Filling) -> tuple[list[int], int]:
    denom = math.lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * denom) for v in values], denom


def _insertion_core(
    P: Poset,
    part: DiagonalPartition,
    order: tuple[int, ...],
    scaled: list[int],
    trace: list[tuple[int, int, int]] | None = None,
    gaps: list[int] | None = None,
) -> dict[int, int]:
    """Run the insertion on integer-scaled labels.

    When ``trace`` is given, the argmax/argmin choice of every toggle is
    appended to it as (element, chosen upper, chosen lower), -1 for
    absent.  When ``gaps`` is given, the absolute difference between each
    later selection candidate and the running best is appended; a zero
    there means the point sits on a cell boundary.
    """
    upper, lower = P._upper, P._lower
    classes = part.classes
    diagonal_of = part.diagonal_of
    state: dict[int, int] = {}
    for c in order:
        state[c] = -scaled[c]
        for e in sorted(x for x in classes[diagonal_of[c]] if x in state):
            cx = cy = -1
            sx = sy = 0
            best: int | None = None
            for u in upper[e]:
                if u in state:
                    val = state[u]
                    if best is None:
                        best, cx = val, u
                    else:
                        if gaps is not None:
                            gaps.append(abs(val - best))
                        if val > best:
                            best, cx = val, u
            if best is not None:
                sx = best
            best = None
            for v in lower[e]:
                if v in state:
                    val = state[v]
                    if best is None:
                        best, cy = val, v
                    else:
                        if gaps is not None:
                            gaps.append(abs(val - best))
                        if val < best:
                            best, cy = val, v
            if best is not None:
                sy = best
            if trace is not None:
                trace.append((e, cx, cy))
            state[e] = sx + sy - state[e]
    return state


def rsk(
    P: Poset,
    filling,
    order: Iterable[int] | None = None,
    *,
    analysis: PosetAnalysis | None = None,
) -> Filling:
    """Image of a nonnegative filling under the insertion bijection.

    The result is order-reversing and independent of the insertion order;
    when none is given a stable insertion order is used.
    """
    a = analysis or analyze(P)
    a.ensure_d_complete()
    t = normalize_filling(P.n, filling, require_nonnegative=True)
    seq = _validated_order(P, order, a)
    scaled, denom = _scale(t)
    state = _insertion_core(P, a.diagonals, seq, scaled)
    return tuple(Fraction(state[i], denom) for i in range(P.n))


def inverse_rsk(
    P: Poset,
    labels,
    order: Iterable[int] | None = None,
    *,
    analysis: PosetAnalysis | None = None,
) -> Filling:
    """Recover the input filling from an order-reversing image.

    Runs the insertion steps backwards; toggles are involutions, so
    undoing the toggles of each step exposes the negated inserted value.
    """
    a = analysis or analyze(P)
    a.ensure_d_complete()
    s = normalize_filling(P.n, labels)
    if any(v < 0 for v in s):
        raise ValueError("image filling must be nonnegative")
    if not is_order_reversing(P, s):
        raise ValueError("image filling must be order-reversing")
    seq = _validated_order(P, order, a)
    scaled, denom = _scale(s)

    upper, lower = P._upper, P._lower
    classes = a.diagonals.classes
    diagonal_of = a.diagonals.diagonal_of
    state = {i: scaled[i] for i in range(P.n)}
    out = [Fraction(0)] * P.n
    for c in reversed(seq):
        for e in sorted(x for x in classes[diagonal_of[c]] if x in state):
            above = [state[u] for u in upper[e] if u in state]
            below = [state[v] for v in lower[e] if v in state]
            sx = max(above) if above else 0
            sy = min(below) if below else 0
            state[e] = sx + sy - state[e]
        out[c] = Fraction(-state.pop(c), denom)
    return tuple(out)


def diagonal_sums(P: Poset, part: DiagonalPartition, s: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Per-diagonal sums of a filling's labels."""
    return tuple(sum((Fraction(s[p]) for p in members), Fraction(0)) for members in part.classes)


def random_filling(n: int, rng: Random) -> Filling:
    """Positive rationals with numerators and denominators in 1..16."""
    return tuple(Fraction(rng.randint(1, 16), rng.randint(1, 16)) for _ in range(n))


# -- stable insertion orders ----------------------------------------------


def is_stable(
    P: Poset,
    order: Sequence[int],
    intervals: tuple[DInterval, ...] | None = None,
    *,
    analysis: PosetAnalysis | None = None,
) -> bool:
    """Stability of a descending linear extension.

    Inserting the bottom of a d-interval is forbidden while a side of that
    interval is a neck element of another d-interval already completed.
    A d-interval is completed exactly when its bottom has been inserted,
    since everything else in it dominates the bottom.
    """
    order = tuple(order)
    if not is_descending_extension(P, order):
        raise ValueError("order must be a descending linear extension")
    if intervals is None:
        if analysis is not None:
            intervals = analysis.d_intervals
        else:
            from .dstructure import find_d_intervals

            intervals = find_d_intervals(P)
    by_bottom: dict[int, list[DInterval]] = {}
    for interval in intervals:
        by_bottom.setdefault(interval.bottom, []).append(interval)
    present: list[DInterval] = []
    for p in order:
        fresh = by_bottom.get(p, [])
        present.extend(fresh)
        for interval in fresh:
            for side in interval.sides:
                for other in present:
                    if other is not interval and side in other.neck:
                        return False
    return True


def stable_insertion_order(P: Poset, *, analysis: PosetAnalysis | None = None) -> tuple[int, ...]:
    """Construct a stable insertion order for a d-complete poset.

    Working from the last insertion backwards: strip a minimal element
    lying in no d-interval when one exists; otherwise strip the bottom of
    a maximal d-interval whose diamond top is minimal among those of all
    maximal d-intervals.  The result is verified against the stability
    predicate before being returned.
    """
    a = analysis or analyze(P)
    a.ensure_d_complete()
    intervals = [(iv, iv.member_mask) for iv in a.d_intervals]
    remaining = (1 << P.n) - 1
    reversed_order: list[int] = []
    while remaining:
        present = [(iv, m) for iv, m in intervals if m & remaining == m]
        covered = 0
        for _, m in present:
            covered |= m
        free = [p for p in P.minimal_in_mask(remaining) if not (covered >> p) & 1]
        if free:
            c = min(free)
        else:
            maximal = [
                (iv, m)
                for iv, m in present
                if not any(m2 != m and m | m2 == m2 for _, m2 in present)
            ]
            tops = [iv.diamond_top for iv, _ in maximal]
            lowest = [
                iv
                for iv, _ in maximal
                if not any(t != iv.diamond_top and P.lt(t, iv.diamond_top) for t in tops)
            ]
            chosen = min(lowest, key=lambda iv: (iv.diamond_top, iv.bottom))
            c = chosen.bottom
            if P._dn[c] & remaining != 1 << c:
                raise RuntimeError("stable-order construction picked a non-minimal element")
        reversed_order.append(c)
        remaining ^= 1 << c
    order = tuple(reversed(reversed_order))
    if not is_stable(P, order, a.d_intervals):
        raise RuntimeError("constructed insertion order failed the stability predicate")
    return order


def random_descending_extension(P: Poset, rng: Random) -> tuple[int, ...]:
    """A linear extension sampled by repeatedly picking a random maximal element."""
    remaining = (1 << P.n) - 1
    out = []
    while remaining:
        out.append(rng.choice(P.maximal_in_mask(remaining)))
        remaining ^= 1 << out[-1]
    return tuple(out)


# -- volume preservation ---------------------------------------------------


def rsk_jacobian_det(
    P: Poset,
    filling,
    order: Iterable[int] | None = None,
    *,
    analysis: PosetAnalysis | None = None,
) -> Fraction:
    """Exact finite-difference Jacobian determinant of the insertion map.

    The map is piecewise linear; within one linearity cell the finite
    difference equals the cell's linear map exactly.  The base run records
    every argmax/argmin choice; the perturbation is shrunk until all n
    perturbed runs make identical choices.  Ties at the base point raise
    :class:`NonGenericPoint`.
    """
    a = analysis or analyze(P)
    a.ensure_d_complete()
    t = normalize_filling(P.n, filling, require_nonnegative=True)
    seq = _validated_order(P, order, a)
    part = a.diagonals
    n = P.n

    scaled, denom = _scale(t)
    base_trace: list[tuple[int, int, int]] = []
    gaps: list[int] = []
    base_state = _insertion_core(P, part, seq, scaled, base_trace, gaps)
    if any(g == 0 for g in gaps):
        raise NonGenericPoint("tie between toggle candidates at the base point")
    min_gap = Fraction(min(gaps), denom) if gaps else Fraction(1)

    eps = min_gap / 2**20
    for _ in range(4):
        columns: list[list[Fraction]] = []
        ok = True
        for j in range(n):
            shifted = list(t)
            shifted[j] += eps
            svals, sden = _scale(tuple(shifted))
            trace: list[tuple[int, int, int]] = []
            state = _insertion_core(P, part, seq, svals, trace)
            if trace != base_trace:
                ok = False
                break
            columns.append(
                [
                    (Fraction(state[i], sden) - Fraction(base_state[i], denom)) / eps
                    for i in range(n)
                ]
            )
        if ok:
            matrix = [[columns[j][i] for j in range(n)] for i in range(n)]
            return _det(matrix)
        eps /= 2**10
    raise NonGenericPoint("could not confine the perturbation to one linearity cell")


def _det(matrix: list[list[Fraction]]) -> Fraction:
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


# -- randomized oracle ------------------------------------------------------


@dataclass(frozen=True)
class OracleFailure:
    trial: int
    check: str
    detail: tuple


@dataclass(frozen=True)
class RskOracleReport:
    trials: int
    ok: bool
    failures: tuple[OracleFailure, ...]


def _missing_lower_events(P: Poset, part: DiagonalPartition, order: Sequence[int]):
    """Toggles of an already-present element with no present lower cover.

    Presence is determined by the insertion order alone.  On d-complete
    input this list should be empty: the only toggle lacking a lower
    neighbor is the one at the freshly inserted element.
    """
    events = []
    present: set[int] = set()
    for c in order:
        present.add(c)
        for e in part.classes[part.diagonal_of[c]] & present:
            if e == c:
                continue
            if not any(v in present for v in P.lower_covers(e)):
                events.append((c, e))
    return events


def rsk_oracles(
    P: Poset,
    trials: int = 100,
    seed: int = 0,
    *,
    analysis: PosetAnalysis | None = None,
) -> RskOracleReport:
    """Randomized consistency checks of the insertion map.

    Per trial filling: the image is identical under two independently
    sampled insertion orders; the image is order-reversing; each diagonal
    sum equals the hook-weighted sum of the input.  Additionally, for each
    minimal element c, removing c relates the diagonal sums of the smaller
    and larger posets through the diagonals adjacent to D(c), and a few
    random orders are scanned for toggles that would read a missing lower
    neighbor anywhere but at the fresh element.
    """
    a = analysis or analyze(P)
    a.ensure_d_complete()
    rng = Random(seed)
    part = a.diagonals
    hooks = a.hook_vectors
    failures: list[OracleFailure] = []

    for k in range(3):
        order = random_descending_extension(P, rng)
        events = _missing_lower_events(P, part, order)
        if events:
            failures.append(OracleFailure(-1, "missing-lower-neighbor", (order, tuple(events))))

    removals = []
    for c in P.minimal_elements():
        keep = [v for v in range(P.n) if v != c]
        sub, old_ids = P.restrict(keep)
        removals.append((c, sub, analyze(sub), old_ids))

    recur_trials = min(trials, 20)
    for trial in range(trials):
        t = random_filling(P.n, rng)
        s1 = rsk(P, t, random_descending_extension(P, rng), analysis=a)
        s2 = rsk(P, t, random_descending_extension(P, rng), analysis=a)
        if s1 != s2:
            failures.append(OracleFailure(trial, "order-independence", (t, s1, s2)))
        if not is_order_reversing(P, s1):
            failures.append(OracleFailure(trial, "order-reversing", (t, s1)))
        sums = diagonal_sums(P, part, s1)
        for d in range(part.count):
            expected = sum((Fraction(hooks[p][d]) * t[p] for p in range(P.n)), Fraction(0))
            if sums[d] != expected:
                failures.append(OracleFailure(trial, "diagonal-sum", (d, sums[d], expected)))
        if trial < recur_trials:
            for c, sub, sub_a, old_ids in removals:
                sub_t = tuple(t[o] for o in old_ids)
                sub_s = rsk(sub, sub_t, analysis=sub_a)
                label = {o: sub_s[new] for new, o in enumerate(old_ids)}
                dc = part.diagonal_of[c]
                s_small = sum((label[p] for p in part.classes[dc] if p != c), Fraction(0))
                s_big = sum((s1[p] for p in part.classes[dc]), Fraction(0))
                rhs = t[c] + sum(
                    (
                        sum((label[p] for p in part.classes[d] if p != c), Fraction(0))
                        for d in part.neighbors(dc)
                    ),
                    Fraction(0),
                )
                if s_small + s_big != rhs:
                    failures.append(
                        OracleFailure(trial, "removal-recurrence", (c, s_small + s_big, rhs))
                    )
    return RskOracleReport(trials=trials, ok=not failures, failures=tuple(failures))
