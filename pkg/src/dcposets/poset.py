"""Finite posets stored as Hasse diagrams with a cached order relation.

Elements are the dense integer ids ``0..n-1``.  Subsets are frozensets in
the public API; bitmask ints are used internally and exposed through the
``*_mask`` helpers for the modules that need them.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping


class CycleError(ValueError):
    """The input relations admit no partial order."""

    def __init__(self, cycle: Iterable[int]):
        self.cycle = tuple(cycle)
        chain = " < ".join(str(x) for x in self.cycle)
        super().__init__(f"cover relations contain a cycle: {chain}")


class ExtensionLimitError(RuntimeError):
    """Linear-extension work exceeded the configured cap."""


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


class Poset:
    """Immutable finite poset built from ``(lower, upper)`` cover pairs.

    The reflexive-transitive closure is computed eagerly; redundant input
    pairs are silently removed by transitive reduction.  A cycle in the
    input raises :class:`CycleError` naming a witness.
    """

    __slots__ = ("n", "names", "covers", "_up", "_dn", "_upper", "_lower")

    def __init__(
        self,
        n: int,
        pairs: Iterable[tuple[int, int]] = (),
        names: Mapping[int, str] | None = None,
    ):
        if n < 0:
            raise ValueError("element count must be nonnegative")
        edges: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover pair ({a}, {b}) references an element outside 0..{n - 1}")
            if a == b:
                raise CycleError((a, a))
            if (a, b) not in seen:
                seen.add((a, b))
                edges[a].append(b)

        order = _topological_order(n, edges)
        up = [0] * n
        for v in reversed(order):
            m = 1 << v
            for w in edges[v]:
                m |= up[w]
            up[v] = m
        dn = [0] * n
        for v in range(n):
            for w in bits(up[v]):
                dn[w] |= 1 << v

        covers = []
        for a in range(n):
            for b in bits(up[a] ^ (1 << a)):
                if up[a] & dn[b] == (1 << a) | (1 << b):
                    covers.append((a, b))

        self.n = n
        self._up = tuple(up)
        self._dn = tuple(dn)
        self.covers = frozenset(covers)
        upper: list[list[int]] = [[] for _ in range(n)]
        lower: list[list[int]] = [[] for _ in range(n)]
        for a, b in covers:
            upper[a].append(b)
            lower[b].append(a)
        self._upper = tuple(tuple(sorted(u)) for u in upper)
        self._lower = tuple(tuple(sorted(v)) for v in lower)
        self.names = dict(names) if names else {}
        for key in self.names:
            if not 0 <= key < n:
                raise ValueError(f"name given for unknown element {key}")

    # -- order queries ---------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.n)

    def leq(self, a: int, b: int) -> bool:
        return (self._up[a] >> b) & 1 == 1

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def incomparable(self, a: int, b: int) -> bool:
        return not self.leq(a, b) and not self.leq(b, a)

    def upper_covers(self, x: int) -> tuple[int, ...]:
        """Elements covering ``x``."""
        return self._upper[x]

    def lower_covers(self, x: int) -> tuple[int, ...]:
        """Elements covered by ``x``."""
        return self._lower[x]

    def upset_mask(self, x: int) -> int:
        return self._up[x]

    def downset_mask(self, x: int) -> int:
        return self._dn[x]

    def upset(self, x: int) -> frozenset[int]:
        return frozenset(bits(self._up[x]))

    def downset(self, x: int) -> frozenset[int]:
        return frozenset(bits(self._dn[x]))

    def interval_mask(self, p: int, q: int) -> int:
        if not self.leq(p, q):
            raise ValueError(f"interval [{p}, {q}] is empty: {p} is not below {q}")
        return self._up[p] & self._dn[q]

    def interval(self, p: int, q: int) -> frozenset[int]:
        """The set ``{x : p <= x <= q}``; requires ``p <= q``."""
        return frozenset(bits(self.interval_mask(p, q)))

    def is_convex_mask(self, m: int) -> bool:
        for a in bits(m):
            for b in bits(self._up[a] & m & ~(1 << a)):
                if (self._up[a] & self._dn[b]) & ~m:
                    return False
        return True

    def is_convex(self, members: Iterable[int]) -> bool:
        """True iff every interval between two members stays inside."""
        return self.is_convex_mask(mask_of(members))

    def minimal_in_mask(self, m: int) -> tuple[int, ...]:
        return tuple(v for v in bits(m) if self._dn[v] & m == 1 << v)

    def maximal_in_mask(self, m: int) -> tuple[int, ...]:
        return tuple(v for v in bits(m) if self._up[v] & m == 1 << v)

    def minimal_elements(self, members: Iterable[int] | None = None) -> tuple[int, ...]:
        m = (1 << self.n) - 1 if members is None else mask_of(members)
        return self.minimal_in_mask(m)

    def maximal_elements(self, members: Iterable[int] | None = None) -> tuple[int, ...]:
        m = (1 << self.n) - 1 if members is None else mask_of(members)
        return self.maximal_in_mask(m)

    # -- derived posets --------------------------------------------------

    def restrict(self, members: Iterable[int]) -> tuple["Poset", tuple[int, ...]]:
        """Induced subposet on ``members``.

        Returns the new poset together with the old ids listed by new id.
        """
        keep = sorted(set(members))
        index = {old: new for new, old in enumerate(keep)}
        pairs = [
            (index[a], index[b])
            for a in keep
            for b in keep
            if a != b and self.leq(a, b)
        ]
        names = {index[o]: nm for o, nm in self.names.items() if o in index}
        return Poset(len(keep), pairs, names), tuple(keep)

    # -- housekeeping ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.n, self.covers, tuple(sorted(self.names.items()))))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={sorted(self.covers)})"


def _topological_order(n: int, edges: list[list[int]]) -> list[int]:
    indeg = [0] * n
    for a in range(n):
        for b in edges[a]:
            indeg[b] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in edges[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) == n:
        return order
    leftover = set(range(n)) - set(order)
    preds: dict[int, list[int]] = {v: [] for v in leftover}
    for a in leftover:
        for b in edges[a]:
            if b in leftover:
                preds[b].append(a)
    v = min(leftover)
    path: list[int] = []
    pos: dict[int, int] = {}
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = preds[v][0]
    raise CycleError(tuple(reversed(path[pos[v]:])))


# -- linear extensions ---------------------------------------------------


def linear_extensions(P: Poset) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension exactly once, maximal element first.

    The enumeration is deterministic: at each step the smallest eligible
    id is tried first.
    """
    up = P._up
    seq: list[int] = []

    def rec(remaining: int) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(seq)
            return
        m = remaining
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if up[v] & remaining == low:
                seq.append(v)
                yield from rec(remaining ^ low)
                seq.pop()

    return rec((1 << P.n) - 1)


def count_linear_extensions(P: Poset, cap: int | None = None) -> int:
    """Exact number of linear extensions.

    Uses dynamic programming over order ideals for n <= 25 and falls back
    to the enumerator (bounded by ``cap``, default 10**6) above that.
    """
    if P.n <= 25:
        up = P._up
        memo = {0: 1}

        def count(mask: int) -> int:
            try:
                return memo[mask]
            except KeyError:
                pass
            total = 0
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if up[v] & mask == low:
                    total += count(mask ^ low)
            memo[mask] = total
            return total

        return count((1 << P.n) - 1)

    limit = 10**6 if cap is None else cap
    total = 0
    for _ in linear_extensions(P):
        total += 1
        if total > limit:
            raise ExtensionLimitError(
                f"poset has more than {limit} linear extensions; raise the cap to count it"
            )
    return total


def is_descending_extension(P: Poset, order: Iterable[int]) -> bool:
    """True iff ``order`` lists all elements with larger elements first."""
    seq = tuple(order)
    if sorted(seq) != list(range(P.n)):
        return False
    for i, a in enumerate(seq):
        for b in seq[i + 1 :]:
            if P.lt(a, b):
                return False
    return True


def order_ideal_masks(P: Poset) -> Iterator[int]:
    """All downset bitmasks, the empty set included."""
    seen = {0}
    stack = [0]
    dn = P._dn
    full = (1 << P.n) - 1
    while stack:
        m = stack.pop()
        yield m
        rest = full ^ m
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if dn[v] & ~m == low:
                m2 = m | low
                if m2 not in seen:
                    seen.add(m2)
                    stack.append(m2)


def upper_set_masks(P: Poset) -> Iterator[int]:
    """All upper-set bitmasks (complements of downsets), empty included."""
    full = (1 << P.n) - 1
    for ideal in order_ideal_masks(P):
        yield full ^ ideal


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    """Brute-force isomorphism test, intended for small posets only."""
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return False

    def signature(R: Poset, v: int) -> tuple[int, int, int, int]:
        return (
            bin(R._up[v]).count("1"),
            bin(R._dn[v]).count("1"),
            len(R._upper[v]),
            len(R._lower[v]),
        )

    sig_p = [signature(P, v) for v in range(P.n)]
    sig_q = [signature(Q, v) for v in range(Q.n)]
    if sorted(sig_p) != sorted(sig_q):
        return False

    mapping = [-1] * P.n
    used = [False] * Q.n

    def rec(i: int) -> bool:
        if i == P.n:
            return True
        for q in range(Q.n):
            if used[q] or sig_q[q] != sig_p[i]:
                continue
            ok = True
            for j in range(i):
                if P.leq(j, i) != Q.leq(mapping[j], q) or P.leq(i, j) != Q.leq(q, mapping[j]):
                    ok = False
                    break
            if ok:
                mapping[i] = q
                used[q] = True
                if rec(i + 1):
                    return True
                used[q] = False
                mapping[i] = -1
        return False

    return rec(0)
