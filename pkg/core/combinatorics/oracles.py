"""
Brute-force searches used to check the fast predicates.

Nothing here calls the abacus, reduction or weyl modules: reflections are
recomputed from rho with Fractions and bead moves from raw position sets.
A search that reaches ``max_states`` raises SearchLimitExceeded instead of
returning a partial answer.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
import logging

from core.constants import DEFAULT_BFS_MAX_STATES
from core.exceptions import SearchLimitExceeded, UsageError

from .partitions import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SearchBounds:
    max_size: int
    max_index: int
    r_min: int
    r_max: int
    max_states: int = DEFAULT_BFS_MAX_STATES

    def __post_init__(self):
        if self.max_size < 0 or self.max_index < 2 or self.max_states < 1:
            raise UsageError(f"Search bounds must be finite and positive: {self}")
        if self.r_min > self.r_max:
            raise UsageError(f"Empty r range {self.r_min}..{self.r_max}")

    @property
    def r_range(self) -> range:
        return range(self.r_min, self.r_max + 1)

    def as_json(self) -> dict:
        return {
            "max_size": self.max_size,
            "max_index": self.max_index,
            "r_min": self.r_min,
            "r_max": self.r_max,
        }


def _bfs(start, neighbours, max_states: int, label: str) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for following in neighbours(state):
            if following in seen:
                continue
            seen.add(following)
            if len(seen) > max_states:
                raise SearchLimitExceeded(f"{label}: more than {max_states} states")
            queue.append(following)
    logger.debug(f"{label}: closed with {len(seen)} states")
    return seen


def orbit_bfs(lam: Partition, delta: int, p: int, bounds: SearchBounds) -> set[Partition]:
    """Partitions reached from lam by in-bounds reflections s_{e_i +- e_j, rp}."""
    n = max(bounds.max_index, lam.length)
    shift = [Fraction(-delta, 2) - k for k in range(n)]
    roots = []
    for j in range(1, n):
        for i in range(j):
            for sign in (1, -1):
                roots.append((i, j, sign))

    def neighbours(parts: tuple[int, ...]):
        x = [part + rho for part, rho in zip(parts, shift)]
        for i, j, sign in roots:
            pairing = x[i] + sign * x[j]
            for r in bounds.r_range:
                scale = pairing - r * p
                if not scale:
                    continue
                y = list(x)
                y[i] -= scale
                y[j] -= sign * scale
                image = [value - rho for value, rho in zip(y, shift)]
                if any(value.denominator != 1 or value < 0 for value in image):
                    continue
                if any(a < b for a, b in zip(image, image[1:])):
                    continue
                if sum(image) > bounds.max_size:
                    continue
                yield tuple(int(value) for value in image)

    start = lam.padded(n)
    found = _bfs(start, neighbours, bounds.max_states, f"orbit_bfs({lam})")
    return {Partition.from_parts(parts) for parts in found}


def move_bfs(lam: Partition, p: int, b: int, bounds: SearchBounds) -> set[frozenset[int]]:
    """
    Bead position sets reached from lam with b beads by a- and d-moves,
    keeping the encoded partition within ``max_size``.
    """
    if b < lam.length:
        raise UsageError(f"b={b} is smaller than the length of ({lam})")
    start = frozenset(lam.part(k) - k + b for k in range(1, b + 1))
    offset = b * (b - 1) // 2

    def neighbours(state: frozenset[int]):
        size = sum(state) - offset
        beads = sorted(state)
        for qi in beads:
            for qj in beads:
                if qi == qj:
                    continue
                rest = state - {qi, qj}
                # a-move: qi down, qj up
                for r in range(1, qj // p + 1):
                    down, up = qi + r * p, qj - r * p
                    if down != up and down not in rest and up not in rest:
                        yield rest | {down, up}
                if qi > qj:
                    continue
                # d-move over the arc; size grows by 2(rp - qi - qj)
                r = max(1, -(-qj // p))
                while 2 * (r * p - qi - qj) + size <= bounds.max_size:
                    left, right = r * p - qi, r * p - qj
                    if left not in rest and right not in rest:
                        yield rest | {left, right}
                    r += 1

    return _bfs(start, neighbours, bounds.max_states, f"move_bfs({lam}, p={p}, b={b})")


def naive_type_d_orbit(vector, n: int, bounds: SearchBounds | None = None) -> set[tuple]:
    """Closure of a vector under coordinate swaps and paired sign changes."""
    if n > 6:
        raise UsageError(f"naive_type_d_orbit is for n <= 6, got {n}")
    start = tuple(Fraction(value) for value in vector)
    if len(start) != n:
        raise UsageError(f"Expected a vector of length {n}, got {len(start)}")
    max_states = bounds.max_states if bounds is not None else DEFAULT_BFS_MAX_STATES

    def neighbours(x: tuple):
        for j in range(1, n):
            for i in range(j):
                swapped = list(x)
                swapped[i], swapped[j] = x[j], x[i]
                yield tuple(swapped)
                flipped = list(x)
                flipped[i], flipped[j] = -x[j], -x[i]
                yield tuple(flipped)

    return _bfs(start, neighbours, max_states, f"naive_type_d_orbit({start})")
