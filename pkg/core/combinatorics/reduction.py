"""
b-reduced abaci and the reduction algorithm.

A b-reduced abacus keeps all beads on runners 0..(p-1)/2, packed to the top,
except that the last bead of runner 0 may sit one space lower. Every abacus
with at least three beads on runner 0 reduces to exactly one such abacus by
a/d moves; two partitions share a limiting block iff their reductions agree.
"""

from dataclasses import replace
import logging

from core.constants import MIN_RUNNER_ZERO_BEADS
from core.exceptions import (
    DomainError,
    IllegalMoveError,
    InvariantViolation,
    ReductionPreconditionError,
)

from .abacus import (
    Abacus,
    MoveTrace,
    _d_at,
    _shift,
    from_partition,
    move_m1,
    move_m2,
    move_m3,
    move_m4,
    orbit_invariant,
    runner_counts,
)
from .partitions import Partition, require_odd_prime

logger = logging.getLogger(__name__)


def _packed(p: int, t: int, count: int) -> list[int]:
    return [t + k * p for k in range(count)]


def is_b_reduced(ab: Abacus) -> bool:
    half = (ab.p - 1) // 2
    counts = runner_counts(ab)
    if any(counts[t] for t in range(half + 1, ab.p)):
        return False
    for t in range(1, half + 1):
        if ab.beads_on(t) != _packed(ab.p, t, counts[t]):
            return False
    runner0 = ab.beads_on(0)
    if runner0 == _packed(ab.p, 0, counts[0]):
        return True
    return runner0 == _packed(ab.p, 0, counts[0] - 1) + [counts[0] * ab.p]


def reduction_target(lam: Partition, p: int, b: int) -> Abacus:
    """The unique b-reduced abacus with the orbit invariant of lam."""
    require_odd_prime(p)
    invariant = orbit_invariant(from_partition(lam, p, b))
    occupied = _packed(p, 0, invariant.runner0)
    for t, count in enumerate(invariant.paired, 1):
        occupied.extend(_packed(p, t, count))
    target = Abacus(p, b, frozenset(occupied))
    if target.size % 2 != invariant.parity:
        if not invariant.runner0:
            raise DomainError(
                f"No bead on runner 0 to fix the parity of ({lam}) with b={b}; increase b"
            )
        last = (invariant.runner0 - 1) * p
        target = replace(target, occupied=(target.occupied - {last}) | {last + p})
    return target


def required_b(lam: Partition, p: int, b: int) -> int:
    """Smallest b' = b + kp giving at least three beads on runner 0."""
    missing = MIN_RUNNER_ZERO_BEADS - runner_counts(from_partition(lam, p, b))[0]
    return b + max(0, missing) * p


def choose_b(lam: Partition, mu: Partition, delta: int, p: int) -> int:
    """
    Smallest b >= max(|lam|, |mu|) with 2b = 2 - delta (mod p), raised in
    steps of p until both abaci have three beads on runner 0.
    """
    return choose_b_for([lam, mu], delta, p)


def choose_b_for(partitions: list[Partition], delta: int, p: int) -> int:
    """choose_b for any number of partitions at once."""
    require_odd_prime(p)
    if delta % p == 0:
        raise DomainError(f"delta must be non-zero mod {p}, got {delta}")
    b = max([lam.size for lam in partitions] + [1])
    while (2 * b - 2 + delta) % p:
        b += 1
    return max(required_b(lam, p, b) for lam in partitions)


class _Reduction:
    """Runs the reduction steps, collecting every elementary move."""

    def __init__(self, start: Abacus):
        self.start = start
        self.current = start
        self.moves = []
        self.p = start.p
        self.half = (start.p - 1) // 2

    def record(self, result: tuple[Abacus, MoveTrace]):
        self.current, trace = result
        self.moves.extend(trace.moves)
        for move in trace.moves:
            logger.debug(f"reduction move {move}", extra={"move": move})

    def movable(self, ab: Abacus, runner: int | None = None) -> list[int]:
        """Beads with a free space directly above, top first."""
        return sorted(
            q
            for q in ab.occupied
            if q >= self.p
            and q - self.p not in ab.occupied
            and (runner is None or q % self.p == runner)
        )

    def raise_pair(self, first: int, second: int):
        """M3 on two positions; ``second`` may be first - p (same bead twice)."""
        ab = self.current
        i = ab.label(first)
        j = i if second == first - self.p else ab.label(second)
        helpers = [0] + [t for t in range(1, self.p) if len(ab.beads_on(t)) >= 2]
        for helper in helpers:
            try:
                self.record(move_m3(ab, i, j, helper))
            except IllegalMoveError:
                continue
            return
        raise InvariantViolation(f"No helper runner can raise beads {i} and {j}")

    def pack(self, runner: int | None = None) -> int | None:
        """
        Raise beads in pairs until at most one space is left.
        Returns the position of the bead that still has a space above it.
        """
        while True:
            movable = self.movable(self.current, runner)
            if not movable:
                return None
            first = movable[0]
            after = _shift(self.current, {first: first - self.p})
            later = self.movable(after, runner)
            if not later:
                return first
            self.raise_pair(first, later[0])

    def last_on_zero(self) -> int:
        return self.current.beads_on(0)[-1]

    def settle_leftover(self, leftover: int | None):
        if leftover is None or leftover % self.p == 0:
            return
        ab = self.current
        self.record(move_m1(ab, up=ab.label(leftover), down=ab.label(self.last_on_zero())))

    def fold_right_runners(self):
        """Send beads of each right runner over the arc in adjacent pairs."""
        for right in range(self.p - 1, self.half, -1):
            while len(self.current.beads_on(right)) >= 2:
                ab = self.current
                beads = ab.beads_on(right)
                r = len(ab.beads_on(self.p - right)) + len(beads)
                self.record(move_m2(ab, ab.label(beads[-2]), ab.label(beads[-1]), r))

    def lower_pairs(self, left: int):
        """Move the beads of ``left`` down two spaces in pairs, from the bottom."""
        count = len(self.current.beads_on(left))
        for bottom in range(count - 1, 0, -2):
            for _ in range(2):
                ab = self.current
                beads = ab.beads_on(left)
                self.record(
                    move_m4(ab, ab.label(beads[bottom - 1]), ab.label(beads[bottom]), 0)
                )

    def bring_over(self, right: int):
        """d^2 on the second runner-0 bead and the single bead of ``right``."""
        ab = self.current
        result, move = _d_at(ab, self.p, right, 2)
        self.record((result, MoveTrace(ab, (move,))))

    def close_gap(self, left: int):
        leftover = self.pack(left)
        if leftover is None:
            return
        ab = self.current
        last = self.last_on_zero()
        if last >= self.p and ab.is_free(last - self.p):
            self.record(move_m3(ab, ab.label(leftover), ab.label(last), 0))
        else:
            self.record(move_m1(ab, up=ab.label(leftover), down=ab.label(last)))

    def run(self) -> MoveTrace:
        self.settle_leftover(self.pack())
        self.fold_right_runners()
        for right in range(self.p - 1, self.half, -1):
            if not self.current.beads_on(right):
                continue
            left = self.p - right
            self.lower_pairs(left)
            self.bring_over(right)
            self.close_gap(left)
        return MoveTrace(self.start, tuple(self.moves))


def reduce(lam: Partition, p: int, b: int) -> tuple[Abacus, MoveTrace]:
    """
    Reduce the abacus of lam with b beads by a/d moves.

    The end state is checked against reduction_target; a mismatch raises
    InvariantViolation instead of returning an unverified result.
    """
    require_odd_prime(p)
    start = from_partition(lam, p, b)
    runner0 = runner_counts(start)[0]
    if runner0 < MIN_RUNNER_ZERO_BEADS:
        needed = required_b(lam, p, b)
        raise ReductionPreconditionError(
            f"({lam}) has {runner0} beads on runner 0 with b={b}; "
            f"use b={needed} (increase by {needed - b})",
            required_b=needed,
        )
    target = reduction_target(lam, p, b)
    trace = _Reduction(start).run()
    if trace.end != target:
        raise InvariantViolation(
            f"Reduction of ({lam}) with p={p}, b={b} ended at {sorted(trace.end.occupied)}, "
            f"expected {sorted(target.occupied)}"
        )
    logger.debug(f"Reduced ({lam}) with p={p}, b={b} in {len(trace)} moves")
    return target, trace


def connecting_trace(lam: Partition, mu: Partition, delta: int, p: int) -> MoveTrace:
    """Moves from the abacus of lam to that of mu through their common reduction."""
    b = choose_b(lam, mu, delta, p)
    start, finish = from_partition(lam, p, b), from_partition(mu, p, b)
    if orbit_invariant(start) != orbit_invariant(finish):
        raise DomainError(f"({lam}) and ({mu}) are not in the same limiting block")
    _, forward = reduce(lam, p, b)
    _, backward = reduce(mu, p, b)
    return forward.then(backward.inverted())
