"""
The p-runner abacus with b beads.

Positions are read row-major: position q sits on runner q mod p, row q // p.
Bead labels are position ranks (bead 1 is the largest occupied position) and
are recomputed after every move.

Moves are given by their endpoints only. Both beads of a move leave their
positions before the targets are checked, and the two targets must differ.
"""

from dataclasses import dataclass, field, replace
import logging

from core.constants import BEAD_GLYPH, GAP_GLYPH
from core.exceptions import DomainError, IllegalMoveError, InvariantViolation, UsageError
from core.models import MoveKindChoice

from .partitions import Partition, require_odd_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Abacus:
    p: int
    b: int
    occupied: frozenset[int]

    def __post_init__(self):
        require_odd_prime(self.p)
        occupied = frozenset(self.occupied)
        if self.b < 1:
            raise UsageError(f"An abacus needs at least one bead, got b={self.b}")
        if len(occupied) != self.b:
            raise UsageError(f"Expected {self.b} distinct positions, got {len(occupied)}")
        if any(q < 0 for q in occupied):
            raise UsageError(f"Positions must be non-negative: {sorted(occupied)}")
        object.__setattr__(self, "occupied", occupied)

    @property
    def positions(self) -> tuple[int, ...]:
        """Occupied positions, bead 1 first."""
        return tuple(sorted(self.occupied, reverse=True))

    @property
    def size(self) -> int:
        """Size of the partition the abacus encodes."""
        return sum(self.occupied) - self.b * (self.b - 1) // 2

    def position(self, label: int) -> int:
        if not 1 <= label <= self.b:
            raise UsageError(f"Bead label must be in 1..{self.b}, got {label}")
        return self.positions[label - 1]

    def label(self, q: int) -> int:
        if q not in self.occupied:
            raise UsageError(f"No bead at position {q}")
        return self.positions.index(q) + 1

    def runner(self, q: int) -> int:
        return q % self.p

    def row(self, q: int) -> int:
        return q // self.p

    def beads_on(self, runner: int) -> list[int]:
        """Positions on one runner, top to bottom."""
        return sorted(q for q in self.occupied if q % self.p == runner)

    def is_free(self, q: int) -> bool:
        return q >= 0 and q not in self.occupied

    def as_json(self) -> dict:
        return {"p": self.p, "b": self.b, "occupied": sorted(self.occupied)}


@dataclass(frozen=True, slots=True)
class Move:
    kind: MoveKindChoice
    i: int
    j: int
    r: int

    def as_json(self) -> dict:
        return {"kind": str(self.kind), "i": self.i, "j": self.j, "r": self.r}

    def __str__(self) -> str:
        return f"{self.kind.lower()}^{self.r}_({self.i},{self.j})"


@dataclass(frozen=True, slots=True)
class OrbitInvariant:
    runner0: int
    paired: tuple[int, ...]
    parity: int

    def as_json(self) -> dict:
        return {"runner0": self.runner0, "paired": list(self.paired), "parity": self.parity}


@dataclass(frozen=True)
class MoveTrace:
    """Moves applied in order to ``start``; snapshot k is the abacus move k acts on."""

    start: Abacus
    moves: tuple[Move, ...] = ()
    snapshots: tuple[Abacus, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        states = [self.start]
        for move in self.moves:
            states.append(apply_move(states[-1], move))
        object.__setattr__(self, "moves", tuple(self.moves))
        object.__setattr__(self, "snapshots", tuple(states))

    @property
    def end(self) -> Abacus:
        return self.snapshots[-1]

    def __len__(self) -> int:
        return len(self.moves)

    def replay(self) -> Abacus:
        """Apply the moves again from the start, checking every step."""
        current = self.start
        for move in self.moves:
            current = apply_move(current, move)
        return current

    def steps(self):
        """Yield (before, move, after) triples."""
        for k, move in enumerate(self.moves):
            yield self.snapshots[k], move, self.snapshots[k + 1]

    def then(self, other: "MoveTrace") -> "MoveTrace":
        if other.start != self.end:
            raise InvariantViolation("Traces do not chain: end and start differ")
        return MoveTrace(self.start, self.moves + other.moves)

    def inverted(self) -> "MoveTrace":
        """The reverse trace, taking the end abacus back to the start."""
        inverse = [invert_move(before, move, after) for before, move, after in self.steps()]
        return MoveTrace(self.end, tuple(reversed(inverse)))

    def as_json(self) -> list[dict]:
        return [move.as_json() for move in self.moves]


def beta_sequence(lam: Partition, b: int) -> tuple[int, ...]:
    if b < lam.length:
        raise DomainError(f"b={b} is smaller than the length {lam.length} of ({lam})")
    return tuple(lam.part(k) - k + b for k in range(1, b + 1))


def from_partition(lam: Partition, p: int, b: int) -> Abacus:
    return Abacus(p, b, frozenset(beta_sequence(lam, b)))


def from_positions(positions, p: int) -> Abacus:
    positions = frozenset(positions)
    return Abacus(p, len(positions), positions)


def to_partition(ab: Abacus) -> Partition:
    return Partition.from_parts(q + k - ab.b for k, q in enumerate(ab.positions, 1))


def runner_counts(ab: Abacus) -> tuple[int, ...]:
    counts = [0] * ab.p
    for q in ab.occupied:
        counts[q % ab.p] += 1
    return tuple(counts)


def orbit_invariant(ab: Abacus) -> OrbitInvariant:
    counts = runner_counts(ab)
    half = (ab.p - 1) // 2
    return OrbitInvariant(
        runner0=counts[0],
        paired=tuple(counts[t] + counts[ab.p - t] for t in range(1, half + 1)),
        parity=ab.size % 2,
    )


def weight(ab: Abacus) -> int:
    """Total number of spaces the beads can slide up."""
    total = 0
    for runner in range(ab.p):
        total += sum(ab.row(q) - k for k, q in enumerate(ab.beads_on(runner)))
    return total


def p_core_abacus(ab: Abacus) -> tuple[Partition, int]:
    """Slide every bead up as far as it goes and read off the core."""
    packed = frozenset(
        t + k * ab.p for t, count in enumerate(runner_counts(ab)) for k in range(count)
    )
    return to_partition(replace(ab, occupied=packed)), weight(ab)


def check_bead_congruence(b: int, delta: int, p: int) -> bool:
    require_odd_prime(p)
    return (2 * b - 2 + delta) % p == 0


def _shift(ab: Abacus, targets: dict[int, int]) -> Abacus:
    """Move the beads at the keys to the values simultaneously."""
    landing = list(targets.values())
    if len(set(landing)) != len(landing):
        raise IllegalMoveError(f"Two beads would land on the same position {landing}")
    if any(q < 0 for q in landing):
        raise IllegalMoveError(f"Move would leave the abacus: {landing}")
    remaining = ab.occupied - set(targets)
    blocked = sorted(q for q in landing if q in remaining)
    if blocked:
        raise IllegalMoveError(f"Positions {blocked} are occupied")
    return replace(ab, occupied=remaining | set(landing))


def _check_pair(ab: Abacus, i: int, j: int, r: int) -> tuple[int, int]:
    if i == j:
        raise UsageError(f"A move needs two different beads, got i=j={i}")
    if r < 1:
        raise UsageError(f"r must be positive, got {r}")
    return ab.position(i), ab.position(j)


def move_a(ab: Abacus, i: int, j: int, r: int) -> Abacus:
    """Slide bead i down r spaces and bead j up r spaces."""
    qi, qj = _check_pair(ab, i, j, r)
    return _shift(ab, {qi: qi + r * ab.p, qj: qj - r * ab.p})


def move_d(ab: Abacus, i: int, j: int, r: int) -> Abacus:
    """Send beads i and j over the arc: q goes to rp - q."""
    qi, qj = _check_pair(ab, i, j, r)
    return _shift(ab, {qi: r * ab.p - qi, qj: r * ab.p - qj})


def apply_move(ab: Abacus, move: Move) -> Abacus:
    if move.kind == MoveKindChoice.A:
        return move_a(ab, move.i, move.j, move.r)
    return move_d(ab, move.i, move.j, move.r)


def invert_move(before: Abacus, move: Move, after: Abacus) -> Move:
    """The move taking ``after`` back to ``before``."""
    qi, qj = before.position(move.i), before.position(move.j)
    rp = move.r * before.p
    if move.kind == MoveKindChoice.A:
        return Move(MoveKindChoice.A, after.label(qj - rp), after.label(qi + rp), move.r)
    return Move(MoveKindChoice.D, after.label(rp - qi), after.label(rp - qj), move.r)


def _a_at(ab: Abacus, down: int, up: int, r: int = 1) -> tuple[Abacus, Move]:
    move = Move(MoveKindChoice.A, ab.label(down), ab.label(up), r)
    result = move_a(ab, move.i, move.j, r)
    logger.debug(f"{move}: {down}->{down + r * ab.p}, {up}->{up - r * ab.p}", extra={"move": move})
    return result, move


def _d_at(ab: Abacus, qa: int, qb: int, r: int) -> tuple[Abacus, Move]:
    move = Move(MoveKindChoice.D, ab.label(qa), ab.label(qb), r)
    result = move_d(ab, move.i, move.j, r)
    rp = r * ab.p
    logger.debug(f"{move}: {qa}->{rp - qa}, {qb}->{rp - qb}", extra={"move": move})
    return result, move


def lift_pair(ab: Abacus, qa: int, qb: int) -> tuple[Abacus, list[Move]]:
    """
    Raise the beads at qa and qb one space each with d^r followed by d^(r-1),
    using the smallest r for which both moves are legal.
    """
    r_max = (max(ab.occupied) + max(qa, qb)) // ab.p + 3
    for r in range(2, r_max + 1):
        try:
            middle, first = _d_at(ab, qa, qb, r)
            lifted, second = _d_at(middle, r * ab.p - qa, r * ab.p - qb, r - 1)
        except IllegalMoveError:
            continue
        return lifted, [first, second]
    raise IllegalMoveError(f"Cannot raise the beads at {qa} and {qb} over the arc")


def move_m1(ab: Abacus, up: int, down: int) -> tuple[Abacus, MoveTrace]:
    """Bead ``up`` one space up, bead ``down`` one space down: a^1_(down, up)."""
    move = Move(MoveKindChoice.A, down, up, 1)
    result = move_a(ab, down, up, 1)
    return result, MoveTrace(ab, (move,))


def move_m2(ab: Abacus, i: int, j: int, r: int) -> tuple[Abacus, MoveTrace]:
    """Two consecutive beads of one runner sent together over the arc."""
    qi, qj = _check_pair(ab, i, j, r)
    if qi % ab.p != qj % ab.p:
        raise UsageError(f"Beads {i} and {j} are on different runners")
    runner = ab.beads_on(qi % ab.p)
    if abs(runner.index(qi) - runner.index(qj)) != 1:
        raise UsageError(f"Beads {i} and {j} are not consecutive on runner {qi % ab.p}")
    move = Move(MoveKindChoice.D, i, j, r)
    return move_d(ab, i, j, r), MoveTrace(ab, (move,))


def _helper_pair(ab: Abacus, helper_runner: int) -> tuple[int, int]:
    beads = ab.beads_on(helper_runner)
    if len(beads) < 2:
        raise UsageError(f"Runner {helper_runner} has fewer than two beads")
    return beads[-2], beads[-1]


def move_m3(ab: Abacus, i: int, j: int, helper_runner: int = 0) -> tuple[Abacus, MoveTrace]:
    """
    Move beads i and j one space up each (bead i two spaces when i = j).

    Expands to two M1 moves pushing i and j up and the last two beads x, y of
    the helper runner down, then d^r and d^(r-1) on x and y which put them
    back. When i or j is itself one of x, y the same four steps are used
    with the pairing and order of the M1 moves chosen so every step is legal.
    """
    qi, qj = ab.position(i), ab.position(j)
    upper, lower = _helper_pair(ab, helper_runner)
    p = ab.p
    if i == j:
        expected = (ab.occupied - {qi}) | {qi - 2 * p}
        orders = [(qi, qi)]
    else:
        expected = (ab.occupied - {qi, qj}) | {qi - p, qj - p}
        orders = [(qi, qj), (qj, qi)]

    for first, second in orders:
        for h_first, h_second in ((lower, upper), (upper, lower)):
            if h_first == first or h_second == second:
                continue
            where = {key: key for key in (qi, qj, upper, lower)}
            current, moves = ab, []
            try:
                for mover, helper in ((first, h_first), (second, h_second)):
                    current, move = _a_at(current, where[helper], where[mover])
                    where[helper] += p
                    where[mover] -= p
                    moves.append(move)
                current, lifted = lift_pair(current, where[lower], where[upper])
            except IllegalMoveError:
                continue
            moves.extend(lifted)
            if current.occupied == expected:
                return current, MoveTrace(ab, tuple(moves))

    raise IllegalMoveError(f"Cannot raise beads {i} and {j} using runner {helper_runner}")


def move_m4(ab: Abacus, i: int, j: int, helper_runner: int = 0) -> tuple[Abacus, MoveTrace]:
    """Move beads i and j one space down each: the reverse of move_m3."""
    qi, qj = ab.position(i), ab.position(j)
    p = ab.p
    if i == j:
        if not ab.is_free(qi + p):
            raise IllegalMoveError(f"Position {qi + p} is occupied")
        lowered = _shift(ab, {qi: qi + 2 * p})
        back_i = back_j = lowered.label(qi + 2 * p)
    else:
        lowered = _shift(ab, {qi: qi + p, qj: qj + p})
        back_i, back_j = lowered.label(qi + p), lowered.label(qj + p)
    restored, trace = move_m3(lowered, back_i, back_j, helper_runner)
    if restored != ab:
        raise InvariantViolation("Raising the lowered beads did not restore the abacus")
    return lowered, trace.inverted()


def render_abacus(ab: Abacus, rows: int | None = None) -> str:
    """Text picture: arc pairing, runner labels, then one line per row."""
    half = (ab.p - 1) // 2
    arcs = " ".join(f"{t}~{ab.p - t}" for t in range(1, half + 1))
    depth = rows if rows is not None else max(ab.row(q) for q in ab.occupied) + 1
    width = len(str(ab.p - 1))
    lines = [
        f"arcs {arcs}",
        " ".join(str(t).rjust(width) for t in range(ab.p)),
    ]
    for row in range(depth):
        glyphs = (
            BEAD_GLYPH if row * ab.p + t in ab.occupied else GAP_GLYPH for t in range(ab.p)
        )
        lines.append(" ".join(glyph.rjust(width) for glyph in glyphs))
    return "\n".join(lines)
