"""
Block membership: symmetric-group blocks, characteristic-0 Brauer blocks and
the limiting blocks in characteristic p.

The limiting-block predicates take UNTRANSPOSED partitions: lam and mu are
in the same limiting block when the cell modules labelled by their
transposes are. ``same_limiting_block_labels`` takes cell-module labels and
transposes them first.
"""

from collections import defaultdict
from dataclasses import dataclass
import logging

from core.exceptions import DomainError, InvariantViolation

from .abacus import MoveTrace, OrbitInvariant, check_bead_congruence, from_partition, orbit_invariant, runner_counts
from .partitions import Partition, p_core_strip, partitions_of, require_odd_prime, transpose
from .reduction import choose_b, choose_b_for, connecting_trace
from .weyl import same_finite_W_orbit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockCertificate:
    verdict: bool
    b_used: int
    invariant_lam: OrbitInvariant
    invariant_mu: OrbitInvariant
    trace: MoveTrace | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def as_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "b": self.b_used,
            "invariant_lam": self.invariant_lam.as_json(),
            "invariant_mu": self.invariant_mu.as_json(),
            "trace": self.trace.as_json() if self.trace is not None else None,
        }


@dataclass(frozen=True)
class BlockClass:
    members: tuple[Partition, ...]
    invariant: OrbitInvariant

    def as_json(self) -> dict:
        return {
            "members": [str(lam) for lam in self.members],
            "invariant": self.invariant.as_json(),
        }


def same_symmetric_block(lam: Partition, mu: Partition, p: int) -> bool:
    """Same p-core, read off as equal runner counts."""
    if lam.size != mu.size:
        raise DomainError(f"Symmetric-group blocks need equal sizes: {lam.size} vs {mu.size}")
    require_odd_prime(p)
    b = max(lam.length, mu.length, 1)
    by_runners = runner_counts(from_partition(lam, p, b)) == runner_counts(from_partition(mu, p, b))
    by_cores = p_core_strip(lam, p)[0] == p_core_strip(mu, p)[0]
    if by_runners != by_cores:
        raise InvariantViolation(f"Runner counts and {p}-cores disagree on ({lam}), ({mu})")
    return by_runners


def same_limiting_block(
    lam: Partition,
    mu: Partition,
    delta: int,
    p: int,
    *,
    b: int | None = None,
    with_trace: bool = False,
) -> BlockCertificate:
    """
    Compare orbit invariants with a common number of beads b (chosen by
    choose_b unless given). With ``with_trace`` a connecting move sequence
    is attached when the verdict is true.
    """
    require_odd_prime(p)
    if delta % p == 0:
        raise DomainError(f"delta must be non-zero mod {p}, got {delta}")
    if b is None:
        b = choose_b(lam, mu, delta, p)
    elif not check_bead_congruence(b, delta, p) or b < max(lam.length, mu.length):
        raise DomainError(f"b={b} does not satisfy 2b = 2 - delta (mod {p}) for these partitions")
    invariant_lam = orbit_invariant(from_partition(lam, p, b))
    invariant_mu = orbit_invariant(from_partition(mu, p, b))
    verdict = invariant_lam == invariant_mu
    trace = connecting_trace(lam, mu, delta, p) if verdict and with_trace else None
    logger.debug(f"({lam}) ~ ({mu}) at p={p}, delta={delta % p}, b={b}: {verdict}")
    return BlockCertificate(verdict, b, invariant_lam, invariant_mu, trace)


def same_limiting_block_labels(
    lam_label: Partition, mu_label: Partition, delta: int, p: int, *, with_trace: bool = False
) -> BlockCertificate:
    """same_limiting_block for cell-module labels."""
    return same_limiting_block(
        transpose(lam_label), transpose(mu_label), delta, p, with_trace=with_trace
    )


def same_char0_block(lam: Partition, mu: Partition, delta: int) -> bool:
    return same_finite_W_orbit(lam, mu, delta)


def label_set(n: int) -> list[Partition]:
    """Partitions of n, n - 2, ..., down to 1 or 0."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return [lam for m in range(n, -1, -2) for lam in partitions_of(m)]


def block_classes(n: int, delta: int, p: int) -> list[BlockClass]:
    """
    Group the labels of size n, n - 2, ... into limiting-block classes.

    These are orbit classes restricted to the labels; at a fixed n they can
    be coarser than the actual blocks.
    """
    require_odd_prime(p)
    labels = label_set(n)
    b = choose_b_for(labels, delta, p)
    grouped: dict[OrbitInvariant, list[Partition]] = defaultdict(list)
    for lam in labels:
        grouped[orbit_invariant(from_partition(lam, p, b))].append(lam)
    classes = [BlockClass(tuple(sorted(members)), invariant) for invariant, members in grouped.items()]
    classes.sort(key=lambda block: block.members[0])
    logger.debug(f"{len(labels)} labels for n={n} fall into {len(classes)} classes (p={p}, b={b})")
    return classes
