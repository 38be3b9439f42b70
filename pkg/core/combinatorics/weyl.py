"""
Dot actions of the type-D Weyl group W and its affine version W_p.

Half-integers are stored doubled so every computation stays in the integers.
The reflection s_{alpha,rp} sends x to x - ((x, alpha) - rp) alpha and acts on
partitions through w . lam = w(lam + rho(delta)) - rho(delta).
"""

from collections import Counter
from dataclasses import dataclass
import logging

from core.exceptions import DomainError, InvariantViolation, UsageError
from core.models import ReflectionKindChoice

from .abacus import from_partition, move_d, orbit_invariant, to_partition
from .partitions import Partition, require_odd_prime
from .reduction import choose_b

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class HalfIntVector:
    doubled: tuple[int, ...]

    @classmethod
    def from_partition(cls, lam: Partition, n: int) -> "HalfIntVector":
        return cls(tuple(2 * part for part in lam.padded(n)))

    @property
    def length(self) -> int:
        return len(self.doubled)

    def __add__(self, other: "HalfIntVector") -> "HalfIntVector":
        return HalfIntVector(tuple(a + b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __sub__(self, other: "HalfIntVector") -> "HalfIntVector":
        return HalfIntVector(tuple(a - b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def halved(self) -> tuple[int, ...]:
        """Exact integer coordinates; fails if any coordinate is a half."""
        if any(value % 2 for value in self.doubled):
            raise InvariantViolation(f"Vector {self.doubled} (doubled) is not integral")
        return tuple(value // 2 for value in self.doubled)

    def __str__(self) -> str:
        return "(" + ", ".join(_half(value) for value in self.doubled) + ")"


def _half(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


@dataclass(frozen=True, slots=True)
class Reflection:
    kind: ReflectionKindChoice
    i: int
    j: int
    r: int = 0

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise UsageError(f"Reflection needs 1 <= i < j, got i={self.i}, j={self.j}")

    def root(self, n: int) -> tuple[int, ...]:
        alpha = [0] * n
        alpha[self.i - 1] = 1
        alpha[self.j - 1] = 1 if self.kind == ReflectionKindChoice.SUM else -1
        return tuple(alpha)

    def as_json(self) -> dict:
        return {"kind": str(self.kind), "i": self.i, "j": self.j, "r": self.r}

    def __str__(self) -> str:
        sign = "+" if self.kind == ReflectionKindChoice.SUM else "-"
        return f"s(e{self.i}{sign}e{self.j}, {self.r}p)"


def rho(delta: int, n: int) -> HalfIntVector:
    """rho(delta)_i = -delta/2 - (i - 1), doubled."""
    if n < 1:
        raise UsageError(f"Truncation length must be positive, got {n}")
    return HalfIntVector(tuple(-delta - 2 * k for k in range(n)))


def shifted_reflect(lam: Partition, ref: Reflection, delta: int, p: int) -> tuple[int, ...]:
    """
    Closed form of s_{alpha,rp} ._delta lam on the first max(len(lam), j)
    coordinates. The result need not be a partition.
    """
    n = max(lam.length, ref.j)
    vector = list(lam.padded(n))
    a, b = lam.part(ref.i), lam.part(ref.j)
    if ref.kind == ReflectionKindChoice.SUM:
        coefficient = a + b - delta - ref.r * p - ref.i - ref.j + 2
        vector[ref.i - 1] -= coefficient
        vector[ref.j - 1] -= coefficient
    else:
        coefficient = a - b - ref.i + ref.j - ref.r * p
        vector[ref.i - 1] -= coefficient
        vector[ref.j - 1] += coefficient
    return tuple(vector)


def shifted_reflect_via_rho(
    lam: Partition, ref: Reflection, delta: int, p: int, n: int | None = None
) -> tuple[int, ...]:
    """s_{alpha,rp}(lam + rho) - rho computed from the inner product."""
    n = n if n is not None else max(lam.length, ref.j)
    if n < max(lam.length, ref.j):
        raise DomainError(f"Truncation {n} is shorter than ({lam}) or index {ref.j}")
    shift = rho(delta, n)
    x = HalfIntVector.from_partition(lam, n) + shift
    alpha = ref.root(n)
    pairing = sum(value * sign for value, sign in zip(x.doubled, alpha))
    scale = pairing - 2 * ref.r * p
    reflected = HalfIntVector(tuple(value - scale * sign for value, sign in zip(x.doubled, alpha)))
    return (reflected - shift).halved()


def as_partition(vector) -> Partition | None:
    """The partition with these coordinates, or None when they do not form one."""
    values = list(vector)
    if any(value < 0 for value in values):
        return None
    if any(a < b for a, b in zip(values, values[1:])):
        return None
    return Partition.from_parts(values)


def _zero_index(delta: int) -> int:
    """Index of the zero coordinate of rho(delta), or 0 if there is none."""
    if delta % 2 or delta > 0:
        return 0
    return 1 - delta // 2


def orbit_length(lam: Partition, mu: Partition, delta: int, n: int | None = None) -> int:
    minimum = max(lam.length, mu.length, 1)
    if n is not None and n < minimum:
        raise DomainError(f"Truncation {n} is shorter than the partitions")
    return max(n or 0, minimum, _zero_index(delta))


def same_finite_W_orbit(lam: Partition, mu: Partition, delta: int, n: int | None = None) -> bool:
    """
    Type-D orbit test on lam + rho and mu + rho: same multiset of absolute
    values, and the same parity of negative coordinates unless some
    coordinate is zero.

    The truncation always reaches the zero coordinate of rho(delta) when
    there is one, so the answer does not depend on n.
    """
    n = orbit_length(lam, mu, delta, n)
    shift = rho(delta, n)
    x = (HalfIntVector.from_partition(lam, n) + shift).doubled
    y = (HalfIntVector.from_partition(mu, n) + shift).doubled
    if Counter(abs(value) for value in x) != Counter(abs(value) for value in y):
        return False
    if 0 in x:
        return True
    negatives = sum(value < 0 for value in x) - sum(value < 0 for value in y)
    return negatives % 2 == 0


def same_Wp_orbit(lam: Partition, mu: Partition, delta: int, p: int) -> bool:
    """Orbit invariants (runner 0, paired sums, parity) at a common b."""
    require_odd_prime(p)
    b = choose_b(lam, mu, delta, p)
    same = orbit_invariant(from_partition(lam, p, b)) == orbit_invariant(from_partition(mu, p, b))
    logger.debug(f"W_p orbit of ({lam}) vs ({mu}) at delta={delta % p}, b={b}: {same}")
    return same


def move_d_reflection_certificate(
    lam: Partition, b: int, i: int, j: int, r: int, p: int
) -> tuple[int, bool]:
    """
    The d-move d^r_(i,j) is the reflection s_{e_i+e_j} for delta' = rp - 2b + 2.
    Returns delta' and whether the finite orbit test confirms it.
    """
    moved = to_partition(move_d(from_partition(lam, p, b), i, j, r))
    delta_prime = r * p - 2 * b + 2
    witness = same_finite_W_orbit(lam, moved, delta_prime)
    if not witness:
        logger.error(f"d^{r}_({i},{j}) on ({lam}) with b={b} gave ({moved}) outside the W-orbit")
    return delta_prime, witness
