"""
Partitions, Young diagrams and rim-hook stripping.

Everything here works on the Young diagram directly; the abacus module has
its own route to p-cores and the two are compared in the tests.
"""

from dataclasses import dataclass
from itertools import accumulate, groupby, zip_longest
import json
import logging
import random
import re
from typing import NamedTuple

from sympy import isprime
from sympy.utilities.iterables import partitions as sympy_partitions

from core.exceptions import DomainError, ParseError

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, slots=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; reads past the end are 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(part) for part in self.parts)
        if any(part < 1 for part in parts):
            raise DomainError(f"Partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build from any iterable, dropping trailing zeros."""
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """1-based row length, 0 beyond the last row."""
        if i < 1:
            raise DomainError(f"Row index must be positive, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return self.parts + (0,) * max(0, n - len(self.parts))

    def as_json(self) -> dict:
        return {"parts": list(self.parts)}

    def __str__(self) -> str:
        return format_partition(self)


class Node(NamedTuple):
    x: int
    y: int

    @property
    def content(self) -> int:
        return self.y - self.x


EMPTY = Partition()


def require_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    return p


def parse_partition(text: str) -> Partition:
    """
    Parse ``5,4`` or ``5^2,4^2,3,2^3,1``; whitespace is ignored and the empty
    string is the empty partition. The JSON form ``{"parts": [5, 4]}`` is
    accepted as well.
    """
    raw = "".join((text or "").split())
    if not raw:
        return EMPTY
    if raw.startswith("{"):
        try:
            parts = json.loads(raw)["parts"]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"Invalid partition JSON: {text!r}") from exc
        if not isinstance(parts, list) or not all(isinstance(part, int) for part in parts):
            raise ParseError(f"Invalid partition JSON: {text!r}")
        return _checked(parts, text)

    parts: list[int] = []
    for token in raw.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"Invalid partition token {token!r} in {text!r}")
        value = int(match.group(1))
        times = int(match.group(2)) if match.group(2) else 1
        if times < 1:
            raise ParseError(f"Exponent must be positive in {token!r}")
        parts.extend([value] * times)
    return _checked(parts, text)


def _checked(parts: list[int], text: str) -> Partition:
    try:
        return Partition(tuple(parts))
    except DomainError as exc:
        raise ParseError(f"Not a partition: {text!r} ({exc})") from exc


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition, using exponents for repeated parts."""
    tokens = []
    for value, group in groupby(lam.parts):
        times = len(list(group))
        tokens.append(f"{value}^{times}" if times > 1 else str(value))
    return ",".join(tokens)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in increasing lexicographic order."""
    if n < 0:
        raise DomainError(f"Cannot partition a negative integer: {n}")
    if n == 0:
        return [EMPTY]
    found = []
    for multiplicities in sympy_partitions(n):
        parts = []
        for value in sorted(multiplicities, reverse=True):
            parts.extend([value] * multiplicities[value])
        found.append(Partition(tuple(parts)))
    return sorted(found)


def transpose(lam: Partition) -> Partition:
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for part in lam.parts if part >= j) for j in range(1, lam.parts[0] + 1)))


def content(node: Node) -> int:
    return node.y - node.x


def is_p_regular(lam: Partition, p: int) -> bool:
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    return all(len(list(group)) < p for _, group in groupby(lam.parts))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff mu is dominated by lam."""
    if mu.size != lam.size:
        raise DomainError(f"Dominance needs equal sizes: |{mu}|={mu.size}, |{lam}|={lam.size}")
    pairs = zip_longest(accumulate(mu.parts), accumulate(lam.parts), fillvalue=lam.size)
    return all(a <= b for a, b in pairs)


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram of mu sits inside the diagram of lam."""
    if mu.length > lam.length:
        return False
    return all(a <= b for a, b in zip(mu.parts, lam.parts))


def cells(lam: Partition) -> frozenset[Node]:
    return frozenset(Node(x, y) for x, row in enumerate(lam.parts, 1) for y in range(1, row + 1))


def skew_cells(mu: Partition, lam: Partition) -> frozenset[Node]:
    """The nodes of [lam] \\ [mu]."""
    if not contains(mu, lam):
        raise DomainError(f"({mu}) is not contained in ({lam})")
    return frozenset(
        Node(x, y)
        for x, row in enumerate(lam.parts, 1)
        for y in range(mu.part(x) + 1, row + 1)
    )


def hook_length(lam: Partition, conjugate: Partition, node: Node) -> int:
    return lam.part(node.x) - node.y + conjugate.part(node.y) - node.x + 1


def remove_rim_hook(lam: Partition, node: Node) -> Partition:
    """Remove the rim hook whose hook is the one at ``node``."""
    conjugate = transpose(lam)
    foot = conjugate.part(node.y)
    rows = list(lam.parts)
    for row in range(node.x, foot):
        rows[row - 1] = lam.part(row + 1) - 1
    rows[foot - 1] = node.y - 1
    return Partition.from_parts(rows)


def p_core_strip(lam: Partition, p: int, rng: random.Random | None = None) -> tuple[Partition, int]:
    """
    Strip rim p-hooks until none is left.

    Returns the p-core and the number of hooks removed. With ``rng`` the hook
    removed at each step is picked at random, which must not change the core.
    """
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    core, weight = lam, 0
    while True:
        conjugate = transpose(core)
        candidates = sorted(
            node for node in cells(core) if hook_length(core, conjugate, node) == p
        )
        if not candidates:
            break
        node = rng.choice(candidates) if rng is not None else candidates[0]
        core = remove_rim_hook(core, node)
        weight += 1
    logger.debug(f"{p}-core of ({lam}) is ({core}), weight {weight}")
    return core, weight
