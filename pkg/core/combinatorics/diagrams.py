"""
Brauer diagrams on 2n nodes and their action on partial diagrams.

Node k (0-based) of the top row is index k, node k of the bottom row is
index n + k. A product x * y puts x on top of y: the bottom row of x is
glued to the top row of y and every closed loop in the middle contributes
a factor delta.

A partial diagram is a row of n nodes with t disjoint edges. It is glued to
the bottom row of x and the result is read on the top row, so that
(x * y) v = x (y v).

Scalars are exact: fractions.Fraction over the rationals, sympy GF(p)
elements over the residue field. Ints are promoted to Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
import random
import re

from sympy import GF

from core.exceptions import DomainError, ParseError, UsageError

logger = logging.getLogger(__name__)

_NODE = re.compile(r"\(([TB])(\d+),([TB])(\d+)\)")
_EDGE = re.compile(r"\((\d+),(\d+)\)")


def exact_scalar(value, p: int | None = None):
    """delta as an exact scalar: a residue mod p when p is given."""
    if p is not None:
        return GF(p)(int(value))
    return Fraction(value)


def format_scalar(value, p: int | None = None) -> str:
    if p is not None:
        return str(int(value) % p)
    return str(value)


def _scalar(delta):
    return Fraction(delta) if isinstance(delta, int) else delta


def _power(delta, exponent: int):
    delta = _scalar(delta)
    if exponent < 0 and delta == 0:
        raise DomainError("delta must be non-zero to invert it")
    return delta**exponent


@dataclass(frozen=True, slots=True)
class BrauerDiagram:
    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise UsageError(f"A diagram needs n >= 1, got {self.n}")
        pairing = tuple(self.pairing)
        if len(pairing) != 2 * self.n:
            raise UsageError(f"Expected {2 * self.n} entries, got {len(pairing)}")
        for node, partner in enumerate(pairing):
            if not 0 <= partner < 2 * self.n or partner == node or pairing[partner] != node:
                raise UsageError(f"Not a perfect matching: {pairing}")
        object.__setattr__(self, "pairing", pairing)

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "BrauerDiagram":
        pairing = [-1] * (2 * n)
        for a, b in pairs:
            if not (0 <= a < 2 * n and 0 <= b < 2 * n) or pairing[a] != -1 or pairing[b] != -1:
                raise UsageError(f"Pair ({a}, {b}) clashes or leaves 0..{2 * n - 1}")
            pairing[a], pairing[b] = b, a
        return cls(n, tuple(pairing))

    @classmethod
    def identity(cls, n: int) -> "BrauerDiagram":
        return cls.from_pairs(n, [(k, n + k) for k in range(n)])

    @classmethod
    def from_permutation(cls, w) -> "BrauerDiagram":
        """Bottom node k is joined to top node w[k]; products compose as w_x o w_y."""
        w = tuple(w)
        n = len(w)
        if sorted(w) != list(range(n)):
            raise UsageError(f"Not a permutation of 0..{n - 1}: {w}")
        return cls.from_pairs(n, [(w[k], n + k) for k in range(n)])

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.pairing) if a < b]

    @property
    def propagating(self) -> int:
        """Number of strands joining the two rows."""
        return sum(1 for a, b in self.pairs() if a < self.n <= b)

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True, slots=True)
class ScaledDiagram:
    coefficient: object
    diagram: BrauerDiagram

    def __post_init__(self):
        if self.coefficient == 0:
            raise DomainError("A scaled diagram needs a non-zero coefficient")

    def scaled(self, factor) -> "ScaledDiagram | None":
        coefficient = self.coefficient * _scalar(factor)
        return None if coefficient == 0 else ScaledDiagram(coefficient, self.diagram)


@dataclass(frozen=True, slots=True)
class PartialDiagram:
    n: int
    partner: tuple[int | None, ...]

    def __post_init__(self):
        partner = tuple(self.partner)
        if len(partner) != self.n:
            raise UsageError(f"Expected {self.n} entries, got {len(partner)}")
        for node, other in enumerate(partner):
            if other is None:
                continue
            if not 0 <= other < self.n or other == node or partner[other] != node:
                raise UsageError(f"Edges are not disjoint pairs: {partner}")
        object.__setattr__(self, "partner", partner)

    @classmethod
    def from_edges(cls, n: int, edges) -> "PartialDiagram":
        partner: list[int | None] = [None] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n) or partner[a] is not None or partner[b] is not None:
                raise UsageError(f"Edge ({a}, {b}) clashes or leaves 0..{n - 1}")
            partner[a], partner[b] = b, a
        return cls(n, tuple(partner))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.partner) if b is not None and a < b]

    @property
    def t(self) -> int:
        return len(self.edges)

    @property
    def free_nodes(self) -> list[int]:
        return [k for k, other in enumerate(self.partner) if other is None]

    def __str__(self) -> str:
        return format_partial(self)


@dataclass(frozen=True, slots=True)
class ScaledPartialDiagram:
    coefficient: object
    diagram: PartialDiagram


def _node_index(row: str, number: int, n: int) -> int:
    if not 1 <= number <= n:
        raise ParseError(f"Node {row}{number} is outside 1..{n}")
    return number - 1 if row == "T" else n + number - 1


def parse_diagram(text: str) -> BrauerDiagram:
    """Parse ``[(T1,B3),(T2,T3),(B1,B2)]``; n is the number of pairs."""
    raw = "".join((text or "").split())
    if not (raw.startswith("[") and raw.endswith("]")):
        raise ParseError(f"Diagram must be a bracketed list of pairs: {text!r}")
    body = raw[1:-1]
    matches = list(_NODE.finditer(body))
    if ",".join(match.group(0) for match in matches) != body or not matches:
        raise ParseError(f"Invalid diagram {text!r}")
    n = len(matches)
    pairs = [
        (_node_index(m.group(1), int(m.group(2)), n), _node_index(m.group(3), int(m.group(4)), n))
        for m in matches
    ]
    try:
        return BrauerDiagram.from_pairs(n, pairs)
    except UsageError as exc:
        raise ParseError(f"Invalid diagram {text!r}: {exc}") from exc


def _node_name(index: int, n: int) -> str:
    return f"T{index + 1}" if index < n else f"B{index - n + 1}"


def format_diagram(x: BrauerDiagram) -> str:
    return "[" + ",".join(f"({_node_name(a, x.n)},{_node_name(b, x.n)})" for a, b in x.pairs()) + "]"


def parse_partial(text: str, n: int) -> PartialDiagram:
    """Parse ``[(1,2),(4,5)]`` as edges on a row of n nodes."""
    raw = "".join((text or "").split())
    if not (raw.startswith("[") and raw.endswith("]")):
        raise ParseError(f"Partial diagram must be a bracketed list of edges: {text!r}")
    body = raw[1:-1]
    matches = list(_EDGE.finditer(body))
    if ",".join(match.group(0) for match in matches) != body:
        raise ParseError(f"Invalid partial diagram {text!r}")
    try:
        return PartialDiagram.from_edges(n, [(int(m.group(1)) - 1, int(m.group(2)) - 1) for m in matches])
    except UsageError as exc:
        raise ParseError(f"Invalid partial diagram {text!r}: {exc}") from exc


def format_partial(v: PartialDiagram) -> str:
    return "[" + ",".join(f"({a + 1},{b + 1})" for a, b in v.edges) + "]"


def random_diagram(n: int, rng: random.Random) -> BrauerDiagram:
    nodes = list(range(2 * n))
    rng.shuffle(nodes)
    return BrauerDiagram.from_pairs(n, zip(nodes[::2], nodes[1::2]))


def random_partial(n: int, t: int, rng: random.Random) -> PartialDiagram:
    if 2 * t > n:
        raise UsageError(f"{t} edges do not fit on {n} nodes")
    nodes = rng.sample(range(n), 2 * t)
    return PartialDiagram.from_edges(n, zip(nodes[::2], nodes[1::2]))


def _compose(x: BrauerDiagram, y: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Concatenate x over y; returns the diagram and the number of closed loops."""
    if x.n != y.n:
        raise DomainError(f"Cannot multiply diagrams on {x.n} and {y.n} nodes")
    n = x.n
    middle_seen = [False] * n
    result = [-1] * (2 * n)

    for start in range(2 * n):
        if result[start] != -1:
            continue
        # top nodes walk inside x, bottom nodes inside y
        in_x, node = start < n, start
        while True:
            end = (x if in_x else y).pairing[node]
            if in_x and end < n:
                finish = end
                break
            if not in_x and end >= n:
                finish = end
                break
            middle = end - n if in_x else end
            middle_seen[middle] = True
            in_x, node = not in_x, (middle if in_x else n + middle)
        result[start], result[finish] = finish, start

    loops = 0
    for middle in range(n):
        if middle_seen[middle]:
            continue
        loops += 1
        current = middle
        while not middle_seen[current]:
            middle_seen[current] = True
            across = x.pairing[n + current] - n
            middle_seen[across] = True
            current = y.pairing[across]
    return BrauerDiagram(n, tuple(result)), loops


def multiply(x: BrauerDiagram, y: BrauerDiagram, delta) -> ScaledDiagram | None:
    """x on top of y; None when delta is zero and a loop forms."""
    product, loops = _compose(x, y)
    coefficient = _power(delta, loops)
    logger.debug(f"{x} * {y} = delta^{loops} {product}")
    return None if coefficient == 0 else ScaledDiagram(coefficient, product)


def multiply_scaled(a: ScaledDiagram | None, b: ScaledDiagram | None, delta) -> ScaledDiagram | None:
    if a is None or b is None:
        return None
    product = multiply(a.diagram, b.diagram, delta)
    return None if product is None else product.scaled(a.coefficient * b.coefficient)


def _cap_ends(n: int) -> list[tuple[int, int]]:
    return [(n - 2, n - 1), (2 * n - 2, 2 * n - 1)]


def idempotent_e(n: int, delta) -> ScaledDiagram:
    """delta^-1 times the diagram with arcs on the last two nodes of each row."""
    if n < 2:
        raise UsageError(f"e_n needs n >= 2, got {n}")
    pairs = [(k, n + k) for k in range(n - 2)] + _cap_ends(n)
    return ScaledDiagram(_power(delta, -1), BrauerDiagram.from_pairs(n, pairs))


def phi_embed(x: BrauerDiagram, delta) -> ScaledDiagram:
    """delta^-1 times x with an extra arc added at the right of each row."""
    m, n = x.n, x.n + 2
    pairs = []
    for a, b in x.pairs():
        pairs.append((a if a < m else a + 2, b if b < m else b + 2))
    return ScaledDiagram(_power(delta, -1), BrauerDiagram.from_pairs(n, pairs + _cap_ends(n)))


def _glue(x: BrauerDiagram, v: PartialDiagram):
    """
    Walk from every top node of x through v glued below. Returns the edges
    on the top row, the map from free nodes of v to top nodes, and the
    number of closed loops; None when some free node of v is lost.
    """
    if x.n != v.n:
        raise DomainError(f"Diagram on {x.n} nodes cannot act on a row of {v.n}")
    n = x.n
    seen = [False] * n
    top_partner: list[int | None] = [None] * n
    landing: dict[int, int] = {}
    for start in range(n):
        if top_partner[start] is not None:
            continue
        node = x.pairing[start]
        while node >= n:
            bottom = node - n
            seen[bottom] = True
            other = v.partner[bottom]
            if other is None:
                landing[bottom] = start
                break
            seen[other] = True
            node = x.pairing[n + other]
        else:
            top_partner[start], top_partner[node] = node, start

    if len(landing) != len(v.free_nodes):
        return None
    loops = 0
    for bottom in range(n):
        if seen[bottom]:
            continue
        loops += 1
        current = bottom
        while not seen[current]:
            seen[current] = True
            other = v.partner[current]
            seen[other] = True
            current = x.pairing[n + other] - n
    return PartialDiagram(n, tuple(top_partner)), landing, loops


def act_partial(x: BrauerDiagram, v: PartialDiagram, delta) -> ScaledPartialDiagram | None:
    """x v = delta^j w when w keeps t edges, otherwise zero (None)."""
    glued = _glue(x, v)
    if glued is None:
        return None
    w, _, loops = glued
    coefficient = _power(delta, loops)
    if coefficient == 0:
        return None
    return ScaledPartialDiagram(coefficient, w)


def sigma_perm(x: BrauerDiagram, v: PartialDiagram, delta) -> tuple[int, ...]:
    """
    Entry k is the rank, among the free nodes of x v, of the node reached
    from the k-th free node of v. Free nodes are ranked left to right.
    """
    if act_partial(x, v, delta) is None:
        raise DomainError(f"{x} kills {v}; there is no permutation of free nodes")
    w, landing, _ = _glue(x, v)
    ranks = {node: rank for rank, node in enumerate(w.free_nodes)}
    return tuple(ranks[landing[node]] for node in v.free_nodes)
