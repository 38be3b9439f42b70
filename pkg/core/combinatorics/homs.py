"""
Homomorphisms between cell modules predicted by single reflections.

A sum reflection s_{e_i+e_j, rp} linking lam and mu predicts
Hom(Delta(lam^T), Delta(mu^T)) != 0 for mu inside lam; the transposed pair is
then maximal (delta + rp)-balanced. A difference reflection with r != 0
predicts a homomorphism through the Carter-Payne theorem.
"""

from collections import Counter
from dataclasses import dataclass
import logging

from core.exceptions import DomainError, InvariantViolation
from core.models import HomMechanismChoice, ReflectionKindChoice

from .partitions import (
    Partition,
    contains,
    is_p_regular,
    require_odd_prime,
    skew_cells,
    transpose,
)
from .weyl import Reflection, as_partition, shifted_reflect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BalanceReport:
    pairable: bool
    band_columns: tuple[int, ...]
    band_applies: bool
    verdict: bool

    @property
    def band_decided(self) -> bool:
        """True when only the column-band condition made the verdict false."""
        return self.pairable and not self.verdict

    def as_json(self) -> dict:
        return {
            "pairable": self.pairable,
            "band_columns": list(self.band_columns),
            "band_applies": self.band_applies,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class HomPrediction:
    """
    ``lam`` and ``mu`` are the untransposed partitions linked by ``witness``
    (lam is the source); ``source`` and ``target`` are the cell-module labels.
    """

    lam: Partition
    mu: Partition
    source: Partition
    target: Partition
    witness: Reflection
    mechanism: HomMechanismChoice
    decomposition_flag: bool
    cell_homs: tuple[tuple[Partition, Partition], ...]
    carter_payne: tuple[int, int, int] | None = None

    @property
    def key(self) -> tuple:
        return (str(self.mechanism), self.lam, self.mu)

    def as_json(self) -> dict:
        return {
            "mechanism": str(self.mechanism),
            "lam": str(self.lam),
            "mu": str(self.mu),
            "source": str(self.source),
            "target": str(self.target),
            "witness": self.witness.as_json(),
            "decomposition_flag": self.decomposition_flag,
            "cell_homs": [[str(a), str(b)] for a, b in self.cell_homs],
            "carter_payne": list(self.carter_payne) if self.carter_payne else None,
        }


def _check_skew(mu: Partition, lam: Partition):
    if not contains(mu, lam):
        raise DomainError(f"({mu}) is not contained in ({lam})")
    if (lam.size - mu.size) % 2:
        raise DomainError(f"Skew shape ({lam})/({mu}) has odd size {lam.size - mu.size}")


def _band(nodes, delta: int) -> tuple[tuple[int, ...], bool]:
    """
    Columns where the nodes of contents -delta/2 and 1 - delta/2 stack as a
    vertical domino. The band applies when every such node lies in a domino
    and the columns are contiguous.
    """
    if delta % 2:
        return (), False
    low = -delta // 2
    special = {node for node in nodes if node.content in (low, low + 1)}
    columns = sorted(
        node.y
        for node in special
        if node.content == low and (node.x - 1, node.y) in special
    )
    if not columns or len(special) != 2 * len(columns):
        return tuple(columns), False
    contiguous = columns == list(range(columns[0], columns[-1] + 1))
    return tuple(columns), contiguous


def balance_report(mu: Partition, lam: Partition, delta: int) -> BalanceReport:
    _check_skew(mu, lam)
    nodes = skew_cells(mu, lam)
    total = 1 - delta
    counts = Counter(node.content for node in nodes)
    pairable = all(
        counts[c] % 2 == 0 if 2 * c == total else counts[c] == counts[total - c] for c in counts
    )
    columns, applies = _band(nodes, delta)
    verdict = pairable and not (applies and len(columns) % 2)
    report = BalanceReport(pairable, columns, applies, verdict)
    if report.band_decided:
        logger.info(
            f"({lam})/({mu}) at delta={delta}: contents pair up but the band over "
            f"columns {list(columns)} has odd width"
        )
    return report


def delta_balanced(mu: Partition, lam: Partition, delta: int) -> bool:
    return balance_report(mu, lam, delta).verdict


def intermediate_partitions(mu: Partition, lam: Partition):
    """Every nu with mu inside nu inside lam, both ends included."""
    if not contains(mu, lam):
        raise DomainError(f"({mu}) is not contained in ({lam})")

    def rows(x: int, ceiling: int):
        if x > lam.length:
            yield ()
            return
        for value in range(min(lam.part(x), ceiling), mu.part(x) - 1, -1):
            for rest in rows(x + 1, value):
                yield (value, *rest)

    for parts in rows(1, lam.part(1)):
        yield Partition.from_parts(parts)


def maximal_delta_balanced(mu: Partition, lam: Partition, delta: int) -> bool:
    if not delta_balanced(mu, lam, delta):
        raise DomainError(f"({mu}) and ({lam}) are not {delta}-balanced")
    for nu in intermediate_partitions(mu, lam):
        if nu in (mu, lam) or (lam.size - nu.size) % 2:
            continue
        if delta_balanced(nu, lam, delta):
            logger.debug(f"({nu}) sits between ({mu}) and ({lam}) and is {delta}-balanced")
            return False
    return True


def carter_payne_applicable(mu: Partition, lam: Partition, p: int, e: int) -> tuple[int, int, int] | None:
    """
    (i, j, d) when lam comes from mu by raising d nodes from row j to row i
    and every node moves a multiple of p^e spaces, with d < p^e.
    """
    if lam.size != mu.size:
        raise DomainError(f"Carter-Payne needs equal sizes: {mu.size} vs {lam.size}")
    if e < 1:
        raise DomainError(f"e must be positive, got {e}")
    n = max(lam.length, mu.length)
    changed = [x for x in range(1, n + 1) if lam.part(x) != mu.part(x)]
    if len(changed) != 2:
        return None
    i, j = changed
    d = lam.part(i) - mu.part(i)
    if d < 1 or mu.part(j) - lam.part(j) != d:
        return None
    modulus = p**e
    distance = lam.part(i) - lam.part(j) + j - i - d
    if distance % modulus:
        return None
    if d >= modulus:
        logger.info(f"({mu}) -> ({lam}) moves d={d} >= {modulus} nodes; Carter-Payne does not apply")
        return None
    return i, j, d


def _support(lam: Partition, mu: Partition) -> list[int]:
    n = max(lam.length, mu.length)
    return [x for x in range(1, n + 1) if lam.part(x) != mu.part(x)]


def hom_exists_sum(lam: Partition, mu: Partition, delta: int, p: int) -> HomPrediction | None:
    """
    Solve for the sum reflection taking lam to mu. Both rows change by the
    same amount, which fixes i, j and the coefficient, and then r.
    """
    require_odd_prime(p)
    support = _support(lam, mu)
    if len(support) != 2:
        return None
    i, j = support
    shift = mu.part(i) - lam.part(i)
    if mu.part(j) - lam.part(j) != shift:
        return None
    if shift < 0:
        source, target = lam, mu
    else:
        source, target, shift = mu, lam, -shift
    level = source.part(i) + source.part(j) - delta - i - j + 2 + shift
    if level % p:
        return None
    witness = Reflection(ReflectionKindChoice.SUM, i, j, level // p)
    if as_partition(shifted_reflect(source, witness, delta, p)) != target:
        raise InvariantViolation(f"{witness} does not take ({source}) to ({target})")

    shifted_delta = delta + witness.r * p
    source_label, target_label = transpose(source), transpose(target)
    if not delta_balanced(target_label, source_label, shifted_delta) or not maximal_delta_balanced(
        target_label, source_label, shifted_delta
    ):
        raise InvariantViolation(
            f"({target_label}) in ({source_label}) is not maximal {shifted_delta}-balanced"
        )
    logger.debug(f"Sum witness {witness} links ({source}) and ({target})")
    return HomPrediction(
        lam=source,
        mu=target,
        source=source_label,
        target=target_label,
        witness=witness,
        mechanism=HomMechanismChoice.SUM_BALANCED,
        decomposition_flag=is_p_regular(source_label, p),
        cell_homs=((source_label, target_label),),
    )


def hom_exists_diff(lam: Partition, mu: Partition, delta: int, p: int) -> HomPrediction | None:
    """
    Solve for the difference reflection with r != 0 taking lam to mu; the
    dominant one of the two becomes the source. delta does not enter the
    difference coefficient.
    """
    require_odd_prime(p)
    support = _support(lam, mu)
    if len(support) != 2:
        return None
    i, j = support
    moved = lam.part(i) - mu.part(i)
    if moved == 0 or mu.part(j) - lam.part(j) != moved:
        return None
    source, target = (lam, mu) if moved > 0 else (mu, lam)
    d = abs(moved)
    level = source.part(i) - source.part(j) - i + j - d
    if level % p or level == 0:
        return None
    witness = Reflection(ReflectionKindChoice.DIFF, i, j, level // p)
    if as_partition(shifted_reflect(source, witness, delta, p)) != target:
        raise InvariantViolation(f"{witness} does not take ({source}) to ({target})")

    carter_payne = carter_payne_applicable(target, source, p, 1)
    if carter_payne is None:
        logger.info(f"{witness} links ({source}) and ({target}) but moves d={d} >= p nodes")
        return None
    source_label = transpose(source)
    return HomPrediction(
        lam=source,
        mu=target,
        source=source,
        target=target,
        witness=witness,
        mechanism=HomMechanismChoice.DIFF_CARTER_PAYNE,
        decomposition_flag=is_p_regular(source_label, p),
        cell_homs=((source, target), (source_label, transpose(target))),
        carter_payne=carter_payne,
    )


def candidate_reflections(lam: Partition, bounds) -> list[Reflection]:
    reflections = []
    for j in range(2, bounds.max_index + 1):
        for i in range(1, j):
            for r in bounds.r_range:
                reflections.append(Reflection(ReflectionKindChoice.SUM, i, j, r))
                if r:
                    reflections.append(Reflection(ReflectionKindChoice.DIFF, i, j, r))
    return reflections


def enumerate_homs(lam: Partition, delta: int, p: int, bounds) -> list[HomPrediction]:
    """
    Predictions between lam and every partition reachable from it by one
    in-bounds reflection, ordered by mechanism and then by the partitions.
    """
    require_odd_prime(p)
    found: dict[tuple, HomPrediction] = {}
    for reflection in candidate_reflections(lam, bounds):
        mu = as_partition(shifted_reflect(lam, reflection, delta, p))
        if mu is None or mu == lam or mu.size > bounds.max_size:
            continue
        check = hom_exists_sum if reflection.kind == ReflectionKindChoice.SUM else hom_exists_diff
        prediction = check(lam, mu, delta, p)
        if prediction is not None:
            found.setdefault(prediction.key, prediction)
    predictions = sorted(found.values(), key=lambda item: item.key)
    logger.debug(f"{len(predictions)} hom predictions around ({lam}) at delta={delta}, p={p}")
    return predictions
