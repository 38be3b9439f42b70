import logging
from pathlib import Path

from django.conf import settings
from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from core.combinatorics.abacus import (
    beta_sequence,
    from_partition,
    orbit_invariant,
    p_core_abacus,
    render_abacus,
    runner_counts,
    to_partition,
)
from core.combinatorics.blocks import (
    BlockClass,
    block_classes,
    same_char0_block,
    same_limiting_block,
    same_limiting_block_labels,
)
from core.combinatorics.diagrams import (
    act_partial,
    exact_scalar,
    format_diagram,
    format_partial,
    format_scalar,
    multiply,
    sigma_perm,
)
from core.combinatorics.homs import enumerate_homs
from core.combinatorics.oracles import SearchBounds
from core.combinatorics.partitions import p_core_strip, require_odd_prime
from core.combinatorics.reduction import choose_b, is_b_reduced, reduce
from core.combinatorics.weyl import same_Wp_orbit
from core.constants import BLOCK_CLASSES_HEADERS, BLOCK_CLASSES_SHEET_TITLE
from core.exceptions import InvariantViolation

logger = logging.getLogger(__name__)


def _delta_inputs(delta: int, p: int) -> dict:
    return {"delta": delta, "delta_mod_p": delta % p, "p": p}


def abacus_summary(lam, p: int, b: int | None = None) -> dict:
    """
    Abacus of a partition.

    Returns:
        Dict with keys:
            - inputs: normalized inputs (b defaults to max(|lam|, p))
            - result: occupancy, beta-sequence, runner counts, orbit invariant
            - text: the rendered abacus
    """
    require_odd_prime(p)
    b = b if b is not None else max(lam.size, p)
    ab = from_partition(lam, p, b)
    logger.info(f"Abacus of ({lam}) with p={p}, b={b}")
    return {
        "inputs": {"partition": str(lam), "p": p, "b": b},
        "result": {
            "occupied": sorted(ab.occupied),
            "beta": list(beta_sequence(lam, b)),
            "runner_counts": list(runner_counts(ab)),
            "invariant": orbit_invariant(ab).as_json(),
            "b_reduced": is_b_reduced(ab),
        },
        "text": render_abacus(ab),
    }


def core_summary(lam, p: int) -> dict:
    require_odd_prime(p)
    core, weight = p_core_strip(lam, p)
    slid, slid_weight = p_core_abacus(from_partition(lam, p, max(lam.length, 1)))
    if (core, weight) != (slid, slid_weight):
        raise InvariantViolation(
            f"Rim-hook core ({core}, {weight}) and abacus core ({slid}, {slid_weight}) differ"
        )
    logger.info(f"{p}-core of ({lam}) is ({core}), weight {weight}")
    return {
        "inputs": {"partition": str(lam), "p": p},
        "result": {"core": str(core), "weight": weight},
        "text": f"core ({core}), weight {weight}",
    }


def reduce_summary(lam, p: int, b: int) -> dict:
    target, trace = reduce(lam, p, b)
    lines = [render_abacus(trace.start), ""]
    lines += [str(move) for move in trace.moves]
    lines += ["", render_abacus(target), f"reduced partition ({to_partition(target)})"]
    return {
        "inputs": {"partition": str(lam), "p": p, "b": b},
        "result": {
            "start": trace.start.as_json(),
            "target": target.as_json(),
            "target_partition": str(to_partition(target)),
            "invariant": orbit_invariant(target).as_json(),
            "moves": trace.as_json(),
        },
        "text": "\n".join(lines),
    }


def orbit_same_summary(lam, mu, delta: int, p: int | None, char0: bool = False) -> dict:
    if char0:
        verdict = same_char0_block(lam, mu, delta)
        inputs = {"lam": str(lam), "mu": str(mu), "delta": delta, "char0": True}
        result = {"verdict": verdict}
    else:
        verdict = same_Wp_orbit(lam, mu, delta, p)
        inputs = {"lam": str(lam), "mu": str(mu), **_delta_inputs(delta, p)}
        result = {"verdict": verdict, "b": choose_b(lam, mu, delta, p)}
    logger.info(f"orbit same ({lam}) ({mu}) delta={delta} char0={char0}: {verdict}")
    return {
        "inputs": inputs,
        "result": result,
        "text": f"({lam}) and ({mu}) {'are' if verdict else 'are not'} in the same orbit",
        "verdict": verdict,
    }


def block_same_summary(lam, mu, delta: int, p: int, labels: bool = False, trace: bool = False) -> dict:
    check = same_limiting_block_labels if labels else same_limiting_block
    certificate = check(lam, mu, delta, p, with_trace=trace)
    lines = [
        f"({lam}) and ({mu}) {'are' if certificate.verdict else 'are not'} "
        f"in the same limiting block (b={certificate.b_used})",
        f"invariant {certificate.invariant_lam.as_json()} vs {certificate.invariant_mu.as_json()}",
    ]
    if certificate.trace is not None:
        lines += [str(move) for move in certificate.trace.moves]
    return {
        "inputs": {"lam": str(lam), "mu": str(mu), "labels": labels, **_delta_inputs(delta, p)},
        "result": certificate.as_json(),
        "text": "\n".join(lines),
        "verdict": certificate.verdict,
    }


def block_classes_summary(n: int, delta: int, p: int) -> dict:
    classes = block_classes(n, delta, p)
    lines = [
        f"{number}: " + " ".join(f"({lam})" for lam in block.members)
        for number, block in enumerate(classes, 1)
    ]
    return {
        "inputs": {"n": n, **_delta_inputs(delta, p)},
        "result": {"classes": [block.as_json() for block in classes]},
        "text": "\n".join(lines),
        "classes": classes,
    }


def export_block_classes(classes: list[BlockClass], path: str) -> Path:
    """Write the classes to an .xlsx file, one row per partition."""
    wb = Workbook()
    ws = wb.active
    ws.title = BLOCK_CLASSES_SHEET_TITLE

    header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
    header_font = Font(bold=True, color="FFFFFF", size=12)
    border_style = Border(
        left=Side(style="thin"),
        right=Side(style="thin"),
        top=Side(style="thin"),
        bottom=Side(style="thin"),
    )

    for col_num, header in enumerate(BLOCK_CLASSES_HEADERS, 1):
        cell = ws.cell(row=1, column=col_num, value=header)
        cell.fill = header_fill
        cell.font = header_font
        cell.alignment = Alignment(horizontal="center", vertical="center")
        cell.border = border_style

    row_num = 2
    for number, block in enumerate(classes, 1):
        invariant = block.invariant
        for lam in block.members:
            row_data = [
                number,
                f"({lam})" if lam.parts else "()",
                lam.size,
                invariant.runner0,
                ",".join(str(count) for count in invariant.paired),
                invariant.parity,
            ]
            for col_num, value in enumerate(row_data, 1):
                cell = ws.cell(row=row_num, column=col_num, value=value)
                cell.border = border_style
                horizontal = "left" if col_num in (2, 5) else "right"
                cell.alignment = Alignment(horizontal=horizontal, vertical="center")
            row_num += 1

    for col_num, header in enumerate(BLOCK_CLASSES_HEADERS, 1):
        column_letter = get_column_letter(col_num)
        max_length = len(header)
        for row in ws[column_letter]:
            if row.value is not None:
                max_length = max(max_length, len(str(row.value)))
        ws.column_dimensions[column_letter].width = min(max_length + 2, 50)

    ws.freeze_panes = "A2"
    target = Path(path)
    wb.save(target)
    logger.info(f"Exported {len(classes)} classes ({row_num - 2} partitions) to {target}")
    return target


def default_bounds(**overrides) -> SearchBounds:
    """SearchBounds from settings, with any non-None override applied."""
    config = settings.BRAUER_BLOCKS
    span = config["R_SPAN"]
    values = {
        "max_index": config["MAX_INDEX"],
        "r_min": -span,
        "r_max": span,
        "max_size": config["MAX_SIZE"],
        "max_states": config["BFS_MAX_STATES"],
    }
    values.update({key: value for key, value in overrides.items() if value is not None})
    return SearchBounds(**values)


def homs_summary(lam, delta: int, p: int, bounds: SearchBounds) -> dict:
    predictions = enumerate_homs(lam, delta, p, bounds)
    lines = []
    for prediction in predictions:
        homs = "; ".join(f"Hom(D({a}), D({b}))" for a, b in prediction.cell_homs)
        lines.append(
            f"{prediction.mechanism.value}: ({prediction.lam}) -> ({prediction.mu}) "
            f"via {prediction.witness}: {homs}"
        )
    return {
        "inputs": {"partition": str(lam), "bounds": bounds.as_json(), **_delta_inputs(delta, p)},
        "result": {"predictions": [prediction.as_json() for prediction in predictions]},
        "text": "\n".join(lines) or "no predictions",
    }


def diagram_multiply_summary(x, y, delta, p: int | None = None) -> dict:
    if p is not None:
        require_odd_prime(p)
    product = multiply(x, y, exact_scalar(delta, p))
    if product is None:
        result = {"coefficient": "0", "diagram": None}
    else:
        result = {
            "coefficient": format_scalar(product.coefficient, p),
            "diagram": format_diagram(product.diagram),
        }
    logger.info(f"{x} * {y} at delta={delta}: {result['coefficient']} {result['diagram']}")
    return {
        "inputs": {"x": format_diagram(x), "y": format_diagram(y), "delta": str(delta), "p": p},
        "result": result,
        "text": f"{result['coefficient']} {result['diagram'] or ''}".rstrip(),
    }


def diagram_act_summary(x, v, delta, p: int | None = None) -> dict:
    if p is not None:
        require_odd_prime(p)
    scalar = exact_scalar(delta, p)
    image = act_partial(x, v, scalar)
    if image is None:
        result = {"coefficient": "0", "partial": None, "sigma": None}
    else:
        result = {
            "coefficient": format_scalar(image.coefficient, p),
            "partial": format_partial(image.diagram),
            "sigma": list(sigma_perm(x, v, scalar)),
        }
    return {
        "inputs": {"x": format_diagram(x), "v": format_partial(v), "delta": str(delta), "p": p},
        "result": result,
        "text": f"{result['coefficient']} {result['partial'] or ''}".rstrip(),
    }
