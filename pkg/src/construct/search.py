"""
Grid search over the parameters of a built-in family. Every nondegenerate grid
point is expanded and tagged with its certified order; the output order is the
grid order whatever the number of workers.
"""
import itertools
import logging
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.algebra.fields import parse_rational
from src.construct.families import builtin_family, family_spec
from src.construct.models import CertifiedCurve
from src.contfrac.expansion import expand
from src.contfrac.models import CFExpansion
from src.core.config import settings
from src.core.exceptions import AlgebraError, ConstructionError, HyperTorsionError, UsageError

logger = logging.getLogger(__name__)

Grid = List[Tuple[str, List[Fraction]]]
Point = Tuple[Tuple[str, str], ...]

_GRID_SPEC = re.compile(r"^\s*(?P<name>[A-Za-z_]\w*)\s*=\s*(?P<lo>[^.:]+)\.\.(?P<hi>[^:]+?)(?::(?P<step>.+))?\s*$")


def parse_grid(specs: Sequence[str]) -> Grid:
    """Parse `name=lo..hi[:step]` axes; bounds and step are exact rationals."""
    grid: Grid = []
    for spec in specs:
        match = _GRID_SPEC.match(spec)
        if not match:
            raise UsageError(f"Bad grid axis {spec!r}; expected name=lo..hi[:step]", error_code="bad_grid")
        name = match["name"]
        try:
            lo, hi = parse_rational(match["lo"]), parse_rational(match["hi"])
            step = parse_rational(match["step"]) if match["step"] else Fraction(1)
        except AlgebraError as e:
            raise UsageError(f"Bad grid axis {spec!r}: {e.detail}", error_code="bad_grid") from e
        if step <= 0:
            raise UsageError(f"Grid step must be positive in {spec!r}", error_code="bad_grid")
        if hi < lo:
            raise UsageError(f"Empty grid axis {spec!r}", error_code="bad_grid")
        if any(existing == name for existing, _ in grid):
            raise UsageError(f"Grid axis {name!r} given twice", error_code="bad_grid")
        values = []
        value = lo
        while value <= hi:
            values.append(value)
            value += step
        grid.append((name, values))
    return grid


def grid_points(grid: Grid) -> Iterator[Point]:
    names = [name for name, _ in grid]
    for combo in itertools.product(*(values for _, values in grid)):
        yield tuple((name, str(value)) for name, value in zip(names, combo))


def certify_point(label: str, point: Point, order_bound_factor: int) -> Tuple[Optional[str], Optional[str]]:
    """
    Build, expand and serialize one grid point.

    Returns:
        (JSON line, None) for a certified curve, (None, note) when the point is
        degenerate or no quasi-period appears within the order bound.
    """
    params = {name: parse_rational(value) for name, value in point}
    try:
        curve = builtin_family(label, params)
    except ConstructionError as e:
        return None, f"{label} {dict(point)}: skipped ({e.detail})"
    bound = order_bound_factor * (4 * curve.genus + 2)
    outcome = expand(curve.f, bound)
    if not isinstance(outcome, CFExpansion):
        return None, f"{label} {dict(point)}: skipped (not periodic within order bound {bound})"
    record = CertifiedCurve(**dict(curve), certified_order=outcome.order)
    return record.model_dump_json(), None


def search(label: str, grid: Grid, jobs: int = 1, progress: Optional[bool] = None) -> Iterator[str]:
    """
    Yield one JSON line per nondegenerate grid point, in grid order. Skipped
    points are logged with a note.
    """
    spec = family_spec(label)
    names = [name for name, _ in grid]
    if sorted(names) != sorted(spec.keys):
        raise UsageError(
            f"{label} grid needs exactly the axes {', '.join(spec.keys)}, got {', '.join(names) or 'none'}",
            error_code="bad_grid",
        )
    if not 1 <= jobs <= settings.MAX_JOBS:
        raise UsageError(f"--jobs must be in [1, {settings.MAX_JOBS}], got {jobs}", error_code="bad_jobs")

    points = list(grid_points(grid))
    show = settings.SEARCH_PROGRESS if progress is None else progress
    logger.info(f"Searching {len(points)} points of {label} with {jobs} worker(s)")
    factor = settings.ORDER_BOUND_FACTOR
    labels = itertools.repeat(label)
    factors = itertools.repeat(factor)

    def _collect(results) -> Iterator[str]:
        for line, note in tqdm(results, total=len(points), desc=label, disable=not show, file=sys.stderr):
            if note is not None:
                logger.warning(note)
                continue
            yield line

    if jobs == 1:
        yield from _collect(map(certify_point, labels, points, factors))
        return
    chunksize = max(1, len(points) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        try:
            yield from _collect(executor.map(certify_point, labels, points, factors, chunksize=chunksize))
        except HyperTorsionError:
            executor.shutdown(cancel_futures=True)
            raise
