"""
Agreement sweeps between production code and the brute-force references.
"""
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from sgdigit.core.digits import as_base, band_offsets, product_offset_set
from sgdigit.core.errors import SgdigitError
from sgdigit.utils.logging import get_logger

logger = get_logger("sweep")


def _jsonable(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


@dataclass
class SweepReport:
    """Result of a sweep; ``ok`` exactly when no input disagreed."""
    checked: int = 0
    violations: List[Tuple[Tuple[Any, ...], Any, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "checked": self.checked,
            "violations": [[_jsonable(args), _jsonable(want), _jsonable(got)] for args, want, got in self.violations],
            "ms": round(self.elapsed * 1000, 3),
        }


def _outcome(fn: Callable[..., Any], args: Sequence[Any]) -> Any:
    try:
        return fn(*args)
    except SgdigitError as e:
        return f"error:{type(e).__name__}"


def sweep(
    inputs: Iterable[Sequence[Any]],
    expected: Callable[..., Any],
    actual: Callable[..., Any],
    name: str = "sweep",
) -> SweepReport:
    """Call both functions on every input tuple and collect disagreements.

    Errors from the package count as outcomes, so two functions that reject
    the same input with the same exception class agree.
    """
    report = SweepReport()
    start = time.perf_counter()
    for args in inputs:
        args = tuple(args)
        want, got = _outcome(expected, args), _outcome(actual, args)
        report.checked += 1
        if want != got:
            logger.debug(f"{name}: {args} expected {want!r}, got {got!r}")
            report.violations.append((args, want, got))
    report.elapsed = time.perf_counter() - start

    if report.violations:
        logger.warning(f"{name}: {len(report.violations)} of {report.checked} inputs disagree")
    else:
        logger.info(f"{name}: {report.checked} inputs agree ({report.elapsed:.2f}s)")
    return report


def sweep_offsets(base, max_abs: int) -> SweepReport:
    """Check that every admissible product with factors up to max_abs has a legal length offset.

    One input per pair of lengths (n, m). A violation records the pair, the
    legal offsets and the offsets the band pair can produce.
    """
    base = as_base(base)
    allowed = product_offset_set(base)
    report = SweepReport()
    start = time.perf_counter()
    for pair, offsets in sorted(band_offsets(base, max_abs).items()):
        report.checked += 1
        if not offsets <= allowed:
            logger.debug(f"offset: lengths {pair} in base {base.b} give {sorted(offsets)}")
            report.violations.append(((base.b,) + pair, allowed, offsets))
    report.elapsed = time.perf_counter() - start

    if report.violations:
        logger.warning(f"offset: {len(report.violations)} of {report.checked} band pairs disagree")
    else:
        logger.info(f"offset: {report.checked} band pairs agree ({report.elapsed:.2f}s)")
    return report
