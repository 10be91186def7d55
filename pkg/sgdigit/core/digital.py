"""
b-digital semigroups of the form theta_b(S) = {z in Z_b : l_b(z) in S}.

A :class:`DigitalSemigroup` is stored as its base and its length monoid;
every question about the (infinite) integer set is answered through the
length bands Delta_b(n). Sets that are not of this form, such as {1} for
|b| = 2, are handled through :class:`PredicateSet`.
"""
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Set, Tuple, Union

from sgdigit.core.digits import Base, BaseLike, as_base, delta_band, delta_count, length, product_length_range
from sgdigit.core.errors import PreconditionViolated, ResourceLimit
from sgdigit.core.ldsg import LDClass, is_ld, ld_closure
from sgdigit.core.monoid import Submonoid
from sgdigit.utils.config import get_settings
from sgdigit.utils.logging import get_logger, timed

logger = get_logger("digital")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a bounded check; truthy when the property held.

    ``counterexample`` is the first failing tuple, ``checked`` counts the
    units of work the check went through (band pairs or integer pairs).
    """
    holds: bool
    counterexample: Optional[Tuple[int, ...]] = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "checked": self.checked,
        }


@dataclass(frozen=True)
class DigitalSemigroup:
    """theta_b(S) for a base and a length monoid S.

    The constructor does not check that S lies in the class of the base, so
    that deliberately broken inputs can be fed to :func:`verify_closure`; use
    :func:`theta` for a checked instance.
    """
    base: Base
    lengths: Submonoid

    @property
    def ld_class(self) -> LDClass:
        return LDClass.for_base(self.base)

    @property
    def is_valid(self) -> bool:
        return self.lengths.is_numerical and is_ld(self.lengths, self.ld_class)

    def contains(self, z: int) -> bool:
        return theta_contains(self, z)

    __contains__ = contains

    def to_dict(self) -> Dict[str, Any]:
        return {"base": self.base.b, "lengths": self.lengths.to_dict()}


@dataclass(frozen=True)
class PredicateSet:
    """An arbitrary subset of Z_b given by a membership predicate."""
    base: Base
    predicate: Callable[[int], bool]

    def contains(self, z: int) -> bool:
        return self.base.in_z(z) and bool(self.predicate(z))

    __contains__ = contains


DigitalLike = Union[DigitalSemigroup, PredicateSet]


def theta(base: BaseLike, lengths: Submonoid) -> DigitalSemigroup:
    """The checked constructor: ``lengths`` must be in the class of the base.

    Raises:
        InfiniteComplement: If ``lengths`` has gcd > 1
        PreconditionViolated: If ``lengths`` is not in L (b > 1) or L- (b < -1)
    """
    base = as_base(base)
    cls = LDClass.for_base(base)
    if not is_ld(lengths, cls):
        raise PreconditionViolated(f"{lengths!r} is not in class {cls}; theta_{base.b} is undefined")
    return DigitalSemigroup(base, lengths)


def theta_contains(d: DigitalSemigroup, z: int) -> bool:
    """Whether ``z`` lies in theta_b(S).

    Raises:
        NotRepresentable: If z is not in Z_b
    """
    d.base.require_in_z(z)
    return d.lengths.contains(length(d.base, z))


def lengths_of(base: BaseLike, values: Iterable[int]) -> Set[int]:
    """L_b(A), the set of digit lengths of the elements of A."""
    base = as_base(base)
    result = set()
    for z in values:
        base.require_in_z(z)
        result.add(length(base, z))
    return result


def smallest_digital_containing(
    base: BaseLike,
    values: Iterable[int],
    bound: Optional[int] = None,
) -> DigitalSemigroup:
    """The smallest b-digital semigroup of the form theta_b(S) containing ``values``.

    Args:
        base: The base b
        values: A nonempty finite subset of Z_b
        bound: Iteration budget handed to :func:`ld_closure`

    Raises:
        Overflow: If the closure runs out of iterations
    """
    base = as_base(base)
    found = lengths_of(base, values)
    if not found:
        raise PreconditionViolated("At least one integer is required")
    if 1 in found:
        return DigitalSemigroup(base, Submonoid.natural())
    s, _ = ld_closure(found, LDClass.for_base(base), bound)
    return DigitalSemigroup(base, s)


def complement(d: DigitalSemigroup) -> List[int]:
    """Z_b minus theta_b(S), sorted ascending.

    The complement is the union of the bands Delta_b(n) over the gaps n of S.

    Raises:
        InfiniteComplement: If S is not numerical
        ResourceLimit: If the complement is larger than the table cap
    """
    gaps = d.lengths.gaps()
    total = sum(delta_count(d.base, n) for n in gaps)
    cap = get_settings().max_table
    if total > cap:
        raise ResourceLimit(f"The complement has {total} elements, cap is {cap}")
    out: List[int] = []
    for n in gaps:
        out.extend(delta_band(d.base, n))
    out.sort()
    return out


def phi(d: DigitalLike, max_length: Optional[int] = None) -> Submonoid:
    """L_b(D) ∪ {0} for a length-saturated set D.

    One element per band is sampled up to ``max_length``; every longer
    length is taken to be present. For theta_b(S) the default window
    F(S) + 2 recovers S exactly.
    """
    if max_length is None:
        if not isinstance(d, DigitalSemigroup):
            raise PreconditionViolated("max_length is required for predicate-defined sets")
        max_length = d.lengths.frobenius + 2
    missing = []
    for n in range(1, max_length + 1):
        rep = delta_band(d.base, n).lo
        if not d.contains(rep):
            missing.append(length(d.base, rep))
    return Submonoid.from_gaps(missing)


def _min_abs(lo: int, hi: int) -> int:
    return lo if lo > 0 else -hi


def _member_bands(d: DigitalSemigroup, bound: int) -> List[Tuple[int, int, int]]:
    """(n, lo, hi) for every length n in S whose band meets [-bound, bound]."""
    bands = []
    n = 1
    while True:
        band = delta_band(d.base, n)
        if _min_abs(band.lo, band.hi) > bound:
            return bands
        window = band.clip(bound)
        if window is not None and d.lengths.contains(n):
            bands.append((n, window[0], window[1]))
        n += 1


def _by_magnitude(lo: int, hi: int) -> Iterator[int]:
    return iter(range(lo, hi + 1)) if lo > 0 else iter(range(hi, lo - 1, -1))


def _product_lengths(base: Base, first: Tuple[int, int, int], second: Tuple[int, int, int]) -> range:
    return product_length_range(base, first[1:], second[1:])


def _first_failure(
    d: DigitalSemigroup,
    first: Tuple[int, int, int],
    second: Tuple[int, int, int],
) -> Optional[Tuple[int, int, int]]:
    for x in _by_magnitude(first[1], first[2]):
        for y in _by_magnitude(second[1], second[2]):
            if not d.lengths.contains(length(d.base, x * y)):
                return x, y, x * y
    return None


def verify_closure(d: DigitalSemigroup, magnitude_bound: int) -> Verdict:
    """Check d*e in D for all d, e in D with |d|, |e| <= magnitude_bound.

    Band pairs whose possible product lengths all lie in S are settled at
    once; the others are scanned element by element. The counterexample
    reported is the one with the smallest (|d|, |e|).

    Raises:
        PreconditionViolated: If magnitude_bound < |b|
    """
    if magnitude_bound < d.base.radix:
        raise PreconditionViolated(f"magnitude_bound must be at least |b| = {d.base.radix}")

    bands = _member_bands(d, magnitude_bound)
    failures = []
    pairs = 0
    with timed(logger, f"closure check of {d.lengths!r} in base {d.base.b}"):
        for i, first in enumerate(bands):
            for second in bands[i:]:
                pairs += 1
                if all(d.lengths.contains(k) for k in _product_lengths(d.base, first, second)):
                    continue
                logger.debug(f"Scanning bands {first[0]} x {second[0]} for base {d.base.b}")
                for a, c in ((first, second), (second, first)):
                    hit = _first_failure(d, a, c)
                    if hit is not None:
                        failures.append(hit)

    logger.info(f"Closure check of {d.lengths!r} in base {d.base.b} went through {pairs} band pairs")
    if failures:
        worst = min(failures, key=lambda t: (abs(t[0]), abs(t[1]), t[0], t[1]))
        return Verdict(False, worst, pairs)
    return Verdict(True, None, pairs)


def no_exact_sum_length(base: BaseLike, n: int, m: int, bound: Optional[int] = None) -> Verdict:
    """Scan Delta_b(n) x Delta_b(m) for a product of length exactly n + m.

    Only meaningful for b < -1, where such products never occur. Each band
    is clipped to [-bound, bound] when a bound is given.
    """
    base = as_base(base)
    if not base.negative:
        raise PreconditionViolated(f"The exact-sum check needs a negative base, got {base.b}")
    first, second = delta_band(base, n), delta_band(base, m)
    if bound is not None:
        first_window, second_window = first.clip(bound), second.clip(bound)
        if first_window is None or second_window is None:
            return Verdict(True, None, 0)
    else:
        first_window, second_window = (first.lo, first.hi), (second.lo, second.hi)

    size = (first_window[1] - first_window[0] + 1) * (second_window[1] - second_window[0] + 1)
    cap = get_settings().max_table
    if size > cap:
        raise ResourceLimit(f"Scanning {size} pairs exceeds the cap of {cap}; pass a smaller bound")

    target = n + m
    checked = 0
    for a in _by_magnitude(*first_window):
        for c in _by_magnitude(*second_window):
            checked += 1
            if length(base, a * c) == target:
                logger.error(f"Product {a}*{c} in base {base.b} has length {target}")
                return Verdict(False, (a, c, a * c), checked)
    return Verdict(True, None, checked)


def verify_digital_set(base: BaseLike, predicate: Callable[[int], bool], magnitude_bound: int) -> Verdict:
    """Bounded check that a predicate-defined set is a b-digital semigroup.

    Within [-magnitude_bound, magnitude_bound] every band must lie wholly in
    or wholly out of the set (counterexample ``(z, w)``), and d*e must be in
    the set for members d, e (counterexample ``(d, e, d*e)``). Products are
    tested wherever they land.
    """
    base = as_base(base)
    d = PredicateSet(base, predicate)
    members: List[int] = []
    checked = 0
    n = 1
    while True:
        band = delta_band(base, n)
        if _min_abs(band.lo, band.hi) > magnitude_bound:
            break
        window = band.clip(magnitude_bound)
        if window is not None:
            inside = [z for z in range(window[0], window[1] + 1) if d.contains(z)]
            if inside and len(inside) != window[1] - window[0] + 1:
                outside = next(z for z in range(window[0], window[1] + 1) if not d.contains(z))
                return Verdict(False, (inside[0], outside), checked)
            members.extend(inside)
        n += 1

    members.sort(key=lambda z: (abs(z), z))
    for i, x in enumerate(members):
        for y in members[i:]:
            checked += 1
            if not d.contains(x * y):
                return Verdict(False, (x, y, x * y), checked)
    return Verdict(True, None, checked)


def double_min_condition(d: DigitalLike, max_length: int = 64) -> bool:
    """For b = 2: twice the shortest length in D is again a length in D.

    Lengths are probed through the powers 2^(n-1), n <= max_length.
    """
    if d.base.b != 2:
        raise PreconditionViolated(f"The doubling condition is stated for base 2, got {d.base.b}")
    shortest = next((n for n in range(1, max_length + 1) if d.contains(2 ** (n - 1))), None)
    if shortest is None:
        return False
    return d.contains(2 ** (2 * shortest - 1))


def power_shift_condition(d: DigitalLike, max_exponent: int) -> Verdict:
    """b^n, b^m in D implies b^(n+m+1) in D, for 0 <= n <= m <= max_exponent.

    The counterexample is ``(n, m, n+m+1)``.
    """
    b = d.base.b
    present = [k for k in range(max_exponent + 1) if d.contains(b ** k)]
    checked = 0
    for i, x in enumerate(present):
        for y in present[i:]:
            checked += 1
            if not d.contains(b ** (x + y + 1)):
                return Verdict(False, (x, y, x + y + 1), checked)
    return Verdict(True, None, checked)
