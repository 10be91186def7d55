"""
Digit expansions in an integer base b with |b| >= 2.

Every positive integer has a unique expansion ``z = sum(u_i * b**i)`` with
digits ``u_i`` in ``{0, ..., |b|-1}`` and a nonzero leading digit; for a
negative base the same holds for every nonzero integer. This module computes
those expansions, the digit length ``l_b(z)``, the length bands
``Delta_b(n) = {z in Z_b : l_b(z) = n}`` and the length offsets of products.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from sgdigit.core.errors import (
    InvalidBase, InvalidDigit, InvalidLength, NotRepresentable,
    PreconditionViolated, WitnessNotFound,
)
from sgdigit.utils.logging import get_logger

logger = get_logger("digits")


@dataclass(frozen=True)
class Base:
    """An integer base b outside {-1, 0, 1}.

    The digit set N_b and the representable set Z_b are derived from ``b``:
    Z_b is the positive integers for b > 1 and the nonzero integers for b < -1.
    """
    b: int

    def __post_init__(self):
        if isinstance(self.b, bool) or not isinstance(self.b, int):
            raise InvalidBase(f"Base must be an integer, got {self.b!r}")
        if self.b in (-1, 0, 1):
            raise InvalidBase(f"Base must not be -1, 0 or 1, got {self.b}")

    @property
    def radix(self) -> int:
        """Number of digits, |b|."""
        return abs(self.b)

    @property
    def negative(self) -> bool:
        return self.b < 0

    @property
    def digit_set(self) -> range:
        """The digit set N_b = {0, ..., |b|-1}."""
        return range(self.radix)

    def in_z(self, z: int) -> bool:
        """Whether ``z`` belongs to Z_b."""
        return z != 0 if self.negative else z > 0

    def require_in_z(self, z: int) -> None:
        if not self.in_z(z):
            raise NotRepresentable(f"{z} is not in Z_{self.b}")

    def __int__(self) -> int:
        return self.b

    def __str__(self) -> str:
        return str(self.b)


BaseLike = Union[Base, int]


def as_base(base: BaseLike) -> Base:
    """Coerce an integer or a Base into a Base."""
    return base if isinstance(base, Base) else Base(base)


def length_offsets(base: BaseLike) -> FrozenSet[int]:
    """The offset set E_b: {-1} for b > 1 and {-3, -1, 1} for b < -1."""
    return frozenset({-3, -1, 1}) if as_base(base).negative else frozenset({-1})


@dataclass(frozen=True)
class DigitString:
    """A base-b digit sequence, least-significant digit first.

    Instances built by :func:`to_digits` are canonical. Instances built by hand
    are not checked until :func:`from_digits` evaluates them.
    """
    base: Base
    digits: Tuple[int, ...]

    @property
    def value(self) -> int:
        return from_digits(self)

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def is_canonical(self) -> bool:
        if not self.digits:
            return False
        if any(u not in self.base.digit_set for u in self.digits):
            return False
        return self.digits[-1] != 0 or self.digits == (0,)

    def render(self) -> str:
        """Render as most-significant digit first, then ``_`` and the base.

        Digits are concatenated when |b| <= 10 and comma-separated otherwise,
        e.g. ``111_-2`` or ``10,3_16``.
        """
        sep = "" if self.base.radix <= 10 else ","
        return sep.join(str(u) for u in reversed(self.digits)) + f"_{self.base.b}"

    @classmethod
    def parse(cls, text: str) -> "DigitString":
        """Parse the format produced by :meth:`render`."""
        body, sep, base_text = text.strip().rpartition("_")
        if not sep or not body:
            raise ValueError(f"Malformed digit string: {text!r}")
        try:
            b = int(base_text, 10)
        except ValueError:
            raise ValueError(f"Malformed base in digit string: {text!r}")
        base = Base(b)

        if base.radix <= 10:
            if "," in body or not body.isdigit():
                raise ValueError(f"Malformed digits for base {base.b}: {body!r}")
            digits = [int(ch) for ch in body]
        else:
            parts = body.split(",")
            if not all(part.isdigit() for part in parts):
                raise ValueError(f"Malformed digits for base {base.b}: {body!r}")
            digits = [int(part) for part in parts]

        result = cls(base, tuple(reversed(digits)))
        if not result.is_canonical:
            raise InvalidDigit(f"Not a canonical base {base.b} digit string: {text!r}")
        return result

    def __str__(self) -> str:
        return self.render()


def to_digits(base: BaseLike, z: int) -> DigitString:
    """Expand ``z`` in base ``b``.

    Each step writes ``z = b*q + r`` with ``r`` the nonnegative residue of
    ``z`` modulo |b|, which is the only choice keeping digits in N_b for
    either sign of ``b``.

    Raises:
        NotRepresentable: If b > 1 and z < 0
    """
    base = as_base(base)
    if not base.negative and z < 0:
        raise NotRepresentable(f"{z} has no expansion in base {base.b}")
    if z == 0:
        return DigitString(base, (0,))

    digits: List[int] = []
    radix = base.radix
    while z != 0:
        r = z % radix
        digits.append(r)
        z = (z - r) // base.b
    return DigitString(base, tuple(digits))


def from_digits(d: DigitString) -> int:
    """Evaluate a digit string.

    Raises:
        InvalidDigit: If some digit is outside N_b
    """
    radix = d.base.radix
    value = 0
    for u in reversed(d.digits):
        if isinstance(u, bool) or not isinstance(u, int) or not 0 <= u < radix:
            raise InvalidDigit(f"Digit {u!r} is not in N_{d.base.b}")
        value = value * d.base.b + u
    return value


def length(base: BaseLike, z: int) -> int:
    """The digit length l_b(z); l_b(0) = 1."""
    return to_digits(base, z).length


@dataclass(frozen=True)
class LengthBand:
    """The band Delta_b(n) as the integer interval [lo, hi]."""
    base: Base
    n: int
    lo: int
    hi: int

    def __contains__(self, z: int) -> bool:
        return self.lo <= z <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    @property
    def positive(self) -> bool:
        return self.lo > 0

    def clip(self, bound: int) -> Optional[Tuple[int, int]]:
        """Intersect with [-bound, bound]; None when the intersection is empty."""
        lo, hi = max(self.lo, -bound), min(self.hi, bound)
        return (lo, hi) if lo <= hi else None


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidLength(f"Lengths start at 1, got {n}")


def delta_band(base: BaseLike, n: int) -> LengthBand:
    """The exact interval Delta_b(n).

    For b > 1 this is [b^(n-1), b^n - 1]. For b < -1 the band holds positive
    integers when n is odd and negative integers when n is even.
    """
    base = as_base(base)
    _check_n(n)
    b = base.b
    if b > 1:
        lo, hi = b ** (n - 1), b ** n - 1
    elif n % 2 == 1:
        lo = (b ** (n - 1) - b) // (1 - b)
        hi = (b ** (n + 1) - 1) // (1 - b)
    else:
        lo = b * (b ** n - 1) // (1 - b)
        hi = (b ** (n - 1) - 1) // (1 - b)
    return LengthBand(base, n, lo, hi)


def delta_count(base: BaseLike, n: int) -> int:
    """The cardinality of Delta_b(n)."""
    base = as_base(base)
    _check_n(n)
    b = base.b
    if b > 1:
        return (b - 1) * b ** (n - 1)
    if n % 2 == 1:
        return -(b + 1) * b ** (n - 1)
    return (b + 1) * b ** (n - 1)


def product_length_offset(base: BaseLike, a: int, c: int) -> int:
    """The offset e = l_b(ac) - l_b(a) - l_b(c).

    For b > 1 and a, c >= 1 the offset lies in {-1, 0}; for b < -1 and
    a, c outside N_b it lies in {-3, -1, 1}.
    """
    base = as_base(base)
    for x in (a, c):
        if base.negative:
            if 0 <= x < base.radix:
                raise PreconditionViolated(f"{x} is a single digit of base {base.b}")
        elif x < 1:
            raise PreconditionViolated(f"{x} is not a positive integer")
    return length(base, a * c) - length(base, a) - length(base, c)


def _band_candidates(band: LengthBand) -> List[int]:
    base = band.base
    picks = [band.lo, band.lo + 1, band.hi - 1, band.hi, (band.lo + band.hi) // 2]
    picks += [u * base.b ** (band.n - 1) for u in range(1, base.radix)]
    seen = []
    for z in picks:
        if z in band and z not in seen:
            seen.append(z)
    return seen


def product_offset_witness(base: BaseLike, n: int, m: int, e: int) -> Tuple[int, int]:
    """Find a, c with l_b(a) = n, l_b(c) = m and l_b(ac) = n + m + e.

    The search tries band endpoints and leading-digit powers first, then scans
    one band against a few picks of the other, and finally scans the full
    product of both bands. Every witness is re-checked with :func:`length`.

    Raises:
        PreconditionViolated: If n or m is below 2 or e is not in E_b
        WitnessNotFound: If the full scan finds nothing
    """
    base = as_base(base)
    if n < 2 or m < 2:
        raise PreconditionViolated(f"Witness lengths must be at least 2, got n={n}, m={m}")
    if e not in length_offsets(base):
        raise PreconditionViolated(f"{e} is not an offset for base {base.b}")

    target = n + m + e
    band_a, band_c = delta_band(base, n), delta_band(base, m)
    picks_a, picks_c = _band_candidates(band_a), _band_candidates(band_c)

    def hit(a: int, c: int) -> bool:
        return length(base, a * c) == target

    for a in picks_a:
        for c in picks_c:
            if hit(a, c):
                return _verified(base, n, m, target, a, c)
    logger.debug(f"No endpoint witness for b={base.b}, n={n}, m={m}, e={e}; scanning rows")

    for c in picks_c:
        for a in band_a:
            if hit(a, c):
                return _verified(base, n, m, target, a, c)
    for a in picks_a:
        for c in band_c:
            if hit(a, c):
                return _verified(base, n, m, target, a, c)

    logger.warning(f"Falling back to a full scan of Delta({n}) x Delta({m}) for b={base.b}, e={e}")
    for a in band_a:
        for c in band_c:
            if hit(a, c):
                return _verified(base, n, m, target, a, c)

    logger.error(f"No witness for b={base.b}, n={n}, m={m}, e={e}")
    raise WitnessNotFound(
        f"No a, c with lengths {n}, {m} and product length {target} in base {base.b}",
        base=base.b, n=n, m=m, e=e,
    )


def _verified(base: Base, n: int, m: int, target: int, a: int, c: int) -> Tuple[int, int]:
    if (length(base, a), length(base, c), length(base, a * c)) != (n, m, target):
        raise WitnessNotFound(f"Witness ({a}, {c}) failed re-verification in base {base.b}",
                              base=base.b, n=n, m=m, e=target - n - m)
    return a, c


def product_offset_set(base: BaseLike) -> FrozenSet[int]:
    """Offsets l_b(ac) - l_b(a) - l_b(c) of admissible products.

    {-1, 0} for b > 1 and {-3, -1, 1} for b < -1.
    """
    return length_offsets(base) if as_base(base).negative else frozenset({-1, 0})


def _nearest_to_zero(lo: int, hi: int) -> int:
    return lo if lo > 0 else -hi


def product_length_range(base: BaseLike, first: Tuple[int, int], second: Tuple[int, int]) -> range:
    """A range holding l_b(x*y) for every x in [lo1, hi1] and y in [lo2, hi2].

    Each window lies on one side of 0, so the products share a sign and l_b
    grows with |z| on that side. The extreme products give both ends of the
    range, so the ends are attained. For b < -1 the range steps by 2, since
    the sign fixes the parity of the length.

    Raises:
        PreconditionViolated: If a window is empty or contains 0
    """
    base = as_base(base)
    for lo, hi in (first, second):
        if lo > hi or lo <= 0 <= hi:
            raise PreconditionViolated(f"[{lo}, {hi}] is empty or contains 0")
    (lo1, hi1), (lo2, hi2) = first, second
    sign = (1 if lo1 > 0 else -1) * (1 if lo2 > 0 else -1)
    small = sign * _nearest_to_zero(lo1, hi1) * _nearest_to_zero(lo2, hi2)
    large = sign * max(abs(lo1), abs(hi1)) * max(abs(lo2), abs(hi2))
    step = 2 if base.negative else 1
    return range(length(base, small), length(base, large) + 1, step)


def band_offsets(base: BaseLike, max_abs: int) -> Dict[Tuple[int, int], FrozenSet[int]]:
    """Offsets of products a*c with 0 < |a|, |c| <= max_abs, per pair of lengths.

    Works band pair by band pair through :func:`product_length_range`, so
    the cost depends on the number of bands, not on max_abs. Only admissible
    factors are covered: for b < -1 the single-digit band 1 is left out.

    Returns:
        A map (n, m) -> possible offsets l_b(ac) - n - m; the smallest and
        largest offset of each set are attained
    """
    base = as_base(base)
    if max_abs < 1:
        raise PreconditionViolated(f"max_abs must be positive, got {max_abs}")

    windows: List[Tuple[int, Tuple[int, int]]] = []
    n = 2 if base.negative else 1
    while True:
        band = delta_band(base, n)
        if _nearest_to_zero(band.lo, band.hi) > max_abs:
            break
        windows.append((n, band.clip(max_abs)))
        n += 1

    return {
        (n, m): frozenset(k - n - m for k in product_length_range(base, w1, w2))
        for n, w1 in windows
        for m, w2 in windows
    }
