"""
Brute-force reference implementations.

Nothing here uses the interval formulas or the closure algorithm of
``sgdigit.core``: lengths come from plain repeated division, bands from a
scan, and LD closures from a worklist over an explicit integer window. The
functions are slow and meant for cross-checking only.
"""
from typing import Iterable, List, Set

from sgdigit.core.errors import CapTooSmall, InvalidBase, NotRepresentable, PreconditionViolated
from sgdigit.core.ldsg import LDClass
from sgdigit.core.monoid import Submonoid
from sgdigit.utils.logging import get_logger

logger = get_logger("oracle")


def _plain_base(base) -> int:
    b = int(base)
    if b in (-1, 0, 1):
        raise InvalidBase(f"Base must not be -1, 0 or 1, got {b}")
    return b


def brute_length(base, z: int) -> int:
    """Count digits by dividing out the base one step at a time."""
    b = _plain_base(base)
    if b > 1 and z < 0:
        raise NotRepresentable(f"{z} has no expansion in base {b}")
    if z == 0:
        return 1
    count = 0
    while z != 0:
        q, r = divmod(z, b)
        # divmod by a negative b leaves r in (b, 0]
        if r < 0:
            r -= b
            q += 1
        z = q
        count += 1
    return count


def brute_delta(base, n: int, scan_bound: int) -> Set[int]:
    """{z : 0 < |z| <= scan_bound, z in Z_b, l_b(z) = n} by direct scan."""
    b = _plain_base(base)
    low = 1 if b > 1 else -scan_bound
    return {z for z in range(low, scan_bound + 1) if z != 0 and brute_length(b, z) == n}


def brute_ld_closure(values: Iterable[int], cls: LDClass, cap: int) -> Submonoid:
    """The smallest member of the class containing ``values``, by worklist.

    Works in [0, cap]: every new element is combined with every element
    already present, adding x + y and, when x, y >= 2, x + y + e for each
    offset e. The result is trusted once some m consecutive members lie in
    the window, m being the smallest positive member.

    Raises:
        CapTooSmall: If no such run of members appears below the cap
    """
    values = sorted(set(values))
    if not values:
        raise PreconditionViolated("The closure needs at least one integer")
    if values[0] < 2 or values[-1] >= cap:
        raise PreconditionViolated(f"Inputs must lie in [2, {cap}), got {values}")

    offsets = sorted(cls.offsets)
    present = [False] * (cap + 1)
    present[0] = True
    members: List[int] = [0]
    pending: List[int] = []

    def add(x: int) -> None:
        if 0 <= x <= cap and not present[x]:
            present[x] = True
            members.append(x)
            pending.append(x)

    for a in values:
        add(a)
    while pending:
        x = pending.pop()
        for y in list(members):
            if y == 0:
                continue
            add(x + y)
            if x >= 2 and y >= 2:
                for e in offsets:
                    add(x + y + e)

    if present[1]:
        return Submonoid.natural()
    smallest = min(x for x in members if x > 0)
    run = 0
    for x in range(cap + 1):
        run = run + 1 if present[x] else 0
        if run == smallest:
            start = x - smallest + 1
            gaps = [y for y in range(1, start) if not present[y]]
            logger.debug(f"Worklist closure of {values} stabilised, run starts at {start}")
            return Submonoid.from_gaps(gaps)
    raise CapTooSmall(f"No run of {smallest} consecutive members below {cap}; raise the cap")
