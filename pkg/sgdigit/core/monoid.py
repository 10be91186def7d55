"""
Finitely generated submonoids of (N, +).

A :class:`Submonoid` keeps its minimal system of generators and a boolean
membership table. When the generators are coprime the monoid is numerical:
the table reaches past the Frobenius number and every larger integer is a
member. When they share a factor g > 1, membership is answered by dividing
through by g.
"""
import math
import threading
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from sgdigit.core.errors import (
    InfiniteComplement, IsAllOfN, NotMember, PreconditionViolated, ResourceLimit,
)
from sgdigit.utils.config import get_settings
from sgdigit.utils.logging import get_logger, timed

logger = get_logger("monoid")


def _check_size(size: int) -> None:
    cap = get_settings().max_table
    if size > cap:
        raise ResourceLimit(f"Membership table of size {size} exceeds the cap of {cap} (SGDIGIT_MAX_TABLE)")


def _add_generator(reach: np.ndarray, g: int) -> None:
    """Close ``reach`` under adding ``g``, one block of length g at a time."""
    size = len(reach)
    for start in range(g, size, g):
        end = min(start + g, size)
        reach[start:end] |= reach[start - g:end - g]


def _membership_table(gens: Sequence[int], bound: int) -> np.ndarray:
    _check_size(bound + 1)
    reach = np.zeros(bound + 1, dtype=bool)
    reach[0] = True
    for g in gens:
        _add_generator(reach, g)
    return reach


def minimal_generators(raw: Iterable[int]) -> List[int]:
    """The minimal system of generators of the submonoid spanned by ``raw``.

    Candidates are visited in increasing order and dropped when they are
    already a sum of kept ones.
    """
    candidates = sorted({x for x in raw if x != 0})
    if not candidates:
        return []
    if candidates[0] < 0:
        raise PreconditionViolated(f"Generators must be nonnegative, got {candidates[0]}")
    if candidates[0] == 1:
        return [1]

    _check_size(candidates[-1] + 1)
    reach = np.zeros(candidates[-1] + 1, dtype=bool)
    reach[0] = True
    kept = []
    for x in candidates:
        if reach[x]:
            continue
        kept.append(x)
        _add_generator(reach, x)
    return kept


class Submonoid:
    """A finitely generated submonoid of the nonnegative integers.

    Instances are immutable; build them with :meth:`from_generators`,
    :meth:`from_gaps`, :meth:`natural` or :meth:`tail`.
    """

    def __init__(self, gens: Sequence[int]):
        """Wrap an already minimal, sorted generator system."""
        self.gens = tuple(gens)
        self.gcd = math.gcd(*self.gens) if self.gens else 0
        self._reduced: Optional["Submonoid"] = None
        self._table: Optional[np.ndarray] = None
        self._frobenius: Optional[int] = None
        self._p_table: Optional[np.ndarray] = None
        self._lock = threading.Lock()

        if self.gcd > 1:
            self._reduced = Submonoid(tuple(g // self.gcd for g in self.gens))
        elif self.gcd == 1:
            self._build_table()

    def _build_table(self) -> None:
        m, top = self.gens[0], self.gens[-1]
        bound = m * top + top
        while True:
            table = _membership_table(self.gens, bound)
            gaps = np.flatnonzero(~table)
            frobenius = int(gaps[-1]) if len(gaps) else -1
            # m consecutive members at the end certify the tail
            if bound - frobenius >= m:
                break
            logger.debug(f"Doubling the table of {self!r} to {2 * bound}")
            bound *= 2
        self._table = table
        self._frobenius = frobenius

    @classmethod
    def from_generators(cls, raw: Iterable[int]) -> "Submonoid":
        """The submonoid spanned by ``raw`` (empty input gives {0})."""
        return cls(minimal_generators(raw))

    @classmethod
    def natural(cls) -> "Submonoid":
        """N itself."""
        return cls((1,))

    @classmethod
    def tail(cls, n: int) -> "Submonoid":
        """S_n = {0, n, ->}, generated by n, ..., 2n-1."""
        if n < 1:
            raise PreconditionViolated(f"Tail monoids start at n = 1, got {n}")
        return cls(tuple(range(n, 2 * n)))

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "Submonoid":
        """The numerical monoid whose complement in N is exactly ``gaps``.

        Raises:
            PreconditionViolated: If N minus ``gaps`` is not closed under addition
        """
        gap_set = set(gaps)
        if not gap_set:
            return cls.natural()
        if min(gap_set) < 1:
            raise PreconditionViolated("Gaps must be positive integers")
        frobenius = max(gap_set)
        raw = [x for x in range(1, 2 * frobenius + 3) if x not in gap_set]
        result = cls.from_generators(raw)
        if set(result.gaps()) != gap_set:
            raise PreconditionViolated(f"N minus {sorted(gap_set)} is not a monoid")
        return result

    @property
    def is_numerical(self) -> bool:
        return self.gcd == 1

    @property
    def is_natural(self) -> bool:
        return self.gens == (1,)

    @property
    def table_bound(self) -> int:
        """Largest x answered from the membership table; 0 for the trivial monoid."""
        if self._table is not None:
            return len(self._table) - 1
        return self._reduced.table_bound * self.gcd if self._reduced is not None else 0

    def _require_numerical(self) -> None:
        if not self.is_numerical:
            raise InfiniteComplement(f"{self!r} has gcd {self.gcd}; its complement in N is infinite")

    def contains(self, x: int) -> bool:
        """Whether ``x`` is a nonnegative combination of the generators."""
        if x < 0:
            return False
        if self.gcd == 0:
            return x == 0
        if self.gcd > 1:
            return x % self.gcd == 0 and self._reduced.contains(x // self.gcd)
        if x > self._frobenius:
            return True
        return bool(self._table[x])

    __contains__ = contains

    @property
    def frobenius(self) -> int:
        """F(S), the largest integer outside S; F(N) = -1."""
        self._require_numerical()
        return self._frobenius

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def multiplicity(self) -> int:
        if not self.gens:
            raise PreconditionViolated("{0} has no multiplicity")
        return self.gens[0]

    def gaps(self) -> List[int]:
        """The sorted list N minus S."""
        self._require_numerical()
        return np.flatnonzero(~self._table[: self._frobenius + 1]).tolist()

    @property
    def genus(self) -> int:
        return len(self.gaps())

    def members(self, up_to: int) -> List[int]:
        """The members of S in [0, up_to]."""
        return [x for x in range(up_to + 1) if self.contains(x)]

    def max_fact_length(self, s: int) -> int:
        """P(s): the largest c_1 + ... + c_p over all s = c_1 n_1 + ... + c_p n_p.

        Raises:
            NotMember: If s is not in S
        """
        if not self.contains(s):
            raise NotMember(f"{s} is not in {self!r}")
        if s == 0:
            return 0
        with self._lock:
            if self._p_table is None or len(self._p_table) <= s:
                size = max(s, 2 * (len(self._p_table) - 1) if self._p_table is not None else 0)
                self._p_table = self._factorization_lengths(size)
            return int(self._p_table[s])

    def _factorization_lengths(self, size: int) -> np.ndarray:
        _check_size(size + 1)
        p = np.full(size + 1, -1, dtype=np.int64)
        p[0] = 0
        for g in self.gens:
            for start in range(g, size + 1, g):
                end = min(start + g, size + 1)
                prev = p[start - g:end - g]
                np.maximum(p[start:end], np.where(prev >= 0, prev + 1, -1), out=p[start:end])
        return p

    def intersect(self, other: "Submonoid") -> "Submonoid":
        """The numerical monoid S ∩ T."""
        self._require_numerical()
        other._require_numerical()
        bound = max(self.frobenius, other.frobenius) + 1
        gaps = [x for x in range(1, bound + 1) if not (self.contains(x) and other.contains(x))]
        return Submonoid.from_gaps(gaps)

    def adjoin_frobenius(self) -> "Submonoid":
        """S ∪ {F(S)}.

        Raises:
            IsAllOfN: If S = N
        """
        self._require_numerical()
        if self.is_natural:
            raise IsAllOfN("N has no Frobenius number to adjoin")
        return Submonoid.from_gaps(self.gaps()[:-1])

    def remove_generator(self, s: int) -> "Submonoid":
        """S minus {s} for a minimal generator s."""
        self._require_numerical()
        if s not in self.gens:
            raise PreconditionViolated(f"{s} is not a minimal generator of {self!r}")
        return Submonoid.from_gaps(self.gaps() + [s])

    def children(self) -> List["Submonoid"]:
        """The children in the genus tree: S minus {s} for s in msg(S), s > F(S)."""
        frobenius = self.frobenius
        return sorted(
            (self.remove_generator(s) for s in self.gens if s > frobenius),
            key=lambda t: t.gens,
        )

    def render_members(self) -> str:
        """The members in the ``{0, z_1, ..., z_k, ->}`` notation."""
        if not self.is_numerical:
            return repr(self)
        listed = [str(x) for x in range(self.conductor + 1) if self.contains(x)]
        return "{" + ", ".join(listed + ["->"]) + "}"

    def to_dict(self) -> Dict[str, Any]:
        numerical = self.is_numerical
        gaps = self.gaps() if numerical else None
        return {
            "generators": list(self.gens),
            "gcd": self.gcd,
            "multiplicity": self.multiplicity if self.gens else None,
            "frobenius": self.frobenius if numerical else None,
            "gaps": gaps,
            "genus": len(gaps) if numerical else None,
        }

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Submonoid) and self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.gens) + ">"


def walk_genus_tree(
    max_genus: int,
    expand: Optional[Callable[[Submonoid], List[Submonoid]]] = None,
    frontier_cap: Optional[int] = None,
) -> List[Submonoid]:
    """Breadth-first walk of the genus tree rooted at N.

    ``expand`` picks the children to descend into; restricting it to a
    family only reaches all of that family when the family is closed under
    adjoining the Frobenius number.

    Args:
        max_genus: Deepest level to visit
        expand: Children of a node (defaults to all genus-tree children)
        frontier_cap: Largest level allowed (defaults to the settings value)

    Returns:
        The visited monoids, level by level, siblings sorted by generators
    """
    if max_genus < 0:
        raise PreconditionViolated(f"max_genus must be nonnegative, got {max_genus}")
    if frontier_cap is None:
        frontier_cap = get_settings().frontier_cap

    expand = expand or Submonoid.children

    level = [Submonoid.natural()]
    found: List[Submonoid] = []
    with timed(logger, f"genus walk to depth {max_genus}"):
        for genus in range(max_genus + 1):
            found.extend(level)
            if genus == max_genus:
                break
            nxt = sorted((t for s in level for t in expand(s)), key=lambda t: t.gens)
            if len(nxt) > frontier_cap:
                raise ResourceLimit(f"Genus {genus + 1} frontier has {len(nxt)} nodes, cap is {frontier_cap}")
            level = nxt
    logger.info(f"Visited {len(found)} monoids up to genus {max_genus}")
    return found


def enumerate_numerical(max_genus: int) -> List[Submonoid]:
    """All numerical monoids of genus at most ``max_genus``."""
    return walk_genus_tree(max_genus)
