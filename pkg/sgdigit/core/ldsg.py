"""
The classes L and L- of length-set monoids.

A submonoid S != {0} of (N, +) is in the class with offsets E when
s + t + e is in S for all s, t in S minus {0, 1} and every e in E. Class L
(E = {-1}) holds the length sets of digital semigroups for bases b > 1,
class L- (E = {-3, -1, 1}) those for bases b < -1.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from sgdigit.core.digits import BaseLike, as_base
from sgdigit.core.errors import InfiniteComplement, Overflow, PreconditionViolated, CriterionMismatch
from sgdigit.core.monoid import Submonoid, walk_genus_tree
from sgdigit.utils.config import get_settings
from sgdigit.utils.logging import get_logger

logger = get_logger("ldsg")


class LDClass(Enum):
    """Which closure law applies; the value is the wire name."""
    L = "l"
    LMINUS = "lminus"

    @property
    def offsets(self) -> FrozenSet[int]:
        return frozenset({-1}) if self is LDClass.L else frozenset({-3, -1, 1})

    @classmethod
    def for_base(cls, base: BaseLike) -> "LDClass":
        return cls.LMINUS if as_base(base).negative else cls.L

    @classmethod
    def parse(cls, name: str) -> "LDClass":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown class {name!r}; expected 'l' or 'lminus'")

    def __str__(self) -> str:
        return self.value


@dataclass
class ClosureTrace:
    """The (B, A) pairs visited by :func:`ld_closure`."""
    iterations: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)
    converged: bool = False
    bound_hit: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "iterations": [{"B": list(b), "A": list(a)} for b, a in self.iterations],
            "converged": self.converged,
        }


def _require_numerical_or_trivial(s: Submonoid) -> None:
    if s.gcd > 1:
        raise InfiniteComplement(f"{s!r} is not a numerical monoid")


def ld_violation(s: Submonoid, cls: LDClass) -> Optional[Tuple[int, int, int]]:
    """The first (n_i, n_j, e) with n_i + n_j + e outside S, or None.

    Generator pairs are visited with n_i <= n_j in increasing order, offsets
    in increasing order. Returns None for N; {0} has no violating triple and
    is handled by :func:`is_ld`.
    """
    _require_numerical_or_trivial(s)
    if s.is_natural:
        return None
    offsets = sorted(cls.offsets)
    for i, x in enumerate(s.gens):
        for y in s.gens[i:]:
            for e in offsets:
                if not s.contains(x + y + e):
                    return x, y, e
    return None


def is_ld(s: Submonoid, cls: LDClass) -> bool:
    """Membership in the class, checked on pairs of minimal generators."""
    _require_numerical_or_trivial(s)
    if s.gcd == 0:
        return False
    return ld_violation(s, cls) is None


def is_ld_direct(s: Submonoid, cls: LDClass) -> bool:
    """Membership in the class, checked on all pairs s, t in S ∩ [2, F(S)+1]."""
    _require_numerical_or_trivial(s)
    if s.gcd == 0:
        return False
    small = [x for x in range(2, s.frobenius + 2) if s.contains(x)]
    offsets = sorted(cls.offsets)
    for i, x in enumerate(small):
        for y in small[i:]:
            if not all(s.contains(x + y + e) for e in offsets):
                return False
    return True


def is_ld_positive_criterion(s: Submonoid) -> bool:
    """Membership in L via s - {0, ..., P(s)-1} ⊂ S for members s.

    Members beyond F(S) + max(msg(S)) need not be checked: a failing generator
    pair n_i + n_j - 1 is a gap, so n_i + n_j <= F(S) + 1.
    """
    _require_numerical_or_trivial(s)
    if s.gcd == 0:
        return False
    top = s.frobenius + s.gens[-1]
    for x in range(1, top + 1):
        if not s.contains(x):
            continue
        p = s.max_fact_length(x)
        if not all(s.contains(x - j) for j in range(p)):
            return False
    return True


def ld_closure(
    values: Iterable[int],
    cls: LDClass,
    bound: Optional[int] = None,
) -> Tuple[Submonoid, ClosureTrace]:
    """The smallest monoid of the class containing ``values``.

    Repeats ``B <- msg(A)`` and ``A <- B ∪ {x+y+e : x, y in B, e in E,
    x+y+e not in <B>}`` until ``A = B``. Inputs containing 1 yield N.

    Args:
        values: The integers the result must contain, all at least 1
        cls: The class to close under
        bound: Iteration budget (defaults to the settings value)

    Returns:
        The resulting monoid and the trace of all iterations

    Raises:
        Overflow: If the budget runs out first; the exception carries the trace
    """
    bound = get_settings().closure_bound if bound is None else bound
    current = set(values)
    if not current:
        raise PreconditionViolated("The closure needs at least one integer")
    if min(current) < 1:
        raise PreconditionViolated(f"Closure inputs must be positive, got {min(current)}")

    offsets = sorted(cls.offsets)
    trace = ClosureTrace()
    k = 0
    while True:
        k += 1
        spanned = Submonoid.from_generators(current)
        gens = spanned.gens
        if gens == (1,):
            added = set()
        else:
            added = {
                x + y + e
                for i, x in enumerate(gens)
                for y in gens[i:]
                for e in offsets
                if not spanned.contains(x + y + e)
            }
        current = set(gens) | added
        trace.iterations.append((gens, tuple(sorted(current))))
        logger.debug(f"Closure iteration {k}: B={list(gens)}, new={sorted(added)}")

        if k > bound:
            trace.bound_hit = True
            logger.info(f"Closure of {cls} exceeded {bound} iterations")
            raise Overflow(f"overflow after {bound} iterations", trace=trace)
        if not added:
            trace.converged = True
            return spanned, trace


def remove_generator_ok(s: Submonoid, gen: int) -> bool:
    """Whether S minus {gen} stays in L-, for S in L- with 3 not in S.

    The answer is the criterion "gen-1, gen+1, gen+3 are gaps or minimal
    generators", cross-checked against a direct recomputation.

    Raises:
        PreconditionViolated: If 3 is in S, gen is not in msg(S) or S is not in L-
        CriterionMismatch: If the criterion and the recomputation disagree
    """
    _check_removal(s, gen)
    verdict = all(_gap_or_generator(s, gen + d) for d in (-1, 1, 3))
    _cross_check(s, gen, verdict)
    return verdict


def remove_generator_ok_tail(s: Submonoid, gen: int) -> bool:
    """The removal criterion for a generator above F(S).

    S minus {gen} is in L- iff gen-1 is a gap or a minimal generator and
    gen+1, gen+3 are minimal generators.
    """
    _check_removal(s, gen)
    if gen <= s.frobenius:
        raise PreconditionViolated(f"{gen} is not above F(S) = {s.frobenius}")
    verdict = _gap_or_generator(s, gen - 1) and gen + 1 in s.gens and gen + 3 in s.gens
    _cross_check(s, gen, verdict)
    return verdict


def _gap_or_generator(s: Submonoid, x: int) -> bool:
    return not s.contains(x) or x in s.gens


def _check_removal(s: Submonoid, gen: int) -> None:
    _require_numerical_or_trivial(s)
    if s.contains(3):
        raise PreconditionViolated(f"3 lies in {s!r}; the removal criterion needs 3 to be a gap")
    if gen not in s.gens:
        raise PreconditionViolated(f"{gen} is not a minimal generator of {s!r}")
    if not is_ld(s, LDClass.LMINUS):
        raise PreconditionViolated(f"{s!r} is not in L-")


def _cross_check(s: Submonoid, gen: int, verdict: bool) -> None:
    direct = is_ld(s.remove_generator(gen), LDClass.LMINUS)
    if direct != verdict:
        logger.error(f"Removal criterion says {verdict} for {s!r} minus {gen}, recomputation says {direct}")
        raise CriterionMismatch(f"Removal criterion disagrees with recomputation for {s!r} minus {gen}")


def variety_children(s: Submonoid, cls: LDClass) -> List[Submonoid]:
    """The children S minus {g} (g in msg(S), g > F(S)) that lie in the class."""
    return [t for t in s.children() if is_ld(t, cls)]


def enumerate_by_genus(cls: LDClass, max_genus: int, frontier_cap: Optional[int] = None) -> List[Submonoid]:
    """All monoids of the class with genus at most ``max_genus``.

    The walk descends the tree of class L, which is closed under adjoining
    the Frobenius number. L- is not (S_3 is in L-, its parent S_2 is not), so
    its members are picked out of the L walk by filtering.
    """
    found = walk_genus_tree(
        max_genus,
        expand=lambda t: variety_children(t, LDClass.L),
        frontier_cap=frontier_cap,
    )
    if cls is LDClass.L:
        return found
    return [t for t in found if is_ld(t, LDClass.LMINUS)]
