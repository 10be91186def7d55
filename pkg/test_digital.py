"""
Tests for b-digital semigroups and the bounded verifiers.
"""
import pytest

from sgdigit.core.digital import (
    DigitalSemigroup, PredicateSet, Verdict, complement, double_min_condition, lengths_of,
    no_exact_sum_length, phi, power_shift_condition, smallest_digital_containing, theta,
    theta_contains, verify_closure, verify_digital_set,
)
from sgdigit.core.digits import Base, delta_band, delta_count, length, length_offsets, product_offset_witness
from sgdigit.core.errors import InfiniteComplement, NotRepresentable, Overflow, PreconditionViolated, ResourceLimit
from sgdigit.core.ldsg import LDClass, enumerate_by_genus
from sgdigit.core.monoid import Submonoid
from sgdigit.utils.config import Settings, set_settings

ROUND_TRIP_BASES = [2, 10, -2, -3]
CLOSURE_BOUND = 2000
CLOSURE_OF_EIGHT = (8, 13, 15, 17, 18, 20, 22, 27)


def S(*gens):
    return Submonoid.from_generators(gens)


@pytest.fixture(scope="module")
def class_members():
    return {cls: enumerate_by_genus(cls, 8) for cls in LDClass}


def test_theta_contains():
    d = theta(-2, Submonoid.tail(3))
    assert theta_contains(d, 3)
    assert -1 not in d
    assert 7 not in theta(10, Submonoid.tail(2))
    with pytest.raises(NotRepresentable):
        theta_contains(d, 0)
    with pytest.raises(NotRepresentable):
        theta(10, Submonoid.tail(2)).contains(-5)


def test_theta_checks_the_class():
    with pytest.raises(PreconditionViolated):
        theta(-2, Submonoid.tail(2))
    with pytest.raises(PreconditionViolated):
        theta(10, S(2, 5))
    with pytest.raises(InfiniteComplement):
        theta(10, S(4, 6))
    assert theta(10, Submonoid.tail(2)).is_valid
    assert not DigitalSemigroup(Base(-2), S(2, 5)).is_valid


def test_membership_is_length_saturated():
    d = theta(-3, S(3, 5, 7))
    for n in range(1, 8):
        band = delta_band(-3, n)
        verdicts = {d.contains(z) for z in band}
        assert verdicts == {d.lengths.contains(n)}


@pytest.mark.parametrize("b, values, lengths", [
    (-2, {3, -1}, {3, 2}),
    (10, {5, 50, 500}, {1, 2, 3}),
    (2, {1}, {1}),
])
def test_lengths_of(b, values, lengths):
    assert lengths_of(b, values) == lengths


def test_lengths_of_rejects_foreign_integers():
    with pytest.raises(NotRepresentable):
        lengths_of(10, {5, -5})


def test_smallest_digital_containing():
    d = smallest_digital_containing(-2, [delta_band(-2, 8).lo])
    assert d.lengths.gens == CLOSURE_OF_EIGHT
    assert smallest_digital_containing(-2, [-170, -43]).lengths.gens == CLOSURE_OF_EIGHT
    assert smallest_digital_containing(10, [5]).lengths.is_natural
    assert smallest_digital_containing(10, [10]).lengths == S(2, 3)
    assert smallest_digital_containing(-2, [-1, 3]).lengths.is_natural
    with pytest.raises(PreconditionViolated):
        smallest_digital_containing(10, [])
    with pytest.raises(Overflow):
        smallest_digital_containing(-2, [100], bound=0)


def test_complement_examples():
    assert complement(theta(-2, Submonoid.tail(3))) == [-2, -1, 1]
    assert complement(theta(10, Submonoid.natural())) == []
    assert complement(theta(2, Submonoid.tail(2))) == [1]
    assert complement(theta(10, S(2, 3))) == list(range(1, 10))


@pytest.mark.parametrize("b, gens", [
    (-2, CLOSURE_OF_EIGHT),
    (-3, (3, 5, 7)),
    (10, (4, 6, 7, 9)),
    (3, (3, 4, 5)),
])
def test_complement_cardinality(b, gens):
    d = theta(b, S(*gens))
    missing = complement(d)
    assert len(missing) == sum(delta_count(b, n) for n in d.lengths.gaps())
    assert not any(d.contains(z) for z in missing)
    assert missing == sorted(missing)


def test_complement_respects_table_cap():
    set_settings(Settings(max_table=5))
    with pytest.raises(ResourceLimit):
        complement(theta(10, Submonoid.tail(3)))


@pytest.mark.parametrize("b", ROUND_TRIP_BASES)
def test_phi_inverts_theta(b, class_members):
    for s in class_members[LDClass.for_base(b)]:
        assert phi(theta(b, s)) == s


def test_phi_on_predicate_sets():
    tail = PredicateSet(Base(-2), lambda z: length(-2, z) >= 3)
    assert phi(tail, max_length=10) == Submonoid.tail(3)
    with pytest.raises(PreconditionViolated):
        phi(tail)
    # odd lengths are not closed under addition
    odd = PredicateSet(Base(-2), lambda z: length(-2, z) % 2 == 1)
    with pytest.raises(PreconditionViolated):
        phi(odd, max_length=10)


@pytest.mark.parametrize("b", ROUND_TRIP_BASES)
def test_class_members_are_closed_under_products(b, class_members):
    for s in class_members[LDClass.for_base(b)]:
        verdict = verify_closure(theta(b, s), CLOSURE_BOUND)
        assert verdict.holds, (b, s, verdict.counterexample)
        assert verdict.counterexample is None


@pytest.mark.parametrize("b, gens, bound", [(10, (2, 3), 1000), (-2, (3, 4, 5), 500)])
def test_verify_closure_examples(b, gens, bound):
    assert verify_closure(theta(b, S(*gens)), bound)


def test_verify_closure_finds_counterexample():
    broken = DigitalSemigroup(Base(-2), S(2, 5))
    verdict = verify_closure(broken, 100)
    assert not verdict
    assert verdict.counterexample == (-1, -1, 1)
    assert verdict.to_dict()["counterexample"] == [-1, -1, 1]


def test_verify_closure_for_base_ten_without_three_digits():
    broken = DigitalSemigroup(Base(10), S(2, 5))
    verdict = verify_closure(broken, 100)
    assert verdict.counterexample == (10, 10, 100)


def test_verify_closure_rejects_small_bound():
    with pytest.raises(PreconditionViolated):
        verify_closure(theta(-3, Submonoid.tail(3)), 2)


@pytest.mark.parametrize("b, gens", [
    (2, (3, 4, 5)),
    (3, (2, 3)),
    (10, (4, 6, 7, 9)),
    (-2, (3, 5, 7)),
    (-3, CLOSURE_OF_EIGHT),
])
def test_products_realise_every_offset(b, gens):
    d = theta(b, S(*gens))
    lengths = [n for n in d.lengths.members(8) if n >= 2]
    for x in lengths:
        for y in lengths:
            for e in length_offsets(b):
                if b == -2 and min(x, y) == 2 and e == 1:
                    continue
                a, c = product_offset_witness(b, x, y, e)
                assert d.contains(a) and d.contains(c)
                assert d.contains(a * c)
                assert d.lengths.contains(x + y + e)


@pytest.mark.parametrize("b", [2, 3, 10, -2, -3])
def test_length_sets_of_class_members(b, class_members):
    for s in class_members[LDClass.for_base(b)]:
        d = theta(b, s)

        def has_length(k):
            return d.contains(delta_band(b, k).lo)

        lengths = [n for n in range(1, s.frobenius + 3) if has_length(n)]
        for x in lengths:
            for y in lengths:
                assert has_length(x + y - 1), (s, x, y)
                if b >= 3:
                    assert has_length(x + y), (s, x, y)
                if b <= -3:
                    assert has_length(x + y + 1), (s, x, y)
                if b > 0:
                    low = delta_band(b, x).lo * delta_band(b, y).lo
                    assert length(b, low) == x + y - 1 and d.contains(low)
                if b >= 3:
                    high = delta_band(b, x).hi * delta_band(b, y).hi
                    assert length(b, high) == x + y and d.contains(high)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", range(1, 7))
def test_no_exact_sum_length_base_minus_two(n, m):
    verdict = no_exact_sum_length(-2, n, m)
    assert verdict.holds
    assert verdict.checked == delta_count(-2, n) * delta_count(-2, m)


def test_no_exact_sum_length_options():
    assert no_exact_sum_length(-3, 2, 2)
    assert no_exact_sum_length(-2, 9, 9, bound=100)
    assert no_exact_sum_length(-2, 9, 9, bound=10).checked == 0
    with pytest.raises(PreconditionViolated):
        no_exact_sum_length(10, 2, 2)
    set_settings(Settings(max_table=10))
    with pytest.raises(ResourceLimit):
        no_exact_sum_length(-2, 5, 5)


def test_verify_digital_set():
    assert verify_digital_set(2, lambda z: z == 1, 100)
    assert verify_digital_set(-2, lambda z: z == 1, 100)
    assert verify_digital_set(-3, lambda z: z > 0, 500)
    assert verify_digital_set(3, lambda z: z == 1, 100).counterexample == (1, 2)
    verdict = verify_digital_set(10, lambda z: length(10, z) in (2, 4, 5, 6), 200)
    assert verdict.counterexample == (10, 10, 100)


def test_verify_digital_set_accepts_theta():
    d = theta(-2, S(3, 5, 7))
    assert verify_digital_set(-2, d.contains, 300)


def test_double_min_condition():
    assert double_min_condition(theta(2, Submonoid.tail(3)))
    assert not double_min_condition(PredicateSet(Base(2), lambda z: z == 1))
    with pytest.raises(PreconditionViolated):
        double_min_condition(theta(10, Submonoid.tail(3)))


def test_power_shift_condition():
    assert power_shift_condition(theta(-2, Submonoid.tail(3)), 6)
    assert power_shift_condition(DigitalSemigroup(Base(10), S(2, 5)), 6)
    verdict = power_shift_condition(PredicateSet(Base(10), lambda z: z == 1), 4)
    assert verdict.counterexample == (0, 0, 1)


def test_verdict_and_json():
    assert not Verdict(False, (1, 2), 3)
    assert Verdict(True).to_dict() == {"holds": True, "counterexample": None, "checked": 0}
    d = theta(-2, Submonoid.tail(3))
    assert d.to_dict() == {
        "base": -2,
        "lengths": {"generators": [3, 4, 5], "gcd": 1, "multiplicity": 3, "frobenius": 2, "gaps": [1, 2], "genus": 2},
    }
