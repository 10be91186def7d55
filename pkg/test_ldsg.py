"""
Tests for the classes L and L- and the closure algorithm.
"""
import pytest

from sgdigit.core.errors import InfiniteComplement, Overflow, PreconditionViolated
from sgdigit.core.ldsg import (
    LDClass, enumerate_by_genus, is_ld, is_ld_direct, is_ld_positive_criterion, ld_closure,
    ld_violation, remove_generator_ok, remove_generator_ok_tail, variety_children,
)
from sgdigit.core.monoid import Submonoid, enumerate_numerical
from sgdigit.utils.config import Settings, set_settings

L, LMINUS = LDClass.L, LDClass.LMINUS
CLOSURE_OF_EIGHT = (8, 13, 15, 17, 18, 20, 22, 27)
SWEEP_GENUS = 12


def S(*gens):
    return Submonoid.from_generators(gens)


@pytest.fixture(scope="module")
def small_monoids():
    return enumerate_numerical(SWEEP_GENUS)


def test_class_offsets_and_names():
    assert L.offsets == {-1}
    assert LMINUS.offsets == {-3, -1, 1}
    assert LDClass.for_base(10) is L
    assert LDClass.for_base(-2) is LMINUS
    assert LDClass.parse(" LMinus ") is LMINUS
    assert str(L) == "l"
    with pytest.raises(ValueError):
        LDClass.parse("m")


@pytest.mark.parametrize("gens, in_l, in_lminus", [
    ((1,), True, True),
    ((2, 3), True, False),
    ((3, 4, 5), True, True),
    ((3, 5, 7), True, True),
    ((4, 6, 7, 9), True, False),
    ((4, 5, 7), True, False),
    ((2, 5), False, False),
    ((3, 4), False, False),
])
def test_is_ld_examples(gens, in_l, in_lminus):
    s = S(*gens)
    assert is_ld(s, L) == in_l
    assert is_ld(s, LMINUS) == in_lminus


@pytest.mark.parametrize("gens, cls, violation", [
    ((4, 6, 7, 9), LMINUS, (4, 4, -3)),
    ((4, 5, 7), LMINUS, (4, 5, -3)),
    ((2, 3), LMINUS, (2, 2, -3)),
    ((2, 5), L, (2, 2, -1)),
    ((3, 5, 7), LMINUS, None),
])
def test_ld_violation(gens, cls, violation):
    assert ld_violation(S(*gens), cls) == violation


def test_trivial_and_non_numerical_monoids():
    assert not is_ld(Submonoid.from_generators([]), L)
    with pytest.raises(InfiniteComplement):
        is_ld(S(4, 6), L)


def test_tails_in_lminus_except_two():
    for n in range(1, 51):
        assert is_ld(Submonoid.tail(n), LMINUS) == (n != 2)


@pytest.mark.parametrize("n", range(2, 21))
def test_tail_without_top_generator_leaves_l(n):
    s = Submonoid.tail(n).remove_generator(2 * n - 1)
    assert not is_ld(s, L)
    assert ld_violation(s, L) == (n, n, -1)


def test_genus_sweep_is_complete(small_monoids):
    assert len(small_monoids) == 1413
    assert max(len(s.gaps()) for s in small_monoids) == SWEEP_GENUS


def test_membership_checks_agree(small_monoids):
    for s in small_monoids:
        for cls in LDClass:
            assert is_ld(s, cls) == is_ld_direct(s, cls), s
        assert is_ld(s, L) == is_ld_positive_criterion(s), s


def test_lminus_inside_l(small_monoids):
    for s in small_monoids:
        if is_ld(s, LMINUS):
            assert is_ld(s, L), s


def test_classes_closed_under_intersection():
    members = [s for s in enumerate_numerical(4) if is_ld(s, L)]
    for cls in LDClass:
        picked = [s for s in members if is_ld(s, cls)]
        for s in picked:
            for t in picked:
                assert is_ld(s.intersect(t), cls), (s, t)


def test_adjoining_frobenius_keeps_l(small_monoids):
    for s in small_monoids:
        if not s.is_natural and is_ld(s, L):
            assert is_ld(s.adjoin_frobenius(), L), s


def test_adjoining_frobenius_can_leave_lminus():
    assert Submonoid.tail(4).adjoin_frobenius() == Submonoid.tail(3)
    assert is_ld(Submonoid.tail(3), LMINUS)
    assert not is_ld(Submonoid.tail(3).adjoin_frobenius(), LMINUS)


def test_closure_of_two():
    s, trace = ld_closure([2], L)
    assert s == S(2, 3)
    assert trace.converged and len(trace.iterations) == 2
    s, _ = ld_closure([2], LMINUS)
    assert s.is_natural


def test_closure_of_eight_in_lminus():
    s, trace = ld_closure([8], LMINUS)
    assert trace.iterations == [
        ((8,), (8, 13, 15, 17)),
        ((8, 13, 15, 17), (8, 13, 15, 17, 18, 20, 22, 27, 35)),
        (CLOSURE_OF_EIGHT, CLOSURE_OF_EIGHT),
    ]
    assert s.gens == CLOSURE_OF_EIGHT
    assert s.frobenius == 19
    assert s.gaps() == [1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 19]
    assert s.render_members() == "{0, 8, 13, 15, 16, 17, 18, 20, ->}"
    # 35 = 17 + 18 is produced on the way but is not a minimal generator
    assert 35 in s and 35 not in s.gens
    assert trace.to_dict()["converged"] is True


def test_closure_is_in_class_and_minimal():
    for cls in LDClass:
        for a in range(2, 13):
            s, _ = ld_closure([a], cls)
            assert is_ld(s, cls)
            assert a in s
            if not s.is_natural:
                # every child drops out of the class or loses a
                for t in variety_children(s, cls):
                    assert a not in t


def test_closure_overflow():
    with pytest.raises(Overflow) as info:
        ld_closure([8], LMINUS, bound=0)
    assert info.value.trace.bound_hit
    assert len(info.value.trace.iterations) == 1
    with pytest.raises(Overflow):
        ld_closure([8], LMINUS, bound=2)
    s, _ = ld_closure([8], LMINUS, bound=3)
    assert s.gens == CLOSURE_OF_EIGHT


def test_closure_bound_from_settings():
    set_settings(Settings(closure_bound=1))
    with pytest.raises(Overflow):
        ld_closure([8], LMINUS)


@pytest.mark.parametrize("values", [[], [0, 5], [-2]])
def test_closure_rejects_inputs(values):
    with pytest.raises(PreconditionViolated):
        ld_closure(values, L)


@pytest.mark.parametrize("n", range(4, 16))
def test_removal_from_tails(n):
    tail = Submonoid.tail(n)
    assert remove_generator_ok(tail, n)
    assert not remove_generator_ok(tail, 2 * n - 1)
    assert remove_generator_ok_tail(tail, n)
    assert not remove_generator_ok_tail(tail, 2 * n - 1)


def test_removal_from_closure_of_eight():
    s = S(*CLOSURE_OF_EIGHT)
    # 26 = 13 + 13 is a member but not a minimal generator
    assert not remove_generator_ok(s, 27)
    assert not remove_generator_ok_tail(s, 27)
    for g in s.gens:
        assert remove_generator_ok(s, g) == is_ld(s.remove_generator(g), LMINUS)


def test_removal_preconditions():
    with pytest.raises(PreconditionViolated):
        remove_generator_ok(S(3, 5, 7), 5)
    with pytest.raises(PreconditionViolated):
        remove_generator_ok(S(4, 5, 7), 7)
    with pytest.raises(PreconditionViolated):
        remove_generator_ok(Submonoid.tail(4), 8)
    with pytest.raises(PreconditionViolated):
        remove_generator_ok_tail(S(*CLOSURE_OF_EIGHT), 8)


def test_removal_criterion_over_small_monoids(small_monoids):
    for s in small_monoids:
        if s.contains(3) or not is_ld(s, LMINUS):
            continue
        for g in s.gens:
            ok = remove_generator_ok(s, g)
            assert ok == is_ld(s.remove_generator(g), LMINUS), (s, g)
            if g > s.frobenius:
                assert remove_generator_ok_tail(s, g) == ok, (s, g)


def test_variety_children():
    assert variety_children(Submonoid.natural(), L) == [S(2, 3)]
    assert variety_children(Submonoid.natural(), LMINUS) == []
    assert variety_children(Submonoid.tail(3), LMINUS) == [S(3, 5, 7), Submonoid.tail(4)]


def test_enumerate_by_genus():
    assert enumerate_by_genus(LMINUS, 2) == [Submonoid.natural(), Submonoid.tail(3)]
    assert enumerate_by_genus(L, 2) == [Submonoid.natural(), S(2, 3), S(3, 4, 5)]


@pytest.mark.parametrize("cls", list(LDClass))
def test_enumerate_by_genus_matches_filter(cls):
    expected = [s for s in enumerate_numerical(6) if is_ld(s, cls)]
    assert enumerate_by_genus(cls, 6) == expected


def test_remark_monoid_in_l_only():
    s = Submonoid.from_gaps([1, 2, 3, 5, 6])
    assert s.render_members() == "{0, 4, 7, ->}"
    assert is_ld(s, L)
    assert ld_violation(s, LMINUS) == (4, 4, -3)
