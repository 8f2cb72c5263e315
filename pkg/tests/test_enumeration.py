from itertools import product

import pytest

from magma_lab.core import Magma, canonical_form
from magma_lab.enumeration import (
    LATIN,
    MAX_ORDER_ENV,
    EnumSpec,
    InfeasibleError,
    count,
    tables,
)
from magma_lab.laws import CAI, H, IN, NE, R, A, C

from reference import is_latin, ref_holds


def test_all_magmas_counts():
    assert count(EnumSpec(order=1)) == 1
    assert count(EnumSpec(order=2)) == 16
    assert count(EnumSpec(order=3)) == 19683


def test_latin_counts_small():
    assert count(EnumSpec(order=1, mode=LATIN)) == 1
    assert count(EnumSpec(order=2, mode=LATIN)) == 2
    assert count(EnumSpec(order=3, mode=LATIN)) == 12


def test_latin_counts_match_naive_filter():
    # independent generate-and-filter oracle at small orders
    for n in (1, 2, 3):
        naive = sum(
            1
            for t in product(range(n), repeat=n * n)
            if is_latin(Magma(n, t))
        )
        assert count(EnumSpec(order=n, mode=LATIN)) == naive


def test_latin_counts_orders_4_and_5():
    assert count(EnumSpec(order=4, mode=LATIN)) == 576
    assert count(EnumSpec(order=5, mode=LATIN)) == 161280


def test_latin_mode_equals_filtered_stream():
    for n in (2, 3):
        filtered = [
            m.table for m in tables(EnumSpec(order=n)) if ref_holds(m, H)
        ]
        direct = [m.table for m in tables(EnumSpec(order=n, mode=LATIN))]
        assert filtered == direct


def test_constraint_pushdown_soundness():
    for law in (C, A, CAI, R):
        constrained = [m.table for m in tables(EnumSpec(order=3, constraints=(law,)))]
        filtered = [
            m.table for m in tables(EnumSpec(order=3)) if ref_holds(m, law)
        ]
        assert constrained == filtered


def test_structural_constraints_post_filtered():
    spec = EnumSpec(order=3, constraints=(A, C, NE, IN))
    assert count(spec) == 3
    assert count(EnumSpec(order=3, constraints=(A, C, NE, IN), up_to_iso=True)) == 1


def test_order_4_needs_equational_constraint():
    with pytest.raises(InfeasibleError, match="exceeds the all-magmas cap"):
        count(EnumSpec(order=4))
    assert count(EnumSpec(order=4, constraints=(CAI,))) == 5724


def test_latin_cap():
    with pytest.raises(InfeasibleError, match="exceeds the latin-squares cap"):
        count(EnumSpec(order=7, mode=LATIN))


def test_env_override_replaces_cap(monkeypatch):
    monkeypatch.setenv(MAX_ORDER_ENV, "2")
    with pytest.raises(InfeasibleError):
        count(EnumSpec(order=3))
    assert count(EnumSpec(order=2)) == 16
    monkeypatch.setenv(MAX_ORDER_ENV, "zap")
    with pytest.raises(InfeasibleError, match="bad MAGMA_LAB_MAX_ORDER"):
        count(EnumSpec(order=2))


def test_invalid_specs():
    with pytest.raises(InfeasibleError, match="unknown mode"):
        count(EnumSpec(order=2, mode="sparse"))
    with pytest.raises(InfeasibleError, match="order must be positive"):
        count(EnumSpec(order=0))
    with pytest.raises(InfeasibleError, match="contradicts"):
        count(EnumSpec(order=2, mode=LATIN, non_latin=True))


def test_non_latin_flag():
    spec = EnumSpec(order=2, non_latin=True)
    got = [m.table for m in tables(spec)]
    expected = [
        m.table for m in tables(EnumSpec(order=2)) if not ref_holds(m, H)
    ]
    assert got == expected
    assert count(spec) == 14


def test_lexicographic_stream_order():
    seen = [m.table for m in tables(EnumSpec(order=2))]
    assert seen == sorted(seen)
    assert seen[0] == (0, 0, 0, 0)
    assert seen[-1] == (1, 1, 1, 1)
    latin = [m.table for m in tables(EnumSpec(order=3, mode=LATIN))]
    assert latin == sorted(latin)


def test_up_to_iso_emits_canonical_representatives():
    reps = list(tables(EnumSpec(order=3, mode=LATIN, up_to_iso=True)))
    assert len(reps) == 5
    for m in reps:
        assert canonical_form(m) == m
    # they cover all 12 squares up to isomorphism
    forms = {canonical_form(m).table for m in tables(EnumSpec(order=3, mode=LATIN))}
    assert forms == {m.table for m in reps}


def test_worker_streams_identical():
    for spec in (EnumSpec(order=3), EnumSpec(order=4, mode=LATIN),
                 EnumSpec(order=3, constraints=(C,))):
        base = [m.table for m in tables(spec, workers=1)]
        for w in (2, 8):
            assert [m.table for m in tables(spec, workers=w)] == base


def test_worker_counts_identical():
    spec = EnumSpec(order=4, mode=LATIN)
    assert count(spec, workers=1) == count(spec, workers=2) == 576
