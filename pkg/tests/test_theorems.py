import pytest

from magma_lab.core import magma_from_rows
from magma_lab.enumeration import LATIN, EnumSpec, InfeasibleError, tables
from magma_lab.laws import CAI, CAII, H, A, C
from magma_lab.properties import holds
from magma_lab.theorems import (
    ALL_MAGMAS,
    BY_ID,
    CATALOG,
    QUASIGROUPS,
    Branch,
    TheoremSpec,
    verify_theorem,
    verify_theorems,
)


def test_catalog_shape():
    assert [t.id for t in CATALOG] == [f"T{i}" for i in range(1, 12)]
    domains = {t.id: t.domain for t in CATALOG}
    for tid in ("T1", "T2", "T3", "T4", "T5", "T6", "T7"):
        assert domains[tid] == ALL_MAGMAS
    for tid in ("T8", "T9", "T10", "T11"):
        assert domains[tid] == QUASIGROUPS
    assert {t.id: len(t.branches) for t in CATALOG} == {
        "T1": 1, "T2": 1, "T3": 1, "T4": 4, "T5": 10, "T6": 1,
        "T7": 1, "T8": 1, "T9": 1, "T10": 1, "T11": 8,
    }
    assert BY_ID["T5"].kind == "equivalence"
    assert BY_ID["T7"].kind == "implication"


def test_t11_omits_agi():
    tags = {p.tag for br in BY_ID["T11"].branches for p in br.premises}
    assert "AGI" not in tags
    assert {"CAI", "CAII", "AGII", "R"} <= tags


def test_all_theorems_verify_order_2():
    reports = verify_theorems(CATALOG, 2)
    assert all(r.verified for r in reports)
    by_domain = {r.theorem.domain: r.structures_examined for r in reports}
    assert by_domain[ALL_MAGMAS] == 17  # 1 + 16
    assert by_domain[QUASIGROUPS] == 3  # 1 + 2


def test_verify_single_theorem():
    rep = verify_theorem("T7", 3)
    assert rep.verified
    assert rep.structures_examined == 19700
    assert rep.counterexample is None
    assert rep.branch is None


def test_t8_over_latin_order_4():
    rep = verify_theorem("T8", 4)
    assert rep.verified
    assert rep.structures_examined == 591  # 1 + 2 + 12 + 576


def test_counterexample_detection_is_deterministic():
    bogus = TheoremSpec(
        "X1", "implication", ALL_MAGMAS,
        "commutativity forces associativity (it does not)",
        (Branch("{C} => {A}", (C,), (A,)),),
    )
    rep = verify_theorems([bogus], 2)[0]
    assert not rep.verified
    assert rep.branch == "{C} => {A}"
    assert rep.counterexample.rows() == [[1, 0], [0, 0]]
    # the whole domain is still swept
    assert rep.structures_examined == 17


def test_unknown_id():
    with pytest.raises(ValueError, match="unknown theorem id"):
        verify_theorem("T99", 2)


def test_feasibility_caps():
    with pytest.raises(InfeasibleError, match="caps at order 3"):
        verify_theorem("T1", 4)
    with pytest.raises(InfeasibleError, match="caps at order 5"):
        verify_theorem("T8", 6)


def test_quasigroup_cai_implies_associativity_consistency():
    # cross-theorem sanity: every Latin square of order <= 4 with CAII
    # also satisfies CAI and A
    for order in (1, 2, 3, 4):
        for m in tables(EnumSpec(order=order, mode=LATIN)):
            if holds(m, CAII):
                assert holds(m, CAI)
                assert holds(m, A)


def test_branch_labels_readable():
    assert BY_ID["T1"].branches[0].label == "{A,C} => {CAI,CAII,AGI,AGII,R}"
    labels = [br.label for br in BY_ID["T11"].branches]
    assert "{H,CAI} => {ABELIAN}" in labels
    assert "{ABELIAN} => {H,CAI}" in labels
