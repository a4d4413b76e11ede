import pytest

from arcmaps.families import (
    FamilyParameterError,
    TABLE1_CASES,
    TABLE1_COLUMNS,
    TABLE2_CASES,
    TABLE2_COLUMNS,
    TWO_GROUP_CASES,
    build_family,
    build_odd_p_group,
    build_table_group,
    build_two_group,
    check_family_parameter,
    emit_family_table,
    expected_table_order,
    expected_two_group_tag,
    family_chi_law,
    family_row,
    table_min_ell,
    wreath_square,
)
from arcmaps.products import direct_product
from arcmaps.standard import cyclic_group, gl2_3, sl2_3, symmetric_group
from arcmaps.structure import isomorphic, recognize, satisfies_hypothesis
from arcmaps.triples import check_triple

# the published square-free rows for the three families
C31_TABLE = [
    (5, -10, "-2.5"),
    (13, -130, "-2.5.13"),
    (17, -238, "-2.7.17"),
    (29, -754, "-2.13.29"),
    (37, -1258, "-2.17.37"),
    (41, -1558, "-2.19.41"),
]
C33_TABLE = [
    (2, 2, "2"),
    (10, -70, "-2.5.7"),
    (14, -154, "-2.7.11"),
    (22, -418, "-2.11.19"),
    (26, -598, "-2.13.23"),
    (34, -1054, "-2.17.31"),
]
C34_TABLE = [
    (3, -3, "-3"),
    (5, -15, "-3.5"),
    (7, -35, "-5.7"),
    (13, -143, "-11.13"),
    (17, -255, "-3.5.17"),
    (19, -323, "-17.19"),
    (23, -483, "-3.7.23"),
]


def test_wreath_square_orders():
    for n in (2, 3, 5):
        X, _ = wreath_square(n)
        assert X.order == 8 * n * n


def test_wreath_square_contains_family_subgroups():
    X, names = wreath_square(5)
    for fam in ("C31", "C33"):
        inst = build_family(fam, 5)
        assert all(g in X for g in inst.group.generators)


def test_family_orders_and_triples():
    for fam, n, order in (("C31", 5, 100), ("C33", 2, 16), ("C34", 3, 72)):
        inst = build_family(fam, n)
        assert inst.group.order == order
        assert check_triple(inst.group, inst.triple.elements, "regular")


def test_family_parameter_validation():
    assert check_family_parameter("C31", 4) is not None
    assert check_family_parameter("C34", 2) is not None
    assert check_family_parameter("C33", 1) is not None
    assert check_family_parameter("C33", 2) is None
    with pytest.raises(FamilyParameterError):
        build_family("C31", 4)


def test_chi_law():
    assert family_chi_law("C31", 5) == -10
    assert family_chi_law("C33", 2) == 2
    assert family_chi_law("C34", 23) == -483
    assert family_chi_law("C31", 3) == 0


def test_family_row_at_n3_is_zero_and_not_squarefree():
    row = family_row("C31", 3)
    assert row.chi == 0
    assert row.factorization == "0"
    assert not row.squarefree


@pytest.mark.parametrize(
    "family,table",
    [("C31", C31_TABLE), ("C33", C33_TABLE), ("C34", C34_TABLE)],
)
def test_family_tables_match_published_rows(family, table):
    rows = emit_family_table(family, [n for n, _, _ in table])
    got = [(r.n, r.chi, r.factorization, r.squarefree) for r in rows]
    want = [(n, chi, dots, True) for n, chi, dots in table]
    assert got == want


def test_two_group_catalog_tags():
    for ell in (1, 2):
        for case in TWO_GROUP_CASES:
            G = build_two_group(case, ell)
            assert recognize(G) == expected_two_group_tag(case, ell)
            assert satisfies_hypothesis(G).ok


def test_two_group_orders():
    G = build_two_group("1.3+", 1)  # Z8:Z2 with a -> a^5
    assert G.order == 16
    assert not G.is_abelian()
    assert max(G.element_orders()) == 8
    assert build_two_group("2.2", 1).order == 32
    assert build_two_group("2.3", 1).order == 16
    with pytest.raises(FamilyParameterError):
        build_two_group("9.9", 1)


def test_odd_p_catalog():
    assert build_odd_p_group("1", 5, 2).order == 25
    assert build_odd_p_group("2", 3, 2).order == 27
    G = build_odd_p_group("3", 3, 2)
    assert G.order == 27
    assert G.center().order == 3
    with pytest.raises(FamilyParameterError):
        build_odd_p_group("3", 3, 1)
    with pytest.raises(FamilyParameterError):
        build_odd_p_group("1", 4, 1)


def test_table1_known_entries():
    s4 = build_table_group(1, "1.1", "Z2^2", 1)
    assert s4.order == 24
    assert isomorphic(s4, symmetric_group(4))
    gl = build_table_group(1, "1.1", "Q8", 1)
    assert gl.order == 48
    assert isomorphic(gl, gl2_3())
    zgl = build_table_group(1, "1.1", "Z4oQ8", 1)
    assert zgl.order == 96


def test_table2_known_entries():
    from arcmaps.standard import alternating_group, dihedral_group

    d6a4 = build_table_group(2, "2.1", "Z2^2,Z2^3", 1)
    assert d6a4.order == 72
    model = direct_product(dihedral_group(3), alternating_group(4)).group
    assert isomorphic(d6a4, model)


def test_table_orders_match_symbolic_formula():
    for case in TABLE1_CASES:
        for col in TABLE1_COLUMNS:
            ell = table_min_ell(1, case)
            G = build_table_group(1, case, col, ell)
            assert G.order == expected_table_order(1, case, col, ell)
    for case in TABLE2_CASES:
        for col in TABLE2_COLUMNS:
            ell = table_min_ell(2, case)
            G = build_table_group(2, case, col, ell)
            assert G.order == expected_table_order(2, case, col, ell)


def test_table_rejects_bad_coordinates():
    with pytest.raises(FamilyParameterError):
        build_table_group(1, "1.9", "Z2^2", 1)
    with pytest.raises(FamilyParameterError):
        build_table_group(1, "1.1", "Z9", 1)
    with pytest.raises(FamilyParameterError):
        build_table_group(1, "1.7", "Z2^2", 1)  # needs ell >= 2
    with pytest.raises(FamilyParameterError):
        build_table_group(3, "1.1", "Z2^2", 1)


def test_sl23_model_agrees_with_q8_z3():
    from arcmaps.families import _quaternion_auts
    from arcmaps.products import semidirect_product

    Q, s3, _ = _quaternion_auts()
    G = semidirect_product(Q, cyclic_group(3), [s3]).group
    assert G.order == 24
    assert isomorphic(G, sl2_3())


def test_emit_table_rejects_bad_range():
    with pytest.raises(FamilyParameterError):
        emit_family_table("C31", [4, 5])
