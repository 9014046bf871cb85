import pytest

import pilift


def test_builtin_names_include_corpus():
    names = pilift.builtin_names()
    for n in ("s3", "a4", "e27", "section4"):
        assert n in names


def test_s3_character_table():
    g = pilift.Group.builtin("s3")
    assert (g.order, g.degree, g.class_count) == (6, 3, 3)
    table = g.character_table()
    assert sorted(c["degree"] for c in table["characters"]) == [1, 1, 2]


def test_s3_partial_characters_and_lifts():
    g = pilift.Group.builtin("s3")
    ipi = g.ipi([3])
    assert [m["degree"] for m in ipi["members"]] == [1, 2]
    assert g.lifts(3, 0) == [0, 1]
    assert g.lifts("3", 1) == [2]
    with pytest.raises(IndexError):
        g.lifts(3, 5)


def test_perm_text_and_separability():
    g = pilift.Group.from_perm_text("degree 4\n(1 2 3 4)\n(1 3)\n")
    assert g.order == 8
    assert pilift.Group.builtin("a5").pi_separable(2) is False
    assert pilift.Group.builtin("s4").pi_separable((2, 3))


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        pilift.Group.builtin("nope")
    with pytest.raises(pilift.GroupError):
        pilift.Group.from_perm_text("(1 2)\n")
    with pytest.raises(ValueError):
        pilift.Group.builtin("s3").ipi("4")


def test_section4_report():
    r = pilift.section4()
    assert r["order"] == 1323
    assert r["lift_count"] == 13
    assert r["all_pass"]


def test_verify_small_groups_is_deterministic():
    a = pilift.verify(["s3", "a4", "d8"], jobs=1)
    b = pilift.verify(["s3", "a4", "d8"], jobs=2)
    assert a == b
    assert a["anomaly_count"] == 0
    assert a["properties"]["main1"]["fail"] == 0
    assert a["properties"]["main1"]["pass"] > 0
