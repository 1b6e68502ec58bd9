import pytest

import nilclean


def test_index():
    rep = nilclean.index("UT2(Z2)")
    assert rep["order"] == 8
    assert rep["nin"] == 2
    assert rep["hash"] == "d0ad49a50b740dc8"
    assert sum(rep["histogram"].values()) == 8

    assert nilclean.index("Tri(Z4,reg,Z4)")["nin"] == 4


def test_eta_and_element_sets():
    assert nilclean.eta("Z3", 2) == []
    assert nilclean.eta("UT2(Z2)", 4) == [4, 6]
    assert nilclean.idempotents("Z4") == [0, 1]
    assert nilclean.nilpotents("Z4") == [0, 2]
    assert nilclean.units("Z4") == [1, 3]


def test_classify_group():
    assert nilclean.classify_group("UT2(Z2)") == "C2xC2xC2"
    assert nilclean.classify_group("Z4") == "C4"


def test_verify():
    (rep,) = nilclean.verify("main", "Tri(Z4,reg,Z4)")
    assert rep["verdict"] == "pass"
    reps = nilclean.verify("l25", "UT2(Z3)")
    assert len(reps) == 3
    assert all(r["verdict"] == "pass" for r in reps)


def test_errors():
    with pytest.raises(nilclean.NilcleanParseError):
        nilclean.index("Z 4")
    with pytest.raises(nilclean.ElaborationError):
        nilclean.verify("main", "Z4")


def test_enum_bimodules():
    assert nilclean.enum_bimodules("Z2", "UT2(Z2)", "C2") == 2
    assert nilclean.enum_bimodules("Z2", "Z2", "C3") == 0


def test_small_corpus():
    result = nilclean.corpus(catalog=["Z2", "Z3"], m_orders=[2], jobs=2)
    assert result["fail"] == 0
    assert result["instances"] >= 1
    assert len(result["reports"]) == result["checks"] + result["skipped"]
