import pytest

import aprings


def test_lewis_polynomial_matches_enumeration():
    roots = aprings.integer_roots(-1, 1)
    for n in range(1, 7):
        assert aprings.lewis_polynomial(n) == aprings.annihilating_polynomial(roots, n)
    assert aprings.lewis_polynomial(3) == [9, 0, -10, 0, 1]


def test_quartic_sum_set():
    s = aprings.sum_set(aprings.roots_of_unity(4), 2)
    assert s["size"] == 9
    assert aprings.quartic_p(2) == aprings.annihilating_polynomial(aprings.roots_of_unity(4), 2)


def test_pfister_chain():
    assert aprings.pfister_chain_polynomial(2, 1) == [0, 8, -6, 1]
    assert aprings.annihilating_polynomial(aprings.integer_roots(0, 2), 2, "unsigned") == [0, 8, -6, 1]


def test_a5_table():
    computed = aprings.table_of_marks("A5")
    bundled = aprings.bundled_a5_table()
    assert computed["marks"] == bundled["marks"]
    assert [c["label"] for c in computed["classes"]][-1] == "A5"
    assert computed["marks"][0][0] == 60


def test_spectrum_and_analysis():
    assert aprings.spectrum("Z4[C2]")["local"] is True
    report = aprings.analyze("Z[C2]", "2 - 3*g")
    assert report["length"] == 5
    assert report["annihilated"] is True
    assert aprings.is_admissible("Z/4")[0] is True
    assert aprings.is_admissible({"kind": "FiniteQuotient", "modulus": 3, "group": [2], "ideal": []})[0] is False


def test_errors():
    with pytest.raises(aprings.ApringsError):
        aprings.analyze("Z[C2]", "2 - h")
    with pytest.raises(aprings.BoundExceeded):
        aprings.annihilating_polynomial(aprings.roots_of_unity(8), 20)


def test_suite_runs():
    results = aprings.run_suite("paper", "lewis")
    assert [r["id"] for r in results] == ["lewis-closed-form"]
    assert results[0]["passed"]
