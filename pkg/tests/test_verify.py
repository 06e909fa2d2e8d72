import pytest

from covernum.combinat import factorial
from covernum.verify import (
    CheckReport,
    check_32a,
    check_f_characterization,
    check_gamma0,
    check_lemma_ab,
    check_lemma_swap,
    check_order_dominance,
    check_power2,
    check_s5,
    check_s6,
    check_s10,
    check_stirling,
    check_subsum,
    check_theorem_solvable,
    check_unbeatable,
    coverage_manifest_ok,
    explicit_s6_cover,
    reproduce_theorem_table,
)


def test_swap():
    assert check_lemma_swap(40).verdict == "pass"
    # the two sample evaluations behind the claim
    assert factorial(3) ** 2 * 2 == 72 > 48 == 2**3 * 6
    assert factorial(5) ** 1 * 1 == factorial(1) ** 5 * factorial(5)


def test_ab():
    r = check_lemma_ab(60)
    assert r.verdict == "pass"
    # degree 12: the maximum over divisors sits at d = 2
    vals = {d: factorial(12 // d) ** d * factorial(d) for d in (2, 3, 4, 6)}
    assert vals[2] == 1036800 == max(vals.values())
    # degree 15: the maximum sits at d = 3
    vals15 = {d: factorial(15 // d) ** d * factorial(d) for d in (3, 5)}
    assert vals15[3] == 10368000 == max(vals15.values())


def test_order_dominance():
    r = check_order_dominance(12, 60)
    assert r.verdict == "pass"
    assert r.assumed_inputs
    assert 3**12 == 531441 < 2 * factorial(6) ** 2 == 1036800
    assert 3**13 < 2 * factorial(6) * factorial(7)


def test_f_char():
    r = check_f_characterization(500)
    assert r.verdict == "pass"
    assert r.witnesses["exceptions"] == [5, 7, 9, 10, 11, 13, 14, 18, 20, 40]
    assert check_f_characterization(30).verdict == "skipped"


def test_solvable(corpus):
    r = check_theorem_solvable(corpus)
    assert r.verdict == "pass"
    groups = r.witnesses["groups"]
    assert groups["C6"] == {"sigma0": 2, "branch": "two"}
    assert groups["S4"] == {"sigma0": 4, "sigma": 4, "branch": "equal"}
    assert groups["S3"] == {"sigma0": 4, "sigma": 4, "branch": "equal"}
    assert r.witnesses["skipped"]["S5"] == "not solvable"
    assert r.witnesses["skipped"]["A3"] == "cyclic p-group (no primary covering)"
    assert r.witnesses["checked_count"] >= 15


def test_s5(catalog):
    r = check_s5(catalog)
    assert r.verdict == "pass"
    assert r.witnesses["system_solutions"] == [(2, 0, 2)]
    assert r.witnesses["member_table"]["F20"] == (10, 0)
    assert r.witnesses["sigma0"] == 6


def test_s6(catalog):
    r = check_s6(catalog)
    assert r.verdict == "pass"
    assert r.witnesses["sigma0"] == 7
    assert r.witnesses["five_cycles"]["total"] == 144
    table = r.witnesses["table"]
    assert table["(2, 2, 2)"] == {"size": 15, "X1": 0, "X2": 3, "W3": 6,
                                  "W2": 7, "P": 10}
    assert table["(4, 1, 1)"] == {"size": 90, "X1": 30, "X2": 6, "W3": 0,
                                  "W2": 6, "P": 30}
    assert table["(2, 1, 1, 1, 1)"] == {"size": 15, "X1": 10, "X2": 7, "W3": 6,
                                        "W2": 3, "P": 0}


def test_explicit_s6_cover_has_seven_members(catalog):
    members = explicit_s6_cover(catalog)
    assert len(members) == 7
    orders = sorted(grp.order for _, grp in members)
    assert orders == [120] * 6 + [360]


@pytest.mark.parametrize("a", [2, 3, 4, 5])
def test_power2(a, catalog):
    r = check_power2(a, catalog)
    assert r.verdict == "pass", r.reason
    n = 1 << a
    assert r.witnesses["half_block_count"] == factorial(n // 2) * factorial(n // 2 - 1)
    if a == 3:
        assert r.witnesses["pgl2"] == 84
        assert r.witnesses["W2"] == 48
    if a == 2:
        assert r.witnesses["sigma0_s4"] == 4


def test_unbeatable_passing_degrees(catalog):
    for n in (5, 9, 10, 11, 13, 14, 18, 20, 40):
        r = check_unbeatable(n, catalog)
        assert r.verdict == "pass", (n, r.reason)
    r5 = check_unbeatable(5, catalog)
    assert r5.witnesses["verdict"] == "beaten"
    assert r5.witnesses["winning_count"] == 10
    r10 = check_unbeatable(10, catalog)
    assert r10.witnesses["beaten_by"] == "W5"


def test_unbeatable_degree7_reports_the_tie(catalog):
    # the strict claim fails at degree 7: 2-set stabilizers tie at 15;
    # the check must surface this as a fail with exact witnesses
    r = check_unbeatable(7, catalog)
    assert r.verdict == "fail"
    assert r.witnesses["verdict"] == "non_strong"
    assert r.witnesses["base_count"] == 15
    assert r.witnesses["X2"] == 15
    assert r.witnesses["brute_family_max"]["X2"] == 15


def test_unbeatable_brute_replay_small(catalog):
    r = check_unbeatable(5, catalog)
    brute = r.witnesses["brute_family_max"]
    assert brute == {"A5": 0, "X1": 6, "X2": 0, "P": 10}


def test_subsum():
    r = check_subsum(6)
    assert r.verdict == "pass"
    assert r.witnesses["exceptional_two_part"] == 6
    assert r.witnesses["exceptional_equal_triple"] == 6


def test_32a_formula(catalog):
    r = check_32a(2, element_level=False, catalog=catalog)
    assert r.verdict == "pass", r.reason
    assert r.witnesses["interval"] == (117, 216)
    assert r.witnesses["half_block_on_triple"] == 10800
    assert r.witnesses["competitors"]["W6"] == 10800
    assert r.witnesses["alt_forcing_ratio"] == 792
    r3 = check_32a(3, catalog=catalog)
    assert r3.verdict == "pass"
    assert r3.witnesses["interval"] == (1 + 245157, 253944)


def test_s10_forcing(catalog):
    r = check_s10(catalog=catalog, skip_solve=True)
    assert r.verdict == "skipped"
    assert r.witnesses["forcing_ratio"] == 126
    assert r.witnesses["class_5_5"] == 72576
    assert r.witnesses["competitor_counts"]["W5"] == 576


def test_stirling():
    assert check_stirling(200).verdict == "pass"


def test_gamma0(corpus):
    r = check_gamma0(corpus)
    assert r.verdict == "pass"
    assert set(r.witnesses["gamma0"].values()) == {2}


def test_coverage_manifest():
    ok, missing = coverage_manifest_ok()
    assert ok, missing


def test_theorem_table():
    rows = {r.n: r for r in reproduce_theorem_table(24)}
    assert rows[4].value == 4 and rows[4].kind == "exact"
    assert rows[8].value == 36
    assert rows[7].value == 8
    assert rows[6].value == 7
    assert rows[10].value == 46
    assert rows[12].value == (117, 216) and rows[12].kind == "interval"
    assert rows[16].value == 6436
    assert rows[24].value == bounds()
    with pytest.raises(ValueError):
        reproduce_theorem_table(65)


def bounds():
    from covernum.families import bounds_3_2a

    return bounds_3_2a(3)


def test_report_serialization():
    r = CheckReport("demo", {"n": 5})
    r.witnesses["big"] = factorial(30)
    obj = r.to_json_obj()
    assert obj["witnesses"]["big"] == str(factorial(30))
    assert isinstance(r.to_json_line(), str)


def test_report_determinism(catalog):
    a = check_unbeatable(14, catalog).to_json_line()
    b = check_unbeatable(14, catalog).to_json_line()
    assert a == b
