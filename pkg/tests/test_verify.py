from __future__ import annotations

import dataclasses

import pytest

from bspoisson.bracket import bracket_table
from bspoisson.poly import parse_polynomial
from bspoisson.verify import (
    CHECKS,
    all_gammas,
    check_basis_independence,
    check_c_oracle,
    check_degree_bound,
    check_derivation_axioms,
    check_integrality,
    check_jacobi,
    check_log_canonical,
    check_mod2,
    check_nilpotent,
    check_ore_shape,
    check_reference,
    check_symmetric_cgl,
    check_weight_homogeneity,
    compare_reference,
    failures,
    is_log_canonical,
    log_canonical_coefficients,
    load_references,
    predict_log_canonical,
    reference_for,
    run_checks,
    run_sweep,
    structure_for,
    summarize,
    sweep_cases,
)

SL3 = ("A2", (1, 2, 1))
G2W = (1, 2, 1, 2, 1, 2)


def table(label, word, bits):
    return bracket_table(structure_for(label), word, tuple(c == "1" for c in bits))


def tampered(t, **entries):
    f = dict(t.f)
    for key, text in entries.items():
        i, k = int(key[1]), int(key[2])
        f[(i, k)] = parse_polynomial(text, t.n)
    return dataclasses.replace(t, f=f)


@pytest.mark.parametrize("bits", ["100", "111", "000", "011"])
def test_all_checks_pass_on_sl3(bits):
    st = structure_for("A2")
    t = table(*SL3, bits)
    reports = run_checks(st, t, CHECKS)
    assert [r.check for r in reports] == list(CHECKS)
    assert failures(reports) == []


def test_printed_sl3_entry_passes_jacobi_but_not_homogeneity():
    t = tampered(table(*SL3, "111"), f13="z1z3 - 2")
    assert check_jacobi(t).status == "pass"
    r = check_weight_homogeneity(t)
    assert r.status == "fail"
    assert r.counterexample["pair"] == [1, 3]
    assert r.counterexample["monomial"] == [0, 0, 0]


def test_jacobi_counterexample_is_first_triple():
    t = tampered(table("A2", (1, 2, 1, 2), "1111"), f12="-z1z2 + z2")
    r = check_jacobi(t)
    assert r.status == "fail"
    assert r.counterexample["triple"][:2] == [1, 2]


def test_ore_detects_lower_variable():
    t = tampered(table(*SL3, "111"), f13="z1z3 - 2z2 + z1")
    r = check_ore_shape(t)
    assert r.status == "fail" and r.counterexample["pair"] == [1, 3]


def test_ore_detects_nonzero_b_for_identity_letter():
    t = tampered(table(*SL3, "011"), f12="z1z2 + z2")
    assert check_ore_shape(t).status == "fail"


def test_cgl_only_for_full_chart():
    assert check_symmetric_cgl(table(*SL3, "100")).status == "skip"
    assert check_symmetric_cgl(table("G2", G2W, "111111")).status == "pass"
    # b_1(z_3) must not involve z_3 in the symmetric setting
    bad = tampered(table(*SL3, "111"), f13="z1z3 - 2z2 + z3")
    assert check_symmetric_cgl(bad).status == "fail"


def test_nilpotency():
    r = check_nilpotent(table("G2", G2W, "111111"))
    assert r.status == "pass" and r.detail["max_steps"] >= 2
    r = check_nilpotent(table(*SL3, "100"))
    assert r.status == "skip"
    assert r.detail["non_terminating"] == {"i": 1, "k": 3, "b_i(z_k)": "2 z_3^2"}


def test_derivation_axioms_detect_broken_b():
    assert check_derivation_axioms(table("G2", G2W, "110010")).status == "pass"
    bad = tampered(table("A2", (1, 2, 1, 2), "1111"), f14="2z1z4 - 2 + 5z2z3")
    assert check_derivation_axioms(bad).status == "fail"
    escaped = tampered(table(*SL3, "111"), f13="z1z3 - 2z2 + z1^2")
    assert check_derivation_axioms(escaped).status == "fail"
    assert check_nilpotent(escaped).status == "fail"


def test_integrality_and_mod2():
    t = table("G2", G2W, "111111")
    assert check_integrality(t).status == "pass"
    assert check_mod2(t).status == "pass"
    half = tampered(t, f12="-3z1z2 + 1/2 z1z2")
    assert check_integrality(half).status == "fail"
    odd = tampered(t, f13="-z1z3 - 3z2")
    r = check_mod2(odd)
    assert r.status == "fail" and r.counterexample["residue"] == "z_2"


def test_degree_bounds():
    st = structure_for("G2")
    r = check_degree_bound(st, table("G2", G2W, "110010"))
    assert r.status == "pass" and r.detail["bound"] == 3
    st = structure_for("A3")
    r = check_degree_bound(st, bracket_table(st, (1, 2, 3, 1, 2, 1), (True,) * 6))
    assert r.status == "pass" and r.detail["bound"] == 1


def test_log_canonical_prediction_and_coefficients():
    rs = structure_for("B3").rs
    word = (1, 2, 3, 2, 1)
    t = table("B3", word, "00000")
    assert is_log_canonical(t) and predict_log_canonical(word, t.gamma)
    assert log_canonical_coefficients(rs, word, t.gamma)[(1, 2)] == -2
    # single kept letter at its last occurrence
    t = table("B3", word, "00010")
    assert check_log_canonical(t).status == "pass"
    assert log_canonical_coefficients(rs, word, t.gamma) is not None
    # kept letter that recurs later: no prediction, not log-canonical here
    t = table(*SL3, "100")
    assert not predict_log_canonical(t.word, t.gamma) and not is_log_canonical(t)
    assert check_log_canonical(t).detail == {"detected": False, "predicted": False}


def test_basis_independence_and_oracle():
    st = structure_for("G2")
    r = check_basis_independence(st, G2W, (True,) * 6)
    assert r.status == "pass" and r.detail["variants"] == 8
    assert check_c_oracle(st).status == "pass"


def test_references_bundle():
    refs = load_references()
    assert len(refs) == 6
    assert sum(len(r.brackets) for r in refs) == 3 + 3 + 15 + 15 + 10 + 10
    sl3 = next(r for r in refs if r.name == "sl3-full")
    assert sl3.printed[(1, 3)] == parse_polynomial("z1z3 - 2", 3)


def test_reference_comparison_flags_printed_entry():
    t = table(*SL3, "111")
    r = check_reference(t, reference_for(t))
    assert r.status == "pass"
    (div,) = r.detail["printed_divergences"]
    assert div["pair"] == [1, 3]
    assert not div["reference_homogeneous"] and div["computed_homogeneous"]
    literal = {**reference_for(t).brackets, **reference_for(t).printed}
    assert compare_reference(t, literal).status == "fail"
    assert reference_for(table(*SL3, "010")) is None


def test_sweep_is_ordered_and_parallel_safe():
    cases = list(sweep_cases(["A2"], 2))
    assert len(cases) == 2 * 2 + 4 * 4
    serial = run_sweep(cases, ["jacobi", "ore"], workers=1)
    parallel = run_sweep(cases, ["jacobi", "ore"], workers=2)
    assert serial == parallel
    assert summarize(serial) == {
        "jacobi": {"pass": 20, "fail": 0, "skip": 0},
        "ore": {"pass": 20, "fail": 0, "skip": 0},
    }


def test_all_gammas_order():
    assert all_gammas(2) == [(False, False), (False, True), (True, False), (True, True)]
    assert all_gammas(0) == [()]


def test_report_json():
    r = check_integrality(table(*SL3, "100")).to_json()
    assert r == {"case": {"type": "A2", "word": [1, 2, 1], "gamma": "100"}, "check": "integrality", "status": "pass"}
