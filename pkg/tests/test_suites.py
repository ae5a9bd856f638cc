import json

import pytest

from strang.algebra import build_algebra
from strang.field import gf
from strang.homology import HomologyError
from strang.suites import (
    SUITES,
    CheckReport,
    all_jobs,
    flipped_spec,
    run_job,
    ses_search,
    suite_ar,
    suite_krause,
    suite_mod2_and_ses,
    suite_negative_control,
    suite_omega,
    suite_pd,
    suite_relations,
    suite_stablend,
    x_and_y,
)


def test_report_json_shape():
    rep = CheckReport("demo", {"d": 3})
    rep.add("one", "always true", True, (1, 2), [1, 2])
    rep.skip("two", "not applicable", "family 1")
    data = json.loads(rep.dumps())
    assert data["suite"] == "demo" and data["pass"] is True
    assert data["checks"][0] == {"id": "one", "anchor": "always true", "status": "pass", "observed": [1, 2], "expected": [1, 2]}
    assert data["checks"][1]["status"] == "skip" and data["checks"][1]["note"] == "family 1"
    rep.add("three", "false", False, 0, 1)
    assert not rep.passed and [c.id for c in rep.failures()] == ["three"]
    text = rep.to_text()
    assert text.splitlines()[-1] == "overall: FAIL"
    assert "FAIL" in text.splitlines()[-2] and "three" in text


def test_empty_report_fails():
    assert not CheckReport("empty", {}).passed
    only_skips = CheckReport("skips", {})
    only_skips.skip("a", "b", "c")
    assert only_skips.passed


def test_x_and_y_words():
    assert x_and_y(build_algebra(2, 0, 3)) == ("1_1", "ba")
    assert x_and_y(build_algebra(1, 0, 3)) == ("ba", "1_1")


@pytest.mark.parametrize("i,c", [(1, 0), (2, 1)])
def test_relations_and_krause_small(i, c):
    assert suite_relations(i, c, 3, maxlen=5, band_maxlen=4).passed
    assert suite_krause(i, c, 3, maxlen=4).passed


@pytest.mark.parametrize("i,c", [(i, c) for i in (1, 2) for c in (0, 1)])
def test_stablend_and_omega_d3(i, c):
    st = suite_stablend(i, c, 3, maxlen=5)
    assert st.passed, st.to_text()
    om = suite_omega(i, c, 3)
    assert om.passed, om.to_text()


def test_omega_boundary_case_noted():
    om = suite_omega(2, 1, 3, ctx=gf(2))
    notes = [ch.note for ch in om.checks if "boundary" in ch.note]
    assert len(notes) == 1


@pytest.mark.parametrize("i,c", [(1, 1), (2, 0)])
def test_negative_control_detects_flip(i, c):
    assert flipped_spec(build_algebra(i, c, 3)).c == 1 - c
    rep = suite_negative_control(i, c, 3)
    assert rep.passed
    assert rep.checks[0].observed


def test_flipped_spec_breaks_omega_and_stablend():
    spec = flipped_spec(build_algebra(2, 1, 3))
    assert not suite_omega(2, 1, 3, spec=spec).passed


def test_ses_search():
    spec = build_algebra(2, 0, 3)
    ok, size, wit = ses_search(spec, 0)
    assert ok and size >= 2 and wit is not None
    ok, _, _ = ses_search(spec, 1)
    assert ok
    with pytest.raises(HomologyError, match="cap"):
        ses_search(spec, 1, limit_bits=2)


def test_mod2_ses_family1_skips_ubar():
    rep = suite_mod2_and_ses(1, 0, 3, nmax=0)
    assert rep.passed
    assert [ch.status for ch in rep.checks if ch.id.startswith("a:")] == ["skip"]


def test_pd_and_ar_suites():
    assert suite_pd(dmax=6, cheb_max=5).passed
    rep = suite_ar(2, 0, 3, radius=3)
    assert rep.passed, rep.to_text()


def test_jobs_are_sorted_unique_and_known():
    jobs = all_jobs()
    keys = [(n, json.dumps(kw, sort_keys=True)) for n, kw in jobs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert {n for n, _ in jobs} == set(SUITES)


def test_run_job_is_deterministic():
    job = ("omega", {"i": 2, "c": 0, "d": 3})
    a, b = run_job(job), run_job(job)
    assert json.dumps(a) == json.dumps(b)
    assert a["pass"]
