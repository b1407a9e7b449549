import json

import pytest

from dfgamma import verify
from dfgamma.polyring import x, yb
from dfgamma.verify import SUITES, VerifyConfig, digest, plan, render, run_check, run_suite


def test_render_and_digest():
    assert render([x * yb, 3, True]) == "[x*yb, 3, True]"
    assert digest(x * yb) == digest(x * yb)
    assert digest(x * yb) != digest(x)
    assert len(digest(1)) == 64


def test_plan_names_are_unique_and_registered():
    cfg = VerifyConfig(nmax=5)
    descs = plan("all", cfg)
    names = [d[0] for d in descs]
    assert len(names) == len(set(names))
    assert {d[1] for d in descs} <= set(verify.REGISTRY)
    assert {n.split("/")[0] for n in names} == set(SUITES)


def test_plan_is_deterministic():
    assert plan("ansatz", VerifyConfig()) == plan("ansatz", VerifyConfig())


def test_word_sample_sizes():
    cfg = VerifyConfig()
    words = verify.word_sample(cfg, "DE")
    assert len(words) == sum(2**k for k in range(6)) + 50
    rnd = verify.random_words(cfg, "DE")
    assert len(set(rnd)) == 50 and all(6 <= len(w) <= 8 for w in rnd)


def test_random_profiles():
    profs = verify.random_profiles(VerifyConfig(), 3)
    assert len(set(profs)) == 30 and all(len(p) == 3 for p in profs)


def test_unknown_suite():
    with pytest.raises(ValueError):
        plan("bogus", VerifyConfig())


def test_crashing_check_is_a_failure(monkeypatch):
    def boom(**kw):
        raise RuntimeError("nope")

    monkeypatch.setitem(verify.REGISTRY, "_boom", boom)
    res = run_check(("x/boom", "_boom", {}))
    assert res.status == "fail" and "nope" in res.left


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes_small(suite):
    report = run_suite(suite, VerifyConfig(nmax=3))
    assert report.ok, [c.name for c in report.failures()]


def test_report_sorted_and_schema():
    report = run_suite("tridiag", VerifyConfig(nmax=4))
    obj = json.loads(report.to_json())
    names = [c["name"] for c in obj["checks"]]
    assert names == sorted(names)
    for c in obj["checks"]:
        assert set(c) == {"name", "params", "status", "left", "right", "ms"}
        assert c["status"] in ("pass", "fail") and isinstance(c["ms"], int)


def test_parallel_matches_serial():
    cfg = VerifyConfig(nmax=3)
    serial = run_suite("symmetry", cfg)
    cfg.jobs = 2
    par = run_suite("symmetry", cfg)
    strip = lambda r: [(c.name, c.status, c.left, c.right) for c in r.checks]  # noqa: E731
    assert strip(serial) == strip(par)
