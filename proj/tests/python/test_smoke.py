import json
import os

import pytest

import catbench

DATA = os.environ["CATBENCH_DATA_DIR"]


def path(name):
    return os.path.join(DATA, name)


def test_exit_codes():
    ok = catbench.run(["check", "path-axioms", path("walking_arrow.cat")])
    assert ok.exit_code == 0
    assert ok.report.passed

    bad = catbench.run(["check", "path-axioms", path("corrupt_arrow_eq.cat")])
    assert bad.exit_code == 1
    assert not bad.report.passed

    assert catbench.run(["frobnicate"]).exit_code == 2


def test_report_tree():
    r = catbench.check("path-axioms", path("semilattice.cat"))
    assert r.check == "path-axioms"
    assert bool(r)
    assert any(c.check == "clan" for c in r.children)
    j = json.loads(r.to_json())
    assert j["pass"] is True
    assert "[pass]" in r.to_text()


def test_counterexample():
    r = catbench.counterexample()
    assert r.passed
    assert r.check == "transport"
    assert any(w.what == "underivable" for w in r.witnesses)


def test_roundtrip_and_factorize():
    assert catbench.roundtrip(path("interval.cat")).passed
    r = catbench.factorize(path("walking_arrow.cat"), "f")
    assert any(w.what == "mapping path space" for w in r.witnesses)


def test_usage_errors_raise():
    with pytest.raises(ValueError):
        catbench.check("bogus", path("interval.cat"))
    with pytest.raises(ValueError):
        catbench.validate(path("no_such_file.cat"))
    assert "subcommands:" in catbench.usage()
