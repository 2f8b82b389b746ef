import json

import pytest

from pcl import corpus


def test_all_cases_pass():
    report = corpus.verify()
    assert report["pass"] is True
    assert [c["case"] for c in report["cases"]] == sorted(corpus.CASES)
    for c in report["cases"]:
        assert all(cl["ok"] for cl in c["claims"]), c


def test_single_case_lookup():
    rep = corpus.verify("prism")
    assert rep["case"] == "prism"
    assert rep["pass"] is True


def test_unknown_case_raises():
    with pytest.raises(KeyError):
        corpus.verify("nope")


def test_report_is_json_serializable_and_stable():
    a = json.dumps(corpus.verify(), sort_keys=True)
    b = json.dumps(corpus.verify(), sort_keys=True)
    assert a == b
