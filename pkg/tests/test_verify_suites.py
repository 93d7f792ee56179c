import pytest

from fusiongw import verify


@pytest.mark.parametrize("name", ["bethe", "smatrix", "tq", "cauchy"])
def test_named_suites_pass(name):
    report = verify.run_suite(name, 3, 2)
    assert report["ok"], [c for c in report["checks"] if not c["ok"]]


def test_symmetry_suite():
    report = verify.suite_symmetry(3, 2)
    assert report["ok"]


def test_recursion_suite_small():
    report = verify.suite_recursion(3, 1)
    assert report["ok"], [c for c in report["checks"] if not c["ok"]]


def test_run_all_smoke():
    report = verify.run_suite("all", 3, 1)
    assert report["ok"]
    assert {r["suite"] for r in report["reports"]} == set(verify.SUITES)


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope", 3, 1)
