import pytest

import gsp4py

KEYS = ["check", "status", "witnesses", "citations", "seed", "elapsedMs"]


def test_weyl_dimension():
    assert [gsp4py.weyl_dimension(k, kp) for k, kp in [(0, 0), (1, 0), (1, 1), (2, 0)]] == [1, 4, 5, 10]


def test_branch_report_schema():
    rep = gsp4py.check_branch(7, 4, 6, 3)
    assert list(rep) == KEYS
    assert rep["status"] == "pass"
    assert all(isinstance(c, str) and c for c in rep["citations"])


def test_unramified_symbolic():
    assert gsp4py.check_unramified(order=10)["status"] == "pass"


def test_unramified_seeded_is_reproducible():
    a = gsp4py.check_unramified(order=8, numeric=True, seed=5, samples=3)
    b = gsp4py.check_unramified(order=8, numeric=True, seed=5, samples=3)
    assert a["seed"] == 5
    assert a["witnesses"] == b["witnesses"]


def test_survival():
    assert gsp4py.surviving_terms(7, 4) == [2]
    assert gsp4py.check_pairing_survival(7, 4)["status"] == "pass"


def test_trace_reports_half_integer_exponent():
    assert gsp4py.trace_pi_exponent(7, 4) == "-3/2"
    assert gsp4py.check_trace(7, 4)["status"] == "fail"


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        gsp4py.check_packet(2, 5, 7)
