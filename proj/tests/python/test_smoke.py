"""Smoke tests for the valsemi extension module."""

import pytest

import valsemi


def test_binomial():
    assert valsemi.binomial(4, 2) == 6
    assert valsemi.binomial(10, 5) == 252
    # exceeds 64-bit: exactness must survive the crossing into Python
    assert valsemi.binomial(100, 50) == 100891344545564193334812497256


def test_rational():
    half = valsemi.Rational("1/2")
    third = valsemi.Rational("1/3")
    assert str(half + third) == "5/6"
    assert half > third
    assert valsemi.Rational("2/4") == half
    with pytest.raises(ValueError):
        valsemi.Rational("1/0")


def test_enumerate_and_count():
    assert valsemi.enumerate_up_to(["2", "3"], "9") == [
        "2", "3", "4", "5", "6", "7", "8", "9"]
    assert valsemi.count_below(["2", "3"], "6") == 4
    assert valsemi.sumset_r(["1", "3/2"], 2, "3") == ["2", "5/2", "3"]


def test_check_and_certificate():
    report = valsemi.check(["2", "3"], n=2, d_max=4)
    assert report["verdict"]["kind"] == "ConsistentUpTo"
    assert [row["count"] for row in report["rows"]] == ["2", "4", "6", "8"]

    cert = valsemi.example1_certificate(2)
    assert (cert["lhs"], cert["mid"], cert["rhs"]) == ("6", "8", "5")
    assert cert["chain_holds"]

    violated = valsemi.check_example1(n=2, d_max=2)
    assert violated["verdict"] == {"kind": "ViolatedAt", "d": 2}

    assert valsemi.min_consistent_n(["2", "3"], d_max=4, n_max=3) == 2
    assert valsemi.min_consistent_n(["1"], d_max=5, n_max=3) == 1


def test_valuation():
    assert valsemi.value_of(["2", "3"], "x^2 + y") == "3"
    assert valsemi.value_of(["1", "1"], "x - x") is None
    assert valsemi.enumerate_Sd(["1/2", "1/3"], 2) == [
        "1/3", "1/2", "2/3", "5/6", "1"]
    lemma2 = valsemi.verify_lemma2(["2", "3"], 2)
    assert lemma2["holds"] and lemma2["truncation_identity"]
    assert (lemma2["count"], lemma2["bound"]) == ("4", "6")


def test_errors():
    with pytest.raises(ValueError):
        valsemi.enumerate_up_to(["5"], "3")
    with pytest.raises(RuntimeError):
        valsemi.enumerate_up_to(["1"], "1000", budget=10)
