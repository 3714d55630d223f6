import math
from fractions import Fraction

import pytest

import relcount as rc


def test_classes_listed():
    names = rc.relation_classes()
    assert "function" in names
    assert "transitive-partial-function" in names
    assert len(names) == 9


def test_combinatorial_basics():
    assert rc.factorial(12) == 479001600
    assert rc.subfactorial(10) == 1334961
    assert rc.subfactorial_floor(9) == 133496
    assert rc.binomial(11, 3) == 165


def test_counts_are_exact_python_ints():
    assert rc.count_with_k("involution", 14, 14, 2) == 945945
    assert rc.count_with_kl("transitive-partial-function", 11, 3, 3) == 71850240
    assert rc.count_total("transitive-partial-function", 9, 9) == 6498674
    assert rc.count_without("permutation", 6, 6) == 265
    assert rc.count_with_at_least_one("function", 5, 5) == 2101
    # big values survive the boundary unchanged
    assert rc.count_total("relation", 20, 20) == 2**400
    assert rc.profile("permutation", 4, 4) == [9, 8, 6, 0, 1]


def test_probabilities_are_fractions():
    p = rc.probability_at_least_one("function", 10, 10)
    assert p == Fraction(6513215599, 10**10)
    assert rc.involution_ratio(10, 4) == Fraction(5)


def test_oracle_profile():
    profile = rc.oracle_profile("permutation", 4, 4)
    assert profile["by_k"] == [9, 8, 6, 0, 1]
    assert profile["by_kl"] is None
    kl = rc.oracle_profile("transitive-partial-function", 4, 4)
    assert kl["by_kl"] is not None
    assert sum(kl["by_k"]) == rc.count_total("transitive-partial-function", 4, 4)


def test_unknown_class_raises():
    with pytest.raises(ValueError):
        rc.count_total("no-such-class", 3, 3)


def test_asymptotics():
    description, value = rc.limit_constant("function")
    assert description == "1 - 1/e"
    assert value == pytest.approx(1 - 1 / math.e)
    rows = rc.convergence_table("permutation", [7])
    assert rows[0][1] == Fraction(3186, 5040)
    assert rc.check_lemma_mw1(8)
    assert rc.lambert_w0(math.e) == pytest.approx(1.0, abs=1e-12)
    assert rc.h_peak(1) == pytest.approx(1.0, abs=1e-9)
    assert rc.kmax("transitive-partial-function", 30) == 6
    a, b = rc.fit_kmax_line("idempotent-function", 1, 100)
    assert a == pytest.approx(0.27420, abs=1e-4)
    assert a + b == pytest.approx(2.36693, abs=1e-4)


def test_kernel_series():
    assert rc.s_series(1) == Fraction(1, 2)
    assert rc.s_series(2) == Fraction(9, 16)
    assert rc.s_rounded_micro(2) == 562500
    assert rc.kernel_probability(1) == Fraction(1, 2)
    scan = rc.scan_s(1, 30)
    assert len(scan["values"]) == 30
    assert scan["values"][0] == (1, 0.5)


def test_emit_table():
    fig2 = rc.emit_table("fig2")
    assert "63.21205 %" in fig2
    csv = rc.emit_table("fig2", format="csv")
    assert csv.splitlines()[1].startswith("1,1,1,")
    with pytest.raises(ValueError):
        rc.emit_table("fig9")


def test_run_verify_small_budget():
    mismatches, summary = rc.run_verify(
        max_mn_bits=9, max_hetero_n=4, perm_max_n=5, idem_max_n=4
    )
    assert mismatches == 0
    assert "0 mismatches" in summary
