from fractions import Fraction

import pytest

from whitney import identities
from whitney.errors import UnknownIdentity
from whitney.identities import (
    IdentityCheck,
    dowling_from_determinant,
    exact_det,
    registry_names,
    run_all,
    run_check,
)
from whitney.triangles import dowling_poly

EXPECTED_NAMES = [
    "az-recurrences-W1",
    "az-recurrences-W2",
    "bernoulli-to-dowling",
    "binomial-recurrences",
    "delta-ops",
    "determinantal",
    "dowling-recurrence",
    "dowling-shift",
    "dowling-shift-l1",
    "dowling-to-bernoulli",
    "dowling-to-euler",
    "dowling-umbral-inverse",
    "dowlstir",
    "egf-dowling",
    "egf-whitney2",
    "euler-to-dowling",
    "inverse-relation",
    "lemma-grammar-dowling",
    "orthogonality",
    "power-in-dowling",
    "r-shift-s",
    "sheffer-binomial-D",
    "spivey",
    "touchard-binomial",
    "umbral-inverse-T",
    "whitney-convolution",
    "whitney-r-shift",
    "whitney-recurrence",
]


def test_registry_is_complete():
    assert registry_names() == EXPECTED_NAMES


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        run_check("no-such-identity")


def test_bad_grid_override():
    with pytest.raises(ValueError):
        run_check("orthogonality", {"max_h": 3})


@pytest.mark.parametrize("name", EXPECTED_NAMES)
def test_each_entry_passes_on_reduced_grid(name):
    grid = identities.REGISTRY[name].grid
    overrides = {"max_n": min(4, grid["max_n"])}
    if "max_h" in grid:
        overrides["max_h"] = 4
    rep = run_check(name, overrides)
    assert rep.status == "pass"
    assert rep.counterexample is None
    assert rep.grid_size > 0


def test_rational_r_through_algebraic_checks():
    # every algebraic identity is rational in r; spot-check a few entries
    # at r = 1/2 (enumeration-backed checks are the only integer-r paths)
    half = (Fraction(1, 2),)
    for name in ("dowlstir", "r-shift-s", "orthogonality", "whitney-recurrence"):
        rep = run_check(name, {"max_n": 5, "r": half})
        assert rep.status == "pass", name


def test_run_check_deterministic():
    a = run_check("spivey", {"max_n": 3, "max_h": 3}).to_dict()
    b = run_check("spivey", {"max_n": 3, "max_h": 3}).to_dict()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_flagged_entries_report_both_routes():
    for name in ("dowling-to-bernoulli", "dowling-to-euler"):
        rep = run_check(name, {"max_n": 3})
        assert rep.status == "pass"
        assert "literal statement: pass" in rep.notes
        assert "connection-constant route: pass" in rep.notes


def test_counterexample_capture_and_reevaluation(monkeypatch):
    def bogus(grid):
        for n in range(grid["max_n"] + 1):
            yield {"n": n, "m": grid["m"][0], "r": grid["r"][0]}, n, n * n

    def corrected(grid):
        for n in range(grid["max_n"] + 1):
            yield {"n": n}, n, n

    check = IdentityCheck(
        name="always-wrong",
        summary="synthetic failing identity",
        mode="numeric-at-points",
        grid={"max_n": 5, "m": (1,), "r": (0,)},
        evaluate=bogus,
        flagged=True,
        variant=corrected,
    )
    monkeypatch.setitem(identities.REGISTRY, "always-wrong", check)
    rep = run_check("always-wrong")
    assert rep.status == "fail"
    ce = rep.counterexample
    assert ce["params"] == {"n": 2, "m": 1, "r": 0}
    assert ce["lhs"] == "2" and ce["rhs"] == "4"
    assert rep.grid_size == 3  # stopped at the first counterexample
    assert "literal statement: FAIL" in rep.notes
    assert "connection-constant route: pass" in rep.notes
    # the reported point re-evaluates under singleton overrides
    again = run_check("always-wrong", {"max_n": ce["params"]["n"]})
    assert again.status == "fail"
    assert again.counterexample["params"]["n"] <= ce["params"]["n"]


def test_run_all_subset_and_overrides():
    reports = run_all({"max_n": 3, "max_h": 3}, names=["spivey", "orthogonality"])
    assert [rep.name for rep in reports] == ["orthogonality", "spivey"]
    assert all(rep.status == "pass" for rep in reports)


def test_exact_det_small_cases():
    assert exact_det([]) == 1
    assert exact_det([[5]]) == 5
    assert exact_det([[1, 2], [3, 4]]) == -2
    assert exact_det([[0, 1], [1, 0]]) == -1  # needs a row swap
    assert exact_det([[1, 2], [2, 4]]) == 0  # singular
    assert exact_det([[Fraction(1, 2), 0], [7, Fraction(2, 3)]]) == Fraction(1, 3)


def test_exact_det_against_cofactor_expansion():
    import random

    def cofactor_det(rows):
        n = len(rows)
        if n == 0:
            return Fraction(1)
        if n == 1:
            return Fraction(rows[0][0])
        total = Fraction(0)
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            total += (-1) ** j * Fraction(rows[0][j]) * cofactor_det(minor)
        return total

    rng = random.Random(13)
    for _ in range(12):
        n = rng.randint(1, 5)
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert exact_det(rows) == cofactor_det(rows)


def test_determinant_route_reproduces_dowling():
    for m in (1, 2):
        for r in (0, 2):
            for n in range(6):
                assert dowling_from_determinant(m, r, n) == dowling_poly(m, r, n)
