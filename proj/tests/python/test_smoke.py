from fractions import Fraction
from pathlib import Path

import pytest

import saito

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"
X1 = "x1^5+x2^5+x3^5+x4^5+x5^5"
X15 = "x1^4*x2+x2^4*x3+x3^4*x4+x4^4*x5+x5^4*x1"


def test_polynomial_basics():
    f = saito.Polynomial(X15)
    assert f.n == 5
    assert f.exponents[0] == [4, 1, 0, 0, 0]
    assert f.transposed().transposed() == f
    assert f.weights() == [Fraction(1, 5)] * 5
    assert f.group_order() == 1025
    assert [b["kind"] for b in saito.Polynomial("x1^4*x2+x2^4*x1+x3^4*x4+x4^4*x3+x5^5").blocks] == [
        "loop",
        "loop",
        "chain",
    ]


def test_errors():
    with pytest.raises(saito.SaitoError, match="Syntax"):
        saito.Polynomial("x1^5+")
    with pytest.raises(saito.SaitoError, match="NotInvariant"):
        saito.check_invariance(saito.Polynomial("x1^2*x2+x2^2*x3+x3^2*x1"), ["(13)"])
    with pytest.raises(ValueError):
        saito.Polynomial("x1^2+x1^2")


def test_parity_condition():
    assert saito.pc_check(3, ["A3"])["satisfies"]
    assert not saito.pc_check(4, ["(12)(34)", "(13)(24)"])["satisfies"]
    assert saito.group_order(5, ["D10"]) == 10


def test_torus_characteristics():
    for m in range(2, 8):
        f = saito.Polynomial(f"x1^{m}+x2^{m}")
        assert saito.stratum_chi(f, [1, 2]) == -m * m
        assert saito.stratum_chi(f, [1, 2], ["(12)"]) == m


def test_euler_and_duality():
    f = saito.Polynomial("x1^3+x2^3+x3^3+x4^3")
    klein = ["(12)(34)", "(13)(24)"]
    terms = saito.equivariant_euler(f, klein)
    assert all(isinstance(t["coefficient"], int) for t in terms)
    full = {tuple(t["T"]): t["coefficient"] for t in terms if t["H"] == []}
    assert full[("(12)(34)", "(13)(24)")] == 1
    assert full[()] == 1
    report = saito.verify_duality(f, klein)
    assert report["equal"] is False
    assert saito.verify_duality(saito.Polynomial(X1), ["(12)(34)"])["equal"] is True
    reduced = saito.equivariant_euler(saito.Polynomial(X1), ["(12)(34)"], reduced=True)
    assert len(reduced) > 0


def test_annihilator_and_fixture():
    assert saito.annihilator_order(saito.Polynomial(X1), ["J"]) == 625
    fx = saito.load_fixture(str(FIXTURES / "table1_02_83.fixture"))
    assert fx["G_order"] == 5
    assert fx["expect_pc"] is True
    assert str(fx["polynomial"]) == X1
