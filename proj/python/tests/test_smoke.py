import pytest

import eqcoh


def test_coeff_group():
    out = eqcoh.coeff(6, "2 - L2 - L3")
    assert out["group"]["order"] == 6
    assert out["vanishing"] is None


def test_vanishing_and_mod_p():
    assert eqcoh.coeff(5, "1 - L1")["vanishing"] is not None
    assert eqcoh.coeff(3, "-2 + L1", mode="modp")["mackey"] == "Z/3*"


def test_chain_model_agrees():
    assert eqcoh.cellular_pi(4, "-L1")["torsion"] == [4]


def test_decomposition():
    d = eqcoh.decompose("cp", n=3, mults=[1, 2, 1])
    assert d["summands"] == ["0", "L1", "2L1", "2 + 2L1"]
    assert d["splits"]


def test_cohomology_query():
    ans = eqcoh.cohomology("conj", m=2, degree="3 + s", mode="modp")
    assert ans["text"] == "<Lambda>"


def test_slice_certificate():
    c = eqcoh.certify_slice("complex", 6, 5)
    assert c["connective"] and c["coconnective"]


def test_ring():
    assert eqcoh.q0(2, 1, 2)["text"] == "u0*x^2 + a0*x"
    assert eqcoh.q0(3, 2, 3, via_tau=True) == eqcoh.q0(3, 2, 3)
    assert eqcoh.verify_relation("rho", 3, 2, 2)["holds"]
    assert eqcoh.series_terms(3, 2, 1)["factorization_holds"]
    assert eqcoh.injectivity_profile(2, 2, 1)["lower_triangular"]
    assert eqcoh.basis_monomial(2, 5, 2, 3)["res_degree"] == 21
    assert eqcoh.conj_ring(3)["matches_decomposition"]


def test_obstruction():
    assert eqcoh.obstruction_check(3, 4)["verdict"] == "lift-excluded"
    assert eqcoh.obstruction_check(2, 2)["verdict"] == "lift-excluded"


def test_errors():
    with pytest.raises(eqcoh.ParseError, match="position 9"):
        eqcoh.coeff(6, "2 - L2 - Q3")
    with pytest.raises(eqcoh.DomainError):
        eqcoh.verify_relation("rho", 4, 1, 1)
    with pytest.raises(ValueError):
        eqcoh.obstruction_check(3, 3)
