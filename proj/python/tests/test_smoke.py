import pytest

import dnil


def test_normal_form_and_membership():
    assert str(dnil.normal_form("x1^2")) == "-1*x0*x2"
    assert dnil.normal_form("x1^2") == dnil.normal_form_via_embedding("x1^2")
    member, cert = dnil.membership("x0*x1")
    assert member and cert == [("1", 1, "1/2")]
    assert dnil.membership(dnil.Polynomial("x0*x2"), 2) == (False, None)


def test_polynomial_arithmetic():
    x1 = dnil.Polynomial.variable(1)
    assert x1 * x1 == "x1^2"
    assert (dnil.Polynomial("x0^2").derive() - "2*x0*x1").is_zero()
    assert len(dnil.Polynomial("x0 + x1")) == 2


def test_nil_indices():
    assert dnil.nil_index("x1", 2, 10) == 3
    assert dnil.nil_index("x2", 3, 10) == 7
    assert dnil.grassmann_nil_index("x2", 3, 10) == 7
    assert dnil.nil_index("x2", 3, 5) is None
    assert dnil.operator_nil_index("x0*D") == (2, 3)


def test_slices():
    assert dnil.alpha_basis(2, 2, 4) == ["x1*x3", "x0*x4"]
    assert dnil.monomials(2, 2) == ["x1^2", "x0*x2"]
    assert dnil.component_dimension(2, 2, 2) == 1
    assert dnil.injectivity_rank(3, 3, 3)[0] == dnil.injectivity_rank(3, 3, 3)[1]
    assert dnil.derivation_kernel_dimension(2, 2, 2) == 0


def test_embedding_and_witnesses():
    assert dnil.embed("x0*x2") == "2*xi[0,0]∧eta[0,0]∧xi[0,1]∧eta[0,1]"
    assert dnil.embed_size("x1^2 + x0*x2") == 0
    k, product = dnil.witness_element("x0", "x0")
    assert k == 2 and str(product) == "1*x0*x2"
    j, k, product = dnil.witness_operator("x0*D", "x0")
    assert k == 2 and product != "0"


def test_suites():
    assert dnil.verify_ritt(3, 2)["pass"]
    assert dnil.verify_injectivity(2, 3, 5)["failures"] == 0
    assert dnil.verify_nilpotent(5, 1)["pass"]


def test_errors():
    with pytest.raises(dnil.ParseError):
        dnil.normal_form("x1^")
    with pytest.raises(ValueError):
        dnil.normal_form("x1", 1)
    with pytest.raises(ValueError):
        dnil.witness_element("0", "x0")
