"""JSON document codecs: roundtrips and validation errors."""

import pytest

from schwarzian import (
    DocumentError,
    EllipticFractionalSolution,
    ExpSolution,
    MobiusTransform,
    Polynomial,
    RationalFunction,
    SchwarzianEquation,
    TrigSolution,
    WeierstrassInvariants,
    WpRationalSolution,
    certify_solution,
    classify,
)
from schwarzian import documents as docs


def test_complex_pair_roundtrip():
    z = 1.25 - 3.5j
    assert docs.pair_to_complex(docs.complex_to_pair(z)) == z
    with pytest.raises(DocumentError):
        docs.pair_to_complex([1.0])
    with pytest.raises(DocumentError):
        docs.pair_to_complex([1.0, float("nan")])
    with pytest.raises(DocumentError):
        docs.pair_to_complex("1+2j")
    with pytest.raises(DocumentError):
        docs.pair_to_complex([True, 0.0])


def test_equation_polynomial_roundtrip():
    eq = SchwarzianEquation(
        3,
        RationalFunction(
            Polynomial((1 + 2j, 0, 3)), Polynomial((0.5, 1, 0, -2j))
        ),
    )
    doc = docs.equation_to_dict(eq)
    back = docs.equation_from_dict(doc)
    assert back.p == eq.p
    assert back.rational.numerator.coeffs == eq.rational.numerator.coeffs
    assert back.rational.denominator.coeffs == eq.rational.denominator.coeffs
    assert docs.equation_to_dict(back) == doc


def test_equation_canonical_form_input():
    doc = {
        "kind": "V",
        "c": [0.5, 0.0],
        "sigma": [[0.0, 2 ** 0.5], [0.0, -(2 ** 0.5)]],
        "tau": [[1.0, 0.0], [-1.0, 0.0]],
    }
    eq = docs.equation_from_dict(doc)
    form = classify(eq)
    assert form.kind == "V"
    assert form.c == pytest.approx(0.5)


def test_equation_document_errors():
    with pytest.raises(DocumentError):
        docs.equation_from_dict([])
    with pytest.raises(DocumentError):
        docs.equation_from_dict({"numerator": [[1, 0]]})
    with pytest.raises(DocumentError):
        docs.equation_from_dict({"p": 0, "numerator": [[1, 0]], "denominator": [[1, 0]]})
    with pytest.raises(DocumentError):
        docs.equation_from_dict({"p": 1, "numerator": [[1, 0]], "denominator": []})
    with pytest.raises(DocumentError):
        docs.equation_from_dict({"kind": "VII", "c": [1, 0]})
    with pytest.raises(DocumentError):
        docs.equation_from_dict(
            {"kind": "V", "c": [1, 0], "sigma": [[1, 0]], "tau": [[1, 0], [2, 0]]}
        )
    # kind I with repeated tau is mathematically invalid
    with pytest.raises(DocumentError):
        docs.equation_from_dict({
            "kind": "I", "c": [1, 0],
            "sigma": [[5, 0], [6, 0], [7, 0], [8, 0]],
            "tau": [[1, 0], [1, 0], [2, 0], [3, 0]],
        })


def test_solution_roundtrips():
    solutions = [
        EllipticFractionalSolution(
            a=0, b=-1, d=1, invariants=WeierstrassInvariants(16, 0), z0=0.5j
        ),
        WpRationalSolution(
            family_kind="II", c=10584.0,
            invariants=WeierstrassInvariants(0, 1.0),
        ),
        WpRationalSolution(
            family_kind="III", c=-64 / 27,
            invariants=WeierstrassInvariants(0, -64 / 27 / 432), scale=1.0,
        ),
        WpRationalSolution(
            family_kind="IV", c=9 / 4,
            invariants=WeierstrassInvariants(-1 / 16, 0), scale=1.0,
        ),
        TrigSolution(alpha=1.5, beta=0.25j, outer=MobiusTransform(1, 2, 0, 1)),
        ExpSolution(alpha=2 - 1j),
    ]
    for sol in solutions:
        doc = docs.solution_to_dict(sol)
        back = docs.solution_from_dict(doc)
        assert back.family == sol.family
        assert docs.solution_to_dict(back) == doc
        probe = 0.37 + 0.21j
        assert back(probe) == pytest.approx(sol(probe), rel=1e-12)


def test_solution_document_errors():
    with pytest.raises(DocumentError):
        docs.solution_from_dict({"family": "unknown"})
    with pytest.raises(DocumentError):
        docs.solution_from_dict({"family": "exp"})  # missing alpha
    with pytest.raises(DocumentError):
        docs.solution_from_dict({
            "family": "wp-rational-III", "c": [1, 0],
            "invariants": {"g2": [0, 0], "g3": [1, 0]},
        })  # missing L
    with pytest.raises(DocumentError):
        docs.solution_from_dict({
            "family": "elliptic-fractional",
            "a": [0, 0], "b": [0, 0], "d": [1, 0],  # b = 0 invalid
            "invariants": {"g2": [16, 0], "g3": [0, 0]},
        })
    with pytest.raises(DocumentError):
        docs.solution_from_dict({
            "family": "wp-rational-II", "c": [1, 0],
            "invariants": {"g2": [5, 0], "g3": [1, 0]},  # wrong invariants
        })


def test_report_dict_uses_pass_key():
    sol = ExpSolution(alpha=1.0)
    eq = RationalFunction(Polynomial((-0.5,)), Polynomial.one())
    report = certify_solution(sol, 1, eq, samples=10)
    doc = docs.report_to_dict(report)
    assert doc["pass"] is True
    assert set(doc) == {
        "sample_count", "max_abs_residual", "max_rel_residual",
        "worst_point", "excluded_points", "pass", "tolerance",
    }


def test_mobius_codec():
    m = MobiusTransform(1 + 1j, 2, 0.5j, 3)
    back = docs.mobius_from_list(docs.mobius_to_list(m))
    assert back == m
    with pytest.raises(DocumentError):
        docs.mobius_from_list([[1, 0], [0, 0]])
    with pytest.raises(DocumentError):
        docs.mobius_from_list([[1, 0], [0, 0], [0, 0], [0, 0]])  # det 0
