import json
import os
import pathlib

import jsonschema
import pytest

import recsym

SCHEMA_PATH = pathlib.Path(
    os.environ.get("RECSYM_SCHEMA", pathlib.Path(__file__).resolve().parents[2] / "docs" / "report_schema.json")
)


@pytest.fixture(scope="module")
def schema():
    return json.loads(SCHEMA_PATH.read_text())


def test_le_worked_example():
    a = recsym.quat(1, 1, 0, 0)
    b = recsym.quat(13, 0, 0, 5)
    assert str(recsym.le_compose(a, b)) == "(13; 12, 0, 5)"
    assert str(recsym.qform(recsym.le_compose(a, b))) == "0"


def test_rs_and_matrices_agree():
    a = recsym.quat(1, 1, 0, 0)
    b = recsym.quat(1, 0, 1, 0)
    assert str(recsym.rs_compose(a, b)) == "(1; 1, 1, 1i)"
    assert recsym.mat_mul(recsym.embed(a), recsym.embed(b)) == recsym.embed(recsym.rs_compose(a, b))
    assert recsym.det(recsym.embed(b)) == recsym.qform(b)


def test_literal_components():
    q = recsym.quat("3/5", 1 + 2j, -0.5, "1-i")
    assert str(q) == "(3/5; 1+2i, -1/2, 1-1i)"
    f = recsym.quat(1.25, 0.75, 0, 0, backend="float")
    assert f.backend == recsym.Backend.FLOAT
    assert recsym.Quat4.from_json(q.to_json()) == q


def test_errors_raise_value_error():
    with pytest.raises(ValueError, match="SqrtNotExact"):
        recsym.le_compose(recsym.quat(1, 1, 0, 0), recsym.quat(2, 1, 1, 0))
    with pytest.raises(recsym.RecsymError):
        recsym.sigma(4)


def test_boosts_and_velocities():
    b = recsym.boost_from_velocity(recsym.Velocity3.exact("3/5", "0", "0"))
    assert str(b) == "(5/4; 3/4, 0, 0)"
    v = recsym.velocity_from_boost(recsym.le_compose(b, b))
    assert v == recsym.Velocity3.exact("15/17", "0", "0")
    fb = recsym.boost_from_velocity(recsym.Velocity3(0.6, 0, 0))
    assert abs(recsym.qform(fb).to_complex() - 1) < 1e-15


def test_pauli_and_spinor():
    s1, s2, s3 = (recsym.sigma(k) for k in (1, 2, 3))
    i = recsym.CScalar.exact("0", "1")
    assert recsym.mat_mul(s1, s2).entries() == [i * e for e in s3.entries()]
    scalar, vector = recsym.cross_term(recsym.quat(0, 1, 0, 0).vec, recsym.quat(0, 0, 1, 0).vec)
    assert scalar.is_zero()
    assert [str(c) for c in vector] == ["0", "0", "1i"]
    psi = recsym.null_spinor(0.0, 0.0, 1.0)
    assert abs(psi[0].to_complex() - 1) < 1e-15


def test_evaluate():
    x = recsym.quat(1, 2, 3, "4i")
    assert recsym.evaluate("rs((1;0,0,0),X)", {"X": x}) == "(1; 2, 3, 4i)"
    assert recsym.evaluate("qform((0.1;0,0,0))", backend="float") == "0.010000000000000002"


def test_check_identity_report(schema):
    report = recsym.check_identity("eq18_homomorphism", count=100)
    assert report["passed"] and report["samples_run"] == 100
    assert report["worst_abs_residual"] == 0
    jsonschema.validate([report], schema)


def test_search_witness():
    found = recsym.search_counterexample("rs_commutativity", count=100)
    assert found is not None and found["position"] == 0
    assert recsym.search_counterexample("rs_associativity", count=100) is None


@pytest.mark.parametrize("backend", ["exact", "float"])
def test_suite_validates_against_schema(schema, backend):
    suite = recsym.run_suite(count=50, backend=backend)
    jsonschema.validate(suite, schema)
    assert suite[-1]["identity_id"] == "summary"
    assert suite[-1]["all_passed"] is True
    assert {r["identity_id"] for r in suite[:-1]} == set(recsym.identity_ids()) | set(recsym.property_ids())


def test_cli_json_stdout_is_schema_valid(schema):
    code, out, err = recsym.run_cli("check", "--count", "20", "--json", "-")
    assert code == 0
    jsonschema.validate(json.loads(out), schema)
    assert "passed" in err


def test_cli_examples():
    assert recsym.run_cli("eval", "qform(le((1;1,0,0),(13;0,0,5)))")[:2] == (0, "0\n")
    assert recsym.run_cli("boost", "0.6", "0", "0")[:2] == (0, "(1.25; 0.75, 0, 0)\nqform = 1\n")
    assert recsym.run_cli("eval", "le((1;1,0,0),(2;1,1,0))")[0] == 2
