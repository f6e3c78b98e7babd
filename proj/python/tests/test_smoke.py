import json
from pathlib import Path

import pytest

import arq

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name, field="Q"):
    return arq.Quiver.from_file(str(DATA / name), field)


def test_classification_and_q_plus():
    assert load("qc.json").classify() == "InfDynkin(A_biinf)"
    assert load("qf.json").q_plus() == [["0"], ["2", "3", "4"]]


def test_sigma_chain_and_translate():
    qc = load("qc.json")
    assert qc.sigma_chain("L") == "ε_5 ⇢ p_{4,3} ⇢ p_∞"
    m = qc.rep("M(p_inf)")
    assert not m.finite_dimensional
    assert m.total_dim is None
    t = m.tau()
    assert t.name == "M(p_{4,3})"
    assert t.tau().name == "S_5"
    assert load("a3.json").rep("P(3)").tau() is None


def test_almost_split_sequence():
    a3 = load("a3.json")
    seq = a3.rep("S(2)").almost_split("ending")
    assert seq is not None
    assert a3.rep("P(3)").almost_split("ending") is None


def test_hom_ext():
    a3 = load("a3.json")
    assert a3.rep("S(1)").hom_ext(a3.rep("S(2)")) == (0, 1)


def test_census_and_component():
    assert load("dinf_noinf.json").census()["shape"] == "ZAinf"
    assert load("wild_inf.json").census()["regular"] == "infinite"
    dot = load("qf.json").component_dot("preinjective:1", 5)
    assert dot.startswith("digraph") and dot.count("style=dashed") == 1


def test_from_json_and_errors():
    spec = {"core": {"vertices": ["a", "b"], "arrows": [{"from": "a", "to": "b"}, {"from": "b", "to": "a"}]}}
    with pytest.raises(arq.ArqError) as info:
        arq.Quiver.from_json(json.dumps(spec))
    assert info.value.name == "CoreCycle"
    with pytest.raises(arq.ArqError):
        load("qc.json").rep("Q(1)")


def test_field_and_kronecker():
    k = load("kronecker.json", "Fp:2")
    m = k.rep("K(x^2+x+1)")
    assert m.is_indecomposable()
    assert m.tau().is_isomorphic(m)


def test_run_cli():
    code, out, err = arq.run_cli(["census", str(DATA / "dinf_noinf.json")])
    assert code == 0 and json.loads(out)["regular"] == 1
    code, _, err = arq.run_cli(["validate", str(DATA / "cycle.json")])
    assert code == 2 and err.startswith("error: CoreCycle")
