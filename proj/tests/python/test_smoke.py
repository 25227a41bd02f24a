import json

import pytest

import seshadri as s


def test_catalog_entries_listed():
    names = {name for name, _ in s.catalog_entries()}
    assert {"fermat", "dual_hesse", "star", "quasi_pencil", "hl", "pc65",
            "simplicial"} <= names


def test_catalog_and_epsilon_config():
    a = s.catalog("fermat", n=2)
    assert a.d == 1 and a.k == 6 and a.has_geometry
    assert a.t == {2: 3, 3: 4}
    assert s.epsilon_config(a) == "1/3"
    assert s.f_numbers(a) == (7, 18)
    assert s.base_constant(a) == 3


def test_checks_pass():
    rep = s.check(s.catalog("star", d=2, k=3))
    assert rep["passed"]
    names = [c["name"] for c in rep["checks"]]
    assert "pairwise-count identity" in names
    assert "geometric verification" in names


def test_bounds():
    rep = s.bounds(s.catalog("simplicial", code="A1(10)"))
    assert rep["hypotheses_met"] and rep["satisfied"]
    assert rep["bound"] == "1/17" and rep["epsilon_config"] == "2/9"


def test_certify_and_verify_round_trip():
    cert = s.certify(s.catalog("pc65"), max_degree=1)
    assert cert["exact"] == "2/5"
    assert cert["lower"]["kind"] == "arrangement-bezout"
    ok, detail = s.verify_certificate(json.dumps(cert))
    assert ok, detail


def test_arrangement_json_round_trip():
    a = s.catalog("quasi_pencil", k=5)
    text = s.to_json(a)
    b = s.load_json(text)
    assert s.epsilon_config(b) == "5/12"
    assert s.to_json(b) == text


def test_interpolate():
    a = s.catalog("star", d=1, k=3)
    rep = s.interpolate(a, 3, multiplicities=[2, 2, 2])
    assert (rep["ambient"], rep["rank"], rep["dimension"]) == (10, 9, 1)


def test_search():
    rep = s.search(s.catalog("pc65"), max_degree=2)
    assert rep["conic"]["ratio"] == "2/5"


def test_naive_probe_disagrees_on_pc65():
    rep = s.naive_probe(s.catalog("pc65"), max_degree=1)
    assert rep["bs"] == 5 and rep["naive"] == "1/5" and not rep["equal"]


def test_unique_member():
    rep = s.unique_member(s.catalog("star", d=1, k=3))
    assert rep["unique"] and rep["dimension"] == 1


def test_table():
    rows = s.table()
    assert len(rows) == 11
    assert rows[0]["code"] == "A1(6)" and rows[0]["epsilon_config"] == "1/3"
    assert rows[0]["certified"] and not rows[1]["certified"]


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        s.catalog("no_such_entry")
    with pytest.raises(ValueError):
        s.load_json("{ not json")
    with pytest.raises(ValueError):
        s.interpolate(s.catalog("star", d=1, k=3), 2, multiplicities=[1])
