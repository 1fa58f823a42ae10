import json

import pytest

import arrangelab as al

BRAID = '{"field": {"kind": "rational"}, "lines": [["1","0","0"],["0","1","0"],["0","0","1"],["1","-1","0"],["0","1","-1"],["1","0","-1"]]}'


def test_braid_basics():
    a = al.Arrangement.from_json(BRAID)
    assert len(a) == 6
    assert a.n2() == 3
    assert a.char_poly() == (-5, 6)
    assert a.is_free() == (2, 3)
    assert a.mdr() == 2
    assert a.is_supersolvable()


def test_round_trip():
    a = al.family("grid", a=3, b=2)
    b = al.Arrangement.from_json(a.to_json())
    assert b.to_json() == a.to_json()
    assert b.lines == a.lines


def test_analyze_report():
    r = al.analyze(al.family("monomial", n=3))
    assert r["report_version"] == 1
    assert r["size"] == 9
    assert r["n2"] == 0
    assert r["mu_histogram"] == {"2": 12}
    assert r["modular_points"] == []


def test_verify_grid_all_hold():
    reports = al.verify(al.family("grid", a=3, b=2))
    assert reports
    assert all(r["holds"] is not False for r in reports)


def test_kawanoue():
    r = al.kawanoue()
    assert r["holds"] is True
    assert r["quantities"]["deletion_n2"] == 4


def test_restriction_and_exponents():
    a = al.family("monomial", n=4)
    assert a.restriction_multiplicities(0) == [3, 2, 2, 2, 2]
    assert a.ziegler_exponents(0) == (5, 6)
    with pytest.raises(IndexError):
        a.ziegler_exponents(12)


def test_search_and_fake():
    s = al.search(trials=20, seed=3, jobs=2)
    assert s["candidates"] == 0
    assert al.search(trials=2, inject_fake=True)["candidates"] == 1


def test_parse_error():
    with pytest.raises(al.ParseError):
        al.Arrangement.from_json('{"field": {"kind": "rational"}, "lines": [["1", "0"]]}')


def test_run_cli_exit_codes():
    code, out, _ = al.run_cli(["generate", "--family", "grid", "--a", "2", "--b", "2"])
    assert code == 0
    assert len(json.loads(out)["lines"]) == 5
    assert al.run_cli(["generate", "--family", "nope"])[0] == 2
    assert al.run_cli(["search", "--trials", "2", "--inject-fake"])[0] == 3
