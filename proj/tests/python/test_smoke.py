import json

import pytest

import fourdist


def test_arith():
    assert fourdist.isqrt(833) == (28, False)
    assert fourdist.is_prime(13)
    assert fourdist.jacobi(2, 3) == -1
    assert fourdist.two_nonresidue_primes(20) == [3, 5, 11, 13, 19]
    assert fourdist.pythagorean_partners(15) == [8, 20, 36, 112]
    with pytest.raises(ValueError):
        fourdist.jacobi(2, 8)


def test_model():
    p = fourdist.distance_profile(7, 24, 52)
    assert p["count"] == 3
    assert fourdist.canonicalize(45, 24, 52) == (7, 24, 52)
    assert len(fourdist.orbit(7, 24, 52)) == 8


def test_pipeline_and_sieve():
    hits = [o["filter"] for o in fourdist.run_pipeline(25, 36, 60, mode="full") if o["eliminated"]]
    assert hits == ["theorem2", "theorem4", "theorem5"]
    r = fourdist.sieve_z(60, filters=["parity_residue", "lemma3", "theorem5"])
    assert r["survivors"] == []
    assert r["totals"]["candidates"] == 292
    with pytest.raises(ValueError):
        fourdist.sieve_z(60, filters=["nope"])


def test_lists():
    lists = fourdist.unavailable_lists(60)
    assert lists["lemma3_y"]["combined"] == [20, 40]
    assert lists["theorem5_y"]["direct"] == [4, 8, 16, 24, 32, 48]


def test_oracle_scan():
    rep = fourdist.oracle_scan(60)
    pts = [(e["x"], e["y"], e["z"]) for e in rep["entries"]]
    assert (7, 24, 52) in pts


def test_search_range_workers():
    assert fourdist.search_range(12, 60, workers=1) == fourdist.search_range(12, 60, workers=4)


def test_cli():
    code, out, _ = fourdist.run_cli(["lists", "--z", "60", "--format", "json"])
    assert code == 0
    assert json.loads(out)["lemma3_y"]["combined"] == [20, 40]
    code, _, err = fourdist.run_cli(["sieve", "--z", "0"])
    assert code == 1 and err
