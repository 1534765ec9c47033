import json

import pytest

import puiseux

TWO_THREE = {"kind": "finite", "generators": ["2", "3"]}


def test_numerical():
    assert puiseux.frobenius([3, 5]) == 7
    assert sorted(puiseux.apery_set([3, 5], 3)) == [0, 5, 10]


def test_factorizations_and_lengths():
    assert puiseux.length_set(TWO_THREE, "6") == [2, 3]
    assert len(puiseux.factorizations(TWO_THREE, "6")) == 2
    assert puiseux.elasticity(TWO_THREE, "6") == "3/2"
    assert puiseux.length_set(json.dumps(TWO_THREE), "6") == [2, 3]


def test_membership_verdicts():
    assert puiseux.member(TWO_THREE, "5")["verdict"] == "yes"
    assert puiseux.member(TWO_THREE, "1")["verdict"] == "no"
    geo = {"kind": "geometric", "ratio": "2/3"}
    assert puiseux.member(geo, "1/243", depth=2)["verdict"] == "unknown"


def test_classify():
    c = puiseux.classify({"kind": "finite", "generators": ["2/3"]})
    assert c["transferKrull"] and c["transferFinite"] and c["krull"] and c["cMonoid"]
    p = puiseux.classify({"kind": "primeReciprocal", "form": "1/p", "primes": "all"})
    assert not any(p[k] for k in ("transferKrull", "transferFinite", "krull", "cMonoid"))


def test_primary_tools():
    cert = puiseux.verify_finitary_certificate({"kind": "geometric", "ratio": "5/2"}, "2", ["5"], "30", 4)
    assert cert["kind"] == "scopedCertificate"
    ref = puiseux.refute_strongly_primary({"kind": "primeReciprocal", "form": "1/p", "primes": "all"}, "2", ["1/2"])
    assert ref["kind"] == "theoremBackedRefutation"
    with pytest.raises(ValueError):
        puiseux.build_primary_construction("2", "3", "n", [[3, 5]], 4)


def test_homs_and_blocks():
    assert puiseux.automorphism_search({"kind": "geometric", "ratio": "5/3", "biinfinite": True}, 1) == ["3/5", "1", "5/3"]
    assert puiseux.is_transfer("1/2", {"kind": "finite", "generators": ["3", "5"]},
                               {"kind": "finite", "generators": ["3/2", "5/2"]})["transfer"] is True
    assert puiseux.davenport([2, 2]) == 3
    assert len(puiseux.block_atoms([3])) == 4
    assert puiseux.gcd_stabilization([4, 6, 9, 21]) == 3
    with pytest.raises(RuntimeError):
        puiseux.gcd_stabilization([3, 5, 7, 11], cap=1)


def test_errors_and_cli():
    with pytest.raises(ValueError):
        puiseux.member(TWO_THREE, "1.5")
    code, out, _ = puiseux.cli(["frobenius", "--spec", '{"kind":"numerical","generators":[3,5]}', "--json"])
    assert code == 0 and json.loads(out) == {"frobenius": 7}
