import io
import json
from fractions import Fraction

import pytest

from isogate.claims import (CLAIM_IDS, CRITERION_CLAIMS, FAMILY_J, FAMILY_T,
                            NO_TWO_TORSION_J, ClaimReport, Config,
                            claim_description, run_all, run_claim,
                            write_reports)
from isogate.errors import UnknownClaim
from isogate.ratcurves import parse_rational_expr


def test_claim_ids():
    assert CLAIM_IDS == (
        "cartan-lemma", "cm-criterion", "cm-filter", "cube-cartan",
        "disc-17-37", "disc-7", "exc-2torsion", "exc-family", "family-j",
        "full2", "g3-orbits", "g7-orbits", "g95-s4", "gate-search",
        "sqrt-rule", "surjectivity", "x011", "x014-torsion", "x020",
    )
    assert list(CLAIM_IDS) == sorted(CLAIM_IDS)


def test_criterion_map_covers_registry():
    assert set(CRITERION_CLAIMS) == set(range(1, 15))
    for ids in CRITERION_CLAIMS.values():
        assert ids
        for cid in ids:
            assert cid in CLAIM_IDS
    covered = set()
    for ids in CRITERION_CLAIMS.values():
        covered.update(ids)
    assert covered == set(CLAIM_IDS)


def test_frozen_inputs():
    assert len(FAMILY_J) == len(FAMILY_T) == 18
    assert len(NO_TWO_TORSION_J) == 9
    parsed = [parse_rational_expr(s) for s in FAMILY_J]
    assert len(set(parsed)) == 18


def test_claim_description():
    text = claim_description("gate-search")
    assert "applicable" in text
    with pytest.raises(UnknownClaim):
        claim_description("weil-pairing")


def test_run_claim_errors():
    with pytest.raises(UnknownClaim):
        run_claim("nope")
    with pytest.raises(ValueError):
        run_claim("disc-7", moduli=(7,))


def test_cheap_claims_pass():
    for cid in ("disc-7", "sqrt-rule", "cm-criterion", "full2"):
        rep = run_claim(cid)
        assert rep.status == "pass", (cid, rep.computed)
        assert rep.elapsed_ms >= 0
        assert rep.params == {}
    rep = run_claim("cartan-lemma", moduli=(7,))
    assert rep.status == "pass"
    assert rep.params == {"r": [7]}
    rep = run_claim("g3-orbits", moduli=(5,))
    assert rep.status == "pass"


def test_report_to_dict():
    rep = run_claim("sqrt-rule")
    d = rep.to_dict()
    assert d["schema"] == "isogate-report/1"
    assert d["claim_id"] == "sqrt-rule"
    assert d["status"] == "pass"
    json.dumps(d)  # everything JSON-stable, Fractions already strings


def test_config(tmp_path):
    c = Config()
    assert c.sample_bound == 10 ** 4
    assert c.height_bound == 1000
    assert c.torsion_primes == {}

    path = tmp_path / "conf.json"
    path.write_text(json.dumps({
        "sample_bound": 500,
        "torsion_primes": {"X0(14)": [29, 43]},
    }))
    c = Config.from_json(str(path))
    assert c.sample_bound == 500
    assert c.height_bound == 1000
    assert c.torsion_primes == {"X0(14)": (29, 43)}

    path.write_text(json.dumps({"sample_bound": 500, "verbose": True}))
    with pytest.raises(ValueError):
        Config.from_json(str(path))


def test_write_reports(tmp_path):
    reports = [run_claim("disc-7"), run_claim("full2")]
    out = tmp_path / "reports.json"
    write_reports(str(out), reports)
    loaded = json.loads(out.read_text())
    assert isinstance(loaded, list) and len(loaded) == 2
    assert {entry["claim_id"] for entry in loaded} == {"disc-7", "full2"}
    for entry in loaded:
        assert entry["schema"] == "isogate-report/1"


def test_run_all_determinism_bullet(tmp_path):
    def run_once(name):
        out = tmp_path / name
        reports = run_all(str(out), stream=io.StringIO())
        stripped = [
            {k: v for k, v in rep.to_dict().items() if k != "elapsed_ms"}
            for rep in reports
        ]
        return reports, stripped, out.read_text()

    first_reports, first, text1 = run_once("a.json")
    assert [rep.claim_id for rep in first_reports] == list(CLAIM_IDS)
    assert all(rep.status == "pass" for rep in first_reports)
    second_reports, second, text2 = run_once("b.json")
    assert first == second
    # files differ only in timing fields
    scrub = lambda t: [{k: v for k, v in e.items() if k != "elapsed_ms"}
                       for e in json.loads(t)]
    assert scrub(text1) == scrub(text2)
