import math
import os

import pytest

from conftest import random_gl3
from cubicdet import catalog
from cubicdet.census import (CensusReport, canonical_code, census_run, orbit_codes, pgl3_order,
                             stabilizer_order, verify_representatives)
from cubicdet.errors import UnsupportedField
from cubicdet.field import GF
from cubicdet.forms import ProjectiveTransform, parse_form, substitute


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_table_counts(q, census_reports):
    rep = census_reports[q]
    assert rep.counts_tuple() == catalog.TABLE[q]
    assert rep.tallies_agree and rep.hasse_ok
    assert rep.orbit_stabilizer_ok
    assert len(rep.representatives) == sum(catalog.TABLE[q])
    for o in rep.representatives:
        assert o.size * o.stabilizer == pgl3_order(q)
        assert abs(o.points - q - 1) <= 2 * math.sqrt(q)


def test_report_json(census_reports):
    data = census_reports[3].to_json()
    assert data["schema"] == 1
    assert data["counts"] == {"0": 1, "1": 1, "2": 2}
    assert all("points" in o and "cubic" in o for o in data["orbits"])


@pytest.mark.parametrize("q", [8, 9, 11, 13, 16, 25])
def test_large_fields_are_empty(q):
    rep = census_run(q)
    assert rep.counts_tuple() == (0, 0, 0)
    assert q + 1 - 2 * math.sqrt(q) > 3
    assert "Hasse" in rep.note


def test_unsupported_fields():
    for q in (6, 1, 12):
        with pytest.raises(UnsupportedField):
            census_run(q)
    with pytest.raises(UnsupportedField):
        census_run(7)


def test_canonical_code_is_an_invariant(rng):
    K = GF(3)
    F = parse_form("X^2*Z - X*Z^2 - X*Y*Z - Y^3", K)
    c = canonical_code(F)
    for _ in range(5):
        G = substitute(F, ProjectiveTransform(K, random_gl3(K, rng))).scale(2)
        assert canonical_code(G) == c


def test_orbit_stabilizer_single_curve():
    K = GF(2)
    F = parse_form("X^2*Z + X*Y^2 + Y*Z^2", K)
    assert len(orbit_codes(F)) * stabilizer_order(F) == pgl3_order(2)


def test_representatives_verify(census_reports):
    checks = verify_representatives(census_reports)
    assert len(checks) == len(catalog.REPRESENTATIVES)
    for chk in checks:
        assert chk.ok, (chk.cubic, chk.errors)
        if chk.q in census_reports:
            assert chk.orbit_ok


def test_cache_round_trip(tmp_path):
    first = census_run(2, cache_dir=str(tmp_path))
    files = os.listdir(tmp_path)
    assert files == ["census-q2-n3-v1.json"]
    again = census_run(2, cache_dir=str(tmp_path))
    assert isinstance(again, CensusReport)
    assert again.counts == first.counts
    assert [o.code for o in again.orbits] == [o.code for o in first.orbits]


@pytest.mark.skipif(not os.environ.get("CUBICDET_FULL"), reason="q = 7 census takes about two minutes")
def test_full_census_q7():
    rep = census_run(7, full=True, stabilizers=False)
    assert rep.counts_tuple() == catalog.TABLE[7]
