import random

import pytest

from cubicdet.census import census_run
from cubicdet.curve import NormalizedCubic
from cubicdet.errors import Singular
from cubicdet.field import GF, prime_power
from cubicdet.forms import TernaryForm

# criterion number -> (ok, detail), filled by test_acceptance
ACCEPTANCE = {}


def field_for(q):
    return GF(*prime_power(q))


def random_normalized(K, rng):
    """Random smooth cubic with a000 = a001 = 0 and a002 != 0."""
    elems = list(K.elements())
    nonzero = [x for x in elems if x != 0]
    while True:
        vec = [0, 0, rng.choice(nonzero)] + [rng.choice(elems) for _ in range(7)]
        try:
            return NormalizedCubic(TernaryForm.from_vector(K, 3, vec))
        except Singular:
            continue


def random_gl3(K, rng):
    elems = list(K.elements())
    from cubicdet import linalg
    while True:
        A = [[rng.choice(elems) for _ in range(3)] for _ in range(3)]
        if linalg.inverse(K, A) is not None:
            return A


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(scope="session")
def census_reports():
    return {q: census_run(q) for q in (2, 3, 4, 5)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
