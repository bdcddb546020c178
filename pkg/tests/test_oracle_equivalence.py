"""Random-census equivalence of the closed-form solvers and the brute oracle."""

import random

from alg2d import (
    GF,
    cubic_root_count,
    distinct_root_count,
    idempotents,
    left_ideals,
    left_quasiunits,
    oracle_enumerate,
    oracle_points,
    right_ideals,
    subalgebra_poly,
    subalgebras,
    two_sided_ideals,
)
from alg2d.algebra import all_mscs, msc_from_index


def _check(A, field):
    assert subalgebras(A) == oracle_enumerate(A, "subalgebras"), A.text()
    assert left_ideals(A) == oracle_enumerate(A, "left"), A.text()
    assert right_ideals(A) == oracle_enumerate(A, "right"), A.text()
    assert two_sided_ideals(A) == oracle_enumerate(A, "two_sided"), A.text()
    assert idempotents(A).materialize() == oracle_points(A, "idempotents"), A.text()
    assert left_quasiunits(A).materialize(field) == oracle_points(A, "quasiunits"), A.text()


def test_random_census_over_four_fields():
    rng = random.Random(314159)
    for spec in ((5, 1), (7, 1), (2, 2), (3, 2)):
        field = GF(*spec)
        for _ in range(2500):
            A = msc_from_index(field, rng.randrange(field.order**8))
            _check(A, field)


def test_classifier_equals_subalgebra_root_component():
    # the root-count classifier and the splitting-field count agree on the
    # slope cubic of every algebra over GF(2) and GF(3)
    for field in (GF(2), GF(3)):
        for A in all_mscs(field):
            p = subalgebra_poly(A)
            got = cubic_root_count(p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0))
            assert got is distinct_root_count(p), A.text()
