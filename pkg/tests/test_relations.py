import random

import pytest

from kquadric.gkm import VertexMap
from kquadric.laurent import monomial, one
from kquadric.quadric import QuadricGraph, monomial_class, thom_class
from kquadric.relations import (
    ClassProvider,
    check_antipodal_product,
    check_complete_set_split,
    check_generator_identity,
    check_peeling,
    check_product_vanishing,
    random_empty_intersection_family,
    spare_pole_pair,
    support_index_sets,
    verify_all,
)


def complement(ctx, v):
    return frozenset(ctx.vertices) - {v}


# -- product vanishing ---------------------------------------------------------


def test_all_single_vertex_complements_vanish(q1):
    family = [complement(q1, v) for v in q1.vertices]
    assert check_product_vanishing(q1, family)


def test_disjoint_thom_supports_vanish(q1):
    assert check_product_vanishing(q1, [{3, 4}, {1, 2}])


def test_mixed_family_vanishes(q2):
    family = [{2, 4, 6}, complement(q2, 2), complement(q2, 4), complement(q2, 6)]
    assert check_product_vanishing(q2, family)


def test_nonempty_intersection_rejected(q1):
    with pytest.raises(ValueError, match="intersection"):
        check_product_vanishing(q1, [{1, 2}, {2, 3}])


def test_invalid_index_set_rejected(q1):
    with pytest.raises(ValueError):
        check_product_vanishing(q1, [{1, 4}, {2}])  # {1,4} has no valid shape


def test_duplicate_members_allowed(q1):
    assert check_product_vanishing(q1, [{1}, {1}, {2}])


def test_random_supersets_still_vanish(q2):
    rng = random.Random(20)
    universe = support_index_sets(q2)
    base = [{1}, complement(q2, 1)]
    for _ in range(10):
        extras = [universe[rng.randrange(len(universe))] for _ in range(rng.randint(1, 3))]
        assert check_product_vanishing(q2, base + extras)


def test_random_family_generator_produces_empty_intersections(q2):
    rng = random.Random(21)
    for _ in range(30):
        family = random_empty_intersection_family(q2, rng)
        intersection = frozenset(q2.vertices)
        for j in family:
            intersection &= j
        assert not intersection
        assert check_product_vanishing(q2, family)


# -- spare pole pair -------------------------------------------------------------


def test_spare_pair_n1(q1):
    assert spare_pole_pair(q1, {1}) == (2, 3)


def test_spare_pair_n2(q2):
    assert spare_pole_pair(q2, {2, 4}) == (1, 6)
    assert spare_pole_pair(q2, {1, 2}) == (3, 4)


def test_spare_pair_requires_size_n(q2):
    with pytest.raises(ValueError):
        spare_pole_pair(q2, {1})
    with pytest.raises(ValueError):
        spare_pole_pair(q2, {1, 6})  # inadmissible


# -- complete-set split ------------------------------------------------------------


def test_split_identity_n1(q1):
    assert check_complete_set_split(q1, {1})
    # Both sides at the spare vertex equal 1 - y1^-1.
    lhs = VertexMap.constant(q1.vertices, one(2)) - monomial_class(q1, 1)
    b, b_bar = spare_pole_pair(q1, {1})
    assert b == 2 and lhs[2] == one(2) - monomial((-1, 0))
    rhs = thom_class(q1, {3, 4}) + monomial_class(q1, 2) * thom_class(q1, {2, 4})
    assert lhs == rhs


def test_split_vanishes_inside_the_set(q2):
    members = frozenset({1, 2})
    lhs = VertexMap.constant(q2.vertices, one(3))
    for i in members:
        lhs = lhs * (VertexMap.constant(q2.vertices, one(3)) - monomial_class(q2, i))
    for v in members:
        assert lhs[v].is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_split_identity_exhaustive(n):
    ctx = QuadricGraph(n)
    count = 0
    for members in ctx.admissible_subsets():
        if len(members) != n:
            continue
        assert check_complete_set_split(ctx, members)
        count += 1
    assert count > 0


def test_split_requires_admissible_size_n(q2):
    with pytest.raises(ValueError):
        check_complete_set_split(q2, {1})
    with pytest.raises(ValueError):
        check_complete_set_split(q2, {3, 4})


# -- peeling ------------------------------------------------------------------------


def test_peel_pair_n1(q1):
    assert check_peeling(q1, {3, 4}, 3)


def test_peel_golden_n2(q2):
    assert check_peeling(q2, {2, 4, 6}, 2)
    lhs = thom_class(q2, {2, 4, 6}) * (
        VertexMap.constant(q2.vertices, one(3)) - monomial_class(q2, 2)
    )
    assert lhs == thom_class(q2, {4, 6})


def test_peel_support(q2):
    lhs = thom_class(q2, {2, 4, 6}) * (
        VertexMap.constant(q2.vertices, one(3)) - monomial_class(q2, 2)
    )
    for l in q2.vertices:
        assert lhs[l].is_zero() == (l not in {4, 6})


def test_peel_parameter_validation(q1):
    with pytest.raises(ValueError):
        check_peeling(q1, {3, 4}, 1)  # i not in the set
    with pytest.raises(ValueError):
        check_peeling(q1, {3}, 3)  # too small


def test_peel_chains(q3):
    # Removing a subset S one vertex at a time lands on the Thom class of P - S.
    rng = random.Random(22)
    admissible = [s for s in q3.admissible_subsets() if len(s) >= 3]
    one_map = VertexMap.constant(q3.vertices, one(q3.m))
    for _ in range(8):
        members = admissible[rng.randrange(len(admissible))]
        strip = rng.sample(sorted(members), rng.randint(1, len(members) - 1))
        lhs = thom_class(q3, members)
        for i in strip:
            lhs = lhs * (one_map - monomial_class(q3, i))
        assert lhs == thom_class(q3, members - frozenset(strip))


# -- antipodal products ---------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2])
def test_antipodal_products_all_pairs(n):
    ctx = QuadricGraph(n)
    for v in ctx.vertices:
        for w in ctx.vertices:
            if v != w:
                assert check_antipodal_product(ctx, v, w)


def test_antipodal_product_rejects_equal_vertices(q1):
    with pytest.raises(ValueError):
        check_antipodal_product(q1, 2, 2)


# -- generator identities -----------------------------------------------------------------


def test_generator_identity_golden_n2(q2):
    assert check_generator_identity(q2, 1)
    product = monomial_class(q2, 2) * monomial_class(q2, 1, inverted=True)
    assert product == VertexMap.constant(q2.vertices, monomial((1, 0, 0)))


def test_generator_identity_n1(q1):
    assert check_generator_identity(q1, 2)
    product = monomial_class(q1, 3) * monomial_class(q1, 1, inverted=True)
    assert product == VertexMap.constant(q1.vertices, monomial((0, 1)))


def test_generator_identity_range(q1):
    with pytest.raises(ValueError):
        check_generator_identity(q1, 0)
    with pytest.raises(ValueError):
        check_generator_identity(q1, 3)


def test_generator_values_away_from_antipodes(q2):
    # Away from both antipodes the product is the plain character ratio.
    product = monomial_class(q2, 2) * monomial_class(q2, 1, inverted=True)
    for j in q2.vertices:
        if j in (q2.antipode(1), q2.antipode(2)):
            continue
        ratio = q2.vertex_character(2) * q2.vertex_character(1) ** -1
        assert product[j] == ratio


# -- the aggregate sweep ---------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2])
def test_verify_all_passes(n):
    ctx = QuadricGraph(n)
    report = verify_all(ctx, random_family_count=25, seed=5)
    assert report.ok
    assert report.fail_count == 0
    assert report.pass_count == len(report.records) > 0
    doc = report.to_json_dict()
    assert doc["summary"] == {"pass": report.pass_count, "fail": 0}
    assert doc["n"] == n


def test_verify_all_report_shape(q1):
    report = verify_all(q1, random_family_count=5, seed=1)
    kinds = {record.kind for record in report.records}
    assert kinds == {
        "generator_identity",
        "antipodal_product",
        "peeling",
        "complete_set_split",
        "product_vanishing",
    }


def test_corrupted_class_is_named_in_failures(q1):
    provider = ClassProvider(q1)
    m1 = monomial_class(q1, 1)
    values = dict(m1.values)
    values[2] = values[2] * -1  # flip one coefficient
    provider.override("M", 1, VertexMap(values))
    report = verify_all(q1, random_family_count=10, seed=3, provider=provider)
    failures = report.failures()
    assert failures
    def mentions_vertex_one(record):
        p = record.params
        return (
            p.get("i") == 1
            or p.get("v") == 1
            or p.get("w") == 1
            or 1 in p.get("members", ())
            or any(sorted(complement(q1, 1)) == j for j in p.get("family", ()))
        )
    assert any(mentions_vertex_one(r) for r in failures)
