"""The relation families among the generator classes, verified exactly.

Four families are checked as identities of vertex maps (integer-exact, no
tolerance anywhere):

1. product vanishing: the product of supported classes over any family of
   index sets with empty intersection is the zero map;
2. complete-set split: for an admissible I of size n, the product of
   1 - (monomial class at i) over I equals the Thom class of the complement
   minus one spare pole, plus the monomial class at that pole times the Thom
   class of the complement minus the other;
3. peeling: multiplying a Thom class by 1 - (monomial class at i) removes i
   from its support;
4. antipodal product constancy: (monomial class at v) * (monomial class at
   antipode(v)) is the same map for every v;

plus the generator identity that recovers each ring variable y_i as
(monomial class at i+1) * (inverse monomial class at 1).

`verify_all` sweeps every instance of 2-4 and the generator identities, runs
family 1 exhaustively up to a size bound and on seeded random families, and
returns an accumulated report (checks never raise on a failed identity, only
on malformed parameters).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .gkm import VertexMap
from .laurent import LaurentPolynomial, monomial, one
from .quadric import (
    QuadricGraph,
    antipodal_product_class,
    monomial_class,
    thom_class,
)


class ClassProvider:
    """Caches generator classes for one context; supports targeted overrides.

    Overrides exist for fault injection: tests replace, say, the monomial
    class at one vertex with a corrupted copy and watch the relation suite
    name it in a failure.
    """

    def __init__(self, ctx: QuadricGraph):
        self.ctx = ctx
        self._cache: dict[tuple, VertexMap] = {}

    def override(self, kind: str, key, vm: VertexMap) -> None:
        if kind not in ("M", "Minv", "Delta"):
            raise ValueError(f"unknown class kind {kind!r}")
        key = frozenset(key) if kind == "Delta" else int(key)
        self._cache[(kind, key)] = vm

    def monomial(self, v: int) -> VertexMap:
        key = ("M", v)
        if key not in self._cache:
            self._cache[key] = monomial_class(self.ctx, v)
        return self._cache[key]

    def monomial_inverse(self, v: int) -> VertexMap:
        key = ("Minv", v)
        if key not in self._cache:
            self._cache[key] = monomial_class(self.ctx, v, inverted=True)
        return self._cache[key]

    def thom(self, members) -> VertexMap:
        key = ("Delta", frozenset(members))
        if key not in self._cache:
            self._cache[key] = thom_class(self.ctx, key[1])
        return self._cache[key]

    def supported(self, members) -> VertexMap:
        members = frozenset(members)
        everything = frozenset(self.ctx.vertices)
        if len(members) == self.ctx.vertex_count - 1 and members < everything:
            (v,) = everything - members
            return VertexMap.constant(self.ctx.vertices, one(self.ctx.m)) - self.monomial(v)
        if self.ctx.is_admissible(members):
            return self.thom(members)
        raise ValueError(
            f"{sorted(members)} is neither the complement of a single vertex nor admissible"
        )


def _provider(ctx: QuadricGraph, provider: ClassProvider | None) -> ClassProvider:
    return provider if provider is not None else ClassProvider(ctx)


def check_product_vanishing(ctx, family, provider=None) -> bool:
    """True iff the product of the supported classes of `family` is the zero map.

    `family` must consist of valid index sets with empty overall intersection
    (duplicates are allowed -- they only repeat factors).  At each vertex the
    factor values are multiplied smallest-first; the product is exact either
    way, and this meets the zero factor early.
    """
    provider = _provider(ctx, provider)
    family = [frozenset(j) for j in family]
    if not family:
        raise ValueError("family must be nonempty")
    intersection = frozenset(ctx.vertices)
    for j in family:
        intersection &= j
    if intersection:
        raise ValueError(f"family intersection {sorted(intersection)} is nonempty")
    factors = [provider.supported(j) for j in family]
    for v in ctx.vertices:
        values = sorted((f[v] for f in factors), key=LaurentPolynomial.term_count)
        product = values[0]
        for value in values[1:]:
            product = product * value
        if not product.is_zero():
            return False
    return True


def spare_pole_pair(ctx, members) -> tuple[int, int]:
    """The unique antipodal pair disjoint from an admissible size-n set, smaller first."""
    members = frozenset(members)
    if len(members) != ctx.n or not ctx.is_admissible(members):
        raise ValueError(f"{sorted(members)} is not an admissible set of size n={ctx.n}")
    pairs = [
        (i, ctx.antipode(i))
        for i in range(1, ctx.n + 2)
        if i not in members and ctx.antipode(i) not in members
    ]
    if len(pairs) != 1:
        raise RuntimeError(f"expected exactly one spare pair, found {pairs}")
    return pairs[0]


def check_complete_set_split(ctx, members, provider=None) -> bool:
    """For admissible I of size n: prod_{i in I}(1 - M_i) splits as
    Thom((I ∪ {b})^c) + M_b * Thom((I ∪ {b'})^c) with {b, b'} the spare pair."""
    provider = _provider(ctx, provider)
    members = frozenset(members)
    b, b_bar = spare_pole_pair(ctx, members)
    complement = frozenset(ctx.vertices) - members
    lhs = VertexMap.constant(ctx.vertices, one(ctx.m))
    for i in sorted(members):
        lhs = lhs * (VertexMap.constant(ctx.vertices, one(ctx.m)) - provider.monomial(i))
    rhs = provider.thom(complement - {b}) + provider.monomial(b) * provider.thom(
        complement - {b_bar}
    )
    return lhs == rhs


def check_peeling(ctx, members, i, provider=None) -> bool:
    """Thom(P) * (1 - M_i) == Thom(P \\ {i}) for i in P, |P| > 1."""
    provider = _provider(ctx, provider)
    members = frozenset(members)
    if i not in members:
        raise ValueError(f"vertex {i} is not in {sorted(members)}")
    if len(members) < 2:
        raise ValueError("peeling needs at least two members")
    lhs = provider.thom(members) * (
        VertexMap.constant(ctx.vertices, one(ctx.m)) - provider.monomial(i)
    )
    return lhs == provider.thom(members - {i})


def check_antipodal_product(ctx, v, w, provider=None) -> bool:
    """M_v * M_antipode(v) == M_w * M_antipode(w) == the antipodal product class."""
    if v == w:
        raise ValueError("the two vertices must be distinct")
    provider = _provider(ctx, provider)
    x = antipodal_product_class(ctx)
    left = provider.monomial(v) * provider.monomial(ctx.antipode(v))
    right = provider.monomial(w) * provider.monomial(ctx.antipode(w))
    return left == x and right == x


def check_generator_identity(ctx, i, provider=None) -> bool:
    """M_{i+1} * M_1^{-1} is the constant map y_i, for i = 1..n+1."""
    if not 1 <= i <= ctx.n + 1:
        raise ValueError(f"i must be in 1..{ctx.n + 1}, got {i}")
    provider = _provider(ctx, provider)
    y_i = monomial(tuple(1 if k == i - 1 else 0 for k in range(ctx.m)))
    expected = VertexMap.constant(ctx.vertices, y_i)
    return provider.monomial(i + 1) * provider.monomial_inverse(1) == expected


def support_index_sets(ctx) -> list[frozenset[int]]:
    """Every valid index set for a supported class: the 2n+2 single-vertex
    complements, then all admissible subsets (by size, then members)."""
    everything = frozenset(ctx.vertices)
    sets = [everything - {v} for v in ctx.vertices]
    sets.extend(ctx.admissible_subsets())
    return sets


def random_empty_intersection_family(ctx, rng: random.Random, universe=None) -> list[frozenset[int]]:
    """A seeded random family (duplicates allowed) with empty intersection."""
    if universe is None:
        universe = support_index_sets(ctx)
    for _ in range(200):
        size = rng.randint(2, min(6, len(universe)))
        family = [universe[rng.randrange(len(universe))] for _ in range(size)]
        intersection = family[0]
        for j in family[1:]:
            intersection = intersection & j
        if not intersection:
            return family
    # Fallback: force emptiness with a complement and its missing vertex.
    v = rng.randrange(ctx.vertex_count) + 1
    return [frozenset(ctx.vertices) - {v}, frozenset({v})]


@dataclass(frozen=True)
class CheckRecord:
    kind: str
    params: dict
    passed: bool


@dataclass(frozen=True)
class RelationReport:
    n: int
    records: tuple[CheckRecord, ...]

    @property
    def pass_count(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def fail_count(self) -> int:
        return sum(1 for r in self.records if not r.passed)

    @property
    def ok(self) -> bool:
        return self.fail_count == 0

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "checks": [
                {"kind": r.kind, "params": r.params, "pass": r.passed} for r in self.records
            ],
            "summary": {"pass": self.pass_count, "fail": self.fail_count},
        }


ALL_KINDS = (
    "generator_identity",
    "antipodal_product",
    "peeling",
    "complete_set_split",
    "product_vanishing",
)


def verify_all(
    ctx,
    family_size_bound: int = 3,
    random_family_count: int = 100,
    seed: int = 0,
    kinds=ALL_KINDS,
    provider: ClassProvider | None = None,
) -> RelationReport:
    """Run every relation instance and accumulate a report.

    Exhaustive over: all generator identities, all distinct vertex pairs, all
    (admissible P, i in P) with |P| > 1, all admissible I of size n, and all
    distinct empty-intersection families of at most `family_size_bound` index
    sets; plus `random_family_count` seeded random families (any size,
    duplicates allowed).
    """
    provider = _provider(ctx, provider)
    records: list[CheckRecord] = []

    def record(kind: str, params: dict, passed: bool) -> None:
        records.append(CheckRecord(kind, params, passed))

    if "generator_identity" in kinds:
        for i in range(1, ctx.n + 2):
            record("generator_identity", {"i": i}, check_generator_identity(ctx, i, provider))

    if "antipodal_product" in kinds:
        for v, w in combinations(ctx.vertices, 2):
            record(
                "antipodal_product",
                {"v": v, "w": w},
                check_antipodal_product(ctx, v, w, provider),
            )

    if "peeling" in kinds:
        for members in ctx.admissible_subsets():
            if len(members) < 2:
                continue
            for i in sorted(members):
                record(
                    "peeling",
                    {"members": sorted(members), "i": i},
                    check_peeling(ctx, members, i, provider),
                )

    if "complete_set_split" in kinds:
        for members in ctx.admissible_subsets():
            if len(members) != ctx.n:
                continue
            record(
                "complete_set_split",
                {"members": sorted(members)},
                check_complete_set_split(ctx, members, provider),
            )

    if "product_vanishing" in kinds:
        universe = support_index_sets(ctx)
        for size in range(1, family_size_bound + 1):
            for family in combinations(universe, size):
                intersection = family[0]
                for j in family[1:]:
                    intersection = intersection & j
                    if not intersection:
                        break
                if intersection:
                    continue
                record(
                    "product_vanishing",
                    {"family": sorted(sorted(j) for j in family)},
                    check_product_vanishing(ctx, family, provider),
                )
        rng = random.Random(seed)
        for _ in range(random_family_count):
            family = random_empty_intersection_family(ctx, rng, universe)
            record(
                "product_vanishing",
                {"family": sorted(sorted(j) for j in family), "random": True},
                check_product_vanishing(ctx, family, provider),
            )

    return RelationReport(ctx.n, tuple(records))
