"""The canonical free-module basis and the exact decomposition of K-classes.

Every K-class f on the quadric graph is a unique combination

    f = h_1 * B_1 + ... + h_{2n+2} * B_{2n+2},

with coefficients h_k in the Laurent ring, over the canonical basis

    B_1 = 1,
    B_k = prod_{i=1}^{k-1} (1 - monomial class at i)      for k = 2..n+1,
    B_k = Thom class of {k, k+1, ..., 2n+2}               for k = n+2..2n+2.

The basis is lower triangular for the vertex order (B_k vanishes at vertices
below k) with nonzero diagonal values B_k(k), each a product of binomials
1 - y^alpha known symbolically from the construction.  `decompose` peels the
coefficients off vertex by vertex: h_k is the exact quotient of the running
residual at vertex k by those diagonal binomials, and subtracting h_k * B_k
zeroes the vertex.  Division failure at stage k certifies that the input was
not a K-class; conversely every K-class decomposes and recomposes exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .gkm import VertexMap, is_k_class
from .laurent import (
    LaurentPolynomial,
    NonDivisibleError,
    ParseError,
    div_exact_product,
    from_json_dict,
    one,
    to_json_dict,
    zero,
)
from .quadric import QuadricGraph, monomial_class, thom_class


class NotAKClassError(ValueError):
    """Decomposition input failed the edge-divisibility condition.

    `stage` is the vertex at which division broke down; `failing_edges` are
    the witnesses from the K-class test.
    """

    def __init__(self, message: str, stage: int, failing_edges: tuple = ()):
        super().__init__(message)
        self.stage = stage
        self.failing_edges = tuple(failing_edges)


@dataclass(frozen=True)
class CanonicalBasis:
    """The 2n+2 basis classes plus the symbolic binomial factorization of each
    diagonal value B_k(k) (used by `decompose`; never re-factored from the
    expanded polynomial)."""

    classes: tuple[VertexMap, ...]
    diagonal_factors: tuple[tuple[tuple[int, ...], ...], ...]


def canonical_basis(ctx: QuadricGraph) -> CanonicalBasis:
    n = ctx.n
    classes: list[VertexMap] = []
    factors: list[tuple[tuple[int, ...], ...]] = []
    one_map = VertexMap.constant(ctx.vertices, one(ctx.m))

    classes.append(one_map)
    factors.append(())

    running = one_map
    for k in range(2, n + 2):
        running = running * (one_map - monomial_class(ctx, k - 1))
        classes.append(running)
        h_k = ctx.vertex_weight(k)
        factors.append(
            tuple(
                tuple(a - b for a, b in zip(ctx.vertex_weight(i), h_k))
                for i in range(1, k)
            )
        )

    for k in range(n + 2, 2 * n + 3):
        members = frozenset(range(k, 2 * n + 3))
        classes.append(thom_class(ctx, members))
        h_k = ctx.vertex_weight(k)
        factors.append(
            tuple(
                tuple(a - b for a, b in zip(ctx.vertex_weight(j), h_k))
                for j in range(1, k)
                if j != ctx.antipode(k)
            )
        )

    return CanonicalBasis(tuple(classes), tuple(factors))


@dataclass(frozen=True)
class Decomposition:
    """The 2n+2 coefficients of a K-class over the canonical basis."""

    coefficients: tuple[LaurentPolynomial, ...]

    def to_json_dict(self, ctx: QuadricGraph) -> dict:
        if len(self.coefficients) != ctx.vertex_count:
            raise ValueError("coefficient count does not match the context")
        return {"n": ctx.n, "coeffs": [to_json_dict(c) for c in self.coefficients]}

    @classmethod
    def from_json_dict(cls, ctx: QuadricGraph, doc) -> "Decomposition":
        if not isinstance(doc, dict) or set(doc) != {"n", "coeffs"}:
            raise ParseError("decomposition document must have exactly the keys 'n' and 'coeffs'")
        if doc["n"] != ctx.n:
            raise ParseError(f"decomposition is for n={doc['n']!r}, context expects n={ctx.n}")
        coeffs = doc["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != ctx.vertex_count:
            raise ParseError(f"'coeffs' must be a list of {ctx.vertex_count} polynomials")
        parsed = []
        for entry in coeffs:
            p = from_json_dict(entry)
            if p.m != ctx.m:
                raise ParseError(f"coefficient has {p.m} variables, expected {ctx.m}")
            parsed.append(p)
        return cls(tuple(parsed))


def decompose(ctx: QuadricGraph, f: VertexMap, basis: CanonicalBasis | None = None) -> Decomposition:
    """The unique coefficients of a K-class over the canonical basis.

    Processes vertices 1, 2, ..., 2n+2 in order; at stage k the residual is
    zero below vertex k (asserted), its value at k is divided exactly by the
    binomial factors of B_k(k), and h_k * B_k is subtracted.  Raises
    NotAKClassError (naming the stage and the failing edges) when a division
    fails; that happens precisely for non-K-classes.
    """
    if f.vertices() != tuple(ctx.vertices):
        raise ValueError("vertex map does not cover exactly the graph's vertices")
    if f.m != ctx.m:
        raise ValueError(f"vertex map has {f.m} variables, expected {ctx.m}")
    if basis is None:
        basis = canonical_basis(ctx)
    residual = f
    coefficients = []
    for k in ctx.vertices:
        assert all(
            residual[l].is_zero() for l in range(1, k)
        ), f"residual not triangular at stage {k}"
        try:
            h_k = div_exact_product(residual[k], basis.diagonal_factors[k - 1])
        except NonDivisibleError as exc:
            report = is_k_class(ctx.graph, f)
            raise NotAKClassError(
                f"not a K-class: exact division failed at stage {k} "
                f"(failing edges: {list(report.failing_edges)})",
                stage=k,
                failing_edges=report.failing_edges,
            ) from exc
        coefficients.append(h_k)
        if not h_k.is_zero():
            residual = residual - basis.classes[k - 1] * h_k
    assert residual.is_zero(), "nonzero terminal remainder after full peel"
    return Decomposition(tuple(coefficients))


def recompose(ctx: QuadricGraph, coefficients, basis: CanonicalBasis | None = None) -> VertexMap:
    """Sum h_k * B_k; always a K-class."""
    if isinstance(coefficients, Decomposition):
        coefficients = coefficients.coefficients
    coefficients = tuple(coefficients)
    if len(coefficients) != ctx.vertex_count:
        raise ValueError(
            f"expected {ctx.vertex_count} coefficients, got {len(coefficients)}"
        )
    if basis is None:
        basis = canonical_basis(ctx)
    result = VertexMap.constant(ctx.vertices, zero(ctx.m))
    for h_k, b_k in zip(coefficients, basis.classes):
        if not h_k.is_zero():
            result = result + b_k * h_k
    return result


def restrict_at(ctx: QuadricGraph, f: VertexMap, v: int) -> LaurentPolynomial:
    """The value at one vertex: the v-th component of the embedding of the
    K-ring into a direct sum of Laurent rings (vertex values determine the class)."""
    if not 1 <= v <= ctx.vertex_count:
        raise ValueError(f"vertex {v} out of range 1..{ctx.vertex_count}")
    return f[v]


def localization_index_set(ctx: QuadricGraph, v: int) -> tuple[int, ...]:
    """The vertices whose monomial classes generate the localized ring at v:
    1..n+2 minus v itself (or minus its antipode when v > n+1)."""
    if not 1 <= v <= ctx.vertex_count:
        raise ValueError(f"vertex {v} out of range 1..{ctx.vertex_count}")
    drop = v if v <= ctx.n + 1 else ctx.antipode(v)
    return tuple(i for i in range(1, ctx.n + 3) if i != drop)


# -- seeded random material for the certification sweep -----------------------


def random_coefficient(rng: random.Random, m: int, max_terms: int = 3) -> LaurentPolynomial:
    """A small random ring element: up to `max_terms` terms, exponents in [-2, 2]."""
    result = zero(m)
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(-2, 2) for _ in range(m))
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        result = result + LaurentPolynomial(m, {e: c})
    return result


def generator_pool(ctx: QuadricGraph) -> list[VertexMap]:
    """All monomial classes, their inverses, and all Thom classes."""
    pool = [monomial_class(ctx, v) for v in ctx.vertices]
    pool.extend(monomial_class(ctx, v, inverted=True) for v in ctx.vertices)
    pool.extend(thom_class(ctx, members) for members in ctx.admissible_subsets())
    return pool


def random_k_class(ctx: QuadricGraph, rng: random.Random, pool=None) -> VertexMap:
    """A seeded random K-class: a sum of up to three products of at most three
    generator classes, each scaled by a small random ring element."""
    if pool is None:
        pool = generator_pool(ctx)
    result = VertexMap.constant(ctx.vertices, zero(ctx.m))
    for _ in range(rng.randint(1, 3)):
        term = VertexMap.constant(ctx.vertices, random_coefficient(rng, ctx.m))
        for _ in range(rng.randint(0, 3)):
            term = term * pool[rng.randrange(len(pool))]
        result = result + term
    return result


@dataclass(frozen=True)
class FreeModuleReport:
    """Outcome of the round-trip certification at one n."""

    n: int
    trials: int
    coefficient_round_trips: int  # recompose then decompose returned the inputs
    class_round_trips: int  # decompose then recompose reproduced the class
    zero_decomposes_to_zero: bool

    @property
    def ok(self) -> bool:
        return (
            self.coefficient_round_trips == self.trials
            and self.class_round_trips == self.trials
            and self.zero_decomposes_to_zero
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "coefficient_round_trips": self.coefficient_round_trips,
            "class_round_trips": self.class_round_trips,
            "zero_decomposes_to_zero": self.zero_decomposes_to_zero,
            "pass": self.ok,
        }


def verify_free_module(ctx: QuadricGraph, trials: int = 100, seed: int = 0) -> FreeModuleReport:
    """Certify freeness at this n with seeded random round trips.

    (a) random coefficient tuples: recompose then decompose returns them
        exactly (uniqueness / injectivity);
    (b) random K-classes: decompose then recompose reproduces the map exactly
        (the constructive surjectivity);
    (c) the zero map decomposes to the zero tuple.
    """
    rng = random.Random(seed)
    basis = canonical_basis(ctx)
    pool = generator_pool(ctx)

    coeff_ok = 0
    for _ in range(trials):
        coeffs = tuple(random_coefficient(rng, ctx.m) for _ in range(ctx.vertex_count))
        back = decompose(ctx, recompose(ctx, coeffs, basis), basis)
        if back.coefficients == coeffs:
            coeff_ok += 1

    class_ok = 0
    for _ in range(trials):
        f = random_k_class(ctx, rng, pool)
        if recompose(ctx, decompose(ctx, f, basis), basis) == f:
            class_ok += 1

    zero_map = VertexMap.constant(ctx.vertices, zero(ctx.m))
    zero_ok = all(c.is_zero() for c in decompose(ctx, zero_map, basis).coefficients)

    return FreeModuleReport(ctx.n, trials, coeff_ok, class_ok, zero_ok)
