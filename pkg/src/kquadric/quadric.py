"""The GKM graph of an even-dimensional complex quadric and its generator classes.

For n >= 1 the graph has vertices 1..2n+2; vertex i and its antipode 2n+3-i
are the only non-neighbors, so the graph is regular of degree 2n.  Each vertex
j carries a weight h(j) in Z^(n+1):

    h(j) = x_{j-1} - x_{n+1}   for j = 1..n+2   (with x_0 = 0),
    h(j) = x_n - x_{2n+2-j}    for j = n+3..2n+2,

and an edge (i, j) is labeled h(j) - h(i).  Exponentiating weights gives the
vertex characters f(j) = y^h(j), out of which all generator K-classes are
assembled:

* the monomial class at v: value 1 at v, the monomial
  y_n * y_{n+1}^-1 * f(antipode(v))^-2 at the antipode, and f(v)*f(l)^-1
  elsewhere (all values are unit monomials, so the class has a pointwise
  inverse);
* the Thom class of an admissible set P (one containing no antipodal pair):
  supported on P, with value prod(1 - f(k)*f(l)^-1) at l in P, the product
  running over the vertices k outside P other than antipode(l);
* the antipodal product class, the common value of (monomial class at v) *
  (monomial class at antipode(v));
* the supported class of an index set J, which is 1 - (monomial class at v)
  when J omits exactly the vertex v, and the Thom class of J when J is
  admissible.
"""
from __future__ import annotations

from itertools import product as iter_product
from typing import Iterable

from .gkm import GkmGraph, VertexMap, derive_connection
from .laurent import (
    LaurentPolynomial,
    ParseError,
    from_json_dict,
    monomial,
    one,
    to_json_dict,
    zero,
)

Weight = tuple[int, ...]


class QuadricGraph:
    """Immutable context for one quadric graph: the labeled graph, its derived
    connection, and the weight/character data every generator class is built from."""

    __slots__ = ("n", "m", "vertex_count", "graph", "connection", "_weights")

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive int, got {n!r}")
        m = n + 1
        vertex_count = 2 * n + 2
        weights = {j: self._weight(n, j) for j in range(1, vertex_count + 1)}
        axial = {}
        for i in range(1, vertex_count + 1):
            for j in range(1, vertex_count + 1):
                if j == i or j == vertex_count + 1 - i:
                    continue
                axial[(i, j)] = tuple(a - b for a, b in zip(weights[j], weights[i]))
        graph = GkmGraph(m, vertex_count, axial)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "connection", derive_connection(graph))
        object.__setattr__(self, "_weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("QuadricGraph is immutable")

    @staticmethod
    def _weight(n: int, j: int) -> Weight:
        # x_k is basis vector k (1-based); x_0 = 0.
        e = [0] * (n + 1)
        if j <= n + 2:
            if j >= 2:
                e[j - 2] += 1
            e[n] -= 1
        else:
            e[n - 1] += 1
            k = 2 * n + 2 - j
            if k >= 1:
                e[k - 1] -= 1
        return tuple(e)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def antipode(self, i: int) -> int:
        if not 1 <= i <= self.vertex_count:
            raise ValueError(f"vertex {i} out of range 1..{self.vertex_count}")
        return self.vertex_count + 1 - i

    def vertex_weight(self, j: int) -> Weight:
        try:
            return self._weights[j]
        except KeyError:
            raise ValueError(f"vertex {j} out of range 1..{self.vertex_count}") from None

    def vertex_character(self, j: int) -> LaurentPolynomial:
        """The unit monomial y^h(j)."""
        return monomial(self.vertex_weight(j))

    def is_admissible(self, members: Iterable[int]) -> bool:
        """Nonempty, in range, and free of antipodal pairs."""
        members = set(members)
        if not members:
            return False
        if not all(1 <= v <= self.vertex_count for v in members):
            return False
        return all(self.antipode(v) not in members for v in members)

    def admissible_subsets(self) -> list[frozenset[int]]:
        """All admissible subsets (there are 3^(n+1) - 1), ordered by size then members."""
        pairs = [(i, self.antipode(i)) for i in range(1, self.n + 2)]
        subsets = []
        for choice in iter_product((None, 0, 1), repeat=len(pairs)):
            members = frozenset(
                pair[pick] for pair, pick in zip(pairs, choice) if pick is not None
            )
            if members:
                subsets.append(members)
        subsets.sort(key=lambda s: (len(s), sorted(s)))
        return subsets

    def __repr__(self) -> str:
        return f"QuadricGraph(n={self.n})"


def monomial_class(ctx: QuadricGraph, v: int, inverted: bool = False) -> VertexMap:
    """The monomial-valued generator class attached to vertex v (or its inverse).

    Every value is a unit monomial, so the pointwise inverse is again a vertex
    map; `inverted=True` returns it.
    """
    if not 1 <= v <= ctx.vertex_count:
        raise ValueError(f"vertex {v} out of range 1..{ctx.vertex_count}")
    v_bar = ctx.antipode(v)
    h_v = ctx.vertex_weight(v)
    values = {}
    for l in ctx.vertices:
        if l == v:
            exponent = (0,) * ctx.m
        elif l == v_bar:
            # y_n * y_{n+1}^-1 * f(antipode(v))^-2
            e = [0] * ctx.m
            e[ctx.n - 1] += 1
            e[ctx.n] -= 1
            exponent = tuple(a - 2 * b for a, b in zip(e, ctx.vertex_weight(v_bar)))
        else:
            exponent = tuple(a - b for a, b in zip(h_v, ctx.vertex_weight(l)))
        if inverted:
            exponent = tuple(-x for x in exponent)
        values[l] = monomial(exponent)
    return VertexMap(values)


def thom_class(ctx: QuadricGraph, members: Iterable[int]) -> VertexMap:
    """The Thom class of an admissible vertex set: supported on it, with the
    product of 1 - f(k)f(l)^-1 over external vertices k != antipode(l) at l."""
    members = frozenset(members)
    if not ctx.is_admissible(members):
        raise ValueError(f"{sorted(members)} is empty, out of range, or contains an antipodal pair")
    values = {}
    for l in ctx.vertices:
        if l not in members:
            values[l] = zero(ctx.m)
            continue
        h_l = ctx.vertex_weight(l)
        value = one(ctx.m)
        for k in ctx.vertices:
            if k in members or k == ctx.antipode(l):
                continue
            value = value * (
                one(ctx.m) - monomial(tuple(a - b for a, b in zip(ctx.vertex_weight(k), h_l)))
            )
        values[l] = value
    return VertexMap(values)


def antipodal_product_class(ctx: QuadricGraph) -> VertexMap:
    """The common product of the monomial class at v with the one at antipode(v):
    value y_n * y_{n+1}^-1 * f(k)^-2 at each vertex k."""
    values = {}
    for k in ctx.vertices:
        e = [0] * ctx.m
        e[ctx.n - 1] += 1
        e[ctx.n] -= 1
        values[k] = monomial(tuple(a - 2 * b for a, b in zip(e, ctx.vertex_weight(k))))
    return VertexMap(values)


def supported_class(ctx: QuadricGraph, members: Iterable[int]) -> VertexMap:
    """The class supported inside `members`: 1 - (monomial class at v) when
    `members` omits exactly one vertex v, the Thom class when `members` is
    admissible.  Anything else is rejected."""
    members = frozenset(members)
    everything = frozenset(ctx.vertices)
    if len(members) == ctx.vertex_count - 1 and members < everything:
        (v,) = everything - members
        return VertexMap.constant(ctx.vertices, one(ctx.m)) - monomial_class(ctx, v)
    if ctx.is_admissible(members):
        return thom_class(ctx, members)
    raise ValueError(
        f"{sorted(members)} is neither the complement of a single vertex nor admissible"
    )


# -- vertex-map serialization --------------------------------------------------


def vertex_map_to_json_dict(ctx: QuadricGraph, vm: VertexMap) -> dict:
    """Schema: {"n": int, "values": {"<vertex>": polynomial-JSON, ...}}, every vertex present."""
    if vm.vertices() != tuple(ctx.vertices):
        raise ValueError("vertex map does not cover exactly the graph's vertices")
    return {"n": ctx.n, "values": {str(v): to_json_dict(vm[v]) for v in ctx.vertices}}


def vertex_map_from_json_dict(ctx: QuadricGraph, doc) -> VertexMap:
    if not isinstance(doc, dict) or set(doc) != {"n", "values"}:
        raise ParseError("vertex map document must have exactly the keys 'n' and 'values'")
    if doc["n"] != ctx.n:
        raise ParseError(f"vertex map is for n={doc['n']!r}, context expects n={ctx.n}")
    values_doc = doc["values"]
    if not isinstance(values_doc, dict):
        raise ParseError("'values' must be an object keyed by vertex")
    expected = {str(v) for v in ctx.vertices}
    if set(values_doc) != expected:
        missing = sorted(expected - set(values_doc))
        extra = sorted(set(values_doc) - expected)
        raise ParseError(f"vertex keys wrong (missing {missing}, unexpected {extra})")
    values = {}
    for v in ctx.vertices:
        p = from_json_dict(values_doc[str(v)])
        if p.m != ctx.m:
            raise ParseError(f"value at vertex {v} has {p.m} variables, expected {ctx.m}")
        values[v] = p
    return VertexMap(values)
