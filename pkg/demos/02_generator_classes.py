"""The generator K-classes: monomial classes, Thom classes, and the K-class test.

A vertex map assigns a Laurent polynomial to each vertex; it is a K-class when
its difference across every edge is divisible by 1 - y^(edge weight).  The two
families constructed here generate the whole K-ring, and the script shows the
divisibility test accepting them and rejecting a map that fails it.
"""
from kquadric import (
    QuadricGraph,
    VertexMap,
    antipodal_product_class,
    is_k_class,
    monomial_class,
    one,
    thom_class,
    zero,
)

ctx = QuadricGraph(2)

print("the monomial class at vertex 1 (all values are unit monomials):")
m1 = monomial_class(ctx, 1)
for v in ctx.vertices:
    print(f"  {v}: {m1[v]}")
print(f"K-class: {bool(is_k_class(ctx.graph, m1))}")

print("\nits pointwise inverse is a class too, and their product is 1:")
m1_inv = monomial_class(ctx, 1, inverted=True)
print(f"  M * M^-1 constant one: {(m1 * m1_inv) == VertexMap.constant(ctx.vertices, one(ctx.m))}")

print("\nthe Thom class of the admissible set {2, 4, 6}:")
d = thom_class(ctx, [2, 4, 6])
for v in ctx.vertices:
    print(f"  {v}: {d[v]}")
print(f"K-class: {bool(is_k_class(ctx.graph, d))}")

print("\nthe antipodal product class (the common value of M_v * M_antipode(v)):")
x = antipodal_product_class(ctx)
for v in ctx.vertices:
    assert monomial_class(ctx, v) * monomial_class(ctx, ctx.antipode(v)) == x
print("  equals every antipodal product:", [str(x[v]) for v in ctx.vertices])

print("\na map that is NOT a K-class (the indicator of vertex 1):")
values = {v: zero(ctx.m) for v in ctx.vertices}
values[1] = one(ctx.m)
report = is_k_class(ctx.graph, VertexMap(values))
print(f"  accepted: {report.ok}; failing edges: {list(report.failing_edges)}")
