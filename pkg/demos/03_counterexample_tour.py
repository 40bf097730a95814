"""Why the function space breaks for non-collapsing t-norms.

Take any triple violating the interchange law and the construction below
produces two concrete categories and three functors whose sup-hom d cannot
be transitive.  Everything is exact; the final inequality is the certificate.
"""

from fractions import Fraction as F

from tnormcat import check_c1, canonical_grid, counterexample, lukasiewicz, \
    nilpotent_minimum, product_tnorm


def tour(t, p, q, u):
    b = counterexample(t, p, q, u)
    print(f"== {t.describe()} at (p, q, u) = ({p}, {q}, {u})")
    print(f"   interchange sides: {b.c1_lhs} vs {b.c1_rhs}")
    print(f"   base: two elements with hom(x,y) = {u}")
    print(f"   fiber: unit-interval points {tuple(str(e) for e in b.fiber.elements)}")
    for name, fct in (("f", b.f), ("g", b.g), ("h", b.h)):
        print(f"   {name} = {tuple(str(v) for v in fct.mapping)}")
    print(f"   d(f,g) = {b.d_fg} >= p,  d(g,h) = {b.d_gh} >= q,  d(f,h) = {b.d_fh}")
    print(f"   transitivity would need d(g,h) & d(f,g) <= d(f,h): "
          f"{b.trans_lhs} <= {b.trans_rhs} is false")
    print(f"   capped at u: {b.capped_lhs} > {b.capped_rhs}")
    print()


tour(lukasiewicz(), F(9, 10), F(9, 10), F(1, 2))
tour(product_tnorm(), F(9, 10), F(9, 10), F(1, 2))

t = nilpotent_minimum()
witness = check_c1(t, canonical_grid(t)).witness
tour(t, *witness.values)
