"""Sequences, bilimits, Yoneda limits, and completeness of function spaces.

Eventually periodic sequences make the sup-inf limit formulas exactly
computable.  The demo walks a small category, shows certificates, and ends
with the function-space completeness check under a collapsing t-norm.
"""

from fractions import Fraction as F

from tnormcat import (
    RCat,
    TailSeq,
    check_power_completeness,
    check_product_bilimit,
    find_bilimit,
    find_yoneda_limit,
    interval_collapse,
    is_cauchy,
    is_forward_cauchy,
    tail_value,
    unit_interval_category,
)

cat = RCat(
    ("a", "b", "x"),
    ((1, 1, F(1, 2)), (1, 1, F(1, 2)), (0, 0, 1)),
)
print("carrier: a ~ b (mutual hom 1), both sit 1/2 below x")

seq = TailSeq(cat, prefix=("x",), cycle=("a", "b"))
print("sequence: prefix (x), cycle (a b a b ...)")
print("tail distance to x:", tail_value(seq, "x"))
print("is Cauchy:", is_cauchy(seq) is None)
print("is forward Cauchy:", is_forward_cauchy(seq) is None)

v = find_bilimit(seq)
print(f"bilimit: {v.witness}; certificate rows:")
for row in v.certificate:
    print(f"  element {row.element}: hom(a*,x)={row.hom_from_witness} "
          f"= tail {row.tail_from_seq}; hom(x,a*)={row.hom_to_witness} "
          f"= tail {row.tail_to_seq}")

y = find_yoneda_limit(seq)
print(f"Yoneda limit: {y.witness} (agrees with the bilimit up to mutual hom 1)")
print()

other = RCat(("p", "q"), ((1, 1), (1, 1)))
s2 = TailSeq(other, (), ("p", "q", "p"))
print("pairing with a 3-cycle in another category:",
      "ok" if check_product_bilimit(seq, s2) is None else "FAILED")

bad = TailSeq(RCat(("a", "b"), ((1, 0), (0, 1))), (), ("a", "b"))
print("alternating cycle in a discrete category is Cauchy:",
      is_cauchy(bad) is None)
print()

t = interval_collapse([(F(1, 4), F(1, 2))])
base = RCat(("x", "y"), ((1, F(1, 2)), (0, 1)))
fiber = unit_interval_category(t, [F(0), F(1, 4), F(1, 2), F(1)])
w = check_power_completeness(t, base, fiber)
print("function space over the collapsing t-norm is Cauchy complete:",
      w is None)
