"""Nested sums and hyperlogarithms: anchors, identities, colored values.

Run:  python3 demos/hyperlogarithms.py
"""

import math

from wordseries import (
    NCPoly,
    PhiTable,
    SingularitySet,
    colored_alphabets,
    generating_relation_check,
    harmonic_sum,
    harmonic_sum_exact,
    linear_independence_rank,
    pi_Y,
    polylog,
    polyzeta,
    phi_shuffle,
    shuffle,
)

sigma = SingularitySet.classical()  # singularities {0, 1}
x2, y = sigma.x_alphabet(), sigma.y_alphabet()

# the block correspondence between integral words and sum words
for text in ("x1", "x0 x1", "x0 x0 x1 x1"):
    w = x2.parse_word(text)
    print(f"pi_Y({w}) = {pi_Y(w, sigma)}")

# harmonic sums: exact small values, floating large ones
print(f"\nH_y1(3) = {harmonic_sum_exact(y.parse_word('y1'), 3)}  (= 11/6)")
print(f"H_y2(10000) = {harmonic_sum(y.parse_word('y2'), 10_000).value.real:.10f}"
      f"  vs pi^2/6 = {math.pi**2 / 6:.10f}")

# hyperlogarithm anchors
li1 = polylog(x2.parse_word("x1"), 0.5)
print(f"\nLi at x1, z=1/2: {li1.value.real:.15f}  (log 2 = {math.log(2):.15f})")
li2 = polylog(x2.parse_word("x0 x1"), 0.5)
print(f"Li at x0 x1, z=1/2: {li2.value.real:.15f}  (dilogarithm, err <= {li2.err:.1e})")

# the product of two values expands over the shuffle of their words
z = 0.3
u, v = x2.parse_word("x1"), x2.parse_word("x0 x1")
product = shuffle(NCPoly.from_word(u), NCPoly.from_word(v))
lhs = polylog(u, z).value * polylog(v, z).value
rhs = sum(float(c) * polylog(w, z).value for w, c in product.terms.items())
print(f"\nshuffle character at z={z}: |product - expansion| = {abs(lhs - rhs):.2e}")

# quasi-shuffle character of harmonic sums, exactly
stuffle = PhiTable.stuffle()
yu, yv = y.parse_word("y1"), y.parse_word("y2")
qprod = phi_shuffle(NCPoly.from_word(yu), NCPoly.from_word(yv), stuffle)
n = 25
lhs = harmonic_sum_exact(yu, n) * harmonic_sum_exact(yv, n)
rhs = sum((c * harmonic_sum_exact(w, n) for w, c in qprod.terms.items()))
print(f"quasi-shuffle character at n={n}: exact difference = {lhs - rhs}")

# generating relation: Li/(1-z) generates the harmonic values
rep = generating_relation_check(x2.parse_word("x0 x1"), 0.5, 120)
print(f"\ngenerating relation residual (depth 120): {rep.residual:.2e}")

# polyzetas: limits of harmonic sums at admissible words
print(f"\nzeta at x0 x1 (n=10^4): {polyzeta(x2.parse_word('x0 x1')).value.real:.6f}"
      f"  (pi^2/6 = {math.pi**2/6:.6f})")

# colored values: second roots of unity give alternating sums
x3, ym, sigma2 = colored_alphabets(2)
alt = polyzeta(ym.parse_word("y1@1"), 100_000, sigma2)
print(f"alternating zeta (color -1): {alt.value.real:.6f}  (-log 2 = {-math.log(2):.6f})")

# sample-matrix evidence of linear independence
words = [y.parse_word(t) for t in ("y1", "y2", "y1 y1")]
print(f"\nindependence evidence rank for (y1, y2, y1 y1): "
      f"{linear_independence_rank(words, 12)} of 3")
