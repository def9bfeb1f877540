"""Rational series as weighted automata: closures, minimization, splittings.

Run:  python3 demos/rational_series.py
"""

from fractions import Fraction

from wordseries import (
    Alphabet,
    LinRep,
    NCPoly,
    delta_conc_decompose,
    hypergeometric_system,
    lie_diagnostics,
    minimize,
    mxstar_factorization_check,
    rat_shuffle,
    rat_star,
    rat_sum,
    sweedler_membership,
    triangular_decompose,
)

x2 = Alphabet.x(2)
w = x2.parse_word

# a series from a polynomial, then the Kleene star: geometric growth
two_x0 = LinRep.from_poly(NCPoly.from_word(w("x0"), Fraction(2)))
geom = rat_star(two_x0)
print("(2 x0)* coefficients on powers of x0:")
print(" ", [str(geom.coeff(x2.word((0,) * k))) for k in range(7)])

# shuffle square of a letter
sq = rat_shuffle(two_x0, two_x0)
print(f"\n(2x0 shuffle 2x0) at x0 x0: {sq.coeff(w('x0 x0'))}   (2*2*2 interleavings)")

# planted redundancy disappears under minimization
padded = rat_sum(two_x0, two_x0)
small = minimize(padded)
print(f"\nrank before/after minimization: {padded.rank} -> {small.rank}")
print(f"coefficient of x0 doubled: {small.coeff(w('x0'))}")

# every representation splits its deconcatenation coproduct into rank factors
r, forms = hypergeometric_system(Fraction(1, 2), Fraction(1, 2), 1)
pairs = delta_conc_decompose(r)
u, v = w("x0"), w("x1")
lhs = r.coeff(u * v)
rhs = sum((g.coeff(u) * d.coeff(v) for g, d in pairs), Fraction(0))
print(f"\nsplitting check at ({u})({v}): direct {lhs} = paired {rhs}")

# Lie algebra generated by the letter matrices
diag = lie_diagnostics(r)
print(
    f"Lie algebra of the hypergeometric family: dim {len(diag.basis)}, "
    f"nilpotent={diag.nilpotent}, solvable={diag.solvable}"
)

# the matrix-valued series factorizes over Lyndon words
print(f"M(X*) Lyndon factorization at grade 3: {mxstar_factorization_check(r, 3).equal}")

# triangular families admit the diagonal/nilpotent reconstruction
tri = LinRep(
    x2,
    (1, 1),
    {0: [[1, 1], [0, 2]], 1: [[0, 1], [0, 1]]},
    (1, 1),
)
rebuilt, report = triangular_decompose(tri, 4)
print(f"triangular reconstruction: {report.equal} ({report.detail})")

# rationality evidence from a bare truncation (Hankel realization)
series = small.eval_truncated(6)
verdict = sweedler_membership(series)
print(f"\nrealization from a grade-6 window: {verdict.detail}")
import math

from wordseries import TruncSeries, words_up_to_grading

fact = TruncSeries(
    x2,
    7,
    {u: Fraction(1, math.factorial(len(u))) for u in words_up_to_grading(x2, 7)},
)
print(f"1/len! series, same window logic: {sweedler_membership(fact, max_rank=3).detail}")
