"""Independent oracles shared by the test modules.

Everything here recomputes expected values through a different route than
the library code under test: truncated polynomial products term by term,
and an ODE solver by recentered Taylor series.
"""

from wordseries.ncpoly import NCPoly, PhiTable, phi_shuffle, shuffle


def conc_truncated(a: NCPoly, b: NCPoly, bound: int) -> NCPoly:
    out = NCPoly.zero(a.alphabet)
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if u.grading + v.grading <= bound:
                out = out + NCPoly.from_word(u * v, cu * cv)
    return out


def shuffle_truncated(a: NCPoly, b: NCPoly, bound: int) -> NCPoly:
    out = NCPoly.zero(a.alphabet)
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if u.grading + v.grading <= bound:
                out = out + shuffle(NCPoly.from_word(u), NCPoly.from_word(v)) * (cu * cv)
    return out


def phi_shuffle_truncated(a: NCPoly, b: NCPoly, phi: PhiTable, bound: int) -> NCPoly:
    out = NCPoly.zero(a.alphabet)
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if u.grading + v.grading <= bound:
                out = out + phi_shuffle(
                    NCPoly.from_word(u), NCPoly.from_word(v), phi
                ) * (cu * cv)
    return out


def star_truncated(proper: NCPoly, bound: int) -> NCPoly:
    total = NCPoly.one(proper.alphabet)
    power = NCPoly.one(proper.alphabet)
    for _ in range(bound):
        power = conc_truncated(power, proper, bound)
        total = total + power
    return total


def taylor_ode_solution(t0, t1, t2, z0, y0, yp0, z, order=40):
    """Hypergeometric ODE z(1-z) y'' + (t2 - (t0+t1+1) z) y' - t0 t1 y = 0,
    advanced from z0 by Taylor series recentered along the segment; steps
    stay well inside the distance to the singularities {0, 1}."""
    t0, t1, t2 = float(t0), float(t1), float(t2)
    a = z0
    y, yp = float(y0), float(yp0)
    while a < z - 1e-15:
        step = min(0.5 * min(a, 1 - a), z - a)
        a0 = a * (1 - a)
        a1 = 1 - 2 * a
        a2 = -1.0
        b0 = t2 - (t0 + t1 + 1) * a
        b1 = -(t0 + t1 + 1)
        c0 = -t0 * t1
        b = [y, yp]
        for k in range(order):
            num = (
                a1 * (k + 1) * k * b[k + 1]
                + a2 * k * (k - 1) * b[k]
                + b0 * (k + 1) * b[k + 1]
                + b1 * k * b[k]
                + c0 * b[k]
            )
            b.append(-num / (a0 * (k + 2) * (k + 1)))
        y = sum(b[k] * step**k for k in range(len(b) - 1, -1, -1))
        yp = sum(k * b[k] * step ** (k - 1) for k in range(len(b) - 1, 0, -1))
        a += step
    return y
