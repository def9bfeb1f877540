"""Rational (representative) series as linear representations.

A series is carried by a triple (nu, mu, eta): a rational row vector, a
letter-indexed family of square matrices extended multiplicatively to words,
and a column vector, with coefficient function  <S, w> = nu mu(w) eta.  The
module provides evaluation, shifts, the closure constructions (sum,
concatenation, star, shuffle, phi-shuffle), exact minimization over Q, the
deconcatenation splitting into rank-many tensor factors, grouplike /
primitive tests, truncated log/exp, Lie-algebra diagnostics of the matrix
family, and the two series factorizations driven by the Lyndon dual bases.

Everything is exact rational arithmetic; no tolerances anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import exactlin
from .exactlin import Mat, RowSpace, Vec, mat_add, mat_mul, mat_scale, mat_vec, vec_mat
from .hopf import DualBases
from .ncpoly import (
    NCPoly,
    PhiTable,
    TruncSeries,
    _values_match,
    coproduct,
    format_fraction,
    parse_fraction,
    phi_shuffle,
    shuffle,
    word_product,
)
from .words import Alphabet, Word, alphabet_text, lyndon_words, parse_alphabet, words_up_to_grading

ZERO = Fraction(0)
ONE = Fraction(1)

__all__ = [
    "LinRep",
    "rat_sum",
    "rat_conc",
    "rat_star",
    "rat_shuffle",
    "rat_phi_shuffle",
    "minimize",
    "left_shift",
    "right_shift",
    "delta_conc_decompose",
    "is_grouplike",
    "is_primitive",
    "log_trunc",
    "exp_trunc",
    "LieDiagnostics",
    "lie_diagnostics",
    "FactorizationReport",
    "mxstar_factorization_check",
    "triangular_decompose",
    "SweedlerVerdict",
    "sweedler_membership",
]


class LinRep:
    """Linear representation (nu, mu, eta) of a rational series."""

    __slots__ = ("alphabet", "nu", "mu", "eta", "max_letter_weight")

    def __init__(self, alphabet: Alphabet, nu: Sequence, mu: Mapping, eta: Sequence,
                 max_letter_weight: int | None = None):
        self.alphabet = alphabet
        self.nu = exactlin.vector(nu)
        self.eta = exactlin.vector(eta)
        n = len(self.nu)
        if len(self.eta) != n:
            raise ValueError("nu and eta disagree on the rank")
        if alphabet.is_x:
            letters = alphabet.letters()
        else:
            if max_letter_weight is None:
                max_letter_weight = max((k for (k, _) in mu), default=0)
            letters = alphabet.letters(max_weight=max_letter_weight)
        matrices = {}
        for letter in letters:
            m = mu.get(letter)
            m = exactlin.zeros(n, n) if m is None else exactlin.matrix(m)
            if len(m) != n or any(len(row) != n for row in m):
                raise ValueError(f"matrix for {alphabet.letter_name(letter)} is not {n}x{n}")
            matrices[letter] = m
        for letter in mu:
            if letter not in matrices:
                raise ValueError(f"unexpected letter {letter!r} in mu")
        self.mu = matrices
        self.max_letter_weight = max_letter_weight

    @property
    def rank(self) -> int:
        return len(self.nu)

    def matrix(self, letter) -> Mat:
        try:
            return self.mu[letter]
        except KeyError:
            raise ValueError(
                f"letter {self.alphabet.letter_name(letter)} is beyond the materialized weight bound"
            ) from None

    # -- evaluation -----------------------------------------------------------

    def coeff(self, w: Word) -> Fraction:
        row = self.nu
        for letter in w.letters:
            row = vec_mat(row, self.matrix(letter))
        return exactlin.dot(row, self.eta)

    def word_matrix(self, w: Word) -> Mat:
        out = exactlin.identity(self.rank)
        for letter in w.letters:
            out = mat_mul(out, self.matrix(letter))
        return out

    def eval_truncated(self, bound: int) -> TruncSeries:
        """All coefficients of grading <= bound by prefix-sharing traversal."""
        if self.alphabet.is_y and (self.max_letter_weight or 0) < bound:
            raise ValueError("materialized letter weights do not cover the bound")
        letters = (
            self.alphabet.letters()
            if self.alphabet.is_x
            else self.alphabet.letters(max_weight=bound)
        )
        coeffs: dict[Word, Fraction] = {}
        frontier = [(self.alphabet.empty_word(), self.nu)]
        while frontier:
            nxt = []
            for w, row in frontier:
                c = exactlin.dot(row, self.eta)
                if c:
                    coeffs[w] = c
                for letter in letters:
                    g = w.grading + self.alphabet.letter_weight(letter)
                    if g <= bound:
                        nxt.append((w * Word(self.alphabet, (letter,)), vec_mat(row, self.matrix(letter))))
            frontier = nxt
        return TruncSeries(self.alphabet, bound, coeffs)

    # -- construction helpers ---------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet, max_letter_weight: int | None = None) -> "LinRep":
        return cls(alphabet, (), {}, (), max_letter_weight)

    @classmethod
    def from_poly(cls, p: NCPoly, max_letter_weight: int | None = None) -> "LinRep":
        """Representation of a polynomial on the prefix tree of its support."""
        prefixes: list[Word] = []
        seen = set()
        for w in sorted(p.terms, key=Word.sort_key):
            for i in range(len(w) + 1):
                u = w[:i]
                if u not in seen:
                    seen.add(u)
                    prefixes.append(u)
        if not prefixes:
            prefixes = [p.alphabet.empty_word()]
        prefixes.sort(key=Word.sort_key)
        index = {u: i for i, u in enumerate(prefixes)}
        n = len(prefixes)
        if max_letter_weight is None and p.alphabet.is_y:
            max_letter_weight = max(
                (p.alphabet.letter_weight(a) for w in p.terms for a in w.letters),
                default=1,
            )
        letters = (
            p.alphabet.letters()
            if p.alphabet.is_x
            else p.alphabet.letters(max_weight=max_letter_weight)
        )
        mu = {letter: [[ZERO] * n for _ in range(n)] for letter in letters}
        for u, i in index.items():
            for letter in letters:
                v = u * Word(p.alphabet, (letter,))
                j = index.get(v)
                if j is not None:
                    mu[letter][i][j] = ONE
        nu = [ZERO] * n
        nu[index[p.alphabet.empty_word()]] = ONE
        eta = [p.coeff(u) for u in prefixes]
        return cls(p.alphabet, nu, mu, eta, max_letter_weight)

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "alphabet": alphabet_text(self.alphabet),
            "max_letter_weight": self.max_letter_weight,
            "nu": [format_fraction(c) for c in self.nu],
            "mu": {
                self.alphabet.letter_name(letter): [
                    [format_fraction(c) for c in row] for row in m
                ]
                for letter, m in sorted(
                    self.mu.items(), key=lambda kv: self.alphabet.letter_key(kv[0])
                )
            },
            "eta": [format_fraction(c) for c in self.eta],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinRep":
        alphabet = parse_alphabet(data["alphabet"])
        mu = {}
        for name, rows in data["mu"].items():
            letter = alphabet.parse_word(name).letters[0]
            mu[letter] = [[parse_fraction(c) for c in row] for row in rows]
        return cls(
            alphabet,
            [parse_fraction(c) for c in data["nu"]],
            mu,
            [parse_fraction(c) for c in data["eta"]],
            data.get("max_letter_weight"),
        )

    def __repr__(self) -> str:
        return f"LinRep(rank={self.rank}, alphabet={alphabet_text(self.alphabet)})"


def _common_alphabet(r1: LinRep, r2: LinRep) -> Alphabet:
    if r1.alphabet != r2.alphabet:
        raise ValueError("representations over different alphabets")
    return r1.alphabet


def _common_bound(r1: LinRep, r2: LinRep) -> int | None:
    if r1.alphabet.is_x:
        return None
    return min(r1.max_letter_weight or 0, r2.max_letter_weight or 0)


def mu_of_poly(r: LinRep, p: NCPoly) -> Mat:
    """mu extended linearly to polynomials."""
    out = exactlin.zeros(r.rank, r.rank)
    for w, c in p.terms.items():
        out = mat_add(out, mat_scale(c, r.word_matrix(w)))
    return out


# -- shifts -------------------------------------------------------------------


def left_shift(r: LinRep, p: NCPoly) -> LinRep:
    """S <| P with <S <| P, w> = <S, P w>, realized as (nu mu(P), mu, eta)."""
    if r.alphabet != p.alphabet:
        raise ValueError("shift polynomial over a different alphabet")
    nu = [ZERO] * r.rank
    for w, c in p.terms.items():
        row = r.nu
        for letter in w.letters:
            row = vec_mat(row, r.matrix(letter))
        nu = [a + c * b for a, b in zip(nu, row)]
    return LinRep(r.alphabet, nu, r.mu, r.eta, r.max_letter_weight)


def right_shift(r: LinRep, p: NCPoly) -> LinRep:
    """P |> S with <P |> S, w> = <S, w P>, realized as (nu, mu, mu(P) eta)."""
    if r.alphabet != p.alphabet:
        raise ValueError("shift polynomial over a different alphabet")
    eta = [ZERO] * r.rank
    for w, c in p.terms.items():
        col = r.eta
        for letter in reversed(w.letters):
            col = mat_vec(r.matrix(letter), col)
        eta = [a + c * b for a, b in zip(eta, col)]
    return LinRep(r.alphabet, r.nu, r.mu, eta, r.max_letter_weight)


# -- rational closures ----------------------------------------------------------


def rat_sum(r1: LinRep, r2: LinRep) -> LinRep:
    alphabet = _common_alphabet(r1, r2)
    bound = _common_bound(r1, r2)
    n1, n2 = r1.rank, r2.rank
    letters = set(r1.mu) & set(r2.mu) if alphabet.is_y else set(r1.mu)
    mu = {}
    for letter in letters:
        a, b = r1.mu[letter], r2.mu[letter]
        mu[letter] = [
            [a[i][j] if i < n1 and j < n1 else ZERO for j in range(n1 + n2)]
            if i < n1
            else [b[i - n1][j - n1] if j >= n1 else ZERO for j in range(n1 + n2)]
            for i in range(n1 + n2)
        ]
    return LinRep(alphabet, r1.nu + r2.nu, mu, r1.eta + r2.eta, bound)


def rat_conc(r1: LinRep, r2: LinRep) -> LinRep:
    alphabet = _common_alphabet(r1, r2)
    bound = _common_bound(r1, r2)
    n1, n2 = r1.rank, r2.rank
    s2 = exactlin.dot(r2.nu, r2.eta)  # <R2, 1>
    letters = set(r1.mu) & set(r2.mu) if alphabet.is_y else set(r1.mu)
    mu = {}
    for letter in letters:
        a, b = r1.mu[letter], r2.mu[letter]
        # upper-right block: eta1 nu2 mu2(x)
        nu2b = vec_mat(r2.nu, b)
        block = [[r1.eta[i] * nu2b[j] for j in range(n2)] for i in range(n1)]
        mu[letter] = [
            list(a[i]) + block[i] if i < n1 else [ZERO] * n1 + list(b[i - n1])
            for i in range(n1 + n2)
        ]
    nu = tuple(r1.nu) + (ZERO,) * n2
    eta = tuple(c * s2 for c in r1.eta) + tuple(r2.eta)
    return LinRep(alphabet, nu, mu, eta, bound)


def rat_star(r: LinRep) -> LinRep:
    """Kleene star of a proper series (the constant term nu eta must vanish)."""
    if exactlin.dot(r.nu, r.eta) != 0:
        raise ValueError("star needs a proper series: <R, 1> = 0")
    n = r.rank
    mu = {}
    for letter, m in r.mu.items():
        numu = vec_mat(r.nu, m)  # nu mu(x)
        etanu_mu = [[r.eta[i] * numu[j] for j in range(n)] for i in range(n)]
        top = [list(mat_add(m, etanu_mu)[i]) + [ZERO] for i in range(n)]
        mu[letter] = top + [list(numu) + [ZERO]]
    nu = (ZERO,) * n + (ONE,)
    eta = tuple(r.eta) + (ONE,)
    return LinRep(r.alphabet, nu, mu, eta, r.max_letter_weight)


def rat_shuffle(r1: LinRep, r2: LinRep) -> LinRep:
    alphabet = _common_alphabet(r1, r2)
    bound = _common_bound(r1, r2)
    n1, n2 = r1.rank, r2.rank
    i1, i2 = exactlin.identity(n1), exactlin.identity(n2)
    letters = set(r1.mu) & set(r2.mu) if alphabet.is_y else set(r1.mu)
    mu = {
        letter: mat_add(
            exactlin.kron(r1.mu[letter], i2), exactlin.kron(i1, r2.mu[letter])
        )
        for letter in letters
    }
    return LinRep(
        alphabet,
        exactlin.kron_vec(r1.nu, r2.nu),
        mu,
        exactlin.kron_vec(r1.eta, r2.eta),
        bound,
    )


def rat_phi_shuffle(r1: LinRep, r2: LinRep, phi: PhiTable) -> LinRep:
    """Shuffle blocks plus the gamma-weighted letter-merge cross terms."""
    alphabet = _common_alphabet(r1, r2)
    if not alphabet.is_y:
        raise ValueError("phi-shuffle closure needs a y alphabet")
    bound = _common_bound(r1, r2)
    n1, n2 = r1.rank, r2.rank
    i1, i2 = exactlin.identity(n1), exactlin.identity(n2)
    colors = range(alphabet.color_order) if alphabet.color_order else (0,)
    mu = {}
    for letter in alphabet.letters(max_weight=bound):
        k, c = letter
        m = mat_add(
            exactlin.kron(r1.mu[letter], i2), exactlin.kron(i1, r2.mu[letter])
        )
        for i in range(1, k):
            g = phi.gamma(i, k - i)
            if not g:
                continue
            for c1 in colors:
                c2 = (c - c1) % alphabet.color_order if alphabet.color_order else 0
                cross = exactlin.kron(r1.mu[(i, c1)], r2.mu[(k - i, c2)])
                m = mat_add(m, mat_scale(g, cross))
        mu[letter] = m
    return LinRep(
        alphabet,
        exactlin.kron_vec(r1.nu, r2.nu),
        mu,
        exactlin.kron_vec(r1.eta, r2.eta),
        bound,
    )


# -- minimization -----------------------------------------------------------------


def _reachability_reduce(r: LinRep) -> LinRep:
    space = RowSpace(r.rank)
    basis: list[Vec] = []
    if space.add(r.nu):
        basis.append(r.nu)
    frontier = list(basis)
    while frontier:
        nxt = []
        for v in frontier:
            for letter in r.mu:
                image = vec_mat(v, r.mu[letter])
                if space.add(image):
                    basis.append(image)
                    nxt.append(image)
        frontier = nxt
    if not basis:
        return LinRep.zero(r.alphabet, r.max_letter_weight)
    bt = exactlin.transpose(exactlin.matrix(basis))

    def coords(v: Vec) -> Vec:
        sol = exactlin.solve(bt, v)
        assert sol is not None, "reachable space is not invariant"
        return sol

    mu = {
        letter: [coords(vec_mat(b, m)) for b in basis] for letter, m in r.mu.items()
    }
    nu = coords(r.nu)
    eta = [exactlin.dot(b, r.eta) for b in basis]
    return LinRep(r.alphabet, nu, mu, eta, r.max_letter_weight)


def _transpose_rep(r: LinRep) -> LinRep:
    mu = {letter: exactlin.transpose(m) for letter, m in r.mu.items()}
    return LinRep(r.alphabet, r.eta, mu, r.nu, r.max_letter_weight)


def minimize(r: LinRep) -> LinRep:
    """Minimal representation of the same series: forward reachability basis
    extraction followed by the mirrored observability reduction (exact, over Q)."""
    reduced = _reachability_reduce(r)
    reduced = _transpose_rep(_reachability_reduce(_transpose_rep(reduced)))
    return reduced


# -- deconcatenation splitting -----------------------------------------------------


def delta_conc_decompose(r: LinRep) -> list[tuple[LinRep, LinRep]]:
    """The rank-many tensor factors (G_i, D_i) with <S, uv> = sum_i <G_i,u><D_i,v>."""
    out = []
    for i in range(r.rank):
        e = tuple(ONE if j == i else ZERO for j in range(r.rank))
        g = LinRep(r.alphabet, r.nu, r.mu, e, r.max_letter_weight)
        d = LinRep(r.alphabet, e, r.mu, r.eta, r.max_letter_weight)
        out.append((g, d))
    return out


# -- grouplike / primitive, log / exp ------------------------------------------------


def _coproduct_table(series: TruncSeries, law: str, bound: int, phi: PhiTable | None) -> dict:
    table: dict[tuple[Word, Word], object] = {}
    for w in words_up_to_grading(series.alphabet, bound):
        c = series.coeff(w)
        if not c:
            continue
        for (u, v), k in coproduct(law, NCPoly.from_word(w), phi).terms.items():
            key = (u, v)
            table[key] = table.get(key, ZERO) + c * k
    return table


def is_grouplike(series: TruncSeries, law: str, *, phi: PhiTable | None = None,
                 bound: int | None = None, tol=0) -> bool:
    """Delta S = S (x) S on all tensor coefficients with (u) + (v) <= bound."""
    n = series.bound if bound is None else bound
    one = series.alphabet.empty_word()
    if not _values_match(series.coeff(one), ONE, tol):
        return False
    table = _coproduct_table(series, law, n, phi)
    words = words_up_to_grading(series.alphabet, n)
    for u in words:
        for v in words:
            if u.grading + v.grading > n:
                continue
            lhs = table.get((u, v), ZERO)
            if not _values_match(lhs, series.coeff(u) * series.coeff(v), tol):
                return False
    return True


def is_primitive(series: TruncSeries, law: str, *, phi: PhiTable | None = None,
                 bound: int | None = None, tol=0) -> bool:
    """Delta S = 1 (x) S + S (x) 1 on the same window."""
    n = series.bound if bound is None else bound
    table = _coproduct_table(series, law, n, phi)
    words = words_up_to_grading(series.alphabet, n)
    for u in words:
        for v in words:
            if u.grading + v.grading > n:
                continue
            rhs = ZERO
            if not u:
                rhs = rhs + series.coeff(v)
            if not v:
                rhs = rhs + series.coeff(u)
            if not _values_match(table.get((u, v), ZERO), rhs, tol):
                return False
    return True


def log_trunc(series: TruncSeries) -> TruncSeries:
    """log of a series with unit constant term, at the series' truncation."""
    one = series.alphabet.empty_word()
    if series.coeff(one) != ONE:
        raise ValueError("log needs constant term 1")
    x = series - TruncSeries(series.alphabet, series.bound, {one: ONE})
    out = TruncSeries(series.alphabet, series.bound)
    power = TruncSeries(series.alphabet, series.bound, {one: ONE})
    for k in range(1, series.bound + 1):
        power = power.conc_mul(x)
        out = out + power.scale(Fraction((-1) ** (k - 1), k))
    return out


def exp_trunc(series: TruncSeries) -> TruncSeries:
    """exp of a series with zero constant term, at the series' truncation."""
    one = series.alphabet.empty_word()
    if series.coeff(one) != 0:
        raise ValueError("exp needs constant term 0")
    out = TruncSeries(series.alphabet, series.bound, {one: ONE})
    power = TruncSeries(series.alphabet, series.bound, {one: ONE})
    for k in range(1, series.bound + 1):
        power = power.conc_mul(series).scale(Fraction(1, k))
        out = out + power
    return out


# -- Lie diagnostics -------------------------------------------------------------


@dataclass
class LieDiagnostics:
    basis: list[Mat]
    nilpotent: bool
    solvable: bool
    nilpotency_index: int | None
    solvability_index: int | None
    lower_central_dims: list[int] = field(default_factory=list)
    derived_dims: list[int] = field(default_factory=list)


def _flatten(m: Mat) -> Vec:
    return tuple(c for row in m for c in row)


def _span_basis(mats: list[Mat], n: int) -> list[Mat]:
    space = RowSpace(n * n)
    out = []
    for m in mats:
        if space.add(_flatten(m)):
            out.append(m)
    return out


def lie_diagnostics(r: LinRep) -> LieDiagnostics:
    """Bracket closure of {mu(x)}, then lower central and derived series."""
    n = r.rank
    closure = _span_basis([m for m in r.mu.values()], n)
    space = RowSpace(n * n)
    for m in closure:
        space.add(_flatten(m))
    frontier = list(closure)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(closure):
                c = exactlin.bracket(a, b)
                if space.add(_flatten(c)):
                    closure.append(c)
                    nxt.append(c)
        frontier = nxt

    def bracket_span(left: list[Mat], right: list[Mat]) -> list[Mat]:
        return _span_basis(
            [exactlin.bracket(a, b) for a in left for b in right], n
        )

    def descend(step) -> tuple[bool, int | None, list[int]]:
        current = closure
        dims = [len(current)]
        index = 1
        while current:
            nxt = step(current)
            if len(nxt) == len(current):
                return False, None, dims  # stabilized above zero
            current = nxt
            dims.append(len(current))
            if not current:
                return True, index, dims
            index += 1
        return True, 0, dims  # the algebra itself is zero

    nil, nil_k, lc_dims = descend(lambda cur: bracket_span(closure, cur))
    sol, sol_k, dv_dims = descend(lambda cur: bracket_span(cur, cur))
    return LieDiagnostics(
        basis=closure,
        nilpotent=nil,
        solvable=sol,
        nilpotency_index=nil_k,
        solvability_index=sol_k,
        lower_central_dims=lc_dims,
        derived_dims=dv_dims,
    )


# -- factorizations of the series -------------------------------------------------


@dataclass
class FactorizationReport:
    equal: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.equal


def _mat_series_scatter(out: dict, w: Word, m: Mat) -> None:
    cur = out.get(w)
    out[w] = m if cur is None else mat_add(cur, m)


def _mat_series_mul(t1: dict, t2: dict, law: str, phi, bound: int) -> dict:
    out: dict[Word, Mat] = {}
    for u, a in t1.items():
        for v, b in t2.items():
            if u.grading + v.grading > bound:
                continue
            ab = mat_mul(a, b)
            for w, c in word_product(law, u, v, phi).terms.items():
                _mat_series_scatter(out, w, mat_scale(c, ab))
    return out


def _mat_series_equal(t1: dict, t2: dict, n: int) -> tuple[bool, str]:
    zero = exactlin.zeros(n, n)
    for w in sorted(set(t1) | set(t2), key=Word.sort_key):
        a = t1.get(w, zero)
        b = t2.get(w, zero)
        if a != b:
            return False, f"first differing word: {w}"
    return True, ""


def mxstar_factorization_check(r: LinRep, bound: int, *, phi: PhiTable | None = None) -> FactorizationReport:
    """Check M(X*) = decreasing Lyndon product of exp(mu(P_l) S_l) at a truncation.

    On y alphabets with a gamma table the Pi/Sigma pair and the phi-shuffle
    take the place of P/S and the shuffle.  Also confirms the scalar readout
    nu M(X*) eta against the evaluated series.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    alphabet = r.alphabet
    if alphabet.is_y and phi is None:
        raise ValueError("a y-alphabet factorization needs the gamma table")
    law = "shuffle" if alphabet.is_x else "phi"
    bases = DualBases(alphabet, phi)
    left_of, right_of = (bases.s, bases.p) if alphabet.is_x else (bases.sigma, bases.pi)

    lhs: dict[Word, Mat] = {}
    for w in words_up_to_grading(alphabet, bound):
        lhs[w] = r.word_matrix(w)

    rhs: dict[Word, Mat] = {alphabet.empty_word(): exactlin.identity(r.rank)}
    factors = lyndon_words(alphabet, bound)
    factors.sort(key=Word.lex_key, reverse=True)
    poly_mul = shuffle if law == "shuffle" else (lambda p, q: phi_shuffle(p, q, phi))
    for l in factors:
        a = mu_of_poly(r, right_of(l))
        s_l = left_of(l)
        factor: dict[Word, Mat] = {alphabet.empty_word(): exactlin.identity(r.rank)}
        apow = exactlin.identity(r.rank)
        spow = NCPoly.one(alphabet)
        k = 0
        while (k + 1) * l.grading <= bound:
            k += 1
            apow = mat_mul(apow, a)
            spow = poly_mul(spow, s_l)
            scaled = mat_scale(Fraction(1, math.factorial(k)), apow)
            for w, c in spow.terms.items():
                if w.grading <= bound:
                    _mat_series_scatter(factor, w, mat_scale(c, scaled))
        rhs = _mat_series_mul(rhs, factor, law, phi, bound)

    ok, detail = _mat_series_equal(lhs, rhs, r.rank)
    if not ok:
        return FactorizationReport(False, "matrix series differ; " + detail)

    readout = TruncSeries(
        alphabet,
        bound,
        {w: exactlin.dot(vec_mat(r.nu, m), r.eta) for w, m in rhs.items()},
    )
    if readout != r.eval_truncated(bound):
        return FactorizationReport(False, "nu M eta readout differs from the series")
    return FactorizationReport(True)


def triangular_decompose(r: LinRep, bound: int) -> tuple[TruncSeries, FactorizationReport]:
    """Split M(X) into diagonal + strictly upper parts and rebuild the series.

    Requires every mu(x) upper triangular.  The diagonal star is an entrywise
    truncated geometric series; the strictly upper remainder makes
    D(X*) N(X) nilpotent of order at most the rank, and the series is
    reconstructed as nu (sum of its powers) D(X*) eta, then compared against
    direct evaluation.
    """
    n = r.rank
    for letter, m in r.mu.items():
        for i in range(n):
            for j in range(i):
                if m[i][j] != 0:
                    raise ValueError(
                        f"mu({r.alphabet.letter_name(letter)}) is not upper triangular"
                    )
    alphabet = r.alphabet
    letters = sorted(r.mu, key=alphabet.letter_key)
    zero_poly = NCPoly.zero(alphabet)

    def entry_poly(select) -> list[list[NCPoly]]:
        out = [[zero_poly for _ in range(n)] for _ in range(n)]
        for letter in letters:
            m = r.mu[letter]
            lw = Word(alphabet, (letter,))
            for i in range(n):
                for j in range(n):
                    if select(i, j) and m[i][j]:
                        out[i][j] = out[i][j] + NCPoly.from_word(lw, m[i][j])
        return out

    diag = entry_poly(lambda i, j: i == j)
    strict = entry_poly(lambda i, j: i < j)

    # D(X*): entrywise star of the diagonal, a truncated geometric series
    d_star = [[zero_poly for _ in range(n)] for _ in range(n)]
    for i in range(n):
        acc = NCPoly.one(alphabet)
        total = NCPoly.one(alphabet)
        for _ in range(bound):
            acc = _conc_truncated(acc, diag[i][i], bound)
            if not acc:
                break
            total = total + acc
        d_star[i][i] = total

    def matpoly_mul(a, b):
        return [
            [
                _sum_polys(
                    _conc_truncated(a[i][k], b[k][j], bound) for k in range(n)
                )
                for j in range(n)
            ]
            for i in range(n)
        ]

    t = matpoly_mul(d_star, strict)
    powers = [[[NCPoly.one(alphabet) if i == j else zero_poly for j in range(n)] for i in range(n)]]
    order = 0
    while True:
        nxt = matpoly_mul(powers[-1], t)
        if all(not nxt[i][j] for i in range(n) for j in range(n)):
            break
        powers.append(nxt)
        order += 1
        if order > n:
            return (
                TruncSeries(alphabet, bound),
                FactorizationReport(False, "D(X*) N(X) failed to nilpotate within the rank"),
            )

    geom = [[_sum_polys(p[i][j] for p in powers) for j in range(n)] for i in range(n)]
    full = matpoly_mul(geom, d_star)
    series_poly = _sum_polys(
        _sum_polys((full[i][j] * (r.nu[i] * r.eta[j]) for j in range(n))) for i in range(n)
    )
    rebuilt = TruncSeries.from_poly(series_poly, bound)
    direct = r.eval_truncated(bound)
    ok = rebuilt == direct
    detail = f"nilpotency order {order} (rank {n})" if ok else "reconstruction differs"
    return rebuilt, FactorizationReport(ok, detail)


def _conc_truncated(a: NCPoly, b: NCPoly, bound: int) -> NCPoly:
    out: dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if u.grading + v.grading <= bound:
                w = u * v
                c = out.get(w, ZERO) + cu * cv
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
    return NCPoly(a.alphabet, out)


def _sum_polys(polys) -> NCPoly:
    total = None
    for p in polys:
        total = p if total is None else total + p
    if total is None:
        raise ValueError("empty sum")
    return total


# -- Sweedler membership ------------------------------------------------------------


@dataclass
class SweedlerVerdict:
    rational: bool
    rank: int | None
    detail: str
    witnesses: list[tuple[LinRep, LinRep]] | None = None


def sweedler_membership(obj, *, max_rank: int | None = None) -> SweedlerVerdict:
    """Membership in the Sweedler dual = rationality.

    A linear representation is affirmed constructively via its
    deconcatenation splitting.  A bare truncated series gets a Hankel-style
    partial realization on its window: finite evidence, never a proof.
    """
    if isinstance(obj, LinRep):
        return SweedlerVerdict(
            True,
            obj.rank,
            "linear representation: Delta_conc splits into rank many factors",
            delta_conc_decompose(obj),
        )
    if not isinstance(obj, TruncSeries):
        raise TypeError("expected a LinRep or a TruncSeries")
    series = obj
    n = series.bound
    if n < 1:
        return SweedlerVerdict(False, None, "window too small for realization evidence")
    # budget: rows u (<= p), one letter (<= wmax), columns v (<= q) must fit
    if series.alphabet.is_x:
        wmax = 1
    else:
        wmax = max((w.grading for w in series.coeffs if len(w) == 1), default=1)
        wmax = max(wmax, 1)
    if n < wmax:
        return SweedlerVerdict(False, None, "window too small for realization evidence")
    p = (n - wmax) // 2
    q = n - wmax - p
    cols = words_up_to_grading(series.alphabet, q)

    def hankel_row(u: Word) -> Vec:
        return exactlin.vector(series.coeff(u * v) for v in cols)

    space = RowSpace(len(cols))
    basis_words: list[Word] = []
    for u in words_up_to_grading(series.alphabet, p):
        if space.add(hankel_row(u)):
            basis_words.append(u)
    hankel_rank = len(basis_words)
    if max_rank is not None and hankel_rank > max_rank:
        return SweedlerVerdict(
            False,
            None,
            f"no realization of rank <= {max_rank} within window {n} (Hankel rank {hankel_rank})",
        )
    if hankel_rank == 0:
        rep = LinRep.zero(series.alphabet)
        return SweedlerVerdict(True, 0, f"zero series on window {n}", delta_conc_decompose(rep))

    basis_rows = [hankel_row(u) for u in basis_words]
    bt = exactlin.transpose(exactlin.matrix(basis_rows))
    if series.alphabet.is_x:
        letters = series.alphabet.letters()
    else:
        letters = series.alphabet.letters(max_weight=wmax)
    mu = {}
    for letter in letters:
        rows = []
        for u in basis_words:
            shifted = u * Word(series.alphabet, (letter,))
            sol = exactlin.solve(bt, hankel_row(shifted))
            if sol is None:
                return SweedlerVerdict(
                    False,
                    None,
                    f"no rank-{hankel_rank} realization within window {n}: "
                    "shifted rows leave the span",
                )
            rows.append(sol)
        mu[letter] = rows
    nu = exactlin.solve(bt, hankel_row(series.alphabet.empty_word()))
    if nu is None:
        return SweedlerVerdict(False, None, "row of the empty word leaves the span")
    eta = [series.coeff(u) for u in basis_words]
    rep = LinRep(series.alphabet, nu, mu, eta, None if series.alphabet.is_x else wmax)

    for w in words_up_to_grading(series.alphabet, n):
        heavier = any(series.alphabet.letter_weight(a) > wmax for a in w.letters)
        value = ZERO if heavier else rep.coeff(w)
        if value != series.coeff(w):
            return SweedlerVerdict(
                False,
                None,
                f"no rank-{hankel_rank} realization reproduces the window "
                f"(first failure at {w})",
            )
    return SweedlerVerdict(
        True,
        hankel_rank,
        f"rational up to {n} with rank {hankel_rank}",
        delta_conc_decompose(rep),
    )
