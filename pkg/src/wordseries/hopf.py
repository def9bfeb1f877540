"""Dual basis pairs on the word Hopf algebras and the diagonal factorization.

For the shuffle bialgebra the classical Lyndon-indexed pair {P_w} / {S_w} is
built by the bracketing / divided-power recursions; for the phi-shuffle
bialgebra the pair {Pi_w} / {Sigma_w} is obtained by transporting P through
the conc-automorphism sending each letter y_k to its primitive projection
pi1(y_k), and solving the finite duality system grading by grading for Sigma.

The module also verifies the factorization of the diagonal series
sum_w w (x) w as the decreasing product of exponentials exp(S_l (x) P_l)
over Lyndon words l (and its Sigma/Pi variant), exactly, at a truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin
from .ncpoly import NCPoly, PhiTable, conc, phi_shuffle, pi1, shuffle
from .words import (
    Alphabet,
    Word,
    lyndon_factorization,
    lyndon_words,
    standard_factorization,
    words_up_to_grading,
)

ZERO = Fraction(0)
ONE = Fraction(1)

__all__ = ["DualBases", "DiagonalReport", "diagonal_factorization_check"]


class DualBases:
    """Memoized access to P_w, S_w and (on y alphabets) Pi_w, Sigma_w.

    The cache key is the word; one instance is pinned to one alphabet and one
    gamma table.  Fills are idempotent, so concurrent readers at worst repeat
    a computation.
    """

    def __init__(self, alphabet: Alphabet, phi: PhiTable | None = None):
        if phi is not None and not alphabet.is_y:
            raise ValueError("a gamma table only makes sense on a y alphabet")
        self.alphabet = alphabet
        self.phi = phi
        self._p: dict[Word, NCPoly] = {}
        self._s: dict[Word, NCPoly] = {}
        self._pi: dict[Word, NCPoly] = {}
        self._sigma_by_grade: dict[int, dict[Word, NCPoly]] = {}
        self._pi1_letter: dict = {}

    # -- the P / S pair ------------------------------------------------------

    def p(self, w: Word) -> NCPoly:
        """Bracketing basis: P_x = x, P_l = [P_s, P_r], PBW products elsewhere."""
        hit = self._p.get(w)
        if hit is not None:
            return hit
        if not w:
            out = NCPoly.one(self.alphabet)
        elif len(w) == 1:
            out = NCPoly.from_word(w)
        else:
            factors = lyndon_factorization(w)
            if len(factors) == 1:
                s, r = standard_factorization(w)
                ps, pr = self.p(s), self.p(r)
                out = conc(ps, pr) - conc(pr, ps)
            else:
                out = self.p(factors[0])
                for f in factors[1:]:
                    out = conc(out, self.p(f))
        self._p[w] = out
        return out

    def s(self, w: Word) -> NCPoly:
        """Dual basis: S_l = x S_l' on Lyndon l = x l', divided shuffle powers
        over the Lyndon factorization elsewhere."""
        hit = self._s.get(w)
        if hit is not None:
            return hit
        if not w:
            out = NCPoly.one(self.alphabet)
        elif len(w) == 1:
            out = NCPoly.from_word(w)
        else:
            factors = lyndon_factorization(w)
            if len(factors) == 1:
                head = NCPoly.from_word(w[:1])
                out = conc(head, self.s(w[1:]))
            else:
                out = NCPoly.one(self.alphabet)
                for l, mult in _group_equal(factors):
                    power = NCPoly.one(self.alphabet)
                    for _ in range(mult):
                        power = shuffle(power, self.s(l))
                    out = shuffle(out, power * Fraction(1, math.factorial(mult)))
        self._s[w] = out
        return out

    # -- the Pi / Sigma pair ---------------------------------------------------

    def _require_phi(self) -> PhiTable:
        if self.phi is None:
            raise ValueError("Pi/Sigma need a y alphabet with a gamma table")
        return self.phi

    def _phi_pi1(self, p: NCPoly) -> NCPoly:
        """The conc-automorphism sending each letter y_k to pi1(y_k)."""
        phi = self._require_phi()
        out = NCPoly.zero(self.alphabet)
        for w, c in p.terms.items():
            acc = NCPoly.one(self.alphabet) * c
            for letter in w.letters:
                img = self._pi1_letter.get(letter)
                if img is None:
                    img = pi1(NCPoly.from_word(Word(self.alphabet, (letter,))), phi)
                    self._pi1_letter[letter] = img
                acc = conc(acc, img)
            out = out + acc
        return out

    def pi(self, w: Word) -> NCPoly:
        """Pi_w: image of P_w under the letter-wise pi1 automorphism."""
        hit = self._pi.get(w)
        if hit is None:
            hit = self._phi_pi1(self.p(w))
            self._pi[w] = hit
        return hit

    def sigma(self, w: Word) -> NCPoly:
        """Sigma_w: the unique graded dual of Pi, by an exact linear solve."""
        self._require_phi()
        grade = w.grading
        table = self._sigma_by_grade.get(grade)
        if table is None:
            words = [u for u in words_up_to_grading(self.alphabet, grade) if u.grading == grade]
            # B[v][j] = coefficient of word_j in Pi_v ; duality needs B C = I
            b = exactlin.matrix(
                [[self.pi(v).coeff(u) for u in words] for v in words]
            )
            try:
                c = exactlin.inverse(b)
            except ValueError as exc:  # pragma: no cover - would be an implementation bug
                raise AssertionError("duality system is singular") from exc
            table = {
                u: NCPoly(self.alphabet, dict(zip(words, col)))
                for u, col in zip(words, exactlin.transpose(c))
            }
            self._sigma_by_grade[grade] = table
        return table[w]


def _group_equal(factors: list[Word]) -> list[tuple[Word, int]]:
    out: list[tuple[Word, int]] = []
    for f in factors:
        if out and out[-1][0] == f:
            out[-1] = (f, out[-1][1] + 1)
        else:
            out.append((f, 1))
    return out


# -- diagonal series factorization -------------------------------------------


@dataclass
class DiagonalReport:
    equal: bool
    first_difference: tuple[Word, Word, Fraction, Fraction, str] | None = None

    def __bool__(self) -> bool:
        return self.equal


def _tensor_mul(t1: dict, t2: dict, law, bound: int) -> dict:
    """Product in (words, law) (x) (words, conc), truncated on both factors."""
    out: dict[tuple[Word, Word], Fraction] = {}
    for (a, b), c1 in t1.items():
        for (u, v), c2 in t2.items():
            if a.grading + u.grading > bound or b.grading + v.grading > bound:
                continue
            right = b * v
            c = c1 * c2
            for word, k in law(NCPoly.from_word(a), NCPoly.from_word(u)).terms.items():
                if word.grading > bound:
                    continue
                key = (word, right)
                val = out.get(key, ZERO) + c * k
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return out


def _tensor_exp(left: NCPoly, right: NCPoly, law, bound: int) -> dict:
    """exp(left (x) right): both factors homogeneous of equal grading."""
    grade = left.max_grade()
    alphabet = left.alphabet
    out = {(alphabet.empty_word(), alphabet.empty_word()): ONE}
    lpow = NCPoly.one(alphabet)
    rpow = NCPoly.one(alphabet)
    k = 0
    while (k + 1) * grade <= bound:
        k += 1
        lpow = law(lpow, left)
        rpow = conc(rpow, right)
        inv = Fraction(1, math.factorial(k))
        for u, cu in lpow.terms.items():
            for v, cv in rpow.terms.items():
                key = (u, v)
                val = out.get(key, ZERO) + inv * cu * cv
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return out


def diagonal_factorization_check(
    alphabet: Alphabet,
    phi: PhiTable | None = None,
    bound: int = 4,
    *,
    decreasing: bool = True,
) -> DiagonalReport:
    """Compare, at the given truncation, the three forms of the diagonal series:
    word sum, dual-basis sum, and the ordered Lyndon product of exponentials.

    ``decreasing=False`` multiplies the exponentials in increasing Lyndon
    order instead; that is expected to break equality (negative control).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    bases = DualBases(alphabet, phi)
    if phi is None:
        law = shuffle
        left_of, right_of = bases.s, bases.p
    else:
        law = lambda p, q: phi_shuffle(p, q, phi)
        left_of, right_of = bases.sigma, bases.pi

    words = words_up_to_grading(alphabet, bound)
    side_words = {(w, w): ONE for w in words}

    side_bases: dict[tuple[Word, Word], Fraction] = {}
    for w in words:
        for u, cu in left_of(w).terms.items():
            for v, cv in right_of(w).terms.items():
                key = (u, v)
                val = side_bases.get(key, ZERO) + cu * cv
                if val:
                    side_bases[key] = val
                else:
                    side_bases.pop(key, None)

    factors = lyndon_words(alphabet, bound)
    factors.sort(key=Word.lex_key, reverse=decreasing)
    product = {(alphabet.empty_word(), alphabet.empty_word()): ONE}
    for l in factors:
        product = _tensor_mul(
            product, _tensor_exp(left_of(l), right_of(l), law, bound), law, bound
        )

    for name, other in (("dual-basis sum", side_bases), ("Lyndon product", product)):
        for key in sorted(set(side_words) | set(other), key=lambda k: (k[0].sort_key(), k[1].sort_key())):
            a = side_words.get(key, ZERO)
            b = other.get(key, ZERO)
            if a != b:
                return DiagonalReport(False, (key[0], key[1], a, b, name))
    return DiagonalReport(True)
