"""Noncommutative polynomials over the rationals and their three products.

A polynomial is a finitely supported map ``Word -> Fraction``.  The module
provides the concatenation product, the shuffle product, its ``phi``
deformation on weighted alphabets (quasi-shuffle for the constant table 1),
the dual coproducts, the eulerian idempotent projecting onto primitives, and
the character / infinitesimal-character tests on truncated series.

All identities here are exact; nothing in this module touches floating point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .words import Alphabet, Word, words_up_to_grading

ZERO = Fraction(0)
ONE = Fraction(1)

__all__ = [
    "NCPoly",
    "TensorPoly",
    "PhiTable",
    "conc",
    "shuffle",
    "phi_shuffle",
    "delta_conc",
    "delta_shuffle",
    "delta_phi",
    "pi1",
    "TruncSeries",
    "is_character",
    "is_infinitesimal_character",
    "format_fraction",
    "parse_fraction",
]


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def _add_term(d: dict, key, coeff) -> None:
    c = d.get(key, ZERO) + coeff
    if c:
        d[key] = c
    else:
        d.pop(key, None)


class NCPoly:
    """Finitely supported ``Word -> Fraction`` map over one alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, Fraction] | None = None):
        clean: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            if w.alphabet != alphabet:
                raise ValueError("term word over a different alphabet")
            c = Fraction(c)
            if c:
                clean[w] = c
        self.alphabet = alphabet
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet, {alphabet.empty_word(): ONE})

    @classmethod
    def from_word(cls, w: Word, coeff=ONE) -> "NCPoly":
        return cls(w.alphabet, {w: Fraction(coeff)})

    # -- linear structure ------------------------------------------------

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, ZERO)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._same_alphabet(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_term(out, w, c)
        return NCPoly(self.alphabet, out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __mul__(self, scalar) -> "NCPoly":
        if isinstance(scalar, NCPoly):
            raise TypeError("use conc/shuffle/phi_shuffle for polynomial products")
        return NCPoly(self.alphabet, {w: c * Fraction(scalar) for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def pairing(self, other: "NCPoly") -> Fraction:
        """Word-basis scalar product <self, other>."""
        self._same_alphabet(other)
        small, big = sorted((self.terms, other.terms), key=len)
        return sum((c * big.get(w, ZERO) for w, c in small.items()), ZERO)

    def max_grade(self) -> int:
        return max((w.grading for w in self.terms), default=0)

    def truncate(self, max_grade: int) -> "NCPoly":
        return NCPoly(
            self.alphabet, {w: c for w, c in self.terms.items() if w.grading <= max_grade}
        )

    def graded_part(self, grade: int) -> "NCPoly":
        return NCPoly(
            self.alphabet, {w: c for w, c in self.terms.items() if w.grading == grade}
        )

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def _same_alphabet(self, other: "NCPoly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("polynomials over different alphabets")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: t[0].display_key()):
            word = str(w)
            if c == 1:
                parts.append(word)
            elif c == -1:
                parts.append(f"-({word})" if parts else f"-{word}")
            else:
                parts.append(f"{c} {word}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    # -- JSON form ---------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"word": str(w), "coeff": format_fraction(c)} for w, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: Iterable[dict]) -> "NCPoly":
        terms: dict[Word, Fraction] = {}
        for item in data:
            _add_term(terms, alphabet.parse_word(item["word"]), parse_fraction(item["coeff"]))
        return cls(alphabet, terms)


class TensorPoly:
    """Finitely supported ``(Word, Word) -> Fraction`` map (coproduct output)."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[tuple[Word, Word], Fraction] | None = None):
        clean: dict[tuple[Word, Word], Fraction] = {}
        for (u, v), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(u, v)] = c
        self.alphabet = alphabet
        self.terms = clean

    def coeff(self, u: Word, v: Word) -> Fraction:
        return self.terms.get((u, v), ZERO)

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_term(out, k, c)
        return TensorPoly(self.alphabet, out)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (other * Fraction(-1))

    def __mul__(self, scalar) -> "TensorPoly":
        return TensorPoly(
            self.alphabet, {k: c * Fraction(scalar) for k, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda t: (t[0][0].sort_key(), t[0][1].sort_key())
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (u, v), c in self.sorted_terms():
            body = f"{u}⊗{v}"
            bits.append(body if c == 1 else f"{c} {body}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [
            {"left": str(u), "right": str(v), "coeff": format_fraction(c)}
            for (u, v), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: Iterable[dict]) -> "TensorPoly":
        terms: dict[tuple[Word, Word], Fraction] = {}
        for item in data:
            key = (alphabet.parse_word(item["left"]), alphabet.parse_word(item["right"]))
            _add_term(terms, key, parse_fraction(item["coeff"]))
        return cls(alphabet, terms)


# -- the deformation table ---------------------------------------------------


class PhiTable:
    """Symmetric letter-merge coefficients gamma(i, j) for the phi-shuffle.

    Only the weight pair matters: merging ``y_i`` and ``y_j`` produces
    ``gamma(i, j) * y_{i+j}``; on colored alphabets the colors add mod m.
    Associativity of the resulting product is not assumed: it is validated on
    all word triples of total weight <= ``validate_to`` at construction (the
    color group is associative on its own, so plain words suffice).
    """

    def __init__(self, entries: Mapping[tuple[int, int], Fraction] | None = None,
                 *, default=ONE, validate_to: int = 6):
        table: dict[tuple[int, int], Fraction] = {}
        for (i, j), g in (entries or {}).items():
            key = (min(i, j), max(i, j))
            g = Fraction(g)
            if key in table and table[key] != g:
                raise ValueError(f"asymmetric gamma at {key}")
            table[key] = g
        self.entries = table
        self.default = Fraction(default)
        self._word_cache: dict = {}
        if validate_to:
            self._validate(validate_to)

    @classmethod
    def stuffle(cls) -> "PhiTable":
        """gamma identically 1: the quasi-shuffle."""
        return cls(validate_to=0)

    @classmethod
    def zero(cls) -> "PhiTable":
        """gamma identically 0: degenerates to the plain shuffle."""
        return cls(default=ZERO, validate_to=0)

    @classmethod
    def from_json(cls, data: Mapping[str, str], *, default=ONE, validate_to: int = 6) -> "PhiTable":
        entries = {}
        for key, val in data.items():
            i, j = key.split(",")
            entries[(int(i), int(j))] = parse_fraction(val)
        return cls(entries, default=default, validate_to=validate_to)

    def gamma(self, i: int, j: int) -> Fraction:
        return self.entries.get((min(i, j), max(i, j)), self.default)

    def _validate(self, bound: int) -> None:
        y = Alphabet.y()
        words = [w for w in words_up_to_grading(y, bound - 2) if w]
        for u, v, w in itertools.product(words, repeat=3):
            if u.grading + v.grading + w.grading > bound:
                continue
            left = _poly_phi(phi_shuffle_words(u, v, self), NCPoly.from_word(w), self)
            right = _poly_phi(NCPoly.from_word(u), phi_shuffle_words(v, w, self), self)
            if left != right:
                raise ValueError(
                    f"gamma table is not associative at ({u}, {v}, {w})"
                )


# -- products ----------------------------------------------------------------


def conc(p: NCPoly, q: NCPoly) -> NCPoly:
    """Concatenation product, extended bilinearly."""
    p._same_alphabet(q)
    out: dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            _add_term(out, u * v, a * b)
    return NCPoly(p.alphabet, out)


_shuffle_cache: dict = {}


def _shuffle_words(u: Word, v: Word) -> dict[Word, Fraction]:
    if not u:
        return {v: ONE}
    if not v:
        return {u: ONE}
    if u.lex_key() > v.lex_key():  # the product is commutative; normalize the key
        u, v = v, u
    key = (u, v)
    hit = _shuffle_cache.get(key)
    if hit is not None:
        return hit
    out: dict[Word, Fraction] = {}
    xu = Word(u.alphabet, (u.letters[0],))
    yv = Word(v.alphabet, (v.letters[0],))
    for w, c in _shuffle_words(u[1:], v).items():
        _add_term(out, xu * w, c)
    for w, c in _shuffle_words(u, v[1:]).items():
        _add_term(out, yv * w, c)
    _shuffle_cache[key] = out
    return out


def shuffle(p: NCPoly, q: NCPoly) -> NCPoly:
    """Shuffle product, extended bilinearly."""
    p._same_alphabet(q)
    out: dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            ab = a * b
            for w, c in _shuffle_words(u, v).items():
                _add_term(out, w, ab * c)
    return NCPoly(p.alphabet, out)


def _phi_shuffle_words(u: Word, v: Word, phi: PhiTable) -> dict[Word, Fraction]:
    if not u:
        return {v: ONE}
    if not v:
        return {u: ONE}
    if u.lex_key() > v.lex_key():
        u, v = v, u
    key = (u, v)
    hit = phi._word_cache.get(key)
    if hit is not None:
        return hit
    alphabet = u.alphabet
    out: dict[Word, Fraction] = {}
    (i, ci), (j, cj) = u.letters[0], v.letters[0]
    xu = Word(alphabet, (u.letters[0],))
    yv = Word(alphabet, (v.letters[0],))
    for w, c in _phi_shuffle_words(u[1:], v, phi).items():
        _add_term(out, xu * w, c)
    for w, c in _phi_shuffle_words(u, v[1:], phi).items():
        _add_term(out, yv * w, c)
    g = phi.gamma(i, j)
    if g:
        color = (ci + cj) % alphabet.color_order if alphabet.color_order else 0
        merged = Word(alphabet, ((i + j, color),))
        for w, c in _phi_shuffle_words(u[1:], v[1:], phi).items():
            _add_term(out, merged * w, g * c)
    phi._word_cache[key] = out
    return out


def phi_shuffle_words(u: Word, v: Word, phi: PhiTable) -> NCPoly:
    return NCPoly(u.alphabet, _phi_shuffle_words(u, v, phi))


def _poly_phi(p: NCPoly, q: NCPoly, phi: PhiTable) -> NCPoly:
    out: dict[Word, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            ab = a * b
            for w, c in _phi_shuffle_words(u, v, phi).items():
                _add_term(out, w, ab * c)
    return NCPoly(p.alphabet, out)


def phi_shuffle(p: NCPoly, q: NCPoly, phi: PhiTable) -> NCPoly:
    """Deformed shuffle on a y alphabet; letters merge weights and colors."""
    p._same_alphabet(q)
    if not p.alphabet.is_y:
        raise ValueError("phi-shuffle needs a y alphabet")
    return _poly_phi(p, q, phi)


def word_product(law: str, u: Word, v: Word, phi: PhiTable | None = None) -> NCPoly:
    """Dispatch a word-level product by law name: conc | shuffle | phi."""
    if law == "conc":
        return NCPoly.from_word(u * v)
    if law == "shuffle":
        return NCPoly(u.alphabet, _shuffle_words(u, v))
    if law == "phi":
        if phi is None:
            raise ValueError("law 'phi' needs a PhiTable")
        return phi_shuffle_words(u, v, phi)
    raise ValueError(f"unknown law {law!r}")


# -- coproducts ---------------------------------------------------------------


def delta_conc(p: NCPoly) -> TensorPoly:
    """Deconcatenation: all splits of each word."""
    out: dict[tuple[Word, Word], Fraction] = {}
    for w, c in p.terms.items():
        for i in range(len(w) + 1):
            _add_term(out, (w[:i], w[i:]), c)
    return TensorPoly(p.alphabet, out)


def _letter_rule_shuffle(alphabet: Alphabet, letter) -> list[tuple[Word, Word, Fraction]]:
    one = alphabet.empty_word()
    x = Word(alphabet, (letter,))
    return [(x, one, ONE), (one, x, ONE)]


def _letter_rule_phi(alphabet: Alphabet, letter, phi: PhiTable) -> list[tuple[Word, Word, Fraction]]:
    out = _letter_rule_shuffle(alphabet, letter)
    k, c = letter
    colors = range(alphabet.color_order) if alphabet.color_order else (0,)
    for i in range(1, k):
        g = phi.gamma(i, k - i)
        if not g:
            continue
        for c1 in colors:
            c2 = (c - c1) % alphabet.color_order if alphabet.color_order else 0
            out.append(
                (Word(alphabet, ((i, c1),)), Word(alphabet, ((k - i, c2),)), g)
            )
    return out


def _conc_morphism_coproduct(p: NCPoly, letter_rule: Callable) -> TensorPoly:
    out: dict[tuple[Word, Word], Fraction] = {}
    one = p.alphabet.empty_word()
    for w, coeff in p.terms.items():
        acc = {(one, one): ONE}
        for letter in w.letters:
            nxt: dict[tuple[Word, Word], Fraction] = {}
            rule = letter_rule(p.alphabet, letter)
            for (u, v), c in acc.items():
                for lu, lv, g in rule:
                    _add_term(nxt, (u * lu, v * lv), c * g)
            acc = nxt
        for k, c in acc.items():
            _add_term(out, k, coeff * c)
    return TensorPoly(p.alphabet, out)


def delta_shuffle(p: NCPoly) -> TensorPoly:
    """Unshuffle coproduct: conc-morphism with primitive letters."""
    return _conc_morphism_coproduct(p, _letter_rule_shuffle)


def delta_phi(p: NCPoly, phi: PhiTable) -> TensorPoly:
    """Dual of the phi-shuffle: conc-morphism with the letter-split rule."""
    if not p.alphabet.is_y:
        raise ValueError("delta_phi needs a y alphabet")
    return _conc_morphism_coproduct(p, lambda a, l: _letter_rule_phi(a, l, phi))


def coproduct(law: str, p: NCPoly, phi: PhiTable | None = None) -> TensorPoly:
    if law == "conc":
        return delta_conc(p)
    if law == "shuffle":
        return delta_shuffle(p)
    if law == "phi":
        if phi is None:
            raise ValueError("law 'phi' needs a PhiTable")
        return delta_phi(p, phi)
    raise ValueError(f"unknown law {law!r}")


# -- eulerian idempotent ------------------------------------------------------


def pi1(p: NCPoly, phi: PhiTable | None = None) -> NCPoly:
    """Projector onto primitives of the (phi-)shuffle bialgebra.

    On each word it evaluates the log-of-identity convolution series: the
    k-th convolution power of (id - unit counit), taken for the coproduct
    dual to the product (plain shuffle on x alphabets, phi-shuffle on y),
    weighted by (-1)^(k-1)/k.  Output grading never exceeds input grading.
    """
    if p.alphabet.is_y and phi is None:
        raise ValueError("pi1 on a y alphabet needs a PhiTable")
    dual = (lambda q: delta_phi(q, phi)) if p.alphabet.is_y else delta_shuffle
    split_cache: dict[Word, list] = {}

    def splits(w: Word):
        hit = split_cache.get(w)
        if hit is None:
            hit = [
                (u, v, c) for (u, v), c in dual(NCPoly.from_word(w)).terms.items() if u
            ]
            split_cache[w] = hit
        return hit

    conv_cache: dict[tuple[Word, int], NCPoly] = {}

    def conv_power(w: Word, k: int) -> NCPoly:
        # k-th convolution power of (id - unit counit) at w
        if not w:
            return NCPoly.zero(p.alphabet)
        if k == 1:
            return NCPoly.from_word(w)
        hit = conv_cache.get((w, k))
        if hit is None:
            acc: dict[Word, Fraction] = {}
            for u, v, c in splits(w):
                if not v:
                    continue
                for t, d in conv_power(v, k - 1).terms.items():
                    _add_term(acc, u * t, c * d)
            hit = NCPoly(p.alphabet, acc)
            conv_cache[(w, k)] = hit
        return hit

    out = NCPoly.zero(p.alphabet)
    for w, coeff in p.terms.items():
        for k in range(1, w.grading + 1):
            sign = ONE if k % 2 else -ONE
            out = out + conv_power(w, k) * (coeff * sign / k)
    return out


# -- truncated series and (infinitesimal) characters --------------------------


class TruncSeries:
    """Coefficients of a series, complete up to a stated grading bound.

    Values are exact ``Fraction`` for algebraic series; numeric series (the
    Chen series) store complex-like values instead.  Reading a coefficient
    beyond the bound raises: the window is honest about what it knows.
    """

    __slots__ = ("alphabet", "bound", "coeffs")

    def __init__(self, alphabet: Alphabet, bound: int, coeffs: Mapping[Word, object] | None = None):
        self.alphabet = alphabet
        self.bound = bound
        self.coeffs = {}
        for w, c in (coeffs or {}).items():
            if w.grading > bound:
                continue
            if c:
                self.coeffs[w] = c

    @classmethod
    def from_poly(cls, p: NCPoly, bound: int) -> "TruncSeries":
        return cls(p.alphabet, bound, dict(p.truncate(bound).terms))

    @classmethod
    def word_sum(cls, alphabet: Alphabet, bound: int) -> "TruncSeries":
        """Truncation of the sum of all words (the unital full series)."""
        return cls(alphabet, bound, {w: ONE for w in words_up_to_grading(alphabet, bound)})

    def coeff(self, w: Word):
        if w.grading > self.bound:
            raise ValueError(f"coefficient of grading {w.grading} beyond bound {self.bound}")
        return self.coeffs.get(w, ZERO)

    def pair_poly(self, p: NCPoly):
        """<series, polynomial>; the polynomial must fit inside the window."""
        total = ZERO
        for w, c in p.terms.items():
            total = total + c * self.coeff(w)
        return total

    def restrict(self, bound: int) -> "TruncSeries":
        if bound > self.bound:
            raise ValueError("cannot widen a truncation")
        return TruncSeries(
            self.alphabet, bound, {w: c for w, c in self.coeffs.items() if w.grading <= bound}
        )

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        bound = min(self.bound, other.bound)
        out = {w: c for w, c in self.coeffs.items() if w.grading <= bound}
        for w, c in other.coeffs.items():
            if w.grading <= bound:
                _add_term(out, w, c)
        return TruncSeries(self.alphabet, bound, out)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + other.scale(-1)

    def scale(self, scalar) -> "TruncSeries":
        return TruncSeries(
            self.alphabet, self.bound, {w: c * scalar for w, c in self.coeffs.items()}
        )

    def conc_mul(self, other: "TruncSeries") -> "TruncSeries":
        """Cauchy (concatenation) product at the common bound."""
        bound = min(self.bound, other.bound)
        out: dict[Word, object] = {}
        for u, a in self.coeffs.items():
            if u.grading > bound:
                continue
            for v, b in other.coeffs.items():
                if u.grading + v.grading > bound:
                    continue
                _add_term(out, u * v, a * b)
        return TruncSeries(self.alphabet, bound, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.alphabet == other.alphabet
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def __str__(self) -> str:
        body = " + ".join(
            f"{c} {w}" for w, c in sorted(self.coeffs.items(), key=lambda t: t[0].sort_key())
        )
        return f"({body or '0'}) + O(grade {self.bound + 1})"


def _values_match(a, b, tol) -> bool:
    if tol:
        return abs(complex(a) - complex(b)) <= tol
    return a == b


def is_character(series: TruncSeries, law: str, *, phi: PhiTable | None = None,
                 bound: int | None = None, tol=0) -> bool:
    """True iff <S,1> = 1 and <S, u*v> = <S,u><S,v> for all graded pairs.

    The pair gradings range over (u) + (v) <= bound (default: the series
    bound).  ``tol`` permits a numeric slack for quadrature-valued series.
    """
    n = series.bound if bound is None else bound
    one = series.alphabet.empty_word()
    if not _values_match(series.coeff(one), ONE, tol):
        return False
    words = words_up_to_grading(series.alphabet, n)
    for u in words:
        for v in words:
            if u.grading + v.grading > n:
                continue
            lhs = series.pair_poly(word_product(law, u, v, phi))
            rhs = series.coeff(u) * series.coeff(v)
            if not _values_match(lhs, rhs, tol):
                return False
    return True


def is_infinitesimal_character(series: TruncSeries, law: str, *, phi: PhiTable | None = None,
                               bound: int | None = None, tol=0) -> bool:
    """True iff <S, u*v> = <S,u>[v empty] + [u empty]<S,v> for all pairs."""
    n = series.bound if bound is None else bound
    words = words_up_to_grading(series.alphabet, n)
    for u in words:
        for v in words:
            if u.grading + v.grading > n:
                continue
            lhs = series.pair_poly(word_product(law, u, v, phi))
            rhs = ZERO
            if not v:
                rhs = rhs + series.coeff(u)
            if not u:
                rhs = rhs + series.coeff(v)
            if not _values_match(lhs, rhs, tol):
                return False
    return True
