"""Homogeneous form types: BinaryForm, BiForm, TernaryForm.

Each type wraps an MPoly together with its declared degree data and rejects
inhomogeneous input.  The zero form is allowed and keeps its nominal degree,
so dimension bookkeeping stays well defined.

Monomial bases are enumerated in descending lexicographic order (X^d first
for binary forms, X1-heavy terms first for biforms); coefficient vectors and
matrices throughout the package use this ordering.

Binomial-scaled coordinates: a degree-d binary form can be written
f = sum_i C(d,i) * alpha_i * X^i * Y^(d-i); binomial_coeffs / from_binomial_coeffs
convert between f and (alpha_0..alpha_d).  Plain monomial coefficients remain
the storage basis.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .poly import MPoly, RING_BI, RING_XY, RING_XYZ
from .parsing import parse_form


def binary_basis(d):
    """Exponent tuples of the degree-d binary monomials, X^d first."""
    return [(d - k, k) for k in range(d + 1)]


def biform_basis(a, b):
    """Exponent tuples of the bidegree-(a,b) monomials, descending lex."""
    out = []
    for i in range(a, -1, -1):
        for j in range(b, -1, -1):
            out.append((i, a - i, j, b - j))
    return out


def ternary_basis(d):
    """Exponent tuples of the degree-d ternary monomials, descending lex."""
    out = []
    for i in range(d, -1, -1):
        for j in range(d - i, -1, -1):
            out.append((i, j, d - i - j))
    return out


class _Form:
    __slots__ = ("poly",)

    def __add__(self, other):
        if type(other) is not type(self) or other._degree_key() != self._degree_key():
            raise ValueError("can only add forms of identical degree")
        return self._replace(self.poly + other.poly)

    def __sub__(self, other):
        if type(other) is not type(self) or other._degree_key() != self._degree_key():
            raise ValueError("can only subtract forms of identical degree")
        return self._replace(self.poly - other.poly)

    def __rmul__(self, c):
        return self._replace(self.poly.scale(c))

    def __neg__(self):
        return self._replace(-self.poly)

    def is_zero(self):
        return self.poly.is_zero()

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self._degree_key() == other._degree_key()
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((type(self).__name__, self._degree_key(), self.poly))

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"{type(self).__name__}({self._degree_key()}, {self.poly})"


class BinaryForm(_Form):
    """Homogeneous polynomial of fixed degree in (X, Y)."""

    __slots__ = ("degree",)

    def __init__(self, degree, poly):
        if poly.ring != RING_XY:
            raise ValueError(f"BinaryForm requires ring {RING_XY}")
        if degree < 0:
            raise ValueError("degree must be >= 0")
        for exps in poly.terms:
            if sum(exps) != degree:
                raise ValueError(f"term {exps} is not of degree {degree}")
        self.degree = degree
        self.poly = poly

    def _degree_key(self):
        return self.degree

    def _replace(self, poly):
        return BinaryForm(self.degree, poly)

    @classmethod
    def zero(cls, degree):
        return cls(degree, MPoly.zero(RING_XY))

    @classmethod
    def from_poly(cls, poly, degree=None):
        """Wrap a homogeneous MPoly; the degree is inferred when nonzero."""
        if degree is None:
            if poly.is_zero():
                raise ValueError("zero polynomial needs an explicit degree")
            degree = poly.total_degree()
        return cls(degree, poly)

    @classmethod
    def parse(cls, text, degree=None):
        return cls.from_poly(parse_form(text, RING_XY), degree)

    def coeff_vector(self):
        """Coefficients in the canonical basis (X^d first)."""
        return tuple(self.poly.coefficient(e) for e in binary_basis(self.degree))

    @classmethod
    def from_coeff_vector(cls, degree, vec):
        basis = binary_basis(degree)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector has wrong length")
        return cls(degree, MPoly(RING_XY, {e: Fraction(c) for e, c in zip(basis, vec) if c}))

    def dx(self, order=1):
        return BinaryForm(max(self.degree - order, 0), self.poly.diff("X", order))

    def dy(self, order=1):
        return BinaryForm(max(self.degree - order, 0), self.poly.diff("Y", order))


class BiForm(_Form):
    """Bihomogeneous polynomial of fixed bidegree in (X1,Y1),(X2,Y2)."""

    __slots__ = ("bidegree",)

    def __init__(self, bidegree, poly):
        a, b = bidegree
        if poly.ring != RING_BI:
            raise ValueError(f"BiForm requires ring {RING_BI}")
        if a < 0 or b < 0:
            raise ValueError("bidegree components must be >= 0")
        for exps in poly.terms:
            if exps[0] + exps[1] != a or exps[2] + exps[3] != b:
                raise ValueError(f"term {exps} is not of bidegree {(a, b)}")
        self.bidegree = (a, b)
        self.poly = poly

    def _degree_key(self):
        return self.bidegree

    def _replace(self, poly):
        return BiForm(self.bidegree, poly)

    @classmethod
    def zero(cls, bidegree):
        return cls(bidegree, MPoly.zero(RING_BI))

    @classmethod
    def from_poly(cls, poly, bidegree=None):
        if bidegree is None:
            if poly.is_zero():
                raise ValueError("zero polynomial needs an explicit bidegree")
            bidegree = (poly.degree_in((0, 1)), poly.degree_in((2, 3)))
        return cls(bidegree, poly)

    @classmethod
    def parse(cls, text, bidegree=None):
        return cls.from_poly(parse_form(text, RING_BI), bidegree)

    def coeff_vector(self):
        a, b = self.bidegree
        return tuple(self.poly.coefficient(e) for e in biform_basis(a, b))

    @classmethod
    def from_coeff_vector(cls, bidegree, vec):
        basis = biform_basis(*bidegree)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector has wrong length")
        return cls(bidegree, MPoly(RING_BI, {e: Fraction(c) for e, c in zip(basis, vec) if c}))

    @classmethod
    def from_pq(cls, p: BinaryForm, q: BinaryForm):
        """Build the bidegree-(1,b) form X1*p(X2,Y2) + Y1*q(X2,Y2)."""
        if p.degree != q.degree:
            raise ValueError("p and q must share a degree")
        x1 = MPoly.variable(RING_BI, "X1")
        y1 = MPoly.variable(RING_BI, "Y1")
        return cls((1, p.degree), x1 * embed_second(p).poly + y1 * embed_second(q).poly)

    def pq(self):
        """Split a bidegree-(1,b) form as (p, q) with F = X1*p + Y1*q."""
        a, b = self.bidegree
        if a != 1:
            raise ValueError("pq() requires bidegree (1, b)")
        p = extract_second(BiForm((0, b), self.poly.diff("X1")))
        q = extract_second(BiForm((0, b), self.poly.diff("Y1")))
        return p, q


class TernaryForm(_Form):
    """Homogeneous polynomial of fixed degree in (X, Y, Z)."""

    __slots__ = ("degree",)

    def __init__(self, degree, poly):
        if poly.ring != RING_XYZ:
            raise ValueError(f"TernaryForm requires ring {RING_XYZ}")
        if degree < 0:
            raise ValueError("degree must be >= 0")
        for exps in poly.terms:
            if sum(exps) != degree:
                raise ValueError(f"term {exps} is not of degree {degree}")
        self.degree = degree
        self.poly = poly

    def _degree_key(self):
        return self.degree

    def _replace(self, poly):
        return TernaryForm(self.degree, poly)

    @classmethod
    def zero(cls, degree):
        return cls(degree, MPoly.zero(RING_XYZ))

    @classmethod
    def from_poly(cls, poly, degree=None):
        if degree is None:
            if poly.is_zero():
                raise ValueError("zero polynomial needs an explicit degree")
            degree = poly.total_degree()
        return cls(degree, poly)

    @classmethod
    def parse(cls, text, degree=None):
        return cls.from_poly(parse_form(text, RING_XYZ), degree)

    def coeff_vector(self):
        return tuple(self.poly.coefficient(e) for e in ternary_basis(self.degree))

    @classmethod
    def from_coeff_vector(cls, degree, vec):
        basis = ternary_basis(degree)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector has wrong length")
        return cls(degree, MPoly(RING_XYZ, {e: Fraction(c) for e, c in zip(basis, vec) if c}))


def embed_first(p: BinaryForm) -> BiForm:
    """View a binary form as a biform of bidegree (d, 0) in (X1, Y1)."""
    terms = {(i, j, 0, 0): c for (i, j), c in p.poly.terms.items()}
    return BiForm((p.degree, 0), MPoly(RING_BI, terms))


def embed_second(p: BinaryForm) -> BiForm:
    """View a binary form as a biform of bidegree (0, d) in (X2, Y2)."""
    terms = {(0, 0, i, j): c for (i, j), c in p.poly.terms.items()}
    return BiForm((0, p.degree), MPoly(RING_BI, terms))


def extract_second(f: BiForm) -> BinaryForm:
    """Inverse of embed_second on bidegree-(0, b) biforms."""
    a, b = f.bidegree
    if a != 0:
        raise ValueError("form has X1/Y1 content")
    terms = {(e[2], e[3]): c for e, c in f.poly.terms.items()}
    return BinaryForm(b, MPoly(RING_XY, terms))


def extract_first(f: BiForm) -> BinaryForm:
    """Inverse of embed_first on bidegree-(a, 0) biforms."""
    a, b = f.bidegree
    if b != 0:
        raise ValueError("form has X2/Y2 content")
    terms = {(e[0], e[1]): c for e, c in f.poly.terms.items()}
    return BinaryForm(a, MPoly(RING_XY, terms))


def tensor_product(p: BinaryForm, q: BinaryForm) -> BiForm:
    """The decomposable biform p(X1,Y1) * q(X2,Y2) of bidegree (deg p, deg q)."""
    terms = {}
    for (i, j), c in p.poly.terms.items():
        for (k, m), d in q.poly.terms.items():
            terms[(i, j, k, m)] = c * d
    return BiForm((p.degree, q.degree), MPoly(RING_BI, terms))


def binomial_coeffs(f: BinaryForm):
    """Binomial-scaled coordinates (alpha_0..alpha_d), alpha_i attached to X^i*Y^(d-i)."""
    d = f.degree
    return [f.poly.coefficient((i, d - i)) / comb(d, i) for i in range(d + 1)]


def from_binomial_coeffs(d, alphas) -> BinaryForm:
    """Inverse of binomial_coeffs: f = sum_i C(d,i)*alpha_i*X^i*Y^(d-i)."""
    if len(alphas) != d + 1:
        raise ValueError("need d+1 coordinates")
    terms = {}
    for i, alpha in enumerate(alphas):
        c = comb(d, i) * Fraction(alpha)
        if c:
            terms[(i, d - i)] = c
    return BinaryForm(d, MPoly(RING_XY, terms))
