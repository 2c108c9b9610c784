"""The biform <-> parametrized rational space curve dictionary.

A bidegree-(a,b) biform F = sum_j c_j(X1,Y1) * X2^j * Y2^(b-j) is read as a
morphism from P^1 to the projective space of degree-b binary forms, with
component forms c_j of degree a.  This module computes the linear span and
image subspace of that morphism, the degree of a generic hyperplane pullback,
and the branch form of the first projection (the resultant in (X2,Y2) of the
two second-pair partials, a binary form of degree 2a(b-1) in (X1,Y1)).

Resultants are taken on full bihomogeneous Sylvester matrices, so roots at
infinity need no special-casing.  Polynomial-coefficient resultants (branch
forms) are computed by exact interpolation: the Sylvester determinant is
homogeneous of known degree, so it is pinned down by integer evaluations.

singular_system computes linear systems of plane curves singular at
prescribed exact points.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .forms import BiForm, BinaryForm, binary_basis, ternary_basis
from .linalg import QMat, Subspace, column_space, det, kernel_basis, rank
from .poly import MPoly, RING_BI, RING_XY, RING_XYZ


class CurveMap:
    """Component forms (c_0..c_b) of a biform, each of degree a in (X1,Y1)."""

    __slots__ = ("source_degree", "components")

    def __init__(self, source_degree, components):
        components = tuple(components)
        for c in components:
            if c.degree != source_degree:
                raise ValueError("all components must share the source degree")
        if all(c.is_zero() for c in components):
            raise ValueError("all components are zero")
        self.source_degree = source_degree
        self.components = components

    @property
    def target_degree(self):
        return len(self.components) - 1

    def __repr__(self):
        return f"CurveMap(a={self.source_degree}, b={self.target_degree})"


def phi_components(f: BiForm) -> CurveMap:
    """Extract (c_0..c_b) with F = sum_j c_j(X1,Y1) X2^j Y2^(b-j)."""
    if f.is_zero():
        raise ValueError("zero form")
    a, b = f.bidegree
    comps = []
    for j in range(b + 1):
        terms = {}
        for (e1, f1, e2, f2), c in f.poly.terms.items():
            if e2 == j:
                terms[(e1, f1)] = c
        comps.append(BinaryForm(a, MPoly(RING_XY, terms)))
    return CurveMap(a, comps)


def reassemble(cm: CurveMap) -> BiForm:
    """Inverse of phi_components."""
    a, b = cm.source_degree, cm.target_degree
    terms = {}
    for j, c in enumerate(cm.components):
        for (e1, f1), v in c.poly.terms.items():
            terms[(e1, f1, j, b - j)] = v
    return BiForm((a, b), MPoly(RING_BI, terms))


def span_dim(cm: CurveMap) -> int:
    """Projective dimension of the linear span of the image; at most min(a,b)."""
    a = cm.source_degree
    rows = [[c.poly.coefficient(e) for c in cm.components] for e in binary_basis(a)]
    return rank(QMat(rows)) - 1


def image_subspace(f: BiForm) -> Subspace:
    """Column space in V_b of the linear map induced by F (dim = span_dim + 1)."""
    if f.is_zero():
        raise ValueError("zero form")
    a, b = f.bidegree
    # N[k][i] = coefficient of the k-th V_b monomial in the i-th (X1,Y1) slot
    entries = [[Fraction(0)] * (a + 1) for _ in range(b + 1)]
    first = binary_basis(a)
    second = binary_basis(b)
    index1 = {e: i for i, e in enumerate(first)}
    index2 = {e: k for k, e in enumerate(second)}
    for (e1, f1, e2, f2), c in f.poly.terms.items():
        entries[index2[(e2, f2)]][index1[(e1, f1)]] = c
    return column_space(QMat(entries))


# ---------------------------------------------------------------------------
# binary-form gcd and squarefreeness
# ---------------------------------------------------------------------------

def _strip_xy(f: BinaryForm):
    """Factor f = X^mx * Y^my * core with core coprime to X and Y."""
    if f.is_zero():
        raise ValueError("zero form")
    mx = min(e[0] for e in f.poly.terms)
    my = min(e[1] for e in f.poly.terms)
    terms = {(e[0] - mx, e[1] - my): c for e, c in f.poly.terms.items()}
    return mx, my, BinaryForm(f.degree - mx - my, MPoly(RING_XY, terms))


def _to_univariate(f: BinaryForm):
    """Coefficient list u with f(X, 1) = sum u[k] X^k (length = degree + 1)."""
    u = [Fraction(0)] * (f.degree + 1)
    for (i, _), c in f.poly.terms.items():
        u[i] = c
    return u


def _univ_gcd(u, v):
    """Monic gcd of univariate coefficient lists (ascending powers)."""
    def deg(w):
        d = len(w) - 1
        while d >= 0 and w[d] == 0:
            d -= 1
        return d
    def rem(w, m):
        w = list(w)
        dm = deg(m)
        lead = m[dm]
        for k in range(deg(w), dm - 1, -1):
            c = w[k] / lead
            if c:
                for i in range(dm + 1):
                    w[k - dm + i] -= c * m[i]
        return w[:dm] if dm > 0 else []
    a, b = list(u), list(v)
    while deg(b) >= 0:
        a, b = b, rem(a, b)
    da = deg(a)
    if da < 0:
        return []
    lead = a[da]
    return [c / lead for c in a[: da + 1]]


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms (projective roots with multiplicity)."""
    if f.is_zero():
        return g if g.is_zero() else _monic(g)
    if g.is_zero():
        return _monic(f)
    fx, fy, fc = _strip_xy(f)
    gx, gy, gc = _strip_xy(g)
    core = _univ_gcd(_to_univariate(fc), _to_univariate(gc))
    e = len(core) - 1
    mx, my = min(fx, gx), min(fy, gy)
    terms = {(mx + k, my + e - k): c for k, c in enumerate(core) if c}
    return BinaryForm(mx + my + e, MPoly(RING_XY, terms))


def _monic(f: BinaryForm) -> BinaryForm:
    lead = f.poly.items_sorted()[0][1]
    return f._replace(f.poly.scale(1 / lead))


def gcd_all(forms) -> BinaryForm:
    """gcd of a list of binary forms (zero entries ignored)."""
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("all forms are zero")
    g = _monic(nonzero[0])
    for f in nonzero[1:]:
        if g.degree == 0:
            break
        g = binary_gcd(g, f)
    return g


def is_squarefree(f: BinaryForm) -> bool:
    """No repeated projective root: gcd of the two partials is constant."""
    if f.is_zero():
        return False
    if f.degree <= 1:
        return True
    fx, fy = f.dx(), f.dy()
    if fx.is_zero() or fy.is_zero():
        # f is a pure power of Y or X of degree >= 2
        return False
    return binary_gcd(fx, fy).degree == 0


# ---------------------------------------------------------------------------
# resultants and branch forms
# ---------------------------------------------------------------------------

def sylvester_resultant(p: BinaryForm, q: BinaryForm) -> Fraction:
    """Sylvester resultant of two binary forms of degrees d, e >= 1.

    Zero iff p and q share a projective root (roots at infinity included,
    since the matrix is built from the full homogeneous coefficient lists).
    """
    d, e = p.degree, q.degree
    if d < 1 or e < 1:
        raise ValueError("degenerate degrees for resultant")
    # descending coefficient lists: p = sum p_i X^(d-i) Y^i
    pc = [p.poly.coefficient((d - i, i)) for i in range(d + 1)]
    qc = [q.poly.coefficient((e - i, i)) for i in range(e + 1)]
    n = d + e
    rows = []
    for i in range(e):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (e - 1 - i))
    for i in range(d):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (d - 1 - i))
    assert all(len(r) == n for r in rows)
    return det(QMat(rows))


def _second_pair_coeffs_desc(f: BiForm):
    """(X1,Y1)-coefficient forms of f, ordered by descending X2 power."""
    a, b = f.bidegree
    out = []
    for k in range(b + 1):
        terms = {}
        for (e1, f1, e2, f2), c in f.poly.terms.items():
            if e2 == b - k:
                terms[(e1, f1)] = c
        out.append(MPoly(RING_XY, terms))
    return out


def _interpolate(points):
    """Coefficients (ascending) of the polynomial through (t, value) pairs."""
    # Newton form, then expand to the monomial basis
    ts = [Fraction(t) for t, _ in points]
    divided = [Fraction(v) for _, v in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (ts[i] - ts[i - level])
    coeffs = [Fraction(0)] * n
    # horner-style accumulation of sum_k divided[k] * prod_{i<k} (t - ts[i])
    acc = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        # acc = acc * (t - ts[k]) + divided[k]
        new = [Fraction(0)] * (len(acc) + 1)
        for i, c in enumerate(acc):
            new[i + 1] += c
            new[i] -= c * ts[k]
        new[0] += divided[k]
        acc = new
    for i, c in enumerate(acc[:n]):
        coeffs[i] = c
    return coeffs


def branch_form(f: BiForm) -> BinaryForm:
    """Resultant in (X2,Y2) of the two second-pair partials of F.

    A binary form in the first-factor coordinates whose roots are the branch
    points of the projection to the first P^1; for generic F it has degree
    exactly 2a(b-1) and is squarefree.  An identically vanishing resultant
    (degenerate F) is reported as the zero form of that nominal degree.
    """
    a, b = f.bidegree
    if a < 1 or b < 1:
        raise ValueError("bidegree components must be >= 1")
    target = 2 * a * (b - 1)
    p = BiForm((a, b - 1), f.poly.diff("X2"))
    q = BiForm((a, b - 1), f.poly.diff("Y2"))
    if p.is_zero() or q.is_zero():
        return BinaryForm.zero(target)
    n = b - 1
    if n == 0:
        return BinaryForm(0, MPoly.constant(RING_XY, 1))
    u = _second_pair_coeffs_desc(p)
    v = _second_pair_coeffs_desc(q)
    # Sylvester determinant has entries homogeneous of degree a, size 2n,
    # so it is homogeneous of degree 2an = target (or identically zero);
    # interpolate its dehomogenization from target+1 integer evaluations.
    samples = []
    for t in range(target + 1):
        point = (Fraction(t), Fraction(1))
        uc = [w.evaluate(point) for w in u]
        vc = [w.evaluate(point) for w in v]
        rows = []
        for i in range(n):
            rows.append([Fraction(0)] * i + uc + [Fraction(0)] * (n - 1 - i))
        for i in range(n):
            rows.append([Fraction(0)] * i + vc + [Fraction(0)] * (n - 1 - i))
        samples.append((t, det(QMat(rows))))
    coeffs = _interpolate(samples)
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            terms[(i, target - i)] = c
    return BinaryForm(target, MPoly(RING_XY, terms))


def hyperplane_degree(cm: CurveMap, seed) -> int | None:
    """Degree of (lambda . phi) / gcd(components) for a seeded random lambda.

    Equals the source degree a for generic input.  Returns None in the
    measure-zero event that the drawn functional annihilates the map (callers
    treat that sample as degenerate).
    """
    rng = Random(f"hyperplane:{seed}")
    lam = [rng.randint(-9, 9) for _ in cm.components]
    h = BinaryForm.zero(cm.source_degree)
    for L, c in zip(lam, cm.components):
        h = h + L * c
    if h.is_zero():
        return None
    g = gcd_all(cm.components)
    return h.degree - g.degree


# ---------------------------------------------------------------------------
# linear systems of singular plane curves
# ---------------------------------------------------------------------------

def _projectively_equal(p, q):
    return all(p[i] * q[j] == p[j] * q[i] for i in range(3) for j in range(i + 1, 3))


def singular_system(points, d: int) -> Subspace:
    """Degree-d ternary forms vanishing doubly at each given point.

    The constraints F(p) = dF/dX(p) = dF/dY(p) = dF/dZ(p) = 0 are linear in
    the coefficients (the Euler relation makes one redundant); the result is
    the exact solution subspace in the canonical monomial basis.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    for p in pts:
        if all(x == 0 for x in p):
            raise ValueError("zero vector is not a projective point")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if _projectively_equal(pts[i], pts[j]):
                raise ValueError("points must be distinct")
    basis = ternary_basis(d)
    monos = [MPoly(RING_XYZ, {e: Fraction(1)}) for e in basis]
    rows = []
    for p in pts:
        rows.append([m.evaluate(p) for m in monos])
        for var in RING_XYZ:
            rows.append([m.diff(var).evaluate(p) for m in monos])
    return kernel_basis(QMat(rows))
