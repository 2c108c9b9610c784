"""Independent oracle implementations used to cross-check the library.

Everything here is deliberately written against plain dicts/lists of
Fractions, not against the package's own MPoly/QMat code paths, so a test
comparing the two is a genuine dual-route check.
"""

from fractions import Fraction
from math import comb


def falling(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


def oracle_transvectant(p, q, r):
    """Transvectant of coefficient dicts {exponent_of_X: coeff} of degrees d, e.

    Implements sum_i (-1)^i C(r,i) d^r p/dX^(r-i)dY^i * d^r q/dX^i dY^(r-i)
    directly on monomials, returning a dict for a degree d+e-2r form.
    """
    d_p, d_q = p["degree"], q["degree"]
    out = {}
    for i in range(r + 1):
        sign = (-1) ** i * comb(r, i)
        # derivative of X^u Y^(d-u) by X^(r-i) Y^i
        for u, cu in p["coeffs"].items():
            fu = falling(u, r - i) * falling(d_p - u, i)
            if fu == 0:
                continue
            for v, cv in q["coeffs"].items():
                fv = falling(v, i) * falling(d_q - v, r - i)
                if fv == 0:
                    continue
                k = (u - (r - i)) + (v - i)
                out[k] = out.get(k, Fraction(0)) + sign * fu * fv * cu * cv
    return {k: c for k, c in out.items() if c != 0}


def form_to_dict(f):
    """BinaryForm -> the oracle's representation."""
    return {
        "degree": f.degree,
        "coeffs": {e[0]: c for e, c in f.poly.terms.items()},
    }


def dict_matches_form(d, f):
    return d == {e[0]: c for e, c in f.poly.terms.items() if c}


def oracle_rref(rows):
    """Plain Fraction Gauss-Jordan, no Bareiss: returns (rref rows, rank, pivots)."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, r, pivots


def oracle_det(rows):
    """Cofactor-expansion determinant (exponential; for small matrices)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * oracle_det(minor)
    return total
