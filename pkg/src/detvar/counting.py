"""Point-counting polynomials over F_q, used as an Euler-characteristic oracle.

All counts are symbolic polynomials in ``q``; no finite-field arithmetic is done.
"""

from __future__ import annotations

from detvar.poly import Polynomial, poly_eval, poly_exact_div

Q = Polynomial.monomial(1)


def gl_count(n: int) -> Polynomial:
    """``|GL_n(F_q)| = prod_{i<n} (q^n - q^i)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    p = Polynomial.constant(1)
    for i in range(n):
        p = p * (Q ** n - Q ** i)
    return p


def singular_locus_count(n: int) -> Polynomial:
    """Number of singular ``n x n`` matrices, zero matrix included."""
    return Q ** (n * n) - gl_count(n)


def projective_det_count(n: int) -> Polynomial:
    if n < 2:
        raise ValueError("n must be at least 2")
    return poly_exact_div(singular_locus_count(n) - 1, Q - 1)


def euler_via_count(n: int) -> int:
    chi = poly_eval(projective_det_count(n), 1)
    return int(chi)
