"""Riemann-Roch engines on the curve, the surface, and threefolds.

Also houses the Euler-characteristic machinery for line bundles on the
rank-4 projective bundle over the line: the closed form f(x, y) for
chi(W, xH + yU), its monomial-enumeration oracle, and the
Euler-Jaczewski six-term combination for chi(W, Omega_W(xH + yU)).
"""

from __future__ import annotations

from fractions import Fraction

from .chern import SurfaceChern, cotangent_twist_e_classes, symbolic_degree
from .exact import Affine, UniPoly, binom, binom_of_poly


class HypothesisViolation(ValueError):
    """An input violates a hypothesis required by the formula in use."""


def hrr_threefold(c1, c2, e1, e2, e3, rank: int, degree):
    """Hirzebruch-Riemann-Roch on a threefold.

    chi = r c1c2/24 + e1(c1^2 + c2)/12 + c1(e1^2 - 2 e2)/4
          + (e1^3 - 3 e1 e2 + 3 e3)/6

    The classes may live in any ring with +, * and integer scalars;
    ``degree`` is the top-intersection functional of that ring.
    """
    return (
        rank * degree(c1 * c2) / 24
        + degree(e1 * (c1 * c1 + c2)) / 12
        + degree(c1 * (e1 * e1 - 2 * e2)) / 4
        + degree(e1 * e1 * e1 - 3 * e1 * e2 + 3 * e3) / 6
    )


def hrr_threefold_symbolic(e1, e2, e3, rank: int) -> Affine:
    """HRR over the symbolic monomial ring; result is affine in the six
    intersection symbols h, c13, c12H, c1H2, c2H, H3."""
    from .chern import C1_SYM, C2_SYM

    return hrr_threefold(C1_SYM, C2_SYM, e1, e2, e3, rank, symbolic_degree)


def chi_twisted_cotangent_symbolic() -> Affine:
    """chi(X, Omega_X(-H + K_X)) as a symbolic affine expression."""
    e1, e2, e3 = cotangent_twist_e_classes()
    return hrr_threefold_symbolic(e1, e2, e3, 3)


def chi_plane(rank, c1, c2):
    """chi of a bundle on the plane: r - c2 + c1(c1 + 3)/2.

    Arguments may be numbers or polynomials.
    """
    return rank - c2 + c1 * (c1 + 3) / 2


def hrr_surface(f: SurfaceChern) -> Fraction:
    return chi_plane(Fraction(f.rank), f.c1, f.c2)


def rr_curve(rank: int, deg, twist=0):
    """chi on the line: degree plus rank, with an O(twist) applied to
    every summand."""
    if rank < 0:
        raise ValueError(f"rank must be >= 0, got {rank}")
    return deg + rank * (twist + 1)


def f_formula(x, y, p: int, q: int):
    """chi(W, xH + yU) = (p+q) binom(y+3, 4) + (x+1) binom(y+3, 3).

    x and y may be integers or polynomials; the result is exact either
    way.
    """
    if isinstance(y, UniPoly):
        b4 = binom_of_poly(y + 3, 4)
        b3 = binom_of_poly(y + 3, 3)
    else:
        b4 = binom(y + 3, 4)
        b3 = binom(y + 3, 3)
    return (p + q) * b4 + (x + 1) * b3


def f_splitting_oracle(x: int, y: int, p: int, q: int) -> Fraction:
    """chi(W, xH + yU) by pushing forward to the line.

    Enumerates the monomials of the y-th symmetric power of
    O^2 + O(p) + O(q) and sums chi of each twisted summand; only defined
    for y >= 0.
    """
    if y < 0:
        raise ValueError(f"oracle needs y >= 0, got {y}")
    total = Fraction(0)
    for i in range(y + 1):
        for j in range(y + 1 - i):
            mult = y - i - j + 1  # exponent splittings over the two O's
            total += mult * (x + i * p + j * q + 1)
    return total


def euler_jaczewski_chi(x, y, p: int, q: int):
    """chi(W, Omega_W(xH + yU)) via the toric cotangent sequence.

    The toric boundary of W has six components, linearly equivalent to
    H, H, U, U, U - pH, U - qH; the resulting six-term combination of f
    computes chi exactly.
    """
    return (
        2 * f_formula(x - 1, y, p, q)
        + 2 * f_formula(x, y - 1, p, q)
        + f_formula(x + p, y - 1, p, q)
        + f_formula(x + q, y - 1, p, q)
        - 2 * f_formula(x, y, p, q)
    )


def normalized_pq(twists) -> tuple:
    """Extract (p, q) from four twists of which at least two are zero.

    The caller performs the normalizing shift; this boundary check makes
    the "two twists vanish" hypothesis explicit.
    """
    twists = tuple(twists)
    if len(twists) != 4:
        raise ValueError(f"need exactly 4 twists, got {len(twists)}")
    rest = list(twists)
    try:
        rest.remove(0)
        rest.remove(0)
    except ValueError:
        raise HypothesisViolation(
            f"two of the twists must be zero after normalization, got {twists}"
        ) from None
    return tuple(rest)
