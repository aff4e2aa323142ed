"""Chern-class calculus on the surface and threefold level.

Covers: tensor products of bundles on the plane, symmetric powers of a
rank-2 bundle (closed-form polynomials plus an independent
splitting-principle oracle), the symbolic Chern classes of the twisted
cotangent bundle of a weak Fano threefold, and the tangent classes of a
P^1-bundle over the plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .chow import H_class, PlaneBase2, U_class, unit
from .exact import Affine, T, UniPoly, binom_poly


@dataclass(frozen=True)
class SurfaceChern:
    """Rank and Chern numbers (coefficients of h, h^2) on the plane."""

    rank: int
    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "c2", Fraction(self.c2))


def tensor_c1(r, s, c1, d1):
    """c1 of a tensor product; arguments may be numbers or polynomials."""
    return s * c1 + r * d1


def tensor_c2(r, s, c1, c2, d1, d2):
    """c2 of a tensor product of bundles of ranks r and s on the plane."""
    return (
        s * c2
        + r * d2
        + (s * (s - 1)) * c1 * c1 / 2
        + (r * (r - 1)) * d1 * d1 / 2
        + c1 * d1 * (r * s - 1)
    )


def tensor_chern_surface(f1: SurfaceChern, f2: SurfaceChern) -> SurfaceChern:
    return SurfaceChern(
        f1.rank * f2.rank,
        tensor_c1(f1.rank, f2.rank, f1.c1, f2.c1),
        tensor_c2(f1.rank, f2.rank, f1.c1, f1.c2, f2.c1, f2.c2),
    )


@dataclass(frozen=True)
class SymPowerPolys:
    """Chern numbers of S^b E and (S^b E)(-1) as polynomials in b."""

    C1: UniPoly
    C2: UniPoly
    A1: UniPoly
    A2: UniPoly


def sym_power_polys(e: SurfaceChern) -> SymPowerPolys:
    if e.rank != 2:
        raise ValueError(f"symmetric-power polynomials need rank 2, got {e.rank}")
    c1, c2 = e.c1, e.c2
    C1 = c1 * T * (T + 1) / 2
    C2 = c1 * c1 * T * (T * T - 1) * (3 * T + 2) / 24 + c2 * binom_poly(2, 3)
    A1 = C1 - (T + 1)
    A2 = C2 + binom_poly(1, 2) - T * C1
    return SymPowerPolys(C1, C2, A1, A2)


def sym_power_splitting_oracle(c1, c2, b: int) -> SurfaceChern:
    """Chern numbers of S^b E for E of rank 2, via formal Chern roots.

    Works in Q(c1,c2)[r]/(r^2 - c1*r + c2), where r is one Chern root
    and c1 - r the other.  The b+1 roots of S^b E are i*r + (b-i)*(c1-r);
    their elementary symmetric functions are computed directly and must
    land in the base field (root-free), which is asserted.
    """
    if b < 0:
        raise ValueError(f"symmetric power needs b >= 0, got {b}")
    c1, c2 = Fraction(c1), Fraction(c2)

    def mul(x, y):
        a, p = x
        c, q = y
        # (a + p r)(c + q r) with r^2 = c1 r - c2
        return (a * c - p * q * c2, a * q + p * c + p * q * c1)

    roots = [((b - i) * c1, Fraction(2 * i - b)) for i in range(b + 1)]
    e1 = (sum(r[0] for r in roots), sum(r[1] for r in roots))
    sq = (Fraction(0), Fraction(0))
    for r in roots:
        s = mul(r, r)
        sq = (sq[0] + s[0], sq[1] + s[1])
    e1sq = mul(e1, e1)
    e2 = ((e1sq[0] - sq[0]) / 2, (e1sq[1] - sq[1]) / 2)
    assert e1[1] == 0 and e2[1] == 0, "symmetric functions must be root-free"
    return SurfaceChern(b + 1, e1[0], e2[0])


# --- symbolic threefold classes -------------------------------------------
#
# Monomials c1^i H^j c2^k c3^l in the Chern classes of the tangent bundle
# and the hyperplane-type divisor H, truncated above weighted degree 3
# (c1, H of degree 1; c2 degree 2; c3 degree 3).  The degree functional
# maps the seven top monomials to intersection-number symbols, with the
# two universal substitutions deg(c1 c2) = 24 and deg(c3) = 6 - 2h.

SymMonomial = Tuple[int, int, int, int]  # (c1, H, c2, c3) exponents


def _weight(m: SymMonomial) -> int:
    i, j, k, l = m
    return i + j + 2 * k + 3 * l


class SymClass:
    __slots__ = ("coeffs",)

    def __init__(self, raw=()):
        terms = {}
        for m, c in dict(raw).items():
            c = Fraction(c)
            if c != 0 and _weight(m) <= 3:
                terms[m] = terms.get(m, Fraction(0)) + c
        object.__setattr__(self, "coeffs", tuple(sorted(terms.items())))

    def __setattr__(self, name, value):
        raise AttributeError("SymClass is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, SymClass):
            return other
        if isinstance(other, (int, Fraction)):
            return SymClass({(0, 0, 0, 0): other})
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.coeffs)
        for m, c in o.coeffs:
            terms[m] = terms.get(m, Fraction(0)) + c
        return SymClass(terms)

    __radd__ = __add__

    def __neg__(self):
        return SymClass({m: -c for m, c in self.coeffs})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymClass({m: c * other for m, c in self.coeffs})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for m1, a in self.coeffs:
            for m2, b in o.coeffs:
                m = tuple(x + y for x, y in zip(m1, m2))
                if _weight(m) <= 3:
                    terms[m] = terms.get(m, Fraction(0)) + a * b
        return SymClass(terms)

    __rmul__ = __mul__

    def __repr__(self):
        return f"SymClass({dict(self.coeffs)!r})"


C1_SYM = SymClass({(1, 0, 0, 0): 1})
H_SYM = SymClass({(0, 1, 0, 0): 1})
C2_SYM = SymClass({(0, 0, 1, 0): 1})
C3_SYM = SymClass({(0, 0, 0, 1): 1})

# Degree functional on weighted-degree-3 monomials.  c1*c2 integrates to
# 24 on any weak Fano threefold with vanishing higher structure-sheaf
# cohomology; c3 integrates to the topological Euler characteristic
# 6 - 2h when the Picard rank is 2.
_DEGREE_TABLE = {
    (3, 0, 0, 0): Affine.sym("c13"),
    (2, 1, 0, 0): Affine.sym("c12H"),
    (1, 2, 0, 0): Affine.sym("c1H2"),
    (0, 3, 0, 0): Affine.sym("H3"),
    (0, 1, 1, 0): Affine.sym("c2H"),
    (1, 0, 1, 0): Affine(24),
    (0, 0, 0, 1): Affine(6) - 2 * Affine.sym("h"),
}


def symbolic_degree(x: SymClass) -> Affine:
    out = Affine(0)
    for m, c in x.coeffs:
        if _weight(m) == 3:
            out = out + c * _DEGREE_TABLE[m]
    return out


def rank3_twist(f1, f2, f3, ell):
    """Chern classes of F(L) for F of rank 3 with classes f_i, c1(L)=ell."""
    e1 = f1 + 3 * ell
    e2 = f2 + 2 * f1 * ell + 3 * ell * ell
    e3 = f3 + f2 * ell + f1 * ell * ell + ell * ell * ell
    return e1, e2, e3


def cotangent_twist_e_classes():
    """Chern classes of Omega_X(-H + K_X) in the symbolic monomial ring.

    Derived from the generic rank-3 twist expansion with the cotangent
    classes (-c1, c2, -c3) and twist -H - c1, rather than hard-coded, so
    the known closed forms act as a test of the expansion.
    """
    ell = -H_SYM - C1_SYM
    return rank3_twist(-C1_SYM, C2_SYM, -C3_SYM, ell)


def tangent_chern_plane_bundle(ambient: PlaneBase2):
    """Tangent Chern classes of P(E) over the plane, reduced in its ring."""
    rel = unit(ambient) + 2 * U_class(ambient) - ambient.c1 * H_class(ambient)
    base = (
        unit(ambient)
        + 3 * H_class(ambient)
        + 3 * H_class(ambient) * H_class(ambient)
    )
    total = rel * base
    return total.graded_part(1), total.graded_part(2), total.graded_part(3)
