"""Exact Gaussian-rational arithmetic.

Every finite float is a dyadic rational, so any float amplitude vector
lifts exactly to Gaussian rationals (pairs of :class:`fractions.Fraction`).
Exact mode performs all zero tests in this ring, where vanishing is decided
without tolerances.
"""

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @classmethod
    def from_complex(cls, z) -> "GaussianRational":
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    @classmethod
    def from_int(cls, k: int) -> "GaussianRational":
        return cls(Fraction(k), _ZERO)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2 as an exact Fraction."""
        return self.re * self.re + self.im * self.im

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other), _ZERO)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = other.abs2()
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __bool__(self):
        return not self.is_zero


GR_ZERO = GaussianRational(_ZERO, _ZERO)
GR_ONE = GaussianRational(Fraction(1), _ZERO)


def lift(amps) -> tuple:
    """Exact dyadic-rational lift of a float amplitude vector."""
    return tuple(GaussianRational.from_complex(z) for z in amps)


def snap_complex(z, max_den: int = 10**12) -> GaussianRational:
    """Nearest simple Gaussian rational to a float complex number.

    Used to recover exact root coordinates from floating-point root finding;
    callers must verify the snapped value exactly before trusting it.
    """
    z = complex(z)
    return GaussianRational(
        Fraction(z.real).limit_denominator(max_den),
        Fraction(z.imag).limit_denominator(max_den),
    )


# ---------------------------------------------------------------------------
# exact polynomial evaluation on 8-amplitude vectors

def ghz_invariant_exact(a) -> GaussianRational:
    s = a[0] * a[7] - a[2] * a[5] + a[1] * a[6] - a[3] * a[4]
    return s * s - 4 * (a[2] * a[4] - a[0] * a[6]) * (a[3] * a[5] - a[1] * a[7])


def clause_quantities_exact(a) -> tuple:
    return (
        a[0] * a[3] - a[1] * a[2],
        a[5] * a[6] - a[4] * a[7],
        a[1] * a[4] - a[0] * a[5],
        a[3] * a[6] - a[2] * a[7],
        a[3] * a[5] - a[1] * a[7],
        a[2] * a[4] - a[0] * a[6],
    )


def pencil_element_exact(phi0, phi1, x: GaussianRational, y: GaussianRational) -> tuple:
    return tuple(x * p + y * q for p, q in zip(phi0, phi1))


def quartic_exact(phi0, phi1) -> tuple:
    """Exact coefficients (x^4, x^3 y, x^2 y^2, x y^3, y^4) of the pencil's
    GHZ-criterion form, by interpolation at integer nodes."""
    two = GaussianRational.from_int(2)
    c0 = ghz_invariant_exact(phi0)
    c4 = ghz_invariant_exact(phi1)
    t11 = ghz_invariant_exact(pencil_element_exact(phi0, phi1, GR_ONE, GR_ONE))
    t1m = ghz_invariant_exact(pencil_element_exact(phi0, phi1, GR_ONE, -GR_ONE))
    t12 = ghz_invariant_exact(pencil_element_exact(phi0, phi1, GR_ONE, two))
    u = t11 - c0 - c4
    v = t1m - c0 - c4
    w = t12 - c0 - 16 * c4
    c2 = (u + v) * GaussianRational(Fraction(1, 2), _ZERO)
    c3 = (w - 3 * u - v) * GaussianRational(Fraction(1, 6), _ZERO)
    c1 = (u - v) * GaussianRational(Fraction(1, 2), _ZERO) - c3
    return (c0, c1, c2, c3, c4)


def clause_quadratics_exact(phi0, phi1) -> tuple:
    """Exact (alpha, beta, gamma) triples for the six clause quantities as
    quadratic forms alpha x^2 + beta xy + gamma y^2 on the pencil."""
    qa = clause_quantities_exact(phi0)
    qc = clause_quantities_exact(phi1)
    qs = clause_quantities_exact(pencil_element_exact(phi0, phi1, GR_ONE, GR_ONE))
    return tuple(
        (qa[i], qs[i] - qa[i] - qc[i], qc[i]) for i in range(6)
    )


def eval_quadratic_exact(form, x: GaussianRational, y: GaussianRational) -> GaussianRational:
    alpha, beta, gamma = form
    return alpha * x * x + beta * x * y + gamma * y * y


def eval_quartic_exact(coeffs, x: GaussianRational, y: GaussianRational) -> GaussianRational:
    acc = GR_ZERO
    xp = [GR_ONE, x, x * x, x * x * x, x * x * x * x]
    yp = [GR_ONE, y, y * y, y * y * y, y * y * y * y]
    for j, c in enumerate(coeffs):
        acc = acc + c * xp[4 - j] * yp[j]
    return acc


def resultant_quadratics_exact(f, g) -> GaussianRational:
    """Resultant of two binary quadratic forms; zero iff they share a
    projective root."""
    a1, b1, c1 = f
    a2, b2, c2 = g
    return (a1 * c2 - a2 * c1) * (a1 * c2 - a2 * c1) - (a1 * b2 - a2 * b1) * (
        b1 * c2 - b2 * c1
    )


def exact_rank(rows) -> int:
    """Rank of a matrix of Gaussian rationals by exact Gaussian elimination."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if not mat[r][col].is_zero:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = GR_ONE / mat[row][col]
        for r in range(row + 1, nrows):
            if mat[r][col].is_zero:
                continue
            factor = mat[r][col] * inv
            for c in range(col, ncols):
                mat[r][c] = mat[r][c] - factor * mat[row][c]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
