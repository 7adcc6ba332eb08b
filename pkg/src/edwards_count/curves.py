"""Edwards and Montgomery curves, the Edwards group law, and enumeration oracles.

The enumeration functions here are the ground truth every formula in
:mod:`edwards_count.counting` is checked against. They solve for ``y`` by
exhaustive square-root lookup, one ``x`` at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field, FieldElement, FieldError, prime_field, square_root_table


class NotOnCurveError(ValueError):
    pass


class ExceptionalAdditionError(ArithmeticError):
    """A denominator of the Edwards addition law vanished."""


def _coerce(field: Field, value) -> FieldElement:
    return field(value)


@dataclass(frozen=True, slots=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    def key(self) -> tuple:
        f = self.x.field
        return (f.sort_key(self.x.value), f.sort_key(self.y.value))

    def to_json(self) -> list:
        return [self.x.to_json(), self.y.to_json()]

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class EdwardsCurve:
    """x^2 + y^2 = 1 + d x^2 y^2 over ``field``; ``d`` may be given as an int."""

    field: Field
    d: FieldElement

    def __post_init__(self):
        d = _coerce(self.field, self.d)
        if d.value in (0, 1):
            raise FieldError("Edwards curve needs d not in {0, 1}")
        object.__setattr__(self, "d", d)

    @classmethod
    def over_prime(cls, p: int, d: int) -> EdwardsCurve:
        return cls(prime_field(p), d)

    @property
    def identity(self) -> AffinePoint:
        f = self.field
        return AffinePoint(f(0), f(1))

    def contains(self, x, y) -> bool:
        x, y = _coerce(self.field, x), _coerce(self.field, y)
        x2, y2 = x * x, y * y
        return x2 + y2 == 1 + self.d * x2 * y2

    def point(self, x, y) -> AffinePoint:
        """Validated point constructor."""
        if not self.contains(x, y):
            raise NotOnCurveError(f"({x}, {y}) is not on E_{self.d}")
        return AffinePoint(_coerce(self.field, x), _coerce(self.field, y))

    def montgomery(self) -> MontgomeryCurve:
        return MontgomeryCurve.from_edwards(self)

    def inverse_d(self) -> EdwardsCurve:
        return EdwardsCurve(self.field, self.d.inverse())


@dataclass(frozen=True)
class MontgomeryCurve:
    """v^2 = c3 u^3 + c2 u^2 + c1 u over ``field``."""

    field: Field
    c3: FieldElement
    c2: FieldElement
    c1: FieldElement

    def __post_init__(self):
        for name in ("c3", "c2", "c1"):
            object.__setattr__(self, name, _coerce(self.field, getattr(self, name)))
        if self.c3.is_zero():
            raise FieldError("Montgomery curve needs c3 != 0")

    @classmethod
    def from_edwards(cls, curve: EdwardsCurve) -> MontgomeryCurve:
        d = curve.d
        return cls(curve.field, d - 1, 2 * (d + 1), d - 1)

    def rhs(self, u: FieldElement) -> FieldElement:
        return ((self.c3 * u + self.c2) * u + self.c1) * u

    def contains(self, u, v) -> bool:
        u, v = _coerce(self.field, u), _coerce(self.field, v)
        return v * v == self.rhs(u)

    def point(self, u, v) -> AffinePoint:
        if not self.contains(u, v):
            raise NotOnCurveError(f"({u}, {v}) is not on the Montgomery curve")
        return AffinePoint(_coerce(self.field, u), _coerce(self.field, v))


# ---------------------------------------------------------------------------
# Group law
# ---------------------------------------------------------------------------

def edwards_contains(curve: EdwardsCurve, x, y) -> bool:
    return curve.contains(x, y)


def edwards_add(curve: EdwardsCurve, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    """Unified affine Edwards addition; identity (0, 1), inverse (-x, y)."""
    f = curve.field
    x1, y1, x2, y2 = P.x.value, P.y.value, Q.x.value, Q.y.value
    x, y = _add_raw(f, curve.d.value, x1, y1, x2, y2)
    return AffinePoint(FieldElement(f, x), FieldElement(f, y))


def _add_raw(f: Field, d: int, x1: int, y1: int, x2: int, y2: int) -> tuple[int, int]:
    mul, add, sub = f.mul, f.add, f.sub
    t = mul(d, mul(mul(x1, x2), mul(y1, y2)))
    den_x, den_y = add(1, t), sub(1, t)
    if den_x == 0 or den_y == 0:
        raise ExceptionalAdditionError("Edwards addition denominator is zero")
    num_x = add(mul(x1, y2), mul(y1, x2))
    num_y = sub(mul(y1, y2), mul(x1, x2))
    return f.div(num_x, den_x), f.div(num_y, den_y)


def edwards_neg(curve: EdwardsCurve, P: AffinePoint) -> AffinePoint:
    return AffinePoint(-P.x, P.y)


def scalar_mul(curve: EdwardsCurve, k: int, P: AffinePoint) -> AffinePoint:
    """Left-to-right double-and-add; negative ``k`` multiplies the inverse."""
    if k < 0:
        return scalar_mul(curve, -k, edwards_neg(curve, P))
    acc = curve.identity
    for bit in bin(k)[2:]:
        acc = edwards_add(curve, acc, acc)
        if bit == "1":
            acc = edwards_add(curve, acc, P)
    return acc


def point_order(curve: EdwardsCurve, P: AffinePoint, bound: int) -> int:
    """Smallest m in [1, bound] with m*P = identity, by repeated addition."""
    acc, ident = P, curve.identity
    for m in range(1, bound + 1):
        if acc == ident:
            return m
        acc = edwards_add(curve, acc, P)
    raise ArithmeticError(f"no order <= {bound} for {P}")


# ---------------------------------------------------------------------------
# Enumeration oracles
# ---------------------------------------------------------------------------

def _edwards_fibres(curve: EdwardsCurve, budget: int | None):
    """Yield (x, roots_y) for every x; y^2 (1 - d x^2) = 1 - x^2."""
    f = curve.field
    xs = f.values(budget)
    roots = square_root_table(f)
    d = curve.d.value
    for x in xs:
        x2 = f.mul(x, x)
        den = f.sub(1, f.mul(d, x2))
        if den == 0:
            # x^2 = 1/d != 1, so y^2 * 0 = 1 - x^2 has no solution
            yield x, ()
            continue
        yield x, roots.get(f.div(f.sub(1, x2), den), ())


def enumerate_edwards(curve: EdwardsCurve, budget: int | None = None) -> list[AffinePoint]:
    """All affine points, sorted lexicographically by (x, y) coefficients."""
    f = curve.field
    pts = [
        AffinePoint(FieldElement(f, x), FieldElement(f, y))
        for x, ys in _edwards_fibres(curve, budget)
        for y in ys
    ]
    pts.sort(key=AffinePoint.key)
    return pts


def count_edwards(curve: EdwardsCurve, budget: int | None = None) -> int:
    """Number of affine points; same solve as :func:`enumerate_edwards` without materialising."""
    return sum(len(ys) for _, ys in _edwards_fibres(curve, budget))


def enumerate_montgomery(curve: MontgomeryCurve, budget: int | None = None) -> list[AffinePoint]:
    """All affine (u, v); the projective curve adds one point at infinity."""
    f = curve.field
    us = f.values(budget)
    roots = square_root_table(f)
    c3, c2, c1 = curve.c3.value, curve.c2.value, curve.c1.value
    pts = []
    for u in us:
        rhs = f.mul(f.add(f.mul(f.add(f.mul(c3, u), c2), u), c1), u)
        for v in roots.get(rhs, ()):
            pts.append(AffinePoint(FieldElement(f, u), FieldElement(f, v)))
    pts.sort(key=AffinePoint.key)
    return pts


def count_product_curve(p: int, d: int, budget: int | None = None) -> int:
    """Solutions of y^2 = (x^2 - 1)(d x^2 - 1) over F_p."""
    f = prime_field(p)
    xs = f.values(budget)
    roots = square_root_table(f)
    total = 0
    for x in xs:
        x2 = x * x % p
        total += len(roots.get((x2 - 1) * (d * x2 - 1) % p, ()))
    return total


enumerate_product_curve = count_product_curve
