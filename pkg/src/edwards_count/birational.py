"""The birational map between E_d and E_M: v^2 = (d-1)u^3 + 2(d+1)u^2 + (d-1)u.

Montgomery to Edwards is x = (1+u)/(1-u), y = 2u/v; the inverse is
u = (x-1)/(x+1), v = 2u/y. Points where a denominator vanishes are special
and map to ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .counting import is_supersingular
from .curves import (
    AffinePoint,
    EdwardsCurve,
    NotOnCurveError,
    enumerate_edwards,
    enumerate_montgomery,
)


@dataclass(frozen=True)
class SpecialPointTable:
    montgomery_side: tuple[AffinePoint, ...]
    edwards_side: tuple[AffinePoint, ...]


@dataclass
class BijectionReport:
    p: int
    d: int
    edwards_affine: int
    montgomery_affine: int
    matched: int
    edwards_special: int
    montgomery_special: int
    supersingular: bool
    failures: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def montgomery_to_edwards(curve: EdwardsCurve, point: AffinePoint) -> AffinePoint | None:
    M = curve.montgomery()
    u, v = point.x, point.y
    if not M.contains(u, v):
        raise NotOnCurveError(f"{point} is not on the Montgomery curve of E_{curve.d}")
    if u == 1 or v.is_zero():
        return None
    image = AffinePoint((1 + u) / (1 - u), 2 * u / v)
    assert curve.contains(image.x, image.y), image
    return image


def edwards_to_montgomery(curve: EdwardsCurve, point: AffinePoint) -> AffinePoint | None:
    x, y = point.x, point.y
    if not curve.contains(x, y):
        raise NotOnCurveError(f"{point} is not on E_{curve.d}")
    if x == -1 or y.is_zero():
        return None
    u = (x - 1) / (x + 1)
    image = AffinePoint(u, 2 * u / y)
    assert curve.montgomery().contains(image.x, image.y), image
    return image


def special_points(curve: EdwardsCurve) -> SpecialPointTable:
    """Points of E_M and E_d that have no image under the map."""
    f, d = curve.field, curve.d
    mont = [AffinePoint(f(0), f(0))]
    roots = d.sqrt()
    if roots:
        s = roots[0]
        for r in (-s, s):
            mont.append(AffinePoint((-(d + 1) + 2 * r) / (d - 1), f(0)))
        for r in (-s, s):
            mont.append(AffinePoint(f(1), 2 * r))
    M = curve.montgomery()
    for P in mont:
        if not M.contains(P.x, P.y):
            raise NotOnCurveError(f"special point {P} is not on E_M")
    edw = (AffinePoint(f(-1), f(0)), AffinePoint(f(1), f(0)))
    return SpecialPointTable(tuple(mont), edw)


def verify_bijection(curve: EdwardsCurve, budget: int | None = None) -> BijectionReport:
    """Check the map exhaustively in both directions.

    Non-special Edwards points must map injectively onto the non-special
    Montgomery points, both round trips must be the identity, and for a
    supersingular curve over F_p, E_M must have exactly p affine points.
    """
    f = curve.field
    edw = enumerate_edwards(curve, budget)
    mont = enumerate_montgomery(curve.montgomery(), budget)
    table = special_points(curve)
    mont_special = set(table.montgomery_side)
    edw_special = set(table.edwards_side)
    d_int = curve.d.value if f.n == 1 else None
    supersingular = f.n == 1 and is_supersingular(f.p, d_int)
    report = BijectionReport(
        p=f.p,
        d=d_int if d_int is not None else -1,
        edwards_affine=len(edw),
        montgomery_affine=len(mont),
        matched=0,
        edwards_special=len(edw_special),
        montgomery_special=len(mont_special),
        supersingular=supersingular,
    )
    fail = report.failures.append

    images: dict[AffinePoint, AffinePoint] = {}
    for P in edw:
        Q = edwards_to_montgomery(curve, P)
        if Q is None:
            if P not in edw_special:
                fail(f"E_d point {P} has no image but is not special")
            continue
        if Q in mont_special:
            fail(f"E_d point {P} maps onto special point {Q}")
        if Q in images:
            fail(f"E_d points {images[Q]} and {P} share image {Q}")
        images[Q] = P
        if montgomery_to_edwards(curve, Q) != P:
            fail(f"round trip E_d -> E_M -> E_d moves {P}")

    for Q in mont:
        P = montgomery_to_edwards(curve, Q)
        if P is None:
            if Q not in mont_special:
                fail(f"E_M point {Q} has no image but is not special")
            continue
        if Q not in images:
            fail(f"E_M point {Q} is not hit from E_d")
        if edwards_to_montgomery(curve, P) != Q:
            fail(f"round trip E_M -> E_d -> E_M moves {Q}")

    missing = [P for P in edw_special if not curve.contains(P.x, P.y)]
    for P in missing:
        fail(f"special point {P} is not on E_d")
    if set(mont) & mont_special != mont_special:
        fail("a special Montgomery point is missing from the enumeration")

    report.matched = len(images)
    if len(edw) - len(edw_special) != len(mont) - len(mont_special):
        fail(
            f"count mismatch: {len(edw)} - {len(edw_special)} != "
            f"{len(mont)} - {len(mont_special)}"
        )
    if supersingular and len(mont) != f.p:
        fail(f"supersingular E_M has {len(mont)} affine points, expected {f.p}")
    return report
