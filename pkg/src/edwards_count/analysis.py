"""Twist duality, embedding degrees, and batch scans over (p, d)."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from .counting import (
    CONGRUENCE,
    count_by_enumeration,
    resolve_exact_count,
    supersingular_order,
)
from .curves import AffinePoint, EdwardsCurve
from .field import (
    EnumerationBudgetError,
    Field,
    FieldElement,
    check_budget,
    iter_primes,
    legendre,
    require_odd_prime,
)

DEFAULT_EMBED_CAP = 12
NONE_WITHIN_CAP = "none"

SCAN_COLUMNS = (
    "p",
    "d",
    "legendre",
    "supersingular",
    "affine",
    "projective",
    "embedding_degree",
    "method",
    "oracle_verified",
)


class DualityViolation(AssertionError):
    pass


@dataclass(frozen=True)
class TwistReport:
    p: int
    d: int
    d_inv: int
    legendre_d: int
    order_d: int
    order_d_inv: int
    relation: str  # "equal" or "dual"
    holds: bool

    def to_dict(self) -> dict:
        return asdict(self)


def twist_check(p: int, d: int, strict: bool = True) -> TwistReport:
    """Compare |E_d| and |E_{1/d}| (affine orders) over F_p.

    Squares d give equal orders; non-squares give orders summing to 2p + 2.
    With ``strict`` a failed relation raises :class:`DualityViolation`.
    """
    require_odd_prime(p)
    d %= p
    d_inv = pow(d, -1, p)
    n_d = resolve_exact_count(p, d).affine_count
    n_inv = resolve_exact_count(p, d_inv).affine_count
    chi = legendre(d, p)
    if chi == 1:
        relation, holds = "equal", n_d == n_inv
    else:
        relation, holds = "dual", n_d + n_inv == 2 * p + 2
    report = TwistReport(p, d, d_inv, chi, n_d, n_inv, relation, holds)
    if strict and not holds:
        raise DualityViolation(str(report))
    return report


def canonical_sqrt(field: Field, a: FieldElement) -> FieldElement:
    """The square root with the smaller canonical representative."""
    roots = a.sqrt()
    if not roots:
        raise ValueError(f"{a} is not a square")
    return min(roots, key=lambda r: field.sort_key(r.value))


def twist_point_map(curve: EdwardsCurve, point: AffinePoint) -> AffinePoint:
    """Send (x0, y0) on E_d to (1/x0, sqrt(d) y0) on E_{1/d}; d must be a square.

    With the canonical root this is a bijection between the x != 0 points of
    the two curves.
    """
    if point.x.is_zero():
        raise ValueError("points with x = 0 are handled separately by the twist map")
    if not curve.contains(point.x, point.y):
        raise ValueError(f"{point} is not on E_{curve.d}")
    s = canonical_sqrt(curve.field, curve.d)
    image = AffinePoint(point.x.inverse(), s * point.y)
    target = curve.inverse_d()
    if not target.contains(image.x, image.y):
        raise AssertionError(f"twist image {image} is not on E_{target.d}")
    return image


def embedding_degree(group_order: int, p: int, k_cap: int = DEFAULT_EMBED_CAP) -> int | None:
    """Least k <= k_cap with group_order | p^k - 1."""
    if group_order < 1 or k_cap < 1:
        raise ValueError("group_order and k_cap must be >= 1")
    for k in range(1, k_cap + 1):
        if pow(p, k, group_order) == 1 % group_order:
            return k
    return None


@dataclass(frozen=True)
class ScanRecord:
    p: int
    d: int
    legendre_d: int
    supersingular: bool
    affine_count: int
    projective_count: int
    embedding_degree: int | None
    method: str
    oracle_verified: bool

    def to_row(self) -> list[str]:
        emb = NONE_WITHIN_CAP if self.embedding_degree is None else str(self.embedding_degree)
        return [
            str(self.p),
            str(self.d),
            str(self.legendre_d),
            str(self.supersingular).lower(),
            str(self.affine_count),
            str(self.projective_count),
            emb,
            self.method,
            str(self.oracle_verified).lower(),
        ]

    def to_dict(self) -> dict:
        return asdict(self)


def scan_cell(p: int, d: int, budget: int | None = None, k_cap: int = DEFAULT_EMBED_CAP) -> ScanRecord:
    """Classify one (p, d): the congruence count, checked by enumeration when it fits."""
    report = resolve_exact_count(p, d)
    try:
        check_budget(p, budget)
        verified = True
    except EnumerationBudgetError:
        verified = False
    if verified:
        oracle = count_by_enumeration(p, d, 1, budget)
        if oracle.affine_count != report.affine_count:
            raise AssertionError(
                f"p={p}, d={d}: congruence {report.affine_count} != oracle {oracle.affine_count}"
            )
    if report.supersingular:
        if supersingular_order(p, d) != (report.affine_count, report.projective_count):
            raise AssertionError(f"p={p}, d={d}: supersingular order formula disagrees")
    return ScanRecord(
        p=p,
        d=report.d,
        legendre_d=report.legendre_d,
        supersingular=report.supersingular,
        affine_count=report.affine_count,
        projective_count=report.projective_count,
        embedding_degree=embedding_degree(report.projective_count, p, k_cap),
        method=CONGRUENCE,
        oracle_verified=verified,
    )


def _scan_cells(p_min: int, p_max: int, d_values: Sequence[int] | None) -> Iterator[tuple[int, int]]:
    for p in iter_primes(p_min, p_max):
        if d_values is None:
            ds: Iterable[int] = range(2, p)
        else:
            ds = sorted({d % p for d in d_values} - {0, 1})
        for d in ds:
            yield p, d


def _scan_cell_star(args):
    return scan_cell(*args)


def scan(
    p_min: int,
    p_max: int,
    d_values: Sequence[int] | None = None,
    budget: int | None = None,
    k_cap: int = DEFAULT_EMBED_CAP,
    workers: int = 1,
) -> Iterator[ScanRecord]:
    """One record per valid (p, d), ordered by (p, d).

    ``d_values=None`` means every d in [2, p-1]. A fixed list is reduced mod p;
    entries landing on 0 or 1 are skipped.
    """
    cells = ((p, d, budget, k_cap) for p, d in _scan_cells(p_min, p_max, d_values))
    if workers <= 1:
        for cell in cells:
            yield scan_cell(*cell)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_scan_cell_star, cells, chunksize=64)
