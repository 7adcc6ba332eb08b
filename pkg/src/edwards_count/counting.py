"""Point counting for E_d: the criterion sum, supersingularity, and exact orders.

The central routine is :func:`resolve_exact_count`. It computes the affine
order of E_d over F_p from a single residue mod p,

    N = (-1)^((p+1)/2) * S(d) - 1 - 2 (d/p)   (mod p),

where S(d) = sum_j C((p-1)/2, j)^2 d^j, and then lifts the residue to the
unique even integer in [1, 2p] (N is a multiple of 4 and, by Hasse, at most
2p). Everything else here either feeds that routine or checks it.

Counting conventions, all for a = 1 Edwards curves:

* ``affine`` is the number of (x, y) in F_q^2 on x^2 + y^2 = 1 + d x^2 y^2.
* ``projective`` is the order of the smooth model, affine + 2((d/q) + 1):
  when d is a square the desingularised curve picks up four points that are
  not affine.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import isqrt

from .curves import EdwardsCurve, count_edwards
from .field import (
    EnumerationBudgetError,
    FieldError,
    build_extension,
    check_budget,
    legendre,
    require_odd_prime,
)

ENUMERATION = "enumeration"
CONGRUENCE = "congruence+parity"
SUPERSINGULAR_FORMULA = "supersingular-formula"
EXTENSION_FORMULA = "extension-formula"


class InconsistencyError(ArithmeticError):
    """Two routes to the same count disagree, or a proven bound is violated."""


class NotSupersingularError(ValueError):
    pass


@dataclass(frozen=True)
class CountReport:
    p: int
    n: int
    d: int
    affine_count: int
    projective_count: int
    legendre_d: int
    criterion_residue: int
    trace_T: int
    supersingular: bool
    method: str

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> CountReport:
        return cls(**data)


def _validate(p: int, d: int) -> int:
    require_odd_prime(p)
    d %= p
    if d in (0, 1):
        raise FieldError(f"d must not be 0 or 1 mod {p}")
    return d


def within_hasse(count: int, q: int) -> bool:
    """|count - (q + 1)| <= 2 sqrt(q), decided in integers."""
    return (count - q - 1) ** 2 <= 4 * q


def criterion_sum(p: int, d: int) -> int:
    """sum_{j=0}^{m} C(m, j)^2 d^j mod p with m = (p-1)/2.

    Binomials run through C(m, j+1) = C(m, j) (m - j) / (j + 1), all mod p.
    """
    d = _validate(p, d)
    m = (p - 1) // 2
    total, binom, dj = 0, 1, 1
    for j in range(m + 1):
        total = (total + binom * binom % p * dj) % p
        binom = binom * (m - j) % p * pow(j + 1, -1, p) % p
        dj = dj * d % p
    return total


def is_supersingular(p: int, d: int) -> bool:
    return p % 4 == 3 and criterion_sum(p, d) == 0


def supersingular_order(p: int, d: int) -> tuple[int, int]:
    """(affine, projective) orders of a supersingular E_d over F_p."""
    if not is_supersingular(p, d):
        raise NotSupersingularError(f"E_{d % p} over F_{p} is not supersingular")
    if legendre(d, p) == -1:
        return p + 1, p + 1
    return p - 3, p + 1


def order_congruence(p: int, d: int) -> int:
    """Affine order of E_d reduced into [0, p)."""
    s = criterion_sum(p, d)
    sign = -1 if ((p + 1) // 2) % 2 else 1
    return (-1 - 2 * legendre(d, p) + sign * s) % p


def _report(p: int, n: int, d: int, affine: int, character: int, method: str) -> CountReport:
    q = p ** n
    return CountReport(
        p=p,
        n=n,
        d=d,
        affine_count=affine,
        projective_count=affine + 2 * (character + 1),
        legendre_d=character,
        criterion_residue=criterion_sum(p, d),
        trace_T=affine - (q - 1 - 2 * character),
        supersingular=is_supersingular(p, d),
        method=method,
    )


def resolve_exact_count(p: int, d: int) -> CountReport:
    """Affine and projective order of E_d over F_p without enumeration."""
    d = _validate(p, d)
    r = order_congruence(p, d)
    low = r if r else p  # lift into [1, p]
    affine = low if low % 2 == 0 else low + p
    if affine < 4:
        raise InconsistencyError(f"lifted count {affine} is below the 4 rational base points")
    report = _report(p, 1, d, affine, legendre(d, p), CONGRUENCE)
    if not within_hasse(report.projective_count, p):
        raise InconsistencyError(
            f"p={p}, d={d}: projective count {report.projective_count} outside the Hasse window"
        )
    return report


def count_by_enumeration(p: int, d: int, n: int = 1, budget: int | None = None) -> CountReport:
    """Brute-force count over F_{p^n}; ``d`` is taken from the prime subfield."""
    d = _validate(p, d)
    field = build_extension(p, n, budget)
    curve = EdwardsCurve(field, d)
    affine = count_edwards(curve, budget)
    return _report(p, n, d, affine, field.quadratic_character(curve.d.value), ENUMERATION)


def trace(p: int, d: int, budget: int | None = None) -> int:
    """T = N - (p - 1 - 2 (d/p)) with N from enumeration.

    Checks the Hasse bound T^2 <= 4p and the congruence
    T = (-1)^((p+1)/2) S(d) mod p; raises :class:`InconsistencyError` otherwise.
    """
    d = _validate(p, d)
    n_oracle = count_edwards(EdwardsCurve.over_prime(p, d), budget)
    t = n_oracle - (p - 1 - 2 * legendre(d, p))
    sign = -1 if ((p + 1) // 2) % 2 else 1
    if t * t > 4 * p:
        raise InconsistencyError(f"|T|={abs(t)} exceeds 2 sqrt({p})")
    if (t - sign * criterion_sum(p, d)) % p:
        raise InconsistencyError(f"T={t} does not match the criterion sum mod {p}")
    return t


def extension_order(p: int, n: int, d: int) -> tuple[int, int]:
    """(affine, projective) order of a supersingular E_d over F_{p^n}."""
    d = _validate(p, d)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_supersingular(p, d):
        raise NotSupersingularError(f"E_{d} over F_{p} is not supersingular")
    q = p ** n
    if n % 2:
        return q - 1 - 2 * legendre(d, p), q + 1
    frob = 2 * (-p) ** (n // 2)
    return q - 3 - frob, q + 1 - frob


def extension_report(p: int, n: int, d: int) -> CountReport:
    affine, projective = extension_order(p, n, d)
    character = legendre(d, p) if n % 2 else 1
    report = _report(p, n, d % p, affine, character, EXTENSION_FORMULA)
    assert report.projective_count == projective
    return report


def count(
    p: int, d: int, n: int = 1, method: str = "auto", budget: int | None = None
) -> tuple[CountReport, bool]:
    """Count points of E_d over F_{p^n}; returns (report, oracle_verified).

    ``method`` is ``enumerate``, ``congruence`` or ``auto``. In ``auto`` the
    formula route produces the answer and enumeration, when the field fits the
    budget, verifies it. A disagreement raises :class:`InconsistencyError`.
    """
    d = _validate(p, d)
    if method not in ("auto", "enumerate", "congruence"):
        raise ValueError(f"unknown method {method!r}")
    if method == "enumerate":
        return count_by_enumeration(p, d, n, budget), True

    if n == 1:
        try:
            report = resolve_exact_count(p, d)
        except InconsistencyError:
            if method == "congruence":
                raise
            return count_by_enumeration(p, d, 1, budget), True
    elif is_supersingular(p, d):
        report = extension_report(p, n, d)
    elif method == "congruence":
        raise NotSupersingularError(
            "no closed form over an extension for a non-supersingular curve"
        )
    else:
        return count_by_enumeration(p, d, n, budget), True

    if method == "congruence":
        return report, False
    try:
        check_budget(p ** n, budget)
    except EnumerationBudgetError:
        return report, False
    oracle = count_by_enumeration(p, d, n, budget)
    if oracle.affine_count != report.affine_count:
        raise InconsistencyError(
            f"{report.method} gives {report.affine_count}, enumeration gives {oracle.affine_count}"
        )
    return report, True


def hasse_bound(q: int) -> tuple[int, int]:
    """Integer window [lo, hi] containing every count within 2 sqrt(q) of q + 1."""
    r = isqrt(4 * q)
    return q + 1 - r, q + 1 + r
