"""Exact arithmetic in F_p and F_{p^n}.

Elements are stored as integers in ``[0, p**n)``: the base-``p`` digits of the
integer are the polynomial-basis coefficients, constant term first. For
``n == 1`` this is just the canonical residue. The :class:`Field` descriptor
does arithmetic on these raw integers; :class:`FieldElement` wraps one with
its field for operator-style use.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from sympy import Poly, isprime, symbols
from sympy.ntheory import sqrt_mod as _sympy_sqrt_mod

DEFAULT_ENUM_BUDGET = 2_000_000
BUDGET_ENV_VAR = "EDWARDS_ENUM_BUDGET"

_X = symbols("x")


class FieldError(ValueError):
    """Invalid field parameters or mixed-field arithmetic."""


class EnumerationBudgetError(RuntimeError):
    """An exhaustive operation would exceed the enumeration budget."""


def enumeration_budget(budget: int | None = None) -> int:
    """Resolve the effective enumeration budget.

    An explicit ``budget`` wins, then the ``EDWARDS_ENUM_BUDGET`` environment
    variable, then :data:`DEFAULT_ENUM_BUDGET`.
    """
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_ENUM_BUDGET


def check_budget(size: int, budget: int | None = None) -> None:
    limit = enumeration_budget(budget)
    if size > limit:
        raise EnumerationBudgetError(f"{size} elements exceeds enumeration budget {limit}")


def require_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise FieldError(f"p must be an odd prime, got {p!r}")


# ---------------------------------------------------------------------------
# Number-theoretic helpers on plain residues
# ---------------------------------------------------------------------------

def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion; returns -1, 0 or 1."""
    require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod(a: int, p: int) -> tuple[int, ...]:
    """Both square roots of ``a`` modulo the odd prime ``p``, ascending.

    Returns ``()`` for a non-residue and ``(0,)`` for zero.
    """
    require_odd_prime(p)
    a %= p
    if a == 0:
        return (0,)
    return tuple(sorted(_sympy_sqrt_mod(a, p, all_roots=True) or ()))


def power_sum_check(p: int, k: int) -> int:
    """Sum of x**k for x in 1..p-1, reduced mod p.

    The result is p - 1 when (p - 1) divides k and 0 otherwise.
    """
    require_odd_prime(p)
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(pow(x, k, p) for x in range(1, p)) % p


# ---------------------------------------------------------------------------
# Polynomials over F_p, coefficient lists constant term first
# ---------------------------------------------------------------------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_divmod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], -1, p)
    q = [0] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, gc in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gc) % p
        _trim(r)
    return q, r


def _poly_mul(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim([c % p for c in out])


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Irreducibility over F_p of ``poly`` (coefficients, constant term first)."""
    f = _trim([c % p for c in poly])
    if len(f) < 2:
        return False
    return Poly(list(reversed(f)), _X, modulus=p).is_irreducible


# ---------------------------------------------------------------------------
# Field descriptor and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Field:
    """F_p (``n == 1``) or F_p[x]/(modulus) with ``modulus`` monic of degree n.

    ``modulus`` is a coefficient tuple, constant term first, of length n + 1.
    """

    p: int
    n: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        require_odd_prime(self.p)
        if self.n < 1:
            raise FieldError("extension degree must be >= 1")
        if self.n == 1:
            if self.modulus is not None:
                raise FieldError("prime field takes no reduction polynomial")
            return
        if self.modulus is None or len(self.modulus) != self.n + 1:
            raise FieldError(f"degree-{self.n} extension needs a degree-{self.n} polynomial")
        mod = tuple(c % self.p for c in self.modulus)
        if mod[-1] != 1:
            raise FieldError("reduction polynomial must be monic")
        if not is_irreducible(mod, self.p):
            raise FieldError(f"{mod} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)

    @property
    def order(self) -> int:
        return self.p ** self.n

    # -- encoding ----------------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs: Iterable[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise FieldError(f"expected at most {self.n} coefficients, got {len(coeffs)}")
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + c % self.p
        return value

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` in the prime subfield."""
        return k % self.p

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        return FieldElement(self, self.encode(value))

    # -- raw arithmetic on encoded integers --------------------------------
    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        return self.encode(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.encode(_poly_divmod(prod, self.modulus, self.p)[1])

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.n == 1:
            return pow(a, k, self.p)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.n == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def quadratic_character(self, a: int) -> int:
        """(a / F_q) for q = p**n: 1 for a nonzero square, -1 otherwise, 0 at 0."""
        if self.n == 1:
            return legendre(a, self.p)
        if a == 0:
            return 0
        return 1 if self.pow(a, (self.order - 1) // 2) == 1 else -1

    def square_roots(self, a: int) -> tuple[int, ...]:
        """All square roots of ``a``, in enumeration order."""
        if self.n == 1:
            return sqrt_mod(a, self.p)
        return square_root_table(self).get(a, ())

    # -- enumeration -------------------------------------------------------
    def values(self, budget: int | None = None) -> list[int]:
        """All encoded elements, lexicographic in (c0, c1, ..., c_{n-1})."""
        check_budget(self.order, budget)
        return self._all_values()

    def _all_values(self) -> list[int]:
        if self.n == 1:
            return list(range(self.p))
        return [self.encode(c) for c in itertools.product(range(self.p), repeat=self.n)]

    def sort_key(self, a: int) -> tuple[int, ...]:
        return self.coeffs(a)


@lru_cache(maxsize=64)
def square_root_table(field: Field) -> dict[int, tuple[int, ...]]:
    """Map each square of ``field`` to its roots, by exhaustive squaring.

    Callers are responsible for the budget check.
    """
    table: dict[int, list[int]] = {}
    for x in field._all_values():
        table.setdefault(field.mul(x, x), []).append(x)
    return {k: tuple(v) for k, v in table.items()}


@dataclass(frozen=True, slots=True, eq=False)
class FieldElement:
    field: Field
    value: int

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.value))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("arithmetic between elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def sqrt(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, r) for r in self.field.square_roots(self.value))

    def to_json(self) -> int | list[int]:
        """Decimal residue for prime fields, coefficient list otherwise."""
        if self.field.n == 1:
            return self.value
        return list(self.coeffs)

    def __repr__(self):
        if self.field.n == 1:
            return f"{self.value} (mod {self.field.p})"
        return f"{list(self.coeffs)} in F_{self.field.p}^{self.field.n}"

    def __str__(self):
        if self.field.n == 1:
            return str(self.value)
        return str(list(self.coeffs))


def field_arith(a: FieldElement, b: FieldElement | int, op: str) -> FieldElement:
    """Dispatch ``op`` in {add, sub, mul, div, pow}; for ``pow``, ``b`` is the int exponent."""
    if op == "pow":
        return a ** b
    ops = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    if not isinstance(b, FieldElement) or b.field != a.field:
        raise FieldError("operands must belong to the same field")
    return ops[op](a, b)


def prime_field(p: int) -> Field:
    return Field(p)


def build_extension(p: int, n: int, budget: int | None = None) -> Field:
    """F_{p^n} reduced by the lexicographically smallest monic irreducible.

    Candidates are ordered by their coefficient vector, constant term first,
    so for ``p=3, n=2`` the result uses x^2 + 1.
    """
    require_odd_prime(p)
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    check_budget(p ** n, budget)
    if n == 1:
        return Field(p)
    for low in itertools.product(range(p), repeat=n):
        poly = tuple(low) + (1,)
        if low[0] != 0 and is_irreducible(poly, p):
            return Field(p, n, poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable: one exists for every n


def enumerate_field(field: Field, budget: int | None = None) -> list[FieldElement]:
    return [FieldElement(field, v) for v in field.values(budget)]


def iter_primes(lo: int, hi: int) -> Iterator[int]:
    """Odd primes in the closed interval [lo, hi]."""
    from sympy import primerange

    for p in primerange(max(lo, 3), hi + 1):
        yield int(p)
