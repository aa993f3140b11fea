"""The mod-n Heisenberg group and embedding problems into it.

Elements are upper unitriangular 3x3 matrices over Z/n, written h(a, b; c)
with a, b the superdiagonal entries and c the corner.  The group law is

    h(a, b; c) * h(a', b'; c') = h(a+a', b+b'; c+c'+a*b').

Central elements h(0, 0; c) are identified with c throughout, so commutator
and power images land in Z/n.  Closed forms used (re-verified in tests
against the literal law):

    commutator of h(a,b;.) and h(a',b';.)  = h(0, 0; a*b' - a'*b)
    h(a,b;c)^m                             = h(m*a, m*b; m*c + C(m,2)*a*b)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, HypothesisError, ModulusError, TheoremViolationError
from .finfield import FqField, KummerCharacter
from .modring import binom2


@dataclass(frozen=True)
class HeisElem:
    """h(a, b; c) over Z/n."""

    n: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.n < 2:
            raise ModulusError(f"modulus must be >= 2, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)
        object.__setattr__(self, "c", self.c % self.n)

    def _check(self, other: "HeisElem") -> None:
        if self.n != other.n:
            raise ModulusError("mixed moduli")

    def __mul__(self, other: "HeisElem") -> "HeisElem":
        return heis_mul(self, other)

    def inv(self) -> "HeisElem":
        return HeisElem(self.n, -self.a, -self.b, self.a * self.b - self.c)

    def __pow__(self, m: int) -> "HeisElem":
        binom = m * (m - 1) // 2
        return HeisElem(self.n, m * self.a, m * self.b, m * self.c + binom * self.a * self.b)

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0


def identity(n: int) -> HeisElem:
    return HeisElem(n, 0, 0, 0)


def heis_mul(u: HeisElem, v: HeisElem) -> HeisElem:
    u._check(v)
    return HeisElem(u.n, u.a + v.a, u.b + v.b, u.c + v.c + u.a * v.b)


def heis_comm_pow(u: HeisElem, v: HeisElem) -> tuple[int, int]:
    """(central coordinate of the commutator of u and v, of u's n-th power).

    Closed forms a*b' - a'*b and C(n,2)*a*b, cross-checked against the
    literal computations u^-1 v^-1 u v and u^n via the group law.
    """
    u._check(v)
    n = u.n
    comm = (u.a * v.b - v.a * u.b) % n
    powr = (binom2(n).value * u.a * u.b) % n
    literal_comm = heis_mul(heis_mul(u.inv(), v.inv()), heis_mul(u, v))
    literal_pow = identity(n)
    for _ in range(n):
        literal_pow = heis_mul(literal_pow, u)
    if (literal_comm.a, literal_comm.b, literal_comm.c) != (0, 0, comm):
        raise TheoremViolationError("closed-form commutator disagrees with the group law")
    if (literal_pow.a, literal_pow.b, literal_pow.c) != (0, 0, powr):
        raise TheoremViolationError("closed-form n-th power disagrees with the group law")
    return comm, powr


def order_of(x: HeisElem) -> int:
    """Multiplicative order; always divides n^2."""
    acc = x
    for m in range(1, x.n * x.n + 1):
        if acc.is_identity():
            return m
        acc = heis_mul(acc, x)
    raise TheoremViolationError("element order exceeds n^2")


@lru_cache(maxsize=None)
def exponent_divides_n2(n: int) -> bool:
    """Check by enumeration that every element's order divides n^2."""
    return all(
        (HeisElem(n, a, b, c) ** (n * n)).is_identity()
        and (n * n) % order_of(HeisElem(n, a, b, c)) == 0
        for a, b, c in itertools.product(range(n), repeat=3)
    )


TABLE_MAX = 10**4


def elem_index(x: HeisElem) -> int:
    return (x.a * x.n + x.b) * x.n + x.c


def to_table_group(n: int):
    """The order-n^3 Heisenberg group as a multiplication-table group.

    Index of h(a, b; c) is (a*n + b)*n + c; labels are "h(a,b;c)".
    """
    from .groups import TableGroup

    size = n ** 3
    if size > TABLE_MAX:
        raise DomainError(f"table of order {size} exceeds the bound {TABLE_MAX}")
    elems = [HeisElem(n, a, b, c) for a, b, c in itertools.product(range(n), repeat=3)]
    table = np.zeros((size, size), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            table[i, j] = elem_index(heis_mul(x, y))
    labels = tuple(f"h({x.a},{x.b};{x.c})" for x in elems)
    return TableGroup(table=table, labels=labels)


# --- embedding problems ----------------------------------------------------


@dataclass(frozen=True)
class EmbeddingProblem:
    """Lift the pair of Kummer classes of x and y through the Heisenberg group.

    Over a finite field the Galois-side source is the cyclic group of order
    n^2 with fixed generator s0; a solution is determined by the image of s0,
    which must project to (x-class(s0), y-class(s0)) under the two coordinate
    maps on the abelianization.
    """

    field: FqField
    x: int
    y: int

    def __post_init__(self):
        if self.x == 0 or self.y == 0:
            raise DomainError("embedding problems require nonzero field elements")

    @property
    def n(self) -> int:
        return self.field.n

    def target(self) -> tuple[int, int]:
        """(x-class(s0), y-class(s0)) = the dlogs of x and y mod n."""
        n = self.n
        return self.field.dlog(self.x) % n, self.field.dlog(self.y) % n


@lru_cache(maxsize=None)
def _verified_solutions(n: int, dx: int, dy: int) -> tuple[HeisElem, ...]:
    sols = tuple(HeisElem(n, dx, dy, t) for t in range(n))
    for s in sols:
        if (n * n) % order_of(s) != 0:
            raise TheoremViolationError("generator image order does not divide n^2")
        if (s.a, s.b) != (dx, dy):
            raise TheoremViolationError("generator image does not recover the target pair")
    return sols


def solve_embedding_cyclic(prob: EmbeddingProblem) -> list[HeisElem]:
    """All generator images solving the problem (one per central coordinate).

    Over a finite field a solution always exists; the central coordinate t is
    unconstrained, so exactly n solutions h(dx, dy; t) are returned.  Each is
    verified to have order dividing n^2 and to recover the target pair.
    """
    dx, dy = prob.target()
    return list(_verified_solutions(prob.n, dx, dy))


# --- hom enumeration behind the relation conditions ------------------------


def _char_pairs_check(pairs, field: FqField) -> int:
    n = field.n
    for s, t in pairs:
        if s.field is not field or t.field is not field:
            raise ModulusError("characters live on a different field")
        if s.n != n or t.n != n:
            raise ModulusError("character modulus differs from the field's")
    return n


def commutator_sum(pairs, gen_image: HeisElem) -> int:
    """Central coordinate of the sum over pairs of commutators of images.

    The i-th pair of characters has images gen_image^{c_i} and gen_image^{d_i}
    under the homomorphism sending the fixed generator to gen_image; the sum
    of commutator coordinates is returned as an element of Z/n.
    """
    n = gen_image.n
    total = 0
    for s, t in pairs:
        u = gen_image ** s.c
        v = gen_image ** t.c
        total += u.a * v.b - v.a * u.b
    return total % n


def enumerate_homs_check(pairs, field: FqField) -> bool:
    """Whether the commutator sum vanishes for every homomorphism.

    Enumerates all n^3 generator images (every Heisenberg element has order
    dividing n^2, verified by enumeration rather than assumed, so every image
    defines a homomorphism from the cyclic order-n^2 source).  For each, the
    closed-form commutator sum is cross-checked against the bilinear
    criterion sum(s_i(x) t_i(y) - s_i(y) t_i(x)) for the induced pair of
    coordinate functionals; disagreement is a hard failure.
    """
    n = _char_pairs_check(pairs, field)
    if not exponent_divides_n2(n):
        raise TheoremViolationError("Heisenberg exponent does not divide n^2")
    ok = True
    for a, b, c in itertools.product(range(n), repeat=3):
        img = HeisElem(n, a, b, c)
        total = commutator_sum(pairs, img)
        # Bilinear criterion: s_i(x) = c_i * a, s_i(y) = c_i * b, etc.
        bilinear = sum(
            (s.c * a) * (t.c * b) - (s.c * b) * (t.c * a) for s, t in pairs
        ) % n
        if total != bilinear:
            raise TheoremViolationError("commutator sum disagrees with the bilinear criterion")
        if total != 0:
            ok = False
    return ok


def pointwise_embedding_check(pairs, field: FqField) -> tuple[bool, int | None]:
    """For each x in K minus {0,1}: some solution of the (x, 1-x) problem kills
    the commutator sum.

    The sum is independent of the central coordinate of the generator image,
    so one solution works iff all do.  Returns (flag, first failing x).
    """
    _char_pairs_check(pairs, field)
    for x in field.elements():
        if x in (0, 1):
            continue
        prob = EmbeddingProblem(field, x, field.one_minus(x))
        sols = solve_embedding_cyclic(prob)
        sums = {commutator_sum(pairs, s) for s in sols}
        if len(sums) != 1:
            raise TheoremViolationError("commutator sum depends on the central coordinate")
        if sums.pop() != 0:
            return False, x
    return True, None
