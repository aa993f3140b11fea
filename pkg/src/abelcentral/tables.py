"""Function tables on K \\ {0,1} and the subgroup they generate.

This is the computational heart of the package: the two table-valued maps
attached to a pair of Kummer characters resp. a single character, the
subgroup of Fun(K \\ {0,1}, (Z/n)^2) they generate, and evaluation of formal
commutator/power words into that subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from . import modring
from .errors import DomainError, HypothesisError, ModulusError
from .finfield import (
    FieldEmbedding,
    FqField,
    KummerCharacter,
    RootOfUnity,
    characters,
    embed_field,
    omega as make_omega,
    restrict_character,
)
from .modring import AbelianStructure, ModMatrix, SubgroupZnk, binom2


@lru_cache(maxsize=None)
def table_points(field: FqField) -> tuple[int, ...]:
    """The elements of K \\ {0,1} in canonical order.

    Prime fields use ascending integer order; extension fields ascending
    discrete-log order (the integer encodings of extension elements carry no
    arithmetic meaning).
    """
    pts = [x for x in field.elements() if x not in (0, 1)]
    if field.k > 1:
        pts.sort(key=field.dlog)
    return tuple(pts)


@dataclass(frozen=True, eq=False)
class FnTable:
    """An element of Fun(K \\ {0,1}, (Z/n)^2) as a dense table."""

    field: FqField
    n: int
    values: np.ndarray  # shape (q-2, 2)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64) % self.n
        if vals.shape != (self.field.q - 2, 2):
            raise ModulusError(f"table shape {vals.shape} does not match field of order {self.field.q}")
        object.__setattr__(self, "values", vals)

    @property
    def points(self) -> tuple[int, ...]:
        return table_points(self.field)

    def __add__(self, other: "FnTable") -> "FnTable":
        self._check(other)
        return FnTable(self.field, self.n, self.values + other.values)

    def __sub__(self, other: "FnTable") -> "FnTable":
        self._check(other)
        return FnTable(self.field, self.n, self.values - other.values)

    def scale(self, a: int) -> "FnTable":
        return FnTable(self.field, self.n, a * self.values)

    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FnTable)
            and self.field is other.field
            and self.n == other.n
            and bool(np.array_equal(self.values, other.values))
        )

    def flatten(self) -> np.ndarray:
        """Row-major flattening (a_0, b_0, a_1, b_1, ...) of length 2(q-2)."""
        return self.values.reshape(-1)

    def _check(self, other: "FnTable") -> None:
        if self.field is not other.field or self.n != other.n:
            raise ModulusError("tables live on different fields/moduli")


def zero_table(field: FqField, n: int) -> FnTable:
    return FnTable(field, n, np.zeros((field.q - 2, 2), dtype=np.int64))


def _check_inputs(omega: RootOfUnity, *chars: KummerCharacter) -> None:
    field = omega.field
    for f in chars:
        if f.field is not field:
            raise ModulusError("character defined over a different field")
        if f.n != omega.order:
            raise ModulusError("character modulus differs from the root-of-unity order")


@lru_cache(maxsize=None)
def _dlog_arrays(field: FqField, n: int):
    pts = table_points(field)
    dx = np.array([field.dlog(x) for x in pts], dtype=np.int64) % n
    dy = np.array([field.dlog(field.one_minus(x)) for x in pts], dtype=np.int64) % n
    return dx, dy


def phi(f: KummerCharacter, g: KummerCharacter, omega: RootOfUnity) -> FnTable:
    """The table x -> (f(x)g(1-x) - f(1-x)g(x), f(x)g(omega) - f(omega)g(x))."""
    _check_inputs(omega, f, g)
    field, n = omega.field, omega.order
    dx, dy = _dlog_arrays(field, n)
    dw = field.dlog(omega.element) % n
    fx, fy, fw = (f.c * dx) % n, (f.c * dy) % n, (f.c * dw) % n
    gx, gy, gw = (g.c * dx) % n, (g.c * dy) % n, (g.c * dw) % n
    col1 = fx * gy - fy * gx
    col2 = fx * gw - fw * gx
    return FnTable(field, n, np.stack([col1, col2], axis=1))


def psi(f: KummerCharacter, omega: RootOfUnity) -> FnTable:
    """The table x -> (C(n,2) f(x)f(1-x), C(n,2) f(x)f(omega) + f(x))."""
    _check_inputs(omega, f)
    field, n = omega.field, omega.order
    b2 = binom2(n).value
    dx, dy = _dlog_arrays(field, n)
    fx, fy = (f.c * dx) % n, (f.c * dy) % n
    fw = (f.c * (field.dlog(omega.element) % n)) % n
    col1 = b2 * fx * fy
    col2 = b2 * fx * fw + fx
    return FnTable(field, n, np.stack([col1, col2], axis=1))


@dataclass(frozen=True)
class FfrakGroup:
    """The subgroup generated by all pair tables and power tables."""

    field: FqField
    omega: RootOfUnity
    generators: tuple[FnTable, ...]  # the distinct generator tables
    subgroup: SubgroupZnk  # flattened, ambient rank 2(q-2)
    structure: AbelianStructure


def ffrak_generate(field: FqField, omega: RootOfUnity) -> FfrakGroup:
    """Span of the n^2 pair tables and n power tables over all characters."""
    if omega.field is not field:
        raise ModulusError("root of unity belongs to a different field")
    n = omega.order
    if (field.q - 1) % n != 0:
        raise HypothesisError(f"mu_{n} not contained in F_{field.q}")
    chars = characters(field)
    distinct: dict[bytes, FnTable] = {}
    for f in chars:
        for g in chars:
            t = phi(f, g, omega)
            distinct.setdefault(t.values.tobytes(), t)
    for f in chars:
        t = psi(f, omega)
        distinct.setdefault(t.values.tobytes(), t)
    gens = tuple(t for t in distinct.values() if not t.is_zero()) or (zero_table(field, n),)
    flat = np.stack([t.flatten() for t in gens])
    sub = modring.canonicalize(ModMatrix(n, flat))
    return FfrakGroup(
        field=field,
        omega=omega,
        generators=gens,
        subgroup=sub,
        structure=modring.structure(sub),
    )


# --- formal words ----------------------------------------------------------


@dataclass(frozen=True)
class CommTerm:
    """coeff * (commutator of the pair of characters)."""

    sigma: KummerCharacter
    tau: KummerCharacter
    coeff: int = 1


@dataclass(frozen=True)
class PowTerm:
    """coeff * (n-th power image of the character)."""

    sigma: KummerCharacter
    coeff: int = 1


Term = Union[CommTerm, PowTerm]


@dataclass(frozen=True)
class FormalWord:
    """A formal Z-combination of commutator and power generators."""

    terms: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        mods = {t.sigma.n for t in self.terms}
        fields = {id(t.sigma.field) for t in self.terms}
        for t in self.terms:
            if isinstance(t, CommTerm):
                mods.add(t.tau.n)
                fields.add(id(t.tau.field))
        if len(mods) > 1 or len(fields) > 1:
            raise ModulusError("all characters in a word must share field and modulus")

    def restrict(self, emb: FieldEmbedding) -> "FormalWord":
        out: list[Term] = []
        for t in self.terms:
            if isinstance(t, CommTerm):
                out.append(CommTerm(restrict_character(emb, t.sigma), restrict_character(emb, t.tau), t.coeff))
            else:
                out.append(PowTerm(restrict_character(emb, t.sigma), t.coeff))
        return FormalWord(tuple(out))


def omega_eval(word: FormalWord, omega: RootOfUnity) -> FnTable:
    """Evaluate a formal word to its function table."""
    acc = zero_table(omega.field, omega.order)
    for t in word.terms:
        if isinstance(t, CommTerm):
            acc = acc + phi(t.sigma, t.tau, omega).scale(t.coeff)
        else:
            acc = acc + psi(t.sigma, omega).scale(t.coeff)
    return acc


# --- functoriality ---------------------------------------------------------


def compatible_omega(emb: FieldEmbedding, omega_l: RootOfUnity) -> RootOfUnity:
    """The root of unity of the subfield matching omega_l under the embedding."""
    elt = emb.preimage(omega_l.element)
    return RootOfUnity(field=emb.sub, element=elt, order=omega_l.order)


def restriction_check(
    sup: FqField,
    sub: FqField,
    words: Sequence[FormalWord],
    omega_l: RootOfUnity,
    omega_k: RootOfUnity | None = None,
) -> bool:
    """Check that table restriction commutes with character restriction.

    For each word: evaluating over the big field and restricting the table to
    the points of the subfield must agree with evaluating the character-wise
    restricted word over the subfield.  The two roots of unity must correspond
    under the embedding; ``omega_k`` defaults to the preimage of ``omega_l``.
    """
    if omega_l.field is not sup:
        raise ModulusError("omega_l must live in the big field")
    emb = embed_field(sub, sup)
    derived = compatible_omega(emb, omega_l)
    if omega_k is None:
        omega_k = derived
    elif omega_k.element != derived.element or omega_k.order != derived.order:
        raise HypothesisError("omega of the subfield is not the preimage of omega of the big field")

    pts_l = table_points(sup)
    index_l = {x: i for i, x in enumerate(pts_l)}
    pts_k = table_points(sub)
    for word in words:
        big = omega_eval(word, omega_l)
        small = omega_eval(word.restrict(emb), omega_k)
        restricted = np.stack([big.values[index_l[emb(x)]] for x in pts_k])
        if not np.array_equal(restricted, small.values):
            return False
    return True


# --- span of the standard kernel classes (rank-1 field case) ---------------


def kernel_class_span(field: FqField, omega: RootOfUnity) -> SubgroupZnk:
    """Span in H^2 of the rank-1 character lattice of the standard classes.

    For a finite field the character group of K^x mod n is cyclic, so H^2 of
    it is cyclic of order n with the Bockstein of the dual generator as basis.
    The two class families attached to each x in K \\ {0,1} reduce, in that
    basis, to the coefficients below; the span should be everything.
    """
    n = omega.order
    b2 = binom2(n).value
    dw = field.dlog(omega.element) % n
    coeffs = set()
    for x in table_points(field):
        dx = field.dlog(x) % n
        dy = field.dlog(field.one_minus(x)) % n
        coeffs.add((b2 * dx * dy) % n)  # x-class cup (1-x)-class
        coeffs.add((b2 * dx * dw + dx) % n)  # x-class cup omega-class + Bockstein
    rows = [[c] for c in sorted(coeffs)]
    return modring.canonicalize(ModMatrix.from_rows(rows, n, cols=1))
