"""Linear algebra over Z/n.

The canonical form used throughout is the Howell row form, which (unlike
plain echelon form over a non-field ring) supports exact span membership:
every element of the row module whose leading nonzero entry sits in column
>= j lies in the span of the canonical rows with pivot column >= j.

Conventions making canonical forms byte-comparable:

* pivot entries are the minimal positive generator of the pivot ideal,
  i.e. a divisor of n;
* entries above a pivot d are reduced into [0, d);
* rows are sorted by pivot column ascending.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

from .errors import DimensionError, ModulusError

MAX_MODULUS = 2**31 - 1


@dataclass(frozen=True)
class Residue:
    """An element of Z/n, kept reduced into [0, n)."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2 or self.modulus > MAX_MODULUS:
            raise ModulusError(f"modulus must be in [2, 2^31-1], got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "Residue":
        if isinstance(other, int):
            return Residue(other, self.modulus)
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusError("mixed moduli")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __int__(self):
        return self.value


def binom2(n: int) -> Residue:
    """n*(n-1)/2 reduced mod n (the coefficient in the power formulas)."""
    if n < 2:
        raise ModulusError(f"modulus must be >= 2, got {n}")
    return Residue(n * (n - 1) // 2, n)


@dataclass(frozen=True)
class ModMatrix:
    """Dense matrix over Z/n; entries stored reduced in a numpy array."""

    modulus: int
    entries: np.ndarray  # shape (rows, cols), dtype int64

    def __post_init__(self):
        if self.modulus < 2 or self.modulus > MAX_MODULUS:
            raise ModulusError(f"modulus must be in [2, 2^31-1], got {self.modulus}")
        arr = np.asarray(self.entries, dtype=np.int64) % self.modulus
        if arr.ndim != 2:
            raise DimensionError("matrix entries must be 2-dimensional")
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int, cols: Optional[int] = None) -> "ModMatrix":
        if len(rows) == 0:
            if cols is None:
                raise DimensionError("column count required for an empty matrix")
            return cls(modulus, np.zeros((0, cols), dtype=np.int64))
        return cls(modulus, np.array(rows, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, ModMatrix)
            and self.modulus == other.modulus
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )


@dataclass(frozen=True)
class SubgroupZnk:
    """A subgroup of (Z/n)^k given by generators and a Howell canonical form."""

    modulus: int
    ambient_rank: int
    generators: ModMatrix
    canonical: ModMatrix


@dataclass(frozen=True)
class AbelianStructure:
    """Invariant factors d_1 | d_2 | ... | d_r of a finite abelian group."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors)
        for a, b in zip(facs, facs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors must form a divisibility chain: {facs}")
        if any(d < 2 for d in facs):
            raise ValueError(f"invariant factors must be >= 2: {facs}")
        object.__setattr__(self, "invariant_factors", facs)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors) if self.invariant_factors else 1


def _gcdex(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b = g = gcd(a, b), computed over Z."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _unit_scale(a: int, n: int) -> tuple[int, int]:
    """(d, u) with d = gcd(a, n) and u a unit mod n such that u*a = d mod n."""
    a %= n
    d = math.gcd(a, n)
    if a == d:
        return d, 1
    e, f = a // d, n // d
    # gcd(e, f) = 1, so e is invertible mod f; lift the inverse to a unit mod n.
    u0 = pow(e, -1, f)
    u = u0
    while math.gcd(u, n) != 1:
        u += f
    return d, u % n


def _first_nonzero(v: np.ndarray) -> int:
    nz = np.flatnonzero(v)
    return int(nz[0]) if nz.size else -1


def _howell_basis(rows, n: int) -> dict[int, np.ndarray]:
    """Howell basis as a map pivot column -> row, not yet normalized."""
    basis: dict[int, np.ndarray] = {}
    stack = [np.asarray(r, dtype=np.int64) % n for r in rows]
    stack = [r for r in stack if r.any()]

    def push_annihilator(row: np.ndarray, j: int) -> None:
        a = n // math.gcd(int(row[j]), n)
        if a % n:
            ann = (a * row) % n
            if ann.any():
                stack.append(ann)

    while stack:
        v = stack.pop()
        while True:
            j = _first_nonzero(v)
            if j < 0:
                break
            if j not in basis:
                basis[j] = v
                push_annihilator(v, j)
                break
            w = basis[j]
            a, b = int(w[j]), int(v[j])
            g, s, t = _gcdex(a, b)
            u, vv = -(b // g), a // g
            new_w = (s * w + t * v) % n
            new_v = (u * w + vv * v) % n
            if int(new_w[j]) != a:
                # Pivot ideal grew; its annihilator row may be new.
                push_annihilator(new_w, j)
            basis[j] = new_w
            v = new_v
    return basis


def _normalize_basis(basis: dict[int, np.ndarray], n: int) -> list[np.ndarray]:
    pivots = sorted(basis)
    rows = []
    for j in pivots:
        d, u = _unit_scale(int(basis[j][j]), n)
        rows.append((u * basis[j]) % n)
    # Reduce entries above each pivot into [0, pivot).
    for bi, j in enumerate(pivots):
        d = int(rows[bi][j])
        for ai in range(bi):
            q = int(rows[ai][j]) // d
            if q:
                rows[ai] = (rows[ai] - q * rows[bi]) % n
    return rows


def howell_form(mat: ModMatrix) -> ModMatrix:
    """Canonical Howell row form spanning the same row module as ``mat``."""
    rows = _normalize_basis(_howell_basis(list(mat.entries), mat.modulus), mat.modulus)
    if not rows:
        return ModMatrix(mat.modulus, np.zeros((0, mat.cols), dtype=np.int64))
    return ModMatrix(mat.modulus, np.stack(rows))


def canonicalize(gens: ModMatrix) -> SubgroupZnk:
    """Subgroup of (Z/n)^k spanned by the rows of ``gens``."""
    return SubgroupZnk(
        modulus=gens.modulus,
        ambient_rank=gens.cols,
        generators=gens,
        canonical=howell_form(gens),
    )


def _reduce_against(canonical: np.ndarray, v: np.ndarray, n: int):
    """Reduce v by canonical Howell rows; returns (remainder, coefficients)."""
    coeffs = np.zeros(canonical.shape[0], dtype=np.int64)
    v = v.copy() % n
    for i in range(canonical.shape[0]):
        row = canonical[i]
        j = _first_nonzero(row)
        d = int(row[j])
        val = int(v[j])
        if val == 0:
            continue
        if val % d != 0:
            return v, None
        q = val // d
        v = (v - q * row) % n
        coeffs[i] = q
    return v, coeffs


def membership(s: SubgroupZnk, v: Sequence[int]) -> bool:
    """True iff v lies in the span of the subgroup's generators mod n."""
    vec = np.asarray(v, dtype=np.int64)
    if vec.shape != (s.ambient_rank,):
        raise DimensionError(f"vector length {vec.shape} != ambient rank {s.ambient_rank}")
    rem, _ = _reduce_against(s.canonical.entries, vec, s.modulus)
    return not rem.any()


def _left_kernel(mat: np.ndarray, n: int) -> np.ndarray:
    """Rows x with x @ mat = 0 mod n, as a Howell basis (shape (*, mat.rows))."""
    m = mat.shape[0]
    aug = np.hstack([mat % n, np.eye(m, dtype=np.int64)])
    h = _normalize_basis(_howell_basis(list(aug), n), n)
    kernel = [row[mat.shape[1]:] for row in h if not row[: mat.shape[1]].any()]
    if not kernel:
        return np.zeros((0, m), dtype=np.int64)
    return np.stack(kernel)


def nullspace(mat: ModMatrix) -> ModMatrix:
    """Howell basis of {x : mat @ x = 0 mod n} (rows are kernel vectors)."""
    ker = _left_kernel(mat.entries.T, mat.modulus)
    return ModMatrix(mat.modulus, ker)


def structure(s: SubgroupZnk) -> AbelianStructure:
    """Invariant factors of the subgroup as a finite abelian group.

    Computed from the Smith normal form (over Z) of the relation lattice of
    the canonical generators, which contains n*Z^r.
    """
    basis = s.canonical.entries
    r = basis.shape[0]
    if r == 0:
        return AbelianStructure(())
    rel_mod = _left_kernel(basis, s.modulus)
    rel = np.vstack([rel_mod, s.modulus * np.eye(r, dtype=np.int64)])
    snf = smith_normal_form(Matrix(rel.tolist()))
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    factors = tuple(d for d in diag if d > 1)
    return AbelianStructure(factors)


def solve_linear(a: ModMatrix, b: Sequence[int]) -> Optional[np.ndarray]:
    """Some x with a @ x = b mod n, or None when no solution exists.

    Any returned solution is re-verified by substitution.
    """
    vec = np.asarray(b, dtype=np.int64) % a.modulus
    if vec.shape != (a.rows,):
        raise DimensionError(f"rhs length {vec.shape} != row count {a.rows}")
    n = a.modulus
    m = a.cols  # unknowns
    if m == 0:
        return np.zeros(0, dtype=np.int64) if not vec.any() else None
    # b is in the column span of a iff b^T is in the row span of a^T; track
    # the combination coefficients through the augmented Howell form.
    aug = np.hstack([a.entries.T % n, np.eye(m, dtype=np.int64)])
    h = _normalize_basis(_howell_basis(list(aug), n), n)
    span_rows = [row for row in h if row[: a.rows].any()]
    if not span_rows:
        return np.zeros(m, dtype=np.int64) if not vec.any() else None
    # Reduce the augmented vector; the right block accumulates -x.
    v = np.concatenate([vec, np.zeros(m, dtype=np.int64)])
    for row in span_rows:
        j = _first_nonzero(row[: a.rows])
        if j < 0:
            continue
        d = int(row[j])
        val = int(v[j])
        if val == 0 or val % d != 0:
            continue
        v = (v - (val // d) * row) % n
    if v[: a.rows].any():
        return None
    x = (-v[a.rows:]) % n
    if not np.array_equal((a.entries @ x) % n, vec):
        return None
    return x
