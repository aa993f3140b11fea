"""Finite fields F_q with discrete logs, roots of unity and Kummer characters.

Elements of F_{p^k} are encoded as integers in [0, q): the encoding of
sum c_i X^i is sum c_i p^i, so prime-field elements are just themselves.
Discrete logs are precomputed as a full table for q <= 2^20 and computed
by baby-step giant-step above that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np
from sympy import isprime

from .errors import DomainError, HypothesisError, ModulusError

DLOG_TABLE_MAX = 2**20
FIELD_MAX = 2**26  # hard cap; generator search enumerates all elements


def _factor(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod_poly: Sequence[int], p: int) -> list[int]:
    k = len(mod_poly) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo the monic mod_poly
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * mod_poly[j]) % p
    return prod[:k] + [0] * max(0, k - len(prod))


def _poly_powmod(base: Sequence[int], e: int, mod_poly: Sequence[int], p: int) -> list[int]:
    k = len(mod_poly) - 1
    result = [1] + [0] * (k - 1)
    base = list(base[:k]) + [0] * max(0, k - len(base))
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod_poly, p)
        base = _poly_mulmod(base, base, mod_poly, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    def deg(f):
        for i in range(len(f) - 1, -1, -1):
            if f[i]:
                return i
        return -1

    while deg(b) >= 0:
        da, db = deg(a), deg(b)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[deg(b)], -1, p)
        while deg(a) >= deg(b):
            shift = deg(a) - deg(b)
            c = (a[deg(a)] * inv) % p
            for i in range(deg(b) + 1):
                a[i + shift] = (a[i + shift] - c * b[i]) % p
        a, b = b, a
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    k = len(poly) - 1
    if k < 1 or poly[-1] != 1:
        return False
    if k == 1:
        return True
    mod_poly = list(poly)
    x = [0, 1] + [0] * (k - 2)
    frob = x
    for _ in range(k):
        frob = _poly_powmod(frob, p, mod_poly, p)
    if frob != x:
        return False
    for r in _factor(k):
        frob_r = x
        for _ in range(k // r):
            frob_r = _poly_powmod(frob_r, p, mod_poly, p)
        diff = [(a - b) % p for a, b in zip(frob_r, x)]
        g = _poly_gcd(list(mod_poly), diff, p)
        deg_g = max((i for i, c in enumerate(g) if c), default=-1)
        if deg_g != 0:
            return False
    return True


@dataclass(frozen=True, eq=False)
class FqField:
    """The field F_{p^k}, with a verified multiplicative generator."""

    p: int
    k: int
    n: int
    poly: Optional[tuple[int, ...]]  # monic defining polynomial, None for k == 1
    generator: int

    @property
    def q(self) -> int:
        return self.p**self.k

    # --- element arithmetic -------------------------------------------------

    def _decode(self, x: int) -> list[int]:
        coeffs = []
        for _ in range(self.k):
            coeffs.append(x % self.p)
            x //= self.p
        return coeffs

    def _encode(self, coeffs: Sequence[int]) -> int:
        x = 0
        for c in reversed(list(coeffs)):
            x = x * self.p + (c % self.p)
        return x

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        ca, cb = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._encode([(-c) % self.p for c in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        return self._encode(_poly_mulmod(self._decode(a), self._decode(b), list(self.poly), self.p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("0 is not invertible")
        return self.exp((self.q - 1 - self.dlog(a)) % (self.q - 1))

    def one_minus(self, x: int) -> int:
        return self.sub(1, x)

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    # --- discrete logarithms ------------------------------------------------

    @cached_property
    def _tables(self):
        if self.q > DLOG_TABLE_MAX:
            return None
        exp = np.zeros(self.q - 1, dtype=np.int64)
        dlog = np.full(self.q, -1, dtype=np.int64)
        acc = 1
        for i in range(self.q - 1):
            exp[i] = acc
            dlog[acc] = i
            acc = self.mul(acc, self.generator)
        if acc != 1:
            raise RuntimeError("generator order verification failed")
        return exp, dlog

    def exp(self, i: int) -> int:
        """generator**i."""
        i %= self.q - 1
        if self._tables is not None:
            return int(self._tables[0][i])
        return self.pow(self.generator, i)

    def dlog(self, x: int) -> int:
        """i in [0, q-1) with generator**i == x; x must be nonzero."""
        if x == 0:
            raise DomainError("dlog of 0 is undefined")
        if not 0 < x < self.q:
            raise DomainError(f"element {x} outside field of order {self.q}")
        if self._tables is not None:
            return int(self._tables[1][x])
        return self._dlog_bsgs(x)

    def _dlog_bsgs(self, x: int) -> int:
        m = math.isqrt(self.q - 2) + 1
        baby = {}
        acc = x
        for j in range(m):
            baby[acc] = j
            acc = self.mul(acc, self.generator)
        giant = self.pow(self.generator, m)
        acc = 1
        for i in range(m + 1):
            if acc in baby:
                return (i * m - baby[acc]) % (self.q - 1)
            acc = self.mul(acc, giant)
        raise RuntimeError("baby-step giant-step failed; generator invalid?")

    # --- misc ---------------------------------------------------------------

    def element_label(self, x: int) -> str:
        if self.k == 1:
            return str(x)
        return "+".join(f"{c}*X^{i}" for i, c in enumerate(self._decode(x)) if c) or "0"

    def descriptor(self) -> dict:
        poly = list(self.poly) if self.poly is not None else [(-1) % self.p, 1]
        return {"p": self.p, "k": self.k, "poly": poly, "n": self.n, "generator": self.generator}


def make_field(p: int, k: int = 1, poly: Optional[Sequence[int]] = None, n: int = 2) -> FqField:
    """Construct F_{p^k} with a verified generator and Kummer hypothesis n | q-1."""
    if n < 2:
        raise ModulusError(f"modulus must be >= 2, got {n}")
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError("degree must be >= 1")
    q = p**k
    if q > FIELD_MAX:
        raise DomainError(f"field of order {q} exceeds the supported bound {FIELD_MAX}")
    if n % p == 0:
        raise HypothesisError(f"n = {n} is not prime to the characteristic {p}")
    if (q - 1) % n != 0:
        raise HypothesisError(f"mu_{n} not contained in F_{q}: {n} does not divide {q - 1}")

    if k == 1:
        poly_t: Optional[tuple[int, ...]] = None
    else:
        if poly is not None:
            if len(poly) != k + 1 or poly[-1] % p != 1:
                raise DomainError("defining polynomial must be monic of degree k")
            poly_t = tuple(int(c) % p for c in poly)
            if not is_irreducible(list(poly_t), p):
                raise DomainError(f"polynomial {list(poly_t)} is reducible over F_{p}")
        else:
            poly_t = None
            for code in range(p**k):
                cand = []
                c = code
                for _ in range(k):
                    cand.append(c % p)
                    c //= p
                cand.append(1)
                if is_irreducible(cand, p):
                    poly_t = tuple(cand)
                    break
            if poly_t is None:
                raise RuntimeError("no irreducible polynomial found")

    probe = FqField(p=p, k=k, n=n, poly=poly_t, generator=1)
    factors = _factor(q - 1)
    gen = None
    for g in range(2, q):
        if all(probe.pow(g, (q - 1) // r) != 1 for r in factors):
            gen = g
            break
    if gen is None:
        raise RuntimeError("no multiplicative generator found")
    field = FqField(p=p, k=k, n=n, poly=poly_t, generator=gen)
    field._tables  # build and verify the dlog table eagerly at desk scale
    return field


@dataclass(frozen=True)
class RootOfUnity:
    """A verified primitive n-th root of unity in K."""

    field: FqField
    element: int
    order: int


def omega(field: FqField, n: int, index: int = 1) -> RootOfUnity:
    """The primitive n-th root generator**(index*(q-1)/n); index must be a unit mod n."""
    q = field.q
    if (q - 1) % n != 0:
        raise HypothesisError(f"mu_{n} not contained in F_{q}")
    if math.gcd(index, n) != 1:
        raise DomainError(f"index {index} is not a unit mod {n}")
    elt = field.exp((index * (q - 1) // n) % (q - 1))
    for r in _factor(n):
        if field.pow(elt, n // r) == 1:
            raise RuntimeError("root of unity is not primitive")
    if field.pow(elt, n) != 1:
        raise RuntimeError("root of unity has wrong order")
    return RootOfUnity(field=field, element=elt, order=n)


@dataclass(frozen=True)
class KummerCharacter:
    """Homomorphism K^x -> Z/n determined by its value c on the fixed generator."""

    field: FqField
    n: int
    c: int

    def __post_init__(self):
        if (self.field.q - 1) % self.n != 0:
            raise HypothesisError("character modulus must divide q-1")
        object.__setattr__(self, "c", self.c % self.n)

    def __call__(self, x: int) -> int:
        return char_eval(self, x)

    def __add__(self, other: "KummerCharacter") -> "KummerCharacter":
        if other.field is not self.field or other.n != self.n:
            raise ModulusError("characters live on different fields/moduli")
        return KummerCharacter(self.field, self.n, self.c + other.c)

    def scale(self, a: int) -> "KummerCharacter":
        return KummerCharacter(self.field, self.n, a * self.c)


def char_eval(f: KummerCharacter, x: int) -> int:
    """f(x) = c * dlog(x) mod n; x must be a unit."""
    if x == 0:
        raise DomainError("characters are defined on K^x only")
    return (f.c * f.field.dlog(x)) % f.n


def characters(field: FqField) -> list[KummerCharacter]:
    """All n characters of K^x with values in Z/n (the finite character space)."""
    return [KummerCharacter(field, field.n, c) for c in range(field.n)]


@dataclass(frozen=True)
class FieldEmbedding:
    """The embedding K -> L sending g_K to g_L^((q_L-1)/(q_K-1))."""

    sub: FqField
    sup: FqField
    exponent: int

    def __call__(self, x: int) -> int:
        if x == 0:
            return 0
        return self.sup.exp(self.exponent * self.sub.dlog(x))

    def preimage(self, y: int) -> int:
        """The x in K with embed(x) == y; raises when y is outside the image."""
        if y == 0:
            return 0
        qs, ql = self.sub.q, self.sup.q
        target = self.sup.dlog(y)
        g = math.gcd(self.exponent, ql - 1)
        if target % g:
            raise DomainError("element is not in the embedded subfield")
        d = (target // g) * pow(self.exponent // g, -1, (ql - 1) // g) % ((ql - 1) // g)
        x = self.sub.exp(d % (qs - 1))
        if self(x) != y:
            raise DomainError("element is not in the embedded subfield")
        return x


def embed_field(sub: FqField, sup: FqField) -> FieldEmbedding:
    """Construct and verify a field embedding of ``sub`` into ``sup``.

    The generator g_K must map to an element of order q_K - 1, i.e. to
    g_L^(u * (q_L-1)/(q_K-1)) for a unit u mod q_K - 1; among those
    multiplicative maps, exactly the field embeddings are additive.  The
    smallest working u is chosen, which makes the embedding deterministic.
    """
    if sub.p != sup.p or sup.k % sub.k != 0:
        raise DomainError(f"F_{sub.q} does not embed into F_{sup.q}")
    e = (sup.q - 1) // (sub.q - 1)
    order = sub.q - 1
    for u in range(1, order + 1):
        if math.gcd(u, order) != 1:
            continue
        emb = FieldEmbedding(sub=sub, sup=sup, exponent=e * u)
        if all(
            emb(sub.add(a, b)) == sup.add(emb(a), emb(b))
            for a in sub.elements()
            for b in sub.elements()
        ):
            return emb
    raise RuntimeError("no additive embedding found; field construction is broken")


def restrict_character(emb: FieldEmbedding, f: KummerCharacter) -> KummerCharacter:
    """The character of K^x obtained by composing f with the embedding K -> L."""
    if f.field is not emb.sup:
        raise DomainError("character does not live on the target field of the embedding")
    # f(embed(x)) = c * e * dlog_K(x), so the restriction has value c*e on g_K.
    return KummerCharacter(emb.sub, f.n, f.c * emb.exponent)
