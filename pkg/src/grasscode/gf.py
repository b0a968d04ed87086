"""Arithmetic in GF(q) for prime powers q = p^e with q <= 256.

Field elements are plain Python integers in [0, q).  The base-p digits of
an element are the coefficients of its polynomial representative, so for
GF(4) with modulus x^2 + x + 1 the element 2 is x and 3 is x + 1.  A
``Field`` instance owns full lookup tables (addition, multiplication,
negation, inversion) as numpy arrays, which makes both scalar arithmetic
and vectorized linear algebra exact and fast.

The modulus of an extension field is chosen deterministically: the monic
irreducible polynomial of degree e over GF(p) whose non-leading
coefficient vector, read as a base-p integer, is smallest.  Irreducibility
is certified by trial division against all monic polynomials of degree at
most e/2.
"""

from __future__ import annotations

import functools

import numpy as np

MAX_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- polynomial helpers over GF(p), coefficients little-endian tuples --------


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mulmod(a: tuple[int, ...], b: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(tuple(out), mod, p)


def _poly_rem(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    dm = len(mod) - 1
    lead_inv = pow(mod[dm], p - 2, p)
    while len(a) > dm:
        factor = (a[-1] * lead_inv) % p
        off = len(a) - 1 - dm
        if factor:
            for i, mi in enumerate(mod):
                a[off + i] = (a[off + i] - factor * mi) % p
        a.pop()
        while a and a[-1] == 0 and len(a) > dm:
            a.pop()
    return _poly_trim(tuple(a))


def _monic_polys(degree: int, p: int):
    for k in range(p**degree):
        coeffs = []
        v = k
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    e = len(poly) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for div in _monic_polys(d, p):
            if not _poly_rem(poly, div, p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for poly in _monic_polys(e, p):
        if _is_irreducible(poly, p):
            return poly
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


class Field:
    """GF(p^e) with table-backed arithmetic on integer-encoded elements.

    Attributes
    ----------
    p, e, q : int
        Characteristic, extension degree, and order q = p^e.
    modulus : tuple[int, ...]
        Coefficients (constant term first) of the monic degree-e modulus.
    add_table, mul_table : numpy arrays of shape (q, q)
    neg_table, inv_table : numpy arrays of shape (q,)
        ``inv_table[0]`` is a sentinel 0; use :meth:`inv` for checked access.
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds supported maximum {MAX_ORDER}")

        if modulus is None:
            modulus = _smallest_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[e] != 1:
                raise ValueError("modulus must be monic of degree e")
            if e > 1 and not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.e = e
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # -- encoding -------------------------------------------------------

    def _digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _encode(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + int(d)
        return v

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q

        digits = np.zeros((q, e), dtype=np.int64)
        for a in range(q):
            digits[a] = self._digits(a)
        powers = p ** np.arange(e, dtype=np.int64)

        summed = (digits[:, None, :] + digits[None, :, :]) % p
        self.add_table = (summed @ powers).astype(np.int16)
        self.neg_table = (((-digits) % p) @ powers).astype(np.int16)
        self.sub_table = self.add_table[:, self.neg_table]

        # Multiplication through a discrete log over a generator of the
        # multiplicative group; exact for every prime power q <= 256.
        gen, exp = self._find_generator()
        log = np.zeros(q, dtype=np.int64)
        for i, v in enumerate(exp):
            log[v] = i
        self.mul_table = np.zeros((q, q), dtype=np.int16)
        nz = np.arange(1, q)
        idx = (log[nz][:, None] + log[nz][None, :]) % (q - 1)
        self.mul_table[1:, 1:] = np.asarray(exp, dtype=np.int16)[idx]
        self.inv_table = np.zeros(q, dtype=np.int16)
        self.inv_table[exp] = np.asarray(exp, dtype=np.int16)[(-log[exp]) % (q - 1)]
        self._generator = gen

    def _mul_scalar_poly(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self._digits(a), self._digits(b), self.modulus, self.p)
        return self._encode(prod + (0,) * (self.e - len(prod)))

    def _find_generator(self) -> tuple[int, list[int]]:
        target = self.q - 1
        for g in range(1, self.q):
            exp = []
            v = 1
            for _ in range(target):
                exp.append(v)
                v = self._mul_scalar_poly(v, g)
            if v == 1 and len(set(exp)) == target:
                return g, exp
        raise RuntimeError("no multiplicative generator found")  # pragma: no cover

    # -- scalar operations ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    def validate(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return int(a)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        poly = "+".join(
            f"{'' if c == 1 or i == 0 else c}{'x' if i else str(c)}{'^' + str(i) if i > 1 else ''}"
            for i, c in reversed(list(enumerate(self.modulus)))
            if c
        )
        return f"GF({self.q})[{poly}]"


def field_new(p: int, e: int = 1) -> Field:
    """Field of order p^e with the deterministically chosen modulus."""
    return Field(p, e)


@functools.lru_cache(maxsize=None)
def field_from_order(q: int) -> Field:
    """Field of order q; rejects q that is not a prime power <= 256."""
    if q < 2 or q > MAX_ORDER:
        raise ValueError(f"field order must be in [2, {MAX_ORDER}], got {q}")
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            e = 0
            v = q
            while v % p == 0:
                v //= p
                e += 1
            if v != 1:
                raise ValueError(f"{q} is not a prime power")
            return Field(p, e)
    raise ValueError(f"{q} is not a prime power")
