"""Exact arithmetic in F_q for q = p^k.

Field elements are plain ints in [0, q). The base-p digits of the integer
are the coefficients of the residue polynomial, constant term least
significant; for prime fields (k = 1) this is just arithmetic mod p. One
integer encoding for every q means point files look the same on disk
whether the field is F_5 or F_4.

For q <= 2^16 a discrete log/antilog table pair is built at construction,
so extension-field mul/inv are two lookups. Larger q falls back to direct
polynomial arithmetic.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import (
    DegreeMismatchError,
    DimensionMismatchError,
    NotPrimeError,
    ReducibleModulusError,
)

TABLE_LIMIT = 1 << 16

Point = tuple  # d-tuple of element encodings


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomial helpers (coefficient lists over F_p, constant term first) --


def _digits(e: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        e, r = divmod(e, p)
        out.append(r)
    return out


def _undigits(coeffs, p: int) -> int:
    e = 0
    for c in reversed(coeffs):
        e = e * p + c
    return e


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_divmod(num: list[int], den: list[int], p: int):
    """Quotient and remainder in F_p[x]; den must be nonzero."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    quot = [0] * max(len(num) - dd, 0)
    for shift in range(len(num) - dd - 1, -1, -1):
        factor = (num[shift + dd] * inv_lead) % p
        quot[shift] = factor
        if factor:
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * c) % p
    return _trim(quot), _trim(num)


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    _, rem = _poly_divmod(prod, modulus, p)
    return rem


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for enc in range(p**deg):
            divisor = _digits(enc, p, deg) + [1]
            _, rem = _poly_divmod(poly, divisor, p)
            if not rem:
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Monic degree-k polynomials are ordered by their non-leading coefficient
    tuple read most-significant first, which is the natural order of the
    integer encodings 0 .. p^k - 1.
    """
    for enc in range(p**k):
        candidate = _digits(enc, p, k) + [1]
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """Arithmetic context for F_q, q = p^k; immutable once constructed.

    All operations are pure, so one context can be shared freely across
    worker threads or processes.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            if modulus is not None:
                mod = [c % p for c in modulus]
                if len(mod) != 2 or mod[-1] != 1:
                    raise DegreeMismatchError("modulus must be monic of degree 1")
                self.modulus = tuple(mod)
            else:
                self.modulus = (0, 1)  # the identity polynomial x
        else:
            if modulus is None:
                mod = _smallest_irreducible(p, k)
            else:
                mod = [c % p for c in modulus]
                if len(_trim(list(mod))) != k + 1 or mod[-1] != 1:
                    raise DegreeMismatchError(
                        f"modulus must be monic of degree {k} over F_{p}"
                    )
                if not _is_irreducible(mod, p):
                    raise ReducibleModulusError(
                        f"modulus {tuple(mod)} factors over F_{p}"
                    )
            self.modulus = tuple(mod)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.k > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers --

    def _mul_poly(self, a: int, b: int) -> int:
        pa = _digits(a, self.p, self.k)
        pb = _digits(b, self.p, self.k)
        return _undigits(_poly_mulmod(pa, pb, list(self.modulus), self.p), self.p)

    def _build_tables(self) -> None:
        """Find a multiplicative generator and fill log/antilog tables."""
        q = self.q
        for g in range(2, q):
            exp = [1]
            x = 1
            while True:
                x = self._mul_poly(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                self._exp = exp + exp  # doubled: no mod needed for log sums
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                self._log = log
                return
        raise AssertionError("no generator found; field construction is broken")

    # -- element operations --

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def dot(self, u, v) -> int:
        """Bilinear form sum_i u_i * v_i over F_q."""
        if len(u) != len(v):
            raise DimensionMismatchError(f"dimensions {len(u)} and {len(v)} differ")
        if self.k == 1:
            return sum(a * b for a, b in zip(u, v)) % self.p
        acc = 0
        for a, b in zip(u, v):
            acc = self.add(acc, self.mul(a, b))
        return acc

    # -- encoding helpers --

    def element_to_coeffs(self, a: int) -> tuple:
        return tuple(_digits(a, self.p, self.k))

    def coeffs_to_element(self, coeffs) -> int:
        return _undigits([c % self.p for c in coeffs], self.p)

    def elements(self) -> range:
        return range(self.q)

    # -- vectorized tables for the counting kernels (built on demand) --

    @cached_property
    def np_exp(self) -> np.ndarray:
        if self._exp is None:
            raise ValueError(f"no tables for q={self.q} > {TABLE_LIMIT}")
        return np.asarray(self._exp, dtype=np.int64)

    @cached_property
    def np_log(self) -> np.ndarray:
        if self._log is None:
            raise ValueError(f"no tables for q={self.q} > {TABLE_LIMIT}")
        return np.asarray(self._log, dtype=np.int64)

    @cached_property
    def np_digits(self) -> np.ndarray:
        """q x k array: base-p digits of every element encoding."""
        out = np.empty((self.q, self.k), dtype=np.int64)
        for e in range(self.q):
            out[e] = _digits(e, self.p, self.k)
        return out

    @cached_property
    def np_powers(self) -> np.ndarray:
        return np.asarray([self.p**i for i in range(self.k)], dtype=np.int64)

    def vec_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise field multiplication of encoding arrays (k > 1)."""
        la = self.np_log[a]
        lb = self.np_log[b]
        out = self.np_exp[la + lb]
        return np.where((a == 0) | (b == 0), 0, out)

    def vec_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise field addition of encoding arrays (k > 1)."""
        if self.p == 2:
            return a ^ b
        d = (self.np_digits[a] + self.np_digits[b]) % self.p
        return d @ self.np_powers

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.k}, modulus={list(self.modulus)})"
