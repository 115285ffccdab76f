"""Exact arithmetic in small finite fields via stored tables.

Elements are plain ints.  F_{p^e} encodes an element as its coefficient
vector over the prime field in base p (low digit = constant term), reduced
against a fixed stored modulus per (p, e) so encodings are reproducible in
reports and golden files.  Extensions F_q[y]/(m(y)) reuse the scheme with
base-q digits and carry log/exp tables for fast multiplication.
"""

from __future__ import annotations

from functools import lru_cache

# Fixed moduli (Conway polynomials), coefficients low-to-high over F_p.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
}

_LOG_TABLE_LIMIT = 1 << 17


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class Fq:
    """The base coefficient field k = F_q, q = p^e, with full op tables."""

    def __init__(self, p: int, e: int):
        if (p, e) not in CONWAY:
            raise ValueError(f"no stored modulus for GF({p}^{e})")
        self.p = p
        self.e = e
        self.q = p**e
        self.order = self.q
        self.modulus = CONWAY[(p, e)]
        q = self.q
        self._add = [0] * (q * q)
        self._mul = [0] * (q * q)
        self._neg = [0] * q
        self._inv = [0] * q
        for a in range(q):
            da = self._digits(a)
            self._neg[a] = self._undigits([(-x) % p for x in da])
            for b in range(q):
                db = self._digits(b)
                self._add[a * q + b] = self._undigits(
                    [(x + y) % p for x, y in zip(da, db)]
                )
                self._mul[a * q + b] = self._raw_mul(a, b)
        for a in range(1, q):
            # Fermat: a^(q-2) inverts a.
            acc, base, n = 1, a, q - 2
            while n:
                if n & 1:
                    acc = self._mul[acc * q + base]
                base = self._mul[base * q + base]
                n >>= 1
            self._inv[a] = acc
        # Inverse of Frobenius x -> x^p is x -> x^(p^(e-1)).
        self._frob_inv = [self.pow(a, p ** (e - 1)) for a in range(q)]

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**i) % p for i in range(self.e)]

    def _undigits(self, ds) -> int:
        p = self.p
        return sum(int(d) % p * p**i for i, d in enumerate(ds))

    def _raw_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1) if e > 1 else [0]
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return self._undigits(prod[:e])

    def add(self, a: int, b: int) -> int:
        return self._add[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a * self.q + self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a * self.q + b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        acc, base = 1, a
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def frob_inv(self, a: int) -> int:
        """The unique b with b^p = a."""
        return self._frob_inv[a]

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_of_order(q: int) -> Fq:
    fac = _factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return Fq(p, e)


class QExt:
    """F_q[y]/(m(y)) with base-q digit encoding and log/exp tables.

    Serves as A/P residue fields (m = a prime of A in the variable T) and as
    the point-counting fields F_{q^m}.  The stored generator is the least
    encoded element of full multiplicative order, which fixes the character
    indexing used everywhere downstream.
    """

    def __init__(self, base: Fq, modulus: tuple[int, ...]):
        assert modulus[-1] == 1, "modulus must be monic"
        self.base = base
        self.modulus = modulus
        self.m = len(modulus) - 1
        self.p = base.p
        self.q = base.q
        self.size = base.q**self.m
        self.order = self.size
        if self.size > _LOG_TABLE_LIMIT:
            raise SizeLimit(f"extension of size {self.size} exceeds table limit")
        self._char2 = base.p == 2
        self._build_tables()

    def _build_tables(self):
        n = self.size
        order = n - 1
        fac = _factorize(order) if order > 1 else {}
        gen = None
        for g in range(1, n):
            if all(self._pow_raw(g, order // ell) != 1 for ell in fac):
                if order == 1 or self._pow_raw(g, order) == 1:
                    gen = g
                    break
        assert gen is not None
        self.generator = gen
        self._exp = [0] * (2 * order if order else 1)
        self._log = [0] * n
        v = 1
        for i in range(order):
            self._exp[i] = v
            self._log[v] = i
            v = self._raw_mul(v, gen)
        for i in range(order, len(self._exp)):
            self._exp[i] = self._exp[i - order]
        self._frob = [self.pow(a, self.q) for a in range(n)]

    def digits(self, a: int) -> list[int]:
        q = self.q
        return [(a // q**i) % q for i in range(self.m)]

    def undigits(self, ds) -> int:
        q = self.q
        return sum((int(d) % q) * q**i for i, d in enumerate(ds))

    def _raw_mul(self, a: int, b: int) -> int:
        f, m = self.base, self.m
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1) if m > 1 else [0]
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = f.add(prod[i + j], f.mul(x, y))
        mod = self.modulus
        for i in range(len(prod) - 1, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = f.sub(prod[i - m + j], f.mul(c, mod[j]))
        return self.undigits(prod[:m])

    def _pow_raw(self, a: int, k: int) -> int:
        acc, base = 1, a
        while k:
            if k & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            k >>= 1
        return acc

    def add(self, a: int, b: int) -> int:
        if self._char2:
            return a ^ b
        f, q = self.base, self.q
        return self.undigits(
            [f.add(x, y) for x, y in zip(self.digits(a), self.digits(b))]
        )

    def sub(self, a: int, b: int) -> int:
        if self._char2:
            return a ^ b
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self._char2:
            return a
        f = self.base
        return self.undigits([f.neg(x) for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        order = self.size - 1
        return self._exp[(order - self._log[a]) % order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        order = self.size - 1
        if a == 0:
            if k <= 0:
                raise ZeroDivisionError("0^k, k <= 0")
            return 0
        return self._exp[(self._log[a] * k) % order]

    def frob(self, a: int) -> int:
        """q-power Frobenius."""
        return self._frob[a]

    def frob_inv_q(self, a: int) -> int:
        """The unique b with b^q = a (i.e. a^(q^(m-1)))."""
        return self.pow(a, self.q ** (self.m - 1)) if a else 0

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of 0")
        order = self.size - 1
        from math import gcd

        return order // gcd(order, self._log[a]) if order else 1

    def elements(self):
        return range(self.size)

    def __repr__(self):
        return f"GF({self.q}^{self.m})"


class SizeLimit(Exception):
    pass
