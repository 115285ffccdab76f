"""Dense univariate polynomials over a table field, and their fractions.

`Poly` is the workhorse for A = F_q[T] (and for residue-field polynomial
work, since any object with the table-field int protocol serves as the
coefficient field).  Canonical form never has trailing zero coefficients;
the zero polynomial has degree -1 (the distinguished sentinel).

String form follows the report encoding: "T^2+T+1", with non-trivial F_q
coefficients rendered as their integer encodings, e.g. "2*T^2+3".
"""

from __future__ import annotations

from typing import Iterable


class Poly:
    __slots__ = ("f", "c")

    def __init__(self, field, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.f = field
        self.c = tuple(c)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero(field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def const(field, a: int) -> "Poly":
        return Poly(field, (a,))

    @staticmethod
    def x(field) -> "Poly":
        return Poly(field, (0, 1))

    @staticmethod
    def monomial(field, a: int, n: int) -> "Poly":
        return Poly(field, (0,) * n + (a,))

    # -- basic structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def is_const(self) -> bool:
        return len(self.c) <= 1

    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def __getitem__(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c and self.f is other.f

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        f = self.f
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = f.add(out[i], y)
        return Poly(f, out)

    def __sub__(self, other: "Poly") -> "Poly":
        f = self.f
        n = max(len(self.c), len(other.c))
        return Poly(f, [f.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "Poly":
        f = self.f
        return Poly(f, [f.neg(x) for x in self.c])

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.f
        a, b = self.c, other.c
        if not a or not b:
            return Poly(f, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, out)

    def scale(self, a: int) -> "Poly":
        f = self.f
        if a == 0:
            return Poly(f, ())
        return Poly(f, [f.mul(a, x) for x in self.c])

    def shift(self, n: int) -> "Poly":
        """Multiply by T^n."""
        if not self.c:
            return self
        return Poly(self.f, (0,) * n + self.c)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.f
        rem = list(self.c)
        dq = len(self.c) - len(other.c)
        if dq < 0:
            return Poly(f, ()), self
        q = [0] * (dq + 1)
        inv_lead = f.inv(other.lead())
        oc = other.c
        for i in range(dq, -1, -1):
            top = rem[i + len(oc) - 1]
            if top:
                coef = f.mul(top, inv_lead)
                q[i] = coef
                for j, y in enumerate(oc):
                    if y:
                        rem[i + j] = f.sub(rem[i + j], f.mul(coef, y))
        return Poly(f, q), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.f.inv(self.lead()))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        f = self.f
        r0, r1 = self, other
        s0, s1 = Poly.one(f), Poly.zero(f)
        t0, t1 = Poly.zero(f), Poly.one(f)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        lead_inv = f.inv(r0.lead())
        return r0.scale(lead_inv).monic(), s0.scale(lead_inv), t0.scale(lead_inv)

    def pow(self, n: int) -> "Poly":
        acc, base = Poly.one(self.f), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def pow_mod(self, n: int, mod: "Poly") -> "Poly":
        acc, base = Poly.one(self.f), self % mod
        while n:
            if n & 1:
                acc = (acc * base) % mod
            base = (base * base) % mod
            n >>= 1
        return acc

    def derivative(self) -> "Poly":
        f = self.f
        p = f.p if hasattr(f, "p") else f.base.p
        out = []
        for i in range(1, len(self.c)):
            mult = i % p
            acc = 0
            for _ in range(mult):
                acc = f.add(acc, self.c[i])
            out.append(acc)
        return Poly(f, out)

    def eval(self, point: int) -> int:
        """Horner evaluation at a point of the coefficient field."""
        f = self.f
        acc = 0
        for x in reversed(self.c):
            acc = f.add(f.mul(acc, point), x)
        return acc

    def eval_in(self, ext, point: int) -> int:
        """Evaluate at a point of an extension; coefficients embed as ints."""
        acc = 0
        for x in reversed(self.c):
            acc = ext.add(ext.mul(acc, point), x)
        return acc

    def subst_monomial(self, n: int) -> "Poly":
        """T -> T^n, exact exponent spreading."""
        if n == 1 or self.is_zero():
            return self
        out = [0] * (self.degree * n + 1)
        for i, x in enumerate(self.c):
            out[i * n] = x
        return Poly(self.f, out)

    def coeff_frob(self, k: int = 1) -> "Poly":
        """Apply x -> x^p to every coefficient, k times."""
        f = self.f
        p = f.p
        return Poly(f, [f.pow(x, p**k) for x in self.c])

    # -- string form -----------------------------------------------------------

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return poly_str(self)

    def to_list(self) -> list[int]:
        return list(self.c)


def poly_str(p: Poly, var: str = "T") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        a = p[i]
        if a == 0:
            continue
        if i == 0:
            parts.append(str(a))
        else:
            head = "" if a == 1 else f"{a}*"
            exp = var if i == 1 else f"{var}^{i}"
            parts.append(head + exp)
    return "+".join(parts)


def poly_parse(field, s: str, var: str = "T") -> Poly:
    """Parse the human polynomial form, e.g. "T^3+T+1" or "2*T^2+3"."""
    s = s.replace(" ", "").replace("-", "+-")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            coef = int(head.rstrip("*")) if head else 1
            exp = int(tail[1:]) if tail.startswith("^") else (1 if not tail else None)
            if exp is None:
                raise ValueError(f"cannot parse term {term!r}")
        else:
            coef = int(term)
            exp = 0
        if not 0 <= coef < field.q:
            raise ValueError(f"coefficient {coef} outside field encoding 0..{field.q - 1}")
        if neg:
            coef = field.neg(coef)
        coeffs[exp] = field.add(coeffs.get(exp, 0), coef)
    out = [0] * (max(coeffs) + 1)
    for e, a in coeffs.items():
        out[e] = a
    return Poly(field, out)


class FracA:
    """Fractions of A = F_q[T]: denominator monic, gcd removed."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        f = num.f
        if den is None:
            den = Poly.one(f)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(f)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.lead()
            if lead != 1:
                inv = f.inv(lead)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @staticmethod
    def zero(field) -> "FracA":
        return FracA(Poly.zero(field))

    @staticmethod
    def one(field) -> "FracA":
        return FracA(Poly.one(field))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, FracA)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, o: "FracA") -> "FracA":
        return FracA(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "FracA") -> "FracA":
        return FracA(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> "FracA":
        return FracA(-self.num, self.den)

    def __mul__(self, o: "FracA") -> "FracA":
        return FracA(self.num * o.num, self.den * o.den)

    def inv(self) -> "FracA":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return FracA(self.den, self.num)

    def __truediv__(self, o: "FracA") -> "FracA":
        return self * o.inv()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __repr__(self):
        if self.is_polynomial():
            return f"({self.num})"
        return f"({self.num})/({self.den})"


def lagrange_interpolate(ext, points: list[int], values: list[int]) -> Poly:
    """Interpolating polynomial over an extension field, Newton form."""
    n = len(points)
    assert len(values) == n
    # Divided differences in the finite field.
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = ext.sub(coef[i], coef[i - 1])
            den = ext.sub(points[i], points[i - j])
            coef[i] = ext.div(num, den)
    # Assemble Newton basis products.
    poly = Poly(ext, ())
    basis = Poly.one(ext)
    for j in range(n):
        if coef[j]:
            poly = poly + basis.scale(coef[j])
        if j < n - 1:
            basis = basis * Poly(ext, (ext.neg(points[j]), 1))
    return poly
