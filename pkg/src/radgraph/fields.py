"""Arithmetic in GF(q) for the prime powers backing the incidence geometries.

Elements are stored in the polynomial basis over the prime subfield and
identified with the integers 0..q-1 via base-p digits (digit i is the
coefficient of x^i).  Multiplication and inversion are table-driven, which is
cheap for the supported orders.
"""

from __future__ import annotations

__all__ = ["SUPPORTED_ORDERS", "FiniteField", "FieldElement", "field_make"]

#: Orders with either prime modular arithmetic or a fixed reduction polynomial.
SUPPORTED_ORDERS = frozenset({2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27})

# Reduction polynomials, constant coefficient first, monic.
_REDUCTION = {
    4: (1, 1, 1),          # x^2 + x + 1        over GF(2)
    8: (1, 1, 0, 1),       # x^3 + x + 1        over GF(2)
    9: (1, 0, 1),          # x^2 + 1            over GF(3)
    16: (1, 1, 0, 0, 1),   # x^4 + x + 1        over GF(2)
    25: (2, 4, 1),         # x^2 + 4x + 2       over GF(5)
    27: (1, 2, 0, 1),      # x^3 + 2x + 1       over GF(3)
}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mod(a, b, p):
    """Remainder of a by b over GF(p); b must be non-zero."""
    a = list(a)
    db = len(_poly_trim(tuple(b))) - 1
    binv = pow(b[db], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        factor = (a[i] * binv) % p
        for j in range(db + 1):
            a[i - db + j] = (a[i - db + j] - factor * b[j]) % p
    return tuple(_poly_trim(tuple(a[:db])))


def _irreducible(poly, p) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= e//2."""
    e = len(poly) - 1
    for deg in range(1, e // 2 + 1):
        for code in range(p ** deg):
            divisor = []
            c = code
            for _ in range(deg):
                divisor.append(c % p)
                c //= p
            divisor.append(1)  # monic
            if not _poly_mod(poly, divisor, p):
                return False
    return True


class FieldElement:
    """Element of a :class:`FiniteField`, hashable and immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: "FiniteField", value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple:
        """Polynomial-basis coefficients, constant term first."""
        p, e, v = self.field.p, self.field.e, self.value
        out = []
        for _ in range(e):
            out.append(v % p)
            v //= p
        return tuple(out)

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.q if 0 <= other < self.field.p else None
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add[self.value][v])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg[self.value])

    def __sub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add[self.value][self.field._neg[v]])

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul[self.value][v])

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by the zero field element")
        return FieldElement(self.field, self.field._mul[self.value][self.field._inv[v]])

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("the zero field element has no inverse")
        return FieldElement(self.field, self.field._inv[self.value])

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __repr__(self):
        return f"GF({self.field.q}):{self.value}"


class FiniteField:
    """GF(q) with total add/mul/inverse tables; build via :func:`field_make`."""

    __slots__ = ("q", "p", "e", "reduction_polynomial", "_add", "_neg", "_mul", "_inv")

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            supported = ", ".join(str(v) for v in sorted(SUPPORTED_ORDERS))
            raise ValueError(f"unsupported field order {q}; supported: {supported}")
        if q in _REDUCTION:
            poly = _REDUCTION[q]
            e = len(poly) - 1
            p = round(q ** (1.0 / e))
            if p ** e != q or not _is_prime(p):
                raise ValueError(f"order {q} is not a prime power")
            if not _irreducible(poly, p):
                raise ValueError(f"reduction polynomial for GF({q}) is reducible")
        else:
            if not _is_prime(q):
                raise ValueError(f"order {q} is not a prime power")
            p, e, poly = q, 1, (0, 1)
        self.q = q
        self.p = p
        self.e = e
        self.reduction_polynomial = poly
        self._build_tables()

    # -- table construction -------------------------------------------------

    def _digits(self, v: int) -> list:
        out = []
        for _ in range(self.e):
            out.append(v % self.p)
            v //= self.p
        return out

    def _undigits(self, ds) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        self._add = [
            [
                self._undigits([(a + b) % p for a, b in zip(self._digits(x), self._digits(y))])
                for y in range(q)
            ]
            for x in range(q)
        ]
        self._neg = [self._undigits([(-a) % p for a in self._digits(x)]) for x in range(q)]
        mul = []
        for x in range(q):
            dx = self._digits(x)
            row = []
            for y in range(q):
                dy = self._digits(y)
                prod = [0] * (2 * e - 1) if e > 1 else [dx[0] * dy[0] % p]
                if e > 1:
                    for i, a in enumerate(dx):
                        if a:
                            for j, b in enumerate(dy):
                                prod[i + j] = (prod[i + j] + a * b) % p
                    prod = list(_poly_mod(tuple(prod), self.reduction_polynomial, p))
                row.append(self._undigits(prod + [0] * (e - len(prod))))
            mul.append(row)
        self._mul = mul
        inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x][y] == 1:
                    inv[x] = y
                    break
            else:
                raise ValueError(f"element {x} of GF({q}) has no inverse")
        self._inv = inv

    # -- public surface ------------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def element(self, x) -> FieldElement:
        """Element from an integer 0..q-1 or a coefficient sequence."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            if not 0 <= x < self.q:
                raise ValueError(f"integer {x} outside 0..{self.q - 1}")
            return FieldElement(self, x)
        coeffs = list(x)
        if len(coeffs) > self.e:
            raise ValueError(f"too many coefficients for GF({self.q})")
        coeffs += [0] * (self.e - len(coeffs))
        return FieldElement(self, self._undigits([c % self.p for c in coeffs]))

    def elements(self):
        """All q elements in increasing integer order."""
        return (FieldElement(self, v) for v in range(self.q))

    def __eq__(self, other):
        if isinstance(other, FiniteField):
            return self.q == other.q and self.reduction_polynomial == other.reduction_polynomial
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.reduction_polynomial))

    def __repr__(self):
        return f"GF({self.q})"


def field_make(q: int) -> FiniteField:
    """Construct GF(q) for a supported order, with verified reduction polynomial."""
    return FiniteField(q)
