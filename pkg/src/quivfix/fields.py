"""Exact ground fields: prime fields F_p, the rationals and the Gaussian rationals.

Field elements are stored as plain Python values so that the matrix kernels stay
fast: ``int`` residues for F_p, ``Fraction`` for Q and :class:`GaussianRational`
for Q(i).  A field object knows how to bring any such value into canonical form
(``field.reduce``) and supplies inversion, conjugation, parsing and formatting.
:class:`Scalar` wraps a value together with its field for callers that want
operator syntax with field checking.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InfiniteField, QuivfixError

MAX_PRIME = 97


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


class GaussianRational:
    """Element re + im*i of Q(i) with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __lt__(self, other):
        other = self._coerce(other)
        return (self.re, self.im) < (other.re, other.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"


def _format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    if z.im == 0:
        return _format_fraction(z.re)
    mag = abs(z.im)
    imag = "i" if mag == 1 else f"{_format_fraction(mag)}i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + imag
    return f"{_format_fraction(z.re)}{'-' if z.im < 0 else '+'}{imag}"


class Field:
    """Common interface; concrete fields override the hooks."""

    kind = ""
    is_finite = False
    characteristic = 0
    zero = 0
    one = 1

    def reduce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def conj(self, x):
        return x

    def is_zero(self, x) -> bool:
        return self.reduce(x) == self.zero

    def from_int(self, n: int):
        return self.reduce(n)

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def elements(self):
        raise InfiniteField(f"{self} has infinitely many elements")

    def units(self):
        raise InfiniteField(f"{self} has infinitely many units")

    def to_json(self) -> dict:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()


class PrimeField(Field):
    kind = "Fp"
    is_finite = True

    def __init__(self, p: int):
        if not is_prime(p) or p > MAX_PRIME:
            raise ValueError(f"prime field needs a prime p <= {MAX_PRIME}, got {p}")
        self.p = p
        self.characteristic = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def reduce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(x, -1, self.p)

    def is_zero(self, x):
        return x % self.p == 0

    def elements(self):
        return list(range(self.p))

    def units(self):
        return list(range(1, self.p))

    def random(self, rng):
        return rng.randrange(self.p)

    def random_unit(self, rng):
        return rng.randrange(1, self.p)

    def format(self, x) -> str:
        return f"{x % self.p} mod {self.p}"

    def parse(self, text: str):
        text = str(text).strip()
        m = re.fullmatch(r"(-?[0-9]+)\s*(?:mod\s*([0-9]+))?", text)
        if not m:
            raise ValueError(f"cannot parse {text!r} as an element of F_{self.p}")
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise FieldMismatch(f"{text!r} is not an element of F_{self.p}")
        return int(m.group(1)) % self.p

    def to_json(self):
        return {"type": "Fp", "p": self.p}

    def spec_string(self):
        return f"Fp:{self.p}"


class Rationals(Field):
    kind = "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def reduce(self, x):
        if isinstance(x, GaussianRational):
            if x.im:
                raise FieldMismatch(f"{x} is not rational")
            return x.re
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(x)

    def random(self, rng, bound: int = 5):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def format(self, x) -> str:
        return _format_fraction(Fraction(x))

    def parse(self, text: str):
        try:
            return Fraction(str(text).strip())
        except ValueError:
            raise ValueError(f"cannot parse {text!r} as a rational") from None

    def to_json(self):
        return {"type": "Q"}

    def spec_string(self):
        return "Q"


class GaussianRationals(Field):
    kind = "Qi"

    def __init__(self):
        self.zero = GaussianRational(0)
        self.one = GaussianRational(1)
        self.i = GaussianRational(0, 1)

    def __eq__(self, other):
        return isinstance(other, GaussianRationals)

    def __hash__(self):
        return hash("Qi")

    def reduce(self, x):
        return x if isinstance(x, GaussianRational) else GaussianRational(x)

    def inv(self, x):
        return self.reduce(x).inverse()

    def conj(self, x):
        return self.reduce(x).conjugate()

    def random(self, rng, bound: int = 5):
        return GaussianRational(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                                Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))

    def format(self, x) -> str:
        return format_gaussian(self.reduce(x))

    def parse(self, text: str):
        s = str(text).replace(" ", "")
        try:
            if not s.endswith("i"):
                return GaussianRational(Fraction(s))
            body = s[:-1]
            k = max(body.rfind("+"), body.rfind("-"))
            re_s, im_s = (body[:k], body[k:]) if k > 0 else ("0", body)
            im = {"": 1, "+": 1, "-": -1}.get(im_s)
            return GaussianRational(Fraction(re_s), Fraction(im_s) if im is None else im)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse {text!r} as a Gaussian rational") from None

    def to_json(self):
        return {"type": "Qi"}

    def spec_string(self):
        return "Qi"


QQ = Rationals()
QQI = GaussianRationals()


def field_from_string(text: str) -> Field:
    """Parse ``Fp:<p>``, ``Q`` or ``Qi``."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text == "Qi":
        return QQI
    m = re.fullmatch(r"Fp?:?([0-9]+)|F_?([0-9]+)", text)
    if m:
        return PrimeField(int(m.group(1) or m.group(2)))
    raise ValueError(f"unknown field {text!r}; expected Fp:<p>, Q or Qi")


def field_from_json(obj: dict) -> Field:
    kind = obj.get("type")
    if kind == "Fp":
        return PrimeField(int(obj["p"]))
    if kind == "Q":
        return QQ
    if kind == "Qi":
        return QQI
    raise ValueError(f"unknown field type {kind!r}")


class Scalar:
    """A field element tagged with its field; arithmetic checks the fields agree."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.reduce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else Scalar(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else Scalar(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else Scalar(self.field, v - self.value)

    def __mul__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else Scalar(self.field, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else Scalar(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def conj(self):
        return Scalar(self.field, self.field.conj(self.value))

    def canonical(self):
        return Scalar(self.field, self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.field.format(self.value)!r})"


def arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Dispatch one of add, sub, mul, div, neg, inv, conj."""
    unary = {"neg": lambda: -a, "inv": a.inv, "conj": a.conj}
    if op in unary:
        return unary[op]()
    if b is None:
        raise QuivfixError(f"{op} needs two operands")
    if b.field != a.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    binary = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in binary:
        raise ValueError(f"unknown operation {op!r}")
    return binary[op](b)


def unit_group(field: Field) -> list:
    if not field.is_finite:
        raise InfiniteField(f"{field} is infinite")
    return [Scalar(field, x) for x in field.units()]


def power_class_quotient(field: Field, n: int) -> list:
    """Smallest representative of each coset of k^x / (k^x)^n, ascending."""
    if not field.is_finite:
        raise InfiniteField(f"{field} is infinite")
    if n < 1:
        raise ValueError("n must be positive")
    p = field.p
    powers = {pow(x, n, p) for x in range(1, p)}
    reps, seen = [], set()
    for x in range(1, p):
        if x in seen:
            continue
        reps.append(Scalar(field, x))
        seen.update(x * y % p for y in powers)
    return reps
