"""Small finite fields GF(p^m), m <= 4, with an explicit irreducible modulus.

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` where
``c_i`` are the coefficients of the polynomial representative (least
significant first).  The integer code doubles as the canonical enumeration
order: zero first, then lexicographic on the coefficient vector read from the
most significant digit.

Scalar arithmetic goes through :class:`Felt`; bulk arithmetic on numpy arrays of
codes goes through the lookup tables exposed by :class:`FieldSpec`.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    InvalidFrobeniusBase,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_ORDER = 1 << 16
MAX_TABLE_ORDER = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- polynomials over GF(p), coefficient tuples least significant first ------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _trim(a)
    return a


def _monic_polys(p: int, degree: int):
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(modulus, cand, p):
                return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree m, ordered by integer value.

    Integer value compares coefficient vectors from the top degree down, so
    for GF(8) this picks x^3+x+1 over x^3+x^2+1.
    """
    for cand in sorted(_monic_polys(p, m), key=lambda c: sum(ci * p**i for i, ci in enumerate(c))):
        if is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over GF({p})")


def _parse_modulus(modulus) -> tuple[int, ...]:
    if isinstance(modulus, str):
        return tuple(_DIGITS.index(ch) for ch in modulus.strip().lower())
    return tuple(int(c) for c in modulus)


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) defined by a monic irreducible ``modulus`` (LSB-first coefficients)."""

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.m)

    # -- construction helpers ------------------------------------------------

    def __repr__(self):
        return f"GF({self.descriptor})"

    @property
    def descriptor(self) -> str:
        """Field descriptor ``p^m/modulus-digits`` used in files and reports."""
        return f"{self.p}^{self.m}/" + "".join(_DIGITS[c] for c in self.modulus)

    @property
    def order_token(self) -> str:
        return f"{self.p}^{self.m}"

    @property
    def is_binary(self) -> bool:
        return self.p == 2

    # -- element codec -------------------------------------------------------

    def digits(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, coeffs) -> int:
        if len(coeffs) != self.m:
            raise DegreeMismatch(f"expected {self.m} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} outside [0, {self.p})")
            code = code * self.p + c
        return code

    def encode(self, code: int) -> str:
        """Base-p digit string, least significant digit first."""
        return "".join(_DIGITS[d] for d in self.digits(code))

    def decode(self, text: str) -> int:
        text = text.strip().lower()
        if len(text) != self.m or any(ch not in _DIGITS[: self.p] for ch in text):
            raise ValueError(f"{text!r} is not an element of {self!r}")
        return self.from_digits([_DIGITS.index(ch) for ch in text])

    def __call__(self, value) -> "Felt":
        if isinstance(value, Felt):
            if value.field != self:
                raise FieldMismatch(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, str):
            return Felt(self, self.decode(value))
        if isinstance(value, (tuple, list)):
            return Felt(self, self.from_digits(value))
        value = int(value)
        if self.m == 1:
            value %= self.p
        if not 0 <= value < self.q:
            raise ValueError(f"code {value} outside [0, {self.q})")
        return Felt(self, value)

    def elements(self) -> list["Felt"]:
        return [Felt(self, c) for c in range(self.q)]

    @property
    def zero(self) -> "Felt":
        return Felt(self, 0)

    @property
    def one(self) -> "Felt":
        return Felt(self, 1)

    @property
    def alpha(self) -> "Felt":
        """Class of x, the root of the modulus (equals a residue when m == 1)."""
        if self.m == 1:
            return Felt(self, (-self.modulus[0]) % self.p)
        return Felt(self, self.p)

    # -- core tables ---------------------------------------------------------

    def _mul_codes_slow(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod(prod, self.modulus, self.p) if self.m > 1 else prod[:1]
        rem = list(rem) + [0] * (self.m - len(rem))
        return self.from_digits(rem[: self.m])

    @cached_property
    def _exp_log(self):
        q = self.q
        if q == 2:
            return np.array([1, 1], dtype=np.int64), np.array([-1, 0], dtype=np.int64)
        for g in range(2, q) if q > 2 else ():
            exp = np.empty(q - 1, dtype=np.int64)
            x = 1
            ok = True
            for i in range(q - 1):
                if i and x == 1:
                    ok = False
                    break
                exp[i] = x
                x = self._mul_codes_slow(x, g)
            if ok and x == 1:
                log = np.full(q, -1, dtype=np.int64)
                log[exp] = np.arange(q - 1)
                return exp, log
        raise AssertionError("multiplicative group is cyclic; generator must exist")

    @property
    def exp_table(self) -> np.ndarray:
        return self._exp_log[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._exp_log[1]

    @cached_property
    def digit_table(self) -> np.ndarray:
        codes = np.arange(self.q)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.m)], axis=1)

    def _check_table_size(self):
        if self.q > MAX_TABLE_ORDER:
            raise FieldTooLarge(f"bulk arithmetic tables limited to q <= {MAX_TABLE_ORDER}")

    @cached_property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint16

    @cached_property
    def add_table(self) -> np.ndarray:
        self._check_table_size()
        d = self.digit_table
        s = (d[:, None, :] + d[None, :, :]) % self.p
        weights = self.p ** np.arange(self.m)
        return (s * weights).sum(axis=2).astype(self.dtype)

    @cached_property
    def neg_table(self) -> np.ndarray:
        d = (-self.digit_table) % self.p
        return (d * self.p ** np.arange(self.m)).sum(axis=1).astype(self.dtype)

    @cached_property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._check_table_size()
        exp, log = self._exp_log
        q = self.q
        la = log[:, None]
        lb = log[None, :]
        t = exp[(la + lb) % (q - 1)]
        t[(la < 0) | (lb < 0)] = 0
        return t.astype(self.dtype)

    @cached_property
    def inv_table(self) -> np.ndarray:
        exp, log = self._exp_log
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (self.q - 1)]
        return inv.astype(self.dtype)

    # -- scalar ops on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._exp_log
        return int(exp[(log[a] + log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        exp, log = self._exp_log
        return int(exp[(-log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        exp, log = self._exp_log
        return int(exp[(log[a] * e) % (self.q - 1)])

    # -- vectorized ops on code arrays ---------------------------------------

    def vadd(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_table[a, b]

    def vsub(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.sub_table[a, b]

    def vmul(self, a, b):
        return self.mul_table[a, b]

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a)
        if e == 0:
            return np.ones_like(a, dtype=self.dtype)
        exp, log = self._exp_log
        out = exp[(log[a] * e) % (self.q - 1)]
        out = np.where(a == 0, 0, out)
        return out.astype(self.dtype)

    # -- Frobenius -----------------------------------------------------------

    def frobenius_code(self, a: int, q0: int) -> int:
        e = self._frobenius_exponent(q0)
        return self.pow(a, self.p**e)

    def _frobenius_exponent(self, q0: int) -> int:
        for e in range(1, self.m + 1):
            if self.p**e == q0:
                return e
        raise InvalidFrobeniusBase(f"{q0} is not p^e with 1 <= e <= {self.m} for {self!r}")


@dataclass(frozen=True, eq=False)
class Felt:
    """An element of a :class:`FieldSpec`, stored as its integer code."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _other(self, other) -> "Felt":
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def _binop(self, other, fn):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Felt(self.field, fn(self.value, o.value))

    def __add__(self, other):
        return self._binop(other, self.field.add)

    def __sub__(self, other):
        return self._binop(other, self.field.sub)

    def __mul__(self, other):
        return self._binop(other, self.field.mul)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Felt(self.field, self.field.mul(self.value, self.field.inv(o.value)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return Felt(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "Felt":
        return Felt(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Felt):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Felt({self.field.encode(self.value)} in {self.field.descriptor})"

    def __str__(self):
        return self.field.encode(self.value)


def field_create(p: int, m: int, modulus) -> FieldSpec:
    """Validate and build GF(p^m).

    ``modulus`` is a coefficient sequence or digit string, least significant
    coefficient first, of a monic degree-m polynomial over GF(p).
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch("extension degree must be >= 1")
    coeffs = _parse_modulus(modulus)
    if len(coeffs) != m + 1 or coeffs[-1] % p != 1:
        raise DegreeMismatch(f"modulus {coeffs} is not monic of degree {m}")
    if any(not 0 <= c < p for c in coeffs):
        raise DegreeMismatch(f"modulus coefficients must lie in [0, {p})")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the supported order {MAX_ORDER}")
    if not is_irreducible(coeffs, p):
        raise ReducibleModulus(f"modulus {coeffs} is reducible over GF({p})")
    return FieldSpec(p, m, coeffs)


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                break
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r == 1:
                return p, m
            break
    raise ValueError(f"{q} is not a prime power")


@lru_cache(maxsize=None)
def gf(q: int) -> FieldSpec:
    """Canonical GF(q): the lowest irreducible modulus of the right degree."""
    p, m = _prime_power(q)
    return field_create(p, m, lowest_irreducible(p, m))


def parse_field(text: str) -> FieldSpec:
    """Parse ``p^m/digits`` or bare ``p^m`` (canonical modulus)."""
    text = text.strip()
    head, _, digits = text.partition("/")
    try:
        p_txt, _, m_txt = head.partition("^")
        p, m = int(p_txt), int(m_txt or 1)
    except ValueError as exc:
        raise ValueError(f"bad field descriptor {text!r}") from exc
    if digits:
        return field_create(p, m, digits)
    return gf(p**m)


_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def fe_arith(op: str, x: Felt, y: Felt) -> Felt:
    if x.field != y.field:
        raise FieldMismatch(f"cannot combine {x.field!r} and {y.field!r}")
    return _OPS[op](x, y)


def frobenius(x: Felt, q0: int) -> Felt:
    """x -> x^{q0} for q0 in {p, p^2, ..., q}."""
    return Felt(x.field, x.field.frobenius_code(x.value, q0))
