"""Finite fields F_q, q = p^e with p odd.

Elements are encoded as integers ``0 <= v < q``: the residue vector
``(c_0, ..., c_{e-1})`` of ``c_0 + c_1 x + ... + c_{e-1} x^{e-1}`` modulo the
defining polynomial is packed as ``v = c_0 + c_1 p + ... + c_{e-1} p^{e-1}``.
Prime-field elements are therefore plain residues, and F_p sits inside every
extension as the integers ``0..p-1``.

:class:`FieldCtx` does the arithmetic on these integers; :class:`FieldElement`
is a thin value type with operator overloading for interactive use.
Polynomial code works with the raw integers for speed.
"""

from __future__ import annotations

import functools

from sympy.ntheory import factorint, isprime

from .errors import (
    ContextMismatch,
    DivisionByZero,
    EvenCharacteristic,
    NonPrime,
    NotASquare,
    ReducibleModulus,
    ValidationError,
    ZeroInput,
)

# log/exp tables are built for extension fields up to this size
TABLE_LIMIT = 1 << 20


class FieldCtx:
    """The field F_q for an odd prime power q = p^e.

    Use :func:`make_field` rather than instantiating directly; it validates
    the arguments and caches contexts so equal fields share tables.
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.e = e
        self.q = p**e
        # little-endian, monic, length e+1; None for prime fields
        self.modulus = tuple(modulus) if modulus is not None else None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._zech: list[int] | None = None
        self._nonresidue: int | None = None

    # -- identity -------------------------------------------------------

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_prime:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus or ())}

    # -- encoding -------------------------------------------------------

    def coords(self, v: int) -> list[int]:
        """Little-endian residue vector of the encoded element ``v``."""
        out = []
        for _ in range(self.e):
            v, c = divmod(v, self.p)
            out.append(c)
        return out

    def from_coords(self, cs) -> int:
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + c % self.p
        return v

    def __call__(self, value) -> FieldElement:
        """Coerce an int (prime fields: reduced mod p; extensions: an element of
        F_p if ``0 <= value < p`` after reduction) or a residue list."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ContextMismatch(f"{value.ctx} vs {self}")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.e:
                raise ValidationError(f"too many residues for {self}")
            return FieldElement(self, self.from_coords(value))
        return FieldElement(self, self.embed_int(value))

    def embed_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_p -> F_q."""
        return n % self.p

    def element(self, v: int) -> FieldElement:
        return FieldElement(self, v)

    def elements(self):
        """All elements as encoded integers, 0 first."""
        return range(self.q)

    def gen(self) -> int:
        """The class of x in F_p[x]/(modulus) (equal to 0 for prime fields)."""
        return self.p if self.e > 1 else 0

    # -- arithmetic on encoded integers --------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._zech is not None:
            if a == 0:
                return b
            if b == 0:
                return a
            n = self.q - 1
            la = self._log[a]
            z = self._zech[(self._log[b] - la) % n]
            return 0 if z < 0 else self._exp[(la + z) % n]
        return self._add_direct(a, b)

    def _add_direct(self, a: int, b: int) -> int:
        p = self.p
        v, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            v += ((x + y) % p) * place
            place *= p
        return v

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p = self.p
        v, place = 0, 1
        while a:
            a, x = divmod(a, p)
            v += (-x % p) * place
            place *= p
        return v

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_direct(a, b)

    def _mul_direct(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        x, y = self.coords(a), self.coords(b)
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        mod = self.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * mod[i]
        return self.from_coords(prod[:e])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if self.e == 1:
            return pow(a, k, self.p)
        if a == 0:
            return 1 if k == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * k % (self.q - 1)]
        result = 1
        while k:
            if k & 1:
                result = self._mul_direct(result, a)
            a = self._mul_direct(a, a)
            k >>= 1
        return result

    # -- squares ---------------------------------------------------------

    def is_square(self, a: int) -> bool:
        if a == 0:
            raise ZeroInput("is_square is undefined at 0")
        if self._log is not None:
            return self._log[a] % 2 == 0
        return self.pow(a, (self.q - 1) // 2) == 1

    def chi(self, a: int) -> int:
        """Quadratic character with chi(0) = 0."""
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def nonresidue(self) -> int:
        if self._nonresidue is None:
            self._nonresidue = next(a for a in range(1, self.q) if not self.is_square(a))
        return self._nonresidue

    def sqrt(self, a: int) -> int:
        """A square root of ``a``; of the two roots the one with the
        lexicographically smaller residue vector is returned."""
        if a == 0:
            return 0
        if not self.is_square(a):
            raise NotASquare(f"{self.element(a)} is not a square in {self}")
        if self._log is not None:
            y = self._exp[self._log[a] // 2]
        else:
            y = self._tonelli_shanks(a)
        return min(y, self.neg(y), key=self.coords)

    def _tonelli_shanks(self, a: int) -> int:
        s, t = 0, self.q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.pow(self.nonresidue(), t)
        x = self.pow(a, (t + 1) // 2)
        b = self.pow(a, t)
        while b != 1:
            i, bb = 0, b
            while bb != 1:
                bb = self.mul(bb, bb)
                i += 1
            c = self.pow(z, 1 << (s - i - 1))
            x = self.mul(x, c)
            z = self.mul(c, c)
            b = self.mul(b, z)
            s = i
        return x

    # -- tables ------------------------------------------------------------

    def build_tables(self) -> None:
        """Precompute exp/log/Zech tables for an extension field."""
        if self.e == 1 or self._exp is not None:
            return
        n = self.q - 1
        g = self.primitive_element()
        exp = [0] * n
        log = [-1] * self.q
        v = 1
        for k in range(n):
            exp[k] = v
            log[v] = k
            v = self._mul_direct(v, g)
        p = self.p
        zech = [0] * n
        for k in range(n):
            w = exp[k]
            c0 = w % p
            s = w - c0 + (c0 + 1) % p
            zech[k] = log[s] if s else -1
        self._exp, self._log, self._zech = exp, log, zech

    def primitive_element(self) -> int:
        n = self.q - 1
        cofactors = [n // r for r in factorint(n)]
        for g in range(2, self.q):
            if all(self.pow(g, k) != 1 for k in cofactors):
                return g
        return 1  # q == 3

    def log(self, a: int) -> int:
        """Discrete logarithm with respect to :meth:`primitive_element`."""
        if self.e == 1:
            raise NotImplementedError("log tables are kept for extension fields only")
        self.build_tables()
        return self._log[a]


class FieldElement:
    """An element of a finite field; immutable, compared by encoding."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other.value
        if isinstance(other, int):
            return self.ctx.embed_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.ctx, self.ctx.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def is_square(self) -> bool:
        return self.ctx.is_square(self.value)

    def sqrt(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.sqrt(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.embed_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    @property
    def coords(self) -> list[int]:
        return self.ctx.coords(self.value)

    def to_json(self):
        return self.value if self.ctx.is_prime else self.coords

    def __int__(self):
        return self.value

    def __repr__(self):
        if self.ctx.is_prime:
            return f"{self.value}"
        return f"{self.coords}"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, e: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if p < 2 or not isprime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise ValidationError("extension degree must be >= 1")
    if e == 1:
        if modulus is not None and len(modulus) != 2:
            raise ValidationError("a prime field takes no modulus of degree != 1")
        return FieldCtx(p)
    from .polyring import Poly, is_irreducible

    base = _make_field(p, 1, None)
    if modulus is None:
        modulus = _first_irreducible(base, e)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValidationError(f"modulus must be monic of degree {e}")
        if not is_irreducible(Poly(base, modulus)):
            raise ReducibleModulus(f"{Poly(base, modulus)} is reducible over GF({p})")
    ctx = FieldCtx(p, e, modulus)
    if ctx.q <= TABLE_LIMIT:
        ctx.build_tables()
    return ctx


def _first_irreducible(base: FieldCtx, e: int) -> tuple[int, ...]:
    # monic degree-e polynomials in order of their packed coefficient integer
    from .polyring import Poly, is_irreducible

    p = base.p
    for n in range(p**e):
        cs = [(n // p**i) % p for i in range(e)] + [1]
        if is_irreducible(Poly(base, cs)):
            return tuple(cs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def make_field(p: int, e: int = 1, modulus=None) -> FieldCtx:
    """Return the context for F_{p^e}.

    ``modulus`` is a little-endian coefficient list of a monic irreducible
    polynomial of degree ``e`` over F_p. If omitted for ``e > 1``, the first
    irreducible in order of packed coefficients is used, so the choice is
    reproducible (T^2+1 for F_9, T^2+2 for F_25).
    """
    return _make_field(p, e, tuple(modulus) if modulus is not None else None)


def field_of_order(q: int) -> FieldCtx:
    """Context for F_q with the default modulus."""
    factors = factorint(q)
    if len(factors) != 1:
        raise NonPrime(f"{q} is not a prime power")
    ((p, e),) = factors.items()
    return make_field(p, e)
