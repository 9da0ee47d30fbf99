"""The polynomial ring F_q[T].

Polynomials are immutable and dense: ``coeffs`` is a little-endian tuple of
encoded field elements (see :mod:`rqff.ffield`) without trailing zeros, so
the zero polynomial has ``coeffs == ()`` and degree ``-1``.  Equality is
equality of canonical forms.

Text format: ``T^6+2*T^4+2*T^2+1``.  Over extension fields a coefficient
outside F_p is written as a parenthesised polynomial in the generator ``x``,
e.g. ``(2*x+1)*T^2+T``.
"""

from __future__ import annotations

import random
import re
from itertools import product

from sympy.ntheory import factorint

from .errors import (
    BothZero,
    ConstantInput,
    ContextMismatch,
    DivisionByZero,
    NoEmbedding,
    PolyParseError,
    ReducibleModulus,
    ZeroInput,
)
from .ffield import FieldCtx, FieldElement

ZERO_DEGREE = -1  # degree of the zero polynomial

# operand lengths above which products go through one big-integer multiply
KRONECKER_MIN_PRIME = 24
KRONECKER_MIN_EXT = 4


def _kronecker_mul(ctx: FieldCtx, a, b) -> list[int]:
    """Product of coefficient tuples by Kronecker substitution.

    Each coefficient is spread into its e residues, x -> 2^w and
    T -> 2^(w(2e-1)), so a single integer product carries every partial sum
    without carries between slots.  The x-degree is then reduced by the
    modulus.
    """
    p, e = ctx.p, ctx.e
    bound = min(len(a), len(b)) * e * (p - 1) ** 2
    nbytes = (bound.bit_length() + 8) // 8
    width = 2 * e - 1

    def pack(cs):
        buf = bytearray(len(cs) * width * nbytes)
        for i, c in enumerate(cs):
            base = i * width * nbytes
            for k in range(e):
                c, r = divmod(c, p)
                if r:
                    buf[base + k * nbytes : base + (k + 1) * nbytes] = r.to_bytes(nbytes, "little")
        return int.from_bytes(buf, "little")

    n = len(a) + len(b) - 1
    prod = (pack(a) * pack(b)).to_bytes(n * width * nbytes, "little")
    slots = [int.from_bytes(prod[i * nbytes : (i + 1) * nbytes], "little") % p for i in range(n * width)]
    if e == 1:
        return slots
    xred = _x_reductions(ctx)
    out = []
    for i in range(n):
        v = slots[i * width : (i + 1) * width]
        res = v[:e]
        for k in range(e, width):
            if v[k]:
                res = [r + v[k] * t for r, t in zip(res, xred[k - e])]
        out.append(ctx.from_coords(res))
    return out


_XRED: dict = {}


def _x_reductions(ctx: FieldCtx) -> list[list[int]]:
    """Residues of x^e, ..., x^(2e-2) modulo the field's modulus."""
    key = (ctx.p, ctx.e, ctx.modulus)
    if key not in _XRED:
        p, e, mod = ctx.p, ctx.e, ctx.modulus
        cur = [(-c) % p for c in mod[:e]]  # x^e
        rows = [cur]
        for _ in range(e - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(c - top * m) % p for c, m in zip(cur, mod[:e])]
            rows.append(cur)
        _XRED[key] = rows
    return _XRED[key]


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        cs = [_ctor_coeff(ctx, c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _raw(cls, ctx: FieldCtx, cs: list[int]) -> Poly:
        # cs already reduced; strips trailing zeros in place
        while cs and cs[-1] == 0:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "ctx", ctx)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, [])

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, [1])

    @classmethod
    def constant(cls, ctx, c):
        return cls._raw(ctx, [_coerce_coeff(ctx, c)])

    @classmethod
    def T(cls, ctx):
        return cls._raw(ctx, [0, 1])

    @classmethod
    def monomial(cls, ctx, k: int, c=1):
        return cls._raw(ctx, [0] * k + [_coerce_coeff(ctx, c)])

    # -- basic properties ----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> int:
        """Leading coefficient as an encoded field element (0 for zero)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __getitem__(self, k: int) -> FieldElement:
        return FieldElement(self.ctx, self.coeff(k))

    def constant_value(self) -> int:
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeff(0)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.constant(self.ctx, other)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        a, b = self.coeffs, g.coeffs
        if len(a) < len(b):
            a, b = b, a
        ctx = self.ctx
        if ctx.is_prime:
            p = ctx.p
            cs = [(x + y) % p for x, y in zip(a, b)]
        else:
            cs = [ctx.add(x, y) for x, y in zip(a, b)]
        cs.extend(a[len(b):])
        return Poly._raw(ctx, cs)

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        if ctx.is_prime:
            return Poly._raw(ctx, [-c % ctx.p for c in self.coeffs])
        return Poly._raw(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return g + (-self)

    def __mul__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        a, b = self.coeffs, g.coeffs
        if not a or not b:
            return Poly.zero(self.ctx)
        ctx = self.ctx
        if min(len(a), len(b)) >= (KRONECKER_MIN_PRIME if ctx.is_prime else KRONECKER_MIN_EXT):
            return Poly._raw(ctx, _kronecker_mul(ctx, a, b))
        out = [0] * (len(a) + len(b) - 1)
        if ctx.is_prime:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            p = ctx.p
            return Poly._raw(ctx, [c % p for c in out])
        add, mul = ctx.add, ctx.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(ctx, out)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        """Multiply by the field element ``c`` (encoded int or FieldElement)."""
        c = _coerce_coeff(self.ctx, c)
        ctx = self.ctx
        if ctx.is_prime:
            return Poly._raw(ctx, [x * c % ctx.p for x in self.coeffs])
        return Poly._raw(ctx, [ctx.mul(x, c) for x in self.coeffs])

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly.one(self.ctx), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return g
        return divrem(self, g)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.ctx.inv(self.lc))

    def derivative(self) -> Poly:
        ctx = self.ctx
        return Poly._raw(ctx, [ctx.mul(ctx.embed_int(k), c) for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        return evaluate(self, x)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            try:
                return self == Poly.constant(self.ctx, other)
            except ContextMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def sort_key(self):
        """Order by degree, then coefficients from the top down."""
        return (self.degree, tuple(self.ctx.coords(c)[::-1] for c in reversed(self.coeffs)))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r} over {self.ctx!r})"

    def to_json(self):
        """Little-endian coefficient array in the field's element format."""
        if self.ctx.is_prime:
            return list(self.coeffs)
        return [self.ctx.coords(c) for c in self.coeffs]


def _coerce_coeff(ctx: FieldCtx, c) -> int:
    # ints in [0, q) are encoded elements; other ints are reduced mod p
    if isinstance(c, FieldElement):
        if c.ctx != ctx:
            raise ContextMismatch(f"{c.ctx} vs {ctx}")
        return c.value
    if isinstance(c, int):
        return c if 0 <= c < ctx.q else ctx.embed_int(c)
    if isinstance(c, (list, tuple)):
        return ctx.from_coords(c)
    raise TypeError(f"cannot use {c!r} as a coefficient")


_ctor_coeff = _coerce_coeff


def poly_from_json(ctx: FieldCtx, data) -> Poly:
    return Poly(ctx, data)


# -- Euclidean structure -------------------------------------------------


def divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: ``f = q*g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if f.ctx != g.ctx:
        raise ContextMismatch(f"{f.ctx} vs {g.ctx}")
    ctx = f.ctx
    dg = g.degree
    r = list(f.coeffs)
    if len(r) <= dg:
        return Poly.zero(ctx), f
    quo = [0] * (len(r) - dg)
    gc = g.coeffs
    if ctx.is_prime:
        p = ctx.p
        inv = pow(gc[-1], -1, p)
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k] * inv % p
            if c:
                quo[k - dg] = c
                base = k - dg
                for i in range(dg + 1):
                    r[base + i] = (r[base + i] - c * gc[i]) % p
    else:
        inv = ctx.inv(gc[-1])
        for k in range(len(r) - 1, dg - 1, -1):
            c = ctx.mul(r[k], inv)
            if c:
                quo[k - dg] = c
                base = k - dg
                for i in range(dg + 1):
                    r[base + i] = ctx.sub(r[base + i], ctx.mul(c, gc[i]))
    return Poly._raw(ctx, quo), Poly._raw(ctx, r[:dg])


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, divrem(f, g)[1]
    return f.monic()


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, s, t)`` with ``d = s*f + t*g`` monic."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    ctx = f.ctx
    r0, r1 = f, g
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero():
        quo, rem = divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = ctx.inv(r0.lc)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def powmod(f: Poly, n: int, m: Poly) -> Poly:
    result = Poly.one(f.ctx) % m
    base = f % m
    while n:
        if n & 1:
            result = (result * base) % m
        base = (base * base) % m
        n >>= 1
    return result


def is_squarefree(D: Poly) -> bool:
    if D.is_zero():
        raise ZeroInput("is_squarefree(0) is undefined")
    return gcd(D, D.derivative()).degree == 0


def is_irreducible(P: Poly) -> bool:
    """Rabin's test."""
    n = P.degree
    if n < 1:
        raise ConstantInput(f"{P} is constant")
    if n == 1:
        return True
    q = P.ctx.q
    T = Poly.T(P.ctx)
    # frob[k] = T^(q^k) mod P
    frob = [T % P]
    for _ in range(n):
        frob.append(powmod(frob[-1], q, P))
    if frob[n] != frob[0]:
        return False
    for ell in factorint(n):
        if gcd(frob[n // ell] - T, P).degree != 0:
            return False
    return True


def sqrt_part(f: Poly) -> Poly:
    """The polynomial part of sqrt(f): the unique ``g`` with
    ``deg(f - g^2) < deg f / 2`` and ``lc(g) = sqrt(lc f)`` (tie-broken
    root).  Requires ``deg f`` even and ``lc f`` a square."""
    ctx = f.ctx
    n2 = f.degree
    if f.is_zero() or n2 % 2:
        raise ValueError("need a nonzero polynomial of even degree")
    n = n2 // 2
    s = ctx.sqrt(f.lc)
    inv2s = ctx.inv(ctx.add(s, s))
    g = [0] * (n + 1)
    g[n] = s
    add, mul, sub = ctx.add, ctx.mul, ctx.sub
    for k in range(n - 1, -1, -1):
        # coefficient of T^(n+k) in g^2 from terms already fixed (indices > k)
        acc = 0
        for i in range(k + 1, n + 1):
            j = n + k - i
            if k < j <= n:
                acc = add(acc, mul(g[i], g[j]))
        g[k] = mul(sub(f.coeff(n + k), acc), inv2s)
    return Poly._raw(ctx, g)


def poly_sqrt(f: Poly) -> Poly | None:
    """Exact square root in F_q[T], or ``None`` if ``f`` is not a square."""
    if f.is_zero():
        raise ZeroInput("poly_sqrt expects a nonzero polynomial")
    if f.degree % 2 or not f.ctx.is_square(f.lc):
        return None
    g = sqrt_part(f)
    return g if g * g == f else None


def residue_symbol(F: Poly, P: Poly, check: bool = True) -> int:
    """Quadratic residue symbol (F/P) for irreducible ``P``: 0, +1 or -1."""
    if check and (P.degree < 1 or not is_irreducible(P)):
        raise ReducibleModulus(f"{P} is not irreducible")
    r = F % P
    if r.is_zero():
        return 0
    e = (P.ctx.q**P.degree - 1) // 2
    s = powmod(r, e, P)
    return 1 if s == 1 else -1


def evaluate(f: Poly, x) -> FieldElement:
    """Horner evaluation at ``x``, which may live in an extension of F_p when
    ``f`` has prime-field coefficients (the embedding F_p -> F_{p^n} is the
    identity on encoded integers)."""
    if isinstance(x, int):
        x = FieldElement(f.ctx, f.ctx.embed_int(x))
    xc = x.ctx
    if xc != f.ctx and not (f.ctx.is_prime and xc.p == f.ctx.p):
        raise NoEmbedding(f"no embedding of {f.ctx} into {xc}")
    acc = 0
    v = x.value
    for c in reversed(f.coeffs):
        acc = xc.add(xc.mul(acc, v), c)
    return FieldElement(xc, acc)


# -- enumeration -------------------------------------------------------------


def monic_polys(ctx: FieldCtx, d: int):
    """All monic polynomials of degree ``d`` in increasing :meth:`Poly.sort_key` order."""
    for tail in product(range(ctx.q), repeat=d):
        yield Poly._raw(ctx, list(reversed(tail)) + [1])


def irreducibles(ctx: FieldCtx, d: int):
    return (P for P in monic_polys(ctx, d) if is_irreducible(P))


def random_poly(ctx: FieldCtx, d: int, rng: random.Random, monic: bool = True) -> Poly:
    cs = [rng.randrange(ctx.q) for _ in range(d)]
    cs.append(1 if monic else rng.randrange(1, ctx.q))
    return Poly._raw(ctx, cs)


def random_irreducible(ctx: FieldCtx, d: int, seed: int) -> Poly:
    if d < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(seed)
    while True:
        P = random_poly(ctx, d, rng)
        if is_irreducible(P):
            return P


# -- text format ------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+|\([^()]*\))\s*\*?\s*)?
        (?P<var>T(?:\s*\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(ctx: FieldCtx, text: str, var: str = "T") -> Poly:
    """Parse e.g. ``"T^6+2*T^4+2*T^2+1"``; minus signs are allowed and
    reduced mod p.  Parenthesised coefficients are polynomials in ``x``
    interpreted in the field."""
    src = text.replace(var, "T") if var != "T" else text
    src = src.strip()
    if not src:
        raise PolyParseError("empty polynomial")
    pos = 0
    cs: dict[int, int] = {}
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos or (not m.group("coef") and not m.group("var")):
            raise PolyParseError(f"cannot parse {text!r} at position {pos}")
        if not first and not m.group("sign"):
            raise PolyParseError(f"missing operator in {text!r} at position {pos}")
        first = False
        coef_txt = m.group("coef")
        if coef_txt is None:
            c = 1
        elif coef_txt.startswith("("):
            c = _parse_coeff(ctx, coef_txt[1:-1])
        else:
            c = ctx.embed_int(int(coef_txt))
        if m.group("sign") == "-":
            c = ctx.neg(c)
        k = 0
        if m.group("var"):
            k = int(m.group("exp")) if m.group("exp") else 1
        cs[k] = ctx.add(cs.get(k, 0), c)
        pos = m.end()
    deg = max(cs)
    return Poly._raw(ctx, [cs.get(k, 0) for k in range(deg + 1)])


def _parse_coeff(ctx: FieldCtx, text: str) -> int:
    # a polynomial in the generator x, reduced in the field
    base = parse_poly(ctx, text.replace("x", "T"))
    return evaluate(base, FieldElement(ctx, ctx.gen())).value


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    ctx = f.ctx
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        coef = _format_coeff(ctx, c)
        if k == 0:
            terms.append(coef)
            continue
        mono = "T" if k == 1 else f"T^{k}"
        terms.append(mono if c == 1 else f"{coef}*{mono}")
    return "+".join(terms)


def _format_coeff(ctx: FieldCtx, c: int) -> str:
    if c < ctx.p:
        return str(c)
    inner = Poly._raw(ctx.__class__(ctx.p), ctx.coords(c))
    return "(" + format_poly(inner).replace("T", "x") + ")"
