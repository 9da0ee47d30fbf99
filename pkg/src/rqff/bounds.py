"""Lower bounds for the ideal class number from a split prime.

If P splits as (P) = p p' and p^m is the first principal power, a generator
U + V sqrt(D) has norm c P^m with U, V coprime.  When deg P^m < d that norm
must be (up to a constant) a complete denominator, so m * deg P = deg Q_i for
some 0 < i < v; otherwise m >= d / deg P.  Hence

    h >= min( min_{0<i<v} deg Q_i, d ) / deg P.

The family constructors build discriminants whose expansions are known in
closed form, so the bound can be read off from the parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .contfrac import CFExpansion, expand
from .errors import NotSplit, Ramified, ReducibleInput, SideConditionViolated, NotMonicA, ValidationError
from .ffield import FieldCtx
from .polyring import Poly, divrem, is_irreducible, residue_symbol
from .quadext import Discriminant, SplitType, make_discriminant, splitting_type


@dataclass
class BoundReport:
    disc: Discriminant
    P: Poly
    v: int
    qdegs: list[int]
    d: int
    bound: Fraction
    witness: int | None  # index of the minimising Q_i, None for the d-branch

    @property
    def bound_int(self) -> int:
        return math.ceil(self.bound)

    @property
    def divisibility_hint(self) -> int | None:
        """deg Q_w / deg P when that division is exact: a candidate for the
        order of the class of a prime above P.  Reported, never asserted."""
        num = self.qdegs[self.witness - 1] if self.witness is not None else self.d
        k = self.P.degree
        return num // k if num % k == 0 else None

    def to_json(self) -> dict:
        return {
            "D": str(self.disc.D),
            "P": str(self.P),
            "v": self.v,
            "qdegs": self.qdegs,
            "d": self.d,
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator, "ceil": self.bound_int},
            "witness": self.witness,
        }


def lower_bound(disc: Discriminant, P: Poly, expansion: CFExpansion | None = None) -> BoundReport:
    disc.require_squarefree()
    if P.degree < 1 or not is_irreducible(P):
        raise ReducibleInput(f"{P} is not irreducible")
    kind = splitting_type(P, disc, check=False)
    if kind is SplitType.RAMIFIED:
        raise Ramified(f"{P} ramifies in k(sqrt({disc.D}))")
    if kind is SplitType.INERT:
        raise NotSplit(f"{P} is inert in k(sqrt({disc.D}))")
    e = expansion or expand(disc)
    qdegs = e.interior_qdegs()
    best, witness = disc.d, None
    for i, k in enumerate(qdegs, start=1):
        if k < best:
            best, witness = k, i
    return BoundReport(disc, P, e.v, qdegs, disc.d, Fraction(best, P.degree), witness)


# -- families ---------------------------------------------------------------

KINDS = (
    "thm2_F2c",
    "thm2_SGc",
    "thm3_plus_plus",
    "thm3_minus_plus",
    "thm3_plus_minus",
    "thm3_minus_minus",
    "cor1",
    "cor2",
    "cor3",
    "example",
)

# shape number of (A^m +- ...)^2 +- A -> kind
THM3_VARIANTS = {1: "thm3_plus_plus", 2: "thm3_minus_plus", 3: "thm3_plus_minus", 4: "thm3_minus_minus"}


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one family member.  Polynomials are :class:`Poly`,
    ``c`` an encoded field element; unused parameters stay ``None``.
    ``variant`` selects the (A^m +- ...)^2 +- A shape for ``cor3``."""

    kind: str
    F: Poly | None = None
    c: int | None = None
    S: Poly | None = None
    G: Poly | None = None
    H: Poly | None = None
    a: Poly | None = None
    m: int | None = None
    P: Poly | None = None
    variant: int = 1


@dataclass
class FamilyInstance:
    spec: FamilySpec
    disc: Discriminant
    bound_degree: int  # the predicted bound is bound_degree / deg P
    suggested_P: Poly | None = None
    A: Poly | None = field(default=None)

    def predicted_bound(self, P: Poly | None = None) -> Fraction:
        P = P if P is not None else self.suggested_P
        k = P.degree if P is not None else 1
        return Fraction(self.bound_degree, k)


def _need(spec: FamilySpec, *names):
    for n in names:
        if getattr(spec, n) is None:
            raise SideConditionViolated(f"{spec.kind} needs parameter {n}")


def thm3_discriminant(variant: int, a: Poly, m: int) -> tuple[Poly, Poly]:
    """(D, A) for the four shapes (A^m + a)^2 + A, (A^m - a)^2 + A,
    (A^m + a + 1)^2 - A, (A^m - a - 1)^2 - A with A = 2a + 1."""
    A = a + a + 1
    Am = A**m
    if variant == 1:
        D = (Am + a) ** 2 + A
    elif variant == 2:
        D = (Am - a) ** 2 + A
    elif variant == 3:
        D = (Am + a + 1) ** 2 - A
    elif variant == 4:
        D = (Am - a - 1) ** 2 - A
    else:
        raise ValidationError(f"unknown shape variant {variant}")
    return D, A


def _check_thm3(a: Poly, m: int):
    if a.degree < 1:
        raise SideConditionViolated("a must be nonconstant")
    if m < 1:
        raise SideConditionViolated("m >= 1")
    if not (a + a + 1).is_monic():
        raise NotMonicA()


def make_family(spec: FamilySpec, ctx: FieldCtx) -> FamilyInstance:
    kind = spec.kind
    if kind not in KINDS:
        raise ValidationError(f"unknown family {kind!r}")
    T = Poly.T(ctx)

    if kind == "thm2_F2c":
        _need(spec, "F", "c")
        if spec.c % ctx.q == 0:
            raise SideConditionViolated("c != 0")
        if spec.F.degree < 1:
            raise SideConditionViolated("deg F >= 1")
        D = spec.F * spec.F + Poly.constant(ctx, ctx.element(spec.c))
        return FamilyInstance(spec, make_discriminant(D), spec.F.degree, spec.P)

    if kind == "thm2_SGc":
        _need(spec, "S", "G", "c")
        if spec.c % ctx.q == 0:
            raise SideConditionViolated("c != 0")
        if spec.G.degree < 1:
            raise SideConditionViolated("deg G >= 1")
        if spec.S.is_zero():
            raise SideConditionViolated("S != 0")
        SG = spec.S * spec.G
        D = SG * SG + spec.S.scale(spec.c)
        return FamilyInstance(spec, make_discriminant(D), spec.S.degree, spec.P)

    if kind.startswith("thm3_"):
        _need(spec, "a", "m")
        _check_thm3(spec.a, spec.m)
        variant = {v: k for k, v in THM3_VARIANTS.items()}[kind]
        D, A = thm3_discriminant(variant, spec.a, spec.m)
        P = spec.P
        if P is not None and not divrem(A, P)[1].is_zero():
            raise SideConditionViolated("P must divide A")
        if P is None and is_irreducible(A):
            P = A
        return FamilyInstance(spec, make_discriminant(D), A.degree, P, A)

    if kind == "cor1":
        _need(spec, "P", "G", "c")
        if spec.G.degree < 2:
            raise SideConditionViolated("deg G >= 2")
        _check_prime(spec.P)
        c = Poly.constant(ctx, ctx.element(spec.c))
        if spec.c % ctx.q == 0 or residue_symbol(c, spec.P) != 1:
            raise SideConditionViolated("(c/P) = 1")
        PG = spec.P * spec.G
        D = PG * PG + c
        return FamilyInstance(spec, make_discriminant(D), PG.degree, spec.P)

    if kind == "cor2":
        _need(spec, "S", "H", "P", "c")
        _check_prime(spec.P)
        if spec.S.degree <= spec.P.degree:
            raise SideConditionViolated("deg S > deg P")
        if spec.H.is_zero():
            raise SideConditionViolated("H != 0")
        if spec.c % ctx.q == 0:
            raise SideConditionViolated("c != 0")
        cS = spec.S.scale(spec.c)
        if residue_symbol(cS, spec.P) != 1:
            raise SideConditionViolated("(cS/P) = 1")
        SHP = spec.S * spec.H * spec.P
        D = SHP * SHP + cS
        return FamilyInstance(spec, make_discriminant(D), spec.S.degree, spec.P)

    if kind == "cor3":
        _need(spec, "S", "P", "m")
        _check_prime(spec.P)
        if spec.S.degree < 2:
            raise SideConditionViolated("deg S >= 2")
        A = spec.S * spec.P
        if not A.is_monic():
            raise NotMonicA()
        a = (A - 1).scale(ctx.inv(2 % ctx.p))
        _check_thm3(a, spec.m)
        D, _ = thm3_discriminant(spec.variant, a, spec.m)
        return FamilyInstance(spec, make_discriminant(D), A.degree, spec.P, A)

    # example: P = T, S = T^m + 1, H = 1, c = 1
    _need(spec, "m")
    if spec.m < 1:
        raise SideConditionViolated("m >= 1")
    S = T**spec.m + 1
    TS = T * S
    D = TS * TS + S
    return FamilyInstance(spec, make_discriminant(D), spec.m, T)


def _check_prime(P: Poly):
    if P.degree < 1 or not is_irreducible(P):
        raise SideConditionViolated("P irreducible")


@dataclass
class FamilyVerdict:
    report: BoundReport
    predicted: Fraction

    @property
    def ok(self) -> bool:
        return self.report.bound >= self.predicted


def verify_family_bound(spec: FamilySpec, ctx: FieldCtx, P: Poly) -> FamilyVerdict:
    inst = make_family(spec, ctx)
    rep = lower_bound(inst.disc, P)
    return FamilyVerdict(rep, inst.predicted_bound(P))
