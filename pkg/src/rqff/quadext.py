"""Real quadratic extensions K = F_q(T)(sqrt D) and the splitting of finite primes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import NotMonic, NotSquarefree, OddDegree, PerfectSquare, ReducibleInput, ZeroInput
from .polyring import Poly, irreducibles, is_irreducible, is_squarefree, residue_symbol, sqrt_part


@dataclass(frozen=True)
class Discriminant:
    """A monic, even-degree, non-square D together with D = f^2 + r.

    ``squarefree`` is False only for discriminants built in exploratory
    mode; bound and class-number code refuses those.
    """

    D: Poly
    d: int
    f: Poly
    r: Poly
    squarefree: bool = field(default=True)

    @property
    def ctx(self):
        return self.D.ctx

    @property
    def genus(self) -> int:
        return self.d - 1

    def require_squarefree(self):
        if not self.squarefree:
            raise NotSquarefree(f"{self.D} is not squarefree")

    def __str__(self):
        return str(self.D)


def make_discriminant(D: Poly, require_squarefree: bool = True) -> Discriminant:
    """Validate ``D`` and split it as ``f^2 + r`` with ``deg r < d``.

    With ``require_squarefree=False`` a non-squarefree D is accepted but
    tagged, for exploring expansions only.
    """
    if D.is_zero():
        raise ZeroInput("D must be nonzero")
    if not D.is_monic():
        raise NotMonic(f"{D} is not monic")
    if D.degree % 2:
        raise OddDegree(f"{D} has odd degree {D.degree}")
    if D.degree == 0:
        raise PerfectSquare("D = 1 is a square")
    f = sqrt_part(D)
    r = D - f * f
    if r.is_zero():
        raise PerfectSquare(f"{D} = ({f})^2")
    sf = is_squarefree(D)
    if require_squarefree and not sf:
        raise NotSquarefree(f"{D} is not squarefree")
    return Discriminant(D=D, d=D.degree // 2, f=f, r=r, squarefree=sf)


def norm(U: Poly, V: Poly, disc: Discriminant) -> Poly:
    """N(U + V sqrt D) = U^2 - D V^2."""
    return U * U - disc.D * V * V


def mul_elements(a: tuple[Poly, Poly], b: tuple[Poly, Poly], disc: Discriminant) -> tuple[Poly, Poly]:
    (u1, v1), (u2, v2) = a, b
    return (u1 * u2 + v1 * v2 * disc.D, u1 * v2 + u2 * v1)


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def splitting_type(P: Poly, disc: Discriminant, check: bool = True) -> SplitType:
    if check and (P.degree < 1 or not is_irreducible(P)):
        raise ReducibleInput(f"{P} is not irreducible")
    s = residue_symbol(disc.D, P, check=False)
    if s == 0:
        return SplitType.RAMIFIED
    return SplitType.SPLIT if s == 1 else SplitType.INERT


def find_splitting_primes(disc: Discriminant, max_deg: int) -> list[Poly]:
    """Monic irreducible P of degree <= max_deg that split in K, ordered by
    degree and then coefficients."""
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    out = []
    for k in range(1, max_deg + 1):
        for P in irreducibles(disc.ctx, k):
            if splitting_type(P, disc, check=False) is SplitType.SPLIT:
                out.append(P)
    return out
