"""The norm equation X^2 - D Y^2 = G with deg G < d.

A primary (coprime) solution exists iff ``G`` equals ``(-1)^i Q_i`` up to a
square of F_q^* for some complete denominator ``Q_i`` of sqrt(D); the
solution is then a scaled convergent ``s * (p_{i-1}, q_{i-1})``.  Scaling a
solution by ``s`` multiplies G by ``s^2``, so the literal statement without
square constants only holds in ``"exact"`` mode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import CFExpansion, expand
from .errors import BudgetExceeded, ConsistencyError, DegreeTooLarge, ZeroInput
from .polyring import Poly, gcd, monic_polys, poly_sqrt
from .quadext import Discriminant, norm

EXACT = "exact"
UP_TO_SQUARE = "upsq"


@dataclass(frozen=True)
class PellSolution:
    X: Poly
    Y: Poly
    c_scale: int  # s with (X, Y) = s * (p_{i-1}, q_{i-1}); 1 for brute-force hits
    index: int | None

    def to_json(self) -> dict:
        return {"X": str(self.X), "Y": str(self.Y), "scale": self.c_scale, "index": self.index}


def _check(disc: Discriminant, G: Poly, X: Poly, Y: Poly):
    if norm(X, Y, disc) != G or gcd(X, Y).degree != 0:
        raise ConsistencyError(f"({X}, {Y}) is not a primary solution for G = {G}")


def solve(
    disc: Discriminant, G: Poly, mode: str = UP_TO_SQUARE, expansion: CFExpansion | None = None
) -> PellSolution | None:
    """Find a primary solution from the convergents, or ``None``.

    Indices 1..ell are scanned before the trivial index 0, so G = 1 yields
    a nontrivial unit whenever one of norm 1 occurs in the period.
    """
    disc.require_squarefree()
    if G.is_zero():
        raise ZeroInput("G must be nonzero")
    if G.degree >= disc.d:
        raise DegreeTooLarge(f"deg G = {G.degree} must be < d = {disc.d}")
    if mode not in (EXACT, UP_TO_SQUARE):
        raise ValueError(f"unknown mode {mode!r}")
    e = expansion or expand(disc)
    ctx = disc.ctx
    minus_one = ctx.neg(1)
    for i in list(range(1, e.ell + 1)) + [0]:
        Qi = e.Q[i]
        if Qi.degree != G.degree:
            continue
        target = Qi.scale(minus_one) if i % 2 else Qi
        # G = lam * target for a constant lam?
        lam = ctx.div(G.lc, target.lc)
        if target.scale(lam) != G:
            continue
        if mode == EXACT:
            if lam != 1:
                continue
            s = 1
        else:
            if not ctx.is_square(lam):
                continue
            s = ctx.sqrt(lam)
        U, V = e.convergent(i - 1)
        X, Y = U.scale(s), V.scale(s)
        _check(disc, G, X, Y)
        return PellSolution(X, Y, s, i)
    return None


def brute_force(disc: Discriminant, G: Poly, max_deg_Y: int, budget: int = 10**6) -> list[PellSolution]:
    """All primary solutions with deg Y <= max_deg_Y, one per (+-X, +-Y) class.

    Y runs over zero and the monic polynomials, each rescaled by one
    representative of every square class value c^2; X is recovered with
    :func:`poly_sqrt`.
    """
    if max_deg_Y < 0:
        raise ValueError("max_deg_Y must be >= 0")
    ctx = disc.ctx
    q = ctx.q
    if q ** (max_deg_Y + 1) > budget:
        raise BudgetExceeded(f"q^(max_deg_Y+1) = {q ** (max_deg_Y + 1)} exceeds {budget}")
    scales = {}
    for c in range(1, q):
        scales.setdefault(ctx.mul(c, c), c)
    D = disc.D
    out = []

    def test(Y: Poly):
        rhs = D * Y * Y + G
        if rhs.is_zero():
            return
        X = poly_sqrt(rhs)
        if X is not None and gcd(X, Y).degree == 0:
            out.append(PellSolution(X, Y, 1, None))

    test(Poly.zero(ctx))
    for k in range(max_deg_Y + 1):
        for Ym in monic_polys(ctx, k):
            for c in sorted(scales.values()):
                test(Ym.scale(c))
    out.sort(key=lambda s: (s.Y.sort_key(), s.X.sort_key()))
    return out
