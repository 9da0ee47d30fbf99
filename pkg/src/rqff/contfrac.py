"""Continued fraction expansion of sqrt(D) in F_q((1/T)).

The complete quotients are kept as surds ``(sqrt D + P_n) / Q_n`` with
``P_n, Q_n`` in F_q[T].  Because ``deg(sqrt D - f) < 0``, the partial
quotient ``a_n`` is the Euclidean quotient of ``f + P_n`` by ``Q_n``; the
update is

    P_{n+1} = a_n Q_n - P_n,    Q_{n+1} = (D - P_{n+1}^2) / Q_n

with the division exact.  Expansion stops once ``(P_{n+1}, Q_{n+1})``
returns to ``(P_1, Q_1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalDivisibilityViolation, PeriodNotFound, RelationViolated
from .polyring import Poly, divrem
from .quadext import Discriminant, norm


@dataclass(frozen=True)
class SurdState:
    disc: Discriminant
    n: int
    P: Poly
    Q: Poly


def init(disc: Discriminant) -> SurdState:
    """State at n = 1: P_1 = f, Q_1 = D - f^2 (a_0 = f, P_0 = 0, Q_0 = 1)."""
    return SurdState(disc, 1, disc.f, disc.r)


def step(s: SurdState) -> tuple[Poly, SurdState]:
    disc = s.disc
    a, _ = divrem(disc.f + s.P, s.Q)
    P_next = a * s.Q - s.P
    Q_next, rem = divrem(disc.D - P_next * P_next, s.Q)
    if not rem.is_zero() or Q_next.is_zero():
        raise InternalDivisibilityViolation(
            f"Q_{s.n} = {s.Q} does not divide D - P_{s.n + 1}^2 for D = {disc.D}"
        )
    return a, SurdState(disc, s.n + 1, P_next, Q_next)


def default_max_steps(disc: Discriminant) -> int:
    return 4 * disc.ctx.q**disc.d + 16


@dataclass
class CFExpansion:
    """One full period of the expansion of sqrt(D).

    ``a[0..ell]``, ``P[0..ell+1]``, ``Q[0..ell+1]``; ``p[n], q[n]`` are the
    convergents for ``0 <= n <= ell``.  ``kappa`` is the constant Q_v as an
    encoded field element.  ``norm_constants[n]`` is the measured constant
    with ``p_{n-1}^2 - D q_{n-1}^2 = norm_constants[n] * Q_n``.
    """

    disc: Discriminant
    a: list[Poly]
    P: list[Poly]
    Q: list[Poly]
    p: list[Poly]
    q: list[Poly]
    ell: int
    v: int
    kappa: int
    unit: tuple[Poly, Poly]
    regulator: int
    norm_constants: list[int] = field(default_factory=list)
    unit_index: int = 0

    @property
    def exploratory(self) -> bool:
        return not self.disc.squarefree

    def convergent(self, n: int) -> tuple[Poly, Poly]:
        """(p_n, q_n), including n = -1."""
        ctx = self.disc.ctx
        if n == -1:
            return Poly.one(ctx), Poly.zero(ctx)
        return self.p[n], self.q[n]

    def interior_qdegs(self) -> list[int]:
        return [self.Q[i].degree for i in range(1, self.v)]

    def to_json(self) -> dict:
        U, V = self.unit
        return {
            "D": str(self.disc.D),
            "a": [str(x) for x in self.a],
            "P": [str(x) for x in self.P],
            "Q": [str(x) for x in self.Q],
            "ell": self.ell,
            "v": self.v,
            "kappa": self.disc.ctx.element(self.kappa).to_json(),
            "unit": {"U": str(U), "V": str(V)},
            "regulator": self.regulator,
        }


def expand(disc: Discriminant, max_steps: int | None = None) -> CFExpansion:
    if max_steps is None:
        max_steps = default_max_steps(disc)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    ctx = disc.ctx
    a = [disc.f]
    P = [Poly.zero(ctx), disc.f]
    Q = [Poly.one(ctx), disc.r]
    s = init(disc)
    while True:
        if s.n > max_steps:
            raise PeriodNotFound(max_steps)
        a_n, s = step(s)
        a.append(a_n)
        P.append(s.P)
        Q.append(s.Q)
        if s.P == P[1] and s.Q == Q[1]:
            break
    ell = len(a) - 1

    p = [a[0]]
    q = [Poly.one(ctx)]
    p_prev, q_prev = Poly.one(ctx), Poly.zero(ctx)
    for n in range(1, ell + 1):
        p_n = a[n] * p[-1] + p_prev
        q_n = a[n] * q[-1] + q_prev
        p_prev, q_prev = p[-1], q[-1]
        p.append(p_n)
        q.append(q_n)

    # constants c_n with p_{n-1}^2 - D q_{n-1}^2 = c_n Q_n
    norm_constants = []
    for n in range(ell + 2):
        U, V = (Poly.one(ctx), Poly.zero(ctx)) if n == 0 else (p[n - 1], q[n - 1])
        N = norm(U, V, disc)
        ratio, rem = divrem(N, Q[n])
        if not rem.is_zero() or ratio.degree != 0:
            raise RelationViolated(f"p_{n - 1}^2 - D q_{n - 1}^2 is not a constant times Q_{n}")
        norm_constants.append(ratio.lc)

    v = next(n for n in range(1, ell + 1) if Q[n].degree == 0)
    unit_index = v
    unit = (p[v - 1], q[v - 1])
    if norm(*unit, disc).degree != 0:
        unit_index = ell
        unit = (p[ell - 1], q[ell - 1])
    return CFExpansion(
        disc=disc,
        a=a,
        P=P,
        Q=Q,
        p=p,
        q=q,
        ell=ell,
        v=v,
        kappa=Q[v].lc,
        unit=unit,
        regulator=unit[0].degree,
        norm_constants=norm_constants,
        unit_index=unit_index,
    )


def _constant_ratio(x: Poly, y: Poly):
    """c with x = c*y for a nonzero constant c, else None."""
    if x.degree != y.degree or y.is_zero():
        return None
    ctx = x.ctx
    c = ctx.div(x.lc, y.lc)
    return c if y.scale(c) == x else None


@dataclass
class SymmetryReport:
    exact: bool
    up_to_constant: bool
    first_violation: int | None
    constants: list[int]


def check_symmetry(e: CFExpansion) -> SymmetryReport:
    """Check a_{ell-i} = a_i for 0 < i < ell, exactly and up to F_q^*."""
    exact, loose, first = True, True, None
    consts = []
    for i in range(1, e.ell):
        x, y = e.a[e.ell - i], e.a[i]
        if x != y:
            exact = False
        c = _constant_ratio(x, y)
        consts.append(c)
        if c is None:
            loose = False
            if first is None:
                first = i
        elif first is None and not exact:
            first = i
    return SymmetryReport(exact, loose, first, consts)


@dataclass
class QuasiReport:
    c: int
    exponents: list[int]  # +1 or -1: a_{n+v} = c^{exponent} a_n


def quasi_relation(e: CFExpansion) -> QuasiReport:
    """Find c in F_q^* with a_{n+v} = c^{+-1} a_n for 1 <= n <= ell - v.

    Raises :class:`RelationViolated` if no such constant exists.
    """
    ctx = e.disc.ctx
    if e.v == e.ell:
        return QuasiReport(1, [1] * e.ell)
    ratios = []
    for n in range(1, e.ell - e.v + 1):
        r = _constant_ratio(e.a[n + e.v], e.a[n])
        if r is None:
            raise RelationViolated(f"a_{n + e.v} is not a constant multiple of a_{n}")
        ratios.append(r)
    c = ratios[0]
    cinv = ctx.inv(c)
    exps = []
    for n, r in enumerate(ratios, start=1):
        if r == c:
            exps.append(1)
        elif r == cinv:
            exps.append(-1)
        else:
            raise RelationViolated(f"a_{n + e.v} / a_{n} = {r} is neither c nor 1/c")
    return QuasiReport(c, exps)


def check_invariants(e: CFExpansion) -> dict[str, bool]:
    """Structural checks on a finished expansion, by name."""
    disc = e.disc
    D, d = disc.D, disc.d
    out = {}
    out["exact_divisibility"] = all(
        divrem(D - e.P[n] * e.P[n], e.Q[n])[1].is_zero() and e.Q[n - 1] * e.Q[n] == D - e.P[n] * e.P[n]
        for n in range(1, e.ell + 2)
    )
    out["recurrence"] = all(e.P[n + 1] == e.a[n] * e.Q[n] - e.P[n] for n in range(1, e.ell + 1))
    out["period_closure"] = e.P[e.ell + 1] == e.P[1] and e.Q[e.ell + 1] == e.Q[1]
    out["quasi_period"] = e.v == e.ell or 2 * e.v == e.ell
    out["degree_profile"] = (
        all(1 <= e.Q[n].degree <= d - 1 and e.a[n].degree == d - e.Q[n].degree for n in range(1, e.v))
        and e.Q[0].degree == 0
        and e.Q[e.v].degree == 0
        and all(x.degree >= 1 for x in e.a)
    )
    sym = check_symmetry(e)
    out["symmetry_up_to_constant"] = sym.up_to_constant
    out["convergent_norm"] = len(e.norm_constants) == e.ell + 2 and all(c != 0 for c in e.norm_constants)
    U, V = e.unit
    out["unit_norm_constant"] = norm(U, V, disc).degree == 0
    out["regulator_identity"] = e.regulator == sum(e.a[i].degree for i in range(e.unit_index))
    try:
        quasi_relation(e)
        out["quasi_relation"] = True
    except RelationViolated:
        out["quasi_relation"] = False
    return out
