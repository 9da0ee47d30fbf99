"""Exact class numbers from point counts on y^2 = D(x).

For D monic of even degree 2d the curve has genus g = d - 1 and two rational
points at infinity.  Counting points over F_q, ..., F_{q^g} determines the
L-polynomial, ``h_X = L(1)`` is the order of the degree-zero divisor class
group, and since both infinite places are rational the ideal class number of
F_q[T][sqrt D] is ``h_X / R`` with R the regulator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import CFExpansion, expand
from .errors import BudgetExceeded, MissingCounts, NonPrimeBase, RegulatorNondivisibility
from .ffield import make_field
from .quadext import Discriminant

DEFAULT_BUDGET = 10**7


def count_points(disc: Discriminant, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """N_n = #{(x, y) in F_{q^n}^2 : y^2 = D(x)} + 2."""
    ctx = disc.ctx
    if not ctx.is_prime:
        raise NonPrimeBase("point counting needs a prime base field")
    p = ctx.p
    if n < 1:
        raise ValueError("n must be >= 1")
    if p**n > budget:
        raise BudgetExceeded(f"q^n = {p}^{n} exceeds the budget {budget}")
    coeffs = list(reversed(disc.D.coeffs))
    if n == 1:
        total = 0
        half = (p - 1) // 2
        for x in range(p):
            y = 0
            for c in coeffs:
                y = (y * x + c) % p
            if y == 0:
                total += 1
            elif pow(y, half, p) == 1:
                total += 2
        return total + 2

    field = make_field(p, n)
    field.build_tables()
    exp, log, zech = field._exp, field._log, field._zech
    order = field.q - 1
    total = 0
    for x in range(field.q):
        if x == 0:
            y = disc.D.coeff(0)
        else:
            lx = log[x]
            # Horner in the log domain: y <- y*x + c
            y = 0
            for c in coeffs:
                if y:
                    ly = (log[y] + lx) % order
                    if c:
                        z = zech[(log[c] - ly) % order]
                        y = 0 if z < 0 else exp[(ly + z) % order]
                    else:
                        y = exp[ly]
                else:
                    y = c
        if y == 0:
            total += 1
        elif log[y] % 2 == 0:
            total += 2
    return total + 2


@dataclass(frozen=True)
class LPolynomial:
    coeffs: tuple[int, ...]
    q: int

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def __call__(self, u: int) -> int:
        return sum(c * u**k for k, c in enumerate(self.coeffs))

    def power_sums(self, n: int) -> list[int]:
        """s_1..s_n where s_k is the sum of k-th powers of the inverse roots."""
        c = list(self.coeffs) + [0] * max(0, n + 1 - len(self.coeffs))
        s = []
        for k in range(1, n + 1):
            val = -k * c[k] - sum(s[j - 1] * c[k - j] for j in range(1, k))
            s.append(val)
        return s

    def predicted_count(self, n: int) -> int:
        return self.q**n + 1 - self.power_sums(n)[-1]

    def functional_equation_holds(self) -> bool:
        g, c = self.genus, self.coeffs
        return c[0] == 1 and all(c[2 * g - i] == self.q ** (g - i) * c[i] for i in range(g + 1))


def l_polynomial(disc: Discriminant, counts: list[int] | None = None, budget: int = DEFAULT_BUDGET) -> LPolynomial:
    """L-polynomial from N_1..N_g (counted here unless supplied)."""
    g = disc.genus
    q = disc.ctx.q
    if counts is None:
        counts = [count_points(disc, n, budget) for n in range(1, g + 1)]
    if len(counts) < g:
        raise MissingCounts(f"need {g} point counts, got {len(counts)}")
    s = [q**n + 1 - counts[n - 1] for n in range(1, g + 1)]
    c = [1]
    for k in range(1, g + 1):
        acc = sum(s[j - 1] * c[k - j] for j in range(1, k + 1))
        c.append(-acc // k)
        assert acc % k == 0, "non-integral L-polynomial coefficient"
    for i in range(g - 1, -1, -1):
        c.append(q ** (g - i) * c[i])
    return LPolynomial(tuple(c), q)


def weil_bound_holds(disc: Discriminant, counts: list[int]) -> bool:
    g, q = disc.genus, disc.ctx.q
    for n, N in enumerate(counts, start=1):
        a = q**n + 1 - N
        if a * a > 4 * g * g * q**n:
            return False
    return True


@dataclass
class ClassNumberReport:
    disc: Discriminant
    g: int
    point_counts: list[int]
    L: LPolynomial
    h_X: int
    R: int
    h_O: int

    def to_json(self) -> dict:
        return {
            "D": str(self.disc.D),
            "g": self.g,
            "N": self.point_counts,
            "L": list(self.L.coeffs),
            "hX": self.h_X,
            "R": self.R,
            "hO": self.h_O,
        }


def class_numbers(
    disc: Discriminant, expansion: CFExpansion | None = None, budget: int = DEFAULT_BUDGET
) -> ClassNumberReport:
    disc.require_squarefree()
    if not disc.ctx.is_prime:
        raise NonPrimeBase("the class-number oracle needs a prime base field")
    g = disc.genus
    counts = [count_points(disc, n, budget) for n in range(1, g + 1)]
    L = l_polynomial(disc, counts)
    h_X = L(1)
    if expansion is None:
        expansion = expand(disc)
    R = expansion.regulator
    if h_X % R:
        raise RegulatorNondivisibility(f"R = {R} does not divide h_X = {h_X} for D = {disc.D}")
    return ClassNumberReport(disc, g, counts, L, h_X, R, h_X // R)
