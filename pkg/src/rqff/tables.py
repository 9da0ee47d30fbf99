"""Closed-form quasi-period tables for the four (A^m +- ...)^2 +- A families.

Each family's quasi-period is listed in three sections: n = 0, 1; a
repeating block of four rows n = 4j-2 .. 4j+1 for 1 <= j <= t; and a closing
section depending on m mod 4.  :func:`expected_table` instantiates those rows
at concrete (q, a, m); :func:`compare` lines them up against the expansion
engine, which is treated as ground truth.  Rational constants such as -1/2
are read in F_q.

Rows whose symbolic exponents drop below 1 are omitted (those entries belong
to a collision between sections and are left to the engine).  If two
sections claim the same index the earlier one is kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import THM3_VARIANTS, thm3_discriminant
from .contfrac import CFExpansion, expand
from .errors import CaseNotCovered, NotMonicA, SideConditionViolated
from .ffield import FieldCtx
from .polyring import Poly
from .quadext import make_discriminant

FIRST, SECOND, THIRD = "first", "second", "third"

EXACT, CONSTANT, MISMATCH = "exact", "constant", "mismatch"


@dataclass
class ExpectedRow:
    n: int
    section: str
    j: int | None
    P: Poly
    Q: Poly
    a: Poly


class _Expr:
    """Builds c_k A^k + ... + c_a a + c_0 from (coefficient, monomial) pairs."""

    def __init__(self, A: Poly, a: Poly, ctx: FieldCtx):
        self.A, self.a, self.ctx = A, a, ctx

    def const(self, c) -> int:
        c = Fraction(c)
        ctx = self.ctx
        return ctx.div(ctx.embed_int(c.numerator), ctx.embed_int(c.denominator))

    def __call__(self, *terms) -> Poly:
        # terms: (coef, "A", k) | (coef, "a") | (coef,)
        out = Poly.zero(self.ctx)
        for t in terms:
            c = self.const(t[0])
            if len(t) == 1:
                out = out + Poly.constant(self.ctx, self.ctx.element(c))
            elif t[1] == "a":
                out = out + self.a.scale(c)
            else:
                out = out + (self.A ** t[2]).scale(c)
        return out


def _case_t(variant: int, m: int) -> tuple[str, int]:
    if variant in (1, 2):
        r = m % 4
        if r == 2:
            return "4t-2", (m + 2) // 4
        if r == 3:
            return "4t-1", (m + 1) // 4
        if r == 0:
            return "4t", m // 4
        return "4t+1", (m - 1) // 4
    if m % 2:
        return ("4t+1" if m % 4 == 1 else "4t+3"), (m - 1) // 4 if m % 4 == 1 else (m - 3) // 4
    return ("4t" if m % 4 == 0 else "4t+2"), m // 4


def _symbolic_rows(variant: int, m: int, t: int, case: str):
    """Yield (n, section, j, exponents, spec) with spec = (P, Q, a) term tuples."""
    M = ("A", m)

    def A(k):
        return ("A", k)

    yield 0, FIRST, None, [], {
        1: ([(0,)], [(1,)], [(1, *M), (1, "a")]),
        2: ([(0,)], [(1,)], [(1, *M), (-1, "a")]),
        3: ([(0,)], [(1,)], [(1, *M), (1, "a"), (1,)]),
        4: ([(0,)], [(1,)], [(1, *M), (-1, "a"), (-1,)]),
    }[variant]
    yield 1, FIRST, None, [m - 1], {
        1: ([(1, *M), (1, "a")], [(1, *A(1))], [(2, *A(m - 1)), (1,)]),
        2: ([(1, *M), (-1, "a")], [(1, *A(1))], [(2, *A(m - 1)), (-1,)]),
        3: ([(1, *M), (1, "a"), (1,)], [(-1, *A(1))], [(-2, *A(m - 1)), (-1,)]),
        # printed as -2A^m+1
        4: ([(1, *M), (-1, "a"), (-1,)], [(-1, *A(1))], [(-2, *M), (1,)]),
    }[variant]

    # P-patterns for the repeating block: (even rows, odd rows)
    Pp = {
        1: ([(1, *M), (1, "a"), (1,)], [(1, *M), (-1, "a"), (-1,)]),
        2: ([(1, *M), (-1, "a"), (-1,)], [(1, *M), (1, "a"), (1,)]),
        3: ([(1, *M), (1, "a")], [(1, *M), (-1, "a")]),
        4: ([(1, *M), (-1, "a")], [(1, *M), (1, "a")]),
    }[variant]
    for j in range(1, t + 1):
        e1, e2, e3, e4, e5 = m - 2 * j + 1, 2 * j - 1, 2 * j, m - 2 * j, 2 * j + 1
        e6 = m - 2 * j - 1
        Pe, Po = Pp
        block = {
            1: [
                ([(-2, *A(e1))], [(-1, *A(e2))]),
                ([(-1, *A(e3))], [(-2, *A(e4))]),
                ([(2, *A(e4))], [(1, *A(e3))]),
                ([(1, *A(e5))], [(2, *A(e6))]),
            ],
            2: [
                ([(2, *A(e1))], [(1, *A(e2))]),
                ([(-1, *A(e3))], [(-2, *A(e4))]),
                ([(-2, *A(e4))], [(-1, *A(e3))]),
                ([(1, *A(e5))], [(2, *A(e6))]),
            ],
            3: [
                ([(-2, *A(e1))], [(-1, *A(e2))]),
                ([(-1, *A(e3))], [(-2, *A(e4))]),
                ([(-2, *A(e4))], [(-1, *A(e3))]),
                ([(-1, *A(e5))], [(-2, *A(e6))]),
            ],
            4: [
                ([(2, *A(e1))], [(1, *A(e2))]),
                ([(-1, *A(e3))], [(-2, *A(e4))]),
                ([(2, *A(e4))], [(1, *A(e3))]),
                # printed Q_{4j+1} = -A^{m-2j-1}
                ([(-1, *A(e6))], [(-2, *A(e6))]),
            ],
        }[variant]
        exps = [
            [e1, e2],
            [e3, e4],
            [e4, e3],
            [e6, e6] if variant == 4 else [e5, e6],
        ]
        for k, (Q, a) in enumerate(block):
            n = 4 * j - 2 + k
            yield n, SECOND, j, exps[k], (Pe if k % 2 == 0 else Po, Q, a)

    for n, exps, spec in _third_section(variant, m, t, case):
        yield n, THIRD, None, exps, spec


def _third_section(variant, m, t, case):
    M = ("A", m)

    def A(k):
        return ("A", k)

    h = Fraction(1, 2)
    P_plus = [(1, *M), (1, "a")]
    P_plus1 = [(1, *M), (1, "a"), (1,)]
    P_minus = [(1, *M), (-1, "a")]
    P_minus1 = [(1, *M), (-1, "a"), (-1,)]
    n0 = 4 * t + 2
    if variant == 1:
        if case == "4t-2":
            return [
                (n0, [1], (P_plus1, [(-2, *A(1))], [(1, *M), (-h,)])),
                (n0 + 1, [], (P_plus, [(-h,)], [(-4, *M), (-4, "a")])),
            ]
        if case == "4t":
            # printed Q_{4t+2} = 2A^{2-1}
            return [
                (n0, [m - 1], (P_plus1, [(2, *A(1))], [(-1, *A(m - 1)), (-h,)])),
                (n0 + 1, [], (P_plus, [(-h,)], [(-4, *M), (-4, "a")])),
            ]
        last_Q = [(-1, *A(1))] if case == "4t-1" else [(2, *A(1))]
        return [
            (n0, [m - 2 * t - 1, m - 2], (P_plus1, [(-2, *A(m - 2 * t - 1))], [(-1, *A(m - 2))])),
            (n0 + 1, [2 * t + 2], (P_minus1, [(-1, *A(2 * t + 2))], [(-2, *A(1))])),
            (n0 + 2, [m - 1], (P_plus1, last_Q, [(-2, *A(m - 1)), (1,)])),
            (n0 + 3, [], (P_plus, [(-1,)] if case == "4t-1" else [(h,)], [(-2, *M), (-2, "a")])),
        ]
    if variant == 2:
        if case == "4t-2":
            return [
                (n0, [m - 1], (P_minus1, [(2, *A(1))], [(1, *A(m - 1)), (-1,)])),
                (n0 + 1, [], (P_minus, [(h,)], [(4, *M), (-4, "a")])),
            ]
        if case == "4t":
            return [
                (n0, [m - 1], (P_minus1, [(2, *A(1))], [(2, *A(m - 1)), (-1,)])),
                (n0 + 1, [], (P_minus, [(h,)], [(4, *M), (-4, "a")])),
            ]
        if case == "4t-1":
            return [
                (n0, [m - 2 * t - 1, m - 2], (P_minus1, [(2, *A(m - 2 * t - 1))], [(1, *A(m - 2))])),
                (n0 + 1, [2 * t], (P_plus1, [(-1, *A(2 * t))], [(-2, *A(1))])),
                (n0 + 2, [m - 2 * t, m - 1], (P_minus1, [(-2, *A(m - 2 * t))], [(-1, *A(m - 1)), (1,)])),
                (n0 + 3, [], (P_minus, [(-h,)], [(-4, *M), (4, "a")])),
            ]
        return [
            (n0, [m - 2 * t - 1, m - 2], (P_minus1, [(2, *A(m - 2 * t - 1))], [(1, *A(m - 2))])),
            (n0 + 1, [2 * t + 2], (P_plus1, [(-1, *A(2 * t + 2))], [(-2, *A(1))])),
            (n0 + 2, [m - 1], (P_minus1, [(-2, *A(1))], [(-1, *A(m - 1)), (h,)])),
            (n0 + 3, [], (P_minus, [(-h,)], [(-4, *M), (4, "a")])),
        ]
    if variant == 3:
        if case in ("4t+1", "4t+3"):
            return [
                (n0, [m - 1], (P_plus, [(-2, *A(1))], [(-1, *A(m - 1)), (-h,)])),
                (n0 + 1, [], (P_plus1, [(h,)], [(4, *M), (4, "a"), (1,)])),
            ]
        return [
            (4 * t + 1, [2 * t + 1], (P_minus, [(-1, *A(2 * t + 1))], [(-2, *A(1))])),
            (n0, [m - 1], (P_plus, [(-2, *A(1))], [(-1, *A(m - 1)), (-h,)])),
            (n0 + 1, [], (P_plus1, [(-h,)], [(-4, *M), (-4, "a"), (-4,)])),
        ]
    # variant 4: both printed cases coincide
    return [
        (n0, [m - 1], (P_minus, [(2, *A(1))], [(1, *A(m - 1)), (-h,)])),
        (n0 + 1, [], (P_minus1, [(-h,)], [(-4, *M), (4, "a"), (4,)])),
    ]


def claimed_quasi_period(variant: int, m: int) -> int:
    """Index of the last row of the printed table (the claimed v)."""
    case, t = _case_t(variant, m)
    if variant in (1, 2) and case in ("4t-1", "4t+1"):
        return 4 * t + 5
    return 4 * t + 3


def _validate(variant: int, m: int, a: Poly):
    if variant not in THM3_VARIANTS:
        raise SideConditionViolated(f"variant must be 1..4, got {variant}")
    if m < 2:
        raise CaseNotCovered(f"the tables start at m = 2, got m = {m}")
    if a.degree < 1:
        raise SideConditionViolated("a must be nonconstant")
    if not (a + a + 1).is_monic():
        raise NotMonicA()


def expected_table(variant: int, m: int, a: Poly, ctx: FieldCtx | None = None) -> list[ExpectedRow]:
    """Instantiate the printed rows for ``variant`` (1-4) at (m, a)."""
    ctx = ctx or a.ctx
    _validate(variant, m, a)
    case, t = _case_t(variant, m)
    A = a + a + 1
    ex = _Expr(A, a, ctx)
    rows: dict[int, ExpectedRow] = {}
    for n, section, j, exps, (P, Q, aa) in _symbolic_rows(variant, m, t, case):
        if any(k < 1 for k in exps) or n in rows:
            continue
        rows[n] = ExpectedRow(n, section, j, ex(*P), ex(*Q), ex(*aa))
    return [rows[n] for n in sorted(rows)]


def table_omissions(variant: int, m: int) -> list[tuple[int, str]]:
    """(n, reason) for printed rows that :func:`expected_table` leaves out."""
    case, t = _case_t(variant, m)
    seen, out = set(), []
    for n, section, j, exps, _ in _symbolic_rows(variant, m, t, case):
        if any(k < 1 for k in exps):
            out.append((n, f"{section}: exponent {min(exps)} < 1"))
        elif n in seen:
            out.append((n, f"{section}: index already claimed"))
        else:
            seen.add(n)
    return out


def coherence_failures(rows: list[ExpectedRow], D: Poly) -> list[tuple[int, str]]:
    """Check P_{n+1} = a_n Q_n - P_n and Q_n Q_{n+1} = D - P_{n+1}^2 between
    consecutive printed rows; returns the failing (n, relation) pairs."""
    by_n = {r.n: r for r in rows}
    out = []
    for r in rows:
        nxt = by_n.get(r.n + 1)
        if nxt is None:
            continue
        if nxt.P != r.a * r.Q - r.P:
            out.append((r.n, "P"))
        if r.Q * nxt.Q != D - nxt.P * nxt.P:
            out.append((r.n, "Q"))
    return out


def classify(expected: Poly, actual: Poly) -> str:
    if expected == actual:
        return EXACT
    if expected.is_zero() or actual.is_zero() or expected.degree != actual.degree:
        return MISMATCH
    c = expected.ctx.div(expected.lc, actual.lc)
    return CONSTANT if actual.scale(c) == expected else MISMATCH


@dataclass
class RowMatch:
    n: int
    field: str
    section: str
    expected: Poly
    actual: Poly
    verdict: str


@dataclass
class TableReport:
    variant: int
    m: int
    a: Poly
    A: Poly
    D: Poly
    matches: list[RowMatch]
    engine_v: int
    claimed_v: int
    not_expected: list[int]  # engine rows 0..v without a printed row
    out_of_range: list[int]  # printed rows past the engine's quasi-period
    omitted: list[tuple[int, str]]
    min_qdeg: int
    min_witness: int | None
    witness_constant: int | None  # c with Q_w = c*A, if such a row exists
    expansion: CFExpansion = field(repr=False)

    @property
    def family(self) -> str:
        return THM3_VARIANTS[self.variant]

    def summary(self) -> dict[str, int]:
        out = {EXACT: 0, CONSTANT: 0, MISMATCH: 0}
        for r in self.matches:
            out[r.verdict] += 1
        return out

    def interior_mismatches(self, section: str | None = SECOND) -> list[RowMatch]:
        """Mismatches at 0 < n < engine v, restricted to ``section``."""
        return [
            r
            for r in self.matches
            if r.verdict == MISMATCH and 0 < r.n < self.engine_v and (section is None or r.section == section)
        ]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "a": str(self.a),
            "A": str(self.A),
            "D": str(self.D),
            "engine_v": self.engine_v,
            "claimed_v": self.claimed_v,
            "summary": self.summary(),
            "matches": [
                {
                    "n": r.n,
                    "field": r.field,
                    "section": r.section,
                    "expected": str(r.expected),
                    "actual": str(r.actual),
                    "verdict": r.verdict,
                }
                for r in self.matches
            ],
            "not_expected": self.not_expected,
            "out_of_range": self.out_of_range,
            "omitted": [{"n": n, "reason": why} for n, why in self.omitted],
            "min_qdeg": self.min_qdeg,
            "min_witness": self.min_witness,
        }

    def render(self) -> str:
        """Aligned text table of the comparison."""
        head = (
            f"{self.family}  m={self.m}  a={self.a}  A={self.A}\n"
            f"engine v={self.engine_v}  printed v={self.claimed_v}  "
            f"summary={self.summary()}\n"
        )
        cols = [("n", "field", "section", "printed", "engine", "verdict")]
        for r in self.matches:
            cols.append((str(r.n), r.field, r.section, str(r.expected), str(r.actual), r.verdict))
        widths = [max(len(row[i]) for row in cols) for i in range(6)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cols]
        tail = []
        if self.not_expected:
            tail.append(f"engine rows without a printed row: {self.not_expected}")
        if self.out_of_range:
            tail.append(f"printed rows past engine v: {self.out_of_range}")
        for n, why in self.omitted:
            tail.append(f"omitted printed row {n}: {why}")
        return head + "\n".join(lines + tail) + "\n"


def compare(variant: int, m: int, a: Poly, ctx: FieldCtx | None = None) -> TableReport:
    ctx = ctx or a.ctx
    rows = expected_table(variant, m, a, ctx)
    D, A = thm3_discriminant(variant, a, m)
    disc = make_discriminant(D)
    e = expand(disc)
    matches = []
    covered = set()
    out_of_range = []
    for r in rows:
        if r.n > e.v:
            out_of_range.append(r.n)
            continue
        covered.add(r.n)
        for name, exp_val, act in (("P", r.P, e.P[r.n]), ("Q", r.Q, e.Q[r.n]), ("a", r.a, e.a[r.n])):
            matches.append(RowMatch(r.n, name, r.section, exp_val, act, classify(exp_val, act)))
    not_expected = [n for n in range(e.v + 1) if n not in covered]
    qdegs = e.interior_qdegs()
    min_qdeg = min(qdegs) if qdegs else disc.d
    witness, wconst = None, None
    twos = (ctx.embed_int(2), ctx.embed_int(-2))
    for i in range(1, e.v):
        if e.Q[i].degree != min_qdeg:
            continue
        c = ctx.div(e.Q[i].lc, A.lc)
        is_multiple = A.scale(c) == e.Q[i]
        if witness is None or (is_multiple and (wconst is None or (c in twos and wconst not in twos))):
            witness, wconst = i, (c if is_multiple else None)
    return TableReport(
        variant=variant,
        m=m,
        a=a,
        A=A,
        D=D,
        matches=matches,
        engine_v=e.v,
        claimed_v=claimed_quasi_period(variant, m),
        not_expected=not_expected,
        out_of_range=out_of_range,
        omitted=table_omissions(variant, m),
        min_qdeg=min_qdeg,
        min_witness=witness,
        witness_constant=wconst,
        expansion=e,
    )
