"""Command-line front end.

Exit codes: 0 success, 1 internal consistency failure, 2 usage or
validation error.  ``--json`` switches any subcommand to JSON output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import pell as pell_mod
from .bounds import KINDS, THM3_VARIANTS, FamilySpec, lower_bound, make_family
from .contfrac import check_invariants, expand
from .errors import BudgetExceeded, ConsistencyError, NotSplit, ValidationError
from .ffield import FieldCtx, field_of_order, make_field
from .polyring import Poly, irreducibles, is_squarefree, monic_polys, parse_poly, random_poly, residue_symbol
from .quadext import make_discriminant, find_splitting_primes
from .tables import compare
from .zeta import class_numbers

ORACLE_MAX_GENUS = 3
ORACLE_MAX_SIZE = 10**6


def _field(args) -> FieldCtx:
    if args.q is None:
        raise ValidationError("--q is required")
    if getattr(args, "p", None) is None:
        return field_of_order(args.q)
    e = args.e or 1
    modulus = None
    if args.modulus:
        base = make_field(args.p)
        modulus = list(parse_poly(base, args.modulus).coeffs)
    ctx = make_field(args.p, e, modulus)
    if ctx.q != args.q:
        raise ValidationError(f"--q {args.q} does not equal p^e = {ctx.q}")
    return ctx


def _poly(ctx: FieldCtx, text: str | None, name: str) -> Poly:
    if text is None:
        raise ValidationError(f"--{name} is required")
    return parse_poly(ctx, text)


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text.rstrip("\n"))


# -- subcommands ------------------------------------------------------------


def cmd_expand(args):
    ctx = _field(args)
    D = _poly(ctx, args.D, "D")
    disc = make_discriminant(D, require_squarefree=False)
    e = expand(disc, args.max_steps)
    inv = check_invariants(e)
    data = e.to_json()
    data["exploratory"] = e.exploratory
    data["invariants"] = inv
    lines = [f"D = {D} over GF({ctx.q})" + ("  [not squarefree: exploratory]" if e.exploratory else "")]
    lines.append(f"period ell = {e.ell}, quasi-period v = {e.v}")
    rows = [("n", "a_n", "P_n", "Q_n")]
    for n in range(e.ell + 1):
        rows.append((str(n), str(e.a[n]), str(e.P[n]), str(e.Q[n])))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.append("Q-cycle: (" + ", ".join(str(e.Q[n]) for n in range(e.v + 1)) + ")")
    U, V = e.unit
    lines.append(f"unit: U = {U}, V = {V}")
    lines.append(f"regulator = {e.regulator}")
    bad = [k for k, ok in inv.items() if not ok]
    if bad:
        lines.append("invariant failures: " + ", ".join(bad))
    _emit(args, data, "\n".join(lines))


def cmd_symbol(args):
    ctx = _field(args)
    F, P = _poly(ctx, args.F, "F"), _poly(ctx, args.P, "P")
    s = residue_symbol(F, P)
    _emit(args, {"F": str(F), "P": str(P), "symbol": s}, str(s))


def cmd_bound(args):
    ctx = _field(args)
    disc = make_discriminant(_poly(ctx, args.D, "D"))
    rep = lower_bound(disc, _poly(ctx, args.P, "P"))
    text = (
        f"D = {disc.D}, P = {rep.P}, v = {rep.v}\n"
        f"interior deg Q_i: {rep.qdegs}\n"
        f"bound = {rep.bound} (h >= {rep.bound_int})"
    )
    _emit(args, rep.to_json(), text)


def cmd_pell(args):
    ctx = _field(args)
    disc = make_discriminant(_poly(ctx, args.D, "D"))
    G = _poly(ctx, args.G, "G")
    sol = pell_mod.solve(disc, G, mode=args.mode)
    data = {"D": str(disc.D), "G": str(G), "mode": args.mode, "solution": sol.to_json() if sol else None}
    lines = [f"X = {sol.X}, Y = {sol.Y}  (index {sol.index}, scale {sol.c_scale})" if sol else "no primary solution"]
    if args.brute_max is not None:
        found = pell_mod.brute_force(disc, G, args.brute_max)
        data["brute_force"] = [s.to_json() for s in found]
        lines.append(f"brute force (deg Y <= {args.brute_max}): {len(found)} solution(s)")
        lines += [f"  X = {s.X}, Y = {s.Y}" for s in found]
    _emit(args, data, "\n".join(lines))


def _family_spec(args, ctx: FieldCtx) -> FamilySpec:
    def opt(name):
        text = getattr(args, name)
        return parse_poly(ctx, text) if text is not None else None

    c = ctx.embed_int(args.c) if args.c is not None else None
    return FamilySpec(
        kind=args.kind,
        F=opt("F"),
        c=c,
        S=opt("S"),
        G=opt("G"),
        H=opt("H"),
        a=opt("a"),
        m=args.m,
        P=opt("P"),
        variant=args.variant,
    )


def cmd_family(args):
    ctx = _field(args)
    inst = make_family(_family_spec(args, ctx), ctx)
    P = inst.suggested_P
    data = {"kind": args.kind, "D": str(inst.disc.D), "P": str(P) if P is not None else None}
    lines = [f"{args.kind}: D = {inst.disc.D}"]
    if inst.A is not None:
        data["A"] = str(inst.A)
        lines.append(f"A = {inst.A}")
    if P is None:
        lines.append("no prime P supplied or derivable; pass --P for a bound")
        data["predicted"] = None
    else:
        pred = inst.predicted_bound(P)
        data["predicted"] = {"num": pred.numerator, "den": pred.denominator}
        lines.append(f"P = {P}, predicted bound {pred}")
        try:
            rep = lower_bound(inst.disc, P)
        except NotSplit as exc:
            data["bound"] = None
            lines.append(f"no bound: {exc}")
        else:
            data["bound"] = rep.to_json()
            data["ok"] = rep.bound >= pred
            lines.append(f"engine bound {rep.bound} (h >= {rep.bound_int}), v = {rep.v}")
    _emit(args, data, "\n".join(lines))


def _variant(kind: str) -> int:
    if kind.startswith("thm3_") and kind[5:].isdigit():
        v = int(kind[5:])
        if v in THM3_VARIANTS:
            return v
    for v, name in THM3_VARIANTS.items():
        if name == kind:
            return v
    raise ValidationError(f"--kind must be thm3_1..thm3_4, got {kind!r}")


def cmd_verify_tables(args):
    ctx = _field(args)
    rep = compare(_variant(args.kind), args.m, _poly(ctx, args.a, "a"), ctx)
    data = rep.to_json()
    data["interior_second_mismatches"] = len(rep.interior_mismatches())
    text = rep.render() + f"interior second-section mismatches: {data['interior_second_mismatches']}"
    _emit(args, data, text)


def cmd_classnum(args):
    ctx = _field(args)
    rep = class_numbers(make_discriminant(_poly(ctx, args.D, "D")))
    text = (
        f"D = {rep.disc.D}, g = {rep.g}\n"
        f"N = {rep.point_counts}\nL = {list(rep.L.coeffs)}\n"
        f"hX = {rep.h_X}, R = {rep.R}, hO = {rep.h_O}"
    )
    _emit(args, rep.to_json(), text)


# -- search -----------------------------------------------------------------


@dataclass
class Hit:
    source: str
    D: Poly
    P: Poly
    bound: int
    h_O: int | None

    def to_json(self) -> dict:
        return {"source": self.source, "D": str(self.D), "P": str(self.P), "bound": self.bound, "hO": self.h_O}


def _candidates(ctx: FieldCtx, max_deg: int, seed: int):
    """(source, D, preferred P or None) in a fixed order: the closing
    example family, a cor1 grid, then seeded random D."""
    T = Poly.T(ctx)
    m = 1
    while 2 * m + 2 <= max_deg:
        S = T**m + 1
        yield "example", (T * S) ** 2 + S, T
        m += 1
    for gdeg in range(2, max_deg // 2):
        for P in irreducibles(ctx, 1):
            for G in monic_polys(ctx, gdeg):
                for c in range(1, ctx.q):
                    if residue_symbol(Poly.constant(ctx, c), P, check=False) == 1:
                        yield "cor1", (P * G) ** 2 + c, P
    rng = random.Random(seed)
    degs = list(range(4, max_deg + 1, 2))
    while degs:
        yield "random", random_poly(ctx, rng.choice(degs), rng), None


def search(ctx: FieldCtx, max_deg: int, min_bound: int, budget: int, seed: int = 0, force_oracle: bool = False):
    """Scan discriminants and return (hits, exhausted_budget)."""
    if max_deg < 4 or max_deg % 2:
        raise ValidationError("--max-deg must be even and >= 4")
    if budget < 1:
        raise ValidationError("--budget must be >= 1")
    hits, seen, scanned = [], set(), 0
    for source, D, P0 in _candidates(ctx, max_deg, seed):
        if scanned >= budget:
            return hits, True
        if D in seen:
            continue
        seen.add(D)
        scanned += 1
        if D.degree > max_deg or not is_squarefree(D):
            continue
        try:
            disc = make_discriminant(D)
        except ValidationError:
            continue
        e = expand(disc)
        primes = [P0] if P0 is not None else []
        primes += [P for P in find_splitting_primes(disc, 2) if P != P0]
        best = None
        for P in primes:
            try:
                rep = lower_bound(disc, P, e)
            except NotSplit:
                continue
            if best is None or rep.bound_int > best.bound_int:
                best = rep
        if best is None or best.bound_int < min_bound:
            continue
        h = None
        g = disc.genus
        if ctx.is_prime and (force_oracle or (g <= ORACLE_MAX_GENUS and ctx.q**g <= ORACLE_MAX_SIZE)):
            h = class_numbers(disc, e).h_O
        hits.append(Hit(source, D, best.P, best.bound_int, h))
    return hits, False


def cmd_search(args):
    ctx = _field(args)
    hits, exhausted = search(ctx, args.max_deg, args.min_h, args.budget, args.seed, args.force_oracle)
    if exhausted:
        print(f"warning: {BudgetExceeded.__name__}: budget of {args.budget} discriminants reached", file=sys.stderr)
    data = {"q": ctx.q, "hits": [h.to_json() for h in hits], "budget_exhausted": exhausted}
    lines = [f"{len(hits)} hit(s)"]
    for h in hits:
        extra = f", hO = {h.h_O}" if h.h_O is not None else ""
        lines.append(f"[{h.source}] D = {h.D}, P = {h.P}, bound {h.bound}{extra}")
    _emit(args, data, "\n".join(lines))


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rqff", description="Real quadratic function field toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, polys=()):
        sp = sub.add_parser(name)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--json", action="store_true")
        for p in polys:
            sp.add_argument(f"--{p}")
        sp.set_defaults(func=func)
        return sp

    sp = add("expand", cmd_expand, ["D"])
    sp.add_argument("--p", type=int)
    sp.add_argument("--e", type=int)
    sp.add_argument("--modulus")
    sp.add_argument("--max-steps", type=int, dest="max_steps")
    add("symbol", cmd_symbol, ["F", "P"])
    add("bound", cmd_bound, ["D", "P"])
    sp = add("pell", cmd_pell, ["D", "G"])
    sp.add_argument("--mode", choices=[pell_mod.EXACT, pell_mod.UP_TO_SQUARE], default=pell_mod.UP_TO_SQUARE)
    sp.add_argument("--brute-max", type=int, dest="brute_max")
    sp = add("family", cmd_family, ["F", "S", "G", "H", "a", "P"])
    sp.add_argument("--kind", required=True, choices=KINDS)
    sp.add_argument("--c", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--variant", type=int, default=1, help="(A^m +- ...)^2 +- A shape (1-4) used by cor3")
    sp = add("verify-tables", cmd_verify_tables, ["a"])
    sp.add_argument("--kind", required=True)
    sp.add_argument("--m", type=int, required=True)
    add("classnum", cmd_classnum, ["D"])
    sp = add("search", cmd_search)
    sp.add_argument("--max-deg", type=int, required=True, dest="max_deg")
    sp.add_argument("--min-h", type=int, required=True, dest="min_h")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=500)
    sp.add_argument("--force-oracle", action="store_true", dest="force_oracle")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
