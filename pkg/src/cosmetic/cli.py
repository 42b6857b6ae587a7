"""
Command-line front end.

Every subcommand prints a human-readable summary, or with ``--json`` the
payload as compact JSON.  Fractions are always strings such as ``"14/27"``.
Lists are in the documented order of the underlying function, so the JSON
output is byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import alexander, catalog, dedekind, homology, obstructions, seifert
from .slopes import SlopePair, format_fraction, parse_slope

__all__ = ["CommandResult", "run", "main"]


@dataclass
class CommandResult:
    status: str
    payload: dict
    provenance: list = field(default_factory=list)
    text: str = ""
    as_json: bool = False

    @property
    def exit_code(self):
        return 0 if self.status == "ok" else 1

    def render(self):
        if self.as_json:
            return json.dumps(self.payload, separators=(",", ":"))
        return self.text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or self.format_usage())
        raise _HelpShown(message or "")


class _HelpShown(Exception):
    pass


def _int_pair(text):
    parts = [x.strip() for x in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _json_arg(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc}") from None


def _pair_json(pair):
    return [str(pair.first), str(pair.second)]


def _poly(arg):
    return alexander.LaurentPolynomial.from_pairs(arg)


# handlers: each returns (payload, text, provenance)

def cmd_dedekind(args):
    value = dedekind.dedekind_sum(args.q, args.p, method=args.method)
    return {"q": args.q, "p": args.p, "value": format_fraction(value)}, format_fraction(value), []


def cmd_a2(args):
    if (args.poly is None) == (args.p is None):
        raise ValueError("give exactly one of --poly or --p")
    if args.poly is not None:
        f = _poly(args.poly)
        d2 = alexander.second_derivative_at_one(f)
        val = alexander.a2(f)
        payload = {"polynomial": f.to_pairs(), "second_derivative_at_one": d2, "a2": val}
        return payload, f"Delta''(1) = {d2}, a2 = {val}", []
    req = dedekind.a2_required_by_surgery(args.p)
    ident = dedekind.casson_identity_value(args.p)
    payload = {"p": args.p, "a2_required": format_fraction(req),
               "casson_identity": format_fraction(ident)}
    text = (f"a2 required by K({args.p}) = -K({args.p}/2): {format_fraction(req)} "
            f"(p(s(1,p)+s(2,p))/6 = {format_fraction(ident)})")
    return payload, text, ["casson_surgery_formula"]


def cmd_gaps(args):
    if (args.poly is None) == (args.n is None):
        raise ValueError("give exactly one of --poly or --n")
    if args.poly is not None:
        g = alexander.lspace_gaps(_poly(args.poly))
    else:
        g = alexander.GapSequence(tuple(int(x) for x in args.n.split(",")))
    val = alexander.a2_from_gaps(g)
    ok = alexander.check_claim_bound(g)
    payload = {"k": g.k, "n": list(g.n), "a2": val, "genus": g.genus,
               "claim_bound_holds": ok,
               "polynomial": alexander.gap_polynomial(g).to_pairs()}
    text = (f"k = {g.k}, n = {list(g.n)}, a2 = {val}, "
            f"a2 <= g^2 = {g.genus ** 2}: {ok}")
    return payload, text, ["lspace_fibered_genus"]


def cmd_thm1_check(args):
    v = obstructions.thm1_check(args.genus, args.a2, args.p)
    lines = [v.overall] + [f"  - {r}" for r in v.reasons]
    return v.to_json(), "\n".join(lines), list(v.provenance)


def cmd_thm1_candidates(args):
    cands = obstructions.thm1_candidate_ps(args.genus)
    payload = {"genus": args.genus, "candidates": [[p, a] for p, a in cands]}
    text = "\n".join(f"p = {p}, required a2 = {a}" for p, a in cands) or "none"
    return payload, text, ["positive_pair_lspace", "lspace_a2_nonzero",
                           "lspace_fibered_genus", "casson_surgery_formula"]


def cmd_thm2_solve(args):
    sols = seifert.thm2_solve(args.alpha_max, args.m_max)
    payload = {"solutions": [list(s) for s in sols]}
    text = "\n".join(f"alpha = {a}, m = {m}, p = {p}" for a, m, p in sols) or "none"
    return payload, text, []


def cmd_thm3_enum(args):
    scan = obstructions.thm3_scan(args.delta_max, args.p_min, args.q_max)
    payload = {"pairs": [_pair_json(p) for p in scan.pairs],
               "provenance": list(scan.provenance)}
    if args.show_excluded:
        payload["excluded"] = [{"p": t[0], "q": t[1], "q_prime": t[2], "reason": why}
                               for t, why in scan.excluded]
    lines = [f"{p.first}, {p.second}  (distance {p.distance})" for p in scan.pairs]
    if args.show_excluded:
        lines += [f"excluded p={t[0]} q={t[1]} q'={t[2]}: {why}" for t, why in scan.excluded]
    return payload, "\n".join(lines) or "none", list(scan.provenance)


def cmd_p7_families(args):
    rows = obstructions.p7_family_distances(args.s_range)
    payload = {"distances": [list(r) for r in rows]}
    text = "\n".join(f"s = {s}: distance {d}" for s, d in rows)
    return payload, text, ["small_p_families"]


def cmd_cor6(args):
    a, b = (parse_slope(x) for x in _split_pair(args.pair))
    c = obstructions.cor6_classify(SlopePair(a, b))
    text = "\n".join([
        f"pair {c.pair}",
        f"irreducible: {c.irreducible}",
        f"infinite pi_1: {c.infinite_pi1}",
        f"toroidal possible: {c.toroidal_possible}",
    ] + [f"  - {n}" for n in c.notes])
    return c.to_json(), text, list(c.provenance)


def _split_pair(text):
    parts = [x.strip() for x in text.replace(";", ",").split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected two slopes 'r,s', got {text!r}")
    return parts


def cmd_h1(args):
    s = seifert.SeifertData.from_json(args.seifert)
    if args.kill is None:
        ext = seifert.h1_exterior(s)
        payload = {"group": ext.group.to_json(), "group_str": str(ext.group),
                   "classes": {k: {"torsion": list(t), "free": list(f)}
                               for k, (t, f) in ext.classes.items()}}
        text = f"H_1 = {ext.group}"
        if ext.group.free_rank == 1:
            c0, h = ext.multiple_of_generator("c0"), ext.multiple_of_generator("h")
            payload["modulo_torsion"] = {"c0": c0, "h": h}
            text += f"\nmodulo torsion: c0 = {c0}z, h = {h}z"
        return payload, text, []
    group = seifert.h1_filled(s, args.kill, args.mu, args.lam)
    payload = {"group": group.to_json(), "group_str": str(group)}
    return payload, f"H_1 = {group}", []


def cmd_snf(args):
    u, d, v = homology.smith_normal_form(args.matrix)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    group = homology.AbelianGroup.from_diagonal(diag, len(d[0]))
    payload = {"U": u, "D": d, "V": v, "diagonal": diag,
               "cokernel": group.to_json(), "cokernel_str": str(group)}
    text = f"diagonal {diag}\ncokernel {group}"
    return payload, text, []


def cmd_remark_slopes(args):
    pair = seifert.remark_slopes(args.m)
    payload = {"m": args.m, "pair": _pair_json(pair), "distance": pair.distance}
    return payload, f"{pair.first}, {pair.second}  (distance {pair.distance})", []


def cmd_sfs_compare(args):
    a = seifert.SeifertData.from_json(args.a)
    b = seifert.SeifertData.from_json(args.b)
    verdict = seifert.sfs_chiral_compare(a, b)
    na, nb = seifert.normalize_closed_sfs(a), seifert.normalize_closed_sfs(b)
    payload = {"result": verdict.value, "a": str(na), "b": str(nb)}
    return payload, f"{na} vs {nb}: {verdict.value}", []


def cmd_pipeline(args):
    if args.catalog:
        cat = catalog.Catalog()
        for path in args.catalog:
            with open(path, "rb") as fh:
                cat.extend(catalog.load_catalog(fh))
    else:
        cat = catalog.bundled_catalog()
    report = catalog.thm4_pipeline(cat)
    lines = []
    for e in report.entries:
        status = "SURVIVES" if e.survives else "eliminated"
        cands = ", ".join(str(p) for p in e.candidates) or "no candidate pairs"
        lines.append(f"{e.name}: {status} ({cands})")
        for p, why in e.removed:
            lines.append(f"    removed {p}: {why}")
    lines.append("survivors: " + (", ".join(report.survivors) or "none"))
    provenance = ["exceptional_distance_bound", "cosmetic_p_gt_2", "small_p_families"]
    return report.to_json(), "\n".join(lines), provenance


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = _Parser(prog="cosmetic", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("dedekind", cmd_dedekind, "exact Dedekind sum s(q, p)")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=("reciprocity", "sawtooth"), default="reciprocity")

    sp = add("a2", cmd_a2, "a2 of an Alexander polynomial, or the a2 forced by K(p) = -K(p/2)")
    sp.add_argument("--poly", type=_json_arg, help="[[exponent, coefficient], ...]")
    sp.add_argument("--p", type=int)

    sp = add("gaps", cmd_gaps, "gap sequence of an L-space knot polynomial")
    sp.add_argument("--poly", type=_json_arg)
    sp.add_argument("--n", help="comma-separated gap sequence")

    sp = add("thm1-check", cmd_thm1_check, "necessary conditions for K(p) = -K(p/2)")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--a2", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("thm1-candidates", cmd_thm1_candidates, "all p allowed for a genus")
    sp.add_argument("--genus", type=int, required=True)

    sp = add("thm2-solve", cmd_thm2_solve, "integer solutions (alpha, m, p)")
    sp.add_argument("--alpha-max", type=int, default=10)
    sp.add_argument("--m-max", type=int, default=10)

    sp = add("thm3-enum", cmd_thm3_enum, "exceptional chirally cosmetic slope pairs")
    sp.add_argument("--delta-max", type=int, default=8)
    sp.add_argument("--p-min", type=int, default=3)
    sp.add_argument("--q-max", type=int)
    sp.add_argument("--show-excluded", action="store_true")

    sp = add("p7-families", cmd_p7_families, "distances in the p = 7 families")
    sp.add_argument("--s-range", type=int, default=10)

    sp = add("cor6", cmd_cor6, "structure of the manifolds for a pair (r, -r)")
    sp.add_argument("--pair", required=True, help='e.g. "4,-4"')

    sp = add("h1", cmd_h1, "H_1 of a Seifert fibered exterior or of a filling")
    sp.add_argument("--seifert", type=_json_arg, required=True,
                    help='e.g. \'{"base":"disk","fibers":[[3,-1],[5,1]]}\'')
    sp.add_argument("--kill", type=_int_pair, help="filling a,b killing a*mu + b*lambda")
    sp.add_argument("--mu", type=_int_pair, default=(1, 0), help="mu as c0,h coefficients")
    sp.add_argument("--lambda", dest="lam", type=_int_pair, default=(0, 1),
                    help="lambda as c0,h coefficients")

    sp = add("snf", cmd_snf, "Smith normal form of an integer matrix")
    sp.add_argument("--matrix", type=_json_arg, required=True)

    sp = add("remark-slopes", cmd_remark_slopes, "the slope pair (18m+9)/(3m+1), (18m+9)/(3m+2)")
    sp.add_argument("--m", type=int, required=True)

    sp = add("sfs-compare", cmd_sfs_compare, "compare two small Seifert fibered spaces")
    sp.add_argument("--a", type=_json_arg, required=True)
    sp.add_argument("--b", type=_json_arg, required=True)

    sp = add("pipeline", cmd_pipeline, "run the exceptional-slope pipeline on a catalog")
    sp.add_argument("--catalog", action="append", help="catalog JSON file (repeatable)")
    return parser


def run(argv) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        return CommandResult("error", {"error": str(exc)}, text=str(exc))
    except _HelpShown:
        return CommandResult("ok", {})  # argparse already printed the help
    try:
        payload, text, provenance = args.func(args)
    except (ValueError, ArithmeticError, NotImplementedError, OSError) as exc:
        msg = f"{args.command}: {exc}"
        return CommandResult("error", {"error": msg}, text=msg, as_json=args.json)
    if provenance and not args.json:
        text += "\nassumes: " + ", ".join(provenance)
    return CommandResult("ok", payload, provenance, text, as_json=args.json)


def main(argv=None):
    result = run(sys.argv[1:] if argv is None else argv)
    out = sys.stdout if result.status == "ok" else sys.stderr
    rendered = result.render()
    if rendered:
        print(rendered, file=out)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
