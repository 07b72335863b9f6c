"""Command-line entry point: ``verify`` runs campaigns, ``query`` checks one input, ``fields`` prints small fields."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from . import campaign
from .gf import FieldCtx, FieldError, field_for, prime_power, quad_ext_for
from .mureduce import lemma51_test, lemma52_test, quartic_form
from .permcheck import RationalFn, bivariate_is_bijection, is_complete_mapping, is_permutation_poly
from .poly import Poly
from .theorems import (
    THM12_READINGS,
    THM14_READINGS,
    ENV_VAR,
    ClassTag,
    PairMapCoeffs,
    QuarticCoeffs,
    SearchCapExceeded,
    Thm13Coeffs,
    lemma55_normalize,
    predicted_class_for_cubic,
    thm11_predicate,
    thm12_clauses,
    thm12_predicate,
    thm13_predicate,
    thm14_predicate,
    thm15_predicate,
    thm17_classify,
    verify_class_witness,
    witness_holds,
)

ELEMENT_HELP = """\
field elements:
  0        zero
  n        the integer n reduced mod p (so 1 is one and, in F_3, 2 is -1)
  g^k, g   powers of the fixed generator of the field in use
  w        alias for g in F_4
  id:N     raw element id N (base-p digits of the residue polynomial)
Coefficients are given positionally ("0,0,w,0") or by name ("b=w,c=1");
named coefficients that are left out are zero.
"""

# label order, the field the coefficients live in ("ext" = F_{q^2}, "base" = F_q)
QUERY_FAMILIES = {
    "11": (("a", "b", "c", "d"), "ext"),
    "12": (("a", "b", "c", "d"), "ext"),
    "17": (("a", "b", "c", "d"), "ext"),
    "51": (("a", "b", "c", "d"), "ext"),
    "13": (("b", "c"), "ext"),
    "14": (("a", "b", "c", "d"), "base"),
    "15": (("a", "b", "c", "d", "e"), "base"),
    "43": (("a", "b", "c", "d"), "base"),
    "55": (("c3", "c2", "c1", "c0"), "base"),
}
QUARTIC = ("11", "12", "17", "51")


def parse_element(ctx: FieldCtx, text: str) -> int:
    t = text.strip()
    if t == "w":
        if ctx.order != 4:
            raise ValueError("'w' is only defined in F_4")
        return ctx.gen
    if t.startswith("id:"):
        n = int(t[3:])
        if not 0 <= n < ctx.order:
            raise ValueError(f"element id {n} out of range for F_{ctx.order}")
        return n
    if t == "g":
        return ctx.gen
    m = re.fullmatch(r"g\^(-?\d+)", t)
    if m:
        return ctx.exp(int(m.group(1)))
    if re.fullmatch(r"-?\d+", t):
        return ctx.from_int(int(t))
    raise ValueError(f"cannot parse field element {text!r}")


def parse_coeffs(ctx: FieldCtx, text: str, labels: tuple[str, ...]) -> tuple[int, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if parts and all("=" in p for p in parts):
        vals = dict.fromkeys(labels, 0)
        for p in parts:
            k, v = (s.strip() for s in p.split("=", 1))
            if k not in vals:
                raise ValueError(f"unknown coefficient {k!r}; expected {', '.join(labels)}")
            vals[k] = parse_element(ctx, v)
        return tuple(vals[k] for k in labels)
    if any("=" in p for p in parts):
        raise ValueError("mix of named and positional coefficients")
    if len(parts) != len(labels):
        raise ValueError(f"expected {len(labels)} coefficients ({', '.join(labels)}), got {len(parts)}")
    return tuple(parse_element(ctx, p) for p in parts)


def _query_rows(thm: str, q: int, coeffs: tuple[int, ...], cap: int | None, reading: str | None) -> dict:
    quad = quad_ext_for(q)
    row: dict = {"thm": thm, "q": q, "coeffs": list(coeffs)}
    if thm in QUARTIC:
        co = QuarticCoeffs(quad, *coeffs)
        f = co.poly()
        row["permutation"] = is_permutation_poly(f)
        row["complete_mapping"] = is_complete_mapping(f)
        try:
            res = thm11_predicate(co, cap=cap)
            row["thm11"] = res.holds
            row["thm11_clause"] = res.clause
            if res.witness is not None:
                w = res.witness
                row["thm11_witness"] = {"lam": w.lam, "beta": w.beta, "gamma": w.gamma}
                row["thm11_witness_ok"] = witness_holds(co, w)
        except SearchCapExceeded as exc:
            row["thm11"] = None
            row["thm11_skipped"] = str(exc)
        for rd in THM12_READINGS:
            row[f"thm12[{rd}]"] = thm12_predicate(co, reading=rd)
        row["thm12_clauses"] = thm12_clauses(co, reading=reading or "literal")
        form = quartic_form(quad, *coeffs)
        row["lemma51"] = lemma51_test(form, quad)
        row["lemma52"] = q % 3 != 1 and lemma52_test(form, quad)
        try:
            cls = thm17_classify(co, cap=cap)
            row["thm17_class"] = cls.tag.name
            if cls.tag is not ClassTag.NOT_PERMUTATION:
                row["thm17_witness_ok"] = verify_class_witness(co, cls)
                if cls.e is not None:
                    row["thm17_e"] = cls.e
        except SearchCapExceeded as exc:
            row["thm17_skipped"] = str(exc)
        except LookupError as exc:
            row["thm17_class"] = None
            row["thm17_error"] = str(exc)
    elif thm == "13":
        co = Thm13Coeffs(quad, *coeffs)
        row["permutation"] = is_permutation_poly(co.poly())
        row["thm13"] = thm13_predicate(co)
    elif thm in ("14", "15"):
        co = PairMapCoeffs(quad.base, *coeffs)
        row["bijective"] = bivariate_is_bijection(co.rule(), quad.base)
        if thm == "14":
            for rd in THM14_READINGS:
                row[f"thm14[{rd}]"] = thm14_predicate(co, reading=rd)
        else:
            row["thm15"] = thm15_predicate(co)
    elif thm == "43":
        F = quad.base
        a, b, c, d = coeffs
        f = Poly.from_terms(F, {9: 1, 5: a, 3: b, 2: c, 1: d})
        row["permutation"] = is_permutation_poly(f)
        row["in_scope"] = q % 3 == 0 and a != 0 and c != 0
    else:  # 55
        F = quad.base
        c3, c2, c1, c0 = coeffs
        if c3 == 0:
            raise ValueError("c3 must be nonzero for a cubic")
        h = RationalFn(Poly(F, [c0, c1, c2, c3]), Poly.const(F, 1))
        row["permutation_p1"] = is_permutation_poly(Poly(F, [c0, c1, c2, c3]))
        try:
            res = lemma55_normalize(h, cap=cap)
            row["lemma55_class"] = res.cls
            row["lemma55_alpha"] = res.alpha
            row["predicted_class"] = predicted_class_for_cubic(F, [c0, c1, c2, c3])
        except ValueError as exc:
            row["lemma55_class"] = None
            row["lemma55_note"] = str(exc)
    return row


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def cmd_query(args) -> int:
    thm = args.thm.removeprefix("thm")
    if thm not in QUERY_FAMILIES:
        raise ValueError(f"unknown --thm {args.thm!r}; expected one of {', '.join(QUERY_FAMILIES)}")
    if prime_power(args.q) is None:
        raise ValueError(f"q={args.q} is not a prime power")
    labels, where = QUERY_FAMILIES[thm]
    quad = quad_ext_for(args.q)
    ctx = quad.ext if where == "ext" else quad.base
    coeffs = parse_coeffs(ctx, args.coeffs, labels)
    row = _query_rows(thm, args.q, coeffs, args.search_cap, args.reading)
    print(f"thm {thm}, q={args.q}: " + ", ".join(f"{k}={ctx.fmt(v)}" for k, v in zip(labels, coeffs)))
    for k, v in row.items():
        if k in ("thm", "q", "coeffs"):
            continue
        if k.endswith("witness") and isinstance(v, dict):
            v = ", ".join(f"{n}={quad.ext.fmt(x)}" for n, x in v.items())
        print(f"  {k}: {_fmt(v)}")
    print(json.dumps(row, sort_keys=False))
    return 0


def cmd_verify(args) -> int:
    overrides = {
        "theorem": args.theorem,
        "q_list": args.q,
        "mode": args.mode,
        "samples": args.samples,
        "seed": args.seed,
        "jobs": args.jobs,
        "out": args.out,
        "search_cap": args.search_cap,
        "reading": args.reading,
    }
    if args.config:
        cfg = campaign.load_config(args.config, overrides)
    else:
        cfg = campaign.config_from_values({k: v for k, v in overrides.items() if v is not None})
    if args.resume:
        cfg.resume = args.resume
    records = campaign.run_campaign(cfg)
    bad = 0
    for r in records:
        status = "ok" if r.disagreements == 0 else "DISAGREE"
        print(
            f"{r.theorem} q={r.q} {r.mode}: tested={r.tested} agree={r.agreements} "
            f"disagree={r.disagreements} oracle_positive={r.oracle_positive} "
            f"time={r.wall_time:.2f}s [{status}]"
        )
        if r.counterexample:
            print(f"  first counterexample: {json.dumps(r.counterexample)}")
        bad += r.disagreements
    if records:
        print(f"campaign {records[0].campaign_id}")
    return 0 if bad == 0 else 1


def cmd_fields(args) -> int:
    if prime_power(args.q) is None:
        raise ValueError(f"q={args.q} is not a prime power")
    if args.q > 16:
        raise ValueError("fields prints tables only for q <= 16")
    F = quad_ext_for(args.q).ext if args.ext else field_for(args.q)
    print(f"F_{F.order}: p={F.p}, k={F.k}, modulus coefficients (low to high) {list(F.modulus)}")
    print("id  log  poly")
    for x in F.elements():
        digits = F._digits(x)
        poly = " + ".join(f"{c}t^{i}" if i else str(c) for i, c in enumerate(digits) if c) or "0"
        print(f"{x:<3} {'-' if x == 0 else F.log(x):<4} {poly}")
    if args.tables:
        print("mul")
        for x in F.elements():
            print(" ".join(f"{F.mul(x, y):>3}" for y in F.elements()))
        print("add")
        for x in F.elements():
            print(" ".join(f"{F.add(x, y):>3}" for y in F.elements()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="permlab",
        description="Check classification statements for quartic-type permutation polynomials against brute force.",
        epilog=ELEMENT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress and multi-matches")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser(
        "verify",
        help="run a verification campaign",
        description="Compare a theorem predicate with brute force for each q; exit status 1 on any disagreement.",
        epilog=(
            f"theorems: {', '.join(campaign.THEOREMS)}\n"
            "config file: flat 'key = value' lines with keys "
            f"{', '.join(campaign.CONFIG_KEYS)}; flags override the file.\n"
            f"sample mode without a seed uses {campaign.DEFAULT_SEED}.\n"
            f"the witness-search cap can also be set with ${ENV_VAR}."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    v.add_argument("--config", help="key = value configuration file")
    v.add_argument("--theorem", choices=campaign.THEOREMS)
    v.add_argument("--q", help='q values: "2,3,4" or a range "2..16" (prime powers in the range)')
    v.add_argument("--mode", choices=("exhaustive", "sample"))
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=int)
    v.add_argument("--out", help="JSON Lines report file (appended)")
    v.add_argument("--search-cap", type=int, dest="search_cap", help="largest q for witness searches")
    v.add_argument("--reading", help=f"thm12: {'/'.join(THM12_READINGS)}; thm14: {'/'.join(THM14_READINGS)}")
    v.add_argument("--resume", metavar="CAMPAIGN_ID", help="skip q values already reported under this id")
    v.set_defaults(func=cmd_verify)

    qp = sub.add_parser(
        "query",
        help="evaluate every predicate and oracle for one input",
        epilog=ELEMENT_HELP + "\nfamilies: " + ", ".join(QUERY_FAMILIES),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    qp.add_argument("--thm", required=True, help="family: 11, 12, 13, 14, 15, 17, 43, 51 or 55")
    qp.add_argument("--q", type=int, required=True)
    qp.add_argument("--coeffs", required=True)
    qp.add_argument("--search-cap", type=int, dest="search_cap")
    qp.add_argument("--reading", help="reading used for the listed thm12 clauses")
    qp.set_defaults(func=cmd_query)

    fp = sub.add_parser("fields", help="print the element table of F_q (q <= 16)", epilog=ELEMENT_HELP,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    fp.add_argument("--q", type=int, required=True)
    fp.add_argument("--ext", action="store_true", help="print F_{q^2} as built for q instead")
    fp.add_argument("--tables", action="store_true", help="also print addition and multiplication tables")
    fp.set_defaults(func=cmd_fields)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ValueError, FieldError, OSError) as exc:
        print(f"permlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
