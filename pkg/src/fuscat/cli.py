"""Command-line front end and the cross-module consistency harness.

Subcommands: cyc, lemma-norm, verlinde, group, gtcat, ito-michler,
amplitude, crosscheck.  Output is a deterministic aligned table by default
or a JSON report with --json / --out; all numbers in JSON are rendered as
decimal strings so arbitrarily large values survive any JSON parser.

Exit codes: 0 success, 2 violated precondition or bad usage, 1 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import amplitude, gtcat, verlinde
from .arith import factorize, primes_upto
from .cyclotomic import CycNum, parse_element
from .errors import InternalCheckError, PreconditionError
from .finitegroup import (
    DEFAULT_ENUM_CAP,
    PermGroup,
    builtin_group,
    char_degrees,
    double_cosets,
    ito_michler_verify,
    parse_gens,
    perm_to_cycles,
    rep_bad_primes,
    rep_good_primes,
)
from .rootsys import build_root_system
from .verlinde import Verdict

Q_CONVENTION = "q = zeta_{2l}, the primitive (2l)-th root of unity; verdicts are Galois-invariant in this choice"


@dataclass
class Report:
    command: str
    params: dict
    result: dict
    provenance: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    def payload(self) -> dict:
        return _stringify(
            {
                "command": self.command,
                "params": self.params,
                "provenance": self.provenance,
                "result": self.result,
            }
        )


def _stringify(obj):
    """Render every number as a decimal string, recursively."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, CycNum):
        return obj.to_json()
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    return obj


def _provenance(**overrides) -> dict:
    base = {
        "q_convention": None,
        "cocycle_restriction": None,
        "enum_cap": None,
        "hypotheses": None,
    }
    base.update(overrides)
    return base


def _emit(report: Report, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            json.dump(report.payload(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    if getattr(args, "json", False):
        print(json.dumps(report.payload(), indent=2, sort_keys=True))
    else:
        for line in report.lines:
            print(line)


def _table(rows: list[list[str]], header: list[str]) -> list[str]:
    cols = range(len(header))
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c]) for c in cols]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*r) for r in rows]
    return out


# ---------------------------------------------------------------------------
# subcommands


def _cmd_cyc(args) -> Report:
    val = parse_element(args.expr, args.n)
    result: dict = {"conductor": args.n, "value": val, "pretty": str(val)}
    lines = [f"n = {args.n}", f"value = {val}"]
    if args.galois is not None:
        img = val.galois(args.galois)
        result["galois"] = {"s": args.galois, "image": img, "pretty": str(img)}
        lines.append(f"galois s={args.galois}: {img}")
    if args.norm:
        nrm = val.norm()
        result["norm"] = nrm
        lines.append(f"norm = {nrm}")
    return Report("cyc", {"expr": args.expr, "n": args.n}, result, _provenance(), lines)


def _cmd_lemma_norm(args) -> Report:
    rows = []
    table = []
    all_match = True
    for n in range(2, args.nmax + 1):
        nrm = (1 - CycNum.zeta(n)).norm()
        fac = factorize(n)
        rule = list(fac)[0] if len(fac) == 1 else 1
        match = nrm == rule
        all_match = all_match and match
        rows.append({"n": n, "norm": nrm, "rule": rule, "match": match})
        table.append([str(n), str(nrm), str(rule) if len(fac) == 1 else "1 (not a prime power)", "ok" if match else "MISMATCH"])
    lines = _table(table, ["n", "N(1-zeta_n)", "prime-power rule", "check"])
    lines.append(f"all {args.nmax - 1} values match the prime-power rule: {all_match}")
    if not all_match:
        raise InternalCheckError("root-of-unity norm table deviates from the prime-power rule")
    return Report("lemma-norm", {"nmax": args.nmax}, {"rows": rows, "all_match": all_match},
                  _provenance(), lines)


def _verdict_dict(v: verlinde.PrimeVerdict) -> dict:
    return {
        "prime": v.prime,
        "verdict": v.verdict.value,
        "reason": v.reason,
        "witness": list(v.witness) if v.witness is not None else None,
        "detail": v.detail,
    }


def _cmd_verlinde(args) -> Report:
    rs = build_root_system(args.type)
    hypo = {"type": rs.label, "coxeter_number": rs.coxeter_number, "l": args.l,
            "l_odd": args.l % 2 == 1, "l_gt_h": args.l > rs.coxeter_number}
    prov = _provenance(q_convention=Q_CONVENTION, hypotheses=hypo)
    if args.verlinde_action == "simples":
        simples = verlinde.simple_objects(rs, args.l)
        result = {
            "type": rs.label,
            "l": args.l,
            "simples": [
                {"weight": list(s.weight), "qdim": s.qdim, "pretty": str(s.qdim), "norm": s.qdim_norm}
                for s in simples
            ],
        }
        rows = [[str(list(s.weight)), str(s.qdim), str(s.qdim_norm)] for s in simples]
        lines = [f"{rs.label}, l={args.l}: {len(simples)} simple objects"]
        lines += _table(rows, ["weight", "qdim", "norm"])
        return Report("verlinde simples", {"type": args.type, "l": args.l}, result, prov, lines)
    if args.verlinde_action == "classify":
        v = verlinde.classify_prime(rs, args.l, args.p)
        result = {"type": rs.label, "l": args.l, "classification": _verdict_dict(v)}
        lines = [f"{rs.label}, l={args.l}, p={args.p}: {v.verdict.value} ({v.reason})"]
        if v.witness is not None:
            lines.append(f"witness weight: {list(v.witness)}")
        if v.detail:
            lines.append(v.detail)
        return Report("verlinde classify", {"type": args.type, "l": args.l, "p": args.p},
                      result, prov, lines)
    # badprimes: compute the alcove dimensions once, then filter per prime
    simples = verlinde.simple_objects(rs, args.l)
    verdicts = []
    scan: dict[int, list] = {}
    for p in primes_upto(args.pmax):
        try:
            v = verlinde.classify_prime(rs, args.l, p)
        except PreconditionError as exc:
            v = verlinde.PrimeVerdict(p, Verdict.OUTSIDE_THEOREM,
                                      verlinde.REASON_HYPOTHESIS_FAILURE, detail=str(exc))
        verdicts.append(v)
        witnesses = [s.weight for s in simples if s.qdim_norm % p == 0]
        if witnesses:
            scan[p] = [list(w) for w in witnesses]
    result = {
        "type": rs.label,
        "l": args.l,
        "verdicts": [_verdict_dict(v) for v in verdicts],
        "dimension_scan_witnesses": scan,
    }
    rows = [
        [str(v.prime), v.verdict.value, v.reason,
         str(list(v.witness)) if v.witness is not None else "-",
         str(len(scan.get(v.prime, [])))]
        for v in verdicts
    ]
    lines = [f"{rs.label}, l={args.l}, primes up to {args.pmax}"]
    lines += _table(rows, ["p", "verdict", "reason", "witness", "scan hits"])
    return Report("verlinde badprimes", {"type": args.type, "l": args.l, "pmax": args.pmax},
                  result, prov, lines)


def _load_group(args) -> PermGroup:
    if getattr(args, "group", None):
        return builtin_group(args.group, cap=getattr(args, "cap", None))
    if getattr(args, "gens", None):
        gens = parse_gens(args.gens, getattr(args, "degree", None))
        return PermGroup.from_generators(gens, cap=getattr(args, "cap", None))
    raise PreconditionError("give a group via --group NAME or --gens CYCLES")


def _group_result(g: PermGroup) -> dict:
    degrees = char_degrees(g)
    bad = rep_bad_primes(g)
    return {
        "order": g.order,
        "degree": g.degree,
        "classes": [
            {"rep": perm_to_cycles(c.rep), "size": c.size} for c in g.conjugacy_classes()
        ],
        "degrees": list(degrees),
        "bad_primes": [{"prime": p, "witness_degree": d} for p, d in bad.items()],
        "good_primes_dividing_order": rep_good_primes(g),
    }


def _cmd_group(args) -> Report:
    g = _load_group(args)
    result = _group_result(g)
    prov = _provenance(enum_cap=args.cap or DEFAULT_ENUM_CAP)
    lines = [
        f"|G| = {g.order} on {g.degree} points",
        f"conjugacy classes: {len(result['classes'])}",
        f"character degrees: {result['degrees']}",
        f"bad primes for the representation category: "
        f"{ {b['prime']: b['witness_degree'] for b in result['bad_primes']} }",
        f"good primes dividing |G|: {result['good_primes_dividing_order']}",
    ]
    return Report("group", {"group": getattr(args, 'group', None), "gens": getattr(args, 'gens', None)},
                  result, prov, lines)


def _subgroup_of(g: PermGroup, args) -> PermGroup:
    if args.subgroup_gens is None:
        return g
    return g.subgroup(parse_gens(args.subgroup_gens, g.degree))


def _cmd_gtcat(args) -> Report:
    g = _load_group(args)
    h = _subgroup_of(g, args)
    prov = _provenance(cocycle_restriction=gtcat.COCYCLE_RESTRICTION,
                       enum_cap=args.cap or DEFAULT_ENUM_CAP)
    dcs = double_cosets(g, h)
    simples = gtcat.enumerate_simples(g, h)
    result = {
        "order": g.order,
        "subgroup_order": h.order,
        "double_cosets": [{"rep": perm_to_cycles(r), "size": s} for r, s in dcs],
        "simples": [
            {
                "rep": perm_to_cycles(s.coset_rep),
                "stabilizer_order": s.stabilizer_order,
                "irrep_degree": s.irrep_degree,
                "dim": s.dimension,
            }
            for s in simples
        ],
        "sum_of_squares": sum(s.dimension**2 for s in simples),
    }
    if args.gtcat_action == "badprimes":
        bad = gtcat.gt_bad_primes(g, h)
        result["bad_primes"] = [
            {"prime": p, "witness_dim": s.dimension, "witness_rep": perm_to_cycles(s.coset_rep)}
            for p, s in bad.items()
        ]
    rows = [
        [perm_to_cycles(s.coset_rep), str(s.stabilizer_order), str(s.irrep_degree), str(s.dimension)]
        for s in simples
    ]
    lines = [f"|G| = {g.order}, |H| = {h.order}, {len(dcs)} double cosets, {len(simples)} simples"]
    lines += _table(rows, ["coset rep", "|H^g|", "irrep degree", "dim"])
    lines.append(f"sum of squared dims = {result['sum_of_squares']} (= |G|)")
    if "bad_primes" in result:
        lines.append(f"bad primes: {[b['prime'] for b in result['bad_primes']]}")
    lines.append(f"note: {gtcat.COCYCLE_RESTRICTION}")
    return Report(f"gtcat {args.gtcat_action}",
                  {"group": getattr(args, 'group', None), "gens": getattr(args, 'gens', None),
                   "subgroup_gens": args.subgroup_gens},
                  result, prov, lines)


def _cmd_ito_michler(args) -> Report:
    g = _load_group(args)
    rep = ito_michler_verify(g, args.p)
    result = {
        "prime": rep.prime,
        "applicable": rep.applicable,
        "offending_degree": rep.offending_degree,
        "sylow_order": rep.sylow_order,
        "complement_order": rep.complement_order,
        "sylow_abelian": rep.sylow_abelian,
        "sylow_normal": rep.sylow_normal,
        "reason": rep.reason,
    }
    if rep.applicable:
        lines = [
            f"p = {args.p}: applicable (p divides |G| = {g.order}, no degree)",
            f"Sylow subgroup of order {rep.sylow_order}: normal = {rep.sylow_normal}, "
            f"abelian = {rep.sylow_abelian}",
            f"complement order {rep.complement_order} (coprime to {args.p})",
        ]
    else:
        lines = [f"p = {args.p}: NotApplicable ({rep.reason})"]
    prov = _provenance(enum_cap=args.cap or DEFAULT_ENUM_CAP)
    return Report("ito-michler", {"group": getattr(args, 'group', None), "p": args.p},
                  result, prov, lines)


def _cmd_amplitude(args) -> Report:
    if args.graph != "t4":
        raise PreconditionError("only the t4 graph is supported")
    if args.quantum:
        if args.l is None:
            raise PreconditionError("--quantum needs --l")
        cert = amplitude.quantum_certificate(args.l, args.pmax)
        result = {
            "mode": "quantum",
            "l": args.l,
            "value": cert["value"],
            "pretty": str(cert["value"]),
            "square": cert["square"],
            "normalization": "vertex scaled so the two-vertex bubble is the identity",
            "certificates": [
                {"prime": p, "divides_denominator_norm": True}
                for p in cert["denominator_primes"]
            ],
            "denominator": cert["denominator"],
        }
        lines = [
            f"quantum square amplitude at l={args.l}: {cert['value']}",
            f"square: {cert['square']}",
            f"canonical denominator: {cert['denominator']}",
            f"primes <= {args.pmax} dividing the denominator: {cert['denominator_primes']}",
        ]
        prov = _provenance(q_convention=Q_CONVENTION)
        return Report("amplitude t4", {"mode": "quantum", "l": args.l}, result, prov, lines)
    t = amplitude.sl2_adjoint()
    val = amplitude.amplitude_T4_normalized(t)
    other = amplitude.casimir_square_coefficient(t)
    if val != other:
        raise InternalCheckError("graph contraction and trace identity disagree")
    result = {
        "mode": "classical",
        "value": val,
        "normalization": "vertex scaled so the two-vertex bubble is the identity",
        "cross_check_trace_identity": other,
        "certificates": [
            {"prime": p, "divides_denominator_norm": val.denominator % p == 0}
            for p in primes_upto(args.pmax)
            if val.denominator % p == 0
        ],
    }
    lines = [
        f"classical square amplitude on the rank-3 bracket tensor: {val}",
        f"trace-identity cross-check: {other} (agrees)",
        f"denominator primes: {[c['prime'] for c in result['certificates']]}",
    ]
    return Report("amplitude t4", {"mode": "classical"}, result, _provenance(), lines)


CROSSCHECK_CORPUS = ["S3", "S4", "A4", "A5", "D8", "D12", "C12", "Q8", "SL23", "S3xC4"]


def _cmd_crosscheck(args) -> Report:
    checks: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, note: str = "") -> None:
        checks.append((name, ok, note))

    groups = CROSSCHECK_CORPUS if args.all else [args.group]
    for name in groups:
        g = builtin_group(name, cap=args.cap)
        degrees = char_degrees(g)
        add(f"{name}: sum of squared degrees = |G|",
            sum(d * d for d in degrees) == g.order, f"degrees {list(degrees)}")
        add(f"{name}: #degrees = #classes", len(degrees) == len(g.conjugacy_classes()))
        rep_bad = set(rep_bad_primes(g))
        gt_bad_full = set(gtcat.gt_bad_primes(g, g))
        add(f"{name}: bimodule category over (G,G) matches the representation verdicts",
            rep_bad == gt_bad_full, f"bad primes {sorted(rep_bad)}")
        trivial = g.subgroup(parse_gens("e", g.degree))
        add(f"{name}: pointed category (H = e) has no bad primes",
            gtcat.gt_bad_primes(g, trivial) == {})
        dcs = double_cosets(g, trivial)
        add(f"{name}: double cosets of the trivial subgroup are singletons",
            len(dcs) == g.order and all(s == 1 for _, s in dcs))
        for rep, size in double_cosets(g, g):
            add(f"{name}: single double coset for H = G", size == g.order)
        for p in (2, 3, 5):
            if g.order % p == 0:
                ito_michler_verify(g, p)  # raises on any structural violation
        add(f"{name}: Sylow structure verified for primes dividing |G|", True)

    norm_ok = True
    for n in range(2, 61):
        fac = factorize(n)
        rule = list(fac)[0] if len(fac) == 1 else 1
        norm_ok = norm_ok and (1 - CycNum.zeta(n)).norm() == rule
    add("root-of-unity norms follow the prime-power rule (n <= 60)", norm_ok)

    rs = build_root_system("A1")
    v = verlinde.classify_prime(rs, 9, 3)
    scanned = verlinde.scan_dimension_witnesses(rs, 9, 3)
    add("A1, l=9: p=3 bad with the scan confirming the witness",
        v.verdict == Verdict.BAD and v.witness in scanned)
    add("A1, l=7: all dimension norms are units",
        all(abs(s.qdim_norm) == 1 for s in verlinde.simple_objects(rs, 7)))

    t = amplitude.sl2_adjoint()
    add("classical square amplitude = 3/2 by both routes",
        amplitude.amplitude_T4_normalized(t) == Fraction(3, 2)
        and amplitude.casimir_square_coefficient(t) == Fraction(3, 2))
    q = amplitude.quantum_T4(8)
    add("quantum square amplitude at l=8 squares to 1/2 with even denominator",
        q * q == Fraction(1, 2) and q.den % 2 == 0)

    ok = all(c[1] for c in checks)
    lines = [f"[{'pass' if c[1] else 'FAIL'}] {c[0]}" + (f"  ({c[2]})" if c[2] else "")
             for c in checks]
    lines.append(f"crosscheck: {sum(c[1] for c in checks)}/{len(checks)} passed")
    result = {"checks": [{"name": c[0], "passed": c[1], "note": c[2] or None} for c in checks],
              "all_passed": ok}
    report = Report("crosscheck", {"group": "corpus" if args.all else args.group}, result,
                    _provenance(q_convention=Q_CONVENTION,
                                cocycle_restriction=gtcat.COCYCLE_RESTRICTION,
                                enum_cap=args.cap or DEFAULT_ENUM_CAP), lines)
    if not ok:
        raise _CrosscheckFailure(report)
    return report


class _CrosscheckFailure(InternalCheckError):
    def __init__(self, report: Report):
        super().__init__("crosscheck failed")
        self.report = report


# ---------------------------------------------------------------------------
# parser wiring


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")


def _add_group_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="builtin name: Sn, An, Cn, Dn (order n), Q8, SL23, products like S3xC4")
    p.add_argument("--gens", help="generators in cycle notation, e.g. \"(1 2)(3 4), (1 2 3)\"")
    p.add_argument("--degree", type=int, help="number of points (inferred if omitted)")
    p.add_argument("--cap", type=int, help=f"enumeration cap (default {DEFAULT_ENUM_CAP}, env FUSCAT_ENUM_CAP)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fuscat",
        description="Exact-arithmetic good/bad prime calculator for fusion categories.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyc", help="evaluate a cyclotomic element expression")
    p.add_argument("expr", help="expression in integers, z, + - * / ^ and parentheses")
    p.add_argument("--n", type=int, default=1, help="conductor of z (default 1)")
    p.add_argument("--galois", type=int, help="apply z -> z^s")
    p.add_argument("--norm", action="store_true", help="also print the field norm")
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_cyc)

    p = sub.add_parser("lemma-norm", help="table of norms N(1 - zeta_n) against the prime-power rule")
    p.add_argument("--nmax", type=int, default=60)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_lemma_norm)

    p = sub.add_parser("verlinde", help="quantum dimensions and prime verdicts")
    vsub = p.add_subparsers(dest="verlinde_action", required=True)
    for action, extra in [("simples", []), ("classify", ["p"]), ("badprimes", ["pmax"])]:
        q = vsub.add_parser(action)
        q.add_argument("--type", required=True, help="root system label, e.g. A1, D4, E8")
        q.add_argument("--l", type=int, required=True)
        if "p" in extra:
            q.add_argument("--p", type=int, required=True)
        if "pmax" in extra:
            q.add_argument("--pmax", type=int, default=100)
        _add_output_flags(q)
        q.set_defaults(fn=_cmd_verlinde)

    p = sub.add_parser("group", help="order, classes, character degrees, bad primes")
    _add_group_flags(p)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("gtcat", help="group-theoretical category simples and bad primes")
    gsub = p.add_subparsers(dest="gtcat_action", required=True)
    for action in ("simples", "badprimes"):
        q = gsub.add_parser(action)
        _add_group_flags(q)
        q.add_argument("--subgroup-gens", help="generators of H (default: H = G); 'e' for the trivial subgroup")
        _add_output_flags(q)
        q.set_defaults(fn=_cmd_gtcat)

    p = sub.add_parser("ito-michler", help="verify the normal abelian Sylow conclusion")
    _add_group_flags(p)
    p.add_argument("--p", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_ito_michler)

    p = sub.add_parser("amplitude", help="trivalent graph amplitude certificates")
    p.add_argument("graph", choices=["t4"])
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--classical", action="store_true")
    mode.add_argument("--quantum", action="store_true")
    p.add_argument("--l", type=int)
    p.add_argument("--pmax", type=int, default=50)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_amplitude)

    p = sub.add_parser("crosscheck", help="run the cross-module consistency harness")
    p.add_argument("--group", default="S3")
    p.add_argument("--all", action="store_true", help="run over the whole builtin corpus")
    p.add_argument("--cap", type=int)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_crosscheck)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        report = args.fn(args)
    except _CrosscheckFailure as exc:
        _emit(exc.report, args)
        return 1
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    _emit(report, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
