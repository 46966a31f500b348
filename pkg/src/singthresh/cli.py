"""Command-line front end.  Every command prints one JSON report."""
from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import inf
from typing import Any, Sequence

from . import charp, degeneration, dp, monomials, multiplicities, polytope, thresholds
from .charp import SparsePolynomial
from .errors import BudgetExceeded, NotApplicable, PostconditionFailure
from .monomials import MonomialIdeal


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\^|\*|\+|,))")


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = "nat" if m.group(1) else "name" if m.group(2) else m.group(3)
        out.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    return out


@dataclass
class IdealSpec:
    vars: list[str]
    generators: list[dict[tuple[int, ...], tuple[int, ...]]]  # exponent -> coefficient in Z[t]
    char: int = 0
    parametric: bool = False
    text: str = ""
    raw: list[dict[tuple[str, ...], Any]] = field(default_factory=list, repr=False)

    @property
    def dim(self) -> int:
        return len(self.vars)

    def is_monomial(self) -> bool:
        return all(len(g) <= 1 and all(len(c) == 1 for c in g.values()) for g in self.generators)

    def monomial_ideal(self) -> MonomialIdeal:
        if not self.is_monomial():
            raise ValueError("input is not a monomial ideal")
        return MonomialIdeal(self.dim, tuple(u for g in self.generators for u in g))  # zero generators drop out

    def polynomials(self) -> list[SparsePolynomial]:
        if not self.char:
            raise ValueError("polynomial arithmetic needs --char p")
        polys = [SparsePolynomial.from_terms(self.char, self.dim, g.items()) for g in self.generators]
        return [f for f in polys if not f.is_zero()]


def _default_vars(used: set[str]) -> list[str]:
    if not used:
        return []
    if used <= set(monomials.DEFAULT_NAMES):
        top = max(monomials.DEFAULT_NAMES.index(v) for v in used)
        return list(monomials.DEFAULT_NAMES[: top + 1])
    indexed = [re.fullmatch(r"x(\d+)", v) for v in used]
    if all(indexed) and all(int(m.group(1)) >= 1 for m in indexed):
        top = max(int(m.group(1)) for m in indexed)
        return [f"x{i}" for i in range(1, top + 1)]
    raise ParseError(f"cannot infer a variable order for {sorted(used)}; pass --vars")


def parse_ideal(text: str, char: int = 0, parametric: bool = False,
                variables: Sequence[str] | None = None) -> IdealSpec:
    """ideal := gen ("," gen)* ; gen := term ("+" term)* ; term := item ("*" item)*."""
    if parametric and not char:
        raise ParseError("--parametric needs --char p")
    body = text
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        # printed form of an ideal; keep positions aligned with the original text
        body = text.replace("(", " ", 1)[::-1].replace(")", " ", 1)[::-1]
    toks = _tokens(body)
    if not toks:
        raise ParseError("empty ideal", 0)
    i = 0

    def peek(kind: str) -> bool:
        return i < len(toks) and toks[i][0] == kind

    def expect(kind: str) -> tuple[str, str, int]:
        nonlocal i
        if i >= len(toks):
            raise ParseError(f"expected {kind!r} but input ended", len(text))
        if toks[i][0] != kind:
            raise ParseError(f"expected {kind!r} but found {toks[i][1]!r}", toks[i][2])
        i += 1
        return toks[i - 1]

    def exponent() -> int:
        nonlocal i
        if peek("^"):
            i += 1
            return int(expect("nat")[1])
        return 1

    gens_raw: list[list[tuple[int, int, dict[str, int]]]] = []
    used: set[str] = set()
    while True:
        terms = []
        while True:
            scalar, tdeg, powers = 1, 0, {}
            while True:
                if peek("nat"):
                    scalar *= int(expect("nat")[1])
                elif peek("name"):
                    _, name, pos = expect("name")
                    e = exponent()
                    if name == "t" and (parametric or (variables is None)):
                        if not parametric:
                            raise ParseError("parameter t needs --parametric", pos)
                        tdeg += e
                    else:
                        if variables is not None and name not in variables:
                            raise ParseError(f"unknown variable {name!r}", pos)
                        used.add(name)
                        powers[name] = powers.get(name, 0) + e
                else:
                    where = toks[i][2] if i < len(toks) else len(text)
                    raise ParseError("expected a number or a variable", where)
                if peek("*"):
                    i += 1
                    continue
                break
            terms.append((scalar, tdeg, powers))
            if peek("+"):
                i += 1
                continue
            break
        gens_raw.append(terms)
        if peek(","):
            i += 1
            continue
        if i < len(toks):
            raise ParseError(f"unexpected {toks[i][1]!r}", toks[i][2])
        break

    names = list(variables) if variables is not None else _default_vars(used)
    index = {v: k for k, v in enumerate(names)}
    generators = []
    for terms in gens_raw:
        poly: dict[tuple[int, ...], list[int]] = {}
        for scalar, tdeg, powers in terms:
            u = [0] * len(names)
            for v, e in powers.items():
                u[index[v]] += e
            c = poly.setdefault(tuple(u), [])
            c.extend([0] * (tdeg + 1 - len(c)))
            c[tdeg] += scalar
        cleaned = {}
        for u, c in poly.items():
            if char:
                c = [v % char for v in c]
            while c and c[-1] == 0:
                c.pop()
            if c:
                cleaned[u] = tuple(c)
        generators.append(cleaned)
    spec = IdealSpec(names, generators, char, parametric, text)
    if not char and not spec.is_monomial():
        raise ParseError("polynomial input needs a positive characteristic (--char p)")
    return spec


# JSON


def encode(value: Any) -> Any:
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if value == inf:
            return "inf"
        raise TypeError("floats never appear in reports")
    if isinstance(value, MonomialIdeal):
        return [monomials.format_monomial(g) for g in value.gens] if not value.is_zero() else []
    if isinstance(value, SparsePolynomial):
        return charp.format_poly(value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def dumps(report: dict, pretty: bool = False) -> str:
    return json.dumps(encode(report), indent=2 if pretty else None, sort_keys=True,
                      separators=None if pretty else (",", ":"))


# commands


def _ideal(args) -> IdealSpec:
    return parse_ideal(args.ideal, args.char, args.parametric, args.vars)


def _monomial(args) -> MonomialIdeal:
    spec = _ideal(args)
    if not spec.is_monomial():
        raise ParseError("this command needs a monomial ideal")
    return spec.monomial_ideal()


def _names(I: MonomialIdeal, args) -> list[str]:
    return args.vars or monomials.variable_names(I.dim)


def cmd_lct(args):
    I = _monomial(args)
    m = polytope.mu(I)
    return thresholds.lct_monomial(I), {"mu": m}


def _nu_for(spec: IdealSpec, p: int, e: int, budget: int) -> int:
    J = monomials.max_ideal(spec.dim)
    if spec.is_monomial():
        return thresholds.nu_monomial(spec.monomial_ideal(), J, p**e, budget)
    return charp.nu_poly(spec.polynomials(), J, p, e, budget)


def cmd_nu(args):
    spec = _ideal(args)
    if not args.char:
        raise ParseError("nu needs --char p")
    nu = _nu_for(spec, args.char, args.e, args.budget)
    q = args.char**args.e
    return nu, {"q": q, "lower": Fraction(nu, q)}


def _nu_job(payload):
    text, char, parametric, variables, e, budget = payload
    spec = parse_ideal(text, char, parametric, variables)
    return _nu_for(spec, char, e, budget)


def cmd_fpt_bracket(args):
    spec = _ideal(args)
    p = args.char
    if not p:
        raise ParseError("fpt-bracket needs --char p")
    if spec.is_monomial():
        I = spec.monomial_ideal()
        steps = thresholds.fpt_bracket_monomial(I, p, args.e, args.budget)
        rows = [{"e": s.e, "q": s.q, "nu": s.nu, "lower": s.lower, "upper": s.upper} for s in steps]
        return rows, {"lct": thresholds.lct_monomial(I), "upper_uses_generators": min(len(I.gens), I.dim)}
    jobs = [(args.ideal, p, args.parametric, args.vars, e, args.budget) for e in range(1, args.e + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            nus = list(pool.map(_nu_job, jobs))
    else:
        nus = [_nu_job(j) for j in jobs]
    principal = len(spec.polynomials()) == 1
    rows = []
    for e, nu in enumerate(nus, start=1):
        q = p**e
        row = {"e": e, "q": q, "nu": nu, "lower": Fraction(nu, q)}
        if principal:
            row["upper"] = Fraction(nu + 1, q)
        rows.append(row)
    return rows, {"principal": principal}


def cmd_closure(args):
    I = _monomial(args)
    C = polytope.integral_closure(I)
    names = _names(I, args)
    return [monomials.format_monomial(g, names) for g in C.gens], {"input_is_closed": C == I}


def cmd_mult(args):
    I = _monomial(args)
    return multiplicities.hilbert_samuel(I), {}


def cmd_mixed(args):
    I = _monomial(args)
    e = multiplicities.mixed_multiplicities(I)
    return list(e), {"minkowski": multiplicities.minkowski_check(e).ok}


def cmd_sigma(args):
    I = _monomial(args)
    if args.j is not None:
        return multiplicities.sigma(I, args.j), {}
    return list(multiplicities.sigma_sequence(I)), {"codimension": monomials.codimension(I)}


def cmd_dp(args):
    I = _monomial(args)
    l = args.l if args.l is not None else monomials.codimension(I)
    sig = [multiplicities.sigma(I, j) for j in range(l + 1)]
    return dp.dp_invariant(I, l), {"sigma": sig, "l": l}


def cmd_check_bound(args):
    I = _monomial(args)
    r = dp.check_bound(I, args.l)
    return {"E": r.E, "c": r.c, "slack": r.slack, "equality": r.equality}, {}


def cmd_classify(args):
    I = _monomial(args)
    try:
        w = dp.classify_equality(I, args.l)
    except NotApplicable as exc:
        return "not applicable", {"reason": str(exc)}
    if w is None:
        return None, {"finding": "equality without a permutation witness"}
    return {"permutation": list(w.permutation), "degrees": list(w.degrees)}, {}


def cmd_lojasiewicz(args):
    I = _monomial(args)
    return thresholds.lojasiewicz_exponent(I), {}


def cmd_colon_check(args):
    if args.weights:
        v = thresholds.MonomialValuation([Fraction(w) for w in args.weights.split(",")])
        check = thresholds.valuation_colon_check(v, args.q, Fraction(args.ell))
        return check.agree, {"lhs": check.lhs, "rhs": check.rhs}
    formula = thresholds.colon_frobenius_maxideal(args.n, args.q, args.t)
    brute = thresholds.brute_colon_frobenius_maxideal(args.n, args.q, args.t)
    return formula == brute, {"formula": formula, "brute_force": brute}


def _order_report(order: degeneration.WeightOrder) -> dict:
    return {"weight": list(order.weight.coeffs), "m": order.m,
            "thresholds": order.thresholds, "active": order.active, "base": order.base}


def cmd_degenerate(args):
    try:
        data = json.loads(args.ideal)
        inp = degeneration.DegenerationInput(data["d"], {int(k): v for k, v in data["S"].items()})
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"degenerate expects JSON {{\"d\": [...], \"S\": {{\"2\": [[...]]}}}}: {exc}") from exc
    order = degeneration.degeneration_order(inp)
    concl = degeneration.check_conclusions(inp, order.weight, order.m)
    return _order_report(order), {"conclusions": concl.__dict__}


# worked examples


def worked_examples() -> dict:
    out: dict[str, Any] = {}
    A = MonomialIdeal(2, ((6, 0), (5, 1), (3, 2), (2, 3), (1, 4), (0, 6)))
    e = multiplicities.mixed_multiplicities(A)
    out["monomial_threshold"] = {
        "lct": thresholds.lct_monomial(A), "mu": polytope.mu(A),
        "mixed": list(e), "E2": dp.dp_invariant(A, 2),
        "E2_below_lct": dp.check_bound(A).slack > 0,
    }
    b = MonomialIdeal(3, ((3, 0, 0), (1, 1, 0), (0, 3, 0)))
    c = b + MonomialIdeal(3, ((0, 0, 4),))
    a = c + MonomialIdeal(3, ((2, 0, 1),))
    ea = multiplicities.hilbert_samuel(a)
    restricted = thresholds.lct_monomial(monomials.restrict_coordinate(a, 2))
    out["pinched_3_4"] = {
        "lct_c": thresholds.lct_monomial(c), "lct_a": thresholds.lct_monomial(a),
        "e_c": multiplicities.hilbert_samuel(c), "e_a": ea,
        "e2_c": multiplicities.mixed_multiplicities(c)[2], "e2_a": multiplicities.mixed_multiplicities(a)[2],
        "zx2_in_closure_c": polytope.in_closure(c, (2, 0, 1)),
        "lct_a_restricted": restricted,
        "strict": thresholds.lct_monomial(a) < restricted + Fraction(6, ea),
    }
    m2 = monomials.max_ideal(2)
    for p in (2, 3):
        f = SparsePolynomial.from_terms(p, 2, {(p, 0): 1, (0, p + 1): 1})
        nus = [charp.nu_poly([f], m2, p, e) for e in range(1, 5)]
        out[f"pos_char_failure_p{p}"] = {
            "nu": nus,
            "brackets_1_over_p": all(Fraction(v, p**e) <= Fraction(1, p) <= Fraction(v + 1, p**e)
                                     for e, v in enumerate(nus, start=1)),
        }
        g = SparsePolynomial.from_terms(p, 2, {(p, 0): 1, (0, p): (0, 1)})
        nus = [charp.nu_poly([g], m2, p, e) for e in range(1, 4)]
        out[f"must_be_perfect_p{p}"] = {
            "nu": nus,
            "brackets_1_over_p": all(Fraction(v, p**e) <= Fraction(1, p) <= Fraction(v + 1, p**e)
                                     for e, v in enumerate(nus, start=1)),
        }
    inp = degeneration.DegenerationInput((2, 3, 4, 5), {2: [(1, 0, 0, 2)], 3: [(0, 2, 0, 2)]})
    order = degeneration.degeneration_order(inp)
    out["degeneration_demo"] = {
        "m": order.m, "t0": order.thresholds[0], "t1": order.thresholds[1],
        "conclusions": degeneration.check_conclusions(inp, order.weight, order.m).all_hold,
    }
    return out


def expected_worked_examples() -> dict:
    text = resources.files("singthresh").joinpath("data/worked_examples.json").read_text()
    return json.loads(text)


def cmd_worked_examples(args):
    got = encode(worked_examples())
    want = expected_worked_examples()
    diffs = []
    for name in sorted(set(got) | set(want)):
        g, w = got.get(name), want.get(name)
        if g != w:
            diffs.append({"example": name, "expected": w, "got": g})
    if diffs:
        raise PostconditionFailure("golden examples differ", details=diffs)
    return {"passed": sorted(got)}, {"examples": got}


COMMANDS = {
    "lct": cmd_lct, "nu": cmd_nu, "fpt-bracket": cmd_fpt_bracket, "closure": cmd_closure,
    "mult": cmd_mult, "mixed": cmd_mixed, "sigma": cmd_sigma, "dp": cmd_dp,
    "check-bound": cmd_check_bound, "classify": cmd_classify, "lojasiewicz": cmd_lojasiewicz,
    "colon-check": cmd_colon_check, "degenerate": cmd_degenerate, "paper-examples": cmd_worked_examples,
}
NEEDS_IDEAL = set(COMMANDS) - {"colon-check", "paper-examples"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, help="characteristic p (0 for monomial work)")
    common.add_argument("--parametric", action="store_true", help="allow the parameter t in coefficients")
    common.add_argument("--e", type=int, default=1, help="Frobenius exponent")
    common.add_argument("--l", type=int, default=None, help="index l of E_l (defaults to the codimension)")
    common.add_argument("--j", type=int, default=None, help="single sigma index")
    common.add_argument("--budget", type=int, default=thresholds.DEFAULT_BUDGET, help="state budget for searches")
    common.add_argument("--jobs", type=int, default=1, help="worker processes where supported")
    common.add_argument("--vars", type=lambda s: [v.strip() for v in s.split(",")], default=None,
                        help="comma-separated variable order")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(prog="singthresh", description="Threshold and multiplicity computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in NEEDS_IDEAL:
            p.add_argument("ideal", help="ideal such as \"x^2, y^3\" (JSON for degenerate)")
        if name == "colon-check":
            p.add_argument("--n", type=int, default=2)
            p.add_argument("--q", type=int, default=4)
            p.add_argument("--t", type=int, default=3)
            p.add_argument("--weights", default=None, help="valuation weights, e.g. 1/2,1/3")
            p.add_argument("--ell", default="1")
    return parser


def run_command(argv: Sequence[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    given = getattr(args, "ideal", None)
    report: dict[str, Any] = {"command": args.command, "input": given}
    try:
        result, certificates = COMMANDS[args.command](args)
    except ParseError as exc:
        report["error"] = {"type": "parse", "message": str(exc), "position": exc.position}
        return 2, dumps(report, args.pretty)
    except BudgetExceeded as exc:
        report["error"] = {"type": "budget", "message": str(exc), "partial": _partial(exc.partial)}
        return 1, dumps(report, args.pretty)
    except PostconditionFailure as exc:
        report["error"] = {"type": "postcondition", "message": str(exc), "details": _partial(exc.details)}
        return 1, dumps(report, args.pretty)
    except (ValueError, ArithmeticError, IndexError) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return 1, dumps(report, args.pretty)
    report["result"] = result
    report["certificates"] = certificates
    return 0, dumps(report, args.pretty)


def _partial(value: Any) -> Any:
    if isinstance(value, list) and value and isinstance(value[0], thresholds.BracketStep):
        return [s.__dict__ for s in value]
    try:
        encode(value)
        return value
    except TypeError:
        return repr(value)


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run_command(argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
