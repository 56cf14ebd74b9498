"""Command-line surface: verify, symprod, mult, twist, invariants, export.

Exit codes: 0 = success / all laws hold; 1 = a mathematical law fails;
2 = unusable input (parse error, unknown labels, bad flags).  All outputs
are deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import cocycles as cocy
from . import exactnum as ex
from . import frobenius as frob
from . import gfrob
from . import grading
from . import symprod as sp_mod
from .gfrob import GFrobeniusAlgebra
from .groups import cycle_notation, parse_cycles


class UsageError(Exception):
    pass


# -- element syntax ----------------------------------------------------------

_COEFF_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)\s*\*?\s*")


def _sector_index(X: GFrobeniusAlgebra, text: str) -> int:
    s = text.strip()
    if X.group.perms is not None:
        perm = parse_cycles(s, X.group.perms[0].n)
        return X.group.index_of(cycle_notation(perm))
    return X.group.index_of(s)


def _basis_index(X: GFrobeniusAlgebra, g: int, label: str) -> int:
    s = label.strip()
    if s.startswith("(") and s.endswith(")"):
        s = "⊗".join(part.strip() for part in s[1:-1].split(","))
    s = s.replace("(x)", "⊗")
    labels = X.sector_labels[g]
    try:
        return labels.index(s)
    except ValueError:
        raise UsageError(f"unknown basis label {label!r} in sector {X.group.labels[g]}; "
                         f"expected one of {labels}")


def parse_element(X: GFrobeniusAlgebra, text: str) -> tuple[int, list]:
    """Parse '1@(1 2)', '(1(x)x + x(x)1)@e', or 'sector=(1 2); coeffs={(x,1): 3/2}'."""
    s = text.strip()
    if s.startswith("sector="):
        try:
            sector_part, coeff_part = s.split(";", 1)
        except ValueError:
            raise UsageError(f"element {text!r}: expected 'sector=...; coeffs={{...}}'")
        g = _sector_index(X, sector_part.split("=", 1)[1])
        coeffs = coeff_part.split("=", 1)[1].strip()
        if not (coeffs.startswith("{") and coeffs.endswith("}")):
            raise UsageError(f"element {text!r}: coeffs must be a {{...}} map")
        vec = ex.vec_zero(X.sector_dims[g])
        body = coeffs[1:-1].strip()
        if body:
            for chunk in re.split(r",(?![^()]*\))", body):
                label, _, value = chunk.rpartition(":")
                if not label:
                    raise UsageError(f"element {text!r}: bad coefficient entry {chunk!r}")
                vec[_basis_index(X, g, label)] = ex.rat(value.strip())
        return g, vec
    if "@" not in s:
        raise UsageError(f"element {text!r}: expected 'combination@sector'")
    combo, sector = s.rsplit("@", 1)
    g = _sector_index(X, sector)
    combo = combo.strip()
    if combo.startswith("(") and combo.endswith(")") and ("+" in combo or " - " in combo):
        combo = combo[1:-1]
    vec = ex.vec_zero(X.sector_dims[g])
    if combo in ("0", ""):
        return g, vec
    for signed_term in re.split(r"\s+(?=[+-])", combo.replace("+-", "-")):
        term = signed_term.strip()
        if term in ("+", "-"):
            raise UsageError(f"element {text!r}: dangling sign")
        sign = 1
        if term.startswith("+"):
            term = term[1:].strip()
        elif term.startswith("-"):
            sign = -1
            term = term[1:].strip()
        labels = X.sector_labels[g]
        if term in labels or (term.startswith("(") and term.endswith(")")):
            coeff, label = 1, term
        elif "*" in term:
            coeff_text, label = term.split("*", 1)
            coeff = ex.rat(coeff_text.strip())
            label = label.strip()
        else:
            m = _COEFF_RE.match(term)
            if m and m.end() < len(term):
                coeff = ex.rat(m.group(1))
                label = term[m.end():]
            elif m and m.end() == len(term) and X.sector_dims[g] == 1:
                coeff = ex.rat(m.group(1))
                label = labels[0]
            else:
                coeff, label = 1, term
        idx = _basis_index(X, g, label)
        vec[idx] = ex.norm(vec[idx] + sign * coeff)
    return g, vec


def format_element(X: GFrobeniusAlgebra, g: int, vec) -> str:
    terms = [(i, c) for i, c in enumerate(vec) if c != 0]
    if not terms:
        return f"0@{X.group.labels[g]}"
    parts = []
    for pos, (i, c) in enumerate(terms):
        label = X.sector_labels[g][i]
        neg = c < 0
        mag = -c if neg else c
        if mag == 1:
            body = label
        elif label[:1].isdigit():
            body = f"{ex.fmt_rat(mag)}*{label}"
        else:
            body = f"{ex.fmt_rat(mag)}{label}"
        if pos == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    combo = " ".join(parts)
    if len(terms) > 1:
        combo = f"({combo})"
    return f"{combo}@{X.group.labels[g]}"


# -- document loading ---------------------------------------------------------

def _load_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_galg(path) -> GFrobeniusAlgebra:
    doc = _load_json(path)
    if "sectors" not in doc:
        raise UsageError(f"{path} is not a sector-graded algebra document")
    return gfrob.from_json_dict(doc)


# -- subcommands ---------------------------------------------------------------

def cmd_verify(args) -> int:
    doc = _load_json(args.file)
    if "sectors" in doc:
        algebra = gfrob.from_json_dict(doc)
        report = gfrob.verify_axioms(algebra, budget=args.budget)
        title = f"sector-graded algebra {algebra.name!r}"
    elif "basis" in doc:
        algebra = frob.from_json_dict(doc, validate=False)
        report = algebra.verify()
        title = f"algebra {algebra.name!r}"
    elif "values" in doc:
        alpha = cocy.from_json_dict(doc)
        report = cocy.validate(alpha)
        title = "cocycle"
    else:
        raise UsageError(f"{args.file}: unrecognized document type")
    print(f"verify: {title}")
    print(report.summary())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    print("RESULT: " + ("all checks pass" if report.passed else "FAILED"))
    return 0 if report.passed else 1


def cmd_symprod(args) -> int:
    base = frob.load(args.base)
    spq = sp_mod.build(base, args.n, budget=args.budget)
    out = spq.realize()
    lam = ex.rat(args.lam) if args.lam is not None else None
    sigma = cocy.sign_supertwist(args.n) if args.super_twist else None
    if lam is not None or sigma is not None:
        alpha = cocy.normalized_sn_cocycle(args.n, lam) if lam is not None else None
        out = gfrob.twist(out, alpha, sigma)
        out.name = f"sym{args.n}({base.name})" + (f" lambda={args.lam}" if lam is not None else "") + (
            " super" if sigma is not None else "")
    if args.out:
        gfrob.save(out, args.out)
        print(f"wrote {args.out}")
    else:
        print(json.dumps(gfrob.to_json_dict(out), indent=2, sort_keys=True))
    return 0


def cmd_mult(args) -> int:
    X = _load_galg(args.file)
    g, a = parse_element(X, args.left)
    h, b = parse_element(X, args.right)
    result = X.multiply(g, h, a, b)
    print(format_element(X, X.group.mul(g, h), result))
    return 0


def cmd_twist(args) -> int:
    X = _load_galg(args.file)
    alpha = None
    if args.cocycle:
        alpha = cocy.load(args.cocycle)
    elif args.lam is not None:
        if X.group.perms is None:
            raise UsageError("--lambda needs a symmetric-group graded algebra")
        alpha = cocy.normalized_sn_cocycle(X.group.perms[0].n, ex.rat(args.lam))
    sigma = None
    if args.super_twist:
        if X.group.perms is None:
            raise UsageError("--super needs a symmetric-group graded algebra")
        sigma = cocy.sign_supertwist(X.group.perms[0].n)
    if alpha is None and sigma is None:
        raise UsageError("nothing to do: pass --lambda, --cocycle and/or --super")
    out = gfrob.twist(X, alpha, sigma)
    if args.out:
        gfrob.save(out, args.out)
        print(f"wrote {args.out}")
    else:
        print(json.dumps(gfrob.to_json_dict(out), indent=2, sort_keys=True))
    return 0


def cmd_invariants(args) -> int:
    X = _load_galg(args.file)
    inv = gfrob.invariants(X)
    for label, dim in inv.dims_by_class().items():
        print(f"class {label}: dim {dim}")
    print(f"total: {inv.dim}")
    if not inv.commutative:
        print("WARNING: invariant product is not commutative")
    if args.poincare:
        if args.shift == "standard":
            shifts = grading.standard_shifts(X, copies=args.copies)
        else:
            shifts = grading.zero_shifts(X)
        poly = grading.shifted_poincare(X, shifts, invariants_only=True)
        print(f"poincare: {grading.format_poincare(poly)}")
    return 0


def cmd_export(args) -> int:
    doc = _load_json(args.file)
    if "sectors" in doc:
        payload = gfrob.to_json_dict(gfrob.from_json_dict(doc))
    elif "basis" in doc:
        payload = frob.to_json_dict(frob.from_json_dict(doc, validate=False))
    elif "values" in doc:
        payload = cocy.to_json_dict(cocy.from_json_dict(doc))
    else:
        raise UsageError(f"{args.file}: unrecognized document type")
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbifrob",
        description="Exact verifier and constructor for group-graded Frobenius algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check every defining law of a stored structure")
    p.add_argument("file")
    p.add_argument("--out", help="write the machine-readable report here")
    p.add_argument("--budget", type=int, default=gfrob.VERIFY_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("symprod", help="second-quantize a base algebra for S_n")
    p.add_argument("base")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default=None,
                   help="twist by the normalized cocycle with alpha(tau,tau) = p/q")
    p.add_argument("--super", dest="super_twist", action="store_true",
                   help="apply the sign super-twist")
    p.add_argument("--budget", type=int, default=sp_mod.BUILD_BUDGET)
    p.add_argument("--jobs", type=int, default=1,
                   help="reserved; results are identical for any value")
    p.add_argument("--out", help="output path for the sector-graded algebra document")
    p.set_defaults(func=cmd_symprod)

    p = sub.add_parser("mult", help="multiply two elements of a stored algebra")
    p.add_argument("file")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("twist", help="apply discrete-torsion and/or super twists")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--cocycle", help="cocycle document to twist by")
    p.add_argument("--super", dest="super_twist", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("invariants", help="invariant subalgebra dimensions per class")
    p.add_argument("file")
    p.add_argument("--poincare", action="store_true")
    p.add_argument("--shift", choices=["none", "standard"], default="none")
    p.add_argument("--copies", type=int, default=1)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("export", help="re-emit a document in canonical form")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FileNotFoundError, json.JSONDecodeError, KeyError,
            ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except gfrob.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
