"""Command-line surface: expansion audit, tau computation, Casson reports,
and the full embedded-dataset verification pipeline.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import psi_data as P
from .casson import CertificateError, twist_audit
from .expansion import default_expansion, symplectic_defect
from .diagrams import eta
from .johnson import TwistEntry, tau2, tau3
from .surface import BarcodeError, validate_barcode
from .tensor import DomainError, render

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class TwistFileError(ValueError):
    pass


def parse_twist_file(text, g):
    """Parse the twist-file grammar: records ``coeff genus k1 ... kn``."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise TwistFileError("line %d: fields must be signed integers" % lineno)
        if len(fields) < 2:
            raise TwistFileError("line %d: expected 'coeff genus k1 ... kn'" % lineno)
        coeff, genus, barcode = fields[0], fields[1], tuple(fields[2:])
        if coeff == 0:
            raise TwistFileError("line %d: coefficient must be nonzero" % lineno)
        if genus not in (1, 2):
            raise TwistFileError("line %d: genus must be 1 or 2" % lineno)
        try:
            validate_barcode(barcode, g)
        except BarcodeError as e:
            raise TwistFileError("line %d: %s" % (lineno, e))
        entries.append(TwistEntry(coeff, genus, barcode))
    return entries


def format_twist_file(entries):
    lines = ["# twist list: coeff genus k1 ... kn"]
    for e in entries:
        lines.append(" ".join(str(n) for n in (e.coeff, e.genus) + tuple(e.barcode)))
    return "\n".join(lines) + "\n"


def _load_entries(path, g):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    try:
        return parse_twist_file(text, g)
    except TwistFileError as e:
        print("parse error: %s" % e, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_check_expansion(args):
    exp = default_expansion(args.genus, args.degree)
    defects = symplectic_defect(exp)
    low = [k for k, _ in defects if k <= 3]
    for k, part in defects:
        print("defect degree %d: %s" % (k, render(part)))
    if not low:
        print("symplectic through degree 3")
        return EXIT_OK
    print("symplectic condition FAILS in degrees %s" % low)
    return EXIT_MISMATCH


def cmd_tau(args):
    exp = default_expansion(args.genus, args.degree)
    entries = _load_entries(args.file, args.genus)
    try:
        if args.level == 2:
            value = tau2(exp, entries)
        else:
            t2 = tau2(exp, entries)
            if not t2.is_zero() and not args.unsafe:
                print(
                    "J_3 certificate failed; tau_2 = %s" % render(t2),
                    file=sys.stderr,
                )
                return EXIT_MISMATCH
            value = tau3(exp, entries)
    except DomainError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    print(render(value))
    return EXIT_OK


def cmd_casson(args):
    exp = default_expansion(args.genus, args.degree)
    entries = _load_entries(args.file, args.genus)
    try:
        report = twist_audit(entries, exp)
    except DomainError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    print(report.render())
    return EXIT_OK


def cmd_export_psi(args):
    text = format_twist_file(P.psi_twist_entries())
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def verify_psi_checks(corrupt=False):
    """Run the full reproduction; yields (name, passed, detail) triples."""
    trunc = 5
    exp = default_expansion(2, trunc)
    entries = P.psi_twist_entries()
    if corrupt:
        head = entries[0]
        entries = [TwistEntry(head.coeff + 1, head.genus, head.barcode)] + entries[1:]

    t2 = tau2(exp, entries)
    yield "tau2_psi_vanishes", t2.is_zero(), render(t2)

    t3 = tau3(exp, entries)
    full = eta(P.expected_tau3(), trunc)
    yield "tau3_matches_tree_sum", t3 == full, render(t3 - full)
    compact = eta(P.expected_tau3_compact(), trunc)
    yield "tau3_matches_compact_form", t3 == compact, render(t3 - compact)

    eq4 = P.bracket_decomposition_value(trunc)
    yield "bracket_decomposition", eq4 == t3, render(eq4 - t3)

    lhs = eta(P.identity_lhs(), trunc)
    rhs = eta(P.identity_rhs(), trunc)
    yield "three_tau2_odot_identity", lhs == rhs, render(lhs - rhs)

    lt = eta(P.lemma_tree(), trunc)
    lo = eta(P.lemma_odot_combination(), trunc)
    yield "lemma_odot_decomposition", lt == lo, render(lt - lo)

    report = twist_audit(entries, exp)
    casson_ok = (
        report.d_value == -24
        and report.d_prime_value == 0
        and report.lambda_value == 1
        and report.n_genus1 == 10
        and report.n_genus2 == -3
    )
    yield "casson_numbers", casson_ok, report.render()


def cmd_verify_psi(args):
    all_ok = True
    for name, ok, detail in verify_psi_checks(corrupt=args.corrupt):
        print("%-28s %s" % (name, "PASS" if ok else "FAIL"))
        if not ok:
            all_ok = False
            print("  difference: %s" % detail)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twistcalc",
        description="Exact Johnson homomorphisms and Casson-core values "
        "of products of Dehn twists along bounding simple closed curves.",
    )
    parser.add_argument("--genus", type=int, default=2, help="surface genus (default 2)")
    parser.add_argument(
        "--degree", type=int, default=5, help="truncation degree (default 5)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-expansion", help="audit the symplectic condition")
    p.set_defaults(func=cmd_check_expansion)

    p = sub.add_parser("tau", help="tau_2 or tau_3 of a twist-list file")
    p.add_argument("--level", type=int, choices=(2, 3), required=True)
    p.add_argument("--file", required=True)
    p.add_argument(
        "--unsafe",
        action="store_true",
        help="emit the L_5 sum even without the J_3 certificate (non-Johnson output)",
    )
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("casson", help="Casson-core report of a twist-list file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_casson)

    p = sub.add_parser("export-psi", help="write the embedded dataset as a twist file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_psi)

    p = sub.add_parser("verify-psi", help="run the full reproduction pipeline")
    p.add_argument(
        "--corrupt",
        action="store_true",
        help=argparse.SUPPRESS,  # perturb a coefficient; for failure-path testing
    )
    p.set_defaults(func=cmd_verify_psi)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.genus < 1:
        parser.error("--genus must be >= 1")
    if args.degree < 2:
        parser.error("--degree must be >= 2")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
