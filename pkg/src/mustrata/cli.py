"""Command-line front end.

Exit status: 0 on success, 1 on a domain or input error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from .ancestor import (
    ancestor_hilbert,
    ancestor_ideal,
    scroll_info,
    substratum_closure,
    substratum_dim,
    verify_scroll_containment,
)
from .errors import MustrataError
from .fields import QQ, Field
from .properness import generic_degree, non_proper_codim
from .sampler import SampleSpec, sample_in_stratum_with_attempts, sample_kpu, sample_non_proper
from .serialize import dumps, form_to_json, load_parametrization, parametrization_to_json
from .strata import (
    closure_set,
    descriptor,
    hasse_diagram,
    tail_hilbert_from_mu,
)
from .syzygy import hilbert_of_ideal, mu_basis


def _int_list(text):
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not parts:
        raise argparse.ArgumentTypeError("empty list")
    return parts


def _field(text):
    try:
        return Field.parse(text)
    except MustrataError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ascending(values, flag):
    if values is None:
        return None
    if list(values) != sorted(values):
        print(f"warning: {flag} {','.join(map(str, values))} is not ascending; using the sorted order",
              file=sys.stderr)
    return tuple(sorted(values))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=None,
                        help="Q or Fp:<p> (default: $MUSTRATA_FIELD, else Q)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="mustrata", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    for name, text in (("mubasis", "mu-basis of a curve"), ("mutype", "mu-type and gcd degree"),
                       ("properness", "generic degree of a curve"), ("ancestor", "ancestor ideal and scroll")):
        add(name, text).add_argument("--curve", required=True, metavar="PATH")

    p = add("hilbert", "Hilbert function of a curve's ideal, or of a mu-type")
    p.add_argument("--curve", metavar="PATH")
    p.add_argument("--mu", type=_int_list)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)

    p = add("strata", "stratification poset, or one stratum with --mu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", type=_int_list)
    p.add_argument("--A", type=_int_list, dest="A", help="scroll partition (with --mu)")
    p.add_argument("--with-common-factor", action="store_true")

    p = add("nonproper-codim", "codimension of the generic-degree-k locus")
    for flag in ("--k", "--n", "--d"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--mu", type=_int_list, required=True)

    p = add("sample", "draw a random curve")
    p.add_argument("--mu", type=_int_list, help="target mu-type (reduced type with --k)")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int, help="compose with a random degree-k map of P^1")
    p.add_argument("--kpu", type=int, choices=(1, 2), help="KPU normal form variant")

    add("paper-check", "run the acceptance criteria and worked examples")
    return parser


def _default_field():
    env = os.environ.get("MUSTRATA_FIELD")
    if not env:
        return QQ
    try:
        return Field.parse(env)
    except MustrataError as exc:
        raise MustrataError(f"MUSTRATA_FIELD: {exc}") from None


def _load_curve(args):
    P = load_parametrization(args.curve)
    if args.field is not None and args.field != P.field:
        raise MustrataError(f"{args.curve}: curve is over {P.field} but --field {args.field} was given")
    return P


def _cmd_mubasis(args):
    return mu_basis(_load_curve(args)).to_json()


def _cmd_mutype(args):
    res = mu_basis(_load_curve(args))
    return {"mu": list(res.mu), "c": res.gcd.degree}


def _hilbert_json(H):
    return {"values": list(H.values), "stabilizationDegree": H.stabilization_degree, "tail": H.tail}


def _cmd_hilbert(args, parser):
    if args.curve:
        P = _load_curve(args)
        res = mu_basis(P)
        out = {"mu": list(res.mu)}
        out.update(_hilbert_json(hilbert_of_ideal(P, res.mu)))
        return out
    if args.mu is None or args.n is None or args.d is None:
        parser.error("hilbert needs --curve, or all of --mu, --n and --d")
    mu = _ascending(args.mu, "--mu")
    return {"mu": list(mu), **_hilbert_json(tail_hilbert_from_mu(mu, args.n, args.d))}


def _cmd_strata(args, parser):
    n, d = args.n, args.d
    if args.A is not None and args.mu is None:
        parser.error("--A needs --mu")
    if args.mu is None:
        g = hasse_diagram(n, d, args.with_common_factor)
        return g.to_dot() if args.format == "dot" else g.to_text() if args.format == "text" else g.to_json()
    if args.format == "dot":
        parser.error("--format dot applies to the whole poset (omit --mu)")
    mu = _ascending(args.mu, "--mu")
    node = descriptor(mu, n, d)
    out = {"mu": list(mu), "dim": node.dim, "codim": node.codim,
           "commonFactorDegree": node.common_factor_degree,
           "closure": [list(x) for x in closure_set(mu, n, d, args.with_common_factor)]}
    if args.A is not None:
        A = _ascending(args.A, "--A")
        out["A"] = list(A)
        out["substratumDim"] = substratum_dim(mu, A, n, d)
        out["substratumClosure"] = [list(x) for x in substratum_closure(mu, A)]
    if args.format == "text":
        return "".join(f"{k}: {v}\n" for k, v in out.items())
    return out


def _cmd_properness(args):
    return generic_degree(_load_curve(args), random.Random(args.seed)).to_json()


def _cmd_nonproper(args):
    mu = _ascending(args.mu, "--mu")
    codim, bound = non_proper_codim(mu, args.k, args.n, args.d)
    if args.format == "text":
        return f"{codim}\n"
    return {"mu": list(mu), "k": args.k, "codim": codim, "lowerBound": bound}


def _cmd_ancestor(args):
    P = _load_curve(args)
    res = mu_basis(P)
    dec = ancestor_ideal(P, res.mu)
    ancestor_hilbert(dec)
    info = scroll_info(dec, P.d)
    return {
        "generators": [form_to_json(h) for h in dec.generators],
        "tau": dec.tau,
        "scrollPartition": list(dec.scroll_partition),
        "scrollDim": info.scroll_dim,
        "scrollDegree": info.scroll_degree,
        "ambient": info.is_ambient,
        "containmentVerified": verify_scroll_containment(P, dec).ok,
    }


def _cmd_sample(args, parser, field):
    if args.kpu is not None:
        if args.n is None:
            parser.error("--kpu needs --n")
        return parametrization_to_json(sample_kpu(args.kpu, args.n, seed=args.seed, field=field))
    if args.mu is None:
        parser.error("sample needs --mu (or --kpu)")
    mu = _ascending(args.mu, "--mu")
    d = len(mu) if args.d is None else args.d
    if args.k is not None:
        if args.n is not None and args.n != args.k * sum(mu):
            parser.error(f"--n must equal k * |mu| = {args.k * sum(mu)} with --k")
        return parametrization_to_json(sample_non_proper(mu, args.k, d, seed=args.seed, field=field))
    if args.n is None:
        parser.error("sample needs --n")
    sample = sample_in_stratum_with_attempts(SampleSpec(mu, args.n, d, seed=args.seed, field=field))
    print(f"attempts: {sample.attempts}", file=sys.stderr)
    return parametrization_to_json(sample.curve)


def _cmd_check(args):
    from .acceptance import format_table, run_all

    results = run_all()
    return format_table(results), all(x.ok for x in results)


def _emit(payload, path):
    text = payload if isinstance(payload, str) else dumps(payload)
    if path:
        try:
            with open(path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise MustrataError(f"{path}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        field = args.field or _default_field()
        cmd = args.command
        ok = True
        if cmd == "mubasis":
            payload = _cmd_mubasis(args)
        elif cmd == "mutype":
            payload = _cmd_mutype(args)
        elif cmd == "hilbert":
            payload = _cmd_hilbert(args, parser)
        elif cmd == "strata":
            payload = _cmd_strata(args, parser)
        elif cmd == "properness":
            payload = _cmd_properness(args)
        elif cmd == "nonproper-codim":
            payload = _cmd_nonproper(args)
        elif cmd == "ancestor":
            payload = _cmd_ancestor(args)
        elif cmd == "sample":
            payload = _cmd_sample(args, parser, field)
        else:
            payload, ok = _cmd_check(args)
        _emit(payload, args.output)
        return 0 if ok else 1
    except SystemExit as exc:
        return exc.code
    except MustrataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
