"""Command-line front end.

Subcommands build groups and codes, run the certifiers, and replay
witnesses; every certifying subcommand writes deterministic witness JSON
to stdout or to ``-o``.  Exit codes: 0 success, 2 verification failure
(the report still prints), 1 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .certify import (
    abelianize_code,
    certify_divisibility,
    certify_group_code,
    certify_left_group_code,
    coset_rep_sum_code,
    cyclicize_code,
    hall_cocyclic_to_cyclic,
    rep_sum_embedding,
    replay,
    trivial_action_to_abelian_witness,
)
from .codes import (
    CoordBijection,
    algebra_to_code,
    code_file_text,
    paut_enumerate,
    read_code_file,
)
from .constructions import (
    parse_group_spec,
    prescribed_commutator_group,
    rep_sum_code,
)
from .errors import GroupCodesError, VerificationFailure
from .ffield import parse_field_spec
from .galg import TWO_SIDED, ideal_generated, subgroup_sum
from .perms import (
    PermGroup,
    derived_subgroup,
    group_file_text,
    parse_perm,
    read_group_file,
    regular_representation,
)


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="groupcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-o", "--output", help="write the result to this file")
        p.add_argument("--log", help="append command timing to this sidecar file "
                                     "(witnesses themselves carry no timestamps)")
        return p

    p = add("build-group", "build a group and write its generator file")
    p.add_argument("spec", help="cyclic:m | dihedral:t | gpqm:p,q,m | a5 | "
                                "product:<spec>x<spec> | prescribed:s,t")

    p = add("build-code", "build a code file")
    p.add_argument("spec", help="rep-sum:s,t | derived-ideal:<group-spec>")
    p.add_argument("--field", required=True, help="field spec, e.g. 2 or 2^2:1,1,1")

    p = add("paut", "enumerate the permutation automorphism group (n <= 8)")
    p.add_argument("code")
    p.add_argument("--max-n", type=int, default=8,
                   help="override the length cap (default 8)")

    for name in ("certify-left", "certify-group"):
        p = add(name, f"emit a witness that the code is a {'left ' if 'left' in name else ''}group code")
        p.add_argument("code")
        p.add_argument("group")

    p = add("certify-abelian", "certify the code abelian, by decomposition or transfer")
    p.add_argument("code")
    p.add_argument("group")
    p.add_argument("--A", help="generators of A, cycle notation, ';'-separated")
    p.add_argument("--B", help="generators of B")
    p.add_argument("--via-trivial-action", action="store_true")
    p.add_argument("--phi", help="coordinate bijection file, or 'identity'")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--i0", type=int, default=1)

    p = add("certify-cyclic", "certify the code cyclic, by decomposition or Hall transfer")
    p.add_argument("code")
    p.add_argument("group")
    p.add_argument("--A")
    p.add_argument("--B")
    p.add_argument("--via-hall", action="store_true")
    p.add_argument("--phi")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--i0", type=int, default=1)

    p = add("check-divisibility", "certify derived-subgroup weight divisibility")
    p.add_argument("code")
    p.add_argument("group")
    p.add_argument("--phi", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")

    p = add("embed-repsum", "embed the code into a repetition-code direct sum")
    p.add_argument("code")
    p.add_argument("group")
    p.add_argument("--phi", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")

    p = add("prop1", "build the coset bijection turning rep-sum:s,t into an ideal code")
    p.add_argument("spec", help="group builder spec")
    p.add_argument("--field", required=True)

    p = add("replay", "re-verify a witness from its artifacts")
    p.add_argument("witness")

    return parser


def _emit(text: str, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, output):
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", output)


def _parse_gens(text: str, degree: int):
    return [parse_perm(part, degree) for part in text.split(";") if part.strip()]


def _load_phi(arg: str, group: PermGroup) -> CoordBijection:
    if arg == "identity":
        return CoordBijection.identity(group)
    with open(arg, encoding="utf-8") as fh:
        data = json.load(fh)
    return CoordBijection(group, tuple(int(j) - 1 for j in data["phi"]))


def _run_build_group(args) -> int:
    if args.spec.startswith("prescribed:"):
        s, t = (int(x) for x in args.spec.split(":", 1)[1].split(","))
        result = prescribed_commutator_group(s, t)
        if not result.supported:
            _emit_json(
                {"case": None, "ok": False, "reason": result.reason, "supported": False},
                args.output,
            )
            return 2
        table = result.table
    else:
        table = parse_group_spec(args.spec)
    group, _ = regular_representation(table)
    _emit(group_file_text(group), args.output)
    return 0


def _run_build_code(args) -> int:
    field = parse_field_spec(args.field)
    if args.spec.startswith("rep-sum:"):
        s, t = (int(x) for x in args.spec.split(":", 1)[1].split(","))
        C = rep_sum_code(s, t, field)
    elif args.spec.startswith("derived-ideal:"):
        # the two-sided ideal generated by the derived-subgroup sum, in the
        # group's own coordinates; pairs with the matching build-group file
        # and --phi identity
        table = parse_group_spec(args.spec.split(":", 1)[1])
        group, _ = regular_representation(table)
        derived = derived_subgroup(group)
        ideal = ideal_generated([subgroup_sum(group, derived, field)], TWO_SIDED)
        C = algebra_to_code(ideal, CoordBijection.identity(group))
    else:
        raise ValueError(
            f"unknown code spec {args.spec!r} "
            "(expected rep-sum:s,t or derived-ideal:<group-spec>)"
        )
    _emit(code_file_text(C), args.output)
    return 0


def _run_paut(args) -> int:
    C = read_code_file(args.code)
    group = paut_enumerate(C, max_n=args.max_n)
    payload = {
        "degree": group.degree,
        "generators": [[i + 1 for i in g.images] for g in group.generators],
        "order": group.order,
    }
    _emit_json(payload, args.output)
    return 0


def _load_code_group(args):
    return read_code_file(args.code), read_group_file(args.group)


def _run_certify(args, left: bool) -> int:
    C, G = _load_code_group(args)
    fn = certify_left_group_code if left else certify_group_code
    witness = fn(C, G, code_file=args.code)
    _emit(witness.to_json(), args.output)
    return 0


def _run_certify_abelian(args) -> int:
    C, G = _load_code_group(args)
    if args.via_trivial_action:
        if not args.phi:
            raise ValueError("--via-trivial-action requires --phi")
        witness = trivial_action_to_abelian_witness(
            C, G, _load_phi(args.phi, G), side=args.side, code_file=args.code
        )
    elif args.A is not None and args.B is not None:
        A = PermGroup(_parse_gens(args.A, G.degree), G.degree)
        B = PermGroup(_parse_gens(args.B, G.degree), G.degree)
        witness = abelianize_code(C, G, A, B, i0=args.i0, code_file=args.code)
    else:
        raise ValueError("supply either --A and --B, or --via-trivial-action --phi")
    _emit(witness.to_json(), args.output)
    return 0


def _run_certify_cyclic(args) -> int:
    C, G = _load_code_group(args)
    if args.via_hall:
        phi = _load_phi(args.phi, G) if args.phi else None
        witness = hall_cocyclic_to_cyclic(C, G, phi, side=args.side, code_file=args.code)
    elif args.A is not None and args.B is not None:
        A = PermGroup(_parse_gens(args.A, G.degree), G.degree)
        B = PermGroup(_parse_gens(args.B, G.degree), G.degree)
        witness = cyclicize_code(C, G, A, B, i0=args.i0, code_file=args.code)
    else:
        raise ValueError("supply either --A and --B, or --via-hall")
    _emit(witness.to_json(), args.output)
    return 0


def _run_divisibility(args) -> int:
    C, G = _load_code_group(args)
    witness = certify_divisibility(
        C, G, _load_phi(args.phi, G), side=args.side, code_file=args.code
    )
    _emit(witness.to_json(), args.output)
    return 0


def _run_embed(args) -> int:
    C, G = _load_code_group(args)
    _, _, _, witness = rep_sum_embedding(
        C, G, _load_phi(args.phi, G), side=args.side, code_file=args.code
    )
    _emit(witness.to_json(), args.output)
    return 0


def _run_prop1(args) -> int:
    table = parse_group_spec(args.spec)
    field = parse_field_spec(args.field)
    _, _, witness = coset_rep_sum_code(table, field, builder_spec=args.spec)
    _emit(witness.to_json(), args.output)
    return 0


def _run_replay(args) -> int:
    with open(args.witness, encoding="utf-8") as fh:
        data = json.load(fh)
    report = replay(data)
    _emit_json(report, args.output)
    return 0 if report["ok"] else 2


_DISPATCH = {
    "build-group": _run_build_group,
    "build-code": _run_build_code,
    "paut": _run_paut,
    "certify-left": lambda args: _run_certify(args, left=True),
    "certify-group": lambda args: _run_certify(args, left=False),
    "certify-abelian": _run_certify_abelian,
    "certify-cyclic": _run_certify_cyclic,
    "check-divisibility": _run_divisibility,
    "embed-repsum": _run_embed,
    "prop1": _run_prop1,
    "replay": _run_replay,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        code = _DISPATCH[args.command](args)
    except VerificationFailure as exc:
        _emit_json(exc.report(), getattr(args, "output", None))
        code = 2
    except (GroupCodesError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"groupcodes: error: {exc}", file=sys.stderr)
        code = 1
    if getattr(args, "log", None):
        elapsed = time.perf_counter() - start
        with open(args.log, "a", encoding="utf-8") as fh:
            fh.write(f"{args.command} exit={code} elapsed={elapsed:.6f}s\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
