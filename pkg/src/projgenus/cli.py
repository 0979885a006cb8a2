"""Command line interface.

Exit codes: 0 success or positive answer, 1 negative answer, 2 bad input.
Every command prints a table by default and a result document with
``--json``::

    {"command": ..., "input_digest": ..., "result": {...}, "verified": [...]}

The search bound of the bounded checks can be set in the profile document
(``"bounds": {"coordinate": n}``) or via ``$PROJGENUS_BOUND``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import bigmonoid, decomp, genus, order, traces
from .config import ENV_BOUND, BoundError, coordinate_bound
from .profile import AlgebraProfile, ProfileError, is_degenerate, validate

__all__ = ["run", "main", "load_profile_document", "CliError"]

# a box larger than this is not searched by the completeness check of ``hilbert``
MAX_BOX = 10**6


class CliError(Exception):
    """Usage or input error; exit code 2."""


class Outcome:
    def __init__(self, result: dict[str, Any], text: str, code: int = 0,
                 verified: Sequence[str] = ()):
        self.result = result
        self.text = text
        self.code = code
        self.verified = list(verified)


def load_profile_document(path: str) -> tuple[AlgebraProfile, dict[str, int], bytes]:
    raw = _read(path)
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CliError(f"{path}: not a JSON document ({exc})") from exc
    if not isinstance(data, dict):
        raise CliError(f"{path}: expected a JSON object")
    try:
        profile = validate(data)
    except ProfileError as exc:
        raise CliError(f"{path}: invalid profile: {exc}") from exc
    bounds = data.get("bounds") or {}
    if not isinstance(bounds, dict) or not all(isinstance(v, int) for v in bounds.values()):
        raise CliError(f"{path}: bounds must map names to integers")
    return profile, bounds, raw


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc


def _genus_arg(profile: AlgebraProfile, text: str) -> genus.GenusVector:
    try:
        v = genus.parse_genus(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if v.shape != profile.shape:
        raise CliError(f"genus {text} has shape {v.shape}, profile has {profile.shape}")
    return v


def _need_blocks(profile: AlgebraProfile, n: int, what: str) -> None:
    if profile.ell < n:
        raise CliError(f"{what} needs at least {n} exceptional block(s), profile has {profile.ell}")


def _trace_json(t: traces.TraceIdeal):
    return None if t.is_zero else [sorted(a) for a in t.subsets]


def _witness_json(w: decomp.Witness) -> dict[str, Any]:
    return {"target": w.target.to_json(), "a": w.a.to_json(), "aprime": w.aprime.to_json()}


# -- commands -----------------------------------------------------------------

def cmd_validate(profile, bounds, args) -> Outcome:
    text = f"valid profile: k={profile.k}, l={profile.ell}, t={list(profile.shape)}"
    for b in profile.blocks:
        text += f"\n  {b.label}: ranks {list(b.ranks)}, multiplicities {list(b.multiplicities)}"
    return Outcome({"profile": profile.to_dict(), "degenerate": is_degenerate(profile)}, text,
                   verified=["block relations sum r*m = k"])


def cmd_rank_monoid(profile, bounds, args) -> Outcome:
    upto = args.upto if args.upto is not None else bounds.get("rank", 100)
    if upto < 0:
        raise CliError("--upto must be non-negative")
    members = genus.rank_monoid(profile, upto)
    mset = set(members)
    lines = [f"ranks of finitely generated projectives up to {upto}:"]
    lines += [f"  {r:>6}  {'yes' if r in mset else 'no'}" for r in range(upto + 1)]
    return Outcome({"upto": upto, "members": members}, "\n".join(lines))


def cmd_hilbert(profile, bounds, args) -> Outcome:
    _need_blocks(profile, 1, "hilbert")
    basis = genus.hilbert_basis_A(profile)
    bound = coordinate_bound(profile, bounds.get("coordinate"))
    verified = ["every generator is in A with the stated rank", "no generator is reducible"]
    if (bound + 1) ** sum(profile.shape) <= MAX_BOX:
        problems = genus.verify_hilbert_basis(profile, basis, bound)
        verified.append(f"completeness for entries <= {bound}")
    else:
        problems = genus.verify_hilbert_basis(profile, basis, 0)
        verified.append("completeness not checked (search box too large)")
    if problems:
        raise AssertionError(f"Hilbert basis failed verification: {problems}")
    lines = [f"{len(basis)} minimal generators of A:"] + [f"  {g}" for g in basis]
    result = {"generators": [{"genus": g.vector.to_json(), "rank": g.rank} for g in basis]}
    return Outcome(result, "\n".join(lines), verified=verified)


def cmd_big_generators(profile, bounds, args) -> Outcome:
    _need_blocks(profile, 2, "big-generators")
    gens = genus.big_generators(profile)
    bound = min(4, coordinate_bound(profile, bounds.get("coordinate")))
    problems = genus.verify_big_generators(profile, gens, bound)
    if problems:
        raise AssertionError(f"big generators failed verification: {problems}")
    lines = [f"{len(gens)} minimal generators of B:"] + [f"  {g}" for g in gens]
    return Outcome({"generators": [g.to_json() for g in gens]}, "\n".join(lines),
                   verified=["every generator is in B",
                             f"generation and irreducibility for finite entries <= {bound}"])


def cmd_traces(profile, bounds, args) -> Outcome:
    _need_blocks(profile, 1, "traces")
    items = traces.minimal_traces(profile) if args.minimal else traces.enumerate_traces(profile)
    full = traces.full_trace(profile)
    lines = [f"{len(items)} {'minimal ' if args.minimal else ''}trace ideals:"]
    for t in items:
        note = ""
        if not t.is_zero:
            survivors = traces.quotient_profile(profile, t).survivors
            note = "  (regular module)" if t == full else f"  quotient survivors {[list(c) for c in survivors]}"
        lines.append(f"  {t}{note}")
    return Outcome({"traces": [_trace_json(t) for t in items], "minimal": bool(args.minimal)},
                   "\n".join(lines))


def cmd_check(profile, bounds, args) -> Outcome:
    if len(args.genus) != 1:
        raise CliError("check takes exactly one --genus")
    v = _genus_arg(profile, args.genus[0])
    ranks = [x.value if x.is_finite else "inf" for x in genus.block_ranks(profile, v)]
    if v.is_finite:
        r = genus.membership_A(profile, v)
        if r is not None:
            return Outcome({"genus": v.to_json(), "member": "A", "rank": r, "block_ranks": ranks},
                           f"{v} is in A (finitely generated), rank {r}",
                           verified=["all block ranks agree"])
    elif genus.membership_B(profile, v):
        return Outcome({"genus": v.to_json(), "member": "B", "rank": "inf", "block_ranks": ranks},
                       f"{v} is in B (big projective)",
                       verified=["every block has an infinite entry"])
    return Outcome({"genus": v.to_json(), "member": None, "block_ranks": ranks},
                   f"{v} is not a genus: block ranks {ranks}", code=1)


def cmd_decompose(profile, bounds, args) -> Outcome:
    if len(args.genus) != 1:
        raise CliError("decompose takes exactly one --genus")
    _need_blocks(profile, 2, "decompose")
    v = _genus_arg(profile, args.genus[0])
    try:
        res = decomp.decompose_big(profile, v)
    except decomp.NotBig as exc:
        raise CliError(str(exc)) from exc
    if isinstance(res, decomp.Witness):
        if not res.verify(profile):
            raise AssertionError(f"witness failed verification: {res.problems(profile)}")
        return Outcome({"decomposes": True, "witness": _witness_json(res)},
                       f"direct sum of finitely generated modules:\n  {res}",
                       verified=["a in A", "a' in A, a' != 0", "a + inf*a' = target"])
    if not res.verify(profile):
        raise AssertionError(f"obstruction failed verification: {res}")
    result = {"decomposes": False, "obstruction": {
        "target": v.to_json(), "blocks": list(res.blocks), "modulus": res.modulus,
        "fixed": list(res.fixed), "residues": list(res.residues),
        "congruences": list(res.congruences)}}
    text = (f"not a direct sum of finitely generated modules:\n"
            f"  {res.congruences[0]}\n  {res.congruences[1]}")
    return Outcome(result, text, code=1, verified=["residue classes are disjoint"])


def cmd_decide_fg(profile, bounds, args) -> Outcome:
    dec = decomp.decide_all_fg(profile)
    coprime = decomp.coprime_criterion(profile)
    result: dict[str, Any] = {"all_fg": dec.holds, "coprime": coprime}
    lines = [f"every projective is a direct sum of finitely generated modules: {'yes' if dec else 'no'}",
             f"ranks in different blocks pairwise coprime: {'yes' if coprime else 'no'}"]
    verified = []
    if dec.obstruction is not None:
        ob = dec.obstruction
        if not ob.verify(profile):
            raise AssertionError(f"obstruction failed verification: {ob}")
        result["obstruction"] = {"choice": list(ob.choice), "j": ob.j, "b": ob.b,
                                 "lcm_others": ob.lcm_others, "pivot": ob.pivot,
                                 "gcd": ob.gcd, "target": ob.target}
        lines.append(f"  obstruction: {ob}")
        verified.append("gcd does not divide the stated rank")
    return Outcome(result, "\n".join(lines), code=0 if dec else 1, verified=verified)


def cmd_add(profile, bounds, args) -> Outcome:
    if len(args.genus) != 2:
        raise CliError("add takes exactly two --genus arguments")
    vs = [_genus_arg(profile, g) for g in args.genus]
    try:
        xs = [bigmonoid.from_genus(profile, v) for v in vs]
    except bigmonoid.NotAGenus as exc:
        raise CliError(str(exc)) from exc
    total = bigmonoid.add(profile, *xs)
    v = bigmonoid.to_genus(profile, total)
    if v != vs[0] + vs[1]:
        raise AssertionError("pair addition disagrees with genus addition")
    result = {"sum": v.to_json(),
              "trace": _trace_json(total.trace) if isinstance(total, bigmonoid.Big) else None}
    return Outcome(result, f"{vs[0]} + {vs[1]} = {v}\n  as a pair: {total}",
                   verified=["pair sum agrees with genus sum"])


def _load_spec(path: str) -> tuple[order.OrderSpec, bytes]:
    raw = _read(path)
    try:
        return order.OrderSpec.from_dict(json.loads(raw.decode("utf-8"))), raw
    except (UnicodeDecodeError, json.JSONDecodeError, AttributeError) as exc:
        raise CliError(f"{path}: not an order spec document ({exc})") from exc
    except order.InvalidOrderSpec as exc:
        raise CliError(f"{path}: {exc}") from exc


def cmd_make_order(spec, args) -> Outcome:
    idems = order.build(spec)
    result: dict[str, Any] = {
        "spec": spec.to_dict(),
        "partition": [{"part": i, "copy": a, "indices": list(ix)}
                      for (i, a), ix in sorted(idems.partition.items())],
        "idempotents": [{"i": i, "a": a, "b": b, "matrix": idems.matrices[(i, a, b)].tolist()}
                        for i, a, b in idems.keys()],
    }
    lines = [f"order over Z_({spec.p}) in M_{spec.k}(Q): {len(idems.matrices)} matrices e_(i,a,b)"]
    for (i, a), ix in sorted(idems.partition.items()):
        lines.append(f"  A_({i},{a}) = {{{', '.join(map(str, ix))}}}")
    verified = []
    code = 0
    if args.verify:
        rel = order.verify_relations(idems)
        res = order.residue_structure_check(idems, spec.p)
        result["relations"] = {"checks": rel.checks, "failures": rel.failures}
        result["residue"] = {"checks": res.checks, "failures": res.failures, **res.details}
        lines.append(f"relations: {rel.checks} checks, {len(rel.failures)} failures")
        lines.append(f"residue algebra: dimension {res.details['dimension']} "
                     f"(expected {res.details['expected_dimension']}), {res.details['structure']}, "
                     f"{len(res.failures)} failures")
        lines += [f"  FAIL {f}" for f in rel.failures + res.failures]
        if rel.ok and res.ok:
            verified = ["idempotent relations", "residue algebra structure", "cross-block vanishing"]
        else:
            code = 1
    return Outcome(result, "\n".join(lines), code=code, verified=verified)


# -- dispatch -------------------------------------------------------------------

PROFILE_COMMANDS = {
    "validate": (cmd_validate, "check a profile document"),
    "rank-monoid": (cmd_rank_monoid, "ranks of finitely generated projectives"),
    "hilbert": (cmd_hilbert, "minimal generators of the genus monoid A"),
    "big-generators": (cmd_big_generators, "minimal generators of the big genera B"),
    "traces": (cmd_traces, "the trace ideals"),
    "check": (cmd_check, "membership of a genus vector in A or B"),
    "decompose": (cmd_decompose, "decompose a big genus as a + inf*a'"),
    "decide-fg": (cmd_decide_fg, "are all projectives sums of finitely generated ones"),
    "add": (cmd_add, "add two genera through the pair representation"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON result document")
    parser = argparse.ArgumentParser(
        prog="projgenus",
        description="Genus monoids of projective modules over locally semiperfect orders.",
        epilog=f"${ENV_BOUND} overrides the default search bound.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, (_, help_text) in PROFILE_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", metavar="FILE")
        if name == "rank-monoid":
            p.add_argument("--upto", type=int, metavar="N")
        if name == "traces":
            p.add_argument("--minimal", action="store_true")
        if name in ("check", "decompose", "add"):
            p.add_argument("--genus", action="append", default=[], metavar="VEC")
    p = sub.add_parser("make-order", parents=[common], help="build an explicit Z_(p)-order")
    p.add_argument("file", metavar="SPECFILE")
    p.add_argument("--verify", action="store_true")
    p = sub.add_parser("order-profile", parents=[common],
                       help="assemble local orders at distinct primes into a profile document")
    p.add_argument("files", metavar="SPECFILE", nargs="+")
    return parser


def _dispatch(args) -> tuple[Outcome, bytes]:
    if args.command in PROFILE_COMMANDS:
        profile, bounds, raw = load_profile_document(args.file)
        return PROFILE_COMMANDS[args.command][0](profile, bounds, args), raw
    if args.command == "make-order":
        spec, raw = _load_spec(args.file)
        return cmd_make_order(spec, args), raw
    specs, raws = zip(*(_load_spec(f) for f in args.files))
    try:
        profile = order.profile_from_orders(specs)
    except (order.InvalidOrderSpec, ProfileError) as exc:
        raise CliError(str(exc)) from exc
    doc = profile.to_dict()
    return Outcome({"profile": doc}, json.dumps(doc, indent=2),
                   verified=["block relations sum r*m = k"]), b"".join(raws)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        outcome, raw = _dispatch(args)
    except (CliError, BoundError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.json:
        doc = {"command": args.command, "input_digest": hashlib.sha256(raw).hexdigest(),
               "result": outcome.result, "verified": outcome.verified}
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False), file=out)
    else:
        print(outcome.text, file=out)
    return outcome.code


def main() -> None:
    sys.exit(run())
