"""Command-line surface.

Subcommands: info, indecomposables, resolve, ext, approx, check, verify.
Exit codes: 0 success / all checks pass, 1 a check failed (witness printed),
2 usage or algebra-spec error, 3 unsupported request (non-Nakayama universe,
truncation at the cap).

Module names accepted everywhere a module is expected: ``P<v>``, ``I<v>``,
``S<v>``, ``M<i>:<j>`` (uniserial with socle at i and top at j, Nakayama
only) and ``@file.json`` for an inline representation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath

from .algebra import AlgebraSpecError, BoundAlgebra, cartan_matrix, is_nakayama, parse_algebra
from .approx import SubcategorySet, is_maximal_orthogonal, minimal_approximation, trivial_candidate
from .catalog import enumerate_indecomposables, uniserial_module, universe_lines
from .homology import Resolution, default_cap, ext_dim, ext_dim_via_injective, minimal_resolution
from .rep import (
    Representation,
    TruncationError,
    decompose,
    is_isomorphic,
    morphism_parts,
    rep_from_json_dict,
    standard_module,
)
from .verify import run_all_checks


class UnsupportedRequest(RuntimeError):
    """Maps to exit code 3."""


class CheckFailed(RuntimeError):
    """Maps to exit code 1."""


def load_algebra(path: str) -> BoundAlgebra:
    try:
        text = FilePath(path).read_text()
    except OSError as exc:
        raise AlgebraSpecError(f"cannot read {path}: {exc}") from exc
    return parse_algebra(text)


def resolve_module_name(algebra: BoundAlgebra, name: str) -> Representation:
    if name.startswith("@"):
        data = json.loads(FilePath(name[1:]).read_text())
        return rep_from_json_dict(algebra, data)
    kind_map = {"P": "projective", "I": "injective", "S": "simple"}
    if name[:1] in kind_map and name[1:].lstrip("-").isdigit():
        return standard_module(algebra, kind_map[name[0]], int(name[1:]))
    if name[:1] == "M" and ":" in name:
        socle_text, _, top_text = name[1:].partition(":")
        if not (socle_text.lstrip("-").isdigit() and top_text.lstrip("-").isdigit()):
            raise AlgebraSpecError(f"bad interval name {name!r}; expected M<i>:<j>")
        if not is_nakayama(algebra):
            raise UnsupportedRequest("interval module names need a Nakayama algebra")
        socle, top = int(socle_text), int(top_text)
        paths = sorted(algebra.basis_from(top), key=lambda q: q.length)
        for length, path in enumerate(paths):
            if path.target == socle:
                return uniserial_module(algebra, top, length + 1)
        raise AlgebraSpecError(f"no uniserial module with top S{top} and socle S{socle}")
    raise AlgebraSpecError(f"cannot parse module name {name!r}")


def _display_name(algebra: BoundAlgebra, m: Representation, seed: int) -> str:
    """A readable name: interval names over Nakayama algebras, dims otherwise."""
    if m.is_zero:
        return "0"
    universe = enumerate_indecomposables(algebra)
    if universe.complete:
        parts = decompose(m, seed)
        names = []
        for part in parts:
            label = f"dims{part.dims}"
            for obj, name in zip(universe.objects, universe.names):
                if obj.dims == part.dims and is_isomorphic(obj, part, seed):
                    label = name
                    break
            names.append(label)
        return " (+) ".join(names)
    return f"dims{m.dims}"


def format_resolution(res: Resolution, target_name: str) -> list[str]:
    def term_name(layout: list[int], kind: str) -> str:
        letter = "P" if kind == "projective" else "I"
        return " (+) ".join(f"{letter}{v}" for v in layout) if layout else "0"

    names = [term_name(lay, res.kind) for lay in res.layouts]
    if res.kind == "projective":
        chain = ["0"] if not res.truncated else ["..."]
        chain += list(reversed(names)) + [target_name, "0"]
    else:
        chain = ["0", target_name] + names + (["0"] if not res.truncated else ["..."])
    lines = [" → ".join(chain)]
    dims = [str(tuple(t.dims)) for t in res.terms]
    if res.kind == "projective":
        dims = list(reversed(dims))
    lines.append("terms: " + "  ".join(dims) + f"   target: {tuple(res.target.dims)}")
    return lines


def load_subcategory(algebra: BoundAlgebra, spec: str, seed: int) -> SubcategorySet:
    if spec == "trivial":
        return trivial_candidate(algebra, seed)
    names = [line.strip() for line in FilePath(spec).read_text().splitlines() if line.strip()]
    objects = [resolve_module_name(algebra, n) for n in names]
    return SubcategorySet(algebra, objects, validate=True, seed=seed)


# -- subcommands ---------------------------------------------------------------


def cmd_info(args) -> int:
    algebra = load_algebra(args.spec)
    from .verify import structure_flags

    flags = structure_flags(algebra, args.cap, args.seed)
    print(f"field: F_{algebra.p}")
    print(f"vertices: {list(algebra.quiver.vertices)}")
    print(f"arrows: {[f'{a.name}: {a.source}->{a.target}' for a in algebra.quiver.arrows]}")
    print(f"dimension: {algebra.dimension}")
    print("cartan matrix (rows = target vertex):")
    for row in cartan_matrix(algebra).tolist():
        print(f"  {row}")
    for key, value in flags.to_dict().items():
        shown = "skipped (universe incomplete)" if value is None else value
        print(f"{key}: {shown}")
    return 0


def cmd_indecomposables(args) -> int:
    algebra = load_algebra(args.spec)
    universe = enumerate_indecomposables(algebra)
    if not universe.complete:
        raise UnsupportedRequest("complete enumeration needs a Nakayama algebra")
    print(f"{len(universe)} indecomposables:")
    for line in universe_lines(universe, args.cap):
        print("  " + line)
    return 0


def cmd_resolve(args) -> int:
    algebra = load_algebra(args.spec)
    m = resolve_module_name(algebra, args.module)
    kind = "injective" if args.injective else "projective"
    res = minimal_resolution(m, kind, args.cap)
    for line in format_resolution(res, args.module):
        print(line)
    if res.truncated:
        cap = args.cap if args.cap is not None else default_cap(algebra)
        print(f"{kind} dimension >= {cap} (truncated at cap)")
        raise UnsupportedRequest("resolution truncated at cap")
    print(f"{kind} dimension: {max(res.length, 0)}")
    return 0


def cmd_ext(args) -> int:
    algebra = load_algebra(args.spec)
    m = resolve_module_name(algebra, args.module)
    n = resolve_module_name(algebra, args.other)
    via_projective = ext_dim(m, n, args.degree, args.cap)
    via_injective = ext_dim_via_injective(m, n, args.degree, args.cap)
    if via_projective != via_injective:
        raise CheckFailed(
            f"route disagreement: projective route {via_projective}, injective route {via_injective}"
        )
    print(f"Ext^{args.degree}({args.module}, {args.other}) = {via_projective}")
    return 0


def cmd_approx(args) -> int:
    algebra = load_algebra(args.spec)
    m = resolve_module_name(algebra, args.module)
    cat = load_subcategory(algebra, args.cat, args.seed)
    f = minimal_approximation(cat, m, args.side, args.seed)
    parts = morphism_parts(f)
    if args.side == "right":
        kernel_name = _display_name(algebra, parts.kernel, args.seed)
        middle_name = _display_name(algebra, f.source, args.seed)
        epi = parts.image.dim == m.dim
        print(f"minimal right approximation of {args.module}:")
        if epi:
            print(f"  0 → {kernel_name} → {middle_name} → {args.module} → 0")
        else:
            print(f"  {middle_name} → {args.module}   (not surjective; kernel {kernel_name})")
    else:
        middle_name = _display_name(algebra, f.target, args.seed)
        coker_name = _display_name(algebra, parts.cokernel, args.seed)
        mono = parts.kernel.is_zero
        print(f"minimal left approximation of {args.module}:")
        if mono:
            print(f"  0 → {args.module} → {middle_name} → {coker_name} → 0")
        else:
            kernel_name = _display_name(algebra, parts.kernel, args.seed)
            print(f"  {args.module} → {middle_name}   (not injective; kernel {kernel_name})")
    return 0


def cmd_check(args) -> int:
    algebra = load_algebra(args.spec)
    if not args.max_orthogonal:
        raise AlgebraSpecError("nothing to check: pass --max-orthogonal")
    universe = enumerate_indecomposables(algebra)
    if not universe.complete:
        raise UnsupportedRequest("maximality verdicts need a complete (Nakayama) universe")
    cat = load_subcategory(algebra, args.cat, args.seed)
    ok, witness = is_maximal_orthogonal(cat, args.n, universe, args.cap, args.seed)
    if ok:
        print(f"maximal {args.n}-orthogonal: yes ({len(cat)} objects)")
        return 0
    print(f"maximal {args.n}-orthogonal: no")
    print(f"witness: {json.dumps(witness)}")
    raise CheckFailed("subcategory is not maximal orthogonal")


def cmd_verify(args) -> int:
    algebra = load_algebra(args.spec)
    report = run_all_checks(algebra, args.cap, args.seed, source_name=args.spec)
    flags = report.algebra["flags"]
    print(f"algebra: {args.spec} (dimension {report.algebra['dimension']}, F_{report.algebra['field']})")
    for key, value in flags.items():
        shown = "skipped (universe incomplete)" if value is None else value
        print(f"  {key}: {shown}")
    for check in report.checks:
        line = f"{check.check_id:<7} {check.status:<8} {check.details['title']}"
        print(line)
        if check.status == "skipped":
            print(f"        reason: {check.details.get('skipped_because', '')}")
        if check.status == "fail":
            print(f"        witness: {json.dumps(check.details.get('witness', {}))}")
    print(f"overall: {report.overall}")
    if args.json:
        FilePath(args.json).write_text(report.to_json())
        print(f"report written to {args.json}")
    if report.overall != "pass":
        raise CheckFailed("some check failed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverhom",
        description="Homological invariants of bound quiver algebras with monomial relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", help="TOML algebra spec file")
        p.add_argument("--cap", type=int, default=None, help="resolution length cap")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")

    p = sub.add_parser("info", help="dimensions, Cartan matrix, structure flags")
    common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("indecomposables", help="list all indecomposables (Nakayama only)")
    common(p)
    p.set_defaults(func=cmd_indecomposables)

    p = sub.add_parser("resolve", help="print a minimal resolution")
    common(p)
    p.add_argument("-m", "--module", required=True)
    p.add_argument("--injective", action="store_true", help="injective instead of projective")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("ext", help="Ext dimension through both routes")
    common(p)
    p.add_argument("-m", "--module", required=True)
    p.add_argument("-n", "--other", required=True)
    p.add_argument("-i", "--degree", type=int, required=True)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("approx", help="minimal subcategory approximation")
    common(p)
    p.add_argument("-m", "--module", required=True)
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("--cat", default="trivial", help='"trivial" or a file of module names')
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("check", help="maximal orthogonality verdict with witness")
    common(p)
    p.add_argument("--max-orthogonal", action="store_true")
    p.add_argument("--n", type=int, default=1, help="orthogonality degree")
    p.add_argument("--cat", default="trivial", help='"trivial" or a file of module names')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run the full check suite")
    common(p)
    p.add_argument("--json", default=None, help="also write the report as JSON")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except AlgebraSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedRequest, TruncationError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
