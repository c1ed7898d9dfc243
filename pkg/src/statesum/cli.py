"""Command-line interface.

Commands: ``algebra check``, ``frobenius show``, ``knowledgeable``, ``eval``,
``surface``, ``fuzz``, ``catalog``.  All commands accept ``--json`` for
machine-readable output (human-readable tables otherwise).

Exit codes: 0 success; 1 input or validation error (malformed files,
non-algebras, invalid complexes); 2 mathematical precondition violation
(degenerate pairing, algebra not strongly separable, ...), so shell-level
tests can tell a bad file from a bad algebra.
"""

from __future__ import annotations

import argparse
import sys

from . import io as sio
from .algebra import Algebra
from .catalog import (
    GroupTable,
    genus_window_scalar,
    surface_invariant_closed_form,
)
from .cobordisms import BUILTIN_NAMES, builtin, closed_surface
from .complexes import random_moves
from .errors import (
    InvalidInput,
    MathPrecondition,
    NotApplicableError,
    StateSumError,
    UnknownCatalogError,
)
from .evaluation import evaluate_closed, state_sum, state_sum_raw, state_sum_reduced
from .fields import Field
from .frobenius import check_knowledgeable
from .morphism import Morphism


def _print(doc, as_json: bool, human_lines):
    if as_json:
        sys.stdout.write(sio.dumps(doc))
    else:
        for line in human_lines:
            print(line)


def _matrix_json(field, m):
    return [[field.format(x) for x in row] for row in m.data]


def _morphism_json(z: Morphism):
    return {
        "domain": [{"kind": f.kind, "dim": f.dim} for f in z.domain],
        "codomain": [{"kind": f.kind, "dim": f.dim} for f in z.codomain],
        "matrix": _matrix_json(z.field, z.matrix),
    }


def _load_algebra(path, need_frobenius=True):
    with open(path, "r", encoding="utf-8") as fh:
        doc = sio.loads(fh.read())
    alg, F, blocks = sio.algebra_from_json(doc)
    if need_frobenius and F is None:
        raise InvalidInput("algebra file declares no frobenius structure")
    return alg, F, blocks


def _load_complex(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = sio.loads(fh.read())
    c = sio.complex_from_json(doc)
    c.require_valid()
    return c


def _parse_field(spec: str) -> Field:
    if spec in ("rational", "q", "Q"):
        return Field()
    if spec.startswith("prime:"):
        return Field(int(spec.split(":", 1)[1]))
    if spec.isdigit():
        return Field(int(spec))
    raise UnknownCatalogError(f"unknown field spec {spec!r} (use 'rational' or a prime)")


# -- commands ------------------------------------------------------------------


def cmd_algebra_check(args) -> int:
    alg, F, blocks = _load_algebra(args.file, need_frobenius=False)
    field = alg.field
    info = {
        "dim": alg.dim,
        "centre_dim": len(alg.centre_basis()),
        "strongly_separable": alg.is_strongly_separable(),
    }
    if F is not None:
        info["window"] = [field.format(x) for x in F.window.coeffs]
        info["window_inverse"] = [field.format(x) for x in F.window_inverse.coeffs]
        info["special"] = F.is_special()
    _print(info, args.json, [f"{k}: {v}" for k, v in info.items()])
    return 0


def cmd_frobenius_show(args) -> int:
    alg, F, _ = _load_algebra(args.file)
    f = alg.field
    doc = {
        "counit": [f.format(x) for x in F.counit],
        "pairing": _matrix_json(f, F.pairing),
        "pairing_inverse": _matrix_json(f, F.pairing_inverse),
        "window": [f.format(x) for x in F.window.coeffs],
        "window_inverse": [f.format(x) for x in F.window_inverse.coeffs],
        "special": F.is_special(),
    }
    human = [
        f"counit: {doc['counit']}",
        f"pairing: {doc['pairing']}",
        f"window: {doc['window']}",
        f"window inverse: {doc['window_inverse']}",
        f"special: {doc['special']}",
    ]
    _print(doc, args.json, human)
    return 0


def cmd_knowledgeable(args) -> int:
    alg, F, _ = _load_algebra(args.file)
    f = alg.field
    K = F.knowledgeable()
    report = check_knowledgeable(K)
    doc = {
        "closed_dim": K.C.dim,
        "closed_basis_in_ambient": _matrix_json(f, K.iota),
        "iota": _matrix_json(f, K.iota),
        "iota_star": _matrix_json(f, K.iota_star),
        "mu_C": _matrix_json(f, K.C.mu_matrix()),
        "delta_C": _matrix_json(f, K.C.delta_matrix()),
        "eps_C": [f.format(x) for x in K.C.counit],
        "axioms": [{"axiom": name, "ok": ok} for (name, ok, _) in report],
    }
    human = [f"closed space dimension: {K.C.dim}",
             f"iota columns (C basis in A coordinates): {doc['iota']}",
             f"iota_star: {doc['iota_star']}",
             f"mu_C: {doc['mu_C']}",
             f"delta_C: {doc['delta_C']}",
             f"eps_C: {doc['eps_C']}"]
    human += [f"axiom {r['axiom']}: {'pass' if r['ok'] else 'FAIL'}" for r in doc["axioms"]]
    _print(doc, args.json, human)
    return 0 if all(r["ok"] for r in doc["axioms"]) else 2


def cmd_eval(args) -> int:
    alg, F, _ = _load_algebra(args.algebra)
    c = _load_complex(args.complex)
    fn = {"raw": state_sum_raw, "reduced": state_sum_reduced, "full": state_sum}[args.mode]
    z = fn(F, c)
    doc = _morphism_json(z)
    human = [f"domain: {list(z.domain)}", f"codomain: {list(z.codomain)}"]
    human += [" ".join(row) for row in doc["matrix"]]
    _print(doc, args.json, human)
    return 0


def cmd_surface(args) -> int:
    alg, F, blocks = _load_algebra(args.algebra)
    f = alg.field
    surf = closed_surface(args.genus, args.windows)
    contracted = evaluate_closed(F, surf)
    operator = genus_window_scalar(F.knowledgeable(), args.genus, args.windows)
    doc = {
        "genus": args.genus,
        "windows": args.windows,
        "contracted": f.format(contracted),
        "genus_window_operator": f.format(operator),
    }
    match = contracted == operator
    if blocks is not None:
        closed = surface_invariant_closed_form(
            blocks["sizes"], blocks["windows"], args.genus, args.windows, f
        )
        doc["closed_form"] = f.format(closed)
        match = match and closed == contracted
    elif args.oracle:
        doc["closed_form"] = None  # no block data in the algebra file
    doc["match"] = match
    human = [f"{k}: {v}" for k, v in doc.items()]
    _print(doc, args.json, human)
    return 0 if match else 2


def cmd_fuzz(args) -> int:
    alg, F, _ = _load_algebra(args.algebra)
    c = _load_complex(args.complex)
    if args.corrupt:
        # negative-control hook: tamper with the trilinear form so move
        # invariance must fail
        g3 = dict(F.trilinear())
        key = next(iter(sorted(g3)))
        g3[key] = F.field.add(g3[key], F.field.one())
        F._cache["g3"] = g3
    base = state_sum_raw(F, c)
    verdicts = []
    ok_all = True
    for trial in range(args.trials):
        moved = random_moves(c, seed=args.seed + trial, n=args.moves)
        z = state_sum_raw(F, moved)
        ok = z.equal(base)
        ok_all = ok_all and ok
        verdicts.append({"trial": trial, "equal": ok,
                         "vertices": moved.vertex_count,
                         "triangles": len(moved.triangles)})
    doc = {"trials": verdicts, "all_equal": ok_all}
    human = [f"trial {v['trial']}: {'equal' if v['equal'] else 'MISMATCH'} "
             f"(V={v['vertices']}, F={v['triangles']})" for v in verdicts]
    human.append(f"all equal: {ok_all}")
    _print(doc, args.json, human)
    return 0 if ok_all else 1


def _catalog_algebra_doc(name: str, params):
    if name == "matsum":
        sizes = [int(x) for x in params[0].split(",")]
        windows = [int(x) for x in params[1].split(",")]
        field = _parse_field(params[2] if len(params) > 2 else "rational")
        if len(sizes) != len(windows):
            raise UnknownCatalogError("matsum needs equally many sizes and windows")
        # build the bare algebra directly so files for non-strongly-separable
        # cases (checked with exit 2) can still be written
        offsets = []
        off = 0
        for m in sizes:
            offsets.append(off)
            off += m * m
        dim = off
        entries = []
        names = [None] * dim

        def idx(j, r, cc):
            return offsets[j] + r * sizes[j] + cc

        for j, m in enumerate(sizes):
            for r in range(m):
                for cc in range(m):
                    names[idx(j, r, cc)] = f"e{j}_{r}{cc}"
            for r in range(m):
                for s in range(m):
                    for t in range(m):
                        entries.append((idx(j, r, s), idx(j, s, t), idx(j, r, t), field.one()))
        unit = [field.zero()] * dim
        window = [field.zero()] * dim
        for j, m in enumerate(sizes):
            for r in range(m):
                unit[idx(j, r, r)] = field.one()
                window[idx(j, r, r)] = field.of_int(windows[j])
        alg = Algebra(field, dim, entries, unit, basis_names=names)
        return sio.algebra_to_json(
            alg,
            frobenius={"window": [field.format(x) for x in window]},
            blocks={"sizes": sizes, "windows": windows},
        )
    if name == "group":
        kind = params[0]
        n = int(params[1])
        field = _parse_field(params[2] if len(params) > 2 else "rational")
        group = GroupTable.cyclic(n) if kind == "cyclic" else GroupTable.symmetric(n)
        entries = [(i, j, group.table[i][j], field.one())
                   for i in range(group.order) for j in range(group.order)]
        unit = [field.one() if i == group.identity else field.zero()
                for i in range(group.order)]
        alg = Algebra(field, group.order, entries, unit, basis_names=group.names)
        eps = [field.format(field.one() if i == group.identity else field.zero())
               for i in range(group.order)]
        return sio.algebra_to_json(alg, frobenius={"counit": eps})
    raise UnknownCatalogError(f"unknown catalog algebra {name!r} (matsum, group)")


def cmd_catalog(args) -> int:
    kind = args.kind
    if kind == "algebra":
        doc = _catalog_algebra_doc(args.name, args.params)
    elif kind == "complex":
        if args.name not in BUILTIN_NAMES:
            raise UnknownCatalogError(f"unknown builtin complex {args.name!r}")
        c = builtin(args.name, *[int(x) for x in args.params])
        doc = sio.complex_to_json(c)
    else:
        raise UnknownCatalogError(f"unknown catalog kind {kind!r}")
    text = sio.dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# -- dispatch ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="statesum",
                                 description="Exact state sums on triangulated open-closed cobordisms")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="inspect an algebra file")
    asub = p.add_subparsers(dest="subcommand", required=True)
    pc = asub.add_parser("check", help="validate and summarise an algebra file")
    pc.add_argument("file")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(fn=cmd_algebra_check)

    p = sub.add_parser("frobenius", help="inspect a frobenius structure")
    fsub = p.add_subparsers(dest="subcommand", required=True)
    pf = fsub.add_parser("show", help="print the derived structure data")
    pf.add_argument("file")
    pf.add_argument("--json", action="store_true")
    pf.set_defaults(fn=cmd_frobenius_show)

    pk = sub.add_parser("knowledgeable", help="split the canonical idempotent and report the axioms")
    pk.add_argument("file")
    pk.add_argument("--json", action="store_true")
    pk.set_defaults(fn=cmd_knowledgeable)

    pe = sub.add_parser("eval", help="evaluate the state sum of a complex")
    pe.add_argument("--algebra", required=True)
    pe.add_argument("--complex", required=True)
    pe.add_argument("--mode", choices=("raw", "reduced", "full"), default="full")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(fn=cmd_eval)

    ps = sub.add_parser("surface", help="closed-surface invariant and its oracles")
    ps.add_argument("--algebra", required=True)
    ps.add_argument("--genus", type=int, required=True)
    ps.add_argument("--windows", type=int, default=0)
    ps.add_argument("--oracle", action="store_true",
                    help="also evaluate the block closed form when block data is present")
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(fn=cmd_surface)

    pz = sub.add_parser("fuzz", help="random-move invariance check")
    pz.add_argument("--algebra", required=True)
    pz.add_argument("--complex", required=True)
    pz.add_argument("--moves", type=int, default=30)
    pz.add_argument("--trials", type=int, default=20)
    pz.add_argument("--seed", type=int, default=0)
    pz.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    pz.add_argument("--json", action="store_true")
    pz.set_defaults(fn=cmd_fuzz)

    pcat = sub.add_parser("catalog", help="write builtin algebra/complex files")
    pcat.add_argument("kind", choices=("algebra", "complex"))
    pcat.add_argument("name")
    pcat.add_argument("params", nargs="*")
    pcat.add_argument("-o", "--output")
    pcat.set_defaults(fn=cmd_catalog)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except MathPrecondition as exc:
        sys.stdout.write(sio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 2
    except (InvalidInput, NotApplicableError, OSError) as exc:
        sys.stdout.write(sio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1
    except StateSumError as exc:
        sys.stdout.write(sio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
