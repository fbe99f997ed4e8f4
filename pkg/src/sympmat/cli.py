"""Command-line front end.

One subcommand per user-facing computation: enumerate, orbits, representable,
witness, classify, betti, polytope, schubert.  Output is deterministic
(byte-identical across runs for the same inputs) in text, json, or csv form.
Exit codes: 0 success, 1 domain errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass, field

from .core import hyperoctahedral_group, pair_from_signed, pair_to_signed
from .errors import NotAMatroidError, SympmatError
from .matroid import (
    SymplecticMatroid,
    degree,
    enumerate_symplectic,
    is_representable,
    is_symplectic_matroid,
    orbits,
)
from .polytope import affine_dim, symplectic_polytope
from .strata import betti_numbers, classify, fixed_points, sp_schubert
from .witness import build_symplectic_witness, verify_certificate, witness_to_dict

MAX_ORDER_CHECK = 5  # unique-maximum validation enumerates 2^n n! orders


@dataclass
class JobConfig:
    command: str
    n: int
    bases: list | None = None
    fmt: str = "text"
    out: str | None = None
    deterministic: bool = True  # no seeds anywhere; outputs are reproducible
    extra: dict = field(default_factory=dict)


def _signed_pairs_from_args(args):
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict) or "n" not in data or "bases" not in data:
            raise ValueError('matroid files need the fields {"n": ..., "bases": ...}')
        if data["n"] != args.n:
            raise ValueError("the file's n does not match --n")
        return data["bases"]
    if getattr(args, "full", False):
        from .core import admissible_pairs

        return [pair_to_signed(pr, args.n) for pr in admissible_pairs(args.n)]
    if getattr(args, "bases", None):
        return json.loads(args.bases)
    raise ValueError("provide a matroid with --bases, --file, or --full")


def _load_symplectic(args):
    signed = _signed_pairs_from_args(args)
    if not isinstance(signed, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in signed
    ):
        raise ValueError("--bases must be a JSON list of signed pairs")
    pairs = [pair_from_signed(tuple(p), args.n) for p in signed]
    if args.n > MAX_ORDER_CHECK:
        raise SympmatError(
            f"the unique-maximum validation is limited to n <= {MAX_ORDER_CHECK}"
        )
    if not is_symplectic_matroid(pairs, args.n):
        raise NotAMatroidError("the given pairs fail the unique-maximum test")
    return SymplecticMatroid(args.n, pairs, check=False)


def _lifting_entry(M):
    return {"bags": M.signed_bags(), "degree": degree(M)}


def _cmd_enumerate(args):
    mats = enumerate_symplectic(args.n)
    hist = Counter(len(m.bases) for m in mats)
    sizes = sorted(hist)
    obj = {
        "n": args.n,
        "count": len(mats),
        "histogram": {str(k): hist[k] for k in sizes},
        "matroids": [m.signed_bases() for m in mats],
    }
    text = [f"{len(mats)} symplectic matroids for n={args.n}"]
    text.append(
        "histogram by basis count: "
        + ", ".join(f"{k} bases: {hist[k]}" for k in sizes)
    )
    for m in mats:
        text.append(json.dumps(m.signed_bases()))
    rows = [["index", "num_bases", "bases"]]
    rows += [
        [str(i), str(len(m.bases)), json.dumps(m.signed_bases())]
        for i, m in enumerate(mats)
    ]
    return obj, text, rows


def _cmd_orbits(args):
    mats = enumerate_symplectic(args.n)
    orbs = orbits(mats, hyperoctahedral_group(args.n))
    obj = {
        "n": args.n,
        "count": len(orbs),
        "orbits": [
            {
                "representative": o.representative.signed_bases(),
                "size": len(o.members),
                "members": [m.signed_bases() for m in o.members],
            }
            for o in orbs
        ],
    }
    text = [f"{len(orbs)} orbits of the {len(mats)} symplectic matroids (n={args.n})"]
    for k, o in enumerate(orbs):
        text.append(
            f"orbit {k}: size {len(o.members)}, representative "
            + json.dumps(o.representative.signed_bases())
        )
    rows = [["orbit", "size", "representative", "members"]]
    rows += [
        [
            str(k),
            str(len(o.members)),
            json.dumps(o.representative.signed_bases()),
            json.dumps([m.signed_bases() for m in o.members]),
        ]
        for k, o in enumerate(orbs)
    ]
    return obj, text, rows


def _cmd_representable(args):
    N = _load_symplectic(args)
    rep = is_representable(N)
    obj = {
        "n": args.n,
        "bases": N.signed_bases(),
        "representable": rep.representable,
        "trichotomy": rep.trichotomy.value if rep.trichotomy else None,
        "witness_lifting": _lifting_entry(rep.witness_lifting)
        if rep.witness_lifting
        else None,
        "max_lifting": _lifting_entry(rep.max_lifting) if rep.max_lifting else None,
        "normal_liftings": [_lifting_entry(M) for M in rep.normal_liftings],
        "liftings": [_lifting_entry(lf.matroid) for lf in rep.liftings],
        "multiple_max": rep.multiple_max,
    }
    verdict = "representable" if rep.representable else "not representable"
    text = [f"{verdict}: {json.dumps(N.signed_bases())}"]
    if rep.trichotomy:
        text.append(f"lifting trichotomy: {rep.trichotomy.value}")
    for lf in rep.liftings:
        text.append(
            f"lifting degree {lf.degree}: bags {json.dumps(lf.matroid.signed_bags())}"
        )
    return obj, text, None


def _cmd_witness(args):
    N = _load_symplectic(args)
    w = build_symplectic_witness(N)
    check = verify_certificate(w, N)
    if not check.ok:
        raise SympmatError(f"internal certificate failure: {check.reason}")
    obj = {
        "n": args.n,
        "bases": N.signed_bases(),
        "witness": witness_to_dict(w),
        "certificate": {"ok": True},
    }
    text = [f"witness for {json.dumps(N.signed_bases())}"]
    for row in w.matrix:
        text.append("[ " + "  ".join(str(x) for x in row) + " ]")
    text.append(f"diagonal minor sum: {obj['witness']['symplectic_sum']}")
    text.append("certificate: ok")
    return obj, text, None


def _stratum_row(s):
    return {
        "bases": s.matroid.signed_bases(),
        "orbit_representative": [
            pair_to_signed(pr, s.matroid.n) for pr in s.orbit_representative
        ],
        "trichotomy": s.trichotomy.value,
        "max_lifting": s.max_lifting.signed_bags(),
        "degree": s.degree,
        "weight": s.weight,
        "length": s.length,
        "dim_total": s.dims.total,
        "dim_fiber": s.dims.fiber,
        "dim_quotient": s.dims.quotient,
        "formula_case": s.dims.formula.case,
        "formula_value": s.dims.formula.value,
        "formula_flagged": s.dims.flagged,
        "formula_agrees": s.dims.agrees,
        "stab_ambient_dim": s.stabilizer_ambient.dim,
        "stab_dim": s.stabilizer_symplectic.dim,
        "stab_components": s.stabilizer_symplectic.components,
        "homology_class": s.homology_class,
        "multiple_max": s.multiple_max,
    }


def _cmd_classify(args):
    cls = classify(args.n)
    obj = {
        "n": args.n,
        "strata": [_stratum_row(s) for s in cls.strata],
    }
    if cls.types is not None:
        obj["types"] = [
            {
                "bases": t.matroid.signed_bases(),
                "kind": t.kind,
                "homology_class": t.homology_class,
                "dim": t.dim,
            }
            for t in cls.types
        ]
    text = [f"{len(cls.strata)} representable strata for n={args.n}"]
    for s in cls.strata:
        cls_label = f" class {s.homology_class}" if s.homology_class else ""
        flag = " [formula flagged]" if s.dims.flagged else ""
        text.append(
            f"{json.dumps(s.matroid.signed_bases())}: degree {s.degree}, "
            f"dims {s.dims.total}={s.dims.fiber}+{s.dims.quotient},"
            f"{cls_label}{flag}"
        )
    if cls.types is not None:
        text.append(f"{len(cls.types)} torus-invariant subvariety types")
        for t in cls.types:
            text.append(
                f"{t.kind} of {json.dumps(t.matroid.signed_bases())}: "
                f"class {t.homology_class}, dim {t.dim}"
            )
    header = sorted(_stratum_row(cls.strata[0])) if cls.strata else []
    rows = [header]
    for s in cls.strata:
        d = _stratum_row(s)
        rows.append([json.dumps(d[k]) if isinstance(d[k], list) else str(d[k]) for k in header])
    return obj, text, rows


def _cmd_betti(args):
    ranks = betti_numbers(args.n)
    obj = {
        "n": args.n,
        "betti": list(ranks),
        "total": sum(ranks),
        "fixed_points": len(fixed_points(args.n)),
    }
    text = [
        f"even homology ranks for n={args.n}: ("
        + ", ".join(map(str, ranks))
        + ")",
        f"total rank {sum(ranks)} = fixed points {obj['fixed_points']}",
    ]
    rows = [["complex_degree", "rank"]]
    rows += [[str(k), str(r)] for k, r in enumerate(ranks)]
    return obj, text, rows


def _cmd_polytope(args):
    N = _load_symplectic(args)
    P = symplectic_polytope(N)
    pts = P.sorted_points()
    obj = {
        "n": args.n,
        "bases": N.signed_bases(),
        "points": [list(p) for p in pts],
        "affine_dim": affine_dim(P),
    }
    text = [f"moment polytope of {json.dumps(N.signed_bases())}"]
    text += [json.dumps(list(p)) for p in pts]
    text.append(f"affine dimension: {obj['affine_dim']}")
    rows = [["point"]] + [[json.dumps(list(p))] for p in pts]
    return obj, text, rows


def _cmd_schubert(args):
    if args.pair:
        signed = json.loads(args.pair)
        pairs = [pair_from_signed(tuple(signed), args.n)]
    else:
        from .core import admissible_pairs

        pairs = list(admissible_pairs(args.n))
    cells = [sp_schubert(pr, args.n) for pr in pairs]
    obj = {
        "n": args.n,
        "cells": [
            {
                "pair": pair_to_signed(c.pair, args.n),
                "dim": c.dim,
                "vanishing": [pair_to_signed(v, args.n) for v in c.vanishing],
            }
            for c in cells
        ],
    }
    text = []
    for c in cells:
        text.append(
            f"pair {json.dumps(pair_to_signed(c.pair, args.n))}: dim {c.dim}, "
            f"{len(c.vanishing)} vanishing coordinates"
        )
    rows = [["pair", "dim", "vanishing"]]
    rows += [
        [
            json.dumps(pair_to_signed(c.pair, args.n)),
            str(c.dim),
            json.dumps([pair_to_signed(v, args.n) for v in c.vanishing]),
        ]
        for c in cells
    ]
    return obj, text, rows


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "orbits": _cmd_orbits,
    "representable": _cmd_representable,
    "witness": _cmd_witness,
    "classify": _cmd_classify,
    "betti": _cmd_betti,
    "polytope": _cmd_polytope,
    "schubert": _cmd_schubert,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sympmat",
        description="rank-2 symplectic matroids: enumeration, representability "
        "certificates, and torus-orbit bookkeeping",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matroid_input=False):
        p.add_argument("--n", type=int, required=True, help="number of label pairs")
        p.add_argument(
            "--format",
            dest="fmt",
            choices=("text", "json", "csv"),
            default="text",
        )
        p.add_argument("--out", default=None, help="write the report to this path")
        if matroid_input:
            p.add_argument("--bases", default=None, help="JSON list of signed pairs")
            p.add_argument("--file", default=None, help="JSON matroid file")
            p.add_argument(
                "--full", action="store_true", help="use every admissible pair"
            )

    common(sub.add_parser("enumerate", help="list all symplectic matroids"))
    common(sub.add_parser("orbits", help="orbit decomposition of the matroids"))
    common(
        sub.add_parser("representable", help="representability report"),
        matroid_input=True,
    )
    common(
        sub.add_parser("witness", help="build and verify an exact witness"),
        matroid_input=True,
    )
    common(sub.add_parser("classify", help="stratum reports with dimensions"))
    common(sub.add_parser("betti", help="even homology ranks"))
    common(
        sub.add_parser("polytope", help="moment polytope lattice points"),
        matroid_input=True,
    )
    schubert = sub.add_parser("schubert", help="Schubert cell dimensions")
    common(schubert)
    schubert.add_argument("--pair", default=None, help="one signed pair as JSON")
    return parser


def _render(obj, text, rows, fmt, command):
    if fmt == "json":
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        if rows is None:
            raise ValueError(f"csv output is not available for '{command}'")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return "\n".join(text) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        obj, text, rows = _HANDLERS[args.command](args)
        rendered = _render(obj, text, rows, args.fmt, args.command)
    except SympmatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0


if __name__ == "__main__":
    sys.exit(main())
