"""Command line driver: corpus catalog, regression suites, spectra and morphism extension."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .corpus import MAX_POINTS, corpus_frames
from .errors import PointfreeError
from .filters import filter_to_json
from .frames import CofiniteFrame, FiniteFrame
from .order import FiniteLattice, boolean_lattice, chain, downset_lattice, dump_lattice, parse_poset_text, poset_to_text
from .raney import (
    Extension, FrameMap, Named, RaneyExt, classifier_map, extend_morphism, identity_map, spectrum,
    unique_extension,
)
from .spaces import COFINITE_NAT, COFINITE_NAT_PLUS_GENERIC, FiniteSpace, SymbolicSpace, omega_r, parse_space_text
from .suites import SCHEMA, SUITES, Params, run_all, run_frame, run_space, run_suite

CORPUS_SCHEMA = "raney-corpus/1"
SYMBOLIC = {"CofiniteNat": COFINITE_NAT, "CofiniteNatPlusGeneric": COFINITE_NAT_PLUS_GENERIC}
TARGET_HELP = (
    "CofiniteNat, CofiniteNatPlusGeneric, chain:N, boolean:K, poset:PATH, space:PATH, "
    "a lattice or extension JSON file, or a corpus entry such as P3"
)


class UsageError(PointfreeError):
    pass


# target descriptors


def resolve(desc: str, window: int):
    """Turn a target descriptor into a symbolic space, finite space, finite lattice or extension."""
    if desc in SYMBOLIC:
        return SYMBOLIC[desc]
    kind, _, arg = desc.partition(":")
    if kind == "chain" and arg:
        return chain(int(arg))
    if kind == "boolean" and arg:
        return boolean_lattice(int(arg))
    if kind == "poset" and arg:
        return downset_lattice(parse_poset_text(Path(arg).read_text()))
    if kind == "space" and arg:
        return parse_space_text(Path(arg).read_text())
    if desc.endswith(".json") and Path(desc).exists():
        data = json.loads(Path(desc).read_text())
        if "cstar" in data:
            return RaneyExt.from_json(data)
        return FiniteLattice.from_json(data)
    raise UsageError(f"cannot resolve target {desc!r}; expected {TARGET_HELP}")


def frame_of(obj, window: int):
    if isinstance(obj, SymbolicSpace):
        return obj.frame(window)
    if isinstance(obj, FiniteSpace):
        return obj.omega_frame()[0]
    if isinstance(obj, FiniteLattice):
        return FiniteFrame(obj)
    if isinstance(obj, RaneyExt):
        return obj.frame
    raise UsageError(f"{obj!r} does not determine a frame")


def extension_of(desc: str, window: int) -> RaneyExt:
    """``TARGET`` or ``TARGET@CLASS``.  Without a class, spaces give Ω_R(X) and frames the full filter class."""
    base, _, cls = desc.partition("@")
    obj = resolve(base, window)
    if isinstance(obj, RaneyExt):
        if cls:
            return RaneyExt(obj.frame, Named(cls))
        return obj
    if cls:
        return RaneyExt(frame_of(obj, window), Named(cls))
    if isinstance(obj, (SymbolicSpace, FiniteSpace)):
        return omega_r(obj, window)
    return unique_extension(FiniteFrame(obj))


# output


def emit(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out == "-":
        sys.stdout.write(text)
    elif out:
        Path(out).write_text(text, encoding="utf-8")


def exit_code(summary: dict, strict_unknown: bool) -> int:
    if summary.get("fail"):
        return 1
    if strict_unknown and summary.get("unknown"):
        return 2
    return 0


def print_report(rep: dict, verbose: bool) -> None:
    for entry in rep["targets"]:
        statuses = [c["status"] for c in entry["checks"]]
        bad = [c for c in entry["checks"] if c["status"] in ("fail", "unknown")]
        if verbose or bad:
            counts = ", ".join(f"{statuses.count(s)} {s}" for s in dict.fromkeys(statuses))
            print(f"  {entry['target']}: {counts}")
        for c in entry["checks"] if verbose else bad:
            line = f"    [{c['status']}] {c['law']}"
            if "witness" in c:
                line += f"  (witness: {c['witness']})"
            if "detail" in c:
                line += f"  [{c['detail']}]"
            print(line)
    s = rep["summary"]
    print(f"{rep['suite']}: {len(rep['targets'])} targets, " + ", ".join(f"{v} {k}" for k, v in s.items()))


# commands


def cmd_catalog(args) -> int:
    if args.max_points > MAX_POINTS:
        raise UsageError(f"--max-points is at most {MAX_POINTS}")
    root = Path(args.corpus)
    for sub in ("posets", "frames", "spaces"):
        (root / sub).mkdir(parents=True, exist_ok=True)
    entries = []
    for c in corpus_frames(args.max_points):
        stem = f"P{c.index}"
        (root / "posets" / f"{stem}.txt").write_text(poset_to_text(c.poset))
        (root / "frames" / f"{stem}.json").write_text(dump_lattice(c.lattice) + "\n")
        (root / "spaces" / f"{stem}.txt").write_text(FiniteSpace.alexandrov(c.poset).to_text())
        entries.append({
            "index": c.index,
            "name": c.name,
            "points": c.poset.n,
            "frame_size": c.lattice.n,
            "distributive": c.lattice.distributive,
            "boolean": c.lattice.is_boolean(),
        })
    by_size = {}
    for e in entries:
        by_size[e["points"]] = by_size.get(e["points"], 0) + 1
    manifest = {
        "schema": CORPUS_SCHEMA,
        "max_points": args.max_points,
        "posets_by_size": {str(k): v for k, v in sorted(by_size.items())},
        "entries": entries,
    }
    emit(manifest, str(root / "manifest.json"))
    if args.json:
        emit(manifest, args.json)
    for k, v in sorted(by_size.items()):
        print(f"{k} points: {v} posets up to isomorphism")
    print(f"wrote {len(entries)} posets, frames and Alexandrov spaces to {root}")
    return 0


def _params(args) -> Params:
    return Params(max_points=args.max_points, window=args.window, subloc_cap=args.subloc_cap)


def _check_corpus(args) -> None:
    """When a catalog directory is given, its manifest must match the corpus being regenerated."""
    manifest = Path(args.corpus) / "manifest.json"
    if not manifest.exists():
        raise UsageError(f"{manifest} not found; run the catalog command first")
    data = json.loads(manifest.read_text())
    args.max_points = data["max_points"]
    names = [e["name"] for e in data["entries"]]
    if names != [c.name for c in corpus_frames(args.max_points)]:
        raise UsageError(f"{manifest} does not match the generated corpus")


def _targeted_report(suite: str, target: str, params: Params) -> dict:
    if suite == "fixtures" or (suite == "duality" and ":" not in target and not target.endswith(".json")):
        rep = run_suite(suite, params, target=target)
    elif target.startswith("P") and ":" not in target:
        rep = run_suite(suite, params, target=target)
    else:
        obj = resolve(target, params.window)
        if suite == "duality":
            if isinstance(obj, FiniteLattice):
                raise UsageError("the duality suite needs a space:PATH target")
            return run_space(obj, target, params)
        if isinstance(obj, RaneyExt):
            obj = obj.frame.lattice if isinstance(obj.frame, FiniteFrame) else None
        if not isinstance(obj, FiniteLattice):
            raise UsageError(f"suite {suite!r} needs a finite frame target")
        return run_frame(suite, obj, target, params)
    if not rep["targets"]:
        raise UsageError(f"no target named {target!r} in suite {suite!r}")
    return rep


def cmd_verify(args) -> int:
    if args.corpus:
        _check_corpus(args)
    params = _params(args)
    start = time.perf_counter()
    if args.suite == "all":
        if args.target:
            raise UsageError("a target needs a single suite")
        rep = run_all(params, jobs=args.jobs)
        for r in rep["reports"]:
            print_report(r, args.verbose)
    else:
        if args.target:
            rep = _targeted_report(args.suite, args.target, params)
        else:
            rep = run_suite(args.suite, params, jobs=args.jobs)
        print_report(rep, args.verbose)
    # wall time stays out of the JSON so reports are reproducible byte for byte
    print(f"elapsed {time.perf_counter() - start:.1f}s")
    emit(rep, args.json)
    return exit_code(rep["summary"], args.strict_unknown)


def cmd_spectrum(args) -> int:
    obj = resolve(args.target, args.window)
    if args.cls == "omega":
        if not isinstance(obj, (SymbolicSpace, FiniteSpace)):
            raise UsageError("the omega class needs a space target")
        RE = omega_r(obj, args.window)
    elif isinstance(obj, RaneyExt) and args.cls == "given":
        RE = obj
    else:
        RE = RaneyExt(frame_of(obj, args.window), Named(args.cls))
    sp = spectrum(RE)
    listing = ", ".join(sp.labels)
    print(f"{len(sp.points)} points{'' if sp.complete else ' in the window'}: {listing}")
    if sp.tail:
        print(f"beyond the window: {sp.tail}")
    out = {"schema": SCHEMA, "command": "spectrum", "target": args.target, "class": args.cls}
    out.update(sp.to_json(RE.frame))
    emit(out, args.json)
    return 0


def _load_map(descriptor: str, src: RaneyExt, tgt: RaneyExt) -> FrameMap:
    if descriptor == "identity":
        if src.frame != tgt.frame:
            raise UsageError("identity needs the same frame on both sides")
        return identity_map(src.frame)
    if descriptor == "classifier":
        if not isinstance(src.frame, CofiniteFrame) or not (isinstance(tgt.frame, FiniteFrame) and tgt.frame.n == 2):
            raise UsageError("the classifier runs from a cofinite frame to chain:2")
        return classifier_map(src.frame, tgt.frame)
    path = Path(descriptor)
    if not path.exists():
        raise UsageError(f"map {descriptor!r} is not identity, classifier or a JSON file")
    return FrameMap.from_json(json.loads(path.read_text()), src.frame, tgt.frame)


def cmd_extend(args) -> int:
    src = extension_of(args.src, args.window)
    tgt = extension_of(args.tgt, args.window)
    f = _load_map(args.map, src, tgt)
    result = extend_morphism(f, src, tgt)
    out = {"schema": SCHEMA, "command": "extend", "map": f.to_json(), "source": args.src, "target": args.tgt}
    if isinstance(result, Extension):
        checks = [c.to_json() for c in result.checks]
        out.update(result="extension", checks=checks, mapping=[
            {"from": filter_to_json(src.frame, a), "to": filter_to_json(tgt.frame, b)} for a, b in result.mapping
        ])
        print(f"extension of {f.name} over {len(result.mapping)} class members")
        for c in checks:
            print(f"  [{c['status']}] {c['law']}" + (f"  (witness: {c['witness']})" if "witness" in c else ""))
        code = exit_code({"fail": sum(c["status"] == "fail" for c in checks)}, False)
    else:
        out.update(
            result="refusal",
            witness=filter_to_json(src.frame, result.preimage),
            target_filter=filter_to_json(tgt.frame, result.target_filter),
            reason=result.text,
        )
        print(f"refused: {result.text}")
        code = 0
    emit(out, args.json)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointfree", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="write posets, downset frames and Alexandrov spaces to a directory")
    cat.add_argument("--max-points", type=int, default=5)
    cat.add_argument("--corpus", default="corpus", help="output directory (default: corpus)")
    cat.add_argument("--json", help="also write the manifest here ('-' for stdout)")
    cat.set_defaults(func=cmd_catalog)

    ver = sub.add_parser("verify", help="run a regression suite")
    ver.add_argument("suite", choices=SUITES + ("all",))
    ver.add_argument("target", nargs="?", help=TARGET_HELP)
    ver.add_argument("--corpus", help="catalog directory whose manifest fixes the corpus")
    ver.add_argument("--max-points", type=int, default=5)
    ver.add_argument("--window", type=int, default=16)
    ver.add_argument("--subloc-cap", type=int, default=12)
    ver.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    ver.add_argument("--strict-unknown", action="store_true", help="exit 2 when a check is unknown")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes for corpus items")
    ver.add_argument("-v", "--verbose", action="store_true", help="print every check")
    ver.set_defaults(func=cmd_verify)

    spc = sub.add_parser("spectrum", help="list the points of an extension")
    spc.add_argument("target", help=TARGET_HELP)
    spc.add_argument("cls", metavar="class", help="E, SE, R, CP, SO, ICP, ISO, omega (spaces) or given (extension JSON)")
    spc.add_argument("--window", type=int, default=16)
    spc.add_argument("--json")
    spc.set_defaults(func=cmd_spectrum)

    ext = sub.add_parser("extend", help="extend a frame map along two extensions")
    ext.add_argument("map", help="identity, classifier or a map JSON file")
    ext.add_argument("src", help="TARGET or TARGET@CLASS")
    ext.add_argument("tgt", help="TARGET or TARGET@CLASS")
    ext.add_argument("--window", type=int, default=16)
    ext.add_argument("--json")
    ext.set_defaults(func=cmd_extend)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PointfreeError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
