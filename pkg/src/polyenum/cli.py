"""File-driven front end.

Reads a JSON instance document, streams one record per solution to stdout
in traversal order, and keeps diagnostics, statistics and verification
chatter on stderr.  Exit codes: 0 on success, 1 when a brute-force
cross-check disagrees, 2 for unusable input or flags.

Document format (all ids are integers starting at 1)::

    {
      "elements": 3,
      "items": 2,
      "sigma": [[1], [1, 2], [2]],
      "system": {"kind": "graph", "edges": [[1, 2], [2, 3]]}
    }

``system.kind`` is either ``"graph"`` (with ``"edges"``) or ``"explicit"``
(with ``"components"``, a list of element-id lists).  In ``--components``
mode only ``elements`` and ``system`` are read; a ``sigma`` key, if
present, is ignored with a warning.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from . import testkit
from .components import build_reduction
from .core import ContractError, Instance, OracleStats, SizeAbove
from .enumerator import Solution, enumerate_all, enumerate_k
from .oracles import ExplicitFamilyOracle, GraphConnectivityOracle


class InstanceFormatError(ValueError):
    """An instance document failed validation; message names the field."""


def _load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InstanceFormatError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"{path}: top level must be an object")
    return doc


def _require_count(doc: dict, key: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InstanceFormatError(f"{key}: expected a positive integer")
    return value


def _int_list(raw, where: str, low: int, high: int) -> List[int]:
    if not isinstance(raw, list):
        raise InstanceFormatError(f"{where}: expected a list of integers")
    out = []
    for x in raw:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InstanceFormatError(f"{where}: expected integers, got {x!r}")
        if not low <= x <= high:
            raise InstanceFormatError(f"{where}: id {x} outside [{low}, {high}]")
        out.append(x)
    return out


def _build_oracle(doc: dict, n: int):
    system = doc.get("system")
    if not isinstance(system, dict):
        raise InstanceFormatError("system: expected an object")
    kind = system.get("kind")
    if kind == "graph":
        raw_edges = system.get("edges")
        if not isinstance(raw_edges, list):
            raise InstanceFormatError("system.edges: expected a list of [u, v] pairs")
        edges = []
        seen = set()
        for idx, pair in enumerate(raw_edges):
            got = _int_list(pair, f"system.edges[{idx}]", 1, n)
            if len(got) != 2:
                raise InstanceFormatError(
                    f"system.edges[{idx}]: expected exactly two endpoints"
                )
            u, v = got
            if u == v:
                raise InstanceFormatError(f"system.edges[{idx}]: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceFormatError(f"system.edges[{idx}]: duplicate edge {key}")
            seen.add(key)
            edges.append((u, v))
        return GraphConnectivityOracle(n, edges)
    if kind == "explicit":
        raw_family = system.get("components")
        if not isinstance(raw_family, list):
            raise InstanceFormatError(
                "system.components: expected a list of element-id lists"
            )
        family = []
        seen_members = set()
        for idx, raw in enumerate(raw_family):
            ids = _int_list(raw, f"system.components[{idx}]", 1, n)
            if not ids:
                raise InstanceFormatError(f"system.components[{idx}]: empty component")
            if len(set(ids)) != len(ids):
                raise InstanceFormatError(
                    f"system.components[{idx}]: repeated element id"
                )
            key = frozenset(ids)
            if key in seen_members:
                raise InstanceFormatError(
                    f"system.components[{idx}]: duplicate component {sorted(ids)}"
                )
            seen_members.add(key)
            family.append(ids)
        return ExplicitFamilyOracle(n, family)
    raise InstanceFormatError(f"system.kind: expected 'graph' or 'explicit', got {kind!r}")


def parse_instance(path: str) -> Instance:
    """Parse and validate a full instance document."""
    doc = _load_document(path)
    n = _require_count(doc, "elements")
    q = _require_count(doc, "items")
    raw_sigma = doc.get("sigma")
    if not isinstance(raw_sigma, list):
        raise InstanceFormatError("sigma: expected a list of item-id lists")
    if len(raw_sigma) != n:
        raise InstanceFormatError(f"sigma: expected {n} rows, got {len(raw_sigma)}")
    sigma = []
    for idx, row in enumerate(raw_sigma):
        ids = _int_list(row, f"sigma[{idx}]", 1, q)
        if len(set(ids)) != len(ids):
            raise InstanceFormatError(f"sigma[{idx}]: repeated item id")
        sigma.append(ids)
    return Instance(n, q, sigma, _build_oracle(doc, n))


def build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="polyenum",
        description="Enumerate solutions (components with inclusion-maximal "
        "common item sets) or all components of a set system instance.",
    )
    p.add_argument("--input", required=True, help="instance document (JSON)")
    p.add_argument(
        "--k",
        type=int,
        default=None,
        help="only the group with this minimum common item (default: all groups)",
    )
    p.add_argument(
        "--min-size",
        type=int,
        default=0,
        metavar="P",
        help="keep only solutions with more than P elements (default 0)",
    )
    p.add_argument(
        "--components",
        action="store_true",
        help="enumerate every component of the system instead of solutions; "
        "sigma in the input is ignored",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="cross-check the output against brute force (small instances only); "
        "exits 1 on mismatch",
    )
    p.add_argument(
        "--stats",
        action="store_true",
        help="print oracle and traversal counters to stderr",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _text_record(s: Solution) -> str:
    elems = " ".join(str(v) for v in s.elements)
    items = " ".join(str(i) for i in s.items) or "-"
    return f"{elems}\t{items}"


def _json_record(s: Solution) -> str:
    return json.dumps({"elements": list(s.elements), "items": list(s.items), "k": s.k})


def _verify(inst: Instance, emitted: List[Solution], args, err: TextIO) -> bool:
    if args.components:
        expected_sets = testkit.materialize_components(inst.oracle, inst.n)
    else:
        expected_sets = [s.elements for s in testkit.brute_force_solutions(inst)]
    rho = SizeAbove(args.min_size)
    expected = set()
    for c in expected_sets:
        if not rho.positive(c):
            continue
        if args.k is not None and inst.common_item_set(c).min_id() != args.k:
            continue
        expected.add(c)
    got = [s.elements for s in emitted]
    ok = True
    if len(got) != len(set(got)):
        print("verify: MISMATCH: duplicate records in the output", file=err)
        ok = False
    missing = expected - set(got)
    unexpected = set(got) - expected
    if missing:
        print(f"verify: MISMATCH: {len(missing)} expected solutions never emitted", file=err)
        ok = False
    if unexpected:
        print(f"verify: MISMATCH: {len(unexpected)} emitted sets are not expected", file=err)
        ok = False
    if ok:
        print(f"verify: ok ({len(got)} records)", file=err)
    return ok


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.components:
            doc = _load_document(args.input)
            n = _require_count(doc, "elements")
            if "sigma" in doc:
                print(
                    "warning: sigma in the input is ignored in --components mode",
                    file=err,
                )
            inst = build_reduction(n, _build_oracle(doc, n))
        else:
            inst = parse_instance(args.input)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: {args.input}: {exc}", file=err)
        return 2

    if args.k is not None and not 0 <= args.k <= inst.q:
        print(f"error: --k {args.k} outside [0, {inst.q}]", file=err)
        return 2
    if args.min_size < 0:
        print("error: --min-size must be non-negative", file=err)
        return 2

    render = _json_record if args.format == "json" else _text_record
    emitted: List[Solution] = []
    keep = args.verify

    def sink(s: Solution) -> None:
        print(render(s), file=out, flush=True)
        if keep:
            emitted.append(s)

    stats = OracleStats()
    rho = SizeAbove(args.min_size)
    try:
        if args.k is None:
            enumerate_all(inst, rho=rho, sink=sink, stats=stats)
        else:
            enumerate_k(inst, args.k, rho=rho, sink=sink, stats=stats)
    except ContractError as exc:
        print(f"error: {exc}", file=err)
        return 2

    if args.stats:
        for name, value in stats.as_dict().items():
            print(f"{name}={value}", file=err)
        print(
            f"max_interoutput_traversals={testkit.max_interoutput_traversals(stats)}",
            file=err,
        )
        print(f"delta_hint={inst.oracle.delta_hint()}", file=err)

    if args.verify:
        try:
            ok = _verify(inst, emitted, args, err)
        except ContractError as exc:
            print(f"error: {exc}", file=err)
            return 2
        if not ok:
            return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
