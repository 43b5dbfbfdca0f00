"""Command-line front end: ``flagschur {char,classify,reduced-words,rothe,verify}``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .characters import (
    CharacterResult,
    character_recursive,
    character_via_reduced_words,
    schubert_divided_difference,
)
from .diagram import (
    Diagram,
    Permutation,
    classify,
    diagram_descents,
    from_rows,
    is_k_full,
    is_translucent,
    is_transparent,
    reduced_words,
    repeat_columns,
    rothe_diagram,
)
from .errors import CapExceeded, FlagSchurError, NotTransparent, ParseError, TooLarge
from .oracle import DEFAULT_MAX_FILLINGS, DEFAULT_MAX_TERMS, FlagBound, character_oracle
from .poly import RankSequence
from .sweep import CheckConfig, box_sweep, check_diagram, check_permutation, rothe_sweep, SweepReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_GRID_CHARS = set("#./\n\r ")


@dataclass(frozen=True)
class DiagramSpec:
    """A parsed diagram, remembering the permutation when given as ``rothe:w``."""

    diagram: Diagram
    permutation: Permutation | None = None

    @classmethod
    def parse(cls, text: str) -> "DiagramSpec":
        s = text.strip()
        try:
            if s.startswith("repeat:"):
                m = re.fullmatch(r"repeat:(\d+)x\(?(.*?)\)?", s, flags=re.S)
                if not m:
                    raise ParseError(f"expected repeat:<m>x<spec>, got {text!r}")
                inner = cls.parse(m.group(2))
                return cls(repeat_columns(inner.diagram, int(m.group(1))))
            if s.startswith("rothe:"):
                w = Permutation.parse(s[len("rothe:"):])
                return cls(rothe_diagram(w), w)
            if s.startswith("grid:"):
                return cls(parse_grid(s[len("grid:"):]))
            if s and set(s) <= _GRID_CHARS:
                return cls(parse_grid(s))
            return cls(parse_columns(s))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(f"cannot parse diagram {text!r}: {exc}") from exc


def parse_columns(text: str) -> Diagram:
    """``2,3;2,3,5;3`` or ``[{2,3},{2,3,5},{3}]``."""
    s = text.strip()
    if s.startswith("["):
        cols = re.findall(r"\{([^}]*)\}", s)
    else:
        cols = s.split(";") if s else []
    out = []
    for c in cols:
        c = c.strip()
        if not re.fullmatch(r"(\d+(\s*,\s*\d+)*)?", c):
            raise ParseError(f"bad column {c!r} in {text!r}")
        out.append(tuple(int(t) for t in c.split(",")) if c else ())
    return Diagram(tuple(out))


def parse_grid(text: str) -> Diagram:
    """Rows of ``#``/``.``, row 1 first, separated by newlines or ``/``."""
    lines = [ln.strip() for ln in re.split(r"[/\n]", text.strip())]
    if any(set(ln) - {"#", "."} for ln in lines):
        raise ParseError(f"grid rows may contain only '#' and '.': {text!r}")
    return from_rows(lines)


@dataclass(frozen=True)
class JobConfig:
    method: str = "auto"
    nvars: int | None = None
    rank_sequence: RankSequence | None = None
    format: str = "text"
    max_fillings: int = DEFAULT_MAX_FILLINGS
    max_terms: int = DEFAULT_MAX_TERMS


def compute_character(spec: DiagramSpec, cfg: JobConfig) -> CharacterResult:
    D = spec.diagram
    method = cfg.method
    if cfg.rank_sequence is not None and method not in ("oracle", "auto"):
        raise ParseError("--rank-sequence is only valid with the oracle")
    if method == "auto":
        method = "recursion" if cfg.rank_sequence is None and is_translucent(D) else "oracle"
    if method == "recursion":
        return character_recursive(D)
    if method == "redwords":
        return character_via_reduced_words(D)
    if method == "dd":
        if spec.permutation is None:
            raise ParseError("--method dd needs a permutation (--rothe or rothe:w)")
        return CharacterResult(schubert_divided_difference(spec.permutation), "divided_difference", D)
    if method == "oracle":
        fb = None
        if cfg.rank_sequence is not None:
            d = cfg.rank_sequence
            fb = FlagBound.partial(tuple(d.rank(i) for i in range(1, max(len(d), D.max_row) + 1)))
        return character_oracle(D, fb, max_fillings=cfg.max_fillings, max_terms=cfg.max_terms)
    raise ParseError(f"unknown method {method!r}")


def render_character(res: CharacterResult, cfg: JobConfig) -> str:
    D = res.diagram
    cls = classify(D)
    char = res.character
    if cfg.nvars is not None and char.nvars > cfg.nvars:
        raise ParseError(f"character uses {char.nvars} variables, more than --nvars {cfg.nvars}")
    if cfg.format == "json":
        return json.dumps({
            "diagram": [list(c) for c in D.columns],
            "method": res.method,
            "character": char.to_json_terms(cfg.nvars),
            "dimension": res.dimension,
            "clear": cls.clear,
            "transparent": cls.transparent,
            "translucent": cls.translucent,
        }, separators=(",", ":"))
    return "\n".join([
        f"diagram: {D}",
        f"method: {res.method}",
        f"clear: {_yn(cls.clear)}  transparent: {_yn(cls.transparent)}  translucent: {_yn(cls.translucent)}",
        f"dimension: {res.dimension}",
        f"character: {char.to_text()}",
    ])


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _spec_from_args(args) -> DiagramSpec:
    if getattr(args, "rothe", None):
        if args.diagram is not None:
            raise ParseError("give either --diagram or --rothe, not both")
        try:
            w = Permutation.parse(args.rothe)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        return DiagramSpec(rothe_diagram(w), w)
    if args.diagram is None:
        raise ParseError("a diagram is required (--diagram or --rothe)")
    return DiagramSpec.parse(args.diagram)


def cmd_char(args) -> int:
    rs = RankSequence.parse(args.rank_sequence) if args.rank_sequence else None
    cfg = JobConfig(args.method, args.nvars, rs, args.format, args.cap_fillings, args.cap_terms)
    print(render_character(compute_character(_spec_from_args(args), cfg), cfg))
    return EXIT_OK


def cmd_classify(args) -> int:
    D = _spec_from_args(args).diagram
    cls = classify(D)
    full = {k: is_k_full(D, k) for k in range(1, D.max_row + 1)}
    des = diagram_descents(D)
    if args.format == "json":
        print(json.dumps({
            "diagram": [list(c) for c in D.columns],
            "clear": cls.clear,
            "transparent": cls.transparent,
            "translucent": cls.translucent,
            "full": [k for k, v in full.items() if v],
            "descents": [{"k": w.k, "border_cell": list(w.border_cell)} for w in des],
        }, separators=(",", ":")))
        return EXIT_OK
    print(f"diagram: {D}")
    print(f"clear: {_yn(cls.clear)}")
    print(f"transparent: {_yn(cls.transparent)}")
    print(f"translucent: {_yn(cls.translucent)}")
    print("k-full: " + (", ".join(str(k) for k, v in full.items() if v) or "none"))
    print("descents: {" + ",".join(str(w.k) for w in des) + "}")
    for w in des:
        print(f"  k={w.k} border cell (row {w.border_cell[0]}, column {w.border_cell[1]})")
    return EXIT_OK


def cmd_reduced_words(args) -> int:
    D = _spec_from_args(args).diagram
    if not is_transparent(D):
        raise NotTransparent(f"{D} is not transparent")
    words = reduced_words(D, cap=args.cap)
    if args.format == "json":
        print(json.dumps({"words": [list(w) for w in words], "count": len(words)}, separators=(",", ":")))
        return EXIT_OK
    for w in words:
        print("(" + ",".join(map(str, w)) + ")")
    print(f"count: {len(words)}")
    return EXIT_OK


def cmd_rothe(args) -> int:
    try:
        w = Permutation.parse(args.permutation)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    D = rothe_diagram(w)
    if args.format == "json":
        print(json.dumps({"permutation": list(w.word), "diagram": [list(c) for c in D.columns]},
                         separators=(",", ":")))
        return EXIT_OK
    print(D.to_text())
    winv = w.inverse()
    for i in range(1, w.n + 1):
        # boxes in place, with the permutation's dots marked 'o'
        print("".join("o" if w(i) == j else "#" if j < w(i) and i < winv(j) else "." for j in range(1, w.n + 1)))
    return EXIT_OK


def _parse_box(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
    if not m:
        raise ParseError(f"--box expects RxC, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def cmd_verify(args) -> int:
    cfg = CheckConfig(max_fillings=args.cap_fillings, max_terms=args.cap_terms, kernels=not args.no_kernels)
    if args.diagram is not None or args.rothe:
        spec = _spec_from_args(args)
        rep = check_permutation(spec.permutation, cfg) if spec.permutation else check_diagram(spec.diagram, cfg)
        report = SweepReport([rep])
    else:
        rows, cols = _parse_box(args.box)
        if args.only == "rothe":
            report = rothe_sweep(max(rows, cols), cfg, jobs=args.jobs)
        else:
            cfg = CheckConfig(kmax=rows, max_fillings=cfg.max_fillings, max_terms=cfg.max_terms,
                              kernels=cfg.kernels)
            report = box_sweep(rows, cols, args.max_multiplicity, args.max_distinct, cfg, jobs=args.jobs)
    print(report.summary())
    print("result: " + ("all checks pass" if report.ok else f"{len(report.failures)} failure(s)"))
    return EXIT_OK if report.ok else EXIT_FAIL


def _add_diagram_args(p: argparse.ArgumentParser):
    p.add_argument("--diagram", help="column list '2,3;2,3,5;3', grid '#./..#', rothe:w or repeat:mx(spec)")
    p.add_argument("--rothe", metavar="W", help="use the Rothe diagram of the permutation W")


def _add_caps(p: argparse.ArgumentParser):
    p.add_argument("--cap-fillings", type=int, default=DEFAULT_MAX_FILLINGS)
    p.add_argument("--cap-terms", type=int, default=DEFAULT_MAX_TERMS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagschur", description="Characters of flagged Schur modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="compute a character")
    _add_diagram_args(p)
    p.add_argument("--method", choices=["auto", "recursion", "redwords", "dd", "oracle"], default="auto")
    p.add_argument("--nvars", type=int)
    p.add_argument("--rank-sequence", help="partial flag ranks, e.g. '1,2,5,6,7' (oracle only)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    _add_caps(p)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("classify", help="clear/transparent/translucent and descents")
    _add_diagram_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduced-words", help="list reduced words of a transparent diagram")
    _add_diagram_args(p)
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_reduced_words)

    p = sub.add_parser("rothe", help="print the Rothe diagram of a permutation")
    p.add_argument("permutation")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_rothe)

    p = sub.add_parser("verify", help="cross-check all methods over a box of diagrams")
    _add_diagram_args(p)
    p.add_argument("--box", default="3x3", help="RxC: rows and maximum number of columns")
    p.add_argument("--only", choices=["rothe"], help="restrict to Rothe diagrams of S_n, n = max(R, C)")
    p.add_argument("--max-multiplicity", type=int, default=1)
    p.add_argument("--max-distinct", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-kernels", action="store_true", help="skip the twisted-flag kernel checks")
    _add_caps(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TooLarge, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FlagSchurError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
