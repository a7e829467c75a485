"""Command-line interface: ``boselex ingest | analyze | compress``.

Exit codes: 0 ok, 2 I/O, 3 encoding, 4 data conflict, 5 infeasible model,
6 convergence failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .compression import compress, emit_compressed_dictionary, parse_rule
from .errors import BoseLexError, DomainError, MalformedMapError
from .ingest import TokenizerConfig, count_frequencies, decode, format_tsv, parse_tsv, tokenize
from .lexicon import FrequencyDictionary, build_partition, class_statistics
from .report import analysis_report, assign, compression_report, dumps, resolve_gauge

EXIT_IO = 2


def _read_text(path: str) -> str:
    return decode(Path(path).read_bytes(), source=path)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_map(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise MalformedMapError(f"{path}: not a valid map document ({exc})") from None


def _parse_fit(text: str) -> tuple[float, float]:
    try:
        n, e = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("--fit expects N,E") from None
    return n, e


def _parse_ranks(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("--ranks expects comma-separated integers") from None


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("freq", help="frequency dictionary TSV")
    p.add_argument("map", help="descriptor map (JSON)")
    p.add_argument("--g-mode", choices=("declared", "observed"), default="declared",
                   help="class size from the map (declared) or from words seen in the corpus (observed)")
    p.add_argument("--theta", type=float, default=None, help="gauge scale (default 1)")
    p.add_argument("--alpha", type=float, default=None, help="gauge shift (default 0)")
    p.add_argument("--e0", type=float, default=None,
                   help="calibrate theta so that total information cost equals E0 (alpha=0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boselex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="count words in UTF-8 text files")
    p.add_argument("paths", nargs="+")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--no-lowercase", action="store_true")
    p.add_argument("--min-length", type=int, default=1)

    p = sub.add_parser("analyze", help="entropy and informatibility report")
    _add_model_flags(p)
    p.add_argument("--fit", type=_parse_fit, default=None, metavar="N,E",
                   help="fit beta and alpha to total tokens N and total energy E")
    p.add_argument("--ranks", type=_parse_ranks, default=None,
                   help="comma-separated ranks for the coverage curve")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("compress", help="drop low-cost classes")
    _add_model_flags(p)
    p.add_argument("--rule", required=True, help="threshold:t | top:m | budget:f")
    p.add_argument("-o", "--output", default=None, help="compressed map")
    p.add_argument("--plan", default=None, help="plan report")
    return parser


def _check_gauge_flags(args) -> None:
    if args.e0 is not None and (args.theta is not None or args.alpha is not None):
        raise DomainError("--e0 fixes the gauge; do not combine it with --theta/--alpha")


def _model_config(args) -> dict:
    return {
        "freq": args.freq,
        "map": args.map,
        "g_mode": args.g_mode,
        "theta": args.theta,
        "alpha": args.alpha,
        "e0": args.e0,
    }


def _load_model(args):
    _check_gauge_flags(args)
    freq = parse_tsv(_read_text(args.freq))
    partition = build_partition(freq, _load_map(args.map), args.g_mode)
    gauge = resolve_gauge(partition, args.theta, args.alpha, args.e0)
    return freq, partition, gauge


def cmd_ingest(args) -> None:
    cfg = TokenizerConfig(lowercase=not args.no_lowercase, min_token_length=args.min_length)
    freq = FrequencyDictionary({})
    for path in args.paths:
        freq = freq.merge(count_frequencies(tokenize(_read_text(path), cfg)))
    _write(args.output, format_tsv(freq))


def cmd_analyze(args) -> None:
    freq, partition, gauge = _load_model(args)
    config = {"command": "analyze", **_model_config(args),
              "fit": list(args.fit) if args.fit else None, "ranks": args.ranks}
    report = analysis_report(freq, partition, gauge, config, fit=args.fit, ranks=args.ranks)
    _write(args.output, dumps(report))


def cmd_compress(args) -> None:
    freq, partition, gauge = _load_model(args)
    rule = parse_rule(args.rule)
    plan = compress(class_statistics(partition), assign(partition, gauge), rule,
                    total_tokens=partition.total_tokens)
    config = {"command": "compress", **_model_config(args), "rule": str(rule)}
    _write(args.output, dumps(emit_compressed_dictionary(plan, partition)))
    if args.plan:
        _write(args.plan, dumps(compression_report(plan, config)))


COMMANDS = {"ingest": cmd_ingest, "analyze": cmd_analyze, "compress": cmd_compress}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except BoseLexError as exc:
        print(f"boselex: error: {exc}", file=sys.stderr)
        achievable = getattr(exc, "achievable", None)
        if achievable is not None:
            print(f"boselex: achievable E/N range: ({achievable[0]!r}, {achievable[1]!r})", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"boselex: error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
