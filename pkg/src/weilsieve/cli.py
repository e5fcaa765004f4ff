"""Command-line front end.

Commands:
  enumerate        candidate real Weil polynomials for (q, g, prescribed)
  eliminate        the same list with elimination verdicts
  replay-theorem2  the full nonexistence certificate
  count-curve      N_1, genus, and the divisor of f for the cover
  zeta-curve       N_1..N_8 of the cover and its real Weil polynomial

Artifacts are written atomically (temp file, then rename), so a failed run
never leaves a partial file.  Re-running a command with the same
configuration reproduces the artifact byte for byte unless --timestamp is
given.  When --output is set, enumerate, eliminate, and zeta-curve also
render a PNG figure next to the artifact (suppress with --no-figures).
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .coverproof import MissingBound, StepFailed, load_point_bounds, replay_theorem2
from .eliminate import eliminate_all, verdicts_to_csv, verdicts_to_json
from .enumeration import enumerate_real_weil
from .ffcurve import (
    DEFAULT_COVER,
    DegreeMismatch,
    InconsistentCounts,
    KummerCoverSpec,
    PlaceRecord,
    count_points_C,
    divisor_of_f,
    genus_C_rh,
    real_weil_of_C,
)
from .weil import ConstraintSet

COMMANDS = ("enumerate", "eliminate", "replay-theorem2", "count-curve", "zeta-curve")
FORMATS = ("json", "csv", "markdown")
_DEFAULT_FORMAT = {
    "enumerate": "json",
    "eliminate": "csv",
    "replay-theorem2": "json",
    "count-curve": "markdown",
    "zeta-curve": "markdown",
}


class UsageError(Exception):
    """Bad flags or configuration; maps to exit status 1."""


@dataclass
class RunConfig:
    command: str
    q: int = 4
    g: int = 8
    prescribed: dict[int, int] = field(default_factory=dict)
    format: str = ""
    output: str | None = None
    threads: int = 1
    bounds_table: str | None = None
    curve_config: str | None = None
    timestamp: bool = False
    figures: bool = True

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not self.format:
            self.format = _DEFAULT_FORMAT[self.command]
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")
        if self.q < 2 or not _is_prime_power(self.q):
            raise UsageError(f"q = {self.q} is not a prime power")
        if self.g < 1:
            raise UsageError("g must be at least 1")
        for n, v in self.prescribed.items():
            if v < 0:
                raise UsageError(f"prescribed place count P_{n} must be nonnegative")


def _is_prime_power(q: int) -> bool:
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    while q % p == 0:
        q //= p
    return q == 1


def _element_label(t: int) -> str:
    return {0: "0", 1: "1", 2: "w", 3: "w^2"}.get(t, str(t))


def _place_label(rec: PlaceRecord) -> str:
    if rec.is_infinite:
        return rec.infinity
    if rec.degree == 1:
        return f"({_element_label(rec.x)};{_element_label(rec.y)})"
    return f"deg{rec.degree}({rec.x};{rec.y})"


def _load_cover(config: RunConfig) -> KummerCoverSpec:
    if config.curve_config is None:
        return DEFAULT_COVER
    try:
        with open(config.curve_config, "r", encoding="utf-8") as fh:
            return KummerCoverSpec.from_config(fh.read())
    except OSError as e:
        raise UsageError(f"cannot read curve config: {e}") from e
    except ValueError as e:
        raise UsageError(f"bad curve config: {e}") from e


# -- command implementations --------------------------------------------------


def _cmd_enumerate(config: RunConfig):
    cs = ConstraintSet.make(config.q, config.g, config.prescribed)
    polys = enumerate_real_weil(cs, threads=config.threads)

    def lines() -> Iterable[str]:
        if config.format == "json":
            for i, p in enumerate(polys, 1):
                yield json.dumps(
                    {"index": i, "h": p.pretty(), "coefficients": list(p.coeffs)},
                    sort_keys=True,
                )
        elif config.format == "csv":
            yield "index,h"
            for i, p in enumerate(polys, 1):
                yield f"{i},{p.pretty()}"
        else:
            yield "| index | h |"
            yield "| --- | --- |"
            for i, p in enumerate(polys, 1):
                yield f"| {i} | {p.pretty()} |"

    def figure(path: str) -> None:
        from . import report

        report.save_candidate_roots(polys, config.q, path)

    return lines(), figure


def _cmd_eliminate(config: RunConfig):
    cs = ConstraintSet.make(config.q, config.g, config.prescribed)
    polys = enumerate_real_weil(cs, threads=config.threads)
    verdicts = eliminate_all(polys, config.q)
    if config.format == "json":
        text = verdicts_to_json(verdicts)
    elif config.format == "csv":
        text = verdicts_to_csv(verdicts)
    else:
        rows = ["| index | h | status | argument |", "| --- | --- | --- | --- |"]
        for i, v in enumerate(verdicts, 1):
            rows.append(f"| {i} | {v.candidate.pretty()} | {v.status} | {v.argument} |")
        text = "\n".join(rows) + "\n"

    def figure(path: str) -> None:
        from . import report

        labels = [
            v.argument if v.status == "eliminated" else "none" for v in verdicts
        ]
        report.save_argument_histogram(labels, path)

    return _as_lines(text), figure


def _cmd_replay(config: RunConfig):
    bounds = load_point_bounds(config.bounds_table)
    cert = replay_theorem2(config.q, config.g, bounds=bounds, threads=config.threads)
    if config.format == "json":
        text = cert.to_json() + "\n"
    elif config.format == "markdown":
        text = cert.to_markdown()
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["step", "passed", "claim"])
        for s in cert.steps:
            writer.writerow([s.name, str(s.passed).lower(), s.claim])
        text = buf.getvalue()
    return _as_lines(text), None


def _cmd_count_curve(config: RunConfig):
    cover = _load_cover(config)
    n1 = count_points_C(1, cover)
    genus = genus_C_rh(cover)
    div = divisor_of_f(cover)
    if config.format == "json":
        text = (
            json.dumps(
                {
                    "N_1": n1,
                    "genus": genus,
                    "divisor": [
                        {
                            "place": _place_label(rec),
                            "degree": rec.degree,
                            "valuation": val,
                        }
                        for rec, val in div
                    ],
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    elif config.format == "csv":
        rows = ["name,value", f"N_1,{n1}", f"genus,{genus}"]
        rows += [f"val[{_place_label(rec)}],{val}" for rec, val in div]
        text = "\n".join(rows) + "\n"
    else:
        parts = [f"N_1 = {n1}, genus = {genus}", "", "divisor of f:"]
        parts += [f"- {_place_label(rec)}: {val:+d}" for rec, val in div]
        text = "\n".join(parts) + "\n"
    return _as_lines(text), None


def _cmd_zeta_curve(config: RunConfig):
    cover = _load_cover(config)
    genus = genus_C_rh(cover)
    counts = [count_points_C(n, cover) for n in range(1, 9)]
    h_c = real_weil_of_C(cover)
    if config.format == "json":
        text = (
            json.dumps(
                {
                    "counts": counts,
                    "genus": genus,
                    "real_weil": h_c.pretty(),
                    "real_weil_coefficients": list(h_c.coeffs),
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    elif config.format == "csv":
        rows = ["n,N_n"] + [f"{n},{c}" for n, c in enumerate(counts, 1)]
        rows.append(f"real_weil,{h_c.pretty()}")
        text = "\n".join(rows) + "\n"
    else:
        rows = ["| n | N_n |", "| --- | --- |"]
        rows += [f"| {n} | {c} |" for n, c in enumerate(counts, 1)]
        rows += ["", f"real Weil polynomial: {h_c.pretty()}"]
        text = "\n".join(rows) + "\n"

    def figure(path: str) -> None:
        from . import report

        report.save_count_plot(counts, 4, genus, path)

    return _as_lines(text), figure


def _as_lines(text: str) -> Iterable[str]:
    return text.rstrip("\n").split("\n")


_IMPL: dict[str, Callable] = {
    "enumerate": _cmd_enumerate,
    "eliminate": _cmd_eliminate,
    "replay-theorem2": _cmd_replay,
    "count-curve": _cmd_count_curve,
    "zeta-curve": _cmd_zeta_curve,
}


# -- output plumbing -----------------------------------------------------------


def _timestamp_line(config: RunConfig) -> str | None:
    if not config.timestamp:
        return None
    now = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    if config.format == "json":
        return json.dumps({"generated": now})
    return f"# generated: {now}"


def _write_lines(path: str, lines: Iterable[str]) -> None:
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line)
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _figure_path(output: str) -> str:
    root, _ = os.path.splitext(output)
    return root + ".png"


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    lines, figure = _IMPL[config.command](config)
    header = _timestamp_line(config)
    if header is not None:
        lines = [header, *lines]
    if config.output is None:
        for line in lines:
            print(line)
    else:
        _write_lines(config.output, lines)
        if figure is not None and config.figures:
            fig_path = _figure_path(config.output)
            tmp = fig_path + ".tmp"
            try:
                figure(tmp)
                os.replace(tmp, fig_path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
    return 0


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="weilsieve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, curve: bool = False, search: bool = False, bounds: bool = False):
        p.add_argument("--format", choices=FORMATS, default="")
        p.add_argument("--output", help="artifact path (default: stdout)")
        p.add_argument("--timestamp", action="store_true",
                       help="prepend a generation-time header")
        p.add_argument("--no-figures", action="store_true",
                       help="skip PNG rendering next to --output")
        if search:
            p.add_argument("--q", type=int, required=True, help="field size")
            p.add_argument("--g", type=int, required=True, help="genus")
            for n in range(1, 9):
                p.add_argument(f"--p{n}", type=int, default=None,
                               help=f"prescribed count of degree-{n} places")
            p.add_argument("--threads", type=int, default=1)
        if bounds:
            p.add_argument("--q", type=int, default=4)
            p.add_argument("--g", type=int, default=8)
            p.add_argument("--threads", type=int, default=1)
            p.add_argument("--bounds-table",
                           help="JSON file of point-count bounds "
                                "(default: packaged table, or the "
                                "WEILSIEVE_BOUNDS_TABLE environment variable)")
        if curve:
            p.add_argument("--curve-config",
                           help="text file overriding the built-in curve")

    common(sub.add_parser("enumerate"), search=True)
    common(sub.add_parser("eliminate"), search=True)
    common(sub.add_parser("replay-theorem2"), bounds=True)
    common(sub.add_parser("count-curve"), curve=True)
    common(sub.add_parser("zeta-curve"), curve=True)
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    if ns.command is None:
        raise UsageError(f"missing command; choose one of {', '.join(COMMANDS)}")
    prescribed = {
        n: getattr(ns, f"p{n}")
        for n in range(1, 9)
        if getattr(ns, f"p{n}", None) is not None
    }
    return RunConfig(
        command=ns.command,
        q=getattr(ns, "q", 4),
        g=getattr(ns, "g", 8),
        prescribed=prescribed,
        format=ns.format,
        output=ns.output,
        threads=getattr(ns, "threads", 1),
        bounds_table=getattr(ns, "bounds_table", None),
        curve_config=getattr(ns, "curve_config", None),
        timestamp=ns.timestamp,
        figures=not ns.no_figures,
    )


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        return run(config)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except StepFailed as e:
        done = ", ".join(s.name for s in e.completed) or "none"
        print(f"certificate failed at step {e.step.name!r}: {e.step.computed}",
              file=sys.stderr)
        print(f"steps completed: {done}", file=sys.stderr)
        return 2
    except (MissingBound, DegreeMismatch, InconsistentCounts) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
