"""Command-line front end.

Subcommands: ``size`` (enumerated size vs the minimum bound), ``enum``
(ball members), ``map`` (apply a constructive mapping), ``witness``
(build and validate a witness word), ``verify`` (grid sweeps).

Output is deterministic: identical invocations produce identical bytes.
Text output is derived purely from the same payload that ``--format
json`` emits, so the two round-trip.  Exit codes: 0 success, 1 domain or
parse error, 2 verification failures, 3 word-cap exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .balls import DEFAULT_WORD_CAP, BallParams, ball, ball_size, member_definitional
from .constructions import (
    bijection_insertion,
    injection_idp,
    witness_deletion_pair,
    witness_nonsurjective,
    witness_swap_flip,
)
from .errors import DomainError, WordCapExceededError
from .formulas import minimality_predicate
from .seqcore import Sequence, hamming, is_subsequence
from .verify import ALL_CHECKS, GridSpec, run_grid

#: Environment variable overriding the default word cap.
WORD_CAP_ENV = "IDSBALLS_WORD_CAP"

#: Default word cap for verification sweeps (single-query commands use
#: the library default).
VERIFY_WORD_CAP = 10**6

_WITNESS_ALIASES = {
    "lemma41": "swap-flip",
    "lemma51": "deletion-pair",
    "lemma61": "nonsurjective",
}
_WITNESS_KINDS = ("swap-flip", "deletion-pair", "nonsurjective")


class _Parser(argparse.ArgumentParser):
    # domain and parse errors share exit code 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _env_word_cap(fallback: int) -> int:
    raw = os.environ.get(WORD_CAP_ENV)
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{WORD_CAP_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise DomainError(f"{WORD_CAP_ENV} must be >= 1, got {value}")
    return value


def _add_sequence_args(sp: argparse.ArgumentParser, *, with_y: bool = False) -> None:
    sp.add_argument("--x", required=True, metavar="WORD",
                    help="the center word; empty words are spelled as an explicit ''")
    if with_y:
        sp.add_argument("--y", required=True, metavar="WORD", help="the word to map")
    sp.add_argument("--q", required=True, type=int, help="alphabet size")


def _add_budget_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("-t", "--insertions", dest="t", type=int, default=0)
    sp.add_argument("-s", "--deletions", dest="s", type=int, default=0)
    sp.add_argument("-p", "--substitutions", dest="p", type=int, default=0)


def _add_format_arg(sp: argparse.ArgumentParser, choices=("text", "json")) -> None:
    sp.add_argument("--format", choices=choices, default="text")


def _build_parser() -> _Parser:
    parser = _Parser(prog="idsballs",
                     description="insertion/deletion/substitution ball calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("size", help="enumerated ball size vs the minimum bound")
    _add_sequence_args(sp)
    _add_budget_args(sp)
    _add_format_arg(sp)
    sp.add_argument("--word-cap", type=int, default=None)

    sp = sub.add_parser("enum", help="list the ball's members")
    _add_sequence_args(sp)
    _add_budget_args(sp)
    _add_format_arg(sp)
    sp.add_argument("--word-cap", type=int, default=None)

    sp = sub.add_parser("map", help="apply a constructive mapping")
    sp.add_argument("kind", choices=("bijection", "injection"))
    _add_sequence_args(sp, with_y=True)
    sp.add_argument("-t", "--insertions", dest="t", type=int, default=0)
    sp.add_argument("-p", "--substitutions", dest="p", type=int, default=0)
    _add_format_arg(sp)

    sp = sub.add_parser("witness", help="build and validate a witness word")
    sp.add_argument("kind", choices=_WITNESS_KINDS + tuple(_WITNESS_ALIASES))
    _add_sequence_args(sp)
    _add_budget_args(sp)
    _add_format_arg(sp)

    sp = sub.add_parser("verify", help="run verification sweeps over a grid")
    sp.add_argument("--q-list", default="1,2,3", metavar="Q[,Q...]")
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--budget-max", type=int, default=2)
    sp.add_argument("--word-cap", type=int, default=None)
    sp.add_argument("--checks", default=",".join(ALL_CHECKS), metavar="NAME[,NAME...]",
                    help=f"subset of: {', '.join(ALL_CHECKS)}")
    _add_format_arg(sp, choices=("text", "json", "csv"))
    sp.add_argument("--out", type=Path, default=None, help="write the report here")
    sp.add_argument("-v", "--verbose", action="count", default=0,
                    help="include per-case and skip tables in text output")

    return parser


def _parse_word(text: str, q: int) -> Sequence:
    return Sequence.from_text(text, q)


def _payload_size(args) -> dict:
    x = _parse_word(args.x, args.q)
    params = BallParams(args.t, args.s, args.p)
    cap = args.word_cap if args.word_cap is not None else _env_word_cap(DEFAULT_WORD_CAP)
    size = ball_size(x, params, word_cap=cap)
    report = minimality_predicate(x, params)
    return {
        "command": "size",
        "x": x.text(),
        "q": args.q,
        "t": args.t,
        "s": args.s,
        "p": args.p,
        "enumerated_size": size,
        "bound": report.bound,
        "minimal_predicted": report.minimal_predicted,
        "minimal_observed": size == report.bound,
        "fired": list(report.condition_fired),
    }


def _payload_enum(args) -> dict:
    x = _parse_word(args.x, args.q)
    params = BallParams(args.t, args.s, args.p)
    cap = args.word_cap if args.word_cap is not None else _env_word_cap(DEFAULT_WORD_CAP)
    members = ball(x, params, word_cap=cap)
    return {
        "command": "enum",
        "x": x.text(),
        "q": args.q,
        "t": args.t,
        "s": args.s,
        "p": args.p,
        "count": len(members),
        "members": members.texts(),
    }


def _payload_map(args) -> dict:
    x = _parse_word(args.x, args.q)
    y = _parse_word(args.y, args.q)
    if args.kind == "bijection":
        trace = bijection_insertion(y, x, args.t)
        p: int | None = None
    else:
        trace = injection_idp(y, x, args.t, args.p)
        p = args.p
    return {
        "command": "map",
        "kind": args.kind,
        "y": y.text(),
        "x": x.text(),
        "q": args.q,
        "t": args.t,
        "p": p,
        "match_set": list(trace.match_set.positions),
        "fill_set": None if trace.fill_set is None else list(trace.fill_set.positions),
        "anchor_set": None if trace.anchor_set is None else list(trace.anchor_set.positions),
        "output": trace.output.text(),
    }


def _payload_witness(args) -> dict:
    kind = _WITNESS_ALIASES.get(args.kind, args.kind)
    x = _parse_word(args.x, args.q)
    payload = {"command": "witness", "kind": kind, "x": x.text(), "q": args.q}
    if kind == "swap-flip":
        z = witness_swap_flip(x, args.t, args.p)
        payload.update({
            "t": args.t, "s": args.t, "p": args.p,
            "witness": z.text(),
            "hamming": hamming(z, x),
            "member": member_definitional(z, x, BallParams(args.t, args.t, args.p)),
        })
    elif kind == "deletion-pair":
        u, v = witness_deletion_pair(x, args.s)
        payload.update({
            "t": None, "s": args.s, "p": None,
            "u": u.text(), "v": v.text(),
            "distinct": u != v,
            "members": is_subsequence(u, x) and is_subsequence(v, x),
        })
    else:
        z = witness_nonsurjective(x, args.t, args.p)
        n = len(x)
        payload.update({
            "t": args.t, "s": 0, "p": args.p,
            "witness": z.text(),
            "member": member_definitional(z, x, BallParams(args.t, 0, args.p)),
            "prefix_mismatch": all(z.symbols[i] != x.symbols[i] for i in range(args.p)),
            "tail_not_embeddable": not is_subsequence(
                Sequence(x.q, x.symbols[args.p:]), Sequence(x.q, z.symbols[args.p:])),
        })
    return payload


def _payload_verify(args) -> dict:
    try:
        q_values = tuple(int(part) for part in args.q_list.split(",") if part.strip())
    except ValueError:
        raise DomainError(f"cannot parse --q-list {args.q_list!r}")
    checks = tuple(part.strip() for part in args.checks.split(",") if part.strip())
    cap = args.word_cap if args.word_cap is not None else _env_word_cap(VERIFY_WORD_CAP)
    grid = GridSpec(q_values=q_values, n_max=args.n_max, budget_max=args.budget_max,
                    word_cap=cap, checks=checks)
    report = run_grid(grid)
    payload = {"command": "verify", "verbosity": args.verbose}
    payload.update(report.to_dict())
    return payload


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _fmt_positions(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _render_size(p: dict) -> str:
    fired = ",".join(p["fired"]) if p["fired"] else "none"
    return (
        f"x={p['x']} q={p['q']} t={p['t']} s={p['s']} p={p['p']}\n"
        f"size={p['enumerated_size']} bound={p['bound']}"
        f" minimal_predicted={_yn(p['minimal_predicted'])}"
        f" minimal_observed={_yn(p['minimal_observed'])} fired={fired}\n"
    )


def _render_enum(p: dict) -> str:
    return "".join(member + "\n" for member in p["members"])


def _render_map(p: dict) -> str:
    parts = [f"match={_fmt_positions(p['match_set'])}"]
    if p["fill_set"] is not None:
        parts.append(f"fill={_fmt_positions(p['fill_set'])}")
    if p["anchor_set"] is not None:
        parts.append(f"anchor={_fmt_positions(p['anchor_set'])}")
    parts.append(f"output={p['output']}")
    return " ".join(parts) + "\n"


def _render_witness(p: dict) -> str:
    if p["kind"] == "swap-flip":
        line = (f"witness={p['witness']} hamming={p['hamming']}"
                f" member={_yn(p['member'])}")
    elif p["kind"] == "deletion-pair":
        line = (f"u={p['u']} v={p['v']} distinct={_yn(p['distinct'])}"
                f" members={_yn(p['members'])}")
    else:
        line = (f"witness={p['witness']} member={_yn(p['member'])}"
                f" prefix_mismatch={_yn(p['prefix_mismatch'])}"
                f" tail_not_embeddable={_yn(p['tail_not_embeddable'])}")
    return line + "\n"


def _cell(value) -> str:
    return "-" if value is None else str(value)


def _record_table(rows: list[dict], columns: tuple[str, ...], tail: str) -> list[str]:
    table = [list(columns) + [tail]]
    for r in rows:
        cells = [("ok" if r[c] else "FAIL") if c == "ok" else _cell(r[c]) for c in columns]
        if tail == "detail":
            cells.append(json.dumps(r["detail"], sort_keys=True, separators=(",", ":")))
        else:
            cells.append(r[tail])
        table.append(cells)
    widths = [max(len(row[i]) for row in table) for i in range(len(columns))]
    lines = []
    for row in table:
        cells = [row[i].ljust(widths[i]) for i in range(len(widths))] + [row[-1]]
        lines.append("  ".join(cells).rstrip())
    return lines


_CASE_COLUMNS = ("check", "q", "n", "t", "s", "p", "x", "ok")


def _render_verify_text(p: dict) -> str:
    g = p["grid"]
    s = p["summary"]
    lines = [
        f"backend={p['backend']} checks={','.join(g['checks'])}"
        f" q={','.join(str(q) for q in g['q_values'])} n_max={g['n_max']}"
        f" budget_max={g['budget_max']} word_cap={g['word_cap']}",
        f"cases_run={s['cases_run']} cases_skipped={s['cases_skipped']}"
        f" failures={s['failures']}",
    ]
    if p["failures"]:
        lines += ["", "failures:"]
        lines += _record_table(p["failures"], _CASE_COLUMNS, "detail")
    if p["verbosity"] >= 1:
        if p["skipped"]:
            lines += ["", "skipped:"]
            lines += _record_table(p["skipped"], ("check", "q", "n", "t", "s", "p"), "reason")
        lines += ["", "cases:"]
        lines += _record_table(p["cases"], _CASE_COLUMNS, "detail")
    return "\n".join(lines) + "\n"


def _render_verify_csv(p: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(_CASE_COLUMNS) + ["detail"])
    for c in p["cases"]:
        writer.writerow(
            ["" if c[col] is None else c[col] for col in _CASE_COLUMNS[:-1]]
            + [int(c["ok"]), json.dumps(c["detail"], sort_keys=True, separators=(",", ":"))]
        )
    return buf.getvalue()


_TEXT_RENDERERS = {
    "size": _render_size,
    "enum": _render_enum,
    "map": _render_map,
    "witness": _render_witness,
    "verify": _render_verify_text,
}

_PAYLOAD_BUILDERS = {
    "size": _payload_size,
    "enum": _payload_enum,
    "map": _payload_map,
    "witness": _payload_witness,
    "verify": _payload_verify,
}


def render_payload(payload: dict, fmt: str) -> str:
    """Render a command payload; text output is a pure function of the
    payload, so json output round-trips to identical text."""
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        if payload["command"] != "verify":
            raise DomainError("csv output exists for verify reports only")
        return _render_verify_csv(payload)
    return _TEXT_RENDERERS[payload["command"]](payload)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _PAYLOAD_BUILDERS[args.command](args)
        rendered = render_payload(payload, args.format)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WordCapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.command == "verify":
        out: Path | None = args.out
        if out is not None:
            out.write_text(rendered)
            summary = payload["summary"]
            print(f"cases_run={summary['cases_run']}"
                  f" cases_skipped={summary['cases_skipped']}"
                  f" failures={summary['failures']} -> {out}")
        else:
            sys.stdout.write(rendered)
        return 2 if payload["summary"]["failures"] else 0
    sys.stdout.write(rendered)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
