"""Command-line front end.

Three subcommands: ``analyze`` (one-shot analysis of a game document),
``simulate`` (repeated play with per-player update policies), and
``ultimatum`` (bargaining episodes).  ``--format records`` emits
line-delimited JSON with exact-rational strings; ``--format human`` is
for eyes only.  Exit codes: 0 success, 1 usage error, 2 input or
validation error, 3 analysis error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import builtin
from .documents import DocumentError, load_game, parse_document
from .dynamics import (
    FixedPolicy,
    RepeatedGameConfig,
    SimulationError,
    parse_policy_spec,
    simulate,
)
from .equilibrium import EquilibriumSelectionError, GameTooLargeError
from .model import BeliefShapeError, InvalidBeliefsError
from .rational import RationalFormatError
from .reports import (
    analysis_report,
    bargain_outcome_record,
    bargain_round_records,
    simulation_records,
)
from .ultimatum import UltimatumConfig, bargain

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_ANALYSIS = 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems by default; the contract says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(record) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _load_input(args):
    if args.example is not None and args.game is not None:
        raise UsageError("pass a game file or --example, not both")
    if args.example is not None:
        try:
            return parse_document(builtin.game_document(args.example))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if args.game is None:
        raise UsageError("a game file or --example is required")
    try:
        return load_game(args.game)
    except OSError as exc:
        raise DocumentError(f"cannot read {args.game}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# human rendering


def _matrix_lines(game, payoffs, indent="  "):
    if game.n_players == 2:
        rows, cols = game.strategies
        cells = [
            [", ".join(payoffs[game.profile_index((r, c))]) for c in range(len(cols))]
            for r in range(len(rows))
        ]
        widths = [
            max(len(cols[c]), max(len(cells[r][c]) for r in range(len(rows))))
            for c in range(len(cols))
        ]
        label_w = max(len(r) for r in rows)
        lines = [
            indent
            + " " * label_w
            + "  "
            + "   ".join(col.rjust(widths[c]) for c, col in enumerate(cols))
        ]
        for r, row in enumerate(rows):
            lines.append(
                indent
                + row.ljust(label_w)
                + "  "
                + "   ".join(cells[r][c].rjust(widths[c]) for c in range(len(cols)))
            )
        return lines
    lines = []
    for index, profile in enumerate(game.profiles()):
        labels = ", ".join(game.labels(profile))
        lines.append(f"{indent}({labels}): {', '.join(payoffs[index])}")
    return lines


def _print_analysis_human(game, report):
    print(f"players: {', '.join(report['players'])}")
    print("material payoffs:")
    for line in _matrix_lines(game, report["material"]):
        print(line)
    print("relationships / attitudes:")
    for i, player in enumerate(report["players"]):
        for j, other in enumerate(report["players"]):
            if i == j:
                continue
            value = report["relationships"][i][j]
            print(f"  {player} -> {other}: {value} ({report['attitudes'][i][j]})")
    for perspective in report["perspectives"]:
        print(f"supposed game of {perspective['player']}:")
        for line in _matrix_lines(game, perspective["payoffs"]):
            print(line)
        for entry in perspective["dominance"]:
            if entry["kind"] == "none":
                print(f"  dominance {entry['player']}: none")
            else:
                print(f"  dominance {entry['player']}: {entry['strategy']} ({entry['kind']})")
        pures = ["(" + ", ".join(p) + ")" for p in perspective["pure_equilibria"]]
        print(f"  pure equilibria: {'; '.join(pures) if pures else 'none'}")
        if perspective["mixed_equilibria"] is not None:
            mixed = [
                "; ".join("(" + ", ".join(v) + ")" for v in profile)
                for profile in perspective["mixed_equilibria"]
            ]
            print(f"  mixed equilibria: {' | '.join(mixed) if mixed else 'none'}")
        if perspective["note"]:
            print(f"  note: {perspective['note']}")
    assembled = report["assembled_profile"]
    if assembled["profile"] is not None:
        print(f"assembled profile: ({', '.join(assembled['profile'])})")
    else:
        print("assembled profile: mixed components")
    for entry in assembled["provenance"]:
        if entry["kind"] == "pure":
            source = "(" + ", ".join(entry["equilibrium"]) + ")"
        else:
            source = "mixed " + "; ".join("(" + ", ".join(v) + ")" for v in entry["equilibrium"])
        print(f"  {entry['player']}: from {entry['kind']} equilibrium {source} of own supposed game")
    if report["subjective_check"] is not None:
        marks = [
            f"{c['player']}: {'pass' if c['passed'] else 'FAIL'}"
            for c in report["subjective_check"]
        ]
        print(f"subjective check: {'; '.join(marks)}")
        marks = [
            f"{c['player']}: {'pass' if c['passed'] else 'FAIL (' + c['detail'] + ')'}"
            for c in report["objective_check"]
        ]
        print(f"objective check: {'; '.join(marks)}")


def cmd_analyze(args) -> int:
    game, beliefs = _load_input(args)
    perspective = None
    if args.perspective != "all":
        try:
            perspective = game.player_index(args.perspective)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    report = analysis_report(game, beliefs, perspective)
    if args.format == "records":
        game_record = {
            "type": "game",
            "players": report["players"],
            "strategies": report["strategies"],
            "material": report["material"],
            "relationships": report["relationships"],
            "attitudes": report["attitudes"],
        }
        print(_dump(game_record))
        for perspective_report in report["perspectives"]:
            print(_dump({"type": "perspective", **perspective_report}))
        print(
            _dump(
                {
                    "type": "equilibrium",
                    "assembled_profile": report["assembled_profile"],
                    "subjective_check": report["subjective_check"],
                    "objective_check": report["objective_check"],
                }
            )
        )
    else:
        _print_analysis_human(game, report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate


def cmd_simulate(args) -> int:
    game, beliefs = _load_input(args)
    policies = [FixedPolicy() for _ in game.players]
    for item in args.policy or ():
        player_name, sep, spec = item.partition("=")
        if not sep:
            raise UsageError(f"--policy needs player=spec, got {item!r}")
        try:
            player = game.player_index(player_name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        try:
            policies[player] = parse_policy_spec(spec)
        except (RationalFormatError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    config = RepeatedGameConfig(game, beliefs, args.rounds, tuple(policies))
    trace = simulate(config)
    records = simulation_records(game, trace)
    if args.format == "records":
        for record in records:
            print(_dump(record))
    else:
        for record in records:
            actions = ", ".join(record["actions"])
            material = ", ".join(record["material"])
            print(f"round {record['round']}: ({actions})  material {material}")
            for name, row in zip(game.players, record["supposed"]):
                labelled = ", ".join(f"{p}={v}" for p, v in zip(game.players, row))
                print(f"  {name} supposes: {labelled}")
            for update in record["updates"]:
                interval = update["interval"]
                span = f"[{interval['lo']}, {interval['hi']}]"
                reset = " (reset)" if update["reset"] else ""
                print(
                    f"  {update['player']}: {update['opponent']} played "
                    f"{update['observed']} -> interval {span}, "
                    f"estimate {update['estimate']}{reset}"
                )
    return EXIT_OK


# ---------------------------------------------------------------------------
# ultimatum


def cmd_ultimatum(args) -> int:
    settings = {}
    if args.example is not None:
        try:
            settings = dict(builtin.ultimatum_settings(args.example))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    for flag, key in (
        ("r_rc", "r_rc"),
        ("r_cr", "r_cr"),
        ("belief_cr", "row_belief_cr"),
        ("belief_rc", "col_belief_rc"),
        ("max_rounds", "max_rounds"),
    ):
        value = getattr(args, flag)
        if value is not None:
            settings[key] = value
    settings.setdefault("r_rc", "0")
    settings.setdefault("r_cr", "0")
    if args.offers:
        settings["offers"] = tuple(args.offers.split(","))
    try:
        config = UltimatumConfig(**settings)
    except (RationalFormatError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    outcome = bargain(config)
    rounds = bargain_round_records(config, outcome)
    final = bargain_outcome_record(config, outcome)
    if args.format == "records":
        for record in rounds:
            print(_dump(record))
        print(_dump(final))
    else:
        range_ = final["range"]
        lo = range_["lo"] if range_["lo"] is not None else "-inf"
        hi = range_["hi"] if range_["hi"] is not None else "inf"
        shape = "(empty)" if range_["empty"] else f"({lo}, {hi})"
        print(f"agreement range from true relationship values: {shape}")
        for record in rounds:
            verdict = "accepted" if record["accepted"] else "rejected"
            print(f"round {record['round']}: offer {record['offer']} -> {verdict}")
        if final["result"] == "agreement":
            print(f"outcome: agreement at {final['offer']} in round {final['round']}")
        else:
            print(f"outcome: no-agreement ({final['reason']})")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relgames", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a game document")
    analyze.add_argument("game", nargs="?", help="path to a game document (JSON)")
    analyze.add_argument("--example", help="use a built-in example instead of a file")
    analyze.add_argument("--perspective", default="all", help="player name or 'all'")
    analyze.add_argument("--format", choices=("human", "records"), default="human")
    analyze.set_defaults(handler=cmd_analyze)

    sim = sub.add_parser("simulate", help="simulate repeated play")
    sim.add_argument("game", nargs="?", help="path to a game document (JSON)")
    sim.add_argument("--example", help="use a built-in example instead of a file")
    sim.add_argument("--rounds", type=int, required=True, help="number of rounds (>= 1)")
    sim.add_argument(
        "--policy",
        action="append",
        metavar="PLAYER=SPEC",
        help="update policy: fixed, titfortat[:lo,hi] or rationalize[:lo,hi]",
    )
    sim.add_argument("--format", choices=("human", "records"), default="human")
    sim.set_defaults(handler=cmd_simulate)

    ult = sub.add_parser("ultimatum", help="run a bargaining episode")
    ult.add_argument("--example", help="use a built-in scenario's settings")
    ult.add_argument("--r-rc", dest="r_rc", help="Row's relationship toward Column")
    ult.add_argument("--r-cr", dest="r_cr", help="Column's relationship toward Row")
    ult.add_argument("--belief-cr", dest="belief_cr", help="Row's estimate of --r-cr")
    ult.add_argument("--belief-rc", dest="belief_rc", help="Column's estimate of --r-rc")
    ult.add_argument("--max-rounds", dest="max_rounds", type=int)
    ult.add_argument("--offers", help="comma-separated fixed offer sequence")
    ult.add_argument("--format", choices=("human", "records"), default="human")
    ult.set_defaults(handler=cmd_ultimatum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage problems by exiting
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"relgames: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DocumentError, InvalidBeliefsError, BeliefShapeError, RationalFormatError) as exc:
        print(f"relgames: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (EquilibriumSelectionError, GameTooLargeError, SimulationError) as exc:
        print(f"relgames: analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except ValueError as exc:
        print(f"relgames: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
