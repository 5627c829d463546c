"""Command-line frontend.

Each subcommand reads one input (``-`` for standard input), prints a short
report, and with ``--json`` prints a single object
``{command, input, params, result, stats: {states, arcs, millis}}`` instead.
``input`` is the file argument (the family name for ``gen``) and
``params`` holds the flags exactly as given on the command line, so
:func:`argv_from_report` rebuilds an equivalent invocation.

Exit codes: 0 success, 2 usage or input error, 3 a scale cap was hit.
``TOKENGAME_STATE_CAP`` overrides the solver's state cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import random
import sys
import time
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import constructions as cons
from .core import STAR, Budget, GameSpec, Player, Position, Rule
from .oracle import OracleLimitExceeded, minimax_oracle
from .pairing import SearchLimitExceeded
from .reach import BUILD_LOG, DEFAULT_STATE_CAP, StateLimitExceeded, solve_position
from .reduction import solve_a1
from .textio import FormatError, format_board, parse_board, parse_graph, read_text

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_CAP = 0, 2, 3
CAP_ENV = "TOKENGAME_STATE_CAP"


class UsageError(Exception):
    pass


def state_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_STATE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be positive, got {cap}")
    return cap


def budget_arg(text: str) -> Budget:
    if text == "star":
        return STAR
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'star', got {text!r}") from None
    if x < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'star', got {text!r}")
    return x


def _jsonable(x: Any) -> Any:
    if x is STAR:
        return "star"
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Player):
        return x.name.lower()
    return x


class Report:
    """Collects one command's output; stats come from graphs built meanwhile."""

    def __init__(self, command: str, input_name: Optional[str], params: dict):
        self.command = command
        self.input = input_name
        self.params = {k: _jsonable(v) for k, v in params.items()}
        self.result: dict[str, Any] = {}
        self.lines: list[str] = []
        self._log_mark = len(BUILD_LOG)
        self._t0 = time.perf_counter()
        self.states = 0
        self.arcs = 0

    def add(self, **kv) -> None:
        self.result.update({k: _jsonable(v) for k, v in kv.items()})

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def finish(self, as_json: bool) -> str:
        built = BUILD_LOG[self._log_mark:]
        states = self.states + sum(e[3] for e in built)
        arcs = self.arcs + sum(e[4] for e in built)
        millis = round((time.perf_counter() - self._t0) * 1000, 1)
        if as_json:
            return json.dumps({
                "command": self.command,
                "input": self.input,
                "params": self.params,
                "result": self.result,
                "stats": {"states": states, "arcs": arcs, "millis": millis},
            }, sort_keys=True)
        return "\n".join(self.lines)


def argv_from_report(report: dict) -> list[str]:
    """Command line equivalent to the one that produced ``report``."""
    argv = [report["command"]]
    for k, v in report["params"].items():
        flag = "--" + k.replace("_", "-")
        if v is True:
            argv.append(flag)
        elif v is False or v is None:
            continue
        elif isinstance(v, list):
            for item in v:
                argv += [flag, str(item)]
        else:
            argv += [flag, str(v)]
    if report["input"] is not None:
        argv.append(report["input"])
    return argv


# -- helpers -----------------------------------------------------------------

def _load_board(path: str):
    text, name = read_text(path)
    return parse_board(text, name)


def _load_graph(path: str):
    text, name = read_text(path)
    return parse_graph(text, name)


def _spec(args) -> GameSpec:
    return GameSpec(args.a, args.b, Rule.SLIDING if args.sliding else Rule.JUMPING)


# -- commands ----------------------------------------------------------------

def cmd_solve(args) -> Report:
    board = _load_board(args.file)
    spec = _spec(args)
    rep = Report("solve", args.file, {"a": args.a, "b": args.b, "sliding": args.sliding, "compress": args.compress})
    sol = solve_position(board.hypergraph, spec, board.position, cap=state_cap(), compress=args.compress)
    first = str(sol.first_move) if sol.first_move is not None else None
    rep.add(winner=sol.winner, distance=sol.distance, first_move=first)
    rep.say(f"game      {spec}")
    rep.say(f"winner    {sol.winner.name.lower()}")
    rep.say(f"distance  {sol.distance if sol.distance is not None else '-'}")
    rep.say(f"first     {first or '-'}")
    rep.say(f"states    {sol.states}")
    rep.say(f"arcs      {sol.arcs}")
    return rep


def cmd_oracle(args) -> Report:
    board = _load_board(args.file)
    spec = _spec(args)
    rep = Report("oracle", args.file, {"a": args.a, "b": args.b, "sliding": args.sliding})
    w = minimax_oracle(board.hypergraph, spec, board.position)
    rep.add(winner=w)
    rep.say(f"game    {spec}")
    rep.say(f"winner  {w.name.lower()}")
    return rep


def _threshold_cmd(name: str, fn: Callable[..., float]):
    def run(args) -> Report:
        board = _load_board(args.file)
        if board.position.maker or board.position.breaker:
            raise UsageError(f"{name} is defined for the empty position; {args.file} places tokens")
        rep = Report(name, args.file, {})
        value = fn(board.hypergraph, cap=state_cap())
        rep.add(**{name: value})
        rep.say(f"{name}  {'inf' if math.isinf(value) else value}")
        return rep
    return run


def _gen_board(args) -> tuple[Position, Optional[object]]:
    fam = args.family
    need = {
        "nunchaku": ["L"], "necklace": ["L"], "diamond-nunchaku": ["n"], "k-vs-1": ["k"],
        "biggap": ["k", "n"], "bigtheta": ["N"], "random": ["n", "m"],
    }[fam]
    for p in need:
        if getattr(args, p) is None:
            raise UsageError(f"gen {fam} needs --{p}")
    if fam == "nunchaku":
        return cons.nunchaku(args.L), None
    if fam == "necklace":
        return cons.necklace(args.L), None
    if fam == "diamond-nunchaku":
        return Position(cons.diamond_nunchaku(args.n)), None
    if fam == "k-vs-1":
        return Position(cons.k_vs_1(args.k)), None
    if fam == "biggap":
        return Position(cons.biggap(args.k, args.n)), None
    if fam == "bigtheta":
        h, pi = cons.bigtheta(args.N)
        return Position(h), pi
    rng = random.Random(args.seed)
    if args.k is not None:
        return Position(cons.random_uniform(rng, args.n, args.k, args.m)), None
    return Position(cons.random_hypergraph(rng, args.n, args.m, args.p)), None


def cmd_gen(args) -> Report:
    params = {"L": args.L, "n": args.n, "k": args.k, "N": args.N, "m": args.m}
    if args.family == "random":
        params.update(seed=args.seed, p=args.p)
    params = {k: v for k, v in params.items() if v is not None}
    rep = Report("gen", args.family, params)
    p, pi = _gen_board(args)
    text = format_board(p, pi)
    rep.add(board=text)
    if args.output:
        Path(args.output).write_text(text)
        rep.say(f"wrote {args.output} ({p.hypergraph.n} vertices, {p.hypergraph.m} edges)")
    else:
        rep.say(text.rstrip("\n"))
    return rep


def cmd_reduce(args) -> Report:
    board = _load_board(args.file)
    if board.position.maker or board.position.breaker:
        raise UsageError(f"reduce solves the empty position; {args.file} places tokens")
    rep = Report("reduce", args.file, {"a": args.a, "seed": args.seed})
    rng = random.Random(args.seed) if args.seed is not None else None
    res = solve_a1(board.hypergraph, args.a, rng)
    rep.add(winner=res.winner, trace=[str(c) for c in res.trace],
            final_edges=[list(e) for e in res.final_edges])
    for c in res.trace:
        rep.say(str(c))
    rep.say(f"winner  {res.winner.name.lower()}")
    return rep


def _make_strategy(kind: str, role: Player, params: dict, board):
    from . import strategies as st

    if kind == "pairing":
        if board.pairing is None:
            raise UsageError("--breaker pairing needs 'pair' lines in the board file")
        return st.PairingBreaker(board.pairing)
    try:
        return st.scripted_strategy(kind, **params)
    except KeyError as exc:
        raise UsageError(f"strategy {kind!r} needs --param {exc.args[0]}=...") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_params(items: Sequence[str]) -> dict:
    out: dict[str, Any] = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k] = int(v)
        except ValueError:
            out[k] = v
    return out


def cmd_arena(args) -> Report:
    from .strategies import arena

    board = _load_board(args.file)
    spec = _spec(args)
    params = _parse_params(args.param)
    rep = Report("arena", args.file, {
        "maker": args.maker, "breaker": args.breaker, "a": args.a, "b": args.b,
        "sliding": args.sliding, "max_rounds": args.max_rounds, "param": list(args.param)})
    maker = _make_strategy(args.maker, Player.MAKER, params, board)
    breaker = _make_strategy(args.breaker, Player.BREAKER, params, board)
    res = arena(maker, breaker, board.hypergraph, spec, board.position, args.max_rounds)
    rep.add(verdict=res.verdict.value, rounds=res.rounds, reason=res.reason,
            max_maker_tokens=res.max_maker_tokens, transcript=[str(t).strip() for t in res.transcript])
    for t in res.transcript:
        rep.say(str(t))
    rep.say(f"verdict  {res.verdict.value} after {res.rounds} rounds ({res.reason})")
    return rep


def cmd_ed_solve(args) -> Report:
    from .sliding import ed_attacker_wins

    g, guards = _load_graph(args.file)
    rep = Report("ed-solve", args.file, {})
    attacker = ed_attacker_wins(g, guards)
    rep.add(winner="attacker" if attacker else "defender")
    rep.say(f"winner  {'attacker' if attacker else 'defender'}")
    return rep


def cmd_ed_reduce(args) -> Report:
    from .sliding import build_sliding_position

    g, guards = _load_graph(args.file)
    rep = Report("ed-reduce", args.file, {"output": args.output})
    if not guards:
        raise UsageError(f"{args.file}: the reduction needs at least one 'guard'")
    h, p, spec = build_sliding_position(g, guards)
    text = f"# play as the ({spec.a},{spec.b}) sliding game\n" + format_board(p)
    rep.add(board=text, a=spec.a, b=spec.b, rule=spec.rule.value)
    if args.output:
        Path(args.output).write_text(text)
        rep.say(f"wrote {args.output}; solve with --a {spec.a} --b {spec.b} --sliding")
    else:
        rep.say(text.rstrip("\n"))
    return rep


def cmd_ed_check(args) -> Report:
    from .sliding import check_reduction_equivalence

    g, guards = _load_graph(args.file)
    if not guards:
        raise UsageError(f"{args.file}: the reduction needs at least one 'guard'")
    rep = Report("ed-check", args.file, {})
    r = check_reduction_equivalence(g, guards)
    rep.add(equivalent=r.holds, attacker_wins=r.attacker_wins, maker_wins=r.maker_wins)
    rep.say(f"domination   {'attacker' if r.attacker_wins else 'defender'} wins")
    rep.say(f"token game   {'maker' if r.maker_wins else 'breaker'} wins")
    rep.say(f"equivalent   {str(r.holds).lower()}")
    return rep


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .thresholds import tau, theta

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON report")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more logging")

    def budgets(sp):
        sp.add_argument("--a", type=budget_arg, required=True, help="Maker tokens (int or 'star')")
        sp.add_argument("--b", type=budget_arg, required=True, help="Breaker tokens (int or 'star')")
        sp.add_argument("--sliding", action="store_true", help="token-sliding rule (default jumping)")

    ap = argparse.ArgumentParser(prog="tokengame", description="Maker-Breaker token games.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", parents=[common], help="exact winner via the state graph")
    budgets(sp)
    sp.add_argument("--compress", action="store_true",
                    help="compressed states (jumping, --b star only)")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_solve)

    sp = sub.add_parser("oracle", parents=[common], help="winner via the brute-force oracle")
    budgets(sp)
    sp.add_argument("file")
    sp.set_defaults(run=cmd_oracle)

    for name, fn in (("theta", theta), ("tau", tau)):
        sp = sub.add_parser(name, parents=[common], help=f"compute {name}(H)")
        sp.add_argument("file")
        sp.set_defaults(run=_threshold_cmd(name, fn))

    sp = sub.add_parser("gen", parents=[common], help="emit a board from a family")
    sp.add_argument("family", choices=["nunchaku", "necklace", "diamond-nunchaku", "k-vs-1",
                                       "biggap", "bigtheta", "random"])
    sp.add_argument("--L", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--N", type=int)
    sp.add_argument("--m", type=int, help="edge count (random)")
    sp.add_argument("--p", type=float, default=0.5, help="vertex inclusion probability (random)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(run=cmd_gen)

    sp = sub.add_parser("reduce", parents=[common], help="(a,1) reduction with its trace")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--seed", type=int, help="contract random reducible pairs")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_reduce)

    sp = sub.add_parser("arena", parents=[common], help="play two strategies against each other")
    sp.add_argument("--maker", required=True,
                    choices=["forcing", "dichotomy", "regular", "random", "optimal"])
    sp.add_argument("--breaker", required=True, choices=["two-phase", "pairing", "optimal"])
    sp.add_argument("--a", type=budget_arg, default=STAR)
    sp.add_argument("--b", type=budget_arg, default=STAR)
    sp.add_argument("--sliding", action="store_true")
    sp.add_argument("--max-rounds", type=int)
    sp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                    help="strategy parameter, e.g. L=4, family=necklace, seed=3")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_arena)

    sp = sub.add_parser("ed-solve", parents=[common], help="eternal domination winner")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_ed_solve)

    sp = sub.add_parser("ed-reduce", parents=[common], help="emit the equivalent sliding board")
    sp.add_argument("-o", "--output")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_ed_reduce)

    sp = sub.add_parser("ed-check", parents=[common], help="solve both games and compare")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_ed_check)
    return ap


def run_command(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        rep = args.run(args)
    except (UsageError, FormatError, OSError, ValueError) as exc:
        print(f"tokengame {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StateLimitExceeded, OracleLimitExceeded, SearchLimitExceeded) as exc:
        print(f"tokengame {args.command}: scale cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = rep.finish(args.json)
    if text:
        print(text, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
