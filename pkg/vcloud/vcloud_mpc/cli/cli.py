"""
vcloud command line

    vcloud demo-adder --x 7 --y 9 [--bits 8] [run options]
    vcloud demo-atm --east 0 --south 0 [--locations-csv FILE] [run options]
    vcloud circuit info|check|convert PATH [--output FILE]
    vcloud analyze [--n-min 2 --n-max 8 --k 128 --p-bits 3072 --modulus-bits 3072] [--circuit PATH] [--csv FILE]

Exit codes: 0 ok, 1 verification rejected, 2 usage or parameter error, 3 protocol error.
"""

import argparse
import random
import sys

from vcloud import __version__, hooks
from vcloud.vcloud_mpc.circuits.atm_locations import find_location, load_atm_locations
from vcloud.vcloud_mpc.circuits.builders import build_adder, build_nearest_atm
from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.circuits.circuit_format import read_circuit, serialize_circuit
from vcloud.vcloud_mpc.cli import reports
from vcloud.vcloud_mpc.client.session import CloudSession, SessionResult
from vcloud.vcloud_mpc.cost_model.predict import analysis_rows, to_csv, write_analysis_csv
from vcloud.vcloud_mpc.schemas import AnalyzeRequest, CircuitRequest, DemoAdderRequest, DemoAtmRequest, RunConfig
from vcloud.vcloud_mpc.utils import get_attr
from vcloud.vcloud_mpc.utils.bits import bits_to_int, int_to_bits
from vcloud.vcloud_mpc.utils.errors import ParameterError, VCloudError, throw
from vcloud.vcloud_mpc.utils.logger import logger
from vcloud.vcloud_mpc.utils.pydantic_validator import validate_command

REJECTED_EXIT_CODE = 1


def resolve_circuit(path: str) -> BooleanCircuit:
    """A circuit file, or ``builtin:<name>[:<width>]`` from the hooks registry"""
    if not path.startswith("builtin:"):
        return read_circuit(path)
    _, name, width = (path.split(":") + [""])[:3]
    if name not in hooks.circuit_builders:
        throw(f"unknown builtin circuit {name!r}, one of {', '.join(hooks.circuit_builders)}", ParameterError)
    builder = get_attr(hooks.circuit_builders[name])
    if not width:
        try:
            return builder()
        except TypeError:
            throw(f"builtin:{name} needs a width, e.g. builtin:{name}:8", ParameterError)
    if not width.isdigit():
        throw(f"width of builtin:{name} must be a number, got {width!r}", ParameterError)
    return builder(int(width))


def _run_session(config: RunConfig, circuit: BooleanCircuit, bits: list[int]) -> tuple[CloudSession, SessionResult]:
    session = CloudSession(
        circuit,
        config.protocol_params(),
        scheduler_seed=config.seed,
        threads=config.threads,
        cheat=config.cheat,
        rng=random.Random(config.seed),
    )
    result = session.run(bits)
    if config.csv:
        session.network.ledger.to_csv(config.csv)
    if config.out:
        session.network.export_trace(config.out)
    return session, result


def _print_run(config: RunConfig, session: CloudSession, result: SessionResult) -> None:
    p = config.protocol_params()
    print(f"parameters: n={p.n} k={p.k} |N|={p.modulus_bits} group={p.group_profile} seed={config.seed}")
    print(reports.gate_count_line(session.circuit))
    for line in reports.verdict_lines(result):
        print(line)
    print()
    for line in reports.ledger_vs_model(session):
        print(line)
    for line in reports.randomness_vs_model(session):
        print(line)
    if config.full_accounting:
        print()
        for line in reports.full_accounting(session.circuit, p.n):
            print(line)
    print(reports.timing_line(result), file=sys.stderr)


@validate_command(DemoAdderRequest)
def cmd_demo_adder(data: DemoAdderRequest) -> int:
    circuit = build_adder(data.bits)
    bits = int_to_bits(data.x, data.bits) + int_to_bits(data.y, data.bits) + [0]
    session, result = _run_session(data, circuit, bits)
    if result.accepted:
        print(f"{data.x} + {data.y} = {bits_to_int(result.outputs)}")
    _print_run(data, session, result)
    return 0 if result.accepted else REJECTED_EXIT_CODE


@validate_command(DemoAtmRequest)
def cmd_demo_atm(data: DemoAtmRequest) -> int:
    locations = load_atm_locations(data.locations_csv)
    circuit = build_nearest_atm(locations=locations)
    width = (circuit.W_i - 1) // 2
    session, result = _run_session(data, circuit, int_to_bits(data.east, width) + int_to_bits(data.south, width))
    if result.accepted:
        outputs = result.outputs
        east, south = bits_to_int(outputs[:width]), bits_to_int(outputs[width : 2 * width])
        distance = bits_to_int(outputs[2 * width :])
        location = find_location(locations, east, south)
        name = location.name if location else "unknown location"
        print(f"nearest: {name} at {south} South {east} East, distance {distance}")
    _print_run(data, session, result)
    return 0 if result.accepted else REJECTED_EXIT_CODE


@validate_command(CircuitRequest)
def cmd_circuit(data: CircuitRequest) -> int:
    circuit = resolve_circuit(data.path)
    if data.action == "info":
        for line in reports.circuit_info(circuit):
            print(line)
    elif data.action == "check":
        print(f"{data.path}: ok ({circuit.N_g} gates)")
    else:
        text = serialize_circuit(circuit)
        if data.output:
            data.output.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return 0


@validate_command(AnalyzeRequest)
def cmd_analyze(data: AnalyzeRequest) -> int:
    circuit = resolve_circuit(data.circuit)
    rows = analysis_rows(circuit, range(data.n_min, data.n_max + 1), data.k, data.p_bits, data.modulus_bits)
    if data.csv:
        to_csv(rows, data.csv)
    else:
        write_analysis_csv(rows, sys.stdout)
    return 0


def _run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="number of garblers")
    parser.add_argument("--k", type=int, help="security parameter in bits")
    parser.add_argument("--modulus-bits", type=int, help="BBS modulus size |N|")
    parser.add_argument("--group-profile", help="OT group profile (test, desk256)")
    parser.add_argument("--seed", type=int, help="scheduler and randomness seed")
    parser.add_argument("--cheat", help="evaluator misbehaviour: none, random, flip:<wire>:<pos>")
    parser.add_argument("--csv", help="write the traffic ledger as CSV")
    parser.add_argument("--out", help="write the message trace as JSON lines")
    parser.add_argument("--threads", action="store_true", default=None, help="one thread per party")
    parser.add_argument(
        "--full-accounting", action="store_true", default=None, help="also print costs at full-size parameters"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vcloud", description="Multi-server garbled-circuit cloud simulator")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    adder = commands.add_parser("demo-adder", help="add two integers end to end")
    adder.add_argument("--x", type=int, required=True)
    adder.add_argument("--y", type=int, required=True)
    adder.add_argument("--bits", type=int, help="adder width")
    _run_options(adder)
    adder.set_defaults(handler=cmd_demo_adder)

    atm = commands.add_parser("demo-atm", help="find the nearest ATM without revealing the location")
    atm.add_argument("--east", type=int, required=True, help="blocks East")
    atm.add_argument("--south", type=int, required=True, help="blocks South")
    atm.add_argument("--locations-csv", help="name,east,south table")
    _run_options(atm)
    atm.set_defaults(handler=cmd_demo_atm)

    circuit = commands.add_parser("circuit", help="inspect, check or convert a circuit")
    circuit.add_argument("action", choices=["info", "check", "convert"])
    circuit.add_argument("path", help="circuit file or builtin:<name>[:<width>]")
    circuit.add_argument("--output", help="destination of convert")
    circuit.set_defaults(handler=cmd_circuit)

    analyze = commands.add_parser("analyze", help="cost formulas over a range of n, as CSV")
    analyze.add_argument("--n-min", type=int)
    analyze.add_argument("--n-max", type=int)
    analyze.add_argument("--k", type=int)
    analyze.add_argument("--p-bits", type=int)
    analyze.add_argument("--modulus-bits", type=int)
    analyze.add_argument("--circuit", help="circuit file or builtin:<name>[:<width>]")
    analyze.add_argument("--csv", help="output file, stdout when omitted")
    analyze.set_defaults(handler=cmd_analyze)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except VCloudError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        logger("cli").error(f"{e}")
        print(f"error: {e}", file=sys.stderr)
        return ParameterError.exit_code
