"""
Plain-text reports printed by the CLI commands
"""

from vcloud import hooks
from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.client.session import CloudSession, SessionResult
from vcloud.vcloud_mpc.cost_model.formulas import client_bits, megabits, megabytes
from vcloud.vcloud_mpc.cost_model.predict import cost_params, predict_ledger, predict_random_bits
from vcloud.vcloud_mpc.simnet.ledger import Phase


def gate_count_line(circuit: BooleanCircuit) -> str:
    xor_count, and_count = circuit.gate_counts()
    return f"XOR={xor_count} AND={and_count}"


def circuit_info(circuit: BooleanCircuit) -> list[str]:
    lines = [
        f"circuit {circuit.name}",
        f"W={circuit.W} W_i={circuit.W_i} W_o={circuit.W_o} N_g={circuit.N_g}",
        gate_count_line(circuit),
    ]
    report = circuit.count_report()
    if report.breakdown:
        lines.append("blocks:")
        lines.extend(f"  {label:<10} XOR={x} AND={a}" for label, (x, a) in report.breakdown.items())
    return lines


def ledger_vs_model(session: CloudSession) -> list[str]:
    p = session.params
    predicted = predict_ledger(session.circuit, p.n, p.k, session.group.p_bits, p.modulus_bits)
    ledger = session.network.ledger
    lines = [f"{'phase':<18} {'measured':>12} {'model':>12} {'delta':>8}"]
    for phase in Phase:
        measured = ledger.payload_bits(phase)
        lines.append(f"{phase.label:<18} {measured:>12} {predicted[phase]:>12} {measured - predicted[phase]:>8}")
    framing = ledger.framing_bytes()
    lines.append(f"framing bytes (not modelled): {framing}")
    expected_client = client_bits(cost_params(session.circuit, p.n, p.k, session.group.p_bits, p.modulus_bits))
    lines.append(f"client bits: {session.client_ledger.total} (model {expected_client})")
    return lines


def randomness_vs_model(session: CloudSession) -> list[str]:
    p = session.params
    expected = predict_random_bits(session.circuit, p.n, p.k, session.group.p_bits)
    measured = list(session.garbler_stats.values())
    rows = [
        ("b1 bbs", sum(s.bbs_bits for s in measured), expected.b1),
        ("b2 expander", sum(s.g_bits for s in measured), expected.b2),
        ("b3 sharing", sum(s.r_bits for s in measured), expected.b3),
        ("b4 ot", sum(s.ot_random_bits for s in measured), expected.b4),
    ]
    return [f"{name:<18} {got:>12} {want:>12} {got - want:>8}" for name, got, want in rows]


def full_accounting(circuit: BooleanCircuit, n: int) -> list[str]:
    """Costs of the same circuit at full-size parameters, computed, not run"""
    k, p_bits, modulus_bits = hooks.accounting_profile["k"], hooks.accounting_profile["p_bits"], hooks.accounting_profile["modulus_bits"]
    traffic = sum(predict_ledger(circuit, n, k, p_bits, modulus_bits).values())
    server_random = predict_random_bits(circuit, n, k, p_bits).total
    client = client_bits(cost_params(circuit, n, k, p_bits, modulus_bits))
    return [
        f"full-size accounting (n={n} k={k} |p|={p_bits} |N|={modulus_bits})",
        f"  traffic        {traffic} bits ({megabytes(traffic):.2f} MB)",
        f"  server random  {server_random} bits ({megabits(server_random):.2f} Mbit)",
        f"  client bits    {client} bits",
    ]


def verdict_lines(result: SessionResult) -> list[str]:
    if result.accepted:
        return ["verification: accepted"]
    return [f"verification: REJECTED (first mismatching output {result.verdict.first_mismatch})"]


def timing_line(result: SessionResult) -> str:
    return "timings: " + " ".join(f"{name}={seconds:.3f}s" for name, seconds in result.timings.items())
