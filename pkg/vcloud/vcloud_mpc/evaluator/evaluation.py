"""
Evaluation of a garbled circuit by p_e

For gate (x, y, z) holding garbled values alpha (signal a) and beta (signal b):

    gamma = A_ab ^ XOR_i G_b(alpha_i) ^ XOR_i G_a(beta_i)

Each wire value is expanded once into its n parts' (G0, G1) pairs, so a run costs
n expander calls per consumed wire. The evaluator never sees a wire mask.
"""

import random
from dataclasses import dataclass

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables, split_garbled_value, value_bits
from vcloud.vcloud_mpc.randomness.expanders import expand_pair
from vcloud.vcloud_mpc.schemas.params_schemas import CheatMode
from vcloud.vcloud_mpc.utils.errors import EvaluatorError, InputArityError, throw
from vcloud.vcloud_mpc.utils.logger import logger


@dataclass
class EvaluatorStats:
    """
    expander_calls counts n per wire some gate reads, i.e. n * len(circuit.consumed_wires).
    The closed form (W - W_o) * n agrees when the consumed wires are exactly the
    non-output wires; an output wire that also feeds a gate adds n, an unread
    non-output wire takes n away.
    """

    expander_calls: int = 0
    gates: int = 0


def _check(gc: GarbledTables, circuit: BooleanCircuit, garbled_inputs: list[int]) -> None:
    if gc.digest != circuit.digest or gc.N_g != circuit.N_g:
        throw(f"garbled circuit does not belong to {circuit.name}", EvaluatorError)
    if len(garbled_inputs) != circuit.W_i:
        throw(f"expected {circuit.W_i} garbled inputs, got {len(garbled_inputs)}", InputArityError)
    width = gc.value_bits
    if any(v < 0 or v >> width for v in garbled_inputs):
        throw(f"garbled inputs must be {width} bits", EvaluatorError)


def evaluate(
    gc: GarbledTables, circuit: BooleanCircuit, garbled_inputs: list[int], stats: EvaluatorStats | None = None
) -> list[int]:
    """Garbled values of the output wires, in circuit output order"""
    _check(gc, circuit, garbled_inputs)
    n, k = gc.n, gc.k
    stats = stats if stats is not None else EvaluatorStats()
    values: list[int | None] = [None] * circuit.W
    for wire, value in zip(circuit.inputs, garbled_inputs):
        values[wire] = value
    expansions: dict[int, list[tuple[int, int]]] = {}

    def expanded(wire: int) -> list[tuple[int, int]]:
        if wire not in expansions:
            parts, _ = split_garbled_value(values[wire], n, k)
            expansions[wire] = [expand_pair(part, k, n) for part in parts]
            stats.expander_calls += n
        return expansions[wire]

    for gate_id, gate in enumerate(circuit.gates):
        alpha, beta = values[gate.left], values[gate.right]
        a, b = alpha & 1, beta & 1
        gamma = gc.entry(gate_id, a, b)
        for pair in expanded(gate.left):
            gamma ^= pair[b]
        for pair in expanded(gate.right):
            gamma ^= pair[a]
        values[gate.out] = gamma
        stats.gates += 1
    return [values[w] for w in circuit.outputs]


def evaluate_cheating(
    gc: GarbledTables,
    circuit: BooleanCircuit,
    garbled_inputs: list[int],
    cheat: CheatMode,
    rng: random.Random | None = None,
) -> list[int]:
    """A dishonest evaluator's outputs, what verification must catch"""
    width = value_bits(gc.n, gc.k)
    if cheat.kind == "random-outputs":
        rng = rng or random.SystemRandom()
        _check(gc, circuit, garbled_inputs)
        outputs = [rng.getrandbits(width) for _ in circuit.outputs]
    else:
        outputs = evaluate(gc, circuit, garbled_inputs)
        if cheat.wire >= len(outputs) or cheat.pos >= width:
            throw(f"cannot flip bit {cheat.pos} of output {cheat.wire}", EvaluatorError)
        outputs[cheat.wire] ^= 1 << cheat.pos
    logger("evaluator").warning(f"returning tampered outputs ({cheat.kind})")
    return outputs
