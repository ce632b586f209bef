"""
One-time garbled circuits held by the evaluator between construction and evaluation
"""

import random
import threading

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.evaluator.evaluation import EvaluatorStats, evaluate, evaluate_cheating
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables, decode_tables, decode_values, encode_values
from vcloud.vcloud_mpc.schemas.params_schemas import CheatMode
from vcloud.vcloud_mpc.simnet.ledger import Phase
from vcloud.vcloud_mpc.simnet.network import CLIENT_ID, COMBINER_ID, PartyContext, Recv
from vcloud.vcloud_mpc.utils.errors import EvaluatorError, GarbledCircuitReuse, ProtocolError, throw
from vcloud.vcloud_mpc.utils.logger import logger


class GarbledCircuitStore:
    """Fresh circuits by digest, FIFO per digest; a taken circuit can never be taken again"""

    def __init__(self):
        self._fresh: dict[bytes, list[GarbledTables]] = {}
        self._spent: set[GarbledTables] = set()
        self._lock = threading.Lock()

    def put(self, gc: GarbledTables) -> None:
        with self._lock:
            if gc in self._spent:
                throw("garbled circuit was already evaluated", GarbledCircuitReuse)
            self._fresh.setdefault(gc.digest, []).append(gc)

    def take(self, digest: bytes) -> GarbledTables:
        with self._lock:
            queue = self._fresh.get(digest)
            if not queue:
                if any(spent.digest == digest for spent in self._spent):
                    throw("every garbled circuit for this computation is spent", GarbledCircuitReuse)
                throw("no garbled circuit for this computation", EvaluatorError)
            gc = queue.pop(0)
            self._spent.add(gc)
            return gc

    def fresh_count(self, digest: bytes | None = None) -> int:
        with self._lock:
            if digest is not None:
                return len(self._fresh.get(digest, []))
            return sum(len(q) for q in self._fresh.values())


def receive_program(store: GarbledCircuitStore):
    """p_e during construction: keep the circuit the combiner sends"""

    def program(ctx: PartyContext):
        message = yield Recv(COMBINER_ID)
        try:
            gc = decode_tables(message.payload)
        except ProtocolError as e:
            throw(f"garbled circuit from p_c is malformed: {e}", EvaluatorError)
        store.put(gc)
        return gc

    return program


def evaluate_program(
    store: GarbledCircuitStore,
    circuit: BooleanCircuit,
    n: int,
    k: int,
    cheat: CheatMode | None = None,
    stats: EvaluatorStats | None = None,
    rng: random.Random | None = None,
):
    """p_e during evaluation: garbled inputs in, garbled outputs back to the client"""

    def program(ctx: PartyContext):
        message = yield Recv(CLIENT_ID)
        garbled_inputs = decode_values(message.payload, n, k, circuit.W_i)
        gc = store.take(circuit.digest)
        if cheat is None:
            outputs = evaluate(gc, circuit, garbled_inputs, stats)
        else:
            outputs = evaluate_cheating(gc, circuit, garbled_inputs, cheat, rng)
        payload, bits = encode_values(outputs, n, k)
        ctx.send(CLIENT_ID, Phase.GARBLED_OUTPUT, payload, bits=bits)
        logger("evaluator").info(f"evaluated {circuit.N_g} gates of {circuit.name}")
        return outputs

    return program
