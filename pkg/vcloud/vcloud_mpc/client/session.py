"""
End-to-end cloud session over the simulated network

construct() runs the first four steps: seeds to the garblers, distributed garbling,
combining at p_c, and the garbled circuit handed to p_e's store. evaluate() runs the
rest: garbled inputs to p_e, garbled outputs back, recovery and verification.
Several circuits may be constructed ahead of time; each evaluation consumes one.
"""

import random
import time
from collections import deque
from dataclasses import dataclass, field

from Crypto.Random import random as crypto_random

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.client.client_kit import (
    ClientLedger,
    ClientSecrets,
    Verdict,
    derive_garbled_inputs,
    expect_outputs,
    recover_and_verify,
    setup,
)
from vcloud.vcloud_mpc.evaluator.evaluation import EvaluatorStats
from vcloud.vcloud_mpc.evaluator.store import GarbledCircuitStore, evaluate_program, receive_program
from vcloud.vcloud_mpc.garbler.combiner import combiner_program
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables, decode_values, encode_values
from vcloud.vcloud_mpc.garbler.garbling import GarblerStats, garbler_program
from vcloud.vcloud_mpc.garbler.seed_message import encode_seed_message
from vcloud.vcloud_mpc.oblivious_transfer.group import get_group
from vcloud.vcloud_mpc.schemas.params_schemas import CheatMode, ProtocolParams
from vcloud.vcloud_mpc.simnet.ledger import Phase
from vcloud.vcloud_mpc.simnet.network import (
    CLIENT_ID,
    COMBINER_ID,
    EVALUATOR_ID,
    Network,
    PartyContext,
    PartyId,
    Recv,
    cloud_parties,
)
from vcloud.vcloud_mpc.simnet.scheduler import run_deterministic, run_threaded
from vcloud.vcloud_mpc.utils.errors import ClientError, throw
from vcloud.vcloud_mpc.utils.logger import logger


@dataclass
class SessionResult:
    verdict: Verdict
    garbled_outputs: list[int]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.verdict.accepted

    @property
    def outputs(self) -> list[int] | None:
        return self.verdict.outputs


class ShareDroppingContext(PartyContext):
    """Fault injection: a garbler that never delivers its share to p_c"""

    def send(self, dst, phase, payload, *, bits=None, session=0) -> None:
        if phase == Phase.SHARE_EXCHANGE:
            logger("session").warning(f"{self.party} drops its share")
            return
        super().send(dst, phase, payload, bits=bits, session=session)


class CloudSession:
    def __init__(
        self,
        circuit: BooleanCircuit,
        params: ProtocolParams,
        *,
        scheduler_seed: int = 0,
        threads: bool = False,
        cheat: CheatMode | None = None,
        drop_share_of: int | None = None,
        rng: random.Random | None = None,
    ):
        self.circuit = circuit
        self.params = params
        self.scheduler_seed = scheduler_seed
        self.threads = threads
        self.cheat = cheat
        self.drop_share_of = drop_share_of
        self.rng = rng
        self.group = get_group(params.group_profile)
        self.network = Network(cloud_parties(params.n))
        self.store = GarbledCircuitStore()
        self.client_ledger = ClientLedger()
        self.garbler_stats = {i: GarblerStats() for i in range(1, params.n + 1)}
        self.evaluator_stats = EvaluatorStats()
        self.timings: dict[str, float] = {}
        self._pending: deque[ClientSecrets] = deque()

    def _run(self, programs: dict) -> dict:
        if self.threads:
            return run_threaded(self.network, programs)
        return run_deterministic(self.network, programs, seed=self.scheduler_seed)

    def _ot_rng(self, party: int):
        if self.rng is None:
            return crypto_random
        return random.Random(self.rng.getrandbits(64) ^ party)

    def _garbler(self, index: int):
        p = self.params
        program = garbler_program(
            index, p.n, p.k, self.circuit, self.group, p.modulus_bits, self.garbler_stats[index], self._ot_rng(index)
        )
        if index != self.drop_share_of:
            return program
        return lambda ctx: program(ShareDroppingContext(ctx.network, ctx.party))

    def construct(self) -> GarbledTables:
        p = self.params
        started = time.perf_counter()
        secrets, messages = setup(p, self.circuit, self.rng, self.client_ledger)
        self.timings["setup"] = time.perf_counter() - started

        def client(ctx: PartyContext):
            for i, message in messages.items():
                payload, bits = encode_seed_message(message, p.n, p.k, p.modulus_bits)
                ctx.send(PartyId.garbler(i), Phase.SEED_DISTRIBUTION, payload, bits=bits)
            return None
            yield

        programs = {
            CLIENT_ID: client,
            COMBINER_ID: combiner_program(p.n, p.k, self.circuit),
            EVALUATOR_ID: receive_program(self.store),
        }
        programs.update({PartyId.garbler(i): self._garbler(i) for i in range(1, p.n + 1)})

        started = time.perf_counter()
        results = self._run(programs)
        self.timings["construct"] = time.perf_counter() - started
        self._pending.append(secrets)
        logger("session").info(f"constructed a garbled circuit for {self.circuit.name} in {self.timings['construct']:.2f}s")
        return results[EVALUATOR_ID]

    def evaluate(self, bits: list[int]) -> SessionResult:
        """``bits`` covers the caller's input wires; const_one is appended here"""
        if not self._pending:
            throw("no garbled circuit was constructed for this evaluation", ClientError)
        p = self.params
        secrets = self._pending.popleft()

        started = time.perf_counter()
        garbled_inputs = derive_garbled_inputs(secrets, self.circuit, self.circuit.with_constant(bits), self.client_ledger)
        expectations = expect_outputs(secrets, self.circuit, self.client_ledger)
        self.timings["client_inputs"] = time.perf_counter() - started

        def client(ctx: PartyContext):
            payload, nbits = encode_values(garbled_inputs, p.n, p.k)
            ctx.send(EVALUATOR_ID, Phase.GARBLED_INPUT, payload, bits=nbits)
            reply = yield Recv(EVALUATOR_ID)
            return decode_values(reply.payload, p.n, p.k, self.circuit.W_o)

        programs = {
            CLIENT_ID: client,
            EVALUATOR_ID: evaluate_program(
                self.store, self.circuit, p.n, p.k, self.cheat, self.evaluator_stats, self.rng
            ),
        }
        started = time.perf_counter()
        garbled_outputs = self._run(programs)[CLIENT_ID]
        self.timings["evaluate"] = time.perf_counter() - started

        verdict = recover_and_verify(expectations, garbled_outputs)
        return SessionResult(verdict, garbled_outputs, dict(self.timings))

    def run(self, bits: list[int]) -> SessionResult:
        self.construct()
        return self.evaluate(bits)
