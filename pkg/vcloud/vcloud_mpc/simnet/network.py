"""
In-process network of garblers, combiner, evaluator and client

Every ordered pair of parties has a FIFO channel. Frames carry an 8-byte header
(4-byte payload length, 1-byte phase, 3-byte session) which the ledger keeps apart
from the payload.
"""

import json
import threading
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

from vcloud.vcloud_mpc.simnet.ledger import Phase, TrafficLedger
from vcloud.vcloud_mpc.utils.errors import ParameterError, ProtocolError, throw

FRAME_HEADER_BYTES = 8
SESSION_MASK = (1 << 24) - 1

GARBLER = "garbler"
COMBINER = "combiner"
EVALUATOR = "evaluator"
CLIENT = "client"


@dataclass(frozen=True, order=True)
class PartyId:
    role: str
    index: int = 0

    def __str__(self) -> str:
        if self.role == GARBLER:
            return f"p{self.index}"
        return {COMBINER: "pc", EVALUATOR: "pe"}.get(self.role, self.role)

    @classmethod
    def garbler(cls, index: int) -> "PartyId":
        if index < 1:
            throw(f"garbler index starts at 1, got {index}")
        return cls(GARBLER, index)

    @property
    def is_garbler(self) -> bool:
        return self.role == GARBLER


COMBINER_ID = PartyId(COMBINER)
EVALUATOR_ID = PartyId(EVALUATOR)
CLIENT_ID = PartyId(CLIENT)


def cloud_parties(n: int) -> list[PartyId]:
    """The n garblers, the combiner, the evaluator and the client"""
    return [*(PartyId.garbler(i) for i in range(1, n + 1)), COMBINER_ID, EVALUATOR_ID, CLIENT_ID]


class Message(NamedTuple):
    src: PartyId
    dst: PartyId
    phase: Phase
    payload: bytes
    bits: int
    session: int


class Recv(NamedTuple):
    """Yielded by a party program to wait for the next message from ``src``"""

    src: PartyId


def encode_frame(message: Message) -> bytes:
    header = (
        len(message.payload).to_bytes(4, "big")
        + int(message.phase).to_bytes(1, "big")
        + (message.session & SESSION_MASK).to_bytes(3, "big")
    )
    return header + message.payload


def decode_frame(frame: bytes) -> tuple[Phase, int, bytes]:
    if len(frame) < FRAME_HEADER_BYTES:
        throw("truncated frame header", ProtocolError)
    length = int.from_bytes(frame[:4], "big")
    payload = frame[FRAME_HEADER_BYTES:]
    if len(payload) != length:
        throw(f"frame length {length} does not match payload of {len(payload)} bytes", ProtocolError)
    return Phase(frame[4]), int.from_bytes(frame[5:8], "big"), payload


@dataclass
class Channel:
    src: PartyId
    dst: PartyId
    queue: deque = field(default_factory=deque)
    sent_bytes: int = 0
    received_bytes: int = 0

    @property
    def queued_bytes(self) -> int:
        return sum(len(m.payload) for m in self.queue)


class Network:
    def __init__(self, parties: list[PartyId]):
        self.parties = list(dict.fromkeys(parties))
        self.channels = {(a, b): Channel(a, b) for a in self.parties for b in self.parties if a != b}
        self.ledger = TrafficLedger()
        self.trace: list[dict] = []
        self.finished: set[PartyId] = set()
        self.cond = threading.Condition()

    def channel(self, src: PartyId, dst: PartyId) -> Channel:
        try:
            return self.channels[(src, dst)]
        except KeyError:
            throw(f"no channel {src} -> {dst}", ParameterError)

    def context(self, party: PartyId) -> "PartyContext":
        if party not in self.parties:
            throw(f"{party} is not part of this network", ParameterError)
        return PartyContext(self, party)

    def deliver(self, message: Message) -> None:
        frame = encode_frame(message)
        with self.cond:
            channel = self.channel(message.src, message.dst)
            channel.queue.append(message)
            channel.sent_bytes += len(message.payload)
            self.ledger.record(
                message.phase,
                message.src,
                message.dst,
                message.bits,
                len(message.payload),
                len(frame) - len(message.payload),
            )
            self.trace.append(
                {
                    "step": len(self.trace),
                    "from": str(message.src),
                    "to": str(message.dst),
                    "phase": message.phase.label,
                    "bytes": len(message.payload),
                    "session": message.session,
                }
            )
            self.cond.notify_all()

    def take(self, src: PartyId, dst: PartyId) -> Message | None:
        """Pop the oldest message on src -> dst, None when empty"""
        with self.cond:
            channel = self.channel(src, dst)
            if not channel.queue:
                return None
            message = channel.queue.popleft()
            channel.received_bytes += len(message.payload)
            return message

    def mark_finished(self, party: PartyId) -> None:
        with self.cond:
            self.finished.add(party)
            self.cond.notify_all()

    def export_trace(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for entry in self.trace:
                fh.write(json.dumps(entry) + "\n")

    def trace_lines(self) -> list[str]:
        return [json.dumps(entry) for entry in self.trace]


class PartyContext:
    """A party's handle on the network; it can only send from its own endpoint"""

    def __init__(self, network: Network, party: PartyId):
        self.network = network
        self.party = party

    def send(self, dst: PartyId, phase: Phase, payload: bytes, *, bits: int | None = None, session: int = 0) -> None:
        if bits is None:
            bits = 8 * len(payload)
        if not 0 <= bits <= 8 * len(payload):
            throw(f"{bits} nominal bits do not fit in {len(payload)} bytes", ProtocolError)
        self.network.deliver(Message(self.party, dst, Phase(phase), bytes(payload), bits, session))
