"""
Per-phase, per-channel traffic ledger
"""

import csv
import threading
from collections import defaultdict
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import TextIO


class Phase(IntEnum):
    SEED_DISTRIBUTION = 1
    OT = 2
    SHARE_EXCHANGE = 3
    GC_TRANSFER = 4
    GARBLED_INPUT = 5
    GARBLED_OUTPUT = 6

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")


@dataclass
class LedgerRow:
    frames: int = 0
    payload_bits: int = 0
    payload_bytes: int = 0
    framing_bytes: int = 0


CSV_FIELDS = ["phase", "from", "to", "frames", "payload_bits", "payload_bytes", "framing_bytes"]


class TrafficLedger:
    """
    Payload is counted twice: nominal bits (exact field widths, what the cost
    formulas predict) and encoded bytes. Frame headers are kept apart.
    """

    def __init__(self):
        self.rows: dict[tuple, LedgerRow] = defaultdict(LedgerRow)
        self._lock = threading.Lock()

    def record(self, phase: Phase, src, dst, payload_bits: int, payload_bytes: int, framing_bytes: int) -> None:
        with self._lock:
            row = self.rows[(phase, src, dst)]
            row.frames += 1
            row.payload_bits += payload_bits
            row.payload_bytes += payload_bytes
            row.framing_bytes += framing_bytes

    def _select(self, phase=None, src=None, dst=None):
        for (p, s, d), row in self.rows.items():
            if (phase is None or p == phase) and (src is None or s == src) and (dst is None or d == dst):
                yield row

    def payload_bits(self, phase: Phase | None = None, src=None, dst=None) -> int:
        return sum(row.payload_bits for row in self._select(phase, src, dst))

    def payload_bytes(self, phase: Phase | None = None, src=None, dst=None) -> int:
        return sum(row.payload_bytes for row in self._select(phase, src, dst))

    def framing_bytes(self, phase: Phase | None = None, src=None, dst=None) -> int:
        return sum(row.framing_bytes for row in self._select(phase, src, dst))

    def frames(self, phase: Phase | None = None, src=None, dst=None) -> int:
        return sum(row.frames for row in self._select(phase, src, dst))

    def phase_totals(self) -> dict[Phase, int]:
        """Payload bits per phase, every phase present"""
        return {phase: self.payload_bits(phase) for phase in Phase}

    def merge(self, other: "TrafficLedger") -> None:
        for key, row in other.rows.items():
            mine = self.rows[key]
            mine.frames += row.frames
            mine.payload_bits += row.payload_bits
            mine.payload_bytes += row.payload_bytes
            mine.framing_bytes += row.framing_bytes

    def snapshot(self) -> dict:
        return {key: (row.frames, row.payload_bits, row.payload_bytes, row.framing_bytes) for key, row in sorted(self.rows.items())}

    def __eq__(self, other) -> bool:
        return isinstance(other, TrafficLedger) and self.snapshot() == other.snapshot()

    def write_csv(self, fh: TextIO) -> None:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for (phase, src, dst), row in sorted(self.rows.items()):
            writer.writerow(
                [phase.label, str(src), str(dst), row.frames, row.payload_bits, row.payload_bytes, row.framing_bytes]
            )

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            self.write_csv(fh)
