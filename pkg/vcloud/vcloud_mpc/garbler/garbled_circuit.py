"""
Garbled tables, garbled values and their wire format

A garbled value is an integer of nk+1 bits: party 1's k-bit share in the most
significant position, party n's share just above the signal bit in the LSB.

Tables travel as a 39-byte header (n: 1 byte, k: 2 bytes, N_g: 4 bytes, circuit
digest: 32 bytes) followed by the 4 N_g entries as one contiguous big-endian bit
string, gate by gate, entry index 2a + b within a gate. Share messages from the
garblers use the same layout.
"""

from dataclasses import dataclass
from functools import cached_property

from vcloud.vcloud_mpc.utils.bits import pack_fields, unpack_fields
from vcloud.vcloud_mpc.utils.errors import ParameterError, SessionMismatch, throw

GC_HEADER_BYTES = 39
DIGEST_BYTES = 32


def value_bits(n: int, k: int) -> int:
    return n * k + 1


def join_garbled_value(parts: list[int], signal: int, k: int) -> int:
    value = 0
    for part in parts:
        if part < 0 or part >> k:
            throw(f"garbled value share must be {k} bits", ParameterError)
        value = (value << k) | part
    return (value << 1) | (signal & 1)


def split_garbled_value(value: int, n: int, k: int) -> tuple[list[int], int]:
    """(per-party k-bit parts, signal bit)"""
    if value < 0 or value >> value_bits(n, k):
        throw(f"garbled value must be {value_bits(n, k)} bits", ParameterError)
    signal = value & 1
    rest = value >> 1
    mask = (1 << k) - 1
    parts = [(rest >> (k * (n - 1 - i))) & mask for i in range(n)]
    return parts, signal


def entry_id(a: int, b: int) -> int:
    return 2 * (a & 1) + (b & 1)


@dataclass(frozen=True)
class GarbledTables:
    """A garbled circuit, or one garbler's XOR share of it"""

    n: int
    k: int
    digest: bytes
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) % 4:
            throw("garbled tables need four entries per gate", ParameterError)
        if len(self.digest) != DIGEST_BYTES:
            throw("circuit digest must be 32 bytes", ParameterError)

    @property
    def N_g(self) -> int:
        return len(self.entries) // 4

    @cached_property
    def value_bits(self) -> int:
        return value_bits(self.n, self.k)

    @property
    def table_bits(self) -> int:
        return len(self.entries) * self.value_bits

    @property
    def nominal_bits(self) -> int:
        """Header plus tables, what the traffic ledger counts for one GC message"""
        return 8 * GC_HEADER_BYTES + self.table_bits

    def entry(self, gate_id: int, a: int, b: int) -> int:
        return self.entries[4 * gate_id + entry_id(a, b)]

    def same_shape(self, other: "GarbledTables") -> bool:
        return (self.n, self.k, self.digest, self.N_g) == (other.n, other.k, other.digest, other.N_g)

    def __xor__(self, other: "GarbledTables") -> "GarbledTables":
        if not self.same_shape(other):
            throw("cannot combine garbled tables of different shape", ParameterError)
        return GarbledTables(self.n, self.k, self.digest, tuple(x ^ y for x, y in zip(self.entries, other.entries)))


def encode_tables(tables: GarbledTables) -> bytes:
    header = (
        tables.n.to_bytes(1, "big")
        + tables.k.to_bytes(2, "big")
        + tables.N_g.to_bytes(4, "big")
        + tables.digest
    )
    body = pack_fields(tables.entries, [tables.value_bits] * len(tables.entries))
    return header + body


def decode_tables(data: bytes) -> GarbledTables:
    if len(data) < GC_HEADER_BYTES:
        throw("garbled circuit message shorter than its header", SessionMismatch)
    n = data[0]
    k = int.from_bytes(data[1:3], "big")
    n_gates = int.from_bytes(data[3:7], "big")
    digest = data[7:GC_HEADER_BYTES]
    if n < 1 or k < 1:
        throw(f"garbled circuit header has n={n} k={k}", SessionMismatch)
    try:
        entries = unpack_fields(data[GC_HEADER_BYTES:], [value_bits(n, k)] * (4 * n_gates))
    except ValueError as e:
        throw(f"garbled circuit body does not match its header: {e}", SessionMismatch)
    return GarbledTables(n, k, digest, tuple(entries))


def encode_values(values: list[int], n: int, k: int) -> tuple[bytes, int]:
    """Garbled inputs or outputs as one bit string; (payload, nominal bits)"""
    widths = [value_bits(n, k)] * len(values)
    try:
        return pack_fields(values, widths), sum(widths)
    except ValueError as e:
        throw(f"garbled value out of range: {e}", ParameterError)


def decode_values(data: bytes, n: int, k: int, count: int) -> list[int]:
    try:
        return unpack_fields(data, [value_bits(n, k)] * count)
    except ValueError as e:
        throw(f"expected {count} garbled values: {e}", SessionMismatch)
