"""
Wire encoding of batched 1-of-4 OT rounds

A batch of t sessions travels in three frames, each a contiguous big-endian bit string
of fixed-width fields (|p| bits per group element, k bits per masked value):

    open   sender -> chooser   C_L, C_R                                  per session
    reply  chooser -> sender   PK0_L, PK0_R                              per session
    final  sender -> chooser   (g^r, m) x 4 for L0 L1 R0 R1, E00..E11    per session

so one session costs 2|p| + 2|p| + (4|p| + 8k) = 8(|p| + k) payload bits.
"""

from vcloud.vcloud_mpc.utils.bits import pack_fields, unpack_fields
from vcloud.vcloud_mpc.utils.errors import SessionMismatch, throw


def open_widths(p_bits: int, k: int) -> list[int]:
    return [p_bits, p_bits]


def reply_widths(p_bits: int, k: int) -> list[int]:
    return [p_bits, p_bits]


def final_widths(p_bits: int, k: int) -> list[int]:
    return [p_bits, k] * 4 + [k] * 4


def session_bits(p_bits: int, k: int) -> int:
    return sum(open_widths(p_bits, k) + reply_widths(p_bits, k) + final_widths(p_bits, k))


def encode_rows(rows, widths: list[int]) -> tuple[bytes, int]:
    """(payload, nominal bit length)"""
    values = [value for row in rows for value in row]
    all_widths = widths * len(rows)
    return pack_fields(values, all_widths), sum(all_widths)


def decode_rows(data: bytes, widths: list[int], count: int) -> list[list[int]]:
    try:
        values = unpack_fields(data, widths * count)
    except ValueError as e:
        throw(f"malformed OT batch: {e}", SessionMismatch)
    step = len(widths)
    return [values[i : i + step] for i in range(0, len(values), step)]


def flatten_final(e_left, e_right, ciphertexts) -> list[int]:
    """Order of the final-frame fields for one session"""
    (l0, l1), (r0, r1) = e_left, e_right
    return [*l0, *l1, *r0, *r1, *ciphertexts]


def split_final(row: list[int]):
    l0, l1, r0, r1 = (tuple(row[i : i + 2]) for i in range(0, 8, 2))
    return (l0, l1), (r0, r1), tuple(row[8:12])
