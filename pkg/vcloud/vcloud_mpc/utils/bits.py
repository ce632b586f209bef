"""
Bit and byte packing shared by every module

Integers that stand for circuit values are exchanged as LSB-first bit lists.
Bit lists on the wire are packed little-endian within each byte.
Fixed-width integers (group elements, garbled values, seeds) are big-endian.
"""


def byte_len(nbits: int) -> int:
    return (nbits + 7) // 8


def int_to_bits(value: int, width: int) -> list[int]:
    """LSB-first bit list of ``value``"""
    return [(value >> i) & 1 for i in range(width)]


def bits_to_int(bits) -> int:
    """Inverse of int_to_bits"""
    value = 0
    for i, bit in enumerate(bits):
        value |= (bit & 1) << i
    return value


def int_to_msb_bits(value: int, width: int) -> list[int]:
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def msb_bits_to_int(bits) -> int:
    value = 0
    for bit in bits:
        value = (value << 1) | (bit & 1)
    return value


def pack_bits(bits) -> bytes:
    out = bytearray(byte_len(len(bits)))
    for i, bit in enumerate(bits):
        if bit:
            out[i >> 3] |= 1 << (i & 7)
    return bytes(out)


def unpack_bits(data: bytes, count: int) -> list[int]:
    return [(data[i >> 3] >> (i & 7)) & 1 for i in range(count)]


def int_to_bytes(value: int, nbits: int) -> bytes:
    return value.to_bytes(byte_len(nbits), "big")


def bytes_to_int(data: bytes) -> int:
    return int.from_bytes(data, "big")


def popcount(value: int) -> int:
    return bin(value).count("1")


def pack_fields(values, widths) -> bytes:
    """Concatenate fixed-width unsigned fields into one big-endian bit string"""
    acc = 0
    total = 0
    for value, width in zip(values, widths, strict=True):
        if value < 0 or value >> width:
            raise ValueError(f"value does not fit in {width} bits")
        acc = (acc << width) | value
        total += width
    return int_to_bytes(acc << (8 * byte_len(total) - total), total)


def unpack_fields(data: bytes, widths) -> list[int]:
    widths = list(widths)
    total = sum(widths)
    if len(data) != byte_len(total):
        raise ValueError(f"expected {byte_len(total)} bytes, got {len(data)}")
    acc = bytes_to_int(data) >> (8 * len(data) - total)
    values = []
    for width in reversed(widths):
        values.append(acc & ((1 << width) - 1))
        acc >>= width
    return values[::-1]
