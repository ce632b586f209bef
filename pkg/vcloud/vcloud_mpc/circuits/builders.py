"""
Parameterized builders: adder, subtractor, Manhattan distance, MIN tree, nearest ATM

All integers are LSB-first literal lists. Per-bit costs:
ADD/SUB 4 XOR + 1 AND, CMP 3 XOR + 1 AND, MUX 2 XOR + 1 AND, INV 1 XOR.
"""

from vcloud.vcloud_mpc.circuits.atm_locations import load_atm_locations
from vcloud.vcloud_mpc.circuits.builder import CircuitBuilder, Lit
from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit, require_width
from vcloud.vcloud_mpc.schemas.params_schemas import AtmLocation
from vcloud.vcloud_mpc.utils.errors import ParameterError, throw

ATM_COORDINATE_BITS = 11


def add_block(b: CircuitBuilder, x: list[Lit], y: list[Lit], carry: Lit) -> list[Lit]:
    """x + y + carry as len(x)+1 bits"""
    out = []
    c = carry
    for xi, yi in zip(x, y, strict=True):
        t1 = b.xor(xi, c)
        t2 = b.xor(yi, c)
        out.append(b.xor(t1, yi))
        c = b.xor(c, b.and_(t1, t2))
    out.append(c)
    return out


def sub_block(b: CircuitBuilder, x: list[Lit], y: list[Lit]) -> tuple[list[Lit], Lit]:
    """x + ~y + 1; returns the low bits and the sign (complement of the final carry)"""
    out = []
    c = b.constant(1)
    for xi, yi in zip(x, y, strict=True):
        ny = ~yi
        t1 = b.xor(xi, c)
        t2 = b.xor(ny, c)
        out.append(b.xor(t1, ny))
        c = b.xor(c, b.and_(t1, t2))
    return out, ~c


def inv_block(b: CircuitBuilder, d: list[Lit], sign: Lit) -> list[Lit]:
    return [b.xor(di, sign) for di in d]


def inc_block(b: CircuitBuilder, v: list[Lit], carry: Lit) -> list[Lit]:
    """Adds one bit to v; the top bit takes the last carry with a single XOR"""
    out = []
    c = carry
    for vi in v[:-1]:
        out.append(b.xor(vi, c))
        c = b.and_(vi, c)
    out.append(b.xor(v[-1], c))
    return out


def cmp_block(b: CircuitBuilder, x: list[Lit], y: list[Lit]) -> Lit:
    """1 iff x > y, i.e. the right operand is strictly smaller"""
    c = b.constant(0)
    for xi, yi in zip(x, y, strict=True):
        t1 = b.xor(xi, c)
        t2 = b.xor(yi, c)
        c = b.xor(xi, b.and_(t1, t2))
    return c


def mux_block(b: CircuitBuilder, select: Lit, left: list[Lit], right: list[Lit]) -> list[Lit]:
    """left when select is 0, right when select is 1"""
    return [b.xor(li, b.and_(b.xor(li, ri), select)) for li, ri in zip(left, right, strict=True)]


def abs_diff_block(b: CircuitBuilder, x: list[Lit], y: list[Lit]) -> tuple[list[Lit], Lit]:
    """|x - y| - sign, and sign; the missing +1 is added later by ADD / INC"""
    with b.block("SUB"):
        d, sign = sub_block(b, x, y)
    with b.block("INV"):
        e = inv_block(b, d, sign)
    return e, sign


def manhattan_block(b: CircuitBuilder, xa, ya, xb, yb) -> list[Lit]:
    ex, sx = abs_diff_block(b, xa, xb)
    ey, sy = abs_diff_block(b, ya, yb)
    with b.block("ADD"):
        total = add_block(b, ex, ey, sx)
    with b.block("INC"):
        return inc_block(b, total, sy)


def min_block(b: CircuitBuilder, left: tuple[list[Lit], list[Lit]], right: tuple[list[Lit], list[Lit]]):
    (lv, li), (rv, ri) = left, right
    with b.block("CMP"):
        select = cmp_block(b, lv, rv)
    with b.block("MUX-value"):
        value = mux_block(b, select, lv, rv)
    with b.block("MUX-index"):
        index = mux_block(b, select, li, ri)
    return value, index


def min_tree_block(b: CircuitBuilder, leaves: list[tuple[list[Lit], list[Lit]]]):
    """Balanced tree of MIN blocks; adjacent leaves pair up and an odd leaf moves up unchanged"""
    level = list(leaves)
    while len(level) > 1:
        paired = [min_block(b, level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]


def build_adder(l: int) -> BooleanCircuit:
    """Inputs x (l bits), y (l bits), carry-in; outputs x+y+carry as l+1 bits"""
    require_width("adder width", l)
    b = CircuitBuilder(f"adder{l}")
    x, y, carry = b.inputs(l), b.inputs(l), b.input()
    with b.block("ADD"):
        out = add_block(b, x, y, carry)
    return b.build(out)


def build_sub(l: int) -> BooleanCircuit:
    """Inputs x, y (l bits each); outputs x-y as l bits plus a sign bit set iff x < y"""
    require_width("subtractor width", l)
    b = CircuitBuilder(f"sub{l}", with_const=True)
    x, y = b.inputs(l), b.inputs(l)
    with b.block("SUB"):
        d, sign = sub_block(b, x, y)
    return b.build([*d, sign])


def build_manhattan(l: int) -> BooleanCircuit:
    """Inputs xa, ya, xb, yb (l bits each); output |xa-xb| + |ya-yb| as l+1 bits"""
    require_width("coordinate width", l)
    b = CircuitBuilder(f"manhattan{l}", with_const=True)
    xa, ya, xb, yb = (b.inputs(l) for _ in range(4))
    return b.build(manhattan_block(b, xa, ya, xb, yb))


def build_manhattan_swap(l: int) -> BooleanCircuit:
    """Comparator + conditional-swap variant of build_manhattan: 24l XOR, 7l AND"""
    require_width("coordinate width", l)
    b = CircuitBuilder(f"manhattan-swap{l}", with_const=True)
    xa, ya, xb, yb = (b.inputs(l) for _ in range(4))
    diffs = []
    for u, v in ((xa, xb), (ya, yb)):
        with b.block("CMP"):
            select = cmp_block(b, u, v)
        with b.block("SWAP"):
            flips = [b.and_(b.xor(ui, vi), select) for ui, vi in zip(u, v)]
            hi = [b.xor(vi, f) for vi, f in zip(v, flips)]
            lo = [b.xor(ui, f) for ui, f in zip(u, flips)]
        with b.block("SUB"):
            d, _ = sub_block(b, hi, lo)
        diffs.append(d)
    with b.block("ADD"):
        out = add_block(b, diffs[0], diffs[1], b.constant(0))
    return b.build(out)


def build_min_tree(l_val: int, l_ind: int, L: int) -> BooleanCircuit:
    """
    Inputs: per leaf, l_val value bits then l_ind index bits.
    Outputs: minimum value then its index; ties keep the left-most leaf.
    """
    require_width("leaf count", L, 2)
    require_width("value width", l_val)
    require_width("index width", l_ind)
    b = CircuitBuilder(f"min-tree{L}", with_const=True)
    leaves = [(b.inputs(l_val), b.inputs(l_ind)) for _ in range(L)]
    value, index = min_tree_block(b, leaves)
    return b.build([*value, *index])


def build_nearest_atm(l: int = ATM_COORDINATE_BITS, locations: list[AtmLocation] | None = None) -> BooleanCircuit:
    """
    Inputs: client East then South coordinate (l bits each).
    Outputs: nearest location index (East then South, 2l bits) then its distance (l+1 bits).
    Location coordinates are circuit constants.
    """
    require_width("coordinate width", l)
    if locations is None:
        locations = load_atm_locations()
    if len(locations) < 2:
        throw("at least two locations are required", ParameterError)
    for location in locations:
        if location.east >= 1 << l or location.south >= 1 << l:
            throw(f"location {location.describe()} does not fit in {l} bits", ParameterError)
    b = CircuitBuilder(f"nearest-atm{len(locations)}", with_const=True)
    x, y = b.inputs(l), b.inputs(l)
    leaves = []
    for location in locations:
        east, south = b.constants(location.east, l), b.constants(location.south, l)
        leaves.append((manhattan_block(b, x, y, east, south), [*east, *south]))
    distance, index = min_tree_block(b, leaves)
    return b.build([*index, *distance])
