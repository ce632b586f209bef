"""
The circuit garblers evaluate jointly for one table entry A_ab of one gate

Each party contributes m = 3 + 2(nk+1) + 2k private bits, in this order:

    lambda_x, lambda_y, lambda_z             its wire-mask shares
    G_b(alpha_a,i)                           nk+1 bits, MSB first
    G_a(beta_b,i)                            nk+1 bits, MSB first
    gamma_0,i, gamma_1,i                     its k-bit shares of the output wire's values

and the circuit outputs, MSB first, the nk+1 bits of

    A_ab = gamma_s ^ XOR_i G_b(alpha_a,i) ^ XOR_i G_a(beta_b,i),
    s    = ((lambda_x ^ a) op (lambda_y ^ b)) ^ lambda_z.

Gate counts: 3n + 2nk + 2n(nk+1) XOR-class, nk AND-class, plus the gate op itself.
"""

from functools import lru_cache

from vcloud.vcloud_mpc.circuits.builder import CircuitBuilder, Lit
from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit, TruthTable, check_table, is_and_class, table_text
from vcloud.vcloud_mpc.utils.bits import int_to_msb_bits
from vcloud.vcloud_mpc.utils.errors import ParameterError, throw


def entry_input_bits(n: int, k: int) -> int:
    """m, the private input width of one party"""
    return 3 + 2 * (n * k + 1) + 2 * k


def entry_gate_counts(n: int, k: int, table: TruthTable) -> tuple[int, int]:
    xor_count = 3 * n + 2 * n * k + 2 * n * (n * k + 1)
    and_count = n * k
    if is_and_class(check_table(table)):
        and_count += 1
    else:
        xor_count += 1
    return xor_count, and_count


def _xor_all(b: CircuitBuilder, lits: list[Lit]) -> Lit:
    acc = lits[0]
    for lit in lits[1:]:
        acc = b.xor(acc, lit)
    return acc


@lru_cache(maxsize=256)
def build_entry_circuit(n: int, k: int, table: TruthTable, a: int, b: int) -> BooleanCircuit:
    if n < 2 or k < 1:
        throw(f"entry circuit needs n >= 2 and k >= 1, got n={n} k={k}", ParameterError)
    table = check_table(table)
    width = n * k + 1
    c = CircuitBuilder(f"entry-n{n}-k{k}-{table_text(table)}-{a}{b}")

    lam_x, lam_y, lam_z, g_left, g_right, gamma0, gamma1 = [], [], [], [], [], [], []
    for _ in range(n):
        lam_x.append(c.input())
        lam_y.append(c.input())
        lam_z.append(c.input())
        g_left.append(c.inputs(width))
        g_right.append(c.inputs(width))
        gamma0.append(c.inputs(k))
        gamma1.append(c.inputs(k))

    with c.block("LAMBDA"):
        lx, ly, lz = _xor_all(c, lam_x), _xor_all(c, lam_y), _xor_all(c, lam_z)
    with c.block("SELECT"):
        u = c.unary(lx, a & 1, (a & 1) ^ 1)
        v = c.unary(ly, b & 1, (b & 1) ^ 1)
    with c.block("CORE"):
        t = c.gate(u, v, table)
    with c.block("SIGNAL"):
        s = c.xor(t, lz)

    chosen = []
    with c.block("MUX"):
        for i in range(n):
            for j in range(k):
                d = c.xor(gamma0[i][j], gamma1[i][j])
                e = c.and_(d, s)
                chosen.append(c.xor(e, gamma0[i][j]))
    chosen.append(s)

    outputs = []
    with c.block("EXPAND"):
        for position, bit in enumerate(chosen):
            acc = bit
            for i in range(n):
                acc = c.xor(acc, g_left[i][position])
            for i in range(n):
                acc = c.xor(acc, g_right[i][position])
            outputs.append(acc)
    return c.build(outputs)


def entry_private_bits(
    k: int,
    n: int,
    lambdas: tuple[int, int, int],
    g_left: int,
    g_right: int,
    gamma0: int,
    gamma1: int,
) -> list[int]:
    """One party's m input bits in the order the entry circuit reads them"""
    width = n * k + 1
    return [
        *(bit & 1 for bit in lambdas),
        *int_to_msb_bits(g_left, width),
        *int_to_msb_bits(g_right, width),
        *int_to_msb_bits(gamma0, k),
        *int_to_msb_bits(gamma1, k),
    ]
