# Copyright (c) 2026, Kerol Systems and Contributors
# See license.txt

import itertools
import unittest

from vcloud.vcloud_mpc.circuits.builder import CircuitBuilder
from vcloud.vcloud_mpc.circuits.circuit import (
    AND,
    XOR,
    BooleanCircuit,
    Gate,
    anf,
    check_table,
    eval_plaintext,
    is_and_class,
)
from vcloud.vcloud_mpc.utils.errors import CircuitError, InputArityError, ParameterError


def single_and() -> BooleanCircuit:
    return BooleanCircuit(n_wires=3, gates=(Gate(0, 1, 2, AND),), inputs=(0, 1), outputs=(2,))


class TestBooleanCircuit(unittest.TestCase):
    def test_single_and_gate(self):
        c = single_and()
        self.assertEqual(eval_plaintext(c, [1, 1]), [1])
        self.assertEqual(eval_plaintext(c, [1, 0]), [0])
        self.assertEqual(c.gate_counts(), (0, 1))

    def test_input_arity(self):
        with self.assertRaises(InputArityError):
            eval_plaintext(single_and(), [1])

    def test_wire_count_identity(self):
        with self.assertRaises(CircuitError):
            BooleanCircuit(n_wires=4, gates=(Gate(0, 1, 2, AND),), inputs=(0, 1), outputs=(2,))

    def test_non_topological_order_rejected(self):
        gates = (Gate(0, 3, 2, XOR), Gate(0, 1, 3, AND))
        with self.assertRaisesRegex(CircuitError, "wire 3"):
            BooleanCircuit(n_wires=4, gates=gates, inputs=(0, 1), outputs=(2,))

    def test_gate_cannot_write_its_input(self):
        with self.assertRaises(CircuitError):
            BooleanCircuit(n_wires=4, gates=(Gate(0, 1, 1, AND),), inputs=(0, 1, 2), outputs=(1,))

    def test_gate_cannot_read_one_wire_twice(self):
        with self.assertRaisesRegex(CircuitError, "both inputs"):
            BooleanCircuit(n_wires=3, gates=(Gate(0, 0, 2, AND),), inputs=(0, 1), outputs=(2,))

    def test_classification_over_all_tables(self):
        tables = list(itertools.product((0, 1), repeat=4))
        and_class = [t for t in tables if is_and_class(t)]
        self.assertEqual(len(and_class), 8)
        for table in tables:
            c0, c1, c2, c3 = anf(table)
            for u, v in itertools.product((0, 1), repeat=2):
                self.assertEqual(c0 ^ (c1 & u) ^ (c2 & v) ^ (c3 & u & v), table[2 * u + v])

    def test_bad_table(self):
        with self.assertRaises(ParameterError):
            check_table("012x")
        with self.assertRaises(ParameterError):
            check_table((0, 1, 1))
        self.assertEqual(check_table("0110"), XOR)


class TestCircuitBuilder(unittest.TestCase):
    def test_negation_folded_into_consumer(self):
        b = CircuitBuilder()
        x, y = b.input(), b.input()
        c = b.build([b.and_(~x, y)])
        self.assertEqual(c.N_g, 1)
        for u, v in itertools.product((0, 1), repeat=2):
            self.assertEqual(eval_plaintext(c, [u, v]), [(1 - u) & v])

    def test_negated_output_folded_into_producer(self):
        b = CircuitBuilder()
        x, y = b.input(), b.input()
        p = b.and_(x, y)
        q = b.xor(p, x)
        c = b.build([~p, q])
        self.assertEqual(c.N_g, 2)
        for u, v in itertools.product((0, 1), repeat=2):
            self.assertEqual(eval_plaintext(c, [u, v]), [1 - (u & v), (u & v) ^ u])

    def test_same_wire_gate_moves_to_partner(self):
        b = CircuitBuilder()
        x, _ = b.input(), b.input()
        out = b.xor(x, ~x)
        c = b.build([out])
        gate = c.gates[0]
        self.assertNotEqual(gate.left, gate.right)
        self.assertEqual(c.gate_counts(), (1, 0))
        for u, v in itertools.product((0, 1), repeat=2):
            self.assertEqual(eval_plaintext(c, [u, v]), [1])

    def test_constants_use_const_one(self):
        b = CircuitBuilder(with_const=True)
        x = b.input()
        c = b.build([b.and_(x, b.constant(1)), b.xor(x, b.constant(1))])
        self.assertEqual(c.inputs[-1], c.const_one)
        for u in (0, 1):
            self.assertEqual(eval_plaintext(c, c.with_constant([u])), [u, 1 - u])

    def test_const_one_must_carry_one(self):
        b = CircuitBuilder(with_const=True)
        x = b.input()
        c = b.build([b.xor(x, b.constant(0))])
        with self.assertRaises(InputArityError):
            eval_plaintext(c, [1, 0])

    def test_gmw_rounds_cover_every_gate(self):
        b = CircuitBuilder()
        x, y, z = b.inputs(3)
        p = b.and_(x, y)
        q = b.xor(p, z)
        r = b.and_(q, x)
        s = b.xor(x, y)
        c = b.build([r, s])
        rounds = c.gmw_rounds
        self.assertEqual(sum(len(lin) + len(non) for lin, non in rounds), c.N_g)
        self.assertEqual([len(non) for _, non in rounds], [1, 1])
