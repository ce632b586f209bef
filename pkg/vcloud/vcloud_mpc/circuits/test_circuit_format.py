# Copyright (c) 2026, Kerol Systems and Contributors
# See license.txt

import itertools
import unittest

from hypothesis import given
from hypothesis import strategies as st

from vcloud.vcloud_mpc.circuits.builders import build_manhattan, build_sub
from vcloud.vcloud_mpc.circuits.circuit import eval_plaintext
from vcloud.vcloud_mpc.circuits.circuit_format import (
    BUNDLED_ADDER,
    BUNDLED_ADDER_BRISTOL,
    load_bundled_adder,
    parse_bristol,
    parse_circuit_file,
    serialize_circuit,
)
from vcloud.vcloud_mpc.utils.bits import bits_to_int, int_to_bits
from vcloud.vcloud_mpc.utils.errors import CircuitParseError


def add32(circuit, a: int, b: int) -> int:
    return bits_to_int(eval_plaintext(circuit, int_to_bits(a, 32) + int_to_bits(b, 32)))


class TestBundledAdder(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.circuit = load_bundled_adder()

    def test_dimensions(self):
        c = self.circuit
        self.assertEqual((c.W, c.W_i, c.W_o, c.N_g), (439, 64, 33, 375))

    def test_not_gates_count_as_xor_class(self):
        self.assertEqual(self.circuit.gate_counts(), (61 + 187, 127))

    def test_round_trip_is_identity(self):
        text = BUNDLED_ADDER.read_text()
        self.assertEqual(serialize_circuit(parse_circuit_file(text)), text)

    def test_netlist_import_matches_native_file(self):
        imported = parse_bristol(BUNDLED_ADDER_BRISTOL.read_text())
        self.assertEqual(imported, self.circuit)
        self.assertEqual(imported.digest, self.circuit.digest)

    def test_sums(self):
        self.assertEqual(add32(self.circuit, 0, 0), 0)
        self.assertEqual(add32(self.circuit, 7, 9), 16)
        self.assertEqual(add32(self.circuit, 2**32 - 1, 1), 2**32)

    @given(st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
    def test_random_sums(self, a, b):
        self.assertEqual(add32(self.circuit, a, b), a + b)


class TestNativeFormat(unittest.TestCase):
    def test_builder_circuits_round_trip(self):
        for circuit in (build_sub(5), build_manhattan(3)):
            parsed = parse_circuit_file(serialize_circuit(circuit))
            self.assertEqual(parsed, circuit)
            self.assertEqual(parsed.const_one, circuit.const_one)

    def test_comments_and_blank_lines(self):
        text = "# one AND gate\n3 2 1 1\n\nIN 0\nIN 1  # second input\nG 0 1 2 0001\nOUT 2\n"
        c = parse_circuit_file(text)
        self.assertEqual(eval_plaintext(c, [1, 1]), [1])

    def test_undefined_wire_named(self):
        text = "3 2 1 1\nIN 0\nIN 1\nG 0 7 2 0001\nOUT 2\n"
        with self.assertRaisesRegex(CircuitParseError, "undefined wire 7") as ctx:
            parse_circuit_file(text)
        self.assertEqual(ctx.exception.line_no, 4)

    def test_non_topological(self):
        text = "4 2 1 2\nIN 0\nIN 1\nG 0 3 2 0110\nG 0 1 3 0001\nOUT 2\n"
        with self.assertRaisesRegex(CircuitParseError, "non-topological"):
            parse_circuit_file(text)

    def test_malformed_line(self):
        text = "3 2 1 1\nIN 0\nIN 1\nGATE 0 1 2\nOUT 2\n"
        with self.assertRaises(CircuitParseError) as ctx:
            parse_circuit_file(text)
        self.assertEqual(ctx.exception.line_no, 4)

    def test_header_mismatch(self):
        text = "4 2 1 1\nIN 0\nIN 1\nG 0 1 2 0001\nOUT 2\n"
        with self.assertRaises(CircuitParseError):
            parse_circuit_file(text)

    def test_netlist_unknown_gate(self):
        with self.assertRaisesRegex(CircuitParseError, "line 3"):
            parse_bristol("1 3\n1 1 1\n2 1 0 1 2 NAND\n")


class TestOneVariableGates(unittest.TestCase):
    def test_native_gate_on_one_wire_is_folded(self):
        c = parse_circuit_file("3 2 1 1\nIN 0\nIN 1\nG 1 1 2 1001\nOUT 2\n")
        gate = c.gates[0]
        self.assertEqual((gate.left, gate.right), (1, 0))
        self.assertEqual(gate.table, (1, 1, 1, 1))
        self.assertEqual(c.gate_counts(), (1, 0))
        for u, v in itertools.product((0, 1), repeat=2):
            self.assertEqual(eval_plaintext(c, [u, v]), [1])

    def test_native_gate_on_the_only_input(self):
        with self.assertRaises(CircuitParseError) as ctx:
            parse_circuit_file("2 1 1 1\nIN 0\nG 0 0 1 0001\nOUT 1\n")
        self.assertEqual(ctx.exception.line_no, 3)

    def test_netlist_inv_on_the_only_input(self):
        with self.assertRaisesRegex(CircuitParseError, "line 3") as ctx:
            parse_bristol("1 2\n1 0 1\n1 1 0 1 INV\n")
        self.assertEqual(ctx.exception.line_no, 3)

    def test_netlist_inv_ties_to_another_input(self):
        c = parse_bristol("1 3\n1 1 1\n1 1 1 2 INV\n")
        self.assertEqual((c.gates[0].left, c.gates[0].right), (1, 0))
        for u, v in itertools.product((0, 1), repeat=2):
            self.assertEqual(eval_plaintext(c, [u, v]), [1 - v])

    def test_netlist_xor_of_a_wire_with_itself(self):
        c = parse_bristol("1 3\n1 1 1\n2 1 0 0 2 XOR\n")
        self.assertNotEqual(c.gates[0].left, c.gates[0].right)
        for u, v in itertools.product((0, 1), repeat=2):
            self.assertEqual(eval_plaintext(c, [u, v]), [0])
