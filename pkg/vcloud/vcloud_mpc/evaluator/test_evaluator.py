# Copyright (c) 2026, Kerol Systems and Contributors
# See license.txt

import ast
import itertools
import random
import unittest
from pathlib import Path

from vcloud.vcloud_mpc.circuits.builder import CircuitBuilder
from vcloud.vcloud_mpc.circuits.circuit import eval_plaintext
from vcloud.vcloud_mpc.evaluator.evaluation import EvaluatorStats, evaluate, evaluate_cheating
from vcloud.vcloud_mpc.evaluator.store import GarbledCircuitStore
from vcloud.vcloud_mpc.garbler.dealer import garble_with_dealer, garbled_value, wire_lambda
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables
from vcloud.vcloud_mpc.randomness.wire_shares import WireShares
from vcloud.vcloud_mpc.schemas.params_schemas import CheatMode
from vcloud.vcloud_mpc.utils.errors import EvaluatorError, GarbledCircuitReuse, InputArityError


def two_gate_circuit():
    b = CircuitBuilder("and-xor")
    x, y, z = b.inputs(3)
    t = b.and_(x, y)
    return b.build([b.xor(t, z), t])


def dealer_setup(circuit, n: int, k: int, seed: int):
    rng = random.Random(seed)
    shares = [
        [WireShares(rng.getrandbits(k), rng.getrandbits(k), rng.getrandbits(1)) for _ in range(circuit.W)]
        for _ in range(n)
    ]
    return shares, garble_with_dealer(circuit, shares, k)


def garble_inputs(circuit, shares, bits, k):
    return [garbled_value(shares, w, bit ^ wire_lambda(shares, w), k) for w, bit in zip(circuit.inputs, bits)]


class TestEvaluate(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.n, cls.k = 2, 2
        cls.circuit = two_gate_circuit()
        cls.shares, cls.gc = dealer_setup(cls.circuit, cls.n, cls.k, seed=1)

    def test_recovers_plaintext_for_every_input(self):
        for bits in itertools.product((0, 1), repeat=3):
            outputs = evaluate(self.gc, self.circuit, garble_inputs(self.circuit, self.shares, bits, self.k))
            recovered = [(v & 1) ^ wire_lambda(self.shares, w) for v, w in zip(outputs, self.circuit.outputs)]
            self.assertEqual(recovered, eval_plaintext(self.circuit, list(bits)))

    def test_output_is_one_of_the_wire_pair(self):
        for bits in itertools.product((0, 1), repeat=3):
            outputs = evaluate(self.gc, self.circuit, garble_inputs(self.circuit, self.shares, bits, self.k))
            for value, wire in zip(outputs, self.circuit.outputs):
                signal = value & 1
                self.assertEqual(value, garbled_value(self.shares, wire, signal, self.k))

    def test_deterministic(self):
        inputs = garble_inputs(self.circuit, self.shares, [1, 1, 0], self.k)
        self.assertEqual(evaluate(self.gc, self.circuit, inputs), evaluate(self.gc, self.circuit, inputs))

    def test_expands_each_consumed_wire_once(self):
        stats = EvaluatorStats()
        evaluate(self.gc, self.circuit, garble_inputs(self.circuit, self.shares, [0, 1, 1], self.k), stats)
        self.assertEqual(stats.expander_calls, self.n * len(self.circuit.consumed_wires))
        self.assertEqual(stats.gates, self.circuit.N_g)

    def test_closed_form_count_when_only_non_outputs_are_read(self):
        b = CircuitBuilder("chain")
        x = b.inputs(4)
        acc = x[0]
        for lit in x[1:]:
            acc = b.and_(acc, lit)
        chain = b.build([acc])
        shares, gc = dealer_setup(chain, 3, 2, seed=5)
        stats = EvaluatorStats()
        evaluate(gc, chain, garble_inputs(chain, shares, [1, 0, 1, 1], 2), stats)
        self.assertEqual(stats.expander_calls, (chain.W - chain.W_o) * 3)

    def test_output_wire_read_by_a_gate_is_expanded(self):
        # t is an output and an input of the XOR gate
        self.assertEqual(len(self.circuit.consumed_wires), self.circuit.W - self.circuit.W_o + 1)

    def test_rejects_wrong_arity(self):
        inputs = garble_inputs(self.circuit, self.shares, [0, 1, 1], self.k)
        with self.assertRaises(InputArityError):
            evaluate(self.gc, self.circuit, inputs[:2])

    def test_rejects_oversized_value(self):
        inputs = garble_inputs(self.circuit, self.shares, [0, 1, 1], self.k)
        inputs[0] |= 1 << (self.n * self.k + 1)
        with self.assertRaises(EvaluatorError):
            evaluate(self.gc, self.circuit, inputs)

    def test_rejects_foreign_circuit(self):
        foreign = GarbledTables(self.n, self.k, bytes(32), self.gc.entries)
        with self.assertRaises(EvaluatorError):
            evaluate(foreign, self.circuit, garble_inputs(self.circuit, self.shares, [0, 0, 0], self.k))


class TestCheating(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.n, cls.k = 3, 3
        cls.circuit = two_gate_circuit()
        cls.shares, cls.gc = dealer_setup(cls.circuit, cls.n, cls.k, seed=2)
        cls.inputs = garble_inputs(cls.circuit, cls.shares, [1, 0, 1], cls.k)
        cls.honest = evaluate(cls.gc, cls.circuit, cls.inputs)

    def test_flip_bit_changes_exactly_one_bit(self):
        width = self.n * self.k + 1
        for wire in range(self.circuit.W_o):
            for pos in range(width):
                cheat = CheatMode(kind="flip-bit", wire=wire, pos=pos)
                tampered = evaluate_cheating(self.gc, self.circuit, self.inputs, cheat)
                expected = list(self.honest)
                expected[wire] ^= 1 << pos
                self.assertEqual(tampered, expected)

    def test_flip_bit_out_of_range(self):
        with self.assertRaises(EvaluatorError):
            evaluate_cheating(self.gc, self.circuit, self.inputs, CheatMode(kind="flip-bit", wire=5))
        with self.assertRaises(EvaluatorError):
            evaluate_cheating(self.gc, self.circuit, self.inputs, CheatMode(kind="flip-bit", pos=10))

    def test_random_outputs_fit_the_value_width(self):
        rng = random.Random(3)
        outputs = evaluate_cheating(self.gc, self.circuit, self.inputs, CheatMode(kind="random-outputs"), rng)
        self.assertEqual(len(outputs), self.circuit.W_o)
        self.assertTrue(all(0 <= v < 1 << (self.n * self.k + 1) for v in outputs))


class TestGarbledCircuitStore(unittest.TestCase):
    def setUp(self):
        self.circuit = two_gate_circuit()
        _, self.first = dealer_setup(self.circuit, 2, 1, seed=4)
        _, self.second = dealer_setup(self.circuit, 2, 1, seed=5)

    def test_take_in_construction_order(self):
        store = GarbledCircuitStore()
        store.put(self.first)
        store.put(self.second)
        self.assertEqual(store.fresh_count(self.circuit.digest), 2)
        self.assertEqual(store.take(self.circuit.digest), self.first)
        self.assertEqual(store.take(self.circuit.digest), self.second)
        self.assertEqual(store.fresh_count(), 0)

    def test_spent_circuit_cannot_be_reused(self):
        store = GarbledCircuitStore()
        store.put(self.first)
        store.take(self.circuit.digest)
        with self.assertRaises(GarbledCircuitReuse):
            store.take(self.circuit.digest)
        with self.assertRaises(GarbledCircuitReuse):
            store.put(self.first)

    def test_unknown_computation(self):
        with self.assertRaises(EvaluatorError):
            GarbledCircuitStore().take(bytes(32))


class TestEvaluatorImports(unittest.TestCase):
    FORBIDDEN = (
        "vcloud.vcloud_mpc.randomness.bbs",
        "vcloud.vcloud_mpc.randomness.wire_shares",
        "vcloud.vcloud_mpc.client",
    )

    def test_no_access_to_seeds_or_trapdoors(self):
        for path in Path(__file__).parent.glob("*.py"):
            if path.name.startswith("test_"):
                continue
            tree = ast.parse(path.read_text(encoding="utf-8"))
            for node in ast.walk(tree):
                if isinstance(node, ast.ImportFrom):
                    names = [node.module or ""]
                elif isinstance(node, ast.Import):
                    names = [alias.name for alias in node.names]
                else:
                    continue
                for name in names:
                    with self.subTest(file=path.name, module=name):
                        self.assertFalse(name.startswith(self.FORBIDDEN))
