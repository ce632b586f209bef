# Copyright (c) 2026, Kerol Systems and Contributors
# See license.txt

import io
import random
import unittest

from vcloud.vcloud_mpc.circuits.builder import CircuitBuilder
from vcloud.vcloud_mpc.circuits.circuit import AND, NAND, OR, XOR
from vcloud.vcloud_mpc.circuits.circuit_format import load_bundled_adder
from vcloud.vcloud_mpc.client.client_kit import ClientLedger, derive_garbled_inputs, expect_outputs, setup
from vcloud.vcloud_mpc.client.session import CloudSession
from vcloud.vcloud_mpc.cost_model.formulas import (
    bprime_counts,
    client_bits,
    entry_ot_count,
    entry_traffic,
    fhe_ciphertext_bits,
    garbled_value_bits,
    gc_size,
    megabits,
    megabytes,
    ot_sizes,
    random_bits,
    seed_bits,
    seed_traffic,
)
from vcloud.vcloud_mpc.cost_model.predict import (
    ANALYSIS_FIELDS,
    analysis_rows,
    cost_params,
    predict_ledger,
    predict_random_bits,
    write_analysis_csv,
)
from vcloud.vcloud_mpc.garbler.entry_circuit import build_entry_circuit, entry_gate_counts
from vcloud.vcloud_mpc.garbler.seed_message import seed_message_bits
from vcloud.vcloud_mpc.oblivious_transfer.group import TEST_GROUP
from vcloud.vcloud_mpc.oblivious_transfer.messages import session_bits
from vcloud.vcloud_mpc.schemas.params_schemas import CostParams, ProtocolParams
from vcloud.vcloud_mpc.simnet.ledger import Phase
from vcloud.vcloud_mpc.utils.errors import ParameterError

MODULUS_BITS = 32


def five_gate_circuit():
    b = CircuitBuilder("five")
    w, x, y, z = b.inputs(4)
    t = b.and_(w, x)
    u = b.gate(x, y, OR)
    v = b.xor(t, u)
    s = b.gate(v, z, NAND)
    return b.build([s, b.xor(s, w)])


def and_chain():
    b = CircuitBuilder("chain")
    x = b.inputs(4)
    acc = x[0]
    for lit in x[1:]:
        acc = b.and_(acc, lit)
    return b.build([acc])


class TestEntryCircuitFormulas(unittest.TestCase):
    def test_full_size_counts(self):
        self.assertEqual(bprime_counts(6, 128), (10782, 769))
        self.assertEqual(bprime_counts(2, 1), (22, 3))
        self.assertEqual(bprime_counts(2, 1, and_class=False), (23, 2))

    def test_matches_entry_circuit(self):
        for n in range(2, 9):
            for k in (1, 2, 64, 128):
                self.assertEqual(bprime_counts(n, k), entry_gate_counts(n, k, AND))
                self.assertEqual(bprime_counts(n, k, and_class=False), entry_gate_counts(n, k, XOR))
        for n, k in [(2, 1), (3, 2), (4, 2)]:
            self.assertEqual(bprime_counts(n, k), build_entry_circuit(n, k, AND, 1, 0).gate_counts())

    def test_growth_in_n(self):
        k = 128
        xors = [bprime_counts(n, k)[0] for n in range(2, 9)]
        ands = [bprime_counts(n, k)[1] for n in range(2, 9)]
        first = [b - a for a, b in zip(xors, xors[1:])]
        second = {b - a for a, b in zip(first, first[1:])}
        self.assertEqual(second, {4 * k})
        self.assertEqual({b - a for a, b in zip(ands, ands[1:])}, {k})

    def test_rejects_single_party(self):
        with self.assertRaises(ParameterError):
            bprime_counts(1, 8)


class TestTrafficFormulas(unittest.TestCase):
    def test_ot_sizes(self):
        s12, s14 = ot_sizes(3072, 128)
        self.assertEqual(s14, 25600)
        self.assertEqual(s14 // 8, 3200)
        self.assertEqual(s12, 12800)
        self.assertEqual(s14, session_bits(3072, 128))

    def test_entry_traffic(self):
        self.assertEqual(entry_ot_count(5, 128), 641 * 10)
        T = entry_traffic(5, 128, 3072)
        self.assertEqual(T, 641 * (4 * 3200 * 20 + 5))
        self.assertEqual(T, 164_099_205)
        self.assertEqual(round(megabytes(T), 2), 19.56)

    def test_garbled_value_and_gc_size(self):
        self.assertEqual(garbled_value_bits(5, 128), 641)
        self.assertEqual(gc_size(375, 5, 128), 4 * 375 * 641)

    def test_seed_traffic_matches_message_widths(self):
        for n in (2, 3, 5):
            self.assertEqual(seed_traffic(n, 8, 64), n * seed_message_bits(n, 8, 64))

    def test_fhe_comparison(self):
        self.assertEqual(fhe_ciphertext_bits(128), 2**35)
        self.assertGreater(fhe_ciphertext_bits(128), garbled_value_bits(5, 128))

    def test_monotone(self):
        base = dict(n=3, k=64, p_bits=1024)
        for name in base:
            bigger = dict(base, **{name: base[name] + 1})
            self.assertGreater(entry_traffic(**bigger), entry_traffic(**base))


class TestRandomBits(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.adder = load_bundled_adder()

    def test_bundled_adder_per_entry(self):
        self.assertEqual((self.adder.W, self.adder.W_o, self.adder.N_g), (439, 33, 375))
        bits = random_bits(cost_params(self.adder, 5, 128, 3072, 3072))
        self.assertEqual(round(megabits(bits.total) / (4 * 375), 2), 153.41)
        self.assertEqual(bits.total, bits.b1 + bits.b2 + bits.b3 + bits.b4)

    def test_b1_per_wire(self):
        params = CostParams(n=1, k=1, W=2, W_i=1, W_o=1, N_g=1)
        self.assertEqual(random_bits(params).b1, 2 * 3)

    def test_monotone(self):
        base = dict(n=3, k=16, p_bits=256)
        for name in base:
            bigger = dict(base, **{name: base[name] + 1})
            small = random_bits(cost_params(self.adder, modulus_bits=64, **base)).total
            large = random_bits(cost_params(self.adder, modulus_bits=64, **bigger)).total
            self.assertGreater(large, small)

    def test_prediction_equals_closed_form_for_and_chains(self):
        circuit = and_chain()
        self.assertEqual(len(circuit.consumed_wires), circuit.W - circuit.W_o)
        for n, k in [(2, 1), (3, 8)]:
            self.assertEqual(
                predict_random_bits(circuit, n, k, 3072), random_bits(cost_params(circuit, n, k, 3072, 3072))
            )


class TestClientBits(unittest.TestCase):
    def test_bundled_adder_matches_client_ledger(self):
        circuit = load_bundled_adder()
        self.assertEqual((circuit.W_i, circuit.W_o), (64, 33))
        rng = random.Random(1)
        for n in range(2, 6):
            ledger = ClientLedger()
            params = ProtocolParams(n=n, k=128, modulus_bits=64)
            secrets, _ = setup(params, circuit, rng, ledger)
            self.assertEqual(ledger.seed_bits, seed_bits(n, 128, 64))
            derive_garbled_inputs(secrets, circuit, [0] * circuit.W_i, ledger)
            expect_outputs(secrets, circuit, ledger)
            self.assertEqual(ledger.total, client_bits(cost_params(circuit, n, 128, 3072, 64)))


class TestLedgerAgreement(unittest.TestCase):
    def test_every_phase_matches_prediction(self):
        circuit = five_gate_circuit()
        self.assertEqual(circuit.N_g, 5)
        for n in (2, 3):
            for k in (2, 8):
                with self.subTest(n=n, k=k):
                    params = ProtocolParams(n=n, k=k, modulus_bits=MODULUS_BITS, group_profile="test")
                    session = CloudSession(circuit, params, scheduler_seed=n, rng=random.Random(10 * n + k))
                    self.assertTrue(session.run([1, 0, 1, 1]).accepted)
                    ledger = session.network.ledger
                    predicted = predict_ledger(circuit, n, k, TEST_GROUP.p_bits, MODULUS_BITS)
                    for phase in Phase:
                        self.assertEqual(ledger.payload_bits(phase), predicted[phase], phase.label)

                    measured = session.garbler_stats.values()
                    expected = predict_random_bits(circuit, n, k, TEST_GROUP.p_bits)
                    self.assertEqual(sum(s.bbs_bits for s in measured), expected.b1)
                    self.assertEqual(sum(s.g_bits for s in measured), expected.b2)
                    self.assertEqual(sum(s.r_bits for s in measured), expected.b3)
                    self.assertEqual(sum(s.ot_random_bits for s in measured), expected.b4)
                    self.assertEqual(session.client_ledger.total, client_bits(cost_params(circuit, n, k, 5, MODULUS_BITS)))


class TestAnalysis(unittest.TestCase):
    def test_rows_for_the_bundled_adder(self):
        rows = analysis_rows(load_bundled_adder(), range(2, 9), 128, 3072, 3072)
        self.assertEqual([row["n"] for row in rows], list(range(2, 9)))
        row = rows[3]
        self.assertEqual(row["n"], 5)
        self.assertEqual(row["entry_traffic_bits"], 164_099_205)
        self.assertEqual(row["entry_traffic_mb"], 19.56)
        self.assertEqual(row["random_mbits_per_entry"], 153.41)
        self.assertEqual(row["garbled_value_bits"], 641)

        fh = io.StringIO()
        write_analysis_csv(rows, fh)
        lines = fh.getvalue().splitlines()
        self.assertEqual(lines[0].split(","), ANALYSIS_FIELDS)
        self.assertEqual(len(lines), 8)
