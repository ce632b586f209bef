# Copyright (c) 2026, Kerol Systems and Contributors
# See license.txt

import csv
import io
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from vcloud.vcloud_mpc.circuits.circuit_format import BUNDLED_ADDER_BRISTOL, parse_bristol, serialize_circuit
from vcloud.vcloud_mpc.cli.cli import main, resolve_circuit

DESK = ["--modulus-bits", "32", "--group-profile", "test"]


def run_cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestDemoAdder(unittest.TestCase):
    def test_seven_plus_nine(self):
        code, out, _ = run_cli("demo-adder", "--x", "7", "--y", "9", "--bits", "4", "--n", "3", "--k", "8", *DESK)
        self.assertEqual(code, 0)
        self.assertIn("7 + 9 = 16", out)
        self.assertIn("verification: accepted", out)
        phase_rows = [line.split() for line in out.splitlines() if line.startswith(("seed-", "ot ", "share-", "gc-", "garbled-"))]
        self.assertEqual(len(phase_rows), 6)
        self.assertTrue(all(row[-1] == "0" for row in phase_rows))

    def test_cheating_evaluator_exits_rejected(self):
        code, out, _ = run_cli("demo-adder", "--x", "1", "--y", "2", "--bits", "2", "--n", "2", "--k", "4", "--cheat", "random", *DESK)
        self.assertEqual(code, 1)
        self.assertIn("REJECTED", out)

    def test_reproducible_with_a_fixed_seed(self):
        with tempfile.TemporaryDirectory() as tmp:
            runs = []
            for i in range(2):
                trace, ledger = Path(tmp, f"trace{i}.jsonl"), Path(tmp, f"ledger{i}.csv")
                args = ["demo-adder", "--x", "2", "--y", "3", "--bits", "2", "--n", "2", "--k", "2", "--seed", "5"]
                code, out, _ = run_cli(*args, *DESK, "--out", str(trace), "--csv", str(ledger))
                self.assertEqual(code, 0)
                runs.append((out, trace.read_bytes(), ledger.read_bytes()))
            self.assertEqual(runs[0], runs[1])
            self.assertIn("seed=5", runs[0][0])

    def test_full_accounting(self):
        code, out, _ = run_cli("demo-adder", "--x", "1", "--y", "1", "--bits", "1", "--n", "2", "--k", "1", "--full-accounting", *DESK)
        self.assertEqual(code, 0)
        self.assertIn("full-size accounting (n=2 k=128 |p|=3072 |N|=3072)", out)

    def test_usage_errors(self):
        self.assertEqual(run_cli("demo-adder", "--x", "1", "--y", "1", "--n", "1")[0], 2)
        self.assertEqual(run_cli("demo-adder", "--x", "9", "--y", "1", "--bits", "3")[0], 2)
        self.assertEqual(run_cli("demo-adder", "--x", "1", "--y", "1", "--cheat", "sometimes")[0], 2)
        with self.assertRaises(SystemExit) as caught:
            run_cli("demo-adder", "--x", "1")
        self.assertEqual(caught.exception.code, 2)


class TestDemoAtm(unittest.TestCase):
    def test_two_location_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            table = Path(tmp, "atms.csv")
            table.write_text("name,east,south\nChase,0,201\nWells Fargo,0,79\n", encoding="utf-8")
            code, out, _ = run_cli(
                "demo-atm", "--east", "0", "--south", "0", "--locations-csv", str(table), "--n", "2", "--k", "1", *DESK
            )
        self.assertEqual(code, 0)
        self.assertIn("nearest: Wells Fargo at 79 South 0 East, distance 79", out)

    def test_missing_table_is_a_usage_error(self):
        code, _, err = run_cli("demo-atm", "--east", "0", "--south", "0", "--locations-csv", "/nonexistent.csv")
        self.assertEqual(code, 2)
        self.assertIn("locations_csv", err)


class TestCircuitCommand(unittest.TestCase):
    def test_info_on_bundled_adder(self):
        code, out, _ = run_cli("circuit", "info", "builtin:adder32")
        self.assertEqual(code, 0)
        self.assertIn("W=439 W_i=64 W_o=33 N_g=375", out)

    def test_info_on_nearest_atm(self):
        code, out, _ = run_cli("circuit", "info", "builtin:nearest-atm")
        self.assertEqual(code, 0)
        self.assertIn("XOR=2596 AND=854", out)

    def test_check_reports_the_line(self):
        with tempfile.TemporaryDirectory() as tmp:
            bad = Path(tmp, "bad.circuit")
            bad.write_text("3 2 1 1\nIN 0\nIN 1\nG 0 1 2 00x1\nOUT 2\n", encoding="utf-8")
            code, _, err = run_cli("circuit", "check", str(bad))
        self.assertEqual(code, 2)
        self.assertIn("line 4", err)

    def test_convert_netlist(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp, "adder.circuit")
            code, _, _ = run_cli("circuit", "convert", str(BUNDLED_ADDER_BRISTOL), "--output", str(target))
            self.assertEqual(code, 0)
            expected = serialize_circuit(parse_bristol(BUNDLED_ADDER_BRISTOL.read_text(encoding="utf-8")))
            self.assertEqual(target.read_text(encoding="utf-8"), expected)

    def test_builtin_resolution(self):
        self.assertEqual(resolve_circuit("builtin:adder:3").W_o, 4)
        self.assertEqual(run_cli("circuit", "info", "builtin:adder")[0], 2)
        self.assertEqual(run_cli("circuit", "info", "builtin:multiplier:4")[0], 2)


class TestAnalyze(unittest.TestCase):
    def test_adder_grid(self):
        code, out, _ = run_cli("analyze", "--n-min", "2", "--n-max", "8")
        self.assertEqual(code, 0)
        rows = {int(row["n"]): row for row in csv.DictReader(io.StringIO(out))}
        self.assertEqual(sorted(rows), list(range(2, 9)))
        self.assertEqual(int(rows[5]["entry_traffic_bits"]), 164_099_205)
        self.assertEqual(int(rows[5]["garbled_value_bits"]), 641)

    def test_inverted_range(self):
        self.assertEqual(run_cli("analyze", "--n-min", "5", "--n-max", "2")[0], 2)
