# Copyright (c) 2026, Kerol Systems and Contributors
# See license.txt

import argparse
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr
from unittest import mock

from vcloud.vcloud_mpc.schemas import AnalyzeRequest
from vcloud.vcloud_mpc.utils import get_attr, settings
from vcloud.vcloud_mpc.utils.bits import int_to_bits, msb_bits_to_int, pack_fields, unpack_fields
from vcloud.vcloud_mpc.utils.errors import CombinerError, ParameterError, VCloudError, throw
from vcloud.vcloud_mpc.utils.pydantic_validator import USAGE_EXIT_CODE, validate_command


class TestSettings(unittest.TestCase):
    def tearDown(self):
        settings.clear_conf_cache()

    def test_defaults_without_site_config(self):
        with mock.patch.dict(os.environ, {}, clear=False):
            os.environ.pop(settings.VCLOUD_SITE_CONFIG_ENV, None)
            settings.clear_conf_cache()
            self.assertEqual(settings.get_default_n(), 3)
            self.assertEqual(settings.get_default_k(), 8)
            self.assertEqual(settings.get_group_profile(), "test")

    def test_site_config_overrides(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
            json.dump({settings.VCLOUD_DEFAULT_N: 5, settings.VCLOUD_MODULUS_BITS: 64}, fh)
        try:
            with mock.patch.dict(os.environ, {settings.VCLOUD_SITE_CONFIG_ENV: fh.name}):
                settings.clear_conf_cache()
                self.assertEqual(settings.get_default_n(), 5)
                self.assertEqual(settings.get_modulus_bits(), 64)
                self.assertEqual(settings.get_default_k(), 8)
        finally:
            os.unlink(fh.name)


class TestBits(unittest.TestCase):
    def test_fields_are_packed_big_endian(self):
        data = pack_fields([1, 0, 5], [1, 2, 3])
        self.assertEqual(data, bytes([0b10010100]))
        self.assertEqual(unpack_fields(data, [1, 2, 3]), [1, 0, 5])

    def test_field_overflow(self):
        with self.assertRaises(ValueError):
            pack_fields([4], [2])
        with self.assertRaises(ValueError):
            unpack_fields(bytes(2), [3])

    def test_bit_orders(self):
        self.assertEqual(int_to_bits(6, 4), [0, 1, 1, 0])
        self.assertEqual(msb_bits_to_int([1, 1, 0]), 6)


class TestErrors(unittest.TestCase):
    def test_throw_carries_fields(self):
        with self.assertRaises(CombinerError) as caught:
            throw("share missing", CombinerError, party=3)
        self.assertEqual(caught.exception.party, 3)
        self.assertEqual(caught.exception.exit_code, 3)

    def test_exit_codes(self):
        self.assertEqual(ParameterError.exit_code, 2)
        self.assertEqual(VCloudError.exit_code, 3)

    def test_get_attr(self):
        self.assertIs(get_attr("vcloud.vcloud_mpc.utils.errors.throw"), throw)


class TestValidateCommand(unittest.TestCase):
    def test_valid_arguments_reach_the_command(self):
        @validate_command(AnalyzeRequest)
        def command(data):
            return data

        args = argparse.Namespace(command="analyze", handler=None, n_min=3, n_max=None, k=16)
        data = command(args)
        self.assertEqual((data.n_min, data.n_max, data.k), (3, 8, 16))

    def test_invalid_arguments_exit_with_usage(self):
        @validate_command(AnalyzeRequest)
        def command(data):
            raise AssertionError("not reached")

        err = io.StringIO()
        with redirect_stderr(err):
            code = command(argparse.Namespace(n_min=9, n_max=2))
        self.assertEqual(code, USAGE_EXIT_CODE)
        self.assertIn("n_min must not exceed n_max", err.getvalue())
