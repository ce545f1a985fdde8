# -*- coding: utf-8 -*-

from __future__ import annotations

import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from octowitt.config import Settings


class TestSettings(unittest.TestCase):
    def test_defaults(self) -> None:
        with mock.patch.dict(os.environ, {}, clear=True):
            settings = Settings()
        self.assertEqual(settings.seed, 42)
        self.assertEqual(settings.samples, 100)
        self.assertEqual(settings.n_max, 2)
        self.assertEqual(settings.log_level, "WARNING")
        self.assertIsNone(settings.config_path)

    def test_file_then_environment(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "octowitt.yaml"
            path.write_text("seed: 5\nN_MAX: 3\nlog_level: debug\n", encoding="utf-8")
            env = {"OCTOWITT_CONFIG": str(path), "OCTOWITT_SEED": "11"}
            with mock.patch.dict(os.environ, env, clear=True):
                settings = Settings()
        self.assertEqual(settings.seed, 11)
        self.assertEqual(settings.n_max, 3)
        self.assertEqual(settings.log_level, "DEBUG")

    def test_blank_environment_value_is_ignored(self) -> None:
        with mock.patch.dict(os.environ, {"OCTOWITT_SAMPLES": "  "}, clear=True):
            self.assertEqual(Settings().samples, 100)

    def test_missing_file(self) -> None:
        with mock.patch.dict(os.environ, {"OCTOWITT_CONFIG": "/nonexistent/octowitt.yaml"}, clear=True):
            self.assertEqual(Settings().seed, 42)


if __name__ == "__main__":
    unittest.main()
