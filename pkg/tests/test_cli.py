# -*- coding: utf-8 -*-

from __future__ import annotations

import contextlib
import dataclasses
import io
import json
import tempfile
import unittest
from pathlib import Path
from typing import List, Tuple
from unittest import mock

from octowitt import cli
from octowitt.cli import main
from octowitt.reference import PRINTED_WITT_SIGNS

ONE = ["1", "0", "0", "0", "0", "0", "0", "0"]


def _run(argv: List[str]) -> Tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestTablesCommand(unittest.TestCase):
    def test_sigma_json(self) -> None:
        code, out, _ = _run(["tables", "sigma"])
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["kind"], "sigma")
        self.assertEqual(payload["matrix"][0], [0, 1, 1, 1, 1, 1, 1, 1])
        self.assertEqual([row[0] for row in payload["matrix"]], [0] * 8)

    def test_witt_signs(self) -> None:
        code, out, _ = _run(["tables", "witt"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["signs"], [PRINTED_WITT_SIGNS])

    def test_twistor_text(self) -> None:
        code, out, _ = _run(["tables", "twistor", "--format", "text"])
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("# "))
        self.assertIn("X6", out)
        self.assertIn("+x2", out)

    def test_two_blocks(self) -> None:
        code, out, _ = _run(["tables", "witt", "--n", "2"])
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)["signs"]), 2)

    def test_unknown_kind(self) -> None:
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["tables", "quaternion"])
        self.assertEqual(ctx.exception.code, 2)

    def test_bad_block_count(self) -> None:
        code, _, err = _run(["tables", "witt", "--n", "0"])
        self.assertEqual(code, 2)
        self.assertIn("Error:", err)


class TestDecomposeCommand(unittest.TestCase):
    def test_unit_vector(self) -> None:
        code, out, _ = _run(["decompose", "[1, 0, 0, 0, 0, 0, 0, 0]"])
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertTrue(payload["reconstruction_exact"])
        block = payload["blocks"][0]
        self.assertEqual(block["twistor"][0], ONE)
        self.assertEqual(block["twistor"][1], ["0", "-1", "0", "0", "0", "0", "0", "0"])
        self.assertEqual(len(block["hermitian"]), 8)
        self.assertEqual(payload["reconstruction"], {"dim": 8, "terms": [{"blade": [0], "oct": ONE}]})

    def test_multi_from_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "coords.json"
            path.write_text(json.dumps(["1/2"] * 16), encoding="utf-8")
            code, out, _ = _run(["decompose", str(path), "--n", "2", "--multi"])
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertTrue(payload["multi"])
        self.assertTrue(payload["reconstruction_exact"])
        self.assertEqual(payload["reconstruction"]["n"], 2)

    def test_inexact_reconstruction_exits_one(self) -> None:
        real = cli.witt_decompose

        def inexact(coords, n, strict=True):
            return dataclasses.replace(real(coords, n, strict=False), exact=False)

        with mock.patch.object(cli, "witt_decompose", side_effect=inexact) as spy:
            code, out, _ = _run(["decompose", "[1, 2, 3, 4, 5, 6, 7, 8]"])
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(out)["reconstruction_exact"])
        self.assertEqual(spy.call_args.kwargs, {"strict": False})

    def test_wrong_length(self) -> None:
        code, _, err = _run(["decompose", "[1, 0, 0, 0, 0, 0, 0]"])
        self.assertEqual(code, 2)
        self.assertIn("8 coordinates", err)

    def test_float_rejected(self) -> None:
        code, _, _ = _run(["decompose", "[0.5, 0, 0, 0, 0, 0, 0, 0]"])
        self.assertEqual(code, 2)


class TestApplyCommand(unittest.TestCase):
    X0 = json.dumps(
        {
            "nvars": 8,
            "terms": [
                {"exps": [1, 0, 0, 0, 0, 0, 0, 0], "coeff": {"dim": 8, "terms": [{"blade": [], "oct": ONE}]}}
            ],
        }
    )

    def test_dirac_on_x0(self) -> None:
        code, out, _ = _run(["apply", "dirac", self.X0])
        self.assertEqual(code, 0)
        self.assertEqual(
            json.loads(out),
            {
                "nvars": 8,
                "terms": [{"exps": [0] * 8, "coeff": {"dim": 8, "terms": [{"blade": [0], "oct": ONE}]}}],
            },
        )

    def test_unknown_operator(self) -> None:
        code, _, err = _run(["apply", "curl", self.X0])
        self.assertEqual(code, 2)
        self.assertIn("Error:", err)


class TestVerifyCommand(unittest.TestCase):
    def test_report_is_deterministic(self) -> None:
        argv = ["verify", "--n-max", "1", "--samples", "2", "--seed", "7", "--no-timings"]
        with tempfile.TemporaryDirectory() as tmp:
            first = Path(tmp) / "a.json"
            second = Path(tmp) / "b.json"
            code, out, _ = _run(argv + ["--report", str(first)])
            self.assertEqual(code, 0)
            self.assertIn("Report written to:", out)
            self.assertEqual(_run(argv + ["--report", str(second)])[0], 0)
            text = first.read_text(encoding="utf-8")
            self.assertEqual(text, second.read_text(encoding="utf-8"))
        report = json.loads(text)
        self.assertTrue(report["passed"])
        self.assertEqual(report["config"]["n_max"], 1)
        self.assertNotIn("wall_time", report["suites"][0])
        errata = report["observations"]["printed_twistor_errata"]
        self.assertEqual(len(errata), 1)
        self.assertEqual(errata[0]["column"], "g4")

    def test_default_configuration_is_byte_identical(self) -> None:
        argv = ["verify", "--n-max", "2", "--samples", "100", "--seed", "42", "--no-timings"]
        with tempfile.TemporaryDirectory() as tmp:
            paths = [Path(tmp) / "first.json", Path(tmp) / "second.json"]
            for path in paths:
                self.assertEqual(_run(argv + ["--report", str(path)])[0], 0)
            first, second = (p.read_bytes() for p in paths)
        self.assertEqual(first, second)
        report = json.loads(first)
        self.assertTrue(report["passed"])
        self.assertEqual(report["config"], {"n_max": 2, "samples": 100, "seed": 42, "sample_bound": 100})

    def test_rejects_bad_counts(self) -> None:
        self.assertEqual(_run(["verify", "--n-max", "0"])[0], 2)


class TestParser(unittest.TestCase):
    def test_no_command_prints_help(self) -> None:
        code, out, _ = _run([])
        self.assertEqual(code, 2)
        self.assertIn("usage:", out)


if __name__ == "__main__":
    unittest.main()
