import io
import json
import os
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

import pytest

from src.config.config import get_config
from src.tools.render import JsonUtils, render_json


class TestCli(unittest.TestCase):
    def run_cli(self, argv):
        from main import main
        buf_out, buf_err = io.StringIO(), io.StringIO()
        with redirect_stdout(buf_out), redirect_stderr(buf_err):
            try:
                code = main(argv)
            except SystemExit as e:
                code = int(e.code)
        return code, buf_out.getvalue().strip(), buf_err.getvalue().strip()

    def run_json(self, argv):
        code, out, err = self.run_cli(["--format", "json"] + argv)
        return code, json.loads(out) if out else None, err

    # poincare / euler

    def test_poincare_plain(self):
        code, out, err = self.run_cli(["poincare", "-t", "R", "-n", "3", "-e", "1,2"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), [
            "Gr_(1,2)(R3)",
            "coefficients: [1, 2, 1]",
            "euler_characteristic: 4",
            "dimension: 2",
        ])

    def test_poincare_json(self):
        cases = [
            (["-t", "R", "-n", "5", "-e", "0,2"], [1, 1, 2, 2, 2, 1, 1], 10),
            (["-t", "P", "-n", "1", "-e", "1,2"], [1], 1),
            (["-t", "I", "-n", "1", "-e", "1,1"], [1, 1], 2),
            (["-t", "R", "-n", "2", "-e", "2,1"], [], 0),
        ]
        for flags, coefficients, chi in cases:
            with self.subTest(flags=flags):
                code, data, _ = self.run_json(["poincare"] + flags)
                self.assertEqual(code, 0)
                self.assertEqual(data["command"], "poincare")
                self.assertEqual(data["result"]["coefficients"], coefficients)
                self.assertEqual(data["result"]["euler_characteristic"], chi)

    def test_euler_of_direct_sum(self):
        code, data, _ = self.run_json(["euler", "-m", "P0+P0", "-e", "0,1"])
        self.assertEqual(code, 0)
        self.assertEqual(data["result"]["euler_characteristic"], 2)
        self.assertEqual(data["parameters"]["module"], "P0+P0")

    def test_euler_needs_a_module(self):
        code, out, err = self.run_cli(["euler", "-e", "0,1"])
        self.assertEqual(code, 2)
        self.assertIn("euler needs", err)

    # cells / fixed points / strata

    def test_cells(self):
        code, data, _ = self.run_json(["cells", "-n", "3", "-e", "1,2"])
        self.assertEqual(code, 0)
        rows = data["result"]["rows"]
        self.assertEqual([(r["s1"], r["s2"]) for r in rows], [([1], [1, 2]), ([2], [2, 3]), ([3], [1, 3]), ([3], [2, 3])])
        self.assertEqual([r["dim_hom"] for r in rows], [2, 1, 1, 0])
        self.assertEqual([r["dim_recursive"] for r in rows], [2, 1, 1, 0])
        self.assertEqual(data["result"]["poincare"], [1, 2, 1])
        self.assertEqual(data["result"]["closed_form"], [1, 2, 1])

    def test_cells_compute_each_dimension_once(self):
        import main
        with mock.patch.object(main, "cell_dimension", wraps=main.cell_dimension) as spy:
            code, data, _ = self.run_json(["cells", "-n", "4", "-e", "2,3"])
        self.assertEqual(code, 0)
        self.assertEqual(spy.call_count, len(data["result"]["rows"]))
        self.assertEqual(data["result"]["poincare"], data["result"]["closed_form"])

    def test_cells_csv(self):
        code, out, _ = self.run_cli(["--format", "csv", "cells", "-n", "2", "-e", "1,1"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["s1,s2,summands,dim_hom,dim_recursive", "2,2,R1,0,0"])

    def test_fixed_points(self):
        code, data, _ = self.run_json(["fixed-points", "-t", "R", "-n", "3", "-e", "1,2"])
        self.assertEqual(code, 0)
        self.assertEqual(data["result"]["count"], 4)
        self.assertEqual([p["summands"] for p in data["result"]["points"]], ["1(P1)", "2(P1)", "1(P0) + R1", "2(P0) + R1"])
        self.assertEqual([p["k"] for p in data["result"]["points"]], [0, 0, 0, 1])

    def test_fixed_points_preprojective(self):
        code, out, _ = self.run_cli(["fixed-points", "-t", "P", "-n", "2", "-e", "0,1"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[-1], "count: 3")

    def test_strata(self):
        code, data, _ = self.run_json(["strata", "-n", "2", "-e", "1,1"])
        self.assertEqual(code, 0)
        self.assertEqual([s["ambient"] for s in data["result"]["strata"]], ["R2", "R0"])
        self.assertEqual(data["result"]["smooth_part_euler"], 0)
        self.assertFalse(data["result"]["smooth"])

    def test_strata_of_empty_variety(self):
        code, data, _ = self.run_json(["strata", "-n", "3", "-e", "2,1"])
        self.assertEqual(code, 0)
        self.assertEqual(data["result"]["strata"], [])
        self.assertEqual(data["result"]["smooth_part_euler"], 0)
        self.assertIsNone(data["result"]["smooth"])

    # oracle

    def test_count_fq(self):
        code, out, _ = self.run_cli(["count-fq", "-t", "R", "-n", "3", "-e", "1,2", "-q", "2"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["count: 9", "poincare_at_q: 9", "MATCH"])

    def test_count_fq_exhaustive(self):
        code, data, _ = self.run_json(["count-fq", "-t", "R", "-n", "2", "-e", "1,1", "-q", "3", "--exhaustive"])
        self.assertEqual(code, 0)
        self.assertEqual(data["result"]["count"], 1)
        self.assertEqual(data["result"]["verdict"], "MATCH")

    def test_count_fq_resource_bound(self):
        code, out, err = self.run_cli(["count-fq", "-t", "R", "-n", "6", "-e", "3,3", "-q", "5"])
        self.assertEqual(code, 3)
        self.assertEqual(out, "")
        self.assertIn("resource bound", err)

    def test_count_fq_non_prime(self):
        code, _, err = self.run_cli(["count-fq", "-t", "R", "-n", "2", "-e", "1,1", "-q", "4"])
        self.assertEqual(code, 2)
        self.assertIn("not prime", err)

    # cluster

    def test_cluster_var(self):
        code, out, _ = self.run_cli(["cluster", "var", "-k", "3"])
        self.assertEqual(code, 0)
        self.assertEqual(out, "x1^-1 + x1^-1*x2^2")

    def test_cluster_var_negative_index(self):
        code, data, _ = self.run_json(["cluster", "var", "-k", "-1", "--a21"])
        self.assertEqual(code, 0)
        self.assertEqual(data["parameters"], {"k": -1, "type": "A21"})

    def test_cluster_z(self):
        code, out, _ = self.run_cli(["cluster", "z", "-n", "1"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2", "EQUAL"])

    def test_cluster_u(self):
        code, data, _ = self.run_json(["cluster", "u", "-n", "2"])
        self.assertEqual(code, 0)
        self.assertEqual(data["result"]["verdict"], "EQUAL")
        self.assertEqual(data["result"]["recurrence"], data["result"]["geometric"])

    def test_cluster_cc(self):
        code, out, _ = self.run_cli(["cluster", "cc", "-t", "I", "-n", "0"])
        self.assertEqual(code, 0)
        self.assertEqual(out, "x1^-1 + x1^-1*x2^2")
        code, out, _ = self.run_cli(["cluster", "cc", "-t", "R", "-n", "2", "--level", "1"])
        self.assertEqual(code, 0)
        self.assertEqual(out, "1")

    def test_cluster_level_needs_regular(self):
        code, _, err = self.run_cli(["cluster", "cc", "-m", "P1", "--level", "0"])
        self.assertEqual(code, 2)
        self.assertIn("--level", err)

    def test_cluster_bound(self):
        code, _, err = self.run_cli(["cluster", "var", "-k", "99"])
        self.assertIn("bound", err)
        self.assertEqual(code, 3)

    # usage errors

    def test_usage_errors(self):
        cases = [
            ["poincare", "-t", "X", "-n", "3", "-e", "1,2"],
            ["poincare", "-t", "R", "-n", "3", "-e", "1;2"],
            ["poincare", "-t", "R", "-n", "-3", "-e", "1,2"],
            ["count-fq", "-t", "R", "-n", "2", "-e", "1,1", "-q", "0"],
            ["--max-rank", "2", "poincare", "-t", "R", "-n", "3", "-e", "1,2"],
            ["euler", "-m", "Q7", "-e", "0,1"],
            [],
        ]
        for argv in cases:
            with self.subTest(argv=argv):
                code, out, _ = self.run_cli(argv)
                self.assertEqual(code, 2)
                self.assertEqual(out, "")

    def test_invalid_environment(self):
        get_config.cache_clear()
        self.addCleanup(get_config.cache_clear)
        with mock.patch.dict(os.environ, {"QG_JOBS": "zero"}):
            code, _, err = self.run_cli(["poincare", "-t", "R", "-n", "3", "-e", "1,2"])
        self.assertEqual(code, 2)
        self.assertIn("invalid configuration", err)

    def test_format_from_environment(self):
        get_config.cache_clear()
        self.addCleanup(get_config.cache_clear)
        with mock.patch.dict(os.environ, {"QG_FORMAT": "json"}):
            code, out, _ = self.run_cli(["cluster", "s", "-n", "0"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["result"]["text"], "1")

    # output envelope

    def test_json_round_trip(self):
        code, out, _ = self.run_cli(["--format", "json", "poincare", "-t", "R", "-n", "4", "-e", "1,3"])
        self.assertEqual(code, 0)
        env = JsonUtils.parse_envelope(out)
        self.assertIsNotNone(env)
        self.assertEqual(render_json(env), out)
        self.assertEqual(env.parameters, {"type": "R", "n": 4, "e": [1, 3]})
        self.assertEqual(env.result["dimension"], 4)

    def test_parse_envelope_rejects_garbage(self):
        self.assertIsNone(JsonUtils.parse_envelope("{not json"))

    @pytest.mark.slow
    def test_selftest_quick(self):
        code, data, _ = self.run_json(["selftest", "--quick"])
        self.assertEqual(code, 0)
        self.assertTrue(data["result"]["passed"])
        self.assertEqual([r["criterion"] for r in data["result"]["records"]], list(range(1, 13)))


if __name__ == "__main__":
    unittest.main()
