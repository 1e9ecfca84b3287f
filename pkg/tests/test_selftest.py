import unittest

import pytest

from src.config.config import AppConfig
from src.core.selftest import (
    check_alpha_beta, check_betti_special, check_cc_alignment, check_duality, check_laurent,
    check_positivity, check_z, run_selftest,
)


class TestChecks(unittest.TestCase):
    def test_cheap_checks_pass(self):
        checks = {
            "betti": lambda: check_betti_special(8),
            "duality": lambda: check_duality(6),
            "z": lambda: check_z(3),
            "cc": lambda: check_cc_alignment(3),
            "laurent": lambda: check_laurent(6),
            "alpha-beta": lambda: check_alpha_beta(4),
            "positivity": lambda: check_positivity(4),
        }
        for name, check in checks.items():
            with self.subTest(check=name):
                passed, detail = check()
                self.assertTrue(passed, detail)

    def test_runner_selects_criteria(self):
        records = run_selftest(AppConfig(), quick=True, only=[2, 5, 9])
        self.assertEqual([r.criterion for r in records], [2, 5, 9])
        self.assertTrue(all(r.passed for r in records))
        self.assertTrue(all(r.elapsed >= 0 for r in records))

    def test_runner_reports_failures(self):
        # max_q below every prime makes the oracle refuse every field
        config = AppConfig().model_copy(update={"oracle": AppConfig().oracle.model_copy(update={"max_q": 1})})
        (record,) = run_selftest(config, quick=True, only=[3])
        self.assertFalse(record.passed)
        self.assertIn("ResourceBoundError", record.detail)

    @pytest.mark.slow
    def test_full_run(self):
        records = run_selftest(AppConfig(jobs=2))
        self.assertEqual(len(records), 12)
        failed = [f"{r.criterion} {r.detail}" for r in records if not r.passed]
        self.assertEqual(failed, [])


if __name__ == "__main__":
    unittest.main()
