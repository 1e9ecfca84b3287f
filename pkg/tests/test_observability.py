import os
import unittest
from unittest import mock

from src.observability import observability
from src.observability.observability import initialize_tracing, is_tracing_enabled, observe_if_available, timed


class TestTracing(unittest.TestCase):
    def test_disabled_without_api_key(self):
        env = {k: v for k, v in os.environ.items() if k != "LMNR_PROJECT_API_KEY"}
        with mock.patch.dict(os.environ, env, clear=True), \
                mock.patch.object(observability, "_laminar_initialized", False):
            self.assertFalse(initialize_tracing())
            self.assertFalse(is_tracing_enabled())

    def test_decorator_passes_through_when_disabled(self):
        @observe_if_available(name="double")
        def double(x):
            return 2 * x

        with mock.patch.object(observability, "_laminar_initialized", False):
            self.assertEqual(double(21), 42)
        self.assertEqual(double.__name__, "double")


class TestTimed(unittest.TestCase):
    def test_records_elapsed(self):
        with timed("block") as clock:
            sum(range(100))
        self.assertEqual(clock["label"], "block")
        self.assertGreaterEqual(clock["elapsed"], 0.0)


if __name__ == "__main__":
    unittest.main()
