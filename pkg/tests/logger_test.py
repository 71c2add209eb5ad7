
import os
import logging
import tempfile
import unittest

from heckecells.logger import LOGLEVEL_TRACE, ScopedLogger, verbosityLevel, setupLogger, log

class LoggerTestCase(unittest.TestCase):

    def setUp(self):
        self.level = log.level
        log.setLevel(LOGLEVEL_TRACE)

    def tearDown(self):
        log.setLevel(self.level)

    def test_verbosity(self):
        self.assertEqual(verbosityLevel(0), logging.WARNING)
        self.assertEqual(verbosityLevel(1), logging.INFO)
        self.assertEqual(verbosityLevel(2), logging.DEBUG)
        self.assertEqual(verbosityLevel(5), LOGLEVEL_TRACE)
        self.assertEqual(logging.getLevelName(LOGLEVEL_TRACE), "TRACE")

    def test_scope_prefix(self):
        with self.assertLogs("heckecells", level=LOGLEVEL_TRACE) as cm:
            ScopedLogger("S5").debug("building KL columns of length %d", 3)
            ScopedLogger("S4/2,2").trace("%d terms", 7)
            ScopedLogger("").error("no scope")
        self.assertEqual([r.getMessage() for r in cm.records],
            ["S5: building KL columns of length 3", "S4/2,2: 7 terms", "no scope"])
        self.assertEqual([r.levelname for r in cm.records], ["DEBUG", "TRACE", "ERROR"])

    def test_caller_location(self):
        with self.assertLogs("heckecells", level=logging.INFO) as cm:
            ScopedLogger("S3").info("loaded")
        self.assertEqual(cm.records[0].funcName, "test_caller_location")
        self.assertEqual(os.path.basename(cm.records[0].pathname), "logger_test.py")

    def test_trace_is_filtered(self):
        log.setLevel(logging.DEBUG)
        with self.assertLogs("heckecells", level=logging.DEBUG) as cm:
            ScopedLogger("S5").trace("hidden")
            ScopedLogger("S5").debug("shown")
        self.assertEqual([r.getMessage() for r in cm.records], ["S5: shown"])

    def test_exception_carries_traceback(self):
        with self.assertLogs("heckecells", level=logging.ERROR) as cm:
            try:
                raise ArithmeticError("division by zero")
            except ArithmeticError:
                ScopedLogger("S2").exception("revalidation failed")
        self.assertIsNotNone(cm.records[0].exc_info)
        self.assertIn("ArithmeticError", cm.output[0])

    def test_log_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "logs", "run.log")
            l = setupLogger("heckecells.filetest", path, logging.INFO)
            try:
                l.info("S4: saved KL table")
                for h in l.handlers:
                    h.flush()
                with open(path) as f:
                    text = f.read()
            finally:
                for h in list(l.handlers):
                    h.close()
                    l.removeHandler(h)
        self.assertIn("INFO", text)
        self.assertIn("S4: saved KL table", text)

def main():
    unittest.main()

if __name__ == '__main__':
    main()
