
import unittest
from unittest import mock

from heckecells import verify
from heckecells.laurent import ZERO, ONE, QTWO
from heckecells.hecke import kl_table
from heckecells.verify import CheckResult, CHECKS, compositions, kl_table_bruteforce, \
    dual_kl_graph, run_check, run_checks, format_table

def explode(max_n):
    raise ArithmeticError("division by zero")

class HelpersTestCase(unittest.TestCase):

    def test_compositions(self):
        self.assertEqual(compositions(1), [[1]])
        self.assertEqual(compositions(3), [[3], [1, 2], [2, 1], [1, 1, 1]])
        self.assertEqual(len(compositions(5)), 16)

    def test_bruteforce_table(self):
        for n in (1, 2, 3, 4):
            self.assertEqual(kl_table_bruteforce(n), kl_table(n), n)

    def test_dual_kl_graph(self):
        D = dual_kl_graph(kl_table(2), 1)
        # D_e is killed, D_s maps to (v + v^-1) D_s + D_e
        self.assertEqual(D[0], [ZERO, ZERO])
        self.assertEqual(D[1], [ONE, QTWO])

class RunCheckTestCase(unittest.TestCase):

    def test_names(self):
        names = [name for name, _ in CHECKS]
        self.assertEqual(len(names), len(set(names)))
        self.assertIn("kl_oracle", names)
        self.assertIn("filtration", names)

    def test_fixtures_pass(self):
        for name in ("gl2_fixture", "gl3_fixture", "induced_kl_element", "s3_cells", "singular_pairs"):
            result = run_check(name, 3)
            self.assertIsInstance(result, CheckResult)
            self.assertTrue(result.passed, "%s: %s" % (name, result.detail))
            self.assertGreaterEqual(result.seconds, 0)

    def test_unknown_check(self):
        with self.assertRaises(KeyError):
            run_check("no_such_check", 3)

    def test_exception_is_a_failure(self):
        with mock.patch.object(verify, "CHECKS", [("explode", explode)]):
            result = run_check("explode", 3)
        self.assertFalse(result.passed)
        self.assertEqual(result.detail, "ArithmeticError: division by zero")

    def test_run_checks_order(self):
        results = run_checks(3, names=["gl2_fixture", "s3_cells"])
        self.assertEqual([r.name for r in results], ["s3_cells", "gl2_fixture"])
        self.assertTrue(all(r.passed for r in results))

    def test_run_checks_in_parallel(self):
        results = run_checks(3, jobs=2, names=["gl2_fixture", "kl_positivity", "s3_cells"])
        self.assertEqual([r.name for r in results], ["s3_cells", "gl2_fixture", "kl_positivity"])
        self.assertTrue(all(r.passed for r in results), format_table(results))

    def test_oracle_cap_is_reported(self):
        self.assertEqual(run_check("kl_oracle", 3).detail, "n <= 3")
        result = run_check("kl_oracle", 6)
        self.assertTrue(result.passed)
        self.assertIn("capped at S4", result.detail)

class AcceptanceSuiteTestCase(unittest.TestCase):

    def test_every_check_passes_at_five(self):
        results = run_checks(5, 1)
        self.assertEqual([r.name for r in results], [name for name, _ in CHECKS])
        for r in results:
            self.assertTrue(r.passed, "%s: %s" % (r.name, r.detail))

class FormatTableTestCase(unittest.TestCase):

    def test_table(self):
        results = [CheckResult(name="s3_cells", passed=True, seconds=0.25, detail="ok"),
            CheckResult(name="relations", passed=False, seconds=1.5, detail="S4 [2, 2]")]
        lines = format_table(results).split("\n")
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[0].startswith("check"))
        self.assertIn("PASS", lines[1])
        self.assertIn("0.250", lines[1])
        self.assertIn("FAIL", lines[2])
        self.assertTrue(lines[2].endswith("S4 [2, 2]"))

    def test_record(self):
        r = CheckResult(name="kl_oracle", passed=True, seconds=0.5, detail="n <= 4")
        self.assertEqual(CheckResult.loads(r.dumps()), r)

def main():
    unittest.main()

if __name__ == '__main__':
    main()
