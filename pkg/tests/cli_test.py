
import io
import os
import json
import tempfile
import unittest
from unittest import mock
from contextlib import redirect_stdout, redirect_stderr

from heckecells import verify
from heckecells.laurent import ONE, V
from heckecells.symgroup import Permutation
from heckecells.klcache import PairRecord
from heckecells.config import RunConfig
from heckecells import __main__ as cli
from heckecells.__main__ import build_parser, CellsReport, ParabolicReport, FiltrationReport, \
    VerifyReport, EXIT_OK, EXIT_FAILURE, EXIT_USAGE

def passing(max_n):
    return True, "max_n = %d" % max_n

def failing(max_n):
    return False, "wrong"

class CliTestCase(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name
        self.out = os.path.join(self.tmp, "out.json")

    def tearDown(self):
        self._tmp.cleanup()

    def run_main(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            code = cli.main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def read(self, cls=None):
        with open(self.out) as f:
            text = f.read()
        return cls.loads(text) if cls else json.loads(text)

    def test_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["induce", "4", "--composition", "2,2", "-vv"])
        self.assertEqual(args.command, "induce")
        self.assertEqual(args.verbose, 2)
        args = parser.parse_args(["verify", "--max-n", "5"])
        self.assertEqual(args.max_n, 5)

    def test_kl_pair(self):
        code, _, _ = self.run_main("kl", "4", "--pair", "1324", "3412", "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        record = self.read(PairRecord)
        self.assertEqual(record.h, V ** 3 + V)
        self.assertEqual(record.x, Permutation.parse("3412"))

    def test_kl_to_stdout(self):
        code, out, _ = self.run_main("kl", "2")
        self.assertEqual(code, EXIT_OK)
        pairs = json.loads(out)["pairs"]
        self.assertEqual(len(pairs), 3)

    def test_cells(self):
        code, _, _ = self.run_main("cells", "3", "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        report = self.read(CellsReport)
        self.assertEqual(report.convention, "P")
        self.assertEqual(len(report.right_cells), 4)
        self.assertEqual(len(report.two_sided_cells), 3)
        self.assertEqual(sum(len(c.members) for c in report.left_cells), 6)

    def test_cell_module(self):
        code, _, _ = self.run_main("cellmod", "3", "--cell-of", "2,3,1", "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        record = self.read()
        self.assertEqual(record["cell"], [[2, 1, 3], [2, 3, 1]])
        self.assertEqual(sorted(record["action"]), ["1", "2"])

    def test_induce(self):
        code, _, _ = self.run_main("induce", "3", "--composition", "2,1",
            "--cell-of", "2,1,3", "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        record = self.read()
        self.assertEqual(record["basis"][0], [[2, 1, 3], [1, 2, 3]])
        self.assertEqual(len(record["kl"]), 3)
        self.assertEqual(record["j_set"], [])

    def test_parabolic(self):
        code, _, _ = self.run_main("parabolic", "3", "--composition", "2,1",
            "--kind", "twisting", "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        report = self.read(ParabolicReport)
        self.assertEqual(report.kind, "twisting")
        self.assertEqual(len(report.basis), 3)
        self.assertEqual(report.action[2][0][1], ONE)

    def test_filtration(self):
        code, _, _ = self.run_main("filtration", "3", "--composition", "1,1,1",
            "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        report = self.read(FiltrationReport)
        self.assertEqual(report.thresholds, [0, 2, 3])
        self.assertTrue(report.coincide)

    def test_config_file(self):
        cfg = RunConfig(command="induce", n=3, composition=[1, 2])
        path = os.path.join(self.tmp, "run.json")
        with open(path, "w") as f:
            f.write(cfg.dumps())
        code, _, _ = self.run_main("induce", "3", "--config", path, "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(self.read()["composition"], [1, 2])

    def test_usage_errors(self):
        code, _, err = self.run_main("induce", "3", "--composition", "2,2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("does not sum to 3", err)
        code, _, _ = self.run_main("cellmod", "3", "--cell-of", "2,1")
        self.assertEqual(code, EXIT_USAGE)
        code, _, _ = self.run_main("induce", "3", "--config", os.path.join(self.tmp, "missing.json"))
        self.assertEqual(code, EXIT_USAGE)
        code, _, _ = self.run_main()
        self.assertEqual(code, EXIT_USAGE)
        code, _, _ = self.run_main("draw", "3")
        self.assertEqual(code, EXIT_USAGE)

    def test_runtime_failure(self):
        # 3,2,1 is not in the parabolic subgroup of 2,1
        code, _, err = self.run_main("induce", "3", "--composition", "2,1", "--cell-of", "3,2,1")
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn("NotACell", err)

    def test_verify(self):
        with mock.patch.object(verify, "CHECKS", [("passing", passing)]):
            code, out, _ = self.run_main("verify", "--max-n", "3", "--json", self.out)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("PASS", out)
        report = self.read(VerifyReport)
        self.assertTrue(report.passed)
        self.assertEqual(report.checks[0].detail, "max_n = 3")

        checks = [("passing", passing), ("failing", failing)]
        with mock.patch.object(verify, "CHECKS", checks):
            code, out, _ = self.run_main("verify")
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn("FAIL", out)

def main():
    unittest.main()

if __name__ == '__main__':
    main()
