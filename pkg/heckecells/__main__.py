#! cd .. && python3 -m heckecells

import sys
import argparse
from typing import List, Dict, Tuple

from heckecells.laurent import LaurentPoly, RationalFunction
from heckecells.symgroup import Permutation, Partition
from heckecells.hecke import kl_table
from heckecells.klcache import PairRecord
from heckecells.cells import compute_cells, rsk_convention, two_sided_shape, parabolic_cell_of
from heckecells.cellmod import cell_module
from heckecells.induced import induce, four_bases
from heckecells.parabolic import parabolic_module, twisting_matrices
from heckecells.filtration import FiltrationLayer, gk_filtration, dominance_filtration, \
    compare_filtrations
from heckecells.verify import CheckResult, run_checks, format_table
from heckecells.config import RunConfig, KINDS
from heckecells.serializable import Serializable, SerializableError
from heckecells.logger import hklogger, basicConfig, verbosityLevel, setupLogger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

class KLReport(Serializable):
    n: int = 0
    pairs: List[PairRecord] = None

class CellRecord(Serializable):
    index: int = 0
    shape: Partition = None
    members: List[Permutation] = None
    below: List[int] = None

class CellsReport(Serializable):
    n: int = 0
    convention: str = ""
    right_cells: List[CellRecord] = None
    left_cells: List[CellRecord] = None
    two_sided_cells: List[CellRecord] = None

class CellModuleReport(Serializable):
    n: int = 0
    cell: List[Permutation] = None
    action: Dict[int, List[List[LaurentPoly]]] = None
    form: List[List[LaurentPoly]] = None

class InducedReport(Serializable):
    n: int = 0
    composition: List[int] = None
    cell: List[Permutation] = None
    basis: List[Tuple[Permutation, Permutation]] = None
    action: Dict[int, List[List[LaurentPoly]]] = None
    kl_s: List[List[LaurentPoly]] = None
    kl: List[List[LaurentPoly]] = None
    dual_kl_s: List[List[RationalFunction]] = None
    dual_kl: List[List[RationalFunction]] = None
    form: List[List[LaurentPoly]] = None
    j_set: List[Permutation] = None

class ParabolicReport(Serializable):
    n: int = 0
    composition: List[int] = None
    kind: str = ""
    basis: List[Permutation] = None
    action: Dict[int, List[List[LaurentPoly]]] = None

class FiltrationReport(Serializable):
    n: int = 0
    composition: List[int] = None
    cell: List[Permutation] = None
    thresholds: List[int] = None
    layers: List[FiltrationLayer] = None
    dominance_layers: List[List[Partition]] = None
    coincide: bool = False

class VerifyReport(Serializable):
    max_n: int = 0
    passed: bool = False
    checks: List[CheckResult] = None

class Command(object):

    name = None
    aliases = []

    def __init__(self):
        super(Command, self).__init__()

    def register(self, parser):

        kwargs = {}
        if self.aliases:
            kwargs['aliases'] = self.aliases

        help = self.__doc__ or ""
        help = help.replace("\n    ", "\n")
        kwargs['help'] = help.strip().split("\n")[0]
        kwargs['description'] = help.strip()

        subparser = parser.add_parser(self.name,
            formatter_class=argparse.RawTextHelpFormatter, **kwargs)
        subparser.set_defaults(_parser=subparser, func=self.execute, cli=self,
            command=self.name)

        subparser.add_argument("-v", "--verbose", action="count", default=0,
            help="-v info, -vv debug, -vvv trace")
        subparser.add_argument("--log-file", type=str, default=None,
            help="also log to this file, rotated at 1 MiB")
        subparser.add_argument("--config", type=str, default=None,
            help="read the run configuration from a JSON file")
        subparser.add_argument("--cache", type=str, default=None,
            help="KL cache file or directory (default: $HECKE_CACHE_DIR)")
        subparser.add_argument("--json", type=str, default=None,
            help="write the JSON output to this file instead of stdout")
        self.add_arguments(subparser)

    def add_arguments(self, subparser):
        subparser.add_argument("n", type=int, help="the rank of the symmetric group")

    def execute(self, cfg):
        return EXIT_OK

    def table(self, cfg):
        return kl_table(cfg.n, cfg.klCache())

    def emit(self, cfg, record):
        text = record.dumps() + "\n"
        if cfg.output:
            with open(cfg.output, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)

def _cell_of(cfg, p, t):
    u = cfg.cell_of if cfg.cell_of is not None else Permutation.identity(cfg.n)
    return parabolic_cell_of(p, t, u)

class KLCommand(Command):
    """
    Kazhdan-Lusztig polynomials of Sn

    Prints every nonzero h(y,x), or the single polynomial of --pair Y X.
    Elements are given in comma separated one-line notation.
    """
    name = "kl"

    def add_arguments(self, subparser):
        super(KLCommand, self).add_arguments(subparser)
        subparser.add_argument("--pair", nargs=2, metavar=("Y", "X"), default=None,
            help="print only h(Y,X)")

    def execute(self, cfg):
        t = self.table(cfg)
        if cfg.pair:
            y, x = cfg.pair
            self.emit(cfg, PairRecord(y=y, x=x, h=t.h(y, x)))
        else:
            pairs = [PairRecord(y=y, x=x, h=h) for y, x, h in t.pairs()]
            self.emit(cfg, KLReport(n=cfg.n, pairs=pairs))
        return EXIT_OK

class CellsCommand(Command):
    """
    Left, right and two-sided cells of Sn

    Right cells list the right cells directly below them in the right order.
    """
    name = "cells"

    def execute(self, cfg):
        c = compute_cells(self.table(cfg))

        def records(cells, order=None):
            return [CellRecord(index=k, shape=two_sided_shape(cell), members=cell,
                below=order[k] if order else []) for k, cell in enumerate(cells)]

        self.emit(cfg, CellsReport(n=cfg.n, convention=rsk_convention(),
            right_cells=records(c.right_cells, c.right_order),
            left_cells=records(c.left_cells),
            two_sided_cells=records(c.two_sided_cells)))
        return EXIT_OK

class CellModuleCommand(Command):
    """
    The cell module of the right cell containing --cell-of
    """
    name = "cellmod"

    def add_arguments(self, subparser):
        super(CellModuleCommand, self).add_arguments(subparser)
        subparser.add_argument("--cell-of", type=str, default=None,
            help="an element of the right cell (default: the identity)")

    def execute(self, cfg):
        t = self.table(cfg)
        c = compute_cells(t)
        w = cfg.cell_of if cfg.cell_of is not None else Permutation.identity(cfg.n)
        m = cell_module(c.cell_of(w), t, c)
        self.emit(cfg, CellModuleReport(n=cfg.n, cell=m.cell, action=m.matrices, form=m.form()))
        return EXIT_OK

class InduceCommand(Command):
    """
    The module induced from a right cell of a parabolic subgroup

    --composition gives the blocks of W' (default: W' = Sn) and --cell-of an
    element of W' whose right cell is induced.
    """
    name = "induce"

    def add_arguments(self, subparser):
        super(InduceCommand, self).add_arguments(subparser)
        subparser.add_argument("--composition", type=str, default=None,
            help="block sizes i1,i2,... summing to n")
        subparser.add_argument("--cell-of", type=str, default=None,
            help="an element of W' (default: the identity)")

    def execute(self, cfg):
        t = self.table(cfg)
        p = cfg.parabolic()
        m = induce(p, _cell_of(cfg, p, t), t)
        fb = four_bases(m)
        self.emit(cfg, InducedReport(n=cfg.n, composition=list(p.composition), cell=m.cell,
            basis=[(b.x, b.w) for b in m.basis], action=m.matrices,
            kl_s=fb.kl_s, kl=fb.kl, dual_kl_s=fb.dual_kl_s, dual_kl=fb.dual_kl,
            form=m.form(), j_set=m.j_set))
        return EXIT_OK

class ParabolicCommand(Command):
    """
    Sign and permutation parabolic modules, and twisting matrices
    """
    name = "parabolic"

    def add_arguments(self, subparser):
        super(ParabolicCommand, self).add_arguments(subparser)
        subparser.add_argument("--composition", type=str, default=None,
            help="block sizes i1,i2,... summing to n")
        subparser.add_argument("--kind", choices=KINDS, default=None,
            help="the module to print (default: permutation)")

    def execute(self, cfg):
        p = cfg.parabolic()
        if cfg.kind == "twisting":
            m = twisting_matrices(p)
        else:
            m = parabolic_module(cfg.kind, p)
        self.emit(cfg, ParabolicReport(n=cfg.n, composition=list(p.composition),
            kind=cfg.kind, basis=m.basis, action=m.matrices))
        return EXIT_OK

class FiltrationCommand(Command):
    """
    The Gelfand-Kirillov filtration of an induced module

    Also builds the dominance filtration from the Specht constituents and
    reports whether the two coincide.
    """
    name = "filtration"

    def add_arguments(self, subparser):
        super(FiltrationCommand, self).add_arguments(subparser)
        subparser.add_argument("--composition", type=str, default=None,
            help="block sizes i1,i2,... summing to n")
        subparser.add_argument("--cell-of", type=str, default=None,
            help="an element of W' (default: the identity)")

    def execute(self, cfg):
        t = self.table(cfg)
        p = cfg.parabolic()
        m = induce(p, _cell_of(cfg, p, t), t)
        gk = gk_filtration(m)
        dom = dominance_filtration(m)
        self.emit(cfg, FiltrationReport(n=cfg.n, composition=list(p.composition), cell=m.cell,
            thresholds=gk.thresholds, layers=gk.layers, dominance_layers=dom.shape_layers(),
            coincide=compare_filtrations(gk, dom)))
        return EXIT_OK

class VerifyCommand(Command):
    """
    Run the acceptance checks and print a pass/fail table

    Exits 0 when every check passes.
    """
    name = "verify"

    def add_arguments(self, subparser):
        subparser.add_argument("--max-n", type=int, default=None,
            help="largest rank checked (default: 4)")
        subparser.add_argument("--jobs", type=int, default=None,
            help="run checks in this many processes")

    def execute(self, cfg):
        results = run_checks(cfg.max_n, cfg.jobs)
        passed = all(r.passed for r in results)
        print(format_table(results))
        if cfg.output:
            self.emit(cfg, VerifyReport(max_n=cfg.max_n, passed=passed, checks=results))
        return EXIT_OK if passed else EXIT_FAILURE

COMMANDS = [KLCommand, CellsCommand, CellModuleCommand, InduceCommand,
    ParabolicCommand, FiltrationCommand, VerifyCommand]

def build_parser():
    parser = argparse.ArgumentParser(prog="heckecells",
        description='Hecke algebras, Kazhdan-Lusztig cells and induced cell modules of Sn')
    subparser = parser.add_subparsers()

    for cls in COMMANDS:
        cls().register(subparser)

    return parser

def main(argv=None):
    """ run one command; returns the exit status """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    if args is None or not hasattr(args, 'func'):
        parser.print_help()
        return EXIT_USAGE

    level = verbosityLevel(args.verbose)
    basicConfig(level)
    if args.log_file:
        setupLogger("heckecells", args.log_file, level)

    try:
        base = None
        if args.config:
            with open(args.config) as f:
                base = RunConfig.loads(f.read())
        cfg = RunConfig.fromArgs(args, base).validate()
    except (ValueError, SerializableError, OSError) as e:
        args._parser.print_usage(sys.stderr)
        sys.stderr.write("heckecells %s: error: %s\n" % (args.command, e))
        return EXIT_USAGE

    try:
        return args.func(cfg)
    except ValueError as e:
        hklogger.exception("%s failed", args.command)
        sys.stderr.write("heckecells %s: error: %s\n" % (args.command, e))
        return EXIT_USAGE
    except Exception as e:
        hklogger.exception("%s failed", args.command)
        sys.stderr.write("heckecells %s: %s: %s\n" % (args.command, e.__class__.__name__, e))
        return EXIT_FAILURE

if __name__ == '__main__':
    sys.exit(main())
