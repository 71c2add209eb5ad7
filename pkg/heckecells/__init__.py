
__version__ = "0.1.0"

from heckecells.laurent import LaurentPoly, RationalFunction, SingularMatrix
from heckecells.symgroup import Permutation, Partition, ParabolicData, SymmetricGroup, \
    SizeMismatch, symmetric_group, rsk, partitions
from heckecells.hecke import HeckeElt, KLTable, kl_table
from heckecells.klcache import KLCache, CacheCorrupt
from heckecells.cells import CellDecomposition, ConventionMismatch, NotACell, \
    compute_cells, cells_via_rsk, singular_pair
from heckecells.action import HeckeModule
from heckecells.cellmod import CellModule, NonUniqueForm, cell_module, invariant_form, cell_iso
from heckecells.induced import InducedModule, IndexPair, FourBases, TriangularityViolation, \
    induce, ind_bar, kl_elements, ind_form, four_bases
from heckecells.parabolic import ModuleKind, ParabolicModule, TwistingAction, \
    parabolic_module, twisting_matrices, parabolic_iso_check
from heckecells.filtration import GKStatistic, Filtration, NotSubmodule, \
    gk_statistic, gk_filtration, dominance_filtration, dominance_implies_squares
from heckecells.config import RunConfig
from heckecells.logger import setupLogger
from heckecells.serializable import SerializableType, Serializable, SerializableEnum, \
    SerializableError, Default
from heckecells.task import TaskPool
