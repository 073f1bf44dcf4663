"""Exact-arithmetic verification workbench for hereditary fractionally Calabi-Yau categories."""

from ._config import WorkbenchConfig, load_config_from_yaml
from ._dynkin import DerivedObject, DynkinQuiver, cy_dimension, cy_table, dynkin_quiver, positive_roots
from ._errors import WorkbenchError
from ._export import export
from ._linalg import ExactMatrix
from ._quiver import Quiver, cartan_matrix, coxeter_matrix, euler_form, euler_matrix
from ._reps import Rep, hom_space, ext1_dim, ker_coker
from ._runner import run_suite
from ._suites import SuiteRegistry
from ._torsion import SlopeCut, classify
from ._tubes import TubeObject, hom_dim, tau
from ._twist import SphericalData, dual_twist_class, twist_class
from ._version import __version__
from ._wpl import TubularLattice, WeightType, euler_characteristic, tubular_lattice

__all__ = [
    "__version__",
    "DerivedObject",
    "DynkinQuiver",
    "ExactMatrix",
    "Quiver",
    "Rep",
    "SlopeCut",
    "SphericalData",
    "SuiteRegistry",
    "TubeObject",
    "TubularLattice",
    "WeightType",
    "WorkbenchConfig",
    "WorkbenchError",
    "cartan_matrix",
    "classify",
    "coxeter_matrix",
    "cy_dimension",
    "cy_table",
    "dual_twist_class",
    "dynkin_quiver",
    "euler_characteristic",
    "euler_form",
    "euler_matrix",
    "export",
    "ext1_dim",
    "hom_dim",
    "hom_space",
    "ker_coker",
    "load_config_from_yaml",
    "positive_roots",
    "run_suite",
    "tau",
    "tubular_lattice",
    "twist_class",
]
