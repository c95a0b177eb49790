"""slabrte: meshless RBF collocation solver for slab radiative transfer.

The intensity field of a plane-parallel scattering slab is approximated
as a sum of radial basis functions; collocating the transport equation
at interior and outflow nodes and the known inflow intensities at the
irradiated face halves yields a dense linear system whose solution gives
the intensity everywhere, the transmitted flux and a residual-norm
convergence indicator.
"""

from .assembly import LinearSystem, assemble, interpolation_matrix
from .estimator import RteCollocationSolver
from .fields import SolvedField
from .grid import NodeClass, NodePartition, build_partition
from .kernels import KERNEL_FAMILIES, RbfKernel
from .legendre import PhaseExpansion, legendre, legendre_table
from .problems import SlabProblem, constant, example1, example2, polynomial
from .quadrature import QuadratureRule, composite_simpson, gauss_legendre, integrate
from .solver import (
    DegradedSolveWarning,
    IllConditionedWarning,
    SingularMatrixError,
    SolveReport,
    solve_dense,
    solve_system,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_FAMILIES",
    "DegradedSolveWarning",
    "IllConditionedWarning",
    "LinearSystem",
    "NodeClass",
    "NodePartition",
    "PhaseExpansion",
    "QuadratureRule",
    "RbfKernel",
    "RteCollocationSolver",
    "SingularMatrixError",
    "SlabProblem",
    "SolveReport",
    "SolvedField",
    "__version__",
    "assemble",
    "build_partition",
    "composite_simpson",
    "constant",
    "example1",
    "example2",
    "gauss_legendre",
    "integrate",
    "interpolation_matrix",
    "legendre",
    "legendre_table",
    "polynomial",
    "solve_dense",
    "solve_system",
]
