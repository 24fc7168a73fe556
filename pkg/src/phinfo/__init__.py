"""Information-theoretic measures of diatomic molecules in a pseudoharmonic
potential: Fisher, Shannon, Renyi, Tsallis and Onicescu measures of the
position- and momentum-space radial densities, each available through an
analytic closed form and an independent adaptive-quadrature route.
"""

from .moldata import (
    MoleculeParams,
    MoleculeParseError,
    MoleculeTable,
    builtin_molecules,
    dump_molecules,
    load_molecules,
)
from .states import (
    Mode,
    RadialDensity,
    Space,
    StateParams,
    density,
    make_state,
    momentum_density,
    position_density,
    potential,
    radial_norm,
)
from .measures import (
    DegenerateParameterError,
    MeasureError,
    MeasureKind,
    MeasureResult,
    Method,
    UnsupportedMethodError,
    fisher,
    measure,
    onicescu,
    ratio,
    renyi,
    shannon,
    tsallis,
    wq,
)
from .quadrature import (
    ConvergenceError,
    DomainError,
    QuadratureConfig,
    QuadratureError,
    QuadResult,
    integrate_halfline,
    integrate_interval,
)

__version__ = "0.1.0"

__all__ = [
    "MoleculeParams",
    "MoleculeParseError",
    "MoleculeTable",
    "builtin_molecules",
    "dump_molecules",
    "load_molecules",
    "Mode",
    "RadialDensity",
    "Space",
    "StateParams",
    "density",
    "make_state",
    "momentum_density",
    "position_density",
    "potential",
    "radial_norm",
    "DegenerateParameterError",
    "MeasureError",
    "MeasureKind",
    "MeasureResult",
    "Method",
    "UnsupportedMethodError",
    "fisher",
    "measure",
    "onicescu",
    "ratio",
    "renyi",
    "shannon",
    "tsallis",
    "wq",
    "ConvergenceError",
    "DomainError",
    "QuadratureConfig",
    "QuadratureError",
    "QuadResult",
    "integrate_halfline",
    "integrate_interval",
    "__version__",
]
