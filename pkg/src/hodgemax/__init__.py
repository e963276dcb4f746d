"""Exact bookkeeping for variations of Hodge structures with strictly maximal
Higgs fields over punctured curves."""

from .arakelov import AuditReport, LevelBound, PositivityViolation, Verdict, audit, level_bound
from .constructions import borcea_vhs, involution_quotient_vhs, kummer_table
from .core import (
    BaseCurve,
    GradedHiggsBundle,
    HodgeComponent,
    RepObject,
    TwistedRep,
    log_canonical_degree,
    theta_characteristic_degree,
    validate,
)
from .sl2 import (
    IntegerMatrix2,
    clebsch_gordan,
    dual,
    hodge_numbers,
    sym_power,
    sym_power_trace_oracle,
    tensor,
    tensor_power_decompose,
    trace_polynomial,
)
from .structure import (
    WidthDecomposition,
    assemble,
    build_pure_component,
    degree_zero_check,
    feasibility,
    invariant_bidegree_check,
    slope_check,
    width_multiplicities_from_hodge_numbers,
)

__version__ = "0.1.0"
