"""Hyperplane census, independent-hyperplane bound and orientability screen
for paving matroids."""

from .census import CensusReport, Classification, HyperplaneRecord, census, classify, hyperplanes, subset_profile
from .core import (
    CircuitList,
    Matroid,
    PavingFamily,
    contract,
    delete,
    dual,
    from_circuits,
    from_paving,
    is_paving,
    is_simple,
    is_sparse_paving,
    relax,
    uniform,
)
from .screen import ScreenVerdict, bound, screen, verify_extension, verify_recurrence

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "CircuitList",
    "Classification",
    "HyperplaneRecord",
    "Matroid",
    "PavingFamily",
    "ScreenVerdict",
    "bound",
    "census",
    "classify",
    "contract",
    "delete",
    "dual",
    "from_circuits",
    "from_paving",
    "hyperplanes",
    "is_paving",
    "is_simple",
    "is_sparse_paving",
    "relax",
    "screen",
    "subset_profile",
    "uniform",
    "verify_extension",
    "verify_recurrence",
]
