"""Exact characteristic classes and genera of singular projective hypersurfaces.

The library computes Chern, Todd, L, Hirzebruch and lambda classes of
(possibly singular) complete intersections in projective space, using the
splitting principle on the virtual tangent bundle and localized corrections
built from the Milnor fibres of quasi-homogeneous isolated singularities.
"""

from .errors import DomainError, InvalidGermError, SingclassError, UnsupportedError, UsageError
from .exact_series import PowerSeries, YPolynomial
from .projective_chow import CohomologyClass, LocalizedClass
from .genus_engine import BundleClass, GenusSpec, builtin_genus, genus_from_chern, genus_of_bundle
from .singularity_catalog import SingularityGerm, germ_from_weights
from .scene import Scene, SingularPoint
from .specialization_engine import functorial_class, genera_report, verify, virtual_class, virtual_genus

__version__ = "0.1.0"

__all__ = [
    "BundleClass",
    "CohomologyClass",
    "DomainError",
    "GenusSpec",
    "InvalidGermError",
    "LocalizedClass",
    "PowerSeries",
    "Scene",
    "SingclassError",
    "SingularPoint",
    "SingularityGerm",
    "UnsupportedError",
    "UsageError",
    "YPolynomial",
    "builtin_genus",
    "functorial_class",
    "genera_report",
    "genus_from_chern",
    "genus_of_bundle",
    "germ_from_weights",
    "verify",
    "virtual_class",
    "virtual_genus",
]
