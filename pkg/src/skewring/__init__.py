"""Commutativity of antisymmetric elements in oriented group rings."""

from .classify import TheoremCase, build_catalog, classify, named_group, predict
from .coeffring import CoeffRing, RingClass, parse_ring, ring_class
from .groupcore import (
    FiniteGroup,
    GroupError,
    Subgroup,
    direct_product,
    load_cayley_file,
    realize,
    subgroup_closure,
    with_e_factor,
)
from .groupring import (
    GroupRingElement,
    SkewVerdict,
    antisym_generators,
    is_skew_commutative,
    phi_sigma,
)
from .harness import (
    AuditFinding,
    CensusReport,
    audit_commutative_instance,
    census,
    report_emit,
    verify_paper,
)
from .orient import Orientation, enumerate_kernels, make_orientation
from .presdsl import Presentation, PresentationError, parse_presentation, parse_word

__version__ = "0.1.0"

__all__ = [
    "AuditFinding", "CensusReport", "CoeffRing", "FiniteGroup", "GroupError",
    "GroupRingElement", "Orientation", "Presentation", "PresentationError", "RingClass",
    "SkewVerdict", "Subgroup", "TheoremCase", "antisym_generators", "audit_commutative_instance",
    "build_catalog", "census", "classify", "direct_product", "enumerate_kernels",
    "is_skew_commutative", "load_cayley_file", "make_orientation", "named_group",
    "parse_presentation", "parse_ring", "parse_word", "phi_sigma", "predict", "realize",
    "report_emit", "ring_class", "subgroup_closure", "verify_paper", "with_e_factor",
]
