"""Exact-arithmetic convex Fujita numbers with machine-checkable certificates.

The package models a polarized smooth projective variety by its numerical
shadow: Picard lattice, intersection form, canonical class, nef cone, and
what is known about global generation.  On such descriptors it resolves
the convex Fujita number, the least m such that adjoints of m or more
ample classes are always globally generated, to an exact value or a
certified interval.
"""

from .certificates import Certificate, dumps_certificates
from .cones import Cone, brute_force_refute, lattice_points_by_shell
from .constructions import (
    blowup_point,
    box_sum,
    cyclic_cover,
    hypersurface_section,
    product,
)
from .descriptors import (
    DescriptorError,
    VarietyDescriptor,
    abelian,
    complete_intersection,
    curve,
    custom,
    del_pezzo7,
    hirzebruch1,
    projective_space,
)
from .engine import (
    FujitaInterval,
    InconsistencyError,
    resolve,
    verify_certificate,
)
from .kunneth import h0_sign
from .lattice import (
    DivisorClass,
    IntersectionForm,
    LatticeError,
    PicardLattice,
)
from .pipelines import (
    PipelineError,
    PipelineResult,
    pipeline_n2k1,
    pipeline_n3k1,
    pipeline_simple_surface,
    pipeline_simple_variety,
    synthetic_mod24_surface,
)
from .runner import Report, corpus, emit_json, emit_markdown, evaluate
from .dsl import DslError, parse

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Cone",
    "DescriptorError",
    "DivisorClass",
    "DslError",
    "FujitaInterval",
    "InconsistencyError",
    "IntersectionForm",
    "LatticeError",
    "PicardLattice",
    "PipelineError",
    "PipelineResult",
    "Report",
    "VarietyDescriptor",
    "abelian",
    "blowup_point",
    "box_sum",
    "brute_force_refute",
    "complete_intersection",
    "corpus",
    "curve",
    "custom",
    "cyclic_cover",
    "del_pezzo7",
    "dumps_certificates",
    "emit_json",
    "emit_markdown",
    "evaluate",
    "h0_sign",
    "hirzebruch1",
    "hypersurface_section",
    "lattice_points_by_shell",
    "parse",
    "pipeline_n2k1",
    "pipeline_n3k1",
    "pipeline_simple_surface",
    "pipeline_simple_variety",
    "product",
    "projective_space",
    "resolve",
    "synthetic_mod24_surface",
    "verify_certificate",
]
