"""framelab: a workbench for finite unit-norm frames.

Build frames over R or C, analyze their angle structure and tightness, embed
them isometrically onto real spheres, evaluate coherence lower bounds, search
numerically for minimal-coherence packings, and machine-check the structural
rigidity facts for biangular tight frames.
"""

from .frames import (COMPLEX, FIELDS, REAL, Frame, frame_from_columns,
                     frame_from_dict, frame_to_dict, gram, normalize_columns)
from .analysis import (DesignMoment, GramSummary, TightnessReport, angle_set,
                       coherence, design_moment, equidistribution,
                       row_angle_identity_check, tightness)
from .embedding import (EmbeddedConfig, embed, embedding_dimension,
                        embedding_residual, traceless_basis, zero_sum_defect)
from .bounds import (BoundReport, best_bound, orthoplex_bound,
                     orthoplex_ceiling, toth_bound, welch_bound)
from .catalog import bi_5_2, icosaplectic_12_2, random_frame, tri_5_2
from .solver import (RestartTrace, SearchConfig, SearchResult,
                     minimize_coherence, objective_and_gradient, refine)
from .rigidity import (BtfProfile, CaseCertificate,
                       STATEMENT_TIGHT_BIANGULAR_5_2, brute_force_embedded_search,
                       check_btf_equidistributed, check_even_multiplicities,
                       refute_tight_biangular_5_2)
from . import errors, tolerances

__version__ = "0.1.0"

__all__ = [
    "COMPLEX", "FIELDS", "REAL", "Frame", "frame_from_columns",
    "frame_from_dict", "frame_to_dict", "gram", "normalize_columns",
    "DesignMoment", "GramSummary", "TightnessReport", "angle_set", "coherence",
    "design_moment", "equidistribution", "row_angle_identity_check", "tightness",
    "EmbeddedConfig", "embed", "embedding_dimension", "embedding_residual",
    "traceless_basis", "zero_sum_defect",
    "BoundReport", "best_bound", "orthoplex_bound", "orthoplex_ceiling",
    "toth_bound", "welch_bound",
    "bi_5_2", "icosaplectic_12_2", "random_frame", "tri_5_2",
    "RestartTrace", "SearchConfig", "SearchResult", "minimize_coherence",
    "objective_and_gradient", "refine",
    "BtfProfile", "CaseCertificate", "STATEMENT_TIGHT_BIANGULAR_5_2",
    "brute_force_embedded_search", "check_btf_equidistributed",
    "check_even_multiplicities", "refute_tight_biangular_5_2",
    "errors", "tolerances",
]
