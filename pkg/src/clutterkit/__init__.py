"""Chordal clutters, independence complexes, shellability and the
classification of small obstructions to shellability."""

from .canonical import canonical_key
from .core import (
    Clutter,
    ClutterError,
    LabeledGround,
    SimplicialComplex,
    alexander_dual,
    augment_with_nonface,
    contract_vertex,
    d_complement,
    delete_face,
    delete_vertex,
    independence_complex,
    join,
    link,
    minors_one_step,
    nonface_clutter,
    skeleton,
)
from .decomposability import fh_triangle, is_k_decomposable, is_shellable, is_shellable_search, is_shedding_face
from .enumeration import classify, enumerate_clutters, run_pipeline
from .homology import is_cohen_macaulay, is_sequentially_cm, reduced_homology, sphere_signature
from .notation import format_clutter, parse_clutter
from .structure import has_free_vertex_property, is_chordal, is_simplicial_vertex

__version__ = "0.1.0"

__all__ = [
    "Clutter",
    "ClutterError",
    "LabeledGround",
    "SimplicialComplex",
    "alexander_dual",
    "augment_with_nonface",
    "canonical_key",
    "classify",
    "contract_vertex",
    "d_complement",
    "delete_face",
    "delete_vertex",
    "enumerate_clutters",
    "fh_triangle",
    "format_clutter",
    "has_free_vertex_property",
    "independence_complex",
    "is_chordal",
    "is_cohen_macaulay",
    "is_k_decomposable",
    "is_sequentially_cm",
    "is_shedding_face",
    "is_shellable",
    "is_shellable_search",
    "is_simplicial_vertex",
    "join",
    "link",
    "minors_one_step",
    "nonface_clutter",
    "parse_clutter",
    "reduced_homology",
    "run_pipeline",
    "skeleton",
    "sphere_signature",
]
