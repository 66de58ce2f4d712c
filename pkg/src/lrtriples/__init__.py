"""Exact construction, recognition and classification of LR triples."""

from .exactfield import GF, QQ, FieldSpec, Scalar
from .families import (
    FamilyDescriptor,
    analyze_constrained,
    classify,
    construct,
    construct_qweyl,
    construct_weyl,
    normalize,
    parse_descriptor,
    rho_sequence,
)
from .linalg import Matrix
from .lrpair import LRPair, recognize_lr_pair
from .lrtriple import LRTriple, recognize_lr_triple
from .relations import verify_relations

__all__ = [
    "GF", "QQ", "FieldSpec", "Scalar", "Matrix",
    "LRPair", "recognize_lr_pair", "LRTriple", "recognize_lr_triple",
    "FamilyDescriptor", "parse_descriptor", "construct", "construct_weyl", "construct_qweyl",
    "normalize", "classify", "rho_sequence", "analyze_constrained", "verify_relations",
]
