"""Representation theory of the algebras Λ_{1,c} and Λ_{2,c} over GF(2^e)."""

__version__ = "0.1.0"

from .algebra import AlgebraSpec, build_algebra, projective_module  # noqa: E402
from .field import FieldCtx, gf, parse_field  # noqa: E402
from .homology import ext1_dim, hom_space, is_isomorphic, strip_and_recognize, syzygy, cosyzygy  # noqa: E402
from .modules import Representation, band_module, string_module  # noqa: E402
from .words import Word, enumerate_words, parse_word  # noqa: E402

__all__ = [
    "AlgebraSpec",
    "FieldCtx",
    "Representation",
    "Word",
    "band_module",
    "build_algebra",
    "cosyzygy",
    "enumerate_words",
    "ext1_dim",
    "gf",
    "hom_space",
    "is_isomorphic",
    "parse_field",
    "parse_word",
    "projective_module",
    "string_module",
    "strip_and_recognize",
    "syzygy",
]
