"""Exact finite-field coding theory: hulls, LCD codes, and shortest LCD embeddings.

The package computes with linear codes over GF(2), GF(3), GF(4) (Hermitian
or Euclidean), and odd prime fields up to GF(251): hull dimensions and
decompositions, minimum distances via two independent engines, classical
code families, and constructions plus searches for shortest LCD embeddings.
"""

from .code import (DistanceReport, EUCLIDEAN, HERMITIAN, HullDecomposition,
                   LinearCode, WeightEnumerator, new_code, same_code)
from .embed import (EmbeddingResult, EmbeddingSpec, MinimalityCertificate,
                    SearchConfig, canonical_shortest_embedding, certify_minimality,
                    extract_blocks, search, shortest_embedding, trivial_embedding)
from .families import grm, hamming, simplex
from .gf import GF2, GF3, GF4, FieldSpec, field
from .matgf import (GfMatrix, RrefResult, determinant, hstack, identity, inverse,
                    left_kernel, matmul, rank, rref, same_row_space, schur_det,
                    star, transpose, vstack, zeros)
from .matio import parse_code, read_matrix, render_code, render_matrix

__version__ = "0.1.0"

__all__ = [
    "DistanceReport", "EUCLIDEAN", "HERMITIAN", "HullDecomposition", "LinearCode",
    "WeightEnumerator", "new_code", "same_code",
    "EmbeddingResult", "EmbeddingSpec", "MinimalityCertificate", "SearchConfig",
    "canonical_shortest_embedding", "certify_minimality", "extract_blocks",
    "search", "shortest_embedding", "trivial_embedding",
    "grm", "hamming", "simplex",
    "GF2", "GF3", "GF4", "FieldSpec", "field",
    "GfMatrix", "RrefResult", "determinant", "hstack", "identity", "inverse",
    "left_kernel", "matmul", "rank", "rref", "same_row_space", "schur_det",
    "star", "transpose", "vstack", "zeros",
    "parse_code", "read_matrix", "render_code", "render_matrix",
    "__version__",
]
