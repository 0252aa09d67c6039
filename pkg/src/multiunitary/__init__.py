"""Complex Hadamard matrices with dual, Gamma-dual and multi-unitary structure."""

from .butson import LogMatrix, emit_log, from_complex, is_butson, is_hadamard_exact, parse_log, to_complex
from .catalog import cat_map, fourier, fourier_f4, fourier_f9_4, karlsson, named_matrix
from .classify import ClassReport, MonomialMatrix, classify, is_k_unitary, lu_apply, lu_family, random_monomial
from .classify import strong_two_unitary_obstruction, tensor_construct
from .estimators import DiagonalDresser, SinkhornSearch
from .exceptions import *  # noqa: F401,F403
from .matcore import core, dephase, is_hadamard, is_unimodular, is_unitary, polar_unitary
from .measures import chi, defect, entropy_triple, linear_entropy, objective_z
from .rearrange import Bipartition, TensorShape, balanced_bipartitions, partial_transpose, rearrange, reshuffle
from .scan import ScanStrategy, scan
from .search import SearchConfig, SearchResult, phase_walk, sinkhorn_search, sinkhorn_step

__version__ = "0.1.0"
