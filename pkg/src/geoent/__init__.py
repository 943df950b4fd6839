"""Geometric entanglement measures relative to SLOCC-invariant sets of pure states.

>>> from geoent import table1_psi, measure, SISetId
>>> round(measure(table1_psi(), SISetId.w_closure()).e_value, 4)
0.09
"""
from .bipartite import Cut, SchmidtDecomposition, closest_rank_k, d_from_e, e_from_d, e_rank_k, schmidt
from .catalog import phi_z_state, table1_phi, table1_psi
from .classify import SISetId, SloccClass, measure, measure_many, nesting_check, parse_set_spec, slocc_class
from .errors import (AnnihilationError, DomainError, GeoentError, InvalidInputError,
                     InvalidInstrumentError, ShapeError, ZeroStateError)
from .linalg import RandomSource
from .locc import apply_instrument, monotonicity_fuzz, slocc_apply
from .product_opt import MeasureResult, OptConfig, nearest_product
from .state import PureState, basis_state, ghz, normalize, product_state, random_state, w_state
from .tangle import three_tangle
from .wclass import e_ghz_set, e_w, ghz_eps_state

__version__ = "0.1.0"
