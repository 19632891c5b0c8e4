"""Girth-12 LDPC cycle codes from broken-diagonal board colorings.

Construction of high-rate column-weight-2 parity-check matrices with Tanner
girth 12, their column-weight-3 girth-6 extensions, quasi-cyclic lifts with
girth-targeted exponent search, and BER evaluation over an AWGN channel.
"""

__version__ = "0.1.0"

from .board import (
    CodeRates,
    DiagonalVector,
    PairSet,
    broken_diagonal_pair,
    build_parity_check,
    code_rates,
    coloring,
    random_coloring,
)
from .catalog import KNOWN_CODES, CatalogRow
from .errors import BudgetExceeded, SearchSpaceTooLarge
from .extend import (
    TripleSystem,
    added_rows_lower_bound,
    build_extension,
    extension_rate,
    triple_system,
)
from .gf2 import (
    AlistError,
    BinaryMatrix,
    WeightProfile,
    dumps_alist,
    loads_alist,
    rank_gf2,
    read_alist,
    weight_profile,
    write_alist,
)
from .girth import GirthReport, TannerGraph, count_cycles_upto, girth, girth_structured
from .qc import (
    ExponentSearchResult,
    LiftReport,
    QcExponentMatrix,
    expand,
    qc_girth,
    search_exponents,
)
from .search import (
    SearchResult,
    enumerate_all_vectors,
    gallager_min_length,
    girth12_condition_holds,
    search_min_m,
)
from .simulate import (
    BerRecord,
    ChannelConfig,
    DecodeResult,
    ber_sweep,
    min_sum_decode,
    records_to_csv,
    records_to_json,
    sum_product_decode,
    systematic_generator,
)

__all__ = [name for name in dir() if not name.startswith("_")]
