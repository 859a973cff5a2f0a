"""
Skinny Tilings Package

Exact enumeration of domino and monomer-dimer tilings of skinny regions
(rectangles, picture frames and crosses) by transfer matrices, together
with a toolkit for guessing, checking and combining C-finite sequences and
their rational generating functions.
"""

from .types import (
    AnalysisResult,
    CiucuClass,
    CrossSpec,
    FrameSpec,
    GuessConfig,
    OutputFormat,
    Side,
    TilingMode,
    VerifyStatus,
)
from .exceptions import SkinnyTilingError
from .config import Settings, load_settings
from .polynomials import MultiPoly, RationalFunction, UniPoly, rf_equal, rf_series
from .regions import Region, build_cross, build_frame, build_rectangle
from .processors import RegionFileProcessor, parse_region_file
from .enumerators import TilingEnumerator, count_tilings, count_weighted
from .transfers import build_tm, seq_rect, seq_rect_weighted
from .frames import FrameEngine, corner_transfer, cross_seq, frame_count, frame_seq, frame_table
from .recurrences import (
    BivariateGF,
    CFinite,
    cfinite_add,
    cfinite_equal,
    cfinite_mul,
    ciucu_classify,
    from_rational_gf,
    guess_bivariate_gf,
    guess_cfinite,
    guess_rational_gf,
    to_rational_gf,
    verify_cfinite_with_bound,
)
from .moments import growth_rate, weighted_moments
from .validators import OracleValidator
from .analyzers import TilingAnalyzer
from .report_generator import TilingReportGenerator
from .__main__ import main

__version__ = "1.0.0"
__author__ = "Skinny Tilings Team"

__all__ = [
    "AnalysisResult",
    "CiucuClass",
    "CrossSpec",
    "FrameSpec",
    "GuessConfig",
    "OutputFormat",
    "Side",
    "TilingMode",
    "VerifyStatus",
    "SkinnyTilingError",
    "Settings",
    "load_settings",
    "MultiPoly",
    "RationalFunction",
    "UniPoly",
    "rf_equal",
    "rf_series",
    "Region",
    "build_cross",
    "build_frame",
    "build_rectangle",
    "RegionFileProcessor",
    "parse_region_file",
    "TilingEnumerator",
    "count_tilings",
    "count_weighted",
    "build_tm",
    "seq_rect",
    "seq_rect_weighted",
    "FrameEngine",
    "corner_transfer",
    "cross_seq",
    "frame_count",
    "frame_seq",
    "frame_table",
    "BivariateGF",
    "CFinite",
    "cfinite_add",
    "cfinite_equal",
    "cfinite_mul",
    "ciucu_classify",
    "from_rational_gf",
    "guess_bivariate_gf",
    "guess_cfinite",
    "guess_rational_gf",
    "to_rational_gf",
    "verify_cfinite_with_bound",
    "growth_rate",
    "weighted_moments",
    "OracleValidator",
    "TilingAnalyzer",
    "TilingReportGenerator",
    "main",
]
