"""
Analysis orchestration for skinny-tilings.

This module wires the counting engines, the C-finite toolkit, the
statistics layer and the oracle validator into one call per command.
"""

import logging
from typing import Any, List, Optional, Sequence

from .config import Settings
from .enumerators import TilingEnumerator
from .exceptions import GuessError, UsageError
from .frames import FrameEngine
from .moments import growth_rate, weighted_moments
from .polynomials import MultiPoly
from .processors import RegionFileProcessor
from .recurrences import (
    CFinite,
    cfinite_equal,
    guess_bivariate_gf,
    guess_cfinite,
    guess_rational_gf,
    verify_cfinite_with_bound,
)
from .transfers import seq_rect, seq_rect_weighted
from .types import (
    AnalysisResult,
    FilePath,
    GuessConfig,
    Rational,
    ResultKind,
    TilingMode,
)
from .validators import OracleValidator

DEFAULT_TERMS = 20
DEFAULT_TABLE_SIZE = 15


class TilingAnalyzer:
    """
    Main orchestrator for tiling analyses.

    This class is responsible for:
    - Loading regions and term lists through the file processor
    - Running the enumerator, transfer-matrix and frame engines
    - Guessing and checking recurrences and generating functions
    - Re-checking leading results against direct enumeration on request
    """

    def __init__(self, settings: Settings, processor: Optional[RegionFileProcessor] = None):
        """
        Initialize the analyzer.

        Args:
            settings: Engine limits and defaults
            processor: File ingestion component
        """
        self.settings = settings
        self.processor = processor or RegionFileProcessor()
        self.logger = logging.getLogger(__name__)

    def _engine(self, mode: TilingMode, weighted: bool = False) -> FrameEngine:
        return FrameEngine(mode, weighted, self.settings.width_cap)

    def _validator(self, mode: TilingMode, weighted: bool = False) -> OracleValidator:
        return OracleValidator(mode, weighted, self.settings.oracle_terms)

    @staticmethod
    def _last_index(terms: int) -> int:
        if terms < 1:
            raise UsageError("--terms must be at least 1")
        return terms - 1

    def count(self, region_file: FilePath, mode: TilingMode) -> AnalysisResult:
        """Count the tilings of a region file."""
        region = self.processor.load_region_file(region_file)
        value = TilingEnumerator(mode).count(region)
        self.logger.info(f"{region.cell_count} cells, {value} tilings in {mode.value} mode")
        return AnalysisResult(ResultKind.COUNT, {"file": str(region_file), "mode": mode.value}, value)

    def count_weighted(self, region_file: FilePath, mode: TilingMode) -> AnalysisResult:
        """Weight enumerator of a region file."""
        region = self.processor.load_region_file(region_file)
        value = TilingEnumerator(mode, weighted=True).count(region)
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(value, mode.weight_variables)
        return AnalysisResult(
            ResultKind.POLYNOMIAL, {"file": str(region_file), "mode": mode.value}, value
        )

    def rect_seq(
        self, m: int, terms: int, mode: TilingMode, weighted: bool = False, verify: bool = False
    ) -> AnalysisResult:
        """Rectangle counts (or enumerators) for widths 0..terms-1."""
        last = self._last_index(terms)
        if weighted:
            values: List[Any] = seq_rect_weighted(m, last, mode, self.settings.width_cap)
        else:
            values = seq_rect(m, last, mode, self.settings.width_cap)
        params = {"m": m, "mode": mode.value, "weighted": weighted}
        checked = self._validator(mode, weighted).validate_rect_seq(m, values) if verify else 0
        return AnalysisResult(ResultKind.SEQUENCE, params, values, oracle_checked=checked)

    def frame_seq(
        self,
        thicknesses: Sequence[int],
        terms: int,
        mode: TilingMode,
        weighted: bool = False,
        verify: bool = False,
    ) -> AnalysisResult:
        """Square-hole frame counts for hole sizes 0..terms-1."""
        a1, a2, b1, b2 = thicknesses
        values = self._engine(mode, weighted).frame_seq(a1, a2, b1, b2, self._last_index(terms))
        checked = 0
        if verify:
            checked = self._validator(mode, weighted).validate_frame_seq(a1, a2, b1, b2, values)
        params = {"a1": a1, "a2": a2, "b1": b1, "b2": b2, "mode": mode.value, "weighted": weighted}
        return AnalysisResult(ResultKind.SEQUENCE, params, values, oracle_checked=checked)

    def cross_seq(
        self, a: int, b: int, terms: int, mode: TilingMode, weighted: bool = False, verify: bool = False
    ) -> AnalysisResult:
        """Cross counts for arm lengths 0..terms-1."""
        values = self._engine(mode, weighted).cross_seq(a, b, self._last_index(terms))
        checked = self._validator(mode, weighted).validate_cross_seq(a, b, values) if verify else 0
        params = {"a": a, "b": b, "mode": mode.value, "weighted": weighted}
        return AnalysisResult(ResultKind.SEQUENCE, params, values, oracle_checked=checked)

    def _gf_result(self, sequence: AnalysisResult, config: GuessConfig) -> AnalysisResult:
        rf = guess_rational_gf(sequence.value, config)
        params = dict(sequence.params)
        params.pop("weighted", None)
        params["terms"] = len(sequence.value)
        params["max_order"] = config.max_order
        params["margin"] = config.margin
        if rf is None:
            self.logger.warning(f"No generating function found from {len(sequence.value)} terms")
        return AnalysisResult(
            ResultKind.RATIONAL_FUNCTION, params, rf, oracle_checked=sequence.oracle_checked
        )

    def frame_gf(
        self,
        thicknesses: Sequence[int],
        terms: Optional[int],
        config: GuessConfig,
        mode: TilingMode,
        verify: bool = False,
    ) -> AnalysisResult:
        """Guess the generating function of a square-hole frame family."""
        count = self.default_gf_terms(config) if terms is None else terms
        return self._gf_result(self.frame_seq(thicknesses, count, mode, verify=verify), config)

    def cross_gf(
        self, a: int, b: int, terms: Optional[int], config: GuessConfig, mode: TilingMode, verify: bool = False
    ) -> AnalysisResult:
        """Guess the generating function of a cross family."""
        count = self.default_gf_terms(config) if terms is None else terms
        return self._gf_result(self.cross_seq(a, b, count, mode, verify=verify), config)

    def frame_gf_bivariate(
        self,
        thicknesses: Sequence[int],
        size: Optional[int],
        config: GuessConfig,
        mode: TilingMode,
        verify: bool = False,
    ) -> AnalysisResult:
        """Fit P(x, y) / (Q1(x) Q2(y)) to the hole table of a frame family."""
        a1, a2, b1, b2 = thicknesses
        last = self._last_index(DEFAULT_TABLE_SIZE if size is None else size)
        table = self._engine(mode).frame_table(a1, a2, b1, b2, last, last)
        checked = 0
        if verify:
            checked = self._validator(mode).validate_frame_table(a1, a2, b1, b2, table)
        gf = guess_bivariate_gf(table, config)
        if gf is None:
            self.logger.warning("No bivariate generating function found")
        params = {
            "a1": a1, "a2": a2, "b1": b1, "b2": b2, "mode": mode.value,
            "size": last + 1, "max_order": config.max_order, "margin": config.margin,
        }
        return AnalysisResult(ResultKind.BIVARIATE_GF, params, gf, table=table, oracle_checked=checked)

    def guess(
        self, values: Sequence[Rational], config: GuessConfig, as_gf: bool = False
    ) -> AnalysisResult:
        """Guess a recurrence (or generating function) for given terms."""
        params = {"terms": len(values), "max_order": config.max_order, "margin": config.margin}
        if as_gf:
            return AnalysisResult(ResultKind.RATIONAL_FUNCTION, params, guess_rational_gf(values, config))
        return AnalysisResult(ResultKind.CFINITE, params, guess_cfinite(values, config))

    def equal(self, first: CFinite, second: CFinite) -> AnalysisResult:
        """Decide whether two C-finite descriptions give the same sequence."""
        return AnalysisResult(
            ResultKind.FLAG,
            {"first": first.to_json_dict(), "second": second.to_json_dict()},
            cfinite_equal(first, second),
        )

    def verify_bound(self, cf: CFinite, values: Sequence[Rational], bound: int) -> AnalysisResult:
        """Check data against a recurrence under an order bound."""
        status = verify_cfinite_with_bound(cf, values, bound)
        params = {"cfinite": cf.to_json_dict(), "terms": len(values), "bound": bound}
        return AnalysisResult(ResultKind.VERIFY_STATUS, params, status)

    def enumerator_family(
        self,
        family: str,
        params: Sequence[int],
        terms: int,
        mode: TilingMode,
        region_file: Optional[FilePath] = None,
    ) -> List[MultiPoly]:
        """
        Weight enumerators of a region family.

        Args:
            family: One of 'region', 'rect', 'frame', 'cross'
            params: Integer parameters of the family
            terms: Number of members (ignored for 'region')
            mode: Which tiles are allowed
            region_file: The region for the 'region' family

        Raises:
            UsageError: On an unknown family or wrong parameter count
        """
        expected = {"region": 0, "rect": 1, "frame": 4, "cross": 2}
        if family not in expected:
            raise UsageError(f"Unknown region family {family!r}; choose from {', '.join(expected)}")
        if len(params) != expected[family]:
            raise UsageError(f"Family {family!r} takes {expected[family]} parameters, got {len(params)}")
        if family == "region":
            if not region_file:
                raise UsageError("The 'region' family needs --file")
            return [self.count_weighted(region_file, mode).value]
        if family == "rect":
            return self.rect_seq(params[0], terms, mode, weighted=True).value
        if family == "frame":
            return self.frame_seq(params, terms, mode, weighted=True).value
        return self.cross_seq(params[0], params[1], terms, mode, weighted=True).value

    def moments(
        self,
        family: str,
        params: Sequence[int],
        terms: int,
        mode: TilingMode,
        variable: str,
        up_to: int = 4,
        region_file: Optional[FilePath] = None,
    ) -> AnalysisResult:
        """Exact tile-count moments for each member of a family."""
        if variable not in mode.weight_variables:
            raise UsageError(
                f"Variable {variable!r} is not a weight in {mode.value} mode "
                f"({', '.join(mode.weight_variables)})"
            )
        polys = self.enumerator_family(family, params, terms, mode, region_file)
        report = weighted_moments(polys, variable, up_to)
        return AnalysisResult(
            ResultKind.MOMENTS,
            {"family": family, "params": list(params), "mode": mode.value, "variable": variable},
            report,
        )

    def growth(
        self,
        cf: Optional[CFinite],
        values: Sequence[Rational],
        config: GuessConfig,
        index: Optional[int] = None,
        precision: Optional[int] = None,
    ) -> AnalysisResult:
        """Estimate the growth ratio of a sequence given by a recurrence or by terms."""
        if index is not None and index < 1:
            raise UsageError("--index must be at least 1")
        if precision is not None and precision < 5:
            raise UsageError("--precision must be at least 5")
        if cf is None:
            cf = guess_cfinite(values, config)
            if cf is None:
                raise GuessError(f"No recurrence found for the {len(values)} given terms")
        estimate = growth_rate(
            cf,
            values or None,
            self.settings.growth_index if index is None else index,
            self.settings.growth_precision if precision is None else precision,
        )
        return AnalysisResult(ResultKind.GROWTH, {"cfinite": cf.to_json_dict()}, estimate)

    @staticmethod
    def default_gf_terms(config: GuessConfig) -> int:
        """Enough terms to accept any recurrence up to max_order."""
        return 2 * config.max_order + config.margin
