"""
Report rendering for skinny-tilings.

This module turns analysis results into the plain-text or JSON output of
the command line and exports hole tables and moment reports as CSV.
Every number is written exactly; rationals appear as "p/q" strings in JSON.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .polynomials import MultiPoly, RationalFunction, UniPoly
from .recurrences import BivariateGF
from .types import (
    AnalysisResult,
    FilePath,
    MomentRecord,
    MomentReport,
    OutputFormat,
    ResultKind,
)

logger = logging.getLogger(__name__)

_MOMENT_COLUMNS = [
    "index", "total", "mean", "variance", "third_central",
    "fourth_central", "skewness_squared", "kurtosis",
]


def _exact(value: Any) -> Optional[str]:
    return None if value is None else str(value)


def unipoly_json(poly: UniPoly) -> List[str]:
    """Coefficient array, lowest degree first."""
    return [str(c) for c in poly.coeffs]


def multipoly_json(poly: MultiPoly) -> Dict[str, Any]:
    return {
        "variables": list(poly.variables),
        "terms": [{"exponents": list(exps), "coeff": str(c)} for exps, c in poly.sorted_terms()],
    }


def rational_function_json(rf: RationalFunction) -> Dict[str, Any]:
    return {
        "var": rf.var,
        "numerator": unipoly_json(rf.numerator),
        "denominator": unipoly_json(rf.denominator),
    }


def moment_record_json(record: MomentRecord) -> Dict[str, Any]:
    return {column: (record.index if column == "index" else _exact(getattr(record, column)))
            for column in _MOMENT_COLUMNS}


class TilingReportGenerator:
    """
    Renders analysis results.

    This class is responsible for:
    - Formatting every result kind as plain text or JSON
    - Building pandas DataFrames from hole tables and moment reports
    - Writing those tables as CSV files
    """

    def __init__(self):
        """Initialize the report generator."""
        self.logger = logging.getLogger(__name__)

    def render(self, result: AnalysisResult, output_format: OutputFormat) -> str:
        """
        Render a result for standard output.

        Args:
            result: The analysis result
            output_format: Plain or Json

        Returns:
            The text to print, without a trailing newline
        """
        if output_format is OutputFormat.JSON:
            return json.dumps(self.to_json(result), indent=2)
        return self.to_plain(result)

    def to_plain(self, result: AnalysisResult) -> str:
        value = result.value
        kind = result.kind
        if value is None:
            return "none"
        if kind is ResultKind.SEQUENCE:
            return "\n".join(str(term) for term in value)
        if kind is ResultKind.FLAG:
            return "true" if value else "false"
        if kind is ResultKind.VERIFY_STATUS:
            return value.value
        if kind is ResultKind.MOMENTS:
            return self._plain_moments(value)
        if kind is ResultKind.GROWTH:
            return f"{value.value} +/- {value.error} (index {value.index})"
        # counts, polynomials, rational functions, bivariate GFs and C-finite codings
        return str(value)

    def _plain_moments(self, report: MomentReport) -> str:
        lines = []
        for record in report.records:
            fields = [f"n={record.index}", f"total={record.total}", f"mean={record.mean}"]
            for column in _MOMENT_COLUMNS[3:]:
                value = getattr(record, column)
                if value is not None:
                    fields.append(f"{column}={value}")
            lines.append(" ".join(fields))
        return "\n".join(lines)

    def to_json(self, result: AnalysisResult) -> Dict[str, Any]:
        """JSON-ready dictionary for a result."""
        kind, value = result.kind, result.value
        out: Dict[str, Any] = {"params": result.params}
        if kind is ResultKind.COUNT:
            out["count"] = str(value)
        elif kind is ResultKind.POLYNOMIAL:
            out["polynomial"] = multipoly_json(value)
        elif kind is ResultKind.SEQUENCE:
            out["terms"] = [
                multipoly_json(term) if isinstance(term, MultiPoly) else str(term) for term in value
            ]
        elif kind is ResultKind.RATIONAL_FUNCTION:
            out["gf"] = None if value is None else rational_function_json(value)
        elif kind is ResultKind.BIVARIATE_GF:
            out["gf"] = None if value is None else self._bivariate_json(value)
        elif kind is ResultKind.CFINITE:
            out["cfinite"] = None if value is None else value.to_json_dict()
        elif kind is ResultKind.FLAG:
            out["equal"] = bool(value)
        elif kind is ResultKind.VERIFY_STATUS:
            out["status"] = value.value
        elif kind is ResultKind.MOMENTS:
            out["variable"] = value.variable
            out["up_to"] = value.up_to
            out["records"] = [moment_record_json(r) for r in value.records]
        elif kind is ResultKind.GROWTH:
            out["growth"] = {"value": value.value, "error": value.error, "index": value.index}
        if result.oracle_checked:
            out["oracle_checked"] = result.oracle_checked
        return out

    @staticmethod
    def _bivariate_json(gf: BivariateGF) -> Dict[str, Any]:
        return {
            "numerator": multipoly_json(gf.numerator),
            "q1": {"var": gf.q1.var, "coefficients": unipoly_json(gf.q1)},
            "q2": {"var": gf.q2.var, "coefficients": unipoly_json(gf.q2)},
        }

    def table_frame(self, table: Dict[Tuple[int, int], Any]) -> pd.DataFrame:
        """Hole table as a DataFrame: rows m, columns n, exact Python ints."""
        max_m = max((m for m, _ in table), default=-1)
        max_n = max((n for _, n in table), default=-1)
        frame = pd.DataFrame(
            [[table[(m, n)] for n in range(max_n + 1)] for m in range(max_m + 1)],
            index=pd.Index(range(max_m + 1), name="m"),
            columns=range(max_n + 1),
            dtype=object,
        )
        frame.columns.name = "n"
        return frame

    def moments_frame(self, report: MomentReport) -> pd.DataFrame:
        """Moment report as a DataFrame with one row per enumerator."""
        rows = [[getattr(record, column) for column in _MOMENT_COLUMNS] for record in report.records]
        return pd.DataFrame(rows, columns=_MOMENT_COLUMNS, dtype=object)

    def write_csv(self, result: AnalysisResult, output_path: FilePath) -> None:
        """
        Export a result's table (hole table or moments) as CSV.

        Raises:
            ValueError: If the result carries no table
        """
        if result.table is not None:
            frame = self.table_frame(result.table)
            frame.to_csv(output_path)
        elif result.kind is ResultKind.MOMENTS:
            frame = self.moments_frame(result.value)
            frame.to_csv(output_path, index=False)
        else:
            raise ValueError(f"A {result.kind.value} result has no table to export")
        self.logger.info(f"CSV saved to {output_path} with {len(frame)} rows")
