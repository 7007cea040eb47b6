from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Mapping, Sequence, Union

import numpy as np
import pandas as pd

__all__ = [
    "rows_to_dataframe",
    "report_to_dataframe",
    "dataframe_to_csv_text",
    "save_rows_csv",
    "save_report_json",
    "to_jsonable",
]

Rows = Union[Sequence[Mapping[str, Any]], pd.DataFrame]


def to_jsonable(obj: Any) -> Any:
    """
    Convert numpy values, tuples and nested mappings into JSON-ready values.

    Non-finite floats become ``None``.

    Examples
    --------
    >>> import numpy as np
    >>> from cyclecalc.data import to_jsonable
    >>> to_jsonable({"x": np.float64(0.5), "y": (np.int64(1), 2)})
    {'x': 0.5, 'y': [1, 2]}
    """
    if isinstance(obj, Mapping):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, np.generic):
        return to_jsonable(obj.item())
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


def rows_to_dataframe(rows: Rows) -> pd.DataFrame:
    """
    Convert a sequence of row dictionaries into a pandas DataFrame.

    Parameters
    ----------
    rows : sequence of mappings or pandas.DataFrame
        Row dictionaries, for example one per ring size or per random graph.
        A DataFrame is returned unchanged.

    Returns
    -------
    pandas.DataFrame
    """
    if isinstance(rows, pd.DataFrame):
        return rows
    return pd.DataFrame(list(rows))


def report_to_dataframe(report: Mapping[str, Any]) -> pd.DataFrame:
    """
    Convert a report with a ``"rows"`` entry into a DataFrame.

    Raises
    ------
    ValueError
        If the report does not contain a ``"rows"`` key.
    """
    if "rows" not in report:
        raise ValueError('report must contain a "rows" entry.')
    return rows_to_dataframe(report["rows"])


def dataframe_to_csv_text(df: pd.DataFrame, *, float_format: str = "%.12g") -> str:
    """Render a DataFrame as CSV text without the index."""
    return df.to_csv(index=False, float_format=float_format, lineterminator="\n")


def save_rows_csv(rows: Rows, path: Union[str, Path], *, index: bool = False) -> Path:
    """
    Save rows as a CSV file.

    Returns
    -------
    pathlib.Path
        The output path.
    """
    out_path = Path(path)
    rows_to_dataframe(rows).to_csv(out_path, index=index)
    return out_path


def save_report_json(
    report: Mapping[str, Any],
    path: Union[str, Path],
    *,
    indent: int = 2,
    sort_keys: bool = True,
) -> Path:
    """
    Save a report mapping as JSON.

    Numpy values are converted to plain Python values first.

    Returns
    -------
    pathlib.Path
        The output path.
    """
    out_path = Path(path)
    with out_path.open("w", encoding="utf-8") as f:
        json.dump(to_jsonable(report), f, indent=indent, sort_keys=sort_keys, ensure_ascii=False)
        f.write("\n")
    return out_path
