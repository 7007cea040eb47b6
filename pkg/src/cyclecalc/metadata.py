# src/cyclecalc/metadata.py

from __future__ import annotations

import inspect
import re
from typing import Any, Callable, Dict, Optional

__all__ = [
    "quantity_metadata",
    "get_cyclecalc_metadata",
    "extract_definition_section",
    "describe_object",
    "build_module_registry",
    "display_name",
]

MetadataDict = Dict[str, Any]


def quantity_metadata(
    *,
    display_name: str,
    notation: Optional[str] = None,
    category: Optional[str] = None,
    aliases: tuple[str, ...] = (),
    definition: Optional[str] = None,
) -> Callable:
    r"""
    Attach structured metadata to a function computing a named quantity.

    Parameters
    ----------
    display_name : str
        Human-readable name, used to label CLI and report output.
    notation : str, optional
        Mathematical notation, e.g. ``r"n_+(L_G)"``.
    category : str, optional
        A grouping such as ``"cycle space"`` or ``"kuramoto"``.
    aliases : tuple of str, optional
        Alternative names for the same quantity.
    definition : str, optional
        Explicit definition. When omitted, the ``Definition`` section of the
        docstring is used by :func:`describe_object`.

    Returns
    -------
    callable
        A decorator that stores the metadata on the decorated function.
    """
    def decorator(func: Callable) -> Callable:
        func._cyclecalc_metadata = {
            "display_name": display_name,
            "notation": notation,
            "category": category,
            "aliases": tuple(aliases),
            "definition": definition,
        }
        return func

    return decorator


def get_cyclecalc_metadata(obj: Any) -> Optional[MetadataDict]:
    """Return the metadata attached by :func:`quantity_metadata`, or ``None``."""
    return getattr(obj, "_cyclecalc_metadata", None)


def extract_definition_section(obj: Any) -> Optional[str]:
    r"""
    Extract the ``Definition`` section from an object's NumPy-style docstring.

    Parameters
    ----------
    obj : object
        A documented function or class.

    Returns
    -------
    str or None
        The section text, or ``None`` when the docstring has no such section.
    """
    doc = inspect.getdoc(obj) or ""
    match = re.search(
        r"^Definition\n-+\n(.+?)(?=\n[A-Z][A-Za-z0-9 ()/,-]*\n-+\n|\Z)",
        doc,
        flags=re.MULTILINE | re.DOTALL,
    )
    if not match:
        return None
    return match.group(1).strip()


def describe_object(obj: Any) -> MetadataDict:
    """Combine attached metadata, the object's name and its docstring definition."""
    meta = dict(get_cyclecalc_metadata(obj) or {})
    meta.setdefault("name", getattr(obj, "__name__", None))
    if not meta.get("definition"):
        meta["definition"] = extract_definition_section(obj)
    return meta


def build_module_registry(module: Any) -> Dict[str, MetadataDict]:
    r"""
    Build a registry of quantity metadata for a module.

    Parameters
    ----------
    module : module
        A module whose public callables may carry metadata.

    Returns
    -------
    dict
        Descriptions keyed by attribute name, for every callable in the module
        decorated with :func:`quantity_metadata`.

    Examples
    --------
    >>> import importlib
    >>> lap = importlib.import_module("cyclecalc.spectral.laplacian")
    >>> from cyclecalc.metadata import build_module_registry
    >>> build_module_registry(lap)["det_red"]["display_name"]
    'Reduced determinant'
    """
    registry: Dict[str, MetadataDict] = {}

    for name in dir(module):
        obj = getattr(module, name)
        if callable(obj) and get_cyclecalc_metadata(obj) is not None:
            registry[name] = describe_object(obj)

    return registry


def display_name(func: Callable, default: Optional[str] = None) -> str:
    """Return the registered display name of ``func``, falling back to ``default`` or its name."""
    meta = get_cyclecalc_metadata(func) or {}
    return meta.get("display_name") or default or func.__name__
