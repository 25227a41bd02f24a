"""Exact arrangement invariants, fat-point interpolation, and Seshadri
certificates, backed by the C++ core."""

from seshadri._core import (  # noqa: F401
    Arrangement,
    base_constant,
    bounds,
    catalog,
    catalog_entries,
    certify,
    check,
    epsilon_config,
    f_numbers,
    interpolate,
    load_json,
    naive_probe,
    search,
    table,
    to_json,
    unique_member,
    verify_certificate,
)

__all__ = [
    "Arrangement",
    "base_constant",
    "bounds",
    "catalog",
    "catalog_entries",
    "certify",
    "check",
    "epsilon_config",
    "f_numbers",
    "interpolate",
    "load_json",
    "naive_probe",
    "search",
    "table",
    "to_json",
    "unique_member",
    "verify_certificate",
]
