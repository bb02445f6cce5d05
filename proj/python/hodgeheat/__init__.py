"""Weighted simplicial complexes: Hodge operators, curvature, and heat flow.

The compiled core lives in ``_hodgeheat``; this package re-exports its
surface.  Build the extension with CMake (or an sdist install) and put it on
``PYTHONPATH`` next to this package.
"""

try:  # installed layout: extension inside the package
    from ._hodgeheat import (
        Complex,
        ParseError,
        betti,
        curvature,
        heat_kernel,
        heat_propagator,
        laplacian,
        report_json,
        run_cli,
        schrodinger_data,
        spectrum,
    )
except ImportError:  # development layout: extension beside the package
    from _hodgeheat import (
        Complex,
        ParseError,
        betti,
        curvature,
        heat_kernel,
        heat_propagator,
        laplacian,
        report_json,
        run_cli,
        schrodinger_data,
        spectrum,
    )

__all__ = [
    "Complex",
    "ParseError",
    "betti",
    "curvature",
    "heat_kernel",
    "heat_propagator",
    "laplacian",
    "report_json",
    "run_cli",
    "schrodinger_data",
    "spectrum",
]
