"""Report renderer for linarb sweep results.

A pure consumer of the versioned sweep JSON schema: it never re-runs the
pipeline.  It recomputes the girth-to-extra-forests step function on its
own and cross-checks every record against it, so disagreements between a
sweep file and the theory show up as flagged table rows.
"""

__version__ = "0.1.0"

from .render import RenderError, expected_extra_forests, load_results, render

__all__ = [
    "__version__",
    "RenderError",
    "expected_extra_forests",
    "load_results",
    "render",
]
