"""Completeness criteria for degree-limited presentations of graded rings.

The heavy lifting lives in the compiled extension ``cohoc._core``; this
package re-exports its public surface.
"""

from ._core import (
    CohocError,
    Morphism,
    Ring,
    benson,
    compare_all,
    fixture_morphisms,
    fixture_rings,
    king_gen,
    king_rel,
    symonds,
)

__all__ = [
    "CohocError",
    "Morphism",
    "Ring",
    "benson",
    "compare_all",
    "fixture_morphisms",
    "fixture_rings",
    "king_gen",
    "king_rel",
    "symonds",
]
