"""Exact computations with restricted quantum sl2 at a 2p-th root of unity.

The package builds the Hopf algebra U on generators E, F, K at
q = e^(i pi / p) and its braided extension, verifies the ribbon
structure (R-matrix, monodromy, ribbon and balancing elements), the
right integral, the center with its idempotent/radical basis, trace
classes, and the modified trace with its nondegenerate pairing -- all in
exact cyclotomic arithmetic -- and evaluates logarithmic Hennings-type
invariants of closed 3-manifolds with colored links from braid-closure
surgery presentations.

Entry points: `Tower(p)` caches every layer of structure for a session;
`ClosurePresentation` describes a surgered, colored link; `h_log`,
`j_log` and `hennings` evaluate the invariants.  The `uqsl2` console
script exposes verification suites, invariant evaluation and table
output.
"""

from .cyclo import Cyclo, CycloField
from .hopf import (Algebra, AlgebraElement, TensorElement, build_D, build_U,
                   embed_U_in_D, is_in_U, project_D_to_U)
from .invariant import (CenterValuedInvariant, InvariantValue, h_log, hennings,
                        j_log, murakami_check)
from .mtrace import TraceColor, pairing, pairing_slow, pairing_table, trace_table
from .session import Tower, tower
from .tangle import (ClosurePresentation, Component, UniversalInvariant,
                     rt_colored_invariant, universal_invariant, validate)

__all__ = [
    "Algebra", "AlgebraElement", "CenterValuedInvariant", "ClosurePresentation",
    "Component", "Cyclo", "CycloField", "InvariantValue", "TensorElement",
    "Tower", "TraceColor", "UniversalInvariant", "build_D", "build_U",
    "embed_U_in_D", "h_log", "hennings", "is_in_U", "j_log", "murakami_check",
    "pairing", "pairing_slow", "pairing_table", "project_D_to_U",
    "rt_colored_invariant", "tower", "trace_table", "universal_invariant",
    "validate",
]
