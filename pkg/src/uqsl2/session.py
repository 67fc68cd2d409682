"""Per-p session cache: every tower of structure is built once and shared.

All higher layers (traces, tangles, invariants, CLI) consume a Tower.
Construction is lazy; the expensive pieces (ribbon data, center, HH_0,
trace data) are built on first access and cached for the session.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

from .cyclo import CycloField
from .hopf import Algebra, build_D, build_U


class Tower:
    def __init__(self, p: int, convention: str = "A"):
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        if convention not in ("A", "B"):
            raise ValueError(f"unknown crossing convention {convention!r}")
        self.p = p
        self.convention = convention

    @cached_property
    def field(self) -> CycloField:
        return CycloField.for_p(self.p)

    @cached_property
    def U(self) -> Algebra:
        return build_U(self.p)

    @cached_property
    def D(self) -> Algebra:
        return build_D(self.p)

    @cached_property
    def simples(self) -> dict:
        from .modules import simple
        return {(s, sg): simple(self.U, s, sg)
                for s in range(1, self.p + 1) for sg in (1, -1)}

    @cached_property
    def center(self):
        from .center import build_center
        return build_center(self.U, self.simples)

    @cached_property
    def ribbon(self):
        from .ribbon import build_ribbon_data
        return build_ribbon_data(self.p)

    @cached_property
    def integral(self):
        from .integral import build_integral
        return build_integral(self.ribbon)

    @cached_property
    def hh0(self):
        from .hh0 import build_hh0
        return build_hh0(self.U, self.simples, self.center)

    @cached_property
    def traces(self):
        from .mtrace import build_traces
        return build_traces(self)

    def __repr__(self):
        return f"Tower(p={self.p}, convention={self.convention!r})"


@lru_cache(maxsize=None)
def tower(p: int, convention: str = "A") -> Tower:
    return Tower(p, convention)
