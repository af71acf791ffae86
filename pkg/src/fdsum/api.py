"""Library entry point: ``compute(validate(n, a, b))``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .barvinok import decompose_unimodular, unimodular_term
from .cone import FDInstance, build_cone
from .errors import MethodMismatch
from .limit import limit_at_one
from .oracle import cyclo_eval, float_eval
from .srf import SRF, correction_term

METHODS = ("barvinok", "cyclotomic", "float", "both")


@dataclass
class FDResult:
    instance: FDInstance
    value: Fraction | float
    method: str
    unimodular_cone_count: int | None = None
    elapsed: float = 0.0
    phases: dict = field(default_factory=dict)
    srf: SRF | None = None

    @property
    def time_ms(self) -> float:
        return self.elapsed * 1000.0


def validate(n, a, b) -> FDInstance:
    """Build an instance, raising a specific :class:`InvalidInstance` subclass on failure."""
    return FDInstance(int(n), tuple(int(x) for x in a), int(b))


def pipeline_srf(inst: FDInstance, phases: dict | None = None):
    """Generating function of the slack cone plus the correction term.

    Returns ``(srf, cone_count)`` where ``srf`` lives in the variables
    (z_0, ..., z_d).
    """
    phases = {} if phases is None else phases
    t0 = time.perf_counter()
    cone, emap = build_cone(inst)
    t1 = time.perf_counter()
    dec = decompose_unimodular(cone)
    t2 = time.perf_counter()
    terms = [unimodular_term(c, emap) for c in dec]
    terms.append(correction_term(inst))
    phases["cone"] = t1 - t0
    phases["decompose"] = t2 - t1
    phases["terms"] = time.perf_counter() - t2
    phases["max_depth"] = dec.max_depth
    return SRF(terms, inst.d + 1), len(dec)


def barvinok_value(inst: FDInstance, direction=None, phases=None, keep_srf=False):
    phases = {} if phases is None else phases
    f, count = pipeline_srf(inst, phases)
    t0 = time.perf_counter()
    # z_0 goes to 1 on its own: a joint limit with z_0 moving leaves uncancelled poles.
    g = f.specialize_to_one(0)
    value = limit_at_one(g, direction)
    phases["limit"] = time.perf_counter() - t0
    return value, count, (f if keep_srf else None)


def compute(inst: FDInstance, method: str = "barvinok", keep_srf: bool = False,
            direction=None) -> FDResult:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    phases: dict = {}
    start = time.perf_counter()
    count = None
    srf = None
    if method in ("barvinok", "both"):
        value, count, srf = barvinok_value(inst, direction, phases, keep_srf)
        if method == "both":
            t0 = time.perf_counter()
            ref = cyclo_eval(inst)
            phases["cyclotomic"] = time.perf_counter() - t0
            if ref != value:
                raise MethodMismatch(f"barvinok gave {value}, cyclotomic gave {ref}")
    elif method == "cyclotomic":
        value = cyclo_eval(inst)
    else:
        value = float_eval(inst)
    elapsed = time.perf_counter() - start
    return FDResult(inst, value, method, count, elapsed, phases, srf)


def fourier_dedekind(n, a, b, method: str = "barvinok"):
    """Convenience wrapper returning just the value."""
    return compute(validate(n, a, b), method).value
