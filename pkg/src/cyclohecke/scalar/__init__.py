from .laurent import ArityError, LaurentPoly
from .params import GenericityError, ParamSpec, Violation, check_genericity, require_generic
from .ratfn import RatFn, SpecializationError, q_number, ratfn_eq
from .text import ParseError, parse, parse_poly, render, render_poly


def omega(x):
    """Invert q and every vk."""
    return x.omega()


def specialize(f: RatFn, spec: ParamSpec):
    if f.m != spec.m:
        raise ArityError(f"rational function has m={f.m} but spec has m={spec.m}")
    return f.specialize(spec.q, spec.v)


__all__ = [
    "ArityError", "LaurentPoly", "GenericityError", "ParamSpec", "Violation",
    "check_genericity", "require_generic", "RatFn", "SpecializationError",
    "q_number", "ratfn_eq", "ParseError", "parse", "parse_poly", "render",
    "render_poly", "omega", "specialize",
]
