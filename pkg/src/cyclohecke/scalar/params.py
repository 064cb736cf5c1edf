"""Parameter values for numeric runs and the genericity conditions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class GenericityError(ValueError):
    """Parameters violate a condition needed for the seminormal construction."""


@dataclass(frozen=True)
class ParamSpec:
    q: Fraction
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "v", tuple(Fraction(x) for x in self.v))
        if self.q == 0:
            raise ValueError("q must be nonzero")

    @property
    def m(self) -> int:
        return len(self.v)

    @classmethod
    def parse(cls, q: str, v: str) -> "ParamSpec":
        """From CLI text such as ``2`` and ``1,3/2``."""
        vs = [s.strip() for s in v.split(",") if s.strip()]
        if not vs:
            raise ValueError("at least one v value is required")
        return cls(Fraction(q.strip()), tuple(Fraction(s) for s in vs))

    def inverted(self) -> "ParamSpec":
        """Values of q^-1, vk^-1 (the specialization of omega)."""
        if any(x == 0 for x in self.v):
            raise GenericityError("cannot invert a zero v value")
        return ParamSpec(1 / self.q, tuple(1 / x for x in self.v))

    def __str__(self):
        return f"q={self.q}, v=({', '.join(str(x) for x in self.v)})"


@dataclass(frozen=True)
class Violation:
    condition: str
    detail: dict

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.condition}({args})"


def check_genericity(spec: ParamSpec, n: int) -> list[Violation]:
    """Every violated condition for H(m,1,n) at ``spec``; empty means generic.

    sesi1: 1 + q^2 + ... + q^(2N) != 0 for 0 < N < n
    sesi2: q^(2i) vj != vk for j != k and -n < i < n
    sesi3: vj != 0
    """
    out = []
    q2 = spec.q * spec.q
    s = Fraction(1)
    for N in range(1, n):
        s = s * q2 + 1
        if s == 0:
            out.append(Violation("sesi1", {"N": N}))
    m = spec.m
    for j in range(m):
        for k in range(m):
            if j == k:
                continue
            for i in range(-n + 1, n):
                if q2 ** i * spec.v[j] == spec.v[k]:
                    out.append(Violation("sesi2", {"i": i, "j": j + 1, "k": k + 1}))
    for j in range(m):
        if spec.v[j] == 0:
            out.append(Violation("sesi3", {"j": j + 1}))
    return out


def require_generic(spec: ParamSpec, n: int, m: int | None = None) -> None:
    """Raise unless ``spec`` is usable for numeric seminormal matrices of H(m,1,n).

    Beyond the three conditions above this also rejects q^2 = 1 for n > 1,
    where contents along one component coincide.
    """
    if m is not None and spec.m != m:
        raise GenericityError(f"spec has {spec.m} v-values but m = {m}")
    bad = check_genericity(spec, n)
    if bad:
        raise GenericityError("parameters not generic: " + "; ".join(map(str, bad)))
    if n > 1 and spec.q * spec.q == 1:
        raise GenericityError("q^2 = 1 collapses contents; choose q with q^2 != 1")
