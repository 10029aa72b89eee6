"""Q-divisors on X = Proj R supported on the coordinate and factor primes.

The registry fixes one entry per prime divisor: V(x_i) for each variable and
V(h_t) for each supplied factor, except that a factor which is a scalar
multiple of a variable shares the variable's entry.  Divisors are dense
coefficient tuples over the registry; coefficients are exact Fractions.

The distinguished divisor D = b * sum_i s_i V(x_i) + (a/n) * sum_t V(h_t)
drives everything downstream: R is recovered as the section ring of (X, D),
and the generator classes come from E_t = -(1/n) V(h_t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import DegenerateInput, InternalInconsistency
from .exactmath import BezoutPair, bezout_vector
from .hyperring import HypersurfaceInput
from .wpoly import WPolynomial, weighted_degree


@dataclass(eq=False, frozen=True)
class PrimeComponent:
    """One prime divisor: V(variable) or V(irreducible factor).

    Registry-interned; identity comparison is intentional.
    """

    index: int
    kind: str  # "variable" or "factor"
    form: WPolynomial
    cdegree: int
    label: str


class QDivisor:
    """Immutable coefficient vector over a fixed registry."""

    __slots__ = ("registry", "coeffs")

    def __init__(self, registry: "DivisorContext", coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != len(registry.components):
            raise DegenerateInput("coefficient count does not match the registry")
        object.__setattr__(self, "registry", registry)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QDivisor is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QDivisor)
            and self.registry is other.registry
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "QDivisor") -> "QDivisor":
        if self.registry is not other.registry:
            raise DegenerateInput("divisors on different registries")
        return QDivisor(self.registry, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, k) -> "QDivisor":
        k = Fraction(k)
        return QDivisor(self.registry, [k * c for c in self.coeffs])

    def floor(self) -> tuple[int, ...]:
        """Componentwise greatest-integer part, as a dense integer vector."""
        return tuple(c.numerator // c.denominator for c in self.coeffs)

    def degree(self) -> Fraction:
        return sum(
            (c * comp.cdegree for c, comp in zip(self.coeffs, self.registry.components)),
            Fraction(0),
        )

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.coeffs:
            out = lcm(out, c.denominator)
        return out

    def items(self):
        for comp, c in zip(self.registry.components, self.coeffs):
            if c:
                yield comp, c

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{comp.label}" for comp, c in self.items())
        return f"QDivisor({body or '0'})"


def integer_divisor_degree(registry: "DivisorContext", coeffs: tuple[int, ...]) -> int:
    return sum(c * comp.cdegree for c, comp in zip(coeffs, registry.components))


@dataclass(eq=False)
class DivisorContext:
    """Registry plus the canonical divisor data for one hypersurface input."""

    input: HypersurfaceInput
    bez: BezoutPair
    svec: tuple[int, ...]
    components: tuple[PrimeComponent, ...]
    factor_component: tuple[int, ...]  # factor index t -> registry index
    factor_unit: tuple  # scalar u_t with h_t = u_t * (component form)^1, merged case
    D: QDivisor = field(init=False)

    def __post_init__(self):
        inp = self.input
        coeffs = [Fraction(0)] * len(self.components)
        for i in range(inp.ring.d):
            coeffs[i] += self.bez.b * self.svec[i]
        a_over_n = Fraction(self.bez.a, inp.n)
        for idx in self.factor_component:
            coeffs[idx] += a_over_n
        self.D = QDivisor(self, coeffs)
        expected = self.bez.b + a_over_n * inp.m
        if self.D.degree() != expected:
            raise InternalInconsistency("degree of D does not match b + (a/n)m")
        if expected != Fraction(1, inp.n):
            raise InternalInconsistency("degree of D is not 1/n; Bezout data corrupt")
        if self.D.denominator_lcm() != (inp.n if inp.n >= 2 else 1):
            raise InternalInconsistency("denominators of D do not have lcm n")

    @staticmethod
    def build(inp: HypersurfaceInput) -> "DivisorContext":
        """Construct the registry, Bezout data and D for a validated input."""
        bez = BezoutPair.make(inp.m, inp.n)
        svec = bezout_vector(inp.ring.weights)
        components = []
        for i, name in enumerate(inp.ring.variables):
            components.append(
                PrimeComponent(
                    index=i,
                    kind="variable",
                    form=WPolynomial.variable(inp.ring, i),
                    cdegree=inp.ring.weights[i],
                    label=f"V({name})",
                )
            )
        factor_component = []
        factor_unit = []
        for h in inp.factored.factors:
            i = h.as_variable()
            if i is not None:
                factor_component.append(i)
                (exps,) = h.terms
                factor_unit.append(h.terms[exps])
            else:
                comp = PrimeComponent(
                    index=len(components),
                    kind="factor",
                    form=h,
                    cdegree=weighted_degree(h),
                    label=f"V({h.to_string()})",
                )
                components.append(comp)
                factor_component.append(comp.index)
                factor_unit.append(inp.field.one)
        return DivisorContext(
            input=inp,
            bez=bez,
            svec=svec,
            components=tuple(components),
            factor_component=tuple(factor_component),
            factor_unit=tuple(factor_unit),
        )

    @property
    def r(self) -> int:
        return len(self.factor_component)

    def zero_divisor(self) -> QDivisor:
        return QDivisor(self, [0] * len(self.components))

    def component_divisor(self, idx: int, coeff) -> QDivisor:
        coeffs = [Fraction(0)] * len(self.components)
        coeffs[idx] = Fraction(coeff)
        return QDivisor(self, coeffs)

    def Et(self, t: int) -> QDivisor:
        """Generator divisor -(1/n) V(h_t); t is 0-based."""
        if not 0 <= t < self.r:
            raise DegenerateInput(f"factor index {t} outside 0..{self.r - 1}")
        return self.component_divisor(
            self.factor_component[t], Fraction(-1, self.input.n)
        )

    def factor_cdegree(self, t: int) -> int:
        return self.components[self.factor_component[t]].cdegree

    def floor_of_multiple(self, j: int) -> tuple[tuple[int, ...], int, int, int]:
        """floor(j*D) together with the split j = u m + v n and its degree.

        The degree of floor(j*D) equals v whenever v >= 0; that identity is
        asserted because the section spaces downstream rely on it.
        """
        if j < 0:
            raise DegenerateInput("j must be nonnegative")
        E = self.D.scale(j).floor()
        split = self.input.degree_split(j)
        deg = integer_divisor_degree(self, E)
        if split is None:
            u = v = None
        else:
            u, v = split
            if deg != v:
                raise InternalInconsistency(
                    f"deg floor({j}D) = {deg} but the degree split gives v = {v}"
                )
        return E, u, v, deg
