"""Shared helpers: the fixture hypersurfaces used across the test modules."""

from dataclasses import dataclass

from divclass.fields import FieldSpec
from divclass.hyperring import HypersurfaceInput
from divclass.parser import parse_polynomial
from divclass.qdivisor import DivisorContext
from divclass.wpoly import WeightedRing, validate_factorization, weighted_degree


@dataclass(frozen=True)
class Fixture:
    name: str
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    n: int
    factor_texts: tuple[str, ...]
    field: str
    invariants: tuple[int, ...]
    assume_normal: bool = False


# The surfaces every structural test runs over.  The first four cover the
# shapes the formulas are most sensitive to (several monomial factors, a
# single irreducible factor, a long factor list with n = 5); the rest vary
# coefficient field and weights.
FIXTURES = (
    Fixture(
        name="two-square-three-lines",
        variables=("x1", "x2", "x3"),
        weights=(1, 1, 1),
        n=2,
        factor_texts=("x1", "x2", "x3"),
        field="Q",
        invariants=(2, 2),
        assume_normal=True,
    ),
    Fixture(
        name="factorial-two-exponents",
        variables=("x1", "x2"),
        weights=(5, 3),
        n=2,
        factor_texts=("x1^3 + x2^5",),
        field="Q",
        invariants=(),
    ),
    Fixture(
        name="cube-two-lines",
        variables=("x1", "x2"),
        weights=(1, 1),
        n=3,
        factor_texts=("x1", "x2"),
        field="Q",
        invariants=(3,),
        assume_normal=True,
    ),
    Fixture(
        name="four-factors-n5",
        variables=("x1", "x2"),
        weights=(1, 1),
        n=5,
        factor_texts=("x1", "x2", "x1 + x2", "x1 - x2"),
        field="Q",
        invariants=(5, 5, 5),
        assume_normal=True,
    ),
    Fixture(
        name="cube-two-lines-f7",
        variables=("x1", "x2"),
        weights=(1, 1),
        n=3,
        factor_texts=("x1", "x2"),
        field="F7",
        invariants=(3,),
        assume_normal=True,
    ),
    Fixture(
        name="factorial-two-exponents-f7",
        variables=("x1", "x2"),
        weights=(5, 3),
        n=2,
        factor_texts=("x1^3 + x2^5",),
        field="F7",
        invariants=(),
    ),
    Fixture(
        name="mixed-conic-n3",
        variables=("x1", "x2"),
        weights=(1, 1),
        n=3,
        factor_texts=("x1", "x2", "x1^2 + x2^2"),
        field="Q",
        invariants=(3, 3),
        assume_normal=True,
    ),
    Fixture(
        name="cube-two-lines-closed",
        variables=("x1", "x2"),
        weights=(1, 1),
        n=3,
        factor_texts=("x1", "x2"),
        field="Qbar",
        invariants=(3,),
        assume_normal=True,
    ),
    Fixture(
        name="uneven-weights-n3",
        variables=("x1", "x2"),
        weights=(3, 1),
        n=3,
        factor_texts=("x1", "x2"),
        field="Q",
        invariants=(3,),
        assume_normal=True,
    ),
)


def build_input(fx: Fixture) -> HypersurfaceInput:
    ring = WeightedRing(fx.variables, fx.weights, FieldSpec.parse(fx.field))
    factors = [parse_polynomial(text, ring) for text in fx.factor_texts]
    g = factors[0]
    for f in factors[1:]:
        g = g * f
    factored = validate_factorization(factors, ring, fx.n, g)
    return HypersurfaceInput(
        ring=ring, n=fx.n, g=g, factored=factored, m=weighted_degree(g)
    )


def build_context(fx: Fixture) -> DivisorContext:
    return DivisorContext.build(build_input(fx))
