"""Hypothesis validation and the divisor class group pipeline.

For R = k[z, x_1..x_d]/(z^n - g) with g = h_1 ... h_r weighted homogeneous
of degree m coprime to n, the class group is the cokernel of the map
1 -> (a, ..., a) into (Z/n)^r, where a m + b n = 1.  The pipeline assembles
the Bezout data and the divisor D, computes that cokernel through Smith
normal form, and packages generators [(z, h_t)] and their relations together
with the divisor-level identities that witness them.

Normality of R is a hypothesis, not something this module can decide in
general.  It is verified automatically only for diagonal g (a sum of pure
variable powers, smooth away from the origin); anything else requires the
caller to attest normality explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import (
    DegenerateInput,
    GcdViolation,
    InternalInconsistency,
    NormalityUnverified,
)
from .exactmath import FiniteAbelianGroup, cokernel_with_generator_images
from .hyperring import HypersurfaceInput
from .qdivisor import DivisorContext, integer_divisor_degree
from .wpoly import (
    WeightedRing,
    WPolynomial,
    normalize_weights,
    validate_factorization,
    weighted_degree,
)


@dataclass(frozen=True)
class HypothesisReport:
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    n: int
    m: int
    gcd_m_n: int
    factorization_status: str
    normality_status: str
    notes: tuple[str, ...]
    normalized: HypersurfaceInput = field(repr=False)


@dataclass(frozen=True)
class GeneratorInfo:
    """One generator class [(z, h)] with its degree data and coordinates."""

    pair: tuple[str, str]
    order: int
    degree_z: int
    degree_h: int
    image: tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    statement: str
    divisor_identity: str
    identity_holds: bool
    witness: str


@dataclass(frozen=True)
class ClassGroupResult:
    group: FiniteAbelianGroup
    generators: tuple[GeneratorInfo, ...]
    relations: tuple[Relation, ...]
    r: int
    mode: str
    report: HypothesisReport
    context: DivisorContext
    closure_splits: tuple[int, ...] | None = None
    x0_weight: int | None = None

    @property
    def splits_over_closure(self) -> bool:
        return self.closure_splits is not None and any(
            s != 1 for s in self.closure_splits
        )


def _diagonal_exponents(g: WPolynomial) -> tuple[int, ...] | None:
    """Exponents (m_1..m_d) when g is sum_i coeff_i x_i^{m_i}, else None."""
    ring = g.ring
    seen = {}
    for exps in g.terms:
        positions = [i for i, e in enumerate(exps) if e]
        if len(positions) != 1:
            return None
        i = positions[0]
        if i in seen:
            return None
        seen[i] = exps[i]
    if len(seen) != ring.d:
        return None
    return tuple(seen[i] for i in range(ring.d))


def _normality_status(
    inp: HypersurfaceInput, assume_normal: bool, notes: list[str]
) -> str:
    if inp.n == 1:
        notes.append("n = 1: the ring is a polynomial ring, normal for free")
        return "verified-degenerate"
    diag = _diagonal_exponents(inp.g)
    if diag is not None and inp.ring.d >= 2:
        p = inp.field.char
        if p == 0 or all(e % p for e in diag):
            return "verified-diagonal"
        bad = [e for e in diag if e % p == 0]
        notes.append(
            f"diagonal exponents {bad} divisible by the characteristic {p}; "
            "the Jacobian argument does not apply"
        )
    if assume_normal:
        notes.append("normality attested by caller, not machine-verified")
        return "attested"
    raise NormalityUnverified(
        "cannot verify normality automatically (only diagonal forms in at "
        "least two variables are checked); pass assume_normal to attest it"
    )


def validate_hypotheses(
    inp: HypersurfaceInput, assume_normal: bool = False
) -> HypothesisReport:
    """Gate the pipeline: weight normalization, gcd test, factors, normality.

    Raises GcdViolation, RepeatedFactor, NotIrreducible, InhomogeneousFactor
    or NormalityUnverified on a hypothesis failure; returns the report with
    the normalized input otherwise.
    """
    notes: list[str] = []
    ring2, (m2,) = normalize_weights(inp.ring, (inp.m,))
    if ring2 != inp.ring:
        notes.append(
            f"weights rescaled from {inp.ring.weights} to {ring2.weights}"
        )
    g2 = inp.g.with_ring(ring2)
    if weighted_degree(g2) != m2:
        raise InternalInconsistency("degree did not rescale with the weights")
    d = gcd(m2, inp.n)
    if d != 1:
        raise GcdViolation(
            f"gcd(deg g, n) = gcd({m2}, {inp.n}) = {d} but must be 1; for such "
            "rings the class group need not be finite (z^3 = x1^3 + x2^3 + x3^3 "
            "over C has class group Z^6) and is out of scope"
        )
    factored = validate_factorization(
        [h.with_ring(ring2) for h in inp.factored.factors], ring2, inp.n, g2
    )
    notes.extend(factored.warnings)
    normalized = HypersurfaceInput(
        ring=ring2, n=inp.n, g=g2, factored=factored, m=m2
    )
    normality = _normality_status(normalized, assume_normal, notes)
    return HypothesisReport(
        variables=ring2.variables,
        weights=ring2.weights,
        n=inp.n,
        m=m2,
        gcd_m_n=d,
        factorization_status=factored.exactness,
        normality_status=normality,
        notes=tuple(notes),
        normalized=normalized,
    )


def _component_labels(inp: HypersurfaceInput) -> list[tuple[str, int]]:
    """Effective prime factor labels with c-degrees, closure splits expanded."""
    labels = []
    splits = inp.factored.closure_splits
    for t, h in enumerate(inp.factored.factors):
        gamma = weighted_degree(h)
        s = 1 if splits is None else splits[t]
        if s == 1:
            labels.append((h.to_string(), gamma))
        else:
            if gamma % s:
                raise InternalInconsistency(
                    "closure components of one factor must share a degree"
                )
            labels.extend(
                (f"closure component {i + 1} of {s} of {h.to_string()}", gamma // s)
                for i in range(s)
            )
    return labels


def _relations(dctx: DivisorContext, n: int) -> tuple[Relation, ...]:
    """Order and sum relations, each checked at the divisor level."""
    out = []
    for t in range(dctx.r):
        comp = dctx.components[dctx.factor_component[t]]
        gamma = dctx.factor_cdegree(t)
        F = dctx.Et(t).scale(n) + dctx.D.scale(n * gamma)
        holds = all(c.denominator == 1 for c in F.coeffs) and F.degree() == 0
        out.append(
            Relation(
                statement=f"{n}*[(z, {comp.form.to_string()})] = 0",
                divisor_identity=(
                    f"{n}*E_{t + 1} + {n * gamma}*D is integral of degree 0"
                ),
                identity_holds=holds,
                witness=f"(z, h_{t + 1})-module to the n-th order equals h_{t + 1}*R gradedwise",
            )
        )
    total = dctx.zero_divisor()
    for t in range(dctx.r):
        total = total + dctx.Et(t)
    F = total + dctx.D.scale(dctx.input.m)
    floor_m = dctx.D.scale(dctx.input.m).floor()
    holds = (
        all(c.denominator == 1 for c in F.coeffs)
        and tuple(int(c) for c in F.coeffs) == floor_m
        and integer_divisor_degree(dctx, floor_m) == 0
    )
    out.append(
        Relation(
            statement="sum of all [(z, h_t)] = 0",
            divisor_identity="sum_t E_t + m*D equals floor(m*D), integral of degree 0",
            identity_holds=holds,
            witness="intersection of the (z, h_t)-modules equals z*R gradedwise",
        )
    )
    return tuple(out)


def _assemble(
    report: HypothesisReport, mode: str, x0_weight: int | None
) -> ClassGroupResult:
    inp = report.normalized
    n = inp.n
    dctx = DivisorContext.build(inp)
    if n == 1:
        return ClassGroupResult(
            group=FiniteAbelianGroup(()),
            generators=(),
            relations=(),
            r=len(inp.factored.factors),
            mode=mode,
            report=report,
            context=dctx,
            closure_splits=inp.factored.closure_splits,
            x0_weight=x0_weight,
        )
    labels = _component_labels(inp)
    r_eff = len(labels)
    group, images, orders = cokernel_with_generator_images(
        (dctx.bez.a,) * r_eff, (n,) * r_eff
    )
    if group.invariant_factors != (n,) * (r_eff - 1):
        raise InternalInconsistency(
            f"Smith form gave {group.invariant_factors}, expected "
            f"{(n,) * (r_eff - 1)}; the presentation of the cokernel is wrong"
        )
    generators = []
    for t in range(r_eff - 1):
        label, gamma = labels[t]
        if orders[t] != n:
            raise InternalInconsistency(
                f"generator {t + 1} has order {orders[t]}, expected {n}"
            )
        generators.append(
            GeneratorInfo(
                pair=("z", label),
                order=orders[t],
                degree_z=inp.m,
                degree_h=n * gamma,
                image=images[t],
            )
        )
    return ClassGroupResult(
        group=group,
        generators=tuple(generators),
        relations=_relations(dctx, n),
        r=r_eff,
        mode=mode,
        report=report,
        context=dctx,
        closure_splits=inp.factored.closure_splits,
        x0_weight=x0_weight,
    )


def compute_class_group(
    inp: HypersurfaceInput, assume_normal: bool = False
) -> ClassGroupResult:
    """Class group (Z/n)^(r-1) of a validated hypersurface input."""
    report = validate_hypotheses(inp, assume_normal=assume_normal)
    result = _assemble(report, mode="hypersurface", x0_weight=None)
    bad = [rel for rel in result.relations if not rel.identity_holds]
    if bad:
        raise InternalInconsistency(
            f"divisor-level relation check failed: {bad[0].divisor_identity}"
        )
    return result


def choose_x0_weight(m_g: int, n: int) -> int:
    """Smallest positive weight c0 for the auxiliary variable with
    gcd(c0 + m_g, n) = 1."""
    c0 = 1
    while gcd(c0 + m_g, n) != 1:
        c0 += 1
        if c0 > 2 * n:
            raise InternalInconsistency("no valid x0 weight below 2n; impossible")
    return c0


def x0_extension_mode(
    gring: WeightedRing,
    n: int,
    factors: list[WPolynomial],
    x0: str = "x0",
    assume_normal: bool = False,
) -> ClassGroupResult:
    """Class group (Z/n)^r of k[z, x0, x]/(z^n - x0 g), g = product(factors).

    The weight of x0 is chosen as the smallest positive c0 making
    deg(x0 g) = c0 + deg(g) coprime to n, so the main pipeline applies to the
    factorization (h_1, ..., h_r, x0).  Listing x0 last makes the generator
    classes exactly [(z, h_1)], ..., [(z, h_r)]; the class of (z, x0) is the
    one eliminated by the sum relation.
    """
    if n < 1:
        raise DegenerateInput(f"n must be >= 1, got {n}")
    if not factors:
        raise DegenerateInput("need at least one factor of g")
    if x0 in gring.variables:
        raise DegenerateInput(f"{x0!r} already used by the base ring")
    ring1, _ = normalize_weights(gring)
    factors1 = [h.with_ring(ring1) for h in factors]
    g = factors1[0]
    for h in factors1[1:]:
        g = g * h
    m_g = weighted_degree(g)
    c0 = choose_x0_weight(m_g, n)
    ring2 = WeightedRing(
        ring1.variables + (x0,), ring1.weights + (c0,), ring1.field
    )
    def lift(f: WPolynomial) -> WPolynomial:
        return WPolynomial(ring2, {exps + (0,): c for exps, c in f.terms.items()})
    x0_poly = WPolynomial.variable(ring2, ring2.d - 1)
    lifted = [lift(h) for h in factors1] + [x0_poly]
    g2 = lift(g) * x0_poly
    factored = validate_factorization(lifted, ring2, n, g2)
    inp = HypersurfaceInput(
        ring=ring2, n=n, g=g2, factored=factored, m=m_g + c0
    )
    report = validate_hypotheses(inp, assume_normal=assume_normal)
    result = _assemble(report, mode="x0-extension", x0_weight=c0)
    bad = [rel for rel in result.relations if not rel.identity_holds]
    if bad:
        raise InternalInconsistency(
            f"divisor-level relation check failed: {bad[0].divisor_identity}"
        )
    return result


def relations_report(result: ClassGroupResult, depth: int | None = None):
    """Relations with their graded verification outcome attached.

    Delegates the graded checks to the oracle module; returns a list of
    (Relation, status string) pairs.  The import is deferred because the
    oracle consumes this module's results.
    """
    from . import oracle

    if result.splits_over_closure:
        return [
            (rel, "skipped: closure components have no exact representation")
            for rel in result.relations
        ]
    if result.report.n == 1:
        return [(rel, "vacuous: n = 1") for rel in result.relations]
    outcome = oracle.verify_order_relations_graded(result.context, depth)
    order_status = (
        f"pass to depth {outcome.depth}" if outcome.order_ok else "FAIL: " + "; ".join(outcome.failures)
    )
    sum_status = (
        f"pass to depth {outcome.depth}"
        if outcome.intersection_ok
        else "FAIL: " + "; ".join(outcome.failures)
    )
    annotated = []
    for rel in result.relations:
        if rel.statement.startswith("sum"):
            annotated.append((rel, sum_status))
        else:
            annotated.append((rel, order_status))
    return annotated
