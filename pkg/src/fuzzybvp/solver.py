"""Transform pipeline for second-order fuzzy boundary value problems.

The equation a*y'' + b*y' + c*y = 0 with fuzzy values at x = 0 and x = L
is transformed branch-wise, the unknown initial-derivative constant is
carried symbolically, the far boundary condition eliminates it, and the
result is assembled as envelope closed forms whose coefficients stay
affine in the membership level r.

The four differentiability cases differ in whether derivative endpoints
swap. Cases 11 and 22 decouple the branches; the mixed cases 12 and 21
couple them into a fourth-order operator with cos/cosh basis functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import (
    CaseInapplicableError,
    EigenvalueDegeneracyError,
    FuzzyBvpError,
)
from .fuzzy import FuzzyNumber, RFun
from .laplace import (
    ClosedForm,
    ClosedFormTerm,
    Polynomial,
    RationalFunction,
    TermKind,
    _KIND_ORDER,
    inverse_laplace,
)

# A shooting-constant pivot smaller than this is a resonance of the
# operator, not a solvable elimination.
PIVOT_TOL = 1e-12


class DiffCase(enum.Enum):
    """Differentiability case tag: first/second derivative each (1) or (2)."""

    CASE_11 = "11"
    CASE_22 = "22"
    CASE_12 = "12"
    CASE_21 = "21"

    @property
    def tag(self) -> str:
        return self.value

    @property
    def is_mixed(self) -> bool:
        return self in (DiffCase.CASE_12, DiffCase.CASE_21)


ALL_CASES = (DiffCase.CASE_11, DiffCase.CASE_22, DiffCase.CASE_12, DiffCase.CASE_21)


@dataclass(frozen=True)
class FuzzyBVP:
    """a*y'' + b*y' + c*y = 0 on [0, L] with fuzzy boundary values.

    ``v_height`` is an optional potential step: the mixed differentiability
    cases solve with the shifted coefficient c + v_height while cases 11/22
    use c unchanged, matching a barrier that is only present on the region
    where the mixed cases apply. The forcing term is fixed at zero.
    """

    a: float
    b: float
    c: float
    L: float
    bc0: FuzzyNumber
    bcL: FuzzyNumber
    case: DiffCase | None = None
    v_height: float = 0.0

    def __post_init__(self):
        if self.a == 0.0:
            raise ValueError("leading coefficient a must be nonzero")
        if not self.L > 0.0:
            raise ValueError(f"domain length must be positive, got {self.L}")

    def effective_c(self, case: DiffCase) -> float:
        return self.c + self.v_height if case.is_mixed else self.c


@dataclass(frozen=True)
class RClosedForm:
    """Closed form whose term coefficients are affine functions of r."""

    terms: tuple[tuple[TermKind, float, RFun], ...]

    def __post_init__(self):
        cleaned = [
            (kind, k, coeff)
            for kind, k, coeff in self.terms
            if coeff.c0 != 0.0 or coeff.c1 != 0.0
        ]
        cleaned.sort(key=lambda t: (_KIND_ORDER[t[0]], t[1]))
        object.__setattr__(self, "terms", tuple(cleaned))

    def fix_r(self, r: float) -> ClosedForm:
        return ClosedForm(
            tuple(ClosedFormTerm(kind, k, coeff(r)) for kind, k, coeff in self.terms)
        )

    def r_slope(self) -> ClosedForm:
        """d/dr of the envelope; a plain closed form since coefficients are affine."""
        return ClosedForm(
            tuple(ClosedFormTerm(kind, k, coeff.c1) for kind, k, coeff in self.terms)
        )

    def evaluate(self, x, r: float):
        return self.fix_r(r).evaluate(x)


@dataclass(frozen=True)
class FuzzySolution:
    """Envelope pair for one differentiability case.

    ``constants`` holds the eliminated initial-derivative values as affine
    functions of r, keyed F1/F2 for the decoupled cases and H1/H2 for the
    coupled ones.
    """

    lower: RClosedForm
    upper: RClosedForm
    case: DiffCase
    problem: FuzzyBVP
    constants: dict[str, RFun]


@dataclass(frozen=True)
class BranchTransform:
    """Transform of one branch with the derivative constant still symbolic.

    Represents l[y](p) = const_part(p) + r * r_part(p) + F * f_part(p).
    """

    const_part: RationalFunction
    r_part: RationalFunction
    f_part: RationalFunction


def transform_bvp(prob: FuzzyBVP) -> tuple[BranchTransform, BranchTransform]:
    """Branch-wise transform templates of the decoupled pipeline.

    Using l[y'] = p*l[y] - y(0) and l[y''] = p^2*l[y] - p*y(0) - y'(0) with
    y'(0) replaced by the symbolic constant F gives

        (a p^2 + b p + c) l[y] = a*y(0)*p + b*y(0) + a*F.
    """
    den = Polynomial((prob.c, prob.b, prob.a))

    def branch(y0: RFun) -> BranchTransform:
        return BranchTransform(
            const_part=RationalFunction(
                Polynomial((prob.b * y0.c0, prob.a * y0.c0)), den
            ),
            r_part=RationalFunction(
                Polynomial((prob.b * y0.c1, prob.a * y0.c1)), den
            ),
            f_part=RationalFunction(Polynomial((prob.a,)), den),
        )

    return branch(prob.bc0.lower), branch(prob.bc0.upper)


def _merge_affine(
    base0: ClosedForm, base1: ClosedForm, gains: list[tuple[ClosedForm, float, float]]
) -> RClosedForm:
    """Assemble coeff(r) = base0 + r*base1 + sum over gains of (g0 + g1*r)*gain."""
    keys: list[tuple[TermKind, float]] = []
    maps = [base0.coeff_map(), base1.coeff_map()] + [g.coeff_map() for g, _, _ in gains]
    for m in maps:
        for key in m:
            if key not in keys:
                keys.append(key)
    terms = []
    for kind, k in keys:
        c0 = base0.coeff(kind, k)
        c1 = base1.coeff(kind, k)
        for gain, g0, g1 in gains:
            gc = gain.coeff(kind, k)
            c0 += g0 * gc
            c1 += g1 * gc
        terms.append((kind, k, RFun(c0, c1)))
    return RClosedForm(tuple(terms))


def solve_uncoupled(prob: FuzzyBVP) -> FuzzySolution:
    """Solve under case 11 or 22, where the branches separate.

    Each branch is a classical constant-coefficient problem: invert the
    transform template with F symbolic (the solution is affine in F), then
    solve the single linear equation the x = L value imposes on F. Under
    case 22 the derivative endpoints swap twice, which restores the same
    template; only the bookkeeping of which branch owns which constant
    changes, so both tags share this computation.
    """
    if prob.case not in (DiffCase.CASE_11, DiffCase.CASE_22):
        raise CaseInapplicableError(f"solve_uncoupled expects case 11 or 22, got {prob.case}")

    lower_t, upper_t = transform_bvp(prob)

    def solve_branch(tmpl: BranchTransform, bcL: RFun) -> tuple[RClosedForm, RFun]:
        base0 = inverse_laplace(tmpl.const_part)
        base1 = inverse_laplace(tmpl.r_part)
        gain = inverse_laplace(tmpl.f_part)
        gL = float(gain.evaluate(prob.L))
        if abs(gL) <= PIVOT_TOL:
            raise EigenvalueDegeneracyError(
                f"boundary elimination pivot vanished at L={prob.L}; the domain "
                "length is an eigenvalue of the operator"
            )
        f0 = (bcL.c0 - float(base0.evaluate(prob.L))) / gL
        f1 = (bcL.c1 - float(base1.evaluate(prob.L))) / gL
        return _merge_affine(base0, base1, [(gain, f0, f1)]), RFun(f0, f1)

    lower, f_lower = solve_branch(lower_t, prob.bcL.lower)
    upper, f_upper = solve_branch(upper_t, prob.bcL.upper)
    if prob.case is DiffCase.CASE_11:
        constants = {"F1": f_lower, "F2": f_upper}
    else:
        # case 22: the constant in each branch equation is the opposite
        # endpoint of the fuzzy derivative
        constants = {"F1": f_upper, "F2": f_lower}
    return FuzzySolution(lower, upper, prob.case, prob, constants)


def solve_coupled(prob: FuzzyBVP) -> FuzzySolution:
    """Solve under the mixed cases 12 or 21, where the branches couple.

    The endpoint swap in the second derivative turns the equation into the
    pair lower'' = kappa*upper, upper'' = kappa*lower with
    kappa = -(c + v_height)/a. Eliminating one branch gives a fourth-order
    operator with characteristic roots +/-w and +/-iw, w = sqrt(kappa);
    the two unknown initial derivatives H1, H2 are eliminated by the 2x2
    linear system the x = L values impose.
    """
    if prob.case is None or not prob.case.is_mixed:
        raise CaseInapplicableError(f"solve_coupled expects case 12 or 21, got {prob.case}")
    if prob.b != 0.0:
        raise CaseInapplicableError(
            "mixed cases need a pure a*y'' = kappa*y equation (no y' term); "
            "use case 11 or 22"
        )
    c_eff = prob.effective_c(prob.case)
    kappa = -c_eff / prob.a
    if kappa <= 0.0:
        raise CaseInapplicableError(
            f"mixed cases need kappa = -c_eff/a > 0, got {kappa}; use case 11 or 22"
        )

    w2 = kappa  # omega squared
    den = Polynomial((-w2 * w2, 0.0, 0.0, 0.0, 1.0))

    def base_parts(own: float, other: float) -> ClosedForm:
        # l[branch] contribution (own*p^3 + w^2*other*p) / (p^4 - w^4)
        return inverse_laplace(
            RationalFunction(Polynomial((0.0, w2 * other, 0.0, own)), den)
        )

    gain_own = inverse_laplace(RationalFunction(Polynomial((0.0, 0.0, 1.0)), den))
    gain_other = inverse_laplace(RationalFunction(Polynomial((w2,)), den))

    lo0 = base_parts(prob.bc0.lower.c0, prob.bc0.upper.c0)
    lo1 = base_parts(prob.bc0.lower.c1, prob.bc0.upper.c1)
    up0 = base_parts(prob.bc0.upper.c0, prob.bc0.lower.c0)
    up1 = base_parts(prob.bc0.upper.c1, prob.bc0.lower.c1)

    gp = float(gain_own.evaluate(prob.L))
    gw = float(gain_other.evaluate(prob.L))
    det = gp * gp - gw * gw
    if abs(det) <= PIVOT_TOL:
        raise EigenvalueDegeneracyError(
            f"coupled elimination is singular at L={prob.L} "
            "(sin(w*L)*sinh(w*L) = 0)"
        )

    def eliminate(rhs_lower: float, rhs_upper: float) -> tuple[float, float]:
        # [gp gw; gw gp] (h1, h2) = (rhs_lower, rhs_upper)
        return (
            (gp * rhs_lower - gw * rhs_upper) / det,
            (gp * rhs_upper - gw * rhs_lower) / det,
        )

    h1_0, h2_0 = eliminate(
        prob.bcL.lower.c0 - float(lo0.evaluate(prob.L)),
        prob.bcL.upper.c0 - float(up0.evaluate(prob.L)),
    )
    h1_1, h2_1 = eliminate(
        prob.bcL.lower.c1 - float(lo1.evaluate(prob.L)),
        prob.bcL.upper.c1 - float(up1.evaluate(prob.L)),
    )

    lower = _merge_affine(lo0, lo1, [(gain_own, h1_0, h1_1), (gain_other, h2_0, h2_1)])
    upper = _merge_affine(up0, up1, [(gain_own, h2_0, h2_1), (gain_other, h1_0, h1_1)])
    constants = {"H1": RFun(h1_0, h1_1), "H2": RFun(h2_0, h2_1)}
    return FuzzySolution(lower, upper, prob.case, prob, constants)


def solve(prob: FuzzyBVP) -> FuzzySolution:
    """Dispatch on the differentiability case tag."""
    if prob.case is None:
        raise CaseInapplicableError("problem has no differentiability case set")
    if prob.case.is_mixed:
        return solve_coupled(prob)
    return solve_uncoupled(prob)


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one differentiability case inside an enumeration."""

    case: DiffCase
    solution: FuzzySolution | None
    error: str | None
    report: "object | None"  # ValidityReport; kept loose to avoid an import cycle

    @property
    def solved(self) -> bool:
        return self.solution is not None


def enumerate_cases(prob: FuzzyBVP, x_count: int = 101, r_count: int = 11) -> list[CaseResult]:
    """Run all four cases and attach validity reports; failures become values.

    The level-set criterion decides which differentiability case yields a
    usable solution, so callers typically want all four side by side.
    """
    from .validate import check_level_set  # deferred: validate imports solver types

    results = []
    for case in ALL_CASES:
        tagged = replace(prob, case=case)
        try:
            sol = solve(tagged)
        except FuzzyBvpError as exc:
            results.append(CaseResult(case, None, f"{type(exc).__name__}: {exc}", None))
            continue
        report = check_level_set(sol, x_count=x_count, r_count=r_count)
        results.append(CaseResult(case, sol, None, report))
    return results
