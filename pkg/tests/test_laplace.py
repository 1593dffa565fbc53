"""Rational-function algebra, partial fractions, and the transform table."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import (
    closed_forms_close,
    random_supported_rational,
    rational_close,
    same_function,
)
from fuzzybvp import (
    ClosedForm,
    ClosedFormTerm,
    Polynomial,
    RationalFunction,
    TermKind,
    UnsupportedProblemError,
    forward_laplace,
    inverse_laplace,
    partial_fractions,
    roots,
)


def term(kind, k, coeff):
    return ClosedFormTerm(kind, k, coeff)


class TestPolynomial:
    def test_trims_trailing_zeros(self):
        assert Polynomial((1.0, 2.0, 0.0, 0.0)).coeffs == (1.0, 2.0)
        assert Polynomial((0.0, 0.0)).is_zero

    def test_degree_and_evaluate(self):
        p = Polynomial((2.0, -3.0, 1.0))
        assert p.degree == 2
        assert p.evaluate(2.0) == 0.0
        assert p.evaluate(1j) == (2.0 - 3.0 * 1j + (1j) ** 2)

    def test_arithmetic(self):
        p = Polynomial((1.0, 1.0))
        q = Polynomial((-1.0, 1.0))
        assert (p * q).coeffs == (-1.0, 0.0, 1.0)
        assert (p + q).coeffs == (0.0, 2.0)
        assert p.derivative().coeffs == (1.0,)

    def test_rational_rejects_improper(self):
        with pytest.raises(ValueError):
            RationalFunction(Polynomial((0.0, 0.0, 1.0)), Polynomial((1.0, 1.0)))
        with pytest.raises(ValueError):
            RationalFunction(Polynomial((1.0,)), Polynomial((0.0,)))


class TestRoots:
    def test_quadratic_distinct_reals(self):
        got = [z for z, m in roots(Polynomial((2.0, -3.0, 1.0)))]
        assert got == [1.0, 2.0]

    def test_difference_of_squares(self):
        k = 1.7
        got = [z for z, _ in roots(Polynomial((-k * k, 0.0, 1.0)))]
        assert got == pytest.approx([-k, k])

    def test_biquadratic(self):
        # oracle: (p^2 - k^2)(p^2 + k^2) expands to p^4 - k^4
        k = 1.3
        expanded = Polynomial((-k * k, 0.0, 1.0)) * Polynomial((k * k, 0.0, 1.0))
        quartic = Polynomial((-k ** 4, 0.0, 0.0, 0.0, 1.0))
        assert expanded.coeffs == pytest.approx(quartic.coeffs)

        got = sorted(
            (z for z, _ in roots(quartic)), key=lambda z: (z.real, z.imag)
        )
        want = sorted([k, -k, 1j * k, -1j * k], key=lambda z: (z.real, z.imag))
        assert got == pytest.approx(want)
        # independent cross-check with numpy's companion-matrix roots
        np_roots = sorted(np.roots([1, 0, 0, 0, -k ** 4]), key=lambda z: (z.real, z.imag))
        assert got == pytest.approx(np_roots, abs=1e-9)

    def test_cubic_with_zero_root(self):
        k = 2.0
        got = [z for z, _ in roots(Polynomial((0.0, k * k, 0.0, 1.0)))]
        assert sorted(got, key=lambda z: z.imag) == pytest.approx([-2j, 0.0, 2j])

    def test_repeated_root_rejected(self):
        with pytest.raises(UnsupportedProblemError):
            roots(Polynomial((1.0, -2.0, 1.0)))  # (p-1)^2

    def test_general_quartic_rejected(self):
        with pytest.raises(UnsupportedProblemError):
            roots(Polynomial((1.0, 1.0, 1.0, 1.0, 1.0)))

    def test_cubic_without_zero_root_rejected(self):
        with pytest.raises(UnsupportedProblemError):
            roots(Polynomial((1.0, 0.0, 0.0, 1.0)))


class TestPartialFractions:
    def test_even_over_difference_of_squares(self):
        k = 1.4
        f = RationalFunction(Polynomial((0.0, 1.0)), Polynomial((-k * k, 0.0, 1.0)))
        got = {round(root.real, 9): res for res, root in partial_fractions(f)}
        assert got[round(k, 9)] == pytest.approx(0.5)
        assert got[round(-k, 9)] == pytest.approx(0.5)

    def test_odd_over_difference_of_squares(self):
        k = 1.4
        f = RationalFunction(Polynomial((1.0,)), Polynomial((-k * k, 0.0, 1.0)))
        got = {round(root.real, 9): res for res, root in partial_fractions(f)}
        assert got[round(k, 9)] == pytest.approx(1 / (2 * k))
        assert got[round(-k, 9)] == pytest.approx(-1 / (2 * k))

    def test_two_simple_poles(self):
        # oracle: clear denominators in (p-3) = A(p-2) + B(p-1) and solve
        # the 2x2 system for the residues
        A, B = np.linalg.solve([[1.0, 1.0], [-2.0, -1.0]], [1.0, -3.0])
        assert (A, B) == pytest.approx((2.0, -1.0))

        f = RationalFunction(Polynomial((-3.0, 1.0)), Polynomial((2.0, -3.0, 1.0)))
        got = {round(root.real, 9): res for res, root in partial_fractions(f)}
        assert got[1.0] == pytest.approx(A)
        assert got[2.0] == pytest.approx(B)

    def test_reconstruction(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            f = random_supported_rational(rng)
            pairs = partial_fractions(f)
            for p in (0.37 + 0.21j, -1.91 + 0.43j, 2.63 - 1.17j):
                direct = f.evaluate(p)
                recombined = sum(res / (p - root) for res, root in pairs)
                assert abs(direct - recombined) <= 1e-9 * (1 + abs(direct))

    def test_repeated_pole_rejected(self):
        f = RationalFunction(Polynomial((1.0,)), Polynomial((1.0, -2.0, 1.0)))
        with pytest.raises(UnsupportedProblemError):
            partial_fractions(f)


class TestInverseLaplace:
    def test_cosh_entry(self):
        k = 1.2
        f = RationalFunction(Polynomial((0.0, 1.0)), Polynomial((-k * k, 0.0, 1.0)))
        g = inverse_laplace(f)
        assert g.terms == (term(TermKind.COSH, k, 1.0),)

    def test_sin_entry(self):
        k = 2.5
        f = RationalFunction(Polynomial((1.0,)), Polynomial((k * k, 0.0, 1.0)))
        g = inverse_laplace(f)
        assert len(g.terms) == 1
        t = g.terms[0]
        assert t.kind is TermKind.SIN and t.k == pytest.approx(k)
        assert t.coeff == pytest.approx(1 / k)

    def test_two_exponentials(self):
        f = RationalFunction(Polynomial((-3.0, 1.0)), Polynomial((2.0, -3.0, 1.0)))
        g = inverse_laplace(f)
        assert g.coeff(TermKind.EXP, 1.0) == pytest.approx(2.0)
        assert g.coeff(TermKind.EXP, 2.0) == pytest.approx(-1.0)

    def test_constant_from_origin_pole(self):
        f = RationalFunction(Polynomial((1.0,)), Polynomial((0.0, 1.0)))
        assert inverse_laplace(f).terms == (term(TermKind.EXP, 0.0, 1.0),)

    def test_damped_oscillation_rejected(self):
        f = RationalFunction(Polynomial((1.0,)), Polynomial((1.0, 1.0, 1.0)))
        with pytest.raises(UnsupportedProblemError):
            inverse_laplace(f)

    def test_linearity(self):
        rng = np.random.default_rng(23)
        checked = 0
        while checked < 20:
            f = random_supported_rational(rng)
            g = random_supported_rational(rng)
            alpha, beta = rng.uniform(-2, 2, size=2)
            try:
                combined = inverse_laplace(f.scaled(alpha) + g.scaled(beta))
            except UnsupportedProblemError:
                continue  # f and g drew overlapping poles
            separate = inverse_laplace(f).scaled(alpha) + inverse_laplace(g).scaled(beta)
            # a +/- pole pair split across f and g collapses to cosh/sinh in
            # the combined inverse, so compare as functions, not term lists
            assert same_function(combined, separate, tol=1e-9)
            checked += 1


class TestForwardLaplace:
    def test_cosh_entry(self):
        k = 1.2
        f = forward_laplace(ClosedForm((term(TermKind.COSH, k, 1.0),)))
        want = RationalFunction(Polynomial((0.0, 1.0)), Polynomial((-k * k, 0.0, 1.0)))
        assert rational_close(f, want)

    def test_constant(self):
        f = forward_laplace(ClosedForm((term(TermKind.EXP, 0.0, 1.0),)))
        assert rational_close(f, RationalFunction(Polynomial((1.0,)), Polynomial((0.0, 1.0))))

    def test_table_entries(self):
        k = 0.7
        cases = [
            (TermKind.EXP, Polynomial((1.0,)), Polynomial((-k, 1.0))),
            (TermKind.COS, Polynomial((0.0, 1.0)), Polynomial((k * k, 0.0, 1.0))),
            (TermKind.SIN, Polynomial((k,)), Polynomial((k * k, 0.0, 1.0))),
            (TermKind.COSH, Polynomial((0.0, 1.0)), Polynomial((-k * k, 0.0, 1.0))),
            (TermKind.SINH, Polynomial((k,)), Polynomial((-k * k, 0.0, 1.0))),
        ]
        for kind, num, den in cases:
            got = forward_laplace(ClosedForm((term(kind, k, 1.0),)))
            assert rational_close(got, RationalFunction(num, den)), kind

    def test_exp_cosh_overlap_stays_squarefree(self):
        # e^{kx} + cosh(kx) shares the pole at k; the merged residues must
        # leave a denominator with distinct roots
        k = 1.1
        g = ClosedForm((term(TermKind.EXP, k, 1.0), term(TermKind.COSH, k, 1.0)))
        f = forward_laplace(g)
        assert f.denominator.degree == 2
        # the canonical inverse splits e^{kx} into its cosh/sinh halves
        back = inverse_laplace(f)
        assert closed_forms_close(
            back,
            ClosedForm((term(TermKind.COSH, k, 2.0), term(TermKind.SINH, k, 1.0))),
            tol=1e-12,
        )
        assert same_function(back, g, tol=1e-12)

    def test_round_trip(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            f = random_supported_rational(rng)
            assert rational_close(forward_laplace(inverse_laplace(f)), f, tol=1e-12)


class TestEvaluateDifferentiate:
    def test_cosh_at_zero(self):
        g = ClosedForm((term(TermKind.COSH, 1.5, 1.0),))
        assert g.evaluate(0.0) == 1.0

    def test_derivative_of_cosh(self):
        k = 1.5
        g = ClosedForm((term(TermKind.COSH, k, 1.0),)).differentiate()
        assert g.terms == (term(TermKind.SINH, k, k),)

    def test_operator_annihilates_its_solution(self):
        # y = 2e^x - e^{2x} solves y'' - 3y' + 2y = 0
        y = ClosedForm((term(TermKind.EXP, 1.0, 2.0), term(TermKind.EXP, 2.0, -1.0)))
        y1 = y.differentiate()
        y2 = y1.differentiate()
        xs = np.linspace(-1.0, 2.0, 31)
        residual = y2.evaluate(xs) - 3.0 * y1.evaluate(xs) + 2.0 * y.evaluate(xs)
        assert np.max(np.abs(residual)) <= 1e-12 * (1 + np.max(np.abs(y.evaluate(xs))))

    @given(
        st.sampled_from(list(TermKind)),
        st.floats(min_value=0.1, max_value=10.0),
        st.floats(min_value=-3.0, max_value=3.0),
        st.floats(min_value=-2.0, max_value=2.0),
    )
    def test_derivative_matches_finite_differences(self, kind, k, coeff, x):
        if kind is TermKind.EXP:
            k = k - 5.0  # allow negative rates for exponentials
        g = ClosedForm((term(kind, k, coeff),))
        h = 1e-5
        fd = (g.evaluate(x + h) - g.evaluate(x - h)) / (2 * h)
        exact = g.differentiate().evaluate(x)
        assert abs(fd - exact) <= 1e-6 * (1 + abs(exact))

    def test_normalization_merges_duplicates(self):
        g = ClosedForm((term(TermKind.COS, 2.0, 1.0), term(TermKind.COS, 2.0, 0.5)))
        assert g.terms == (term(TermKind.COS, 2.0, 1.5),)

    def test_invalid_terms_rejected(self):
        with pytest.raises(ValueError):
            ClosedFormTerm(TermKind.COS, 0.0, 1.0)
        with pytest.raises(ValueError):
            ClosedFormTerm(TermKind.EXP, float("inf"), 1.0)
