"""Running all four differentiability cases side by side.

Which case yields a valid level set is a property of the data, not a
choice the solver can make for you: a solution whose lower branch fails
to increase with the membership level (or whose envelopes cross) is not
a usable fuzzy function. Enumeration attaches a validity report to every
case and captures per-case failures as values instead of raising.
"""

from fuzzybvp import FuzzyBVP, FuzzyNumber, RFun, enumerate_cases

wave = FuzzyBVP(
    a=1.0, b=0.0, c=-1.0, L=1.0,
    bc0=FuzzyNumber(RFun(1, 1), RFun(3, -1)),
    bcL=FuzzyNumber(RFun(4, 1), RFun(6, -1)),
)

print("u'' = u with fuzzy boundary values:")
for result in enumerate_cases(wave):
    if result.solved:
        print(f"  case {result.case.tag}: valid_level_set = "
              f"{result.report.valid_level_set}  "
              f"(boundary residual {result.report.max_boundary_residual:.1e})")
    else:
        print(f"  case {result.case.tag}: {result.error}")

# A first-derivative term knocks out the mixed cases: the coupled pipeline
# only covers the pure a*y'' = kappa*y shape.
damped = FuzzyBVP(
    a=1.0, b=-3.0, c=2.0, L=1.0,
    bc0=FuzzyNumber(RFun(-0.5, 0.5), RFun(1, -1)),
    bcL=FuzzyNumber(RFun(-1, 1), RFun(1, -1)),
)
print("\nx'' - 3x' + 2x = 0 with fuzzy boundary values:")
for result in enumerate_cases(damped):
    if result.solved:
        print(f"  case {result.case.tag}: valid_level_set = "
              f"{result.report.valid_level_set}")
    else:
        print(f"  case {result.case.tag}: {result.error}")

# A potential step of height V shifts the coefficient seen by the mixed
# cases: they solve u'' = (E - V) u while cases 11/22 keep u'' = E u.
stepped = FuzzyBVP(
    a=1.0, b=0.0, c=-1.0, L=1.0,
    bc0=FuzzyNumber(RFun(1, 1), RFun(3, -1)),
    bcL=FuzzyNumber(RFun(4, 1), RFun(6, -1)),
    v_height=0.75,
)
print("\nsame wave data with a potential step of 0.75:")
for result in enumerate_cases(stepped):
    status = ("valid" if result.report.valid_level_set else "invalid") if result.solved else "failed"
    print(f"  case {result.case.tag}: {status}")
