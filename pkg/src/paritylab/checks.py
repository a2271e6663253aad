"""Numeric verification suite for the analytic ingredients.

Each check evaluates one analytic fact on a fixed deterministic grid and
returns a CheckResult verdict; the CLI serializes them as JSON lines.  The
suite covers:

* s(y) strict negativity off 0, and its quadratic Taylor coefficient;
* the Lambda(0) = N pi^2/12 dilogarithm identity;
* Euler-Maclaurin residuals on rapidly decaying profiles;
* the saddle-point expansion: quadrature minus the R-term sum must decay at
  the n^{-R/2} rate (checked through consecutive-residual ratios, one-sided
  within factor 3 -- the omitted constants are unknown, and a vanishing
  leading omitted coefficient legitimately beats the generic rate).

Grids are fixed and logarithmic, never random: re-running a check yields a
bit-identical verdict.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .asymptotics import nr_coefficient, nr_contour_integral
from .specialfn import euler_maclaurin, lambda_y, s_of_y

__all__ = [
    "CheckResult",
    "EmfProfile",
    "check_sy_negativity",
    "check_sy_taylor",
    "check_nr_expansion",
    "check_emf",
    "check_lambda_identity",
    "default_emf_profiles",
    "default_sy_grid",
    "default_suite",
    "run_suite",
    "CHECK_COMPARISONS",
]


@dataclass(frozen=True)
class CheckResult:
    """Machine-readable verdict: passed iff `observed` satisfies the check's
    comparison against `bound` (most checks: observed <= bound; the
    negativity check: observed > bound)."""

    name: str
    passed: bool
    observed: float
    bound: float
    samples: int
    notes: str

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "passed": self.passed,
                "observed": self.observed,
                "bound": self.bound,
                "samples": self.samples,
                "notes": self.notes,
            }
        )


# comparison direction per check family, for tolerance overrides
CHECK_COMPARISONS: dict[str, str] = {
    "check_sy_negativity": "greater",
    "check_sy_taylor": "leq",
    "check_nr_expansion": "leq",
    "check_emf": "leq",
    "check_lambda_identity": "leq",
}


# ---------------------------------------------------------------------------
# s(y) checks
# ---------------------------------------------------------------------------


def default_sy_grid() -> list[float]:
    """Symmetric fixed logarithmic grid: +-logspace(1e-3, 50, 200)."""
    g = np.logspace(math.log10(1e-3), math.log10(50.0), 200)
    return [-v for v in reversed(g)] + list(g)


def check_sy_negativity(
    N: int, grid: Sequence[float] | None = None, y_min: float | None = None
) -> CheckResult:
    """s(y) < 0 at every sampled y != 0.

    observed is the grid minimum of -s(y) (distance from the forbidden sign);
    the check passes on strict positivity of that minimum.  y_min restricts
    the grid to |y| >= y_min (the tail variant: negativity bounded away from
    zero beyond a fixed y0).
    """
    pts = list(default_sy_grid() if grid is None else grid)
    if y_min is not None:
        pts = [y for y in pts if abs(y) >= y_min]
    if any(y == 0.0 for y in pts):
        raise ValueError("the negativity grid must exclude y = 0")
    if not pts:
        raise ValueError("empty grid")
    observed = min(-s_of_y(y, N) for y in pts)
    tail = f", |y| >= {y_min}" if y_min is not None else ""
    return CheckResult(
        name=f"check_sy_negativity[N={N}{',tail' if y_min is not None else ''}]",
        passed=observed > 0.0,
        observed=observed,
        bound=0.0,
        samples=len(pts),
        notes=f"min of -s(y) over fixed log grid (N={N}{tail}); positive means s < 0 throughout",
    )


def check_sy_taylor(N: int) -> CheckResult:
    """s(y)/y^2 approaches N(log(2)^2 - pi^2/12); quartic remainder scaling.

    Passes iff |s(y)/y^2 - coefficient| <= 10 y^2 at y = 1e-1, 1e-2, 1e-3;
    observed is the worst |residual|/y^2 against the fixed constant 10.
    """
    coef = N * (math.log(2.0) ** 2 - math.pi * math.pi / 12.0)
    ys = [1e-1, 1e-2, 1e-3]
    worst = 0.0
    for y in ys:
        resid = abs(s_of_y(y, N) / (y * y) - coef)
        worst = max(worst, resid / (y * y))
    return CheckResult(
        name=f"check_sy_taylor[N={N}]",
        passed=worst <= 10.0,
        observed=worst,
        bound=10.0,
        samples=len(ys),
        notes=f"max |s(y)/y^2 - c|/y^2 with c = N(log(2)^2 - pi^2/12) = {coef!r}",
    )


# ---------------------------------------------------------------------------
# saddle-point expansion check
# ---------------------------------------------------------------------------


def check_nr_expansion(
    A: float,
    B: float,
    n_list: Sequence[int],
    R: int,
    theta: float = 1.0,
    mesh: int = 4000,
) -> CheckResult:
    """Quadrature minus the R-term expansion decays at the n^{-R/2} rate.

    For consecutive n the residual ratio must be <= 3x the generic prediction
    (n_i/n_{i+1})^{R/2}.  One-sided on purpose: O(n^{-R/2}) is an upper bound,
    and when the leading omitted coefficient vanishes (A = 1/2, r >= 2) the
    decay is legitimately much faster -- noted, not failed.  R = 0 degrades to
    a boundedness check |quadrature| <= 2 T_{A,B,0}.
    """
    ns = list(n_list)
    if ns != sorted(ns) or len(ns) < 1 or any(n < 100 for n in ns):
        raise ValueError("n_list must be increasing with every n >= 100")
    residuals = []
    for n in ns:
        q = nr_contour_integral(A, B, n, theta=theta, mesh=mesh)
        expansion = sum(nr_coefficient(A, B, r) * n ** (-r / 2.0) for r in range(R))
        residuals.append(abs(q - expansion))

    label = f"A={A!r},R={R}"
    if R == 0:
        t0 = nr_coefficient(A, B, 0)
        observed = max(residuals)
        return CheckResult(
            name=f"check_nr_expansion[{label}]",
            passed=observed <= 2.0 * t0,
            observed=observed,
            bound=2.0 * t0,
            samples=len(ns),
            notes="degenerate R=0: rescaled integral bounded by 2 T_{A,B,0}",
        )

    if len(ns) < 2:
        raise ValueError("rate checks need at least two n values")
    worst = 0.0
    fast_decay = False
    for (n1, r1), (n2, r2) in zip(zip(ns, residuals), zip(ns[1:], residuals[1:])):
        expected = (n1 / n2) ** (R / 2.0)
        factor = 0.0 if r1 == 0.0 else (r2 / r1) / expected
        worst = max(worst, factor)
        if factor < 1.0 / 3.0:
            fast_decay = True
    notes = f"max (residual ratio)/(n1/n2)^(R/2) over consecutive n; residuals {residuals!r}"
    if fast_decay:
        notes += "; decay faster than the generic rate (leading omitted coefficient vanishes or is small)"
    return CheckResult(
        name=f"check_nr_expansion[{label}]",
        passed=worst <= 3.0,
        observed=worst,
        bound=3.0,
        samples=len(ns),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Euler-Maclaurin profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmfProfile:
    """A named test function with exact derivatives for the expansion check."""

    name: str
    f: Callable[[complex], complex]
    derivative: Callable[[int, complex], complex]
    a: complex = 0.0 + 0.0j


def _gaussian_derivative(order: int, x: complex) -> complex:
    # d^m/dx^m e^{-x^2} = (-1)^m H_m(x) e^{-x^2}  (physicists' Hermite)
    h_prev: complex = 1.0 + 0.0j
    if order == 0:
        return cmath.exp(-x * x)
    h_cur: complex = 2.0 * x
    for m in range(1, order):
        h_prev, h_cur = h_cur, 2.0 * x * h_cur - 2.0 * m * h_prev
    return (-1.0) ** order * h_cur * cmath.exp(-x * x)


def default_emf_profiles() -> list[EmfProfile]:
    return [
        EmfProfile(
            name="gaussian",
            f=lambda x: cmath.exp(-x * x),
            derivative=_gaussian_derivative,
        ),
        EmfProfile(
            name="exponential",
            f=lambda x: cmath.exp(-x),
            derivative=lambda order, x: (-1.0) ** order * cmath.exp(-x),
        ),
    ]


def check_emf(
    profiles: Sequence[EmfProfile] | None = None, R: int = 3, z: float = 0.1
) -> CheckResult:
    """Euler-Maclaurin residual <= 1e-8 on every profile at z = 0.1, R = 3."""
    if profiles is None:
        profiles = default_emf_profiles()
    worst = 0.0
    details = []
    for p in profiles:
        report = euler_maclaurin(p.f, p.a, z, R, derivative=p.derivative)
        resid = abs(report.residual)
        worst = max(worst, resid)
        details.append(f"{p.name}: {resid!r}")
    return CheckResult(
        name="check_emf",
        passed=worst <= 1e-8,
        observed=worst,
        bound=1e-8,
        samples=len(profiles),
        notes=f"max |residual| at z={z!r}, R={R}; " + "; ".join(details),
    )


def check_lambda_identity() -> CheckResult:
    """Lambda(0) = N pi^2/12 for N = 2..6, real to 1e-12, value to 1e-10."""
    worst = 0.0
    worst_imag = 0.0
    target = math.pi * math.pi / 12.0
    for N in range(2, 7):
        val = lambda_y(0.0, N)
        worst = max(worst, abs(val.real / N - target))
        worst_imag = max(worst_imag, abs(val.imag))
    return CheckResult(
        name="check_lambda_identity",
        passed=worst <= 1e-10 and worst_imag <= 1e-12,
        observed=worst,
        bound=1e-10,
        samples=5,
        notes=f"max |Lambda(0)/N - pi^2/12| over N=2..6; max |Im Lambda(0)| = {worst_imag!r} (<= 1e-12 required)",
    )


# ---------------------------------------------------------------------------
# default suite
# ---------------------------------------------------------------------------


def default_suite() -> list[tuple[str, Callable[[], CheckResult]]]:
    """The named checks cmd-verify runs, in fixed order."""
    entries: list[tuple[str, Callable[[], CheckResult]]] = []
    for N in range(2, 7):
        entries.append(
            (f"check_sy_negativity[N={N}]", lambda N=N: check_sy_negativity(N))
        )
    entries.append(
        (
            "check_sy_negativity[N=2,tail]",
            lambda: check_sy_negativity(2, y_min=0.5),
        )
    )
    for N in range(2, 7):
        entries.append((f"check_sy_taylor[N={N}]", lambda N=N: check_sy_taylor(N)))
    b2 = math.pi * math.sqrt(2.0 / 12.0)
    for a_val, r_val in ((0.0, 0), (0.0, 1), (0.0, 2), (0.5, 1), (0.5, 2)):
        entries.append(
            (
                f"check_nr_expansion[A={a_val!r},R={r_val}]",
                lambda a_val=a_val, r_val=r_val: check_nr_expansion(
                    a_val, b2, (400, 1600), r_val
                ),
            )
        )
    entries.append(("check_emf", check_emf))
    entries.append(("check_lambda_identity", check_lambda_identity))
    return entries


def run_suite(only: str | None = None) -> list[CheckResult]:
    """Run the default suite, optionally restricted to names starting with `only`."""
    results = []
    for name, runner in default_suite():
        if only is not None and not name.startswith(only):
            continue
        results.append(runner())
    return results
