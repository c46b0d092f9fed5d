"""Closed-form bounds and predicates: the edge-density threshold alpha(d)
(largest root of 4x^3 - (2d+1)x + d), the degree-square bound, two energy
lower bounds built from exact spectral moments, the positivity polynomial
behind the large-spectral-radius branch of the tree sweep, and the
hypothesis/conclusion verdict for the density-energy claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, count_c4, has_isolated_vertex, is_bipartite
from .spectra import TOLERANCE, energy, exact_moments, spectrum

BISECTION_WIDTH = 1e-14


@dataclass(frozen=True)
class AlphaResult:
    """The largest real root of 4x^3 - (2d+1)x + d with a bracket whose
    endpoint signs were certified in exact rational arithmetic."""

    d: int
    value: float
    bracket: tuple[float, float]
    iterations: int


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of checking one graph against a hypothesis gate and the
    energy > order conclusion.  margin is the signed slack E - n."""

    hypotheses_hold: bool
    conclusion_holds: bool
    margin: float
    borderline: bool


def _cubic(d: int, x: float) -> float:
    return 4.0 * x * x * x - (2 * d + 1) * x + d


def _cubic_sign_exact(d: int, x: Fraction) -> int:
    """Exact sign of 4x^3 - (2d+1)x + d at a rational point."""
    val = 4 * x**3 - (2 * d + 1) * x + d
    return (val > 0) - (val < 0)


def alpha_bounds(d: int) -> tuple[float, float]:
    """Enclosing interval (sqrt((2d+1)/4) - 1/3, sqrt((2d+1)/4)) for the
    largest cubic root; only valid for d >= 4."""
    if d < 4:
        raise ValueError(f"alpha_bounds requires d >= 4, got {d}")
    hi = math.sqrt((2 * d + 1) / 4.0)
    return hi - 1.0 / 3.0, hi


def alpha(d: int) -> AlphaResult:
    """Largest real root of 4x^3 - (2d+1)x + d.

    d = 3 factors exactly as (x-1)(2x-1)(2x+3), so the root is 1.  For
    d >= 4 the root is irrational; bisection with exact endpoint signs
    narrows the analytic bracket, then two Newton steps polish the value
    (clipped back into the certified bracket).
    """
    if d < 3:
        raise ValueError(f"degree bound must be >= 3, got {d}")
    if d == 3:
        return AlphaResult(d=3, value=1.0, bracket=(1.0, 1.0), iterations=0)
    lo, hi = alpha_bounds(d)
    flo = Fraction(lo)
    fhi = Fraction(hi)
    if _cubic_sign_exact(d, flo) >= 0 or _cubic_sign_exact(d, fhi) <= 0:
        raise AssertionError(f"analytic bracket lost its sign change at d={d}")
    iterations = 0
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        iterations += 1
        if _cubic_sign_exact(d, Fraction(mid)) < 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(2):
        deriv = 12.0 * x * x - (2 * d + 1)
        if deriv == 0.0:
            break
        x -= _cubic(d, x) / deriv
        iterations += 1
    x = min(max(x, lo), hi)
    result = AlphaResult(d=d, value=x, bracket=(lo, hi), iterations=iterations)
    if _cubic(d, hi + 1.0) <= 0.0:
        raise AssertionError(f"largest-root certificate failed at d={d}")
    return result


def edge_threshold_met(n: int, m: int, d: int) -> bool:
    """Decide m >= alpha(d) * n exactly.

    Outside the certified bracket the comparison is immediate; a ratio
    m/n that lands inside is resolved by the exact sign of the cubic
    (the bracket lies right of the middle root, where the cubic is
    negative below the largest root and positive above).
    """
    if d == 3:
        return m >= n
    a = alpha(d)
    ratio = Fraction(m, n)
    if ratio >= Fraction(a.bracket[1]):
        return True
    if ratio <= Fraction(a.bracket[0]):
        return False
    return _cubic_sign_exact(d, ratio) >= 0


def degree_square_bound(n: int, m: int, d: int) -> int:
    """Upper bound 2m(d+1) - dn on the sum of squared degrees of a graph
    with no isolated vertices and max degree at most d; summing
    (d_i - 1)(d_i - d) <= 0 over the vertices gives it directly."""
    return 2 * m * (d + 1) - d * n


def rti_energy_lower_bound(g: Graph) -> float:
    """Energy lower bound sqrt(p2^3 / p4) from the exact integer moments;
    tight exactly on disjoint unions of complete bipartite graphs (plus
    isolated vertices)."""
    if g.m == 0:
        return 0.0
    p2, p4 = exact_moments(g)
    return math.sqrt(p2**3 / p4)


def bipartite_energy_lower_bound(g: Graph) -> float | None:
    """Refined lower bound 2*mu1 + sqrt((p2 - 2mu1^2)^3 / (p4 - 2mu1^4))
    for bipartite graphs, which peels the symmetric +-mu1 pair off the
    spectrum before applying the moment bound.

    Returns None when the peeled fourth moment is not positive (the bound
    is then inapplicable).  Raises ValueError on non-bipartite input.
    """
    if not is_bipartite(g):
        raise ValueError("bound requires a bipartite graph")
    mu = spectrum(g).mu1
    p2, p4 = exact_moments(g)
    num = p2 - 2.0 * mu * mu
    if num <= 1e-12 * max(1, p2):
        # nothing left after removing the +-mu1 pair (stars and unions
        # of equal-radius components)
        return 2.0 * mu
    den = p4 - 2.0 * mu**4
    if den <= 1e-12 * max(1, p4):
        return None
    return 2.0 * mu + math.sqrt(num**3 / den)


def large_radius_polynomial(n: int, mu: float) -> float:
    """Quadratic in n whose positivity certifies that the bipartite energy
    bound exceeds (n - 2*mu)^2 once mu >= sqrt(7); used with mu <= 3 and
    n >= 23 by the tree sweep's analysis."""
    c2 = mu**4 - 12.0 * mu**2 + 16.0 * mu - 5.0
    c1 = 4.0 * (-(mu**5) + 3.0 * mu**4 + 2.0 * mu**2 - 7.0 * mu + 3.0)
    c0 = 4.0 * (-3.0 * mu**4 + 4.0 * mu**2 - 1.0)
    return (c2 * n + c1) * n + c0


def theorem1_verdict(g: Graph, d: int, tol: float = TOLERANCE) -> TheoremVerdict:
    """Check one graph against the density-energy claim: if it is C4-free
    with no isolated vertices, max degree at most d, and at least
    alpha(d)*n edges, then its energy must exceed its order."""
    if d < 3:
        raise ValueError(f"degree bound must be >= 3, got {d}")
    hypotheses = (
        g.max_degree() <= d
        and not has_isolated_vertex(g)
        and count_c4(g) == 0
        and edge_threshold_met(g.n, g.m, d)
    )
    margin = energy(g) - g.n
    return TheoremVerdict(
        hypotheses_hold=hypotheses,
        conclusion_holds=margin > tol,
        margin=margin,
        borderline=abs(margin) <= tol,
    )
