"""
Gaussian smoothing and Fisher information.
"""


#
# Entclt, exact computations for the discrete entropic CLT.
# Copyright (C) 2026  Entclt developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#


import math
from typing import Callable, Optional, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad
from scipy.special import entr, ndtr

from entclt.entropies import (
    check_sum_args, gaussian_entropy, smoothed_relative_entropy,
)
from entclt.exceptions import (
    DegenerateDistributionError, DistributionError, NumericalIntegrityError,
    QuadratureError, SupportCapError,
)
from entclt.flavors import SmoothingKind
from entclt.lattices import LatticePmf, Moments, moments, standardized_view
from entclt.reports import BoundReport
from entclt.utils import compensated_sum


__all__ = (
    'DE_BRUIJN_TOLERANCE',
    'DEFAULT_DE_BRUIJN_CAP',
    'DEFAULT_SPATIAL_TOL',
    'DEFAULT_T_NODES',
    'GaussianSmoothedDensity',
    'de_bruijn_check',
    'differential_entropy',
    'fisher_information',
    'relative_entropy_to_normal',
    'smooth',
    'standardized_fisher',
)


DE_BRUIJN_TOLERANCE = 1e-3
DEFAULT_DE_BRUIJN_CAP = 64
DEFAULT_SPATIAL_TOL = 1e-9
DEFAULT_T_NODES = 64

RELATIVE_TOLERANCE = 1e-10
SUBDIVISION_LIMIT = 200
WINDOW = 12.0

#
# Densities below this are treated as zero by the integrands.
#

DENSITY_FLOOR = 1e-300

#
# Standardised Fisher information below zero by less than this is
# round-off; anything further below is an error.
#

FISHER_CLAMP = 1e-8

#
# Extra breakpoints at these multiples of the kernel width around each
# edge keep narrow transitions visible to the adaptive rule.
#

EDGE_STEPS = (1.0, 2.0, 4.0, 8.0)

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def cdf_difference(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    """
    Returns Phi(upper) - Phi(lower), taking both from the nearer tail.
    """
    mirrored = 0.0 < lower
    direct = ndtr(upper) - ndtr(lower)
    flipped = ndtr(-lower) - ndtr(-upper)

    return np.where(mirrored, flipped, direct)


class GaussianSmoothedDensity:
    """
    Density of a lattice law, optionally spread uniformly over each
    cell, convolved with a Gaussian kernel.

    Component `k` is a Gaussian centred at `component_locations[k]`,
    or a uniform law of the given halfwidth around that location
    convolved with the Gaussian.
    """

    def __init__(
            self,
            kind: SmoothingKind,
            component_locations: np.ndarray,
            component_weights: np.ndarray,
            gaussian_variance: float,
            uniform_halfwidth: float,
            t: float,
            ) -> None:
        """
        Constructor.

        Args:
            kind: Whether components carry a uniform part.
            component_locations: Centre of every component.
            component_weights: Mixture weights, summing to one.
            gaussian_variance: Variance of the Gaussian kernel.
            uniform_halfwidth: Halfwidth of the uniform part.
            t: Interpolation parameter that produced the density.

        Raises:
            DistributionError: If the components are invalid.
        """
        locations = np.array(component_locations, dtype=float)
        weights = np.array(component_weights, dtype=float)

        if locations.shape != weights.shape or locations.ndim != 1:
            raise DistributionError("Components are misshapen.")

        if locations.size == 0 or np.any(weights < 0.0):
            raise DistributionError("Components are invalid.")

        if 1e-12 < abs(compensated_sum(weights) - 1.0):
            raise DistributionError("Component weights must sum to 1.")

        if not gaussian_variance > 0.0:
            raise DistributionError("Gaussian variance must be positive.")

        uniform = kind is SmoothingKind.LATTICE_UNIFORM_SMOOTHED

        if uniform and not uniform_halfwidth > 0.0:
            raise DistributionError("Uniform halfwidth must be positive.")

        if not uniform:
            uniform_halfwidth = 0.0

        locations.setflags(write=False)
        weights.setflags(write=False)

        self.kind = kind
        self.component_locations = locations
        self.component_weights = weights
        self.gaussian_variance = gaussian_variance
        self.uniform_halfwidth = uniform_halfwidth
        self.t = t

    @property
    def std(self) -> float:
        """
        Standard deviation of the Gaussian kernel.
        """
        return math.sqrt(self.gaussian_variance)

    @property
    def is_uniform(self) -> bool:
        return self.kind is SmoothingKind.LATTICE_UNIFORM_SMOOTHED

    @property
    def mean(self) -> float:
        weights = self.component_weights
        return compensated_sum(weights * self.component_locations)

    @property
    def variance(self) -> float:
        """
        Exact variance of the mixture.
        """
        weights = self.component_weights
        spread = (self.component_locations - self.mean) ** 2
        uniform = self.uniform_halfwidth ** 2 / 3.0

        return (
            compensated_sum(weights * spread)
            + self.gaussian_variance
            + uniform
        )

    def evaluate(self, x: float) -> Tuple[float, float]:
        """
        Returns the density and its derivative at a point.
        """
        s = self.std
        z = (x - self.component_locations) / s
        weights = self.component_weights

        if self.is_uniform:
            w = self.uniform_halfwidth / s
            upper = z + w
            lower = z - w

            mass = cdf_difference(upper, lower)
            slope = np.exp(-0.5 * upper ** 2) - np.exp(-0.5 * lower ** 2)

            width = 2.0 * self.uniform_halfwidth
            f = float(np.dot(weights, mass)) / width
            df = INV_SQRT_2PI * float(np.dot(weights, slope)) / (width * s)
        else:
            kernel = np.exp(-0.5 * z ** 2)

            f = INV_SQRT_2PI * float(np.dot(weights, kernel)) / s
            df = -INV_SQRT_2PI * float(np.dot(weights, kernel * z)) / s ** 2

        return f, df

    def pdf(self, x: float) -> float:
        return self.evaluate(x)[0]

    def derivative(self, x: float) -> float:
        return self.evaluate(x)[1]

    def score(self, x: float) -> float:
        """
        Returns f'(x) / f(x), the score function.
        """
        f, df = self.evaluate(x)
        return df / f

    @property
    def window(self) -> Tuple[float, float]:
        """
        Returns the interval outside which the density is negligible.
        """
        reach = self.uniform_halfwidth + WINDOW * self.std
        locations = self.component_locations

        return float(locations.min()) - reach, float(locations.max()) + reach

    def breakpoints(self) -> np.ndarray:
        """
        Returns sorted points inside the window where the density
        changes quickly.
        """
        locations = self.component_locations
        w = self.uniform_halfwidth

        if self.is_uniform:
            edges = np.concatenate((locations - w, locations + w))
        else:
            edges = locations.copy()

        steps = self.std * np.array(EDGE_STEPS)
        spread = np.concatenate((-steps[::-1], [0.0], steps))
        points = np.unique((edges[:, None] + spread[None, :]).ravel())

        lo, hi = self.window
        scale = max(1.0, abs(lo), abs(hi))
        keep = np.concatenate(([True], 1e-12 * scale < np.diff(points)))
        points = points[keep]

        return points[(lo < points) & (points < hi)]

    def __repr__(self) -> str:
        return (
            f"<GaussianSmoothedDensity kind={self.kind.label} "
            f"t={self.t!r} components={len(self.component_weights)}>"
        )


def smooth(
        p: LatticePmf,
        t: float,
        with_uniform: bool,
        z_moments: Optional[Moments] = None,
        ) -> GaussianSmoothedDensity:
    """
    Returns the density of sqrt(1 - t) Y + sqrt(t) Z.

    Y is X ~ p, or X plus a uniform variable on one lattice cell. Z is
    Gaussian with the mean and variance of Y unless overridden.

    Args:
        p: Law of X.
        t: Interpolation parameter in (0, 1).
        with_uniform: Whether Y carries the uniform part.
        z_moments: Mean and variance of Z, or None to match Y.

    Raises:
        ValueError: If t is not in (0, 1).
        DegenerateDistributionError: If Z would have zero variance.
    """
    if not 0.0 < t < 1.0:
        raise ValueError(f"Expected 0 < t < 1, got {t}.")

    stats = moments(p)
    centres = p.points

    if with_uniform:
        centres = centres + 0.5 * p.span
        stats = Moments(
            mean=stats.mean + 0.5 * p.span,
            variance=stats.variance + p.span ** 2 / 12.0,
        )

    if z_moments is None:
        z_moments = stats

    if not z_moments.variance > 0.0:
        raise DegenerateDistributionError("Z must have positive variance.")

    shrink = math.sqrt(1.0 - t)

    if with_uniform:
        kind = SmoothingKind.LATTICE_UNIFORM_SMOOTHED
        halfwidth = 0.5 * shrink * p.span
    else:
        kind = SmoothingKind.LATTICE_SMOOTHED
        halfwidth = 0.0

    return GaussianSmoothedDensity(
        kind=kind,
        component_locations=shrink * centres + math.sqrt(t) * z_moments.mean,
        component_weights=p.weights,
        gaussian_variance=t * z_moments.variance,
        uniform_halfwidth=halfwidth,
        t=t,
    )


def integrate(
        d: GaussianSmoothedDensity,
        func: Callable[[float], float],
        tol: float,
        ) -> float:
    """
    Integrates a function over the window of a density.

    Raises:
        QuadratureError: If the adaptive rule does not converge.
    """
    lo, hi = d.window
    points = d.breakpoints()
    limit = max(SUBDIVISION_LIMIT, 2 * len(points) + 50)

    result = quad(
        func,
        lo,
        hi,
        points=points,
        epsabs=tol,
        epsrel=RELATIVE_TOLERANCE,
        limit=limit,
        full_output=1,
    )

    value, error = result[0], result[1]

    if not math.isfinite(value):
        raise QuadratureError("Integral is not finite.")

    if 3 < len(result) and tol < error:
        raise QuadratureError(f"Integral estimate {error:.1e}: {result[3]}")

    return value


def total_mass(
        d: GaussianSmoothedDensity,
        tol: float = DEFAULT_SPATIAL_TOL,
        ) -> float:
    """
    Integrates the density itself.
    """
    return integrate(d, d.pdf, tol)


def fisher_information(
        d: GaussianSmoothedDensity,
        tol: float = DEFAULT_SPATIAL_TOL,
        ) -> float:
    """
    Computes the integral of f'^2 / f by adaptive quadrature.

    Args:
        d: The density.
        tol: Absolute tolerance of the integral.

    Raises:
        QuadratureError: If the integral does not converge.
    """
    def integrand(x: float) -> float:
        f, df = d.evaluate(x)

        if f < DENSITY_FLOOR:
            return 0.0

        return df * df / f

    return integrate(d, integrand, tol)


def standardized_fisher(
        d: GaussianSmoothedDensity,
        tol: float = DEFAULT_SPATIAL_TOL,
        ) -> float:
    """
    Computes J = sigma^2 I - 1, which vanishes only for Gaussians.

    Raises:
        NumericalIntegrityError: If J is clearly negative.
    """
    value = d.variance * fisher_information(d, tol) - 1.0

    if value < -FISHER_CLAMP:
        raise NumericalIntegrityError(f"Negative Fisher excess: {value!r}")

    return max(value, 0.0)


def differential_entropy(
        d: GaussianSmoothedDensity,
        tol: float = DEFAULT_SPATIAL_TOL,
        ) -> float:
    """
    Computes the integral of -f log f by adaptive quadrature.
    """
    def integrand(x: float) -> float:
        return float(entr(d.pdf(x)))

    return integrate(d, integrand, tol)


def relative_entropy_to_normal(
        d: GaussianSmoothedDensity,
        tol: float = DEFAULT_SPATIAL_TOL,
        ) -> float:
    """
    Computes D of a density against the normal law with its moments.
    """
    divergence = gaussian_entropy(d.variance) - differential_entropy(d, tol)
    return max(divergence, 0.0)


def de_bruijn_check(
        p_Sn: LatticePmf,
        n: int,
        h: float,
        sigma2: float,
        quad_points: int = DEFAULT_T_NODES,
        tolerance: float = DE_BRUIJN_TOLERANCE,
        spatial_tol: float = DEFAULT_SPATIAL_TOL,
        cap: int = DEFAULT_DE_BRUIJN_CAP,
        ) -> BoundReport:
    """
    Checks the integral form of de Bruijn's identity.

    Y is the standardised sum spread uniformly over its cells. Its
    relative entropy in closed form is compared to that of the halfway
    point of the Gaussian path, plus the integral of J along the path
    up to there. The integral runs over u = sqrt(t), which clusters
    nodes near t = 0 where J is steepest.

    Args:
        p_Sn: Law of the sum of n summands.
        n: Number of summands.
        h: Span of a single summand.
        sigma2: Variance of a single summand.
        quad_points: Number of Gauss-Legendre nodes in u.
        tolerance: Accepted residual.
        spatial_tol: Absolute tolerance of each spatial integral.
        cap: Largest accepted n.

    Raises:
        SupportCapError: If n exceeds the cap.
        DegenerateDistributionError: If the sum is a point mass.
        QuadratureError: If a spatial integral does not converge.
    """
    check_sum_args(n, h, sigma2)

    if cap < n:
        raise SupportCapError(f"Refusing n = {n} above the cap of {cap}.")

    if quad_points < 1:
        raise ValueError(f"Expected quad_points >= 1, got {quad_points}.")

    if p_Sn.is_degenerate:
        raise DegenerateDistributionError("Sum has zero variance.")

    stats = moments(p_Sn)
    base = Moments(mean=stats.mean / n, variance=stats.variance / n)
    view = standardized_view(p_Sn, n, base)

    lhs = smoothed_relative_entropy(p_Sn, n, h, sigma2)

    halfway = smooth(view, 0.5, with_uniform=True)
    endpoint = relative_entropy_to_normal(halfway, spatial_tol)

    nodes, weights = leggauss(quad_points)
    top = math.sqrt(0.5)
    terms = []

    for node, weight in zip(nodes, weights):
        u = 0.5 * top * (node + 1.0)
        t = u * u

        density = smooth(view, t, with_uniform=True)
        excess = standardized_fisher(density, spatial_tol)

        terms.append(0.5 * top * weight * excess * u / (1.0 - t))

    rhs = endpoint + compensated_sum(terms)

    return BoundReport.identity(
        name='de_bruijn',
        lhs=lhs,
        rhs=rhs,
        n=n,
        tolerance=tolerance,
    )
