"""Classical electromagnetic potentials and gauge functions on the grid.

Potentials are kept as callables of time returning per-site samples, so the
integrator can evaluate them at step midpoints for any dt.  Gauge functions
carry analytic space/time derivatives and a declared spatial band limit;
consumers enforce the dealiasing rule B <= (N-1)/4 that keeps products of
the gauge phase with occupied modes representable on the grid.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .grid import Grid1D, spectral_derivative


@dataclass(frozen=True)
class SmoothPulse:
    """Envelope a * sin(pi*(t-t0)/duration)^(2*power) on its window, 0 outside.

    Vanishes together with its first 2*power - 1 derivatives at both window
    edges; larger `power` buys a faster-decaying temporal spectrum at the
    cost of larger mid-pulse derivatives.
    """

    amplitude: float
    t0: float = 0.0
    duration: float = 1.0
    power: int = 1

    def __post_init__(self):
        if self.duration <= 0:
            raise ValueError("pulse duration must be positive")
        if self.power < 1:
            raise ValueError("pulse power must be a positive integer")

    def value(self, t):
        s = (t - self.t0) / self.duration
        if s <= 0.0 or s >= 1.0:
            return 0.0
        return self.amplitude * np.sin(np.pi * s) ** (2 * self.power)

    def slope(self, t):
        s = (t - self.t0) / self.duration
        if s <= 0.0 or s >= 1.0:
            return 0.0
        n = 2 * self.power
        return (self.amplitude * n * np.pi / self.duration
                * np.sin(np.pi * s) ** (n - 1) * np.cos(np.pi * s))

    def describe(self):
        return {"shape": "sin^2n", "amplitude": self.amplitude,
                "t0": self.t0, "duration": self.duration, "power": self.power}


@dataclass(frozen=True)
class GaugeFunction:
    """A gauge generator chi(x, t) with analytic derivatives.

    chi, chi_t, chi_x, chi_xt map a scalar time to per-site samples.
    The initial conditions chi(., t0) = 0 and chi_t(., t0) = 0 are checked
    at construction; they make the gauge-transformed problem share initial
    data with the untransformed one.
    """

    grid: Grid1D
    chi: Callable[[float], np.ndarray]
    chi_t: Callable[[float], np.ndarray]
    chi_x: Callable[[float], np.ndarray]
    chi_xt: Callable[[float], np.ndarray]
    band_limit: int
    t0: float
    spec: dict = field(default_factory=dict)

    def __post_init__(self):
        for name, f in (("chi", self.chi), ("chi_t", self.chi_t)):
            v = np.asarray(f(self.t0))
            if np.max(np.abs(v)) > 1e-12:
                raise ValueError(
                    f"gauge function must satisfy {name}(x, t0) = 0, "
                    f"max |{name}| = {np.max(np.abs(v)):.3e}"
                )

    def describe(self):
        return dict(self.spec, band_limit=self.band_limit, t0=self.t0)


def max_band_limit(grid):
    """Highest gauge-function mode index the dealiasing rule admits."""
    return (grid.sites - 1) // 4


def check_band_limit(chi):
    if chi.band_limit > max_band_limit(chi.grid):
        raise ValueError(
            f"gauge function band limit {chi.band_limit} exceeds the "
            f"dealiasing bound (N-1)/4 = {max_band_limit(chi.grid)} "
            f"for N = {chi.grid.sites}"
        )


def zero_gauge(grid, t0=0.0):
    """The trivial gauge function chi = 0."""
    z = np.zeros(grid.sites)
    return GaugeFunction(grid, lambda t: z, lambda t: z, lambda t: z,
                         lambda t: z, band_limit=0, t0=t0,
                         spec={"kind": "zero"})


def uniform_gauge(grid, pulse: SmoothPulse):
    """Spatially uniform chi = g(t): a pure time-dependent scalar-potential shift."""
    ones = np.ones(grid.sites)
    zeros = np.zeros(grid.sites)
    return GaugeFunction(
        grid,
        chi=lambda t: pulse.value(t) * ones,
        chi_t=lambda t: pulse.slope(t) * ones,
        chi_x=lambda t: zeros,
        chi_xt=lambda t: zeros,
        band_limit=0,
        t0=pulse.t0,
        spec={"kind": "uniform", "pulse": pulse.describe()},
    )


def ramped_sine_gauge(grid, pulse: SmoothPulse, wavenumber=1, phase=0.0):
    """Separable chi = g(t) * sin(2*pi*k*x/L + phase) with a smooth pulse g."""
    k = int(wavenumber)
    kx = 2.0 * np.pi * k / grid.length
    s = np.sin(kx * grid.x + phase)
    c = np.cos(kx * grid.x + phase)
    return GaugeFunction(
        grid,
        chi=lambda t: pulse.value(t) * s,
        chi_t=lambda t: pulse.slope(t) * s,
        chi_x=lambda t: pulse.value(t) * kx * c,
        chi_xt=lambda t: pulse.slope(t) * kx * c,
        band_limit=abs(k),
        t0=pulse.t0,
        spec={"kind": "ramped_sine", "wavenumber": k, "phase": phase,
              "pulse": pulse.describe()},
    )


@dataclass(frozen=True)
class EMPotential:
    """Sampled (A0, A) as callables of time; one spatial component in 1+1D.

    `a_dot` is the analytic time derivative of A when the generator provides
    one; it is required for the exact field strength.  `provenance` records
    how the potential was built so experiment reports can echo it.
    """

    grid: Grid1D
    a0: Callable[[float], np.ndarray]
    a: Callable[[float], np.ndarray]
    a_dot: Optional[Callable[[float], np.ndarray]] = None
    static: bool = False
    provenance: dict = field(default_factory=lambda: {"kind": "explicit"})


def zero_potential(grid):
    z = np.zeros(grid.sites)
    return EMPotential(grid, lambda t: z, lambda t: z, lambda t: z,
                       static=True, provenance={"kind": "zero"})


def uniform_scalar_potential(grid, value):
    """Constant A0 = value everywhere; shifts the whole spectrum by q*value."""
    v = float(value) * np.ones(grid.sites)
    z = np.zeros(grid.sites)
    return EMPotential(grid, lambda t: v, lambda t: z, lambda t: z,
                       static=True,
                       provenance={"kind": "uniform_scalar", "value": float(value)})


def vector_pulse(grid, pulse: SmoothPulse, wavenumber=1, phase=0.0):
    """A = g(t) * cos(2*pi*k*x/L + phase), A0 = 0: a genuine electric-field pulse."""
    k = int(wavenumber)
    kx = 2.0 * np.pi * k / grid.length
    c = np.cos(kx * grid.x + phase)
    z = np.zeros(grid.sites)
    return EMPotential(
        grid,
        a0=lambda t: z,
        a=lambda t: pulse.value(t) * c,
        a_dot=lambda t: pulse.slope(t) * c,
        provenance={"kind": "vector_pulse", "wavenumber": k, "phase": phase,
                    "pulse": pulse.describe()},
    )


def pure_gauge(chi: GaugeFunction):
    """Potential (A0, A) = (chi_t, -chi_x): zero field strength by construction."""
    check_band_limit(chi)
    return EMPotential(
        chi.grid,
        a0=chi.chi_t,
        a=lambda t: -chi.chi_x(t),
        a_dot=lambda t: -chi.chi_xt(t),
        provenance={"kind": "pure_gauge", "chi": chi.describe()},
    )


def gauge_transform(pot: EMPotential, chi: GaugeFunction):
    """Apply A -> A - chi_x, A0 -> A0 + chi_t; field strength is unchanged."""
    if chi.grid is not pot.grid and (
        chi.grid.sites != pot.grid.sites or chi.grid.length != pot.grid.length
    ):
        raise ValueError("gauge function and potential live on different grids")
    check_band_limit(chi)
    a_dot = None
    if pot.a_dot is not None:
        a_dot = lambda t: pot.a_dot(t) - chi.chi_xt(t)
    return EMPotential(
        pot.grid,
        a0=lambda t: pot.a0(t) + chi.chi_t(t),
        a=lambda t: pot.a(t) - chi.chi_x(t),
        a_dot=a_dot,
        static=False,
        provenance={"kind": "transformed", "base": pot.provenance,
                    "chi": chi.describe()},
    )


def field_strength(pot: EMPotential, t, fd_dt=None):
    """Electric field E(x_j, t) = -(dA/dt + dA0/dx); no magnetic field in 1+1D.

    Uses the analytic dA/dt when the potential carries one, otherwise a
    central difference with spacing `fd_dt`; with neither available the
    derivative cannot be formed.
    """
    if pot.a_dot is not None:
        a_dot = np.asarray(pot.a_dot(t))
    elif fd_dt is not None:
        a_dot = (np.asarray(pot.a(t + fd_dt)) - np.asarray(pot.a(t - fd_dt))) / (2.0 * fd_dt)
    else:
        raise ValueError(
            "potential has no analytic dA/dt; pass fd_dt to differentiate "
            "numerically"
        )
    dx_a0 = spectral_derivative(pot.grid) @ np.asarray(pot.a0(t), dtype=complex)
    return -(a_dot + dx_a0.real)
