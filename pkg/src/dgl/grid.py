"""Periodic 1D lattice with a symmetric momentum set and spectral derivative.

The site count is forced to be odd so the momentum set {2*pi*k/L} pairs
every p with -p exactly; an even count would leave an unpaired Nyquist
mode and break the p <-> -p symmetry the vacuum relies on.
"""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic grid on [0, L) with N (odd) sites.

    Attributes
    ----------
    length : float
        Box length L in natural units.
    sites : int
        Number of lattice sites N (odd, >= 3).
    dx : float
        Lattice spacing L/N.
    x : ndarray
        Site positions x_j = j*dx, shape (N,).
    momenta : ndarray
        Momenta 2*pi*k/L for k = -(N-1)/2 .. (N-1)/2, ascending, shape (N,).
    """

    length: float
    sites: int
    dx: float = field(init=False)
    x: np.ndarray = field(init=False)
    momenta: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError(f"box length must be positive, got {self.length}")
        if self.sites < 3 or self.sites % 2 == 0:
            raise ValueError(
                f"site count must be an odd integer >= 3, got {self.sites}"
            )
        dx = self.length / self.sites
        k = np.arange(-(self.sites - 1) // 2, (self.sites - 1) // 2 + 1)
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "x", dx * np.arange(self.sites))
        object.__setattr__(self, "momenta", 2.0 * np.pi * k / self.length)

    @property
    def wavenumbers(self):
        """Integer mode indices k with p_k = 2*pi*k/L."""
        return np.rint(self.momenta * self.length / (2.0 * np.pi)).astype(int)


def make_grid(length, sites):
    """Build a periodic grid; rejects even site counts and nonpositive length."""
    return Grid1D(float(length), int(sites))


def plane_waves(grid):
    """Columns e^{i p_k x_j} / sqrt(N): a unitary N x N matrix, one column per momentum.

    Column k is normalized to 1 in the plain vector norm, which equals
    normalization to 1/sqrt(L) amplitude under the dx-weighted inner product.
    """
    phase = np.exp(1j * np.outer(grid.x, grid.momenta))
    return phase / np.sqrt(grid.sites)


def spectral_derivative(grid):
    """Exact d/dx on the sampled plane-wave basis, as a dense N x N matrix.

    D e^{i p x} = i p e^{i p x} for every grid momentum p, and D is exactly
    anti-Hermitian because the plane-wave columns are orthonormal.
    """
    f = plane_waves(grid)
    return (f * (1j * grid.momenta)) @ f.conj().T


def to_momentum(grid, values):
    """Expand site samples (first axis) in the plane-wave basis."""
    return plane_waves(grid).conj().T @ np.asarray(values)


def from_momentum(grid, coeffs):
    """Inverse of :func:`to_momentum`."""
    return plane_waves(grid) @ np.asarray(coeffs)
