"""Free Dirac eigenmodes, energy projectors, and the vacuum kernel in 1+1D.

Representation: 2-component spinors with alpha = sigma_x and beta = sigma_z,
so the free single-particle Hamiltonian in a momentum sector is
H0(p) = [[m, p], [p, -m]] with eigenvalues +-E_p, E_p = sqrt(p^2 + m^2).

All operator matrices act on the flattened one-particle space of dimension
D = 2N with site-major, spinor-minor indexing (index = 2*j + a).  Vectors
stored in mode banks are normalized to 1 in the plain vector norm; divide
by sqrt(dx) to read them as wavefunction samples phi(x_j).
"""

from dataclasses import dataclass

import numpy as np

from .grid import Grid1D, plane_waves, spectral_derivative

ALPHA = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)   # sigma_x
BETA = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)   # sigma_z


def dirac_spinor(sign, p, m):
    """Unit eigenvector of [[m, p], [p, -m]] with eigenvalue sign * E_p.

    Phases are fixed so the spinors tend to (1, 0) and (0, 1) as p -> 0;
    the doubly degenerate point m = 0, p = 0 is assigned by the same
    convention so both energy branches keep rank N.
    """
    e = np.hypot(p, m)
    if e + m == 0.0:  # m = 0, p = 0: H0 vanishes, convention picks the basis
        return (np.array([1.0, 0.0], dtype=complex) if sign > 0
                else np.array([0.0, 1.0], dtype=complex))
    norm = np.sqrt(2.0 * e * (e + m)) if e > 0 else np.sqrt(2.0) * (e + m)
    if sign > 0:
        u = np.array([e + m, p], dtype=complex)
    else:
        u = np.array([-p, e + m], dtype=complex)
    return u / norm


@dataclass(frozen=True)
class Mode:
    """One free eigenmode: H0 phi = sign * energy * phi.

    `vector` is the flattened (site-major) unit vector; `wavefunction`
    returns the (N, 2) samples normalized under the dx-weighted product.
    """

    sign: int            # +1 positive-energy branch, -1 negative-energy branch
    momentum: float
    energy: float
    spinor: np.ndarray   # unit 2-vector
    vector: np.ndarray   # flat, length 2N, plain norm 1

    def wavefunction(self, grid):
        return (self.vector / np.sqrt(grid.dx)).reshape(grid.sites, 2)


class ModeBank:
    """All 2N free eigenmodes on a grid: the static backbone of the model.

    Modes are ordered negative branch first, then positive branch, each
    ascending in momentum.  `sea_energy_offset` is the summed energy of the
    filled negative branch, the constant subtracted so the vacuum sits at
    zero energy.
    """

    def __init__(self, grid: Grid1D, mass: float, charge: float):
        if mass < 0:
            raise ValueError(f"mass must be nonnegative, got {mass}")
        self.grid = grid
        self.mass = float(mass)
        self.charge = float(charge)

        waves = plane_waves(grid)  # (N, N), column k = e^{i p_k x}/sqrt(N)
        modes = []
        for sign in (-1, +1):
            for k, p in enumerate(grid.momenta):
                u = dirac_spinor(sign, p, self.mass)
                vec = np.kron(waves[:, k], u)
                modes.append(Mode(sign, float(p), float(np.hypot(p, mass)),
                                  u, vec))
        self.modes = modes
        n = grid.sites
        self.negative = np.column_stack([m.vector for m in modes[:n]])
        self.positive = np.column_stack([m.vector for m in modes[n:]])
        self.energies = np.array([m.energy for m in modes])
        self.sea_energy_offset = -float(np.sum(self.energies[:n]))

    @property
    def dim(self):
        return 2 * self.grid.sites


def free_modes(grid, mass, charge):
    """Construct the full bank of 2N orthonormal free eigenmodes."""
    return ModeBank(grid, mass, charge)


def free_hamiltonian(grid, mass):
    """Dense D x D matrix of -i*alpha*d/dx + beta*m on the flattened space."""
    d = spectral_derivative(grid)
    n = grid.sites
    return -1j * np.kron(d, ALPHA) + mass * np.kron(np.eye(n), BETA)


def projectors(bank):
    """Rank-N projectors (P_minus, P_plus) onto the energy branches."""
    p_minus = bank.negative @ bank.negative.conj().T
    p_plus = bank.positive @ bank.positive.conj().T
    return p_minus, p_plus


def vacuum_g(bank):
    """Vacuum kernel P_minus - P_plus: Hermitian and involutive (G^2 = I)."""
    p_minus, p_plus = projectors(bank)
    return p_minus - p_plus
