"""Semi-discrete residual assembly on a uniform 1-D grid.

assemble_rhs evaluates du_j/dt = -(F_{j+1/2} - F_{j-1/2})/dx
+ (G_{j+1/2} - G_{j-1/2})/dx with F a central flux plus optional scalar or
matrix dissipation and G the viscous flux.  Two ghost cells per side feed
the reconstruction and the four-point scalar-dissipation stencil.  All
per-face quantities needed by the budget diagnostics are returned in a
FaceData record.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dissipation import DissipationSpec, jst_dissipation, matrix_dissipation
from .fluxes import CENTRAL_FLUXES, FluxVector
from .reconstruction import ReconSpec, reconstruct_face
from .thermo import (
    ConsState,
    GasModel,
    InvalidStateError,
    PrimState,
    cons_to_prim,
    entropy_vars,
    validate_prim,
)

__all__ = [
    "Grid1D",
    "BoundaryCondition",
    "BoundarySpec",
    "FaceData",
    "viscous_face_flux",
    "apply_boundary",
    "assemble_rhs",
]

BC_KINDS = ("transmissive", "fixed_state", "periodic", "shock_outflow")


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of n_cells finite volumes on [x_min, x_max]."""

    n_cells: int
    x_min: float = 0.0
    x_max: float = 1.0

    def __post_init__(self):
        if self.n_cells < 4:
            raise ValueError("need at least 4 cells")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    def cell_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx

    def faces(self) -> np.ndarray:
        return self.x_min + np.arange(self.n_cells + 1) * self.dx


@dataclass(frozen=True)
class BoundaryCondition:
    """One side of the domain.

    kind: transmissive (zeroth-order extrapolation), fixed_state (Dirichlet
    ghost state), periodic, or shock_outflow (right side only: prescribed
    boundary mass flux, zero-gradient momentum and energy fluxes).
    """

    kind: str = "transmissive"
    state: PrimState | None = None
    mass_flux: float | None = None

    def __post_init__(self):
        if self.kind not in BC_KINDS:
            raise ValueError(f"unknown boundary kind {self.kind!r}")
        if self.kind == "fixed_state" and self.state is None:
            raise ValueError("fixed_state boundary needs a state")
        if self.kind == "shock_outflow" and self.mass_flux is None:
            raise ValueError("shock_outflow boundary needs a mass_flux")


@dataclass(frozen=True)
class BoundarySpec:
    left: BoundaryCondition = BoundaryCondition()
    right: BoundaryCondition = BoundaryCondition()

    def __post_init__(self):
        if (self.left.kind == "periodic") != (self.right.kind == "periodic"):
            raise ValueError("periodic must be set on both sides or neither")
        if self.left.kind == "shock_outflow":
            raise ValueError("shock_outflow is a right-boundary condition")

    @property
    def is_periodic(self) -> bool:
        return self.left.kind == "periodic"


@dataclass
class FaceData:
    """Per-face record backing the budget diagnostics.

    Arrays have one entry per face (n_cells + 1; under periodic boundaries
    face n_cells duplicates face 0).  du, u_bar, dv and dpsi are built from
    the cell values adjacent to each face, which is what the summation-by-
    parts budget identities require.
    """

    central: FluxVector
    diss: FluxVector
    visc: FluxVector
    u_bar: np.ndarray
    du: np.ndarray
    dv: np.ndarray
    dpsi: np.ndarray
    p_tilde: np.ndarray
    periodic: bool

    def net(self) -> np.ndarray:
        """Total face flux (F - G) as an (n_faces, 3) array."""
        return (self.central + self.diss - self.visc).as_array()


def viscous_face_flux(left: PrimState, right: PrimState, gas: GasModel,
                      dx: float) -> FluxVector:
    """Viscous flux (0, tau, u_bar tau - q) from adjacent cell states.

    tau = (4/3) mu du/dx and q = -kappa dT/dx with mu, kappa evaluated at
    the arithmetic-mean face temperature.
    """
    t_l = left.temperature(gas)
    t_r = right.temperature(gas)
    t_face = 0.5 * (t_l + t_r)
    mu = gas.viscosity(t_face)
    kappa = gas.conductivity(t_face)
    tau = (4.0 / 3.0) * mu * (right.u - left.u) / dx
    q = -kappa * (t_r - t_l) / dx
    u_bar = 0.5 * (left.u + right.u)
    return FluxVector(np.zeros_like(tau), tau, u_bar * tau - q)


def _take(q: PrimState, idx) -> PrimState:
    return PrimState(q.rho[idx], q.u[idx], q.p[idx])


def apply_boundary(prim: PrimState, bcs: BoundarySpec) -> PrimState:
    """Extend the interior cell array by two ghost cells per side."""
    n = np.shape(prim.rho)[0]

    def one_field(f, bc_left, bc_right):
        f = np.asarray(f, dtype=float)
        if bcs.is_periodic:
            return np.concatenate([f[-2:], f, f[:2]])
        left = (np.full(2, bc_left) if bc_left is not None
                else np.full(2, f[0]))
        right = (np.full(2, bc_right) if bc_right is not None
                 else np.full(2, f[-1]))
        return np.concatenate([left, f, right])

    def ghost_values(bc: BoundaryCondition):
        if bc.kind == "fixed_state":
            return bc.state.rho, bc.state.u, bc.state.p
        return None, None, None  # transmissive / shock_outflow: copy edge

    lrho, lu, lp = ghost_values(bcs.left)
    rrho, ru, rp = ghost_values(bcs.right)
    return PrimState(one_field(prim.rho, lrho, rrho),
                     one_field(prim.u, lu, ru),
                     one_field(prim.p, lp, rp))


def _cell_sensor(p_ext: np.ndarray, periodic: bool) -> np.ndarray:
    """Shock sensor nu for extended cells 1 .. n+2 (returned full length,
    entries 0 and n+3 unused)."""
    nu = np.zeros_like(p_ext)
    nu[1:-1] = (np.abs(p_ext[:-2] - 2.0 * p_ext[1:-1] + p_ext[2:])
                / (p_ext[:-2] + 2.0 * p_ext[1:-1] + p_ext[2:]))
    if not periodic:
        # boundary faces reuse the nearest interior sensor
        nu[1] = nu[2]
        nu[-2] = nu[-3]
    return nu


def assemble_rhs(cells: ConsState, grid: Grid1D, gas: GasModel,
                 flux_kind: str, diss: DissipationSpec, recon: ReconSpec,
                 bcs: BoundarySpec):
    """Semi-discrete right-hand side and the per-face diagnostic record."""
    if flux_kind not in CENTRAL_FLUXES:
        raise ValueError(f"unknown flux kind {flux_kind!r}")
    central_flux = CENTRAL_FLUXES[flux_kind]

    prim = cons_to_prim(cells, gas)
    bad = validate_prim(prim)
    if np.any(bad):
        idx = int(np.argmax(bad))
        raise InvalidStateError(
            f"invalid state in cell {idx}: rho={prim.rho[idx]:.6g}, "
            f"p={prim.p[idx]:.6g}")

    ext = apply_boundary(prim, bcs)
    n = grid.n_cells
    dx = grid.dx

    # stencil views for the n+1 faces: face k sits between ext cells
    # k+1 and k+2
    qm1 = _take(ext, slice(0, n + 1))
    q0 = _take(ext, slice(1, n + 2))
    q1 = _take(ext, slice(2, n + 3))
    q2 = _take(ext, slice(3, n + 4))

    face_l, face_r = reconstruct_face((qm1, q0, q1, q2), recon)
    central = central_flux(face_l, face_r, gas)

    if diss.kind == "matrix":
        d_flux = matrix_dissipation(face_l, face_r, gas, diss, flux_kind)
    elif diss.kind == "scalar":
        nu_ext = _cell_sensor(ext.p, bcs.is_periodic)
        nu_face = np.maximum(nu_ext[1:n + 2], nu_ext[2:n + 3])
        eps2 = np.minimum(1.0, diss.kappa2 * nu_face)
        eps4 = np.maximum(0.0, diss.kappa4 - eps2)
        d_flux = jst_dissipation((qm1, q0, q1, q2), gas, diss,
                                 eps2=eps2, eps4=eps4)
    else:
        z = np.zeros(n + 1)
        d_flux = FluxVector(z, z.copy(), z.copy())

    if gas.is_viscous:
        g_flux = viscous_face_flux(q0, q1, gas, dx)
    else:
        z = np.zeros(n + 1)
        g_flux = FluxVector(z, z.copy(), z.copy())

    if bcs.right.kind == "shock_outflow":
        # prescribed boundary mass flux; momentum and energy fluxes copy the
        # neighbouring face so the last cell sees zero update in them
        net_prev = (central + d_flux - g_flux).as_array()[n - 1]
        central = FluxVector(np.array(central.f_rho), np.array(central.f_m),
                             np.array(central.f_e))
        central.f_rho[n] = bcs.right.mass_flux
        central.f_m[n] = net_prev[1]
        central.f_e[n] = net_prev[2]
        for fv in (d_flux, g_flux):
            np.asarray(fv.f_rho)[n] = 0.0
            np.asarray(fv.f_m)[n] = 0.0
            np.asarray(fv.f_e)[n] = 0.0

    net = (central + d_flux - g_flux).as_array()
    rhs = -(net[1:] - net[:-1]) / dx
    rhs_state = ConsState(rhs[:, 0], rhs[:, 1], rhs[:, 2])

    v_l = entropy_vars(q0, gas).as_array()
    v_r = entropy_vars(q1, gas).as_array()
    u_bar = 0.5 * (q0.u + q1.u)
    du = q1.u - q0.u
    faces = FaceData(
        central=central,
        diss=d_flux,
        visc=g_flux,
        u_bar=u_bar,
        du=du,
        dv=v_r - v_l,
        dpsi=q1.rho * q1.u - q0.rho * q0.u,
        p_tilde=np.asarray(central.f_m) - u_bar * np.asarray(central.f_rho),
        periodic=bcs.is_periodic,
    )
    return rhs_state, faces
