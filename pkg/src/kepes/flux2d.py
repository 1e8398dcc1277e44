"""Normal-direction 2-D flux kernels: entropy-conservative central flux and
matrix-dissipation ingredients.

These are pure per-face kernels; there is no 2-D grid machinery here.  The
kernels reduce exactly to their 1-D counterparts for n = (1, 0) and zero
transverse velocity, and commute with simultaneous rotation of the
velocities and the face normal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dissipation import DissipationSpec
from .thermo import GasModel, log_mean

__all__ = [
    "PrimState2D",
    "FaceNormal",
    "exact_flux_2d",
    "entropy_vars_2d",
    "flux_kepec_2d",
    "face_average_2d",
    "eigen_system_2d",
    "eigenvalue_law_2d",
    "matrix_dissipation_2d",
    "tadmor_residual_2d",
    "rotate_state",
    "rotation_covariance_check",
]


@dataclass(frozen=True)
class PrimState2D:
    """Primitive variables (rho, u1, u2, p) with Cartesian velocities."""

    rho: object
    u1: object
    u2: object
    p: object

    @property
    def beta(self):
        return self.rho / (2.0 * self.p)

    @property
    def speed2(self):
        return self.u1 * self.u1 + self.u2 * self.u2


@dataclass(frozen=True)
class FaceNormal:
    """Unit face normal (n1, n2)."""

    n1: float
    n2: float

    def __post_init__(self):
        norm = np.asarray(self.n1) ** 2 + np.asarray(self.n2) ** 2
        if np.any(np.abs(norm - 1.0) > 1.0e-14):
            raise ValueError("face normal must have unit length")


def _avg(a, b):
    return 0.5 * (a + b)


def exact_flux_2d(q: PrimState2D, n: FaceNormal, gas: GasModel) -> np.ndarray:
    """Pointwise flux f1 n1 + f2 n2, stacked on the last axis."""
    un = q.u1 * n.n1 + q.u2 * n.n2
    E = q.p / (gas.gamma - 1.0) + 0.5 * q.rho * q.speed2
    return np.stack(np.broadcast_arrays(
        q.rho * un,
        q.p * n.n1 + q.rho * q.u1 * un,
        q.p * n.n2 + q.rho * q.u2 * un,
        (E + q.p) * un), axis=-1)


def entropy_vars_2d(q: PrimState2D, gas: GasModel) -> np.ndarray:
    """v = [(gamma-s)/(gamma-1) - beta |u|^2, 2 beta u1, 2 beta u2, -2 beta]."""
    g = gas.gamma
    s = np.log(q.p) - g * np.log(q.rho)
    beta = q.beta
    return np.stack(np.broadcast_arrays(
        (g - s) / (g - 1.0) - beta * q.speed2,
        2.0 * beta * q.u1,
        2.0 * beta * q.u2,
        -2.0 * beta), axis=-1)


def flux_kepec_2d(left: PrimState2D, right: PrimState2D, n: FaceNormal,
                  gas: GasModel) -> np.ndarray:
    """Kinetic-energy-preserving, entropy-conservative flux along n.

    Satisfies dv . f = d(rho u.n) exactly; with n = (1, 0) and zero
    transverse velocity the (mass, normal momentum, energy) components
    equal the 1-D counterpart.
    """
    g = gas.gamma
    u1_bar = _avg(left.u1, right.u1)
    u2_bar = _avg(left.u2, right.u2)
    un_bar = u1_bar * n.n1 + u2_bar * n.n2
    rho_bar = _avg(left.rho, right.rho)
    beta_bar = _avg(left.beta, right.beta)
    speed2_bar = _avg(left.speed2, right.speed2)
    rho_ln = log_mean(left.rho, right.rho)
    beta_ln = log_mean(left.beta, right.beta)

    f_rho = rho_ln * un_bar
    p_t = rho_bar / (2.0 * beta_bar)
    f_m1 = p_t * n.n1 + u1_bar * f_rho
    f_m2 = p_t * n.n2 + u2_bar * f_rho
    f_e = ((0.5 / ((g - 1.0) * beta_ln) - 0.5 * speed2_bar) * f_rho
           + u1_bar * f_m1 + u2_bar * f_m2)
    return np.stack(np.broadcast_arrays(f_rho, f_m1, f_m2, f_e), axis=-1)


def tadmor_residual_2d(left: PrimState2D, right: PrimState2D, n: FaceNormal,
                       flux: np.ndarray, gas: GasModel):
    """dv . f - d(rho u.n) for a 4-component normal flux."""
    dv = entropy_vars_2d(right, gas) - entropy_vars_2d(left, gas)
    dpsi = (right.rho * (right.u1 * n.n1 + right.u2 * n.n2)
            - left.rho * (left.u1 * n.n1 + left.u2 * n.n2))
    return np.sum(dv * flux, axis=-1) - dpsi


def face_average_2d(left: PrimState2D, right: PrimState2D, gas: GasModel):
    """Averaged (rho, u1, u2, a, H) with the contact-transparent sound speed
    a = sqrt(gamma/(2 beta_ln))."""
    rho_f = log_mean(left.rho, right.rho)
    beta_ln = log_mean(left.beta, right.beta)
    u1_f = _avg(left.u1, right.u1)
    u2_f = _avg(left.u2, right.u2)
    a_f = np.sqrt(gas.gamma / (2.0 * beta_ln))
    H_f = a_f * a_f / (gas.gamma - 1.0) + 0.5 * (u1_f * u1_f + u2_f * u2_f)
    return rho_f, u1_f, u2_f, a_f, H_f


def eigen_system_2d(avg, n: FaceNormal, gas: GasModel):
    """Eigenvector matrix R (..., 4, 4) and scaling
    S = diag[rho/2g, (g-1)rho/g, p, rho/2g] with p = rho a^2 / gamma.

    Columns are ordered (u.n - a, u.n, shear, u.n + a); the shear column is
    (0, n2, -n1, u1 n2 - u2 n1).  R S R^T equals the 2-D entropy Jacobian
    du/dv.
    """
    rho, u1, u2, a, H = (np.asarray(x, dtype=float) for x in avg)
    n1, n2 = n.n1, n.n2
    un = u1 * n1 + u2 * n2
    one = np.ones_like(rho)
    zero = np.zeros_like(rho)
    R = np.stack([
        np.stack([one, one, zero, one], axis=-1),
        np.stack([u1 - a * n1, u1, n2 * one, u1 + a * n1], axis=-1),
        np.stack([u2 - a * n2, u2, -n1 * one, u2 + a * n2], axis=-1),
        np.stack([H - a * un, 0.5 * (u1 * u1 + u2 * u2),
                  u1 * n2 - u2 * n1, H + a * un], axis=-1),
    ], axis=-2)
    g = gas.gamma
    p = rho * a * a / g
    S = np.stack([rho / (2.0 * g), (g - 1.0) * rho / g, p, rho / (2.0 * g)],
                 axis=-1)
    return R, S


def eigenvalue_law_2d(un_f, a_f, left: PrimState2D, right: PrimState2D,
                      n: FaceNormal, gas: GasModel, spec: DissipationSpec):
    """|Lambda| entries (..., 4) for the selected law, normal-direction
    eigenvalues (u.n - a, u.n, u.n, u.n + a)."""
    un_f = np.asarray(un_f, dtype=float)
    a_f = np.asarray(a_f, dtype=float)
    law = spec.matrix_law
    mid = np.abs(un_f)
    roe = np.stack([np.abs(un_f - a_f), mid, mid, np.abs(un_f + a_f)], axis=-1)
    if law == "roe":
        return roe
    if law == "ec1":
        g = gas.gamma
        a_l = np.sqrt(g * left.p / left.rho)
        a_r = np.sqrt(g * right.p / right.rho)
        un_l = left.u1 * n.n1 + left.u2 * n.n2
        un_r = right.u1 * n.n1 + right.u2 * n.n2
        d1 = np.abs((un_r - a_r) - (un_l - a_l))
        d4 = np.abs((un_r + a_r) - (un_l + a_l))
        zero = np.zeros_like(d1)
        return roe + spec.ec1_beta * np.stack([d1, zero, zero, d4], axis=-1)
    lam_max = mid + a_f
    if law == "kes":
        return np.stack([lam_max, mid, mid, lam_max], axis=-1)
    rus = np.stack([lam_max] * 4, axis=-1)
    if law == "rus":
        return rus
    if law == "hyb":
        p_bar = _avg(left.p, right.p)
        phi = np.clip(np.sqrt(np.abs(right.p - left.p) / (2.0 * p_bar)),
                      0.0, 1.0)
        return (1.0 - phi)[..., None] * roe + phi[..., None] * rus
    raise ValueError(f"unknown matrix law {law!r}")


def matrix_dissipation_2d(left: PrimState2D, right: PrimState2D,
                          n: FaceNormal, gas: GasModel,
                          spec: DissipationSpec) -> np.ndarray:
    """-(1/2) R |Lambda| S R^T dv along the face normal."""
    avg = face_average_2d(left, right, gas)
    R, S = eigen_system_2d(avg, n, gas)
    un_f = avg[1] * n.n1 + avg[2] * n.n2
    lam = eigenvalue_law_2d(un_f, avg[3], left, right, n, gas, spec)
    dv = entropy_vars_2d(right, gas) - entropy_vars_2d(left, gas)
    w = (lam * S) * np.einsum("...ji,...j->...i", R, dv)
    return -0.5 * np.einsum("...ij,...j->...i", R, w)


def rotate_state(q: PrimState2D, angle: float) -> PrimState2D:
    """Rotate the velocity vector by angle (radians)."""
    c, s = np.cos(angle), np.sin(angle)
    return PrimState2D(q.rho, c * q.u1 - s * q.u2, s * q.u1 + c * q.u2, q.p)


def rotation_covariance_check(left: PrimState2D, right: PrimState2D,
                              n: FaceNormal, gas: GasModel, angle: float,
                              tol: float = 1.0e-12) -> bool:
    """True when rotating both states and the normal rotates the momentum
    flux pair and leaves the mass and energy fluxes unchanged."""
    c, s = np.cos(angle), np.sin(angle)
    n_rot = FaceNormal(c * n.n1 - s * n.n2, s * n.n1 + c * n.n2)
    f_base = flux_kepec_2d(left, right, n, gas)
    f_rot = flux_kepec_2d(rotate_state(left, angle), rotate_state(right, angle),
                          n_rot, gas)
    expected = np.stack(np.broadcast_arrays(
        f_base[..., 0],
        c * f_base[..., 1] - s * f_base[..., 2],
        s * f_base[..., 1] + c * f_base[..., 2],
        f_base[..., 3]), axis=-1)
    return bool(np.all(np.abs(f_rot - expected) <= tol))
