"""Named problem presets reproducing the standard 1-D test cases."""

from __future__ import annotations

import numpy as np

from .config import ConfigError, ProblemConfig, config_from_dict
from .thermo import GasModel, PrimState

__all__ = ["preset", "preset_raw", "list_presets", "stationary_shock_states"]


def stationary_shock_states(mach: float, gas: GasModel):
    """Left/right states of a stationary normal shock with unit mass flux.

    Upstream: rho = 1, u = 1, p = 1/(gamma M^2) so the upstream Mach number
    is M; downstream follows from the Rankine-Hugoniot conditions:
    rho_r = [2/((gamma+1) M^2) + (gamma-1)/(gamma+1)]^-1, u_r = 1/rho_r,
    p_r = p_l [2 gamma M^2/(gamma+1) - (gamma-1)/(gamma+1)].
    """
    if mach <= 1.0:
        raise ValueError("shock requires an upstream Mach number > 1")
    g = gas.gamma
    p_l = 1.0 / (g * mach * mach)
    rho_r = 1.0 / (2.0 / ((g + 1.0) * mach * mach) + (g - 1.0) / (g + 1.0))
    u_r = 1.0 / rho_r
    p_r = p_l * (2.0 * g * mach * mach / (g + 1.0) - (g - 1.0) / (g + 1.0))
    return PrimState(1.0, 1.0, p_l), PrimState(rho_r, u_r, p_r)


def _riemann_keys(left: PrimState, right: PrimState) -> dict:
    return {
        "ic": "riemann",
        "left_rho": left.rho, "left_u": left.u, "left_p": left.p,
        "right_rho": right.rho, "right_u": right.u, "right_p": right.p,
    }


def _sod(name, left_u):
    return {
        "name": name,
        "n_cells": 100, "x_min": 0.0, "x_max": 1.0,
        "cfl": 0.4, "t_final": 0.2,
        "flux": "kepec", "diss": "matrix", "law": "roe",
        "recon_order": 2 if name == "sod" else 1, "limiter": "minmod",
        "x_diaphragm": 0.5,
        **_riemann_keys(PrimState(1.0, left_u, 1.0),
                        PrimState(0.125, 0.0, 0.1)),
    }


def _stationary_shock(mach):
    left, right = stationary_shock_states(mach, GasModel(gamma=1.4))
    return {
        "name": f"stationary_shock_m{mach:g}",
        "n_cells": 24, "x_min": 0.0, "x_max": 1.0,
        "cfl": 0.1, "t_final": 50.0, "max_steps": 50000,
        "steady_tol": 1e-13,
        "flux": "kepec", "diss": "matrix", "law": "ec1",
        "recon_order": 1,
        "bc_left": "fixed_state", "bc_right": "shock_outflow",
        "outflow_mass_flux": 1.0,
        "x_diaphragm": 0.5,
        **_riemann_keys(left, right),
    }


def _ns_shock_structure(n_cells, kappa2, kappa4, suffix=""):
    gas = GasModel(gamma=5.0 / 3.0)
    mach = 1.5
    left, right = stationary_shock_states(mach, gas)
    t1 = left.p / left.rho  # upstream temperature with R = 1
    return {
        "name": f"ns_shock_structure_n{n_cells}{suffix}",
        "n_cells": n_cells, "x_min": 0.0, "x_max": 0.2,
        "gamma": 5.0 / 3.0, "prandtl": 2.0 / 3.0,
        "viscosity": "power", "mu_ref": 5e-4, "t_ref": t1,
        "mu_exponent": 0.8,
        "cfl": 0.1, "t_final": 1.0, "max_steps": 200000,
        "steady_tol": 1e-10,
        "flux": "kepec", "diss": "scalar",
        "kappa2": kappa2, "kappa4": kappa4,
        "beta_average": "logarithmic",
        "recon_order": 1,
        "bc_left": "fixed_state", "bc_right": "shock_outflow",
        "outflow_mass_flux": 1.0,
        "x_diaphragm": 0.1,
        **_riemann_keys(left, right),
    }


_PRESETS = {
    "sod": _sod("sod", 0.0),
    "modified_sod": _sod("modified_sod", 0.75),
    "sod_viscous": {
        "name": "sod_viscous",
        "n_cells": 500, "x_min": 0.0, "x_max": 1.0,
        "cfl": 0.1, "t_final": 0.2,
        # Re = rho_l a_l L / mu = 2000
        "viscosity": "constant", "mu_ref": float(np.sqrt(1.4) / 2000.0),
        "flux": "kepec", "diss": "scalar", "kappa2": 0.0, "kappa4": 0.01,
        "recon_order": 1,
        "x_diaphragm": 0.5,
        **_riemann_keys(PrimState(1.0, 0.0, 1.0), PrimState(0.125, 0.0, 0.1)),
    },
    "stationary_contact": {
        "name": "stationary_contact",
        "n_cells": 26, "x_min": 0.0, "x_max": 1.0,
        "cfl": 0.4, "t_final": 1e6, "max_steps": 1000,
        "flux": "kepec", "diss": "matrix", "law": "kes",
        "recon_order": 1,
        "x_diaphragm": 0.5,
        **_riemann_keys(PrimState(10.0, 0.0, 1.0), PrimState(1.0, 0.0, 1.0)),
    },
    "stationary_shock_m1.5": _stationary_shock(1.5),
    "stationary_shock_m4": _stationary_shock(4.0),
    "stationary_shock_m20": _stationary_shock(20.0),
    "ns_shock_structure_n50": _ns_shock_structure(50, 0.5, 1.0 / 25.0),
    "ns_shock_structure_n100": _ns_shock_structure(100, 0.5, 1.0 / 25.0),
    "ns_shock_structure_n200": _ns_shock_structure(200, 0.5, 1.0 / 25.0),
    "ns_shock_structure_n200_d4": _ns_shock_structure(
        200, 0.0, 1.0 / 200.0, suffix="_d4"),
}


def list_presets():
    return sorted(_PRESETS)


def _canonical(name: str) -> str:
    # accept spellings like "stationary_shock M=1.5"
    return name.strip().lower().replace(" ", "_").replace("=", "")


def preset_raw(name: str) -> dict:
    key = _canonical(name)
    if key not in _PRESETS:
        raise ConfigError(
            f"unknown preset {name!r}; available: {', '.join(list_presets())}")
    return dict(_PRESETS[key])


def preset(name: str) -> ProblemConfig:
    return config_from_dict(preset_raw(name))
