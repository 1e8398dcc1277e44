"""Exact solution of the 1-D Riemann problem for a perfect gas.

Used as the reference profile for error norms and discontinuity-width
metrics.  Star-region pressure is found with a Newton iteration on the
standard two-branch (shock / rarefaction) pressure function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .thermo import GasModel, PrimState, sound_speed

__all__ = ["RiemannSolution", "solve_riemann"]

_MAX_NEWTON = 60
_P_TOL = 1.0e-14


def _pressure_function(p, q: PrimState, a, g):
    """f_K(p) and df_K/dp for one side."""
    if p > q.p:  # shock branch
        A = 2.0 / ((g + 1.0) * q.rho)
        B = (g - 1.0) / (g + 1.0) * q.p
        root = np.sqrt(A / (p + B))
        return (p - q.p) * root, root * (1.0 - 0.5 * (p - q.p) / (B + p))
    # rarefaction branch
    pr = p / q.p
    f = 2.0 * a / (g - 1.0) * (pr ** ((g - 1.0) / (2.0 * g)) - 1.0)
    df = pr ** (-(g + 1.0) / (2.0 * g)) / (q.rho * a)
    return f, df


@dataclass
class RiemannSolution:
    """Self-similar solution; sample with x/t."""

    left: PrimState
    right: PrimState
    gas: GasModel
    p_star: float
    u_star: float
    rho_star_l: float
    rho_star_r: float

    @property
    def _g(self):
        return self.gas.gamma

    def left_wave_speeds(self):
        """(head, tail) of the left wave; equal for a shock."""
        g = self._g
        a_l = float(sound_speed(self.left, self.gas))
        if self.p_star > self.left.p:
            s = self.left.u - a_l * np.sqrt(
                (g + 1.0) / (2.0 * g) * self.p_star / self.left.p
                + (g - 1.0) / (2.0 * g))
            return s, s
        a_star = a_l * (self.p_star / self.left.p) ** ((g - 1.0) / (2.0 * g))
        return self.left.u - a_l, self.u_star - a_star

    def right_wave_speeds(self):
        g = self._g
        a_r = float(sound_speed(self.right, self.gas))
        if self.p_star > self.right.p:
            s = self.right.u + a_r * np.sqrt(
                (g + 1.0) / (2.0 * g) * self.p_star / self.right.p
                + (g - 1.0) / (2.0 * g))
            return s, s
        a_star = a_r * (self.p_star / self.right.p) ** ((g - 1.0) / (2.0 * g))
        return self.u_star + a_star, self.right.u + a_r

    def sample(self, xi) -> PrimState:
        """State at similarity coordinate xi = x/t (vectorized)."""
        xi = np.asarray(xi, dtype=float)
        g = self._g
        gm, gp = g - 1.0, g + 1.0
        rho = np.empty_like(xi)
        u = np.empty_like(xi)
        p = np.empty_like(xi)

        a_l = float(sound_speed(self.left, self.gas))
        a_r = float(sound_speed(self.right, self.gas))
        head_l, tail_l = self.left_wave_speeds()
        head_r, tail_r = self.right_wave_speeds()

        m = xi <= head_l
        rho[m], u[m], p[m] = self.left.rho, self.left.u, self.left.p
        m = xi >= tail_r
        rho[m], u[m], p[m] = self.right.rho, self.right.u, self.right.p

        if self.p_star <= self.left.p:  # left rarefaction fan
            m = (xi > head_l) & (xi < tail_l)
            c = 2.0 / gp + gm / (gp * a_l) * (self.left.u - xi[m])
            rho[m] = self.left.rho * c ** (2.0 / gm)
            u[m] = 2.0 / gp * (a_l + 0.5 * gm * self.left.u + xi[m])
            p[m] = self.left.p * c ** (2.0 * g / gm)
        if self.p_star <= self.right.p:  # right rarefaction fan
            m = (xi > head_r) & (xi < tail_r)
            c = 2.0 / gp - gm / (gp * a_r) * (self.right.u - xi[m])
            rho[m] = self.right.rho * c ** (2.0 / gm)
            u[m] = 2.0 / gp * (-a_r + 0.5 * gm * self.right.u + xi[m])
            p[m] = self.right.p * c ** (2.0 * g / gm)

        m = (xi >= tail_l) & (xi < self.u_star)
        rho[m], u[m], p[m] = self.rho_star_l, self.u_star, self.p_star
        m = (xi >= self.u_star) & (xi <= head_r)
        rho[m], u[m], p[m] = self.rho_star_r, self.u_star, self.p_star
        return PrimState(rho, u, p)

    def profile(self, x, t, x0=0.0) -> PrimState:
        """Solution on physical coordinates at time t > 0."""
        return self.sample((np.asarray(x, dtype=float) - x0) / t)

    def density_jumps(self, t, x0=0.0):
        """Discontinuities in rho at time t as (position, left, right)."""
        jumps = []
        head_l, tail_l = self.left_wave_speeds()
        if self.p_star > self.left.p:
            jumps.append((x0 + head_l * t, float(self.left.rho),
                          self.rho_star_l))
        jumps.append((x0 + self.u_star * t, self.rho_star_l, self.rho_star_r))
        head_r, tail_r = self.right_wave_speeds()
        if self.p_star > self.right.p:
            jumps.append((x0 + head_r * t, self.rho_star_r,
                          float(self.right.rho)))
        return jumps


def solve_riemann(left: PrimState, right: PrimState,
                  gas: GasModel) -> RiemannSolution:
    """Star states of the Riemann problem (Newton on the pressure function)."""
    g = gas.gamma
    a_l = float(sound_speed(left, gas))
    a_r = float(sound_speed(right, gas))
    du = right.u - left.u
    if 2.0 * (a_l + a_r) / (g - 1.0) <= du:
        raise ValueError("initial states generate vacuum")

    # two-rarefaction initial guess
    z = (g - 1.0) / (2.0 * g)
    p = ((a_l + a_r - 0.5 * (g - 1.0) * du)
         / (a_l / left.p ** z + a_r / right.p ** z)) ** (1.0 / z)
    p = max(p, _P_TOL)

    for _ in range(_MAX_NEWTON):
        f_l, df_l = _pressure_function(p, left, a_l, g)
        f_r, df_r = _pressure_function(p, right, a_r, g)
        change = (f_l + f_r + du) / (df_l + df_r)
        p_new = max(p - change, _P_TOL)
        if abs(p_new - p) <= _P_TOL * max(1.0, p):
            p = p_new
            break
        p = p_new

    f_l, _ = _pressure_function(p, left, a_l, g)
    f_r, _ = _pressure_function(p, right, a_r, g)
    u_star = 0.5 * (left.u + right.u) + 0.5 * (f_r - f_l)

    G = (g - 1.0) / (g + 1.0)

    def star_density(q: PrimState):
        pr = p / q.p
        if p > q.p:
            return q.rho * (pr + G) / (G * pr + 1.0)
        return q.rho * pr ** (1.0 / g)

    return RiemannSolution(left, right, gas, float(p), float(u_star),
                           float(star_density(left)),
                           float(star_density(right)))
