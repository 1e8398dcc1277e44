import numpy as np
import pytest

from kepes.config import initial_state
from kepes.spatial import assemble_rhs
from kepes.thermo import GasModel, PrimState, cons_to_prim
from kepes.timeint import compute_dt, ssp_rk3_step

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def gas():
    return GasModel()


def random_states(rng, n, span=1.0, umax=2.0):
    """Pair of random state arrays; density/pressure ratios up to 10**(2*span)."""
    def draw():
        return PrimState(10.0 ** rng.uniform(-span, span, n),
                         rng.uniform(-umax, umax, n),
                         10.0 ** rng.uniform(-span, span, n))
    return draw(), draw()


def advance(config, n_steps=None, cfl=None, collect_rhs=False):
    """March a ProblemConfig; by steps when n_steps is given, else to t_final."""
    cells = initial_state(config)

    def rhs_op(w):
        return assemble_rhs(w, config.grid, config.gas, config.flux_kind,
                            config.diss, config.recon, config.bcs)[0]

    t, step = 0.0, 0
    while True:
        if n_steps is not None:
            if step >= n_steps:
                break
        elif t >= config.time.t_final - 1e-14:
            break
        dt = compute_dt(cells, config.grid, config.gas, cfl or config.time.cfl)
        if n_steps is None:
            dt = min(dt, config.time.t_final - t)
        cells = ssp_rk3_step(cells, dt, rhs_op)
        t += dt
        step += 1
    prim = cons_to_prim(cells, config.gas)
    if collect_rhs:
        rhs, faces = assemble_rhs(cells, config.grid, config.gas,
                                  config.flux_kind, config.diss,
                                  config.recon, config.bcs)
        return prim, cells, rhs, faces, t
    return prim, cells, t


def max_residual(rhs):
    return max(float(np.max(np.abs(rhs.rho))), float(np.max(np.abs(rhs.m))),
               float(np.max(np.abs(rhs.E))))
