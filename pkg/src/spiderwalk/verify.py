"""Built-in cross-validation battery.

A curated set of fast consistency checks spanning every layer of the
package: graph combinatorics, unitarity, agreement of the full walk with
the one-dimensional reduction, agreement of the reduction with the
spectral integral, cutoff spectra, and the closed-form localization
constants.  Each check returns ``(name, passed, detail)``; the CLI's
``verify`` subcommand prints the table and exits non-zero if anything
fails.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import SpidernetParams, build_spidernet
from .localization import (
    amplitude,
    asymptotic_amplitude,
    cesaro_origin,
    classify,
    exp_localization_bound,
    origin_amplitude_series,
    random_walk_return,
)
from .meixner import QuadratureSpec, integrate, law_from_pq
from .reduction import (
    PqParams,
    ReducedState,
    cutoff_walk_matrix,
    embed,
    inner,
    origin_probability,
    params_from_spidernet,
    reduced_evolve,
    stratum_state,
    u_eigensystem,
)
from .walk import evolve, isotropic_initial_state, vertex_distribution

__all__ = ["run_all"]


def _check_strata_sizes():
    g = build_spidernet(SpidernetParams(4, 6, 3), 4)
    got = [int(s) for s in g.stratum_sizes]
    want = [1, 4, 12, 36, 108]
    return got == want, f"sizes {got}"


def _check_degrees():
    g = build_spidernet(SpidernetParams(4, 6, 3), 4)
    interior = g.degrees[: g.stratum_offsets[4]]
    ok = interior[0] == 4 and np.all(interior[1:] == 6)
    return bool(ok), "deg(o)=4, deg=6 elsewhere"


def _check_unitarity():
    g = build_spidernet(SpidernetParams(4, 6, 3), 6)
    rng = np.random.default_rng(7)
    s = (rng.standard_normal(g.num_half_edges)
         + 1j * rng.standard_normal(g.num_half_edges))
    s /= np.linalg.norm(s)
    out = evolve(g, s, 4)
    err = abs(np.linalg.norm(out) - 1.0)
    return err < 1e-12, f"norm drift {err:.2e}"


def _check_full_vs_reduced():
    sp = SpidernetParams(4, 6, 3)
    g = build_spidernet(sp, 10)
    params = params_from_spidernet(sp)
    full = evolve(g, isotropic_initial_state(g), 8)
    red = reduced_evolve(params, ReducedState.origin(), 8)
    err = float(np.max(np.abs(full - embed(g, red))))
    return err < 1e-12, f"state diff {err:.2e} after 8 steps"


def _check_reduced_vs_integral():
    params = PqParams(0.5, 1.0 / 6.0, 1.0 / 3.0)
    law = law_from_pq(params)
    state = ReducedState.origin()
    worst = 0.0
    from .reduction import reduced_step
    for n in range(41):
        if n > 0:
            state = reduced_step(params, state)
        a_int = amplitude(law, 0, 0, n)
        a_red = inner(ReducedState.origin(), state).real
        worst = max(worst, abs(a_int - a_red))
    return worst < 1e-12, f"max |diff| {worst:.2e} over n<=40"


def _check_measure_mass():
    law = law_from_pq(PqParams(0.5, 1.0 / 6.0, 1.0 / 3.0))
    mass = integrate(law, lambda x: np.ones_like(x), QuadratureSpec.for_order(0))
    err = abs(mass - 1.0)
    return err < 1e-12, f"total mass error {err:.2e}"


def _check_cutoff_spectrum():
    params = params_from_spidernet(SpidernetParams(4, 6, 3))
    N = 8
    system = u_eigensystem(params, N)
    trace = float(np.trace(cutoff_walk_matrix(params, N)))
    expected = (2 * params.r - 1) * (N - 1)
    ok = (abs(trace - expected) < 1e-12
          and system.minus_one_multiplicity == N - 2)
    return ok, f"trace {trace:.12g}, mult(-1)={system.minus_one_multiplicity}"


def _check_atom_constants():
    rep = classify(SpidernetParams(4, 6, 3))
    ok = (rep.localized and float(rep.w) == 0.5
          and float(rep.xi) == -1.0 / 3.0 and float(rep.qbar_origin) == 0.125)
    return ok, f"w={rep.w}, xi={rep.xi}, qbar={rep.qbar_origin}"


def _check_cesaro():
    rep = classify(SpidernetParams(4, 6, 3))
    params = params_from_spidernet(SpidernetParams(4, 6, 3))
    qbar = cesaro_origin(params, 4000)
    err = abs(qbar - float(rep.qbar_origin))
    return err < 1e-3, f"|Cesaro - 1/8| = {err:.2e} at N=4000"


def _check_asymptotic():
    params = params_from_spidernet(SpidernetParams(4, 6, 3))
    amps = origin_amplitude_series(params, 400)
    worst = max(abs(amps[n] - asymptotic_amplitude(params, 0, n))
                for n in range(350, 401))
    return worst < 5e-3, f"max |amp - wp(xi)cos| {worst:.2e} on [350,400]"


def _check_exp_bound():
    stratum_bound, _ = exp_localization_bound(SpidernetParams(4, 6, 3), 1)
    return (abs(stratum_bound - 1.0 / 12.0) < 1e-15,
            f"stratum bound l=1 is {stratum_bound:.12g}")


def _check_rwalk():
    law = law_from_pq(PqParams(0.5, 0.25, 0.25))
    p0 = random_walk_return(law, 0)
    p1 = random_walk_return(law, 1)
    p2 = random_walk_return(law, 2)
    ok = abs(p0 - 1) < 1e-12 and abs(p1) < 1e-12 and abs(p2 - 0.25) < 1e-12
    return ok, f"moments (1, 0, q) -> ({p0:.3g}, {p1:.2e}, {p2:.3g})"


def _check_unrealizable():
    try:
        build_spidernet(SpidernetParams(3, 4, 2), 3)
    except ValueError:
        return True, "S(3,4,2) wiring rejected"
    return False, "S(3,4,2) wiring unexpectedly accepted"


def _check_probability_conservation():
    g = build_spidernet(SpidernetParams(4, 4, 2), 8)
    state = evolve(g, isotropic_initial_state(g), 6)
    total = float(vertex_distribution(g, state).sum())
    return abs(total - 1.0) < 1e-12, f"total probability {total:.15g}"


_CHECKS = [
    ("stratum_sizes", _check_strata_sizes),
    ("degrees", _check_degrees),
    ("unitarity", _check_unitarity),
    ("full_vs_reduced", _check_full_vs_reduced),
    ("reduced_vs_integral", _check_reduced_vs_integral),
    ("measure_mass", _check_measure_mass),
    ("cutoff_spectrum", _check_cutoff_spectrum),
    ("atom_constants", _check_atom_constants),
    ("cesaro_origin", _check_cesaro),
    ("asymptotic_amplitude", _check_asymptotic),
    ("exp_bound", _check_exp_bound),
    ("random_walk_return", _check_rwalk),
    ("unrealizable_wiring", _check_unrealizable),
    ("probability_conservation", _check_probability_conservation),
]


def run_all():
    """Run every check; return a list of (name, passed, detail) triples."""
    results = []
    for name, fn in _CHECKS:
        try:
            passed, detail = fn()
        except Exception as exc:  # noqa: BLE001 - report, don't crash the table
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(passed), detail))
    return results
