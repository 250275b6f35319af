"""
The named experiments of the command line. Each runner fills a Report with results, checks and curves.
"""

from __future__ import annotations

import math
import time
from contextlib import contextmanager

import numpy as np
from scipy.integrate import quad

from bubblelab.core.grid import RadialField, make_grid
from bubblelab.core.norms import decay_constant
from bubblelab.core.regression import powerlaw_fit
from bubblelab.riesz.convolution import riesz_convolve, quotient_field, summarize_quotient
from bubblelab.riesz.kernel import RingKernelTable
from bubblelab.riesz.oracle import riesz_oracle, bubble_newton_potential
from bubblelab.bubble.profile import (BubbleSpec, bubble_profile, bubble_residual_field, bubble_residual,
                                      kernel_modes, linearized_residual)
from bubblelab.bubble.scaling import quotient_scaling_deviations
from bubblelab.solver.shooting import DECAYED, shoot_limit_profile, shooting_family_deviation
from bubblelab.solver.fixed_point import manufacture_potential, solve_nonlocal
from bubblelab.harness.blowup import hypothesis_product
from bubblelab.harness.energy import energy_terms, nonlocal_residual
from bubblelab.harness.experiment import Perturbation, blowup_rate_experiment, family_member
from bubblelab.cli.report import Check, check_le, check_ge, check_in
from bubblelab.utils.exceptions import ConfigError


@contextmanager
def stage(report, name):
    """ record the wall-clock time of a block in report.timings """
    start = time.time()
    yield
    report.timings[name] = time.time() - start


def _aux_grid(config):
    g = config.options['aux_grid']
    return make_grid(g['r_max'], g['N'], g['scheme'], g.get('stretch'))


def run_bubble_check(config, report):
    """ residual of the bubble, convergence order of the order-2 scheme and the kernel of the linearization """
    params = config.params
    spec = BubbleSpec.from_params(params)
    grid = config.make_grid()
    order = config.options['fd_order']
    with stage(report, 'residual'):
        res = bubble_residual_field(spec, grid, order)
        residual = res.sup()
    report.results['residual'] = residual
    report.results['fd_order'] = order
    report.checks.append(check_le('residual', residual, config.tolerance('residual')))

    with stage(report, 'refinement'):
        points = []
        for N in config.options['refinement']:
            g = make_grid(grid.r_max, N, grid.scheme)
            points.append((grid.r_max / N, bubble_residual(spec, g, order=2)))
        fit = powerlaw_fit(points)
    report.results['refinement'] = [{'h': h, 'residual': r} for h, r in points]
    report.results['convergence_fit'] = fit.to_dict()
    band = config.tolerance('order_band')
    report.checks.append(check_in('convergence_order', fit.slope, 2.0 - band, 2.0 + band))

    with stage(report, 'kernel_modes'):
        modes = kernel_modes(spec, grid)
        scaling = linearized_residual(modes['scaling'], spec, 0, order)
        translation = linearized_residual(modes['translation'], spec, 1, order)
        itself = linearized_residual(bubble_profile(spec, grid), spec, 0, order)
    report.results['kernel_residuals'] = {'scaling': scaling, 'translation': translation, 'bubble': itself}
    report.checks.append(check_le('scaling_mode_residual', scaling, config.tolerance('kernel_residual')))
    report.checks.append(check_le('translation_mode_residual', translation, config.tolerance('kernel_residual')))
    report.checks.append(check_ge('bubble_not_in_kernel', itself, config.tolerance('non_kernel_residual')))

    report.curves['Z'] = bubble_profile(spec, grid)
    report.curves['residual'] = res
    report.curves['scaling_mode'] = modes['scaling']
    report.curves['translation_mode'] = modes['translation']


def _density(profile, params, grid, perturbation):
    if profile == 'bubble':
        return bubble_profile(BubbleSpec.from_params(params), grid).power(params.p_conv)
    if profile == 'bump':
        return RadialField(grid, Perturbation(1.0, perturbation.center, perturbation.width).bump(grid.nodes))
    msg = "Unknown density profile '%s', use 'bubble' or 'bump'." % str(profile)
    raise ConfigError(msg)


def run_riesz_check(config, report):
    """ product-integration convolution against the brute-force oracle, q_Z(0) and the scaling covariance """
    params = config.params
    grid = config.make_grid()
    opts = config.options
    M = opts['oracle_M']
    n_jobs = opts['n_jobs']
    errors = {}
    with stage(report, 'oracle'):
        for ell in opts['ells']:
            table = RingKernelTable.cached(grid, params.n, ell, n_jobs=n_jobs)
            for profile in opts['profiles']:
                f = _density(profile, params, grid, config.perturbation)
                q = riesz_convolve(f, params.n, ell, table=table)
                ref = riesz_oracle(f, params.n, ell, M, box=opts['oracle_box'])
                err = float(np.max(np.abs(q.evaluate(ref.nodes) - ref.values)) / np.max(np.abs(ref.values)))
                key = '%s_ell%s' % (profile, str(ell))
                errors[key] = err
                report.checks.append(check_le('oracle_%s' % key, err, config.tolerance('oracle_rel')))
    report.results['oracle_rel_errors'] = errors

    with stage(report, 'center_value'):
        z = bubble_profile(BubbleSpec.from_params(params), grid)
        ell_center = params.ell
        q_z = quotient_field(z, params, table=RingKernelTable.cached(grid, params.n, ell_center, n_jobs=n_jobs))
    report.results['q_Z0'] = float(q_z.values[0])
    if params.n == 3 and ell_center == 1.0:
        exact = float(bubble_newton_potential(0.0, params.Q))
        report.results['q_Z0_exact'] = exact
        report.checks.append(check_le('q_Z0', abs(q_z.values[0] - exact), config.tolerance('q_center')))
    report.curves['q_Z'] = q_z

    with stage(report, 'scaling'):
        eps = opts['scaling_eps']
        for ell in opts['scaling_ells']:
            p = params.replace(ell=ell)
            sups, deviation = quotient_scaling_deviations(eps, p, n_jobs=n_jobs)
            fit = powerlaw_fit(list(zip(eps, sups)))
            report.results['scaling_ell%s' % str(ell)] = {'sups': sups, 'deviation': deviation, 'fit': fit.to_dict()}
            report.checks.append(check_le('scaling_pointwise_ell%s' % str(ell), deviation,
                                          config.tolerance('scaling_pointwise')))
            report.checks.append(check_le('scaling_power_ell%s' % str(ell), abs(fit.slope + ell),
                                          config.tolerance('scaling_power')))


def run_shoot(config, report):
    """ shots from v(0) = v0 against the bubble, and the scaling family of shots """
    grid = config.make_grid()
    v0 = config.options['v0']
    deviations = {}
    with stage(report, 'shooting'):
        for n, Q in config.options['cases']:
            res = shoot_limit_profile(int(n), float(Q), v0, grid)
            key = 'n%i_Q%s' % (int(n), str(Q))
            dev = float('inf')
            if res.outcome == DECAYED:
                expected = v0 * BubbleSpec(int(n), float(Q))(v0 ** (2.0 / (n - 2.0)) * grid.nodes)
                dev = float(np.max(np.abs(res.profile.values - expected)))
                report.curves['shot_%s' % key] = res.profile
            deviations[key] = {'outcome': res.outcome, 'deviation': dev, 'r_start': res.r_start,
                               'max_radius_reached': res.max_radius_reached}
            report.checks.append(check_le('profile_%s' % key, dev, config.tolerance('profile')))
            for lam in config.options['lambdas']:
                fam = shooting_family_deviation(int(n), float(Q), float(lam), grid)
                deviations[key]['family_lam%s' % str(lam)] = fam
                report.checks.append(check_le('family_%s_lam%s' % (key, str(lam)), fam, config.tolerance('family')))
    report.results['shots'] = deviations


def run_manufacture(config, report):
    """ the potential that makes the bubble (optionally perturbed) an exact solution """
    params = config.params
    grid = config.make_grid()
    order = config.options['fd_order']
    table = RingKernelTable.cached(grid, params.n, params.ell, n_jobs=config.options['n_jobs'])
    spec = BubbleSpec.from_params(params)
    z = bubble_profile(spec, grid)
    pert = config.perturbation
    u = RadialField(grid, z.values + pert(grid.nodes), z.tail)
    out = {}
    with stage(report, 'manufacture'):
        for name, field in (('bubble', z), ('perturbed', u)):
            V = manufacture_potential(field, params, order=order, table=table)
            residual = nonlocal_residual(field, V, params, order=order, table=table)
            out[name] = {'sup_V': V.sup(), 'V0': float(V.values[0]), 'residual': residual,
                         'tail': None if V.tail is None else [V.tail.A, V.tail.beta]}
            report.checks.append(check_le('residual_%s' % name, residual, config.tolerance('residual')))
            report.curves['V_%s' % name] = V
    report.results['manufactured'] = out


def run_solve(config, report):
    """ round trip: the solver started near Z on the potential manufactured from Z """
    params = config.params
    grid = config.make_grid()
    opts = config.options
    order = opts['fd_order']
    table = RingKernelTable.cached(grid, params.n, params.ell, n_jobs=opts['n_jobs'])
    z = bubble_profile(BubbleSpec.from_params(params), grid)
    with stage(report, 'solve'):
        V = manufacture_potential(z, params, order=order, table=table)
        guess = z.scale(opts['guess_factor'])
        res = solve_nonlocal(V, params, guess, tol=opts['tol'], max_iter=opts['max_iter'], tau=opts['tau'],
                             order=order, table=table, raise_on_failure=False, verbose=opts['verbose'])
    error = float(np.max(np.abs(res.solution.values - z.values)))
    report.results['solve'] = res.to_dict()
    report.results['solve']['history'] = res.history
    report.results['solution_error'] = error
    report.checks.append(check_le('solution_error', error, config.tolerance('solution')))
    report.checks.append(check_le('iterations', res.iterations, opts['max_iter']))
    report.curves['solution'] = res.solution


def run_blowup_rate(config, report):
    """ the manufactured blow-up family and its rate fits """
    params = config.params
    opts = config.options
    with stage(report, 'family'):
        exp = blowup_rate_experiment(config.eps_list, config.perturbation, params, y_max=opts['y_max'],
                                     N=opts['y_N'], order=opts['fd_order'], delta=opts['delta'],
                                     n_jobs=opts['n_jobs'], verbose=opts['verbose'])
    report.results['members'] = [rec.summary() for rec in exp.records]
    report.results['skipped'] = exp.skipped
    report.results['degenerate'] = exp.degenerate
    for name in ('fit', 'improved_fit', 'c2_fit', 'sigma_fit'):
        fit = getattr(exp, name)
        report.results[name] = None if fit is None else fit.to_dict()
    report.rates = exp.rates_rows()

    band = config.tolerance('rate_band')
    if exp.fit is not None:
        report.checks.append(check_in('deviation_rate', exp.fit.slope, 2.0 - band, 2.0 + band))
    elif config.perturbation.amplitude == 0.0:
        largest = max(rec.deviation_A for rec in exp.records)
        report.checks.append(check_le('degenerate_deviation', largest, config.tolerance('degenerate')))
    else:
        report.checks.append(Check('deviation_rate', float('nan'), 'in', [2.0 - band, 2.0 + band], False))
    for rec in exp.records:
        tag = 'eps%s' % str(rec.eps)
        report.checks.append(check_le('rescaled_residual_%s' % tag, rec.rescaled_residual,
                                      config.tolerance('rescaled_residual')))
        report.checks.append(check_le('v0_%s' % tag, abs(rec.v.values[0] - 1.0), config.tolerance('unit_height')))
        report.checks.append(check_le('v_max_%s' % tag, float(np.max(rec.v.values)) - 1.0,
                                      config.tolerance('unit_height')))
        report.checks.append(check_ge('v_min_%s' % tag, float(np.min(rec.v.values)), 0.0))
    last = exp.records[-1]
    a_fit = last.linearized.a_decay_fit
    slope = float('nan') if a_fit is None else a_fit.slope
    report.checks.append(Check('a_decay_slope', slope, 'in',
                               [config.tolerance('a_decay_low'), config.tolerance('a_decay_high')],
                               bool(config.tolerance('a_decay_low') <= slope <= config.tolerance('a_decay_high'))))
    report.curves['v'] = last.v
    report.curves['a'] = last.linearized.a_field
    if last.linearized.w_field is not None:
        report.curves['w'] = last.linearized.w_field


def run_hypotheses(config, report):
    """ class diagnostics of the bubble and the hypothesis product along the pure bubble family """
    params = config.params
    grid = config.make_grid()
    opts = config.options
    table = RingKernelTable.cached(grid, params.n, params.ell, n_jobs=opts['n_jobs'])
    z = bubble_profile(BubbleSpec.from_params(params), grid)
    with stage(report, 'classes'):
        L = decay_constant(z, opts['decay_rho'], params.n)
        q = quotient_field(z, params, table=table)
        summary = summarize_quotient(q, params)
        synthetic = hypothesis_product(z, params, q=RadialField.constant(grid, params.Q))
    report.results['decay_constant'] = L
    report.results['quotient'] = {'sup': summary.sup, 'K': summary.K, 'member': summary.member}
    report.results['synthetic_product'] = synthetic.product
    report.checks.append(check_le('decay_constant', abs(L - 1.0), config.tolerance('decay_constant')))
    report.checks.append(check_le('quotient_sup', summary.sup, params.K_quot))
    report.checks.append(check_le('synthetic_product', synthetic.product, 0.0))
    report.curves['q_Z'] = q

    with stage(report, 'bubble_family'):
        y_max = opts['y_max']
        if y_max is None:
            y_max = max(100.0, 2.0 * max(1.0, params.r_ball) / min(config.eps_list))
        y_table = RingKernelTable.cached(make_grid(y_max, opts['y_N'], 'geometric'), params.n, params.ell,
                                         n_jobs=opts['n_jobs'])
        family = []
        for eps in config.eps_list:
            rec = family_member(eps, params, y_table, Perturbation(0.0), order=opts['fd_order'])
            family.append({'eps': rec.eps, 'hyp_product': rec.hyp_product, 'decay_L': rec.decay_L,
                           'quot_sup': rec.quot_sup})
    report.results['bubble_family'] = family


def zero_potential_gap(Q):
    """ int (Q - q_Z) Z^6 over R^3 for the n = 3, ell = 1 bubble, from the closed-form potential """
    k = Q / 3.0

    def integrand(r):
        return (Q - bubble_newton_potential(r, Q)) * (1.0 + k * r * r) ** -3 * r * r
    value, _ = quad(integrand, 0.0, np.inf, limit=400, epsabs=1e-13, epsrel=1e-12)
    return 4.0 * math.pi * float(value)


def run_energy(config, report):
    """ the energy identity for a manufactured solution and for the bubble without potential """
    params = config.params
    grid = config.make_grid()
    order = config.options['fd_order']
    table = RingKernelTable.cached(grid, params.n, params.ell, n_jobs=config.options['n_jobs'])
    z = bubble_profile(BubbleSpec.from_params(params), grid)
    with stage(report, 'manufactured'):
        V = manufacture_potential(z, params, order=order, table=table)
        balance = energy_terms(z, V, params, order=order, table=table)
    report.results['manufactured'] = balance.to_dict()
    report.checks.append(check_le('manufactured_gap', balance.gap, config.tolerance('manufactured_gap')))

    with stage(report, 'zero_potential'):
        p3 = params.replace(n=3, ell=1.0, Q=3.0)
        grid3 = _aux_grid(config)
        z3 = bubble_profile(BubbleSpec.from_params(p3), grid3)
        terms = energy_terms(z3, RadialField.constant(grid3, 0.0), p3, order=order)
        expected = zero_potential_gap(p3.Q)
    diff = terms.lhs - terms.rhs
    report.results['zero_potential'] = {'lhs': terms.lhs, 'rhs': terms.rhs, 'difference': diff,
                                        'closed_form': expected}
    report.checks.append(check_le('zero_potential_gap', abs(diff - expected) / max(1.0, abs(expected)),
                                  config.tolerance('zero_potential')))
    report.curves['V_manufactured'] = V


RUNNERS = {'bubble-check': run_bubble_check,
           'riesz-check': run_riesz_check,
           'shoot': run_shoot,
           'manufacture': run_manufacture,
           'solve': run_solve,
           'blowup-rate': run_blowup_rate,
           'hypotheses': run_hypotheses,
           'energy': run_energy}
