//! Kernel bounds, derivative checks and the location of the `|x|` gap maximum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rth_quasi::abs_approx::RTH_GAP_BOUND;
use rth_quasi::{
    solve_extremum_constants, KernelFamily, KernelSpec, NodeGrid, QuasiInterpolant, SampleSet,
};

#[test]
fn gap_bounds_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..100_000 {
        let x: f64 = rng.gen_range(-100.0..=100.0);
        let c: f64 = 10.0 * (1.0 - rng.gen::<f64>()); // (0, 10]
        let rth_gap = x.abs() - KernelSpec::rth(c).unwrap().phi(x);
        let mq_gap = KernelSpec::mq(c).unwrap().phi(x) - x.abs();
        assert!(
            rth_gap >= 0.0 && rth_gap <= RTH_GAP_BOUND * c,
            "rth x={x} c={c} gap={rth_gap}"
        );
        assert!(mq_gap >= 0.0 && mq_gap <= c, "mq x={x} c={c} gap={mq_gap}");
        assert!(rth_gap <= mq_gap, "x={x} c={c}");
    }
}

#[test]
fn rth_gap_peaks_at_c_t_star() {
    let k = solve_extremum_constants();
    for c in [0.01, 0.3, 2.0] {
        let rth = KernelSpec::rth(c).unwrap();
        let gap = |x: f64| x.abs() - rth.phi(x);
        // dense scan of [0, 5c]
        let (x_max, g_max) = (0..=50_000)
            .map(|i| 5.0 * c * i as f64 / 50_000.0)
            .map(|x| (x, gap(x)))
            .fold((0.0, f64::NEG_INFINITY), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            });
        assert!(
            (x_max - c * k.t_star).abs() <= 1e-3 * c,
            "c={c}: argmax {x_max}"
        );
        assert!((g_max - c * k.err_coeff).abs() <= 1e-9 * c);
        assert!((gap(-c * k.t_star) - c * k.err_coeff).abs() <= 1e-12 * c.max(1.0));
    }
}

#[test]
fn rth_slope_is_bounded() {
    // φ' peaks where φ'' = 0, i.e. at u = ξ, and there tanh ξ = 1/ξ gives φ'(ξ) = ξ
    let xi = solve_extremum_constants().xi;
    for c in [0.01, 1.0] {
        let k = KernelSpec::rth(c).unwrap();
        let max = (0..=200_000)
            .map(|i| c * (-10.0 + 20.0 * i as f64 / 200_000.0))
            .map(|d| k.phi_d1(d).unwrap().abs())
            .fold(0.0, f64::max);
        assert!(max <= 1.5, "max |phi'| = {max}");
        assert!((max - xi).abs() < 1e-8, "max |phi'| = {max}");
        assert!((k.phi_d1(c * xi).unwrap() - xi).abs() < 1e-14);
    }
}

// five-point central stencils, truncation error O(step⁴)
fn central_d1(f: impl Fn(f64) -> f64, x: f64, step: f64) -> f64 {
    (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) - f(x + 2.0 * step)) / (12.0 * step)
}

fn central_d2(f: impl Fn(f64) -> f64, x: f64, step: f64) -> f64 {
    let s = -f(x - 2.0 * step) + 16.0 * f(x - step) - 30.0 * f(x) + 16.0 * f(x + step)
        - f(x + 2.0 * step);
    s / (12.0 * step * step)
}

fn close(analytic: f64, numeric: f64, rel: f64, floor: f64) -> bool {
    (analytic - numeric).abs() <= rel * analytic.abs().max(floor)
}

#[test]
fn kernel_derivatives_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..2_000 {
        let family = if rng.gen_bool(0.5) {
            KernelFamily::Rth
        } else {
            KernelFamily::Mq
        };
        let c: f64 = 10f64.powf(rng.gen_range(-2.0..1.0));
        let d: f64 = c * rng.gen_range(-6.0..6.0);
        let k = KernelSpec::new(family, c).unwrap();
        let d1 = k.phi_d1(d).unwrap();
        let d2 = k.phi_d2(d).unwrap();
        let fd1 = central_d1(|t| k.phi(t), d, 1e-3 * c);
        let fd2 = central_d2(|t| k.phi(t), d, 1e-2 * c);
        // floors: the derivatives' natural scales, 1 and 1/c
        assert!(
            close(d1, fd1, 1e-6, 1.0),
            "{family} c={c} d={d}: {d1} vs {fd1}"
        );
        assert!(
            close(d2, fd2, 1e-4, 1.0 / c),
            "{family} c={c} d={d}: {d2} vs {fd2}"
        );
    }
}

#[test]
fn operator_derivatives_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..100 {
        let family = if rng.gen_bool(0.5) {
            KernelFamily::Rth
        } else {
            KernelFamily::Mq
        };
        let intervals = rng.gen_range(5..60);
        let grid = NodeGrid::uniform(-1.0, 1.0, intervals).unwrap();
        let h = grid.h();
        let c = h * rng.gen_range(0.1..2.0);
        let (a, b) = (rng.gen_range(0.5..3.0), rng.gen_range(-1.0..1.0));
        let q = QuasiInterpolant::build(
            SampleSet::from_fn(grid, |x| (a * x).sin() + b * x * x),
            KernelSpec::new(family, c).unwrap(),
        )
        .unwrap();
        for _ in 0..20 {
            let x = rng.gen_range(-0.95..0.95);
            let d1 = q.eval_d1(x).unwrap();
            let d2 = q.eval_d2(x).unwrap();
            let fd1 = central_d1(|t| q.eval(t), x, 1e-3 * c);
            let fd2 = central_d2(|t| q.eval(t), x, 2e-2 * c);
            assert!(
                close(d1, fd1, 1e-6, 1.0),
                "{family} c={c} x={x}: {d1} vs {fd1}"
            );
            assert!(
                close(d2, fd2, 1e-4, 1.0),
                "{family} c={c} x={x}: {d2} vs {fd2}"
            );
        }
    }
}

#[test]
fn rth_second_derivative_changes_sign_at_c_xi() {
    let xi = solve_extremum_constants().xi;
    for c in [0.05, 1.0, 7.0] {
        let k = KernelSpec::rth(c).unwrap();
        assert!(k.phi_d2(c * xi * 0.999).unwrap() > 0.0);
        assert!(k.phi_d2(-c * xi * 0.999).unwrap() > 0.0);
        assert!(k.phi_d2(c * xi * 1.001).unwrap() < 0.0);
        assert!(k.phi_d2(c * xi).unwrap().abs() < 1e-12 / c);
    }
}
