//! Acceptance gate: the eight primary criteria, one pass/fail line
//! each (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use airygap::cli::{identity_grid, suite_hankel, suite_identity, suite_montecarlo, suite_reductions};
use airygap::distributions::spacing_survival;
use airygap::fredholm::{build_scheme, dlog_f_dx, fredholm_det, fredholm_det_default, PartitionSpec};
use airygap::painleve::solve_coupled_pii;
use airygap::rmt_montecarlo::sample_ensemble;
use airygap::special::airy_eval;

const SEED: u64 = 20_260_823;

fn report(criterion: usize, description: &str, pass: bool) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("[{verdict}] criterion {criterion}: {description}");
    assert!(pass, "criterion {criterion} failed: {description}");
}

#[test]
fn criterion_1_theorem_identity_grid() {
    let start = Instant::now();
    let r = suite_identity().unwrap();
    let elapsed = start.elapsed();
    let worst = r.cases.iter().map(|c| c.error).fold(0.0, f64::max);
    report(
        1,
        &format!(
            "Painlevé log-integral vs log determinant on {} grid cases, \
             worst |diff| = {worst:.3e} <= 1e-6 in {elapsed:.2?}",
            r.cases.len()
        ),
        r.passed && elapsed.as_secs() < 60,
    );
}

#[test]
fn criterion_2_tracy_widom_recovery() {
    // published Tracy-Widom GUE CDF values, frozen before the build
    let table = [
        (-3.0, 0.080_319_552_939_362),
        (-2.0, 0.413_224_142_505_208),
        (-1.0, 0.807_214_241_999_344),
        (0.0, 0.969_372_828_355_277),
        (1.0, 0.997_505_438_149_391),
        (2.0, 0.999_887_553_698_309),
    ];
    let mut worst_oracle = 0.0_f64;
    let mut worst_pipeline = 0.0_f64;
    for &(x, reference) in &table {
        let p = PartitionSpec::new(vec![x], vec![0.0]).unwrap();
        let oracle_scheme = build_scheme(&p, 20.0, 18.0).unwrap();
        let oracle = fredholm_det(&p, &oracle_scheme).unwrap().det;
        let pipeline = fredholm_det_default(&p).unwrap().det;
        worst_oracle = worst_oracle.max((oracle - reference).abs());
        worst_pipeline = worst_pipeline.max((pipeline - oracle).abs());
    }
    report(
        2,
        &format!(
            "high-resolution oracle vs published table |diff| = {worst_oracle:.3e} <= 1e-6, \
             pipeline vs oracle |diff| = {worst_pipeline:.3e} <= 1e-8"
        ),
        worst_oracle <= 1e-6 && worst_pipeline <= 1e-8,
    );
}

#[test]
fn criterion_3_reduction_rates() {
    let start = Instant::now();
    let r = suite_reductions().unwrap();
    let elapsed = start.elapsed();
    let slopes: Vec<String> = r
        .cases
        .iter()
        .map(|c| format!("{} slope {:.3}", c.case, c.value))
        .collect();
    // the x1 -> infinity case is checked one-sided: the theorem states
    // an upper bound, and on xi >= 0 the error decays faster than it
    report(
        3,
        &format!("{} in {elapsed:.2?}", slopes.join("; ")),
        r.passed && elapsed.as_secs() < 120,
    );
}

#[test]
fn criterion_4_airy_boundary_condition() {
    let mut worst = [0.0_f64; 2];
    for (i, (t, tol)) in [(8.0, 1e-4), (12.0, 1e-6)].iter().enumerate() {
        for p in identity_grid() {
            // anchor two units later so w_j(T) is a real prediction
            let sol = solve_coupled_pii(&p, t + 2.0, 1e-10).unwrap();
            let (w_t, _) = sol.eval(*t).unwrap();
            for j in 0..p.k() {
                let amp = (p.s_next(j + 1) - p.s()[j]).abs().sqrt();
                let airy = amp * airy_eval(t + p.x()[j]).unwrap().ai;
                worst[i] = worst[i].max((w_t[j] / airy - 1.0).abs());
            }
        }
        assert!(worst[i] <= *tol, "T = {t}: worst residual {}", worst[i]);
    }
    report(
        4,
        &format!(
            "w_j(T) / (sqrt|ds_j| Ai(T+x_j)) - 1: worst {:.3e} <= 1e-4 at T=8, \
             {:.3e} <= 1e-6 at T=12",
            worst[0], worst[1]
        ),
        worst[0] <= 1e-4 && worst[1] <= 1e-6,
    );
}

#[test]
fn criterion_5_finite_n_hankel_identity() {
    let start = Instant::now();
    let r = suite_hankel(SEED).unwrap();
    let elapsed = start.elapsed();
    let worst = r.cases.iter().map(|c| c.error).fold(0.0, f64::max);
    report(
        5,
        &format!(
            "finite_n_det vs hankel_ratio on {} random cases (n = 4, 6, 8), \
             worst |diff| = {worst:.3e} <= 1e-10 in {elapsed:.2?}",
            r.cases.len()
        ),
        r.passed && elapsed.as_secs() < 10,
    );
}

#[test]
fn criterion_6_monte_carlo_corroboration() {
    let start = Instant::now();
    let r = suite_montecarlo(SEED, 10_000).unwrap();
    let elapsed = start.elapsed();
    let worst_z = r.cases.iter().map(|c| c.error).fold(0.0, f64::max);
    report(
        6,
        &format!(
            "empirical generating function at n = 200, 10^4 samples, \
             {} configurations, worst |z| = {worst_z:.2} <= 3 in {elapsed:.2?}",
            r.cases.len()
        ),
        r.passed && elapsed.as_secs() < 300,
    );
}

#[test]
fn criterion_7_spacing_law() {
    let at_zero = spacing_survival(0.0).unwrap();
    let norm_ok = (at_zero - 1.0).abs() <= 1e-3;

    let grid: Vec<f64> = (0..20).map(|i| 6.0 * i as f64 / 19.0).collect();
    let values: Vec<f64> = grid.iter().map(|&s| spacing_survival(s).unwrap()).collect();
    let monotone = values.windows(2).all(|w| w[1] <= w[0] + 1e-12);

    let samples = sample_ensemble(200, 10_000, SEED).unwrap();
    let mut worst_z = 0.0_f64;
    for sigma in [1.0, 2.0, 3.0] {
        let hits = samples
            .iter()
            .filter(|s| {
                let r = s.rescaled();
                r[0] - r[1] > sigma
            })
            .count();
        let p_hat = hits as f64 / samples.len() as f64;
        let se = (p_hat * (1.0 - p_hat) / samples.len() as f64).sqrt();
        let z = (p_hat - spacing_survival(sigma).unwrap()) / se;
        worst_z = worst_z.max(z.abs());
    }
    report(
        7,
        &format!(
            "spacing_survival(0) = {at_zero:.6} within 1e-3, nonincreasing on 20 points, \
             GUE Monte Carlo worst |z| = {worst_z:.2} <= 3"
        ),
        norm_ok && monotone && worst_z <= 3.0,
    );
}

#[test]
fn criterion_8_structural_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0;
    for _ in 0..5 {
        let k = rng.gen_range(1..=3usize);
        let mut x: Vec<f64> = (0..k).map(|_| rng.gen_range(-3.0..2.0)).collect();
        x.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for j in 1..k {
            if x[j - 1] - x[j] < 0.3 {
                x[j] = x[j - 1] - 0.3;
            }
        }
        let s: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..0.95)).collect();
        let p = PartitionSpec::new(x.clone(), s.clone()).unwrap();
        let r = fredholm_det_default(&p).unwrap();

        // determinant bounds
        assert!(r.det > 0.0 && r.det <= 1.0, "det {} out of (0, 1]", r.det);

        // monotone in each weight
        let j = rng.gen_range(0..k);
        let mut s_hi = s.clone();
        s_hi[j] = (s_hi[j] + 0.2).min(1.0);
        let r_hi = fredholm_det_default(&PartitionSpec::new(x.clone(), s_hi).unwrap()).unwrap();
        assert!(r_hi.det >= r.det, "determinant must grow with s_{}", j + 1);

        // merging an interval with a duplicated weight is exact
        let mut x_ext = vec![x[0] + 0.8];
        x_ext.extend_from_slice(&x);
        let mut s_ext = vec![s[0]];
        s_ext.extend_from_slice(&s);
        let r_ext = fredholm_det_default(&PartitionSpec::new(x_ext, s_ext).unwrap()).unwrap();
        assert!(
            (r_ext.det - r.det).abs() <= 1e-12 * r.det,
            "merging violated: {} vs {}",
            r_ext.det,
            r.det
        );

        // resolvent x-derivative against central differences
        let scheme = build_scheme(&p, 10.0, 14.0).unwrap();
        let analytic = dlog_f_dx(&p, &scheme, 1).unwrap();
        let h = 1e-4;
        let mut x_lo = x.clone();
        let mut x_hi = x.clone();
        x_lo[0] -= h;
        x_hi[0] += h;
        let fd = (fredholm_det_default(&PartitionSpec::new(x_hi, s.clone()).unwrap())
            .unwrap()
            .log_det
            - fredholm_det_default(&PartitionSpec::new(x_lo, s.clone()).unwrap())
                .unwrap()
                .log_det)
            / (2.0 * h);
        assert!((analytic - fd).abs() <= 1e-6, "derivative {analytic} vs fd {fd}");

        // mesh doubling stays inside the embedded error estimate
        let coarse_scheme = build_scheme(&p, 8.0, 14.0).unwrap();
        let coarse = fredholm_det(&p, &coarse_scheme).unwrap();
        let fine_scheme = build_scheme(&p, 16.0, 14.0).unwrap();
        let fine = fredholm_det(&p, &fine_scheme).unwrap();
        assert!(
            (fine.log_det - coarse.log_det).abs() <= coarse.err_est.max(1e-13),
            "mesh doubling moved log det by {} vs estimate {}",
            (fine.log_det - coarse.log_det).abs(),
            coarse.err_est
        );
        checks += 5;
    }
    report(
        8,
        &format!("bounds, s-monotonicity, merging, derivative, mesh doubling: {checks} checks on seeded draws"),
        checks == 25,
    );
}
