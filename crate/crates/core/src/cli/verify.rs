//! The invariant suite behind `pondkit verify`.
//!
//! Every check draws from one generator seeded by the caller, in a fixed
//! order, so a seed reproduces the same numbers bit for bit.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{unit, Check, RunReport, Value};
use crate::minkowski::{classify, FourVector, LorentzBoost, ThreeVector};
use crate::planewave::{
    cycle_average_abs_aa_numeric, cycle_average_abs_square, from_laser_params, to_laser_params, zf_photon_density,
    Envelope, GaugeGenerator, GaugedField, LaserParams, PhysicalConstants, PlaneWaveField, Polarization,
    VectorPotential,
};
use crate::pondshell::{
    dressed_shell_invariant, kinetic_energy, lab_frame_expansion, minimum_energy, minimum_energy_from_shell,
    multipole_residual, pole_momentum, shell_form_comparison, DressedMomentum,
};
use crate::relmass::covariance_report;
use crate::trajectory::{
    convergence_estimate, cycle_averaged_four_momentum, exact_momentum, integrate, quiver_energy_nr, DEFAULT_STEP,
};

/// Runs the suite. Returns a report whose `checks` hold one entry per
/// invariant.
pub fn run_suite(seed: u64) -> RunReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = RunReport::new("verify");
    report.input("seed", Value::Number(seed as f64), unit::COUNT);
    let checks = &mut report.checks;
    minkowski_checks(&mut rng, checks);
    planewave_checks(&mut rng, checks);
    pondshell_checks(&mut rng, checks);
    trajectory_checks(checks);
    relmass_checks(&mut rng, checks);
    cli_checks(checks);
    let passed = report.checks.iter().filter(|c| c.pass).count();
    report.output("passed", passed as f64, unit::COUNT);
    report.output("failed", (report.checks.len() - passed) as f64, unit::COUNT);
    report
}

fn check(out: &mut Vec<Check>, module: &str, name: &str, worst: f64, tolerance: f64, unit: &str) {
    out.push(Check {
        module: module.to_string(),
        name: name.to_string(),
        worst,
        tolerance,
        unit: unit.to_string(),
        pass: worst <= tolerance,
    });
}

fn unit_vector(rng: &mut ChaCha8Rng) -> ThreeVector {
    loop {
        let v: ThreeVector = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 && n <= 1.0 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

fn random_boost(rng: &mut ChaCha8Rng, max_speed: f64) -> LorentzBoost {
    let n = unit_vector(rng);
    let s = rng.gen_range(0.0..max_speed);
    LorentzBoost::new([n[0] * s, n[1] * s, n[2] * s]).expect("subluminal by construction")
}

fn random_four(rng: &mut ChaCha8Rng) -> FourVector {
    FourVector::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_field(rng: &mut ChaCha8Rng) -> PlaneWaveField {
    let pol = if rng.gen_bool(0.5) { Polarization::Linear } else { Polarization::Circular };
    let omega = rng.gen_range(0.2..2.0);
    let dir = unit_vector(rng);
    let a0 = rng.gen_range(0.1..5.0);
    PlaneWaveField::new(omega, dir, pol, a0, Envelope::Monochromatic).expect("valid by construction")
}

fn random_on_shell(rng: &mut ChaCha8Rng) -> FourVector {
    random_boost(rng, 0.9).apply(&FourVector::new(1.0, 0.0, 0.0, 0.0))
}

fn minkowski_checks(rng: &mut ChaCha8Rng, out: &mut Vec<Check>) {
    let (mut inner_dev, mut round_trip, mut class_flips) = (0.0f64, 0.0f64, 0usize);
    for _ in 0..1000 {
        let (a, b) = (random_four(rng), random_four(rng));
        let l = random_boost(rng, 0.99);
        let before = a.inner(&b);
        let after = l.apply(&a).inner(&l.apply(&b));
        inner_dev = inner_dev.max((after - before).abs() / before.abs().max(1.0));
        let back = l.inverse().apply(&l.apply(&a));
        round_trip = round_trip.max(back.max_abs_diff(&a) / a.euclidean_norm().max(1.0));
        let s = a.euclidean_norm();
        if a.norm_sqr().abs() > 1e-3 * s * s {
            let tol = 1e-9;
            if classify(&a, tol).ok() != classify(&l.apply(&a), tol).ok() {
                class_flips += 1;
            }
        }
    }
    check(out, "minkowski", "boost preserves inner product", inner_dev, 1e-12, unit::DIMENSIONLESS);
    check(out, "minkowski", "boost preserves causal class", class_flips as f64, 0.0, unit::COUNT);
    check(out, "minkowski", "inverse boost round trip", round_trip, 1e-12, unit::DIMENSIONLESS);
}

fn planewave_checks(rng: &mut ChaCha8Rng, out: &mut Vec<Check>) {
    let (mut pointwise, mut averaged) = (0.0f64, 0.0f64);
    for i in 0..1000 {
        let field = random_field(rng);
        let generator = GaugeGenerator::random(rng, 8);
        let gauged = GaugedField { field: &field, generator: &generator };
        if i < 100 {
            let scale = field.a0() * field.a0();
            for j in 0..64 {
                let phi = 2.0 * PI * f64::from(j) / 64.0;
                let a = field.potential_at(phi).norm_sqr();
                let b = gauged.potential_split_at(phi).norm_sqr();
                pointwise = pointwise.max((a - b).abs() / scale);
            }
        }
        let before = cycle_average_abs_aa_numeric(&field, 0.0, 1024);
        let after = cycle_average_abs_aa_numeric(&gauged, 0.0, 1024);
        averaged = averaged.max((after - before).abs() / before);
    }
    check(out, "planewave", "gauge invariance of A.A pointwise", pointwise, 1e-12, unit::DIMENSIONLESS);
    check(out, "planewave", "gauge invariance of <|A.A|>", averaged, 1e-12, unit::DIMENSIONLESS);

    let (mut sample_dev, mut average_dev, mut transverse) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..200 {
        let field = random_field(rng);
        let l = random_boost(rng, 0.99);
        let k = field.wave_vector();
        let scale = field.a0() * field.a0();
        let n = 256;
        let samples: Vec<FourVector> = (0..n).map(|j| field.potential_at(2.0 * PI * j as f64 / n as f64)).collect();
        let mut sum_before = 0.0;
        let mut sum_after = 0.0;
        for a in &samples {
            let b = l.apply(a);
            sample_dev = sample_dev.max((b.norm_sqr() - a.norm_sqr()).abs() / scale);
            sum_before += a.norm_sqr().abs();
            sum_after += b.norm_sqr().abs();
            transverse = transverse.max(k.inner(a).abs() / (k.t() * field.a0()));
        }
        average_dev = average_dev.max((sum_after - sum_before).abs() / sum_before);
    }
    check(out, "planewave", "boosted samples keep A.A", sample_dev, 1e-12, unit::DIMENSIONLESS);
    check(out, "planewave", "boosted grid keeps <|A.A|>", average_dev, 1e-12, unit::DIMENSIONLESS);
    check(out, "planewave", "transversality k.A = 0", transverse, 1e-12, unit::DIMENSIONLESS);

    let mut quad = 0.0f64;
    for pol in [Polarization::Linear, Polarization::Circular] {
        for a0 in [0.1, 1.0, 3.0] {
            let f = PlaneWaveField::new(1.3, [1.0, -2.0, 0.5], pol, a0, Envelope::Monochromatic).expect("valid");
            let closed = f.cycle_average_abs_aa().expect("periodic");
            let numeric = cycle_average_abs_square(|phi| f.potential_at(phi), 0.3, 10_000);
            quad = quad.max((numeric - closed).abs() / closed);
        }
    }
    check(out, "planewave", "closed form vs 1e4-point quadrature", quad, 1e-10, unit::DIMENSIONLESS);

    let k = PhysicalConstants::codata2018();
    let mut routes = 0.0f64;
    for i in 0..=10 {
        for j in 0..=10 {
            let intensity = 10f64.powf(10.0 + f64::from(i));
            let wavelength = 0.2e-6 * (50f64).powf(f64::from(j) / 10.0);
            for pol in [Polarization::Linear, Polarization::Circular] {
                let p = LaserParams::new(intensity, wavelength, pol).expect("valid");
                let a = from_laser_params(&p, &k).and_then(|f| f.zf()).expect("periodic");
                let b = zf_photon_density(&p, &k).expect("valid");
                routes = routes.max((a - b).abs() / b);
            }
        }
    }
    check(out, "planewave", "z_f from U_p vs photon density", routes, 1e-10, unit::DIMENSIONLESS);
}

fn pondshell_checks(rng: &mut ChaCha8Rng, out: &mut Vec<Check>) {
    let (mut shell_dev, mut pole_dev) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let field = random_field(rng);
        let p = random_on_shell(rng);
        let l = random_boost(rng, 0.99);
        let moved = field.boosted(&l).expect("boosted field is valid");
        let expected = 1.0 + field.zf().expect("periodic");
        let d = DressedMomentum::new(p, &field).expect("on shell");
        shell_dev = shell_dev.max((d.boosted(&l).invariant() - expected).abs() / expected);
        let n: i64 = rng.gen_range(-3..=3);
        let q = pole_momentum(n, p.space(), &field, 1.0).expect("finite");
        for probe in [p, q] {
            let r = multipole_residual(&probe, n, &field, 1.0).expect("periodic");
            let r_moved = multipole_residual(&l.apply(&probe), n, &moved, 1.0).expect("periodic");
            pole_dev = pole_dev.max((r_moved - r).abs() / r.abs().max(expected));
        }
    }
    check(out, "pondshell", "dressed invariant under boosts", shell_dev, 1e-9, unit::DIMENSIONLESS);
    check(out, "pondshell", "multipole residual under boosts", pole_dev, 1e-9, unit::DIMENSIONLESS);

    let mut routes = 0.0f64;
    for pol in [Polarization::Linear, Polarization::Circular] {
        for a0 in [0.1, 1.0, 2.0] {
            let f = PlaneWaveField::new(0.8, [0.0, 1.0, 1.0], pol, a0, Envelope::Monochromatic).expect("valid");
            let rest = FourVector::new(1.0, 0.0, 0.0, 0.0);
            let (direct, expanded) = lab_frame_expansion(&rest, &f).expect("periodic");
            let covariant = dressed_shell_invariant(&rest, &f).expect("on shell").dressed_invariant;
            let expected = 1.0 + f.zf().expect("periodic");
            for v in [direct, expanded, covariant] {
                routes = routes.max((v - expected).abs() / expected);
            }
        }
    }
    check(out, "pondshell", "rest-frame and expanded routes agree", routes, 1e-12, unit::DIMENSIONLESS);

    let (mut identity, mut root) = (0.0f64, 0.0f64);
    for i in 0..=45 {
        let up = 10f64.powf(-6.0 + 9.0 * f64::from(i) / 45.0);
        let e_min = minimum_energy(up, 1.0);
        identity = identity.max((minimum_energy_from_shell(up, 1.0) - e_min).abs() / e_min);
        // sign change of T(|p|) brackets the minimal momentum
        let (mut lo, mut hi) = (0.0, 2.0 * up);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if kinetic_energy([mid, 0.0, 0.0], up, 1.0) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        root = root.max((0.5 * (lo + hi) - up).abs() / up);
    }
    check(out, "pondshell", "E at |p| = U_p equals m + U_p", identity, 1e-12, unit::DIMENSIONLESS);
    check(out, "pondshell", "T vanishes exactly at |p| = U_p", root, 1e-9, unit::DIMENSIONLESS);

    let mut form = 0.0f64;
    for i in 0..=20 {
        let z = 10f64.powf(-6.0 + 0.4 * f64::from(i));
        let c = shell_form_comparison(z, 1.0);
        // nonzero, and equal to -2 sqrt(z)
        let target = -2.0 * z.sqrt();
        form = form.max(if c.residual == 0.0 { f64::INFINITY } else { (c.residual - target).abs() / target.abs() });
    }
    check(out, "pondshell", "quadratic shell is not a mass shift", form, 1e-12, unit::DIMENSIONLESS);

    // T is increasing in |p|^2 and convex in |p|
    let mut violations = 0usize;
    for up in [1e-3, 0.25, 4.0] {
        let t = |p: f64| kinetic_energy([p, 0.0, 0.0], up, 1.0);
        let h = 0.01;
        for j in 1..1000 {
            let p = h * f64::from(j);
            if t(p + h) <= t(p) {
                violations += 1;
            }
            if t(p + h) - 2.0 * t(p) + t(p - h) < -1e-15 {
                violations += 1;
            }
        }
    }
    check(out, "pondshell", "T monotone in |p|^2 and convex in |p|", violations as f64, 0.0, unit::COUNT);
}

fn trajectory_checks(out: &mut Vec<Check>) {
    let rest = FourVector::new(1.0, 0.0, 0.0, 0.0);
    let moving = FourVector::from_parts((1.0f64 + 0.09 + 0.04).sqrt(), [0.3, 0.0, -0.2]);
    let flat = Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 2 };

    let (mut shell, mut drift) = (0.0f64, 0.0f64);
    let mut quasi = 0.0f64;
    for pol in [Polarization::Linear, Polarization::Circular] {
        for a0 in [0.1, 1.0, 2.0] {
            let f = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], pol, a0, flat).expect("valid");
            let range = flat.support().expect("pulse");
            let traj = integrate(&f, &rest, range, DEFAULT_STEP).expect("starts outside the field");
            shell = shell.max(traj.max_shell_violation());
            drift = drift.max(traj.max_light_front_drift());
            let avg = cycle_averaged_four_momentum(&traj, 1).expect("plateau covered");
            let shift = avg - rest;
            let k = f.wave_vector();
            let along = k * (shift.t() / k.t());
            let scale = shift.euclidean_norm();
            quasi = quasi.max(shift.max_abs_diff(&along) / scale).max(shift.norm_sqr().abs() / (scale * scale));
        }
    }
    check(out, "trajectory", "on-shell violation at step 2pi/1000", shell, 1e-9, unit::MOMENTUM_SQ);
    check(out, "trajectory", "light-front k.p conserved", drift, 1e-10, unit::DIMENSIONLESS);
    check(out, "trajectory", "averaged shift is lightlike along k", quasi, 1e-6, unit::DIMENSIONLESS);

    let sin2 = Envelope::Sin2 { total_cycles: 4 };
    let f = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], Polarization::Linear, 1.0, sin2).expect("valid");
    let end = sin2.support().expect("pulse").1;
    let order = convergence_estimate(&f, &rest, (0.0, 0.6 * end), 2.0 * PI / 160.0)
        .map(|c| (c.order - 4.0).abs())
        .unwrap_or(f64::INFINITY);
    check(out, "trajectory", "integrator order 4 (|order - 4|)", order, 0.2, unit::DIMENSIONLESS);

    let (mut exact_exit, mut rk4_exit) = (0.0f64, 0.0f64);
    for env in [Envelope::Sin2 { total_cycles: 8 }, Envelope::Gaussian { sigma_cycles: 2.0, cutoff_sigmas: 4.0 }] {
        for p0 in [rest, moving] {
            let f = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], Polarization::Circular, 1.5, env).expect("valid");
            let (lo, hi) = env.support().expect("pulse");
            let exact = exact_momentum(&f, &p0, hi).expect("on shell");
            exact_exit = exact_exit.max(exact.max_abs_diff(&p0) / p0.euclidean_norm());
            let traj = integrate(&f, &p0, (lo, hi), DEFAULT_STEP).expect("starts outside the field");
            rk4_exit = rk4_exit.max(traj.last().momentum.max_abs_diff(&p0) / p0.euclidean_norm());
        }
    }
    check(out, "trajectory", "pulse exit restores p0 (exact)", exact_exit, 1e-10, unit::DIMENSIONLESS);
    check(out, "trajectory", "pulse exit restores p0 (RK4)", rk4_exit, 1e-6, unit::DIMENSIONLESS);

    let e0 = 1e-3;
    let quiver = quiver_energy_nr(e0, 1.0, 1.0).unwrap_or(f64::NAN);
    let up = PlaneWaveField::monochromatic(Polarization::Linear, e0)
        .and_then(|f| f.ponderomotive_potential())
        .expect("periodic");
    let dev = (quiver - up).abs() / up;
    check(out, "trajectory", "quiver energy equals U_p", if dev.is_nan() { f64::INFINITY } else { dev }, 1e-9, unit::DIMENSIONLESS);
}

fn relmass_checks(rng: &mut ChaCha8Rng, out: &mut Vec<Check>) {
    let (mut spread, mut residual, mut frozen) = (0.0f64, 0.0f64, 0usize);
    for _ in 0..20 {
        let n = unit_vector(rng);
        let s = rng.gen_range(0.0..0.95);
        let v = [n[0] * s, n[1] * s, n[2] * s];
        let boosts: Vec<LorentzBoost> = (0..50).map(|_| random_boost(rng, 0.99)).collect();
        let mut frames = vec![LorentzBoost::identity()];
        frames.extend(boosts);
        let r = covariance_report(1.0, v, &frames).expect("subluminal");
        spread = spread.max(r.invariant_mass_spread());
        residual = residual.max(r.covariance_residual);
        let rest_gamma = r.m_gamma_per_frame[0];
        frozen += r.m_gamma_per_frame[1..].iter().filter(|g| **g == rest_gamma).count();
    }
    check(out, "relmass", "sqrt(p.p) boost invariant", spread, 1e-12, unit::DIMENSIONLESS);
    check(out, "relmass", "m gamma frozen under a boost", frozen as f64, 0.0, unit::COUNT);
    check(out, "relmass", "boost of m u equals m u(composed v)", residual, 1e-10, unit::MOMENTUM);
}

fn cli_checks(out: &mut Vec<Check>) {
    let k = PhysicalConstants::codata2018();
    let mut worst = 0.0f64;
    for i in 0..=10 {
        for j in 0..=10 {
            let intensity = 10f64.powf(10.0 + f64::from(i));
            let wavelength = 0.2e-6 * (50f64).powf(f64::from(j) / 10.0);
            for pol in [Polarization::Linear, Polarization::Circular] {
                let p = LaserParams::new(intensity, wavelength, pol).expect("valid");
                let back = to_laser_params(&from_laser_params(&p, &k).expect("valid"), &k);
                worst = worst
                    .max((back.intensity - intensity).abs() / intensity)
                    .max((back.wavelength - wavelength).abs() / wavelength);
            }
        }
    }
    check(out, "cli", "SI -> natural -> SI round trip", worst, 1e-12, unit::DIMENSIONLESS);
}
