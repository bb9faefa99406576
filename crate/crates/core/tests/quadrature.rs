use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wrightlab::identities::{closed_form, default_catalog, EulerIntegralSpec};
use wrightlab::quadrature::{beta_by_quadrature, evaluate_integral_direct, tanh_sinh_integrate, tanh_sinh_integrate_nodes, QuadraturePolicy};
use wrightlab::scalar::{beta_fn, gamma_fn, pochhammer};
use wrightlab::series::{hyper_pfq, SeriesPolicy};
use wrightlab::Error;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn crel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn sp() -> SeriesPolicy {
    SeriesPolicy::default()
}

fn qp() -> QuadraturePolicy {
    QuadraturePolicy::default()
}

fn direct(spec: &EulerIntegralSpec) -> Complex64 {
    evaluate_integral_direct(spec, &qp(), &sp()).unwrap().value
}

#[test]
fn beta_grid() {
    for i in 0..10 {
        for j in 0..10 {
            let x = 0.2 + 4.8 * i as f64 / 9.0;
            let y = 0.2 + 4.8 * j as f64 / 9.0;
            let q = beta_by_quadrature(x, y, &qp()).unwrap();
            let b = beta_fn(x, y).unwrap();
            assert!(crel(q.value, c(b)) <= 1e-12, "B({x}, {y}): {} vs {b}", q.value);
        }
    }
}

#[test]
fn gauss_integral_example() {
    let q = tanh_sinh_integrate(|t| c(t.powf(0.2) * (1.0 - t).powf(1.3) * (1.0 - 0.3 * t).powf(-0.5)), 0.0, 1.0, &qp()).unwrap();
    let want = beta_fn(1.2, 2.3).unwrap() * hyper_pfq(&[0.5, 1.2], &[3.5], c(0.3), &sp()).unwrap().value;
    assert!(crel(q.value, want) <= 1e-12);
}

#[test]
fn gauss_integral_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let a: f64 = rng.random_range(0.1..3.0);
        let b: f64 = rng.random_range(0.2..3.0);
        let cc = b + rng.random_range(0.2..3.0);
        let z = Complex64::from_polar(rng.random_range(0.0..0.5), rng.random_range(0.0..std::f64::consts::TAU));
        let q = tanh_sinh_integrate_nodes(
            |n| Ok((1.0 - z * n.t).powf(-a) * (n.from_a.powf(b - 1.0) * n.to_b.powf(cc - b - 1.0))),
            0.0,
            1.0,
            &qp(),
        )
        .unwrap();
        let f = hyper_pfq(&[a, b], &[cc], z, &sp()).unwrap().value;
        let got = q.value / beta_fn(b, cc - b).unwrap();
        assert!(crel(got, f) <= 1e-10, "2F1({a},{b};{cc};{z}): {got} vs {f}");
    }
}

#[test]
fn affine_invariance_linear_factor() {
    let (al, be, g, la, p) = (0.9, 1.3, -0.7, 0.8, Complex64::new(0.3, 0.2));
    for (a, b, u, v) in [(-1.0, 3.0, 0.1, 0.9), (2.0, 2.5, -0.4, 1.5), (0.5, 1.7, 0.3, 0.2)] {
        let len: f64 = b - a;
        let wide = EulerIntegralSpec::theorem3(al, be, g, a, b, u, v, la, p).unwrap();
        let unit = EulerIntegralSpec::theorem3(al, be, g, 0.0, 1.0, u * len, a * u + v, la, p * (len * len)).unwrap();
        let lhs = direct(&wide);
        let rhs = direct(&unit) * len.powf(al + be - 1.0);
        assert!(crel(lhs, rhs) <= 1e-12, "[{a}, {b}]: {lhs} vs {rhs}");
    }
}

#[test]
fn affine_invariance_rational_family() {
    let (al, be, nu, mu, la, p) = (1.1, 0.7, 0.4, -0.2, 0.6, Complex64::new(-0.8, 0.5));
    let unit = direct(&EulerIntegralSpec::theorem4(al, be, 0.0, 1.0, nu, mu, la, p).unwrap());
    for (a, b) in [(-1.0, 3.0), (2.0, 2.5)] {
        let wide = direct(&EulerIntegralSpec::theorem4(al, be, a, b, nu, mu, la, p).unwrap());
        assert!(crel(wide * (b - a), unit) <= 1e-12);
    }
}

fn derivative_at_zero(make: impl Fn(Complex64) -> EulerIntegralSpec) -> Complex64 {
    let h = 1e-5;
    (direct(&make(c(h))) - direct(&make(c(-h)))) / (2.0 * h)
}

/// First-order coefficient of the inner normalized Wright function.
fn inner_slope(a1: f64, a2: f64, b1: f64, lambda: f64) -> f64 {
    a1 * a2 / (b1 * (b1 + 1.0) * gamma_fn(1.0 + lambda).unwrap())
}

fn fact(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

#[test]
fn first_order_in_p() {
    let (al, be, la) = (1.2, 0.8, 0.7);
    let d = derivative_at_zero(|p| EulerIntegralSpec::theorem3(al, be, 0.5, 0.0, 1.0, 0.0, 1.0, la, p).unwrap());
    let want = inner_slope(al, be, al + be, la);
    assert!(crel(d, c(want)) <= 1e-6, "{d} vs {want}");

    let (nu, mu) = (0.5, 1.5);
    let d = derivative_at_zero(|p| EulerIntegralSpec::theorem4(al, be, 0.0, 1.0, nu, mu, la, p).unwrap());
    let want = (nu + 1.0f64).powf(-al) * (mu + 1.0f64).powf(-be) * inner_slope(al, be, al + be, la) / ((nu + 1.0) * (mu + 1.0));
    assert!(crel(d, c(want)) <= 1e-6, "{d} vs {want}");

    let (a1, a2, x1, x2) = (0.5, 0.9, 0.3, -0.25);
    let d = derivative_at_zero(|p| EulerIntegralSpec::theorem1(al, be, a1, a2, x1, x2, la, p).unwrap());
    let mut want = 0.0;
    for m in 0..80u32 {
        for n in 0..80u32 {
            let k = m + n;
            let kf = k as f64;
            want += pochhammer(al, k).unwrap() / pochhammer(al + be, k).unwrap()
                * (pochhammer(a1, m).unwrap() / fact(m) * x1.powi(m as i32))
                * (pochhammer(a2, n).unwrap() / fact(n) * x2.powi(n as i32))
                * inner_slope(al + kf, be, al + be + kf, la);
        }
    }
    assert!(crel(d, c(want)) <= 1e-6, "{d} vs {want}");
}

#[test]
fn refinement_is_monotone_for_catalog_integrands() {
    let policy = qp();
    for template in default_catalog() {
        for params in template.grid(&Default::default()) {
            let Ok(case) = template.build(&params) else { continue };
            let r = case.oracle(&policy, &sp()).unwrap();
            let tail = &r.level_errors[policy.min_levels - 1..];
            assert!(
                tail.windows(2).all(|w| w[1] <= w[0]),
                "{} {:?}: {:?}",
                template.name,
                params,
                r.level_errors
            );
        }
    }
}

#[test]
fn lambda_zero_outside_disk_is_a_domain_error() {
    let mut spec = EulerIntegralSpec::theorem4(1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, c(3.0)).unwrap();
    assert!(evaluate_integral_direct(&spec, &qp(), &sp()).is_ok());
    spec.p = c(5.0);
    assert!(matches!(evaluate_integral_direct(&spec, &qp(), &sp()), Err(Error::Domain(_))));
}

#[test]
fn direct_matches_closed_form_example() {
    let s = EulerIntegralSpec::theorem1(1.2, 0.8, 0.5, 0.9, 0.3, -0.25, 1.0, c(0.7)).unwrap();
    let cf = closed_form(&s, &sp()).unwrap().value;
    assert!(crel(direct(&s), cf) <= 1e-8);
}
