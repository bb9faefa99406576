use num_complex::Complex64;
use proptest::prelude::*;
use wrightlab::multivar::{appell_f1, appell_f3, gegenbauer, gegenbauer_sequence, humbert_phi2, lauricella_fd};
use wrightlab::quadrature::{tanh_sinh_integrate_nodes, QuadraturePolicy};
use wrightlab::scalar::{beta_fn, pochhammer};
use wrightlab::series::{hyper_pfq, SeriesPolicy};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn crel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn pol() -> SeriesPolicy {
    SeriesPolicy::default()
}

fn fact(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Rectangular brute-force sum over m, n <= 60 with directly computed
/// Pochhammer symbols.
fn f1_rectangular(al: f64, b: f64, bp: f64, g: f64, x: f64, y: f64) -> f64 {
    let mut s = 0.0;
    for m in 0..=60u32 {
        for n in 0..=60u32 {
            let coef = pochhammer(al, m + n).unwrap() / pochhammer(g, m + n).unwrap()
                * (pochhammer(b, m).unwrap() / fact(m))
                * (pochhammer(bp, n).unwrap() / fact(n));
            s += coef * x.powi(m as i32) * y.powi(n as i32);
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn f1_argument_symmetry(
        al in 0.1f64..3.0, b in 0.1f64..3.0, bp in 0.1f64..3.0, g in 0.5f64..4.0,
        x in -0.9f64..0.9, y in -0.9f64..0.9,
    ) {
        let u = appell_f1(al, b, bp, g, c(x), c(y), &pol()).unwrap().value;
        let v = appell_f1(al, bp, b, g, c(y), c(x), &pol()).unwrap().value;
        prop_assert!(crel(u, v) <= 1e-12);
    }

    #[test]
    fn gegenbauer_generating_function(a in 0.3f64..2.0, x in -1.0f64..1.0, t in -0.4f64..0.4) {
        let target = (1.0 - 2.0 * x * t + t * t).powf(-a);
        let coeffs = gegenbauer_sequence(400, a, x);
        let mut sum = 0.0;
        let mut small = 0;
        for (n, cn) in coeffs.iter().enumerate() {
            let term = cn * t.powi(n as i32);
            sum += term;
            small = if term.abs() <= 1e-14 * sum.abs() { small + 1 } else { 0 };
            if small >= 3 {
                break;
            }
        }
        prop_assert!((sum - target).abs() <= 1e-10 * target.abs());
    }

    #[test]
    fn lauricella_degeneracy(
        al in 0.1f64..3.0, g in 0.5f64..4.0,
        a1 in 0.1f64..2.0, a2 in 0.1f64..2.0,
        x1 in -0.9f64..0.9, x2 in -0.9f64..0.9, x2b in -0.9f64..0.9,
    ) {
        let one = lauricella_fd(al, &[a1, a2, 0.7], g, &[c(0.0); 3], &pol()).unwrap().value;
        prop_assert_eq!(one, c(1.0));
        let u = lauricella_fd(al, &[a1, 0.0], g, &[c(x1), c(x2)], &pol()).unwrap().value;
        let v = lauricella_fd(al, &[a1, 0.0], g, &[c(x1), c(x2b)], &pol()).unwrap().value;
        prop_assert!(crel(u, v) <= 1e-13);
    }

    #[test]
    fn diagonal_matches_rectangular(
        al in 0.1f64..2.0, b in 0.1f64..2.0, bp in 0.1f64..2.0, g in 0.5f64..3.0,
        x in -0.5f64..0.5, y in -0.5f64..0.5,
    ) {
        let d = appell_f1(al, b, bp, g, c(x), c(y), &pol()).unwrap().value;
        let r = f1_rectangular(al, b, bp, g, x, y);
        prop_assert!(crel(d, c(r)) <= 1e-11);
    }
}

#[test]
fn single_index_reductions() {
    let f = hyper_pfq(&[0.7, 0.4], &[2.0], c(0.3), &pol()).unwrap().value;
    assert!(crel(appell_f1(0.7, 0.4, 1.1, 2.0, c(0.3), c(-0.2), &pol()).unwrap().value, f) > 1e-3);
    assert!(crel(appell_f1(0.7, 0.4, 0.0, 2.0, c(0.3), c(-0.2), &pol()).unwrap().value, f) < 1e-14);
    assert!(crel(lauricella_fd(0.7, &[0.4], 2.0, &[c(0.3)], &pol()).unwrap().value, f) < 1e-14);
    let f = hyper_pfq(&[0.8], &[1.5], c(0.4), &pol()).unwrap().value;
    assert!(crel(humbert_phi2(0.8, 0.0, 1.5, c(0.4), c(0.7), &pol()).unwrap().value, f) < 1e-14);
}

#[test]
fn lauricella_two_variables_is_f1() {
    let xs = [c(0.45), c(-0.3)];
    let a = lauricella_fd(0.7, &[0.4, 1.3], 2.6, &xs, &pol()).unwrap().value;
    let b = appell_f1(0.7, 0.4, 1.3, 2.6, xs[0], xs[1], &pol()).unwrap().value;
    assert!(crel(a, b) < 1e-14);
}

fn q() -> QuadraturePolicy {
    QuadraturePolicy::default()
}

#[test]
fn f1_against_its_integral() {
    // B(α, γ−α) F1(α; β, β′; γ; x, y) = ∫ t^{α−1}(1−t)^{γ−α−1}(1−xt)^{−β}(1−yt)^{−β′} dt
    let (al, b, bp, g, x, y) = (0.7, 0.4, 1.1, 2.0, 0.3, -0.2);
    let i = tanh_sinh_integrate_nodes(
        |n| {
            let t = n.from_a;
            Ok(c(t.powf(al - 1.0) * n.to_b.powf(g - al - 1.0) * (1.0 - x * t).powf(-b) * (1.0 - y * t).powf(-bp)))
        },
        0.0,
        1.0,
        &q(),
    )
    .unwrap()
    .value
        / beta_fn(al, g - al).unwrap();
    let f = appell_f1(al, b, bp, g, c(x), c(y), &pol()).unwrap().value;
    assert!(crel(f, i) < 1e-12, "{f} vs {i}");
}

#[test]
fn f3_against_its_integral() {
    // with γ = α + β: B(α,β) F3(α, β, α1, α2; α+β; x, y) = ∫ t^{α−1}(1−t)^{β−1}(1−xt)^{−α1}(1−y(1−t))^{−α2} dt
    let (al, be, a1, a2, x, y) = (0.9, 0.6, 0.5, 1.2, 0.25, 0.35);
    let i = tanh_sinh_integrate_nodes(
        |n| {
            Ok(c(n.from_a.powf(al - 1.0) * n.to_b.powf(be - 1.0) * (1.0 - x * n.from_a).powf(-a1) * (1.0 - y * n.to_b).powf(-a2)))
        },
        0.0,
        1.0,
        &q(),
    )
    .unwrap()
    .value
        / beta_fn(al, be).unwrap();
    let f = appell_f3(al, be, a1, a2, al + be, c(x), c(y), &pol()).unwrap().value;
    assert!(crel(f, i) < 1e-12, "{f} vs {i}");
}

#[test]
fn lauricella_against_its_integral() {
    let (al, g) = (0.6, 2.2);
    let alphas = [0.3, 0.5, 0.7];
    let xs = [0.2, -0.15, 0.3];
    let i = tanh_sinh_integrate_nodes(
        |n| {
            let t = n.from_a;
            let chi: f64 = alphas.iter().zip(&xs).map(|(a, x)| (1.0 - x * t).powf(-a)).product();
            Ok(c(t.powf(al - 1.0) * n.to_b.powf(g - al - 1.0) * chi))
        },
        0.0,
        1.0,
        &q(),
    )
    .unwrap()
    .value
        / beta_fn(al, g - al).unwrap();
    let cx: Vec<_> = xs.iter().map(|&x| c(x)).collect();
    let f = lauricella_fd(al, &alphas, g, &cx, &pol()).unwrap().value;
    assert!(crel(f, i) < 1e-12, "{f} vs {i}");
}

#[test]
fn humbert_generating_identity() {
    // Φ2[a, a; b; x, t] = Σ (a)_n/(b)_n ₁F₁(a; b+n; x) t^n/n!, summed independently
    let (a, b, x, t): (f64, f64, f64, f64) = (0.8, 1.5, 0.4, 0.7);
    let mut sum = 0.0;
    for n in 0..60u32 {
        let f = hyper_pfq(&[a], &[b + n as f64], c(x), &pol()).unwrap().value.re;
        sum += pochhammer(a, n).unwrap() / pochhammer(b, n).unwrap() * f * t.powi(n as i32) / fact(n);
    }
    let phi = humbert_phi2(a, a, b, c(x), c(t), &pol()).unwrap().value;
    assert!(crel(phi, c(sum)) < 1e-13);
}

#[test]
fn gegenbauer_examples() {
    assert_eq!(gegenbauer(0, 0.7, 0.2), 1.0);
    assert!((gegenbauer(1, 1.5, 0.3) - 0.9).abs() < 1e-15);
    for n in 0..30u32 {
        let expect = pochhammer(1.4, n).unwrap() / fact(n);
        assert!((gegenbauer(n as usize, 0.7, 1.0) - expect).abs() <= 1e-12 * expect);
    }
}
