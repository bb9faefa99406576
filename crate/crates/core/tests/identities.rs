use num_complex::Complex64;
use proptest::prelude::*;
use wrightlab::identities::{
    closed_form, closed_form_lauricella, closed_form_lauricella_unnormalized, closed_form_theorem1,
    closed_form_theorem2, closed_form_theorem3, closed_form_theorem4, example42_closed_form, example42_lambda1_form,
    example45_kummer_form, generating_integral_closed_form, reduce_lambda1, EulerIntegralSpec, GeneratingIntegralSpec,
    GeneratorSpec,
};
use wrightlab::multivar::{appell_f1, appell_f3, lauricella_fd};
use wrightlab::quadrature::{evaluate_generating_integral_direct, evaluate_integral_direct, QuadraturePolicy};
use wrightlab::scalar::beta_fn;
use wrightlab::series::{hyper_pfq, wright_psi_normalized, SeriesPolicy, WrightSpec};

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

fn oracle(spec: &EulerIntegralSpec) -> Complex64 {
    evaluate_integral_direct(spec, &qp(), &sp()).unwrap().value
}

fn closed(spec: &EulerIntegralSpec) -> Complex64 {
    closed_form(spec, &sp()).unwrap().value
}

fn assert_close(what: &str, got: Complex64, want: Complex64, tol: f64) {
    let e = crel(got, want);
    assert!(e <= tol, "{what}: {got} vs {want} (rel {e:e})");
}

#[test]
fn first_family_matches_quadrature() {
    let s = EulerIntegralSpec::theorem1(1.2, 0.8, 0.5, 0.9, 0.3, -0.25, 1.0, c(0.7)).unwrap();
    assert_close("T1", closed(&s), oracle(&s), 1e-8);
}

#[test]
fn first_family_at_origin_is_a_single_wright_sum() {
    let s = EulerIntegralSpec::theorem1(1.2, 0.8, 0.5, 0.9, 0.0, 0.0, 0.7, c(0.9)).unwrap();
    let w = WrightSpec::new(vec![(1.2, 1.0), (0.8, 1.0), (1.0, 1.0)], vec![(2.0, 2.0), (1.0, 0.7)]).unwrap();
    assert_close("T1 x=0", closed(&s), wright_psi_normalized(&w, c(0.9), &sp()).unwrap().value, 1e-14);
}

#[test]
fn second_family_matches_quadrature() {
    let s = EulerIntegralSpec::theorem2(1.5, 1.1, 0.4, 0.6, 0.2, 0.3, 0.5, c(-0.9)).unwrap();
    assert_close("T2", closed(&s), oracle(&s), 1e-8);
}

#[test]
fn second_family_without_second_factor_matches_first() {
    let a = closed_form_theorem2(1.5, 1.1, 0.4, 0.0, 0.2, 0.3, 0.5, c(-0.9), &sp()).unwrap().value;
    let b = closed_form_theorem1(1.5, 1.1, 0.4, 0.0, 0.2, 0.3, 0.5, c(-0.9), &sp()).unwrap().value;
    assert_close("T2 α2=0", a, b, 1e-13);
}

#[test]
fn linear_factor_family_matches_quadrature() {
    let s = EulerIntegralSpec::theorem3(0.9, 1.3, -0.7, 0.0, 1.0, -0.4, 1.0, 1.0, c(0.5)).unwrap();
    assert_close("T3", closed(&s), oracle(&s), 1e-8);
    let s = EulerIntegralSpec::theorem3(0.9, 1.3, 1.6, -1.0, 2.5, 0.15, 1.2, 0.6, Complex64::new(0.1, -0.2)).unwrap();
    assert_close("T3 shifted", closed(&s), oracle(&s), 1e-8);
}

#[test]
fn linear_factor_family_with_constant_factor() {
    let s = EulerIntegralSpec::theorem3(0.9, 1.3, -0.7, 0.0, 1.0, 0.0, 1.0, 1.0, c(0.5)).unwrap();
    let w = WrightSpec::new(vec![(0.9, 1.0), (1.3, 1.0), (1.0, 1.0)], vec![(2.2, 2.0), (1.0, 1.0)]).unwrap();
    assert_close("T3 u=0", closed(&s), wright_psi_normalized(&w, c(0.5), &sp()).unwrap().value, 1e-14);
}

/// The series written without the χ(a)^γ prefactor only agrees with the
/// integral when au + v = 1.
#[test]
fn omitting_chi_prefactor_disagrees_with_quadrature() {
    let (al, be, g, u, v) = (0.9, 1.3, -0.7, -0.4, 2.0);
    let s = EulerIntegralSpec::theorem3(al, be, g, 0.0, 1.0, u, v, 1.0, c(0.5)).unwrap();
    let full = closed(&s);
    let bare = full / v.powf(g);
    assert_close("T3 full", full, oracle(&s), 1e-8);
    assert!(crel(bare, oracle(&s)) > 0.1);
}

/// With γ = −α₁, u = −x₁, v = 1 the inner powers are (x₁)^m, not (−x₁)^m.
#[test]
fn sign_of_power_series_variable() {
    let (al, be, a1, x1, p) = (0.9, 1.3, 0.7, 0.4, c(0.5));
    let s = EulerIntegralSpec::theorem3(al, be, -a1, 0.0, 1.0, -x1, 1.0, 1.0, p).unwrap();
    let want = oracle(&s);
    let series = |sign: f64| {
        let mut coef = 1.0;
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..200 {
            let mf = m as f64;
            let w = WrightSpec::new(
                vec![(al + mf, 1.0), (be, 1.0), (1.0, 1.0)],
                vec![(al + be + mf, 2.0), (1.0, 1.0)],
            )
            .unwrap();
            acc += coef * wright_psi_normalized(&w, p, &sp()).unwrap().value;
            coef *= (a1 + mf) * (al + mf) / ((al + be + mf) * (mf + 1.0)) * (sign * x1);
        }
        acc
    };
    assert_close("x1^m", series(1.0), want, 1e-10);
    assert!(crel(series(-1.0), want) > 1e-2);
}

#[test]
fn linear_factor_integer_exponent_terminates() {
    let s = EulerIntegralSpec::theorem3(0.9, 1.3, 2.0, 0.0, 1.0, 3.0, 1.0, 0.5, c(0.4)).unwrap();
    assert_close("T3 γ=2", closed(&s), oracle(&s), 1e-10);
}

#[test]
fn rational_family_examples() {
    for (nu, mu) in [(0.0, 0.0), (0.5, 2.0), (-0.3, 1.1)] {
        let s = EulerIntegralSpec::theorem4(1.1, 0.7, 0.0, 2.0, nu, mu, 0.8, c(0.0)).unwrap();
        let want = (nu + 1.0f64).powf(-1.1) * (mu + 1.0f64).powf(-0.7) / 2.0;
        assert_close("T4 p=0", closed(&s), c(want), 1e-12);
        assert_close("T4 p=0 oracle", oracle(&s), c(want), 1e-12);
    }
    let s = EulerIntegralSpec::theorem4(1.1, 0.7, -1.0, 3.0, 0.0, 0.0, 0.8, c(0.9)).unwrap();
    let w = WrightSpec::new(vec![(1.1, 1.0), (0.7, 1.0), (1.0, 1.0)], vec![(1.8, 2.0), (1.0, 0.8)]).unwrap();
    assert_close("T4 ν=μ=0", closed(&s), wright_psi_normalized(&w, c(0.9), &sp()).unwrap().value / 4.0, 1e-14);
}

#[test]
fn rational_family_kummer_form() {
    let (al, nu, mu, p) = (0.8, 0.4, 1.5, c(1.3));
    let s = EulerIntegralSpec::theorem4(al, al, 0.0, 1.0, nu, mu, 1.0, p).unwrap();
    let k = example45_kummer_form(al, nu, mu, p, &sp()).unwrap().value;
    let scale = (nu + 1.0) * (mu + 1.0);
    let direct = scale.powf(-al) * hyper_pfq(&[al], &[al + 0.5], p / (4.0 * scale), &sp()).unwrap().value;
    assert_close("kummer", k, direct, 1e-14);
    assert_close("T4 vs kummer", closed(&s), k, 1e-10);
    assert_close("kummer vs oracle", k, oracle(&s), 1e-9);
}

#[test]
fn lauricella_three_variables_matches_quadrature() {
    let s = EulerIntegralSpec::lauricella(1.1, 0.9, vec![0.3, 0.5, 0.7], vec![0.2, -0.15, 0.3], 1.0, c(0.8)).unwrap();
    let want = oracle(&s);
    assert_close("FD n=3", closed(&s), want, 1e-8);
    let un = closed_form_lauricella_unnormalized(1.1, 0.9, &[0.3, 0.5, 0.7], &[0.2, -0.15, 0.3], 1.0, c(0.8), &sp())
        .unwrap()
        .value;
    assert_close("FD n=3 unnormalized", un, want, 1e-8);
}

#[test]
fn binomial_generating_integral() {
    let spec = GeneratingIntegralSpec::new(GeneratorSpec::Binomial { a: 0.7, x: 1.0 }, 0.8, 2.1, 1.0, 1.0, 1.0, c(0.6), c(0.3))
        .unwrap();
    let cf = generating_integral_closed_form(&spec, &sp()).unwrap().value;
    let q = evaluate_generating_integral_direct(&spec, &qp(), &sp()).unwrap().value;
    assert_close("binomial", cf, q, 1e-8);
}

#[test]
fn gegenbauer_at_one_is_doubled_binomial() {
    let g = GeneratingIntegralSpec::new(GeneratorSpec::GegenbauerGen { a: 0.35, x: 1.0 }, 0.8, 2.1, 1.0, 1.0, 1.0, c(0.6), c(0.3))
        .unwrap();
    let b = GeneratingIntegralSpec::new(GeneratorSpec::Binomial { a: 0.7, x: 1.0 }, 0.8, 2.1, 1.0, 1.0, 1.0, c(0.6), c(0.3))
        .unwrap();
    let x = generating_integral_closed_form(&g, &sp()).unwrap().value;
    let y = generating_integral_closed_form(&b, &sp()).unwrap().value;
    assert_close("gegenbauer", x, y, 1e-12);
}

#[test]
fn lambda_one_reduction() {
    let v = reduce_lambda1(1.0, 1.0, c(1.0), &sp()).unwrap().value;
    assert_close("(1,1)", v, hyper_pfq(&[1.0], &[1.5], c(0.25), &sp()).unwrap().value, 1e-14);
    let w = WrightSpec::new(vec![(1.3, 1.0), (0.9, 1.0), (1.0, 1.0)], vec![(2.2, 2.0), (1.0, 1.0)]).unwrap();
    let v = reduce_lambda1(1.3, 0.9, c(0.5), &sp()).unwrap().value;
    assert_close("(1.3,0.9)", v, wright_psi_normalized(&w, c(0.5), &sp()).unwrap().value, 1e-12);
}

#[test]
fn two_factor_example_three_ways() {
    let (al, be, a1, a2, x1, p) = (1.0, 1.4, 0.3, 0.4, 0.25, c(0.9));
    let series = example42_closed_form(al, be, a1, a2, x1, 1.0, p, &sp()).unwrap().value;
    let kummer = example42_lambda1_form(al, be, a1, a2, x1, p, &sp()).unwrap().value;
    let s = EulerIntegralSpec::theorem1(al, be, a1 + a2, 0.0, x1, 0.0, 1.0, p).unwrap();
    let q = oracle(&s) / (1.0 - x1);
    let s2 = EulerIntegralSpec::theorem2(al, be, a1, a2, x1, x1 / (x1 - 1.0), 1.0, p).unwrap();
    assert_close("second-family route", oracle(&s2) / (1.0 - x1).powf(1.0 + a2), q, 1e-9);
    assert_close("series vs 2F2", series, kummer, 1e-9);
    assert_close("series vs oracle", series, q, 1e-9);
    assert_close("2F2 vs oracle", kummer, q, 1e-9);
}

#[test]
fn catalog_agrees_with_oracle() {
    for template in wrightlab::identities::default_catalog() {
        for params in template.grid(&Default::default()) {
            let case = match template.build(&params) {
                Ok(case) => case,
                Err(e) if e.is_domain() => continue,
                Err(e) => panic!("{}: {e}", template.name),
            };
            let cf = case.closed_form(&sp()).unwrap().value;
            let q = case.oracle(&qp(), &sp()).unwrap().value;
            assert_close(&format!("{} {:?}", template.name, params), cf, q, 1e-8);
        }
    }
}

fn complex_p(r: f64, th: f64) -> Complex64 {
    Complex64::from_polar(r, th)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn p_zero_collapse(
        al in 0.2f64..3.0, be in 0.2f64..3.0,
        a1 in 0.0f64..2.0, a2 in 0.0f64..2.0, a3 in 0.0f64..2.0,
        x1 in -0.8f64..0.8, x2 in -0.8f64..0.8, x3 in -0.8f64..0.8,
        lambda in 0.0f64..2.5,
        g in -2.0f64..2.0, u in -0.4f64..0.4, nu in -0.5f64..2.0, mu in -0.5f64..2.0,
    ) {
        let p = c(0.0);
        let t1 = closed_form_theorem1(al, be, a1, a2, x1, x2, lambda, p, &sp()).unwrap().value;
        prop_assert!(crel(t1, appell_f1(al, a1, a2, al + be, c(x1), c(x2), &sp()).unwrap().value) <= 1e-11);
        let t2 = closed_form_theorem2(al, be, a1, a2, x1, x2, lambda, p, &sp()).unwrap().value;
        prop_assert!(crel(t2, appell_f3(al, be, a1, a2, al + be, c(x1), c(x2), &sp()).unwrap().value) <= 1e-11);
        let (a, b, v) = (-0.5, 1.5, 1.0);
        let t3 = closed_form_theorem3(al, be, g, a, b, u, v, lambda, p, &sp()).unwrap().value;
        let chi_a: f64 = a * u + v;
        let w = -u * (b - a) / chi_a;
        let gauss = hyper_pfq(&[-g, al], &[al + be], c(w), &sp()).unwrap().value
            * ((b - a).powf(al + be - 1.0) * chi_a.powf(g));
        prop_assert!(crel(t3, gauss) <= 1e-11);
        let t4 = closed_form_theorem4(al, be, a, b, nu, mu, lambda, p, &sp()).unwrap().value;
        let beta_type = (nu + 1.0).powf(-al) * (mu + 1.0).powf(-be) / (b - a);
        prop_assert!(crel(t4, c(beta_type)) <= 1e-11);
        let xs = [x1, x2, x3];
        let alphas = [a1, a2, a3];
        let tn = closed_form_lauricella(al, be, &alphas, &xs, lambda, p, &sp()).unwrap().value;
        let cx: Vec<_> = xs.iter().map(|&x| c(x)).collect();
        prop_assert!(crel(tn, lauricella_fd(al, &alphas, al + be, &cx, &sp()).unwrap().value) <= 1e-11);
    }

    #[test]
    fn lambda_one_collapse(al in 0.2f64..3.0, nu in -0.5f64..2.0, mu in -0.5f64..2.0, r in 0.0f64..2.0, th in 0.0f64..6.3) {
        let p = complex_p(r, th);
        let t4 = closed_form_theorem4(al, al, 0.0, 1.0, nu, mu, 1.0, p, &sp()).unwrap().value;
        let k = example45_kummer_form(al, nu, mu, p, &sp()).unwrap().value;
        prop_assert!(crel(t4, k) <= 1e-10);
    }

    #[test]
    fn two_variable_lauricella_is_first_family(
        al in 0.2f64..3.0, be in 0.2f64..3.0,
        a1 in 0.0f64..2.0, a2 in 0.0f64..2.0,
        x1 in -0.8f64..0.8, x2 in -0.8f64..0.8,
        lambda in 0.0f64..2.5, r in 0.0f64..2.0, th in 0.0f64..6.3,
    ) {
        let p = complex_p(r, th);
        let l = closed_form_lauricella(al, be, &[a1, a2], &[x1, x2], lambda, p, &sp()).unwrap().value;
        let t = closed_form_theorem1(al, be, a1, a2, x1, x2, lambda, p, &sp()).unwrap().value;
        prop_assert!(crel(l, t) <= 1e-12, "{} vs {}", l, t);
    }

    #[test]
    fn first_family_symmetry(
        al in 0.2f64..3.0, be in 0.2f64..3.0,
        a1 in 0.0f64..2.0, a2 in 0.0f64..2.0,
        x1 in -0.8f64..0.8, x2 in -0.8f64..0.8,
        lambda in 0.0f64..2.5, r in 0.0f64..2.0, th in 0.0f64..6.3,
    ) {
        let p = complex_p(r, th);
        let u = closed_form_theorem1(al, be, a1, a2, x1, x2, lambda, p, &sp()).unwrap().value;
        let v = closed_form_theorem1(al, be, a2, a1, x2, x1, lambda, p, &sp()).unwrap().value;
        prop_assert!(crel(u, v) <= 1e-12, "{} vs {}", u, v);
    }

    #[test]
    fn rational_family_scale_invariance(
        al in 0.2f64..3.0, be in 0.2f64..3.0, nu in -0.5f64..2.0, mu in -0.5f64..2.0,
        lambda in 0.0f64..2.5, r in 0.0f64..2.0, th in 0.0f64..6.3,
    ) {
        let p = complex_p(r, th);
        let scaled: Vec<_> = [(0.0, 1.0), (-1.0, 3.0), (2.0, 2.5)]
            .iter()
            .map(|&(a, b)| closed_form_theorem4(al, be, a, b, nu, mu, lambda, p, &sp()).unwrap().value * (b - a))
            .collect();
        prop_assert!(crel(scaled[1], scaled[0]) <= 1e-12);
        prop_assert!(crel(scaled[2], scaled[0]) <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closed_forms_match_quadrature(
        al in 0.3f64..3.0, be in 0.3f64..3.0,
        a1 in 0.0f64..1.5, a2 in 0.0f64..1.5,
        x1 in -0.7f64..0.7, x2 in -0.7f64..0.7,
        lambda in 0.0f64..2.5, r in 0.0f64..2.0, th in 0.0f64..6.3,
        g in -1.5f64..2.0, u in -0.4f64..0.4, nu in -0.5f64..2.0, mu in -0.5f64..2.0,
    ) {
        let p = complex_p(r, th);
        let specs = [
            EulerIntegralSpec::theorem1(al, be, a1, a2, x1, x2, lambda, p).unwrap(),
            EulerIntegralSpec::theorem2(al, be, a1, a2, x1, x2, lambda, p).unwrap(),
            EulerIntegralSpec::theorem3(al, be, g, 0.0, 1.0, u, 1.0, lambda, p).unwrap(),
            EulerIntegralSpec::theorem4(al, be, 0.0, 1.0, nu, mu, lambda, p).unwrap(),
            EulerIntegralSpec::lauricella(al, be, vec![a1, a2, 0.5], vec![x1, x2, -0.3], lambda, p).unwrap(),
        ];
        for s in &specs {
            let e = crel(closed(s), oracle(s));
            prop_assert!(e <= 1e-8, "{}: rel {:e}", s.family_name(), e);
        }
    }
}

#[test]
fn beta_normalization_matches_unnormalized_forms() {
    let (al, be) = (1.1, 0.9);
    let n = closed_form_lauricella(al, be, &[0.3, 0.5], &[0.2, -0.15], 0.7, c(0.4), &sp()).unwrap().value;
    let u = closed_form_lauricella_unnormalized(al, be, &[0.3, 0.5], &[0.2, -0.15], 0.7, c(0.4), &sp()).unwrap().value;
    assert_close("normalized", n, u, 1e-13);
    assert!(beta_fn(al, be).unwrap() > 0.0);
}
