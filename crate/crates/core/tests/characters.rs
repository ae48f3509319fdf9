use std::f64::consts::PI;

use partheta::characters::{
    char_exp_sum, char_reciprocal_series, character, character_with_parity, dirichlet_l, gauss_sum,
    kronecker, xi_chi, xi_chi_raw,
};
use partheta::specfun::gamma;
use partheta::{Error, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Independent L(s, chi): periodic Hurwitz sums with an Euler-Maclaurin tail per class.
fn l_oracle(s: C64, q: u32, chi: &[i8]) -> C64 {
    let n = 4000usize;
    let mut acc = c(0.0, 0.0);
    for r in 1..q as usize {
        if chi[r] == 0 {
            continue;
        }
        let a = r as f64 / q as f64;
        let mut h = c(0.0, 0.0);
        for k in 0..n {
            h += (-s * (k as f64 + a).ln()).exp();
        }
        let x = n as f64 + a;
        let p = |e: C64| (-e * x.ln()).exp();
        h += p(s - 1.0) / (s - 1.0) + 0.5 * p(s) + s * p(s + 1.0) / 12.0;
        acc += h * chi[r] as f64;
    }
    (-s * (q as f64).ln()).exp() * acc
}

#[test]
fn character_tables() {
    let t3 = character(3).unwrap();
    assert_eq!(t3.values(), &[0, 1, -1]);
    assert!(!t3.is_even());
    assert_eq!(character(4).unwrap().values(), &[0, 1, 0, -1]);
    assert!(!character(4).unwrap().is_even());
    let t5 = character(5).unwrap();
    assert_eq!(t5.values(), &[0, 1, -1, -1, 1]);
    assert!(t5.is_even());
    assert!(character(8).unwrap().is_even());
    assert!(!character_with_parity(8, true).unwrap().is_even());
    assert!(matches!(character(7), Err(Error::UnsupportedModulus(7))));
}

#[test]
fn kronecker_matches_residues() {
    // for an odd prime p, (n/p) = 1 iff n is a nonzero square mod p
    for p in [3u64, 5, 7, 11, 13] {
        let d = if p % 4 == 1 { p as i64 } else { -(p as i64) };
        for n in 1..p {
            let square = (1..p).any(|x| x * x % p == n);
            assert_eq!(
                kronecker(d, n),
                if square { 1 } else { -1 },
                "p = {p}, n = {n}"
            );
        }
        assert_eq!(kronecker(d, p), 0);
    }
}

#[test]
fn gauss_sums() {
    let g5 = gauss_sum(&character(5).unwrap());
    assert!((g5.re - 5f64.sqrt()).abs() < 1e-14 && g5.im.abs() < 1e-14);
    let g3 = gauss_sum(&character(3).unwrap());
    assert!((g3 - c(0.0, 3f64.sqrt())).norm() < 1e-14);
    let g4 = gauss_sum(&character(4).unwrap());
    assert!((g4 - c(0.0, 2.0)).norm() < 1e-14);
    for q in [8u32, 12] {
        let g = gauss_sum(&character(q).unwrap());
        assert!((g - c((q as f64).sqrt(), 0.0)).norm() < 1e-13);
    }
}

#[test]
fn l_values() {
    let chi4 = character(4).unwrap();
    let catalan = 0.915_965_594_177_219_015;
    assert!((dirichlet_l(c(2.0, 0.0), &chi4).unwrap() - c(catalan, 0.0)).norm() < 1e-14);
    let mut brute = 0.0;
    for n in (0..1_000_000u64).rev() {
        let t = 1.0 / ((2 * n + 1) as f64).powi(2);
        brute += if n % 2 == 0 { t } else { -t };
    }
    assert!((brute - catalan).abs() < 1e-12);
    let chi3 = character(3).unwrap();
    assert!((dirichlet_l(c(0.0, 0.0), &chi3).unwrap() - c(1.0 / 3.0, 0.0)).norm() < 1e-14);
    let s = c(0.5, 7.0);
    let a = dirichlet_l(s, &chi3).unwrap();
    let b = dirichlet_l(s.conj(), &chi3).unwrap();
    assert!((a - b.conj()).norm() < 1e-13);
    for (q, vals) in [(3u32, vec![0i8, 1, -1]), (5, vec![0, 1, -1, -1, 1])] {
        let chi = character(q).unwrap();
        for s in [c(0.5, 0.0), c(0.5, 7.0), c(2.5, -3.0)] {
            let want = l_oracle(s, q, &vals);
            assert!(
                (dirichlet_l(s, &chi).unwrap() - want).norm() < 1e-11,
                "q = {q}, s = {s}"
            );
        }
    }
}

#[test]
fn xi_chi_values() {
    let chi5 = character(5).unwrap();
    let a = xi_chi(c(2.0, 0.0), &chi5).unwrap();
    let b = xi_chi(c(-2.0, 0.0), &chi5).unwrap();
    assert!((a - b).norm() < 1e-13 * a.norm());
    let chi3 = character(3).unwrap();
    let want = (PI / 3.0).powf(-0.75)
        * gamma(c(0.75, 0.0)).unwrap()
        * l_oracle(c(0.5, 0.0), 3, &[0, 1, -1]);
    assert!((xi_chi(c(0.0, 0.0), &chi3).unwrap() - want).norm() < 1e-11);
    let chi4 = character(4).unwrap();
    let raw = xi_chi_raw(c(1.3, 0.0), &chi4).unwrap();
    assert!(raw.im.abs() < 1e-9 * raw.norm());
}

#[test]
fn exponential_sum_closed_form() {
    let chi5 = character(5).unwrap();
    let x = 0.8;
    let mut direct = 0.0;
    let mut n = 1;
    loop {
        let t = (-2.0 * PI * n as f64 * x / 5.0).exp();
        direct += chi5.at(n) as f64 * t;
        if t < 1e-18 {
            break;
        }
        n += 1;
    }
    assert!((char_exp_sum(x, &chi5) - direct).abs() < 1e-13);
    let chi3 = character(3).unwrap();
    let v = char_exp_sum(20.0, &chi3);
    let lead = (-2.0 * PI * 20.0 / 3.0).exp();
    assert!((v / lead - 1.0).abs() < 1e-10);
    // small x goes through the cancellation-free branch
    for x in [1e-3, 0.2, 0.999, 1.001] {
        let chi4 = character(4).unwrap();
        let mut direct = 0.0;
        for n in 1..200_000i64 {
            direct += chi4.at(n) as f64 * (-2.0 * PI * n as f64 * x / 4.0).exp();
        }
        assert!((char_exp_sum(x, &chi4) - direct).abs() < 1e-11, "x = {x}");
    }
}

#[test]
fn odd_character_reciprocal_series() {
    for (q, x) in [(3u32, 1.1), (4, 0.5), (3, 4.0)] {
        let chi = character(q).unwrap();
        let s = char_reciprocal_series(x, &chi, 20_000);
        let want = PI / (q as f64).sqrt() * char_exp_sum(x, &chi);
        assert!(s.bound < 1e-10);
        assert!((s.value - want).abs() < 1e-10, "q = {q}, x = {x}");
    }
}
