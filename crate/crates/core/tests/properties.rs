use std::f64::consts::PI;

use partheta::characters::{character, gauss_sum};
use partheta::hyper::{gauss_2f1_series, kummer_1f1};
use partheta::identities::{delta_kernel, erf1_dual, erf1_side, nabla_kernel};
use partheta::quad::{bose, QuadConfig};
use partheta::specfun::{erf, gamma};
use partheta::C64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kummer_transform(a in -3.0f64..3.0, ai in -2.0f64..2.0, cc in 0.3f64..4.0, wr in -6.0f64..6.0, wi in -4.0f64..4.0) {
        let (a, cc, w) = (c(a, ai), c(cc, 0.0), c(wr, wi));
        let lhs = kummer_1f1(a, cc, w).unwrap();
        let rhs = w.exp() * kummer_1f1(cc - a, cc, -w).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(rhs.norm()).max(1.0));
    }

    #[test]
    fn pfaff(a in -2.0f64..2.0, b in -2.0f64..2.0, cc in 0.5f64..3.0, z in -0.45f64..0.45) {
        let (a, b, cc, z) = (c(a, 0.0), c(b, 0.0), c(cc, 0.0), c(z, 0.0));
        let lhs = gauss_2f1_series(a, b, cc, z).unwrap();
        let rhs = (1.0 - z).powc(-a) * gauss_2f1_series(a, cc - b, cc, z / (z - 1.0)).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * lhs.norm().max(1.0));
    }

    #[test]
    fn kernel_inversion(x in 0.2f64..5.0, zr in -2.0f64..2.0, zi in -2.0f64..2.0, t in -20.0f64..20.0) {
        let (z, s) = (c(zr, zi), c(0.5, t / 2.0));
        let d1 = delta_kernel(x, z, s).unwrap();
        let d2 = delta_kernel(1.0 / x, c(0.0, 1.0) * z, s).unwrap();
        prop_assert!((d1 - d2).norm() <= 1e-10 * d1.norm().max(1e-300));
        let n1 = nabla_kernel(x, z, s).unwrap();
        let n2 = nabla_kernel(1.0 / x, c(0.0, 1.0) * z, s).unwrap();
        prop_assert!((n1 - n2).norm() <= 1e-10 * n1.norm().max(1e-300));
    }

    #[test]
    fn kernel_symmetry(x in 0.1f64..10.0, zr in -3.0f64..3.0, zi in -3.0f64..3.0, sr in -2.0f64..3.0, si in -10.0f64..10.0) {
        let (z, s) = (c(zr, zi), c(sr, si));
        let d1 = delta_kernel(x, z, s).unwrap();
        let d2 = delta_kernel(x, z, 1.0 - s).unwrap();
        prop_assert!((d1 - d2).norm() <= 1e-12 * d1.norm().max(1e-300));
        let n1 = nabla_kernel(x, z, s).unwrap();
        let n2 = nabla_kernel(x, z, 1.0 - s).unwrap();
        prop_assert!((n1 - n2).norm() <= 1e-12 * n1.norm().max(1e-300));
    }

    #[test]
    fn cotangent_sum(t in 0.05f64..4.0) {
        let n_max = 200_000u64;
        let mut s = 0.0;
        for n in (1..=n_max).rev() {
            s += 1.0 / (t * t + (n * n) as f64);
        }
        // sum_{n > N} 1/(t^2+n^2) = 1/N - 1/(2N^2) + O(N^{-3})
        let nf = n_max as f64;
        s += 1.0 / nf - 0.5 / (nf * nf);
        let closed = PI / t * (bose(t) - 1.0 / (2.0 * PI * t) + 0.5);
        prop_assert!((s - closed).abs() < 1e-10);
    }

    #[test]
    fn reflection(re in -3.0f64..3.0, im in 0.05f64..5.0) {
        let s = c(re, im);
        let lhs = gamma(s).unwrap() * gamma(1.0 - s).unwrap();
        let rhs = PI / (s * PI).sin();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm());
    }

    #[test]
    fn erf_odd(re in -4.0f64..4.0, im in -3.0f64..3.0) {
        let z = c(re, im);
        prop_assert!((erf(z).unwrap() + erf(-z).unwrap()).norm() <= 1e-13 * erf(z).unwrap().norm().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn erf_side_inversion(alpha in 0.3f64..3.0, zr in 0.0f64..2.0, zi in -1.0f64..1.0) {
        let z = c(zr, zi);
        let cfg = QuadConfig::default();
        let a = erf1_side(alpha, z, &cfg).unwrap();
        let b = erf1_dual(1.0 / alpha, z, &cfg).unwrap();
        prop_assert!((a.value - b.value).norm() <= 1e-8 + a.err + b.err);
    }
}

#[test]
fn gauss_sum_moduli() {
    for q in [3u32, 4, 5, 8, 12] {
        let chi = character(q).unwrap();
        let g = gauss_sum(&chi);
        let want = if chi.is_even() {
            c((q as f64).sqrt(), 0.0)
        } else {
            c(0.0, (q as f64).sqrt())
        };
        assert!((g - want).norm() < 1e-13, "q = {q}");
    }
}
