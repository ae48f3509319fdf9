use crate::C64;

fn power(d: u64, z: C64) -> C64 {
    (-z * (d as f64).ln()).exp()
}

/// sigma_{-z}(n) = sum over divisors d of n of d^{-z}.
pub fn divisor_sigma(n: u64, z: C64) -> C64 {
    assert!(n >= 1, "divisor_sigma needs n >= 1");
    let mut acc = C64::new(0.0, 0.0);
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += power(d, z);
            let e = n / d;
            if e != d {
                acc += power(e, z);
            }
        }
        d += 1;
    }
    acc
}

/// sigma_{-z}(n) for n = 0..=n_max (entry 0 is zero), by sieving.
pub fn divisor_sigma_table(n_max: usize, z: C64) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); n_max + 1];
    for d in 1..=n_max {
        let p = power(d as u64, z);
        let mut m = d;
        while m <= n_max {
            out[m] += p;
            m += d;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(divisor_sigma(1, C64::new(0.3, 2.0)), C64::new(1.0, 0.0));
        assert!((divisor_sigma(6, C64::new(0.0, 0.0)).re - 4.0).abs() < 1e-15);
        let direct: f64 = [1.0f64, 2.0, 3.0, 4.0, 6.0, 12.0]
            .iter()
            .map(|d| d.powf(0.5))
            .sum();
        assert!((divisor_sigma(12, C64::new(-0.5, 0.0)).re - direct).abs() < 1e-14);
    }

    #[test]
    fn sieve_agrees() {
        let z = C64::new(0.4, -1.2);
        let t = divisor_sigma_table(500, z);
        for n in 1..=500u64 {
            assert!((t[n as usize] - divisor_sigma(n, z)).norm() < 1e-13);
        }
    }
}
