use crate::error::Result;
use crate::hyper::kummer_1f1;
use crate::C64;

fn x_power(x: f64, s: C64) -> C64 {
    ((0.5 - s) * x.ln()).exp()
}

/// omega(x, z, s) = x^{1/2-s} e^{-z^2/8} 1F1(1 - s/2; 3/2; z^2/4).
pub fn omega_kernel(x: f64, z: C64, s: C64) -> Result<C64> {
    let w = z * z;
    let f = kummer_1f1(1.0 - s * 0.5, C64::new(1.5, 0.0), w * 0.25)?;
    Ok(x_power(x, s) * (-w / 8.0).exp() * f)
}

/// Delta(x, z, s) = omega(x, z, s) + omega(x, z, 1 - s).
pub fn delta_kernel(x: f64, z: C64, s: C64) -> Result<C64> {
    Ok(omega_kernel(x, z, s)? + omega_kernel(x, z, 1.0 - s)?)
}

/// rho(x, z, s) = x^{1/2-s} e^{-z^2/8} 1F1((1 - s)/2; 1/2; z^2/4).
pub fn rho_kernel(x: f64, z: C64, s: C64) -> Result<C64> {
    let w = z * z;
    let f = kummer_1f1((1.0 - s) * 0.5, C64::new(0.5, 0.0), w * 0.25)?;
    Ok(x_power(x, s) * (-w / 8.0).exp() * f)
}

/// nabla(x, z, s) = rho(x, z, s) + rho(x, z, 1 - s).
pub fn nabla_kernel(x: f64, z: C64, s: C64) -> Result<C64> {
    Ok(rho_kernel(x, z, s)? + rho_kernel(x, z, 1.0 - s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_z() {
        let s = C64::new(0.3, 1.7);
        let x: f64 = 2.5;
        let expect = ((0.5 - s) * x.ln()).exp();
        assert!((omega_kernel(x, C64::new(0.0, 0.0), s).unwrap() - expect).norm() < 1e-15);
        assert!((rho_kernel(x, C64::new(0.0, 0.0), s).unwrap() - expect).norm() < 1e-15);
    }

    #[test]
    fn symmetric_in_s() {
        let (x, z, s) = (1.3, C64::new(0.8, -0.4), C64::new(0.2, 2.1));
        let d1 = delta_kernel(x, z, s).unwrap();
        let d2 = delta_kernel(x, z, 1.0 - s).unwrap();
        assert!((d1 - d2).norm() < 1e-14 * d1.norm());
        let n1 = nabla_kernel(x, z, s).unwrap();
        let n2 = nabla_kernel(x, z, 1.0 - s).unwrap();
        assert!((n1 - n2).norm() < 1e-14 * n1.norm());
    }
}
