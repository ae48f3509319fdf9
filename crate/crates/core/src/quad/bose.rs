use std::f64::consts::PI;

use crate::C64;

/// Half-width of the window around 0 where the series patches apply.
pub const PATCH_WINDOW: f64 = 1e-4;

/// 1/(e^{2 pi x} - 1), with the Laurent patch near 0 and the rewrite
/// -1 - 1/(e^{2 pi |x|} - 1) on the negative axis.
pub fn bose(x: f64) -> f64 {
    bose_windowed(x, PATCH_WINDOW)
}

pub fn bose_windowed(x: f64, window: f64) -> f64 {
    if x.abs() < window {
        let y = 2.0 * PI * x;
        return 1.0 / y - 0.5 + y / 12.0;
    }
    if x < 0.0 {
        -1.0 - 1.0 / (-2.0 * PI * x).exp_m1()
    } else {
        1.0 / (2.0 * PI * x).exp_m1()
    }
}

/// x/(e^{2 pi x} - 1), finite at 0.
pub fn x_bose(x: f64) -> f64 {
    x_bose_windowed(x, PATCH_WINDOW)
}

pub fn x_bose_windowed(x: f64, window: f64) -> f64 {
    if x.abs() < window {
        let y = 2.0 * PI * x;
        return (1.0 - y / 2.0 + y * y / 12.0 - y.powi(4) / 720.0) / (2.0 * PI);
    }
    x * bose_windowed(x, window)
}

/// sin(c x)/(e^{2 pi x} - 1), finite at 0.
pub fn sin_bose(c: C64, x: f64) -> C64 {
    sin_bose_windowed(c, x, PATCH_WINDOW)
}

pub fn sin_bose_windowed(c: C64, x: f64, window: f64) -> C64 {
    if x.abs() < window {
        let cx2 = (c * x) * (c * x);
        let sinc = c * (1.0 - cx2 / 6.0 + cx2 * cx2 / 120.0);
        return sinc * x_bose_windowed(x, window);
    }
    (c * x).sin() * bose_windowed(x, window)
}

/// sinh(c x)/(e^{2 pi x} - 1), finite at 0.
pub fn sinh_bose(c: C64, x: f64) -> C64 {
    sinh_bose_windowed(c, x, PATCH_WINDOW)
}

pub fn sinh_bose_windowed(c: C64, x: f64, window: f64) -> C64 {
    if x.abs() < window {
        let cx2 = (c * x) * (c * x);
        let sinhc = c * (1.0 + cx2 / 6.0 + cx2 * cx2 / 120.0);
        return sinhc * x_bose_windowed(x, window);
    }
    (c * x).sinh() * bose_windowed(x, window)
}
