use crate::C64;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

pub(crate) struct Estimate {
    pub kronrod: C64,
    pub gauss: C64,
    pub abs: f64,
}

/// 10-point Gauss / 21-point Kronrod pair on [a, b].
pub(crate) fn gk21<F>(f: &F, a: f64, b: f64) -> Result<Estimate, f64>
where
    F: Fn(f64) -> C64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<C64, f64> {
        let v = f(x);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(x)
        }
    };
    let fc = eval(center)?;
    let mut kronrod = fc * WGK[10];
    let mut gauss = C64::new(0.0, 0.0);
    let mut abs = fc.norm() * WGK[10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        kronrod += (f1 + f2) * WGK[j];
        abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    Ok(Estimate {
        kronrod: kronrod * half,
        gauss: gauss * half,
        abs: abs * half.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let e = gk21(&|x: f64| C64::new(x.powi(19), 0.0), 0.0, 1.0).unwrap();
        assert!((e.gauss.re - 0.05).abs() < 1e-15);
        let e = gk21(&|x: f64| C64::new(x.powi(30), 0.0), 0.0, 1.0).unwrap();
        assert!((e.kronrod.re - 1.0 / 31.0).abs() < 1e-15);
    }
}
