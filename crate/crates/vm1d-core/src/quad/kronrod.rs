//! 7-point Gauss / 15-point Kronrod pair on a single interval.
//!
//! Nodes and weights are the classic QUADPACK values; the error estimate
//! is QUADPACK's rescaled difference between the two embedded rules.

/// Positive Kronrod abscissae (the rule is symmetric; index 7 is 0).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

/// 7-point Gauss weights (even-index Kronrod nodes, centre last).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

pub(crate) struct SegmentEstimate {
    pub value: f64,
    pub error: f64,
}

/// Apply G7K15 to `f` on `[a, b]`, returning the Kronrod value and the
/// QUADPACK-style error estimate. Endpoints are never evaluated.
pub(crate) fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> SegmentEstimate {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(centre);
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut resabs = WGK[7] * libm::fabs(fc);
    let mut fv = [[0.0f64; 2]; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv[j] = [f1, f2];
        let fsum = f1 + f2;
        resk += WGK[j] * fsum;
        resabs += WGK[j] * (libm::fabs(f1) + libm::fabs(f2));
        if j % 2 == 1 {
            // XGK[1], XGK[3], XGK[5] are the non-centre Gauss nodes
            resg += WG[j / 2] * fsum;
        }
    }

    let reskh = 0.5 * resk;
    let mut resasc = WGK[7] * libm::fabs(fc - reskh);
    for j in 0..7 {
        resasc += WGK[j] * (libm::fabs(fv[j][0] - reskh) + libm::fabs(fv[j][1] - reskh));
    }

    let value = resk * half;
    let resabs = resabs * libm::fabs(half);
    let resasc = resasc * libm::fabs(half);
    let mut error = libm::fabs((resk - resg) * half);
    if resasc != 0.0 && error != 0.0 {
        error = resasc * libm::fmin(1.0, libm::pow(200.0 * error / resasc, 1.5));
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if floor > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = libm::fmax(error, floor);
    }
    SegmentEstimate { value, error }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_low_degree_polynomials() {
        // K15 integrates polynomials up to degree 22 exactly
        for k in 0..=10u32 {
            let est = gk15(&|x: f64| libm::pow(x, 2.0 * k as f64), -1.0, 1.0);
            let exact = 2.0 / (2.0 * k as f64 + 1.0);
            assert!(
                (est.value - exact).abs() < 1e-14 * exact,
                "k = {k}: {} vs {exact}",
                est.value
            );
        }
    }

    #[test]
    fn sine_over_period() {
        let est = gk15(&|x: f64| libm::sin(x), 0.0, core::f64::consts::PI);
        assert!((est.value - 2.0).abs() < 1e-12);
        assert!(est.error < 1e-9);
    }

    #[test]
    fn error_estimate_is_conservative_on_smooth_f() {
        let est = gk15(&|x: f64| libm::exp(-x), 0.0, 2.0);
        let exact = 1.0 - libm::exp(-2.0);
        assert!((est.value - exact).abs() <= est.error.max(1e-15));
    }
}
