//! Frozen reference values, computed independently with 40-digit
//! arbitrary-precision arithmetic (defining integrals evaluated by
//! adaptive arbitrary-precision quadrature; scaled complementary error
//! function and exponential integral from their arbitrary-precision
//! implementations). These anchor the whole evaluation stack end to end.

use vm1d_core::potential::{fourier_v, v_auto, v_av};
use vm1d_core::quad::QuadratureSpec;
use vm1d_core::special::{erfcx, exp_integral_e1};

fn assert_rel(got: f64, reference: f64, tol: f64, label: &str) {
    let rel = ((got - reference) / reference).abs();
    assert!(rel < tol, "{label}: {got} vs {reference} (rel {rel:.3e})");
}

#[test]
fn potential_values_match_high_precision_references() {
    let cases: [(f64, f64, f64); 11] = [
        (0.0, 1.0, 0.757_872_156_141_312_106_04),
        (0.0, 2.0, 0.452_677_049_981_174_579_36),
        (1.0, 2.0, 0.415_630_325_065_888_972_23),
        (2.0, 1.0, 0.534_202_058_552_992_039_77),
        (5.0, 0.3, 0.431_909_634_509_379_545_59),
        (0.5, 1e-3, 1.128_371_480_238_057_487_7),
        (-0.75, 1.0, 0.924_077_285_865_176_581_83),
        (10.0, 7.5, 0.122_051_268_811_650_452_25),
        (20.0, 0.1, 0.222_156_803_263_462_681_6),
        (1.5, 3.0, 0.296_784_204_505_702_791_56),
        (0.5, 1e3, 9.999_992_500_014_062_459e-4),
    ];
    for &(m, x, reference) in &cases {
        let got = v_auto(m, x).unwrap();
        assert_rel(got.value, reference, 1e-11, &format!("V_{m}({x})"));
        // the self-reported error bar must cover the actual error
        let actual = (got.value - reference).abs();
        assert!(
            actual <= got.error_estimate.max(4.0 * f64::EPSILON * reference),
            "V_{m}({x}): actual error {actual:.3e} exceeds estimate {:.3e}",
            got.error_estimate
        );
    }
}

#[test]
fn erfcx_matches_high_precision_references() {
    let cases: [(f64, f64); 6] = [
        (0.3, 0.734_599_334_567_655_149_92),
        (1.0, 0.427_583_576_155_807_004_41),
        (4.0, 0.136_999_457_625_061_389_89),
        (26.0, 0.021_683_584_850_562_906_616),
        (50.0, 0.011_281_536_265_323_772_5),
        (1000.0, 5.641_893_014_533_876_542e-4),
    ];
    for &(x, reference) in &cases {
        assert_rel(erfcx(x).unwrap(), reference, 2e-13, &format!("erfcx({x})"));
    }
}

#[test]
fn e1_matches_high_precision_references() {
    let cases: [(f64, f64); 4] = [
        (0.01, 4.037_929_576_538_113_811_2),
        (1.0, 0.219_383_934_395_520_273_68),
        (5.0, 1.148_295_591_275_325_797_3e-3),
        (30.0, 3.021_552_010_688_812_544_8e-15),
    ];
    for &(x, reference) in &cases {
        assert_rel(
            exp_integral_e1(x).unwrap(),
            reference,
            1e-13,
            &format!("E1({x})"),
        );
    }
}

#[test]
fn fourier_values_match_high_precision_references() {
    let spec = QuadratureSpec::default();
    let cases: [(f64, f64, f64); 3] = [
        (0.0, 2.0, 0.237_908_176_636_594_459_54),
        (2.0, 1.0, 0.170_839_386_809_801_592_59),
        (0.5, 0.5, 0.745_293_778_982_211_723_02),
    ];
    for &(m, xi, reference) in &cases {
        assert_rel(
            fourier_v(m, xi, &spec).unwrap(),
            reference,
            1e-10,
            &format!("V̂_{m}({xi})"),
        );
    }
}

#[test]
fn averaged_potential_matches_high_precision_reference() {
    assert_rel(
        v_av(4, 0.7).unwrap(),
        0.684_244_011_335_810_868,
        1e-11,
        "V_av^4(0.7)",
    );
}
