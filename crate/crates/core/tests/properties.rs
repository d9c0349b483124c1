use proptest::prelude::*;

use qsym::braidb::{kohno_drinfeld_compare, Word};
use qsym::linalg::{c, max_abs};
use qsym::uqsl::{closed_form, infer_s_mu, solve_kmatrix, CoidealParams};

fn words() -> Vec<Word> {
    ["r", "s", "rs", "rsrs", "RsrS"].iter().map(|w| Word::parse(w).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn s_type_family(h in 0.01f64..0.3, sp in -1.0f64..1.0, half in 1usize..4) {
        let t = CoidealParams::s_type(2 * half, h.exp(), c(0.0, sp)).unwrap();
        let kr = solve_kmatrix(&t).unwrap();
        prop_assert!(max_abs(&(&kr.k - closed_form(&t))) < 1e-9);
        prop_assert!(kr.reflection_residual < 1e-9);
        let r = infer_s_mu(&kr, &t).unwrap();
        prop_assert!(r.discrepancy < 1e-9);
        prop_assert!((r.g.powi(2 * half as i32) - c(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn c_type_family(h in 0.01f64..0.3, c0 in 0.2f64..3.0, n in 3usize..7) {
        let p = 1 + (n as f64 * c0) as usize % ((n - 1) / 2);
        let t = CoidealParams::c_type(n, p, h.exp(), c(c0, 0.0), -0.5).unwrap();
        let kr = solve_kmatrix(&t).unwrap();
        prop_assert!(max_abs(&(&kr.k - closed_form(&t))) < 1e-9);
        prop_assert!(kr.reflection_residual < 1e-9);
        prop_assert!(kr.normalization_check < 1e-9);
        prop_assert!(infer_s_mu(&kr, &t).unwrap().discrepancy < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn kohno_drinfeld_s_type(h in 0.02f64..0.2, sp in -0.8f64..0.8) {
        let t = CoidealParams::s_type(2, h.exp(), c(0.0, sp)).unwrap();
        let r = kohno_drinfeld_compare(&t, &words(), 2).unwrap();
        prop_assert!(r.max_delta <= 1e-6);
    }
}

#[test]
fn kohno_drinfeld_c_type() {
    for c0 in [1.0, 0.6] {
        let t = CoidealParams::c_type(3, 1, 0.05f64.exp(), c(c0, 0.0), -0.5).unwrap();
        let r = kohno_drinfeld_compare(&t, &words(), 2).unwrap();
        assert!(r.max_delta <= 1e-6, "c0 = {c0}: {:?}", r.traces);
        assert!(r.det_rho_delta <= 1e-8);
    }
}

#[test]
fn kohno_drinfeld_s_type_n4() {
    let t = CoidealParams::s_type(4, 0.05f64.exp(), c(0.0, 0.2)).unwrap();
    let w: Vec<Word> = ["r", "rr", "R"].iter().map(|w| Word::parse(w).unwrap()).collect();
    let r = kohno_drinfeld_compare(&t, &w, 1).unwrap();
    assert!(r.max_delta <= 1e-6, "{:?}", r.traces);
}
