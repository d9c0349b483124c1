//! The twelve end-to-end checks, each reporting a measured value against its threshold.

use std::f64::consts::PI;

use serde::Serialize;

use crate::braidb::{kohno_drinfeld_compare, kz_side_rep, q_side_rep, Word};
use crate::cohoch::{build_complex, subalgebra_basis, LieAlgebra, Subalgebra};
use crate::error::Result;
use crate::kzmono::{first_order_oracle, identity_residuals, psi_legs, reps_from_legs};
use crate::linalg::{c, dist, eye, max_abs, CMat, C64, I};
use crate::sln::{coisotropy_residual, fix_theta_residual, omega_pairing, r_rotation_residual, realize};
use crate::uqsl::{
    closed_form, closed_form_c_lambda_mu, infer_s_mu, quasi_k_in_rep, scalar_match, sl2_spherical,
    sl2_spherical_n1_formula, solve_kmatrix, CoidealParams,
};

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Criterion {
    fn new(id: usize, name: &'static str, pass: bool, detail: String) -> Self {
        Criterion { id, name, pass, detail }
    }

    fn failed(id: usize, name: &'static str, err: crate::Error) -> Self {
        Criterion { id, name, pass: false, detail: format!("error: {err}") }
    }

    pub fn line(&self) -> String {
        format!("{} criterion {:>2} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.id, self.name, self.detail)
    }
}

fn wrap(id: usize, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> Criterion {
    match f() {
        Ok((pass, detail)) => Criterion::new(id, name, pass, detail),
        Err(e) => Criterion::failed(id, name, e),
    }
}

const Q: f64 = 1.1051709180756477;

pub fn s_type_kmatrix() -> Criterion {
    wrap(1, "S-type K-matrix", || {
        let t = CoidealParams::s_type(4, Q, c(0.0, 0.3))?;
        let kr = solve_kmatrix(&t)?;
        let err = max_abs(&(&kr.k - closed_form(&t)));
        let ok = err <= 1e-10 && kr.reflection_residual <= 1e-10;
        Ok((ok, format!("closed-form error {err:.2e}, reflection residual {:.2e}", kr.reflection_residual)))
    })
}

pub fn c_type_kmatrix() -> Criterion {
    wrap(2, "C-type K-matrix", || {
        let t = CoidealParams::c_type(3, 1, Q, c(1.0, 0.0), -0.5)?;
        let kr = solve_kmatrix(&t)?;
        let (lam, mu) = closed_form_c_lambda_mu(3, 1, Q, t.c_p());
        let el = (kr.mudrov.lambda - lam).norm();
        let em = (kr.mudrov.mu_m - mu).norm();
        let ok = el <= 1e-10 && em <= 1e-10 && kr.commutant_residual <= 1e-10;
        Ok((ok, format!("|Δλ| {el:.2e}, |Δμ| {em:.2e}, commutant residual {:.2e}", kr.commutant_residual)))
    })
}

/// Parameter points used for the sweep in [`parameter_formulas`].
pub fn parameter_sweep() -> Result<Vec<CoidealParams>> {
    Ok(vec![
        CoidealParams::s_type(2, Q, c(0.0, 0.3))?,
        CoidealParams::s_type(4, Q, c(0.0, -0.25))?,
        CoidealParams::s_type(2, 0.2f64.exp(), c(0.0, 0.7))?,
        CoidealParams::c_type(3, 1, Q, c(0.5, 0.0), -0.5)?,
        CoidealParams::c_type(5, 2, Q, c(1.7, 0.0), -0.5)?,
    ])
}

pub fn parameter_formulas() -> Criterion {
    wrap(3, "parameter formulas", || {
        let mut worst: f64 = 0.0;
        for t in parameter_sweep()? {
            let kr = solve_kmatrix(&t)?;
            worst = worst.max(infer_s_mu(&kr, &t)?.discrepancy);
        }
        let mut zero: f64 = 0.0;
        for t in [CoidealParams::standard(2, 1, Q)?, CoidealParams::standard(4, 2, Q)?, CoidealParams::standard(3, 1, Q)?] {
            zero = zero.max(solve_kmatrix(&t)?.inferred.s_plus_mu.norm());
        }
        let ok = worst <= 1e-9 && zero <= 1e-9;
        Ok((ok, format!("sweep max |Δ(s+μ)| {worst:.2e}, t = 0 max |s+μ| {zero:.2e}")))
    })
}

pub fn first_order_expansion() -> Criterion {
    wrap(4, "first-order expansion of Ψ", || {
        let pr = realize(2, 1)?;
        let reps = reps_from_legs(2, &[1, 1, 1]);
        let mut ok = true;
        let mut parts = Vec::new();
        for s in [0.0, 0.4] {
            let oracle = first_order_oracle(&pr, &reps, c(s, 0.0))?;
            let err = |h: f64| -> Result<f64> {
                let psi = psi_legs(&pr, &[1, 1, 1], c(s, 0.0), h)?;
                Ok(dist(&((psi - eye(8)) / c(h, 0.0)), &oracle))
            };
            let (e2, e3) = (err(1e-2)?, err(1e-3)?);
            let ratio = e2 / e3;
            ok &= (5.0..=20.0).contains(&ratio) && e3 <= 10.0 * 1e-3;
            parts.push(format!("s={s}: ratio {ratio:.2}, error(1e-3) {e3:.2e}"));
        }
        Ok((ok, parts.join("; ")))
    })
}

pub fn pentagon_hexagon_ribbon() -> Criterion {
    wrap(5, "mixed pentagon, hexagons, ribbon identities", || {
        let pr = realize(2, 1)?;
        let r = identity_residuals(&pr, c(0.4, 0.0), c(0.0, 0.0), 0.05)?;
        let keys = ["mixed_pentagon", "hexagon_1", "hexagon_2", "ribbon_coproduct_1", "ribbon_coproduct_2"];
        let worst = keys.iter().map(|k| r[*k]).fold(0.0, f64::max);
        Ok((worst <= 1e-8, format!("max residual {worst:.2e}")))
    })
}

pub fn kohno_drinfeld() -> Criterion {
    wrap(6, "Kohno–Drinfeld trace match", || {
        let t = CoidealParams::standard(2, 1, 0.05f64.exp())?;
        let words: Vec<Word> = ["r", "s", "rs", "rsrs"].iter().map(|w| Word::parse(w)).collect::<Result<_>>()?;
        let r = kohno_drinfeld_compare(&t, &words, 2)?;
        Ok((r.max_delta <= 1e-6, format!("max |Δtr| {:.2e}, g = {:.6}", r.max_delta, r.g)))
    })
}

pub fn gamma3_relations() -> Criterion {
    wrap(7, "Γ₃ relations", || {
        let h: f64 = 0.05;
        let t = CoidealParams::standard(2, 1, h.exp())?;
        let kr = solve_kmatrix(&t)?;
        let q = q_side_rep(&t, &kr.k, 3)?;
        let k = kz_side_rep(2, 1, kr.inferred.s_plus_mu, h, kr.inferred.g, 3)?;
        let (a, b) = (q.max_residual(), k.max_residual());
        Ok((a <= 1e-8 && b <= 1e-8 && q.dim == 16, format!("dim {}, q-side {a:.2e}, KZ side {b:.2e}", q.dim)))
    })
}

pub fn omega_values() -> Criterion {
    wrap(8, "Ω-pairing values", || {
        let mut worst: f64 = 0.0;
        for (n, p) in [(2, 1), (3, 1), (4, 2)] {
            let pr = realize(n, p)?;
            let half: C64 = I * (pr.dim_m() as f64 / 2.0);
            worst = worst.max((omega_pairing(&pr, &pr.t_mplus) - half).norm());
            worst = worst.max((omega_pairing(&pr, &pr.t_mminus) + half).norm());
            worst = worst.max(omega_pairing(&pr, &pr.t_k).norm());
        }
        Ok((worst <= 1e-12, format!("max deviation {worst:.2e}")))
    })
}

pub fn cayley_checks() -> Criterion {
    wrap(9, "Cayley transform checks", || {
        let (mut rot, mut coi, mut fix): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for (n, p) in [(4, 2), (3, 1)] {
            let pr = realize(n, p)?;
            for phi in [0.3, 0.7, 1.0] {
                rot = rot.max(r_rotation_residual(&pr, phi));
                coi = coi.max(coisotropy_residual(&pr, phi)?);
            }
            for phi in [0.3, 0.7] {
                fix = fix.max(fix_theta_residual(&pr, phi)?);
            }
        }
        let ok = rot <= 1e-12 && coi <= 1e-12 && fix <= 1e-10;
        Ok((ok, format!("rotation {rot:.2e}, coisotropy {coi:.2e}, generator membership {fix:.2e}")))
    })
}

pub fn cohomology_dims() -> Criterion {
    wrap(10, "co-Hochschild dimensions", || {
        let g = LieAlgebra::sl(2)?;
        let cc = build_complex(&g, &[], 3, 4)?;
        let full = cc.cohomology_dims(false);
        let ok_full = full.iter().all(|e| e.dim == if e.degree == e.weight { [1, 3, 3, 1][e.degree] } else { 0 });
        let by_degree: Vec<usize> = (0..=3).map(|n| full.iter().filter(|e| e.degree == n).map(|e| e.dim).sum()).collect();
        let cc = build_complex(&g, &subalgebra_basis(2, Subalgebra::Cartan), 3, 4)?;
        let inv = cc.cohomology_dims(true);
        let h = |n: usize| inv.iter().filter(|e| e.degree == n).map(|e| e.dim).sum::<usize>();
        let ok = ok_full && h(1) == 0 && h(2) == 1;
        Ok((ok, format!("h=0: {by_degree:?}; Cartan invariant: H¹ = {}, H² = {}", h(1), h(2))))
    })
}

pub fn spherical_vector() -> Criterion {
    wrap(11, "sl₂ spherical vector", || {
        let mut worst: f64 = 0.0;
        for (q, cc, s) in [(1.3, c(0.7, 0.1), c(0.2, -0.4)), (Q, c(1.0, 0.0), c(0.0, 0.5)), (0.8, c(2.0, 0.0), c(-1.0, 0.0))] {
            let v = sl2_spherical(1, cc, s, q)?;
            let w = sl2_spherical_n1_formula(cc, s, q);
            worst = v.iter().zip(&w).map(|(a, b)| (a - b).norm()).fold(worst, f64::max);
        }
        Ok((worst <= 1e-12, format!("max coefficient error {worst:.2e}")))
    })
}

pub fn quasi_k_cross_route() -> Criterion {
    wrap(12, "quasi-K cross-route", || {
        let qk = quasi_k_in_rep(4, 2, Q)?;
        let kc: CMat = solve_kmatrix(&CoidealParams::standard(4, 2, Q)?)?.k;
        let (lam, err) = scalar_match(&kc, &qk.k);
        let ok = err <= 1e-9 && (lam.norm() - 1.0).abs() <= 1e-9;
        let phase = lam.arg() / PI;
        Ok((ok, format!("scalar {lam:.6} (phase {phase:.3}π), entrywise error {err:.2e}")))
    })
}

pub fn run_all() -> Vec<Criterion> {
    vec![
        s_type_kmatrix(),
        c_type_kmatrix(),
        parameter_formulas(),
        first_order_expansion(),
        pentagon_hexagon_ribbon(),
        kohno_drinfeld(),
        gamma3_relations(),
        omega_values(),
        cayley_checks(),
        cohomology_dims(),
        spherical_vector(),
        quasi_k_cross_route(),
    ]
}
