//! Reading off `s + μ` and the central factor `g` from the spectrum of `K`.
use qsym::linalg::c;
use qsym::uqsl::{infer_s_mu, solve_kmatrix, CoidealParams};

fn main() -> qsym::Result<()> {
    let q = 0.1f64.exp();
    for sp in [0.0, 0.3, -0.6] {
        let t = CoidealParams::s_type(2, q, c(0.0, sp))?;
        let r = infer_s_mu(&solve_kmatrix(&t)?, &t)?;
        println!("S-type s_p = {sp}i: s = {:.6}, s+μ = {:.10}, g = {:.3}, both signs fit: {}", r.s, r.s_plus_mu, r.g, r.both_signs_fit);
    }
    for c0 in [0.5, 1.0, 2.0] {
        let t = CoidealParams::c_type(3, 1, q, c(c0, 0.0), -0.5)?;
        let r = infer_s_mu(&solve_kmatrix(&t)?, &t)?;
        println!("C-type c0 = {c0}: s = {:.6}, s+μ = {:.10}, g = {:.3}", r.s, r.s_plus_mu, r.g);
    }
    Ok(())
}
