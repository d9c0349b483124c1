//! K-matrices from the commutant of the coideal, in both Hermitian types.
use qsym::linalg::{c, max_abs};
use qsym::uqsl::{closed_form, solve_kmatrix, CoidealParams};

fn main() -> qsym::Result<()> {
    let q = 0.1f64.exp();
    let cases = [
        CoidealParams::s_type(2, q, c(0.0, 0.0))?,
        CoidealParams::s_type(4, q, c(0.0, 0.3))?,
        CoidealParams::c_type(3, 1, q, c(1.0, 0.0), -0.5)?,
        CoidealParams::c_type(5, 2, q, c(1.4, 0.0), -0.5)?,
    ];
    for t in cases {
        let kr = solve_kmatrix(&t)?;
        println!(
            "N={} p={} {:?}: reflection {:.1e}, vs closed form {:.1e}, λ = {:.4}, μ = {:.4}",
            t.n,
            t.p,
            t.tag,
            kr.reflection_residual,
            max_abs(&(&kr.k - closed_form(&t))),
            kr.mudrov.lambda,
            kr.mudrov.mu_m
        );
    }
    let kr = solve_kmatrix(&CoidealParams::standard(2, 1, q)?)?;
    println!("N=2 standard K = {}", kr.k);
    Ok(())
}
