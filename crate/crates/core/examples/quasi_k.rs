//! The quasi-K element in the vector representation and the K-matrix it assembles.
use qsym::uqsl::{quasi_k_in_rep, scalar_match, solve_kmatrix, CoidealParams};

fn main() -> qsym::Result<()> {
    let q = 0.1f64.exp();
    for n in [2, 4, 6] {
        let qk = quasi_k_in_rep(n, n / 2, q)?;
        let kc = solve_kmatrix(&CoidealParams::standard(n, n / 2, q)?)?.k;
        let (lam, err) = scalar_match(&kc, &qk.k);
        println!("N={n}: recursion residual {:.1e}, scalar {lam:.6}, mismatch {err:.1e}", qk.max_residual);
    }
    Ok(())
}
