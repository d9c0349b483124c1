//! `Γ₃` relations on both sides at `N = 2`.
use qsym::braidb::{kz_side_rep, q_side_rep};
use qsym::uqsl::{solve_kmatrix, CoidealParams};

fn main() -> qsym::Result<()> {
    let h: f64 = 0.05;
    let t = CoidealParams::standard(2, 1, h.exp())?;
    let kr = solve_kmatrix(&t)?;
    let q = q_side_rep(&t, &kr.k, 3)?;
    let k = kz_side_rep(2, 1, kr.inferred.s_plus_mu, h, kr.inferred.g, 3)?;
    println!("grouping {}, dim {}", q.grouping, q.dim);
    for (name, r) in &q.residuals {
        println!("{name:>12}: q-side {r:.1e}, KZ side {:.1e}", k.residuals[name]);
    }
    Ok(())
}
