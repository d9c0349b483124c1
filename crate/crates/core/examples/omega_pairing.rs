//! `⟨Ω, t^{m±}⟩ = ±(i/2) dim m` and the invariant line in `⋀² m`.
use qsym::sln::{omega_pairing, realize, wedge2_m_invariants};

fn main() -> qsym::Result<()> {
    for (n, p) in [(2, 1), (3, 1), (4, 2), (5, 2)] {
        let pr = realize(n, p)?;
        println!(
            "N={n} p={p}: dim m = {}, ⟨Ω,t^m+⟩ = {:.3}, ⟨Ω,t^m-⟩ = {:.3}, ⟨Ω,t^k⟩ = {:.1e}, dim (⋀²m)^k = {}",
            pr.dim_m(),
            omega_pairing(&pr, &pr.t_mplus),
            omega_pairing(&pr, &pr.t_mminus),
            omega_pairing(&pr, &pr.t_k).norm(),
            wedge2_m_invariants(&pr)
        );
    }
    Ok(())
}
