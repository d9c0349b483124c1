//! Satake data, cascade and root partition for the AIII pairs.
use qsym::satake::{build_aiii, normalization_constants, partition_roots, root_label};

fn main() -> qsym::Result<()> {
    for (n, p) in [(4, 2), (5, 2), (3, 1)] {
        let sd = build_aiii(n, p)?;
        let part = partition_roots(&sd)?;
        let cascade: Vec<String> = sd.cascade.iter().map(|r| root_label(&r.vector)).collect();
        println!(
            "N={n} p={p} {:?}: X = {:?}, cascade {cascade:?}, |P_ij| = {}, |C_ij| = {}, a_σ = {:.6}",
            sd.hermitian_tag,
            sd.x,
            part.count_pij(),
            part.count_cij(),
            normalization_constants(&sd)?.a_sigma
        );
    }
    Ok(())
}
