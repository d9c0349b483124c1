//! Cyclotomic KZ associator and its first-order expansion in `h`.
use qsym::kzmono::{first_order_oracle, psi_kz, reps_from_legs, unitarity_defect, KzOptions};
use qsym::linalg::{c, dist, eye};
use qsym::sln::realize;

fn main() -> qsym::Result<()> {
    let pr = realize(2, 1)?;
    let reps = reps_from_legs(2, &[1, 1, 1]);
    let s = c(0.4, 0.0);
    let r = psi_kz(&pr, &reps, s, c(0.0, 0.0), 0.05, KzOptions::default())?;
    println!("Ψ at h=0.05: order {}, tail {:.1e}, unitarity defect {:.1e}", r.order_used, r.tail_estimate, unitarity_defect(&r.psi));

    let oracle = first_order_oracle(&pr, &reps, s)?;
    for h in [1e-1, 1e-2, 1e-3] {
        let psi = psi_kz(&pr, &reps, s, c(0.0, 0.0), h, KzOptions::default())?.psi;
        let err = dist(&((psi - eye(8)) / c(h, 0.0)), &oracle);
        println!("h = {h:e}: |(Ψ-1)/h - first order| = {err:.3e}");
    }
    Ok(())
}
