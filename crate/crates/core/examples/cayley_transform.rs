//! The Cayley transform rotates the classical r-matrix and keeps `k_φ` coisotropic.
use qsym::sln::{coisotropy_residual, fix_theta_residual, r_rotation_residual, realize};

fn main() -> qsym::Result<()> {
    for (n, p) in [(4, 2), (3, 1)] {
        let pr = realize(n, p)?;
        for phi in [0.3, 0.7, 1.0] {
            let fix = fix_theta_residual(&pr, phi).map(|x| format!("{x:.1e}")).unwrap_or_else(|e| e.to_string());
            println!(
                "N={n} p={p} φ={phi}: rotation {:.1e}, coisotropy {:.1e}, generator {fix}",
                r_rotation_residual(&pr, phi),
                coisotropy_residual(&pr, phi)?
            );
        }
    }
    Ok(())
}
