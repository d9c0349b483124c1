//! Mixed pentagon, hexagons and ribbon-braid identities on fundamental legs.
use qsym::kzmono::identity_residuals;
use qsym::linalg::c;
use qsym::sln::realize;

fn main() -> qsym::Result<()> {
    let pr = realize(2, 1)?;
    for (name, r) in identity_residuals(&pr, c(0.4, 0.0), c(0.0, 0.0), 0.05)? {
        println!("{name:>20}: {r:.2e}");
    }
    Ok(())
}
