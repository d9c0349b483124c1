//! Vectors killed by the rank-one coideal generator in `V_n`.
use qsym::linalg::c;
use qsym::uqsl::{sl2_spherical, sl2_spherical_n1_formula};

fn main() -> qsym::Result<()> {
    let (q, cc, s) = (1.3, c(0.7, 0.0), c(0.2, 0.0));
    let show = |v: &[qsym::linalg::C64]| v.iter().map(|z| format!("{:.12}", z.re)).collect::<Vec<_>>();
    println!("n=1 solved:  {:?}", show(&sl2_spherical(1, cc, s, q)?));
    println!("n=1 formula: {:?}", show(&sl2_spherical_n1_formula(cc, s, q)));
    for n in 2..4 {
        let v = sl2_spherical(n, cc, s, q)?;
        println!("n={n}: {:?}", v.iter().map(|z| format!("{:.4}", z.re)).collect::<Vec<_>>());
    }
    Ok(())
}
