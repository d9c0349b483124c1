//! Co-Hochschild cohomology of `sl₂` relative to `0` and to its Cartan subalgebra.
use qsym::cohoch::{build_complex, subalgebra_basis, wedge_dims, LieAlgebra, Subalgebra};

fn main() -> qsym::Result<()> {
    let g = LieAlgebra::sl(2)?;
    for (sub, inv) in [(Subalgebra::Zero, false), (Subalgebra::Cartan, false), (Subalgebra::Cartan, true)] {
        let h = subalgebra_basis(2, sub);
        let cc = build_complex(&g, &h, 3, 4)?;
        let table = cc.cohomology_dims(inv);
        let by_degree: Vec<usize> = (0..=3).map(|n| table.iter().filter(|e| e.degree == n).map(|e| e.dim).sum()).collect();
        let wedge: Vec<usize> = wedge_dims(&g, &h, 3)?.iter().map(|(a, b)| if inv { *b } else { *a }).collect();
        println!("h = {sub:?}, invariant = {inv}: H = {by_degree:?}, ⋀(g/h) gives {wedge:?}");
    }
    Ok(())
}
