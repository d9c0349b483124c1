//! Type A root data, a Cartan-matrix realization and the root order.
use qsym::rootdata::{build_type_a, from_cartan, leading_minors, to_f64};

fn main() -> qsym::Result<()> {
    let rs = build_type_a(4)?;
    println!("sl_4: rank {}, {} positive roots", rs.rank, rs.positive_roots().len());
    let gram = rs.simple_gram();
    let minors: Vec<f64> = leading_minors(&gram).iter().map(to_f64).collect();
    println!("leading minors of the Gram matrix: {minors:?}");

    let g2 = from_cartan(vec![vec![2, -1], vec![-3, 2]])?;
    println!("G2: {} positive roots, symmetrizers {:?}", g2.positive_roots().len(), g2.d.iter().map(to_f64).collect::<Vec<_>>());
    Ok(())
}
