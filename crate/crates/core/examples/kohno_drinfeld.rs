//! Traces of `Γ₂` words agree between the quantum-group and KZ representations.
use qsym::braidb::{kohno_drinfeld_compare, Word};
use qsym::linalg::c;
use qsym::uqsl::CoidealParams;

fn main() -> qsym::Result<()> {
    let words: Vec<Word> = ["r", "s", "rs", "rsrs", "RsrS", "rrs"].iter().map(|w| Word::parse(w)).collect::<qsym::Result<_>>()?;
    for t in [CoidealParams::standard(2, 1, 0.05f64.exp())?, CoidealParams::s_type(2, 0.1f64.exp(), c(0.0, 0.3))?] {
        let r = kohno_drinfeld_compare(&t, &words, 2)?;
        println!("s_p = {}: s+μ = {:.6}, g = {:.3}", t.s_p(), r.s_plus_mu, r.g);
        for w in &r.traces {
            println!("  {:>6}  q {:>24.12}  KZ {:>24.12}  Δ {:.1e}", w.word, w.q_side, w.kz_side, w.delta);
        }
    }
    Ok(())
}
