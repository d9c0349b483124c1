//! Representations of the type-B braid group `Γ_n` on `V ⊗ W^{⊗n}` and the
//! Kohno–Drinfeld comparison by traces of words.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kzmono::{psi_legs, r_kz, reps_from_legs, ribbon_kz, BraidVariant};
use crate::linalg::{dist, eye, inv, kron, trace, CMat, C64};
use crate::sln::realize;
use crate::uqsl::{flip, r_matrix, r_matrix_scalar, solve_kmatrix, CoidealParams};

/// Generators of `Γ_n` and their inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Letter {
    Rho,
    RhoInv,
    /// `σ_i`, 1-based.
    Sigma(usize),
    SigmaInv(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    /// `r` is `ρ₁`, `s` or `sK` is `σ_K`; capitals are inverses. Whitespace is ignored.
    pub fn parse(text: &str) -> Result<Word> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            i += 1;
            match ch {
                'r' => out.push(Letter::Rho),
                'R' => out.push(Letter::RhoInv),
                's' | 'S' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let k = if start == i { 1 } else { chars[start..i].iter().collect::<String>().parse().unwrap() };
                    if k == 0 {
                        return Err(Error::Parameter("σ_0 does not exist".into()));
                    }
                    out.push(if ch == 's' { Letter::Sigma(k) } else { Letter::SigmaInv(k) });
                }
                _ => return Err(Error::Parameter(format!("bad letter {ch:?} in word {text:?}"))),
            }
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            match l {
                Letter::Rho => write!(f, "r")?,
                Letter::RhoInv => write!(f, "R")?,
                Letter::Sigma(k) => write!(f, "s{k}")?,
                Letter::SigmaInv(k) => write!(f, "S{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct BraidRep {
    pub n: usize,
    pub dim: usize,
    pub rho1: CMat,
    pub sigma: Vec<CMat>,
    pub grouping: String,
    pub residuals: BTreeMap<String, f64>,
}

/// Builds `ρ₁ ↦ 𝓔_{0,1}` and `σ_i ↦ Ψ^{-1}_{0…i-1,i,i+1} (ΣR)_{i,i+1} Ψ_{0…i-1,i,i+1}` on `((V⊗W)⊗W)⊗…`.
///
/// `psi(k)` returns `Ψ` on the legs `(V⊗W^{⊗(k-1)}, W, W)`.
pub fn build_rep(
    e: &CMat,
    sigma_r: &CMat,
    psi: &dyn Fn(usize) -> Result<CMat>,
    w_dim: usize,
    n: usize,
) -> Result<BraidRep> {
    if !(1..=3).contains(&n) {
        return Err(Error::Unsupported(format!("n = {n} outside 1..=3")));
    }
    if sigma_r.nrows() != w_dim * w_dim || sigma_r.ncols() != w_dim * w_dim {
        return Err(Error::Shape(format!("ΣR is {}×{}, expected {}", sigma_r.nrows(), sigma_r.ncols(), w_dim * w_dim)));
    }
    if e.nrows() != e.ncols() || e.nrows() % w_dim != 0 {
        return Err(Error::Shape(format!("𝓔 is {}×{}", e.nrows(), e.ncols())));
    }
    let v_dim = e.nrows() / w_dim;
    let dim = v_dim * w_dim.pow(n as u32);
    let rho1 = kron(e, &eye(w_dim.pow(n as u32 - 1)));
    let mut sigma = Vec::new();
    for i in 1..n {
        let left = v_dim * w_dim.pow(i as u32 - 1);
        let p = psi(i)?;
        if p.nrows() != left * w_dim * w_dim {
            return Err(Error::Shape(format!("Ψ for grouping {i} has size {}, expected {}", p.nrows(), left * w_dim * w_dim)));
        }
        let s = inv(&p)? * kron(&eye(left), sigma_r) * &p;
        sigma.push(kron(&s, &eye(w_dim.pow((n - 1 - i) as u32))));
    }
    let mut rep = BraidRep { n, dim, rho1, sigma, grouping: grouping_label(n), residuals: BTreeMap::new() };
    inv(&rep.rho1)?;
    for s in &rep.sigma {
        inv(s)?;
    }
    rep.residuals = relation_residuals(&rep);
    Ok(rep)
}

fn grouping_label(n: usize) -> String {
    let mut s = "V".to_string();
    for _ in 0..n {
        s = format!("({s}⊗W)");
    }
    s
}

/// Residuals of the defining relations of `Γ_n`.
pub fn relation_residuals(rep: &BraidRep) -> BTreeMap<String, f64> {
    let mut out = BTreeMap::new();
    let r = &rep.rho1;
    let k = rep.sigma.len();
    if k >= 1 {
        let s = &rep.sigma[0];
        out.insert("type_b".into(), dist(&(r * s * r * s), &(s * r * s * r)));
    }
    for i in 0..k {
        if i + 1 < k {
            let (a, b) = (&rep.sigma[i], &rep.sigma[i + 1]);
            out.insert(format!("braid_{}_{}", i + 1, i + 2), dist(&(a * b * a), &(b * a * b)));
        }
        for j in i + 2..k {
            let (a, b) = (&rep.sigma[i], &rep.sigma[j]);
            out.insert(format!("far_{}_{}", i + 1, j + 1), dist(&(a * b), &(b * a)));
        }
        if i >= 1 {
            let a = &rep.sigma[i];
            out.insert(format!("rho_sigma_{}", i + 1), dist(&(r * a), &(a * r)));
        }
    }
    out
}

impl BraidRep {
    pub fn max_residual(&self) -> f64 {
        self.residuals.values().cloned().fold(0.0, f64::max)
    }

    pub fn eval(&self, w: &Word) -> Result<CMat> {
        let mut m = eye(self.dim);
        for l in &w.0 {
            let g = match *l {
                Letter::Rho => self.rho1.clone(),
                Letter::RhoInv => inv(&self.rho1)?,
                Letter::Sigma(k) | Letter::SigmaInv(k) => {
                    let s = self
                        .sigma
                        .get(k - 1)
                        .ok_or_else(|| Error::Parameter(format!("σ_{k} not in Γ_{}", self.n)))?;
                    if matches!(l, Letter::Sigma(_)) { s.clone() } else { inv(s)? }
                }
            };
            m *= g;
        }
        Ok(m)
    }
}

/// `R_{21}(1⊗K)R` with the scalar `q^{1/N}` kept in `R`.
pub fn q_side_rho(k: &CMat, q: f64) -> Result<CMat> {
    let n = k.nrows();
    let r = r_matrix(n, q)? * C64::from(r_matrix_scalar(n, q));
    let sw = flip(n);
    Ok(&sw * &r * &sw * kron(&eye(n), k) * r)
}

pub fn q_side_rep(t: &CoidealParams, k: &CMat, n: usize) -> Result<BraidRep> {
    let nn = t.n;
    let e = q_side_rho(k, t.q)?;
    let sr = flip(nn) * r_matrix(nn, t.q)? * C64::from(r_matrix_scalar(nn, t.q));
    let id = |i: usize| -> Result<CMat> { Ok(eye(nn.pow(i as u32 + 2))) };
    build_rep(&e, &sr, &id, nn, n)
}

pub fn kz_side_rep(nn: usize, p: usize, s_plus_mu: C64, h: f64, g: C64, n: usize) -> Result<BraidRep> {
    let pr = realize(nn, p)?;
    let two = reps_from_legs(nn, &[1, 1]);
    let e = ribbon_kz(&pr, &two, s_plus_mu, C64::from(0.0), h, g, BraidVariant::Plain)?;
    let sr = flip(nn) * r_kz(&pr, &two, h)?;
    let psi = |i: usize| psi_legs(&pr, &[i, 1, 1], s_plus_mu, h);
    build_rep(&e, &sr, &psi, nn, n)
}

#[derive(Clone, Debug, Serialize)]
pub struct WordTrace {
    pub word: String,
    pub q_side: C64,
    pub kz_side: C64,
    pub delta: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct KdComparison {
    pub s_plus_mu: C64,
    pub g: C64,
    pub traces: Vec<WordTrace>,
    pub max_delta: f64,
    pub det_rho_delta: f64,
    pub q_residuals: BTreeMap<String, f64>,
    pub kz_residuals: BTreeMap<String, f64>,
}

/// Builds both sides from `t` and compares traces of `words`.
pub fn kohno_drinfeld_compare(t: &CoidealParams, words: &[Word], n: usize) -> Result<KdComparison> {
    let kr = solve_kmatrix(t)?;
    let fit = &kr.inferred;
    let h = t.q.ln();
    let qrep = q_side_rep(t, &kr.k, n)?;
    let krep = kz_side_rep(t.n, t.p, fit.s_plus_mu, h, fit.g, n)?;
    let mut traces = Vec::new();
    for w in words {
        let a = trace(&qrep.eval(w)?);
        let b = trace(&krep.eval(w)?);
        traces.push(WordTrace { word: w.to_string(), q_side: a, kz_side: b, delta: (a - b).norm() });
    }
    let max_delta = traces.iter().map(|x| x.delta).fold(0.0, f64::max);
    let det_rho_delta = (qrep.rho1.determinant() - krep.rho1.determinant()).norm();
    Ok(KdComparison {
        s_plus_mu: fit.s_plus_mu,
        g: fit.g,
        traces,
        max_delta,
        det_rho_delta,
        q_residuals: qrep.residuals,
        kz_residuals: krep.residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    const H: f64 = 0.05;

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|w| Word::parse(w).unwrap()).collect()
    }

    #[test]
    fn parse_words() {
        let w = Word::parse("r s1 R S2 s").unwrap();
        assert_eq!(w.0, vec![Letter::Rho, Letter::Sigma(1), Letter::RhoInv, Letter::SigmaInv(2), Letter::Sigma(1)]);
        assert_eq!(w.to_string(), "rs1RS2s1");
        assert!(Word::parse("x").is_err());
        assert!(Word::parse("").unwrap().0.is_empty());
    }

    #[test]
    fn trivial_data_gives_identity() {
        let id = |i: usize| -> Result<CMat> { Ok(eye(2usize.pow(i as u32 + 2))) };
        for n in 1..=3 {
            let rep = build_rep(&eye(4), &eye(4), &id, 2, n).unwrap();
            assert!(dist(&rep.rho1, &eye(rep.dim)) == 0.0);
            assert!(rep.sigma.iter().all(|s| dist(s, &eye(rep.dim)) == 0.0));
            assert!(rep.max_residual() == 0.0);
        }
        assert!(matches!(build_rep(&eye(4), &eye(3), &id, 2, 2), Err(Error::Shape(_))));
        assert!(matches!(build_rep(&eye(4), &eye(4), &id, 2, 4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn kz_side_type_b_relation() {
        let rep = kz_side_rep(2, 1, c(0.0, 0.0), H, c(1.0, 0.0), 2).unwrap();
        assert!(rep.residuals["type_b"] <= 1e-8);
        let mut bad = rep.clone();
        bad.sigma[0][(0, 1)] += c(1e-3, 0.0);
        assert!(relation_residuals(&bad)["type_b"] >= 1e-4);
    }

    #[test]
    fn q_side_relations() {
        let t = CoidealParams::standard(2, 1, H.exp()).unwrap();
        let k = solve_kmatrix(&t).unwrap().k;
        let rep = q_side_rep(&t, &k, 3).unwrap();
        assert_eq!(rep.dim, 16);
        assert!(rep.max_residual() <= 1e-8, "{:?}", rep.residuals);
        let t = CoidealParams::standard(3, 1, H.exp()).unwrap();
        let k = solve_kmatrix(&t).unwrap().k;
        let rep = q_side_rep(&t, &k, 2).unwrap();
        assert!(rep.max_residual() <= 1e-8);
    }

    #[test]
    fn trace_comparison() {
        let t = CoidealParams::standard(2, 1, H.exp()).unwrap();
        let r = kohno_drinfeld_compare(&t, &words(&["", "r", "s", "rs", "rsrs"]), 2).unwrap();
        assert!(r.traces[0].delta == 0.0);
        assert!((r.traces[0].q_side - c(8.0, 0.0)).norm() == 0.0);
        assert!(r.max_delta <= 1e-6, "{:?}", r.traces);
        assert!(r.det_rho_delta <= 1e-8);
    }

    #[test]
    fn trace_comparison_off_the_standard_point() {
        let t = CoidealParams::s_type(2, 0.1f64.exp(), c(0.0, 0.3)).unwrap();
        let r = kohno_drinfeld_compare(&t, &words(&["r", "s", "rs", "rsrs", "RsrS"]), 2).unwrap();
        assert!(r.max_delta <= 1e-6, "{:?}", r.traces);
    }

    #[test]
    fn traces_are_conjugation_invariant() {
        let t = CoidealParams::standard(2, 1, H.exp()).unwrap();
        let k = solve_kmatrix(&t).unwrap().k;
        let rep = q_side_rep(&t, &k, 2).unwrap();
        let m = CMat::from_fn(8, 8, |i, j| c(((i * 7 + j * 3) % 5) as f64 * 0.1, ((i + 2 * j) % 3) as f64 * 0.05)) + eye(8);
        let mi = inv(&m).unwrap();
        let conj = BraidRep {
            rho1: &m * &rep.rho1 * &mi,
            sigma: rep.sigma.iter().map(|s| &m * s * &mi).collect(),
            ..rep.clone()
        };
        for w in words(&["rs", "rsrs", "ss"]) {
            let a = trace(&rep.eval(&w).unwrap());
            let b = trace(&conj.eval(&w).unwrap());
            assert!((a - b).norm() < 1e-10);
        }
    }
}
