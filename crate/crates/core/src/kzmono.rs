//! Normalized monodromies of regular-singular ODEs: cyclotomic KZ associators,
//! the Drinfeld associator and ribbon braids.

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::digamma::{digamma, trigamma, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::linalg::{adjoint, dist, expm, eye, inv, kron, norm, re, CMat, Sylvester, C64, I};
use crate::sln::{perm_op, PairRealization, Representation};

pub const RESONANCE_THRESHOLD: f64 = 1e-8;

/// `G' = (A_{-1}/(w+1) + A_0/w + A_1/(w-1)) G` on a common space.
#[derive(Clone, Debug)]
pub struct KzProblem {
    pub a_minus1: CMat,
    pub a_0: CMat,
    pub a_1: CMat,
    pub tol: f64,
    pub max_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssociatorResult {
    #[serde(skip)]
    pub psi: CMat,
    pub order_used: usize,
    pub tail_estimate: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct KzOptions {
    pub tol: f64,
    pub max_order: usize,
}

impl Default for KzOptions {
    fn default() -> Self {
        KzOptions { tol: 1e-14, max_order: 200 }
    }
}

impl KzProblem {
    pub fn new(a_minus1: CMat, a_0: CMat, a_1: CMat, opts: KzOptions) -> Result<Self> {
        let n = a_0.nrows();
        for m in [&a_minus1, &a_0, &a_1] {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::Shape("KZ coefficients must share one square shape".into()));
            }
        }
        if !(opts.tol > 0.0) {
            return Err(Error::Parameter(format!("tol = {} must be positive", opts.tol)));
        }
        Ok(KzProblem { a_minus1, a_0, a_1, tol: opts.tol, max_order: opts.max_order })
    }
}

/// Sums a Frobenius series at `w = 1/2`; `step(k, coeffs)` produces the k-th coefficient.
fn sum_at_half(
    n: usize,
    tol: f64,
    max_order: usize,
    mut step: impl FnMut(usize, &CMat) -> Result<CMat>,
) -> Result<(CMat, usize, f64)> {
    let scale = (n as f64).sqrt();
    let mut sum = eye(n);
    let mut weight = 1.0;
    let mut last = eye(n);
    let mut small = 0;
    for k in 1..=max_order {
        let hk = step(k, &last)?;
        weight *= 0.5;
        let term = norm(&hk) * weight;
        sum += &hk * re(weight);
        last = hk;
        small = if term <= tol * scale { small + 1 } else { 0 };
        if small >= 3 {
            return Ok((sum, k, 2.0 * term / scale));
        }
    }
    let tail = 2.0 * norm(&last) * weight / scale;
    Err(Error::Truncation { order: max_order, tail })
}

fn power_half(a: &CMat) -> CMat {
    expm(&(a * re(-LN_2)))
}

pub fn frobenius_monodromy(prob: &KzProblem) -> Result<AssociatorResult> {
    let n = prob.a_0.nrows();
    let th = RESONANCE_THRESHOLD;

    let syl0 = Sylvester::new(&prob.a_0);
    let mut p = eye(n);
    let mut q = eye(n);
    let (h0, k0, tail0) = sum_at_half(n, prob.tol, prob.max_order, |k, prev| {
        if k > 1 {
            p += prev;
            q = prev - &q;
        }
        let rhs = &prob.a_minus1 * &q - &prob.a_1 * &p;
        syl0.solve(k, &rhs, th)
    })?;

    let syl1 = Sylvester::new(&prob.a_1);
    let mut p = eye(n);
    let mut r = eye(n) * re(0.5);
    let (h1, k1, tail1) = sum_at_half(n, prob.tol, prob.max_order, |k, prev| {
        if k > 1 {
            p += prev;
            r = (prev + &r) * re(0.5);
        }
        let rhs = -(&prob.a_minus1 * &r) - &prob.a_0 * &p;
        syl1.solve(k, &rhs, th)
    })?;

    let g0 = h0 * power_half(&prob.a_0);
    let g1 = h1 * power_half(&prob.a_1);
    let psi = inv(&g1)? * g0;
    let tail_estimate = tail0.max(tail1);
    if tail_estimate > prob.tol {
        return Err(Error::Truncation { order: k0.max(k1), tail: tail_estimate });
    }
    Ok(AssociatorResult { psi, order_used: k0.max(k1), tail_estimate })
}

fn hbar(h: f64) -> C64 {
    re(h) / (I * PI)
}

pub fn reps_from_legs(n: usize, legs: &[usize]) -> Vec<Representation> {
    legs.iter().map(|&k| Representation::tensor_power(n, k)).collect()
}

/// The coefficient triple of the shifted cyclotomic KZ system.
pub fn psi_coefficients(
    pr: &PairRealization,
    reps: &[Representation],
    s_plus_mu: C64,
    h: f64,
) -> Result<(CMat, CMat, CMat)> {
    if reps.len() != 3 {
        return Err(Error::Shape(format!("Ψ needs three legs, got {}", reps.len())));
    }
    let hb = hbar(h);
    let tk = pr.two_leg(&pr.t_k, reps, 1, 2);
    let tu = pr.two_leg(&pr.t_u, reps, 1, 2);
    let tm = &tu - &tk;
    let tk01 = pr.two_leg(&pr.t_k, reps, 0, 1);
    let ck1 = pr.one_leg(&pr.casimir_k(&reps[1]), reps, 1);
    let z1 = pr.one_leg(&reps[1].rho(&pr.znu), reps, 1);
    let a_m1 = (tk - tm) * hb;
    let a_1 = tu * hb;
    let a_0 = (tk01 * re(2.0) + ck1) * hb + z1 * s_plus_mu;
    Ok((a_m1, a_0, a_1))
}

/// `Ψ_{KZ,s;μ}`; only `s + μ` enters.
pub fn psi_kz(
    pr: &PairRealization,
    reps: &[Representation],
    s: C64,
    mu: C64,
    h: f64,
    opts: KzOptions,
) -> Result<AssociatorResult> {
    let (a, b, c) = psi_coefficients(pr, reps, s + mu, h)?;
    frobenius_monodromy(&KzProblem::new(a, b, c, opts)?)
}

/// `Ψ` with tensor powers of the fundamental representation on each leg.
pub fn psi_legs(pr: &PairRealization, legs: &[usize], s_plus_mu: C64, h: f64) -> Result<CMat> {
    let reps = reps_from_legs(pr.n, legs);
    Ok(psi_kz(pr, &reps, s_plus_mu, re(0.0), h, KzOptions::default())?.psi)
}

pub fn phi_kz(pr: &PairRealization, reps: &[Representation], h: f64, opts: KzOptions) -> Result<AssociatorResult> {
    if reps.len() != 3 {
        return Err(Error::Shape(format!("Φ needs three legs, got {}", reps.len())));
    }
    let hb = hbar(h);
    let a_0 = pr.two_leg(&pr.t_u, reps, 0, 1) * hb;
    let a_1 = pr.two_leg(&pr.t_u, reps, 1, 2) * hb;
    let a_m1 = CMat::zeros(a_0.nrows(), a_0.ncols());
    frobenius_monodromy(&KzProblem::new(a_m1, a_0, a_1, opts)?)
}

pub fn phi_legs(pr: &PairRealization, legs: &[usize], h: f64) -> Result<CMat> {
    Ok(phi_kz(pr, &reps_from_legs(pr.n, legs), h, KzOptions::default())?.psi)
}

pub fn r_kz(pr: &PairRealization, reps: &[Representation], h: f64) -> Result<CMat> {
    if reps.len() != 2 {
        return Err(Error::Shape(format!("R needs two legs, got {}", reps.len())));
    }
    Ok(expm(&(pr.two_leg(&pr.t_u, reps, 0, 1) * re(-h))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BraidVariant {
    /// `exp(-h(2t^k_{01} + C^k_1) - πi(s+μ)Z_1) g_1`, a σ-braid.
    Sigma,
    /// `exp(-h(2t^k_{01} + C^k_1) + π(1 - i(s+μ))Z_1) g_1`, an ordinary ribbon braid.
    Plain,
    /// `exp(-h(2t^k_{01} + C^k_1)) g_1`.
    NonHermitian,
}

pub fn ribbon_kz(
    pr: &PairRealization,
    reps: &[Representation],
    s: C64,
    mu: C64,
    h: f64,
    central_g: C64,
    variant: BraidVariant,
) -> Result<CMat> {
    if reps.len() != 2 {
        return Err(Error::Shape(format!("ribbon braid needs two legs, got {}", reps.len())));
    }
    let base = (pr.two_leg(&pr.t_k, reps, 0, 1) * re(2.0) + pr.one_leg(&pr.casimir_k(&reps[1]), reps, 1)) * re(-h);
    let z1 = pr.one_leg(&reps[1].rho(&pr.znu), reps, 1);
    let x = match variant {
        BraidVariant::Sigma => base - z1 * (I * PI * (s + mu)),
        BraidVariant::Plain => base + z1 * (re(PI) * (re(1.0) - I * (s + mu))),
        BraidVariant::NonHermitian => base,
    };
    Ok(expm(&x) * central_g)
}

/// `(1/πi)[log 2 · t^u + γ t^m + ψ(½ - is/2) t^{m+} + ψ(½ + is/2) t^{m-}]` on legs 1, 2.
pub fn first_order_oracle(pr: &PairRealization, reps: &[Representation], s: C64) -> Result<CMat> {
    if reps.len() != 3 {
        return Err(Error::Shape("oracle needs three legs".into()));
    }
    let a = re(0.5) - I * s / 2.0;
    let b = re(0.5) + I * s / 2.0;
    let (pa, pb) = (digamma(a)?, digamma(b)?);
    let tu = pr.two_leg(&pr.t_u, reps, 1, 2);
    let tp = pr.two_leg(&pr.t_mplus, reps, 1, 2);
    let tn = pr.two_leg(&pr.t_mminus, reps, 1, 2);
    let m = tu * re(LN_2) + (&tp + &tn) * re(EULER_GAMMA) + tp * pa + tn * pb;
    Ok(m / (I * PI))
}

/// `s`-derivative of the oracle in the trigamma/sech² form.
pub fn first_order_oracle_ds(pr: &PairRealization, reps: &[Representation], s: C64) -> Result<CMat> {
    let a = re(0.5) - I * s / 2.0;
    let b = re(0.5) + I * s / 2.0;
    let diff = trigamma(b)? - trigamma(a)?;
    let sech2 = {
        let ch = (s * (PI / 2.0)).cosh();
        re(1.0) / (ch * ch)
    };
    let tp = pr.two_leg(&pr.t_mplus, reps, 1, 2);
    let tn = pr.two_leg(&pr.t_mminus, reps, 1, 2);
    Ok((&tp + &tn) * (diff / (4.0 * PI)) - (tp - tn) * (sech2 * (PI / 4.0)))
}

/// Operators relabelled so that leg `i` sits at position `perm[i]`.
pub fn relabel(m: &CMat, dims: &[usize], perm: &[usize]) -> Result<CMat> {
    let p = perm_op(dims, perm)?;
    Ok(&p * m * p.transpose())
}

fn conj(u: &CMat, x: &CMat) -> Result<CMat> {
    Ok(u * x * inv(u)?)
}

/// Named residuals of the quasi-coaction, hexagon and ribbon identities on fundamental legs.
pub fn identity_residuals(pr: &PairRealization, s: C64, mu: C64, h: f64) -> Result<BTreeMap<String, f64>> {
    let n = pr.n;
    let sm = s + mu;
    let v = Representation::fundamental(n);
    let d3 = [n, n, n];
    let mut out = BTreeMap::new();

    let psi111 = psi_legs(pr, &[1, 1, 1], sm, h)?;
    let phi111 = phi_legs(pr, &[1, 1, 1], h)?;

    let lhs = kron(&eye(n), &phi111) * psi_legs(pr, &[1, 2, 1], sm, h)? * kron(&psi111, &eye(n));
    let rhs = psi_legs(pr, &[1, 1, 2], sm, h)? * psi_legs(pr, &[2, 1, 1], sm, h)?;
    out.insert("mixed_pentagon".into(), dist(&lhs, &rhs));

    let reps3 = vec![v.clone(), v.clone(), v.clone()];
    let r = |a: usize, b: usize| expm(&(pr.two_leg(&pr.t_u, &reps3, a, b) * re(-h)));
    let ph = |perm: [usize; 3]| relabel(&phi111, &d3, &perm);
    let lhs = expm(&((pr.two_leg(&pr.t_u, &reps3, 0, 2) + pr.two_leg(&pr.t_u, &reps3, 1, 2)) * re(-h)));
    let rhs = ph([2, 0, 1])? * r(0, 2) * inv(&ph([0, 2, 1])?)? * r(1, 2) * &phi111;
    out.insert("hexagon_1".into(), dist(&lhs, &rhs));
    let lhs = expm(&((pr.two_leg(&pr.t_u, &reps3, 0, 1) + pr.two_leg(&pr.t_u, &reps3, 0, 2)) * re(-h)));
    let rhs = inv(&ph([1, 2, 0])?)? * r(0, 2) * ph([1, 0, 2])? * r(0, 1) * inv(&phi111)?;
    out.insert("hexagon_2".into(), dist(&lhs, &rhs));

    let r12 = r(1, 2);
    let r21 = r12.clone();
    let p021 = relabel(&psi111, &d3, &[0, 2, 1])?;
    let pinv = inv(&psi111)?;
    let sz = expm(&(&pr.znu * re(PI)));
    for (variant, tag, conj2, conj12) in [
        (BraidVariant::Sigma, "ribbon_coproduct", kron(&eye(n * n), &sz), kron(&kron(&eye(n), &sz), &sz)),
        (BraidVariant::Plain, "ribbon_plain", eye(n * n * n), eye(n * n * n)),
    ] {
        let braid = |legs: &[usize]| ribbon_kz(pr, &reps_from_legs(n, legs), s, mu, h, re(1.0), variant);
        let e01 = kron(&braid(&[1, 1])?, &eye(n));
        let e02 = relabel(&e01, &d3, &[0, 2, 1])?;
        let tail = conj(&conj2, &(inv(&p021)? * &r12 * &psi111))?;
        let rhs1 = &pinv * &r21 * &p021 * &e02 * &tail;
        out.insert(format!("{tag}_1"), dist(&braid(&[2, 1])?, &rhs1));
        let rhs2 = &r21 * &p021 * &e02 * &tail * &e01 * conj(&conj12, &pinv)?;
        out.insert(format!("{tag}_2"), dist(&braid(&[1, 2])?, &rhs2));
    }

    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            if !pr.in_k(a, b) {
                continue;
            }
            let x = crate::linalg::unit(n, a, b);
            let diag_op = (0..3).fold(CMat::zeros(n * n * n, n * n * n), |acc, l| {
                acc + pr.one_leg(&x, &reps3, l)
            });
            worst = worst.max(norm(&(&psi111 * &diag_op - &diag_op * &psi111)));
        }
    }
    out.insert("psi_intertwiner".into(), worst);
    Ok(out)
}

/// Deviation from unitarity, `‖U U* - 1‖`.
pub fn unitarity_defect(u: &CMat) -> f64 {
    dist(&(u * adjoint(u)), &eye(u.nrows()))
}
