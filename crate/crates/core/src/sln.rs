//! Matrix realization of `sl_N` adapted to the AIII splitting `u = k ⊕ m`.
//!
//! Elements of `g ⊗ g` are kept as lists of pairs [`Tensor2`]. Operators on
//! `gl_N` act on row-major vectorizations, so `vec(AXB) = (A ⊗ Bᵀ) vec(X)`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{adjoint, comm, expm, eye, inv, kron, norm, re, trace, unit, vec_rm, CMat, C64, I};
use crate::rootdata::to_f64;
use crate::satake::{build_aiii, normalization_constants, HermitianTag, SatakeData};

pub type Tensor2 = Vec<(CMat, CMat)>;

#[derive(Clone, Debug)]
pub struct PairRealization {
    pub n: usize,
    pub p: usize,
    pub satake: SatakeData,
    pub znu: CMat,
    pub a_nu: f64,
    /// Spectral projectors of `ad Z_ν` on `gl_N` for the eigenvalues `0, +i, -i`.
    pub proj_k: CMat,
    pub proj_mplus: CMat,
    pub proj_mminus: CMat,
    pub basis_g: Tensor2,
    pub t_u: Tensor2,
    pub t_k: Tensor2,
    pub t_mplus: Tensor2,
    pub t_mminus: Tensor2,
    pub r: Tensor2,
    /// Cascade roots as 0-based index pairs `(a, b)` for `L_{a+1} - L_{b+1}`.
    pub cascade: Vec<(usize, usize)>,
}

/// A representation of `gl_N` given by the images of the matrix units.
#[derive(Clone, Debug)]
pub struct Representation {
    pub n: usize,
    pub dim: usize,
    images: Vec<CMat>,
}

impl Representation {
    pub fn trivial(n: usize) -> Self {
        Representation { n, dim: 1, images: vec![CMat::zeros(1, 1); n * n] }
    }

    pub fn fundamental(n: usize) -> Self {
        let images = (0..n * n).map(|k| unit(n, k / n, k % n)).collect();
        Representation { n, dim: n, images }
    }

    /// `V^{⊗k}`; `k = 0` is the trivial representation.
    pub fn tensor_power(n: usize, k: usize) -> Self {
        (0..k).fold(Self::trivial(n), |acc, _| acc.tensor(&Self::fundamental(n)))
    }

    pub fn tensor(&self, other: &Representation) -> Self {
        let (ia, ib) = (eye(self.dim), eye(other.dim));
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| kron(a, &ib) + kron(&ia, b))
            .collect();
        Representation { n: self.n, dim: self.dim * other.dim, images }
    }

    pub fn rho(&self, x: &CMat) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(self.dim, self.dim);
        for i in 0..n {
            for j in 0..n {
                let c = x[(i, j)];
                if c != C64::new(0.0, 0.0) {
                    out += &self.images[i * n + j] * c;
                }
            }
        }
        out
    }

    /// Largest `‖ρ([e_ij, e_kl]) - [ρ(e_ij), ρ(e_kl)]‖`.
    pub fn homomorphism_residual(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for a in 0..n * n {
            for b in 0..n * n {
                let x = unit(n, a / n, a % n);
                let y = unit(n, b / n, b % n);
                let lhs = self.rho(&comm(&x, &y));
                let rhs = comm(&self.images[a], &self.images[b]);
                worst = worst.max(norm(&(lhs - rhs)));
            }
        }
        worst
    }
}

/// An operator on `⊗ spaces` with an explicit assignment of leg labels to positions.
#[derive(Clone, Debug)]
pub struct LegTensor {
    pub spaces: Vec<usize>,
    pub legs: Vec<usize>,
    pub data: CMat,
}

impl LegTensor {
    /// Relabel so that leg `i` sits at position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<LegTensor> {
        let p = perm_op(&self.spaces, perm)?;
        let mut spaces = vec![0; self.spaces.len()];
        for (i, &d) in self.spaces.iter().enumerate() {
            spaces[perm[i]] = d;
        }
        let legs = self.legs.iter().map(|&l| perm[l]).collect();
        Ok(LegTensor { spaces, legs, data: &p * &self.data * p.transpose() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Symbol {
    TU,
    TK,
    TMPlus,
    TMMinus,
    R,
    CasimirK,
    CasimirU,
    Z,
}

impl Symbol {
    pub fn arity(self) -> usize {
        match self {
            Symbol::TU | Symbol::TK | Symbol::TMPlus | Symbol::TMMinus | Symbol::R => 2,
            _ => 1,
        }
    }
}

/// `I ⊗ … ⊗ m ⊗ … ⊗ I` with `m` at position `pos`.
pub fn embed(dims: &[usize], pos: usize, m: &CMat) -> CMat {
    let before: usize = dims[..pos].iter().product();
    let after: usize = dims[pos + 1..].iter().product();
    kron(&kron(&eye(before), m), &eye(after))
}

/// Permutation matrix sending `v_0 ⊗ v_1 ⊗ …` to the tensor with `v_i` at position `perm[i]`.
pub fn perm_op(dims: &[usize], perm: &[usize]) -> Result<CMat> {
    let k = dims.len();
    let mut seen = vec![false; k];
    if perm.len() != k || perm.iter().any(|&x| x >= k || std::mem::replace(&mut seen[x], true)) {
        return Err(Error::Shape(format!("{perm:?} is not a permutation of {k} legs")));
    }
    let mut out_dims = vec![0; k];
    for i in 0..k {
        out_dims[perm[i]] = dims[i];
    }
    let total: usize = dims.iter().product();
    let mut p = CMat::zeros(total, total);
    let mut idx = vec![0usize; k];
    for src in 0..total {
        let mut rem = src;
        for i in (0..k).rev() {
            idx[i] = rem % dims[i];
            rem /= dims[i];
        }
        let mut dst = 0;
        let mut out_idx = vec![0usize; k];
        for i in 0..k {
            out_idx[perm[i]] = idx[i];
        }
        for i in 0..k {
            dst = dst * out_dims[i] + out_idx[i];
        }
        p[(dst, src)] = re(1.0);
    }
    Ok(p)
}

fn ad_matrix(x: &CMat) -> CMat {
    let n = x.nrows();
    kron(x, &eye(n)) - kron(&eye(n), &x.transpose())
}

/// Coefficient matrix `Σ vec(X) vec(Y)ᵀ` of an element of `gl_N ⊗ gl_N`.
pub fn tensor_coeffs(t: &[(CMat, CMat)]) -> CMat {
    let n2 = t.first().map(|(x, _)| x.len()).unwrap_or(0);
    let mut out = CMat::zeros(n2, n2);
    for (x, y) in t {
        out += vec_rm(x) * vec_rm(y).transpose();
    }
    out
}

pub fn realize(n: usize, p: usize) -> Result<PairRealization> {
    let satake = build_aiii(n, p)?;
    let nf = n as f64;
    let pf = p as f64;
    let znu = CMat::from_fn(n, n, |i, j| {
        if i != j {
            re(0.0)
        } else if i < p {
            I * (1.0 - pf / nf)
        } else {
            I * (-pf / nf)
        }
    });
    let a_nu = normalization_constants(&satake)?.a_sigma;

    let ad = ad_matrix(&znu);
    let ev = [re(0.0), I, -I];
    let spectral = |k: usize| {
        let mut m = eye(n * n);
        for (l, mu) in ev.iter().enumerate() {
            if l != k {
                m = m * (&ad - eye(n * n) * *mu) / (ev[k] - *mu);
            }
        }
        m
    };
    let (proj_k, proj_mplus, proj_mminus) = (spectral(0), spectral(1), spectral(2));

    let block = |i: usize| i < p;
    let mut t_k: Tensor2 = Vec::new();
    let mut t_mplus: Tensor2 = Vec::new();
    let mut t_mminus: Tensor2 = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let pair = (unit(n, i, j), unit(n, j, i));
            match (block(i), block(j)) {
                (a, b) if a == b => t_k.push(pair),
                (true, false) => t_mplus.push(pair),
                _ => t_mminus.push(pair),
            }
        }
    }
    let h: Vec<CMat> = (0..n - 1).map(|a| unit(n, a, a) - unit(n, a + 1, a + 1)).collect();
    let gram = CMat::from_fn(n - 1, n - 1, |a, b| trace(&(&h[a] * &h[b])));
    let gi = inv(&gram)?;
    for a in 0..n - 1 {
        let mut dual = CMat::zeros(n, n);
        for b in 0..n - 1 {
            dual += &h[b] * gi[(a, b)];
        }
        t_k.push((h[a].clone(), dual));
    }
    let mut t_u = t_k.clone();
    t_u.extend(t_mplus.iter().cloned());
    t_u.extend(t_mminus.iter().cloned());

    let mut r: Tensor2 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            r.push((unit(n, j, i) * I, unit(n, i, j)));
            r.push((unit(n, i, j) * (-I), unit(n, j, i)));
        }
    }
    let cascade = satake
        .cascade
        .iter()
        .map(|g| {
            let a = g.vector.iter().position(|x| to_f64(x) > 0.0).unwrap();
            let b = g.vector.iter().position(|x| to_f64(x) < 0.0).unwrap();
            (a, b)
        })
        .collect();
    Ok(PairRealization {
        n,
        p,
        satake,
        znu,
        a_nu,
        proj_k,
        proj_mplus,
        proj_mminus,
        basis_g: t_u.clone(),
        t_u,
        t_k,
        t_mplus,
        t_mminus,
        r,
        cascade,
    })
}

impl PairRealization {
    pub fn tag(&self) -> HermitianTag {
        self.satake.hermitian_tag
    }

    pub fn dim_m(&self) -> usize {
        2 * self.p * (self.n - self.p)
    }

    pub fn in_k(&self, i: usize, j: usize) -> bool {
        (i < self.p) == (j < self.p)
    }

    pub fn tensor(&self, s: Symbol) -> Option<&Tensor2> {
        match s {
            Symbol::TU => Some(&self.t_u),
            Symbol::TK => Some(&self.t_k),
            Symbol::TMPlus => Some(&self.t_mplus),
            Symbol::TMMinus => Some(&self.t_mminus),
            Symbol::R => Some(&self.r),
            _ => None,
        }
    }

    pub fn casimir(&self, t: &Tensor2, rep: &Representation) -> CMat {
        let mut out = CMat::zeros(rep.dim, rep.dim);
        for (x, y) in t {
            out += rep.rho(x) * rep.rho(y);
        }
        out
    }

    pub fn casimir_k(&self, rep: &Representation) -> CMat {
        self.casimir(&self.t_k, rep)
    }

    pub fn casimir_u(&self, rep: &Representation) -> CMat {
        self.casimir(&self.t_u, rep)
    }

    /// Matrix of `Σ ρ_a(X) ⊗ ρ_b(Y)` on the legs `a`, `b`.
    pub fn two_leg(&self, t: &Tensor2, reps: &[Representation], a: usize, b: usize) -> CMat {
        let dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
        let total: usize = dims.iter().product();
        let mut out = CMat::zeros(total, total);
        for (x, y) in t {
            out += embed(&dims, a, &reps[a].rho(x)) * embed(&dims, b, &reps[b].rho(y));
        }
        out
    }

    pub fn one_leg(&self, m: &CMat, reps: &[Representation], a: usize) -> CMat {
        let dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
        embed(&dims, a, m)
    }
}

pub fn build_leg_tensor(
    pr: &PairRealization,
    symbol: Symbol,
    reps: &[Representation],
    legs: &[usize],
) -> Result<LegTensor> {
    if legs.len() != symbol.arity() {
        return Err(Error::Shape(format!("{symbol:?} takes {} legs, got {}", symbol.arity(), legs.len())));
    }
    if let Some(&l) = legs.iter().find(|&&l| l >= reps.len()) {
        return Err(Error::Shape(format!("leg {l} out of range for {} spaces", reps.len())));
    }
    if legs.len() == 2 && legs[0] == legs[1] {
        return Err(Error::Shape("two-leg symbol needs distinct legs".into()));
    }
    let data = match symbol {
        Symbol::CasimirK => pr.one_leg(&pr.casimir_k(&reps[legs[0]]), reps, legs[0]),
        Symbol::CasimirU => pr.one_leg(&pr.casimir_u(&reps[legs[0]]), reps, legs[0]),
        Symbol::Z => pr.one_leg(&reps[legs[0]].rho(&pr.znu), reps, legs[0]),
        s => pr.two_leg(pr.tensor(s).unwrap(), reps, legs[0], legs[1]),
    };
    Ok(LegTensor { spaces: reps.iter().map(|r| r.dim).collect(), legs: legs.to_vec(), data })
}

/// The interpolated Cayley transform `g_φ`.
pub fn cayley(pr: &PairRealization, phi: f64) -> CMat {
    let n = pr.n;
    let mut x = CMat::zeros(n, n);
    for &(a, b) in &pr.cascade {
        x += unit(n, a, b) + unit(n, b, a);
    }
    expm(&(x * (I * (PI * phi / 4.0))))
}

fn ad_by(g: &CMat, x: &CMat) -> CMat {
    g * x * adjoint(g)
}

/// `θ = Ad(g_{-1} exp(πZ_ν) g_1)`.
pub fn theta_element(pr: &PairRealization) -> CMat {
    cayley(pr, -1.0) * expm(&(&pr.znu * re(PI))) * cayley(pr, 1.0)
}

pub fn theta(pr: &PairRealization, x: &CMat) -> Result<CMat> {
    let m = theta_element(pr);
    Ok(&m * x * inv(&m)?)
}

fn m_projector(pr: &PairRealization) -> CMat {
    &pr.proj_mplus + &pr.proj_mminus
}

/// Component of `(Ad g_φ)^{⊗2}(r) - cos(πφ/2) r` in `m ⊗ m`.
pub fn r_rotation_residual(pr: &PairRealization, phi: f64) -> f64 {
    let g = cayley(pr, phi);
    let rotated: Tensor2 = pr.r.iter().map(|(x, y)| (ad_by(&g, x), ad_by(&g, y))).collect();
    let t = tensor_coeffs(&rotated) - tensor_coeffs(&pr.r) * re((PI * phi / 2.0).cos());
    let pm = m_projector(pr);
    norm(&(&pm * t * pm.transpose()))
}

fn delta_r(pr: &PairRealization, x: &CMat) -> CMat {
    let t: Tensor2 = pr
        .r
        .iter()
        .flat_map(|(a, b)| [(comm(a, x), b.clone()), (a.clone(), comm(b, x))])
        .collect();
    tensor_coeffs(&t)
}

/// Projector onto `m_φ = Ad g_{φ-1}(m)` in vectorized coordinates.
pub fn m_phi_projector(pr: &PairRealization, phi: f64) -> Result<CMat> {
    let u = cayley(pr, phi - 1.0);
    let adu = kron(&u, &inv(&u)?.transpose());
    Ok(&adu * m_projector(pr) * inv(&adu)?)
}

/// Largest `m_φ ⊗ m_φ` component of `δ_r(X)` over a basis of `k_φ`.
pub fn coisotropy_residual(pr: &PairRealization, phi: f64) -> Result<f64> {
    let n = pr.n;
    let u = cayley(pr, phi - 1.0);
    let pm = m_phi_projector(pr, phi)?;
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            if !pr.in_k(a, b) {
                continue;
            }
            let d = delta_r(pr, &ad_by(&u, &unit(n, a, b)));
            worst = worst.max(norm(&(&pm * d * pm.transpose())));
        }
    }
    Ok(worst)
}

/// The same residual for a fixed element of `m_φ`; it must not vanish.
pub fn coisotropy_negative_control(pr: &PairRealization, phi: f64, seed: u64) -> Result<f64> {
    let n = pr.n;
    let u = cayley(pr, phi - 1.0);
    let pm = m_phi_projector(pr, phi)?;
    let mut s = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut x = CMat::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            if pr.in_k(a, b) {
                continue;
            }
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            x[(a, b)] = re(((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5);
        }
    }
    let x = ad_by(&u, &(&x / re(norm(&x))));
    let d = delta_r(pr, &x);
    Ok(norm(&(&pm * d * pm.transpose())))
}

/// Distance of the distinguished generator from `k_φ`.
///
/// S-type: `X_{α_p} + θ(X_{α_p}) - i tan(πφ/2) H_p`. C-type: `X_{α_o} + c_o θ(X_{α_o})`
/// for both distinguished roots with `c_o = -cot(π(φ-1)/4)` and its inverse.
pub fn fix_theta_residual(pr: &PairRealization, phi: f64) -> Result<f64> {
    let n = pr.n;
    let p = pr.p;
    let pm = m_phi_projector(pr, phi)?;
    let dist = |v: &CMat| (&pm * vec_rm(v)).norm() / norm(v).max(1e-300);
    match pr.tag() {
        HermitianTag::S => {
            if ((phi - 1.0) / 2.0).fract().abs() < 1e-12 {
                return Err(Error::Domain(format!("φ = {phi} lies in 1 + 2ℤ")));
            }
            let xo = unit(n, p - 1, p);
            let h = unit(n, p - 1, p - 1) - unit(n, p, p);
            let so = I * (PI * phi / 2.0).tan();
            Ok(dist(&(&xo + theta(pr, &xo)? - h * so)))
        }
        HermitianTag::C => {
            let co = -1.0 / (PI * (phi - 1.0) / 4.0).tan();
            if !co.is_finite() {
                return Err(Error::Domain(format!("φ = {phi} makes c_o singular")));
            }
            let xa = unit(n, p - 1, p);
            let xb = unit(n, n - p - 1, n - p);
            let va = &xa + theta(pr, &xa)? * re(co);
            let vb = &xb + theta(pr, &xb)? * re(1.0 / co);
            Ok(dist(&va).max(dist(&vb)))
        }
        HermitianTag::NonHermitian => Err(Error::Unsupported("non-Hermitian pair".into())),
    }
}

/// `Σ ([[X,Z],[Y,Z]], Z)` over the terms of `T`.
pub fn omega_pairing(pr: &PairRealization, t: &Tensor2) -> C64 {
    let z = &pr.znu;
    t.iter()
        .map(|(x, y)| trace(&(comm(&comm(x, z), &comm(y, z)) * z)))
        .sum()
}

/// `dim (⋀² m)^k`, computed as a numerical null space.
pub fn wedge2_m_invariants(pr: &PairRealization) -> usize {
    let n = pr.n;
    let mbasis: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !pr.in_k(i, j)).collect();
    let d = mbasis.len();
    let coords = |x: &CMat| nalgebra::DVector::from_fn(d, |k, _| x[mbasis[k]]);
    let mut rows: Vec<CMat> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !pr.in_k(a, b) {
                continue;
            }
            let x = unit(n, a, b);
            let mut ad = CMat::zeros(d, d);
            for (k, &(i, j)) in mbasis.iter().enumerate() {
                ad.set_column(k, &coords(&comm(&x, &unit(n, i, j))));
            }
            rows.push(kron(&ad, &eye(d)) + kron(&eye(d), &ad));
        }
    }
    let mut flip = CMat::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            flip[(j * d + i, i * d + j)] = re(1.0);
        }
    }
    rows.push(eye(d * d) + flip);
    let total = rows.iter().map(|m| m.nrows()).sum();
    let mut stacked = CMat::zeros(total, d * d);
    let mut off = 0;
    for m in rows {
        stacked.view_mut((off, 0), (m.nrows(), d * d)).copy_from(&m);
        off += m.nrows();
    }
    crate::linalg::nullspace(&stacked, 1e-10).ncols()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{dist, eigenvalues};

    const CASES: [(usize, usize); 6] = [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3)];

    #[test]
    fn sl2_sizes() {
        let pr = realize(2, 1).unwrap();
        assert_eq!(pr.t_u.len(), 3);
        assert_eq!(pr.dim_m(), 2);
    }

    #[test]
    fn z_normalization() {
        for (n, p) in CASES {
            let pr = realize(n, p).unwrap();
            let zz = trace(&(&pr.znu * &pr.znu));
            assert!((zz - re(-pr.a_nu.powi(-2))).norm() < 1e-13);
            let ad = ad_matrix(&pr.znu);
            assert!(dist(&(&ad * &ad * &ad), &(-&ad)) < 1e-13);
        }
        let pr = realize(4, 2).unwrap();
        assert!((trace(&(&pr.znu * &pr.znu)) + 1.0).norm() < 1e-14);
    }

    #[test]
    fn projectors_and_eigen_split() {
        for (n, p) in CASES {
            let pr = realize(n, p).unwrap();
            let sum = &pr.proj_k + &pr.proj_mplus + &pr.proj_mminus;
            assert!(dist(&sum, &eye(n * n)) < 1e-13);
            let ad = ad_matrix(&pr.znu);
            for (t, sign) in [(&pr.t_mplus, 1.0), (&pr.t_mminus, -1.0)] {
                let lhs: Tensor2 = t.iter().map(|(x, y)| (comm(&pr.znu, x), y.clone())).collect();
                let rhs = tensor_coeffs(t) * (I * sign);
                assert!(dist(&tensor_coeffs(&lhs), &rhs) < 1e-13);
            }
            let mut total = tensor_coeffs(&pr.t_k);
            total += tensor_coeffs(&pr.t_mplus) + tensor_coeffs(&pr.t_mminus);
            assert!(dist(&total, &tensor_coeffs(&pr.t_u)) < 1e-14);
            assert!(dist(&(&ad * &ad * &pr.proj_mplus), &(-&pr.proj_mplus)) < 1e-13);
        }
    }

    #[test]
    fn basis_duality_and_invariance() {
        for (n, p) in CASES {
            let pr = realize(n, p).unwrap();
            for (a, (xa, _)) in pr.basis_g.iter().enumerate() {
                for (b, (_, yb)) in pr.basis_g.iter().enumerate() {
                    let v = trace(&(xa * yb));
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!((v - re(expect)).norm() < 1e-13);
                }
            }
            let tu = tensor_coeffs(&pr.t_u);
            for i in 0..n {
                for j in 0..n {
                    let x = unit(n, i, j);
                    let moved: Tensor2 = pr
                        .t_u
                        .iter()
                        .flat_map(|(a, b)| [(comm(&x, a), b.clone()), (a.clone(), comm(&x, b))])
                        .collect();
                    assert!(norm(&tensor_coeffs(&moved)) < 1e-12, "{tu}");
                }
            }
        }
    }

    #[test]
    fn root_vectors_normalized() {
        let pr = realize(4, 2).unwrap();
        for i in 0..4 {
            for j in i + 1..4 {
                let h = unit(4, i, i) - unit(4, j, j);
                assert!(dist(&comm(&unit(4, i, j), &unit(4, j, i)), &h) < 1e-15);
            }
        }
        let rr = tensor_coeffs(&pr.r);
        let flipped: Tensor2 = pr.r.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        assert!(norm(&(rr + tensor_coeffs(&flipped))) < 1e-15);
    }

    #[test]
    fn representations() {
        for k in 0..4 {
            let rep = Representation::tensor_power(2, k);
            assert_eq!(rep.dim, 1 << k);
            assert!(rep.homomorphism_residual() < 1e-13);
        }
        assert!(Representation::tensor_power(3, 2).homomorphism_residual() < 1e-13);
    }

    #[test]
    fn leg_tensor_examples() {
        let pr = realize(2, 1).unwrap();
        let v = Representation::fundamental(2);
        let reps = vec![v.clone(), v.clone()];
        let t = build_leg_tensor(&pr, Symbol::TU, &reps, &[0, 1]).unwrap();
        let mut ev: Vec<f64> = eigenvalues(&t.data).iter().map(|z| z.re).collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expect = [-1.5, 0.5, 0.5, 0.5];
        assert!(ev.iter().zip(expect).all(|(a, b)| (a - b).abs() < 1e-12));
        let cas = build_leg_tensor(&pr, Symbol::CasimirU, &[v.clone()], &[0]).unwrap();
        assert!(dist(&cas.data, &(eye(2) * re(1.5))) < 1e-14);
        let three = vec![v.clone(), v.clone(), v.clone()];
        let z = build_leg_tensor(&pr, Symbol::Z, &three, &[1]).unwrap();
        let expect = kron(&kron(&eye(2), &pr.znu), &eye(2));
        assert!(dist(&z.data, &expect) < 1e-15);
        assert!(matches!(build_leg_tensor(&pr, Symbol::TU, &reps, &[0]), Err(Error::Shape(_))));
        assert!(matches!(build_leg_tensor(&pr, Symbol::Z, &reps, &[0, 1]), Err(Error::Shape(_))));
    }

    #[test]
    fn relabel_is_similarity() {
        let pr = realize(2, 1).unwrap();
        let reps = vec![
            Representation::fundamental(2),
            Representation::tensor_power(2, 2),
            Representation::fundamental(2),
        ];
        let t01 = build_leg_tensor(&pr, Symbol::TK, &reps, &[0, 1]).unwrap();
        let moved = t01.relabel(&[2, 0, 1]).unwrap();
        let reps2 = vec![reps[1].clone(), reps[2].clone(), reps[0].clone()];
        let direct = build_leg_tensor(&pr, Symbol::TK, &reps2, &[2, 0]).unwrap();
        assert_eq!(moved.spaces, vec![4, 2, 2]);
        assert!(dist(&moved.data, &direct.data) < 1e-14);
    }

    #[test]
    fn cayley_examples() {
        let pr = realize(2, 1).unwrap();
        assert!(dist(&cayley(&pr, 0.0), &eye(2)) < 1e-15);
        let g1 = cayley(&pr, 1.0);
        let ih = (unit(2, 0, 0) - unit(2, 1, 1)) * I;
        let rhs = unit(2, 0, 1) - unit(2, 1, 0);
        assert!(dist(&ad_by(&g1, &ih), &rhs) < 1e-14);
        for (n, p) in [(2, 1), (4, 2), (6, 3)] {
            let pr = realize(n, p).unwrap();
            let g2 = cayley(&pr, 2.0);
            assert!(dist(&ad_by(&g2, &pr.znu), &(-&pr.znu)) < 1e-13);
        }
    }

    #[test]
    fn cayley_on_cascade_triples() {
        for (n, p) in [(3, 1), (4, 2), (5, 2)] {
            let pr = realize(n, p).unwrap();
            for phi in [0.3, 0.7, 1.3] {
                let g = cayley(&pr, phi);
                assert!(dist(&(&g * adjoint(&g)), &eye(n)) < 1e-13);
                let (c, s) = ((PI * phi / 2.0).cos(), (PI * phi / 2.0).sin());
                for &(a, b) in &pr.cascade {
                    let x = unit(n, a, b) + unit(n, b, a);
                    let y = unit(n, a, b) - unit(n, b, a);
                    let ih = (unit(n, a, a) - unit(n, b, b)) * I;
                    assert!(dist(&ad_by(&g, &x), &x) < 1e-13);
                    let expect = &ih * re(c) + &y * re(s);
                    assert!(dist(&ad_by(&g, &ih), &expect) < 1e-13);
                }
            }
        }
    }

    #[test]
    fn rotation_and_coisotropy() {
        for (n, p) in [(4, 2), (3, 1)] {
            let pr = realize(n, p).unwrap();
            assert!(r_rotation_residual(&pr, 0.0) < 1e-14);
            for phi in [0.3, 0.7, 1.0] {
                assert!(r_rotation_residual(&pr, phi) < 1e-12);
                assert!(coisotropy_residual(&pr, phi).unwrap() < 1e-12);
            }
            // at φ = 1 the m ⊗ m part of δ_r(m) vanishes identically, so the control needs φ ∉ 1 + 2ℤ
            for phi in [0.3, 0.7] {
                let nc = coisotropy_negative_control(&pr, phi, 7).unwrap();
                assert!(nc > 0.01, "{n} {p} {phi} {nc}");
            }
        }
    }

    #[test]
    fn fix_theta_generators() {
        for (n, p) in [(2, 1), (4, 2), (3, 1), (5, 2)] {
            let pr = realize(n, p).unwrap();
            for phi in [0.3, 0.7, 1.6] {
                assert!(fix_theta_residual(&pr, phi).unwrap() < 1e-10, "{n} {p} {phi}");
            }
        }
        let pr = realize(4, 2).unwrap();
        assert!(matches!(fix_theta_residual(&pr, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn theta_is_an_involution() {
        for (n, p) in CASES {
            let pr = realize(n, p).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let x = unit(n, i, j);
                    let tx = theta(&pr, &theta(&pr, &x).unwrap()).unwrap();
                    assert!(dist(&tx, &x) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn omega_values() {
        for (n, p) in [(2, 1), (3, 1), (4, 2)] {
            let pr = realize(n, p).unwrap();
            let half = pr.dim_m() as f64 / 2.0;
            assert!((omega_pairing(&pr, &pr.t_mplus) - I * half).norm() < 1e-12);
            assert!((omega_pairing(&pr, &pr.t_mminus) + I * half).norm() < 1e-12);
            assert!(omega_pairing(&pr, &pr.t_k).norm() < 1e-12);
        }
        let pr = realize(3, 1).unwrap();
        assert!((omega_pairing(&pr, &pr.t_mminus) + I * 2.0).norm() < 1e-12);
    }

    #[test]
    fn wedge_invariants_one_dimensional() {
        for (n, p) in [(2, 1), (3, 1), (4, 2)] {
            assert_eq!(wedge2_m_invariants(&realize(n, p).unwrap()), 1);
        }
    }

    #[test]
    fn perm_op_validation() {
        assert!(perm_op(&[2, 2], &[0, 0]).is_err());
        let p = perm_op(&[2, 3], &[1, 0]).unwrap();
        let a = CMat::from_fn(2, 2, |i, j| re((i * 2 + j) as f64));
        let b = CMat::from_fn(3, 3, |i, j| re((i * 3 + j) as f64 + 0.5));
        assert!(dist(&(&p * kron(&a, &b) * p.transpose()), &kron(&b, &a)) < 1e-14);
    }
}
