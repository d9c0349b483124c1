//! The quantum-group side for AIII: `U_q(sl_N)` on its vector representation,
//! the R-matrix, Lusztig elements, Letzter–Kolb coideal generators and K-matrices.

use std::f64::consts::PI;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{c, comm, diag, dist, eye, inv, kron, max_abs, norm, nullspace, re, trace, unit, vec_rm, CMat, C64, I};
use crate::rootdata::{q as rat, to_f64, Q};
use crate::satake::{build_aiii, HermitianTag, SatakeData};

#[derive(Clone, Debug)]
pub struct UqFundamental {
    pub n: usize,
    pub q: f64,
    /// `e[i-1]`, `f[i-1]`, `k[i-1]` for the simple root `i`.
    pub e: Vec<CMat>,
    pub f: Vec<CMat>,
    pub k: Vec<CMat>,
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::Parameter(format!("q = {q} must be positive")));
    }
    Ok(())
}

pub fn fundamental(n: usize, q: f64) -> Result<UqFundamental> {
    check_q(q)?;
    if n < 2 {
        return Err(Error::InvalidDimension(format!("N = {n} < 2")));
    }
    let e = (0..n - 1).map(|i| unit(n, i, i + 1) * re(q.sqrt())).collect();
    let f = (0..n - 1).map(|i| unit(n, i + 1, i) * re(1.0 / q.sqrt())).collect();
    let k = (0..n - 1)
        .map(|i| eye(n) + unit(n, i, i) * re(q - 1.0) + unit(n, i + 1, i + 1) * re(1.0 / q - 1.0))
        .collect();
    Ok(UqFundamental { n, q, e, f, k })
}

impl UqFundamental {
    /// `K_ω` acting on `e_j` by `q^{(ω, L_j)}`; `ω` in `L_i` coordinates.
    pub fn k_weight(&self, omega: &[Q]) -> CMat {
        let n = self.n;
        let total: Q = omega.iter().cloned().sum();
        let d: Vec<C64> = (0..n)
            .map(|j| re(self.q.powf(to_f64(&(omega[j] - total / Q::from_integer(n as i64))))))
            .collect();
        diag(&d)
    }

    /// Largest residual among the defining relations, including q-Serre.
    pub fn relation_residual(&self) -> f64 {
        let q = self.q;
        let r = self.n - 1;
        let mut worst: f64 = 0.0;
        for i in 0..r {
            let ki = inv(&self.k[i]).unwrap();
            for j in 0..r {
                let a = match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                let expect = if i == j { (&self.k[i] - &ki) / re(q - 1.0 / q) } else { CMat::zeros(self.n, self.n) };
                worst = worst.max(dist(&comm(&self.e[i], &self.f[j]), &expect));
                let qa = re(q.powi(a));
                worst = worst.max(dist(&(&self.k[i] * &self.e[j] * &ki), &(&self.e[j] * qa)));
                worst = worst.max(dist(&(&self.k[i] * &self.f[j] * &ki), &(&self.f[j] / qa)));
                if a == -1 {
                    let q2 = re(q + 1.0 / q);
                    for x in [&self.e, &self.f] {
                        let s = &x[i] * &x[i] * &x[j] - &x[i] * &x[j] * &x[i] * q2 + &x[j] * &x[i] * &x[i];
                        worst = worst.max(norm(&s));
                    }
                }
            }
        }
        worst
    }
}

/// `Σ q^{-δ_ij} e_ii ⊗ e_jj + (q^{-1} - q) Σ_{i<j} e_ij ⊗ e_ji`, i.e. `q^{-1/N}` times the image of the universal R-matrix.
pub fn r_matrix(n: usize, q: f64) -> Result<CMat> {
    check_q(q)?;
    let mut r = CMat::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let w = if i == j { 1.0 / q } else { 1.0 };
            r += kron(&unit(n, i, i), &unit(n, j, j)) * re(w);
            if i < j {
                r += kron(&unit(n, i, j), &unit(n, j, i)) * re(1.0 / q - q);
            }
        }
    }
    Ok(r)
}

/// The scalar `q^{1/N}` dropped from [`r_matrix`].
pub fn r_matrix_scalar(n: usize, q: f64) -> f64 {
    q.powf(1.0 / n as f64)
}

pub fn flip(n: usize) -> CMat {
    let mut s = CMat::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            s[(j * n + i, i * n + j)] = re(1.0);
        }
    }
    s
}

/// `A_n` with `A_n[r][n-1-r] = (-1)^r`.
pub fn alt_antidiag(n: usize) -> CMat {
    CMat::from_fn(n, n, |r, col| if col + r + 1 == n { re(if r % 2 == 0 { 1.0 } else { -1.0 }) } else { re(0.0) })
}

pub fn lusztig_w0(n: usize, q: f64) -> CMat {
    alt_antidiag(n) * re(q.powf((n as f64 - 1.0) / 2.0))
}

pub fn lusztig_wx(n: usize, p: usize, q: f64) -> CMat {
    let mut t = eye(n);
    let m = n - 2 * p;
    if m > 0 {
        let blk = alt_antidiag(m) * re(q.powf((n as f64 - 1.0) / 2.0 - p as f64));
        t.view_mut((p, p), (m, m)).copy_from(&blk);
    }
    t
}

/// The torus element `z` of the factorization of `θ`, as a diagonal.
pub fn z_torus(n: usize, p: usize) -> Vec<C64> {
    if 2 * p == n {
        return vec![re(1.0); n];
    }
    let ph = (I * (PI * p as f64 / n as f64)).exp();
    let sp = if p % 2 == 0 { 1.0 } else { -1.0 };
    let snp = if (n - p) % 2 == 0 { 1.0 } else { -1.0 };
    (0..n).map(|j| ph * if j < p { sp } else { -snp }).collect()
}

/// `z_i = z(α_i)` for `i = 1, …, N-1`.
pub fn z_simple(n: usize, p: usize) -> Vec<C64> {
    let z = z_torus(n, p);
    (0..n - 1).map(|i| z[i] / z[i + 1]).collect()
}

/// Square root of `z_i` with phase in `[0, 1)` half-turns.
pub fn kappa(z: C64) -> C64 {
    let mut a = z.arg() / PI;
    if a < 0.0 {
        a += 2.0;
    }
    (I * (PI * a / 2.0)).exp()
}

#[derive(Clone, Debug, Serialize)]
pub struct CoidealParams {
    pub n: usize,
    pub p: usize,
    pub tag: HermitianTag,
    /// `c[i-1]`, zero on `X`.
    pub c: Vec<C64>,
    /// `s[i-1]`.
    pub s: Vec<C64>,
    /// Constant term of `c_p = c0 q^κ` (C-type) or `s_p` (S-type).
    pub c0: C64,
    pub kappa_exp: f64,
    pub q: f64,
}

fn minus_part_norm(sd: &SatakeData, i: usize) -> Q {
    let a = &sd.root_system.simple_roots[i - 1];
    let t = sd.theta(a);
    let m: Vec<Q> = a.iter().zip(&t).map(|(x, y)| (x - y) * rat(1, 2)).collect();
    sd.root_system.pairing(&m, &m).unwrap()
}

impl CoidealParams {
    fn base(n: usize, p: usize, q: f64) -> Result<(SatakeData, Vec<C64>)> {
        check_q(q)?;
        let sd = build_aiii(n, p)?;
        let c = (1..n)
            .map(|i| {
                if sd.x.contains(&i) {
                    re(0.0)
                } else {
                    re(q.powf(-to_f64(&minus_part_norm(&sd, i))))
                }
            })
            .collect();
        Ok((sd, c))
    }

    /// The standard parameter `t = 0`.
    pub fn standard(n: usize, p: usize, q: f64) -> Result<Self> {
        if 2 * p == n {
            Self::s_type(n, q, re(0.0))
        } else {
            Self::c_type(n, p, q, re(1.0), -0.5)
        }
    }

    /// S-type (`N = 2p`) with a given `s_p`; membership in `𝒯*` needs `s_p ∈ iℝ`.
    pub fn s_type(n: usize, q: f64, s_p: C64) -> Result<Self> {
        if n % 2 != 0 {
            return Err(Error::Parameter(format!("S-type needs even N, got {n}")));
        }
        let p = n / 2;
        let (sd, c) = Self::base(n, p, q)?;
        let mut s = vec![re(0.0); n - 1];
        s[p - 1] = s_p;
        let out = CoidealParams { n, p, tag: sd.hermitian_tag, c, s, c0: s_p, kappa_exp: 0.0, q };
        Ok(out)
    }

    /// C-type with `c_p = c0 q^κ`; `c_{N-p}` is fixed by `c_p c_{N-p} = q^{-2(α_p^-, α_p^-)}`.
    pub fn c_type(n: usize, p: usize, q: f64, c0: C64, kappa_exp: f64) -> Result<Self> {
        if 2 * p >= n {
            return Err(Error::Parameter(format!("C-type needs p < N/2, got N = {n}, p = {p}")));
        }
        let (sd, mut c) = Self::base(n, p, q)?;
        if c0.norm() == 0.0 {
            return Err(Error::Parameter("c0 must be nonzero".into()));
        }
        let cp = c0 * q.powf(kappa_exp);
        let prod = q.powf(-2.0 * to_f64(&minus_part_norm(&sd, p)));
        c[p - 1] = cp;
        c[n - p - 1] = re(prod) / cp;
        Ok(CoidealParams { n, p, tag: sd.hermitian_tag, c, s: vec![re(0.0); n - 1], c0, kappa_exp, q })
    }

    /// Membership in `𝒯*`.
    pub fn validate(&self) -> Result<()> {
        match self.tag {
            HermitianTag::S => {
                let sp = self.s[self.p - 1];
                if sp.re.abs() > 1e-12 * sp.norm().max(1.0) {
                    return Err(Error::Domain(format!("s_p = {sp} is not purely imaginary")));
                }
            }
            HermitianTag::C => {
                let cp = self.c[self.p - 1];
                if cp.im.abs() > 1e-12 * cp.norm() || cp.re <= 0.0 {
                    return Err(Error::Domain(format!("c_p = {cp} is not positive")));
                }
            }
            HermitianTag::NonHermitian => return Err(Error::Unsupported("non-Hermitian pair".into())),
        }
        Ok(())
    }

    pub fn c_p(&self) -> C64 {
        self.c[self.p - 1]
    }

    pub fn s_p(&self) -> C64 {
        self.s[self.p - 1]
    }
}

/// Matrices of the `B_i`, of `U_q(g_X)` and of `U(h^θ)` in the vector representation.
pub fn coideal_generators(t: &CoidealParams) -> Result<Vec<CMat>> {
    t.validate()?;
    coideal_generators_unchecked(t)
}

pub fn coideal_generators_unchecked(t: &CoidealParams) -> Result<Vec<CMat>> {
    let (n, p, q) = (t.n, t.p, t.q);
    let uq = fundamental(n, q)?;
    let tw = lusztig_wx(n, p, q);
    let twi = inv(&tw)?;
    let z = z_simple(n, p);
    let x: Vec<usize> = (p + 1..n - p).collect();
    let mut out = Vec::new();
    for i in 1..n {
        if x.contains(&i) {
            continue;
        }
        let ti = n - i;
        let ki = inv(&uq.k[i - 1])?;
        let mut b = &uq.f[i - 1] - &tw * &uq.e[ti - 1] * &twi * &ki * (t.c[i - 1] * z[ti - 1]);
        if t.s[i - 1] != re(0.0) {
            b += (&ki - eye(n)) * (t.s[i - 1] * kappa(z[i - 1]) / (1.0 / q - 1.0));
        }
        out.push(b);
    }
    for &i in &x {
        out.push(uq.e[i - 1].clone());
        out.push(uq.f[i - 1].clone());
        out.push(uq.k[i - 1].clone());
    }
    out.extend(h_theta_basis(n, p));
    Ok(out)
}

fn h_theta_basis(n: usize, p: usize) -> Vec<CMat> {
    let mut out: Vec<CMat> = (0..p).map(|j| unit(n, j, j) + unit(n, n - 1 - j, n - 1 - j)).collect();
    out.extend((p..n - p).map(|j| unit(n, j, j)));
    out
}

/// The `q → 1` limit of the coideal generators with the given constant terms.
pub fn limit_generators(t: &CoidealParams) -> Vec<CMat> {
    let (n, p) = (t.n, t.p);
    let tw = lusztig_wx(n, p, 1.0);
    let z = z_simple(n, p);
    let x: Vec<usize> = (p + 1..n - p).collect();
    let c0 = |i: usize| -> C64 {
        match t.tag {
            HermitianTag::C if i == p => t.c0,
            HermitianTag::C if i == n - p => re(1.0) / t.c0,
            _ => re(1.0),
        }
    };
    let mut out = Vec::new();
    for i in 1..n {
        if x.contains(&i) {
            out.push(unit(n, i - 1, i));
            out.push(unit(n, i, i - 1));
            continue;
        }
        let ti = n - i;
        let h = unit(n, i - 1, i - 1) - unit(n, i, i);
        let e = &tw * unit(n, ti - 1, ti) * tw.transpose();
        out.push(unit(n, i, i - 1) - e * (c0(i) * z[ti - 1]) + h * (t.s[i - 1] * kappa(z[i - 1])));
    }
    for d in h_theta_basis(n, p) {
        let tr = trace(&d) / re(n as f64);
        out.push(d - eye(n) * tr);
    }
    out
}

/// Basis (as `N×N` matrices) of `{K : [K, x] = 0 for all x}`.
pub fn commutant(gens: &[CMat], n: usize) -> CMat {
    let rows: Vec<CMat> =
        gens.iter().map(|g| kron(&eye(n), &g.transpose()) - kron(g, &eye(n))).collect();
    let mut m = CMat::zeros(rows.len() * n * n, n * n);
    for (k, r) in rows.iter().enumerate() {
        m.view_mut((k * n * n, 0), (n * n, n * n)).copy_from(r);
    }
    nullspace(&m, 1e-10)
}

/// Linear span of the Mudrov shape with block size `r`.
pub fn mudrov_shape_basis(n: usize, r: usize) -> Vec<CMat> {
    let mut out = Vec::new();
    let mut top = CMat::zeros(n, n);
    for i in 0..r {
        top[(i, i)] = re(1.0);
    }
    out.push(top);
    if n > 2 * r {
        let mut mid = CMat::zeros(n, n);
        for i in r..n - r {
            mid[(i, i)] = re(1.0);
        }
        out.push(mid);
    }
    for i in (0..r).chain(n - r..n) {
        out.push(unit(n, i, n - 1 - i));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct MudrovParams {
    pub lambda: C64,
    pub mu_m: C64,
    pub r_block: usize,
    /// `y[i-1]` is the antidiagonal entry in row `i` (zero outside the outer blocks).
    pub y: Vec<C64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InferResult {
    pub s: f64,
    pub s_plus_mu: C64,
    pub g: C64,
    pub g_defect: f64,
    pub closed_form: C64,
    pub discrepancy: f64,
    pub both_signs_fit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KMatrixResult {
    #[serde(skip)]
    pub k: CMat,
    pub mudrov: MudrovParams,
    pub eigenvalues: Vec<C64>,
    pub inferred: InferResult,
    pub commutant_residual: f64,
    pub reflection_residual: f64,
    pub mudrov_residual: f64,
    /// C-type: mismatch of `K_{p+1,p+1}` with the independently normalized value.
    pub normalization_check: f64,
}

/// `‖K_1 R̂ K_1 R̂ - R̂ K_1 R̂ K_1‖` with `R̂ = ΣR`.
pub fn reflection_residual(k: &CMat, q: f64) -> Result<f64> {
    let n = k.nrows();
    let rh = flip(n) * r_matrix(n, q)?;
    let k1 = kron(k, &eye(n));
    Ok(dist(&(&k1 * &rh * &k1 * &rh), &(&rh * &k1 * &rh * &k1)))
}

pub fn commutant_residual(k: &CMat, gens: &[CMat]) -> f64 {
    gens.iter().map(|g| norm(&comm(k, g))).fold(0.0, f64::max)
}

/// `(L, L)` with `L^+ = (L + ΘL)/2` for each basis weight `L_i`.
fn plus_norms(sd: &SatakeData) -> Vec<f64> {
    (1..=sd.n)
        .map(|i| {
            let l = sd.root_system.weight_l(i);
            let t = sd.theta(&l);
            let v: Vec<Q> = l.iter().zip(&t).map(|(a, b)| (a + b) * rat(1, 2)).collect();
            to_f64(&sd.root_system.pairing(&v, &v).unwrap())
        })
        .collect()
}

/// `π_V(ξ')`: `e_i ↦ conj(z(Θ L_i)) q^{-(L_i^+, L_i^+)} e_i`.
pub fn xi_prime(n: usize, p: usize, q: f64) -> Result<CMat> {
    let sd = build_aiii(n, p)?;
    let z = z_torus(n, p);
    let pn = plus_norms(&sd);
    let d: Vec<C64> = (0..n)
        .map(|i| {
            let t = sd.theta(&sd.root_system.weight_l(i + 1));
            let j = t.iter().position(|x| !x.is_zero()).unwrap();
            z[j].conj() * q.powf(-pn[i])
        })
        .collect();
    Ok(diag(&d))
}

/// Entries fixing the scale: `(K_{N1}, K_{p+1,p+1})`, the latter for C-type only.
pub fn normalization_entries(t: &CoidealParams) -> Result<(C64, Option<C64>)> {
    let (n, p, q) = (t.n, t.p, t.q);
    let m = xi_prime(n, p, q)? * inv(&lusztig_wx(n, p, q))? * inv(&lusztig_w0(n, q))?;
    match t.tag {
        HermitianTag::S => Ok((m[(n - 1, 0)], None)),
        HermitianTag::C => {
            let chi = re(1.0) / (t.c_p() * q.sqrt());
            let kn1 = m[(n - 1, 0)] * chi.powf((2.0 * p as f64 - n as f64) / n as f64);
            let kpp = m[(p, p)] * chi.powf(2.0 * p as f64 / n as f64);
            Ok((kn1, Some(kpp)))
        }
        HermitianTag::NonHermitian => Err(Error::Unsupported("non-Hermitian pair".into())),
    }
}

/// S-type closed form `(-1)^{p-1} q^{1/(2p)-p} [[q^{1/2}(q+1)s_p I, -A_pᵀ], [A_p, 0]]`.
pub fn closed_form_s(n: usize, q: f64, s_p: C64) -> CMat {
    let p = n / 2;
    let a = alt_antidiag(p);
    let mut k = CMat::zeros(n, n);
    k.view_mut((0, 0), (p, p)).copy_from(&(eye(p) * (re(q.sqrt() * (q + 1.0)) * s_p)));
    k.view_mut((0, p), (p, p)).copy_from(&(-a.transpose()));
    k.view_mut((p, 0), (p, p)).copy_from(&a);
    let sign = if (p - 1) % 2 == 0 { 1.0 } else { -1.0 };
    k * re(sign * q.powf(1.0 / (2.0 * p as f64) - p as f64))
}

/// The Mudrov pair `(λ, μ)` of the C-type closed form.
pub fn closed_form_c_lambda_mu(n: usize, p: usize, q: f64, c_p: C64) -> (C64, C64) {
    let (nf, pf) = (n as f64, p as f64);
    let lam = (I * (-PI * pf / nf)).exp() * q.powf(1.0 / nf - (nf - pf) - pf / nf) * c_p.powf(-2.0 * pf / nf);
    let mu = (I * (PI * (nf - pf) / nf)).exp() * q.powf(1.0 / nf - pf + (nf - pf) / nf) * c_p.powf(2.0 * (nf - pf) / nf);
    (lam, mu)
}

pub fn closed_form_c(n: usize, p: usize, q: f64, c_p: C64) -> CMat {
    let (lam, mu) = closed_form_c_lambda_mu(n, p, q, c_p);
    let a = alt_antidiag(p);
    let m = n - 2 * p;
    let mut k = CMat::zeros(n, n);
    k.view_mut((0, 0), (p, p)).copy_from(&(eye(p) * (lam + mu)));
    k.view_mut((p, p), (m, m)).copy_from(&(eye(m) * lam));
    let e = (n as f64 + 1.0) / 2.0 - p as f64;
    k.view_mut((0, n - p), (p, p)).copy_from(&(a.transpose() * (-(re(q.powf(e)) * c_p * lam))));
    k.view_mut((n - p, 0), (p, p)).copy_from(&(a * (re(q.powf(-e)) / c_p * mu)));
    k
}

pub fn closed_form(t: &CoidealParams) -> CMat {
    match t.tag {
        HermitianTag::S => closed_form_s(t.n, t.q, t.s_p()),
        _ => closed_form_c(t.n, t.p, t.q, t.c_p()),
    }
}

/// Solve the commutant system inside the Mudrov family and normalize the scalar.
pub fn solve_kmatrix(t: &CoidealParams) -> Result<KMatrixResult> {
    t.validate()?;
    solve_kmatrix_unchecked(t)
}

pub fn solve_kmatrix_unchecked(t: &CoidealParams) -> Result<KMatrixResult> {
    let (n, p, q) = (t.n, t.p, t.q);
    let gens = coideal_generators_unchecked(t)?;
    let shape = mudrov_shape_basis(n, p);
    let mut m = CMat::zeros(gens.len() * n * n, shape.len());
    for (col, sb) in shape.iter().enumerate() {
        for (k, g) in gens.iter().enumerate() {
            let v = vec_rm(&comm(sb, g));
            m.view_mut((k * n * n, col), (n * n, 1)).copy_from(&v);
        }
    }
    let ns = nullspace(&m, 1e-10);
    if ns.ncols() == 0 {
        return Err(Error::NoNonconstant("the Mudrov family has no commuting member".into()));
    }
    if ns.ncols() != 1 {
        return Err(Error::Structural(format!("commutant ∩ Mudrov family has dimension {}", ns.ncols())));
    }
    let mut k = CMat::zeros(n, n);
    for (col, sb) in shape.iter().enumerate() {
        k += sb * ns[(col, 0)];
    }
    let scalar_part = eye(n) * (trace(&k) / re(n as f64));
    if norm(&(&k - scalar_part)) < 1e-10 * norm(&k) {
        return Err(Error::NoNonconstant("only scalar solutions".into()));
    }
    let (kn1, kpp) = normalization_entries(t)?;
    if k[(n - 1, 0)].norm() < 1e-12 * norm(&k) {
        return Err(Error::Structural("solution has vanishing K_{N1}".into()));
    }
    k *= kn1 / k[(n - 1, 0)];
    let normalization_check = kpp.map(|v| (k[(p, p)] - v).norm()).unwrap_or(0.0);

    let mudrov = fit_mudrov(&k, p);
    let mudrov_residual = (0..n)
        .filter(|&i| i < p || i >= n - p)
        .map(|i| (mudrov.y[i] * mudrov.y[n - 1 - i] + mudrov.lambda * mudrov.mu_m).norm())
        .fold(0.0, f64::max);
    let eigenvalues = crate::linalg::eigenvalues(&k);
    let inferred = fit_s_mu(&k, t)?;
    Ok(KMatrixResult {
        commutant_residual: commutant_residual(&k, &gens),
        reflection_residual: reflection_residual(&k, q)?,
        k,
        mudrov,
        eigenvalues,
        inferred,
        mudrov_residual,
        normalization_check,
    })
}

fn fit_mudrov(k: &CMat, r: usize) -> MudrovParams {
    let n = k.nrows();
    let y: Vec<C64> = (0..n).map(|i| if i < r || i >= n - r { k[(i, n - 1 - i)] } else { re(0.0) }).collect();
    let top = k[(0, 0)];
    let (lambda, mu_m) = if n > 2 * r {
        let lam = k[(r, r)];
        (lam, top - lam)
    } else {
        // λ + μ and λμ = -y_1 y_N; λ is the root with the larger imaginary part
        let prod = -y[0] * y[n - 1];
        let disc = (top * top - prod * 4.0).sqrt();
        let (a, b) = ((top + disc) / 2.0, (top - disc) / 2.0);
        if a.im >= b.im { (a, b) } else { (b, a) }
    };
    MudrovParams { lambda, mu_m, r_block: r, y }
}

fn span_closure(gens: &[CMat]) -> Vec<CMat> {
    let mut ortho: Vec<nalgebra::DVector<C64>> = Vec::new();
    let mut basis: Vec<CMat> = Vec::new();
    let add = |x: &CMat, ortho: &mut Vec<nalgebra::DVector<C64>>, basis: &mut Vec<CMat>| -> bool {
        let mut v = vec_rm(x);
        let scale = v.norm();
        if scale < 1e-14 {
            return false;
        }
        for o in ortho.iter() {
            let c_ = o.dotc(&v);
            v -= o * c_;
        }
        if v.norm() < 1e-9 * scale {
            return false;
        }
        ortho.push(&v / re(v.norm()));
        basis.push(x.clone());
        true
    };
    for g in gens {
        add(g, &mut ortho, &mut basis);
    }
    loop {
        let snapshot = basis.clone();
        let mut changed = false;
        for a in &snapshot {
            for b in &snapshot {
                if add(&comm(a, b), &mut ortho, &mut basis) {
                    changed = true;
                }
            }
        }
        if !changed {
            return basis;
        }
    }
}

/// The classical-limit data `(Z, C)`: the normalized center of `g^θ_t` and its Casimir.
pub fn limit_center_and_casimir(t: &CoidealParams) -> Result<(CMat, CMat, usize)> {
    let (n, p) = (t.n, t.p);
    let basis = span_closure(&limit_generators(t));
    let d = basis.len();
    let mut m = CMat::zeros(d * n * n, d);
    for (col, x) in basis.iter().enumerate() {
        for (l, b) in basis.iter().enumerate() {
            m.view_mut((l * n * n, col), (n * n, 1)).copy_from(&vec_rm(&comm(x, b)));
        }
    }
    let ns = nullspace(&m, 1e-9);
    if ns.ncols() != 1 {
        return Err(Error::Comparison(format!("center of the limit algebra has dimension {}", ns.ncols())));
    }
    let mut z = CMat::zeros(n, n);
    for (k, x) in basis.iter().enumerate() {
        z += x * ns[(k, 0)];
    }
    let a2 = 2.0 * n as f64 / (2.0 * (p * (n - p)) as f64);
    let scale = (trace(&(&z * &z)) * (-a2)).sqrt();
    z /= scale;
    let sign = match t.tag {
        HermitianTag::S => z[(p, p - 1)].re,
        _ => {
            let dd = |i: usize| z[(i, i)];
            (-I * (dd(p - 1) - dd(p)) + I * (dd(n - p - 1) - dd(n - p))).re
        }
    };
    if sign < 0.0 {
        z = -z;
    }
    let gram = CMat::from_fn(d, d, |i, j| trace(&(&basis[i] * &basis[j])));
    let gi = inv(&gram)?;
    let mut cas = CMat::zeros(n, n);
    for i in 0..d {
        for j in 0..d {
            cas += &basis[i] * &basis[j] * gi[(i, j)];
        }
    }
    Ok((z, cas, d))
}

/// Closed-form `s + μ` for the given parameters.
pub fn closed_form_s_plus_mu(t: &CoidealParams) -> C64 {
    let q = t.q;
    match t.tag {
        HermitianTag::S => {
            let sp = t.s_p();
            let r = (re(1.0) - sp * sp * (q * (q + 1.0) * (q + 1.0) / 4.0)).sqrt() - I * sp * (q.sqrt() * (q + 1.0) / 2.0);
            r.ln() * (2.0 / PI)
        }
        _ => t.c_p().ln() * (2.0 / PI) + re(q.ln() / PI),
    }
}

/// The classical parameter `s`.
pub fn classical_s(t: &CoidealParams) -> f64 {
    match t.tag {
        HermitianTag::S => {
            let cc = (-I * t.s_p()).re;
            (2.0 / PI) * ((1.0 + cc * cc).sqrt() + cc).ln()
        }
        _ => (2.0 / PI) * t.c0.re.ln(),
    }
}

fn two_clusters(ev: &[C64]) -> Result<(C64, C64)> {
    let scale = ev.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    let k1 = ev[0];
    let others: Vec<C64> = ev.iter().cloned().filter(|z| (z - k1).norm() > 1e-6 * scale).collect();
    let Some(&k2) = others.first() else {
        return Err(Error::Comparison("K has a single eigenvalue".into()));
    };
    if others.iter().any(|z| (z - k2).norm() > 1e-6 * scale) {
        return Err(Error::Comparison("K has more than two distinct eigenvalues".into()));
    }
    Ok((k1, k2))
}

fn sigma_g(ka: C64, kb: C64, ca: f64, cb: f64, za: f64, h: f64) -> (C64, C64) {
    let mut sig = ((ka / kb).ln() + re(h * (ca - cb)) - I * PI) / PI;
    let mut im = (sig.im + 1.0).rem_euclid(2.0) - 1.0;
    if im <= -1.0 {
        im += 2.0;
    }
    sig = c(sig.re, im);
    let g = ka / (re(-h * ca) + I * (PI * za) + sig * (PI * za)).exp();
    (sig, g)
}

/// Match the eigenvalues of `K` against `exp(-hC^{k_t} + π(1 - is - iμ)Z^t_θ) g`.
pub fn fit_s_mu(k: &CMat, t: &CoidealParams) -> Result<InferResult> {
    let (n, p) = (t.n, t.p);
    let h = t.q.ln();
    let (z, cas, _) = limit_center_and_casimir(t)?;
    let za = 1.0 - p as f64 / n as f64;
    let zb = -(p as f64) / n as f64;
    let pa = (&z - eye(n) * (I * zb)) / (I * (za - zb));
    let pb = eye(n) - &pa;
    let ra = trace(&pa).re;
    let ca = (trace(&(&cas * &pa)) / trace(&pa)).re;
    let cb = (trace(&(&cas * &pb)) / trace(&pb)).re;
    let ev = crate::linalg::eigenvalues(k);
    let (k1, k2) = two_clusters(&ev)?;
    let riesz = (k - eye(n) * k2) / (k1 - k2);
    let mult1 = trace(&riesz).re;
    let first_is_a = dist(&riesz, &pa) < dist(&riesz, &pb);
    let (ka, kb) = if first_is_a { (k1, k2) } else { (k2, k1) };
    if (if first_is_a { mult1 } else { n as f64 - mult1 } - ra).abs() > 1e-6 {
        return Err(Error::Comparison("eigenvalue multiplicities do not match Z-eigenspaces".into()));
    }
    let (sig, g) = sigma_g(ka, kb, ca, cb, za, h);
    let g_defect = (g.powi(n as i32) - re(1.0)).norm();
    if g_defect > 1e-6 {
        return Err(Error::Comparison(format!("fitted g = {g} is not central (|g^N - 1| = {g_defect:.2e})")));
    }
    let both_signs_fit = (ra - (n as f64 - ra)).abs() < 1e-9 && {
        let (_, g2) = sigma_g(kb, ka, ca, cb, za, h);
        (g2.powi(n as i32) - re(1.0)).norm() < 1e-6
    };
    let closed = closed_form_s_plus_mu(t);
    Ok(InferResult {
        s: classical_s(t),
        s_plus_mu: sig,
        g,
        g_defect,
        closed_form: closed,
        discrepancy: (sig - closed).norm(),
        both_signs_fit,
    })
}

/// [`fit_s_mu`] on a solved K-matrix, asserting the closed form to `1e-9`.
pub fn infer_s_mu(kr: &KMatrixResult, t: &CoidealParams) -> Result<InferResult> {
    let r = fit_s_mu(&kr.k, t)?;
    if r.discrepancy > 1e-9 {
        return Err(Error::Comparison(format!(
            "fitted s+μ = {} differs from the closed form {} by {:.2e}",
            r.s_plus_mu, r.closed_form, r.discrepancy
        )));
    }
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct QuasiKResult {
    pub x: CMat,
    pub k: CMat,
    pub max_residual: f64,
}

/// Solve the quasi-K recursion weight by weight in `End(V)` (S-type only).
pub fn quasi_k_in_rep(n: usize, p: usize, q: f64) -> Result<QuasiKResult> {
    check_q(q)?;
    let sd = build_aiii(n, p)?;
    if sd.hermitian_tag != HermitianTag::S {
        return Err(Error::Unsupported("quasi-K recursion is implemented for S-type only".into()));
    }
    let uq = fundamental(n, q)?;
    let rs = &sd.root_system;
    let weight_of = |a: usize, b: usize| -> Vec<Q> {
        let mut v = vec![Q::zero(); n];
        v[a] += Q::from_integer(1);
        v[b] -= Q::from_integer(1);
        v
    };
    let mut comps: Vec<(Vec<Q>, CMat)> = vec![(vec![Q::zero(); n], eye(n))];
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.sort_by_key(|&(a, b)| (b - a, a));
    let mut worst: f64 = 0.0;
    for (a, b) in pairs {
        let mu = weight_of(a, b);
        let eab = unit(n, a, b);
        let mut cols: Vec<C64> = Vec::new();
        let mut rhs: Vec<C64> = Vec::new();
        for i in 1..n {
            let al = &rs.simple_roots[i - 1];
            let th = sd.theta(al);
            let ath = to_f64(&rs.pairing(al, &th)?);
            let cp = q.powf(ath / 2.0);
            let nu: Vec<Q> = mu.iter().zip(al).zip(&th).map(|((m, x), y)| m - x + y).collect();
            let xnu = comps.iter().find(|(w, _)| *w == nu).map(|(_, m)| m.clone()).unwrap_or_else(|| CMat::zeros(n, n));
            let ti = sd.tau[i - 1];
            let xi = -&uq.e[ti - 1];
            let bar_cxi = &uq.e[ti - 1] * re(-1.0 / cp);
            let ki = &uq.k[i - 1];
            let r = &xnu * bar_cxi * ki - inv(ki)? * (xi * re(cp)) * &xnu * re(q.powf(-ath));
            let lhs = comm(&uq.f[i - 1], &eab);
            cols.extend(vec_rm(&lhs).iter());
            rhs.extend(vec_rm(&r).iter());
        }
        let col = nalgebra::DVector::from_vec(cols);
        let y = nalgebra::DVector::from_vec(rhs);
        let denom = col.dotc(&col);
        let x = if denom.norm() > 0.0 { col.dotc(&y) / denom } else { re(0.0) };
        let res = (&col * x - &y).norm();
        worst = worst.max(res);
        if res > 1e-9 {
            return Err(Error::Inconsistency { weight: format!("L{}-L{}", a + 1, b + 1), residual: res });
        }
        comps.push((mu, eab * x));
    }
    let x: CMat = comps.iter().fold(CMat::zeros(n, n), |acc, (_, m)| acc + m);
    let k = &x * xi_prime(n, p, q)? * inv(&lusztig_wx(n, p, q))? * inv(&lusztig_w0(n, q))?;
    Ok(QuasiKResult { x, k, max_residual: worst })
}

/// `K_a ≈ λ K_b`: best scalar and entrywise mismatch.
pub fn scalar_match(a: &CMat, b: &CMat) -> (C64, f64) {
    let num: C64 = b.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum();
    let den: C64 = b.iter().map(|x| x.conj() * x).sum();
    let lam = num / den;
    (lam, max_abs(&(a - b * lam)))
}

pub fn qint(k: i64, q: f64) -> f64 {
    (q.powi(k as i32) - q.powi(-(k as i32))) / (q - 1.0 / q)
}

/// Module `V_n` of dimension `2n+1` on the basis `F^k ξ`, as `(E, F, K)`.
pub fn sl2_module(n: usize, q: f64) -> (CMat, CMat, CMat) {
    let d = 2 * n + 1;
    let mut e = CMat::zeros(d, d);
    let mut f = CMat::zeros(d, d);
    let kk = diag(&(0..d).map(|k| re(q.powi(2 * n as i32 - 2 * k as i32))).collect::<Vec<_>>());
    for k in 1..d {
        e[(k - 1, k)] = re(qint(k as i64, q) * qint(2 * n as i64 - k as i64 + 1, q));
        f[(k, k - 1)] = re(1.0);
    }
    (e, f, kk)
}

pub fn sl2_b(n: usize, cc: C64, s: C64, q: f64) -> Result<CMat> {
    let (e, f, k) = sl2_module(n, q);
    let ki = inv(&k)?;
    let d = 2 * n + 1;
    Ok(f - e * &ki * cc + (ki - eye(d)) * s)
}

/// A nonzero vector killed by `B = F - cEK^{-1} + s(K^{-1} - 1)`, scaled so the `ξ` coefficient is 1.
pub fn sl2_spherical(n: usize, cc: C64, s: C64, q: f64) -> Result<Vec<C64>> {
    check_q(q)?;
    if cc.norm() == 0.0 {
        return Err(Error::Parameter("c must be nonzero".into()));
    }
    let b = sl2_b(n, cc, s, q)?;
    let ns = nullspace(&b, 1e-12);
    if ns.ncols() == 0 {
        return Err(Error::Solver("B has trivial kernel".into()));
    }
    let v: Vec<C64> = ns.column(0).iter().cloned().collect();
    let lead = v[0];
    if lead.norm() < 1e-12 {
        return Ok(v);
    }
    Ok(v.iter().map(|x| x / lead).collect())
}

/// The vector of the rank-one lemma for `n = 1`.
pub fn sl2_spherical_n1_formula(cc: C64, s: C64, q: f64) -> Vec<C64> {
    let d = cc * (q * q * qint(2, q));
    vec![re(1.0), s * (1.0 - q * q) / d, re(1.0) / d]
}


#[cfg(test)]
mod tests {
    use super::*;

    const Q1: f64 = 1.1051709180756477; // e^{0.1}

    #[test]
    fn fundamental_relations() {
        for n in 2..6 {
            let uq = fundamental(n, Q1).unwrap();
            assert!(uq.relation_residual() < 1e-12);
        }
        assert!(matches!(fundamental(3, 0.0), Err(Error::Parameter(_))));
        let uq = fundamental(3, Q1).unwrap();
        let a1 = vec![Q::from_integer(1), Q::from_integer(-1), Q::zero()];
        assert!(dist(&uq.k_weight(&a1), &uq.k[0]) < 1e-14);
    }

    #[test]
    fn r_matrix_examples() {
        let q = 1.3;
        let r = r_matrix(2, q).unwrap();
        let mut expect = diag(&[re(1.0 / q), re(1.0), re(1.0), re(1.0 / q)]);
        expect += kron(&unit(2, 0, 1), &unit(2, 1, 0)) * re(1.0 / q - q);
        assert!(dist(&r, &expect) < 1e-15);
        assert!(dist(&r_matrix(3, 1.0).unwrap(), &eye(9)) < 1e-15);
        for n in [2, 3] {
            let rh = flip(n) * r_matrix(n, q).unwrap();
            let a = kron(&rh, &eye(n));
            let b = kron(&eye(n), &rh);
            assert!(dist(&(&a * &b * &a), &(&b * &a * &b)) < 1e-12);
        }
    }

    #[test]
    fn lusztig_elements() {
        let t = lusztig_w0(2, Q1);
        let expect = CMat::from_row_slice(2, 2, &[re(0.0), re(1.0), re(-1.0), re(0.0)]) * re(Q1.sqrt());
        assert!(dist(&t, &expect) < 1e-15);
        assert!(dist(&lusztig_wx(3, 1, Q1), &eye(3)) < 1e-15);
        for n in 1..7 {
            let a = alt_antidiag(n);
            let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            assert!(dist(&(&a * &a), &(eye(n) * re(sign))) < 1e-15);
        }
    }

    #[test]
    fn z_rule() {
        // z_i conj(z_{τ(i)}) = (-1)^{2(α_i, ρ_X^∨)}
        for (n, p) in [(3, 1), (4, 1), (5, 1), (5, 2), (6, 2), (4, 2)] {
            let z = z_simple(n, p);
            let zt = z_torus(n, p);
            let det: C64 = zt.iter().product();
            assert!((det - re(1.0)).norm() < 1e-12);
            for i in 1..n {
                if i > p && i < n - p {
                    assert!((z[i - 1] - re(1.0)).norm() < 1e-14);
                    continue;
                }
                let expect = if 2 * p < n && (i == p || i == n - p) && n % 2 == 0 { -1.0 } else { 1.0 };
                assert!((z[i - 1] * z[n - i - 1].conj() - re(expect)).norm() < 1e-12, "{n} {p} {i}");
            }
        }
    }

    #[test]
    fn generator_examples() {
        let t = CoidealParams::standard(2, 1, Q1).unwrap();
        let g = coideal_generators(&t).unwrap();
        let k1 = diag(&[re(1.0 / Q1), re(Q1)]);
        let expect = unit(2, 1, 0) * re(Q1.powf(-0.5)) - unit(2, 0, 1) * k1 * re(Q1.powf(-2.0) * Q1.sqrt());
        assert!(dist(&g[0], &expect) < 1e-14);

        let cp = C64::new(0.8, 0.0);
        let t = CoidealParams::c_type(3, 1, Q1, cp, 0.0).unwrap();
        let g = coideal_generators(&t).unwrap();
        let expect = unit(3, 1, 0) * re(Q1.powf(-0.5)) - unit(3, 1, 2) * (cp * Q1.powf(1.5 - 1.0));
        assert!(dist(&g[0], &expect) < 1e-14);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(CoidealParams::s_type(4, Q1, re(0.3)).unwrap().validate(), Err(Error::Domain(_))));
        assert!(matches!(CoidealParams::c_type(3, 1, Q1, re(-1.0), 0.0).unwrap().validate(), Err(Error::Domain(_))));
        let t = CoidealParams::c_type(5, 2, Q1, re(0.7), -0.5).unwrap();
        let prod = t.c[1] * t.c[2];
        assert!((prod - re(1.0 / Q1)).norm() < 1e-14);
        assert!((t.c[0] - re(1.0 / Q1)).norm() < 1e-14);
    }

    #[test]
    fn classical_limit_of_generators() {
        for t in [
            CoidealParams::s_type(4, 1.0 + 1e-7, I * 0.3).unwrap(),
            CoidealParams::c_type(5, 2, 1.0 + 1e-7, re(0.6), -0.5).unwrap(),
        ] {
            let g = coideal_generators(&t).unwrap();
            let l = limit_generators(&t);
            let nb = (1..t.n).filter(|i| !(*i > t.p && *i < t.n - t.p)).count();
            for k in 0..nb {
                assert!(dist(&g[k], &l[k]) < 1e-5);
            }
        }
        for (n, p) in [(2, 1), (3, 1), (4, 2), (5, 1), (5, 2), (6, 3)] {
            let t = CoidealParams::standard(n, p, Q1).unwrap();
            let (_, _, d) = limit_center_and_casimir(&t).unwrap();
            assert_eq!(d, p * p + (n - p) * (n - p) - 1);
        }
    }

    #[test]
    fn commutant_is_two_dimensional() {
        for t in [
            CoidealParams::s_type(2, Q1, I * 0.3).unwrap(),
            CoidealParams::s_type(4, Q1, I * 0.3).unwrap(),
            CoidealParams::s_type(6, Q1, re(0.0)).unwrap(),
            CoidealParams::c_type(3, 1, Q1, re(0.7), 0.0).unwrap(),
            CoidealParams::c_type(4, 1, Q1, re(0.7), 0.0).unwrap(),
            CoidealParams::c_type(7, 2, Q1, re(1.3), -0.5).unwrap(),
        ] {
            let g = coideal_generators(&t).unwrap();
            assert_eq!(commutant(&g, t.n).ncols(), 2);
            let kc = closed_form(&t);
            assert!(commutant_residual(&kc, &g) < 1e-12);
        }
    }

    #[test]
    fn s_type_k_matrices() {
        let t = CoidealParams::standard(2, 1, Q1).unwrap();
        let kr = solve_kmatrix(&t).unwrap();
        let expect = CMat::from_row_slice(2, 2, &[re(0.0), re(-1.0), re(1.0), re(0.0)]) * re(Q1.powf(-0.5));
        assert!(dist(&kr.k, &expect) < 1e-12);
        for (n, sp) in [(4, I * 0.3), (6, I * -0.2), (2, I * 0.5)] {
            let t = CoidealParams::s_type(n, Q1, sp).unwrap();
            let kr = solve_kmatrix(&t).unwrap();
            assert!(max_abs(&(&kr.k - closed_form(&t))) < 1e-10);
            assert!(kr.reflection_residual < 1e-10);
            assert!(kr.commutant_residual < 1e-10);
            assert!(kr.mudrov_residual < 1e-10);
        }
    }

    #[test]
    fn c_type_k_matrices() {
        let t = CoidealParams::standard(3, 1, Q1).unwrap();
        let kr = solve_kmatrix(&t).unwrap();
        let (lam, mu) = closed_form_c_lambda_mu(3, 1, Q1, t.c_p());
        let expect_lam = (I * (-PI / 3.0)).exp() * Q1.powf(1.0 / 3.0 - 2.0);
        assert!((lam - expect_lam).norm() < 1e-14);
        let expect_mu = -(I * (-PI / 3.0)).exp() * Q1.powf(1.0 / 3.0 - 1.0);
        assert!((mu - expect_mu).norm() < 1e-14);
        assert!((kr.mudrov.lambda - lam).norm() < 1e-10);
        assert!((kr.mudrov.mu_m - mu).norm() < 1e-10);
        for (n, p, c0) in [(3, 1, 1.0), (4, 1, 0.7), (5, 2, 1.4), (7, 2, 0.9)] {
            let t = CoidealParams::c_type(n, p, Q1, re(c0), -0.5).unwrap();
            let kr = solve_kmatrix(&t).unwrap();
            assert!(max_abs(&(&kr.k - closed_form(&t))) < 1e-10, "{n} {p}");
            assert!(kr.normalization_check < 1e-10);
            assert!(kr.reflection_residual < 1e-10);
            assert!(kr.commutant_residual < 1e-10);
        }
    }

    #[test]
    fn lemma_value_of_k_n1() {
        let t = CoidealParams::standard(3, 1, Q1).unwrap();
        let (kn1, _) = normalization_entries(&t).unwrap();
        let expect = -(I * (-PI / 3.0)).exp() * Q1.powf(-7.0 / 6.0);
        assert!((kn1 - expect).norm() < 1e-14);
        for p in 1..4 {
            let t = CoidealParams::standard(2 * p, p, Q1).unwrap();
            let (kn1, _) = normalization_entries(&t).unwrap();
            assert!((kn1 - re(Q1.powf(0.5 / p as f64 - p as f64))).norm() < 1e-13);
        }
    }

    #[test]
    fn inferred_parameters() {
        let t = CoidealParams::standard(2, 1, Q1).unwrap();
        let r = solve_kmatrix(&t).unwrap().inferred;
        assert!(r.s_plus_mu.norm() < 1e-9);
        let t = CoidealParams::s_type(2, Q1, I * 0.3).unwrap();
        let kr = solve_kmatrix(&t).unwrap();
        let r = infer_s_mu(&kr, &t).unwrap();
        assert!((r.s_plus_mu - re(0.2076351488673539)).norm() < 1e-9);
        assert!((r.g - re(1.0)).norm() < 1e-9);
        assert!(r.both_signs_fit);
        let t = CoidealParams::s_type(4, Q1, I * 0.3).unwrap();
        let r = solve_kmatrix(&t).unwrap().inferred;
        assert!((r.g + re(1.0)).norm() < 1e-9);
        assert!(r.discrepancy < 1e-9);
        let t = CoidealParams::c_type(3, 1, Q1, re(0.5), -0.5).unwrap();
        let r = solve_kmatrix(&t).unwrap().inferred;
        assert!((r.s_plus_mu - re((2.0 / PI) * 0.5f64.ln())).norm() < 1e-9);
        assert!(!r.both_signs_fit);
        assert!((r.s - (2.0 / PI) * 0.5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn eigenvalue_moduli_match_the_kz_formula() {
        for t in [
            CoidealParams::s_type(4, Q1, I * 0.3).unwrap(),
            CoidealParams::c_type(5, 2, Q1, re(1.2), -0.5).unwrap(),
        ] {
            let kr = solve_kmatrix(&t).unwrap();
            let (z, cas, _) = limit_center_and_casimir(&t).unwrap();
            let h = Q1.ln();
            let x = cas * re(-h) + z * (re(PI) * (re(1.0) - I * kr.inferred.s_plus_mu));
            let m = crate::linalg::expm(&x) * kr.inferred.g;
            let mut a: Vec<f64> = kr.eigenvalues.iter().map(|z| z.norm()).collect();
            let mut b: Vec<f64> = crate::linalg::eigenvalues(&m).iter().map(|z| z.norm()).collect();
            a.sort_by(|x, y| x.partial_cmp(y).unwrap());
            b.sort_by(|x, y| x.partial_cmp(y).unwrap());
            assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-9));
        }
    }

    #[test]
    fn quasi_k() {
        let r = quasi_k_in_rep(2, 1, Q1).unwrap();
        assert!(dist(&r.x, &eye(2)) < 1e-14);
        let expect = CMat::from_row_slice(2, 2, &[re(0.0), re(-1.0), re(1.0), re(0.0)]) * re(Q1.powf(-0.5));
        assert!(dist(&r.k, &expect) < 1e-14);
        let r = quasi_k_in_rep(4, 2, Q1).unwrap();
        let kc = solve_kmatrix(&CoidealParams::standard(4, 2, Q1).unwrap()).unwrap().k;
        let (lam, err) = scalar_match(&kc, &r.k);
        assert!(err < 1e-9 && (lam.norm() - 1.0).abs() < 1e-9);
        assert!(matches!(quasi_k_in_rep(3, 1, Q1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn spherical_vectors() {
        let q = 1.3;
        let v = sl2_spherical(0, re(0.7), re(0.2), q).unwrap();
        assert_eq!(v.len(), 1);
        let (cc, s) = (C64::new(0.7, 0.1), C64::new(0.2, -0.4));
        let v = sl2_spherical(1, cc, s, q).unwrap();
        let w = sl2_spherical_n1_formula(cc, s, q);
        assert!(v.iter().zip(&w).all(|(a, b)| (a - b).norm() < 1e-12));
        for n in 2..5 {
            let v = sl2_spherical(n, cc, s, q).unwrap();
            let b = sl2_b(n, cc, s, q).unwrap();
            let vv = nalgebra::DVector::from_vec(v);
            assert!((&b * &vv).norm() / vv.norm() < 1e-12);
        }
    }
}
