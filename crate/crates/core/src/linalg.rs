//! Dense complex matrix helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn eye(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn zeros(n: usize) -> CMat {
    CMat::zeros(n, n)
}

/// Matrix unit `e_{ij}` (0-based).
pub fn unit(n: usize, i: usize, j: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(i, j)] = re(1.0);
    m
}

pub fn diag(v: &[C64]) -> CMat {
    CMat::from_diagonal(&nalgebra::DVector::from_column_slice(v))
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

pub fn kron_all(ms: &[CMat]) -> CMat {
    let mut it = ms.iter();
    let first = it.next().cloned().unwrap_or_else(|| eye(1));
    it.fold(first, |acc, m| acc.kronecker(m))
}

pub fn comm(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

pub fn norm(a: &CMat) -> f64 {
    a.norm()
}

pub fn dist(a: &CMat, b: &CMat) -> f64 {
    (a - b).norm()
}

pub fn max_abs(a: &CMat) -> f64 {
    a.iter().fold(0.0, |m, z| m.max(z.norm()))
}

pub fn expm(a: &CMat) -> CMat {
    a.clone().exp()
}

pub fn inv(a: &CMat) -> Result<CMat> {
    a.clone()
        .try_inverse()
        .ok_or_else(|| Error::Solver("singular matrix".into()))
}

pub fn trace(a: &CMat) -> C64 {
    a.trace()
}

pub fn adjoint(a: &CMat) -> CMat {
    a.adjoint()
}

/// Row-major vectorization, so that `vec(A X B) = (A ⊗ Bᵀ) vec(X)`.
pub fn vec_rm(a: &CMat) -> nalgebra::DVector<C64> {
    let (r, cc) = a.shape();
    nalgebra::DVector::from_fn(r * cc, |k, _| a[(k / cc, k % cc)])
}

pub fn unvec_rm(v: &nalgebra::DVector<C64>, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |i, j| v[i * cols + j])
}

/// Orthonormal basis of the (numerical) null space, as columns.
pub fn nullspace(a: &CMat, rel_tol: f64) -> CMat {
    let (m, n) = a.shape();
    // pad to a square-or-tall matrix so the SVD yields a full right basis
    let padded = if m < n {
        let mut p = CMat::zeros(n, n);
        p.view_mut((0, 0), (m, n)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let tol = rel_tol * smax.max(1.0);
    let idx: Vec<usize> = (0..n).filter(|&k| svd.singular_values[k] <= tol).collect();
    let mut out = CMat::zeros(n, idx.len());
    for (c_, &k) in idx.iter().enumerate() {
        for j in 0..n {
            out[(j, c_)] = vt[(k, j)].conj();
        }
    }
    out
}

/// Eigenvalues via the complex Schur form.
pub fn eigenvalues(a: &CMat) -> Vec<C64> {
    let t = a.clone().schur().unpack().1;
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Orthogonal projector onto the column span of `b` (columns need not be orthonormal).
pub fn span_projector(b: &CMat) -> CMat {
    if b.ncols() == 0 {
        return CMat::zeros(b.nrows(), b.nrows());
    }
    let svd = b.clone().svd(true, false);
    let u = svd.u.expect("u requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let mut p = CMat::zeros(b.nrows(), b.nrows());
    for k in 0..svd.singular_values.len() {
        if svd.singular_values[k] > 1e-10 * smax.max(1e-300) {
            let col = u.column(k);
            p += &col * col.adjoint();
        }
    }
    p
}

/// Solves `k X - A X + X A = Y` repeatedly for the same `A` via its Schur form.
pub struct Sylvester {
    q: CMat,
    t: CMat,
}

impl Sylvester {
    pub fn new(a: &CMat) -> Self {
        let (q, t) = a.clone().schur().unpack();
        Sylvester { q, t }
    }

    /// Smallest `|k - t_ii + t_jj|` over the spectrum.
    pub fn gap(&self, k: f64) -> f64 {
        let n = self.t.nrows();
        let mut g = f64::INFINITY;
        for i in 0..n {
            for j in 0..n {
                g = g.min((re(k) - self.t[(i, i)] + self.t[(j, j)]).norm());
            }
        }
        g
    }

    pub fn solve(&self, k: usize, y: &CMat, threshold: f64) -> Result<CMat> {
        let n = self.t.nrows();
        let kk = re(k as f64);
        let yp = self.q.adjoint() * y * &self.q;
        let mut x = CMat::zeros(n, n);
        for j in 0..n {
            let mut rhs: Vec<C64> = (0..n).map(|i| yp[(i, j)]).collect();
            for l in 0..j {
                let tl = self.t[(l, j)];
                if tl != C64::new(0.0, 0.0) {
                    for i in 0..n {
                        rhs[i] -= x[(i, l)] * tl;
                    }
                }
            }
            let tjj = self.t[(j, j)];
            for i in (0..n).rev() {
                let mut acc = rhs[i];
                for m in i + 1..n {
                    acc += self.t[(i, m)] * x[(m, j)];
                }
                let d = kk - self.t[(i, i)] + tjj;
                if d.norm() < threshold {
                    return Err(Error::Resonance { k, gap: d.norm() });
                }
                x[(i, j)] = acc / d;
            }
        }
        Ok(&self.q * x * self.q.adjoint())
    }
}
