//! The weight-graded co-Hochschild complex `Sym^c(W) ⊗ T(Sym^c(V))` of a pair
//! `h < g`, over exact rationals.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::Q;

type R = BigRational;
/// Sparse vector, sorted by index, no zero entries.
pub type SparseVec = Vec<(usize, R)>;

fn big(x: &Q) -> R {
    R::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

fn add_scaled(a: &SparseVec, b: &SparseVec, s: &R) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, &b[j].1 * s));
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * s;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn from_map(m: BTreeMap<usize, R>) -> SparseVec {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Incremental reduced row echelon form.
#[derive(Default)]
struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            if let Some(p) = self.rows.get(&v[k].0) {
                let s = -v[k].1.clone();
                v = add_scaled(&v, p, &s);
            } else {
                k += 1;
            }
        }
        v
    }

    /// Returns true if `v` was independent of the rows so far.
    fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        let lead = v[0].0;
        let inv = v[0].1.recip();
        let v: SparseVec = v.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Ok(pos) = row.binary_search_by_key(&lead, |e| e.0) {
                let s = -row[pos].1.clone();
                *row = add_scaled(row, &v, &s);
            }
        }
        self.rows.insert(lead, v);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for f in (0..ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut m = BTreeMap::new();
            m.insert(f, R::one());
            for (&lead, row) in &self.rows {
                if let Ok(pos) = row.binary_search_by_key(&f, |e| e.0) {
                    m.insert(lead, -row[pos].1.clone());
                }
            }
            out.push(from_map(m));
        }
        out
    }
}

pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::default();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A Lie algebra by structure constants: `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, Serialize)]
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

impl LieAlgebra {
    /// `sl_n` with basis `e_ij` (`i ≠ j`, row-major) followed by `e_ii - e_{i+1,i+1}`.
    pub fn sl(n: usize) -> Result<LieAlgebra> {
        if n < 2 {
            return Err(Error::InvalidDimension(format!("sl_{n}")));
        }
        let mats = sl_basis(n);
        let dim = mats.len();
        let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let br = mat_comm(&mats[i], &mats[j]);
                c[i][j] = sl_coords(n, &br);
            }
        }
        Ok(LieAlgebra { name: format!("sl{n}"), dim, c })
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    out[k] += x[i] * y[j] * self.c[i][j][k];
                }
            }
        }
        out
    }
}

type QMat = Vec<Vec<Q>>;

fn sl_basis(n: usize) -> Vec<QMat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = vec![vec![Q::zero(); n]; n];
                m[i][j] = qi(1);
                out.push(m);
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = vec![vec![Q::zero(); n]; n];
        m[i][i] = qi(1);
        m[i + 1][i + 1] = qi(-1);
        out.push(m);
    }
    out
}

fn mat_comm(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let mut out = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

fn sl_coords(n: usize, m: &QMat) -> Vec<Q> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(m[i][j]);
            }
        }
    }
    let mut acc = Q::zero();
    for i in 0..n - 1 {
        acc += m[i][i];
        out.push(acc);
    }
    out
}

/// Standard subalgebras, as coordinate vectors in the basis of [`LieAlgebra::sl`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subalgebra {
    Zero,
    Cartan,
    /// Antisymmetric matrices.
    So,
}

pub fn subalgebra_basis(n: usize, kind: Subalgebra) -> Vec<Vec<Q>> {
    match kind {
        Subalgebra::Zero => Vec::new(),
        Subalgebra::Cartan => {
            let off = n * (n - 1);
            (0..n - 1)
                .map(|i| {
                    let mut v = vec![Q::zero(); off + n - 1];
                    v[off + i] = qi(1);
                    v
                })
                .collect()
        }
        Subalgebra::So => {
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let mut m = vec![vec![Q::zero(); n]; n];
                    m[i][j] = qi(1);
                    m[j][i] = qi(-1);
                    out.push(sl_coords(n, &m));
                }
            }
            out
        }
    }
}

fn solve_q(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    // a: columns as vectors; solve Σ x_i a_i = b exactly
    let rows = b.len();
    let cols = a.len();
    let mut m: Vec<Vec<Q>> = (0..rows).map(|r| (0..cols).map(|c| a[c][r]).chain([b[r]]).collect()).collect();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for k in 0..=cols {
                    let v = m[r][k];
                    m[i][k] -= f * v;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][cols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Some(x)
}

/// `g` in a basis whose first `k` vectors span `h`.
#[derive(Clone, Debug)]
pub struct AdaptedPair {
    pub g: LieAlgebra,
    pub k: usize,
    /// Columns: adapted basis vectors in the original coordinates.
    pub basis: Vec<Vec<Q>>,
}

impl AdaptedPair {
    pub fn new(g: &LieAlgebra, h_basis: &[Vec<Q>]) -> Result<AdaptedPair> {
        let m = g.dim;
        let mut basis: Vec<Vec<Q>> = Vec::new();
        for v in h_basis {
            if v.len() != m {
                return Err(Error::Shape(format!("h vector of length {}, expected {m}", v.len())));
            }
            if !basis.is_empty() && solve_q(&basis, v).is_some() || v.iter().all(|x| x.is_zero()) {
                return Err(Error::Domain("h basis is linearly dependent".into()));
            }
            basis.push(v.clone());
        }
        for a in h_basis {
            for b in h_basis {
                let br = g.bracket(a, b);
                if br.iter().any(|x| !x.is_zero()) && (basis.is_empty() || solve_q(&basis, &br).is_none()) {
                    return Err(Error::Domain("h is not closed under the bracket".into()));
                }
            }
        }
        let k = basis.len();
        for i in 0..m {
            let mut e = vec![Q::zero(); m];
            e[i] = qi(1);
            if basis.is_empty() || solve_q(&basis, &e).is_none() {
                basis.push(e);
            }
        }
        let mut c = vec![vec![vec![Q::zero(); m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                c[i][j] = solve_q(&basis, &g.bracket(&basis[i], &basis[j])).unwrap();
            }
        }
        Ok(AdaptedPair { g: LieAlgebra { name: g.name.clone(), dim: m, c }, k, basis })
    }

    pub fn coords(&self, x: &[Q]) -> Result<Vec<Q>> {
        solve_q(&self.basis, x).ok_or_else(|| Error::Shape("vector outside g".into()))
    }

    fn diagonal_h(&self) -> Option<Vec<Vec<Q>>> {
        let m = self.g.dim;
        let mut chars = Vec::new();
        for i in 0..self.k {
            let mut ch = Vec::with_capacity(m);
            for j in 0..m {
                for l in 0..m {
                    if l != j && !self.g.c[i][j][l].is_zero() {
                        return None;
                    }
                }
                ch.push(self.g.c[i][j][j]);
            }
            chars.push(ch);
        }
        Some(chars)
    }
}

/// Layout of a bidegree: the `W` slot has `k` variables, each of the `n` `V` slots `m`.
#[derive(Clone, Debug)]
struct Bidegree {
    n: usize,
    monomials: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

fn compositions(len: usize, total: usize, out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>) {
    if cur.len() + 1 == len {
        cur.push(total as u8);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for a in (0..=total).rev() {
        cur.push(a as u8);
        compositions(len, total - a, out, cur);
        cur.pop();
    }
}

impl Bidegree {
    fn new(k: usize, m: usize, n: usize, w: usize) -> Bidegree {
        let mut monomials = Vec::new();
        compositions(k + n * m, w, &mut monomials, &mut Vec::new());
        let index = monomials.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        Bidegree { n, monomials, index }
    }

    fn len(&self) -> usize {
        self.monomials.len()
    }
}

fn binom(n: u8, k: u8) -> u64 {
    let mut r = 1u64;
    for i in 0..k as u64 {
        r = r * (n as u64 - i) / (i + 1);
    }
    r
}

/// Every split `a = b + (a - b)` with weight `Π C(a_i, b_i)`.
fn splits(a: &[u8]) -> Vec<(Vec<u8>, Vec<u8>, u64)> {
    let mut out = vec![(Vec::new(), Vec::new(), 1u64)];
    for &ai in a {
        let mut next = Vec::with_capacity(out.len() * (ai as usize + 1));
        for (l, r, c) in &out {
            for b in 0..=ai {
                let mut l2 = l.clone();
                l2.push(b);
                let mut r2 = r.clone();
                r2.push(ai - b);
                next.push((l2, r2, c * binom(ai, b)));
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub pair: AdaptedPair,
    pub g_dim: usize,
    pub h_dim: usize,
    pub max_degree: usize,
    pub max_weight: usize,
    spaces: BTreeMap<(usize, usize), Bidegree>,
    /// `d` on each basis element of `(n, w)`, for `n ≤ max_degree`.
    differentials: BTreeMap<(usize, usize), Vec<SparseVec>>,
}

fn differential(k: usize, m: usize, src: &Bidegree, dst: &Bidegree) -> Vec<SparseVec> {
    let n = src.n;
    src.monomials
        .iter()
        .map(|mono| {
            let mut acc: BTreeMap<usize, R> = BTreeMap::new();
            let mut push = |key: Vec<u8>, coef: i64| {
                let idx = dst.index[&key];
                *acc.entry(idx).or_insert_with(R::zero) += R::from_integer(BigInt::from(coef));
            };
            let w0 = &mono[..k];
            let rest = &mono[k..];
            for (b, r, cf) in splits(w0) {
                let mut key = b;
                key.extend(r.iter());
                key.extend(std::iter::repeat(0u8).take(m - k));
                key.extend_from_slice(rest);
                push(key, cf as i64);
            }
            for j in 1..=n {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let slot = &mono[k + (j - 1) * m..k + j * m];
                for (b, r, cf) in splits(slot) {
                    let mut key = mono[..k + (j - 1) * m].to_vec();
                    key.extend(b);
                    key.extend(r);
                    key.extend_from_slice(&mono[k + j * m..]);
                    push(key, sign * cf as i64);
                }
            }
            let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
            let mut key = mono.clone();
            key.extend(std::iter::repeat(0u8).take(m));
            push(key, sign);
            from_map(acc)
        })
        .collect()
}

fn apply(d: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, R> = BTreeMap::new();
    for (i, x) in v {
        for (j, y) in &d[*i] {
            *acc.entry(*j).or_insert_with(R::zero) += x * y;
        }
    }
    from_map(acc)
}

/// Builds all bidegrees `n ≤ max_degree + 1`, `w ≤ max_weight` and checks `d∘d = 0` exactly.
pub fn build_complex(g: &LieAlgebra, h_basis: &[Vec<Q>], max_degree: usize, max_weight: usize) -> Result<CochainComplex> {
    if max_degree < 1 || max_weight < 1 {
        return Err(Error::Parameter("bounds must be at least 1".into()));
    }
    let pair = AdaptedPair::new(g, h_basis)?;
    let (k, m) = (pair.k, g.dim);
    let mut spaces = BTreeMap::new();
    for n in 0..=max_degree + 1 {
        for w in 0..=max_weight {
            spaces.insert((n, w), Bidegree::new(k, m, n, w));
        }
    }
    let mut differentials = BTreeMap::new();
    for n in 0..=max_degree {
        for w in 0..=max_weight {
            differentials.insert((n, w), differential(k, m, &spaces[&(n, w)], &spaces[&(n + 1, w)]));
        }
    }
    for n in 0..max_degree {
        for w in 0..=max_weight {
            let (d0, d1) = (&differentials[&(n, w)], &differentials[&(n + 1, w)]);
            for v in d0 {
                if !apply(d1, v).is_empty() {
                    return Err(Error::Structural(format!("d∘d ≠ 0 at ({n}, {w})")));
                }
            }
        }
    }
    Ok(CochainComplex { g_dim: m, h_dim: k, max_degree, max_weight, pair, spaces, differentials })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomEntry {
    pub degree: usize,
    pub weight: usize,
    pub cochains: usize,
    pub dim: usize,
}

impl CochainComplex {
    pub fn cochain_dim(&self, n: usize, w: usize) -> usize {
        self.spaces[&(n, w)].len()
    }

    /// Derivation action of the `i`-th basis element of `h` on `(n, w)`.
    fn action(&self, i: usize, sp: &Bidegree) -> Vec<SparseVec> {
        let (k, m) = (self.h_dim, self.g_dim);
        let c = &self.pair.g.c;
        sp.monomials
            .iter()
            .map(|mono| {
                let mut acc: BTreeMap<usize, R> = BTreeMap::new();
                for pos in 0..mono.len() {
                    if mono[pos] == 0 {
                        continue;
                    }
                    let (base, j) = if pos < k { (0, pos) } else { (k + (pos - k) / m * m, (pos - k) % m) };
                    let width = if pos < k { k } else { m };
                    for l in 0..width {
                        let coef = c[i][j][l];
                        if coef.is_zero() {
                            continue;
                        }
                        let mut key = mono.clone();
                        key[pos] -= 1;
                        key[base + l] += 1;
                        let val = big(&coef) * R::from_integer(BigInt::from(mono[pos]));
                        *acc.entry(sp.index[&key]).or_insert_with(R::zero) += val;
                    }
                }
                from_map(acc)
            })
            .collect()
    }

    /// Basis of the `h`-invariants in `(n, w)`.
    pub fn invariants(&self, n: usize, w: usize) -> Vec<SparseVec> {
        let sp = &self.spaces[&(n, w)];
        if self.h_dim == 0 {
            return (0..sp.len()).map(|i| vec![(i, R::one())]).collect();
        }
        if let Some(chars) = self.pair.diagonal_h() {
            let (k, m) = (self.h_dim, self.g_dim);
            return sp
                .monomials
                .iter()
                .enumerate()
                .filter(|(_, mono)| {
                    chars.iter().all(|ch| {
                        let mut t = Q::zero();
                        for (pos, &e) in mono.iter().enumerate() {
                            let j = if pos < k { pos } else { (pos - k) % m };
                            t += ch[j] * qi(e as i64);
                        }
                        t.is_zero()
                    })
                })
                .map(|(i, _)| vec![(i, R::one())])
                .collect();
        }
        let mut rows: Vec<BTreeMap<usize, R>> = Vec::new();
        for i in 0..self.h_dim {
            let cols = self.action(i, sp);
            let mut block: Vec<BTreeMap<usize, R>> = vec![BTreeMap::new(); sp.len()];
            for (col, v) in cols.iter().enumerate() {
                for (r, x) in v {
                    block[*r].insert(col, x.clone());
                }
            }
            rows.extend(block);
        }
        let mut e = Echelon::default();
        for r in rows {
            e.insert(from_map(r));
        }
        e.nullspace(sp.len())
    }

    fn rank_on(&self, n: usize, w: usize, vs: &[SparseVec]) -> usize {
        let d = &self.differentials[&(n, w)];
        rank(vs.iter().map(|v| apply(d, v)))
    }

    pub fn cohomology_dims(&self, invariant: bool) -> Vec<CohomEntry> {
        let mut out = Vec::new();
        for w in 0..=self.max_weight {
            let mut ranks = Vec::new();
            let mut dims = Vec::new();
            for n in 0..=self.max_degree {
                let vs = if invariant {
                    self.invariants(n, w)
                } else {
                    (0..self.cochain_dim(n, w)).map(|i| vec![(i, R::one())]).collect()
                };
                dims.push(vs.len());
                ranks.push(self.rank_on(n, w, &vs));
            }
            for n in 0..=self.max_degree {
                let incoming = if n == 0 { 0 } else { ranks[n - 1] };
                out.push(CohomEntry { degree: n, weight: w, cochains: dims[n], dim: dims[n] - ranks[n] - incoming });
            }
        }
        out
    }

    /// `1 ⊗ X_1 ⊗ … ⊗ X_n` for `X_i` in original coordinates.
    pub fn tensor_cochain(&self, xs: &[Vec<Q>]) -> Result<SparseVec> {
        let (k, m) = (self.h_dim, self.g_dim);
        let n = xs.len();
        let sp = self
            .spaces
            .get(&(n, n))
            .ok_or_else(|| Error::Parameter(format!("degree {n} outside the computed range")))?;
        let coords: Vec<Vec<Q>> = xs.iter().map(|x| self.pair.coords(x)).collect::<Result<_>>()?;
        let mut acc: BTreeMap<usize, R> = BTreeMap::new();
        let mut stack: Vec<(Vec<u8>, R)> = vec![(vec![0u8; k], R::one())];
        for cv in &coords {
            let mut next = Vec::new();
            for (key, val) in &stack {
                for (j, x) in cv.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mut kk = key.clone();
                    kk.extend((0..m).map(|l| (l == j) as u8));
                    next.push((kk, val * big(x)));
                }
            }
            stack = next;
        }
        for (key, val) in stack {
            *acc.entry(sp.index[&key]).or_insert_with(R::zero) += val;
        }
        Ok(from_map(acc))
    }

    pub fn is_cocycle(&self, n: usize, w: usize, v: &SparseVec) -> bool {
        apply(&self.differentials[&(n, w)], v).is_empty()
    }

    /// Whether `v ∈ (n, w)` lies in the image of `d`.
    pub fn is_exact(&self, n: usize, w: usize, v: &SparseVec) -> bool {
        if n == 0 {
            return v.is_empty();
        }
        let d = &self.differentials[&(n - 1, w)];
        let mut e = Echelon::default();
        for x in d {
            e.insert(x.clone());
        }
        e.reduce(v.clone()).is_empty()
    }

    /// `d` applied to a cochain.
    pub fn d(&self, n: usize, w: usize, v: &SparseVec) -> SparseVec {
        apply(&self.differentials[&(n, w)], v)
    }

    /// Sparse vector for a single monomial given slot by slot.
    pub fn monomial(&self, w_slot: &[u8], v_slots: &[Vec<u8>]) -> Result<SparseVec> {
        let mut key = w_slot.to_vec();
        for s in v_slots {
            key.extend(s);
        }
        let w: usize = key.iter().map(|&x| x as usize).sum();
        let sp = self
            .spaces
            .get(&(v_slots.len(), w))
            .ok_or_else(|| Error::Parameter("bidegree outside the computed range".into()))?;
        let idx = sp.index.get(&key).ok_or_else(|| Error::Shape("monomial has the wrong layout".into()))?;
        Ok(vec![(*idx, R::one())])
    }
}

/// Dimensions of `⋀^n (g/h)` and of its `h`-invariants, computed from the quotient action.
pub fn wedge_dims(g: &LieAlgebra, h_basis: &[Vec<Q>], max_degree: usize) -> Result<Vec<(usize, usize)>> {
    let pair = AdaptedPair::new(g, h_basis)?;
    let (k, m) = (pair.k, g.dim);
    let q = m - k;
    let mut out = Vec::new();
    for n in 0..=max_degree.min(q) {
        let subsets: Vec<Vec<usize>> = subsets_of(q, n);
        let index: HashMap<Vec<usize>, usize> = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut e = Echelon::default();
        for i in 0..k {
            let mut rows: Vec<BTreeMap<usize, R>> = vec![BTreeMap::new(); subsets.len()];
            for (col, s) in subsets.iter().enumerate() {
                for (pos, &j) in s.iter().enumerate() {
                    for l in 0..q {
                        let coef = pair.g.c[i][k + j][k + l];
                        if coef.is_zero() || (l != j && s.contains(&l)) {
                            continue;
                        }
                        let mut t = s.clone();
                        t[pos] = l;
                        let mut sign = 1i64;
                        for a in 0..t.len() {
                            for b in a + 1..t.len() {
                                if t[a] > t[b] {
                                    sign = -sign;
                                }
                            }
                        }
                        t.sort_unstable();
                        *rows[index[&t]].entry(col).or_insert_with(R::zero) += big(&coef) * R::from_integer(BigInt::from(sign));
                    }
                }
            }
            for r in rows {
                e.insert(from_map(r));
            }
        }
        out.push((subsets.len(), subsets.len() - e.rank()));
    }
    while out.len() <= max_degree {
        out.push((0, 0));
    }
    Ok(out)
}

fn subsets_of(q: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, q: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..q {
            cur.push(i);
            rec(i + 1, q, n, cur, out);
            cur.pop();
        }
    }
    rec(0, q, n, &mut Vec::new(), &mut out);
    out
}
