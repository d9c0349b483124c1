//! Root systems with an exact normalized invariant form.
//!
//! Type A_{N-1} is realized in the ambient `L_1, …, L_N` coordinates. A generic
//! Cartan matrix is realized in the simple-root basis.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Q = Rational64;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Realization {
    TypeA { n: usize },
    SimpleRootBasis,
}

/// A positive root: integer coefficients on the simple roots and its ambient vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub vector: Vec<Q>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<Q>>,
    pub form: Vec<Vec<Q>>,
    pub d: Vec<Q>,
    pub realization: Realization,
}

pub fn build_type_a(n: usize) -> Result<RootSystem> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!("type A needs N >= 2, got {n}")));
    }
    let rank = n - 1;
    let nn = n as i64;
    let form = (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(nn - 1, nn) } else { q(-1, nn) }).collect())
        .collect();
    let simple_roots = (0..rank)
        .map(|i| {
            let mut v = vec![Q::zero(); n];
            v[i] = Q::one();
            v[i + 1] = -Q::one();
            v
        })
        .collect();
    let cartan = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    Ok(RootSystem {
        rank,
        cartan,
        simple_roots,
        form,
        d: vec![Q::one(); rank],
        realization: Realization::TypeA { n },
    })
}

/// Generic path: symmetrize the Cartan matrix so that short roots have square length 2.
pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
    let rank = cartan.len();
    if rank == 0 || cartan.iter().any(|r| r.len() != rank) {
        return Err(Error::Shape("Cartan matrix must be square and nonempty".into()));
    }
    let mut d: Vec<Option<Q>> = vec![None; rank];
    for start in 0..rank {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..rank {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                if cartan[j][i] == 0 {
                    return Err(Error::Structural("Cartan matrix is not symmetrizable".into()));
                }
                // d_i a_ij = d_j a_ji
                let dj = d[i].unwrap() * qi(cartan[i][j]) / qi(cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(x) if x != dj => {
                        return Err(Error::Structural("inconsistent symmetrizer".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.unwrap()).collect();
    let dmin = *d.iter().min().unwrap();
    let d: Vec<Q> = d.iter().map(|x| x / dmin).collect();
    let form = (0..rank)
        .map(|i| (0..rank).map(|j| d[i] * qi(cartan[i][j])).collect())
        .collect();
    let simple_roots = (0..rank)
        .map(|i| (0..rank).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    Ok(RootSystem { rank, cartan, simple_roots, form, d, realization: Realization::SimpleRootBasis })
}

pub fn pairing(rs: &RootSystem, lambda: &[Q], mu: &[Q]) -> Result<Q> {
    rs.pairing(lambda, mu)
}

impl RootSystem {
    pub fn ambient_dim(&self) -> usize {
        self.form.len()
    }

    pub fn pairing(&self, a: &[Q], b: &[Q]) -> Result<Q> {
        let n = self.ambient_dim();
        if a.len() != n || b.len() != n {
            return Err(Error::Shape(format!(
                "weights of length {} and {} in a space of dimension {n}",
                a.len(),
                b.len()
            )));
        }
        let mut s = Q::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        Ok(s)
    }

    pub fn coroot(&self, a: &[Q]) -> Result<Vec<Q>> {
        let n2 = self.pairing(a, a)?;
        if n2.is_zero() {
            return Err(Error::Domain("zero vector has no coroot".into()));
        }
        Ok(a.iter().map(|x| x * qi(2) / n2).collect())
    }

    pub fn combine(&self, coeffs: &[i64]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim()];
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            for (x, y) in v.iter_mut().zip(a) {
                *x += qi(*c) * y;
            }
        }
        v
    }

    /// Positive roots by closing the simple roots under simple reflections.
    pub fn positive_roots(&self) -> Vec<Root> {
        let r = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        while let Some(b) = frontier.pop() {
            if !seen.insert(b.clone()) {
                continue;
            }
            for i in 0..r {
                let k: i64 = (0..r).map(|j| b[j] * self.cartan[i][j]).sum();
                let mut nb = b.clone();
                nb[i] -= k;
                if nb.iter().all(|&x| x >= 0) && nb.iter().any(|&x| x > 0) && !seen.contains(&nb) {
                    frontier.push(nb);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        roots
            .into_iter()
            .map(|coeffs| Root { vector: self.combine(&coeffs), coeffs })
            .collect()
    }

    /// Gram matrix of the simple roots.
    pub fn simple_gram(&self) -> Vec<Vec<Q>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.pairing(&self.simple_roots[i], &self.simple_roots[j]).unwrap())
                    .collect()
            })
            .collect()
    }

    /// Type A helper: the weight `L_i` (1-based).
    pub fn weight_l(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim()];
        v[i - 1] = Q::one();
        v
    }
}

/// Leading principal minors of a rational matrix.
pub fn leading_minors(m: &[Vec<Q>]) -> Vec<Q> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Q>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            det(sub)
        })
        .collect()
}

fn det(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let v = a[c][k];
                a[r][k] -= f * v;
            }
        }
    }
    d
}

/// Lexicographic order on roots: values against an ordered list of vectors,
/// the first being `-iZ_ν`.
#[derive(Clone, Debug, Serialize)]
pub struct RootOrder {
    pub first_vector: Vec<Q>,
    pub rest: Vec<Vec<Q>>,
}

impl RootOrder {
    pub fn type_a(first_vector: Vec<Q>) -> Self {
        let n = first_vector.len();
        let rest = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        RootOrder { first_vector, rest }
    }

    pub fn key(&self, v: &[Q]) -> Vec<Q> {
        std::iter::once(&self.first_vector)
            .chain(self.rest.iter())
            .map(|b| b.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    }

    pub fn cmp(&self, a: &[Q], b: &[Q]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn is_positive(&self, v: &[Q]) -> bool {
        self.key(v).into_iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
    }

    /// Regular means no root has a vanishing key.
    pub fn is_regular(&self, roots: &[Root]) -> bool {
        roots.iter().all(|r| self.key(&r.vector).iter().any(|x| !x.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_n() {
        assert!(matches!(build_type_a(1), Err(Error::InvalidDimension(_))));
    }

    #[test]
    fn a1_normalization() {
        let rs = build_type_a(2).unwrap();
        let a = &rs.simple_roots[0];
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.pairing(a, a).unwrap(), qi(2));
        let co = rs.coroot(a).unwrap();
        assert_eq!(pairing(&rs, a, &co).unwrap(), qi(2));
    }

    #[test]
    fn a2_form_values() {
        let rs = build_type_a(3).unwrap();
        assert_eq!(rs.positive_roots().len(), 3);
        let l1 = rs.weight_l(1);
        let l2 = rs.weight_l(2);
        assert_eq!(rs.pairing(&l1, &l1).unwrap(), q(2, 3));
        assert_eq!(rs.pairing(&l1, &l2).unwrap(), q(-1, 3));
    }

    #[test]
    fn a3_values() {
        let rs = build_type_a(4).unwrap();
        assert_eq!(rs.positive_roots().len(), 6);
        assert_eq!(rs.pairing(&rs.simple_roots[0], &rs.simple_roots[1]).unwrap(), qi(-1));
        let a: Vec<Q> = rs.weight_l(1).iter().zip(rs.weight_l(4)).map(|(x, y)| x - y).collect();
        let b: Vec<Q> = rs.weight_l(2).iter().zip(rs.weight_l(3)).map(|(x, y)| x - y).collect();
        assert_eq!(rs.pairing(&a, &b).unwrap(), Q::zero());
        assert_eq!(rs.pairing(&a, &vec![Q::zero(); 4]).unwrap(), Q::zero());
    }

    #[test]
    fn shape_mismatch() {
        let rs = build_type_a(3).unwrap();
        assert!(matches!(rs.pairing(&[qi(1)], &[qi(1)]), Err(Error::Shape(_))));
    }

    #[test]
    fn cartan_consistency_and_positivity() {
        for n in 2..7 {
            let rs = build_type_a(n).unwrap();
            let roots = rs.positive_roots();
            assert_eq!(roots.len() * 2, n * (n - 1));
            for r in &roots {
                assert_eq!(rs.pairing(&r.vector, &r.vector).unwrap(), qi(2));
            }
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    let ai = &rs.simple_roots[i];
                    let aj = &rs.simple_roots[j];
                    let lhs = qi(2) * rs.pairing(ai, aj).unwrap() / rs.pairing(ai, ai).unwrap();
                    assert_eq!(lhs, qi(rs.cartan[i][j]));
                    assert_eq!(rs.pairing(ai, aj).unwrap(), rs.d[i] * qi(rs.cartan[i][j]));
                }
            }
            assert!(leading_minors(&rs.simple_gram()).iter().all(|m| m.is_positive()));
        }
    }

    #[test]
    fn generic_b2_and_g2() {
        let b2 = from_cartan(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(b2.positive_roots().len(), 4);
        assert_eq!(b2.d, vec![qi(1), qi(2)]);
        let g2 = from_cartan(vec![vec![2, -1], vec![-3, 2]]).unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        let short = &g2.simple_roots[1];
        assert_eq!(g2.pairing(short, short).unwrap(), qi(2));
        assert!(leading_minors(&g2.simple_gram()).iter().all(|m| m.is_positive()));
    }

    #[test]
    fn type_a_roots_are_differences() {
        let rs = build_type_a(4).unwrap();
        for r in rs.positive_roots() {
            let ones: Vec<usize> = (0..4).filter(|&i| r.vector[i] == Q::one()).collect();
            let negs: Vec<usize> = (0..4).filter(|&i| r.vector[i] == -Q::one()).collect();
            assert_eq!(ones.len(), 1);
            assert_eq!(negs.len(), 1);
            assert!(ones[0] < negs[0]);
        }
    }
}
