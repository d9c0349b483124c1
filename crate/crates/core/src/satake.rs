//! Satake data, the Harish-Chandra cascade and restricted roots.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{build_type_a, q, to_f64, Root, RootOrder, RootSystem, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HermitianTag {
    S,
    C,
    NonHermitian,
}

#[derive(Clone, Debug, Serialize)]
pub struct SatakeData {
    pub root_system: RootSystem,
    pub n: usize,
    pub p: usize,
    /// Simple-root indices (1-based) in `X`.
    pub x: Vec<usize>,
    /// `tau[i-1]` is the image of the 1-based index `i`.
    pub tau: Vec<usize>,
    pub theta_on_weights: Vec<Vec<Q>>,
    pub hermitian_tag: HermitianTag,
    pub distinguished: Vec<usize>,
    pub cascade: Vec<Root>,
    /// Diagonal of `-i Z_ν` in the `L_i` coordinates.
    pub z_nu: Vec<Q>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RootPartition {
    pub p0: Vec<Root>,
    pub c0: Vec<Root>,
    pub pi: Vec<Vec<Root>>,
    pub ci: Vec<Vec<Root>>,
    /// Keyed by `(i, j)` with `i < j`, 0-based cascade positions.
    pub pij: Vec<((usize, usize), Vec<Root>)>,
    pub cij: Vec<((usize, usize), Vec<Root>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Normalization {
    pub a_sigma: f64,
    pub z_formula: Option<Vec<Q>>,
}

pub fn check_aiii(n: usize, p: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!("N = {n} < 2")));
    }
    if p == 0 || 2 * p > n {
        return Err(Error::Parameter(format!("need 0 < p <= N/2, got N = {n}, p = {p}")));
    }
    Ok(())
}

pub fn build_aiii(n: usize, p: usize) -> Result<SatakeData> {
    check_aiii(n, p)?;
    let rs = build_type_a(n)?;
    let rank = n - 1;
    let x: Vec<usize> = (p + 1..n - p).collect();
    // on X this is the opposition involution of the X diagram
    let tau: Vec<usize> = (1..=rank).map(|i| n - i).collect();
    let theta_perm: Vec<usize> =
        (0..n).map(|i| if i < p || i >= n - p { n - 1 - i } else { i }).collect();
    let theta_on_weights = (0..n)
        .map(|r| (0..n).map(|c| if theta_perm[c] == r { Q::one() } else { Q::zero() }).collect())
        .collect();
    let (tag, distinguished) =
        if 2 * p == n { (HermitianTag::S, vec![p]) } else { (HermitianTag::C, vec![p, n - p]) };
    let nn = n as i64;
    let pp = p as i64;
    let z_nu = (0..n).map(|i| if i < p { q(nn - pp, nn) } else { q(-pp, nn) }).collect();
    let mut sd = SatakeData {
        root_system: rs,
        n,
        p,
        x,
        tau,
        theta_on_weights,
        hermitian_tag: tag,
        distinguished,
        cascade: Vec::new(),
        z_nu,
    };
    sd.cascade = cascade(&sd)?;
    Ok(sd)
}

impl SatakeData {
    pub fn order(&self) -> RootOrder {
        RootOrder::type_a(self.z_nu.clone())
    }

    pub fn z_value(&self, v: &[Q]) -> Q {
        v.iter().zip(&self.z_nu).map(|(a, b)| a * b).sum()
    }

    pub fn is_compact(&self, v: &[Q]) -> bool {
        self.z_value(v).is_zero()
    }

    pub fn theta(&self, v: &[Q]) -> Vec<Q> {
        self.theta_on_weights
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_root(&self, v: &[Q]) -> bool {
        self.root_system
            .positive_roots()
            .iter()
            .any(|r| r.vector == v || r.vector.iter().zip(v).all(|(a, b)| *a == -*b))
    }
}

/// Greedy Harish-Chandra cascade under the lex order with `-iZ_ν` first.
pub fn cascade(sd: &SatakeData) -> Result<Vec<Root>> {
    let rs = &sd.root_system;
    let order = sd.order();
    let mut roots = rs.positive_roots();
    if !order.is_regular(&roots) {
        return Err(Error::Structural("lexicographic order is not regular".into()));
    }
    roots.sort_by(|a, b| order.cmp(&b.vector, &a.vector));
    let mut out: Vec<Root> = Vec::new();
    loop {
        let next = roots.iter().find(|r| {
            out.iter().all(|g| rs.pairing(&r.vector, &g.vector).map(|v| v.is_zero()).unwrap_or(false))
        });
        match next {
            Some(r) if !sd.is_compact(&r.vector) => out.push(r.clone()),
            _ => break,
        }
    }
    Ok(out)
}

fn restriction(sd: &SatakeData, v: &[Q]) -> Result<Vec<Q>> {
    let rs = &sd.root_system;
    sd.cascade
        .iter()
        .map(|g| Ok(rs.pairing(v, &g.vector)? / rs.pairing(&g.vector, &g.vector)?))
        .collect()
}

pub fn partition_roots(sd: &SatakeData) -> Result<RootPartition> {
    let s = sd.cascade.len();
    let mut part = RootPartition {
        pi: vec![Vec::new(); s],
        ci: vec![Vec::new(); s],
        ..Default::default()
    };
    let half = q(1, 2);
    for r in sd.root_system.positive_roots() {
        let c = restriction(sd, &r.vector)?;
        let nz: Vec<usize> = (0..s).filter(|&i| !c[i].is_zero()).collect();
        let compact = sd.is_compact(&r.vector);
        let bad = || Error::Structural(format!("root {:?} restricts to {:?}", r.coeffs, c));
        match nz.as_slice() {
            [] => part.c0.push(r.clone()),
            [i] if c[*i] == Q::one() => part.p0.push(r.clone()),
            [i] if c[*i] == half => {
                if compact {
                    part.ci[*i].push(r.clone())
                } else {
                    part.pi[*i].push(r.clone())
                }
            }
            [i, j] if c[*i].abs() == half && c[*j].abs() == half => {
                let target = if compact { &mut part.cij } else { &mut part.pij };
                match target.iter_mut().find(|(k, _)| *k == (*i, *j)) {
                    Some((_, v)) => v.push(r.clone()),
                    None => target.push(((*i, *j), vec![r.clone()])),
                }
            }
            _ => return Err(bad()),
        }
    }
    Ok(part)
}

impl RootPartition {
    pub fn total(&self) -> usize {
        self.p0.len()
            + self.c0.len()
            + self.pi.iter().map(Vec::len).sum::<usize>()
            + self.ci.iter().map(Vec::len).sum::<usize>()
            + self.pij.iter().map(|(_, v)| v.len()).sum::<usize>()
            + self.cij.iter().map(|(_, v)| v.len()).sum::<usize>()
    }

    pub fn count_pij(&self) -> usize {
        self.pij.iter().map(|(_, v)| v.len()).sum()
    }

    pub fn count_cij(&self) -> usize {
        self.cij.iter().map(|(_, v)| v.len()).sum()
    }
}

/// Restrictions of simple roots outside `X`, one per `τ`-orbit, in cascade coordinates.
pub fn restricted_basis(sd: &SatakeData) -> Result<Vec<Vec<Q>>> {
    let mut out: Vec<Vec<Q>> = Vec::new();
    for i in 1..=sd.root_system.rank {
        if sd.x.contains(&i) || sd.tau[i - 1] < i {
            continue;
        }
        let c = restriction(sd, &sd.root_system.simple_roots[i - 1])?;
        let d = restriction(sd, &sd.root_system.simple_roots[sd.tau[i - 1] - 1])?;
        if c != d {
            return Err(Error::Structural(format!("orbit {{{i}, {}}} restricts inconsistently", sd.tau[i - 1])));
        }
        out.push(c);
    }
    Ok(out)
}

pub fn normalization_constants(sd: &SatakeData) -> Result<Normalization> {
    if sd.hermitian_tag == HermitianTag::NonHermitian {
        return Err(Error::Domain("normalization constants need a Hermitian pair".into()));
    }
    let n = sd.n as f64;
    let dim_m = 2.0 * (sd.p * (sd.n - sd.p)) as f64;
    let a_sigma = (2.0 * n / dim_m).sqrt();
    let z_formula = if sd.hermitian_tag == HermitianTag::S {
        let mut z = vec![Q::zero(); sd.n];
        for g in &sd.cascade {
            for (a, b) in z.iter_mut().zip(&g.vector) {
                *a += b * q(1, 2);
            }
        }
        if z != sd.z_nu {
            return Err(Error::Structural("Z_ν differs from (i/2)ΣH_γ".into()));
        }
        Some(z)
    } else {
        None
    };
    Ok(Normalization { a_sigma, z_formula })
}

/// The longest element of `W_X` acting on `L_i` coordinates (reverses the middle block).
pub fn w_x(sd: &SatakeData, v: &[Q]) -> Vec<Q> {
    let (p, n) = (sd.p, sd.n);
    (0..n).map(|i| if i >= p && i < n - p { v[n - 1 - i] } else { v[i] }).collect()
}

pub fn root_label(v: &[Q]) -> String {
    let pos = v.iter().position(|x| x.is_positive());
    let neg = v.iter().position(|x| x.is_negative());
    match (pos, neg) {
        (Some(i), Some(j)) if v.iter().filter(|x| !x.is_zero()).count() == 2 => {
            format!("L{}-L{}", i + 1, j + 1)
        }
        _ => format!("{:?}", v.iter().map(to_f64).collect::<Vec<_>>()),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::qi;

    fn labels(v: &[Root]) -> Vec<String> {
        v.iter().map(|r| root_label(&r.vector)).collect()
    }

    #[test]
    fn aiii_constructor_cases() {
        let s = build_aiii(4, 2).unwrap();
        assert_eq!(s.hermitian_tag, HermitianTag::S);
        assert!(s.x.is_empty());
        assert_eq!(s.distinguished, vec![2]);
        assert_eq!(s.tau, vec![3, 2, 1]);

        let c = build_aiii(3, 1).unwrap();
        assert_eq!(c.hermitian_tag, HermitianTag::C);
        assert!(c.x.is_empty());
        assert_eq!(c.distinguished, vec![1, 2]);

        let c5 = build_aiii(5, 1).unwrap();
        assert_eq!(c5.x, vec![2, 3]);
        assert_eq!(c5.distinguished, vec![1, 4]);
        assert_eq!(c5.tau, vec![4, 3, 2, 1]);
    }

    #[test]
    fn parameter_range() {
        assert!(matches!(build_aiii(4, 3), Err(Error::Parameter(_))));
        assert!(matches!(build_aiii(4, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn cascades() {
        assert_eq!(labels(&build_aiii(4, 2).unwrap().cascade), ["L1-L4", "L2-L3"]);
        assert_eq!(labels(&build_aiii(2, 1).unwrap().cascade), ["L1-L2"]);
        assert_eq!(labels(&build_aiii(3, 1).unwrap().cascade), ["L1-L3"]);
        assert_eq!(labels(&build_aiii(5, 2).unwrap().cascade), ["L1-L5", "L2-L4"]);
    }

    #[test]
    fn cascade_strongly_orthogonal_equal_length() {
        for (n, p) in [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3), (6, 2)] {
            let sd = build_aiii(n, p).unwrap();
            assert_eq!(sd.cascade.len(), p);
            for (a, g) in sd.cascade.iter().enumerate() {
                assert!(!sd.is_compact(&g.vector));
                assert_eq!(sd.root_system.pairing(&g.vector, &g.vector).unwrap(), qi(2));
                for h in &sd.cascade[a + 1..] {
                    let plus: Vec<Q> = g.vector.iter().zip(&h.vector).map(|(x, y)| x + y).collect();
                    let minus: Vec<Q> = g.vector.iter().zip(&h.vector).map(|(x, y)| x - y).collect();
                    assert!(!sd.is_root(&plus) && !sd.is_root(&minus));
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let s = partition_roots(&build_aiii(4, 2).unwrap()).unwrap();
        assert_eq!((s.p0.len(), s.count_cij(), s.count_pij()), (2, 2, 2));
        assert!(s.c0.is_empty() && s.pi.iter().all(Vec::is_empty) && s.ci.iter().all(Vec::is_empty));

        let s = partition_roots(&build_aiii(2, 1).unwrap()).unwrap();
        assert_eq!(s.p0.len(), 1);
        assert_eq!(s.total(), 1);

        let c = partition_roots(&build_aiii(3, 1).unwrap()).unwrap();
        assert_eq!(labels(&c.p0), ["L1-L3"]);
        assert_eq!(labels(&c.pi[0]), ["L1-L2"]);
        assert_eq!(labels(&c.ci[0]), ["L2-L3"]);
    }

    #[test]
    fn partition_is_complete_and_c0_orthogonal() {
        for (n, p) in [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (6, 3)] {
            let sd = build_aiii(n, p).unwrap();
            let part = partition_roots(&sd).unwrap();
            assert_eq!(part.total(), n * (n - 1) / 2);
            for r in &part.c0 {
                assert!(sd.is_compact(&r.vector));
                for g in &sd.cascade {
                    assert!(sd.root_system.pairing(&r.vector, &g.vector).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn restricted_basis_shape() {
        let h = q(1, 2);
        let s = build_aiii(4, 2).unwrap();
        assert_eq!(restricted_basis(&s).unwrap(), vec![vec![h, -h], vec![Q::zero(), Q::one()]]);
        let c = build_aiii(5, 2).unwrap();
        assert_eq!(restricted_basis(&c).unwrap(), vec![vec![h, -h], vec![Q::zero(), h]]);
    }

    #[test]
    fn theta_properties() {
        for (n, p) in [(2, 1), (3, 1), (4, 2), (5, 1), (5, 2), (6, 2)] {
            let sd = build_aiii(n, p).unwrap();
            let rs = &sd.root_system;
            for v in rs.positive_roots() {
                assert_eq!(sd.theta(&sd.theta(&v.vector)), v.vector);
            }
            for i in 1..=rs.rank {
                let a = &rs.simple_roots[i - 1];
                if sd.x.contains(&i) {
                    assert_eq!(&sd.theta(a), a);
                }
                let t = &rs.simple_roots[sd.tau[i - 1] - 1];
                let rhs: Vec<Q> = w_x(&sd, t).into_iter().map(|x| -x).collect();
                assert_eq!(sd.theta(a), rhs);
            }
            // roots fixed in sign by Θ are exactly those in the span of Π_X
            for r in rs.positive_roots() {
                let img = sd.theta(&r.vector);
                let positive = sd.root_system.positive_roots().iter().any(|s| s.vector == img);
                let in_x = r.coeffs.iter().enumerate().all(|(k, &c)| c == 0 || sd.x.contains(&(k + 1)));
                assert_eq!(positive, in_x);
            }
        }
    }

    #[test]
    fn normalization_values() {
        let a = |n, p| normalization_constants(&build_aiii(n, p).unwrap()).unwrap().a_sigma;
        assert!((a(2, 1) - 2f64.sqrt()).abs() < 1e-15);
        assert!((a(4, 2) - 1.0).abs() < 1e-15);
        assert!((a(6, 3) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        let z = normalization_constants(&build_aiii(4, 2).unwrap()).unwrap().z_formula.unwrap();
        assert_eq!(z, vec![q(1, 2), q(1, 2), q(-1, 2), q(-1, 2)]);
    }
}
