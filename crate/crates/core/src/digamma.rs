//! Complex digamma and trigamma by upward recurrence plus the Stirling tail.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SHIFT: f64 = 12.0;

fn check_pole(z: Complex64) -> Result<()> {
    if z.im.abs() < 1e-14 && z.re <= 0.0 && (z.re - z.re.round()).abs() < 1e-14 {
        return Err(Error::Domain(format!("pole of the digamma function at {z}")));
    }
    Ok(())
}

pub fn digamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.re < SHIFT {
        acc -= z.inv();
        z += 1.0;
    }
    let w = (z * z).inv();
    // Bernoulli tail: B_2k / (2k z^2k)
    let tail = w
        * (-1.0 / 12.0
            + w * (1.0 / 120.0
                + w * (-1.0 / 252.0
                    + w * (1.0 / 240.0 + w * (-1.0 / 132.0 + w * (691.0 / 32760.0 - w / 12.0))))));
    Ok(acc + z.ln() - 0.5 * z.inv() + tail)
}

pub fn trigamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.re < SHIFT {
        acc += (z * z).inv();
        z += 1.0;
    }
    let zi = z.inv();
    let w = zi * zi;
    let tail = zi
        * w
        * (1.0 / 6.0
            + w * (-1.0 / 30.0
                + w * (1.0 / 42.0
                    + w * (-1.0 / 30.0 + w * (5.0 / 66.0 + w * (-691.0 / 2730.0 + w * 7.0 / 6.0))))));
    Ok(acc + zi + 0.5 * w + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cx(a: f64, b: f64) -> Complex64 {
        Complex64::new(a, b)
    }

    #[test]
    fn special_values() {
        let d1 = digamma(cx(1.0, 0.0)).unwrap();
        assert!((d1.re + EULER_GAMMA).abs() < 1e-15);
        let dh = digamma(cx(0.5, 0.0)).unwrap();
        assert!((dh.re + EULER_GAMMA + 2.0 * std::f64::consts::LN_2).abs() < 1e-14);
        let t1 = trigamma(cx(1.0, 0.0)).unwrap();
        assert!((t1.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
    }

    #[test]
    fn imaginary_part_on_half_line() {
        // Im ψ(1/2 + iy) = (π/2) tanh(πy)
        for &y in &[0.1, 0.7, 2.5] {
            let v = digamma(cx(0.5, y)).unwrap();
            let expect = 0.5 * std::f64::consts::PI * (std::f64::consts::PI * y).tanh();
            assert!((v.im - expect).abs() < 1e-13);
        }
    }

    #[test]
    fn poles_rejected() {
        assert!(digamma(cx(0.0, 0.0)).is_err());
        assert!(digamma(cx(-3.0, 0.0)).is_err());
        assert!(trigamma(cx(-1.0, 0.0)).is_err());
    }

    proptest! {
        #[test]
        fn recurrence(a in -5.0f64..5.0, b in 0.05f64..4.0) {
            let z = cx(a, b);
            let lhs = digamma(z + 1.0).unwrap() - digamma(z).unwrap();
            prop_assert!((lhs - z.inv()).norm() < 1e-12);
            let lhs2 = trigamma(z).unwrap() - trigamma(z + 1.0).unwrap();
            prop_assert!((lhs2 - (z * z).inv()).norm() < 1e-11);
        }

        #[test]
        fn reflection(b in -3.0f64..3.0) {
            // ψ'(1-z) + ψ'(z) = π² / sin²(πz) at z = 1/2 - ib/2
            let z = cx(0.5, -b / 2.0);
            let lhs = trigamma(z).unwrap() + trigamma(cx(1.0, 0.0) - z).unwrap();
            let pi = std::f64::consts::PI;
            let rhs = pi * pi / (pi * z).sin().powi(2);
            prop_assert!((lhs - rhs).norm() < 1e-11 * rhs.norm().max(1.0));
        }
    }
}
