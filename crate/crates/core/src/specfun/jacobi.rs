use crate::error::{finite, Error, Result};

/// Jacobi polynomial `P_k^{(α,β)}(x)` by the three-term recurrence in the
/// degree.
pub fn jacobi_p(degree: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    finite("alpha", alpha)?;
    finite("beta", beta)?;
    finite("x", x)?;
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::Input(format!(
            "Jacobi parameters must exceed -1, got ({alpha}, {beta})"
        )));
    }
    if x.abs() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!("Jacobi argument {x} outside [-1, 1]")));
    }
    Ok(jacobi_unchecked(degree, alpha, beta, x))
}

pub(crate) fn jacobi_unchecked(degree: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if degree == 0 {
        return prev;
    }
    let ab = alpha + beta;
    let mut cur = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
    for n in 2..=degree {
        let n = n as f64;
        let c = 2.0 * n + ab;
        let a1 = 2.0 * n * (n + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Degree `ℓ − e₁/2 − e₂/2` of the Jacobi factor of an angular mode, with `ℓ`
/// given as `2ℓ`. Fails unless the result is a nonnegative integer.
pub fn effective_jacobi_degree(twoell: u32, e1: u8, e2: u8) -> Result<u32> {
    let shift = e1 as i64 + e2 as i64;
    let twice = twoell as i64 - shift;
    if e1 > 1 || e2 > 1 {
        return Err(Error::Classification(format!(
            "sector indices must be 0 or 1, got ({e1},{e2})"
        )));
    }
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Classification(format!(
            "2l = {twoell} with sector ({e1},{e2}) gives degree {}/2, not a nonnegative integer",
            twice
        )));
    }
    Ok((twice / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Minimal double-double arithmetic so the oracle does not inherit the
    /// cancellation of the alternating Leibniz sum.
    #[derive(Clone, Copy)]
    struct Dd(f64, f64);

    impl Dd {
        fn from(x: f64) -> Self {
            Dd(x, 0.0)
        }
        fn two_sum(a: f64, b: f64) -> (f64, f64) {
            let s = a + b;
            let bb = s - a;
            (s, (a - (s - bb)) + (b - bb))
        }
        fn add(self, o: Dd) -> Dd {
            let (s, e) = Self::two_sum(self.0, o.0);
            let e = e + self.1 + o.1;
            let (hi, lo) = Self::two_sum(s, e);
            Dd(hi, lo)
        }
        fn neg(self) -> Dd {
            Dd(-self.0, -self.1)
        }
        fn mul(self, o: Dd) -> Dd {
            let p = self.0 * o.0;
            let e = self.0.mul_add(o.0, -p) + (self.0 * o.1 + self.1 * o.0);
            let (hi, lo) = Self::two_sum(p, e);
            Dd(hi, lo)
        }
        fn div(self, o: Dd) -> Dd {
            let q1 = self.0 / o.0;
            let r = self.add(o.mul(Dd::from(q1)).neg());
            let q2 = r.0 / o.0;
            let (hi, lo) = Self::two_sum(q1, q2);
            Dd(hi, lo)
        }
    }

    fn binom(a: Dd, k: u32) -> Dd {
        (0..k).fold(Dd::from(1.0), |acc, i| {
            acc.mul(a.add(Dd::from(-(i as f64)))).div(Dd::from(i as f64 + 1.0))
        })
    }

    fn powi(x: Dd, n: u32) -> Dd {
        (0..n).fold(Dd::from(1.0), |acc, _| acc.mul(x))
    }

    /// Expansion of the Rodrigues formula by the Leibniz rule, in
    /// double-double precision.
    fn rodrigues(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
        let nf = Dd::from(n as f64);
        let xm = Dd::from(x).add(Dd::from(-1.0)).mul(Dd::from(0.5));
        let xp = Dd::from(x).add(Dd::from(1.0)).mul(Dd::from(0.5));
        let mut sum = Dd::from(0.0);
        for s in 0..=n {
            let term = binom(nf.add(Dd::from(alpha)), n - s)
                .mul(binom(nf.add(Dd::from(beta)), s))
                .mul(powi(xm, s))
                .mul(powi(xp, n - s));
            sum = sum.add(term);
        }
        sum.0 + sum.1
    }

    #[test]
    fn low_degrees() {
        assert_eq!(jacobi_p(0, 0.3, 1.7, -0.4).unwrap(), 1.0);
        let v = jacobi_p(1, 0.2, 0.3, 0.5).unwrap();
        assert!((v - 0.575).abs() < 1e-15);
    }

    #[test]
    fn legendre_degree_five() {
        let x: f64 = 0.3;
        let legendre = (63.0 * x.powi(5) - 70.0 * x.powi(3) + 15.0 * x) / 8.0;
        let v = jacobi_p(5, 0.0, 0.0, x).unwrap();
        assert!((v - legendre).abs() < 1e-15);
        assert!((v - rodrigues(5, 0.0, 0.0, x)).abs() < 1e-14);
    }

    #[test]
    fn degree_bookkeeping() {
        assert_eq!(effective_jacobi_degree(4, 0, 0).unwrap(), 2);
        assert_eq!(effective_jacobi_degree(2, 1, 1).unwrap(), 0);
        assert_eq!(effective_jacobi_degree(3, 1, 0).unwrap(), 1);
        assert!(matches!(
            effective_jacobi_degree(3, 0, 0),
            Err(Error::Classification(_))
        ));
        assert!(matches!(
            effective_jacobi_degree(0, 1, 1),
            Err(Error::Classification(_))
        ));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(jacobi_p(2, -1.0, 0.0, 0.0).is_err());
        assert!(jacobi_p(2, 0.0, 0.0, 1.5).is_err());
    }

    proptest! {
        #[test]
        fn recurrence_matches_rodrigues(
            k in 0u32..=20,
            alpha in -0.5f64..3.0,
            beta in -0.5f64..3.0,
            x in -1.0f64..=1.0,
        ) {
            let want = rodrigues(k, alpha, beta, x);
            let got = jacobi_p(k, alpha, beta, x).unwrap();
            let scale = want.abs().max(1e-3);
            prop_assert!((got - want).abs() <= 1e-10 * scale, "{} vs {}", got, want);
        }
    }
}
