//! Positive zeros of `J_ν`.
//!
//! Zeros are found in order. Each one is bracketed by a sign-change scan with
//! step `π/4`, which is shorter than half the smallest gap between
//! consecutive zeros for any `ν > -1`, so no zero is skipped and the index is
//! certified by counting. The bracket is then refined with safeguarded
//! Newton steps. Results are cached per order.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_4;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use super::bessel::{j_derivative_unchecked, j_nonneg, BesselOrder};
use crate::error::{Error, Result};

const SCAN_STEP: f64 = FRAC_PI_4;
const MAX_SCAN_STEPS: usize = 10_000_000;

/// The `index`-th positive zero of `J_ν` together with a bracket on which
/// `J_ν` changes sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselZero {
    pub order: BesselOrder,
    pub index: u32,
    pub value: f64,
    pub bracket: (f64, f64),
}

type Cache = RwLock<HashMap<u64, Vec<BesselZero>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `index`-th positive zero (1-based) of `J_ν`.
pub fn bessel_zero(order: BesselOrder, index: u32) -> Result<BesselZero> {
    if index == 0 {
        return Err(Error::Input("zero index starts at 1".into()));
    }
    let zeros = bessel_zeros(order, index)?;
    Ok(zeros[index as usize - 1])
}

/// The first `count` positive zeros of `J_ν`, in increasing order.
pub fn bessel_zeros(order: BesselOrder, count: u32) -> Result<Vec<BesselZero>> {
    let key = order.nu().to_bits();
    let wanted = count as usize;
    {
        let guard = cache().read().unwrap_or_else(|e| e.into_inner());
        if let Some(known) = guard.get(&key) {
            if known.len() >= wanted {
                return Ok(known[..wanted].to_vec());
            }
        }
    }

    let mut known = {
        let guard = cache().read().unwrap_or_else(|e| e.into_inner());
        guard.get(&key).cloned().unwrap_or_default()
    };
    while known.len() < wanted {
        let next = find_next(order, known.last())?;
        known.push(next);
    }
    let result = known[..wanted].to_vec();

    let mut guard = cache().write().unwrap_or_else(|e| e.into_inner());
    let entry = guard.entry(key).or_default();
    if entry.len() < known.len() {
        *entry = known;
    }
    Ok(result)
}

/// A point left of the first zero where `J_ν > 0`.
fn first_scan_start(nu: f64) -> f64 {
    let mut x = if nu > 0.0 {
        nu.max((nu + 1.0).sqrt())
    } else {
        (nu + 1.0).sqrt()
    };
    while j_nonneg(nu, x) <= 0.0 {
        x *= 0.5;
    }
    x
}

fn find_next(order: BesselOrder, previous: Option<&BesselZero>) -> Result<BesselZero> {
    let nu = order.nu();
    let (mut lo, index) = match previous {
        None => (first_scan_start(nu), 1),
        Some(z) => (z.bracket.1, z.index + 1),
    };
    let mut f_lo = j_nonneg(nu, lo);
    for _ in 0..MAX_SCAN_STEPS {
        let hi = lo + SCAN_STEP;
        let f_hi = j_nonneg(nu, hi);
        if f_hi == 0.0 {
            // Landed on the zero itself; widen to a strict bracket.
            let h = hi + 0.5 * SCAN_STEP;
            return Ok(BesselZero {
                order,
                index,
                value: hi,
                bracket: (lo, h),
            });
        }
        if f_lo.signum() != f_hi.signum() {
            let value = refine(nu, lo, hi, f_lo);
            return Ok(BesselZero {
                order,
                index,
                value,
                bracket: (lo, hi),
            });
        }
        lo = hi;
        f_lo = f_hi;
    }
    Err(Error::Domain(format!("no sign change found for J_{nu} zero #{index}")))
}

/// Newton iteration kept inside a shrinking sign-change bracket; falls back
/// to bisection whenever a step would leave it.
fn refine(nu: f64, lo: f64, hi: f64, f_lo: f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    let rising = f_lo < 0.0;
    let mut x = 0.5 * (a + b);
    for _ in 0..200 {
        let f = j_nonneg(nu, x);
        if f == 0.0 {
            return x;
        }
        if (f < 0.0) == rising {
            a = x;
        } else {
            b = x;
        }
        let df = j_derivative_unchecked(nu, x);
        let mut next = x - f / df;
        if !(next > a && next < b) || !next.is_finite() {
            next = 0.5 * (a + b);
        }
        let step = (next - x).abs();
        x = next;
        if step <= 4.0 * f64::EPSILON * x || b - a <= 4.0 * f64::EPSILON * x {
            break;
        }
    }
    x
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn order(nu: f64) -> BesselOrder {
        BesselOrder::new(nu).unwrap()
    }

    /// Plain ascending series for `J_ν`, kept separate from the library.
    fn series_j(nu: f64, x: f64) -> f64 {
        let mut term = (0.5 * x).powf(nu) / libm::tgamma(nu + 1.0);
        let mut sum = term;
        for k in 1..300 {
            let k = k as f64;
            term *= -(0.25 * x * x) / (k * (k + nu));
            sum += term;
        }
        sum
    }

    fn bisect(nu: f64, mut a: f64, mut b: f64) -> f64 {
        let fa = series_j(nu, a);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if (series_j(nu, m) < 0.0) == (fa < 0.0) {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    #[test]
    fn first_zeros_match_bisection_oracle() {
        let j01 = bisect(0.0, 2.0, 3.0);
        let j11 = bisect(1.0, 3.0, 4.0);
        assert!((j01 - 2.404_825_558).abs() < 1e-9);
        assert!((j11 - 3.831_705_970).abs() < 1e-9);
        assert!((bessel_zero(order(0.0), 1).unwrap().value - j01).abs() < 1e-12);
        assert!((bessel_zero(order(1.0), 1).unwrap().value - j11).abs() < 1e-12);
    }

    #[test]
    fn third_zero_of_minus_point_three() {
        let z = bessel_zero(order(-0.3), 3).unwrap();
        assert!((z.value - 8.177_851_519).abs() < 1e-8, "{}", z.value);
        assert_eq!(z.index, 3);
    }

    #[test]
    fn index_zero_rejected() {
        assert!(bessel_zero(order(0.0), 0).is_err());
    }

    #[test]
    fn brackets_certify_sign_change() {
        for &nu in &[-0.95, -0.3, 0.0, 0.5, 1.0, 2.7, 7.0, 15.5] {
            let zs = bessel_zeros(order(nu), 12).unwrap();
            for (i, z) in zs.iter().enumerate() {
                assert_eq!(z.index as usize, i + 1);
                let (lo, hi) = z.bracket;
                assert!(lo < z.value && z.value < hi);
                assert!(j_nonneg(nu, lo) * j_nonneg(nu, hi) < 0.0);
                let slope = j_derivative_unchecked(nu, z.value).abs() * z.value;
                assert!(j_nonneg(nu, z.value).abs() <= 1e-12 * slope.max(1.0));
            }
            for w in zs.windows(2) {
                assert!(w[0].value < w[1].value);
            }
        }
    }

    #[test]
    fn interlacing() {
        for &nu in &[-0.3, 0.0, 0.5, 1.0, 2.7] {
            let a = bessel_zeros(order(nu), 11).unwrap();
            let b = bessel_zeros(order(nu + 1.0), 10).unwrap();
            for n in 0..10 {
                assert!(a[n].value < b[n].value && b[n].value < a[n + 1].value, "nu={nu} n={n}");
            }
        }
    }

    #[test]
    fn concurrent_callers_agree() {
        let nu = 3.25;
        let results: Vec<Vec<f64>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|i| {
                    s.spawn(move || {
                        bessel_zeros(order(nu), 5 + i)
                            .unwrap()
                            .iter()
                            .map(|z| z.value)
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for r in &results {
            assert_eq!(&r[..5], &results[0][..5]);
        }
    }
}
