//! Naive enumeration of rational points x = p/q² on integral monic models.

use std::collections::BTreeSet;
use std::thread;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};

use super::{point_key, CurvePoint, EcError, WeierstrassCurve};
use crate::exactnum::Rational;

type Key = (bool, Rational, Rational);

fn square_root_i128(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn integer_root(a: &[BigInt; 3]) -> Option<BigInt> {
    let f = |r: &BigInt| ((r + &a[0]) * r + &a[1]) * r + &a[2];
    if a[2].is_zero() {
        return Some(BigInt::zero());
    }
    let n = a[2].abs().to_u64()?;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            for c in [d, n / d] {
                for r in [BigInt::from(c), -BigInt::from(c)] {
                    if f(&r).is_zero() {
                        return Some(r);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

/// ± products of distinct primes dividing `b`.
fn squarefree_kernels(b: i128) -> Vec<i128> {
    let mut primes = Vec::new();
    let mut n = b.abs();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            primes.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    let mut out = vec![1i128];
    for p in primes {
        let more: Vec<i128> = out.iter().map(|d| d * p).collect();
        out.extend(more);
    }
    let neg: Vec<i128> = out.iter().map(|d| -d).collect();
    out.extend(neg);
    out
}

fn workers() -> u64 {
    thread::available_parallelism().map(|n| n.get() as u64).unwrap_or(1)
}

/// Splits 1..=q_max into contiguous shards and unions the results.
fn sharded<G>(q_max: u64, job: G) -> BTreeSet<Key>
where
    G: Fn(u64, u64) -> Vec<CurvePoint<Rational>> + Sync,
{
    let n = workers().min(q_max.max(1));
    let step = q_max.div_ceil(n).max(1);
    let mut all = BTreeSet::new();
    thread::scope(|s| {
        let handles: Vec<_> = (0..n)
            .map(|i| {
                let job = &job;
                s.spawn(move || job(1 + i * step, ((i + 1) * step).min(q_max)))
            })
            .collect();
        for h in handles {
            for p in h.join().expect("search worker panicked") {
                all.insert(point_key(&p));
            }
        }
    });
    all
}

fn from_keys(keys: BTreeSet<Key>) -> Vec<CurvePoint<Rational>> {
    keys.into_iter().map(|(_, x, y)| CurvePoint::new(x, y)).collect()
}

fn push_point(out: &mut Vec<CurvePoint<Rational>>, p: i128, q: i128, y: i128, shift: &BigInt) {
    let q2 = BigInt::from(q * q);
    let x = Rational::new(BigInt::from(p), q2.clone()) + Rational::from_integer(shift.clone());
    let yv = Rational::new(BigInt::from(y), q2 * BigInt::from(q));
    out.push(CurvePoint::new(x.clone(), yv.clone()));
    if !y.is_zero() {
        out.push(CurvePoint::new(x, -yv));
    }
}

/// Affine rational points with |numerator(x)| and denominator(x) at most `height`.
///
/// When the cubic has an integer root r, x − r = d·s²/q² with d a squarefree
/// divisor of the translated linear coefficient, which shrinks the search.
pub fn naive_search(curve: &WeierstrassCurve<Rational>, height: u64) -> Result<Vec<CurvePoint<Rational>>, EcError> {
    let a = curve.integer_coefficients()?;
    let Some(root) = integer_root(&a) else {
        return naive_search_brute(curve, height);
    };
    // (x − r)((x − r)² + A(x − r) + B)
    let big_a = &a[0] + BigInt::from(3) * &root;
    let big_b = BigInt::from(3) * &root * &root + BigInt::from(2) * &a[0] * &root + &a[1];
    let (Some(ca), Some(cb)) = (big_a.to_i128(), big_b.to_i128()) else {
        return naive_search_brute(curve, height);
    };
    let h = height as i128;
    let q_max = height.sqrt();
    let kernels = squarefree_kernels(cb);
    let Some(r) = root.to_i128() else {
        return naive_search_brute(curve, height);
    };
    let keys = sharded(q_max, |lo, hi| {
        let mut out = Vec::new();
        let mut check = |xp: i128, q: i128, q2: i128| {
            if (xp + r * q2).abs() > h || xp.gcd(&q) != 1 {
                return;
            }
            let rest = xp * xp + ca * xp * q2 + cb * q2 * q2;
            if let Some(y) = xp.checked_mul(rest).and_then(square_root_i128) {
                push_point(&mut out, xp, q, y, &root);
            }
        };
        for q in lo as i128..=hi as i128 {
            let q2 = q * q;
            check(0, q, q2);
            for &d in &kernels {
                // |x numerator| only grows once |d·s²| passes h + |r|q²
                let mut s = 1i128;
                while (d * s * s).abs() <= h + r.abs() * q2 {
                    check(d * s * s, q, q2);
                    s += 1;
                }
            }
        }
        out
    });
    Ok(from_keys(keys))
}

/// Exhaustive version of [`naive_search`] over every coprime pair.
pub fn naive_search_brute(
    curve: &WeierstrassCurve<Rational>,
    height: u64,
) -> Result<Vec<CurvePoint<Rational>>, EcError> {
    let a = curve.integer_coefficients()?;
    let c: Vec<i128> = a
        .iter()
        .map(|x| x.to_i128().ok_or(EcError::NotIntegral))
        .collect::<Result<_, _>>()?;
    let h = height as i128;
    let zero = BigInt::zero();
    let keys = sharded(height.sqrt(), |lo, hi| {
        let mut out = Vec::new();
        for q in lo as i128..=hi as i128 {
            let q2 = q * q;
            for p in -h..=h {
                if p.gcd(&q) != 1 {
                    continue;
                }
                // q⁶·f(p/q²)
                let v = (p + c[0] * q2)
                    .checked_mul(p)
                    .and_then(|t| t.checked_add(c[1] * q2 * q2))
                    .and_then(|t| t.checked_mul(p))
                    .and_then(|t| t.checked_add(c[2] * q2 * q2 * q2));
                if let Some(y) = v.and_then(square_root_i128) {
                    push_point(&mut out, p, q, y, &zero);
                }
            }
        }
        out
    });
    Ok(from_keys(keys))
}
