//! Square roots: exact square detection inside a tower, and tower extension
//! when a value is genuinely not a square.

use super::{chain_of, chain_rel, ext, ext_parts, generator, ChainRel, Cn, CnError, Tower};
use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

pub(crate) fn sqrt_impl(v: &Cn) -> Result<Cn, CnError> {
    match v.signum() {
        -1 => Err(CnError::SqrtOfNegative),
        0 => Ok(Cn::zero()),
        _ => {
            if let Some(r) = try_sqrt_in(v, chain_of(v)) {
                return Ok(r);
            }
            if let Some(q) = v.as_ratio() {
                // √(n/d) = (t/d)·√m with n·d = t²·m and m kept free of
                // detectable square factors; radicands stay integral.
                let (t, m) = square_part(q.numer() * q.denom());
                debug_assert!(m > BigInt::one());
                let scale = Cn::from_big_ratio(BigRational::new(t, q.denom().clone()));
                let root = generator(Tower::extend(None, Cn::from_bigint(m)));
                return Ok(&scale * &root);
            }
            Ok(generator(Tower::extend(chain_of(v).cloned(), v.clone())))
        }
    }
}

/// The square root of `v` expressed over (a prefix of) `chain`, if `v` is a
/// square there. `v`'s own chain must be a prefix of `chain`. Returns the
/// nonnegative root.
pub(crate) fn try_sqrt_in(v: &Cn, chain: Option<&Tower>) -> Option<Cn> {
    if v.is_zero() {
        return Some(Cn::zero());
    }
    let Some(t) = chain else {
        // Base field: rational perfect squares only.
        let q = v.as_ratio().expect("value deeper than its chain");
        if q.is_negative() {
            return None;
        }
        let sn = q.numer().sqrt();
        let sd = q.denom().sqrt();
        if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
            return Some(Cn::from_big_ratio(BigRational::new(sn, sd)));
        }
        return None;
    };

    // Split v = a + b·√d over this level.
    let here = matches!(chain_rel(chain_of(v), Some(t)), ChainRel::Equal);
    let (a, b) = if here {
        let (a, b, _) = ext_parts(v);
        (a.clone(), b.clone())
    } else {
        (v.clone(), Cn::zero())
    };
    let d = t.radicand();
    let below = t.below();

    if b.is_zero() {
        // Either √a lives below, or √a = w·√d with w² = a/d.
        if let Some(u) = try_sqrt_in(&a, below) {
            return Some(u);
        }
        let q = a.checked_div(d).expect("radicands are nonzero");
        if let Some(w) = try_sqrt_in(&q, below) {
            if !w.is_zero() {
                return Some(ext(Cn::zero(), w, t.clone()));
            }
        }
        return None;
    }

    // (u + w√d)² = a + b√d requires the norm a² − b²d to be a square below,
    // and then one of (a+n)/2, (a+n)/(2d) to be a square below.
    let m = &(&a * &a) - &(&(&b * &b) * d);
    if m.signum() < 0 {
        return None;
    }
    let n = try_sqrt_in(&m, below)?;
    let two = Cn::from_int(2);
    let h1 = (&a + &n).checked_div(&two).unwrap();
    if let Some(u) = try_sqrt_in(&h1, below) {
        if !u.is_zero() {
            let w = b.checked_div(&(&two * &u)).unwrap();
            return Some(nonneg(ext(u, w, t.clone())));
        }
    }
    let h2 = (&a + &n).checked_div(&(&two * d)).unwrap();
    if let Some(w) = try_sqrt_in(&h2, below) {
        if !w.is_zero() {
            let u = b.checked_div(&(&two * &w)).unwrap();
            return Some(nonneg(ext(u, w, t.clone())));
        }
    }
    None
}

fn nonneg(x: Cn) -> Cn {
    if x.signum() < 0 {
        -x
    } else {
        x
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; 1000];
        let mut primes = Vec::new();
        for p in 2..1000usize {
            if sieve[p] {
                primes.push(p as u64);
                let mut k = p * p;
                while k < 1000 {
                    sieve[k] = false;
                    k += p;
                }
            }
        }
        primes
    })
}

/// Factor `n = t²·m` with `m` free of square factors detectable by trial
/// division below 1000 (plus a final perfect-square check on the remainder).
fn square_part(n: BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut t = BigInt::one();
    let mut m = n;
    for &p in small_primes() {
        let p2 = BigInt::from(p * p);
        if m < p2 {
            break;
        }
        loop {
            let (q, r) = num_integer::Integer::div_rem(&m, &p2);
            if r.is_zero() {
                m = q;
                t *= p;
            } else {
                break;
            }
        }
    }
    let s = m.sqrt();
    if &s * &s == m {
        t *= &s;
        m = BigInt::one();
    }
    (t, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_part_extracts() {
        let (t, m) = square_part(BigInt::from(8));
        assert_eq!((t, m), (BigInt::from(2), BigInt::from(2)));
        let (t, m) = square_part(BigInt::from(360));
        // 360 = 36 · 10
        assert_eq!((t, m), (BigInt::from(6), BigInt::from(10)));
        let (t, m) = square_part(BigInt::from(49));
        assert_eq!((t, m), (BigInt::from(7), BigInt::from(1)));
    }
}
