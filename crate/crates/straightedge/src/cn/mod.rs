//! Exact arithmetic over the field of constructible numbers.
//!
//! A constructible number is anything reachable from the rationals by field
//! operations and square roots of nonnegative values — exactly the
//! coordinates a straightedge and compass can produce. Values are stored as
//! elements of per-value towers of quadratic extensions
//! `Q ⊂ Q(√d₁) ⊂ Q(√d₁)(√d₂) ⊂ …`, where each radicand is positive and not a
//! square in the field below it. An element of `F(√d)` is a pair `a + b·√d`
//! with `a, b ∈ F`.
//!
//! That invariant (radicands are never squares one level down) makes the
//! representation of zero unique per tower, so equality and sign are exact
//! decisions: a cached rational interval enclosure answers the common case
//! quickly, and a recursive symbolic test settles anything the interval
//! cannot. Binary operations between values living in different towers first
//! re-express one operand over the other's tower, detecting squares as they
//! go (so `√8` merged into a tower containing `√2` collapses to `2√2`).
//!
//! Values are immutable and cheap to clone (shared via `Arc`); all operations
//! are pure, so values can be freely sent and shared across threads.

mod interval;
mod sqrt;

pub use interval::Interval;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};
use thiserror::Error;

/// Errors from constructible-number arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    SqrtOfNegative,
}

/// Precision (in bits) of the enclosure cached on every extension node.
const CACHE_PREC: u32 = 64;

/// An exact constructible number.
///
/// Clones share the underlying node. Equality (`==`) and ordering compare
/// *values*, not representations; two structurally different expressions for
/// the same real compare equal. For that reason `Cn` deliberately does not
/// implement `Hash` — hash boards or objects through their canonical JSON
/// serialization instead.
#[derive(Clone)]
pub struct Cn(Arc<Node>);

struct Node {
    kind: Kind,
    /// Structural hash of the representation (fast-reject for `eq_repr`).
    shash: u64,
    /// Depth of this value's extension chain (0 for rationals).
    depth: u32,
    /// Lazily computed enclosure at `CACHE_PREC` bits.
    cache: OnceLock<Interval>,
}

enum Kind {
    Rat(BigRational),
    /// `a + b·√(tower.radicand)` with `b ≠ 0` and `a`, `b` living in (a
    /// prefix of) the field below `tower`.
    Ext { a: Cn, b: Cn, tower: Tower },
}

/// One level of a quadratic extension tower: the field below plus a radicand
/// that is positive and not a square in that field.
#[derive(Clone)]
pub(crate) struct Tower(Arc<Level>);

struct Level {
    below: Option<Tower>,
    radicand: Cn,
    depth: u32,
    thash: u64,
}

fn mix(h: u64, v: u64) -> u64 {
    (h ^ v).wrapping_mul(0x0000_0100_0000_01b3)
}

fn hash_parts(tag: u64, parts: &[u64]) -> u64 {
    let mut h = mix(0xcbf2_9ce4_8422_2325, tag);
    for &p in parts {
        h = mix(h, p);
    }
    h
}

fn hash_rational(q: &BigRational) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in q.numer().to_signed_bytes_le() {
        h = mix(h, b as u64);
    }
    h = mix(h, 0x2f);
    for b in q.denom().to_signed_bytes_le() {
        h = mix(h, b as u64);
    }
    h
}

impl Tower {
    fn extend(below: Option<Tower>, radicand: Cn) -> Tower {
        let depth = below.as_ref().map_or(0, |t| t.0.depth) + 1;
        let thash = hash_parts(
            3,
            &[below.as_ref().map_or(0, |t| t.0.thash), radicand.0.shash],
        );
        Tower(Arc::new(Level {
            below,
            radicand,
            depth,
            thash,
        }))
    }

    fn below(&self) -> Option<&Tower> {
        self.0.below.as_ref()
    }

    pub(crate) fn radicand(&self) -> &Cn {
        &self.0.radicand
    }

    fn depth(&self) -> u32 {
        self.0.depth
    }
}

fn tower_eq(x: &Tower, y: &Tower) -> bool {
    if Arc::ptr_eq(&x.0, &y.0) {
        return true;
    }
    if x.0.thash != y.0.thash || x.0.depth != y.0.depth {
        return false;
    }
    if !eq_repr(&x.0.radicand, &y.0.radicand) {
        return false;
    }
    match (&x.0.below, &y.0.below) {
        (None, None) => true,
        (Some(a), Some(b)) => tower_eq(a, b),
        _ => false,
    }
}

/// Structural (representation) equality. Implies value equality; the converse
/// does not hold.
pub(crate) fn eq_repr(x: &Cn, y: &Cn) -> bool {
    if Arc::ptr_eq(&x.0, &y.0) {
        return true;
    }
    if x.0.shash != y.0.shash || x.0.depth != y.0.depth {
        return false;
    }
    match (&x.0.kind, &y.0.kind) {
        (Kind::Rat(p), Kind::Rat(q)) => p == q,
        (
            Kind::Ext { a, b, tower },
            Kind::Ext {
                a: a2,
                b: b2,
                tower: t2,
            },
        ) => eq_repr(a, a2) && eq_repr(b, b2) && tower_eq(tower, t2),
        _ => false,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ChainRel {
    Equal,
    /// Left chain is a proper prefix of the right one.
    LeftPrefix,
    /// Right chain is a proper prefix of the left one.
    RightPrefix,
    Incomparable,
}

fn chain_of(v: &Cn) -> Option<&Tower> {
    match &v.0.kind {
        Kind::Rat(_) => None,
        Kind::Ext { tower, .. } => Some(tower),
    }
}

fn chain_depth(c: Option<&Tower>) -> u32 {
    c.map_or(0, |t| t.depth())
}

fn ancestor_at(t: &Tower, depth: u32) -> &Tower {
    debug_assert!(depth >= 1 && depth <= t.depth());
    let mut cur = t;
    while cur.depth() > depth {
        cur = cur.below().expect("tower depth bookkeeping");
    }
    cur
}

fn chain_rel(x: Option<&Tower>, y: Option<&Tower>) -> ChainRel {
    match (x, y) {
        (None, None) => ChainRel::Equal,
        (None, Some(_)) => ChainRel::LeftPrefix,
        (Some(_), None) => ChainRel::RightPrefix,
        (Some(a), Some(b)) => match a.depth().cmp(&b.depth()) {
            Ordering::Equal => {
                if tower_eq(a, b) {
                    ChainRel::Equal
                } else {
                    ChainRel::Incomparable
                }
            }
            Ordering::Less => {
                if tower_eq(a, ancestor_at(b, a.depth())) {
                    ChainRel::LeftPrefix
                } else {
                    ChainRel::Incomparable
                }
            }
            Ordering::Greater => {
                if tower_eq(ancestor_at(a, b.depth()), b) {
                    ChainRel::RightPrefix
                } else {
                    ChainRel::Incomparable
                }
            }
        },
    }
}

fn deeper_chain(x: Option<&Tower>, y: Option<&Tower>) -> Option<Tower> {
    if chain_depth(x) >= chain_depth(y) {
        x.cloned()
    } else {
        y.cloned()
    }
}

impl Cn {
    fn new_rat(q: BigRational) -> Cn {
        let shash = hash_parts(1, &[hash_rational(&q)]);
        Cn(Arc::new(Node {
            kind: Kind::Rat(q),
            shash,
            depth: 0,
            cache: OnceLock::new(),
        }))
    }

    pub fn zero() -> Cn {
        static ZERO: OnceLock<Cn> = OnceLock::new();
        ZERO.get_or_init(|| Cn::new_rat(BigRational::zero())).clone()
    }

    pub fn one() -> Cn {
        static ONE: OnceLock<Cn> = OnceLock::new();
        ONE.get_or_init(|| Cn::new_rat(BigRational::one())).clone()
    }

    pub fn from_int(n: i64) -> Cn {
        Cn::new_rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Cn {
        Cn::new_rat(BigRational::from_integer(n))
    }

    /// Exact rational `p/q` in canonical (reduced) form.
    pub fn from_ratio(p: i64, q: i64) -> Result<Cn, CnError> {
        if q == 0 {
            return Err(CnError::ZeroDenominator);
        }
        Ok(Cn::new_rat(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn from_big_ratio(q: BigRational) -> Cn {
        Cn::new_rat(q)
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0.kind, Kind::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0.kind, Kind::Rat(q) if q.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(&self.0.kind, Kind::Rat(_))
    }

    pub fn as_ratio(&self) -> Option<&BigRational> {
        match &self.0.kind {
            Kind::Rat(q) => Some(q),
            Kind::Ext { .. } => None,
        }
    }

    /// For a non-rational value `a + b·√r`, the triple `(a, b, r)`.
    pub fn parts(&self) -> Option<(Cn, Cn, Cn)> {
        match &self.0.kind {
            Kind::Rat(_) => None,
            Kind::Ext { a, b, tower } => {
                Some((a.clone(), b.clone(), tower.radicand().clone()))
            }
        }
    }

    /// Depth of this value's extension tower (0 for rationals).
    pub fn tower_depth(&self) -> u32 {
        self.0.depth
    }

    /// Exact sign: `-1`, `0` or `+1`.
    ///
    /// Tries the cached interval enclosure, then a sharper one, and only then
    /// falls back to the recursive symbolic test. An extension node is never
    /// zero (its radicand is not a square one level down), so the fallback
    /// always decides.
    pub fn signum(&self) -> i32 {
        match &self.0.kind {
            Kind::Rat(q) => {
                if q.is_zero() {
                    0
                } else if q.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Kind::Ext { a, b, tower } => {
                if let Some(s) = self.cached_interval().sign() {
                    return s;
                }
                if let Some(s) = self.enclosure(4 * CACHE_PREC).sign() {
                    return s;
                }
                let sa = a.signum();
                let sb = b.signum();
                debug_assert!(sb != 0, "extension node with zero sqrt coefficient");
                if sa == 0 {
                    return sb;
                }
                if sa == sb {
                    return sa;
                }
                // Opposite signs: compare a² against b²·d. The difference
                // cannot vanish or √d would be rational over the base field.
                let m = &(a * a) - &(&(b * b) * tower.radicand());
                let sm = m.signum();
                assert!(sm != 0, "tower radicand is a square in its base field");
                sa * sm
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Exact nonnegative square root.
    ///
    /// If the value is a square in its own tower no extension is added; in
    /// particular rational perfect squares stay rational, and rational
    /// radicands are reduced by their detectable square factors (so `√8`
    /// is stored as `2·√2`).
    pub fn sqrt(&self) -> Result<Cn, CnError> {
        sqrt::sqrt_impl(self)
    }

    /// Checked division.
    pub fn checked_div(&self, rhs: &Cn) -> Result<Cn, CnError> {
        if rhs.is_zero() {
            return Err(CnError::DivisionByZero);
        }
        Ok(mul_impl(self, &inv_impl(rhs)))
    }

    /// An interval of width at most `2⁻ᵇⁱᵗˢ` containing the exact value.
    pub fn approx(&self, bits: u32) -> Interval {
        let tol = interval::pow2_inv(bits);
        let mut prec = bits + 4;
        loop {
            let iv = self.enclosure(prec);
            if iv.width() <= tol {
                return iv;
            }
            prec = prec.saturating_mul(2);
        }
    }

    /// Midpoint of a 53-bit enclosure as `f64` (rendering only; never used in
    /// predicates).
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let iv = self.approx(53);
        let mid = (iv.lo() + iv.hi()) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    fn cached_interval(&self) -> &Interval {
        self.0.cache.get_or_init(|| match &self.0.kind {
            Kind::Rat(q) => Interval::point(q.clone()),
            Kind::Ext { a, b, tower } => {
                let ia = a.cached_interval();
                let ib = b.cached_interval();
                let ir = tower.radicand().cached_interval();
                ia.add(&ib.mul(&ir.sqrt_outer(CACHE_PREC)))
            }
        })
    }

    pub(crate) fn enclosure(&self, prec: u32) -> Interval {
        if prec == CACHE_PREC {
            return self.cached_interval().clone();
        }
        match &self.0.kind {
            Kind::Rat(q) => Interval::point(q.clone()),
            Kind::Ext { a, b, tower } => {
                let ia = a.enclosure(prec);
                let ib = b.enclosure(prec);
                let ir = tower.radicand().enclosure(prec);
                ia.add(&ib.mul(&ir.sqrt_outer(prec)))
            }
        }
    }
}

/// Smart constructor for `a + b·√(tower.radicand)`: collapses to `a` when the
/// coefficient vanishes, keeping representations free of dead levels.
fn ext(a: Cn, b: Cn, tower: Tower) -> Cn {
    if b.is_zero() {
        return a;
    }
    debug_assert!(matches!(
        chain_rel(chain_of(&a), tower.below()),
        ChainRel::Equal | ChainRel::LeftPrefix
    ));
    debug_assert!(matches!(
        chain_rel(chain_of(&b), tower.below()),
        ChainRel::Equal | ChainRel::LeftPrefix
    ));
    let shash = hash_parts(2, &[a.0.shash, b.0.shash, tower.0.thash]);
    let depth = tower.depth();
    Cn(Arc::new(Node {
        kind: Kind::Ext { a, b, tower },
        shash,
        depth,
        cache: OnceLock::new(),
    }))
}

fn generator(tower: Tower) -> Cn {
    ext(Cn::zero(), Cn::one(), tower)
}

fn ext_parts(v: &Cn) -> (&Cn, &Cn, &Tower) {
    match &v.0.kind {
        Kind::Ext { a, b, tower } => (a, b, tower),
        Kind::Rat(_) => unreachable!("ext_parts on a rational"),
    }
}

/// Re-express `v` over a tower compatible with `target`, extending the target
/// tower where `v`'s radicands are not squares in it.
fn reexpress(v: &Cn, target: Option<&Tower>) -> Cn {
    if chain_rel(chain_of(v), target) != ChainRel::Incomparable {
        return v.clone();
    }
    let (a, b, tower) = ext_parts(v);
    let a2 = reexpress(a, target);
    let c1 = deeper_chain(chain_of(&a2), target);
    let b2 = reexpress(b, c1.as_ref());
    let c2 = deeper_chain(chain_of(&b2), c1.as_ref());
    let r2 = reexpress(tower.radicand(), c2.as_ref());
    let c3 = deeper_chain(chain_of(&r2), c2.as_ref());
    let s = match sqrt::try_sqrt_in(&r2, c3.as_ref()) {
        Some(s) => s,
        None => generator(Tower::extend(c3, r2)),
    };
    &a2 + &(&b2 * &s)
}

/// Bring two values onto prefix-comparable towers (the shallower operand is
/// re-expressed over the deeper one's tower).
fn unify(x: &Cn, y: &Cn) -> (Cn, Cn) {
    if chain_depth(chain_of(x)) >= chain_depth(chain_of(y)) {
        let y2 = reexpress(y, chain_of(x));
        (x.clone(), y2)
    } else {
        let x2 = reexpress(x, chain_of(y));
        (x2, y.clone())
    }
}

fn add_impl(x: &Cn, y: &Cn) -> Cn {
    if x.is_zero() {
        return y.clone();
    }
    if y.is_zero() {
        return x.clone();
    }
    if let (Kind::Rat(p), Kind::Rat(q)) = (&x.0.kind, &y.0.kind) {
        return Cn::new_rat(p + q);
    }
    match chain_rel(chain_of(x), chain_of(y)) {
        ChainRel::Equal => {
            let (xa, xb, tower) = ext_parts(x);
            let (ya, yb, _) = ext_parts(y);
            ext(add_impl(xa, ya), add_impl(xb, yb), tower.clone())
        }
        ChainRel::RightPrefix => {
            let (a, b, tower) = ext_parts(x);
            ext(add_impl(a, y), b.clone(), tower.clone())
        }
        ChainRel::LeftPrefix => {
            let (a, b, tower) = ext_parts(y);
            ext(add_impl(a, x), b.clone(), tower.clone())
        }
        ChainRel::Incomparable => {
            let (x2, y2) = unify(x, y);
            add_impl(&x2, &y2)
        }
    }
}

fn mul_impl(x: &Cn, y: &Cn) -> Cn {
    if x.is_zero() || y.is_zero() {
        return Cn::zero();
    }
    if x.is_one() {
        return y.clone();
    }
    if y.is_one() {
        return x.clone();
    }
    if let (Kind::Rat(p), Kind::Rat(q)) = (&x.0.kind, &y.0.kind) {
        return Cn::new_rat(p * q);
    }
    match chain_rel(chain_of(x), chain_of(y)) {
        ChainRel::Equal => {
            let (xa, xb, tower) = ext_parts(x);
            let (ya, yb, _) = ext_parts(y);
            let d = tower.radicand();
            let a = add_impl(&mul_impl(xa, ya), &mul_impl(&mul_impl(xb, yb), d));
            let b = add_impl(&mul_impl(xa, yb), &mul_impl(xb, ya));
            ext(a, b, tower.clone())
        }
        ChainRel::RightPrefix => {
            let (a, b, tower) = ext_parts(x);
            ext(mul_impl(a, y), mul_impl(b, y), tower.clone())
        }
        ChainRel::LeftPrefix => {
            let (a, b, tower) = ext_parts(y);
            ext(mul_impl(a, x), mul_impl(b, x), tower.clone())
        }
        ChainRel::Incomparable => {
            let (x2, y2) = unify(x, y);
            mul_impl(&x2, &y2)
        }
    }
}

fn neg_impl(x: &Cn) -> Cn {
    match &x.0.kind {
        Kind::Rat(q) => Cn::new_rat(-q),
        Kind::Ext { a, b, tower } => ext(neg_impl(a), neg_impl(b), tower.clone()),
    }
}

/// Multiplicative inverse; caller guarantees the argument is nonzero.
fn inv_impl(x: &Cn) -> Cn {
    match &x.0.kind {
        Kind::Rat(q) => Cn::new_rat(q.recip()),
        Kind::Ext { a, b, tower } => {
            // 1/(a + b√d) = (a − b√d)/(a² − b²d); the norm is nonzero because
            // √d is irrational over the base field.
            let d = tower.radicand();
            let den = &(a * a) - &(&(b * b) * d);
            let den_inv = inv_impl(&den);
            ext(
                mul_impl(a, &den_inv),
                neg_impl(&mul_impl(b, &den_inv)),
                tower.clone(),
            )
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:path) => {
        impl $trait<&Cn> for &Cn {
            type Output = Cn;
            fn $method(self, rhs: &Cn) -> Cn {
                $f(self, rhs)
            }
        }
        impl $trait<Cn> for Cn {
            type Output = Cn;
            fn $method(self, rhs: Cn) -> Cn {
                $f(&self, &rhs)
            }
        }
        impl $trait<&Cn> for Cn {
            type Output = Cn;
            fn $method(self, rhs: &Cn) -> Cn {
                $f(&self, rhs)
            }
        }
        impl $trait<Cn> for &Cn {
            type Output = Cn;
            fn $method(self, rhs: Cn) -> Cn {
                $f(self, &rhs)
            }
        }
    };
}

fn sub_impl(x: &Cn, y: &Cn) -> Cn {
    add_impl(x, &neg_impl(y))
}

fn div_impl(x: &Cn, y: &Cn) -> Cn {
    x.checked_div(y).expect("division by zero constructible number")
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for &Cn {
    type Output = Cn;
    fn neg(self) -> Cn {
        neg_impl(self)
    }
}

impl Neg for Cn {
    type Output = Cn;
    fn neg(self) -> Cn {
        neg_impl(&self)
    }
}

impl PartialEq for Cn {
    fn eq(&self, other: &Self) -> bool {
        if eq_repr(self, other) {
            return true;
        }
        // Disjoint enclosures decide inequality without building the
        // difference.
        if self.cached_interval().disjoint(other.cached_interval()) {
            return false;
        }
        sub_impl(self, other).is_zero()
    }
}

impl Eq for Cn {}

impl PartialOrd for Cn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cn {
    fn cmp(&self, other: &Self) -> Ordering {
        if eq_repr(self, other) {
            return Ordering::Equal;
        }
        let (a, b) = (self.cached_interval(), other.cached_interval());
        if a.hi() < b.lo() {
            return Ordering::Less;
        }
        if a.lo() > b.hi() {
            return Ordering::Greater;
        }
        match sub_impl(self, other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl From<i64> for Cn {
    fn from(n: i64) -> Cn {
        Cn::from_int(n)
    }
}

impl fmt::Display for Cn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Rat(q) => write!(f, "{q}"),
            Kind::Ext { a, b, tower } => {
                if !a.is_zero() {
                    write!(f, "{a} + ")?;
                }
                if b.is_one() {
                    write!(f, "sqrt({})", tower.radicand())
                } else {
                    write!(f, "({b})*sqrt({})", tower.radicand())
                }
            }
        }
    }
}

impl fmt::Debug for Cn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cn(n: i64) -> Cn {
        Cn::from_int(n)
    }

    fn sqrt(n: i64) -> Cn {
        cn(n).sqrt().unwrap()
    }

    #[test]
    fn rational_construction() {
        assert_eq!(Cn::from_ratio(1, 2).unwrap(), Cn::from_ratio(2, 4).unwrap());
        assert_eq!(Cn::from_ratio(0, 5).unwrap(), Cn::zero());
        assert_eq!(Cn::from_ratio(3, 0), Err(CnError::ZeroDenominator));
    }

    #[test]
    fn field_ops() {
        assert!((&sqrt(2) + &(-sqrt(2))).is_zero());
        assert_eq!(&sqrt(2) * &sqrt(2), cn(2));
        assert_eq!(cn(1).checked_div(&cn(3)).unwrap(), Cn::from_ratio(1, 3).unwrap());
        assert_eq!(cn(1).checked_div(&Cn::zero()), Err(CnError::DivisionByZero));
    }

    #[test]
    fn sqrt_of_square_stays_rational() {
        let r = sqrt(4);
        assert!(r.is_rational());
        assert_eq!(r, cn(2));
        assert_eq!(r.tower_depth(), 0);
        assert_eq!(&sqrt(2) * &sqrt(2), cn(2));
        assert_eq!(cn(-1).sqrt(), Err(CnError::SqrtOfNegative));
    }

    #[test]
    fn sqrt_reduces_square_factors() {
        // √8 = 2√2, so √8/√2 is rational.
        let q = sqrt(8).checked_div(&sqrt(2)).unwrap();
        assert_eq!(q, cn(2));
        assert_eq!(sqrt(8).tower_depth(), 1);
    }

    #[test]
    fn nested_radical_denests_on_comparison() {
        // (√2+√3)² = 5+2√6, so this sign is exactly zero.
        let v = &(&sqrt(2) + &sqrt(3)) - &(&cn(5) + &(&cn(2) * &sqrt(6))).sqrt().unwrap();
        assert_eq!(v.signum(), 0);
        assert!(v.is_zero());
    }

    #[test]
    fn signs() {
        assert_eq!(Cn::from_ratio(1, 3).unwrap().signum(), 1);
        assert_eq!((&sqrt(2) - &Cn::from_ratio(3, 2).unwrap()).signum(), -1);
        assert_eq!(Cn::zero().signum(), 0);
    }

    #[test]
    fn approx_brackets_value() {
        let iv = Cn::from_ratio(1, 2).unwrap().approx(10);
        assert!(iv.contains(&BigRational::new(BigInt::from(1), BigInt::from(2))));
        assert!(iv.width() <= interval::pow2_inv(10));

        let iv = sqrt(2).approx(20);
        assert!(iv.lo() >= &BigRational::new(BigInt::from(141421), BigInt::from(100000)));
        assert!(iv.hi() <= &BigRational::new(BigInt::from(141422), BigInt::from(100000)));

        let iv = Cn::zero().approx(4);
        assert!(iv.contains(&BigRational::zero()));
    }

    #[test]
    fn cross_tower_products() {
        // √2·√3 = √6 even though the towers differ structurally.
        assert_eq!(&sqrt(2) * &sqrt(3), sqrt(6));
        // (√3+1)(√3−1) = 2.
        let v = &(&sqrt(3) + &cn(1)) * &(&sqrt(3) - &cn(1));
        assert_eq!(v, cn(2));
    }

    #[test]
    fn ordering_is_total_and_exact() {
        let a = sqrt(2);
        let b = Cn::from_ratio(141421356, 100000000).unwrap();
        assert!(b < a);
        let c = Cn::from_ratio(141421357, 100000000).unwrap();
        assert!(a < c);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn deep_nesting() {
        // √(3+2√2) = 1+√2.
        let v = (&cn(3) + &(&cn(2) * &sqrt(2))).sqrt().unwrap();
        assert_eq!(v, &cn(1) + &sqrt(2));
        // Fourth root of 5, squared twice.
        let r = cn(5).sqrt().unwrap().sqrt().unwrap();
        assert_eq!(&(&r * &r) * &(&r * &r), cn(5));
    }
}
