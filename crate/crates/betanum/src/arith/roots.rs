//! Real root isolation by Sturm sequences over the rationals.
//!
//! Exact throughout: intervals have rational endpoints, signs are decided by
//! exact evaluation, and every returned interval contains exactly one root.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{IntPolynomial, RatPolynomial};
use crate::Error;

/// A closed rational interval `[lo, hi]`. A point (`lo == hi`) represents an
/// exactly known rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        RatInterval::new(
            BigRational::from(BigInt::from(lo)),
            BigRational::from(BigInt::from(hi)),
        )
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// True when the whole interval is strictly to the right of `x`.
    pub fn strictly_above(&self, x: &BigRational) -> bool {
        self.lo > *x
    }

    /// Serializes as `[num/den, num/den]`.
    pub fn to_text(&self) -> String {
        format!("[{}, {}]", self.lo, self.hi)
    }

    /// Parses the `[num/den, num/den]` form (plain integers also accepted).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: "expected [lo, hi]".to_string(),
            })?;
        let mut parts = inner.splitn(2, ',');
        let lo = parse_rational(parts.next().unwrap_or(""))?;
        let hi = parse_rational(parts.next().ok_or_else(|| Error::Parse {
            position: 0,
            message: "expected two endpoints".to_string(),
        })?)?;
        if lo > hi {
            return Err(Error::Parse {
                position: 0,
                message: "endpoints out of order".to_string(),
            });
        }
        Ok(RatInterval::new(lo, hi))
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Parses `num/den`, `num`, or a decimal like `1.32`.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let t = s.trim();
    let err = |message: &str| Error::Parse {
        position: 0,
        message: message.to_string(),
    };
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err("invalid numerator"))?;
        let d: BigInt = d.trim().parse().map_err(|_| err("invalid denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((w, frac)) = t.split_once('.') {
        let neg = w.trim_start().starts_with('-');
        let w: BigInt = if w.is_empty() || w == "-" {
            BigInt::zero()
        } else {
            w.parse().map_err(|_| err("invalid number"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("invalid decimal"));
        }
        let num: BigInt = frac.parse().map_err(|_| err("invalid decimal"))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigRational::new(num, den);
        let whole = BigRational::from(w);
        return Ok(if neg {
            whole - frac_part
        } else {
            whole + frac_part
        });
    }
    let n: BigInt = t.parse().map_err(|_| err("invalid integer"))?;
    Ok(BigRational::from(n))
}

/// The Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<RatPolynomial>,
}

impl SturmChain {
    /// Builds the chain for the squarefree part of `p`.
    pub fn new(p: &IntPolynomial) -> Result<Self, Error> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = p.squarefree_part().to_rat();
        let mut chain = vec![sf.clone()];
        let deriv = RatPolynomial::new(
            sf.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        );
        if !deriv.is_zero() {
            chain.push(deriv);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        Ok(SturmChain { chain })
    }

    /// Number of sign changes of the chain evaluated at `x`.
    fn sign_changes_at(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|q| {
                let v = q.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.sign_changes_at(lo) - self.sign_changes_at(hi)
    }
}

/// Isolates all distinct real roots of `p`.
///
/// Every returned interval contains exactly one root of `p`; rational roots
/// come back as point intervals, irrational ones as open-interior intervals
/// whose endpoints are not roots. Intervals are pairwise disjoint and sorted.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<RatInterval>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf)?;
    let bound = sf.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    let total = chain.count_roots(&lo, &hi);
    let mut out = Vec::with_capacity(total);
    if total > 0 {
        split(&chain, &sf, lo, hi, total, &mut out);
    }
    Ok(out)
}

fn split(
    chain: &SturmChain,
    p: &IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    count: usize,
    out: &mut Vec<RatInterval>,
) {
    if count == 1 {
        out.push(tidy_interval(chain, p, lo, hi));
        return;
    }
    let mut mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
    // A midpoint that is itself a root would make the half-open counts
    // ambiguous for the right half; nudge it off the root in that case.
    while p.eval_rat(&mid).is_zero() {
        mid = (&lo + &mid) / BigRational::from(BigInt::from(2));
    }
    let left = chain.count_roots(&lo, &mid);
    if left > 0 {
        split(chain, p, lo, mid.clone(), left, out);
    }
    if count - left > 0 {
        split(chain, p, mid, hi, count - left, out);
    }
}

/// Normalizes an isolating `(lo, hi]` with exactly one root inside: a root
/// sitting exactly at `hi` becomes a point interval, and a root at `lo`
/// (possible only for caller-supplied endpoints) is moved off while keeping
/// the interior root isolated.
fn tidy_interval(
    chain: &SturmChain,
    p: &IntPolynomial,
    lo: BigRational,
    hi: BigRational,
) -> RatInterval {
    if p.eval_rat(&hi).is_zero() {
        return RatInterval::point(hi);
    }
    let mut lo = lo;
    if p.eval_rat(&lo).is_zero() {
        // pick a non-root point between lo and the interior root
        let mut t = (&lo + &hi) / BigRational::from(BigInt::from(2));
        while p.eval_rat(&t).is_zero() || chain.count_roots(&t, &hi) != 1 {
            t = (&lo + &t) / BigRational::from(BigInt::from(2));
        }
        lo = t;
    }
    RatInterval::new(lo, hi)
}

/// Bisects `iv` until its width is at most `target`, preserving the single
/// root of `p` inside. Point intervals are returned unchanged.
pub fn refine_root(p: &IntPolynomial, iv: &RatInterval, target: &BigRational) -> RatInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if lo == hi {
        return iv.clone();
    }
    // a root exactly at an endpoint means the isolated root is that endpoint
    if p.eval_rat(&lo).is_zero() {
        return RatInterval::point(lo);
    }
    if p.eval_rat(&hi).is_zero() {
        return RatInterval::point(hi);
    }
    let sign_lo = p.eval_rat(&lo).is_positive();
    while &hi - &lo > *target {
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        let v = p.eval_rat(&mid);
        if v.is_zero() {
            return RatInterval::point(mid);
        }
        if v.is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Counts real roots of `p` inside `(iv.lo, iv.hi]`; point intervals count
/// the root membership directly.
pub fn count_roots_in(p: &IntPolynomial, iv: &RatInterval) -> Result<usize, Error> {
    if iv.is_point() {
        return Ok(usize::from(p.eval_rat(&iv.lo).is_zero()));
    }
    let chain = SturmChain::new(p)?;
    let mut count = chain.count_roots(&iv.lo, &iv.hi);
    if p.eval_rat(&iv.lo).is_zero() {
        count += 1; // half-open count misses a root sitting exactly at lo
    }
    Ok(count)
}
