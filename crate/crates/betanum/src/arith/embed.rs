//! Certified conjugate approximations.
//!
//! Real roots are isolated exactly by Sturm sequences. Complex roots are
//! approximated by floating-point Durand-Kerner seeds, polished with Newton
//! steps in exact rational arithmetic, and certified a posteriori: for a
//! degree-`d` polynomial `p` with `p'(z) ≠ 0` there is a root within
//! `d·|p(z)/p'(z)|` of `z`, so pairwise disjoint disks around the
//! approximations pin down one root each. All radii are exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;
use super::roots::{self, RatInterval};
use crate::Error;

/// A real value known to lie within `radius` of `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBall {
    pub center: BigRational,
    pub radius: BigRational,
}

/// A complex value known to lie within `radius` (Euclidean) of the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: BigRational,
    pub im: BigRational,
    pub radius: BigRational,
}

/// Result of evaluating an embedding: real for real conjugates, complex for
/// a representative of a complex-conjugate pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedBall {
    Real(RealBall),
    Complex(ComplexBall),
}

impl EmbedBall {
    pub fn radius(&self) -> &BigRational {
        match self {
            EmbedBall::Real(b) => &b.radius,
            EmbedBall::Complex(b) => &b.radius,
        }
    }
}

/// Exact complex rational arithmetic (no radius tracking).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ComplexRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRat { re, im }
    }

    pub fn zero() -> Self {
        ComplexRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn sub(&self, o: &ComplexRat) -> ComplexRat {
        ComplexRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &ComplexRat) -> ComplexRat {
        ComplexRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn div(&self, o: &ComplexRat) -> ComplexRat {
        let n = o.norm_sqr();
        assert!(!n.is_zero(), "complex division by zero");
        ComplexRat::new(
            (&self.re * &o.re + &self.im * &o.im) / &n,
            (&self.im * &o.re - &self.re * &o.im) / &n,
        )
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Rounds both parts to the nearest multiple of `2^-bits`.
    pub fn round_to_bits(&self, bits: u32) -> ComplexRat {
        ComplexRat::new(round_to_bits(&self.re, bits), round_to_bits(&self.im, bits))
    }
}

pub(crate) fn round_to_bits(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = q * BigRational::from(scale.clone());
    let rounded = scaled.round().to_integer();
    BigRational::new(rounded, scale)
}

/// A rational upper bound for `sqrt(q)`, tight to roughly `2^-bits`.
pub(crate) fn sqrt_upper(q: &BigRational, bits: u32) -> BigRational {
    assert!(!q.is_negative(), "sqrt of negative rational");
    if q.is_zero() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << bits;
    let scaled = q * BigRational::from(&scale * &scale);
    let floor = scaled.floor().to_integer();
    BigRational::new(floor.sqrt() + BigInt::one(), scale)
}

/// One certified representative of a complex-conjugate root pair, with
/// positive imaginary part.
#[derive(Clone, Debug)]
pub(crate) struct ComplexRoot {
    pub center: ComplexRat,
    pub radius: BigRational,
}

impl ComplexRoot {
    /// Upper bound for the modulus of the true root in this disk.
    pub fn modulus_sqr_upper(&self) -> BigRational {
        let m2 = self.center.norm_sqr();
        let span = (self.center.re.abs() + self.center.im.abs())
            * BigRational::from(BigInt::from(2))
            * &self.radius;
        m2 + span + &self.radius * &self.radius
    }

    /// Lower bound for the squared modulus (may be negative for wide disks).
    pub fn modulus_sqr_lower(&self) -> BigRational {
        let m2 = self.center.norm_sqr();
        let span = (self.center.re.abs() + self.center.im.abs())
            * BigRational::from(BigInt::from(2))
            * &self.radius;
        m2 - span
    }
}

/// The full certified root set of a squarefree polynomial: real roots as
/// isolating intervals, complex pairs as upper-half-plane disks.
#[derive(Clone, Debug)]
pub(crate) struct CertifiedRoots {
    pub poly: IntPolynomial,
    pub real: Vec<RatInterval>,
    pub complex: Vec<ComplexRoot>,
}

const SEED_ROUNDS: [usize; 3] = [400, 2000, 10000];

impl CertifiedRoots {
    /// Computes the certified root set of the squarefree part of `p`.
    pub fn of(p: &IntPolynomial) -> Result<CertifiedRoots, Error> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = p.squarefree_part();
        let d = sf.degree().unwrap_or(0);
        let real = roots::isolate_real_roots(&sf)?;
        let r = real.len();
        debug_assert!((d - r).is_multiple_of(2));
        let s = (d - r) / 2;
        if s == 0 {
            return Ok(CertifiedRoots {
                poly: sf,
                real,
                complex: Vec::new(),
            });
        }
        for (attempt, &rounds) in SEED_ROUNDS.iter().enumerate() {
            let seeds = durand_kerner_seeds(&sf, rounds, attempt as u32);
            if let Some(complex) = certify_complex(&sf, seeds, s) {
                return Ok(CertifiedRoots {
                    poly: sf,
                    real,
                    complex,
                });
            }
        }
        Err(Error::Internal(format!(
            "failed to certify complex roots of {sf}"
        )))
    }

    /// Newton-refines every complex disk until its radius is at most `target`.
    pub fn refine_complex(&mut self, target: &BigRational) {
        let poly = self.poly.clone();
        for root in &mut self.complex {
            refine_complex_root(&poly, root, target);
        }
    }
}

/// Plain f64 complex pair used only for seeding.
#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn mul(self, o: C64) -> C64 {
        C64 {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
    fn sub(self, o: C64) -> C64 {
        C64 {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
    fn div(self, o: C64) -> C64 {
        let n = o.re * o.re + o.im * o.im;
        C64 {
            re: (self.re * o.re + self.im * o.im) / n,
            im: (self.im * o.re - self.re * o.im) / n,
        }
    }
    fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

fn durand_kerner_seeds(p: &IntPolynomial, rounds: usize, attempt: u32) -> Vec<C64> {
    let d = p.degree().unwrap_or(0);
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(0.0))
        .collect();
    let lead = *coeffs.last().unwrap();
    let eval = |z: C64| -> C64 {
        let mut acc = C64 { re: 0.0, im: 0.0 };
        for c in coeffs.iter().rev() {
            acc = acc.mul(z);
            acc.re += c;
        }
        acc
    };
    // spread the starting points on a circle, rotated differently per attempt
    let radius = 1.0
        + coeffs
            .iter()
            .take(d)
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);
    let mut zs: Vec<C64> = (0..d)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25 + 0.13 * attempt as f64)
                / d as f64
                + 0.5;
            C64 {
                re: radius * 0.7 * angle.cos(),
                im: radius * 0.7 * angle.sin(),
            }
        })
        .collect();
    for _ in 0..rounds {
        let mut moved = 0.0f64;
        for i in 0..d {
            let mut denom = C64 { re: lead, im: 0.0 };
            for j in 0..d {
                if i != j {
                    denom = denom.mul(zs[i].sub(zs[j]));
                }
            }
            if denom.abs2() == 0.0 {
                continue;
            }
            let step = eval(zs[i]).div(denom);
            zs[i] = zs[i].sub(step);
            moved = moved.max(step.abs2());
        }
        if moved < 1e-26 {
            break;
        }
    }
    zs
}

/// Turns f64 seeds into certified, pairwise-disjoint upper-half-plane disks.
fn certify_complex(p: &IntPolynomial, seeds: Vec<C64>, s: usize) -> Option<Vec<ComplexRoot>> {
    let mut upper: Vec<C64> = seeds.into_iter().filter(|z| z.im > 1e-9).collect();
    if upper.len() != s {
        return None;
    }
    upper.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let mut out = Vec::with_capacity(s);
    for z in upper {
        let center = ComplexRat::new(
            BigRational::from_float(z.re)?,
            BigRational::from_float(z.im)?,
        );
        let mut root = ComplexRoot {
            center,
            radius: BigRational::one(),
        };
        // polish before certifying so the radius bound is meaningful
        let target = BigRational::new(BigInt::one(), BigInt::one() << 48);
        if !refine_complex_root(p, &mut root, &target) {
            return None;
        }
        out.push(root);
    }
    // disks must avoid the real axis and each other
    for root in &out {
        if root.center.im <= root.radius {
            return None;
        }
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let dre = &out[i].center.re - &out[j].center.re;
            let dim = &out[i].center.im - &out[j].center.im;
            let dist2 = &dre * &dre + &dim * &dim;
            let rsum = &out[i].radius + &out[j].radius;
            if dist2 <= &rsum * &rsum {
                return None;
            }
        }
    }
    Some(out)
}

fn eval_complex(p: &IntPolynomial, z: &ComplexRat) -> ComplexRat {
    let mut acc = ComplexRat::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re += BigRational::from(c.clone());
    }
    acc
}

/// Newton iteration with exact rational evaluation and certified radius
/// `d·|p(z)/p'(z)|`. Returns false when the iteration fails to contract
/// (bad seed or precision cap reached).
fn refine_complex_root(p: &IntPolynomial, root: &mut ComplexRoot, target: &BigRational) -> bool {
    let d = p.degree().unwrap_or(0);
    let deriv = p.derivative();
    let d_sq = BigRational::from(BigInt::from((d * d) as u64));
    let mut bits: u32 = 128;
    let mut stalls = 0u32;
    for _ in 0..200 {
        let pv = eval_complex(p, &root.center);
        let dv = eval_complex(&deriv, &root.center);
        let dv_n = dv.norm_sqr();
        if dv_n.is_zero() {
            return false;
        }
        // radius bound: d * |p| / |p'|, as an exact upper bound
        let ratio_sq = &d_sq * pv.norm_sqr() / dv_n;
        let radius = sqrt_upper(&ratio_sq, bits.min(256));
        let improved = radius < root.radius;
        root.radius = radius;
        if root.radius <= *target {
            return true;
        }
        if !improved {
            stalls += 1;
            if stalls > 4 {
                if bits >= 1 << 14 {
                    return false;
                }
                bits *= 2;
                stalls = 0;
            }
        }
        let step = pv.div(&dv);
        root.center = root.center.sub(&step).round_to_bits(bits);
    }
    root.radius <= *target
}

/// Interval arithmetic helpers on closed rational intervals, used for ball
/// evaluation of polynomials at isolated roots.
pub(crate) fn iv_add(a: &RatInterval, b: &RatInterval) -> RatInterval {
    RatInterval::new(&a.lo + &b.lo, &a.hi + &b.hi)
}

pub(crate) fn iv_mul(a: &RatInterval, b: &RatInterval) -> RatInterval {
    let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
    let lo = products.iter().min().unwrap().clone();
    let hi = products.iter().max().unwrap().clone();
    RatInterval::new(lo, hi)
}

pub(crate) fn iv_scale(a: &RatInterval, k: &BigRational) -> RatInterval {
    if k.is_negative() {
        RatInterval::new(&a.hi * k, &a.lo * k)
    } else {
        RatInterval::new(&a.lo * k, &a.hi * k)
    }
}

/// Evaluates `sum(coords[i] x^i)` over the interval `x ∈ iv`.
pub(crate) fn eval_interval(coords: &[BigRational], iv: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(BigRational::zero());
    let mut power = RatInterval::point(BigRational::one());
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            power = iv_mul(&power, iv);
        }
        if !c.is_zero() {
            acc = iv_add(&acc, &iv_scale(&power, c));
        }
    }
    acc
}

/// Evaluates `sum(coords[i] z^i)` at a complex disk, returning a ball.
/// The center is evaluated exactly; radii propagate through Horner steps
/// with the cheap `|re| + |im|` upper bound for complex moduli.
pub(crate) fn eval_complex_ball(coords: &[BigRational], root: &ComplexRoot) -> ComplexBall {
    let mut acc_c = ComplexRat::zero();
    let mut acc_r = BigRational::zero();
    let z = &root.center;
    let zr = &root.radius;
    // |z| upper bound for radius propagation
    let z_abs = z.re.abs() + z.im.abs() + zr;
    for c in coords.iter().rev() {
        // (acc_c ± acc_r)(z ± zr) = acc_c z ± (|acc_c| zr + (|z| + zr) acc_r)
        let acc_abs = acc_c.re.abs() + acc_c.im.abs();
        let new_r = &acc_abs * zr + &z_abs * &acc_r;
        acc_c = acc_c.mul(z);
        acc_r = new_r;
        acc_c.re += c;
    }
    ComplexBall {
        re: acc_c.re,
        im: acc_c.im,
        radius: acc_r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(coeffs)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_upper_bounds_from_above() {
        for (n, d) in [(2i64, 1i64), (3, 4), (868, 1000), (5, 7)] {
            let q = rat(n, d);
            let u = sqrt_upper(&q, 80);
            assert!(&u * &u >= q);
            // within 2^-40 of the true value
            let slack = &u * &u - &q;
            assert!(slack < rat(1, 1) / BigRational::from(BigInt::one() << 38));
        }
        assert_eq!(sqrt_upper(&BigRational::zero(), 10), BigRational::zero());
    }

    #[test]
    fn plastic_complex_pair_is_certified() {
        let roots = CertifiedRoots::of(&p(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(roots.real.len(), 1);
        assert_eq!(roots.complex.len(), 1);
        let z = &roots.complex[0];
        assert!(z.center.im > z.radius);
        // |z|^2 should be near 1/beta = 0.7549 (product of roots is 1)
        let m2 = z.center.norm_sqr();
        assert!(m2 > rat(74, 100) && m2 < rat(77, 100));
    }

    #[test]
    fn refinement_reaches_requested_radius() {
        let mut roots = CertifiedRoots::of(&p(&[-1, -1, 0, 1])).unwrap();
        let target = BigRational::new(BigInt::one(), BigInt::one() << 200);
        roots.refine_complex(&target);
        assert!(roots.complex[0].radius <= target);
        // the certified disk still avoids the real axis
        assert!(roots.complex[0].center.im > roots.complex[0].radius);
    }

    #[test]
    fn degree_five_root_split() {
        // x^5 - x^4 - 1 = (x^3-x-1)(x^2-x+1): 1 real root, 2 complex pairs
        let roots = CertifiedRoots::of(&p(&[-1, 0, 0, 0, -1, 1])).unwrap();
        assert_eq!(roots.real.len(), 1);
        assert_eq!(roots.complex.len(), 2);
        // one pair on the unit circle (from x^2-x+1), one strictly inside
        let mut mods: Vec<BigRational> =
            roots.complex.iter().map(|z| z.center.norm_sqr()).collect();
        mods.sort();
        assert!(mods[0] < rat(9, 10));
        assert!(mods[1] > rat(99, 100) && mods[1] < rat(101, 100));
    }

    #[test]
    fn interval_evaluation_contains_true_value() {
        // q(x) = x^2 - x - 1 at the golden interval must straddle 0
        let iv = RatInterval::new(rat(1618, 1000), rat(1619, 1000));
        let coords = vec![rat(-1, 1), rat(-1, 1), rat(1, 1)];
        let out = eval_interval(&coords, &iv);
        assert!(out.lo <= BigRational::zero() && out.hi >= BigRational::zero());
    }
}
