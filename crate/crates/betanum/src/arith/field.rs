//! Real algebraic number fields `ℚ(β)` for a distinguished root `β > 1`.
//!
//! Elements are rational coordinate vectors in the power basis
//! `1, β, …, β^(d-1)`; all arithmetic reduces modulo the monic minimal
//! polynomial, so equality and the zero test are exact. Order comparisons
//! refine the isolating interval of `β` until the sign is decided, which
//! terminates because a nonzero element has a nonzero embedding.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::embed::{
    self, eval_complex_ball, eval_interval, CertifiedRoots, ComplexRoot, EmbedBall, RealBall,
};
use super::minpoly::minimal_polynomial;
use super::poly::{IntPolynomial, RatPolynomial};
use super::roots::{self, RatInterval};
use crate::Error;

/// Conjugate data: the certified root set of the minimal polynomial with the
/// distinguished real root singled out.
#[derive(Debug)]
struct ConjugateData {
    roots: CertifiedRoots,
    /// Index of the distinguished root within `roots.real`.
    distinguished: usize,
}

/// A number field `ℚ(β)` with `β > 1` the unique root of `minpoly` in
/// `root_interval`.
#[derive(Debug)]
pub struct NumberField {
    minpoly: IntPolynomial,
    degree: usize,
    /// Isolating interval for β; refined lazily, only ever shrinks.
    root: RwLock<RatInterval>,
    /// Power-basis coordinates of `β^(-1)`.
    beta_inv: Vec<BigRational>,
    /// Trace of `β^m` for `m = 0..d` (integers since β is an algebraic integer).
    power_sums: Vec<BigInt>,
    conjugates: OnceLock<ConjugateData>,
    pisot: OnceLock<bool>,
}

impl NumberField {
    /// Builds the field from a monic irreducible polynomial and an interval
    /// isolating a real root `> 1`. Irreducibility is verified by extracting
    /// the minimal polynomial of the designated root and comparing.
    pub fn new(minpoly: IntPolynomial, root_interval: RatInterval) -> Result<Arc<Self>, Error> {
        let extracted = minimal_polynomial(&minpoly, &root_interval)?;
        if extracted != minpoly {
            return Err(Error::Internal(format!(
                "polynomial {minpoly} is reducible; minimal factor at the root is {extracted}"
            )));
        }
        Self::new_unchecked(minpoly, root_interval)
    }

    /// Builds the field of the designated root of an arbitrary monic integer
    /// polynomial, extracting its minimal polynomial first.
    pub fn from_poly_root(
        p: &IntPolynomial,
        root_interval: &RatInterval,
    ) -> Result<Arc<Self>, Error> {
        let mp = minimal_polynomial(p, root_interval)?;
        // re-isolate the root against the minimal polynomial
        let candidates = roots::isolate_real_roots(&mp)?;
        let mut chosen = None;
        for iv in candidates {
            if intervals_share_root(&mp, &iv, root_interval)? {
                chosen = Some(iv);
                break;
            }
        }
        let iv = chosen.ok_or(Error::NoRootInInterval)?;
        Self::new_unchecked(mp, iv)
    }

    fn new_unchecked(
        minpoly: IntPolynomial,
        root_interval: RatInterval,
    ) -> Result<Arc<Self>, Error> {
        if !minpoly.is_monic() {
            return Err(Error::NotMonic);
        }
        let degree = minpoly.degree().ok_or(Error::ZeroPolynomial)?;
        if degree == 0 {
            return Err(Error::ZeroPolynomial);
        }
        if roots::count_roots_in(&minpoly, &root_interval)? != 1 {
            return Err(Error::NoRootInInterval);
        }
        // the root must be > 1: refine until the interval clears 1
        let one = BigRational::one();
        let mut iv = root_interval;
        while !iv.strictly_above(&one) {
            if iv.hi <= one {
                return Err(Error::BaseNotGreaterThanOne);
            }
            let target = iv.width() / BigRational::from(BigInt::from(2));
            iv = roots::refine_root(&minpoly, &iv, &target);
            if iv.is_point() {
                if iv.lo > one {
                    break;
                }
                return Err(Error::BaseNotGreaterThanOne);
            }
        }
        // beta^(-1) = -(p_1 + p_2 β + … + p_d β^(d-1)) / p_0
        let p0 = minpoly.coeff(0);
        if p0.is_zero() {
            // x divides the polynomial, contradicting irreducibility for d ≥ 1
            return Err(Error::Internal(
                "minimal polynomial has zero constant term".into(),
            ));
        }
        let beta_inv: Vec<BigRational> = (1..=degree)
            .map(|i| BigRational::new(-minpoly.coeff(i), p0.clone()))
            .collect();
        let power_sums = companion_power_traces(&minpoly, degree);
        Ok(Arc::new(NumberField {
            minpoly,
            degree,
            root: RwLock::new(iv),
            beta_inv,
            power_sums,
            conjugates: OnceLock::new(),
            pisot: OnceLock::new(),
        }))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Current isolating interval for β (width depends on refinement so far).
    pub fn root_interval(&self) -> RatInterval {
        self.root.read().unwrap().clone()
    }

    /// Shrinks the isolating interval of β to at most `width`.
    pub fn refine_root_interval(&self, width: &BigRational) {
        let mut guard = self.root.write().unwrap();
        if guard.width() > *width {
            *guard = roots::refine_root(&self.minpoly, &guard, width);
        }
    }

    /// `⌈β⌉ - 1`, the largest admissible digit value.
    pub fn max_digit(self: &Arc<Self>) -> u32 {
        let beta = FieldElement::beta_of(self);
        let c = beta.ceil();
        let c: BigInt = c - BigInt::one();
        u32::try_from(&c).expect("digit bound fits in u32")
    }

    /// Number of real embeddings (including the distinguished one).
    pub fn real_embeddings(&self) -> usize {
        self.conjugate_data().roots.real.len()
    }

    /// Number of complex-conjugate embedding pairs.
    pub fn complex_embeddings(&self) -> usize {
        self.conjugate_data().roots.complex.len()
    }

    fn conjugate_data(&self) -> &ConjugateData {
        self.conjugates.get_or_init(|| {
            let roots =
                CertifiedRoots::of(&self.minpoly).expect("minimal polynomial roots must certify");
            let field_iv = self.root_interval();
            let mut distinguished = None;
            for (i, iv) in roots.real.iter().enumerate() {
                if intervals_share_root(&self.minpoly, iv, &field_iv)
                    .expect("root comparison cannot fail on the minimal polynomial")
                {
                    distinguished = Some(i);
                    break;
                }
            }
            ConjugateData {
                roots,
                distinguished: distinguished.expect("distinguished root present"),
            }
        })
    }

    /// True when β is a Pisot number: an algebraic integer `> 1` whose
    /// conjugates all have modulus `< 1`.
    ///
    /// Decision is exact. A conjugate of modulus exactly 1 forces the minimal
    /// polynomial to equal ± its own reciprocal, so for non-self-reciprocal
    /// polynomials ball refinement terminates; self-reciprocal ones pair the
    /// roots as `z ↔ 1/z` and are Pisot precisely in degree 2.
    pub fn is_pisot(&self) -> bool {
        *self.pisot.get_or_init(|| self.decide_pisot())
    }

    fn decide_pisot(&self) -> bool {
        if self.degree == 1 {
            return true; // integer base ≥ 2, no conjugates
        }
        if self.minpoly.is_self_reciprocal() {
            // roots pair z ↔ 1/z; only the quadratic case β, 1/β is Pisot
            return self.degree == 2;
        }
        // no conjugate sits exactly on the unit circle; refine until decided
        let data = self.conjugate_data();
        let one = BigRational::one();
        for (i, iv) in data.roots.real.iter().enumerate() {
            if i == data.distinguished {
                continue;
            }
            let mut iv = iv.clone();
            loop {
                let max_abs = iv.lo.abs().max(iv.hi.abs());
                let min_abs = if iv.contains(&BigRational::zero()) {
                    BigRational::zero()
                } else {
                    iv.lo.abs().min(iv.hi.abs())
                };
                if max_abs < one {
                    break;
                }
                if min_abs > one {
                    return false;
                }
                let target = iv.width() / BigRational::from(BigInt::from(4));
                iv = roots::refine_root(&self.minpoly, &iv, &target);
            }
        }
        if data.roots.complex.is_empty() {
            return true;
        }
        let mut complex = data.roots.complex.to_vec();
        let mut target = complex
            .iter()
            .map(|z| z.radius.clone())
            .fold(BigRational::one(), |a, b| a.min(b));
        loop {
            let mut undecided = false;
            for z in &complex {
                if z.modulus_sqr_upper() < one {
                    continue;
                }
                if z.modulus_sqr_lower() > one {
                    return false;
                }
                undecided = true;
            }
            if !undecided {
                return true;
            }
            target /= BigRational::from(BigInt::from(16));
            let mut refreshed = CertifiedRoots {
                poly: data.roots.poly.clone(),
                real: data.roots.real.clone(),
                complex,
            };
            refreshed.refine_complex(&target);
            complex = refreshed.complex;
        }
    }

    /// True when β is an algebraic unit (minimal polynomial constant term ±1).
    pub fn is_unit(&self) -> bool {
        self.minpoly.coeff(0).abs().is_one()
    }

    /// A certified rational `q < 1` bounding every non-distinguished
    /// conjugate modulus from above. Errors when β is not Pisot.
    pub fn contraction_bound(&self) -> Result<BigRational, Error> {
        if !self.is_pisot() {
            return Err(Error::NotPisot);
        }
        if self.degree == 1 {
            return Ok(BigRational::zero());
        }
        let one = BigRational::one();
        let data = self.conjugate_data();
        let mut bound = BigRational::zero();
        for (i, iv) in data.roots.real.iter().enumerate() {
            if i == data.distinguished {
                continue;
            }
            let mut iv = iv.clone();
            while iv.lo.abs().max(iv.hi.abs()) >= one {
                let target = iv.width() / BigRational::from(BigInt::from(4));
                iv = roots::refine_root(&self.minpoly, &iv, &target);
            }
            bound = bound.max(iv.lo.abs().max(iv.hi.abs()));
        }
        if !data.roots.complex.is_empty() {
            let mut complex = data.roots.complex.to_vec();
            let mut target = BigRational::new(BigInt::one(), BigInt::from(1u32 << 20));
            loop {
                if complex.iter().all(|z| z.modulus_sqr_upper() < one) {
                    for z in &complex {
                        bound = bound.max(embed::sqrt_upper(&z.modulus_sqr_upper(), 64));
                    }
                    break;
                }
                let mut refreshed = CertifiedRoots {
                    poly: data.roots.poly.clone(),
                    real: data.roots.real.clone(),
                    complex,
                };
                refreshed.refine_complex(&target);
                complex = refreshed.complex;
                target /= BigRational::from(BigInt::from(16));
            }
        }
        debug_assert!(bound < one);
        Ok(bound)
    }

    /// Evaluates the `which`-th embedding (1-based; 1 is β itself, then the
    /// other real embeddings in ascending order, then one representative per
    /// complex pair) of the element with the given coordinates, to radius at
    /// most `eps`.
    fn embed_coords(
        &self,
        coords: &[BigRational],
        which: usize,
        eps: &BigRational,
    ) -> Result<EmbedBall, Error> {
        if which == 0 {
            return Err(Error::InvalidEmbedding(which));
        }
        let data = self.conjugate_data();
        let r = data.roots.real.len();
        let s = data.roots.complex.len();
        if which > r + s {
            return Err(Error::InvalidEmbedding(which));
        }
        if which <= r {
            // map index to a real root: 1 → distinguished, then the others ascending
            let root_idx = if which == 1 {
                data.distinguished
            } else {
                let mut others: Vec<usize> = (0..r).filter(|&i| i != data.distinguished).collect();
                others.sort_by(|&a, &b| data.roots.real[a].lo.cmp(&data.roots.real[b].lo));
                others[which - 2]
            };
            let mut iv = if root_idx == data.distinguished {
                self.root_interval()
            } else {
                data.roots.real[root_idx].clone()
            };
            loop {
                let ball = eval_interval(coords, &iv);
                let radius = ball.width() / BigRational::from(BigInt::from(2));
                if radius <= *eps {
                    let center = ball.midpoint();
                    if root_idx == data.distinguished {
                        // publish the refinement for future comparisons
                        let mut guard = self.root.write().unwrap();
                        if guard.width() > iv.width() {
                            *guard = iv.clone();
                        }
                    }
                    return Ok(EmbedBall::Real(RealBall { center, radius }));
                }
                let target = iv.width() / BigRational::from(BigInt::from(16));
                iv = roots::refine_root(&self.minpoly, &iv, &target);
            }
        }
        // complex embedding
        let mut root = data.roots.complex[which - r - 1].clone();
        loop {
            let ball = eval_complex_ball(coords, &root);
            if ball.radius <= *eps {
                return Ok(EmbedBall::Complex(ball));
            }
            let target = &root.radius / BigRational::from(BigInt::from(64));
            refine_in_place(&data.roots.poly, &mut root, &target);
        }
    }

    /// Conjugate disks for the non-distinguished embeddings, refined to the
    /// requested radius: first other reals ascending, then complex pairs.
    pub(crate) fn conjugate_balls(
        &self,
        eps: &BigRational,
    ) -> (Vec<RatInterval>, Vec<ComplexRoot>) {
        let data = self.conjugate_data();
        let mut reals = Vec::new();
        for (i, iv) in data.roots.real.iter().enumerate() {
            if i == data.distinguished {
                continue;
            }
            reals.push(roots::refine_root(&self.minpoly, iv, eps));
        }
        reals.sort_by(|a, b| a.lo.cmp(&b.lo));
        let mut complex = data.roots.complex.to_vec();
        for z in &mut complex {
            if z.radius > *eps {
                refine_in_place(&data.roots.poly, z, eps);
            }
        }
        (reals, complex)
    }
}

fn refine_in_place(poly: &IntPolynomial, root: &mut ComplexRoot, target: &BigRational) {
    let mut single = CertifiedRoots {
        poly: poly.clone(),
        real: Vec::new(),
        complex: vec![root.clone()],
    };
    single.refine_complex(target);
    *root = single.complex.pop().unwrap();
}

/// True when both intervals isolate the same real root of `p`.
fn intervals_share_root(
    p: &IntPolynomial,
    a: &RatInterval,
    b: &RatInterval,
) -> Result<bool, Error> {
    let lo = a.lo.clone().max(b.lo.clone());
    let hi = a.hi.clone().min(b.hi.clone());
    if lo > hi {
        return Ok(false);
    }
    let overlap = RatInterval::new(lo, hi);
    Ok(roots::count_roots_in(p, &overlap)? == 1)
}

/// Traces of powers of the companion matrix of `p`: `Tr(β^m)` for `m < count+1`.
fn companion_power_traces(p: &IntPolynomial, count: usize) -> Vec<BigInt> {
    let d = p.degree().expect("nonzero");
    // companion matrix C with C[i][j]: sub-diagonal ones, last column -p_i
    let mut c = vec![vec![BigInt::zero(); d]; d];
    for i in 1..d {
        c[i][i - 1] = BigInt::one();
    }
    for i in 0..d {
        c[i][d - 1] = -p.coeff(i);
    }
    let mut out = Vec::with_capacity(count + 1);
    out.push(BigInt::from(d as u64)); // Tr(I)
    let mut m = c.clone();
    for _ in 1..=count {
        let tr = (0..d).fold(BigInt::zero(), |acc, i| acc + &m[i][i]);
        out.push(tr);
        // m ← m · c
        let mut next = vec![vec![BigInt::zero(); d]; d];
        for i in 0..d {
            for k in 0..d {
                if m[i][k].is_zero() {
                    continue;
                }
                for j in 0..d {
                    if c[k][j].is_zero() {
                        continue;
                    }
                    next[i][j] += &m[i][k] * &c[k][j];
                }
            }
        }
        m = next;
    }
    out.truncate(count + 1);
    out
}

/// An element of `ℚ(β)` as rational coordinates in the power basis.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn new(field: Arc<NumberField>, mut coords: Vec<BigRational>) -> Self {
        let d = field.degree();
        if coords.len() > d {
            coords = reduce_mod_minpoly(field.minpoly(), coords);
        }
        coords.resize(d, BigRational::zero());
        FieldElement { field, coords }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        let d = field.degree();
        FieldElement {
            field,
            coords: vec![BigRational::zero(); d],
        }
    }

    pub fn one(field: Arc<NumberField>) -> Self {
        Self::from_int(field, BigInt::one())
    }

    pub fn from_int(field: Arc<NumberField>, n: BigInt) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = BigRational::from(n);
        FieldElement { field, coords }
    }

    pub fn from_rational(field: Arc<NumberField>, q: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = q;
        FieldElement { field, coords }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True when the element is rational (all higher coordinates vanish).
    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    /// Integer power-basis coordinates, when all denominators are 1.
    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.coords
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    Some(c.numer().clone())
                } else {
                    None
                }
            })
            .collect()
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.minpoly() == other.field.minpoly(),
            "elements belong to different number fields"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let mut prod = vec![BigRational::zero(); 2 * self.coords.len() - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        FieldElement::new(self.field.clone(), prod)
    }

    pub fn mul_rational(&self, k: &BigRational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> FieldElement {
        self.mul_rational(&BigRational::from(k.clone()))
    }

    /// Multiplication by β: shift coordinates and reduce once.
    pub fn mul_beta(&self) -> FieldElement {
        let mut shifted = vec![BigRational::zero()];
        shifted.extend(self.coords.iter().cloned());
        FieldElement::new(self.field.clone(), shifted)
    }

    /// Multiplication by `β^(-1)`, exact (rational coordinates).
    pub fn mul_beta_inv(&self) -> FieldElement {
        let beta_inv = FieldElement {
            field: self.field.clone(),
            coords: self.field.beta_inv.clone(),
        };
        self.mul(&beta_inv)
    }

    /// `β` as an element.
    pub fn beta_of(field: &Arc<NumberField>) -> FieldElement {
        if field.degree() == 1 {
            // β is rational: -p0
            return FieldElement::from_int(field.clone(), -field.minpoly().coeff(0));
        }
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[1] = BigRational::one();
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    /// `β^k` for any integer `k` (negative powers via `β^(-1)`).
    pub fn beta_pow(field: &Arc<NumberField>, k: i64) -> FieldElement {
        let mut acc = FieldElement::one(field.clone());
        if k >= 0 {
            for _ in 0..k {
                acc = acc.mul_beta();
            }
        } else {
            for _ in 0..(-k) {
                acc = acc.mul_beta_inv();
            }
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "inverse of zero");
        let elem = RatPolynomial::new(self.coords.clone());
        let mp = self.field.minpoly().to_rat();
        let (g, s, _) = elem.extended_gcd(&mp);
        assert_eq!(
            g.degree(),
            Some(0),
            "minimal polynomial must be irreducible"
        );
        let ginv = BigRational::one() / g.coeff(0);
        FieldElement::new(self.field.clone(), s.scale(&ginv).coeffs().to_vec())
    }

    pub fn div(&self, other: &FieldElement) -> FieldElement {
        self.mul(&other.inv())
    }

    /// The rational trace `Tr(x) = Σ x^(i)` over all embeddings.
    pub fn trace(&self) -> BigRational {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from(self.field.power_sums[i].clone()))
            .sum()
    }

    /// Exact sign of the element under the distinguished embedding.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        if self.is_rational() {
            return self.coords[0].cmp(&BigRational::zero());
        }
        loop {
            let iv = eval_interval(&self.coords, &self.field.root_interval());
            if iv.lo > BigRational::zero() {
                return Ordering::Greater;
            }
            if iv.hi < BigRational::zero() {
                return Ordering::Less;
            }
            let current = self.field.root_interval();
            let target = current.width() / BigRational::from(BigInt::from(16));
            self.field.refine_root_interval(&target);
        }
    }

    /// Total order consistent with the distinguished real embedding.
    pub fn compare(&self, other: &FieldElement) -> Ordering {
        self.sub(other).sign()
    }

    /// Largest integer `n ≤ x`; exact at integer boundaries.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.coords[0].floor().to_integer();
        }
        loop {
            let iv = eval_interval(&self.coords, &self.field.root_interval());
            let lo_floor = iv.lo.floor().to_integer();
            let hi_floor = iv.hi.floor().to_integer();
            if lo_floor == hi_floor && !iv.hi.is_integer() {
                return lo_floor;
            }
            let current = self.field.root_interval();
            let target = current.width() / BigRational::from(BigInt::from(16));
            self.field.refine_root_interval(&target);
        }
    }

    /// Smallest integer `n ≥ x`.
    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// Certified ball for the `which`-th embedding (1-based; see
    /// [`NumberField`] for the ordering), radius at most `eps`.
    pub fn embed(&self, which: usize, eps: &BigRational) -> Result<EmbedBall, Error> {
        if eps <= &BigRational::zero() {
            return Err(Error::OutOfRange("precision must be positive".into()));
        }
        self.field.embed_coords(&self.coords, which, eps)
    }
}

/// Reduces a coordinate vector of arbitrary length modulo the monic minimal
/// polynomial.
fn reduce_mod_minpoly(mp: &IntPolynomial, mut coords: Vec<BigRational>) -> Vec<BigRational> {
    let d = mp.degree().expect("nonzero minpoly");
    while coords.len() > d {
        let top = coords.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = coords.len() - d;
        for i in 0..d {
            let c = mp.coeff(i);
            if !c.is_zero() {
                let delta = &top * BigRational::from(c);
                coords[k + i] -= delta;
            }
        }
    }
    coords
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.minpoly() == other.field.minpoly() && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})b")?,
                _ => write!(f, "({c})b^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn golden() -> Arc<NumberField> {
        NumberField::new(
            IntPolynomial::from_ints(&[-1, -1, 1]),
            RatInterval::from_ints(1, 2),
        )
        .unwrap()
    }

    pub(crate) fn plastic() -> Arc<NumberField> {
        NumberField::new(
            IntPolynomial::from_ints(&[-1, -1, 0, 1]),
            RatInterval::from_ints(1, 2),
        )
        .unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn minimal_polynomial_relation_vanishes() {
        let f = golden();
        let beta = FieldElement::beta_of(&f);
        let lhs = beta
            .mul(&beta)
            .sub(&beta)
            .sub(&FieldElement::one(f.clone()));
        assert!(lhs.is_zero());
        assert_eq!(lhs.sign(), Ordering::Equal);
    }

    #[test]
    fn golden_beta_minus_one_equals_inverse_beta() {
        let f = golden();
        let beta = FieldElement::beta_of(&f);
        let lhs = beta.sub(&FieldElement::one(f.clone()));
        let rhs = FieldElement::one(f.clone()).mul(&beta.inv());
        assert_eq!(lhs.compare(&rhs), Ordering::Equal);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn plastic_beta_below_four_thirds() {
        // oracle: minpoly sign at 4/3 is positive and the polynomial is
        // increasing past its real root, so β < 4/3
        let f = plastic();
        assert!(f.minpoly().eval_rat(&rat(4, 3)).is_positive());
        let beta = FieldElement::beta_of(&f);
        let four_thirds = FieldElement::from_rational(f.clone(), rat(4, 3));
        assert_eq!(beta.compare(&four_thirds), Ordering::Less);
    }

    #[test]
    fn floors_match_the_worked_values() {
        let f = golden();
        let beta = FieldElement::beta_of(&f);
        assert_eq!(beta.floor(), BigInt::from(1));
        // β(β-1) = 1 exactly
        let prod = beta.mul(&beta.sub(&FieldElement::one(f.clone())));
        assert_eq!(prod.floor(), BigInt::from(1));
        assert!(prod.is_rational());

        let p = plastic();
        let beta = FieldElement::beta_of(&p);
        assert_eq!(beta.mul(&beta).floor(), BigInt::from(1));
        assert_eq!(beta.mul(&beta).ceil(), BigInt::from(2));
    }

    #[test]
    fn beta_inverse_is_exact() {
        for f in [golden(), plastic()] {
            let beta = FieldElement::beta_of(&f);
            let prod = beta.mul_beta_inv();
            assert_eq!(prod, FieldElement::one(f.clone()));
            let x = FieldElement::new(f.clone(), vec![rat(3, 2); f.degree()]);
            assert_eq!(x.mul_beta().mul_beta_inv(), x);
        }
    }

    #[test]
    fn embeddings_match_known_conjugates() {
        let eps = rat(1, 1_000_000);
        let f = golden();
        let beta = FieldElement::beta_of(&f);
        match beta.embed(2, &eps).unwrap() {
            EmbedBall::Real(b) => {
                // second root of x^2-x-1 ≈ -0.618
                assert!(b.center > rat(-619, 1000) && b.center < rat(-617, 1000));
            }
            _ => panic!("golden conjugate is real"),
        }
        let one = FieldElement::one(f.clone());
        match one.embed(2, &eps).unwrap() {
            EmbedBall::Real(b) => {
                assert_eq!(b.center, BigRational::one());
            }
            _ => panic!(),
        }

        let p = plastic();
        let beta = FieldElement::beta_of(&p);
        match beta.embed(2, &eps).unwrap() {
            EmbedBall::Complex(b) => {
                let m2 = &b.re * &b.re + &b.im * &b.im;
                // modulus ≈ 0.8689, squared ≈ 0.755
                assert!(m2 > rat(75, 100) && m2 < rat(76, 100));
            }
            _ => panic!("plastic conjugate is complex"),
        }
        assert!(beta.embed(4, &eps).is_err());
        assert!(beta.embed(0, &eps).is_err());
    }

    #[test]
    fn embeddings_are_deterministic_and_counts_add_up() {
        let eps = rat(1, 1_000_000);
        for f in [golden(), plastic()] {
            // r + 2s = d
            assert_eq!(f.real_embeddings() + 2 * f.complex_embeddings(), f.degree());
            let x = FieldElement::beta_of(&f).mul(&FieldElement::beta_of(&f));
            for which in 1..=(f.real_embeddings() + f.complex_embeddings()) {
                let a = x.embed(which, &eps).unwrap();
                let b = x.embed(which, &eps).unwrap();
                assert_eq!(a, b, "embedding {which} of {}", f.minpoly());
                assert!(a.radius() <= &eps);
            }
        }
    }

    #[test]
    fn pisot_and_unit_flags() {
        assert!(golden().is_pisot());
        assert!(golden().is_unit());
        assert!(plastic().is_pisot());
        // x^2 - 3x + 1 is self-reciprocal of degree 2: Pisot
        let f = NumberField::new(
            IntPolynomial::from_ints(&[1, -3, 1]),
            RatInterval::from_ints(2, 3),
        )
        .unwrap();
        assert!(f.is_pisot());
        assert!(f.is_unit());
        // x^2 - 2x - 2: root 1+sqrt(3) ≈ 2.73, conjugate 1-sqrt(3) ≈ -0.73: Pisot non-unit
        let f = NumberField::new(
            IntPolynomial::from_ints(&[-2, -2, 1]),
            RatInterval::from_ints(2, 3),
        )
        .unwrap();
        assert!(f.is_pisot());
        assert!(!f.is_unit());
        // x^2 - 3x + 1 has root 2.618 > 1; a non-Pisot example: x^2 - 3x - 1
        // (conjugate ≈ -0.30? check: roots (3±sqrt 13)/2 ≈ 3.30, -0.30) — Pisot.
        // x^3 - x^2 - x - 2 = (x-2)(x^2+x+1)? 8-4-2-2 = 0 yes; reducible, skip.
        // genuine non-Pisot: x^2 - 2x - 2 has conjugate −0.732 (<1) so use
        // x^2 - x - 3 instead: roots (1±sqrt 13)/2 ≈ 2.30, −1.30.
        let f = NumberField::new(
            IntPolynomial::from_ints(&[-3, -1, 1]),
            RatInterval::from_ints(2, 3),
        )
        .unwrap();
        assert!(!f.is_pisot());
    }

    #[test]
    fn contraction_bound_is_below_one() {
        for f in [golden(), plastic()] {
            let b = f.contraction_bound().unwrap();
            assert!(b < BigRational::one());
            assert!(b > BigRational::zero());
        }
    }

    #[test]
    fn trace_uses_power_sums() {
        let f = golden();
        // Tr(1) = 2, Tr(β) = 1, Tr(β²) = 3 (Lucas numbers)
        assert_eq!(FieldElement::one(f.clone()).trace(), rat(2, 1));
        assert_eq!(FieldElement::beta_of(&f).trace(), rat(1, 1));
        assert_eq!(
            FieldElement::beta_of(&f)
                .mul(&FieldElement::beta_of(&f))
                .trace(),
            rat(3, 1)
        );
    }

    #[test]
    fn reducible_polynomial_is_rejected() {
        let err = NumberField::new(
            IntPolynomial::from_ints(&[-1, 0, 0, 0, -1, 1]),
            RatInterval::from_ints(1, 2),
        );
        assert!(err.is_err());
        // but from_poly_root extracts the right factor
        let f = NumberField::from_poly_root(
            &IntPolynomial::from_ints(&[-1, 0, 0, 0, -1, 1]),
            &RatInterval::from_ints(1, 2),
        )
        .unwrap();
        assert_eq!(f.minpoly(), &IntPolynomial::from_ints(&[-1, -1, 0, 1]));
    }

    #[test]
    fn roots_at_or_below_one_are_rejected() {
        // x - 1 and x + 2 have no root > 1
        let err = NumberField::new(
            IntPolynomial::from_ints(&[-1, 1]),
            RatInterval::from_ints(0, 2),
        );
        assert!(matches!(err, Err(Error::BaseNotGreaterThanOne)));
        let err = NumberField::new(
            IntPolynomial::from_ints(&[2, 1]),
            RatInterval::from_ints(-3, 0),
        );
        assert!(matches!(err, Err(Error::BaseNotGreaterThanOne)));
        // golden conjugate interval picks the wrong root
        let err = NumberField::new(
            IntPolynomial::from_ints(&[-1, -1, 1]),
            RatInterval::from_ints(-1, 0),
        );
        assert!(matches!(err, Err(Error::BaseNotGreaterThanOne)));
    }

    #[test]
    fn fields_and_elements_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<NumberField>();
        assert_send_sync::<FieldElement>();
    }

    #[test]
    fn degree_one_field_works() {
        let f = NumberField::new(
            IntPolynomial::from_ints(&[-3, 1]),
            RatInterval::from_ints(2, 4),
        )
        .unwrap();
        assert_eq!(f.degree(), 1);
        let beta = FieldElement::beta_of(&f);
        assert_eq!(beta.floor(), BigInt::from(3));
        assert!(f.is_pisot());
        assert_eq!(f.max_digit(), 2);
    }
}
