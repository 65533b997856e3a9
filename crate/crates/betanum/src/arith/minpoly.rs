//! Minimal polynomial extraction.
//!
//! Given a monic integer polynomial and an interval isolating one of its real
//! roots, the minimal polynomial of that root is found by enumerating
//! conjugate-closed subsets of the certified root set in order of increasing
//! degree, rounding the candidate factor's coefficients to integers, and
//! verifying by exact polynomial division. Rounding ambiguity triggers a
//! refinement of every root ball and a retry, so the result is certified.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::embed::{iv_add, iv_mul, CertifiedRoots, ComplexRoot};
use super::poly::IntPolynomial;
use super::roots::{self, RatInterval};
use crate::Error;

enum Atom {
    Real(RatInterval),
    Pair(ComplexRoot),
}

impl Atom {
    fn degree(&self) -> usize {
        match self {
            Atom::Real(_) => 1,
            Atom::Pair(_) => 2,
        }
    }

    /// The factor `x - ρ` or `x² - 2Re(z)x + |z|²` with interval coefficients
    /// guaranteed to contain the true values.
    fn factor(&self) -> Vec<RatInterval> {
        match self {
            Atom::Real(iv) => vec![
                RatInterval::new(-iv.hi.clone(), -iv.lo.clone()),
                RatInterval::point(BigRational::one()),
            ],
            Atom::Pair(z) => {
                let re_lo = &z.center.re - &z.radius;
                let re_hi = &z.center.re + &z.radius;
                let m_lo = z.modulus_sqr_lower().max(BigRational::zero());
                let m_hi = z.modulus_sqr_upper();
                vec![
                    RatInterval::new(m_lo, m_hi),
                    RatInterval::new(
                        -BigRational::from(BigInt::from(2)) * &re_hi,
                        -BigRational::from(BigInt::from(2)) * &re_lo,
                    ),
                    RatInterval::point(BigRational::one()),
                ]
            }
        }
    }
}

fn mul_iv_poly(a: &[RatInterval], b: &[RatInterval]) -> Vec<RatInterval> {
    let zero = RatInterval::point(BigRational::zero());
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = iv_add(&out[i + j], &iv_mul(x, y));
        }
    }
    out
}

enum Rounding {
    Unique(IntPolynomial),
    NoInteger,
    Ambiguous,
}

fn round_coefficients(ivs: &[RatInterval]) -> Rounding {
    let mut coeffs = Vec::with_capacity(ivs.len());
    for iv in ivs {
        let lo = iv.lo.ceil().to_integer();
        let hi = iv.hi.floor().to_integer();
        if lo > hi {
            return Rounding::NoInteger;
        }
        if lo != hi {
            return Rounding::Ambiguous;
        }
        coeffs.push(lo);
    }
    Rounding::Unique(IntPolynomial::new(coeffs))
}

/// Returns the monic irreducible integer factor of `p` vanishing at the real
/// root isolated by `root_interval`.
pub fn minimal_polynomial(
    p: &IntPolynomial,
    root_interval: &RatInterval,
) -> Result<IntPolynomial, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let sf = p.squarefree_part();
    if roots::count_roots_in(&sf, root_interval)? != 1 {
        return Err(Error::NoRootInInterval);
    }
    let mut certified = CertifiedRoots::of(&sf)?;
    // tighten the real roots a bit before the first attempt
    let mut eps = BigRational::new(BigInt::one(), BigInt::one() << 64);
    for _round in 0..8 {
        certified.refine_complex(&eps);
        let reals: Vec<RatInterval> = certified
            .real
            .iter()
            .map(|iv| roots::refine_root(&sf, iv, &eps))
            .collect();
        // locate the distinguished root among the certified real roots
        let mut distinguished = None;
        for (i, iv) in reals.iter().enumerate() {
            if overlap_has_root(&sf, iv, root_interval)? {
                distinguished = Some(i);
                break;
            }
        }
        let distinguished = distinguished.ok_or(Error::NoRootInInterval)?;

        let mut others: Vec<Atom> = Vec::new();
        for (i, iv) in reals.iter().enumerate() {
            if i != distinguished {
                others.push(Atom::Real(iv.clone()));
            }
        }
        for z in &certified.complex {
            others.push(Atom::Pair(z.clone()));
        }
        let dist_atom = Atom::Real(reals[distinguished].clone());

        // subsets of the remaining atoms, by ascending total degree
        let m = others.len();
        let mut subsets: Vec<(usize, u32)> = (0..(1u32 << m))
            .map(|mask| {
                let deg: usize = (0..m)
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| others[k].degree())
                    .sum();
                (1 + deg, mask)
            })
            .collect();
        subsets.sort();

        let mut ambiguous = false;
        for (_deg, mask) in subsets {
            let mut product = dist_atom.factor();
            for (k, atom) in others.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    product = mul_iv_poly(&product, &atom.factor());
                }
            }
            match round_coefficients(&product) {
                Rounding::NoInteger => continue,
                Rounding::Ambiguous => {
                    ambiguous = true;
                    break;
                }
                Rounding::Unique(candidate) => {
                    if candidate.is_monic() && sf.exact_div_monic(&candidate).is_some() {
                        return Ok(candidate);
                    }
                }
            }
        }
        if !ambiguous {
            // every subset was decided and none verified: cannot happen, the
            // full product is sf itself
            return Err(Error::Internal(
                "minimal polynomial search exhausted without a verified factor".into(),
            ));
        }
        eps /= BigRational::from(BigInt::one() << 64);
    }
    Err(Error::Internal(
        "minimal polynomial rounding stayed ambiguous after refinement".into(),
    ))
}

fn overlap_has_root(p: &IntPolynomial, a: &RatInterval, b: &RatInterval) -> Result<bool, Error> {
    let lo = a.lo.clone().max(b.lo.clone());
    let hi = a.hi.clone().min(b.hi.clone());
    if lo > hi {
        return Ok(false);
    }
    Ok(roots::count_roots_in(p, &RatInterval::new(lo, hi))? == 1)
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
    fn plastic_factor_extracted_from_degree_five() {
        // x^5 - x^4 - 1 = (x^3 - x - 1)(x^2 - x + 1), root ≈ 1.3247
        let big = p(&[-1, 0, 0, 0, -1, 1]);
        let iv = RatInterval::new(rat(13, 10), rat(14, 10));
        let mp = minimal_polynomial(&big, &iv).unwrap();
        assert_eq!(mp, p(&[-1, -1, 0, 1]));
        // cofactor by exact division
        let cofactor = big.exact_div_monic(&mp).unwrap();
        assert_eq!(cofactor, p(&[1, -1, 1]));
    }

    #[test]
    fn irreducible_input_returns_itself() {
        let golden = p(&[-1, -1, 1]);
        let iv = RatInterval::from_ints(1, 2);
        assert_eq!(minimal_polynomial(&golden, &iv).unwrap(), golden);
    }

    #[test]
    fn rational_root_gives_linear_factor() {
        let q = p(&[2, -3, 1]); // (x-1)(x-2)
        let iv = RatInterval::new(rat(3, 2), rat(5, 2));
        assert_eq!(minimal_polynomial(&q, &iv).unwrap(), p(&[-2, 1]));
    }

    #[test]
    fn interval_must_isolate_a_root() {
        let q = p(&[-1, -1, 1]);
        assert!(matches!(
            minimal_polynomial(&q, &RatInterval::from_ints(3, 4)),
            Err(Error::NoRootInInterval)
        ));
        assert!(matches!(
            minimal_polynomial(&q, &RatInterval::from_ints(-2, 2)),
            Err(Error::NoRootInInterval)
        ));
        assert!(matches!(
            minimal_polynomial(&IntPolynomial::zero(), &RatInterval::from_ints(0, 1)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn repeated_factors_are_handled() {
        // (x^2 - x - 1)^2, golden root
        let q = p(&[-1, -1, 1]).mul(&p(&[-1, -1, 1]));
        let iv = RatInterval::from_ints(1, 2);
        assert_eq!(minimal_polynomial(&q, &iv).unwrap(), p(&[-1, -1, 1]));
    }

    #[test]
    fn mixed_product_with_many_factors() {
        // (x-2)(x^2-x-1)(x^3-x-1), extract the golden factor
        let q = p(&[-2, 1]).mul(&p(&[-1, -1, 1])).mul(&p(&[-1, -1, 0, 1]));
        let iv = RatInterval::new(rat(3, 2), rat(17, 10));
        assert_eq!(minimal_polynomial(&q, &iv).unwrap(), p(&[-1, -1, 1]));
        // and the plastic factor
        let iv = RatInterval::new(rat(13, 10), rat(27, 20));
        assert_eq!(minimal_polynomial(&q, &iv).unwrap(), p(&[-1, -1, 0, 1]));
    }
}
