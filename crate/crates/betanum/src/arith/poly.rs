//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, constant term first.
//!
//! The representation is canonical: the coefficient vector is empty for the
//! zero polynomial and otherwise ends with a nonzero leading coefficient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A univariate polynomial over the integers, `coeffs[i]` is the coefficient
/// of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from constant-first coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Divides by a monic divisor, returning `(quotient, remainder)`.
    /// All arithmetic stays in the integers because the divisor is monic.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().take(d).enumerate() {
                rem[i - d + j] -= &q * b;
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// Exact division by a monic divisor; `None` when the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.div_rem_monic(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// The reversed-coefficient polynomial `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::new(coeffs)
    }

    /// True when `p = ± x^deg p(1/x)`, i.e. the root set is closed under
    /// `z ↦ 1/z`.
    pub fn is_self_reciprocal(&self) -> bool {
        let r = self.reciprocal();
        *self == r || *self == r.neg()
    }

    /// Largest absolute coefficient ratio bound: every real root lies in
    /// `(-M, M)` with `M = 1 + max |c_i| / |c_lead|`.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().expect("nonzero polynomial").clone();
        let max_abs = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::one() + BigRational::new(max_abs, lead.abs())
    }

    /// Rational coefficients, for Sturm chains and gcd computations.
    pub fn to_rat(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Squarefree part `p / gcd(p, p')`, primitive with positive leading
    /// coefficient; monic input yields monic output.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let g = self.to_rat().gcd(&self.derivative().to_rat());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let q = self.to_rat().div_exact(&g);
        q.clear_denominators_primitive()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses integer-coefficient expressions in one variable, e.g.
    /// `x^3-x-1` or `2x^2 + 3`.
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_polynomial(s)
    }
}

fn parse_polynomial(s: &str) -> Result<IntPolynomial, Error> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut coeffs: Vec<BigInt> = Vec::new();
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty polynomial"));
    }

    let mut var: Option<u8> = None;
    while pos < bytes.len() {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        // sign
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !coeffs.is_empty() {
            return Err(err(pos, "expected '+' or '-' between terms"));
        }
        // integer coefficient (optional when a variable follows)
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff = if pos > digits_start {
            BigInt::parse_bytes(&bytes[digits_start..pos], 10)
                .ok_or_else(|| err(digits_start, "invalid integer"))?
        } else {
            BigInt::one()
        };
        if negative {
            coeff = -coeff;
        }
        skip_ws(&mut pos);
        // optional '*'
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            skip_ws(&mut pos);
        }
        // variable and exponent
        let mut exp = 0usize;
        if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
            match var {
                Some(v) if v != bytes[pos] => {
                    return Err(err(pos, "more than one variable"));
                }
                _ => var = Some(bytes[pos]),
            }
            pos += 1;
            exp = 1;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                skip_ws(&mut pos);
                let estart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == estart {
                    return Err(err(estart, "expected exponent"));
                }
                exp = s[estart..pos]
                    .parse::<usize>()
                    .map_err(|_| err(estart, "exponent too large"))?;
            }
        } else if pos == digits_start {
            return Err(err(pos, "expected coefficient or variable"));
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += coeff;
    }
    let p = IntPolynomial::new(coeffs);
    if p.is_zero() {
        return Err(err(0, "polynomial is zero"));
    }
    Ok(p)
}

/// A univariate polynomial over the rationals, used internally for Sturm
/// chains and gcds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        RatPolynomial::new(out)
    }

    pub fn mul(&self, other: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || other.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }

    pub fn scale(&self, k: &BigRational) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn div_rem(&self, divisor: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let d = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (RatPolynomial::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigRational::zero()) / lead;
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().take(d).enumerate() {
                rem[i - d + j] -= &q * b;
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        (RatPolynomial::new(quot), RatPolynomial::new(rem))
    }

    pub fn div_exact(&self, divisor: &RatPolynomial) -> RatPolynomial {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPolynomial) -> RatPolynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeffs.last().unwrap().clone();
        a.scale(&(BigRational::one() / lead))
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s·self + t·other`, `g` monic.
    pub fn extended_gcd(
        &self,
        other: &RatPolynomial,
    ) -> (RatPolynomial, RatPolynomial, RatPolynomial) {
        let one = RatPolynomial::new(vec![BigRational::one()]);
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = one.clone();
        let mut s1 = RatPolynomial::zero();
        let mut t0 = RatPolynomial::zero();
        let mut t1 = one;
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.coeffs.last().unwrap().clone();
        let inv = BigRational::one() / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Clears denominators and divides by the content, yielding a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn clear_denominators_primitive(&self) -> IntPolynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() {
            return IntPolynomial::zero();
        }
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        content *= sign;
        IntPolynomial::new(ints.into_iter().map(|c| c / &content).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(coeffs)
    }

    #[test]
    fn canonical_form_trims_leading_zeros() {
        let q = IntPolynomial::new(vec![BigInt::from(1), BigInt::zero(), BigInt::zero()]);
        assert_eq!(q.degree(), Some(0));
        assert!(IntPolynomial::new(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn monic_division_round_trips() {
        // (x^3 - x - 1)(x^2 - x + 1) = x^5 - x^4 - 1
        let a = p(&[-1, -1, 0, 1]);
        let b = p(&[1, -1, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[-1, 0, 0, 0, -1, 1]));
        assert_eq!(prod.exact_div_monic(&a), Some(b.clone()));
        assert_eq!(prod.exact_div_monic(&b), Some(a.clone()));
        assert_eq!(prod.add(&IntPolynomial::one()).exact_div_monic(&a), None);
    }

    #[test]
    fn parse_and_display() {
        let q: IntPolynomial = "x^3-x-1".parse().unwrap();
        assert_eq!(q, p(&[-1, -1, 0, 1]));
        assert_eq!(q.to_string(), "x^3-x-1");
        let q: IntPolynomial = "x^2 - 3x + 2".parse().unwrap();
        assert_eq!(q, p(&[2, -3, 1]));
        let q: IntPolynomial = "2*y^2+y".parse().unwrap();
        assert_eq!(q, p(&[0, 1, 2]));
        assert!("".parse::<IntPolynomial>().is_err());
        assert!("x + y".parse::<IntPolynomial>().is_err());
        assert!("x^2 2".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn self_reciprocal_detection() {
        assert!(p(&[1, -3, 1]).is_self_reciprocal());
        assert!(!p(&[-1, -1, 1]).is_self_reciprocal());
        assert!(!p(&[-1, -1, 0, 1]).is_self_reciprocal());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let double_root = p(&[-2, 1]).mul(&p(&[-2, 1])).mul(&p(&[-1, -1, 1]));
        let sf = double_root.squarefree_part();
        assert_eq!(sf, p(&[-2, 1]).mul(&p(&[-1, -1, 1])));
        // already squarefree input is returned unchanged
        assert_eq!(p(&[-1, -1, 1]).squarefree_part(), p(&[-1, -1, 1]));
    }

    #[test]
    fn rational_gcd_and_bezout() {
        let a = p(&[-1, -1, 0, 1]).to_rat();
        let b = p(&[1, -1, 1]).to_rat();
        let prod = a.mul(&b);
        let g = prod.gcd(&a);
        assert_eq!(g.degree(), Some(3));
        let (g2, s, t) = a.extended_gcd(&b);
        assert_eq!(g2.degree(), Some(0));
        let combo = s.mul(&a).sub(&t.neg().mul(&b));
        assert_eq!(combo, g2);
    }
}
