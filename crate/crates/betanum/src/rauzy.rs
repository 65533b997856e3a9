//! The archimedean central-tile construction.
//!
//! For a Pisot unit base of degree `d ≥ 2`, the contracting embedding sends
//! `x ∈ ℚ(β)` to the vector of its non-distinguished conjugate values: one
//! coordinate per other real embedding, and a `(Re, Im)` pair per complex
//! pair, giving `d - 1` real coordinates. Images of admissible digit
//! strings `ε_0 … ε_(L-1)` (evaluated as `Σ ε_j β^j`) converge to the
//! central tile as `L` grows; the tail beyond depth `L` is bounded by a
//! geometric series in a certified contraction ratio, so every emitted
//! point carries a radius that provably contains its infinite-depth limit.
//!
//! Non-unit bases are refused: the tile then has a nontrivial inverse-limit
//! component which this archimedean picture would silently misrepresent.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::embed::{eval_complex_ball, eval_interval, round_to_bits, ComplexRoot};
use crate::arith::{FieldElement, NumberField, RatInterval};
use crate::dynamics::VSet;
use crate::numeration::{greedy_digits_u128, GSequence};
use crate::spectral::integer_row_basis;
use crate::words::PeriodicWord;
use crate::Error;

/// A point of the contracting space with a certified error radius: the true
/// value (including the infinite tail when the point comes from a truncated
/// series) lies within `error_radius` of `coords` in the Euclidean norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingPoint {
    pub coords: Vec<BigRational>,
    pub error_radius: BigRational,
}

/// A truncated central-tile point cloud.
#[derive(Clone, Debug)]
pub struct PointCloud {
    pub points: Vec<EmbeddingPoint>,
    pub depth: usize,
    /// Certified bound on the discarded tail `Σ_(j≥L) (⌈β⌉-1)·q^j`.
    pub truncation_radius: BigRational,
    /// Images of an integer basis of the orbit difference module.
    pub lattice: Vec<Vec<BigRational>>,
    /// Dimension of the ambient space (`deg(β) - 1`).
    pub dimension: usize,
}

/// Refined conjugate data shared across many evaluations.
struct ConjugateFrame {
    reals: Vec<RatInterval>,
    complexes: Vec<ComplexRoot>,
}

impl ConjugateFrame {
    fn new(field: &Arc<NumberField>, eps: &BigRational) -> Result<Self, Error> {
        if field.degree() < 2 {
            return Err(Error::DegreeTooSmall);
        }
        let (reals, complexes) = field.conjugate_balls(eps);
        Ok(ConjugateFrame { reals, complexes })
    }

    fn dimension(&self) -> usize {
        self.reals.len() + 2 * self.complexes.len()
    }

    /// Evaluates the power-basis coordinates at every non-distinguished
    /// conjugate, rounding centers to 40 fractional bits.
    fn eval(&self, coords: &[BigRational]) -> EmbeddingPoint {
        let round_slack = BigRational::new(BigInt::one(), BigInt::one() << 39);
        let mut out = Vec::with_capacity(self.dimension());
        let mut radius = round_slack;
        for iv in &self.reals {
            let ball = eval_interval(coords, iv);
            out.push(round_to_bits(&ball.midpoint(), 40));
            radius += ball.width() / BigRational::from(BigInt::from(2));
        }
        for z in &self.complexes {
            let ball = eval_complex_ball(coords, z);
            out.push(round_to_bits(&ball.re, 40));
            out.push(round_to_bits(&ball.im, 40));
            radius += ball.radius;
        }
        EmbeddingPoint {
            coords: out,
            error_radius: radius,
        }
    }
}

fn working_eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits.clamp(16, 4096))
}

/// Evaluates the contracting embedding of a single element to radius `eps`.
pub fn delta_prime(x: &FieldElement, eps: &BigRational) -> Result<EmbeddingPoint, Error> {
    let field = x.field().clone();
    if eps <= &BigRational::zero() {
        return Err(Error::OutOfRange("precision must be positive".into()));
    }
    let mut conj_eps = working_eps(64).min(eps.clone());
    loop {
        let frame = ConjugateFrame::new(&field, &conj_eps)?;
        let point = frame.eval(x.coords());
        if point.error_radius <= *eps {
            return Ok(point);
        }
        conj_eps /= BigRational::from(BigInt::from(1u64 << 16));
    }
}

/// Generates the depth-`L` central tile point cloud at the default numeric
/// precision (64 fractional bits for the conjugate approximations).
///
/// Admissible digit strings are exactly the greedy digit vectors of the
/// integers `0 ≤ n < G_L`, so the cloud enumerates integers in increasing
/// order (equivalently, digit strings in most-significant-first
/// lexicographic order) up to `max_points`. Generation is deterministic.
pub fn rauzy_cloud(
    field: &Arc<NumberField>,
    word: &PeriodicWord,
    vset: &VSet,
    depth: usize,
    max_points: usize,
) -> Result<PointCloud, Error> {
    rauzy_cloud_with_precision(field, word, vset, depth, max_points, 64)
}

/// [`rauzy_cloud`] with an explicit conjugate precision in fractional bits.
pub fn rauzy_cloud_with_precision(
    field: &Arc<NumberField>,
    word: &PeriodicWord,
    vset: &VSet,
    depth: usize,
    max_points: usize,
    numeric_bits: u32,
) -> Result<PointCloud, Error> {
    if field.degree() < 2 {
        return Err(Error::DegreeTooSmall);
    }
    if !field.is_pisot() {
        return Err(Error::NotPisot);
    }
    if !field.is_unit() {
        return Err(Error::NotUnit);
    }
    if depth == 0 {
        return Err(Error::OutOfRange("depth must be at least 1".into()));
    }
    let q = field.contraction_bound()?;
    // tail bound: (⌈β⌉ - 1) q^L / (1 - q)
    let mut q_pow = BigRational::one();
    for _ in 0..depth {
        q_pow *= &q;
    }
    let max_digit = BigRational::from(BigInt::from(field.max_digit()));
    let truncation_radius = &max_digit * &q_pow / (BigRational::one() - &q);

    let frame = ConjugateFrame::new(field, &working_eps(numeric_bits))?;
    let g = GSequence::new(word.clone());
    let total = g.value(depth);
    let count = if total > BigInt::from(max_points as u64) {
        max_points
    } else {
        total.to_usize().unwrap_or(max_points)
    };

    // power-basis coordinates of β^j for j < depth
    let mut beta_pows: Vec<Vec<BigRational>> = Vec::with_capacity(depth);
    let mut acc = FieldElement::one(field.clone());
    for _ in 0..depth {
        beta_pows.push(acc.coords().to_vec());
        acc = acc.mul_beta();
    }

    let d = field.degree();
    let scale = g.prefix_u128(depth + 1)?;
    let mut points = Vec::with_capacity(count);
    for n in 0..count {
        let digits = greedy_digits_u128(n as u128, &scale);
        let mut coords = vec![BigRational::zero(); d];
        for (j, &dj) in digits.iter().enumerate() {
            if dj != 0 {
                let factor = BigRational::from(BigInt::from(dj));
                for (c, p) in coords.iter_mut().zip(&beta_pows[j]) {
                    *c += p * &factor;
                }
            }
        }
        let mut point = frame.eval(&coords);
        point.error_radius += &truncation_radius;
        points.push(point);
    }

    // lattice: contracting images of an integer basis of the orbit
    // difference module
    let mut rows = Vec::new();
    let elements = vset.elements();
    for v in elements.iter().skip(1) {
        let diff = v.sub(&elements[0]);
        let coords = diff
            .integer_coords()
            .ok_or_else(|| Error::Internal("orbit element has non-integer coordinates".into()))?;
        rows.push(coords);
    }
    let basis = integer_row_basis(rows);
    let lattice = basis
        .iter()
        .map(|row| {
            let coords: Vec<BigRational> =
                row.iter().map(|c| BigRational::from(c.clone())).collect();
            frame.eval(&coords).coords
        })
        .collect();

    Ok(PointCloud {
        points,
        depth,
        truncation_radius,
        lattice,
        dimension: frame.dimension(),
    })
}

/// Overlap / coverage metrics for the lattice-translate rasterization.
#[derive(Clone, Debug)]
pub struct OverlapReport {
    /// Cells hit by at least two distinct translates / cells hit at all.
    pub overlap_fraction: f64,
    /// Hit cells inside the base cloud's bounding box / box cell count.
    pub coverage_fraction: f64,
    pub cells_hit: u64,
    pub cells_multiple: u64,
    pub box_cells: u64,
    pub translates: u64,
}

/// Rasterizes the cloud and its translates by integer combinations (each
/// coefficient in `[-range, range]`) of the lattice generators onto a grid
/// of the given cell size, and reports overlap and coverage fractions.
pub fn tiling_overlap_estimate(
    cloud: &PointCloud,
    translate_range: i64,
    cell: &BigRational,
) -> Result<OverlapReport, Error> {
    if cloud.points.is_empty() {
        return Err(Error::EmptyCloud);
    }
    if cell <= &BigRational::zero() {
        return Err(Error::OutOfRange("grid cell must be positive".into()));
    }
    if translate_range < 0 {
        return Err(Error::OutOfRange("translate range must be >= 0".into()));
    }
    let dim = cloud.dimension;
    let gens = &cloud.lattice;

    // enumerate translate offset vectors
    let mut offsets: Vec<Vec<BigRational>> = Vec::new();
    let combos = (2 * translate_range + 1).pow(gens.len() as u32);
    for combo in 0..combos {
        let mut rest = combo;
        let mut offset = vec![BigRational::zero(); dim];
        for gen in gens {
            let coeff = rest % (2 * translate_range + 1) - translate_range;
            rest /= 2 * translate_range + 1;
            if coeff != 0 {
                let c = BigRational::from(BigInt::from(coeff));
                for (o, g) in offset.iter_mut().zip(gen) {
                    *o += g * &c;
                }
            }
        }
        offsets.push(offset);
    }

    // Exact cell indices. Cloud coordinates are dyadic by construction, so a
    // shared fixed-point representation usually applies and the rasterization
    // runs on machine integers; otherwise fall back to rational arithmetic.
    const SCALE_BITS: u32 = 48;
    let to_scaled = |q: &BigRational| -> Option<i128> {
        let scaled = q * BigRational::from(BigInt::one() << SCALE_BITS);
        if scaled.is_integer() {
            scaled.to_integer().to_i128()
        } else {
            None
        }
    };
    let scale_all = |rows: &[Vec<BigRational>]| -> Option<Vec<Vec<i128>>> {
        rows.iter()
            .map(|row| row.iter().map(to_scaled).collect())
            .collect()
    };
    let point_coords: Vec<Vec<BigRational>> =
        cloud.points.iter().map(|p| p.coords.clone()).collect();
    let fast = (|| -> Option<(Vec<Vec<i128>>, Vec<Vec<i128>>, i128, i128)> {
        let points = scale_all(&point_coords)?;
        let offs = scale_all(&offsets)?;
        let cell_num = cell.numer().to_i128()?;
        let cell_den = cell.denom().to_i128()?;
        // floor(v / cell) with v = s / 2^bits is div_floor(s d, n 2^bits)
        let divisor = cell_num.checked_mul(1i128 << SCALE_BITS)?;
        // (point + offset) * cell_den must stay well inside i128
        let limit = i128::MAX / cell_den.max(1) / 4;
        for row in points.iter().chain(offs.iter()) {
            for &s in row {
                if s.abs() > limit {
                    return None;
                }
            }
        }
        Some((points, offs, cell_den, divisor))
    })();

    let mut raster: HashMap<Vec<i64>, (u64, usize)> = HashMap::new();
    let mut mins = vec![i64::MAX; dim];
    let mut maxs = vec![i64::MIN; dim];
    match fast {
        Some((points, offs, cell_den, divisor)) => {
            let index_fast = |v: i128| -> i64 {
                i64::try_from((v * cell_den).div_euclid(divisor)).expect("grid index fits i64")
            };
            for (id, offset) in offs.iter().enumerate() {
                for p in &points {
                    let idx: Vec<i64> = (0..dim)
                        .map(|axis| index_fast(p[axis] + offset[axis]))
                        .collect();
                    let entry = raster.entry(idx).or_insert((0, usize::MAX));
                    if entry.1 != id {
                        entry.0 += 1;
                        entry.1 = id;
                    }
                }
            }
            for p in &points {
                for axis in 0..dim {
                    let idx = index_fast(p[axis]);
                    mins[axis] = mins[axis].min(idx);
                    maxs[axis] = maxs[axis].max(idx);
                }
            }
        }
        None => {
            let index_of = |coords: &[BigRational], offset: Option<&[BigRational]>| -> Vec<i64> {
                (0..dim)
                    .map(|axis| {
                        let mut v = coords[axis].clone();
                        if let Some(off) = offset {
                            v += &off[axis];
                        }
                        (v / cell)
                            .floor()
                            .to_integer()
                            .to_i64()
                            .expect("grid index fits i64")
                    })
                    .collect()
            };
            for (id, offset) in offsets.iter().enumerate() {
                for point in &cloud.points {
                    let idx = index_of(&point.coords, Some(offset));
                    let entry = raster.entry(idx).or_insert((0, usize::MAX));
                    if entry.1 != id {
                        entry.0 += 1;
                        entry.1 = id;
                    }
                }
            }
            for point in &cloud.points {
                let idx = index_of(&point.coords, None);
                for axis in 0..dim {
                    mins[axis] = mins[axis].min(idx[axis]);
                    maxs[axis] = maxs[axis].max(idx[axis]);
                }
            }
        }
    }
    let box_cells: u64 = (0..dim)
        .map(|axis| (maxs[axis] - mins[axis] + 1) as u64)
        .product();
    let covered = raster
        .keys()
        .filter(|idx| (0..dim).all(|axis| idx[axis] >= mins[axis] && idx[axis] <= maxs[axis]))
        .count() as u64;

    let cells_hit = raster.len() as u64;
    let cells_multiple = raster.values().filter(|(count, _)| *count >= 2).count() as u64;
    Ok(OverlapReport {
        overlap_fraction: cells_multiple as f64 / cells_hit as f64,
        coverage_fraction: covered as f64 / box_cells as f64,
        cells_hit,
        cells_multiple,
        box_cells,
        translates: offsets.len() as u64,
    })
}

/// CSV serialization: one point per row, coordinates in fixed column order,
/// error radius last.
pub fn cloud_to_csv(cloud: &PointCloud) -> String {
    let mut out = String::new();
    let headers: Vec<String> = (1..=cloud.dimension)
        .map(|i| format!("c{i}"))
        .chain(std::iter::once("error_radius".to_string()))
        .collect();
    out.push_str(&headers.join(","));
    out.push('\n');
    for p in &cloud.points {
        let mut fields: Vec<String> = p
            .coords
            .iter()
            .map(|c| format!("{}", c.to_f64().unwrap_or(f64::NAN)))
            .collect();
        fields.push(format!("{}", p.error_radius.to_f64().unwrap_or(f64::NAN)));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// JSON serialization of the cloud with its provenance fields.
pub fn cloud_to_json(cloud: &PointCloud) -> serde_json::Value {
    serde_json::json!({
        "depth": cloud.depth,
        "dimension": cloud.dimension,
        "point_count": cloud.points.len(),
        "truncation_radius": cloud.truncation_radius.to_f64(),
        "lattice": cloud
            .lattice
            .iter()
            .map(|g| g.iter().map(|c| c.to_f64()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "points": cloud
            .points
            .iter()
            .map(|p| {
                let mut row: Vec<Option<f64>> =
                    p.coords.iter().map(|c| c.to_f64()).collect();
                row.push(p.error_radius.to_f64());
                row
            })
            .collect::<Vec<_>>(),
    })
}

/// Plain portable graymap (P2) rasterization of the cloud itself: cell value
/// 1 where a point lands, 0 elsewhere. One- and two-dimensional clouds only.
pub fn cloud_to_ppm(cloud: &PointCloud, cell: &BigRational) -> Result<String, Error> {
    if cloud.points.is_empty() {
        return Err(Error::EmptyCloud);
    }
    if cloud.dimension > 2 {
        return Err(Error::OutOfRange(
            "pixmap output supports dimension 1 or 2 only".into(),
        ));
    }
    let index = |p: &EmbeddingPoint, axis: usize| -> i64 {
        (p.coords[axis].clone() / cell)
            .floor()
            .to_integer()
            .to_i64()
            .expect("grid index fits i64")
    };
    let xs: Vec<i64> = cloud.points.iter().map(|p| index(p, 0)).collect();
    let ys: Vec<i64> = if cloud.dimension == 2 {
        cloud.points.iter().map(|p| index(p, 1)).collect()
    } else {
        vec![0; cloud.points.len()]
    };
    let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let width = (x1 - x0 + 1) as usize;
    let height = (y1 - y0 + 1) as usize;
    if width.saturating_mul(height) > 16_000_000 {
        return Err(Error::OutOfRange(format!(
            "pixmap would have {width} x {height} cells; use a coarser cell size"
        )));
    }
    let mut grid = vec![vec![0u8; width]; height];
    for (x, y) in xs.iter().zip(&ys) {
        grid[(y - y0) as usize][(x - x0) as usize] = 1;
    }
    let mut out = format!("P2\n{width} {height}\n1\n");
    for row in grid.iter().rev() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPolynomial;
    use crate::dynamics::{quasi_greedy_expansion, ExpansionOutcome};
    use num_traits::Signed;

    fn setup(coeffs: &[i64], lo: i64, hi: i64) -> (Arc<NumberField>, PeriodicWord, VSet) {
        let f = NumberField::new(
            IntPolynomial::from_ints(coeffs),
            RatInterval::from_ints(lo, hi),
        )
        .unwrap();
        match quasi_greedy_expansion(&f, 512).unwrap() {
            ExpansionOutcome::Parry { word, vset } => (f, word, vset),
            _ => panic!("expected Parry base"),
        }
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn delta_prime_of_rationals_is_constant() {
        let (f, _, _) = setup(&[-1, -1, 1], 1, 2);
        let one = FieldElement::one(f.clone());
        let p = delta_prime(&one, &rat(1, 1 << 20)).unwrap();
        assert_eq!(p.coords.len(), 1);
        assert!((p.coords[0].clone() - BigRational::one()).abs() <= p.error_radius);
    }

    #[test]
    fn delta_prime_golden_beta_is_the_conjugate() {
        let (f, _, _) = setup(&[-1, -1, 1], 1, 2);
        let beta = FieldElement::beta_of(&f);
        let p = delta_prime(&beta, &rat(1, 1 << 20)).unwrap();
        // conjugate ≈ -0.618
        assert!(p.coords[0] > rat(-619, 1000) && p.coords[0] < rat(-617, 1000));
    }

    #[test]
    fn delta_prime_plastic_beta_is_complex() {
        let (f, _, _) = setup(&[-1, -1, 0, 1], 1, 2);
        let beta = FieldElement::beta_of(&f);
        let p = delta_prime(&beta, &rat(1, 1 << 20)).unwrap();
        assert_eq!(p.coords.len(), 2);
        let m2 = &p.coords[0] * &p.coords[0] + &p.coords[1] * &p.coords[1];
        // modulus ≈ 0.8689 (1/sqrt β), squared ≈ 0.7549
        assert!(m2 > rat(75, 100) && m2 < rat(76, 100));
    }

    #[test]
    fn delta_prime_rejects_degree_one() {
        let f = NumberField::new(
            IntPolynomial::from_ints(&[-3, 1]),
            RatInterval::from_ints(2, 4),
        )
        .unwrap();
        let one = FieldElement::one(f.clone());
        assert!(matches!(
            delta_prime(&one, &rat(1, 100)),
            Err(Error::DegreeTooSmall)
        ));
    }

    #[test]
    fn delta_prime_is_additive_within_error() {
        let (f, _, _) = setup(&[-1, -1, 0, 1], 1, 2);
        let eps = rat(1, 1 << 30);
        let x = FieldElement::beta_of(&f);
        let y = x.mul(&x).sub(&FieldElement::one(f.clone()));
        let px = delta_prime(&x, &eps).unwrap();
        let py = delta_prime(&y, &eps).unwrap();
        let psum = delta_prime(&x.add(&y), &eps).unwrap();
        for i in 0..2 {
            let diff = (&px.coords[i] + &py.coords[i] - &psum.coords[i]).abs();
            let slack = &px.error_radius + &py.error_radius + &psum.error_radius;
            assert!(diff <= slack);
        }
    }

    #[test]
    fn golden_cloud_stays_within_the_certified_radius() {
        let (f, word, vset) = setup(&[-1, -1, 1], 1, 2);
        let cloud = rauzy_cloud(&f, &word, &vset, 20, 100_000).unwrap();
        assert_eq!(cloud.dimension, 1);
        assert_eq!(cloud.points.len(), 17711); // count of admissible strings
                                               // all points within Σ (⌈β⌉-1)|β'|^j ≈ 2.618 of the origin
        let bound = rat(2619, 1000);
        for p in &cloud.points {
            assert!(p.coords[0].abs() <= bound);
        }
        // truncation radius is small at depth 20
        assert!(cloud.truncation_radius < rat(1, 1000));
        assert_eq!(cloud.lattice.len(), 1);
        // lattice generator is the image of β - 2: conjugate - 2 ≈ -2.618
        assert!(cloud.lattice[0][0] < rat(-2617, 1000));
        assert!(cloud.lattice[0][0] > rat(-2619, 1000));
    }

    #[test]
    fn certified_balls_contain_deeper_refinements() {
        // extending a depth-10 digit string by admissible higher terms moves
        // the point by at most the certified tail radius
        let (f, word, vset) = setup(&[-1, -1, 1], 1, 2);
        let shallow = rauzy_cloud(&f, &word, &vset, 10, 100_000).unwrap();
        let deep = rauzy_cloud(&f, &word, &vset, 16, 1_000_000).unwrap();
        let g = GSequence::new(word.clone());
        let g12 = g.value(12).to_usize().unwrap();
        let g14 = g.value(14).to_usize().unwrap();
        for n in [0usize, 3, 11, 54] {
            let extended = n + g12 + g14;
            let a = &shallow.points[n];
            let b = &deep.points[extended];
            let dist = (&a.coords[0] - &b.coords[0]).abs();
            assert!(
                dist <= &a.error_radius + &b.error_radius,
                "n = {n}: distance {dist} exceeds radius {}",
                a.error_radius
            );
        }
    }

    #[test]
    fn cloud_generation_is_deterministic() {
        let (f, word, vset) = setup(&[-1, -1, 1], 1, 2);
        let a = rauzy_cloud(&f, &word, &vset, 12, 500).unwrap();
        let b = rauzy_cloud(&f, &word, &vset, 12, 500).unwrap();
        assert_eq!(a.points, b.points);
        assert_eq!(a.points.len(), 377); // G_12 strings exist below the cutoff
                                         // a deeper cloud is cut off at max_points
        let c = rauzy_cloud(&f, &word, &vset, 20, 500).unwrap();
        assert_eq!(c.points.len(), 500);
    }

    #[test]
    fn non_unit_and_non_pisot_bases_are_refused() {
        // x^2 - 2x - 2: Pisot (conjugate ≈ -0.73) but constant term 2
        let f = NumberField::new(
            IntPolynomial::from_ints(&[-2, -2, 1]),
            RatInterval::from_ints(2, 3),
        )
        .unwrap();
        match quasi_greedy_expansion(&f, 64).unwrap() {
            ExpansionOutcome::Parry { word, vset } => {
                assert!(matches!(
                    rauzy_cloud(&f, &word, &vset, 10, 100),
                    Err(Error::NotUnit)
                ));
            }
            _ => panic!("x^2-2x-2 is a simple Parry base"),
        }
        // x^2 - x - 3 is not Pisot (conjugate ≈ -1.30); its expansion exists
        let f = NumberField::new(
            IntPolynomial::from_ints(&[-3, -1, 1]),
            RatInterval::from_ints(2, 3),
        )
        .unwrap();
        if let ExpansionOutcome::Parry { word, vset } = quasi_greedy_expansion(&f, 64).unwrap() {
            assert!(matches!(
                rauzy_cloud(&f, &word, &vset, 10, 100),
                Err(Error::NotPisot)
            ));
        }
    }

    #[test]
    fn golden_interval_tiling_has_low_overlap() {
        let (f, word, vset) = setup(&[-1, -1, 1], 1, 2);
        let cloud = rauzy_cloud(&f, &word, &vset, 20, 100_000).unwrap();
        let report = tiling_overlap_estimate(&cloud, 2, &rat(1, 20)).unwrap();
        assert_eq!(report.translates, 5);
        assert!(report.overlap_fraction < 0.1, "{report:?}");
        assert!(report.coverage_fraction > 0.9, "{report:?}");
    }

    #[test]
    fn single_point_cloud_metrics() {
        let (f, word, vset) = setup(&[-1, -1, 1], 1, 2);
        let mut cloud = rauzy_cloud(&f, &word, &vset, 5, 100).unwrap();
        cloud.points.truncate(1);
        let report = tiling_overlap_estimate(&cloud, 0, &rat(1, 20)).unwrap();
        assert_eq!(report.cells_hit, 1);
        assert_eq!(report.overlap_fraction, 0.0);
        assert_eq!(report.box_cells, 1);
        assert_eq!(report.coverage_fraction, 1.0);
        cloud.points.clear();
        assert!(matches!(
            tiling_overlap_estimate(&cloud, 1, &rat(1, 20)),
            Err(Error::EmptyCloud)
        ));
    }

    #[test]
    fn serializations_have_the_documented_shape() {
        let (f, word, vset) = setup(&[-1, -1, 1], 1, 2);
        let cloud = rauzy_cloud(&f, &word, &vset, 8, 100).unwrap();
        let csv = cloud_to_csv(&cloud);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "c1,error_radius");
        assert_eq!(csv.lines().count(), cloud.points.len() + 1);
        let json = cloud_to_json(&cloud);
        assert_eq!(json["depth"], 8);
        assert_eq!(json["dimension"], 1);
        assert_eq!(json["points"].as_array().unwrap().len(), cloud.points.len());
        let ppm = cloud_to_ppm(&cloud, &rat(1, 20)).unwrap();
        assert!(ppm.starts_with("P2\n"));
    }
}
