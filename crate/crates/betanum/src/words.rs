//! Eventually periodic digit words and the lexicographic admissibility
//! condition: a digit sequence is the greedy expansion of a number in
//! `[0, 1)` exactly when every shift of it stays strictly below the
//! quasi-greedy expansion of 1.

use std::cmp::Ordering;
use std::fmt;

use crate::Error;

/// An eventually periodic digit word `a_1 … a_k (a_{k+1} … a_n)^∞` in
/// canonical form: the period is primitive and the preperiod is minimal
/// (its last digit differs from the period's last digit). The period is
/// never all zero, so the word has infinitely many nonzero digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicWord {
    preperiod: Vec<u32>,
    period: Vec<u32>,
}

impl PeriodicWord {
    pub fn new(mut preperiod: Vec<u32>, mut period: Vec<u32>) -> Result<Self, Error> {
        if period.is_empty() {
            return Err(Error::OutOfRange("period must be nonempty".into()));
        }
        if period.iter().all(|&d| d == 0) {
            return Err(Error::OutOfRange(
                "period must contain a nonzero digit".into(),
            ));
        }
        // primitive period: shortest divisor-length prefix that tiles it
        let p = period.len();
        for d in 1..=p {
            if p.is_multiple_of(d) && (0..p).all(|i| period[i] == period[i % d]) {
                period.truncate(d);
                break;
            }
        }
        // minimal preperiod: absorb matching tail digits by rotating the period
        while let Some(&last) = preperiod.last() {
            if last == *period.last().unwrap() {
                preperiod.pop();
                let tail = period.pop().unwrap();
                period.insert(0, tail);
            } else {
                break;
            }
        }
        Ok(PeriodicWord { preperiod, period })
    }

    /// A purely periodic word.
    pub fn pure(period: Vec<u32>) -> Result<Self, Error> {
        Self::new(Vec::new(), period)
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    pub fn preperiod_len(&self) -> usize {
        self.preperiod.len()
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Total length `n = k + period length` of the defining data.
    pub fn total_len(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// The 1-based digit `a_j`.
    pub fn digit(&self, j: usize) -> u32 {
        assert!(j >= 1, "digits are 1-based");
        let idx = j - 1;
        if idx < self.preperiod.len() {
            self.preperiod[idx]
        } else {
            self.period[(idx - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn max_digit(&self) -> u32 {
        self.preperiod
            .iter()
            .chain(self.period.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// True when `a_1 ≥ a_2 ≥ a_3 ≥ ⋯`; for an eventually periodic word this
    /// forces the period to be constant.
    pub fn is_weakly_decreasing(&self) -> bool {
        if self.period.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
        // period constant from here on
        let n = self.total_len();
        (1..n).all(|j| self.digit(j) >= self.digit(j + 1))
    }

    /// Longest run of zero digits anywhere in the word (runs may wrap across
    /// the period boundary).
    pub fn longest_zero_run(&self) -> usize {
        // scan enough digits to see every wrap alignment
        let n = self.total_len() + 2 * self.period.len();
        let mut best = 0usize;
        let mut current = 0usize;
        for j in 1..=n {
            if self.digit(j) == 0 {
                current += 1;
                best = best.max(current);
            } else {
                current = 0;
            }
        }
        best
    }

    /// The shifted word dropping the first `j` digits.
    pub fn shift(&self, j: usize) -> PeriodicWord {
        if j < self.preperiod.len() {
            PeriodicWord::new(self.preperiod[j..].to_vec(), self.period.clone())
                .expect("shift preserves validity")
        } else {
            let r = (j - self.preperiod.len()) % self.period.len();
            let mut rotated = self.period[r..].to_vec();
            rotated.extend_from_slice(&self.period[..r]);
            PeriodicWord::new(Vec::new(), rotated).expect("rotation preserves validity")
        }
    }

    /// Parses `1100^w` (pure period) or `2(1)^w` (preperiod + period).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let body = t.strip_suffix("^w").ok_or_else(|| Error::Parse {
            position: t.len(),
            message: "digit word must end in ^w".to_string(),
        })?;
        let digit_at = |pos: usize, b: u8| -> Result<u32, Error> {
            if b.is_ascii_digit() {
                Ok((b - b'0') as u32)
            } else {
                Err(Error::Parse {
                    position: pos,
                    message: format!("expected digit, found {:?}", b as char),
                })
            }
        };
        if let Some(open) = body.find('(') {
            let close = body.rfind(')').ok_or_else(|| Error::Parse {
                position: body.len(),
                message: "unclosed parenthesis".to_string(),
            })?;
            if close != body.len() - 1 || close < open {
                return Err(Error::Parse {
                    position: close,
                    message: "period must be the parenthesised suffix".to_string(),
                });
            }
            let pre: Vec<u32> = body[..open]
                .bytes()
                .enumerate()
                .map(|(i, b)| digit_at(i, b))
                .collect::<Result<_, _>>()?;
            let per: Vec<u32> = body[open + 1..close]
                .bytes()
                .enumerate()
                .map(|(i, b)| digit_at(open + 1 + i, b))
                .collect::<Result<_, _>>()?;
            PeriodicWord::new(pre, per)
        } else {
            let per: Vec<u32> = body
                .bytes()
                .enumerate()
                .map(|(i, b)| digit_at(i, b))
                .collect::<Result<_, _>>()?;
            PeriodicWord::pure(per)
        }
    }

    /// Canonical text form, inverse of [`PeriodicWord::parse`].
    pub fn to_text(&self) -> String {
        let digits = |ds: &[u32]| ds.iter().map(|d| d.to_string()).collect::<String>();
        if self.preperiod.is_empty() {
            format!("{}^w", digits(&self.period))
        } else {
            format!("{}({})^w", digits(&self.preperiod), digits(&self.period))
        }
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A digit word that is either finite (implicitly padded with zeros) or
/// eventually periodic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Finite(Vec<u32>),
    Periodic(PeriodicWord),
}

impl Word {
    fn digit0(&self, idx: usize) -> u32 {
        match self {
            Word::Finite(ds) => ds.get(idx).copied().unwrap_or(0),
            Word::Periodic(w) => w.digit(idx + 1),
        }
    }

    fn preperiod_len(&self) -> usize {
        match self {
            Word::Finite(ds) => ds.len(),
            Word::Periodic(w) => w.preperiod_len(),
        }
    }

    fn period_len(&self) -> usize {
        match self {
            Word::Finite(_) => 1,
            Word::Periodic(w) => w.period_len(),
        }
    }

    /// Number of distinct shifted words.
    fn shift_count(&self) -> usize {
        match self {
            Word::Finite(ds) => ds.len(),
            Word::Periodic(w) => w.preperiod_len() + w.period_len(),
        }
    }

    fn shifted(&self, j: usize) -> Word {
        match self {
            Word::Finite(ds) => Word::Finite(ds[j.min(ds.len())..].to_vec()),
            Word::Periodic(w) => Word::Periodic(w.shift(j)),
        }
    }
}

/// Exact lexicographic comparison of two eventually periodic sequences.
///
/// If the sequences agree through `max(preperiods) + lcm(periods)` digits
/// they agree everywhere.
pub fn lex_cmp(x: &Word, y: &Word) -> Ordering {
    let k = x.preperiod_len().max(y.preperiod_len());
    let bound = k + lcm(x.period_len(), y.period_len());
    for idx in 0..bound {
        match x.digit0(idx).cmp(&y.digit0(idx)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parry's admissibility test: every shift of `word` (including the word
/// itself) must be lexicographically strictly below `a_1 a_2 ⋯`, the
/// quasi-greedy expansion of 1. Finite words are padded with zeros.
pub fn is_admissible(word: &Word, a: &PeriodicWord) -> bool {
    let reference = Word::Periodic(a.clone());
    if word.shift_count() == 0 {
        return true; // the empty word is 0^∞
    }
    for j in 0..word.shift_count() {
        if lex_cmp(&word.shifted(j), &reference) != Ordering::Less {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(pre: &[u32], per: &[u32]) -> PeriodicWord {
        PeriodicWord::new(pre.to_vec(), per.to_vec()).unwrap()
    }

    #[test]
    fn canonicalisation_reduces_period_and_preperiod() {
        // (1010)^∞ has primitive period 10
        let w = word(&[], &[1, 0, 1, 0]);
        assert_eq!(w.period(), &[1, 0]);
        assert_eq!(w.preperiod_len(), 0);
        // last preperiod digit 1 ≠ period last digit 2 ⇒ kept as is
        let w = word(&[2, 1], &[1, 2]);
        assert_eq!(w.preperiod(), &[2, 1]);
        // 21(1)^∞ collapses to 2(1)^∞
        let w = word(&[2, 1], &[1]);
        assert_eq!(w.preperiod(), &[2]);
        assert_eq!(w.period(), &[1]);
        // all-zero period is rejected
        assert!(PeriodicWord::new(vec![1], vec![0, 0]).is_err());
    }

    #[test]
    fn digits_are_one_based_across_the_seam() {
        let w = word(&[2], &[1, 0]);
        assert_eq!(w.digit(1), 2);
        assert_eq!(w.digit(2), 1);
        assert_eq!(w.digit(3), 0);
        assert_eq!(w.digit(4), 1);
        assert_eq!(w.total_len(), 3);
    }

    #[test]
    fn weakly_decreasing_detection() {
        assert!(word(&[2], &[1]).is_weakly_decreasing());
        assert!(word(&[], &[2]).is_weakly_decreasing());
        assert!(!word(&[], &[1, 0]).is_weakly_decreasing());
        assert!(!word(&[1], &[2]).is_weakly_decreasing());
        assert!(!word(&[], &[2, 1]).is_weakly_decreasing()); // period not constant
    }

    #[test]
    fn zero_runs_wrap_around_the_period() {
        assert_eq!(word(&[], &[1, 0, 0, 0, 0]).longest_zero_run(), 4);
        assert_eq!(word(&[], &[1, 0]).longest_zero_run(), 1);
        assert_eq!(word(&[], &[2]).longest_zero_run(), 0);
        // 100 then 20202…: the longest run is the 00 pair plus nothing longer
        assert_eq!(word(&[1, 0, 0], &[2, 0]).longest_zero_run(), 2);
    }

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["10^w", "10000^w", "2(1)^w", "1100^w", "2101^w"] {
            let w = PeriodicWord::parse(text).unwrap();
            assert_eq!(w.to_text(), text);
        }
        // non-canonical input formats to canonical text
        assert_eq!(PeriodicWord::parse("1010^w").unwrap().to_text(), "10^w");
        assert_eq!(PeriodicWord::parse("21(1)^w").unwrap().to_text(), "2(1)^w");
        assert!(PeriodicWord::parse("10").is_err());
        assert!(PeriodicWord::parse("1x^w").is_err());
        assert!(PeriodicWord::parse("(00)^w").is_err());
        assert!(PeriodicWord::parse("1(2^w").is_err());
    }

    #[test]
    fn lexicographic_comparison_of_periodic_words() {
        let a = Word::Periodic(word(&[], &[1, 0]));
        let b = Word::Periodic(word(&[], &[1, 0, 0]));
        // 101010... vs 100100...: differs at index 2
        assert_eq!(lex_cmp(&a, &b), Ordering::Greater);
        assert_eq!(lex_cmp(&b, &a), Ordering::Less);
        assert_eq!(lex_cmp(&a, &a), Ordering::Equal);
        // finite vs periodic
        let f = Word::Finite(vec![1, 0, 1]);
        assert_eq!(lex_cmp(&f, &a), Ordering::Less); // 1010 0000 < 1010 10...
        let g = Word::Finite(vec![1, 0, 1, 0]);
        assert_eq!(lex_cmp(&f, &g), Ordering::Equal); // both 101 0^∞
    }

    #[test]
    fn admissibility_examples_for_the_golden_word() {
        let a = word(&[], &[1, 0]);
        assert!(is_admissible(&Word::Finite(vec![1, 0, 1]), &a));
        assert!(!is_admissible(&Word::Finite(vec![1, 1]), &a));
        assert!(is_admissible(&Word::Finite(vec![0, 0, 0]), &a));
        assert!(is_admissible(&Word::Finite(vec![]), &a));
        // the word itself is not admissible (equality is not strict descent)
        assert!(!is_admissible(&Word::Periodic(a.clone()), &a));
    }

    #[test]
    fn lex_comparison_matches_long_digit_expansion() {
        // oracle: expand both sequences far past the equality bound
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            state.wrapping_mul(0x2545F4914F6CDD1D)
        };
        let random_word = |next: &mut dyn FnMut() -> u64| -> Word {
            if next() % 3 == 0 {
                let len = (next() % 5) as usize;
                Word::Finite((0..len).map(|_| (next() % 3) as u32).collect())
            } else {
                let pre_len = (next() % 3) as usize;
                let per_len = 1 + (next() % 4) as usize;
                let pre: Vec<u32> = (0..pre_len).map(|_| (next() % 3) as u32).collect();
                let mut per: Vec<u32> = (0..per_len).map(|_| (next() % 3) as u32).collect();
                if per.iter().all(|&d| d == 0) {
                    per[0] = 1;
                }
                Word::Periodic(PeriodicWord::new(pre, per).unwrap())
            }
        };
        for _ in 0..300 {
            let x = random_word(&mut next);
            let y = random_word(&mut next);
            let brute = (0..64)
                .map(|i| x.digit0(i).cmp(&y.digit0(i)))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal);
            assert_eq!(lex_cmp(&x, &y), brute, "x={x:?} y={y:?}");
        }
    }

    #[test]
    fn every_proper_shift_of_a_quasi_greedy_word_stays_at_or_below_it() {
        // holds for the corpus words; here spot-check two
        for w in [word(&[], &[1, 0, 0, 0, 0]), word(&[2], &[1])] {
            let reference = Word::Periodic(w.clone());
            for j in 1..=w.total_len() {
                assert_ne!(
                    lex_cmp(&Word::Periodic(w.shift(j)), &reference),
                    Ordering::Greater
                );
            }
        }
    }
}
