//! Named reference bases and base-spec parsing.
//!
//! A base can be given either by a defining polynomial (with a root
//! selector) or by a digit word. Digit words are validated by a round trip:
//! the word determines a characteristic polynomial, its dominant root
//! determines a field, and that field's quasi-greedy expansion of 1 must
//! reproduce the word exactly.

use std::sync::Arc;

use crate::arith::{isolate_real_roots, IntPolynomial, NumberField, RatInterval};
use crate::dynamics::{
    classify, quasi_greedy_expansion, ClassReport, ExpansionOutcome, VSet, DEFAULT_MAX_ITER,
};
use crate::numeration::GSequence;
use crate::spectral::{beta_char_poly, qm_report, QMReport};
use crate::words::PeriodicWord;
use crate::Error;

use num_rational::BigRational;
use num_traits::One;

/// How to pick the defining root among the real roots of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSelector {
    /// The largest real root (which must be `> 1`).
    LargestReal,
    /// The unique root inside a given interval.
    Interval(RatInterval),
}

/// A parsed, not yet resolved, base description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Polynomial { text: String, root: RootSelector },
    DigitWord { text: String },
}

/// A fully resolved base: field, quasi-greedy word and orbit.
#[derive(Clone, Debug)]
pub struct ResolvedBase {
    pub field: Arc<NumberField>,
    pub word: PeriodicWord,
    pub vset: VSet,
}

impl ResolvedBase {
    pub fn g_sequence(&self) -> GSequence {
        GSequence::new(self.word.clone())
    }

    pub fn classify(&self, max_iter: usize) -> Result<ClassReport, Error> {
        classify(&self.field, max_iter)
    }

    pub fn qm(&self) -> Result<QMReport, Error> {
        let g = self.g_sequence();
        qm_report(&self.field, &self.word, &self.vset, &g)
    }
}

/// Parses the textual form of a base spec: a digit word ending in `^w`, or a
/// polynomial with an optional `@[lo, hi]` root selector suffix.
pub fn parse_base_spec(text: &str) -> Result<BaseSpec, Error> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty base spec".to_string(),
        });
    }
    if t.ends_with("^w") {
        // validate digit word syntax now, resolution happens later
        PeriodicWord::parse(t)?;
        return Ok(BaseSpec::DigitWord {
            text: t.to_string(),
        });
    }
    if let Some((poly, iv)) = t.split_once('@') {
        let interval = RatInterval::parse(iv)?;
        poly.parse::<IntPolynomial>()?;
        return Ok(BaseSpec::Polynomial {
            text: poly.trim().to_string(),
            root: RootSelector::Interval(interval),
        });
    }
    t.parse::<IntPolynomial>()?;
    Ok(BaseSpec::Polynomial {
        text: t.to_string(),
        root: RootSelector::LargestReal,
    })
}

/// Resolves a base spec into a field and validated word.
pub fn resolve(spec: &BaseSpec, max_iter: usize) -> Result<ResolvedBase, Error> {
    match spec {
        BaseSpec::Polynomial { text, root } => {
            let poly: IntPolynomial = text.parse()?;
            let interval = select_root(&poly, root)?;
            let field = NumberField::from_poly_root(&poly, &interval)?;
            match quasi_greedy_expansion(&field, max_iter)? {
                ExpansionOutcome::Parry { word, vset } => Ok(ResolvedBase { field, word, vset }),
                ExpansionOutcome::NotParryWithinBound { .. } => Err(Error::OutOfRange(format!(
                    "expansion of 1 did not close within {max_iter} iterations; \
                     this tool requires a Parry base"
                ))),
            }
        }
        BaseSpec::DigitWord { text } => {
            let word = PeriodicWord::parse(text)?;
            let poly = beta_char_poly(&word);
            let interval = select_root(&poly, &RootSelector::LargestReal)?;
            let field = NumberField::from_poly_root(&poly, &interval)?;
            match quasi_greedy_expansion(&field, max_iter)? {
                ExpansionOutcome::Parry {
                    word: recomputed,
                    vset,
                } => {
                    if recomputed != word {
                        return Err(Error::WordMismatch(format!(
                            "word {word} resolves to a base whose expansion of 1 is {recomputed}"
                        )));
                    }
                    Ok(ResolvedBase { field, word, vset })
                }
                ExpansionOutcome::NotParryWithinBound { .. } => Err(Error::WordMismatch(
                    "expansion of the resolved base did not close".to_string(),
                )),
            }
        }
    }
}

/// Picks the isolating interval of the designated root; it must be `> 1`.
fn select_root(poly: &IntPolynomial, selector: &RootSelector) -> Result<RatInterval, Error> {
    let one = BigRational::one();
    match selector {
        RootSelector::LargestReal => {
            // the rightmost isolated root, refined until its position
            // relative to 1 is decided, must lie above 1
            let roots = isolate_real_roots(poly)?;
            let Some(rightmost) = roots.into_iter().last() else {
                return Err(Error::OutOfRange("no real root > 1".to_string()));
            };
            let mut iv = rightmost;
            while !iv.is_point() && iv.lo <= one && iv.hi > one {
                let target = iv.width() / BigRational::from(num_bigint::BigInt::from(4));
                iv = crate::arith::roots::refine_root(poly, &iv, &target);
            }
            if iv.lo > one {
                Ok(iv)
            } else {
                Err(Error::OutOfRange("no real root > 1".to_string()))
            }
        }
        RootSelector::Interval(iv) => {
            let count = crate::arith::roots::count_roots_in(poly, iv)?;
            if count != 1 {
                return Err(Error::OutOfRange(format!(
                    "root selector {} matches {count} roots, need exactly 1",
                    iv.to_text()
                )));
            }
            Ok(iv.clone())
        }
    }
}

/// A corpus entry together with its stored classification record.
#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub polynomial: &'static str,
    pub word: &'static str,
    pub pisot: bool,
    pub unit: bool,
    pub v_count: usize,
    pub preperiod: usize,
    pub qm_holds: bool,
}

/// The shipped reference bases.
pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "golden",
        polynomial: "x^2-x-1",
        word: "10^w",
        pisot: true,
        unit: true,
        v_count: 2,
        preperiod: 0,
        qm_holds: true,
    },
    CorpusEntry {
        name: "plastic",
        polynomial: "x^3-x-1",
        word: "10000^w",
        pisot: true,
        unit: true,
        v_count: 5,
        preperiod: 0,
        qm_holds: false,
    },
    CorpusEntry {
        name: "quad-preperiodic",
        polynomial: "x^2-3x+1",
        word: "2(1)^w",
        pisot: true,
        unit: true,
        v_count: 2,
        preperiod: 1,
        qm_holds: true,
    },
    CorpusEntry {
        name: "cubic-t2",
        polynomial: "x^3-2x^2+x-1",
        word: "1100^w",
        pisot: true,
        unit: true,
        v_count: 4,
        preperiod: 0,
        qm_holds: true,
    },
    CorpusEntry {
        name: "cubic-t3",
        polynomial: "x^3-3x^2+x-1",
        word: "2200^w",
        pisot: true,
        unit: true,
        v_count: 4,
        preperiod: 0,
        qm_holds: true,
    },
    CorpusEntry {
        name: "simple-odd-a",
        polynomial: "x^3-3x^2+2x-2",
        word: "2101^w",
        pisot: true,
        unit: false,
        v_count: 4,
        preperiod: 0,
        qm_holds: true,
    },
    CorpusEntry {
        name: "simple-odd-b",
        polynomial: "x^3-3x^2+x-1",
        word: "2200^w",
        pisot: true,
        unit: true,
        v_count: 4,
        preperiod: 0,
        qm_holds: true,
    },
    CorpusEntry {
        name: "int3",
        polynomial: "x-3",
        word: "2^w",
        pisot: true,
        unit: false,
        v_count: 1,
        preperiod: 0,
        qm_holds: true,
    },
];

pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

/// Resolves a corpus base by name.
pub fn resolve_corpus(name: &str) -> Result<ResolvedBase, Error> {
    let entry = corpus_entry(name).ok_or_else(|| {
        Error::OutOfRange(format!(
            "unknown corpus base {name:?}; known: {}",
            CORPUS.iter().map(|e| e.name).collect::<Vec<_>>().join(", ")
        ))
    })?;
    resolve(
        &BaseSpec::Polynomial {
            text: entry.polynomial.to_string(),
            root: RootSelector::LargestReal,
        },
        DEFAULT_MAX_ITER,
    )
}

/// One corpus entry checked against its stored record.
#[derive(Clone, Debug)]
pub struct CorpusCheck {
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

/// Re-derives every corpus base and compares with the stored records.
pub fn corpus_check() -> Vec<CorpusCheck> {
    CORPUS
        .iter()
        .map(|entry| {
            let mut details = Vec::new();
            match resolve_corpus(entry.name) {
                Ok(base) => {
                    if base.word.to_text() != entry.word {
                        details.push(format!(
                            "word: computed {} expected {}",
                            base.word.to_text(),
                            entry.word
                        ));
                    }
                    if base.field.is_pisot() != entry.pisot {
                        details.push(format!(
                            "pisot: computed {} expected {}",
                            base.field.is_pisot(),
                            entry.pisot
                        ));
                    }
                    if base.field.is_unit() != entry.unit {
                        details.push(format!(
                            "unit: computed {} expected {}",
                            base.field.is_unit(),
                            entry.unit
                        ));
                    }
                    if base.vset.len() != entry.v_count {
                        details.push(format!(
                            "orbit size: computed {} expected {}",
                            base.vset.len(),
                            entry.v_count
                        ));
                    }
                    if base.vset.cycle_entry() != entry.preperiod {
                        details.push(format!(
                            "preperiod: computed {} expected {}",
                            base.vset.cycle_entry(),
                            entry.preperiod
                        ));
                    }
                    match base.qm() {
                        Ok(report) => {
                            if !report.consensus {
                                details.push("checker consensus failed".to_string());
                            }
                            if report.holds() != entry.qm_holds {
                                details.push(format!(
                                    "qm: computed {} expected {}",
                                    report.holds(),
                                    entry.qm_holds
                                ));
                            }
                        }
                        Err(e) => details.push(format!("qm report failed: {e}")),
                    }
                }
                Err(e) => details.push(format!("resolution failed: {e}")),
            }
            CorpusCheck {
                name: entry.name,
                passed: details.is_empty(),
                details,
            }
        })
        .collect()
}
