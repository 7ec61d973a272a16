use std::fmt;

use super::word::{FreeProductPresentation, Syllable, Word};
use crate::text::ParseError;

/// An end of the Bass–Serre tree: the eventually periodic reduced sequence
/// `preperiod · period · period · …`.
///
/// Canonical form has a primitive period and the shortest possible
/// preperiod, so two ends are equal exactly when their fields are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    preperiod: Word,
    period: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("word is not loxodromic")]
    NotLoxodromic,
    #[error("ends are equal")]
    EqualEnds,
    #[error("empty period")]
    EmptyPeriod,
    #[error("sequence is not reduced at syllable {0}")]
    NotReduced(usize),
    #[error("cylinder prefix of length {prefix} must exceed word length {word}")]
    PrefixTooShallow { prefix: usize, word: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordClass {
    Elliptic,
    Loxodromic { translation_length: usize },
}

impl End {
    /// Validates reducedness and canonicalizes.
    pub fn new(preperiod: Word, period: Word) -> Result<Self, TreeError> {
        if period.is_empty() {
            return Err(TreeError::EmptyPeriod);
        }
        let per = period.syllables();
        if per[0].factor == per[per.len() - 1].factor {
            return Err(TreeError::NotReduced(preperiod.len() + per.len()));
        }
        if let Some(last) = preperiod.last() {
            if last.factor == per[0].factor {
                return Err(TreeError::NotReduced(preperiod.len()));
            }
        }
        Ok(Self::canonical(preperiod, period))
    }

    fn canonical(preperiod: Word, period: Word) -> Self {
        let mut per = period.syllables().to_vec();
        let n = per.len();
        if let Some(d) = (1..n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| per[i] == per[i - d])) {
            per.truncate(d);
        }
        let mut pre = preperiod.syllables().to_vec();
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        End {
            preperiod: Word::from_normal(pre),
            period: Word::from_normal(per),
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The `i`-th syllable (0-based) of the infinite sequence.
    pub fn syllable(&self, i: usize) -> Syllable {
        let pre = self.preperiod.syllables();
        if i < pre.len() {
            pre[i]
        } else {
            let per = self.period.syllables();
            per[(i - pre.len()) % per.len()]
        }
    }

    /// The first `n` syllables, as a word.
    pub fn prefix(&self, n: usize) -> Word {
        Word::from_normal((0..n).map(|i| self.syllable(i)).collect())
    }

    /// The period as it continues after position `n`.
    fn period_from(&self, n: usize) -> Word {
        let pre = self.preperiod.len();
        let mut per = self.period.syllables().to_vec();
        if n > pre {
            let k = per.len();
            per.rotate_left((n - pre) % k);
        }
        Word::from_normal(per)
    }

    /// Parses `prefix | period`, each side a word (`e` for empty).
    pub fn parse(p: &FreeProductPresentation, s: &str) -> Result<Self, ParseError> {
        let Some((a, b)) = s.split_once('|') else {
            return Err(ParseError::at(1, "expected 'prefix | period'"));
        };
        let off = a.chars().count() + 1;
        let pre = if a.trim().is_empty() {
            Word::identity()
        } else {
            p.parse_word(a)?
        };
        let per = p.parse_word(b).map_err(|e| e.relocate(1, off))?;
        End::new(pre, per).map_err(|e| ParseError::at(1, e.to_string()))
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.preperiod, self.period)
    }
}

impl FreeProductPresentation {
    /// Writes `w = conjugator · core · conjugator⁻¹` with `core` cyclically
    /// reduced (first and last syllables in different factors, or length <= 1).
    pub fn cyclic_reduce(&self, w: &Word) -> (Word, Word) {
        let mut conj = Word::identity();
        let mut core = w.clone();
        while core.len() >= 2 && core.first().unwrap().factor == core.last().unwrap().factor {
            let x = Word::from_normal(vec![core.first().unwrap()]);
            core = self.conjugate(&core, &self.inverse(&x));
            conj = self.multiply(&conj, &x);
        }
        (conj, core)
    }

    pub fn classify_word(&self, w: &Word) -> WordClass {
        let (_, core) = self.cyclic_reduce(w);
        if core.len() >= 2 {
            WordClass::Loxodromic {
                translation_length: core.len(),
            }
        } else {
            WordClass::Elliptic
        }
    }

    pub fn is_loxodromic(&self, w: &Word) -> bool {
        matches!(self.classify_word(w), WordClass::Loxodromic { .. })
    }

    /// `w · e`. Unrolls `e` past `|w| + 1` syllables so that cancellation
    /// never reaches the periodic tail.
    pub fn apply_end(&self, w: &Word, e: &End) -> End {
        let n = w.len() + e.preperiod.len() + 2;
        let head = self.multiply(w, &e.prefix(n));
        End::canonical(head, e.period_from(n))
    }

    /// Attracting and repelling ends `u·c^∞`, `u·(c⁻¹)^∞` for `w = u c u⁻¹`.
    pub fn fixed_ends(&self, w: &Word) -> Result<(End, End), TreeError> {
        let (u, core) = self.cyclic_reduce(w);
        if core.len() < 2 {
            return Err(TreeError::NotLoxodromic);
        }
        let plus = End::canonical(Word::identity(), core.clone());
        let minus = End::canonical(Word::identity(), self.inverse(&core));
        Ok((self.apply_end(&u, &plus), self.apply_end(&u, &minus)))
    }
}

/// Length of the longest common prefix of two distinct ends: the Gromov
/// product based at the identity vertex, measured in syllables.
pub fn tree_gromov_product(x: &End, y: &End) -> Result<usize, TreeError> {
    if x == y {
        return Err(TreeError::EqualEnds);
    }
    // distinct eventually periodic sequences differ within this many terms
    let bound = x.preperiod.len().max(y.preperiod.len()) + x.period.len() + y.period.len();
    (0..=bound)
        .find(|&i| x.syllable(i) != y.syllable(i))
        .ok_or(TreeError::EqualEnds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p23() -> FreeProductPresentation {
        FreeProductPresentation::new(vec![2, 3]).unwrap()
    }

    fn end(p: &FreeProductPresentation, s: &str) -> End {
        End::parse(p, s).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let p = p23();
        assert_eq!(end(&p, "e | g1 g2 g1 g2"), end(&p, "e | g1 g2"));
        assert_eq!(end(&p, "g1 g2 | g1 g2"), end(&p, "e | g1 g2"));
        assert_eq!(end(&p, "g2 | g1 g2"), end(&p, "e | g2 g1"));
        assert_eq!(end(&p, "g2^2 | g1 g2").to_string(), "g2^2 | g1 g2");
        assert!(End::parse(&p, "g1 | g1 g2").is_err());
        assert!(End::parse(&p, "e | g1 g2 g1").is_err());
        assert!(End::parse(&p, "e | e").is_err());
    }

    #[test]
    fn cyclic_reduction_examples() {
        let p = p23();
        let w = |s: &str| p.parse_word(s).unwrap();
        assert_eq!(p.cyclic_reduce(&w("g1 g2 g1")), (w("g1"), w("g2")));
        assert_eq!(p.cyclic_reduce(&w("g1 g2")), (Word::identity(), w("g1 g2")));
        assert_eq!(p.cyclic_reduce(&w("g2 g1 g2^2")), (w("g2"), w("g1")));
        for s in ["g1 g2 g1 g2^2 g1", "g2 g1 g2 g1 g2", "g1"] {
            let (u, c) = p.cyclic_reduce(&w(s));
            assert_eq!(p.conjugate(&c, &u), w(s));
        }
    }

    #[test]
    fn classification_examples() {
        let p = p23();
        let w = |s: &str| p.parse_word(s).unwrap();
        assert_eq!(p.classify_word(&w("g1")), WordClass::Elliptic);
        assert_eq!(
            p.classify_word(&w("g1 g2")),
            WordClass::Loxodromic {
                translation_length: 2
            }
        );
        assert_eq!(p.classify_word(&w("g1 g2 g1")), WordClass::Elliptic);
        assert_eq!(p.classify_word(&Word::identity()), WordClass::Elliptic);
        // st has infinite order: no power up to 6 is trivial
        for n in 1..=6 {
            assert!(!p.pow(&w("g1 g2"), n).is_empty());
        }
    }

    #[test]
    fn fixed_end_examples() {
        let p = p23();
        let w = |s: &str| p.parse_word(s).unwrap();
        let (plus, minus) = p.fixed_ends(&w("g1 g2")).unwrap();
        assert_eq!(plus, end(&p, "e | g1 g2"));
        assert_eq!(minus, end(&p, "e | g2^2 g1"));
        let (plus, minus) = p.fixed_ends(&w("g1 g2^2")).unwrap();
        assert_eq!(plus, end(&p, "e | g1 g2^2"));
        assert_eq!(minus, end(&p, "e | g2 g1"));
        for e in [&plus, &minus] {
            assert_eq!(&p.apply_end(&w("g1 g2^2"), e), e);
        }
        assert_eq!(p.fixed_ends(&w("g1 g2 g1")), Err(TreeError::NotLoxodromic));
    }

    #[test]
    fn action_examples() {
        let p = p23();
        let w = |s: &str| p.parse_word(s).unwrap();
        let st = end(&p, "e | g1 g2");
        assert_eq!(p.apply_end(&Word::identity(), &st), st);
        assert_eq!(p.apply_end(&w("g1 g2"), &st), st);
        assert_eq!(p.apply_end(&w("g1"), &st), end(&p, "e | g2 g1"));
        let long = w("g2 g1 g2 g1 g2^2 g1");
        let img = p.apply_end(&long, &st);
        assert_eq!(p.apply_end(&p.inverse(&long), &img), st);
    }

    #[test]
    fn gromov_examples() {
        let p = p23();
        let st = end(&p, "e | g1 g2");
        assert_eq!(tree_gromov_product(&st, &end(&p, "e | g1 g2^2")), Ok(1));
        assert_eq!(tree_gromov_product(&st, &end(&p, "g1 | g2^2 g1")), Ok(1));
        assert_eq!(tree_gromov_product(&st, &end(&p, "e | g2^2 g1")), Ok(0));
        assert_eq!(tree_gromov_product(&st, &st), Err(TreeError::EqualEnds));
        assert_eq!(
            tree_gromov_product(&st, &end(&p, "g1 g2 g1 g2 g1 g2^2 | g1 g2")),
            Ok(5)
        );
    }
}
