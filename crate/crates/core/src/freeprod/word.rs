use std::fmt;

use crate::text::{tokens, ParseError};

/// `g_{factor+1}^{exp}` with `1 <= exp < m_factor`. Factors are 0-based here
/// and 1-based in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub factor: usize,
    pub exp: u32,
}

/// A group element in normal form: adjacent syllables lie in different
/// factors. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn first(&self) -> Option<Syllable> {
        self.syllables.first().copied()
    }

    pub fn last(&self) -> Option<Syllable> {
        self.syllables.last().copied()
    }

    /// Builds a word from syllables already known to be in normal form.
    pub(crate) fn from_normal(syllables: Vec<Syllable>) -> Self {
        debug_assert!(syllables.windows(2).all(|w| w[0].factor != w[1].factor));
        Word { syllables }
    }

    pub(crate) fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_normal(self.syllables[from..to].to_vec())
    }
}

/// A free product `Z/m_1 * … * Z/m_k` of finite cyclic groups, `k >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeProductPresentation {
    orders: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("need at least two factors, got {0}")]
    TooFewFactors(usize),
    #[error("factor order must be at least 2, got {0}")]
    OrderTooSmall(u32),
}

impl FreeProductPresentation {
    pub fn new(orders: Vec<u32>) -> Result<Self, PresentationError> {
        if orders.len() < 2 {
            return Err(PresentationError::TooFewFactors(orders.len()));
        }
        if let Some(&m) = orders.iter().find(|&&m| m < 2) {
            return Err(PresentationError::OrderTooSmall(m));
        }
        Ok(FreeProductPresentation { orders })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, factor: usize) -> u32 {
        self.orders[factor]
    }

    /// The infinite dihedral group `Z/2 * Z/2` acts on a line, so it never
    /// has two independent loxodromics.
    pub fn is_elementary(&self) -> bool {
        self.orders == [2, 2]
    }

    /// Every syllable, factor by factor, exponents ascending.
    pub fn alphabet(&self) -> Vec<Syllable> {
        self.orders
            .iter()
            .enumerate()
            .flat_map(|(factor, &m)| (1..m).map(move |exp| Syllable { factor, exp }))
            .collect()
    }

    /// Syllables allowed to follow one in factor `after` (all, at the start).
    pub fn successors(&self, after: Option<usize>) -> Vec<Syllable> {
        self.alphabet()
            .into_iter()
            .filter(|s| Some(s.factor) != after)
            .collect()
    }

    pub fn generator(&self, factor: usize) -> Word {
        Word::from_normal(vec![Syllable { factor, exp: 1 }])
    }

    pub fn syllable_inverse(&self, s: Syllable) -> Syllable {
        Syllable {
            factor: s.factor,
            exp: self.orders[s.factor] - s.exp,
        }
    }

    pub fn inverse(&self, w: &Word) -> Word {
        Word::from_normal(
            w.syllables
                .iter()
                .rev()
                .map(|&s| self.syllable_inverse(s))
                .collect(),
        )
    }

    /// Normal form of `a · b`: cancel and merge across the junction.
    pub fn multiply(&self, a: &Word, b: &Word) -> Word {
        let mut out = a.syllables.clone();
        let mut rest = b.syllables.iter().copied();
        for s in rest.by_ref() {
            match out.last().copied() {
                Some(t) if t.factor == s.factor => {
                    let exp = (t.exp + s.exp) % self.orders[s.factor];
                    out.pop();
                    if exp != 0 {
                        out.push(Syllable {
                            factor: s.factor,
                            exp,
                        });
                        break;
                    }
                }
                _ => {
                    out.push(s);
                    break;
                }
            }
        }
        out.extend(rest);
        Word::from_normal(out)
    }

    pub fn pow(&self, w: &Word, n: i64) -> Word {
        let base = if n < 0 { self.inverse(w) } else { w.clone() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    /// `h · w · h⁻¹`.
    pub fn conjugate(&self, w: &Word, h: &Word) -> Word {
        self.multiply(&self.multiply(h, w), &self.inverse(h))
    }

    /// Parses `orders: m1 m2 …`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let t = s.trim_start();
        let lead = s.len() - t.len();
        let Some(rest) = t.strip_prefix("orders:") else {
            return Err(ParseError::at(lead + 1, "expected 'orders:'"));
        };
        let offset = lead + "orders:".len();
        let mut orders = vec![];
        for (col, tok) in tokens(rest) {
            let m: u32 = tok
                .parse()
                .map_err(|_| ParseError::at(offset + col, format!("bad order {tok:?}")))?;
            orders.push(m);
        }
        FreeProductPresentation::new(orders).map_err(|e| ParseError::at(offset + 1, e.to_string()))
    }

    /// Parses a word such as `g1 g2^2 g1`, or `e` for the identity. Exponents
    /// may be any integers and adjacent letters are multiplied out.
    pub fn parse_word(&self, s: &str) -> Result<Word, ParseError> {
        let toks: Vec<(usize, &str)> = tokens(s).collect();
        if toks.is_empty() {
            return Err(ParseError::at(1, "empty word (write 'e' for the identity)"));
        }
        if toks.len() == 1 && toks[0].1 == "e" {
            return Ok(Word::identity());
        }
        let mut w = Word::identity();
        for (col, tok) in toks {
            let Some(body) = tok.strip_prefix('g') else {
                return Err(ParseError::at(col, format!("expected a letter gN, found {tok:?}")));
            };
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (body, None),
            };
            let factor: usize = idx
                .parse()
                .ok()
                .filter(|&f| f >= 1 && f <= self.rank())
                .ok_or_else(|| ParseError::at(col, format!("no generator {tok:?}")))?;
            let exp: i64 = match exp {
                Some(e) => e
                    .parse()
                    .map_err(|_| ParseError::at(col, format!("bad exponent in {tok:?}")))?,
                None => 1,
            };
            let m = self.orders[factor - 1] as i64;
            let exp = exp.rem_euclid(m) as u32;
            if exp != 0 {
                let letter = Word::from_normal(vec![Syllable {
                    factor: factor - 1,
                    exp,
                }]);
                w = self.multiply(&w, &letter);
            }
        }
        Ok(w)
    }
}

impl fmt::Display for FreeProductPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.orders.iter().map(|m| m.to_string()).collect();
        write!(f, "orders: {}", orders.join(" "))
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "g{}", self.factor + 1)
        } else {
            write!(f, "g{}^{}", self.factor + 1, self.exp)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.syllables.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p23() -> FreeProductPresentation {
        FreeProductPresentation::new(vec![2, 3]).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let p = p23();
        let w = |s: &str| p.parse_word(s).unwrap();
        assert_eq!(p.multiply(&w("g1"), &w("g1")), Word::identity());
        assert_eq!(p.multiply(&w("g1 g2"), &w("g2^2 g1")), Word::identity());
        assert_eq!(p.multiply(&w("g2"), &w("g2")), w("g2^2"));
        assert_eq!(p.multiply(&w("g1 g2"), &w("g2 g1")).to_string(), "g1 g2^2 g1");
    }

    #[test]
    fn parsing_reduces() {
        let p = p23();
        assert_eq!(p.parse_word("g2 g2 g2").unwrap(), Word::identity());
        assert_eq!(p.parse_word("g2^-1").unwrap().to_string(), "g2^2");
        assert_eq!(p.parse_word("g1 g2 g2^2 g1").unwrap().to_string(), "e");
        assert!(p.parse_word("g3").is_err());
        assert!(p.parse_word("x").is_err());
        assert!(p.parse_word("").is_err());
        assert_eq!(p.parse_word("g1 x").unwrap_err().column, 4);
    }

    #[test]
    fn presentation_text() {
        let p = FreeProductPresentation::parse("orders: 2 3").unwrap();
        assert_eq!(p, p23());
        assert_eq!(p.to_string(), "orders: 2 3");
        assert!(FreeProductPresentation::parse("orders: 2").is_err());
        assert!(FreeProductPresentation::parse("orders: 2 1").is_err());
        assert!(FreeProductPresentation::parse("2 3").is_err());
    }

    #[test]
    fn inverse_and_powers() {
        let p = p23();
        let w = p.parse_word("g1 g2 g1 g2^2").unwrap();
        assert!(p.multiply(&w, &p.inverse(&w)).is_empty());
        assert_eq!(p.pow(&w, 3), p.multiply(&w, &p.multiply(&w, &w)));
        assert_eq!(p.pow(&w, -1), p.inverse(&w));
    }
}
