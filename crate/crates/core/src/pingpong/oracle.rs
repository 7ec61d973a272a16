use std::fmt;

use super::backend::Backend;
use super::certificate::PingPongCertificate;

/// A word in generators `y_1, …, y_m`, as runs `(generator index, exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord {
    pub runs: Vec<(usize, i64)>,
}

impl GeneratorWord {
    /// Compresses a letter sequence; letter `2i` is `y_i`, `2i + 1` is `y_i^-1`.
    fn from_letters(letters: &[usize]) -> Self {
        let mut runs: Vec<(usize, i64)> = vec![];
        for &l in letters {
            let (g, e) = (l / 2, if l % 2 == 0 { 1 } else { -1 });
            match runs.last_mut() {
                Some((h, n)) if *h == g => *n += e,
                _ => runs.push((g, e)),
            }
        }
        GeneratorWord { runs }
    }

    pub fn letter_count(&self) -> usize {
        self.runs.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Renders with the given generator names, e.g. `s^2` or `y1 y2^-1`.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .runs
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{e}", names[g])
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.runs.iter().map(|r| r.0).max().unwrap_or(0))
            .map(|i| format!("y{}", i + 1))
            .collect();
        f.write_str(&self.render(&names))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleResult {
    NoRelation,
    Relation(GeneratorWord),
}

/// Calls `visit` on every nonempty freely reduced letter sequence of length
/// exactly `len`, with the running product. Stops early when `visit` returns
/// `true`, and returns that sequence.
fn walk_reduced<B: Backend>(
    be: &B,
    letters: &[B::Iso],
    len: usize,
    prefix: &mut Vec<usize>,
    acc: &B::Iso,
    visit: &mut impl FnMut(&[usize], &B::Iso) -> bool,
) -> bool {
    if prefix.len() == len {
        return visit(prefix, acc);
    }
    for (l, iso) in letters.iter().enumerate() {
        if let Some(&prev) = prefix.last() {
            if prev ^ 1 == l {
                continue;
            }
        }
        prefix.push(l);
        let next = be.compose(acc, iso);
        if walk_reduced(be, letters, len, prefix, &next, visit) {
            return true;
        }
        prefix.pop();
    }
    false
}

fn letters_of<B: Backend>(be: &B, generators: &[B::Iso]) -> Vec<B::Iso> {
    generators
        .iter()
        .flat_map(|g| [g.clone(), be.inverse(g)])
        .collect()
}

/// Looks for a nonempty freely reduced word of length at most `max_length`
/// that evaluates to the identity; shorter words are tried first.
pub fn freeness_oracle<B: Backend>(
    be: &B,
    generators: &[B::Iso],
    max_length: usize,
) -> OracleResult {
    let letters = letters_of(be, generators);
    for len in 1..=max_length {
        let mut prefix = vec![];
        let mut hit = None;
        walk_reduced(be, &letters, len, &mut prefix, &be.identity(), &mut |w, iso| {
            if be.is_identity(iso) {
                hit = Some(GeneratorWord::from_letters(w));
                true
            } else {
                false
            }
        });
        if let Some(w) = hit {
            return OracleResult::Relation(w);
        }
    }
    OracleResult::NoRelation
}

/// Checks that every nonempty reduced word `w` of length at most `max_length`
/// in the certificate's generators sends `f+` into `C_{i_1}` (the region of
/// its first letter) and away from `f+`. Returns the number of words checked,
/// or the first offending word.
pub fn witness_exclusion<B: Backend>(
    cert: &PingPongCertificate<B>,
    max_length: usize,
) -> Result<usize, GeneratorWord> {
    let be = &cert.backend;
    let ys = cert.generators();
    let letters = letters_of(be, &ys);
    let c: Vec<B::Region> = (0..cert.len()).map(|i| cert.c_region(i)).collect();
    let mut count = 0;
    for len in 1..=max_length {
        let mut bad = None;
        let mut prefix = vec![];
        walk_reduced(be, &letters, len, &mut prefix, &be.identity(), &mut |w, iso| {
            count += 1;
            let image = be.apply(iso, &cert.witness);
            let first = w[0] / 2;
            if image == cert.witness || !be.contains(&c[first], &image) {
                bad = Some(GeneratorWord::from_letters(w));
                return true;
            }
            false
        });
        if let Some(w) = bad {
            return Err(w);
        }
    }
    Ok(count)
}

/// Fixed points of every loxodromic product of at most `radius` generators
/// and inverses, without repeats, in order of discovery.
pub fn sample_limit_set<B: Backend>(be: &B, generators: &[B::Iso], radius: usize) -> Vec<B::Point> {
    let letters = letters_of(be, generators);
    let mut points: Vec<B::Point> = vec![];
    let mut seen: Vec<B::Iso> = vec![];
    let mut layer = vec![be.identity()];
    for _ in 0..radius {
        let mut next = vec![];
        for w in &layer {
            for l in &letters {
                let v = be.compose(w, l);
                if seen.contains(&v) {
                    continue;
                }
                if let Some((p, m)) = be.fixed_points(&v) {
                    for q in [p, m] {
                        if !points.contains(&q) {
                            points.push(q);
                        }
                    }
                }
                seen.push(v.clone());
                next.push(v);
            }
        }
        layer = next;
    }
    points
}
