//! Free products of finite cyclic groups acting on their Bass–Serre trees:
//! normal-form words, ends of the tree, and clopen sets of ends.

pub mod end;
pub mod region;
pub mod word;

pub use end::{tree_gromov_product, End, TreeError, WordClass};
pub use region::{Cylinder, RegionEnds};
pub use word::{FreeProductPresentation, PresentationError, Syllable, Word};

impl FreeProductPresentation {
    /// Searches products of at most `radius` generators (and inverses), in
    /// order of length, for two loxodromics with disjoint fixed-end pairs.
    pub fn find_independent_loxodromics(
        &self,
        generators: &[Word],
        radius: usize,
    ) -> Option<(Word, Word)> {
        let mut letters: Vec<Word> = vec![];
        for g in generators {
            letters.push(g.clone());
            letters.push(self.inverse(g));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut found: Vec<(Word, End, End)> = vec![];
        let mut layer = vec![Word::identity()];
        for _ in 0..radius {
            let mut next = vec![];
            for w in &layer {
                for l in &letters {
                    let v = self.multiply(w, l);
                    if !seen.insert(v.clone()) {
                        continue;
                    }
                    if let Ok((plus, minus)) = self.fixed_ends(&v) {
                        for (f, fp, fm) in &found {
                            if fp != &plus && fp != &minus && fm != &plus && fm != &minus {
                                return Some((f.clone(), v));
                            }
                        }
                        found.push((v.clone(), plus, minus));
                    }
                    next.push(v);
                }
            }
            layer = next;
        }
        None
    }
}
