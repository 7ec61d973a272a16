use std::collections::HashSet;
use std::fmt;

use super::group::{FiniteGroup, GroupError};

/// Closure computations allowed by default in one invariable-generation run.
pub const DEFAULT_BUDGET: usize = 1_000_000;
/// `check_invgen_criterion` refuses groups larger than this.
pub const INVGEN_CRITERION_LIMIT: usize = 24;

struct Search<'a> {
    g: &'a FiniteGroup,
    classes: Vec<Vec<usize>>,
    budget: usize,
    spent: usize,
    good: HashSet<(usize, Vec<bool>)>,
}

impl Search<'_> {
    /// Returns a failing choice of conjugates extending `chosen`, if any.
    fn run(&mut self, chosen: &mut Vec<usize>) -> Result<Option<Vec<usize>>, GroupError> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(GroupError::BudgetExceeded(self.budget));
        }
        let mask = self.g.closure_mask(chosen);
        let i = chosen.len();
        if mask.iter().all(|&b| b) {
            return Ok(None);
        }
        if i == self.classes.len() {
            return Ok(Some(chosen.clone()));
        }
        let key = (i, mask);
        if self.good.contains(&key) {
            return Ok(None);
        }
        // Members already inside the closure all lead to the same state.
        let mut inside_tried = false;
        for c in self.classes[i].clone() {
            if key.1[c] {
                if inside_tried {
                    continue;
                }
                inside_tried = true;
            }
            chosen.push(c);
            let r = self.run(chosen)?;
            chosen.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        self.good.insert(key);
        Ok(None)
    }
}

impl FiniteGroup {
    /// A choice of one conjugate per element of `s` that fails to generate,
    /// or `None` when every choice generates. The conjugate of the first
    /// element is fixed to itself, since conjugating a whole choice by one
    /// element does not change what it generates.
    pub fn invariable_failure(
        &self,
        s: &[usize],
        budget: usize,
    ) -> Result<Option<Vec<usize>>, GroupError> {
        if let Some(&bad) = s.iter().find(|&&x| x >= self.order()) {
            return Err(GroupError::BadElement(bad));
        }
        let mut classes: Vec<Vec<usize>> = s.iter().map(|&x| self.conjugacy_class(x)).collect();
        if let Some(first) = classes.first_mut() {
            *first = vec![s[0]];
        }
        let mut search = Search {
            g: self,
            classes,
            budget,
            spent: 0,
            good: HashSet::new(),
        };
        search.run(&mut vec![])
    }

    /// Whether every choice of conjugates of the members of `s` generates
    /// the group.
    pub fn invariably_generates(&self, s: &[usize], budget: usize) -> Result<bool, GroupError> {
        Ok(self.invariable_failure(s, budget)?.is_none())
    }

    /// Generating sets none of whose proper subsets generate, as sorted index
    /// lists. Supersets of a set containing a redundant element are skipped.
    pub fn minimal_generating_sets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![];
        let mut current = vec![];
        self.extend_irredundant(&mut current, 0, &mut out);
        out
    }

    fn extend_irredundant(&self, current: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        let mask = self.closure_mask(current);
        if mask.iter().all(|&b| b) {
            out.push(current.clone());
            return;
        }
        for (e, &inside) in mask.iter().enumerate().skip(from) {
            if inside {
                continue;
            }
            current.push(e);
            let irredundant = (0..current.len() - 1).all(|j| {
                let rest: Vec<usize> = current
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &x)| x)
                    .collect();
                !self.closure_mask(&rest)[current[j]]
            });
            if irredundant {
                self.extend_irredundant(current, e + 1, out);
            }
            current.pop();
        }
    }

    /// Computes both sides of "every generating set is invariable iff all
    /// maximal subgroups are normal". A generating set is invariable as soon
    /// as a subset is, so only minimal generating sets are tested, and
    /// results are shared between sets with the same multiset of classes.
    pub fn check_invgen_criterion(&self, budget: usize) -> Result<InvGenReport, GroupError> {
        if self.order() > INVGEN_CRITERION_LIMIT {
            return Err(GroupError::GroupTooLarge {
                order: self.order(),
                limit: INVGEN_CRITERION_LIMIT,
                operation: "check_invgen_criterion",
            });
        }
        let maximals_normal = self.all_maximals_normal()?;
        let ids = self.class_ids();
        let sets = self.minimal_generating_sets();
        let mut tried: HashSet<Vec<usize>> = HashSet::new();
        let mut witness = None;
        for set in &sets {
            let mut key: Vec<usize> = set.iter().map(|&x| ids[x]).collect();
            key.sort_unstable();
            if !tried.insert(key) {
                continue;
            }
            let failure = self.invariable_failure(set, budget)?;
            if let Some(conjugates) = failure {
                witness = Some(InvGenWitness {
                    generating_set: set.clone(),
                    conjugates,
                });
                break;
            }
        }
        Ok(InvGenReport {
            maximals_normal,
            every_generating_set_invariable: witness.is_none(),
            minimal_generating_sets: sets.len(),
            witness,
        })
    }
}

/// A generating set together with a choice of conjugates that does not
/// generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvGenWitness {
    pub generating_set: Vec<usize>,
    pub conjugates: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvGenReport {
    pub maximals_normal: bool,
    pub every_generating_set_invariable: bool,
    pub minimal_generating_sets: usize,
    pub witness: Option<InvGenWitness>,
}

impl InvGenReport {
    pub fn agree(&self) -> bool {
        self.maximals_normal == self.every_generating_set_invariable
    }

    /// Renders the report with element labels taken from `g`.
    pub fn display<'a>(&'a self, g: &'a FiniteGroup) -> impl fmt::Display + 'a {
        ReportDisplay { r: self, g }
    }
}

struct ReportDisplay<'a> {
    r: &'a InvGenReport,
    g: &'a FiniteGroup,
}

impl fmt::Display for ReportDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.r;
        writeln!(f, "all maximal subgroups normal: {}", r.maximals_normal)?;
        writeln!(
            f,
            "every generating set invariable: {} ({} minimal generating sets)",
            r.every_generating_set_invariable, r.minimal_generating_sets
        )?;
        if let Some(w) = &r.witness {
            writeln!(
                f,
                "witness: {} generates, conjugates {} do not",
                self.g.format_set(&w.generating_set),
                self.g.format_set(&w.conjugates)
            )?;
        }
        write!(f, "agree: {}", r.agree())
    }
}
