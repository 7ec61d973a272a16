use std::collections::{HashSet, VecDeque};

use super::group::{FiniteGroup, GroupError};
use crate::text::ParseError;

/// Subgroup lattice operations refuse groups larger than this.
pub const LATTICE_LIMIT: usize = 200;
/// `non_generators` refuses groups larger than this.
pub const NON_GENERATOR_LIMIT: usize = 64;

/// A subgroup of a [`FiniteGroup`], as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
}

impl Subgroup {
    fn from_mask(mask: &[bool]) -> Self {
        Subgroup {
            parent_order: mask.len(),
            elements: (0..mask.len()).filter(|&i| mask[i]).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// Index list such as `{0,2}`.
    pub fn to_index_list(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Reads an index list and checks that it is a subgroup of `g`.
    pub fn parse(g: &FiniteGroup, s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| ParseError::at(1, "expected {i,j,...}"))?;
        let mut mask = vec![false; g.order()];
        if !inner.trim().is_empty() {
            let base = s.find('{').unwrap_or(0) + 2;
            let mut col = base;
            for part in inner.split(',') {
                let p = part.trim();
                let x: usize = p
                    .parse()
                    .map_err(|_| ParseError::at(col, format!("bad index {p:?}")))?;
                if x >= g.order() {
                    return Err(ParseError::at(col, format!("index {x} out of range")));
                }
                mask[x] = true;
                col += part.len() + 1;
            }
        }
        let sub = Subgroup::from_mask(&mask);
        if !g.is_subgroup(&sub) {
            return Err(ParseError::at(1, "not closed under the group law"));
        }
        Ok(sub)
    }
}

/// A quotient `G/N`: the coset group and the projection `G -> G/N`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
}

fn too_large(g: &FiniteGroup, limit: usize, operation: &'static str) -> Result<(), GroupError> {
    if g.order() > limit {
        Err(GroupError::GroupTooLarge {
            order: g.order(),
            limit,
            operation,
        })
    } else {
        Ok(())
    }
}

impl FiniteGroup {
    /// Membership mask of the subgroup generated by `seeds`.
    pub(crate) fn closure_mask(&self, seeds: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// The smallest subgroup containing `seeds`; the trivial subgroup when
    /// `seeds` is empty.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> Subgroup {
        Subgroup::from_mask(&self.closure_mask(seeds))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(&vec![true; self.order()])
    }

    pub fn trivial(&self) -> Subgroup {
        self.generated_subgroup(&[])
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        h.parent_order == self.order()
            && h.contains(self.identity())
            && h.elements.iter().all(|&a| {
                h.contains(self.inv(a)) && h.elements.iter().all(|&b| h.contains(self.mul(a, b)))
            })
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements()
            .all(|g| h.elements.iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    /// Every subgroup, found by closing known subgroups under one extra
    /// element at a time starting from the trivial one. Sorted by order,
    /// then by elements.
    pub fn subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        too_large(self, LATTICE_LIMIT, "the subgroup lattice")?;
        let trivial = self.trivial();
        let mut seen: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
        let mut queue: VecDeque<(Subgroup, Vec<usize>)> = VecDeque::from([(trivial, vec![])]);
        while let Some((h, gens)) = queue.pop_front() {
            for g in self.elements() {
                if h.contains(g) {
                    continue;
                }
                let mut seeds = gens.clone();
                seeds.push(g);
                let k = Subgroup::from_mask(&self.closure_mask(&seeds));
                if seen.insert(k.clone()) {
                    queue.push_back((k, seeds));
                }
            }
        }
        let mut all: Vec<Subgroup> = seen.into_iter().collect();
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        Ok(all)
    }

    /// Proper subgroups not contained in any other proper subgroup. Empty
    /// for the trivial group.
    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        let lattice = self.subgroups()?;
        let proper: Vec<&Subgroup> = lattice.iter().filter(|h| !h.is_whole()).collect();
        Ok(proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.order() > h.order() && h.is_subset(k))
            })
            .map(|h| (*h).clone())
            .collect())
    }

    /// The intersection of the maximal subgroups; the whole group if there
    /// are none.
    pub fn frattini(&self) -> Result<Subgroup, GroupError> {
        let maximals = self.maximal_subgroups()?;
        let mut mask = vec![true; self.order()];
        for m in &maximals {
            let mm = m.mask();
            for (a, b) in mask.iter_mut().zip(mm) {
                *a &= b;
            }
        }
        Ok(Subgroup::from_mask(&mask))
    }

    /// Elements `g` such that `X \ {g}` generates whenever `X` does, decided
    /// straight from that definition: `g` is needed by some generating set
    /// exactly when some proper subgroup `⟨X \ {g}⟩` together with `g`
    /// generates. The proper subgroups are reached by a depth-first walk over
    /// closures of growing element sets.
    pub fn non_generators(&self) -> Result<Vec<usize>, GroupError> {
        too_large(self, NON_GENERATOR_LIMIT, "non_generators")?;
        let n = self.order();
        let mut needed = vec![false; n];
        let mut visited: HashSet<Vec<bool>> = HashSet::new();
        let mut stack: Vec<(Vec<bool>, Vec<usize>)> = vec![(self.closure_mask(&[]), vec![])];
        while let Some((h, gens)) = stack.pop() {
            if h.iter().all(|&b| b) || !visited.insert(h.clone()) {
                continue;
            }
            for g in 0..n {
                if h[g] {
                    continue;
                }
                let mut seeds = gens.clone();
                seeds.push(g);
                let k = self.closure_mask(&seeds);
                if k.iter().all(|&b| b) {
                    needed[g] = true;
                } else {
                    stack.push((k, seeds));
                }
            }
        }
        Ok((0..n).filter(|&g| !needed[g]).collect())
    }

    /// Whether the lower central series of `h` reaches the trivial subgroup.
    pub fn is_nilpotent(&self, h: &Subgroup) -> bool {
        let mut current = h.clone();
        loop {
            if current.is_trivial() {
                return true;
            }
            let mut comms: Vec<usize> = current
                .elements
                .iter()
                .flat_map(|&x| h.elements.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.commutator(x, y))
                .collect();
            comms.sort_unstable();
            comms.dedup();
            let next = self.generated_subgroup(&comms);
            if next == current {
                return false;
            }
            current = next;
        }
    }

    pub fn is_nilpotent_group(&self) -> bool {
        self.is_nilpotent(&self.whole())
    }

    /// `G/N`, after checking that `N` is normal. Cosets are numbered by
    /// their smallest element, which also supplies the coset label.
    pub fn quotient(&self, normal: &Subgroup) -> Result<QuotientGroup, GroupError> {
        if !self.is_subgroup(normal) {
            return Err(GroupError::NotAGroup("kernel is not a subgroup".into()));
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.order()];
        let mut reps = vec![];
        for a in self.elements() {
            if projection[a] != usize::MAX {
                continue;
            }
            for &x in normal.elements() {
                projection[self.mul(a, x)] = reps.len();
            }
            reps.push(a);
        }
        let rows = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| projection[self.mul(a, b)]).collect())
            .collect();
        let labels = reps.iter().map(|&a| format!("[{}]", self.label(a))).collect();
        let group = FiniteGroup::from_table(rows, Some(labels))?;
        Ok(QuotientGroup { group, projection })
    }

    pub fn frattini_quotient(&self) -> Result<QuotientGroup, GroupError> {
        self.quotient(&self.frattini()?)
    }

    pub fn all_maximals_normal(&self) -> Result<bool, GroupError> {
        Ok(self.maximal_subgroups()?.iter().all(|m| self.is_normal(m)))
    }
}
