use std::fmt;

use super::end::{End, TreeError};
use super::word::{FreeProductPresentation, Syllable, Word};
use crate::text::ParseError;

/// All ends whose reduced expansion begins with `prefix`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cylinder {
    prefix: Word,
}

impl Cylinder {
    /// `None` for the empty prefix (that set is the whole boundary).
    pub fn new(prefix: Word) -> Option<Self> {
        (!prefix.is_empty()).then_some(Cylinder { prefix })
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn contains(&self, e: &End) -> bool {
        e.prefix(self.prefix.len()) == self.prefix
    }
}

impl fmt::Display for Cylinder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.prefix)
    }
}

/// A clopen set of ends, stored as a trie over reduced words. Every node is
/// either a leaf (its whole cylinder is in or out) or branches over all
/// syllables that may follow. A branch whose children are identical leaves
/// is collapsed, which makes the representation canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegionEnds {
    root: Node,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(bool),
    Branch(Vec<Node>),
}

impl Node {
    fn collapse(children: Vec<Node>) -> Node {
        match children.first() {
            Some(Node::Leaf(b)) if children.iter().all(|c| c == &Node::Leaf(*b)) => Node::Leaf(*b),
            _ => Node::Branch(children),
        }
    }

    fn complement(&self) -> Node {
        match self {
            Node::Leaf(b) => Node::Leaf(!b),
            Node::Branch(cs) => Node::Branch(cs.iter().map(Node::complement).collect()),
        }
    }

    fn combine(&self, other: &Node, op: &impl Fn(bool, bool) -> bool) -> Node {
        match (self, other) {
            (Node::Leaf(a), Node::Leaf(b)) => Node::Leaf(op(*a, *b)),
            (Node::Leaf(_), Node::Branch(cs)) => {
                Node::collapse(cs.iter().map(|c| self.combine(c, op)).collect())
            }
            (Node::Branch(cs), Node::Leaf(_)) => {
                Node::collapse(cs.iter().map(|c| c.combine(other, op)).collect())
            }
            (Node::Branch(xs), Node::Branch(ys)) => Node::collapse(
                xs.iter().zip(ys).map(|(x, y)| x.combine(y, op)).collect(),
            ),
        }
    }
}

fn child_index(p: &FreeProductPresentation, after: Option<usize>, s: Syllable) -> usize {
    let below: u32 = p.orders()[..s.factor].iter().map(|m| m - 1).sum();
    let mut idx = (below + s.exp - 1) as usize;
    if let Some(a) = after {
        debug_assert_ne!(a, s.factor);
        if a < s.factor {
            idx -= (p.order(a) - 1) as usize;
        }
    }
    idx
}

impl RegionEnds {
    pub fn empty() -> Self {
        RegionEnds {
            root: Node::Leaf(false),
        }
    }

    pub fn full() -> Self {
        RegionEnds {
            root: Node::Leaf(true),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.root == Node::Leaf(false)
    }

    pub fn is_full(&self) -> bool {
        self.root == Node::Leaf(true)
    }

    /// The set of ends beginning with `prefix`; the full set for `e`.
    pub fn from_prefix(p: &FreeProductPresentation, prefix: &Word) -> Self {
        let mut node = Node::Leaf(true);
        let syl = prefix.syllables();
        for i in (0..syl.len()).rev() {
            let after = i.checked_sub(1).map(|j| syl[j].factor);
            let succ = p.successors(after);
            let at = child_index(p, after, syl[i]);
            let children = (0..succ.len())
                .map(|j| if j == at { node.clone() } else { Node::Leaf(false) })
                .collect();
            node = Node::collapse(children);
        }
        RegionEnds { root: node }
    }

    pub fn from_cylinder(p: &FreeProductPresentation, c: &Cylinder) -> Self {
        Self::from_prefix(p, &c.prefix)
    }

    pub fn union(&self, other: &Self) -> Self {
        RegionEnds {
            root: self.root.combine(&other.root, &|a, b| a || b),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        RegionEnds {
            root: self.root.combine(&other.root, &|a, b| a && b),
        }
    }

    pub fn complement(&self) -> Self {
        RegionEnds {
            root: self.root.complement(),
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.root.combine(&other.root, &|a, b| a && !b) == Node::Leaf(false)
    }

    pub fn contains(&self, p: &FreeProductPresentation, e: &End) -> bool {
        let mut node = &self.root;
        let mut after = None;
        let mut i = 0;
        loop {
            match node {
                Node::Leaf(b) => return *b,
                Node::Branch(cs) => {
                    let s = e.syllable(i);
                    node = &cs[child_index(p, after, s)];
                    after = Some(s.factor);
                    i += 1;
                }
            }
        }
    }

    /// The maximal cylinders making up the region, in trie order. The full
    /// region is the single empty prefix.
    pub fn prefixes(&self, p: &FreeProductPresentation) -> Vec<Word> {
        fn walk(
            p: &FreeProductPresentation,
            node: &Node,
            path: &mut Vec<Syllable>,
            out: &mut Vec<Word>,
        ) {
            match node {
                Node::Leaf(true) => out.push(Word::from_normal(path.clone())),
                Node::Leaf(false) => {}
                Node::Branch(cs) => {
                    let succ = p.successors(path.last().map(|s| s.factor));
                    for (s, c) in succ.into_iter().zip(cs) {
                        path.push(s);
                        walk(p, c, path, out);
                        path.pop();
                    }
                }
            }
        }
        let mut out = vec![];
        walk(p, &self.root, &mut vec![], &mut out);
        out
    }

    /// Image of the region under `w`, exact at every depth.
    pub fn image(&self, p: &FreeProductPresentation, w: &Word) -> Self {
        self.prefixes(p)
            .iter()
            .map(|u| prefix_image(p, w, u))
            .fold(Self::empty(), |acc, r| acc.union(&r))
    }

    /// The cylinder of the first `level + 1` syllables of `e`.
    pub fn neighborhood(p: &FreeProductPresentation, e: &End, level: u32) -> Self {
        Self::from_prefix(p, &e.prefix(level as usize + 1))
    }

    /// Parses `empty`, `full`, or bracketed prefixes `[g1 g2] [g2^2]`.
    pub fn parse(p: &FreeProductPresentation, s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        if t == "empty" {
            return Ok(Self::empty());
        }
        if t == "full" {
            return Ok(Self::full());
        }
        let mut region = Self::empty();
        let mut rest = s;
        let mut col = 1;
        loop {
            let trimmed = rest.trim_start();
            col += rest.chars().count() - trimmed.chars().count();
            if trimmed.is_empty() {
                break;
            }
            let Some(body) = trimmed.strip_prefix('[') else {
                return Err(ParseError::at(col, "expected '['"));
            };
            let Some(close) = body.find(']') else {
                return Err(ParseError::at(col, "unclosed '['"));
            };
            let word = p
                .parse_word(&body[..close])
                .map_err(|e| e.relocate(1, col))?;
            if word.is_empty() {
                return Err(ParseError::at(col, "empty cylinder prefix"));
            }
            region = region.union(&Self::from_prefix(p, &word));
            let used = &trimmed[..close + 2];
            col += used.chars().count();
            rest = &trimmed[close + 2..];
        }
        if region.is_empty() {
            return Err(ParseError::at(1, "no cylinders (write 'empty')"));
        }
        Ok(region)
    }

    pub fn display(&self, p: &FreeProductPresentation) -> String {
        if self.is_empty() {
            return "empty".into();
        }
        if self.is_full() {
            return "full".into();
        }
        let parts: Vec<String> = self
            .prefixes(p)
            .iter()
            .map(|w| format!("[{w}]"))
            .collect();
        parts.join(" ")
    }
}

/// `w · {ends beginning with u}`.
fn prefix_image(p: &FreeProductPresentation, w: &Word, u: &Word) -> RegionEnds {
    let Some(last) = u.last() else {
        return RegionEnds::full();
    };
    let u_inv = p.inverse(u);
    let ws = w.syllables();
    let fully_cancelled =
        ws.len() >= u_inv.len() && ws[ws.len() - u_inv.len()..] == *u_inv.syllables();
    if !fully_cancelled {
        // the last syllable of u survives, possibly merged, so no end after it
        // can cancel
        return RegionEnds::from_prefix(p, &p.multiply(w, u));
    }
    // w = w'·u⁻¹ and the image is w'·{ends not starting in u's last factor}
    let w_short = w.slice(0, ws.len() - u_inv.len());
    let excluded = (1..p.order(last.factor))
        .map(|exp| {
            let x = Word::from_normal(vec![Syllable {
                factor: last.factor,
                exp,
            }]);
            RegionEnds::from_prefix(p, &p.multiply(&w_short, &x))
        })
        .fold(RegionEnds::empty(), |acc, r| acc.union(&r));
    excluded.complement()
}

impl FreeProductPresentation {
    /// Image of a cylinder whose prefix is longer than `w`, which is always a
    /// cylinder again.
    pub fn image_cylinder(&self, w: &Word, c: &Cylinder) -> Result<Cylinder, TreeError> {
        if c.prefix.len() <= w.len() {
            return Err(TreeError::PrefixTooShallow {
                prefix: c.prefix.len(),
                word: w.len(),
            });
        }
        Ok(Cylinder {
            prefix: self.multiply(w, &c.prefix),
        })
    }

    /// Splits a cylinder into the cylinders of all reduced extensions of its
    /// prefix to `depth` syllables.
    pub fn deepen(&self, c: &Cylinder, depth: usize) -> Vec<Cylinder> {
        let mut layer = vec![c.prefix.clone()];
        for _ in c.prefix.len()..depth {
            layer = layer
                .into_iter()
                .flat_map(|w| {
                    self.successors(w.last().map(|s| s.factor))
                        .into_iter()
                        .map(move |s| {
                            let mut syl = w.syllables().to_vec();
                            syl.push(s);
                            Word::from_normal(syl)
                        })
                })
                .collect();
        }
        layer.into_iter().map(|prefix| Cylinder { prefix }).collect()
    }
}
