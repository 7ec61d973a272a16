use std::collections::HashMap;
use std::fmt;

use crate::text::{content_lines, tokens, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group of order {order} exceeds the limit {limit} for {operation}")]
    GroupTooLarge {
        order: usize,
        limit: usize,
        operation: &'static str,
    },
    #[error("search budget of {0} steps exceeded")]
    BudgetExceeded(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element index {0} out of range")]
    BadElement(usize),
}

/// Orders above this are refused when closing permutation generators.
pub const PERMUTATION_ORDER_LIMIT: usize = 5040;

/// Groups up to this order get an exhaustive associativity check; larger ones
/// use Light's test over a generating set.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

/// A finite group given by its multiplication table. Elements are the indices
/// `0..n`; `mul(a, b)` is the index of `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a table given row by row. Labels default to the indices.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::BadElement(x));
                }
            }
            table.extend_from_slice(row);
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(GroupError::NotAGroup(format!(
                    "{} labels for {n} elements",
                    l.len()
                )))
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a * n + b] == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {a} has no inverse")))?;
            if table[inv * n + a] != identity {
                return Err(GroupError::NotAGroup(format!(
                    "left and right inverses of {a} differ"
                )));
            }
            inverses[a] = inv;
        }
        let g = FiniteGroup {
            n,
            table,
            identity,
            inverses,
            labels,
        };
        g.check_latin()?;
        g.check_associative()?;
        Ok(g)
    }

    fn check_latin(&self) -> Result<(), GroupError> {
        let n = self.n;
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.mul(a, b)] = true;
                col[self.mul(b, a)] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(GroupError::NotAGroup(format!(
                    "element {a} repeats in its row or column"
                )));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<(), GroupError> {
        let middles: Vec<usize> = if self.n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            (0..self.n).collect()
        } else {
            self.magma_generators()
        };
        for &b in &middles {
            for a in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// A set whose closure under the (not yet trusted) table product is
    /// everything. Light's test only needs middle elements from such a set.
    fn magma_generators(&self) -> Vec<usize> {
        let mut gens = vec![];
        let mut reached = vec![false; self.n];
        for x in 0..self.n {
            if reached[x] {
                continue;
            }
            gens.push(x);
            let mut stack: Vec<usize> = (0..self.n).filter(|&i| reached[i]).collect();
            stack.extend(&gens);
            for &g in &gens {
                reached[g] = true;
            }
            while let Some(a) = stack.pop() {
                for &g in &gens {
                    for c in [self.mul(a, g), self.mul(g, a)] {
                        if !reached[c] {
                            reached[c] = true;
                            stack.push(c);
                        }
                    }
                }
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    /// Number of elements of each order, sorted by order.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for a in self.elements() {
            *counts.entry(self.element_order(a)).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|a| self.element_order(a) == self.n)
    }

    /// The conjugacy class of `x`, sorted.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self.elements().map(|g| self.conjugate(x, g)).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Class index of each element; classes are numbered by smallest member.
    pub fn class_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.n];
        let mut next = 0;
        for x in self.elements() {
            if ids[x] == usize::MAX {
                for y in self.conjugacy_class(x) {
                    ids[y] = next;
                }
                next += 1;
            }
        }
        ids
    }

    /// A short structural name: `1`, `C12`, or `C2 x C2 x C3` for non-cyclic
    /// abelian groups (primary decomposition), otherwise
    /// `nonabelian of order n`.
    pub fn describe(&self) -> String {
        if self.n == 1 {
            return "1".into();
        }
        if self.is_cyclic() {
            return format!("C{}", self.n);
        }
        if !self.is_abelian() {
            return format!("nonabelian of order {}", self.n);
        }
        let mut factors = vec![];
        for (p, alpha) in factorize(self.n) {
            // Number of elements killed by p^k is p^(sum_i min(k, e_i)).
            let killed = |k: u32| {
                let pk = p.pow(k);
                self.elements()
                    .filter(|&a| pk % self.element_order(a) == 0)
                    .count()
            };
            let mut logs = vec![0u32];
            for k in 1..=alpha {
                logs.push(ilog(killed(k), p));
            }
            // Cyclic factors of order >= p^k number logs[k] - logs[k-1].
            let at_least: Vec<u32> = (1..=alpha as usize).map(|k| logs[k] - logs[k - 1]).collect();
            for k in (1..=alpha as usize).rev() {
                let next = at_least.get(k).copied().unwrap_or(0);
                for _ in 0..(at_least[k - 1] - next) {
                    factors.push(p.pow(k as u32));
                }
            }
        }
        factors
            .iter()
            .map(|m| format!("C{m}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }

    /// Replaces the element labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    /// The same group with element `a` renumbered `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, GroupError> {
        let n = self.n;
        let mut back = vec![usize::MAX; n];
        for (a, &b) in perm.iter().enumerate() {
            if b >= n || back[b] != usize::MAX {
                return Err(GroupError::NotAGroup("relabelling is not a permutation".into()));
            }
            back[b] = a;
        }
        if perm.len() != n {
            return Err(GroupError::NotAGroup("relabelling has the wrong length".into()));
        }
        let rows = (0..n)
            .map(|x| (0..n).map(|y| perm[self.mul(back[x], back[y])]).collect())
            .collect();
        let labels = (0..n).map(|x| self.labels[back[x]].clone()).collect();
        FiniteGroup::from_table(rows, Some(labels))
    }

    /// Writes the table format read by [`FiniteGroup::parse_cayley`].
    pub fn to_cayley(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for a in self.elements() {
            let row: Vec<String> = self.row(a).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Reads a Cayley table: the order `n` on the first line, then `n` rows
    /// of `n` zero-based indices. `#` lines are comments.
    pub fn parse_cayley(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let (ln, first) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, "empty table"))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| ParseError::new(ln, 1, format!("bad order {:?}", first.trim())))?;
        if n == 0 {
            return Err(ParseError::new(ln, 1, "order must be positive"));
        }
        if n > PERMUTATION_ORDER_LIMIT {
            return Err(ParseError::new(
                ln,
                1,
                format!("order {n} exceeds {PERMUTATION_ORDER_LIMIT}"),
            ));
        }
        let mut rows = Vec::with_capacity(n);
        let mut last = ln;
        for _ in 0..n {
            let (ln, line) = lines.next().ok_or_else(|| {
                ParseError::new(last + 1, 1, format!("expected {n} rows, found {}", rows.len()))
            })?;
            last = ln;
            let mut row = Vec::with_capacity(n);
            for (col, tok) in tokens(line) {
                let x: usize = tok
                    .parse()
                    .map_err(|_| ParseError::new(ln, col, format!("bad index {tok:?}")))?;
                if x >= n {
                    return Err(ParseError::new(ln, col, format!("index {x} out of range")));
                }
                row.push(x);
            }
            if row.len() != n {
                return Err(ParseError::new(
                    ln,
                    1,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
        if let Some((ln, _)) = lines.next() {
            return Err(ParseError::new(ln, 1, "extra rows after the table"));
        }
        FiniteGroup::from_table(rows, None).map_err(|e| ParseError::new(1, 1, e.to_string()))
    }

    /// Closes a list of permutations (images of `0..degree`) into a group.
    /// Element 0 is the identity; the rest follow in breadth-first order.
    pub fn from_permutations(generators: &[Vec<usize>], degree: usize) -> Result<Self, GroupError> {
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in generators {
                let p: Vec<usize> = (0..degree).map(|x| g[elems[i][x]]).collect();
                if !index.contains_key(&p) {
                    if elems.len() == PERMUTATION_ORDER_LIMIT {
                        return Err(GroupError::GroupTooLarge {
                            order: PERMUTATION_ORDER_LIMIT + 1,
                            limit: PERMUTATION_ORDER_LIMIT,
                            operation: "permutation closure",
                        });
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        // Product ab means "a, then b" to match left-to-right cycle reading.
        let rows = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let ab: Vec<usize> = (0..degree).map(|x| b[a[x]]).collect();
                        index[&ab]
                    })
                    .collect()
            })
            .collect();
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(rows, Some(labels))
    }

    /// Reads permutation generators in cycle notation on points `1, 2, …`,
    /// one generator per line, e.g. `(1 2)(3 4)`. `()` is the identity.
    pub fn parse_permutations(text: &str) -> Result<Self, ParseError> {
        let mut gens: Vec<(usize, Vec<Vec<usize>>)> = vec![];
        let mut degree = 0;
        for (ln, line) in content_lines(text) {
            let cycles = parse_cycles(line).map_err(|e| e.relocate(ln, 0))?;
            for c in &cycles {
                degree = degree.max(c.iter().copied().max().unwrap_or(0));
            }
            gens.push((ln, cycles));
        }
        if degree > 64 {
            return Err(ParseError::new(1, 1, format!("degree {degree} exceeds 64")));
        }
        let perms: Vec<Vec<usize>> = gens
            .iter()
            .map(|(_, cycles)| {
                let mut p: Vec<usize> = (0..degree).collect();
                for c in cycles {
                    for (j, &x) in c.iter().enumerate() {
                        p[x - 1] = c[(j + 1) % c.len()] - 1;
                    }
                }
                p
            })
            .collect();
        FiniteGroup::from_permutations(&perms, degree)
            .map_err(|e| ParseError::new(1, 1, e.to_string()))
    }

    /// Labels of a set of elements, e.g. `{0,2}`.
    pub fn format_set(&self, elements: &[usize]) -> String {
        let parts: Vec<&str> = elements.iter().map(|&a| self.label(a)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {} ({})", self.n, self.describe())
    }
}

fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut cycles = vec![];
    let mut current: Option<Vec<usize>> = None;
    let mut num = String::new();
    let mut num_col = 0;
    let flush = |num: &mut String, col: usize, cur: &mut Option<Vec<usize>>| {
        if num.is_empty() {
            return Ok(());
        }
        let x: usize = num
            .parse()
            .map_err(|_| ParseError::at(col, format!("bad point {num:?}")))?;
        if x == 0 {
            return Err(ParseError::at(col, "points are numbered from 1"));
        }
        if x > 64 {
            return Err(ParseError::at(col, "points above 64 are not supported"));
        }
        let c = cur.as_mut().expect("digits are only accepted inside a cycle");
        if c.contains(&x) {
            return Err(ParseError::at(col, format!("point {x} repeats in a cycle")));
        }
        c.push(x);
        num.clear();
        Ok(())
    };
    for (i, ch) in line.chars().enumerate() {
        let col = i + 1;
        match ch {
            '(' if current.is_none() => current = Some(vec![]),
            ')' if current.is_some() => {
                flush(&mut num, num_col, &mut current)?;
                cycles.push(current.take().expect("checked"));
            }
            '0'..='9' if current.is_some() => {
                if num.is_empty() {
                    num_col = col;
                }
                num.push(ch);
            }
            ' ' | ',' | '\t' if current.is_some() => flush(&mut num, num_col, &mut current)?,
            c if c.is_whitespace() => {}
            c => return Err(ParseError::at(col, format!("unexpected {c:?}"))),
        }
    }
    if current.is_some() {
        return Err(ParseError::at(line.chars().count() + 1, "unclosed cycle"));
    }
    if cycles.is_empty() {
        return Err(ParseError::at(1, "expected a permutation in cycle notation"));
    }
    // Cycles must be disjoint so that the reading is unambiguous.
    let mut seen = vec![];
    for c in &cycles {
        for &x in c {
            if seen.contains(&x) {
                return Err(ParseError::at(1, format!("point {x} appears in two cycles")));
            }
            seen.push(x);
        }
    }
    Ok(cycles)
}

/// Cycle notation on points `1, 2, …`, fixed points omitted; `()` for the
/// identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![];
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Prime factorization as `(p, alpha)` pairs, increasing in `p`.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = vec![];
    let mut p = 2;
    while p * p <= n {
        let mut a = 0;
        while n.is_multiple_of(p) {
            n /= p;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}
