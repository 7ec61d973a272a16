use std::fmt;

use super::map::MobiusMap;
use super::point::{strictly_between, ProjectivePoint};
use crate::arith::rational::{ceil_dyadic, floor_dyadic, pow2};
use crate::arith::Rational;
use crate::text::ParseError;

/// The arc of `RP¹` running in the positive direction from `lo` to `hi`,
/// with both endpoints included when `closed` and excluded otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularInterval {
    pub lo: ProjectivePoint,
    pub hi: ProjectivePoint,
    pub closed: bool,
}

impl CircularInterval {
    /// `None` when `lo == hi`.
    pub fn new(lo: ProjectivePoint, hi: ProjectivePoint, closed: bool) -> Option<Self> {
        (lo != hi).then_some(CircularInterval { lo, hi, closed })
    }

    pub fn contains(&self, x: &ProjectivePoint) -> bool {
        strictly_between(&self.lo, x, &self.hi) || (self.closed && (x == &self.lo || x == &self.hi))
    }

    /// Orientation-preserving maps send arcs to arcs with the mapped endpoints.
    pub fn image(&self, m: &MobiusMap) -> Self {
        CircularInterval {
            lo: m.apply(&self.lo),
            hi: m.apply(&self.hi),
            closed: self.closed,
        }
    }

    pub fn to_region(&self) -> RegionRP1 {
        RegionRP1::arc(self.lo.clone(), self.closed, self.hi.clone(), self.closed)
    }
}

/// A finite union of arcs and points of `RP¹`.
///
/// Stored as sorted breakpoints `p_0 < … < p_{k-1}` with a membership bit for
/// each breakpoint and for each open arc `(p_j, p_{j+1})` (indices mod `k`, so
/// the last arc wraps through `∞`). With no breakpoints the region is empty
/// or the whole circle. Canonical form drops any breakpoint whose bit agrees
/// with both neighbouring arcs, so equal sets have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionRP1 {
    points: Vec<ProjectivePoint>,
    point_in: Vec<bool>,
    arc_in: Vec<bool>,
    all: bool,
}

/// One connected piece of a region, as listed by [`RegionRP1::pieces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub lo: ProjectivePoint,
    pub lo_closed: bool,
    pub hi: ProjectivePoint,
    pub hi_closed: bool,
}

impl RegionRP1 {
    pub fn empty() -> Self {
        RegionRP1 {
            points: vec![],
            point_in: vec![],
            arc_in: vec![],
            all: false,
        }
    }

    pub fn full() -> Self {
        RegionRP1 {
            all: true,
            ..Self::empty()
        }
    }

    pub fn point(x: ProjectivePoint) -> Self {
        RegionRP1 {
            points: vec![x],
            point_in: vec![true],
            arc_in: vec![false],
            all: false,
        }
    }

    /// The arc from `lo` to `hi` in the positive direction. When `lo == hi`
    /// this is the single point if both ends are closed and the circle minus
    /// the point if both are open; mixed ends are rejected.
    pub fn arc(lo: ProjectivePoint, lo_closed: bool, hi: ProjectivePoint, hi_closed: bool) -> Self {
        if lo == hi {
            assert_eq!(lo_closed, hi_closed, "degenerate half-open arc");
            return RegionRP1 {
                points: vec![lo],
                point_in: vec![lo_closed],
                arc_in: vec![!lo_closed],
                all: false,
            };
        }
        let r = if lo < hi {
            RegionRP1 {
                points: vec![lo, hi],
                point_in: vec![lo_closed, hi_closed],
                arc_in: vec![true, false],
                all: false,
            }
        } else {
            RegionRP1 {
                points: vec![hi, lo],
                point_in: vec![hi_closed, lo_closed],
                arc_in: vec![false, true],
                all: false,
            }
        };
        r.canonical()
    }

    pub fn closed_arc(lo: ProjectivePoint, hi: ProjectivePoint) -> Self {
        Self::arc(lo, true, hi, true)
    }

    pub fn open_arc(lo: ProjectivePoint, hi: ProjectivePoint) -> Self {
        Self::arc(lo, false, hi, false)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && !self.all
    }

    pub fn is_full(&self) -> bool {
        self.points.is_empty() && self.all
    }

    pub fn breakpoints(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// Index of the arc that contains `x`, for `x` not a breakpoint.
    fn arc_index(&self, x: &ProjectivePoint) -> usize {
        let k = self.points.len();
        match self.points.partition_point(|p| p <= x) {
            0 => k - 1,
            n => n - 1,
        }
    }

    pub fn contains(&self, x: &ProjectivePoint) -> bool {
        if self.points.is_empty() {
            return self.all;
        }
        match self.points.binary_search(x) {
            Ok(i) => self.point_in[i],
            Err(_) => self.arc_in[self.arc_index(x)],
        }
    }

    /// Membership of the whole open arc starting at breakpoint-or-point `x`
    /// and running up to the next breakpoint of `self` (or further).
    fn arc_after(&self, x: &ProjectivePoint) -> bool {
        if self.points.is_empty() {
            return self.all;
        }
        match self.points.binary_search(x) {
            Ok(i) => self.arc_in[i],
            Err(_) => self.arc_in[self.arc_index(x)],
        }
    }

    fn canonical(mut self) -> Self {
        loop {
            let k = self.points.len();
            if k == 0 {
                return self;
            }
            let removable = (0..k).find(|&j| {
                let prev = self.arc_in[(j + k - 1) % k];
                self.point_in[j] == prev && prev == self.arc_in[j]
            });
            let Some(j) = removable else {
                return self;
            };
            if k == 1 {
                let all = self.point_in[0];
                return RegionRP1 {
                    all,
                    ..Self::empty()
                };
            }
            // arcs j-1 and j carry the same bit; dropping p_j merges them
            self.points.remove(j);
            self.point_in.remove(j);
            self.arc_in.remove(j);
        }
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let mut points: Vec<ProjectivePoint> =
            self.points.iter().chain(other.points.iter()).cloned().collect();
        points.sort();
        points.dedup();
        if points.is_empty() {
            let all = op(self.all, other.all);
            return RegionRP1 {
                all,
                ..Self::empty()
            };
        }
        let point_in = points
            .iter()
            .map(|p| op(self.contains(p), other.contains(p)))
            .collect();
        let arc_in = points
            .iter()
            .map(|p| op(self.arc_after(p), other.arc_after(p)))
            .collect();
        RegionRP1 {
            points,
            point_in,
            arc_in,
            all: false,
        }
        .canonical()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Self {
        RegionRP1 {
            points: self.points.clone(),
            point_in: self.point_in.iter().map(|b| !b).collect(),
            arc_in: self.arc_in.iter().map(|b| !b).collect(),
            all: self.points.is_empty() && !self.all,
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Image under an orientation-preserving map. Breakpoints keep their
    /// cyclic order, so the mapped list is a rotation of a sorted list.
    pub fn image(&self, m: &MobiusMap) -> Self {
        if self.points.is_empty() {
            return self.clone();
        }
        let mapped: Vec<ProjectivePoint> = self.points.iter().map(|p| m.apply(p)).collect();
        let start = (0..mapped.len())
            .min_by(|&a, &b| mapped[a].cmp(&mapped[b]))
            .expect("nonempty");
        let rot = |v: &[bool]| -> Vec<bool> {
            let mut v = v.to_vec();
            v.rotate_left(start);
            v
        };
        let mut points = mapped;
        points.rotate_left(start);
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        RegionRP1 {
            points,
            point_in: rot(&self.point_in),
            arc_in: rot(&self.arc_in),
            all: false,
        }
    }

    /// Maximal connected pieces, ordered by their starting point.
    pub fn pieces(&self) -> Vec<Piece> {
        let k = self.points.len();
        if k == 0 {
            return vec![];
        }
        // cells alternate point j (2j) and arc j (2j+1)
        let n = 2 * k;
        let cell_in = |c: usize| {
            if c.is_multiple_of(2) {
                self.point_in[c / 2]
            } else {
                self.arc_in[c / 2]
            }
        };
        let start = (0..n).find(|&c| !cell_in(c)).expect("canonical region has a gap");
        let mut pieces = vec![];
        let mut run: Option<(usize, usize)> = None;
        for off in 1..=n {
            let c = (start + off) % n;
            if cell_in(c) {
                run = Some(match run {
                    Some((first, _)) => (first, c),
                    None => (c, c),
                });
            } else if let Some((first, last)) = run.take() {
                pieces.push(self.piece(first, last));
            }
        }
        pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
        pieces
    }

    fn piece(&self, first: usize, last: usize) -> Piece {
        let k = self.points.len();
        let lo = self.points[first / 2].clone();
        let lo_closed = first.is_multiple_of(2);
        let (hi, hi_closed) = if last.is_multiple_of(2) {
            (self.points[last / 2].clone(), true)
        } else {
            (self.points[(last / 2 + 1) % k].clone(), false)
        };
        Piece {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }
    }

    /// Closed neighbourhood of `x` at level `level`: an arc with rational
    /// endpoints containing `x` in its interior, shrinking as `level` grows.
    /// For `∞` it is `[2^L, -2^L]`; for finite `x` it is a dyadic box around
    /// `x` padded by `2^-L` on each side.
    pub fn neighborhood(x: &ProjectivePoint, level: u32) -> Self {
        match x {
            ProjectivePoint::Infinity => {
                let big = pow2(level as i64);
                Self::closed_arc(
                    ProjectivePoint::rational(big.clone()),
                    ProjectivePoint::rational(-big),
                )
            }
            ProjectivePoint::Finite(z) => {
                let eps = pow2(-(level as i64));
                let (lo, hi) = z.enclosure(level + 1);
                let lo: Rational = floor_dyadic(&lo, level + 1) - &eps;
                let hi: Rational = ceil_dyadic(&hi, level + 1) + &eps;
                Self::closed_arc(ProjectivePoint::rational(lo), ProjectivePoint::rational(hi))
            }
        }
    }

    /// Parses `empty`, `full`, or pieces separated by `;`, each written
    /// `[lo,hi]`, `(lo,hi)`, `[lo,hi)` or `(lo,hi]`. `[x,x]` is a single
    /// point and `(x,x)` the circle minus `x`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        if t == "empty" {
            return Ok(Self::empty());
        }
        if t == "full" {
            return Ok(Self::full());
        }
        let mut region = Self::empty();
        let mut offset = 0usize;
        for part in s.split(';') {
            let base = offset;
            offset += part.chars().count() + 1;
            let lead = part.chars().take_while(|c| c.is_whitespace()).count();
            let body = part.trim();
            let col = base + lead + 1;
            if body.is_empty() {
                return Err(ParseError::at(col, "empty piece"));
            }
            let open = body.chars().next().expect("nonempty");
            let close = body.chars().last().expect("nonempty");
            let lo_closed = match open {
                '[' => true,
                '(' => false,
                c => return Err(ParseError::at(col, format!("expected '[' or '(', found {c:?}"))),
            };
            let hi_closed = match close {
                ']' => true,
                ')' => false,
                c => {
                    return Err(ParseError::at(
                        col + body.chars().count() - 1,
                        format!("expected ']' or ')', found {c:?}"),
                    ))
                }
            };
            if body.len() < 2 {
                return Err(ParseError::at(col, "truncated interval"));
            }
            let inner = &body[open.len_utf8()..body.len() - close.len_utf8()];
            let Some((a, b)) = inner.split_once(',') else {
                return Err(ParseError::at(col, "expected 'lo,hi'"));
            };
            let lo = ProjectivePoint::parse(a).map_err(|e| e.relocate(1, col))?;
            let hi = ProjectivePoint::parse(b)
                .map_err(|e| e.relocate(1, col + a.chars().count() + 1))?;
            if lo == hi && lo_closed != hi_closed {
                return Err(ParseError::at(col, "half-open interval with equal endpoints"));
            }
            region = region.union(&Self::arc(lo, lo_closed, hi, hi_closed));
        }
        Ok(region)
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

impl fmt::Display for RegionRP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        if self.is_full() {
            return f.write_str("full");
        }
        let pieces: Vec<String> = self.pieces().iter().map(|p| p.to_string()).collect();
        f.write_str(&pieces.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> ProjectivePoint {
        ProjectivePoint::parse(s).unwrap()
    }

    fn r(s: &str) -> RegionRP1 {
        RegionRP1::parse(s).unwrap()
    }

    #[test]
    fn complement_swaps_closedness() {
        assert_eq!(r("[2,inf]").complement(), r("(inf,2)"));
        assert_eq!(r("[2,inf]").complement().to_string(), "(inf,2)");
        assert_eq!(r("empty").complement(), r("full"));
        assert_eq!(r("[1,1]").complement(), r("(1,1)"));
    }

    #[test]
    fn membership() {
        assert!(r("(inf,0)").contains(&pt("-1")));
        assert!(!r("(inf,0)").contains(&pt("0")));
        assert!(!r("(inf,0)").contains(&pt("inf")));
        assert!(r("[3,-3]").contains(&pt("inf")));
        assert!(r("[3,-3]").contains(&pt("-3")));
        assert!(!r("[3,-3]").contains(&pt("0")));
        assert!(r("(1,1)").contains(&pt("inf")));
    }

    #[test]
    fn disjointness() {
        assert!(r("(0,1)").is_disjoint(&r("(2,3)")));
        assert!(r("(0,1)").is_disjoint(&r("[1,2]")));
        assert!(!r("[0,1]").is_disjoint(&r("[1,2]")));
        assert!(!r("[5,-5]").is_disjoint(&r("[6,7]")));
    }

    #[test]
    fn unions_merge() {
        assert_eq!(r("[0,1]; (1,2]"), r("[0,2]"));
        assert_eq!(r("[0,1); [1,2]").to_string(), "[0,2]");
        assert_eq!(r("[0,2]; [1,3]"), r("[0,3]"));
        assert_eq!(r("[1,inf]; [inf,1]"), r("full"));
        assert_eq!(r("(1,inf); (inf,1)").to_string(), "(1,inf); (inf,1)");
        assert_eq!(r("(1,inf]; (inf,1)").to_string(), "(1,1)");
        assert_eq!(r("(0,1); (2,3)").to_string(), "(0,1); (2,3)");
    }

    #[test]
    fn interval_images() {
        let four = MobiusMap::parse("2 0 0 1/2").unwrap();
        let i = CircularInterval::new(pt("1"), pt("2"), false).unwrap();
        assert_eq!(i.image(&four), CircularInterval::new(pt("4"), pt("8"), false).unwrap());
        let rot = MobiusMap::parse("0 -1 1 0").unwrap();
        let pos = CircularInterval::new(pt("0"), pt("inf"), false).unwrap();
        let img = pos.image(&rot);
        assert_eq!(img, CircularInterval::new(pt("inf"), pt("0"), false).unwrap());
        for x in ["1", "1/3", "7"] {
            assert!(img.contains(&rot.apply(&pt(x))));
            assert!(rot.apply(&pt(x)) < pt("0"));
        }
        assert_eq!(pos.to_region().image(&rot), img.to_region());
    }

    #[test]
    fn neighborhoods_shrink_around_point() {
        for x in ["inf", "0", "1/3", "1/2 1/2 5", "-100"] {
            let x = pt(x);
            for level in 0..8 {
                let n = RegionRP1::neighborhood(&x, level);
                assert!(n.contains(&x));
                for b in n.breakpoints() {
                    assert_ne!(b, &x);
                }
                let deeper = RegionRP1::neighborhood(&x, level + 2);
                assert!(deeper.is_subset(&n), "{x} at {level}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["empty", "full", "[0,1]", "(inf,2)", "[0,1); (2,inf]", "[1/2 1/2 5,3]", "[4,4]"] {
            assert_eq!(r(s).to_string(), s, "{s}");
        }
        assert!(RegionRP1::parse("[0,1").is_err());
        assert!(RegionRP1::parse("[0,0)").is_err());
        assert!(RegionRP1::parse("[0 1]").is_err());
        assert!(RegionRP1::parse("").is_err());
    }
}
