use std::fmt::Debug;

use crate::freeprod::{End, FreeProductPresentation, RegionEnds, Word};
use crate::mobius::{MobiusMap, ProjectivePoint, RegionRP1};
use crate::text::ParseError;

/// What the ping-pong construction needs from a hyperbolic space: exact
/// isometries, exact boundary points, and boundary regions closed under the
/// boolean operations and under images.
pub trait Backend {
    type Iso: Clone + Eq + Debug;
    type Point: Clone + Eq + Debug;
    type Region: Clone + Eq + Debug;

    /// Short identifier written into certificates.
    fn id(&self) -> &'static str;
    /// Extra certificate lines after `backend <id>`.
    fn header(&self) -> Vec<String> {
        vec![]
    }

    fn identity(&self) -> Self::Iso;
    fn compose(&self, a: &Self::Iso, b: &Self::Iso) -> Self::Iso;
    fn inverse(&self, a: &Self::Iso) -> Self::Iso;
    fn pow(&self, a: &Self::Iso, n: i64) -> Self::Iso {
        let mut base = if n < 0 { self.inverse(a) } else { a.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.compose(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.compose(&base, &base);
            }
        }
        acc
    }
    fn is_identity(&self, a: &Self::Iso) -> bool {
        *a == self.identity()
    }
    /// Attracting and repelling fixed points, `None` unless loxodromic.
    fn fixed_points(&self, a: &Self::Iso) -> Option<(Self::Point, Self::Point)>;
    fn apply(&self, a: &Self::Iso, x: &Self::Point) -> Self::Point;

    fn empty(&self) -> Self::Region;
    fn complement(&self, r: &Self::Region) -> Self::Region;
    fn union(&self, r: &Self::Region, s: &Self::Region) -> Self::Region;
    fn is_empty(&self, r: &Self::Region) -> bool;
    fn is_disjoint(&self, r: &Self::Region, s: &Self::Region) -> bool;
    fn is_subset(&self, r: &Self::Region, s: &Self::Region) -> bool;
    fn contains(&self, r: &Self::Region, x: &Self::Point) -> bool;
    fn image(&self, a: &Self::Iso, r: &Self::Region) -> Self::Region;
    /// A closed neighbourhood of `x`; increasing `level` shrinks it towards `x`.
    fn neighborhood(&self, x: &Self::Point, level: u32) -> Self::Region;

    fn format_iso(&self, a: &Self::Iso) -> String;
    fn parse_iso(&self, s: &str) -> Result<Self::Iso, ParseError>;
    fn format_point(&self, x: &Self::Point) -> String;
    fn parse_point(&self, s: &str) -> Result<Self::Point, ParseError>;
    fn format_region(&self, r: &Self::Region) -> String;
    fn parse_region(&self, s: &str) -> Result<Self::Region, ParseError>;
}

/// The hyperbolic plane with boundary `RP¹`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MobiusBackend;

impl Backend for MobiusBackend {
    type Iso = MobiusMap;
    type Point = ProjectivePoint;
    type Region = RegionRP1;

    fn id(&self) -> &'static str {
        "mobius"
    }

    fn identity(&self) -> MobiusMap {
        MobiusMap::identity()
    }
    fn compose(&self, a: &MobiusMap, b: &MobiusMap) -> MobiusMap {
        a.compose(b)
    }
    fn inverse(&self, a: &MobiusMap) -> MobiusMap {
        a.inverse()
    }
    fn pow(&self, a: &MobiusMap, n: i64) -> MobiusMap {
        a.pow(n)
    }
    fn is_identity(&self, a: &MobiusMap) -> bool {
        a.is_identity()
    }
    fn fixed_points(&self, a: &MobiusMap) -> Option<(ProjectivePoint, ProjectivePoint)> {
        a.fixed_points().ok()
    }
    fn apply(&self, a: &MobiusMap, x: &ProjectivePoint) -> ProjectivePoint {
        a.apply(x)
    }

    fn empty(&self) -> RegionRP1 {
        RegionRP1::empty()
    }
    fn complement(&self, r: &RegionRP1) -> RegionRP1 {
        r.complement()
    }
    fn union(&self, r: &RegionRP1, s: &RegionRP1) -> RegionRP1 {
        r.union(s)
    }
    fn is_empty(&self, r: &RegionRP1) -> bool {
        r.is_empty()
    }
    fn is_disjoint(&self, r: &RegionRP1, s: &RegionRP1) -> bool {
        r.is_disjoint(s)
    }
    fn is_subset(&self, r: &RegionRP1, s: &RegionRP1) -> bool {
        r.is_subset(s)
    }
    fn contains(&self, r: &RegionRP1, x: &ProjectivePoint) -> bool {
        r.contains(x)
    }
    fn image(&self, a: &MobiusMap, r: &RegionRP1) -> RegionRP1 {
        r.image(a)
    }
    fn neighborhood(&self, x: &ProjectivePoint, level: u32) -> RegionRP1 {
        RegionRP1::neighborhood(x, level)
    }

    fn format_iso(&self, a: &MobiusMap) -> String {
        a.to_string()
    }
    fn parse_iso(&self, s: &str) -> Result<MobiusMap, ParseError> {
        MobiusMap::parse(s)
    }
    fn format_point(&self, x: &ProjectivePoint) -> String {
        x.to_string()
    }
    fn parse_point(&self, s: &str) -> Result<ProjectivePoint, ParseError> {
        ProjectivePoint::parse(s)
    }
    fn format_region(&self, r: &RegionRP1) -> String {
        r.to_string()
    }
    fn parse_region(&self, s: &str) -> Result<RegionRP1, ParseError> {
        RegionRP1::parse(s)
    }
}

/// A free product of cyclic groups acting on its Bass–Serre tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeBackend {
    pub presentation: FreeProductPresentation,
}

impl TreeBackend {
    pub fn new(presentation: FreeProductPresentation) -> Self {
        TreeBackend { presentation }
    }
}

impl Backend for TreeBackend {
    type Iso = Word;
    type Point = End;
    type Region = RegionEnds;

    fn id(&self) -> &'static str {
        "tree"
    }
    fn header(&self) -> Vec<String> {
        vec![self.presentation.to_string()]
    }

    fn identity(&self) -> Word {
        Word::identity()
    }
    fn compose(&self, a: &Word, b: &Word) -> Word {
        self.presentation.multiply(a, b)
    }
    fn inverse(&self, a: &Word) -> Word {
        self.presentation.inverse(a)
    }
    fn fixed_points(&self, a: &Word) -> Option<(End, End)> {
        self.presentation.fixed_ends(a).ok()
    }
    fn apply(&self, a: &Word, x: &End) -> End {
        self.presentation.apply_end(a, x)
    }

    fn empty(&self) -> RegionEnds {
        RegionEnds::empty()
    }
    fn complement(&self, r: &RegionEnds) -> RegionEnds {
        r.complement()
    }
    fn union(&self, r: &RegionEnds, s: &RegionEnds) -> RegionEnds {
        r.union(s)
    }
    fn is_empty(&self, r: &RegionEnds) -> bool {
        r.is_empty()
    }
    fn is_disjoint(&self, r: &RegionEnds, s: &RegionEnds) -> bool {
        r.is_disjoint(s)
    }
    fn is_subset(&self, r: &RegionEnds, s: &RegionEnds) -> bool {
        r.is_subset(s)
    }
    fn contains(&self, r: &RegionEnds, x: &End) -> bool {
        r.contains(&self.presentation, x)
    }
    fn image(&self, a: &Word, r: &RegionEnds) -> RegionEnds {
        r.image(&self.presentation, a)
    }
    fn neighborhood(&self, x: &End, level: u32) -> RegionEnds {
        RegionEnds::neighborhood(&self.presentation, x, level)
    }

    fn format_iso(&self, a: &Word) -> String {
        a.to_string()
    }
    fn parse_iso(&self, s: &str) -> Result<Word, ParseError> {
        self.presentation.parse_word(s)
    }
    fn format_point(&self, x: &End) -> String {
        x.to_string()
    }
    fn parse_point(&self, s: &str) -> Result<End, ParseError> {
        End::parse(&self.presentation, s)
    }
    fn format_region(&self, r: &RegionEnds) -> String {
        r.display(&self.presentation)
    }
    fn parse_region(&self, s: &str) -> Result<RegionEnds, ParseError> {
        RegionEnds::parse(&self.presentation, s)
    }
}
