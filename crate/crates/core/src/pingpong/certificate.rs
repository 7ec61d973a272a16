use std::fmt;

use super::backend::Backend;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("{0} is not loxodromic")]
    NotLoxodromic(&'static str),
    #[error("f and g share a fixed point, so they are not independent")]
    NotIndependent,
}

/// The data of the construction: isometries `x_1, …, x_m` and two
/// independent loxodromics `f`, `g`.
#[derive(Clone, Debug)]
pub struct PingPongInput<B: Backend> {
    pub backend: B,
    pub f: B::Iso,
    pub g: B::Iso,
    pub x: Vec<B::Iso>,
}

impl<B: Backend> PingPongInput<B> {
    pub fn new(backend: B, f: B::Iso, g: B::Iso, x: Vec<B::Iso>) -> Result<Self, InputError> {
        let (fp, fm) = backend
            .fixed_points(&f)
            .ok_or(InputError::NotLoxodromic("f"))?;
        let (gp, gm) = backend
            .fixed_points(&g)
            .ok_or(InputError::NotLoxodromic("g"))?;
        if fp == gp || fp == gm || fm == gp || fm == gm {
            return Err(InputError::NotIndependent);
        }
        Ok(PingPongInput { backend, f, g, x })
    }
}

/// Search bounds: exponents `s, t, p, q` up to `max_exponent`, neighbourhood
/// levels up to `max_depth`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_exponent: u32,
    pub max_depth: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_exponent: 64,
            max_depth: 12,
        }
    }
}

/// Exponents for one index: `k = f^s g f^-s`, `l = f^t g f^-t`, `a = k^p`, `b = l^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub s: u32,
    pub t: u32,
    pub p: u32,
    pub q: u32,
}

/// The four regions chosen around `k^+`, `k^-`, `l^+`, `l^-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhoods<R> {
    pub a_plus: R,
    pub a_minus: R,
    pub b_plus: R,
    pub b_minus: R,
}

impl<R> Neighborhoods<R> {
    pub const LABELS: [&'static str; 4] = ["A+", "A-", "B+", "B-"];

    pub fn as_array(&self) -> [&R; 4] {
        [&self.a_plus, &self.a_minus, &self.b_plus, &self.b_minus]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("search exhausted at index {index}: {stage}")]
pub struct SearchExhausted {
    pub index: usize,
    pub stage: String,
    pub limits: Limits,
}

/// A freeness certificate for `y_i = b_i x_i a_i`. Everything except the
/// schedule and the regions is recomputed from `f`, `g` and `x` on demand.
#[derive(Clone, Debug)]
pub struct PingPongCertificate<B: Backend> {
    pub backend: B,
    pub f: B::Iso,
    pub g: B::Iso,
    pub x: Vec<B::Iso>,
    pub schedule: Vec<Schedule>,
    pub regions: Vec<Neighborhoods<B::Region>>,
    pub witness: B::Point,
}

/// The elements attached to one index.
#[derive(Clone, Debug)]
pub struct Derived<I> {
    pub k: I,
    pub l: I,
    pub a: I,
    pub b: I,
    pub y: I,
}

impl<B: Backend> PingPongCertificate<B> {
    pub fn len(&self) -> usize {
        self.schedule.len()
    }

    pub fn is_empty(&self) -> bool {
        self.schedule.is_empty()
    }

    pub fn derived(&self, i: usize) -> Derived<B::Iso> {
        derive(&self.backend, &self.f, &self.g, &self.x[i], &self.schedule[i])
    }

    pub fn generators(&self) -> Vec<B::Iso> {
        (0..self.len()).map(|i| self.derived(i).y).collect()
    }

    /// The ping-pong set `C_i = A_i^- ∪ B_i^+`: positive powers of `y_i`
    /// map everything outside `A_i^-` into `B_i^+`, negative powers map
    /// everything outside `B_i^+` into `A_i^-`.
    pub fn c_region(&self, i: usize) -> B::Region {
        self.backend
            .union(&self.regions[i].a_minus, &self.regions[i].b_plus)
    }

    /// `A_i^+ ∪ B_i^-`, the other pairing of the four regions. Positive
    /// powers of `y_i` do not map into it in general.
    pub fn c_region_swapped(&self, i: usize) -> B::Region {
        self.backend
            .union(&self.regions[i].a_plus, &self.regions[i].b_minus)
    }
}

pub(crate) fn conjugate_power<B: Backend>(b: &B, f: &B::Iso, g: &B::Iso, n: u32) -> B::Iso {
    let fs = b.pow(f, n as i64);
    b.compose(&b.compose(&fs, g), &b.inverse(&fs))
}

pub(crate) fn derive<B: Backend>(
    b: &B,
    f: &B::Iso,
    g: &B::Iso,
    x: &B::Iso,
    sch: &Schedule,
) -> Derived<B::Iso> {
    let k = conjugate_power(b, f, g, sch.s);
    let l = conjugate_power(b, f, g, sch.t);
    let a = b.pow(&k, sch.p as i64);
    let bb = b.pow(&l, sch.q as i64);
    let y = b.compose(&b.compose(&bb, x), &a);
    Derived {
        k,
        l,
        a,
        b: bb,
        y,
    }
}

/// One named check of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}", c.name)?;
            } else {
                writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
            }
        }
        if self.passed() {
            writeln!(f, "verdict PASS")?;
            writeln!(
                f,
                "conclusion: the y_i freely generate F, and f is not in F since every nontrivial w in F moves f+"
            )
        } else {
            writeln!(f, "verdict FAIL")
        }
    }
}
