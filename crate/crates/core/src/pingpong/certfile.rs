//! Plain-text certificate files.
//!
//! ```text
//! # frattkit ping-pong certificate v1
//! INPUT
//! backend tree
//! orders: 2 3
//! f g1 g2
//! g g1 g2^2
//! x g1
//! SCHEDULE
//! 1 1 2 4 4
//! REGIONS
//! 1 A+ [g1 g2 g1 g2^2 g1 g2^2]
//! 1 A- …
//! 1 B+ …
//! 1 B- …
//! WITNESS
//! e | g1 g2
//! END
//! ```
//!
//! SCHEDULE lines are `i s t p q`. The elements `k_i, l_i, a_i, b_i, y_i`
//! are not stored; the verifier recomputes them.

use super::backend::{Backend, MobiusBackend, TreeBackend};
use super::certificate::{Neighborhoods, PingPongCertificate, Schedule, VerificationReport};
use super::construct::verify;
use crate::freeprod::FreeProductPresentation;
use crate::text::{content_lines, tokens, ParseError};

pub const CERTIFICATE_HEADER: &str = "# frattkit ping-pong certificate v1";

impl<B: Backend> PingPongCertificate<B> {
    pub fn to_text(&self) -> String {
        let be = &self.backend;
        let mut out = vec![CERTIFICATE_HEADER.to_string(), "INPUT".into()];
        out.push(format!("backend {}", be.id()));
        out.extend(be.header());
        out.push(format!("f {}", be.format_iso(&self.f)));
        out.push(format!("g {}", be.format_iso(&self.g)));
        for x in &self.x {
            out.push(format!("x {}", be.format_iso(x)));
        }
        out.push("SCHEDULE".into());
        for (i, s) in self.schedule.iter().enumerate() {
            out.push(format!("{} {} {} {} {}", i + 1, s.s, s.t, s.p, s.q));
        }
        out.push("REGIONS".into());
        for (i, n) in self.regions.iter().enumerate() {
            for (lab, r) in Neighborhoods::<B::Region>::LABELS.iter().zip(n.as_array()) {
                out.push(format!("{} {lab} {}", i + 1, be.format_region(r)));
            }
        }
        out.push("WITNESS".into());
        out.push(be.format_point(&self.witness));
        out.push("END".into());
        let mut s = out.join("\n");
        s.push('\n');
        s
    }
}

/// A certificate for either backend, as read from a file.
#[derive(Clone, Debug)]
pub enum AnyCertificate {
    Mobius(PingPongCertificate<MobiusBackend>),
    Tree(PingPongCertificate<TreeBackend>),
}

impl AnyCertificate {
    pub fn verify(&self) -> VerificationReport {
        match self {
            AnyCertificate::Mobius(c) => verify(c),
            AnyCertificate::Tree(c) => verify(c),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyCertificate::Mobius(c) => c.to_text(),
            AnyCertificate::Tree(c) => c.to_text(),
        }
    }

    pub fn backend_id(&self) -> &'static str {
        match self {
            AnyCertificate::Mobius(c) => c.backend.id(),
            AnyCertificate::Tree(c) => c.backend.id(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let first_line = text.lines().enumerate().find(|(_, l)| !l.trim().is_empty());
        match first_line {
            Some((_, l)) if l.trim() == CERTIFICATE_HEADER => {}
            Some((i, _)) => {
                return Err(ParseError::new(
                    i + 1,
                    1,
                    format!("expected header {CERTIFICATE_HEADER:?}"),
                ))
            }
            None => return Err(ParseError::new(1, 1, "empty certificate")),
        }
        let mut lines = content_lines(text);
        let (n, first) = next_line(&mut lines, "INPUT")?;
        if first.trim() != "INPUT" {
            return Err(ParseError::new(n, 1, "expected INPUT"));
        }
        let (n, backend_line) = next_line(&mut lines, "backend line")?;
        match backend_line.trim() {
            "backend mobius" => {
                let c = parse_body(MobiusBackend, &mut lines)?;
                Ok(AnyCertificate::Mobius(c))
            }
            "backend tree" => {
                let (m, orders) = next_line(&mut lines, "orders line")?;
                let p = FreeProductPresentation::parse(orders).map_err(|e| e.relocate(m, 0))?;
                let c = parse_body(TreeBackend::new(p), &mut lines)?;
                Ok(AnyCertificate::Tree(c))
            }
            _ => Err(ParseError::new(
                n,
                1,
                "expected 'backend mobius' or 'backend tree'",
            )),
        }
    }
}

fn next_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<(usize, &'a str), ParseError> {
    lines
        .next()
        .ok_or_else(|| ParseError::new(0, 1, format!("unexpected end of file, wanted {what}")))
}

/// Splits `key rest` and returns the column where `rest` starts.
fn split_key(line: &str) -> (&str, &str, usize) {
    let t = line.trim_start();
    let lead = line.len() - t.len();
    match t.find(char::is_whitespace) {
        Some(i) => {
            let rest = &t[i..];
            let r = rest.trim_start();
            (&t[..i], r, lead + i + (rest.len() - r.len()))
        }
        None => (t, "", line.len()),
    }
}

fn parse_body<'a, B: Backend>(
    be: B,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<PingPongCertificate<B>, ParseError> {
    let mut f = None;
    let mut g = None;
    let mut x = vec![];
    let (mut n, mut line) = next_line(lines, "f")?;
    loop {
        let (key, rest, col) = split_key(line);
        let parse = |s: &str| be.parse_iso(s).map_err(|e| e.relocate(n, col));
        match key {
            "f" if f.is_none() => f = Some(parse(rest)?),
            "g" if g.is_none() => g = Some(parse(rest)?),
            "x" => x.push(parse(rest)?),
            "SCHEDULE" if rest.is_empty() => break,
            _ => return Err(ParseError::new(n, 1, format!("unexpected line {:?}", line.trim()))),
        }
        (n, line) = next_line(lines, "SCHEDULE")?;
    }
    let f = f.ok_or_else(|| ParseError::new(n, 1, "missing f"))?;
    let g = g.ok_or_else(|| ParseError::new(n, 1, "missing g"))?;

    let mut schedule = vec![];
    loop {
        (n, line) = next_line(lines, "REGIONS")?;
        if line.trim() == "REGIONS" {
            break;
        }
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        if toks.len() != 5 {
            return Err(ParseError::new(n, 1, "expected 'i s t p q'"));
        }
        let mut vals = [0u32; 5];
        for (v, (col, t)) in vals.iter_mut().zip(&toks) {
            *v = t
                .parse()
                .map_err(|_| ParseError::new(n, *col, format!("bad integer {t:?}")))?;
        }
        if vals[0] as usize != schedule.len() + 1 {
            return Err(ParseError::new(n, 1, "schedule indices must be 1, 2, …"));
        }
        schedule.push(Schedule {
            s: vals[1],
            t: vals[2],
            p: vals[3],
            q: vals[4],
        });
    }

    let mut regions: Vec<Neighborhoods<B::Region>> = vec![];
    let mut pending: Vec<B::Region> = vec![];
    loop {
        (n, line) = next_line(lines, "WITNESS")?;
        if line.trim() == "WITNESS" {
            break;
        }
        let (idx, rest, _) = split_key(line);
        let (label, body, col) = split_key(rest);
        let col = col + (line.len() - rest.len());
        let want_idx = regions.len() + 1;
        let want_label = Neighborhoods::<B::Region>::LABELS[pending.len()];
        if idx.parse::<usize>().ok() != Some(want_idx) || label != want_label {
            return Err(ParseError::new(
                n,
                1,
                format!("expected region '{want_idx} {want_label}'"),
            ));
        }
        pending.push(be.parse_region(body).map_err(|e| e.relocate(n, col))?);
        if pending.len() == 4 {
            let mut it = pending.drain(..);
            regions.push(Neighborhoods {
                a_plus: it.next().expect("four"),
                a_minus: it.next().expect("four"),
                b_plus: it.next().expect("four"),
                b_minus: it.next().expect("four"),
            });
        }
    }
    if !pending.is_empty() {
        return Err(ParseError::new(n, 1, "incomplete region block"));
    }

    (n, line) = next_line(lines, "witness point")?;
    let witness = be.parse_point(line).map_err(|e| e.relocate(n, 0))?;
    (n, line) = next_line(lines, "END")?;
    if line.trim() != "END" {
        return Err(ParseError::new(n, 1, "expected END"));
    }
    if let Some((n, _)) = lines.next() {
        return Err(ParseError::new(n, 1, "content after END"));
    }
    Ok(PingPongCertificate {
        backend: be,
        f,
        g,
        x,
        schedule,
        regions,
        witness,
    })
}
