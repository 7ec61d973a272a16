use std::fmt;
use std::path::Path;

use frattkit::freeprod::{FreeProductPresentation, WordClass};
use frattkit::frattini::catalog::{catalog, catalog_group, frattini_checks, frattini_free_abelian};
use frattkit::frattini::{FiniteGroup, GroupError, NON_GENERATOR_LIMIT};
use frattkit::mobius::MobiusMap;
use frattkit::pingpong::{
    construct, freeness_oracle, sample_limit_set, verify, witness_exclusion, AnyCertificate,
    Backend, Limits, MobiusBackend, OracleResult, PingPongCertificate, PingPongInput, TreeBackend,
};
use frattkit::text::ParseError;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::Report;
use crate::{BackendArgs, BackendKind, Command, ElementArgs, GroupArgs};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Exhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Exhausted(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) | CliError::Exhausted(s) => f.write_str(s),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BudgetExceeded(_) => CliError::Exhausted(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn located(what: &str, e: ParseError) -> CliError {
    CliError::Input(format!("{what}:{e}"))
}

type Outcome = Result<(String, u8), CliError>;

enum Geometry {
    Mobius(MobiusBackend),
    Tree(TreeBackend),
}

fn geometry(b: &BackendArgs) -> Result<Geometry, CliError> {
    match (&b.tree, b.backend, b.mobius) {
        (Some(_), Some(BackendKind::Mobius), _) | (Some(_), _, true) => Err(CliError::Input(
            "--tree selects the tree backend; drop --mobius or --backend mobius".into(),
        )),
        (Some(orders), _, _) => {
            let p = FreeProductPresentation::parse(orders).map_err(|e| located("--tree", e))?;
            Ok(Geometry::Tree(TreeBackend::new(p)))
        }
        (None, Some(BackendKind::Tree), _) => Err(CliError::Input(
            "the tree backend needs --tree \"orders: ...\"".into(),
        )),
        (None, _, _) => Ok(Geometry::Mobius(MobiusBackend)),
    }
}

macro_rules! with_backend {
    ($geo:expr, $be:ident => $body:expr) => {
        match $geo {
            Geometry::Mobius($be) => $body,
            Geometry::Tree($be) => $body,
        }
    };
}

fn parse_isos<B: Backend>(be: &B, flag: &str, items: &[String]) -> Result<Vec<B::Iso>, CliError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            be.parse_iso(s)
                .map_err(|e| located(&format!("{flag} #{}", i + 1), e))
        })
        .collect()
}

fn read(path: &Path, report: &mut Report) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    report.digest_input(text.as_bytes());
    Ok(text)
}

pub fn run(command: Command, args: &[String]) -> Outcome {
    let mut report = Report::new(args);
    let code = match command {
        Command::Classify(el) => classify(&el, &mut report, false)?,
        Command::FixedPoints(el) => classify(&el, &mut report, true)?,
        Command::LimitSample {
            backend,
            gens,
            radius,
        } => with_backend!(geometry(&backend)?, be => limit_sample(&be, &gens, radius, &mut report)?),
        Command::PingpongConstruct {
            backend,
            f,
            g,
            x,
            limits,
            out,
        } => {
            let limits = parse_limits(&limits)?;
            with_backend!(geometry(&backend)?, be => {
                let cert = build_certificate(be, &f, &g, &x, limits)?;
                certificate_report(&cert, out.as_deref(), &mut report)?
            })
        }
        Command::PingpongVerify { certificate, words } => {
            let text = read(&certificate, &mut report)?;
            let cert = AnyCertificate::parse(&text)
                .map_err(|e| located(&certificate.display().to_string(), e))?;
            match &cert {
                AnyCertificate::Mobius(c) => verify_report(c, words, &mut report),
                AnyCertificate::Tree(c) => verify_report(c, words, &mut report),
            }
        }
        Command::FreeCheck {
            backend,
            gens,
            max_length,
        } => with_backend!(geometry(&backend)?, be => free_check(&be, &gens, max_length, &mut report)?),
        Command::Frattini(group) => {
            let g = load_group(&group, &mut report)?;
            frattini_report(&g, &mut report)?
        }
        Command::Invgen {
            group,
            elements,
            all,
            criterion,
            budget,
        } => {
            let g = load_group(&group, &mut report)?;
            invgen_report(&g, &elements, all, criterion, budget, &mut report)?
        }
        Command::CatalogTest { seed, relabellings } => catalog_test(seed, relabellings, &mut report)?,
    };
    Ok((report.render(code), code))
}

fn classify(el: &ElementArgs, report: &mut Report, fixed: bool) -> Result<u8, CliError> {
    if let Some(m) = &el.mobius {
        let m = MobiusMap::parse(m).map_err(|e| located("--mobius", e))?;
        report.line(format!("element: {m}"));
        if fixed {
            let (plus, minus) = m
                .fixed_points()
                .map_err(|e| CliError::Input(e.to_string()))?;
            report.line(format!("plus: {plus}"));
            report.line(format!("minus: {minus}"));
        } else {
            report.line(format!("class: {}", m.classify()));
        }
        return Ok(0);
    }
    let (Some(orders), Some(word)) = (&el.tree, &el.word) else {
        return Err(CliError::Input(
            "give --mobius \"p q r s\" or --tree \"orders: ...\" --word \"...\"".into(),
        ));
    };
    let p = FreeProductPresentation::parse(orders).map_err(|e| located("--tree", e))?;
    let w = p.parse_word(word).map_err(|e| located("--word", e))?;
    report.line(format!("element: {w}"));
    if fixed {
        let (plus, minus) = p
            .fixed_ends(&w)
            .map_err(|e| CliError::Input(e.to_string()))?;
        report.line(format!("plus: {plus}"));
        report.line(format!("minus: {minus}"));
    } else {
        match p.classify_word(&w) {
            WordClass::Elliptic => report.line("class: Elliptic"),
            WordClass::Loxodromic { translation_length } => {
                let (plus, minus) = p.fixed_ends(&w).expect("loxodromic");
                report.line(format!(
                    "class: Loxodromic translation_length={translation_length} plus={plus} minus={minus}"
                ))
            }
        }
    }
    Ok(0)
}

fn limit_sample<B: Backend>(be: &B, gens: &[String], radius: usize, report: &mut Report) -> Result<u8, CliError> {
    let gens = parse_isos(be, "--gen", gens)?;
    let points = sample_limit_set(be, &gens, radius);
    report.line(format!("backend: {}", be.id()));
    report.line(format!("radius: {radius}"));
    for p in &points {
        report.line(format!("point: {}", be.format_point(p)));
    }
    report.line(format!("points: {}", points.len()));
    report.line(format!("non-elementary (>= 3 points): {}", points.len() >= 3));
    Ok(0)
}

fn parse_limits(s: &str) -> Result<Limits, CliError> {
    let bad = || CliError::Input(format!("--limits expects E,D, got {s:?}"));
    let (e, d) = s.split_once(',').ok_or_else(bad)?;
    Ok(Limits {
        max_exponent: e.trim().parse().map_err(|_| bad())?,
        max_depth: d.trim().parse().map_err(|_| bad())?,
    })
}

fn build_certificate<B: Backend + Clone>(
    be: B,
    f: &str,
    g: &str,
    x: &[String],
    limits: Limits,
) -> Result<PingPongCertificate<B>, CliError> {
    let f = be.parse_iso(f).map_err(|e| located("--f", e))?;
    let g = be.parse_iso(g).map_err(|e| located("--g", e))?;
    let x = parse_isos(&be, "--x", x)?;
    let input = PingPongInput::new(be, f, g, x).map_err(|e| CliError::Input(e.to_string()))?;
    construct(&input, limits).map_err(|e| {
        CliError::Exhausted(format!(
            "{e} (limits {},{})",
            e.limits.max_exponent, e.limits.max_depth
        ))
    })
}

fn certificate_report<B: Backend>(
    cert: &PingPongCertificate<B>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<u8, CliError> {
    report.line(format!("backend: {}", cert.backend.id()));
    for (i, s) in cert.schedule.iter().enumerate() {
        report.line(format!("index {}: s={} t={} p={} q={}", i + 1, s.s, s.t, s.p, s.q));
    }
    let verdict = verify(cert);
    report.line(verdict.to_string());
    let text = cert.to_text();
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            report.line(format!("certificate: {}", path.display()));
        }
        None => {
            report.line("certificate:");
            for l in text.lines() {
                report.line(format!("  {l}"));
            }
        }
    }
    Ok(if verdict.passed() { 0 } else { 1 })
}

fn verify_report<B: Backend>(cert: &PingPongCertificate<B>, words: usize, report: &mut Report) -> u8 {
    report.line(format!("backend: {}", cert.backend.id()));
    report.line(format!("indices: {}", cert.len()));
    let verdict = verify(cert);
    let mut passed = verdict.passed();
    if words > 0 && passed {
        let oracle = freeness_oracle(&cert.backend, &cert.generators(), words);
        let free = oracle == OracleResult::NoRelation;
        report.check(&format!("no relation among the y_i up to length {words}"), free);
        match witness_exclusion(cert, words) {
            Ok(n) => report.check(&format!("{n} reduced words move f+ into their first region"), true),
            Err(w) => report.check(&format!("word {w} fails at f+"), false),
        }
        passed &= free;
    }
    let text = verdict.to_string();
    report.line(text);
    if passed {
        0
    } else {
        1
    }
}

fn free_check<B: Backend>(be: &B, gens: &[String], max_length: usize, report: &mut Report) -> Result<u8, CliError> {
    let gens = parse_isos(be, "--gen", gens)?;
    report.line(format!("backend: {}", be.id()));
    report.line(format!("max length: {max_length}"));
    Ok(match freeness_oracle(be, &gens, max_length) {
        OracleResult::NoRelation => {
            report.line("result: NoRelation");
            0
        }
        OracleResult::Relation(w) => {
            report.line(format!("result: Relation {w} (length {})", w.letter_count()));
            1
        }
    })
}

fn load_group(args: &GroupArgs, report: &mut Report) -> Result<FiniteGroup, CliError> {
    if let Some(path) = &args.cayley {
        let text = read(path, report)?;
        FiniteGroup::parse_cayley(&text).map_err(|e| located(&path.display().to_string(), e))
    } else if let Some(path) = &args.perm {
        let text = read(path, report)?;
        FiniteGroup::parse_permutations(&text).map_err(|e| located(&path.display().to_string(), e))
    } else {
        let name = args.catalog.as_deref().unwrap_or_default();
        catalog_group(name).ok_or_else(|| {
            let names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
            CliError::Input(format!("unknown catalog group {name:?}; known: {}", names.join(", ")))
        })
    }
}

fn frattini_report(g: &FiniteGroup, report: &mut Report) -> Result<u8, CliError> {
    report.line(format!("group: order {} ({})", g.order(), g.describe()));
    let maximals = g.maximal_subgroups()?;
    report.line(format!("maximal subgroups: {}", maximals.len()));
    for m in &maximals {
        report.line(format!("  {}", g.format_set(m.elements())));
    }
    let phi = g.frattini()?;
    let quotient = g.frattini_quotient()?;
    report.line(format!(
        "Phi = {}, quotient = {}, nilpotent(Phi)={}",
        g.format_set(phi.elements()),
        quotient.group.describe(),
        g.is_nilpotent(&phi)
    ));
    report.line(format!("Phi indices: {}", phi.to_index_list()));
    if g.order() <= NON_GENERATOR_LIMIT {
        report.line(format!("non-generators = {}", g.format_set(&g.non_generators()?)));
    }
    report.line(format!(
        "all maximal subgroups normal: {}",
        g.all_maximals_normal()?
    ));
    Ok(0)
}

fn resolve(g: &FiniteGroup, s: &str) -> Result<usize, CliError> {
    if let Some(a) = g.elements().find(|&a| g.label(a) == s.trim()) {
        return Ok(a);
    }
    match s.trim().parse::<usize>() {
        Ok(a) if a < g.order() => Ok(a),
        _ => Err(CliError::Input(format!("no element labelled {s:?}"))),
    }
}

fn invgen_report(
    g: &FiniteGroup,
    elements: &[String],
    all: bool,
    criterion: bool,
    budget: usize,
    report: &mut Report,
) -> Result<u8, CliError> {
    report.line(format!("group: order {} ({})", g.order(), g.describe()));
    if criterion {
        let r = g.check_invgen_criterion(budget)?;
        report.line(r.display(g).to_string());
        return Ok(if r.agree() { 0 } else { 1 });
    }
    let set: Vec<usize> = if all {
        g.elements().collect()
    } else {
        elements
            .iter()
            .map(|s| resolve(g, s))
            .collect::<Result<_, _>>()?
    };
    report.line(format!("set: {}", g.format_set(&set)));
    match g.invariable_failure(&set, budget)? {
        None => report.line("invariably generates: true"),
        Some(choice) => {
            report.line("invariably generates: false");
            report.line(format!("non-generating conjugates: {}", g.format_set(&choice)));
        }
    }
    Ok(0)
}

fn catalog_test(seed: u64, relabellings: usize, report: &mut Report) -> Result<u8, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_passed = true;
    report.line(format!("seed: {seed}"));
    for entry in catalog() {
        let g = &entry.group;
        let mut failures: Vec<String> = vec![];
        let mut count = 0;
        for c in frattini_checks(g)? {
            count += 1;
            if !c.passed {
                failures.push(c.name.to_string());
            }
        }
        let phi = g.frattini()?;
        for _ in 0..relabellings {
            let mut perm: Vec<usize> = g.elements().collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm)?;
            let mut moved: Vec<usize> = phi.elements().iter().map(|&a| perm[a]).collect();
            moved.sort_unstable();
            count += 1;
            if h.frattini()?.elements() != moved {
                failures.push("Phi follows a relabelling".into());
            }
            for c in frattini_checks(&h)? {
                count += 1;
                if !c.passed {
                    failures.push(format!("{} (relabelled)", c.name));
                }
            }
        }
        let name = format!("{} (order {})", entry.name, g.order());
        if failures.is_empty() {
            report.line(format!("PASS {name}: {count} checks"));
        } else {
            all_passed = false;
            report.line(format!("FAIL {name}: {}", failures.join(", ")));
        }
    }
    for n in [4, 8, 9, 12] {
        let g = frattini_free_abelian(n);
        let ok = g.order() == n
            && !g.is_cyclic()
            && g.frattini()?.is_trivial()
            && g.all_maximals_normal()?;
        all_passed &= ok;
        report.check(
            &format!("{}: order {n}, non-cyclic, trivial Phi, normal maximals", g.describe()),
            ok,
        );
    }
    Ok(if all_passed { 0 } else { 1 })
}
