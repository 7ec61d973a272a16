use super::backend::Backend;
use super::certificate::{
    conjugate_power, derive, Check, Limits, Neighborhoods, PingPongCertificate, PingPongInput,
    Schedule, SearchExhausted, VerificationReport,
};

/// Builds `a_i`, `b_i` and the regions index by index, searching every
/// exponent upwards from 1 and every neighbourhood level upwards from 0.
pub fn construct<B: Backend + Clone>(
    input: &PingPongInput<B>,
    limits: Limits,
) -> Result<PingPongCertificate<B>, SearchExhausted> {
    let be = &input.backend;
    let (f_plus, _) = be.fixed_points(&input.f).expect("checked by PingPongInput");
    let (g_plus, g_minus) = be.fixed_points(&input.g).expect("checked by PingPongInput");
    let fail = |index: usize, stage: &str| SearchExhausted {
        index: index + 1,
        stage: stage.to_string(),
        limits,
    };

    let mut taken = be.empty();
    let mut schedule = vec![];
    let mut regions = vec![];
    for (i, x) in input.x.iter().enumerate() {
        let u = be.complement(&taken);
        debug_assert!(be.contains(&u, &f_plus));
        let fixed_of = |n: u32| {
            let fs = be.pow(&input.f, n as i64);
            (be.apply(&fs, &g_plus), be.apply(&fs, &g_minus))
        };
        let in_u = |p: &B::Point| be.contains(&u, p) && p != &f_plus;

        let (s, k_plus, k_minus) = (1..=limits.max_exponent)
            .map(|s| {
                let (p, m) = fixed_of(s);
                (s, p, m)
            })
            .find(|(_, p, m)| in_u(p) && in_u(m))
            .ok_or_else(|| fail(i, "no s with both fixed points of k in U minus f+"))?;

        let x_k_plus = be.apply(x, &k_plus);
        let avoid = [&k_plus, &k_minus, &x_k_plus];
        let (t, l_plus, l_minus) = (1..=limits.max_exponent)
            .map(|t| {
                let (p, m) = fixed_of(t);
                (t, p, m)
            })
            .find(|(_, p, m)| in_u(p) && in_u(m) && !avoid.contains(&p) && !avoid.contains(&m))
            .ok_or_else(|| fail(i, "no t with fixed points of l avoiding f+, k+, k-, x k+"))?;

        let hoods = (0..=limits.max_depth)
            .map(|level| Neighborhoods {
                a_plus: be.neighborhood(&k_plus, level),
                a_minus: be.neighborhood(&k_minus, level),
                b_plus: be.neighborhood(&l_plus, level),
                b_minus: be.neighborhood(&l_minus, level),
            })
            .find(|n| {
                let rs = n.as_array();
                let pairwise = (0..4).all(|a| (a + 1..4).all(|b| be.is_disjoint(rs[a], rs[b])));
                pairwise
                    && rs
                        .iter()
                        .all(|r| be.is_disjoint(r, &taken) && !be.contains(r, &f_plus))
                    && be.is_disjoint(&be.image(x, &n.a_plus), &n.b_minus)
            })
            .ok_or_else(|| fail(i, "no neighbourhood level separates the four fixed points"))?;

        let k = conjugate_power(be, &input.f, &input.g, s);
        let l = conjugate_power(be, &input.f, &input.g, t);
        let p = power_search(be, &k, &hoods.a_plus, &hoods.a_minus, limits.max_exponent)
            .ok_or_else(|| fail(i, "no p with a = k^p satisfying (a)"))?;
        let q = power_search(be, &l, &hoods.b_plus, &hoods.b_minus, limits.max_exponent)
            .ok_or_else(|| fail(i, "no q with b = l^q satisfying (a)"))?;

        for r in hoods.as_array() {
            taken = be.union(&taken, r);
        }
        schedule.push(Schedule { s, t, p, q });
        regions.push(hoods);
    }
    Ok(PingPongCertificate {
        backend: input.backend.clone(),
        f: input.f.clone(),
        g: input.g.clone(),
        x: input.x.clone(),
        schedule,
        regions,
        witness: f_plus,
    })
}

/// Smallest `n` with `h^n(S \ minus) ⊆ plus` and `h^-n(S \ plus) ⊆ minus`.
fn power_search<B: Backend>(
    be: &B,
    h: &B::Iso,
    plus: &B::Region,
    minus: &B::Region,
    max: u32,
) -> Option<u32> {
    let outside_minus = be.complement(minus);
    let outside_plus = be.complement(plus);
    let h_inv = be.inverse(h);
    let mut fwd = be.identity();
    let mut back = be.identity();
    for n in 1..=max {
        fwd = be.compose(&fwd, h);
        back = be.compose(&back, &h_inv);
        if be.is_subset(&be.image(&fwd, &outside_minus), plus)
            && be.is_subset(&be.image(&back, &outside_plus), minus)
        {
            return Some(n);
        }
    }
    None
}

/// Re-checks a certificate from scratch using only region operations.
pub fn verify<B: Backend>(cert: &PingPongCertificate<B>) -> VerificationReport {
    let be = &cert.backend;
    let mut checks = vec![];
    let mut push = |name: String, passed: bool, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        })
    };

    let f_fixed = be.fixed_points(&cert.f);
    let g_fixed = be.fixed_points(&cert.g);
    let f_plus = match (&f_fixed, &g_fixed) {
        (Some((fp, fm)), Some((gp, gm))) => {
            let independent = fp != gp && fp != gm && fm != gp && fm != gm;
            push(
                "independent loxodromics f, g".into(),
                independent,
                if independent {
                    String::new()
                } else {
                    "f and g share a fixed point".into()
                },
            );
            fp.clone()
        }
        _ => {
            push(
                "independent loxodromics f, g".into(),
                false,
                "f or g is not loxodromic".into(),
            );
            return VerificationReport { checks };
        }
    };
    let witness_ok = cert.witness == f_plus;
    push(
        "witness is f+".into(),
        witness_ok,
        if witness_ok {
            be.format_point(&f_plus)
        } else {
            format!(
                "certificate says {}, f+ is {}",
                be.format_point(&cert.witness),
                be.format_point(&f_plus)
            )
        },
    );
    let shape_ok = cert.x.len() == cert.schedule.len()
        && cert.x.len() == cert.regions.len()
        && cert
            .schedule
            .iter()
            .all(|s| s.s >= 1 && s.t >= 1 && s.p >= 1 && s.q >= 1);
    push(
        "schedule well formed".into(),
        shape_ok,
        if shape_ok {
            String::new()
        } else {
            "lengths differ or an exponent is zero".into()
        },
    );
    if !shape_ok {
        return VerificationReport { checks };
    }

    let labelled: Vec<(String, &B::Region)> = cert
        .regions
        .iter()
        .enumerate()
        .flat_map(|(i, n)| {
            Neighborhoods::<B::Region>::LABELS
                .iter()
                .zip(n.as_array())
                .map(move |(lab, r)| (region_name(i, lab), r))
        })
        .collect();

    let empty: Vec<&String> = labelled
        .iter()
        .filter(|(_, r)| be.is_empty(r))
        .map(|(n, _)| n)
        .collect();
    push(
        "regions nonempty".into(),
        empty.is_empty(),
        empty
            .first()
            .map(|n| format!("{n} is empty"))
            .unwrap_or_default(),
    );

    let mut overlap = None;
    'outer: for a in 0..labelled.len() {
        for b in a + 1..labelled.len() {
            if !be.is_disjoint(labelled[a].1, labelled[b].1) {
                overlap = Some(format!("{} / {}", labelled[a].0, labelled[b].0));
                break 'outer;
            }
        }
    }
    push(
        "pairwise disjoint".into(),
        overlap.is_none(),
        overlap.map(|o| format!("{o} intersect")).unwrap_or_default(),
    );

    for (i, (x, sch)) in cert.x.iter().zip(&cert.schedule).enumerate() {
        let d = derive(be, &cert.f, &cert.g, x, sch);
        let n = &cert.regions[i];
        let idx = i + 1;
        let a_inv = be.inverse(&d.a);
        let b_inv = be.inverse(&d.b);
        let y_inv = be.inverse(&d.y);
        let contain = |h: &B::Iso, from: &B::Region, into: &B::Region| {
            be.is_subset(&be.image(h, &be.complement(from)), into)
        };
        let conds = [
            (format!("a{idx}(S \\ A{idx}-) in A{idx}+"), contain(&d.a, &n.a_minus, &n.a_plus)),
            (format!("a{idx}^-1(S \\ A{idx}+) in A{idx}-"), contain(&a_inv, &n.a_plus, &n.a_minus)),
            (format!("b{idx}(S \\ B{idx}-) in B{idx}+"), contain(&d.b, &n.b_minus, &n.b_plus)),
            (format!("b{idx}^-1(S \\ B{idx}+) in B{idx}-"), contain(&b_inv, &n.b_plus, &n.b_minus)),
        ];
        let failed: Vec<&String> = conds.iter().filter(|c| !c.1).map(|c| &c.0).collect();
        push(
            format!("(a) index {idx}"),
            failed.is_empty(),
            failed
                .first()
                .map(|c| format!("{c} fails"))
                .unwrap_or_default(),
        );

        let b_ok = be.is_disjoint(&be.image(x, &n.a_plus), &n.b_minus);
        push(
            format!("(b) index {idx}"),
            b_ok,
            if b_ok {
                String::new()
            } else {
                format!("x{idx}(A{idx}+) meets B{idx}-")
            },
        );

        let inside: Vec<String> = Neighborhoods::<B::Region>::LABELS
            .iter()
            .zip(n.as_array())
            .filter(|(_, r)| be.contains(r, &f_plus))
            .map(|(lab, _)| region_name(i, lab))
            .collect();
        push(
            format!("(c) index {idx}"),
            inside.is_empty(),
            inside
                .first()
                .map(|r| format!("f+ lies in {r}"))
                .unwrap_or_default(),
        );

        let chain = contain(&d.y, &n.a_minus, &n.b_plus) && contain(&y_inv, &n.b_plus, &n.a_minus);
        push(
            format!("y{idx} chains"),
            chain,
            if chain {
                String::new()
            } else {
                format!("y{idx}(S \\ A{idx}-) in B{idx}+ or y{idx}^-1(S \\ B{idx}+) in A{idx}- fails")
            },
        );
    }
    VerificationReport { checks }
}

fn region_name(i: usize, label: &str) -> String {
    let (letter, sign) = label.split_at(1);
    format!("{letter}{}{sign}", i + 1)
}
