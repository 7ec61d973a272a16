use frattkit::freeprod::{
    tree_gromov_product, Cylinder, End, FreeProductPresentation, RegionEnds, Syllable, Word,
};
use proptest::prelude::*;

fn presentations() -> Vec<FreeProductPresentation> {
    [vec![2, 3], vec![2, 2, 3], vec![3, 4], vec![2, 3, 5]]
        .into_iter()
        .map(|o| FreeProductPresentation::new(o).unwrap())
        .collect()
}

type RawWord = Vec<(usize, u32)>;

fn raw_word(max: usize) -> impl Strategy<Value = RawWord> {
    prop::collection::vec((0usize..3, 1u32..5), 0..max)
}

/// Naive evaluation: push letters one at a time onto a stack, merging and
/// cancelling against the top.
fn naive(p: &FreeProductPresentation, raw: &RawWord) -> Vec<(usize, u32)> {
    let mut stack: Vec<(usize, u32)> = vec![];
    for &(f, e) in raw {
        let f = f % p.rank();
        let e = e % p.order(f);
        if e == 0 {
            continue;
        }
        match stack.last_mut() {
            Some((g, x)) if *g == f => {
                *x = (*x + e) % p.order(f);
                if *x == 0 {
                    stack.pop();
                }
            }
            _ => stack.push((f, e)),
        }
    }
    stack
}

fn build(p: &FreeProductPresentation, raw: &RawWord) -> Word {
    raw.iter().fold(Word::identity(), |acc, &(f, e)| {
        let f = f % p.rank();
        p.multiply(&acc, &p.pow(&p.generator(f), e as i64))
    })
}

fn pairs(w: &Word) -> Vec<(usize, u32)> {
    w.syllables().iter().map(|s| (s.factor, s.exp)).collect()
}

/// An end `h · w^∞` when `w` is loxodromic.
fn some_end(p: &FreeProductPresentation, w: &Word, h: &Word) -> Option<End> {
    let (plus, _) = p.fixed_ends(w).ok()?;
    Some(p.apply_end(h, &plus))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiply_matches_naive_reduction(pi in 0usize..4, a in raw_word(8), b in raw_word(8)) {
        let p = &presentations()[pi];
        let mut ab = a.clone();
        ab.extend(&b);
        let w = p.multiply(&build(p, &a), &build(p, &b));
        prop_assert_eq!(pairs(&w), naive(p, &ab));
        for pair in w.syllables().windows(2) {
            prop_assert_ne!(pair[0].factor, pair[1].factor);
        }
        prop_assert!(w.syllables().iter().all(|s| s.exp > 0 && s.exp < p.order(s.factor)));
    }

    #[test]
    fn multiply_is_associative_with_inverses(pi in 0usize..4, a in raw_word(6), b in raw_word(6), c in raw_word(6)) {
        let p = &presentations()[pi];
        let (a, b, c) = (build(p, &a), build(p, &b), build(p, &c));
        prop_assert_eq!(
            p.multiply(&p.multiply(&a, &b), &c),
            p.multiply(&a, &p.multiply(&b, &c))
        );
        prop_assert!(p.multiply(&a, &p.inverse(&a)).is_empty());
        prop_assert_eq!(p.parse_word(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn fixed_ends_are_fixed_and_covariant(pi in 0usize..4, w in raw_word(7), h in raw_word(7)) {
        let p = &presentations()[pi];
        let (w, h) = (build(p, &w), build(p, &h));
        if let Ok((plus, minus)) = p.fixed_ends(&w) {
            prop_assert_eq!(p.apply_end(&w, &plus), plus.clone());
            prop_assert_eq!(p.apply_end(&w, &minus), minus.clone());
            prop_assert_ne!(&plus, &minus);
            let conj = p.conjugate(&w, &h);
            prop_assert_eq!(
                p.fixed_ends(&conj).unwrap(),
                (p.apply_end(&h, &plus), p.apply_end(&h, &minus))
            );
            prop_assert_eq!(End::parse(p, &plus.to_string()).unwrap(), plus);
        } else {
            prop_assert!(!p.is_loxodromic(&w));
        }
    }

    #[test]
    fn powers_push_ends_towards_the_attracting_end(
        pi in 0usize..4, w in raw_word(6), v in raw_word(6), h in raw_word(6)
    ) {
        let p = &presentations()[pi];
        let (w, v, h) = (build(p, &w), build(p, &v), build(p, &h));
        let (Ok((plus, minus)), Some(e)) = (p.fixed_ends(&w), some_end(p, &v, &h)) else {
            return Ok(());
        };
        prop_assume!(e != plus && e != minus);
        let products: Vec<usize> = (1..=8)
            .map(|n| tree_gromov_product(&p.apply_end(&p.pow(&w, n), &e), &plus).unwrap())
            .collect();
        let threshold = plus.preperiod().len();
        for k in 1..products.len() {
            if products[k - 1] > threshold {
                prop_assert!(products[k] > products[k - 1], "{:?}", products);
            }
        }
        prop_assert!(products[7] > products[0]);
    }

    #[test]
    fn cylinder_images_preserve_membership(
        pi in 0usize..4, w in raw_word(4), c in raw_word(12), ends in prop::collection::vec((raw_word(5), raw_word(5)), 3..6)
    ) {
        let p = &presentations()[pi];
        let w = build(p, &w);
        let Some(cyl) = Cylinder::new(build(p, &c)) else { return Ok(()) };
        let region = RegionEnds::from_cylinder(p, &cyl);
        let image_region = region.image(p, &w);
        let image = p.image_cylinder(&w, &cyl);
        let mut samples: Vec<End> = ends
            .iter()
            .filter_map(|(v, h)| some_end(p, &build(p, v), &build(p, h)))
            .collect();
        // ends inside the cylinder as well
        let inside: Vec<End> = samples
            .iter()
            .map(|e| p.apply_end(cyl.prefix(), e))
            .filter(|e| cyl.contains(e))
            .collect();
        samples.extend(inside);
        for e in &samples {
            let we = p.apply_end(&w, e);
            prop_assert_eq!(image_region.contains(p, &we), cyl.contains(e));
            if let Ok(img) = &image {
                prop_assert_eq!(img.contains(&we), cyl.contains(e));
            }
        }
        prop_assert_eq!(image.is_ok(), cyl.prefix().len() > w.len());
    }

    #[test]
    fn depth_cylinders_partition_the_ends(
        pi in 0usize..4, depth in 1usize..4, ends in prop::collection::vec((raw_word(5), raw_word(5)), 1..6)
    ) {
        let p = &presentations()[pi];
        let cylinders: Vec<Cylinder> = p
            .alphabet()
            .into_iter()
            .flat_map(|s: Syllable| {
                let first = Cylinder::new(p.pow(&p.generator(s.factor), s.exp as i64)).unwrap();
                p.deepen(&first, depth)
            })
            .collect();
        for (v, h) in &ends {
            if let Some(e) = some_end(p, &build(p, v), &build(p, h)) {
                prop_assert_eq!(cylinders.iter().filter(|c| c.contains(&e)).count(), 1);
            }
        }
        let union = cylinders
            .iter()
            .fold(RegionEnds::empty(), |acc, c| acc.union(&RegionEnds::from_cylinder(p, c)));
        prop_assert!(union.is_full());
    }

    #[test]
    fn region_text_round_trips(pi in 0usize..4, a in raw_word(5), b in raw_word(5)) {
        let p = &presentations()[pi];
        let r = [a, b]
            .iter()
            .filter_map(|x| Cylinder::new(build(p, x)))
            .fold(RegionEnds::empty(), |acc, c| acc.union(&RegionEnds::from_cylinder(p, &c)));
        for s in [r.clone(), r.complement()] {
            prop_assert_eq!(RegionEnds::parse(p, &s.display(p)).unwrap(), s);
        }
    }

    #[test]
    fn gromov_product_is_symmetric(pi in 0usize..4, v in raw_word(6), h in raw_word(6), v2 in raw_word(6), h2 in raw_word(6)) {
        let p = &presentations()[pi];
        if let (Some(x), Some(y)) = (some_end(p, &build(p, &v), &build(p, &h)), some_end(p, &build(p, &v2), &build(p, &h2))) {
            if x != y {
                let g = tree_gromov_product(&x, &y).unwrap();
                prop_assert_eq!(g, tree_gromov_product(&y, &x).unwrap());
                prop_assert_eq!(x.prefix(g), y.prefix(g));
                prop_assert_ne!(x.syllable(g), y.syllable(g));
            }
        }
    }
}
