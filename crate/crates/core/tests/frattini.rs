use frattkit::frattini::catalog::{
    abelian, alternating, catalog, cyclic, dihedral, elementary_abelian, frattini_free_abelian,
    heisenberg_mod2, quaternion, symmetric,
};
use frattkit::frattini::{factorize, FiniteGroup, GroupError, Subgroup, DEFAULT_BUDGET};
use proptest::prelude::*;

fn find(g: &FiniteGroup, label: &str) -> usize {
    g.elements().find(|&a| g.label(a) == label).unwrap()
}

/// Burnside: in a p-group the Frattini subgroup is generated by p-th powers
/// and commutators.
fn p_group_frattini(g: &FiniteGroup, p: usize) -> Subgroup {
    let mut seeds = vec![];
    for a in g.elements() {
        let mut x = g.identity();
        for _ in 0..p {
            x = g.mul(x, a);
        }
        seeds.push(x);
        for b in g.elements() {
            seeds.push(g.commutator(a, b));
        }
    }
    g.generated_subgroup(&seeds)
}

fn prime_power(n: usize) -> Option<usize> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

#[test]
fn generated_subgroups() {
    let z4 = cyclic(4);
    assert!(z4.generated_subgroup(&[1]).is_whole());
    let s3 = symmetric(3);
    assert_eq!(s3.generated_subgroup(&[find(&s3, "(1 2)")]).order(), 2);
    let q = quaternion();
    let i = find(&q, "i");
    assert_eq!(q.format_set(q.generated_subgroup(&[i]).elements()), "{1,-1,i,-i}");
    assert!(q.generated_subgroup(&[]).is_trivial());
}

#[test]
fn maximal_subgroup_examples() {
    let z4 = cyclic(4);
    let m = z4.maximal_subgroups().unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].elements(), &[0, 2]);
    let v = elementary_abelian(2, 2).maximal_subgroups().unwrap();
    assert_eq!(v.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![2, 2, 2]);
    let q = quaternion();
    let qm = q.maximal_subgroups().unwrap();
    assert_eq!(qm.len(), 3);
    assert!(qm
        .iter()
        .all(|h| h.order() == 4 && q.is_cyclic_subgroup(h)));
    // S4: A4, three D4, four S3
    let s4 = symmetric(4).maximal_subgroups().unwrap();
    let mut orders: Vec<usize> = s4.iter().map(|h| h.order()).collect();
    orders.sort();
    assert_eq!(orders, vec![6, 6, 6, 6, 8, 8, 8, 12]);
    assert!(cyclic(1).maximal_subgroups().unwrap().is_empty());
}

trait CyclicSub {
    fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool;
}

impl CyclicSub for FiniteGroup {
    fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.elements().iter().any(|&a| self.element_order(a) == h.order())
    }
}

#[test]
fn frattini_exact_values() {
    assert_eq!(cyclic(4).frattini().unwrap().elements(), &[0, 2]);
    let q = quaternion();
    assert_eq!(q.format_set(q.frattini().unwrap().elements()), "{1,-1}");
    assert!(elementary_abelian(2, 2).frattini().unwrap().is_trivial());
    assert!(symmetric(3).frattini().unwrap().is_trivial());
    assert_eq!(dihedral(4).frattini().unwrap().order(), 2);
    assert!(symmetric(4).frattini().unwrap().is_trivial());
    assert!(alternating(4).frattini().unwrap().is_trivial());
}

#[test]
fn non_generator_examples() {
    let s3 = symmetric(3);
    assert_eq!(s3.non_generators().unwrap(), vec![s3.identity()]);
    assert_eq!(cyclic(4).non_generators().unwrap(), vec![0, 2]);
    assert_eq!(cyclic(1).non_generators().unwrap(), vec![0]);
    let big = abelian(&[2, 2, 2, 2, 5]);
    assert!(matches!(
        big.non_generators(),
        Err(GroupError::GroupTooLarge { limit: 64, .. })
    ));
}

#[test]
fn quotient_examples() {
    assert_eq!(cyclic(4).frattini_quotient().unwrap().group.describe(), "C2");
    let q8 = quaternion().frattini_quotient().unwrap().group;
    assert_eq!(q8.describe(), "C2 x C2");
    assert_eq!(q8.exponent(), 2);
    let v = elementary_abelian(2, 2).frattini_quotient().unwrap();
    assert_eq!(v.group.order(), 4);
    assert_eq!(v.projection, vec![0, 1, 2, 3]);
}

#[test]
fn nilpotency_and_normal_maximals() {
    assert!(quaternion().is_nilpotent_group());
    assert!(!symmetric(3).is_nilpotent_group());
    assert!(quaternion().all_maximals_normal().unwrap());
    assert!(!symmetric(3).all_maximals_normal().unwrap());
    assert!(abelian(&[2, 6]).all_maximals_normal().unwrap());
}

#[test]
fn heisenberg_is_dihedral_not_quaternion() {
    let h = heisenberg_mod2();
    let stats = |g: &FiniteGroup| g.order_statistics();
    assert_eq!(stats(&h), stats(&dihedral(4)));
    assert_ne!(stats(&h), stats(&quaternion()));
    assert_eq!(h.exponent(), quaternion().exponent());
}

#[test]
fn catalog_invariants() {
    for entry in catalog() {
        let g = &entry.group;
        let phi = g.frattini().unwrap();
        assert!(g.is_nilpotent(&phi), "{}: Phi not nilpotent", entry.name);
        assert!(g.is_normal(&phi), "{}: Phi not normal", entry.name);
        assert_eq!(
            g.non_generators().unwrap(),
            phi.elements(),
            "{}: non-generators differ from Phi",
            entry.name
        );
        let quotient = g.frattini_quotient().unwrap();
        assert!(quotient.group.frattini().unwrap().is_trivial(), "{}", entry.name);
        if quotient.group.is_cyclic() {
            assert!(g.is_cyclic(), "{}: cyclic quotient of non-cyclic group", entry.name);
        }
        if let Some(p) = prime_power(g.order()) {
            assert_eq!(phi, p_group_frattini(g, p), "{}: Burnside oracle", entry.name);
        }
    }
}

#[test]
fn frattini_free_abelian_instances() {
    for n in [4, 8, 9, 12] {
        let g = frattini_free_abelian(n);
        assert_eq!(g.order(), n);
        assert!(!g.is_cyclic());
        assert!(g.frattini().unwrap().is_trivial());
        assert!(g.all_maximals_normal().unwrap());
    }
}

#[test]
fn invariable_generation() {
    let s3 = symmetric(3);
    let t = find(&s3, "(1 2)");
    let c = find(&s3, "(1 2 3)");
    assert!(s3.invariably_generates(&[t, c], DEFAULT_BUDGET).unwrap());
    assert!(!s3.invariably_generates(&[c], DEFAULT_BUDGET).unwrap());
    for entry in catalog().iter().filter(|e| e.group.order() <= 12) {
        let all: Vec<usize> = entry.group.elements().collect();
        assert!(
            entry.group.invariably_generates(&all, DEFAULT_BUDGET).unwrap(),
            "{}",
            entry.name
        );
    }
    for entry in catalog() {
        let r = entry.group.check_invgen_criterion(DEFAULT_BUDGET).unwrap();
        assert!(r.agree(), "{}: {}", entry.name, r.display(&entry.group));
    }
    let q = quaternion().check_invgen_criterion(DEFAULT_BUDGET).unwrap();
    assert!(q.maximals_normal && q.every_generating_set_invariable);
    let z6 = cyclic(6).check_invgen_criterion(DEFAULT_BUDGET).unwrap();
    assert!(z6.maximals_normal && z6.every_generating_set_invariable);
    let s3r = s3.check_invgen_criterion(DEFAULT_BUDGET).unwrap();
    let w = s3r.witness.unwrap();
    assert!(s3.generated_subgroup(&w.generating_set).is_whole());
    assert!(!s3.generated_subgroup(&w.conjugates).is_whole());
}

#[test]
fn table_parsing() {
    let g = FiniteGroup::parse_cayley("# Z/4\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n").unwrap();
    assert_eq!(g, cyclic(4).with_labels((0..4).map(|i| i.to_string()).collect()));
    let e = FiniteGroup::parse_cayley("2\n0 1\n1 x\n").unwrap_err();
    assert_eq!((e.line, e.column), (3, 3));
    let e = FiniteGroup::parse_cayley("2\n0 1\n").unwrap_err();
    assert_eq!(e.line, 3);
    // a Latin square that is not associative
    let e = FiniteGroup::parse_cayley(
        "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n",
    )
    .unwrap_err();
    assert!(e.message.contains("not a group"), "{e}");
    assert!(FiniteGroup::parse_cayley("2\n0 1\n0 1\n").is_err());
}

#[test]
fn permutation_parsing() {
    let s3 = FiniteGroup::parse_permutations("(1 2)\n(1 2 3)\n").unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    let v = FiniteGroup::parse_permutations("(1 2)(3 4)\n(1 3)(2 4)\n").unwrap();
    assert_eq!(v.describe(), "C2 x C2");
    assert_eq!(FiniteGroup::parse_permutations("(1 2\n").unwrap_err().column, 5);
    assert!(FiniteGroup::parse_permutations("(1 2)(2 3)").is_err());
    assert!(FiniteGroup::parse_permutations("(0 1)").is_err());
    assert_eq!(FiniteGroup::parse_permutations("()").unwrap().order(), 1);
}

fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    // element a of g becomes perm[a]
    let n = g.order();
    let mut inv = vec![0; n];
    for (a, &b) in perm.iter().enumerate() {
        inv[b] = a;
    }
    let rows = (0..n)
        .map(|x| (0..n).map(|y| perm[g.mul(inv[x], inv[y])]).collect())
        .collect();
    FiniteGroup::from_table(rows, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cayley_round_trip(moduli in prop::collection::vec(1usize..5, 1..4)) {
        let g = abelian(&moduli);
        let text = g.to_cayley();
        let back = FiniteGroup::parse_cayley(&text).unwrap();
        prop_assert_eq!(back.to_cayley(), text);
    }

    #[test]
    fn subgroup_lists_round_trip(n in 1usize..30, d in 1usize..30) {
        let g = cyclic(n);
        let h = g.generated_subgroup(&[d % n]);
        prop_assert_eq!(Subgroup::parse(&g, &h.to_index_list()).unwrap(), h);
    }

    /// Φ(Z/n) is generated by rad(n), the product of the distinct primes.
    #[test]
    fn cyclic_frattini_is_radical_multiples(n in 1usize..=60) {
        let rad: usize = factorize(n).iter().map(|(p, _)| p).product();
        let expected: Vec<usize> = (0..n).filter(|x| x % rad == 0).collect();
        let phi = cyclic(n).frattini().unwrap();
        prop_assert_eq!(phi.elements().to_vec(), expected);
    }

    /// Frattini subgroups are carried along by relabelling the elements.
    #[test]
    fn frattini_is_isomorphism_invariant(
        which in 0usize..6,
        perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let g = [quaternion(), dihedral(4), abelian(&[4, 2]), cyclic(8), heisenberg_mod2(), elementary_abelian(2, 3)][which].clone();
        let mut p = perm;
        // keep the identity at index 0 so both tables agree on it
        let z = p.iter().position(|&x| x == 0).unwrap();
        p.swap(0, z);
        let h = relabel(&g, &p);
        let phi_g: Vec<usize> = {
            let mut v: Vec<usize> = g.frattini().unwrap().elements().iter().map(|&a| p[a]).collect();
            v.sort();
            v
        };
        let phi_h = h.frattini().unwrap();
        prop_assert_eq!(phi_h.elements().to_vec(), phi_g.clone());
        prop_assert_eq!(h.non_generators().unwrap(), phi_g);
    }
}
