//! Named small groups used by the catalog checks.

use super::group::{factorize, FiniteGroup, GroupError};
use super::invgen::{DEFAULT_BUDGET, INVGEN_CRITERION_LIMIT};
use super::subgroup::NON_GENERATOR_LIMIT;

fn abelian_rows(moduli: &[usize]) -> (Vec<Vec<usize>>, Vec<String>) {
    let n: usize = moduli.iter().product();
    let digits = |mut x: usize| {
        let mut d = vec![0; moduli.len()];
        for (i, &m) in moduli.iter().enumerate().rev() {
            d[i] = x % m;
            x /= m;
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(moduli).fold(0, |acc, (x, m)| acc * m + x);
    let rows = (0..n)
        .map(|a| {
            let da = digits(a);
            (0..n)
                .map(|b| {
                    let db = digits(b);
                    let sum: Vec<usize> = (0..moduli.len())
                        .map(|i| (da[i] + db[i]) % moduli[i])
                        .collect();
                    index(&sum)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|a| {
            let d = digits(a);
            if d.len() == 1 {
                d[0].to_string()
            } else {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    (rows, labels)
}

/// `Z/m_1 x … x Z/m_k` with tuple labels (plain integers when `k = 1`).
pub fn abelian(moduli: &[usize]) -> FiniteGroup {
    assert!(!moduli.is_empty() && moduli.iter().all(|&m| m >= 1));
    let (rows, labels) = abelian_rows(moduli);
    FiniteGroup::from_table(rows, Some(labels)).expect("abelian table")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    abelian(&[n])
}

/// `(Z/p)^k`.
pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    abelian(&vec![p; k])
}

/// `⊕ (Z/p_i)^{α_i}` for `n = ∏ p_i^{α_i}`: the same order as `Z/n` but with
/// trivial Frattini subgroup.
pub fn frattini_free_abelian(n: usize) -> FiniteGroup {
    let moduli: Vec<usize> = factorize(n)
        .into_iter()
        .flat_map(|(p, a)| std::iter::repeat_n(p, a as usize))
        .collect();
    if moduli.is_empty() {
        cyclic(1)
    } else {
        abelian(&moduli)
    }
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let n = g.order() * m;
    let rows = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
        .collect();
    FiniteGroup::from_table(rows, Some(labels)).expect("product of groups")
}

fn perm_group(gens: &[Vec<usize>], degree: usize) -> FiniteGroup {
    FiniteGroup::from_permutations(gens, degree).expect("small permutation group")
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (j, &x) in points.iter().enumerate() {
        p[x] = points[(j + 1) % points.len()];
    }
    p
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n < 2 {
        return perm_group(&[], n);
    }
    let all: Vec<usize> = (0..n).collect();
    perm_group(&[cycle(n, &[0, 1]), cycle(n, &all)], n)
}

pub fn alternating(n: usize) -> FiniteGroup {
    let gens: Vec<Vec<usize>> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
    perm_group(&gens, n)
}

/// The symmetry group of a regular `n`-gon, of order `2n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let all: Vec<usize> = (0..n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    perm_group(&[cycle(n, &all), reflection], n)
}

/// `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroup {
    // units 1, i, j, k as 0..4; element index = 2 * unit + (sign bit)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let rows = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, neg) = UNIT[a / 2][b / 2];
                    2 * u + ((a % 2 + b % 2 + neg as usize) % 2)
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table(rows, Some(labels)).expect("quaternion table")
}

/// Upper unitriangular 3x3 matrices over F_2, labelled `(a,b,c)` for the
/// matrix with `a, b` on the superdiagonal and `c` in the corner.
pub fn heisenberg_mod2() -> FiniteGroup {
    let split = |x: usize| (x >> 2 & 1, x >> 1 & 1, x & 1);
    let rows = (0..8)
        .map(|x| {
            let (a, b, c) = split(x);
            (0..8)
                .map(|y| {
                    let (a2, b2, c2) = split(y);
                    ((a ^ a2) << 2) | ((b ^ b2) << 1) | (c ^ c2 ^ (a & b2))
                })
                .collect()
        })
        .collect();
    let labels = (0..8)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("({a},{b},{c})")
        })
        .collect();
    FiniteGroup::from_table(rows, Some(labels)).expect("Heisenberg table")
}

/// A named catalog group.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
}

/// The fixed list checked by `catalog-test`: cyclic groups of order 1 to 12,
/// then a selection of small non-cyclic groups.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=12)
        .map(|n| CatalogEntry {
            name: format!("Z/{n}"),
            group: cyclic(n),
        })
        .collect();
    let named = [
        ("(Z/2)^2", elementary_abelian(2, 2)),
        ("(Z/2)^3", elementary_abelian(2, 3)),
        ("Z/4 x Z/2", abelian(&[4, 2])),
        ("S3", symmetric(3)),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("A4", alternating(4)),
        ("D6", dihedral(6)),
        ("S4", symmetric(4)),
        ("Heisenberg mod 2", heisenberg_mod2()),
        ("(Z/2)^2 x Z/3", abelian(&[2, 2, 3])),
    ];
    out.extend(named.into_iter().map(|(name, group)| CatalogEntry {
        name: name.into(),
        group,
    }));
    out
}

/// Looks up a catalog group by name.
pub fn catalog_group(name: &str) -> Option<FiniteGroup> {
    catalog().into_iter().find(|e| e.name == name).map(|e| e.group)
}

/// One named property checked on a catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogCheck {
    pub name: &'static str,
    pub passed: bool,
}

/// The Frattini and invariable-generation properties of a group. Checks
/// whose brute force would exceed its size cap are left out.
pub fn frattini_checks(g: &FiniteGroup) -> Result<Vec<CatalogCheck>, GroupError> {
    let mut out = vec![];
    let mut push = |name, passed| out.push(CatalogCheck { name, passed });
    let phi = g.frattini()?;
    push("Phi nilpotent", g.is_nilpotent(&phi));
    push("Phi normal", g.is_normal(&phi));
    if g.order() <= NON_GENERATOR_LIMIT {
        push("Phi = non-generators", g.non_generators()? == phi.elements());
    }
    let quotient = g.frattini_quotient()?;
    push("Phi(G/Phi) trivial", quotient.group.frattini()?.is_trivial());
    push(
        "cyclic G/Phi implies cyclic G",
        !quotient.group.is_cyclic() || g.is_cyclic(),
    );
    if g.order() <= 12 {
        let all: Vec<usize> = g.elements().collect();
        push("G invariably generates G", g.invariably_generates(&all, DEFAULT_BUDGET)?);
    }
    if g.order() <= INVGEN_CRITERION_LIMIT {
        push(
            "invariable generating sets iff normal maximals",
            g.check_invgen_criterion(DEFAULT_BUDGET)?.agree(),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(frattini_free_abelian(12).order(), 12);
        assert_eq!(catalog().len(), 23);
    }

    #[test]
    fn distinguishing_order_eight() {
        // involution counts: D4 has 5, Q8 has 1
        let inv = |g: &FiniteGroup| g.elements().filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(inv(&dihedral(4)), 5);
        assert_eq!(inv(&quaternion()), 1);
        assert_eq!(inv(&heisenberg_mod2()), 5);
        assert!(!heisenberg_mod2().is_abelian());
        assert_eq!(heisenberg_mod2().exponent(), 4);
    }

    #[test]
    fn quaternion_labels() {
        let q = quaternion();
        let i = 2;
        let j = 4;
        assert_eq!(q.label(q.mul(i, j)), "k");
        assert_eq!(q.label(q.mul(j, i)), "-k");
        assert_eq!(q.label(q.mul(i, i)), "-1");
    }

    #[test]
    fn describe_abelian() {
        assert_eq!(cyclic(4).describe(), "C4");
        assert_eq!(abelian(&[2, 2, 3]).describe(), "C2 x C2 x C3");
        assert_eq!(abelian(&[4, 2]).describe(), "C4 x C2");
        assert_eq!(cyclic(12).describe(), "C12");
        assert_eq!(abelian(&[2, 6]).describe(), "C2 x C2 x C3");
        assert_eq!(cyclic(1).describe(), "1");
        assert_eq!(symmetric(3).describe(), "nonabelian of order 6");
    }
}
