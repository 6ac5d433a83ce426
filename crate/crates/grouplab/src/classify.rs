//! Invariant-based structure tags for small groups and the scalar-action
//! test on the elementary abelian quotient P/Phi(P).

use crate::arith;
use crate::group::FiniteGroup;
use crate::subgroup::SubgroupRef;
use crate::{Error, Result};

/// Isomorphism tags decidable from element-order censuses alone. `Other`
/// deliberately lumps everything the predicates never need to distinguish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureTag {
    Cyclic(usize),
    ElementaryAbelian { p: u64, rank: u32 },
    Quaternion8,
    Other,
}

impl std::fmt::Display for StructureTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureTag::Cyclic(n) => write!(f, "cyclic({n})"),
            StructureTag::ElementaryAbelian { p, rank } => {
                write!(f, "elementary_abelian({p}^{rank})")
            }
            StructureTag::Quaternion8 => write!(f, "quaternion8"),
            StructureTag::Other => write!(f, "other"),
        }
    }
}

pub fn classify_small(h: &SubgroupRef) -> StructureTag {
    let g = h.parent();
    let n = h.order();
    if n == 1 {
        return StructureTag::Cyclic(1);
    }
    let members: Vec<usize> = h.member_indices().collect();
    let orders: Vec<usize> = members.iter().map(|&i| g.element_order(i)).collect();
    if orders.contains(&n) {
        return StructureTag::Cyclic(n);
    }
    let abelian = members
        .iter()
        .all(|&i| members.iter().all(|&j| g.mul(i, j) == g.mul(j, i)));
    // Cyclic was ruled out, so a common prime exponent means rank >= 2.
    let p = orders[1] as u64;
    if abelian && arith::is_prime(p) && orders.iter().skip(1).all(|&o| o as u64 == p) {
        return StructureTag::ElementaryAbelian { p, rank: arith::nu_p(n as u64, p) };
    }
    if n == 8 && !abelian && orders.iter().filter(|&&o| o == 2).count() == 1 {
        return StructureTag::Quaternion8;
    }
    StructureTag::Other
}

/// Outcome of `scalar_action`: conjugation by the chosen element raises
/// every coset of P/Phi(P) to the d-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalarActionWitness {
    /// Smallest exponent in [1, p-1] realizing the action.
    pub d: u64,
    /// True iff the acting cyclic group embeds into the automorphisms of
    /// P/Phi(P), i.e. the multiplicative order of d mod p equals the order
    /// of the acting element.
    pub faithful: bool,
    pub p: u64,
}

/// Test whether conjugation by element `x` acts on P/Phi(P) by a single
/// power map v -> v^d. Returns None when no single exponent works.
pub fn scalar_action(
    parent: &FiniteGroup,
    x: usize,
    p_sub: &SubgroupRef,
    p: u64,
) -> Result<Option<ScalarActionWitness>> {
    if !parent.same_group(p_sub.parent()) {
        return Err(Error::DifferentParents);
    }
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if !arith::is_power_of(p_sub.order() as u64, p) {
        return Err(Error::NotPGroup { order: p_sub.order(), p });
    }
    let gen_indices: Vec<usize> = parent
        .generators()
        .iter()
        .map(|g| parent.index_of(g).expect("generator is an element"))
        .collect();
    let normal = gen_indices
        .iter()
        .all(|&g| p_sub.member_indices().all(|h| p_sub.contains(parent.conjugate(h, g))));
    if !normal {
        return Err(Error::NotNormal { order: p_sub.order() });
    }
    assert!(x < parent.order());

    // Realize P standalone so its Frattini quotient is directly available.
    // When P is the whole group, reuse it (and its memoized lattice).
    let pg = if p_sub.is_whole() {
        parent.clone()
    } else {
        let gens = p_sub.generating_indices().iter().map(|&i| parent.element(i).clone()).collect();
        FiniteGroup::generate_with_config(parent.degree(), gens, *parent.config())?
    };
    let phi = pg.lattice()?.frattini();
    let v = pg.quotient(&phi)?;
    let vg = v.group().clone();

    // One representative in P for each element of V.
    let mut reps: Vec<Option<usize>> = vec![None; vg.order()];
    for y in 0..pg.order() {
        let img = v.element_image(&pg, y);
        if reps[img].is_none() {
            reps[img] = Some(y);
        }
    }
    // Conjugation by x preserves P and Phi(P), so it descends to V.
    let conj_on_v: Vec<usize> = reps
        .iter()
        .map(|rep| {
            let y = rep.expect("every coset has a representative");
            let y_parent = parent.index_of(pg.element(y)).expect("member of P");
            let y_conj = parent.conjugate(y_parent, x);
            let back = pg.index_of(parent.element(y_conj)).expect("P is invariant");
            v.element_image(&pg, back)
        })
        .collect();

    let d = (1..p).find(|&d| (0..vg.order()).all(|c| conj_on_v[c] == vg.power(c, d)));
    Ok(d.map(|d| {
        let faithful = arith::multiplicative_order(d, p) == parent.element_order(x) as u64;
        ScalarActionWitness { d, faithful, p }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    fn gen(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens = gens.iter().map(|t| p(t, degree)).collect();
        FiniteGroup::generate(degree, gens, 2000).unwrap()
    }

    fn d18() -> FiniteGroup {
        gen(9, &["(1 2 3 4 5 6 7 8 9)", "(2 9)(3 8)(4 7)(5 6)"])
    }

    #[test]
    fn tags_for_known_groups() {
        let q8 = gen(8, &["(1 2 3 4)(5 8 7 6)", "(1 5 3 7)(2 6 4 8)"]);
        assert_eq!(classify_small(&q8.full_subgroup()), StructureTag::Quaternion8);

        let trivial = FiniteGroup::generate(3, vec![], 10).unwrap();
        assert_eq!(classify_small(&trivial.full_subgroup()), StructureTag::Cyclic(1));

        let d18 = d18();
        let sylow3 = d18.lattice().unwrap().sylow(3);
        assert_eq!(classify_small(&sylow3), StructureTag::Cyclic(9));

        let d8 = gen(4, &["(1 2 3 4)", "(2 4)"]);
        let lat = d8.lattice().unwrap();
        let klein = lat.subgroup(
            (0..lat.len())
                .find(|&i| {
                    lat.order_of(i) == 4
                        && lat.members_of(i).ones().all(|m| d8.element_order(m) <= 2)
                })
                .unwrap(),
        );
        assert_eq!(klein.order(), 4);
        assert_eq!(classify_small(&klein), StructureTag::ElementaryAbelian { p: 2, rank: 2 });

        let c6 = gen(6, &["(1 2 3 4 5 6)"]);
        assert_eq!(classify_small(&c6.full_subgroup()), StructureTag::Cyclic(6));

        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(classify_small(&s3.full_subgroup()), StructureTag::Other);
    }

    #[test]
    fn reflection_inverts_the_rotation_subgroup_of_d18() {
        let g = d18();
        let sylow3 = g.lattice().unwrap().sylow(3);
        let b = g.index_of(&p("(2 9)(3 8)(4 7)(5 6)", 9)).unwrap();
        let w = scalar_action(&g, b, &sylow3, 3).unwrap().unwrap();
        assert_eq!(w.d, 2);
        assert!(w.faithful);
        assert_eq!(w.p, 3);
    }

    #[test]
    fn identity_acts_trivially() {
        let g = d18();
        let sylow3 = g.lattice().unwrap().sylow(3);
        let w = scalar_action(&g, 0, &sylow3, 3).unwrap().unwrap();
        assert_eq!(w.d, 1);
        assert!(w.faithful);
    }

    #[test]
    fn mixed_eigenvalues_yield_no_witness() {
        // x inverts one C3 factor and fixes the other: no single exponent.
        let g = gen(6, &["(1 2 3)", "(4 5 6)", "(5 6)"]);
        assert_eq!(g.order(), 18);
        let lat = g.lattice().unwrap();
        let ea9 = lat.sylow(3);
        assert_eq!(ea9.order(), 9);
        let x = g.index_of(&p("(5 6)", 6)).unwrap();
        assert_eq!(scalar_action(&g, x, &ea9, 3).unwrap(), None);
    }

    #[test]
    fn order_four_actor_with_square_in_kernel_is_unfaithful() {
        // x has order 4 but inverts the C3, so x^2 acts trivially.
        let g = gen(7, &["(1 2 3)", "(2 3)(4 5 6 7)"]);
        assert_eq!(g.order(), 12);
        let lat = g.lattice().unwrap();
        let sylow3 = lat.sylow(3);
        assert_eq!(sylow3.order(), 3);
        let x = g.index_of(&p("(2 3)(4 5 6 7)", 7)).unwrap();
        let w = scalar_action(&g, x, &sylow3, 3).unwrap().unwrap();
        assert_eq!(w.d, 2);
        assert!(!w.faithful);
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let lat = s3.lattice().unwrap();
        let refl = lat.subgroup(lat.subgroups_of_order(2)[0]);
        assert_eq!(
            scalar_action(&s3, 1, &refl, 2),
            Err(Error::NotNormal { order: 2 })
        );
    }
}
