//! Structural characterizations checked against the definitional supplement
//! predicates: the normal-Sylow/scalar-action form, the critical-type case
//! split, the supersolvable-quotient form, and the Frattini-containment form
//! for p-groups.

use crate::arith;
use crate::classify::{classify_small, scalar_action, StructureTag};
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::msupp::{in_m_class, MClassQuery};
use crate::{Error, Result};

/// Outcome of one structural check; `detail` is nonempty on failure and
/// carries the witness (or offending subgroup) description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Self {
        Verdict { passed: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Verdict { passed: false, detail: detail.into() }
    }
}

/// First subgroup of the given order that does not contain the Frattini
/// subgroup, described for the failure detail.
pub(crate) fn frattini_gap(lat: &SubgroupLattice, order: usize) -> Option<String> {
    let phi = lat.frattini_index();
    let phi_bits = lat.members_of(phi);
    for u in lat.order_range(order) {
        if !phi_bits.is_subset(lat.members_of(u)) {
            return Some(format!(
                "frattini subgroup not contained in {}",
                lat.subgroup(u).describe()
            ));
        }
    }
    None
}

fn hypothesis_guard(g: &FiniteGroup, q: MClassQuery) -> Result<()> {
    let p_part = arith::p_part(g.order() as u64, q.p());
    if q.subgroup_order() > p_part {
        return Err(Error::HypothesisViolation { p: q.p(), k: q.k(), p_part: p_part as usize });
    }
    Ok(())
}

/// Structural equivalent of membership in M(p^k) for groups with trivial
/// p'-core, k ≥ 2: a normal Sylow p-subgroup P with Φ(G) = Φ(P) contained
/// in every subgroup of order p^{k-1}, and a cyclic p-complement ⟨x⟩ whose
/// conjugation action on P/Φ(P) is a faithful power map.
pub fn theorem_a_rhs(g: &FiniteGroup, q: MClassQuery) -> Result<Verdict> {
    if q.k() < 2 {
        return Err(Error::Precondition(
            "structural characterization applies only for k >= 2".into(),
        ));
    }
    hypothesis_guard(g, q)?;
    let p = q.p();
    let lat = g.lattice()?;
    if !lat.o_p_prime(p).is_trivial() {
        return Err(Error::Precondition(format!("the {p}'-core must be trivial")));
    }
    if !lat.sylow_is_normal(p) {
        return Ok(Verdict::fail(format!("sylow {p}-subgroup is not normal")));
    }
    let sylow_idx = lat.sylow_index(p);
    if lat.frattini_index() != lat.frattini_index_of(sylow_idx) {
        return Ok(Verdict::fail(
            "frattini subgroup of the group differs from that of its sylow subgroup",
        ));
    }
    if let Some(gap) = frattini_gap(&lat, (q.subgroup_order() / p) as usize) {
        return Ok(Verdict::fail(gap));
    }
    let sylow = lat.subgroup(sylow_idx);
    for comp in lat.p_complements(p) {
        for x in comp.member_indices() {
            if g.element_order(x) != comp.order() {
                continue;
            }
            if let Some(w) = scalar_action(g, x, &sylow, p)? {
                if w.faithful {
                    return Ok(Verdict::pass(format!(
                        "x = {} d = {}",
                        g.element(x).cycle_string(),
                        w.d
                    )));
                }
            }
        }
    }
    Ok(Verdict::fail(format!(
        "no cyclic {p}-complement acts faithfully by a power map on the sylow frattini quotient"
    )))
}

/// Shape of a group all of whose order-p^k subgroups are M-supplemented,
/// when that constraint pins the group down (trivial p'-core and Frattini
/// subgroup of order exactly p^{k-1}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalTypeCase {
    /// Cyclic self-centralizing Sylow subgroup of order p^k extended by a
    /// cyclic group of order dividing p - 1.
    Case1,
    /// p^k = 4 and the group is the quaternion group of order 8.
    Case2,
    /// Some hypothesis fails; the case split does not apply.
    NotCriticalType,
    /// Hypotheses hold but neither shape matches; must never occur.
    Contradiction,
}

impl std::fmt::Display for CriticalTypeCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CriticalTypeCase::Case1 => "case1",
            CriticalTypeCase::Case2 => "case2",
            CriticalTypeCase::NotCriticalType => "not_critical_type",
            CriticalTypeCase::Contradiction => "contradiction",
        })
    }
}

pub fn theorem_d_classify(g: &FiniteGroup, q: MClassQuery) -> Result<CriticalTypeCase> {
    if q.k() < 2 || hypothesis_guard(g, q).is_err() {
        return Ok(CriticalTypeCase::NotCriticalType);
    }
    let holds = in_m_class(g, q)?.holds;
    theorem_d_classify_given(g, q, holds)
}

/// Case split with the M(p^k) membership already known, so callers holding
/// a memoized answer avoid recomputing it.
pub fn theorem_d_classify_given(
    g: &FiniteGroup,
    q: MClassQuery,
    in_m: bool,
) -> Result<CriticalTypeCase> {
    if q.k() < 2 || !in_m {
        return Ok(CriticalTypeCase::NotCriticalType);
    }
    let p = q.p();
    let lat = g.lattice()?;
    if !lat.o_p_prime(p).is_trivial() {
        return Ok(CriticalTypeCase::NotCriticalType);
    }
    if lat.frattini().order() as u64 != q.subgroup_order() / p {
        return Ok(CriticalTypeCase::NotCriticalType);
    }
    let sylow = lat.sylow(p);
    if classify_small(&sylow) == StructureTag::Cyclic(q.subgroup_order() as usize)
        && g.centralizer(&sylow)?.members() == sylow.members()
        && lat.p_complements(p).iter().any(
            |h| matches!(classify_small(h), StructureTag::Cyclic(m) if (p - 1).is_multiple_of(m as u64)),
        )
    {
        return Ok(CriticalTypeCase::Case1);
    }
    if q.subgroup_order() == 4 && classify_small(&g.full_subgroup()) == StructureTag::Quaternion8 {
        return Ok(CriticalTypeCase::Case2);
    }
    Ok(CriticalTypeCase::Contradiction)
}

/// Necessary condition derived from membership in M(p^k): modulo its
/// p'-core the group is supersolvable with a normal Sylow p-subgroup and a
/// cyclic p-complement.
pub fn corollary_b_rhs(g: &FiniteGroup, q: MClassQuery) -> Result<Verdict> {
    if q.k() < 2 {
        return Err(Error::Precondition(
            "supersolvable-quotient characterization applies only for k >= 2".into(),
        ));
    }
    hypothesis_guard(g, q)?;
    let p = q.p();
    let core = g.lattice()?.o_p_prime(p);
    // A trivial core gives a quotient isomorphic to the group itself, so
    // skip the regular-representation rebuild.
    let quo;
    let target = if core.is_trivial() {
        g
    } else {
        quo = g.quotient(&core)?;
        quo.group()
    };
    let lat = target.lattice()?;
    if !lat.is_supersolvable() {
        return Ok(Verdict::fail(format!("quotient by the {p}'-core is not supersolvable")));
    }
    if !lat.sylow_is_normal(p) {
        return Ok(Verdict::fail(format!(
            "quotient by the {p}'-core has no normal sylow {p}-subgroup"
        )));
    }
    if !lat
        .p_complements(p)
        .iter()
        .any(|h| matches!(classify_small(h), StructureTag::Cyclic(_)))
    {
        return Ok(Verdict::fail(format!(
            "quotient by the {p}'-core has no cyclic {p}-complement"
        )));
    }
    Ok(Verdict::pass(""))
}

/// Structural equivalent of membership in M(p^k) for p-groups: the
/// Frattini subgroup lies in every subgroup of order p^{k-1}.
pub fn corollary_c_rhs(g: &FiniteGroup, q: MClassQuery) -> Result<Verdict> {
    let p = q.p();
    if !arith::is_power_of(g.order() as u64, p) {
        return Err(Error::NotPGroup { order: g.order(), p });
    }
    hypothesis_guard(g, q)?;
    let lat = g.lattice()?;
    match frattini_gap(&lat, (q.subgroup_order() / p) as usize) {
        Some(gap) => Ok(Verdict::fail(gap)),
        None => Ok(Verdict::pass("")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupConfig;
    use crate::perm::Permutation;

    fn gen(degree: usize, gens: &[&str]) -> FiniteGroup {
        let perms: Vec<Permutation> =
            gens.iter().map(|t| Permutation::parse_cycles(t, degree).unwrap()).collect();
        FiniteGroup::generate_with_config(degree, perms, GroupConfig::default()).unwrap()
    }

    fn d18() -> FiniteGroup {
        gen(9, &["(1 2 3 4 5 6 7 8 9)", "(2 9)(3 8)(4 7)(5 6)"])
    }

    fn d8() -> FiniteGroup {
        gen(4, &["(1 2 3 4)", "(2 4)"])
    }

    fn q8() -> FiniteGroup {
        gen(8, &["(1 2 3 4)(5 8 7 6)", "(1 5 3 7)(2 6 4 8)"])
    }

    fn q(p: u64, k: u32) -> MClassQuery {
        MClassQuery::new(p, k).unwrap()
    }

    #[test]
    fn a_holds_for_d18_with_inverting_reflection() {
        let v = theorem_a_rhs(&d18(), q(3, 2)).unwrap();
        assert!(v.passed, "{}", v.detail);
        assert!(v.detail.contains("d = 2"), "{}", v.detail);
    }

    #[test]
    fn a_fails_for_d8_on_frattini_containment() {
        let v = theorem_a_rhs(&d8(), q(2, 2)).unwrap();
        assert!(!v.passed);
        assert!(v.detail.contains("not contained"), "{}", v.detail);
    }

    #[test]
    fn a_holds_for_q8_with_trivial_complement() {
        let v = theorem_a_rhs(&q8(), q(2, 2)).unwrap();
        assert!(v.passed, "{}", v.detail);
        assert_eq!(v.detail, "x = () d = 1");
    }

    #[test]
    fn a_rejects_small_k_and_nontrivial_core() {
        assert!(matches!(theorem_a_rhs(&d8(), q(2, 1)), Err(Error::Precondition(_))));
        let c12 = gen(7, &["(1 2 3)", "(4 5 6 7)"]);
        assert_eq!(c12.order(), 12);
        assert!(matches!(theorem_a_rhs(&c12, q(2, 2)), Err(Error::Precondition(_))));
        assert!(matches!(
            theorem_a_rhs(&d8(), q(2, 4)),
            Err(Error::HypothesisViolation { p: 2, k: 4, p_part: 8 })
        ));
    }

    #[test]
    fn a_matches_the_definitional_class_on_small_groups() {
        let cases = [(d8(), 2), (q8(), 2), (d18(), 3), (gen(8, &["(1 2 3 4 5 6 7 8)"]), 2)];
        for (g, p) in cases {
            let mut kmax = 0;
            let mut n = g.order() as u64;
            while n.is_multiple_of(p) {
                kmax += 1;
                n /= p;
            }
            for k in 2..=kmax {
                let lhs = in_m_class(&g, q(p, k)).unwrap().holds;
                let rhs = theorem_a_rhs(&g, q(p, k)).unwrap();
                assert_eq!(lhs, rhs.passed, "order {} p {} k {}: {}", g.order(), p, k, rhs.detail);
            }
        }
    }

    #[test]
    fn d_classifies_the_frozen_examples() {
        assert_eq!(theorem_d_classify(&d18(), q(3, 2)).unwrap(), CriticalTypeCase::Case1);
        assert_eq!(theorem_d_classify(&q8(), q(2, 2)).unwrap(), CriticalTypeCase::Case2);
        assert_eq!(theorem_d_classify(&d8(), q(2, 2)).unwrap(), CriticalTypeCase::NotCriticalType);
        // k = 1 and hypothesis-violating queries fall outside the case split.
        assert_eq!(theorem_d_classify(&d18(), q(3, 1)).unwrap(), CriticalTypeCase::NotCriticalType);
        assert_eq!(theorem_d_classify(&d8(), q(3, 2)).unwrap(), CriticalTypeCase::NotCriticalType);
        // Q8 at k = 3 is in the class but its frattini subgroup is too small.
        assert_eq!(theorem_d_classify(&q8(), q(2, 3)).unwrap(), CriticalTypeCase::NotCriticalType);
        // A cyclic 2-group lands in the self-centralizing cyclic case.
        let c8 = gen(8, &["(1 2 3 4 5 6 7 8)"]);
        assert_eq!(theorem_d_classify(&c8, q(2, 3)).unwrap(), CriticalTypeCase::Case1);
    }

    #[test]
    fn b_holds_for_groups_in_the_class() {
        for (g, p) in [(d18(), 3), (q8(), 2)] {
            let v = corollary_b_rhs(&g, q(p, 2)).unwrap();
            assert!(v.passed, "{}", v.detail);
        }
        let c3xq8 = gen(11, &["(1 2 3)", "(4 5 6 7)(8 11 10 9)", "(4 8 6 10)(5 9 7 11)"]);
        assert_eq!(c3xq8.order(), 24);
        let v = corollary_b_rhs(&c3xq8, q(2, 2)).unwrap();
        assert!(v.passed, "{}", v.detail);
    }

    #[test]
    fn b_fails_where_the_quotient_is_not_supersolvable() {
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(s4.order(), 24);
        let v = corollary_b_rhs(&s4, q(2, 2)).unwrap();
        assert!(!v.passed);
        assert!(v.detail.contains("not supersolvable"), "{}", v.detail);
        assert!(matches!(corollary_b_rhs(&s4, q(2, 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn c_matches_the_definitional_class_on_p_groups() {
        let c8 = gen(8, &["(1 2 3 4 5 6 7 8)"]);
        let ea8 = gen(6, &["(1 2)", "(3 4)", "(5 6)"]);
        for (g, p) in [(d8(), 2), (q8(), 2), (c8, 2), (ea8, 2)] {
            let mut kmax = 0;
            let mut n = g.order() as u64;
            while n.is_multiple_of(p) {
                kmax += 1;
                n /= p;
            }
            for k in 1..=kmax {
                let lhs = in_m_class(&g, q(p, k)).unwrap().holds;
                let rhs = corollary_c_rhs(&g, q(p, k)).unwrap();
                assert_eq!(lhs, rhs.passed, "order {} k {}: {}", g.order(), k, rhs.detail);
            }
        }
    }

    #[test]
    fn c_frozen_verdicts() {
        assert!(corollary_c_rhs(&q8(), q(2, 2)).unwrap().passed);
        let v = corollary_c_rhs(&d8(), q(2, 2)).unwrap();
        assert!(!v.passed);
        assert!(v.detail.contains("not contained"), "{}", v.detail);
    }

    #[test]
    fn c_rejects_mixed_order_and_oversized_queries() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert!(matches!(corollary_c_rhs(&s3, q(2, 1)), Err(Error::NotPGroup { order: 6, p: 2 })));
        assert!(matches!(
            corollary_c_rhs(&q8(), q(2, 4)),
            Err(Error::HypothesisViolation { p: 2, k: 4, p_part: 8 })
        ));
    }
}
