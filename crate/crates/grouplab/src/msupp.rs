//! Supplement predicates: complements, M-supplements, and membership in the
//! class M(p^k) (every subgroup of order p^k has an M-supplement).
//!
//! Set coverage never materializes product sets: for subgroups H, K of M,
//! |HK| = |H||K| / |H cap K|, so "HK = M" is a popcount identity. The
//! product of two subgroups is itself a subgroup exactly when some lattice
//! member of that size contains both factors, which keeps the inner test to
//! subset checks against the complete lattice.

use crate::arith;
use crate::exec::{map_collect, ExecMode};
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::subgroup::SubgroupRef;
use crate::{Error, Result};

/// A (p, k) membership question for the class M(p^k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MClassQuery {
    p: u64,
    k: u32,
    order: u64,
}

impl MClassQuery {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let order = p
            .checked_pow(k)
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} overflows")))?;
        Ok(MClassQuery { p, k, order })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// p^k, the order of the subgroups the query ranges over.
    pub fn subgroup_order(&self) -> u64 {
        self.order
    }
}

impl std::fmt::Display for MClassQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M({}^{})", self.p, self.k)
    }
}

/// Per-subgroup outcome inside an `MClassReport`.
#[derive(Debug, Clone)]
pub struct SupplementOutcome {
    pub subgroup: SubgroupRef,
    /// First M-supplement in canonical lattice order, if any.
    pub supplement: Option<SubgroupRef>,
}

#[derive(Debug, Clone)]
pub struct MClassReport {
    pub query: MClassQuery,
    pub holds: bool,
    /// One entry per subgroup of order p^k, in canonical lattice order.
    pub witnesses: Vec<SupplementOutcome>,
    pub first_violation: Option<SubgroupRef>,
}

/// First K (canonical order) with G = HK and trivial intersection.
pub fn is_complemented(g: &FiniteGroup, h: &SubgroupRef) -> Result<Option<SubgroupRef>> {
    if !g.same_group(h.parent()) {
        return Err(Error::DifferentParents);
    }
    let lat = g.lattice()?;
    let target = g.order();
    for idx in 0..lat.len() {
        if h.order() * lat.order_of(idx) == target
            && h.members().intersection_count(lat.members_of(idx)) == 1
        {
            return Ok(Some(lat.subgroup(idx)));
        }
    }
    Ok(None)
}

/// First M-supplement of H in G, if any.
pub fn is_m_supplemented(g: &FiniteGroup, h: &SubgroupRef) -> Result<Option<SubgroupRef>> {
    if !g.same_group(h.parent()) {
        return Err(Error::DifferentParents);
    }
    let lat = g.lattice()?;
    let hidx = lat.position(h.members()).expect("a valid subgroup is in the lattice");
    Ok(m_supplement_in(&lat, lat.whole_index(), hidx).map(|k| lat.subgroup(k)))
}

/// First K <= M (canonical order) such that M = HK and, for every maximal
/// subgroup H_i of H, the product H_iK is a proper subgroup of M. Both H and
/// the ambient M are lattice indices; H must lie inside M.
pub fn m_supplement_in(lat: &SubgroupLattice, ambient: usize, h: usize) -> Option<usize> {
    let amb_bits = lat.members_of(ambient);
    let amb_order = lat.order_of(ambient);
    let h_bits = lat.members_of(h);
    let h_order = lat.order_of(h);
    debug_assert!(h_bits.is_subset(amb_bits));
    let maxes = lat.maximal_of_idx(h);

    'candidates: for kidx in 0..lat.len() {
        let k_bits = lat.members_of(kidx);
        if !k_bits.is_subset(amb_bits) {
            continue;
        }
        let k_order = lat.order_of(kidx);
        if h_order * k_order != amb_order * h_bits.intersection_count(k_bits) {
            continue;
        }
        for &mi in maxes {
            let mi = mi as usize;
            let m_bits = lat.members_of(mi);
            let product_size =
                lat.order_of(mi) * k_order / m_bits.intersection_count(k_bits);
            if product_size == amb_order {
                continue 'candidates;
            }
            let closed = lat.order_range(product_size).any(|x| {
                let x_bits = lat.members_of(x);
                m_bits.is_subset(x_bits) && k_bits.is_subset(x_bits)
            });
            if !closed {
                continue 'candidates;
            }
        }
        return Some(kidx);
    }
    None
}

pub fn in_m_class(g: &FiniteGroup, q: MClassQuery) -> Result<MClassReport> {
    in_m_class_with(g, q, ExecMode::Parallel)
}

pub fn in_m_class_with(g: &FiniteGroup, q: MClassQuery, mode: ExecMode) -> Result<MClassReport> {
    let lat = g.lattice()?;
    let whole = lat.whole_index();
    in_m_class_within(&lat, whole, q, mode)
}

/// Membership question asked of the subgroup at `ambient` (the whole group
/// for the plain entry points), using the parent's complete lattice.
pub fn in_m_class_within(
    lat: &SubgroupLattice,
    ambient: usize,
    q: MClassQuery,
    mode: ExecMode,
) -> Result<MClassReport> {
    let amb_order = lat.order_of(ambient) as u64;
    let part = arith::p_part(amb_order, q.p());
    if q.subgroup_order() > part {
        return Err(Error::HypothesisViolation {
            p: q.p(),
            k: q.k(),
            p_part: part as usize,
        });
    }
    let amb_bits = lat.members_of(ambient).clone();
    let targets: Vec<usize> = lat
        .order_range(q.subgroup_order() as usize)
        .filter(|&i| lat.members_of(i).is_subset(&amb_bits))
        .collect();
    let found: Vec<(usize, Option<usize>)> =
        map_collect(mode, targets, |h| (h, m_supplement_in(lat, ambient, h)));

    let witnesses: Vec<SupplementOutcome> = found
        .iter()
        .map(|&(h, k)| SupplementOutcome {
            subgroup: lat.subgroup(h),
            supplement: k.map(|k| lat.subgroup(k)),
        })
        .collect();
    let first_violation = witnesses
        .iter()
        .find(|w| w.supplement.is_none())
        .map(|w| w.subgroup.clone());
    Ok(MClassReport { query: q, holds: first_violation.is_none(), witnesses, first_violation })
}
