//! Full subgroup lattice of a finite group.
//!
//! Enumeration is cyclic extension: seed with every cyclic subgroup, then
//! repeatedly extend a known subgroup by one outside element and close,
//! deduplicating by member bitset, until nothing new appears. The result is
//! sorted by (order, member sequence) and that order is the canonical
//! subgroup order used everywhere: witness searches return the first hit in
//! it, so reports are reproducible run to run.
//!
//! The lattice is computed at most once per group instance and shared.

use crate::bitset::Bitset;
use crate::group::FiniteGroup;
use crate::subgroup::SubgroupRef;
use crate::{arith, Error, Result};
use std::collections::HashSet;
use std::sync::Arc;

pub(crate) struct LatticeData {
    subs: Vec<Bitset>,
    orders: Vec<u32>,
    normal: Vec<bool>,
    maximal_of: Vec<Vec<u32>>,
}

#[derive(Clone)]
pub struct SubgroupLattice {
    parent: FiniteGroup,
    data: Arc<LatticeData>,
}

impl FiniteGroup {
    /// Enumerate (or fetch the cached) subgroup lattice.
    pub fn lattice(&self) -> Result<SubgroupLattice> {
        let data = self
            .inner
            .lattice_slot
            .get_or_init(|| build_lattice(self).map(Arc::new))
            .clone()?;
        Ok(SubgroupLattice { parent: self.clone(), data })
    }
}

fn build_lattice(group: &FiniteGroup) -> Result<LatticeData> {
    let order = group.order();
    let budget = group.config().subgroup_budget;
    let mut known: HashSet<Bitset> = HashSet::new();
    let mut work: Vec<(Bitset, Vec<usize>)> = Vec::new();

    let admit = |bits: Bitset, gens: Vec<usize>,
                     known: &mut HashSet<Bitset>,
                     work: &mut Vec<(Bitset, Vec<usize>)>|
     -> Result<()> {
        if known.insert(bits.clone()) {
            if known.len() > budget {
                return Err(Error::SubgroupBudgetExceeded { budget, order });
            }
            work.push((bits, gens));
        }
        Ok(())
    };

    for e in 0..order {
        let bits = group.closure_bits(&[e]);
        admit(bits, vec![e], &mut known, &mut work)?;
    }
    let mut head = 0;
    while head < work.len() {
        let (s_bits, s_gens) = work[head].clone();
        head += 1;
        if s_bits.count() == order {
            continue;
        }
        for g in 0..order {
            if s_bits.get(g) {
                continue;
            }
            let mut gens = s_gens.clone();
            gens.push(g);
            let t = group.closure_bits(&gens);
            admit(t, gens, &mut known, &mut work)?;
        }
    }

    let mut subs: Vec<Bitset> = work.into_iter().map(|(b, _)| b).collect();
    subs.sort_unstable_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
    let orders: Vec<u32> = subs.iter().map(|b| b.count() as u32).collect();
    assert_eq!(orders[0], 1, "lattice must contain the trivial subgroup");
    assert_eq!(orders[subs.len() - 1] as usize, order, "lattice must contain the whole group");
    assert!(orders.iter().all(|&o| order.is_multiple_of(o as usize)));

    // Conjugating every member by every generator fixes a subgroup setwise
    // iff the whole group normalizes it.
    let gen_indices: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.index_of(g).expect("generator is an element"))
        .collect();
    let normal: Vec<bool> = subs
        .iter()
        .map(|bits| {
            gen_indices.iter().all(|&g| bits.ones().all(|h| bits.get(group.conjugate(h, g))))
        })
        .collect();

    let maximal_of: Vec<Vec<u32>> = (0..subs.len())
        .map(|j| {
            let below: Vec<u32> = (0..j)
                .filter(|&i| {
                    orders[j].is_multiple_of(orders[i])
                        && orders[i] < orders[j]
                        && subs[i].is_subset(&subs[j])
                })
                .map(|i| i as u32)
                .collect();
            below
                .iter()
                .copied()
                .filter(|&i| {
                    !below.iter().any(|&l| {
                        orders[l as usize] > orders[i as usize]
                            && subs[i as usize].is_subset(&subs[l as usize])
                    })
                })
                .collect()
        })
        .collect();

    Ok(LatticeData { subs, orders, normal, maximal_of })
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupLattice({} subgroups of order-{} group)", self.len(), self.parent.order())
    }
}

impl SubgroupLattice {
    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.data.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order_of(&self, idx: usize) -> usize {
        self.data.orders[idx] as usize
    }

    pub fn members_of(&self, idx: usize) -> &Bitset {
        &self.data.subs[idx]
    }

    pub fn subgroup(&self, idx: usize) -> SubgroupRef {
        SubgroupRef::from_closed_unchecked(self.parent.clone(), self.data.subs[idx].clone())
    }

    pub fn subgroups(&self) -> impl Iterator<Item = SubgroupRef> + '_ {
        (0..self.len()).map(|i| self.subgroup(i))
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.len() - 1
    }

    /// Position of a member bitset in canonical order.
    pub fn position(&self, bits: &Bitset) -> Option<usize> {
        self.data
            .subs
            .binary_search_by(|probe| {
                probe.count().cmp(&bits.count()).then_with(|| probe.cmp(bits))
            })
            .ok()
    }

    /// Position of a subgroup; panics if it belongs to a different group.
    /// A complete lattice contains every closed subgroup of its parent.
    pub fn index_of(&self, sub: &SubgroupRef) -> usize {
        assert!(self.parent.same_group(sub.parent()), "subgroup of a different group");
        self.position(sub.members()).expect("complete lattice contains every subgroup")
    }

    /// Indices of all subgroups of the given order, in canonical order.
    pub fn subgroups_of_order(&self, m: usize) -> Vec<usize> {
        self.order_range(m).collect()
    }

    /// Index range holding exactly the subgroups of the given order.
    pub fn order_range(&self, m: usize) -> std::ops::Range<usize> {
        let start = self.data.subs.partition_point(|b| b.count() < m);
        let end = self.data.subs.partition_point(|b| b.count() <= m);
        start..end
    }

    pub fn is_normal_idx(&self, idx: usize) -> bool {
        self.data.normal[idx]
    }

    pub fn is_normal(&self, sub: &SubgroupRef) -> bool {
        self.data.normal[self.index_of(sub)]
    }

    pub fn normal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.data.normal[i])
    }

    /// Maximal proper subgroups of the subgroup at `idx`.
    pub fn maximal_of_idx(&self, idx: usize) -> &[u32] {
        &self.data.maximal_of[idx]
    }

    pub fn maximal_subgroups_of(&self, sub: &SubgroupRef) -> Vec<SubgroupRef> {
        self.maximal_of_idx(self.index_of(sub)).iter().map(|&i| self.subgroup(i as usize)).collect()
    }

    /// Frattini subgroup of the whole group: intersection of its maximal
    /// subgroups; the whole group itself when there are none (trivial group).
    pub fn frattini(&self) -> SubgroupRef {
        self.subgroup(self.frattini_index())
    }

    pub fn frattini_index(&self) -> usize {
        self.frattini_index_of(self.whole_index())
    }

    /// Frattini subgroup of the subgroup at `idx`, computed inside that
    /// subgroup (its maximal subgroups all appear in this lattice).
    pub fn frattini_index_of(&self, idx: usize) -> usize {
        let maxes = self.maximal_of_idx(idx);
        if maxes.is_empty() {
            return idx;
        }
        let mut bits = self.data.subs[maxes[0] as usize].clone();
        for &m in &maxes[1..] {
            bits = bits.and(&self.data.subs[m as usize]);
        }
        self.position(&bits).expect("intersection of subgroups is a subgroup")
    }

    /// First subgroup (canonical order) whose order is the full p-part of
    /// |G|; the trivial subgroup when p does not divide |G|.
    pub fn sylow(&self, p: u64) -> SubgroupRef {
        self.subgroup(self.sylow_index(p))
    }

    pub fn sylow_index(&self, p: u64) -> usize {
        let part = arith::p_part(self.parent.order() as u64, p) as usize;
        self.subgroups_of_order(part)[0]
    }

    pub fn sylow_is_normal(&self, p: u64) -> bool {
        self.is_normal_idx(self.sylow_index(p))
    }

    /// Largest normal subgroup of order coprime to p: the join of all normal
    /// p'-subgroups, which is again a normal p'-subgroup.
    pub fn o_p_prime(&self, p: u64) -> SubgroupRef {
        let mut union = Bitset::new(self.parent.order());
        union.set(0);
        for i in self.normal_indices() {
            if !(self.order_of(i) as u64).is_multiple_of(p) {
                union.or_with(&self.data.subs[i]);
            }
        }
        let seed: Vec<usize> = union.ones().collect();
        let join = self.parent.closure_bits(&seed);
        let idx = self.position(&join).expect("join of normal subgroups is a subgroup");
        assert!(
            self.is_normal_idx(idx) && !(self.order_of(idx) as u64).is_multiple_of(p),
            "join of normal p'-subgroups must be a normal p'-subgroup"
        );
        self.subgroup(idx)
    }

    /// All subgroups of order |G| / |G|_p, in canonical order.
    pub fn p_complements(&self, p: u64) -> Vec<SubgroupRef> {
        let part = arith::p_part(self.parent.order() as u64, p) as usize;
        self.subgroups_of_order(self.parent.order() / part)
            .into_iter()
            .map(|i| self.subgroup(i))
            .collect()
    }

    /// Every maximal subgroup has prime index (Huppert's criterion).
    pub fn is_supersolvable(&self) -> bool {
        let whole = self.whole_index();
        self.maximal_of_idx(whole).iter().all(|&m| {
            let index = self.parent.order() / self.order_of(m as usize);
            arith::is_prime(index as u64)
        })
    }
}
