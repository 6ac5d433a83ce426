//! Subgroups as bitsets over the parent's canonical element table.

use crate::bitset::Bitset;
use crate::group::FiniteGroup;
use crate::{Error, Result};

/// A subgroup of a fixed parent group: a closed member bitset plus a cached
/// order. Carries a handle to the parent, so it can answer questions on its
/// own; bitsets index the parent's canonical element table.
#[derive(Clone)]
pub struct SubgroupRef {
    parent: FiniteGroup,
    members: Bitset,
    order: usize,
}

impl SubgroupRef {
    /// Validating constructor: membership of the identity, closure under
    /// products (which for a finite set forces inverses), and Lagrange.
    pub fn new(parent: FiniteGroup, members: Bitset) -> Result<Self> {
        if members.len() != parent.order() || !members.get(0) {
            return Err(Error::NotASubgroup);
        }
        for a in members.ones() {
            for b in members.ones() {
                if !members.get(parent.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Self::from_closed_unchecked(parent, members))
    }

    pub(crate) fn from_closed_unchecked(parent: FiniteGroup, members: Bitset) -> Self {
        let order = members.count();
        debug_assert!(members.get(0));
        debug_assert_eq!(parent.order() % order, 0, "Lagrange violated");
        SubgroupRef { parent, members, order }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.get(idx)
    }

    pub fn member_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupRef) -> bool {
        self.parent.same_group(&other.parent) && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SubgroupRef) -> Result<SubgroupRef> {
        if !self.parent.same_group(&other.parent) {
            return Err(Error::DifferentParents);
        }
        Ok(SubgroupRef::from_closed_unchecked(
            self.parent.clone(),
            self.members.and(&other.members),
        ))
    }

    /// g^-1 H g as a subgroup.
    pub fn conjugated(&self, g: usize) -> SubgroupRef {
        let mut members = Bitset::new(self.members.len());
        for h in self.members.ones() {
            members.set(self.parent.conjugate(h, g));
        }
        SubgroupRef::from_closed_unchecked(self.parent.clone(), members)
    }

    /// Greedy minimal generating indices: walk members in canonical order,
    /// keeping each element not yet generated.
    pub fn generating_indices(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut covered = self.parent.closure(&gens);
        for idx in self.members.ones().skip(1) {
            if !covered.contains(idx) {
                gens.push(idx);
                covered = self.parent.closure(&gens);
                if covered.order() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Compact human-readable form, e.g. `<(1 2 3 4) (2 4)>`.
    pub fn describe(&self) -> String {
        let gens = self.generating_indices();
        if gens.is_empty() {
            return "<()>".to_string();
        }
        let parts: Vec<String> =
            gens.iter().map(|&i| self.parent.element(i).cycle_string()).collect();
        format!("<{}>", parts.join(" "))
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_group(&other.parent) && self.members == other.members
    }
}

impl Eq for SubgroupRef {}

impl std::fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupRef(order {} of {})", self.order, self.parent.order())
    }
}

/// The set product HK = {hk}, which need not be a subgroup.
pub struct ProductSet {
    pub members: Bitset,
    pub is_subgroup: bool,
}

impl ProductSet {
    pub fn size(&self) -> usize {
        self.members.count()
    }
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> SubgroupRef {
        let mut members = Bitset::new(self.order());
        members.set(0);
        SubgroupRef::from_closed_unchecked(self.clone(), members)
    }

    pub fn full_subgroup(&self) -> SubgroupRef {
        let mut members = Bitset::new(self.order());
        for i in 0..self.order() {
            members.set(i);
        }
        SubgroupRef::from_closed_unchecked(self.clone(), members)
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(&self, seed: &[usize]) -> SubgroupRef {
        SubgroupRef::from_closed_unchecked(self.clone(), self.closure_bits(seed))
    }

    pub(crate) fn closure_bits(&self, seed: &[usize]) -> Bitset {
        let mut members = Bitset::new(self.order());
        members.set(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in seed {
                let y = self.mul(x, s);
                if !members.get(y) {
                    members.set(y);
                    queue.push(y);
                }
            }
        }
        members
    }

    /// Elements commuting with every member of `s`.
    pub fn centralizer(&self, s: &SubgroupRef) -> Result<SubgroupRef> {
        if !self.same_group(s.parent()) {
            return Err(Error::DifferentParents);
        }
        let mut members = Bitset::new(self.order());
        'outer: for g in 0..self.order() {
            for m in s.member_indices() {
                if self.mul(g, m) != self.mul(m, g) {
                    continue 'outer;
                }
            }
            members.set(g);
        }
        Ok(SubgroupRef::from_closed_unchecked(self.clone(), members))
    }

    pub fn center(&self) -> SubgroupRef {
        self.centralizer(&self.full_subgroup()).expect("same parent")
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> SubgroupRef {
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = Bitset::new(self.order());
        for a in 0..self.order() {
            for b in 0..self.order() {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seen.get(c) {
                    seen.set(c);
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    /// The product set HK. `is_subgroup` reports whether HK is closed under
    /// products; the index formula |HK| = |H||K| / |H n K| holds either way.
    pub fn product_set(&self, h: &SubgroupRef, k: &SubgroupRef) -> Result<ProductSet> {
        if !self.same_group(h.parent()) || !self.same_group(k.parent()) {
            return Err(Error::DifferentParents);
        }
        let mut members = Bitset::new(self.order());
        for a in h.member_indices() {
            for b in k.member_indices() {
                members.set(self.mul(a, b));
            }
        }
        debug_assert_eq!(
            members.count() * h.members().intersection_count(k.members()),
            h.order() * k.order()
        );
        let is_subgroup = product_closed(self, &members);
        Ok(ProductSet { members, is_subgroup })
    }
}

pub(crate) fn product_closed(group: &FiniteGroup, members: &Bitset) -> bool {
    for a in members.ones() {
        for b in members.ones() {
            if !members.get(group.mul(a, b)) {
                return false;
            }
        }
    }
    true
}
