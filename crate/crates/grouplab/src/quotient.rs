//! Quotients by normal subgroups, realized as the permutation action on
//! right cosets. Cosets are numbered by first appearance in the canonical
//! element order, so the quotient's realization is deterministic.

use crate::bitset::Bitset;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::subgroup::SubgroupRef;
use crate::{Error, Result};

pub struct Quotient {
    group: FiniteGroup,
    coset_of: Vec<u16>,
    reps: Vec<u16>,
}

impl FiniteGroup {
    /// G / N for a normal subgroup N, together with the projection map.
    pub fn quotient(&self, n: &SubgroupRef) -> Result<Quotient> {
        if !self.same_group(n.parent()) {
            return Err(Error::DifferentParents);
        }
        let normal = self
            .generators()
            .iter()
            .map(|g| self.index_of(g).expect("generator is an element"))
            .all(|g| n.member_indices().all(|h| n.contains(self.conjugate(h, g))));
        if !normal {
            return Err(Error::NotNormal { order: n.order() });
        }

        let order = self.order();
        let index = order / n.order();
        let mut coset_of = vec![u16::MAX; order];
        let mut reps: Vec<u16> = Vec::with_capacity(index);
        for x in 0..order {
            if coset_of[x] != u16::MAX {
                continue;
            }
            let c = reps.len() as u16;
            reps.push(x as u16);
            for m in n.member_indices() {
                coset_of[self.mul(m, x)] = c;
            }
        }
        assert_eq!(reps.len(), index);

        let act = |x: usize, coset: usize| -> usize {
            coset_of[self.mul(reps[coset] as usize, x)] as usize
        };
        let qgens: Vec<Permutation> = self
            .generators()
            .iter()
            .map(|g| {
                let gi = self.index_of(g).expect("generator is an element");
                Permutation::from_images((0..index).map(|c| act(gi, c)).collect())
                    .expect("coset action is a bijection")
            })
            .collect();
        let group = FiniteGroup::generate_with_config(index.max(1), qgens, *self.config())?;
        assert_eq!(group.order(), index, "coset action must have kernel exactly N");

        Ok(Quotient { group, coset_of, reps })
    }
}

impl Quotient {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_of(&self, parent_idx: usize) -> usize {
        self.coset_of[parent_idx] as usize
    }

    /// Image of a parent element in the quotient's element table.
    pub fn element_image(&self, parent: &FiniteGroup, x: usize) -> usize {
        let images: Vec<usize> = (0..self.reps.len())
            .map(|c| self.coset_of[parent.mul(self.reps[c] as usize, x)] as usize)
            .collect();
        let perm = Permutation::from_images(images).expect("coset action is a bijection");
        self.group.index_of(&perm).expect("image lies in the quotient")
    }

    /// Image HN/N of a parent subgroup, as a subgroup of the quotient.
    pub fn project_subgroup(&self, h: &SubgroupRef) -> SubgroupRef {
        let parent = h.parent();
        let mut bits = Bitset::new(self.group.order());
        for x in h.member_indices() {
            bits.set(self.element_image(parent, x));
        }
        SubgroupRef::from_closed_unchecked(self.group.clone(), bits)
    }
}
