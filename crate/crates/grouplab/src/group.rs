//! Finite permutation groups materialized as canonical element tables.
//!
//! `generate` closes a generating set, bounds the order with a Schreier-Sims
//! chain before enumerating (so a huge group fails fast), and sorts the
//! element table lexicographically by image table. The sorted table is the
//! canonical indexing every other structure builds on: subgroups are bitsets
//! over it, and the multiplication table is a flat `order x order` index
//! array filled column-by-column from the closure's discovery tree.

use crate::perm::{Permutation, MAX_DEGREE};
use crate::schreier::StabChain;
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

pub const DEFAULT_ORDER_CAP: usize = 2000;
pub const DEFAULT_SUBGROUP_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    /// Hard bound on the element count; `generate` refuses larger groups.
    pub order_cap: usize,
    /// Hard bound on the subgroup count during lattice enumeration.
    pub subgroup_budget: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig { order_cap: DEFAULT_ORDER_CAP, subgroup_budget: DEFAULT_SUBGROUP_BUDGET }
    }
}

/// One column of the multiplication table, derived from the closure BFS:
/// elements[target] = elements[parent] * generators[gen].
struct FillStep {
    target: u16,
    parent: u16,
    gen: u16,
}

struct Tables {
    /// Flat row-major index table: mul[i * order + j] = index of elements[i] * elements[j].
    mul: Vec<u16>,
    inv: Vec<u16>,
}

pub(crate) struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    config: GroupConfig,
    fill_plan: Vec<FillStep>,
    tables: OnceLock<Tables>,
    pub(crate) lattice_slot: OnceLock<Result<Arc<crate::lattice::LatticeData>>>,
}

/// A finite permutation group. Cheap to clone (shared immutable core); all
/// derived structure (multiplication table, subgroup lattice) is memoized
/// behind the shared core, so concurrent reads are safe.
#[derive(Clone)]
pub struct FiniteGroup {
    pub(crate) inner: Arc<GroupInner>,
}

impl FiniteGroup {
    pub fn generate(degree: usize, generators: Vec<Permutation>, order_cap: usize) -> Result<Self> {
        let config = GroupConfig { order_cap, ..GroupConfig::default() };
        Self::generate_with_config(degree, generators, config)
    }

    pub fn generate_with_config(
        degree: usize,
        generators: Vec<Permutation>,
        config: GroupConfig,
    ) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidDegree(degree));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let cap = config.order_cap.min(u16::MAX as usize);

        let chain = StabChain::build(degree, &generators);
        let chain_order = chain.order_capped(cap);
        if chain_order > cap {
            return Err(Error::OrderCapExceeded { cap, reached: chain_order });
        }

        // Full closure. The chain already bounds the order, so this cannot
        // run away; discovery parents are kept to replay products cheaply
        // when the multiplication table is built.
        let identity = Permutation::identity(degree)?;
        let mut bfs: Vec<Permutation> = vec![identity.clone()];
        let mut seen: HashMap<Permutation, u32> = HashMap::new();
        seen.insert(identity, 0);
        let mut parents: Vec<(u32, u16)> = vec![(0, 0)];
        let mut head = 0;
        while head < bfs.len() {
            for (gi, g) in generators.iter().enumerate() {
                let w = bfs[head].compose_unchecked(g);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), bfs.len() as u32);
                    bfs.push(w);
                    parents.push((head as u32, gi as u16));
                }
            }
            head += 1;
        }
        assert_eq!(
            bfs.len(),
            chain_order,
            "closure size disagrees with the strong-generating-set order"
        );

        let mut elements = bfs.clone();
        elements.sort_unstable();
        debug_assert!(elements[0].is_identity());
        let sorted_index = |p: &Permutation| -> u16 {
            elements.binary_search(p).expect("closure element in table") as u16
        };
        let fill_plan: Vec<FillStep> = (1..bfs.len())
            .map(|bi| FillStep {
                target: sorted_index(&bfs[bi]),
                parent: sorted_index(&bfs[parents[bi].0 as usize]),
                gen: parents[bi].1,
            })
            .collect();

        Ok(FiniteGroup {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                elements,
                config,
                fill_plan,
                tables: OnceLock::new(),
                lattice_slot: OnceLock::new(),
            }),
        })
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn config(&self) -> &GroupConfig {
        &self.inner.config
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// Canonical element table: sorted by image table, identity at index 0.
    pub fn elements(&self) -> &[Permutation] {
        &self.inner.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.inner.elements[idx]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.inner.degree {
            return None;
        }
        self.inner.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    fn tables(&self) -> &Tables {
        self.inner.tables.get_or_init(|| {
            let order = self.order();
            let gen_cols: Vec<Vec<u16>> = self
                .inner
                .generators
                .iter()
                .map(|g| {
                    (0..order)
                        .map(|x| {
                            let w = self.inner.elements[x].compose_unchecked(g);
                            self.inner.elements.binary_search(&w).expect("closed") as u16
                        })
                        .collect()
                })
                .collect();
            let mut mul = vec![0u16; order * order];
            for (x, row) in mul.chunks_exact_mut(order).enumerate() {
                row[0] = x as u16; // right-multiplying by the identity
            }
            for step in &self.inner.fill_plan {
                let (t, pa, g) = (step.target as usize, step.parent as usize, step.gen as usize);
                for x in 0..order {
                    mul[x * order + t] = gen_cols[g][mul[x * order + pa] as usize];
                }
            }
            let inv = (0..order)
                .map(|x| {
                    let w = self.inner.elements[x].inverse();
                    self.inner.elements.binary_search(&w).expect("closed under inverse") as u16
                })
                .collect();
            Tables { mul, inv }
        })
    }

    /// Index of elements[i] * elements[j] (left-to-right).
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let t = self.tables();
        t.mul[i * self.order() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.tables().inv[i] as usize
    }

    /// Index of g^-1 * h * g.
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn power(&self, i: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, i);
        }
        acc
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut ord = 1;
        while acc != 0 {
            acc = self.mul(acc, i);
            ord += 1;
        }
        ord
    }

    /// Same underlying instance, or an equal canonical table. Equal tables
    /// index identically, so subgroup bitsets are interchangeable.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.degree == other.inner.degree
                && self.inner.elements == other.inner.elements)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other)
    }
}

impl Eq for FiniteGroup {}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(degree {}, order {})", self.degree(), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn s4_from_two_generators() {
        let g = FiniteGroup::generate(4, vec![p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.element(0).is_identity());
        let mut sorted = g.elements().to_vec();
        sorted.sort();
        assert_eq!(sorted.as_slice(), g.elements());
    }

    #[test]
    fn order_cap_is_enforced() {
        let err = FiniteGroup::generate(8, vec![p("(1 2)", 8), p("(1 2 3 4 5 6 7 8)", 8)], 1000)
            .unwrap_err();
        match err {
            Error::OrderCapExceeded { cap: 1000, reached } => assert!(reached > 1000),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::generate(3, vec![], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.degree(), 3);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn multiplication_table_matches_composition() {
        let g = FiniteGroup::generate(4, vec![p("(1 2 3 4)", 4), p("(2 4)", 4)], 100).unwrap();
        assert_eq!(g.order(), 8);
        for i in 0..g.order() {
            for j in 0..g.order() {
                let direct = g.element(i).compose(g.element(j)).unwrap();
                assert_eq!(g.element(g.mul(i, j)), &direct);
                assert_eq!(g.mul(g.inv(i), i), 0);
            }
        }
    }

    #[test]
    fn element_orders_in_d8() {
        let g = FiniteGroup::generate(4, vec![p("(1 2 3 4)", 4), p("(2 4)", 4)], 100).unwrap();
        let mut orders: Vec<usize> = (0..8).map(|i| g.element_order(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 4, 4]);
        let r = g.index_of(&p("(1 2 3 4)", 4)).unwrap();
        assert_eq!(g.element_order(r), 4);
        assert_eq!(g.power(r, 2), g.index_of(&p("(1 3)(2 4)", 4)).unwrap());
        assert_eq!(g.power(r, 4), 0);
    }

    #[test]
    fn conjugation_moves_reflections() {
        let g = FiniteGroup::generate(4, vec![p("(1 2 3 4)", 4), p("(2 4)", 4)], 100).unwrap();
        let r = g.index_of(&p("(1 2 3 4)", 4)).unwrap();
        let s = g.index_of(&p("(2 4)", 4)).unwrap();
        let conj = g.conjugate(s, r);
        assert_eq!(g.element(conj), &p("(1 3)", 4));
    }

    #[test]
    fn deterministic_element_table() {
        let make = || {
            FiniteGroup::generate(5, vec![p("(1 2 3 4 5)", 5), p("(2 5)(3 4)", 5)], 100).unwrap()
        };
        let a = make();
        let b = make();
        assert_eq!(a.elements(), b.elements());
        assert!(a.same_group(&b));
    }

    #[test]
    fn degree_mismatch_rejected() {
        let err = FiniteGroup::generate(4, vec![p("(1 2)", 3)], 100).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }
}
