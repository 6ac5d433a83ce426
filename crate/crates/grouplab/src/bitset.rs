//! Fixed-width bitset over u64 blocks. Subgroups are bitsets over element
//! indices, so the hot predicates reduce to AND/popcount on a handful of
//! blocks. Trailing bits past `nbits` stay zero; every method preserves that.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bitset {
    nbits: usize,
    blocks: Vec<u64>,
}

impl Bitset {
    pub fn new(nbits: usize) -> Self {
        Bitset { nbits, blocks: vec![0; nbits.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.blocks[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.nbits, other.nbits);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a & b).collect();
        Bitset { nbits: self.nbits, blocks }
    }

    pub fn or(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.nbits, other.nbits);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a | b).collect();
        Bitset { nbits: self.nbits, blocks }
    }

    pub fn or_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersection_count(&self, other: &Bitset) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.blocks.iter().zip(&other.blocks).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Bitset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn ones(&self) -> Ones<'_> {
        Ones { set: self, block: 0, bits: self.blocks.first().copied().unwrap_or(0) }
    }

    /// True when some member is strictly greater than `i`.
    fn any_above(&self, i: usize) -> bool {
        let blk = i / 64;
        let within = self.blocks[blk] >> (i % 64) >> 1;
        within != 0 || self.blocks[blk + 1..].iter().any(|&b| b != 0)
    }
}

pub struct Ones<'a> {
    set: &'a Bitset,
    block: usize,
    bits: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.block += 1;
            if self.block >= self.set.blocks.len() {
                return None;
            }
            self.bits = self.set.blocks[self.block];
        }
        let low = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.block * 64 + low)
    }
}

/// Order on the sorted member sequences: {0,5} < {1,2} because 0 < 1, and
/// {0} < {0,5} because a strict prefix comes first. This keys the canonical
/// ordering of subgroups of equal order.
impl Ord for Bitset {
    fn cmp(&self, other: &Bitset) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        debug_assert_eq!(self.nbits, other.nbits);
        for (i, (a, b)) in self.blocks.iter().zip(&other.blocks).enumerate() {
            let diff = a ^ b;
            if diff != 0 {
                let d = i * 64 + diff.trailing_zeros() as usize;
                return if self.get(d) {
                    if other.any_above(d) { Less } else { Greater }
                } else if self.any_above(d) {
                    Greater
                } else {
                    Less
                };
            }
        }
        Equal
    }
}

impl PartialOrd for Bitset {
    fn partial_cmp(&self, other: &Bitset) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
