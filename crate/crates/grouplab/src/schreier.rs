//! Base and strong generating set via deterministic Schreier-Sims. Internal
//! only: `generate` uses it to bound and cross-check the group order before
//! and after materializing the element table, and tests use `contains` as a
//! membership oracle independent of the table.

use crate::perm::Permutation;

pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

/// Level i of the chain. `gens` is nested: it holds every strong generator
/// fixing the base points of all earlier levels, so `gens` of level i+1 is a
/// subset of `gens` of level i.
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    /// transversal[q] maps base_point to q; None outside the orbit.
    transversal: Vec<Option<Permutation>>,
    /// Orbit points in BFS discovery order.
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        Level { base_point, gens: Vec::new(), transversal: vec![None; degree], orbit: Vec::new() }
    }
}

impl StabChain {
    pub fn build(degree: usize, gens: &[Permutation]) -> StabChain {
        let live: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut bases: Vec<usize> = Vec::new();
        for g in &live {
            if bases.iter().all(|&b| g.apply(b) == b) {
                bases.push(g.smallest_moved_point().expect("non-identity generator"));
            }
        }
        let mut chain = StabChain { degree, levels: Vec::new() };
        for (i, &bp) in bases.iter().enumerate() {
            let mut level = Level::new(degree, bp);
            level.gens = live
                .iter()
                .filter(|g| bases[..i].iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            chain.levels.push(level);
        }
        for i in 0..chain.levels.len() {
            chain.rebuild_orbit(i);
        }
        chain.verify_from_deepest();
        chain
    }

    /// Product of orbit sizes, saturated just above `cap` so huge groups
    /// cannot overflow.
    pub fn order_capped(&self, cap: usize) -> usize {
        let lid = cap as u128 + 1;
        let mut ord: u128 = 1;
        for level in &self.levels {
            ord = (ord * level.orbit.len() as u128).min(lid);
        }
        ord as usize
    }

    #[allow(dead_code)]
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    #[allow(dead_code)]
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_residue(0, g.clone()).is_none()
    }

    /// Sift through levels `from..`; None means the element reduced to the
    /// identity. Some((j, residue)) is the level where sifting got stuck.
    fn sift_residue(&self, from: usize, mut g: Permutation) -> Option<(usize, Permutation)> {
        if g.is_identity() {
            return None;
        }
        for j in from..self.levels.len() {
            let level = &self.levels[j];
            let q = g.apply(level.base_point);
            match &level.transversal[q] {
                None => return Some((j, g)),
                Some(t) => {
                    g = g.compose_unchecked(&t.inverse());
                    if g.is_identity() {
                        return None;
                    }
                }
            }
        }
        Some((self.levels.len(), g))
    }

    /// Bottom-up pass establishing the strong generating property: a level
    /// passes when all its Schreier generators sift to the identity below it,
    /// and any new strong generator restarts the pass at the deepest level it
    /// touched.
    fn verify_from_deepest(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.verify_level(i) {
                Some(j) => i = j,
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Check every Schreier generator of level i against the deeper levels.
    /// On a failure the residue fixes all base points before level j, so it
    /// joins the generator sets of levels i+1..=j (keeping them nested);
    /// returns Some(j) after rebuilding the affected orbits.
    fn verify_level(&mut self, i: usize) -> Option<usize> {
        let mut pi = 0;
        while pi < self.levels[i].orbit.len() {
            let mut si = 0;
            while si < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let p = level.orbit[pi];
                let s = &level.gens[si];
                let q = s.apply(p);
                let t_p = level.transversal[p].as_ref().expect("orbit point has rep");
                let t_q = level.transversal[q].as_ref().expect("orbit image has rep");
                let schreier = t_p.compose_unchecked(s).compose_unchecked(&t_q.inverse());
                if let Some((j, residue)) = self.sift_residue(i + 1, schreier) {
                    debug_assert!(j > i);
                    if j == self.levels.len() {
                        let bp = residue.smallest_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, bp));
                    }
                    for k in (i + 1)..=j {
                        self.levels[k].gens.push(residue.clone());
                        self.rebuild_orbit(k);
                    }
                    return Some(j);
                }
                si += 1;
            }
            pi += 1;
        }
        None
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let base = self.levels[i].base_point;
        let degree = self.degree;
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        let mut orbit = vec![base];
        transversal[base] = Some(Permutation::identity(degree).expect("valid degree"));
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for s in &self.levels[i].gens {
                let q = s.apply(p);
                if transversal[q].is_none() {
                    let t = transversal[p].as_ref().expect("visited").compose_unchecked(s);
                    transversal[q] = Some(t);
                    orbit.push(q);
                }
            }
        }
        self.levels[i].transversal = transversal;
        self.levels[i].orbit = orbit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for (n, expected) in [(3usize, 6usize), (4, 24), (5, 120), (6, 720)] {
            let mut cycle = String::from("(");
            for i in 1..=n {
                if i > 1 {
                    cycle.push(' ');
                }
                cycle.push_str(&i.to_string());
            }
            cycle.push(')');
            let gens = vec![p("(1 2)", n), p(&cycle, n)];
            let chain = StabChain::build(n, &gens);
            assert_eq!(chain.order_capped(100_000), expected);
        }
    }

    #[test]
    fn alternating_and_dihedral() {
        let a4 = StabChain::build(4, &[p("(1 2 3)", 4), p("(2 3 4)", 4)]);
        assert_eq!(a4.order_capped(1000), 12);
        let d18 = StabChain::build(9, &[
            p("(1 2 3 4 5 6 7 8 9)", 9),
            p("(2 9)(3 8)(4 7)(5 6)", 9),
        ]);
        assert_eq!(d18.order_capped(1000), 18);
    }

    #[test]
    fn trivial_and_cap_saturation() {
        let chain = StabChain::build(5, &[]);
        assert_eq!(chain.order_capped(10), 1);
        assert!(chain.base().is_empty());

        let s8 = StabChain::build(8, &[p("(1 2)", 8), p("(1 2 3 4 5 6 7 8)", 8)]);
        assert_eq!(s8.order_capped(2000), 2001); // 8! = 40320, saturates
        assert_eq!(s8.order_capped(50_000), 40_320);
    }

    #[test]
    fn membership_oracle() {
        let gens = vec![p("(1 2 3 4)", 4), p("(2 4)", 4)];
        let d8 = StabChain::build(4, &gens);
        assert!(d8.contains(&p("(1 3)(2 4)", 4)));
        assert!(d8.contains(&p("(1 3)", 4)));
        assert!(d8.contains(&p("()", 4)));
        assert!(!d8.contains(&p("(1 2)", 4)));
        assert!(!d8.contains(&p("(1 2 3)", 4)));
    }
}
