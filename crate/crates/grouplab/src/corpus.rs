//! Constructive group families and the built-in verification corpus. Every
//! corpus group is rebuilt from parameters; there is no embedded database.

use std::collections::HashSet;

use crate::arith;
use crate::group::{FiniteGroup, GroupConfig};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Recipe for one corpus group. `order` predicts the group order from the
/// parameters alone; `build` realizes the group as permutations and asserts
/// the prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Parameter is the group order 2n, n >= 3.
    Dihedral(usize),
    /// Parameter is the group order 2^m, m >= 3.
    GeneralizedQuaternion(usize),
    ElementaryAbelian(u64, u32),
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// C_{p^n} extended by the unit d^{p^{n-1}} mod p^n, whose
    /// multiplicative order equals that of d mod p.
    ScalarExtension { p: u64, n: u32, d: u64 },
    Modular16,
    Semidihedral16,
}

fn checked_mul(a: usize, b: usize) -> usize {
    a.checked_mul(b).expect("group order overflows usize")
}

fn checked_pow(base: usize, exp: u32) -> usize {
    base.checked_pow(exp).expect("group order overflows usize")
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(m) | GroupSpec::GeneralizedQuaternion(m) => *m,
            GroupSpec::ElementaryAbelian(p, r) => checked_pow(*p as usize, *r),
            GroupSpec::Symmetric(n) => (1..=*n).fold(1, checked_mul),
            GroupSpec::Alternating(n) => (1..=*n).fold(1, checked_mul) / 2,
            GroupSpec::DirectProduct(a, b) => checked_mul(a.order(), b.order()),
            GroupSpec::ScalarExtension { p, n, d } => checked_mul(
                checked_pow(*p as usize, *n),
                arith::multiplicative_order(*d, *p) as usize,
            ),
            GroupSpec::Modular16 | GroupSpec::Semidihedral16 => 16,
        }
    }

    pub fn build(&self, cfg: &GroupConfig) -> Result<FiniteGroup> {
        let g = match self {
            GroupSpec::Cyclic(n) => build_cyclic(*n, cfg)?,
            GroupSpec::Dihedral(m) => build_dihedral(*m, cfg)?,
            GroupSpec::GeneralizedQuaternion(m) => {
                if *m < 8 || !(*m as u64).is_power_of_two() {
                    return Err(Error::InvalidParameter(format!(
                        "generalized quaternion order must be a power of two >= 8, got {m}"
                    )));
                }
                let n = m / 2;
                two_generator_group(n, n - 1, n / 2, cfg)?
            }
            GroupSpec::ElementaryAbelian(p, r) => build_elementary_abelian(*p, *r, cfg)?,
            GroupSpec::Symmetric(n) => build_symmetric(*n, cfg)?,
            GroupSpec::Alternating(n) => build_alternating(*n, cfg)?,
            GroupSpec::DirectProduct(a, b) => {
                let ga = a.build(cfg)?;
                let gb = b.build(cfg)?;
                splice(&ga, &gb, cfg)?
            }
            GroupSpec::ScalarExtension { p, n, d } => build_scalar_extension(*p, *n, *d, cfg)?,
            GroupSpec::Modular16 => two_generator_group(8, 5, 0, cfg)?,
            GroupSpec::Semidihedral16 => two_generator_group(8, 3, 0, cfg)?,
        };
        assert_eq!(g.order(), self.order(), "construction must realize the predicted order");
        Ok(g)
    }
}

fn build_cyclic(n: usize, cfg: &GroupConfig) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group order must be positive".into()));
    }
    if n == 1 {
        return FiniteGroup::generate_with_config(1, Vec::new(), *cfg);
    }
    let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::generate_with_config(n, vec![Permutation::from_images(images)?], *cfg)
}

fn build_dihedral(m: usize, cfg: &GroupConfig) -> Result<FiniteGroup> {
    if m < 6 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "dihedral order must be even and at least 6, got {m}"
        )));
    }
    let n = m / 2;
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::generate_with_config(
        n,
        vec![Permutation::from_images(rot)?, Permutation::from_images(refl)?],
        *cfg,
    )
}

fn build_elementary_abelian(p: u64, r: u32, cfg: &GroupConfig) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("rank must be positive".into()));
    }
    let p = p as usize;
    let degree = checked_mul(p, r as usize);
    let mut gens = Vec::with_capacity(r as usize);
    for block in 0..r as usize {
        let base = block * p;
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..p {
            images[base + i] = base + (i + 1) % p;
        }
        gens.push(Permutation::from_images(images)?);
    }
    FiniteGroup::generate_with_config(degree, gens, *cfg)
}

fn build_symmetric(n: usize, cfg: &GroupConfig) -> Result<FiniteGroup> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidParameter(format!("symmetric degree must be in 1..=12, got {n}")));
    }
    if n == 1 {
        return FiniteGroup::generate_with_config(1, Vec::new(), *cfg);
    }
    let mut gens = vec![Permutation::parse_cycles("(1 2)", n)?];
    if n > 2 {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(Permutation::from_images(cycle)?);
    }
    FiniteGroup::generate_with_config(n, gens, *cfg)
}

fn build_alternating(n: usize, cfg: &GroupConfig) -> Result<FiniteGroup> {
    if !(3..=12).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "alternating degree must be in 3..=12, got {n}"
        )));
    }
    let mut gens = Vec::new();
    for i in 1..=n - 2 {
        gens.push(Permutation::parse_cycles(&format!("({i} {} {})", i + 1, i + 2), n)?);
    }
    FiniteGroup::generate_with_config(n, gens, *cfg)
}

fn build_scalar_extension(p: u64, n: u32, d: u64, cfg: &GroupConfig) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("exponent must be positive".into()));
    }
    if d == 0 || d >= p {
        return Err(Error::InvalidParameter(format!("d must lie in 1..={}, got {d}", p - 1)));
    }
    let m = checked_pow(p as usize, n);
    let shift: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    // d itself may have order divisible by p mod p^n; its p^{n-1} power has
    // order exactly ord(d mod p) while still reducing to d mod p.
    let unit = arith::pow_mod(d, p.pow(n - 1), m as u64) as usize;
    let mult: Vec<usize> = (0..m).map(|i| (i * unit) % m).collect();
    FiniteGroup::generate_with_config(
        m,
        vec![Permutation::from_images(shift)?, Permutation::from_images(mult)?],
        *cfg,
    )
}

/// Right-regular realization of ⟨a, b⟩ with a of order n, b² = a^s and
/// b⁻¹ab = a^c; point j·n + i stands for the element a^i b^j.
fn two_generator_group(n: usize, c: usize, s: usize, cfg: &GroupConfig) -> Result<FiniteGroup> {
    debug_assert!(n >= 2);
    debug_assert_eq!(c * c % n, 1 % n, "conjugation exponent must be an involution");
    debug_assert_eq!(s * (c + n - 1) % n, 0, "b squared must be centralized by b");
    let mut a = vec![0usize; 2 * n];
    let mut b = vec![0usize; 2 * n];
    for i in 0..n {
        a[i] = (i + 1) % n;
        a[n + i] = n + (i + c) % n;
        b[i] = n + i;
        b[n + i] = (i + s) % n;
    }
    FiniteGroup::generate_with_config(
        2 * n,
        vec![Permutation::from_images(a)?, Permutation::from_images(b)?],
        *cfg,
    )
}

/// Generators of both factors on disjoint point ranges.
fn splice(a: &FiniteGroup, b: &FiniteGroup, cfg: &GroupConfig) -> Result<FiniteGroup> {
    let da = a.degree();
    let db = b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = g.images().collect();
        images.extend(da..da + db);
        gens.push(Permutation::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..da).collect();
        images.extend(g.images().map(|i| da + i));
        gens.push(Permutation::from_images(images)?);
    }
    let prod = FiniteGroup::generate_with_config(da + db, gens, *cfg)?;
    assert_eq!(prod.order(), checked_mul(a.order(), b.order()));
    Ok(prod)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    GroupSpec::Cyclic(n).build(&GroupConfig::default())
}

pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    GroupSpec::Dihedral(order).build(&GroupConfig::default())
}

pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup> {
    GroupSpec::GeneralizedQuaternion(order).build(&GroupConfig::default())
}

pub fn elementary_abelian(p: u64, r: u32) -> Result<FiniteGroup> {
    GroupSpec::ElementaryAbelian(p, r).build(&GroupConfig::default())
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    GroupSpec::Symmetric(n).build(&GroupConfig::default())
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    GroupSpec::Alternating(n).build(&GroupConfig::default())
}

pub fn scalar_extension(p: u64, n: u32, d: u64) -> Result<FiniteGroup> {
    GroupSpec::ScalarExtension { p, n, d }.build(&GroupConfig::default())
}

pub fn modular16() -> Result<FiniteGroup> {
    GroupSpec::Modular16.build(&GroupConfig::default())
}

pub fn semidihedral16() -> Result<FiniteGroup> {
    GroupSpec::Semidihedral16.build(&GroupConfig::default())
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    splice(a, b, a.config())
}

/// Which run recorded an expected fact: taken from prior published results,
/// or frozen from an earlier run of this library's own definitional scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactSource {
    Literature,
    Recomputed,
}

/// Frozen verdict for one (p, k) membership query against a named corpus
/// group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedFact {
    pub p: u64,
    pub k: u32,
    pub holds: bool,
    pub source: FactSource,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub expected: Vec<ExpectedFact>,
}

fn dp(a: GroupSpec, b: GroupSpec) -> GroupSpec {
    GroupSpec::DirectProduct(Box::new(a), Box::new(b))
}

/// The 2-groups of order at most 16 that appear in the corpus, reused as
/// direct-product factors.
fn small_two_groups() -> Vec<(&'static str, GroupSpec)> {
    use GroupSpec::*;
    vec![
        ("C2", Cyclic(2)),
        ("C4", Cyclic(4)),
        ("C8", Cyclic(8)),
        ("C16", Cyclic(16)),
        ("C2^2", ElementaryAbelian(2, 2)),
        ("C2^3", ElementaryAbelian(2, 3)),
        ("C2^4", ElementaryAbelian(2, 4)),
        ("C2xC4", dp(Cyclic(2), Cyclic(4))),
        ("D8", Dihedral(8)),
        ("D16", Dihedral(16)),
        ("Q8", GeneralizedQuaternion(8)),
        ("Q16", GeneralizedQuaternion(16)),
        ("M16", Modular16),
        ("SD16", Semidihedral16),
        ("C4xC4", dp(Cyclic(4), Cyclic(4))),
        ("C2xD8", dp(Cyclic(2), Dihedral(8))),
        ("C2xQ8", dp(Cyclic(2), GeneralizedQuaternion(8))),
    ]
}

fn expected_for(name: &str) -> Vec<ExpectedFact> {
    use FactSource::*;
    let fact = |p, k, holds, source| ExpectedFact { p, k, holds, source };
    match name {
        "Q8" => vec![
            fact(2, 1, false, Literature),
            fact(2, 2, true, Literature),
            fact(2, 3, true, Recomputed),
        ],
        "D8" => vec![fact(2, 1, false, Recomputed), fact(2, 2, false, Recomputed)],
        "D18" => vec![fact(3, 2, true, Recomputed)],
        "SE(9:2)" => vec![fact(3, 2, true, Recomputed)],
        "C2xC4" => vec![fact(2, 2, false, Recomputed)],
        "C4" => vec![fact(2, 1, false, Recomputed)],
        "C6" => vec![fact(3, 1, true, Recomputed)],
        "C3xQ8" => vec![fact(2, 2, true, Recomputed)],
        _ => Vec::new(),
    }
}

/// The fixed constructive corpus, filtered to groups of order at most
/// `max_order`. Names are unique; the first occurrence of a name wins.
pub fn builtin_corpus(max_order: usize) -> Vec<CorpusEntry> {
    use GroupSpec::*;
    let mut entries: Vec<(String, GroupSpec)> = Vec::new();

    for n in 1..=max_order {
        entries.push((format!("C{n}"), Cyclic(n)));
    }
    let mut p = 2u64;
    while (p * p) as usize <= max_order {
        if arith::is_prime(p) {
            let mut r = 2u32;
            while checked_pow(p as usize, r) <= max_order {
                entries.push((format!("C{p}^{r}"), ElementaryAbelian(p, r)));
                r += 1;
            }
        }
        p += 1;
    }
    let mut m = 6;
    while m <= max_order {
        entries.push((format!("D{m}"), Dihedral(m)));
        m += 2;
    }
    let mut m = 8;
    while m <= max_order {
        entries.push((format!("Q{m}"), GeneralizedQuaternion(m)));
        m *= 2;
    }
    if max_order >= 16 {
        entries.push(("M16".into(), Modular16));
        entries.push(("SD16".into(), Semidihedral16));
        entries.push(("C4xC4".into(), dp(Cyclic(4), Cyclic(4))));
        entries.push(("C2xD8".into(), dp(Cyclic(2), Dihedral(8))));
        entries.push(("C2xQ8".into(), dp(Cyclic(2), GeneralizedQuaternion(8))));
    }
    if max_order >= 8 {
        entries.push(("C2xC4".into(), dp(Cyclic(2), Cyclic(4))));
    }
    entries.push(("S3".into(), Symmetric(3)));
    entries.push(("S4".into(), Symmetric(4)));
    entries.push(("A4".into(), Alternating(4)));
    for p in [2u64, 3, 5, 7] {
        for n in 1..=3u32 {
            for d in 1..p {
                let spec = ScalarExtension { p, n, d };
                entries.push((format!("SE({}:{d})", checked_pow(p as usize, n)), spec));
            }
        }
    }
    for m in [3usize, 5, 7, 9] {
        for (hname, hspec) in small_two_groups() {
            entries.push((format!("C{m}x{hname}"), dp(Cyclic(m), hspec)));
        }
    }

    let mut seen = HashSet::new();
    let mut list = Vec::new();
    for (name, spec) in entries {
        if spec.order() <= max_order && seen.insert(name.clone()) {
            let expected = expected_for(&name);
            list.push(CorpusEntry { name, spec, expected });
        }
    }
    list
}
