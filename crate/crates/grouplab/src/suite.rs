//! Drives every structural check over a corpus of groups and collects the
//! outcomes as deterministic, CSV-serializable report rows.

use std::collections::HashMap;
use std::time::Instant;

use crate::arith;
use crate::bitset::Bitset;
use crate::corpus::CorpusEntry;
use crate::exec::{map_collect, ExecMode};
use crate::group::{FiniteGroup, GroupConfig};
use crate::lattice::SubgroupLattice;
use crate::msupp::{in_m_class_within, is_complemented, m_supplement_in, MClassQuery};
use crate::theorems::{
    corollary_b_rhs, corollary_c_rhs, frattini_gap, theorem_a_rhs, theorem_d_classify_given,
    CriticalTypeCase,
};
use crate::Result;

/// Subgroup-pair and quotient sweeps stop at this group order; the
/// remaining checks run on every group in the corpus slice.
const PAIRWISE_SUITE_MAX: usize = 48;

/// Stable row tags for the report's `theorem` column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    AForward,
    ABackward,
    B,
    C,
    D,
    L211,
    L212,
    L213,
    C221,
    C222,
    C223,
    L24,
    P261,
    P262,
    PrimeOrderRemark,
    BuildError,
}

impl CheckId {
    pub fn tag(self) -> &'static str {
        match self {
            CheckId::AForward => "A_forward",
            CheckId::ABackward => "A_backward",
            CheckId::B => "B",
            CheckId::C => "C",
            CheckId::D => "D",
            CheckId::L211 => "L2.1.1",
            CheckId::L212 => "L2.1.2",
            CheckId::L213 => "L2.1.3",
            CheckId::C221 => "C2.2.1",
            CheckId::C222 => "C2.2.2",
            CheckId::C223 => "C2.2.3",
            CheckId::L24 => "L2.4",
            CheckId::P261 => "P2.6.1",
            CheckId::P262 => "P2.6.2",
            CheckId::PrimeOrderRemark => "prime_order_remark",
            CheckId::BuildError => "build_error",
        }
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRow {
    pub group: String,
    pub check: CheckId,
    pub p: Option<u64>,
    pub k: Option<u32>,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_order: usize,
    pub mode: ExecMode,
    pub config: GroupConfig,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_order: 48, mode: ExecMode::Parallel, config: GroupConfig::default() }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn totals(&self) -> (usize, usize) {
        (self.rows.iter().filter(|r| r.passed).count(), self.rows.len())
    }

    /// 3 when any group failed to build, 1 when any check failed, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().any(|r| r.check == CheckId::BuildError) {
            3
        } else if self.rows.iter().any(|r| !r.passed) {
            1
        } else {
            0
        }
    }

    /// One row per line; commas and newlines inside fields are flattened so
    /// the output stays one-record-per-line.
    pub fn to_csv(&self) -> String {
        fn clean(s: &str) -> String {
            s.replace(',', ";").replace(['\n', '\r'], " ")
        }
        let mut out = String::from("group,theorem,p,k,passed,detail,millis\n");
        for r in &self.rows {
            let p = r.p.map_or_else(|| "-".to_string(), |v| v.to_string());
            let k = r.k.map_or_else(|| "-".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                clean(&r.group),
                r.check.tag(),
                p,
                k,
                r.passed,
                clean(&r.detail),
                r.millis
            ));
        }
        out
    }
}

fn sort_rows(rows: &mut [SuiteRow]) {
    rows.sort_by(|a, b| {
        (a.group.as_str(), a.check.tag(), a.p.unwrap_or(0), a.k.unwrap_or(0)).cmp(&(
            b.group.as_str(),
            b.check.tag(),
            b.p.unwrap_or(0),
            b.k.unwrap_or(0),
        ))
    });
}

/// Build and check each corpus entry of order at most `max_order`; group
/// failures become build-error rows instead of aborting the run.
pub fn run_suite(entries: &[CorpusEntry], opts: &SuiteOptions) -> SuiteReport {
    let work: Vec<CorpusEntry> =
        entries.iter().filter(|e| e.spec.order() <= opts.max_order).cloned().collect();
    let per_group = map_collect(opts.mode, work, |entry| {
        let start = Instant::now();
        match entry.spec.build(&opts.config) {
            Ok(g) => check_group(&entry.name, &g),
            Err(e) => vec![SuiteRow {
                group: entry.name.clone(),
                check: CheckId::BuildError,
                p: None,
                k: None,
                passed: false,
                detail: e.to_string(),
                millis: start.elapsed().as_millis(),
            }],
        }
    });
    let mut rows: Vec<SuiteRow> = per_group.into_iter().flatten().collect();
    sort_rows(&mut rows);
    SuiteReport { rows }
}

/// Check already-built groups (used for on-disk corpora).
pub fn run_suite_groups(groups: &[(String, FiniteGroup)], opts: &SuiteOptions) -> SuiteReport {
    let work: Vec<(String, FiniteGroup)> =
        groups.iter().filter(|(_, g)| g.order() <= opts.max_order).cloned().collect();
    let per_group = map_collect(opts.mode, work, |(name, g)| check_group(&name, &g));
    let mut rows: Vec<SuiteRow> = per_group.into_iter().flatten().collect();
    sort_rows(&mut rows);
    SuiteReport { rows }
}

struct QuotientCtx {
    qg: FiniteGroup,
    qlat: SubgroupLattice,
    image_of: Vec<usize>,
    msupp_cache: HashMap<Bitset, bool>,
    mclass_cache: HashMap<(u64, u32), bool>,
}

impl QuotientCtx {
    fn new(g: &FiniteGroup, lat: &SubgroupLattice, n_idx: usize) -> Result<Self> {
        let n = lat.subgroup(n_idx);
        let quo = g.quotient(&n)?;
        let qg = quo.group().clone();
        let qlat = qg.lattice()?;
        let image_of: Vec<usize> = (0..g.order()).map(|x| quo.element_image(g, x)).collect();
        Ok(QuotientCtx { qg, qlat, image_of, msupp_cache: HashMap::new(), mclass_cache: HashMap::new() })
    }

    fn project(&self, parent_bits: &Bitset) -> Bitset {
        let mut out = Bitset::new(self.qg.order());
        for i in parent_bits.ones() {
            out.set(self.image_of[i]);
        }
        out
    }

    /// Is the image of the given parent subgroup M-supplemented in the
    /// quotient?
    fn msupp_image(&mut self, parent_bits: &Bitset) -> bool {
        let img = self.project(parent_bits);
        if let Some(&v) = self.msupp_cache.get(&img) {
            return v;
        }
        let idx = self.qlat.position(&img).expect("image of a subgroup is a subgroup");
        let v = m_supplement_in(&self.qlat, self.qlat.whole_index(), idx).is_some();
        self.msupp_cache.insert(img, v);
        v
    }

    fn mclass(&mut self, q: MClassQuery) -> Result<bool> {
        if let Some(&v) = self.mclass_cache.get(&(q.p(), q.k())) {
            return Ok(v);
        }
        let v =
            in_m_class_within(&self.qlat, self.qlat.whole_index(), q, ExecMode::Sequential)?.holds;
        self.mclass_cache.insert((q.p(), q.k()), v);
        Ok(v)
    }
}

struct Ctx {
    g: FiniteGroup,
    lat: SubgroupLattice,
    mclass: HashMap<(u64, u32), bool>,
    msupp_g: Vec<Option<bool>>,
    quots: HashMap<usize, QuotientCtx>,
}

impl Ctx {
    fn mclass(&mut self, q: MClassQuery) -> Result<bool> {
        if let Some(&v) = self.mclass.get(&(q.p(), q.k())) {
            return Ok(v);
        }
        let v = in_m_class_within(&self.lat, self.lat.whole_index(), q, ExecMode::Sequential)?.holds;
        self.mclass.insert((q.p(), q.k()), v);
        Ok(v)
    }

    fn msupp(&mut self, idx: usize) -> bool {
        if let Some(v) = self.msupp_g[idx] {
            return v;
        }
        let v = m_supplement_in(&self.lat, self.lat.whole_index(), idx).is_some();
        self.msupp_g[idx] = Some(v);
        v
    }

    fn quot(&mut self, n_idx: usize) -> Result<&mut QuotientCtx> {
        if !self.quots.contains_key(&n_idx) {
            let qc = QuotientCtx::new(&self.g, &self.lat, n_idx)?;
            self.quots.insert(n_idx, qc);
        }
        Ok(self.quots.get_mut(&n_idx).expect("just inserted"))
    }
}

fn push_row(
    rows: &mut Vec<SuiteRow>,
    group: &str,
    check: CheckId,
    p: Option<u64>,
    k: Option<u32>,
    start: Instant,
    res: Result<(bool, String)>,
) {
    let (passed, detail) = match res {
        Ok(v) => v,
        Err(e) => (false, e.to_string()),
    };
    rows.push(SuiteRow {
        group: group.to_string(),
        check,
        p,
        k,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    });
}

/// All applicable checks for one group. Everything below runs
/// single-threaded; parallelism lives at the per-group level.
fn check_group(name: &str, g: &FiniteGroup) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    let start = Instant::now();
    let lat = match g.lattice() {
        Ok(l) => l,
        Err(e) => {
            push_row(&mut rows, name, CheckId::BuildError, None, None, start, Err(e));
            return rows;
        }
    };
    let order = g.order();
    let primes = arith::primes_dividing(order as u64);
    let pairwise = order <= PAIRWISE_SUITE_MAX;
    let p_group_prime = if primes.len() == 1 { Some(primes[0]) } else { None };
    let normals: Vec<usize> = lat.normal_indices().collect();
    let mut ctx = Ctx {
        g: g.clone(),
        msupp_g: vec![None; lat.len()],
        lat,
        mclass: HashMap::new(),
        quots: HashMap::new(),
    };

    for &p in &primes {
        let kmax = arith::nu_p(order as u64, p);
        let core_idx = {
            let core = ctx.lat.o_p_prime(p);
            ctx.lat.index_of(&core)
        };
        let core_trivial = ctx.lat.order_of(core_idx) == 1;

        // Complemented and M-supplemented coincide at prime order.
        let start = Instant::now();
        let res = (|| -> Result<(bool, String)> {
            let mut checked = 0usize;
            for h in ctx.lat.order_range(p as usize) {
                if h == ctx.lat.whole_index() {
                    continue;
                }
                let sub = ctx.lat.subgroup(h);
                let comp = is_complemented(&ctx.g, &sub)?.is_some();
                let msup = ctx.msupp(h);
                if comp != msup {
                    return Ok((
                        false,
                        format!("{}: complemented={comp} m_supplemented={msup}", sub.describe()),
                    ));
                }
                checked += 1;
            }
            Ok((true, format!("{checked} subgroups checked")))
        })();
        push_row(&mut rows, name, CheckId::PrimeOrderRemark, Some(p), Some(1), start, res);

        // With a normal Sylow subgroup, its internal Frattini subgroup is
        // the trace of the group's.
        if ctx.lat.sylow_is_normal(p) {
            let start = Instant::now();
            let res = {
                let sylow_idx = ctx.lat.sylow_index(p);
                let phi_of_sylow = ctx.lat.frattini_index_of(sylow_idx);
                let trace = ctx
                    .lat
                    .members_of(sylow_idx)
                    .and(ctx.lat.members_of(ctx.lat.frattini_index()));
                if ctx.lat.members_of(phi_of_sylow) == &trace {
                    Ok((true, String::new()))
                } else {
                    Ok((
                        false,
                        format!(
                            "sylow frattini has order {} but the trace has order {}",
                            ctx.lat.order_of(phi_of_sylow),
                            trace.count()
                        ),
                    ))
                }
            };
            push_row(&mut rows, name, CheckId::L24, Some(p), None, start, res);
        }

        // Definitional class membership versus the structural form, on the
        // group itself when the p'-core is trivial, else on the quotient.
        for k in 2..=kmax {
            let q = MClassQuery::new(p, k).expect("p prime, k positive");
            let start = Instant::now();
            let outcome = (|| -> Result<(bool, bool, String)> {
                let lhs = ctx.mclass(q)?;
                let rhs = if core_trivial {
                    theorem_a_rhs(&ctx.g, q)?
                } else {
                    let qc = ctx.quot(core_idx)?;
                    theorem_a_rhs(&qc.qg, q)?
                };
                let detail = if rhs.detail.is_empty() {
                    format!("definition={lhs} characterization={}", rhs.passed)
                } else {
                    format!("definition={lhs} characterization={} {}", rhs.passed, rhs.detail)
                };
                Ok((lhs, rhs.passed, detail))
            })();
            match outcome {
                Ok((lhs, rhs, detail)) => {
                    let fwd = Ok((!lhs || rhs, detail.clone()));
                    push_row(&mut rows, name, CheckId::AForward, Some(p), Some(k), start, fwd);
                    let bwd = Ok((!rhs || lhs, detail));
                    push_row(&mut rows, name, CheckId::ABackward, Some(p), Some(k), start, bwd);
                }
                Err(e) => {
                    push_row(
                        &mut rows,
                        name,
                        CheckId::AForward,
                        Some(p),
                        Some(k),
                        start,
                        Err(e.clone()),
                    );
                    push_row(&mut rows, name, CheckId::ABackward, Some(p), Some(k), start, Err(e));
                }
            }
        }

        // Supersolvable-quotient consequence, where membership holds.
        for k in 2..=kmax {
            let q = MClassQuery::new(p, k).expect("p prime, k positive");
            let start = Instant::now();
            match ctx.mclass(q) {
                Err(e) => push_row(&mut rows, name, CheckId::B, Some(p), Some(k), start, Err(e)),
                Ok(false) => {}
                Ok(true) => {
                    let res = (|| -> Result<(bool, String)> {
                        let v = corollary_b_rhs(&ctx.g, q)?;
                        Ok((v.passed, v.detail))
                    })();
                    push_row(&mut rows, name, CheckId::B, Some(p), Some(k), start, res);
                }
            }
        }

        // The critical-type case split never lands in the contradiction
        // bucket.
        for k in 2..=kmax {
            let q = MClassQuery::new(p, k).expect("p prime, k positive");
            let start = Instant::now();
            let res = (|| -> Result<(bool, String)> {
                let holds = ctx.mclass(q)?;
                let case = theorem_d_classify_given(&ctx.g, q, holds)?;
                Ok((case != CriticalTypeCase::Contradiction, case.to_string()))
            })();
            push_row(&mut rows, name, CheckId::D, Some(p), Some(k), start, res);
        }

        // Membership transfers to and from the quotient by the p'-core,
        // computed literally on the rebuilt quotient.
        for k in 1..=kmax {
            let q = MClassQuery::new(p, k).expect("p prime, k positive");
            let start = Instant::now();
            let res = (|| -> Result<(bool, String)> {
                let lhs = ctx.mclass(q)?;
                let rhs = {
                    let qc = ctx.quot(core_idx)?;
                    qc.mclass(q)?
                };
                Ok((lhs == rhs, format!("group={lhs} quotient={rhs}")))
            })();
            push_row(&mut rows, name, CheckId::C223, Some(p), Some(k), start, res);
        }

        if pairwise {
            // Membership is inherited by subgroups of order divisible by
            // p^k.
            for k in 1..=kmax {
                let q = MClassQuery::new(p, k).expect("p prime, k positive");
                let start = Instant::now();
                match ctx.mclass(q) {
                    Err(e) => {
                        push_row(&mut rows, name, CheckId::C221, Some(p), Some(k), start, Err(e))
                    }
                    Ok(false) => {}
                    Ok(true) => {
                        let res = (|| -> Result<(bool, String)> {
                            let pk = q.subgroup_order();
                            let mut checked = 0usize;
                            for h in 0..ctx.lat.len() {
                                if h == ctx.lat.whole_index()
                                    || !(ctx.lat.order_of(h) as u64).is_multiple_of(pk)
                                {
                                    continue;
                                }
                                let sub = in_m_class_within(&ctx.lat, h, q, ExecMode::Sequential)?;
                                if !sub.holds {
                                    return Ok((
                                        false,
                                        format!("fails inside {}", ctx.lat.subgroup(h).describe()),
                                    ));
                                }
                                checked += 1;
                            }
                            Ok((true, format!("{checked} subgroups checked")))
                        })();
                        push_row(&mut rows, name, CheckId::C221, Some(p), Some(k), start, res);
                    }
                }
            }

            // Membership descends to quotients by normal p-subgroups of
            // order p^s, s < k.
            for k in 2..=kmax {
                let q = MClassQuery::new(p, k).expect("p prime, k positive");
                let start = Instant::now();
                match ctx.mclass(q) {
                    Err(e) => {
                        push_row(&mut rows, name, CheckId::C222, Some(p), Some(k), start, Err(e))
                    }
                    Ok(false) => {}
                    Ok(true) => {
                        let res = (|| -> Result<(bool, String)> {
                            let mut checked = 0usize;
                            for s in 1..k {
                                let n_order = (p as usize).pow(s);
                                for &n in &normals {
                                    if ctx.lat.order_of(n) != n_order {
                                        continue;
                                    }
                                    let sub_q = MClassQuery::new(p, k - s)?;
                                    let holds = {
                                        let qc = ctx.quot(n)?;
                                        qc.mclass(sub_q)?
                                    };
                                    if !holds {
                                        return Ok((
                                            false,
                                            format!(
                                                "quotient by {} leaves the class at k={}",
                                                ctx.lat.subgroup(n).describe(),
                                                k - s
                                            ),
                                        ));
                                    }
                                    checked += 1;
                                }
                            }
                            Ok((true, format!("{checked} quotients checked")))
                        })();
                        push_row(&mut rows, name, CheckId::C222, Some(p), Some(k), start, res);
                    }
                }
            }
        }
    }

    if pairwise {
        // A supplement inside the whole group yields one inside every
        // intermediate subgroup.
        let start = Instant::now();
        let res = (|| -> Result<(bool, String)> {
            let mut pairs = 0usize;
            for h in 0..ctx.lat.len() {
                if !ctx.msupp(h) {
                    continue;
                }
                let hbits = ctx.lat.members_of(h).clone();
                for m in 0..ctx.lat.len() {
                    if !hbits.is_subset(ctx.lat.members_of(m)) {
                        continue;
                    }
                    if m_supplement_in(&ctx.lat, m, h).is_none() {
                        return Ok((
                            false,
                            format!(
                                "{} loses its supplement inside {}",
                                ctx.lat.subgroup(h).describe(),
                                ctx.lat.subgroup(m).describe()
                            ),
                        ));
                    }
                    pairs += 1;
                }
            }
            Ok((true, format!("{pairs} pairs checked")))
        })();
        push_row(&mut rows, name, CheckId::L211, None, None, start, res);

        // Images of supplemented subgroups stay supplemented modulo normal
        // subgroups they contain.
        let start = Instant::now();
        let res = (|| -> Result<(bool, String)> {
            let mut pairs = 0usize;
            for h in 0..ctx.lat.len() {
                if !ctx.msupp(h) {
                    continue;
                }
                let hbits = ctx.lat.members_of(h).clone();
                for &n in &normals {
                    if !ctx.lat.members_of(n).is_subset(&hbits) {
                        continue;
                    }
                    let ok = {
                        let qc = ctx.quot(n)?;
                        qc.msupp_image(&hbits)
                    };
                    if !ok {
                        return Ok((
                            false,
                            format!(
                                "image of {} modulo {} is unsupplemented",
                                ctx.lat.subgroup(h).describe(),
                                ctx.lat.subgroup(n).describe()
                            ),
                        ));
                    }
                    pairs += 1;
                }
            }
            Ok((true, format!("{pairs} pairs checked")))
        })();
        push_row(&mut rows, name, CheckId::L212, None, None, start, res);

        // Modulo a coprime normal subgroup, supplementation of the image
        // is equivalent to supplementation upstairs.
        let start = Instant::now();
        let res = (|| -> Result<(bool, String)> {
            let mut pairs = 0usize;
            for &n in &normals {
                let n_order = ctx.lat.order_of(n) as u64;
                for h in 0..ctx.lat.len() {
                    if arith::gcd(ctx.lat.order_of(h) as u64, n_order) != 1 {
                        continue;
                    }
                    let lhs = ctx.msupp(h);
                    let hbits = ctx.lat.members_of(h).clone();
                    let rhs = {
                        let qc = ctx.quot(n)?;
                        qc.msupp_image(&hbits)
                    };
                    if lhs != rhs {
                        return Ok((
                            false,
                            format!(
                                "{} supplemented={lhs} but its image modulo {} supplemented={rhs}",
                                ctx.lat.subgroup(h).describe(),
                                ctx.lat.subgroup(n).describe()
                            ),
                        ));
                    }
                    pairs += 1;
                }
            }
            Ok((true, format!("{pairs} pairs checked")))
        })();
        push_row(&mut rows, name, CheckId::L213, None, None, start, res);
    }

    if let Some(p) = p_group_prime {
        let kmax = arith::nu_p(order as u64, p);
        let mut derived: Option<Bitset> = None;
        for k in 1..=kmax {
            let q = MClassQuery::new(p, k).expect("p prime, k positive");

            // Definitional membership equals the Frattini-containment
            // form.
            let start = Instant::now();
            let res = (|| -> Result<(bool, String)> {
                let lhs = ctx.mclass(q)?;
                let rhs = corollary_c_rhs(&ctx.g, q)?;
                let detail = if rhs.detail.is_empty() {
                    format!("definition={lhs} characterization={}", rhs.passed)
                } else {
                    format!("definition={lhs} characterization={} {}", rhs.passed, rhs.detail)
                };
                Ok((lhs == rhs.passed, detail))
            })();
            push_row(&mut rows, name, CheckId::C, Some(p), Some(k), start, res);

            let premise = ctx.mclass(q).unwrap_or_default();
            if !premise {
                continue;
            }

            // In the class with room above p^k, the derived subgroup is
            // the Frattini subgroup.
            if (q.subgroup_order() as usize) < order {
                let start = Instant::now();
                if derived.is_none() {
                    derived = Some(ctx.g.derived_subgroup().members().clone());
                }
                let d = derived.as_ref().expect("just filled");
                let res = if d == ctx.lat.members_of(ctx.lat.frattini_index()) {
                    Ok((true, String::new()))
                } else {
                    Ok((
                        false,
                        format!(
                            "derived subgroup has order {} but the frattini subgroup has order {}",
                            d.count(),
                            ctx.lat.frattini().order()
                        ),
                    ))
                };
                push_row(&mut rows, name, CheckId::P261, Some(p), Some(k), start, res);
            }

            // In the class, the Frattini subgroup sits below every
            // subgroup of order p^{k-1}.
            let start = Instant::now();
            let res = match frattini_gap(&ctx.lat, (q.subgroup_order() / p) as usize) {
                None => Ok((true, String::new())),
                Some(gap) => Ok((false, gap)),
            };
            push_row(&mut rows, name, CheckId::P262, Some(p), Some(k), start, res);
        }
    }

    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin_corpus, GroupSpec};

    fn opts(max_order: usize) -> SuiteOptions {
        SuiteOptions { max_order, mode: ExecMode::Sequential, config: GroupConfig::default() }
    }

    #[test]
    fn trivial_corpus_rows_all_vacuous_pass() {
        let report = run_suite(&builtin_corpus(1), &opts(1));
        assert!(!report.rows.is_empty());
        assert!(report.all_passed());
        assert_eq!(report.exit_code(), 0);
        for row in &report.rows {
            assert_eq!(row.group, "C1");
            assert!(matches!(row.check, CheckId::L211 | CheckId::L212 | CheckId::L213));
        }
    }

    #[test]
    fn small_corpus_passes_and_reports_known_cases() {
        let report = run_suite(&builtin_corpus(12), &opts(12));
        assert!(report.all_passed(), "failing rows: {:?}", report
            .rows
            .iter()
            .filter(|r| !r.passed)
            .collect::<Vec<_>>());
        let q8_d = report
            .rows
            .iter()
            .find(|r| r.group == "Q8" && r.check == CheckId::D && r.k == Some(2))
            .expect("Q8 critical-type row");
        assert_eq!(q8_d.detail, "case2");
        let d8_a = report
            .rows
            .iter()
            .find(|r| r.group == "D8" && r.check == CheckId::AForward && r.k == Some(2))
            .expect("D8 equivalence row");
        assert!(d8_a.detail.contains("definition=false characterization=false"));
    }

    #[test]
    fn rows_are_sorted_and_csv_is_deterministic() {
        let report = run_suite(&builtin_corpus(8), &opts(8));
        let keys: Vec<_> = report
            .rows
            .iter()
            .map(|r| (r.group.clone(), r.check.tag(), r.p.unwrap_or(0), r.k.unwrap_or(0)))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);

        let strip = |csv: &str| -> String {
            csv.lines()
                .map(|l| l.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default())
                .collect::<Vec<_>>()
                .join("\n")
        };
        let again = run_suite(&builtin_corpus(8), &opts(8));
        assert_eq!(strip(&report.to_csv()), strip(&again.to_csv()));
        assert!(report.to_csv().starts_with("group,theorem,p,k,passed,detail,millis\n"));
    }

    #[test]
    fn oversized_and_unbuildable_entries() {
        let mut entries = builtin_corpus(6);
        entries.push(CorpusEntry {
            name: "C5000".into(),
            spec: GroupSpec::Cyclic(5000),
            expected: Vec::new(),
        });
        // Filtered out by the order bound: no row at all.
        let filtered = run_suite(&entries, &opts(6));
        assert!(filtered.rows.iter().all(|r| r.group != "C5000"));
        assert_eq!(filtered.exit_code(), 0);
        // Inside the bound but over the construction cap: build-error row.
        let wide = run_suite(&entries, &opts(10_000));
        let err_row = wide
            .rows
            .iter()
            .find(|r| r.group == "C5000")
            .expect("build-error row");
        assert_eq!(err_row.check, CheckId::BuildError);
        assert!(!err_row.passed);
        assert_eq!(wide.exit_code(), 3);
    }

    #[test]
    fn exit_code_prefers_build_errors_over_failures() {
        let mk = |check, passed| SuiteRow {
            group: "X".into(),
            check,
            p: None,
            k: None,
            passed,
            detail: String::new(),
            millis: 0,
        };
        let clean = SuiteReport { rows: vec![mk(CheckId::L211, true)] };
        assert_eq!(clean.exit_code(), 0);
        let failed = SuiteReport { rows: vec![mk(CheckId::L211, true), mk(CheckId::B, false)] };
        assert_eq!(failed.exit_code(), 1);
        let broken = SuiteReport {
            rows: vec![mk(CheckId::B, false), mk(CheckId::BuildError, false)],
        };
        assert_eq!(broken.exit_code(), 3);
    }

    #[test]
    fn prebuilt_groups_run_without_corpus_entries() {
        let d18 = crate::corpus::dihedral(18).unwrap();
        let report = run_suite_groups(&[("D18".to_string(), d18)], &opts(48));
        assert!(report.all_passed(), "failing rows: {:?}", report
            .rows
            .iter()
            .filter(|r| !r.passed)
            .collect::<Vec<_>>());
        let a_row = report
            .rows
            .iter()
            .find(|r| r.check == CheckId::AForward && r.p == Some(3) && r.k == Some(2))
            .expect("equivalence row");
        assert!(a_row.detail.contains("definition=true characterization=true"));
        assert!(a_row.detail.contains("d = 2"));
    }
}
