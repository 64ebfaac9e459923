use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::decide::{characterize_with, decide_polynomial, decide_sugeno, sugeno_bundle};
use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};
use crate::poly::{
    alpha_from_oracle, alpha_star, beta_from_oracle, beta_star, eval_cnf, eval_dnf,
    measure_from_poly, simplex_forms_for, simplices_containing, sugeno_eval, CoefMap,
};
use crate::props::{
    check_comonotonic_maxitive, check_comonotonic_minitive, check_componentwise_convex_range,
    check_conservative, check_conservative_preimage, check_conservative_subsets,
    check_convex_range, check_horizontally_maxitive, check_horizontally_minitive,
    check_idempotent, check_max_homogeneous, check_median_decomposable, check_min_homogeneous,
    check_nondecreasing, clamp, range_convex_hull, range_hull_elements, Domain, MedianDomain,
    PropertyReport, VectorClass,
};
use crate::table::FunctionTable;

use super::enumerate::{
    enumerate_monotone, enumerate_tables, random_table, rng_for, sample_monotone_stream,
    sample_polynomial, table_at, table_count,
};

/// How a plan produces its tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every table of `L^n -> L`.
    Exhaustive,
    /// Every nondecreasing table.
    ExhaustiveMonotone,
    /// Seeded repaired-monotone tables plus seeded polynomial functions.
    RandomMonotone,
    /// Seeded uniform tables plus seeded polynomial functions.
    RandomAny,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::ExhaustiveMonotone => "exhaustive-monotone",
            Mode::RandomMonotone => "random-monotone",
            Mode::RandomAny => "random",
        }
    }

    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "exhaustive-monotone" | "monotone" => Ok(Mode::ExhaustiveMonotone),
            "random" | "random-any" => Ok(Mode::RandomAny),
            "random-monotone" => Ok(Mode::RandomMonotone),
            other => Err(Error::Unknown {
                what: "mode",
                name: other.to_string(),
            }),
        }
    }

    pub fn is_random(self) -> bool {
        matches!(self, Mode::RandomMonotone | Mode::RandomAny)
    }
}

#[derive(Clone, Debug)]
pub struct SweepPlan {
    pub lattice: Arc<Lattice>,
    pub arity: usize,
    pub mode: Mode,
    pub samples: u64,
    pub seed: u64,
}

impl SweepPlan {
    pub fn exhaustive(lattice: Arc<Lattice>, arity: usize) -> Self {
        SweepPlan {
            lattice,
            arity,
            mode: Mode::Exhaustive,
            samples: 0,
            seed: 0,
        }
    }

    pub fn monotone(lattice: Arc<Lattice>, arity: usize) -> Self {
        SweepPlan {
            mode: Mode::ExhaustiveMonotone,
            ..Self::exhaustive(lattice, arity)
        }
    }

    pub fn random(lattice: Arc<Lattice>, arity: usize, mode: Mode, samples: u64, seed: u64) -> Self {
        SweepPlan {
            lattice,
            arity,
            mode,
            samples,
            seed,
        }
    }
}

/// One table on which the two sides of a statement disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub index: u64,
    pub table: FunctionTable,
    pub detail: String,
}

pub const KEPT_DISCREPANCIES: usize = 16;

#[derive(Clone, Debug)]
pub struct TheoremRun {
    pub theorem: String,
    pub plan: SweepPlan,
    pub tables_checked: u64,
    pub discrepancy_count: u64,
    /// The first [`KEPT_DISCREPANCIES`] discrepancies by table index.
    pub discrepancies: Vec<Discrepancy>,
    pub elapsed: Duration,
    pub expect_counterexample: bool,
}

impl TheoremRun {
    /// Clean runs pass; under expect-counterexample only runs that found a
    /// discrepancy pass.
    pub fn passed(&self) -> bool {
        (self.discrepancy_count > 0) == self.expect_counterexample
    }

    /// `(field, value)` pairs in report order. Elapsed time is left out so
    /// reports are reproducible.
    pub fn fields(&self) -> Vec<(String, String)> {
        let l = &self.plan.lattice;
        let mut out = vec![
            ("theorem".to_string(), self.theorem.clone()),
            ("lattice".to_string(), l.to_string()),
            ("arity".to_string(), self.plan.arity.to_string()),
            ("mode".to_string(), self.plan.mode.name().to_string()),
        ];
        if self.plan.mode.is_random() {
            out.push(("samples".into(), self.plan.samples.to_string()));
            out.push(("seed".into(), self.plan.seed.to_string()));
        }
        out.push(("tables_checked".into(), self.tables_checked.to_string()));
        out.push(("discrepancies".into(), self.discrepancy_count.to_string()));
        out.push((
            "expect_counterexample".into(),
            self.expect_counterexample.to_string(),
        ));
        out.push(("passed".into(), self.passed().to_string()));
        for (i, d) in self.discrepancies.iter().enumerate() {
            out.push((format!("discrepancy.{i}.index"), d.index.to_string()));
            out.push((format!("discrepancy.{i}.table"), d.table.display_values()));
            out.push((format!("discrepancy.{i}.detail"), d.detail.clone()));
        }
        out
    }
}

pub const BUNDLE_THEOREMS: [&str; 7] = [
    "mainChar",
    "WLP-WeakHom",
    "WLP-WeakHomWeakHor",
    "WLP-WeaklyMed",
    "ChainStrIdemWLP",
    "WLP-comonot",
    "all-bundles",
];

pub const LEMMAS: [&str; 10] = [
    "WeaklyMinMaxIdem",
    "WeaklyMinMaxRangeIdem",
    "Weak15682",
    "Weak-Hor-Min-Hom",
    "WMD-RI",
    "ComponentwiseImpliesConv",
    "ComonotHomog",
    "ComonotNonDec",
    "4985",
    "conservative-equivalences",
];

pub const OTHER_THEOREMS: [&str; 9] = [
    "SimplexDNF",
    "SimplexMedian",
    "Uniqueness",
    "Hom-Id-46",
    "prop:sug",
    "Sug-WeakHom",
    "WeakMedWeakHom",
    "mainChar3",
    "lemma-suite",
];

/// Every id accepted by [`verify_theorem`].
pub fn theorem_ids() -> Vec<&'static str> {
    BUNDLE_THEOREMS
        .iter()
        .chain(OTHER_THEOREMS.iter())
        .chain(LEMMAS.iter())
        .copied()
        .collect()
}

fn needs_chain(id: &str) -> bool {
    matches!(
        id,
        "SimplexDNF"
            | "SimplexMedian"
            | "Uniqueness"
            | "WLP-comonot"
            | "ComonotHomog"
            | "ComonotNonDec"
    )
}

const MAX_UNIQUENESS_BOX: u128 = 1 << 16;

fn validate(id: &str, plan: &SweepPlan) -> Result<()> {
    let invalid = |reason: String| Error::InvalidPlan {
        theorem: id.to_string(),
        reason,
    };
    if !theorem_ids().contains(&id) {
        return Err(Error::Unknown {
            what: "theorem",
            name: id.to_string(),
        });
    }
    if plan.arity == 0 {
        return Err(invalid("arity must be at least 1".into()));
    }
    if needs_chain(id) && !plan.lattice.is_chain() {
        return Err(invalid("needs a chain lattice".into()));
    }
    if plan.mode.is_random() && plan.samples == 0 {
        return Err(invalid("random modes need a positive sample count".into()));
    }
    if id == "Uniqueness" {
        let m = plan.lattice.size() as u128;
        let boxes = u32::try_from(1u64 << plan.arity.min(63))
            .ok()
            .and_then(|e| m.checked_pow(e));
        if boxes.is_none_or(|b| b > MAX_UNIQUENESS_BOX) {
            return Err(invalid("coefficient space too large to sweep".into()));
        }
    }
    if id == "SimplexMedian" && plan.lattice.size() > 16 {
        return Err(invalid("chain too large for the brute-force sweep".into()));
    }
    Ok(())
}

/// Sweeps the plan's tables and records every table where the statement
/// `id` fails.
pub fn verify_theorem(id: &str, plan: &SweepPlan, expect_counterexample: bool) -> Result<TheoremRun> {
    validate(id, plan)?;
    let start = Instant::now();
    let check = |f: &FunctionTable| check_table(id, f);
    let (checked, mut found) = if id == "SimplexMedian" {
        simplex_median_sweep(&plan.lattice, plan.arity)
    } else {
        sweep(plan, &check)?
    };
    found.sort_by_key(|d| d.index);
    let discrepancy_count = found.len() as u64;
    found.truncate(KEPT_DISCREPANCIES);
    Ok(TheoremRun {
        theorem: id.to_string(),
        plan: plan.clone(),
        tables_checked: checked,
        discrepancy_count,
        discrepancies: found,
        elapsed: start.elapsed(),
        expect_counterexample,
    })
}

type Check<'a> = dyn Fn(&FunctionTable) -> Option<String> + Sync + 'a;

fn record(index: u64, f: FunctionTable, check: &Check) -> Option<Discrepancy> {
    check(&f).map(|detail| Discrepancy {
        index,
        table: f,
        detail,
    })
}

fn sweep(plan: &SweepPlan, check: &Check) -> Result<(u64, Vec<Discrepancy>)> {
    let l = plan.lattice.clone();
    let n = plan.arity;
    match plan.mode {
        Mode::Exhaustive => {
            // validates the cap
            enumerate_tables(l.clone(), n)?;
            let count = table_count(l.size(), n).expect("within cap") as u64;
            let found = (0..count)
                .into_par_iter()
                .filter_map(|i| record(i, table_at(l.clone(), n, i).expect("in range"), check))
                .collect();
            Ok((count, found))
        }
        Mode::ExhaustiveMonotone => {
            let tables = enumerate_monotone(l, n)?;
            let count = tables.len() as u64;
            let found = tables
                .into_par_iter()
                .enumerate()
                .filter_map(|(i, f)| record(i as u64, f, check))
                .collect();
            Ok((count, found))
        }
        Mode::RandomMonotone | Mode::RandomAny => {
            let monotone = plan.mode == Mode::RandomMonotone;
            let seed = plan.seed;
            // even indices are sampled tables, odd ones sampled polynomials
            let found = (0..plan.samples)
                .into_par_iter()
                .flat_map_iter(|s| {
                    let table = if monotone {
                        sample_monotone_stream(l.clone(), n, seed, s)
                    } else {
                        random_table(l.clone(), n, &mut rng_for(seed, s))
                    }
                    .expect("sampled shape is valid");
                    let poly = sample_polynomial(l.clone(), n, seed ^ 0x9e37_79b9_7f4a_7c15, s)
                        .expect("isotone coefficients extend");
                    [record(2 * s, table, check), record(2 * s + 1, poly, check)]
                        .into_iter()
                        .flatten()
                })
                .collect();
            Ok((2 * plan.samples, found))
        }
    }
}

/// Checks one table against statement `id`; `Some(detail)` on failure.
pub fn check_table(id: &str, f: &FunctionTable) -> Option<String> {
    match id {
        "mainChar" | "WLP-WeakHomWeakHor" | "WLP-WeaklyMed" | "ChainStrIdemWLP" | "WLP-comonot" => {
            bundles_agree(f, |b| b == id, |_| true)
        }
        "WLP-WeakHom" => bundles_agree(f, |b| b == "WLP-WeakHomWeakHor", |c| c == "ii"),
        "all-bundles" => bundles_agree(f, |_| true, |_| true),
        "SimplexDNF" => simplex_dnf(f),
        "Uniqueness" => uniqueness(f),
        "Hom-Id-46" => hom_id_46(f),
        "prop:sug" => prop_sug(f),
        "Sug-WeakHom" => {
            let (d, b) = (decide_sugeno(f).verdict, sugeno_bundle(f));
            (d != b).then(|| format!("sugeno={d} bundle={b}"))
        }
        "WeakMedWeakHom" => weak_med_weak_hom(f),
        "mainChar3" => main_char3(f),
        "lemma-suite" => LEMMAS
            .iter()
            .find_map(|id| check_lemma(id, f).map(|d| format!("{id}: {d}"))),
        other => check_lemma(other, f),
    }
}

fn bundles_agree<T, C>(f: &FunctionTable, theorem: T, condition: C) -> Option<String>
where
    T: Fn(&str) -> bool,
    C: Fn(&str) -> bool,
{
    let m = characterize_with(f, |b| theorem(b.theorem) && condition(b.condition));
    let bad: Vec<String> = m
        .disagreements()
        .iter()
        .map(|b| format!("{}={}", b.label(), !m.polynomial))
        .collect();
    (!bad.is_empty()).then(|| format!("polynomial={} but {}", m.polynomial, bad.join(", ")))
}

fn simplex_dnf(f: &FunctionTable) -> Option<String> {
    let l = f.lattice();
    let poly = decide_polynomial(f).verdict;
    let alpha = alpha_from_oracle(f);
    let beta = beta_from_oracle(f);
    let mut alpha_ok = true;
    let mut beta_ok = true;
    for (x, v) in f.entries() {
        for sigma in simplices_containing(l, &x).expect("chain") {
            let (a, b) = simplex_forms_for(l, &alpha, &beta, &x, &sigma).expect("sorted");
            alpha_ok &= a.join == v && a.meet == v && a.median == v;
            beta_ok &= b.join == v && b.meet == v && b.median == v;
        }
    }
    (poly != alpha_ok || poly != beta_ok)
        .then(|| format!("polynomial={poly} alpha-forms={alpha_ok} beta-forms={beta_ok}"))
}

fn coef_maps(l: &Lattice, n: usize) -> impl Iterator<Item = CoefMap> + '_ {
    l.tuples(1 << n)
        .map(move |t| CoefMap::new(n, t.into_inner()).expect("length is 2^n"))
}

fn uniqueness(f: &FunctionTable) -> Option<String> {
    if !decide_polynomial(f).verdict {
        return None;
    }
    let l = f.lattice();
    let n = f.arity();
    let alpha = alpha_from_oracle(f);
    let astar = alpha_star(l, &alpha).expect("chain");
    let beta = beta_from_oracle(f);
    let bstar = beta_star(l, &beta).expect("chain");
    let reproduces = |g: &CoefMap, cnf: bool| {
        f.entries().all(|(x, v)| {
            let w = if cnf { eval_cnf(l, g, &x) } else { eval_dnf(l, g, &x) };
            w.expect("arity matches") == v
        })
    };
    for g in coef_maps(l, n) {
        let in_dnf_box = astar.leq(l, &g) && g.leq(l, &alpha);
        if in_dnf_box != reproduces(&g, false) {
            return Some(format!("DNF box membership {in_dnf_box} wrong at {}", g.display(l)));
        }
        let in_cnf_box = beta.leq(l, &g) && g.leq(l, &bstar);
        if in_cnf_box != reproduces(&g, true) {
            return Some(format!("CNF box membership {in_cnf_box} wrong at {}", g.display(l)));
        }
    }
    None
}

fn holds(r: Result<PropertyReport>) -> bool {
    r.map(|r| r.holds).unwrap_or(false)
}

fn hom_id_46(f: &FunctionTable) -> Option<String> {
    let hull = range_convex_hull(f);
    let range = f.range();
    let convex = check_convex_range(f).holds;
    let idem = holds(check_idempotent(f, &hull));
    if idem && !convex {
        return Some("R-idempotent without convex range".into());
    }
    if decide_polynomial(f).verdict {
        let min = holds(check_min_homogeneous(f, &hull, Domain::Full));
        let max = holds(check_max_homogeneous(f, &hull, Domain::Full));
        if !(min && max && idem && convex) {
            return Some(format!(
                "polynomial but min-hom={min} max-hom={max} idempotent={idem} convex={convex}"
            ));
        }
    }
    let l = f.lattice();
    for (name, hull_hom, range_hom) in [
        (
            "min",
            holds(check_min_homogeneous(f, &hull, Domain::Full)),
            holds(check_min_homogeneous(f, &range, Domain::Full)),
        ),
        (
            "max",
            holds(check_max_homogeneous(f, &hull, Domain::Full)),
            holds(check_max_homogeneous(f, &range, Domain::Full)),
        ),
    ] {
        if hull_hom != (range_hom && convex) {
            return Some(format!(
                "hull {name}-hom={hull_hom} but range {name}-hom={range_hom} convex={convex}"
            ));
        }
        if hull_hom && check_nondecreasing(f).holds {
            let iv = l
                .interval(f.at_bottom(), f.at_top())
                .map(|iv| l.interval_elements(iv))
                .unwrap_or_default();
            if iv != range {
                return Some(format!("{name}-homogeneous but range is not [f(0),f(1)]"));
            }
        }
    }
    None
}

fn prop_sug(f: &FunctionTable) -> Option<String> {
    if !decide_polynomial(f).verdict {
        return None;
    }
    let l = f.lattice();
    let mu = measure_from_poly(f).expect("polynomial");
    f.entries().find_map(|(x, v)| {
        let s = sugeno_eval(l, &mu, &x).expect("arity matches");
        let c = l.med3(f.at_bottom(), s, f.at_top());
        (c != v).then(|| format!("clamped integral {} differs at {}", l.name(c), l.fmt_tuple(&x)))
    })
}

fn weak_med_weak_hom(f: &FunctionTable) -> Option<String> {
    if !check_nondecreasing(f).holds {
        return None;
    }
    let r = range_hull_elements(f);
    let wmd = check_median_decomposable(f, MedianDomain::Weak).holds;
    let hom = holds(check_min_homogeneous(f, &r, Domain::Weak))
        && holds(check_max_homogeneous(f, &r, Domain::Weak));
    (wmd != hom).then(|| format!("weakly-median-decomposable={wmd} weak-homogeneous={hom}"))
}

/// Term functions are the Sugeno integrals with 0/1 coefficients.
fn is_term_by_coefficients(f: &FunctionTable) -> bool {
    let l = f.lattice();
    decide_sugeno(f).verdict
        && alpha_from_oracle(f)
            .values()
            .iter()
            .all(|&v| v == l.bottom() || v == l.top())
}

fn main_char3(f: &FunctionTable) -> Option<String> {
    if !decide_sugeno(f).verdict {
        return None;
    }
    let term = is_term_by_coefficients(f);
    let full = holds(check_conservative(f, Domain::Full));
    let weak = holds(check_conservative(f, Domain::Boolean));
    let decided = crate::decide::decide_term(f).verdict;
    (term != full || term != weak || term != decided)
        .then(|| format!("term={term} conservative={full} weakly-conservative={weak} decide_term={decided}"))
}

/// One lemma of the suite checked on `f`.
pub fn check_lemma(id: &str, f: &FunctionTable) -> Option<String> {
    let l = f.lattice();
    let all: Vec<Elem> = l.elements().collect();
    let r = range_hull_elements(f);
    let nd = || check_nondecreasing(f).holds;
    match id {
        "WeaklyMinMaxIdem" => {
            let mut sets = vec![r.clone(), all.clone()];
            sets.extend(all.iter().map(|&c| vec![c]));
            sets.into_iter().find_map(|s| weakly_min_max_idem(f, &s))
        }
        "WeaklyMinMaxRangeIdem" => {
            let hom = holds(check_min_homogeneous(f, &r, Domain::Weak))
                || holds(check_max_homogeneous(f, &r, Domain::Weak));
            (nd() && hom && !holds(check_idempotent(f, &r)))
                .then(|| "weakly homogeneous without R-idempotency".into())
        }
        "Weak15682" => [r.clone(), all.clone()].into_iter().find_map(|s| {
            if !(nd() && holds(check_idempotent(f, &s))) {
                return None;
            }
            if holds(check_horizontally_minitive(f, &s, Domain::Weak))
                && !holds(check_min_homogeneous(f, &s, Domain::Weak))
            {
                return Some(format!("weak horizontal minitivity without min homogeneity, |S|={}", s.len()));
            }
            if holds(check_horizontally_maxitive(f, &s, Domain::Weak))
                && !holds(check_max_homogeneous(f, &s, Domain::Weak))
            {
                return Some(format!("weak horizontal maxitivity without max homogeneity, |S|={}", s.len()));
            }
            None
        }),
        "Weak-Hor-Min-Hom" => {
            if !nd() {
                return None;
            }
            let wmin = holds(check_min_homogeneous(f, &r, Domain::Weak));
            let wmax = holds(check_max_homogeneous(f, &r, Domain::Weak));
            let hmin = holds(check_horizontally_minitive(f, &r, Domain::Weak));
            let hmax = holds(check_horizontally_maxitive(f, &r, Domain::Weak));
            if wmin && wmax != hmax {
                return Some(format!("min-hom: max-hom={wmax} horizontal-max={hmax}"));
            }
            if wmax && wmin != hmin {
                return Some(format!("max-hom: min-hom={wmin} horizontal-min={hmin}"));
            }
            None
        }
        "WMD-RI" => (nd()
            && check_median_decomposable(f, MedianDomain::Weak).holds
            && !holds(check_idempotent(f, &r)))
        .then(|| "weakly median decomposable without R-idempotency".into()),
        "ComponentwiseImpliesConv" => (nd()
            && check_componentwise_convex_range(f).holds
            && !check_convex_range(f).holds)
            .then(|| "componentwise convex range without convex range".into()),
        "ComonotHomog" => {
            if !l.is_chain() {
                return None;
            }
            let cmin = holds(check_comonotonic_minitive(f));
            let cmax = holds(check_comonotonic_maxitive(f));
            [r.clone(), all.clone()].into_iter().find_map(|s| {
                let idem = holds(check_idempotent(f, &s));
                if cmin && !holds(check_horizontally_minitive(f, &s, Domain::Full)) {
                    return Some("comonotonic minitive but not horizontally minitive".to_string());
                }
                if cmax && !holds(check_horizontally_maxitive(f, &s, Domain::Full)) {
                    return Some("comonotonic maxitive but not horizontally maxitive".to_string());
                }
                if cmin && idem && !holds(check_min_homogeneous(f, &s, Domain::Full)) {
                    return Some("comonotonic minitive and idempotent but not min homogeneous".to_string());
                }
                if cmax && idem && !holds(check_max_homogeneous(f, &s, Domain::Full)) {
                    return Some("comonotonic maxitive and idempotent but not max homogeneous".to_string());
                }
                None
            })
        }
        "ComonotNonDec" => {
            if !l.is_chain() {
                return None;
            }
            let cmin = holds(check_comonotonic_minitive(f));
            let cmax = holds(check_comonotonic_maxitive(f));
            let nd = nd();
            if (cmin || cmax) && !nd {
                return Some(format!("comonotonic min={cmin} max={cmax} but not nondecreasing"));
            }
            (f.arity() == 1 && nd && !(cmin && cmax))
                .then(|| "nondecreasing unary function not comonotonic".into())
        }
        "4985" => (holds(check_min_homogeneous(f, &all, Domain::Boolean))
            && holds(check_max_homogeneous(f, &all, Domain::Boolean))
            && !holds(check_idempotent(f, &all)))
        .then(|| "Boolean homogeneous without idempotency".into()),
        "conservative-equivalences" => {
            let a = holds(check_conservative(f, Domain::Full));
            let b = holds(check_conservative_subsets(f));
            let c = holds(check_conservative_preimage(f));
            (a != b || b != c).then(|| format!("membership={a} subsets={b} preimage={c}"))
        }
        _ => Some(format!("unknown lemma {id}")),
    }
}

fn weakly_min_max_idem(f: &FunctionTable, s: &[Elem]) -> Option<String> {
    let hom = holds(check_min_homogeneous(f, s, Domain::Weak))
        && holds(check_max_homogeneous(f, s, Domain::Weak));
    if !hom {
        return None;
    }
    if !holds(check_idempotent(f, s)) {
        return Some(format!("weakly homogeneous without idempotency, |S|={}", s.len()));
    }
    let l = f.lattice();
    let (lo, hi) = (f.at_bottom(), f.at_top());
    if !(s.contains(&lo) && s.contains(&hi)) {
        return None;
    }
    let n = f.arity();
    let weak = VectorClass::new(0, 2.min(n));
    l.tuples(n).filter(|x| weak.contains(l, x)).find_map(|x| {
        let v = f.eval(&x);
        (l.leq(lo, v) && l.leq(v, hi) && f.eval(&clamp(f, &x)) != v)
            .then(|| format!("clamp changes the value at {}", l.fmt_tuple(&x)))
    })
}

/// Brute force of the median identity for monotone sequence pairs of every
/// length up to `max_n + 1`.
fn simplex_median_sweep(l: &Lattice, max_n: usize) -> (u64, Vec<Discrepancy>) {
    let mut checked = 0u64;
    let mut found = Vec::new();
    let dummy = FunctionTable::new(
        Arc::new(l.clone()),
        1,
        l.elements().collect(),
    )
    .expect("identity table");
    for n in 1..=max_n {
        let seqs: Vec<Vec<Elem>> = l
            .tuples(n + 1)
            .filter(|t| t.windows(2).all(|w| l.leq(w[0], w[1])))
            .map(|t| t.into_inner())
            .collect();
        for a in &seqs {
            for b_rev in &seqs {
                let b: Vec<Elem> = b_rev.iter().rev().copied().collect();
                if !l.leq(b[n], a[n]) {
                    continue;
                }
                let lhs = l.join_all((0..=n).map(|i| l.meet(a[i], b[i])));
                let mut args = a[..n].to_vec();
                args.extend_from_slice(&b);
                let rhs = l.med_by_subsets(&args).expect("odd length");
                if lhs != rhs {
                    found.push(Discrepancy {
                        index: checked,
                        table: dummy.clone(),
                        detail: format!(
                            "a={} b={} join-of-meets={} median={}",
                            l.fmt_tuple(a),
                            l.fmt_tuple(&b),
                            l.name(lhs),
                            l.name(rhs)
                        ),
                    });
                }
                checked += 1;
            }
        }
    }
    (checked, found)
}
