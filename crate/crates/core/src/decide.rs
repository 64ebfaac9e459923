//! Recognition of polynomial functions, Sugeno integrals and term functions,
//! and the bundle matrix that evaluates every characterization condition set.

use crate::error::Result;
use crate::lattice::{Elem, Lattice, Tuple};
use crate::poly::{alpha_from_oracle, extension_mismatch, measure_from_poly, CoefMap, FuzzyMeasure};
use crate::props::{
    self, check_comonotonic_maxitive, check_comonotonic_minitive, check_componentwise_convex_range,
    check_conservative, check_convex_range, check_horizontally_maxitive,
    check_horizontally_minitive, check_idempotent, check_max_homogeneous,
    check_median_decomposable, check_min_homogeneous, check_nondecreasing,
    check_strongly_idempotent, range_hull_elements, Domain, MedianDomain, Property,
    PropertyReport, Witness,
};
use crate::table::FunctionTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Dnf(CoefMap),
    Measure(FuzzyMeasure),
}

impl Certificate {
    pub fn coefficients(&self) -> &CoefMap {
        match self {
            Certificate::Dnf(c) => c,
            Certificate::Measure(m) => m.coefficients(),
        }
    }
}

/// A verdict with either a certificate (accept) or a counterexample (reject).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: bool,
    pub certificate: Option<Certificate>,
    pub counterexample: Option<Tuple>,
}

impl Decision {
    fn accept(c: Certificate) -> Self {
        Decision {
            verdict: true,
            certificate: Some(c),
            counterexample: None,
        }
    }

    fn reject(x: Tuple) -> Self {
        Decision {
            verdict: false,
            certificate: None,
            counterexample: Some(x),
        }
    }

    pub fn to_report(&self, property: Property, domain: &str) -> PropertyReport {
        PropertyReport {
            property,
            holds: self.verdict,
            witness: self.counterexample.clone().map(|x| Witness::Point { x }),
            checked_domain: domain.to_string(),
        }
    }

    /// `(field, value)` pairs in report order.
    pub fn fields(&self, l: &Lattice) -> Vec<(String, String)> {
        let mut out = vec![("verdict".to_string(), self.verdict.to_string())];
        match &self.certificate {
            Some(Certificate::Dnf(c)) => out.push(("certificate.alpha".into(), c.display(l))),
            Some(Certificate::Measure(m)) => {
                out.push(("certificate.mu".into(), m.coefficients().display(l)))
            }
            None => {}
        }
        if let Some(x) = &self.counterexample {
            out.push(("counterexample".into(), l.fmt_tuple(x)));
        }
        out
    }
}

/// Accepts iff the polynomial extension of the Boolean restriction reproduces
/// the table. Rejections carry the first disagreement in graded order.
pub fn decide_polynomial(f: &FunctionTable) -> Decision {
    match extension_mismatch(f) {
        None => Decision::accept(Certificate::Dnf(alpha_from_oracle(f))),
        Some((x, _)) => Decision::reject(x),
    }
}

/// Polynomial with `f(0̄) = bottom` and `f(1̄) = top`.
pub fn decide_sugeno(f: &FunctionTable) -> Decision {
    let poly = decide_polynomial(f);
    if !poly.verdict {
        return poly;
    }
    let l = f.lattice();
    let n = f.arity();
    if f.at_bottom() != l.bottom() {
        return Decision::reject(Tuple::constant(l.bottom(), n));
    }
    if f.at_top() != l.top() {
        return Decision::reject(Tuple::constant(l.top(), n));
    }
    match measure_from_poly(f) {
        Ok(mu) => Decision::accept(Certificate::Measure(mu)),
        // unreachable for an idempotent polynomial; fall back to the DNF
        Err(_) => poly,
    }
}

/// Sugeno integral that is conservative on `{0,1}^n`. On chains full
/// conservativeness is computed as well and must agree.
pub fn decide_term(f: &FunctionTable) -> Decision {
    let sugeno = decide_sugeno(f);
    if !sugeno.verdict {
        return sugeno;
    }
    let weak = check_conservative(f, Domain::Boolean).expect("boolean domain is supported");
    if f.lattice().is_chain() {
        let full = check_conservative(f, Domain::Full).expect("full domain is supported");
        assert_eq!(
            weak.holds, full.holds,
            "weak and full conservativeness disagree on a Sugeno integral"
        );
    }
    match weak.witness {
        Some(Witness::Point { x }) => Decision::reject(x),
        _ => Decision::accept(Certificate::Dnf(alpha_from_oracle(f))),
    }
}

/// Single hypotheses used by the bundles. `R` is the range hull
/// `[f(0̄)∧f(1̄), f(0̄)∨f(1̄)]`, `L` the whole lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hyp {
    Nondecreasing,
    MedianDecomposable,
    WeaklyMedianDecomposable,
    StronglyIdempotent,
    ConvexRange,
    ComponentwiseConvexRange,
    RangeIdempotent,
    MinHomogeneous,
    MaxHomogeneous,
    HorizontallyMinitive,
    HorizontallyMaxitive,
    WeaklyMinHomogeneous,
    WeaklyMaxHomogeneous,
    WeaklyHorizontallyMinitive,
    WeaklyHorizontallyMaxitive,
    WeaklyHorizontallyMinitiveL,
    WeaklyHorizontallyMaxitiveL,
    ComonotonicMinitive,
    ComonotonicMaxitive,
}

pub const ALL_HYPS: [Hyp; 19] = [
    Hyp::Nondecreasing,
    Hyp::MedianDecomposable,
    Hyp::WeaklyMedianDecomposable,
    Hyp::StronglyIdempotent,
    Hyp::ConvexRange,
    Hyp::ComponentwiseConvexRange,
    Hyp::RangeIdempotent,
    Hyp::MinHomogeneous,
    Hyp::MaxHomogeneous,
    Hyp::HorizontallyMinitive,
    Hyp::HorizontallyMaxitive,
    Hyp::WeaklyMinHomogeneous,
    Hyp::WeaklyMaxHomogeneous,
    Hyp::WeaklyHorizontallyMinitive,
    Hyp::WeaklyHorizontallyMaxitive,
    Hyp::WeaklyHorizontallyMinitiveL,
    Hyp::WeaklyHorizontallyMaxitiveL,
    Hyp::ComonotonicMinitive,
    Hyp::ComonotonicMaxitive,
];

impl Hyp {
    pub fn label(self) -> &'static str {
        match self {
            Hyp::Nondecreasing => "nondecreasing",
            Hyp::MedianDecomposable => "median-decomposable",
            Hyp::WeaklyMedianDecomposable => "weakly-median-decomposable",
            Hyp::StronglyIdempotent => "strongly-idempotent",
            Hyp::ConvexRange => "convex-range",
            Hyp::ComponentwiseConvexRange => "componentwise-convex-range",
            Hyp::RangeIdempotent => "R-idempotent",
            Hyp::MinHomogeneous => "R-min-homogeneous",
            Hyp::MaxHomogeneous => "R-max-homogeneous",
            Hyp::HorizontallyMinitive => "horizontally-R-minitive",
            Hyp::HorizontallyMaxitive => "horizontally-R-maxitive",
            Hyp::WeaklyMinHomogeneous => "weakly-R-min-homogeneous",
            Hyp::WeaklyMaxHomogeneous => "weakly-R-max-homogeneous",
            Hyp::WeaklyHorizontallyMinitive => "weakly-horizontally-R-minitive",
            Hyp::WeaklyHorizontallyMaxitive => "weakly-horizontally-R-maxitive",
            Hyp::WeaklyHorizontallyMinitiveL => "weakly-horizontally-L-minitive",
            Hyp::WeaklyHorizontallyMaxitiveL => "weakly-horizontally-L-maxitive",
            Hyp::ComonotonicMinitive => "comonotonic-minitive",
            Hyp::ComonotonicMaxitive => "comonotonic-maxitive",
        }
    }

    pub fn chain_only(self) -> bool {
        matches!(self, Hyp::ComonotonicMinitive | Hyp::ComonotonicMaxitive)
    }

    fn index(self) -> usize {
        ALL_HYPS.iter().position(|&h| h == self).expect("listed")
    }

    /// Evaluates the hypothesis. `None` when it is undefined on this lattice.
    pub fn evaluate(self, f: &FunctionTable) -> Option<bool> {
        let l = f.lattice();
        if self.chain_only() && !l.is_chain() {
            return None;
        }
        let r = range_hull_elements(f);
        let all: Vec<Elem> = l.elements().collect();
        let ok = |rep: Result<PropertyReport>| rep.expect("nonempty constant set").holds;
        Some(match self {
            Hyp::Nondecreasing => check_nondecreasing(f).holds,
            Hyp::MedianDecomposable => check_median_decomposable(f, MedianDomain::Full).holds,
            Hyp::WeaklyMedianDecomposable => check_median_decomposable(f, MedianDomain::Weak).holds,
            Hyp::StronglyIdempotent => check_strongly_idempotent(f).holds,
            Hyp::ConvexRange => check_convex_range(f).holds,
            Hyp::ComponentwiseConvexRange => check_componentwise_convex_range(f).holds,
            Hyp::RangeIdempotent => ok(check_idempotent(f, &r)),
            Hyp::MinHomogeneous => ok(check_min_homogeneous(f, &r, Domain::Full)),
            Hyp::MaxHomogeneous => ok(check_max_homogeneous(f, &r, Domain::Full)),
            Hyp::HorizontallyMinitive => ok(check_horizontally_minitive(f, &r, Domain::Full)),
            Hyp::HorizontallyMaxitive => ok(check_horizontally_maxitive(f, &r, Domain::Full)),
            Hyp::WeaklyMinHomogeneous => ok(check_min_homogeneous(f, &r, Domain::Weak)),
            Hyp::WeaklyMaxHomogeneous => ok(check_max_homogeneous(f, &r, Domain::Weak)),
            Hyp::WeaklyHorizontallyMinitive => ok(check_horizontally_minitive(f, &r, Domain::Weak)),
            Hyp::WeaklyHorizontallyMaxitive => ok(check_horizontally_maxitive(f, &r, Domain::Weak)),
            Hyp::WeaklyHorizontallyMinitiveL => ok(check_horizontally_minitive(f, &all, Domain::Weak)),
            Hyp::WeaklyHorizontallyMaxitiveL => ok(check_horizontally_maxitive(f, &all, Domain::Weak)),
            Hyp::ComonotonicMinitive => ok(check_comonotonic_minitive(f)),
            Hyp::ComonotonicMaxitive => ok(check_comonotonic_maxitive(f)),
        })
    }
}

/// One labelled condition set of an equivalence theorem.
#[derive(Clone, Copy, Debug)]
pub struct Bundle {
    pub theorem: &'static str,
    pub condition: &'static str,
    pub hyps: &'static [Hyp],
}

use Hyp::*;

pub const BUNDLES: &[Bundle] = &[
    Bundle { theorem: "mainChar", condition: "ii", hyps: &[MedianDecomposable] },
    Bundle {
        theorem: "mainChar",
        condition: "iii",
        hyps: &[Nondecreasing, StronglyIdempotent, ConvexRange, ComponentwiseConvexRange],
    },
    Bundle { theorem: "mainChar", condition: "iv", hyps: &[Nondecreasing, MinHomogeneous, MaxHomogeneous] },
    Bundle { theorem: "mainChar", condition: "v", hyps: &[Nondecreasing, MinHomogeneous, HorizontallyMaxitive] },
    Bundle { theorem: "mainChar", condition: "vi", hyps: &[Nondecreasing, HorizontallyMinitive, MaxHomogeneous] },
    Bundle {
        theorem: "mainChar",
        condition: "vii",
        hyps: &[Nondecreasing, RangeIdempotent, HorizontallyMinitive, HorizontallyMaxitive],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "ii",
        hyps: &[Nondecreasing, WeaklyMinHomogeneous, WeaklyMaxHomogeneous],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "iii",
        hyps: &[Nondecreasing, WeaklyMinHomogeneous, WeaklyHorizontallyMaxitive],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "iii-L",
        hyps: &[Nondecreasing, WeaklyMinHomogeneous, WeaklyHorizontallyMaxitiveL],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "iv",
        hyps: &[Nondecreasing, WeaklyHorizontallyMinitive, WeaklyMaxHomogeneous],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "iv-L",
        hyps: &[Nondecreasing, WeaklyHorizontallyMinitiveL, WeaklyMaxHomogeneous],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "v",
        hyps: &[Nondecreasing, RangeIdempotent, WeaklyHorizontallyMinitive, WeaklyHorizontallyMaxitive],
    },
    Bundle {
        theorem: "WLP-WeakHomWeakHor",
        condition: "v-L",
        hyps: &[Nondecreasing, RangeIdempotent, WeaklyHorizontallyMinitiveL, WeaklyHorizontallyMaxitiveL],
    },
    Bundle { theorem: "WLP-WeaklyMed", condition: "i", hyps: &[Nondecreasing, WeaklyMedianDecomposable] },
    Bundle {
        theorem: "ChainStrIdemWLP",
        condition: "i",
        hyps: &[Nondecreasing, StronglyIdempotent, ComponentwiseConvexRange],
    },
    Bundle { theorem: "WLP-comonot", condition: "ii", hyps: &[WeaklyMinHomogeneous, ComonotonicMaxitive] },
    Bundle { theorem: "WLP-comonot", condition: "iii", hyps: &[ComonotonicMinitive, WeaklyMaxHomogeneous] },
    Bundle {
        theorem: "WLP-comonot",
        condition: "iv",
        hyps: &[RangeIdempotent, WeaklyHorizontallyMinitive, ComonotonicMaxitive],
    },
    Bundle {
        theorem: "WLP-comonot",
        condition: "iv-L",
        hyps: &[RangeIdempotent, WeaklyHorizontallyMinitiveL, ComonotonicMaxitive],
    },
    Bundle {
        theorem: "WLP-comonot",
        condition: "v",
        hyps: &[RangeIdempotent, ComonotonicMinitive, WeaklyHorizontallyMaxitive],
    },
    Bundle {
        theorem: "WLP-comonot",
        condition: "v-L",
        hyps: &[RangeIdempotent, ComonotonicMinitive, WeaklyHorizontallyMaxitiveL],
    },
    Bundle {
        theorem: "WLP-comonot",
        condition: "vi",
        hyps: &[RangeIdempotent, ComonotonicMinitive, ComonotonicMaxitive],
    },
];

/// Verdict of one bundle; `None` when a hypothesis is undefined here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleVerdict {
    pub theorem: &'static str,
    pub condition: &'static str,
    pub verdict: Option<bool>,
    pub failing: Vec<Hyp>,
}

impl BundleVerdict {
    pub fn label(&self) -> String {
        format!("{}({})", self.theorem, self.condition)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleMatrix {
    pub polynomial: bool,
    pub hypotheses: Vec<(Hyp, Option<bool>)>,
    pub bundles: Vec<BundleVerdict>,
}

impl BundleMatrix {
    pub fn get(&self, theorem: &str, condition: &str) -> Option<&BundleVerdict> {
        self.bundles
            .iter()
            .find(|b| b.theorem == theorem && b.condition == condition)
    }

    /// Applicable bundles whose verdict differs from the polynomial decision.
    pub fn disagreements(&self) -> Vec<&BundleVerdict> {
        self.bundles
            .iter()
            .filter(|b| b.verdict.is_some_and(|v| v != self.polynomial))
            .collect()
    }

    pub fn fields(&self) -> Vec<(String, String)> {
        let show = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
        let mut out = vec![("polynomial".to_string(), self.polynomial.to_string())];
        for (h, v) in &self.hypotheses {
            out.push((format!("hyp.{}", h.label()), show(*v)));
        }
        for b in &self.bundles {
            out.push((format!("bundle.{}", b.label()), show(b.verdict)));
        }
        out
    }
}

/// Evaluates the bundles selected by `keep`, computing each hypothesis once.
pub fn characterize_with<F>(f: &FunctionTable, keep: F) -> BundleMatrix
where
    F: Fn(&Bundle) -> bool,
{
    let chosen: Vec<&Bundle> = BUNDLES.iter().filter(|b| keep(b)).collect();
    let mut memo: [Option<Option<bool>>; ALL_HYPS.len()] = [None; ALL_HYPS.len()];
    let mut bundles = Vec::with_capacity(chosen.len());
    for b in chosen {
        let mut verdict = Some(true);
        let mut failing = Vec::new();
        for &h in b.hyps {
            let v = *memo[h.index()].get_or_insert_with(|| h.evaluate(f));
            match v {
                None => verdict = None,
                Some(false) => {
                    failing.push(h);
                    if verdict.is_some() {
                        verdict = Some(false);
                    }
                }
                Some(true) => {}
            }
        }
        bundles.push(BundleVerdict {
            theorem: b.theorem,
            condition: b.condition,
            verdict,
            failing,
        });
    }
    let hypotheses = ALL_HYPS
        .iter()
        .filter_map(|&h| memo[h.index()].map(|v| (h, v)))
        .collect();
    BundleMatrix {
        polynomial: decide_polynomial(f).verdict,
        hypotheses,
        bundles,
    }
}

/// Every bundle of every equivalence theorem.
pub fn characterize(f: &FunctionTable) -> BundleMatrix {
    characterize_with(f, |_| true)
}

/// Nondecreasing, Boolean min homogeneous and Boolean max homogeneous, with
/// constants ranging over all of `L`.
pub fn sugeno_bundle(f: &FunctionTable) -> bool {
    let all: Vec<Elem> = f.lattice().elements().collect();
    check_nondecreasing(f).holds
        && check_min_homogeneous(f, &all, Domain::Boolean).is_ok_and(|r| r.holds)
        && check_max_homogeneous(f, &all, Domain::Boolean).is_ok_and(|r| r.holds)
}

/// Constant set used by a property check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetChoice {
    /// The range hull `[f(0̄)∧f(1̄), f(0̄)∨f(1̄)]`.
    Range,
    /// All of `L`.
    All,
}

impl SetChoice {
    pub fn name(self) -> &'static str {
        match self {
            SetChoice::Range => "range",
            SetChoice::All => "all",
        }
    }

    pub fn elements(self, f: &FunctionTable) -> Vec<Elem> {
        match self {
            SetChoice::Range => range_hull_elements(f),
            SetChoice::All => f.lattice().elements().collect(),
        }
    }
}

/// Runs any property, including the three class decisions, as a report.
pub fn run_check(f: &FunctionTable, property: Property, s: SetChoice) -> Result<PropertyReport> {
    let set = s.elements(f);
    match property {
        Property::Nondecreasing => Ok(check_nondecreasing(f)),
        Property::Idempotent => check_idempotent(f, &set),
        Property::MinHomogeneous(d) => check_min_homogeneous(f, &set, d),
        Property::MaxHomogeneous(d) => check_max_homogeneous(f, &set, d),
        Property::HorizontallyMinitive(d) => check_horizontally_minitive(f, &set, d),
        Property::HorizontallyMaxitive(d) => check_horizontally_maxitive(f, &set, d),
        Property::MedianDecomposable(d) => Ok(check_median_decomposable(f, d)),
        Property::StronglyIdempotent => Ok(check_strongly_idempotent(f)),
        Property::ConvexRange => Ok(check_convex_range(f)),
        Property::ComponentwiseConvexRange => Ok(check_componentwise_convex_range(f)),
        Property::ComonotonicMinitive => check_comonotonic_minitive(f),
        Property::ComonotonicMaxitive => check_comonotonic_maxitive(f),
        Property::Conservative(d) => check_conservative(f, d),
        Property::ConservativeSubsets => props::check_conservative_subsets(f),
        Property::ConservativePreimage => props::check_conservative_preimage(f),
        Property::Polynomial => Ok(decide_polynomial(f).to_report(property, "graded full")),
        Property::Sugeno => Ok(decide_sugeno(f).to_report(property, "graded full")),
        Property::Term => Ok(decide_term(f).to_report(property, "graded full")),
    }
}
