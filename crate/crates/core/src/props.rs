//! Black-box property checkers over explicit function tables.
//!
//! Every checker sweeps its domain in a fixed order (tuples in index order,
//! then constants ascending, then coordinates ascending) and reports the
//! first violation it meets. A failing [`PropertyReport`] always carries a
//! witness that [`PropertyReport::replay`] can re-check against the raw
//! defining equation.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Interval, Lattice, Tuple};
use crate::poly::{alpha_from_oracle, eval_dnf};
use crate::table::FunctionTable;

/// Which vectors a homogeneity or horizontal property is required on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    /// All of `L^n`.
    Full,
    /// The class `L_n^(0,2)` of vectors with at most two distinct values.
    Weak,
    /// `{0,1}^n`.
    Boolean,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Full => "full",
            Domain::Weak => "weak",
            Domain::Boolean => "boolean",
        }
    }
}

/// Sweep domain for median decomposability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MedianDomain {
    Full,
    /// `L_n^(0,2) ∪ L_n^(1,3)`.
    Weak,
    /// `L_n^(0,2)` only.
    ZeroTwoOnly,
}

impl MedianDomain {
    pub fn name(self) -> &'static str {
        match self {
            MedianDomain::Full => "full",
            MedianDomain::Weak => "weak",
            MedianDomain::ZeroTwoOnly => "zero-two",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Nondecreasing,
    Idempotent,
    MinHomogeneous(Domain),
    MaxHomogeneous(Domain),
    HorizontallyMinitive(Domain),
    HorizontallyMaxitive(Domain),
    MedianDecomposable(MedianDomain),
    StronglyIdempotent,
    ConvexRange,
    ComponentwiseConvexRange,
    ComonotonicMinitive,
    ComonotonicMaxitive,
    Conservative(Domain),
    /// `f(S^n) ⊆ S` for every nonempty `S`.
    ConservativeSubsets,
    /// `f(x) ∈ S` forces some `x_i ∈ S`, for every nonempty `S`.
    ConservativePreimage,
    Polynomial,
    Sugeno,
    Term,
}

impl Property {
    pub fn name(self) -> String {
        match self {
            Property::Nondecreasing => "nondecreasing".into(),
            Property::Idempotent => "idempotent".into(),
            Property::MinHomogeneous(d) => format!("min-homogeneous[{}]", d.name()),
            Property::MaxHomogeneous(d) => format!("max-homogeneous[{}]", d.name()),
            Property::HorizontallyMinitive(d) => format!("horizontally-minitive[{}]", d.name()),
            Property::HorizontallyMaxitive(d) => format!("horizontally-maxitive[{}]", d.name()),
            Property::MedianDecomposable(d) => format!("median-decomposable[{}]", d.name()),
            Property::StronglyIdempotent => "strongly-idempotent".into(),
            Property::ConvexRange => "convex-range".into(),
            Property::ComponentwiseConvexRange => "componentwise-convex-range".into(),
            Property::ComonotonicMinitive => "comonotonic-minitive".into(),
            Property::ComonotonicMaxitive => "comonotonic-maxitive".into(),
            Property::Conservative(d) => format!("conservative[{}]", d.name()),
            Property::ConservativeSubsets => "conservative-subsets".into(),
            Property::ConservativePreimage => "conservative-preimage".into(),
            Property::Polynomial => "polynomial".into(),
            Property::Sugeno => "sugeno".into(),
            Property::Term => "term".into(),
        }
    }
}

impl Domain {
    pub fn parse(s: &str) -> Result<Domain> {
        match s {
            "full" => Ok(Domain::Full),
            "weak" => Ok(Domain::Weak),
            "boolean" => Ok(Domain::Boolean),
            _ => Err(Error::Unknown {
                what: "domain",
                name: s.to_string(),
            }),
        }
    }
}

impl MedianDomain {
    pub fn parse(s: &str) -> Result<MedianDomain> {
        match s {
            "full" => Ok(MedianDomain::Full),
            "weak" => Ok(MedianDomain::Weak),
            "zero-two" => Ok(MedianDomain::ZeroTwoOnly),
            _ => Err(Error::Unknown {
                what: "median domain",
                name: s.to_string(),
            }),
        }
    }
}

/// Property names accepted by [`Property::parse`].
pub const PROPERTY_NAMES: [&str; 18] = [
    "nondecreasing",
    "idempotent",
    "min-homogeneous",
    "max-homogeneous",
    "horizontally-minitive",
    "horizontally-maxitive",
    "median-decomposable",
    "strongly-idempotent",
    "convex-range",
    "componentwise-convex-range",
    "comonotonic-minitive",
    "comonotonic-maxitive",
    "conservative",
    "conservative-subsets",
    "conservative-preimage",
    "polynomial",
    "sugeno",
    "term",
];

impl Property {
    /// Parses a base name plus an optional domain; `name[domain]` is also
    /// accepted. The domain defaults to `full`.
    pub fn parse(name: &str, domain: Option<&str>) -> Result<Property> {
        let (base, inline) = match name.split_once('[') {
            Some((b, rest)) => (b, Some(rest.trim_end_matches(']'))),
            None => (name, None),
        };
        let d = match (inline, domain) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Malformed {
                    what: "property",
                    detail: format!("domain given twice: {a} and {b}"),
                })
            }
            (Some(a), _) => Some(a),
            (None, b) => b,
        };
        let dom = || Domain::parse(d.unwrap_or("full"));
        let p = match base {
            "min-homogeneous" => Property::MinHomogeneous(dom()?),
            "max-homogeneous" => Property::MaxHomogeneous(dom()?),
            "horizontally-minitive" => Property::HorizontallyMinitive(dom()?),
            "horizontally-maxitive" => Property::HorizontallyMaxitive(dom()?),
            "conservative" => Property::Conservative(dom()?),
            "median-decomposable" => {
                Property::MedianDecomposable(MedianDomain::parse(d.unwrap_or("full"))?)
            }
            _ => {
                let p = match base {
                    "nondecreasing" => Property::Nondecreasing,
                    "idempotent" => Property::Idempotent,
                    "strongly-idempotent" => Property::StronglyIdempotent,
                    "convex-range" => Property::ConvexRange,
                    "componentwise-convex-range" => Property::ComponentwiseConvexRange,
                    "comonotonic-minitive" => Property::ComonotonicMinitive,
                    "comonotonic-maxitive" => Property::ComonotonicMaxitive,
                    "conservative-subsets" => Property::ConservativeSubsets,
                    "conservative-preimage" => Property::ConservativePreimage,
                    "polynomial" => Property::Polynomial,
                    "sugeno" => Property::Sugeno,
                    "term" => Property::Term,
                    _ => {
                        return Err(Error::Unknown {
                            what: "property",
                            name: name.to_string(),
                        })
                    }
                };
                if d.is_some_and(|d| d != "full") {
                    return Err(Error::Malformed {
                        what: "property",
                        detail: format!("{base} takes no domain"),
                    });
                }
                p
            }
        };
        Ok(p)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Evidence of a violation. Coordinates `k` are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Step { lower: Tuple, upper: Tuple },
    Constant { c: Elem },
    AtConstant { x: Tuple, c: Elem },
    AtCoordinate { x: Tuple, k: usize },
    RangeGap { missing: Elem },
    SectionGap { k: usize, anchor: Tuple, missing: Elem },
    Pair { x: Tuple, y: Tuple },
    Point { x: Tuple },
    SubsetPoint { subset: Vec<Elem>, x: Tuple },
}

impl Witness {
    /// `(field, value)` pairs for the report format.
    pub fn fields(&self, l: &Lattice) -> Vec<(String, String)> {
        let t = |x: &Tuple| l.fmt_tuple(x);
        let s = |e: &Elem| l.name(*e).to_string();
        let set = |v: &[Elem]| {
            let names: Vec<&str> = v.iter().map(|&e| l.name(e)).collect();
            format!("{{{}}}", names.join(","))
        };
        let kv = |k: &str, v: String| (k.to_string(), v);
        match self {
            Witness::Step { lower, upper } => vec![kv("lower", t(lower)), kv("upper", t(upper))],
            Witness::Constant { c } => vec![kv("c", s(c))],
            Witness::AtConstant { x, c } => vec![kv("x", t(x)), kv("c", s(c))],
            Witness::AtCoordinate { x, k } => vec![kv("x", t(x)), kv("k", (k + 1).to_string())],
            Witness::RangeGap { missing } => vec![kv("missing", s(missing))],
            Witness::SectionGap { k, anchor, missing } => vec![
                kv("k", (k + 1).to_string()),
                kv("anchor", t(anchor)),
                kv("missing", s(missing)),
            ],
            Witness::Pair { x, y } => vec![kv("x", t(x)), kv("y", t(y))],
            Witness::Point { x } => vec![kv("x", t(x))],
            Witness::SubsetPoint { subset, x } => vec![kv("subset", set(subset)), kv("x", t(x))],
        }
    }
}

/// Verdict and evidence for one property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub checked_domain: String,
}

impl PropertyReport {
    fn pass(property: Property, checked_domain: String) -> Self {
        PropertyReport {
            property,
            holds: true,
            witness: None,
            checked_domain,
        }
    }

    fn fail(property: Property, witness: Witness, checked_domain: String) -> Self {
        PropertyReport {
            property,
            holds: false,
            witness: Some(witness),
            checked_domain,
        }
    }

    fn from_search(property: Property, found: Option<Witness>, checked_domain: String) -> Self {
        match found {
            Some(w) => Self::fail(property, w, checked_domain),
            None => Self::pass(property, checked_domain),
        }
    }

    /// Re-checks the witness against the defining equation. True when the
    /// report is a pass or when the stored violation reproduces.
    pub fn replay(&self, f: &FunctionTable) -> bool {
        match &self.witness {
            None => self.holds,
            Some(w) => !self.holds && violates(f, self.property, w),
        }
    }

    /// `(field, value)` pairs in report order.
    pub fn fields(&self, l: &Lattice) -> Vec<(String, String)> {
        let mut out = vec![
            ("property".to_string(), self.property.name()),
            ("holds".to_string(), self.holds.to_string()),
            ("domain".to_string(), self.checked_domain.clone()),
        ];
        if let Some(w) = &self.witness {
            out.extend(
                w.fields(l)
                    .into_iter()
                    .map(|(k, v)| (format!("witness.{k}"), v)),
            );
        }
        out
    }
}

fn describe(what: &str, tuples: usize, extra: &str) -> String {
    if extra.is_empty() {
        format!("{what}: {tuples} tuples")
    } else {
        format!("{what}: {tuples} tuples x {extra}")
    }
}

fn set_desc(s: &[Elem]) -> String {
    format!("{} constants", s.len())
}

fn require_chain(l: &Lattice, what: &'static str) -> Result<()> {
    if l.is_chain() {
        Ok(())
    } else {
        Err(Error::NotAChain(what))
    }
}

fn sorted_set(s: &[Elem]) -> Result<Vec<Elem>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// The class `L_n^(p,q)`: `p` bounds a count of distinct values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorClass {
    pub p: usize,
    pub q: usize,
}

impl VectorClass {
    pub fn new(p: usize, q: usize) -> Self {
        VectorClass { p, q }
    }

    pub fn contains(&self, l: &Lattice, x: &[Elem]) -> bool {
        let mut vals = x.to_vec();
        vals.sort_unstable();
        vals.dedup();
        let bounds = vals
            .iter()
            .filter(|&&v| v == l.bottom() || v == l.top())
            .count();
        bounds >= self.p && vals.len() <= self.q
    }
}

/// Tuples of `L_n^(p,q)`: at least `p` of the distinct values lie in
/// `{bottom, top}` and there are at most `q` distinct values overall.
pub fn enumerate_class(l: &Lattice, n: usize, cls: VectorClass) -> Result<Vec<Tuple>> {
    if cls.p > cls.q || cls.q > n {
        return Err(Error::Malformed {
            what: "vector class",
            detail: format!("need 0 <= p <= q <= n, got p={} q={} n={n}", cls.p, cls.q),
        });
    }
    Ok(l.tuples(n).filter(|x| cls.contains(l, x)).collect())
}

fn weak_tuples(l: &Lattice, n: usize) -> Vec<Tuple> {
    let cls = VectorClass::new(0, 2.min(n));
    l.tuples(n).filter(|x| cls.contains(l, x)).collect()
}

fn domain_tuples(l: &Lattice, n: usize, d: Domain) -> Vec<Tuple> {
    match d {
        Domain::Full => l.tuples(n).collect(),
        Domain::Weak => weak_tuples(l, n),
        Domain::Boolean => l.boolean_tuples(n),
    }
}

/// `[f(0̄)∧f(1̄), f(0̄)∨f(1̄)]`, which is `[f(0̄), f(1̄)]` for nondecreasing `f`.
pub fn range_hull(f: &FunctionTable) -> Interval {
    let l = f.lattice();
    let (a, b) = (f.at_bottom(), f.at_top());
    Interval {
        lo: l.meet(a, b),
        hi: l.join(a, b),
    }
}

pub fn range_hull_elements(f: &FunctionTable) -> Vec<Elem> {
    f.lattice().interval_elements(range_hull(f))
}

/// Convex hull of the actual range of `f`.
pub fn range_convex_hull(f: &FunctionTable) -> Vec<Elem> {
    let l = f.lattice();
    l.convex_hull(&f.range())
        .expect("range of a table is nonempty")
        .elements(l)
}

/// `[x]^c`: coordinates at or above `c` become top.
pub fn cut_above(l: &Lattice, x: &[Elem], c: Elem) -> Tuple {
    x.iter()
        .map(|&xi| if l.leq(c, xi) { l.top() } else { xi })
        .collect()
}

/// `[x]_c`: coordinates at or below `c` become bottom.
pub fn cut_below(l: &Lattice, x: &[Elem], c: Elem) -> Tuple {
    x.iter()
        .map(|&xi| if l.leq(xi, c) { l.bottom() } else { xi })
        .collect()
}

/// `⟨x⟩_f`: each coordinate clamped into `[f(0̄), f(1̄)]` by a median.
pub fn clamp(f: &FunctionTable, x: &[Elem]) -> Tuple {
    let l = f.lattice();
    let (lo, hi) = (f.at_bottom(), f.at_top());
    x.iter().map(|&xi| l.med3(lo, xi, hi)).collect()
}

pub fn check_nondecreasing(f: &FunctionTable) -> PropertyReport {
    let l = f.lattice();
    let n = f.arity();
    let found = l.tuples(n).find_map(|x| {
        let fx = f.eval(&x);
        (0..n).find_map(|k| {
            l.upper_covers(x[k]).iter().find_map(|&u| {
                let y = x.with(k, u);
                (!l.leq(fx, f.eval(&y))).then(|| Witness::Step {
                    lower: x.clone(),
                    upper: y,
                })
            })
        })
    });
    PropertyReport::from_search(
        Property::Nondecreasing,
        found,
        describe("full, cover steps", f.len(), ""),
    )
}

pub fn check_idempotent(f: &FunctionTable, s: &[Elem]) -> Result<PropertyReport> {
    let s = sorted_set(s)?;
    let found = s
        .iter()
        .find(|&&c| f.at_constant(c) != c)
        .map(|&c| Witness::Constant { c });
    Ok(PropertyReport::from_search(
        Property::Idempotent,
        found,
        format!("constants: {}", s.len()),
    ))
}

fn sweep_tuple_const<F>(
    f: &FunctionTable,
    s: &[Elem],
    domain: Domain,
    property: Property,
    mut violated: F,
) -> Result<PropertyReport>
where
    F: FnMut(&Tuple, Elem) -> bool,
{
    let s = sorted_set(s)?;
    let tuples = domain_tuples(f.lattice(), f.arity(), domain);
    let found = tuples.iter().find_map(|x| {
        s.iter()
            .find(|&&c| violated(x, c))
            .map(|&c| Witness::AtConstant { x: x.clone(), c })
    });
    Ok(PropertyReport::from_search(
        property,
        found,
        describe(domain.name(), tuples.len(), &set_desc(&s)),
    ))
}

/// `f(x ∧ c) = f(x) ∧ c` for `x` in the domain and `c ∈ S`.
pub fn check_min_homogeneous(f: &FunctionTable, s: &[Elem], domain: Domain) -> Result<PropertyReport> {
    let l = f.lattice();
    sweep_tuple_const(f, s, domain, Property::MinHomogeneous(domain), |x, c| {
        min_hom_fails(f, l, x, c)
    })
}

/// `f(x ∨ c) = f(x) ∨ c` for `x` in the domain and `c ∈ S`.
pub fn check_max_homogeneous(f: &FunctionTable, s: &[Elem], domain: Domain) -> Result<PropertyReport> {
    let l = f.lattice();
    sweep_tuple_const(f, s, domain, Property::MaxHomogeneous(domain), |x, c| {
        max_hom_fails(f, l, x, c)
    })
}

/// `f(x) = f(x ∨ c) ∧ f([x]^c)`.
pub fn check_horizontally_minitive(
    f: &FunctionTable,
    s: &[Elem],
    domain: Domain,
) -> Result<PropertyReport> {
    let l = f.lattice();
    sweep_tuple_const(f, s, domain, Property::HorizontallyMinitive(domain), |x, c| {
        hor_min_fails(f, l, x, c)
    })
}

/// `f(x) = f(x ∧ c) ∨ f([x]_c)`.
pub fn check_horizontally_maxitive(
    f: &FunctionTable,
    s: &[Elem],
    domain: Domain,
) -> Result<PropertyReport> {
    let l = f.lattice();
    sweep_tuple_const(f, s, domain, Property::HorizontallyMaxitive(domain), |x, c| {
        hor_max_fails(f, l, x, c)
    })
}

fn min_hom_fails(f: &FunctionTable, l: &Lattice, x: &[Elem], c: Elem) -> bool {
    f.eval(&l.tuple_meet_const(x, c)) != l.meet(f.eval(x), c)
}

fn max_hom_fails(f: &FunctionTable, l: &Lattice, x: &[Elem], c: Elem) -> bool {
    f.eval(&l.tuple_join_const(x, c)) != l.join(f.eval(x), c)
}

fn hor_min_fails(f: &FunctionTable, l: &Lattice, x: &[Elem], c: Elem) -> bool {
    let rhs = l.meet(
        f.eval(&l.tuple_join_const(x, c)),
        f.eval(&cut_above(l, x, c)),
    );
    f.eval(x) != rhs
}

fn hor_max_fails(f: &FunctionTable, l: &Lattice, x: &[Elem], c: Elem) -> bool {
    let rhs = l.join(
        f.eval(&l.tuple_meet_const(x, c)),
        f.eval(&cut_below(l, x, c)),
    );
    f.eval(x) != rhs
}

fn med_dec_fails(f: &FunctionTable, l: &Lattice, x: &Tuple, k: usize) -> bool {
    let lo = f.eval(&x.with(k, l.bottom()));
    let hi = f.eval(&x.with(k, l.top()));
    f.eval(x) != l.med3(lo, x[k], hi)
}

/// `f(x) = med(f(x_k^0), x_k, f(x_k^1))` for every `k`.
pub fn check_median_decomposable(f: &FunctionTable, domain: MedianDomain) -> PropertyReport {
    let l = f.lattice();
    let n = f.arity();
    let zero_two = VectorClass::new(0, 2.min(n));
    let one_three = VectorClass::new(1.min(n), 3.min(n));
    let tuples: Vec<Tuple> = l
        .tuples(n)
        .filter(|x| match domain {
            MedianDomain::Full => true,
            MedianDomain::Weak => zero_two.contains(l, x) || one_three.contains(l, x),
            MedianDomain::ZeroTwoOnly => zero_two.contains(l, x),
        })
        .collect();
    let found = tuples.iter().find_map(|x| {
        (0..n)
            .find(|&k| med_dec_fails(f, l, x, k))
            .map(|k| Witness::AtCoordinate { x: x.clone(), k })
    });
    PropertyReport::from_search(
        Property::MedianDecomposable(domain),
        found,
        describe(domain.name(), tuples.len(), "coordinates"),
    )
}

fn strong_idem_fails(f: &FunctionTable, x: &Tuple, k: usize) -> bool {
    let fx = f.eval(x);
    f.eval(&x.with(k, fx)) != fx
}

/// `f(x_k^{f(x)}) = f(x)` for every `x` and `k`.
pub fn check_strongly_idempotent(f: &FunctionTable) -> PropertyReport {
    let n = f.arity();
    let found = f.lattice().tuples(n).find_map(|x| {
        (0..n)
            .find(|&k| strong_idem_fails(f, &x, k))
            .map(|k| Witness::AtCoordinate { x, k })
    });
    PropertyReport::from_search(
        Property::StronglyIdempotent,
        found,
        describe("full", f.len(), "coordinates"),
    )
}

/// First element of the convex hull of `values` that is not itself a value.
fn first_gap(l: &Lattice, values: &[Elem]) -> Option<Elem> {
    let mut seen = vec![false; l.size()];
    for v in values {
        seen[v.index()] = true;
    }
    let present: Vec<Elem> = l.elements().filter(|e| seen[e.index()]).collect();
    l.convex_hull(&present)
        .ok()?
        .elements(l)
        .into_iter()
        .find(|e| !seen[e.index()])
}

pub fn check_convex_range(f: &FunctionTable) -> PropertyReport {
    let found = first_gap(f.lattice(), f.values()).map(|missing| Witness::RangeGap { missing });
    PropertyReport::from_search(Property::ConvexRange, found, describe("full", f.len(), ""))
}

fn section_values(f: &FunctionTable, anchor: &Tuple, k: usize) -> Vec<Elem> {
    f.lattice()
        .elements()
        .map(|v| f.eval(&anchor.with(k, v)))
        .collect()
}

/// Every unary section `v ↦ f(a_k^v)` has a convex range; for `n = 1` the
/// plain range must be convex.
pub fn check_componentwise_convex_range(f: &FunctionTable) -> PropertyReport {
    let l = f.lattice();
    let n = f.arity();
    let property = Property::ComponentwiseConvexRange;
    if n == 1 {
        let found = first_gap(l, f.values()).map(|missing| Witness::RangeGap { missing });
        return PropertyReport::from_search(property, found, describe("unary range", f.len(), ""));
    }
    let mut sections = 0;
    let mut found = None;
    'outer: for x in l.tuples(n) {
        for k in 0..n {
            if x[k] != l.bottom() {
                continue;
            }
            sections += 1;
            if let Some(missing) = first_gap(l, &section_values(f, &x, k)) {
                found = Some(Witness::SectionGap {
                    k,
                    anchor: x,
                    missing,
                });
                break 'outer;
            }
        }
    }
    PropertyReport::from_search(property, found, format!("sections: {sections} checked"))
}

/// Comonotonicity through the pairwise criterion: no two coordinates are
/// ordered strictly one way in `x` and strictly the other way in `y`.
pub fn are_comonotonic(l: &Lattice, x: &[Elem], y: &[Elem]) -> Result<bool> {
    require_chain(l, "comonotonicity")?;
    if x.len() != y.len() {
        return Err(Error::ArityMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    Ok(comonotonic_unchecked(l, x, y))
}

fn comonotonic_unchecked(l: &Lattice, x: &[Elem], y: &[Elem]) -> bool {
    let n = x.len();
    for i in 0..n {
        for j in 0..n {
            if l.lt(x[i], x[j]) && l.lt(y[j], y[i]) {
                return false;
            }
        }
    }
    true
}

fn sweep_comonotonic<F>(f: &FunctionTable, property: Property, mut violated: F) -> Result<PropertyReport>
where
    F: FnMut(&Tuple, &Tuple) -> bool,
{
    let l = f.lattice();
    require_chain(l, "comonotonic sweeps")?;
    let tuples: Vec<Tuple> = l.tuples(f.arity()).collect();
    let mut pairs = 0usize;
    let mut found = None;
    'outer: for (i, x) in tuples.iter().enumerate() {
        for y in &tuples[i..] {
            if !comonotonic_unchecked(l, x, y) {
                continue;
            }
            pairs += 1;
            if violated(x, y) {
                found = Some(Witness::Pair {
                    x: x.clone(),
                    y: y.clone(),
                });
                break 'outer;
            }
        }
    }
    Ok(PropertyReport::from_search(
        property,
        found,
        format!("comonotonic pairs: {pairs} checked"),
    ))
}

/// `f(x ∧ y) = f(x) ∧ f(y)` for comonotonic `x`, `y`.
pub fn check_comonotonic_minitive(f: &FunctionTable) -> Result<PropertyReport> {
    let l = f.lattice();
    sweep_comonotonic(f, Property::ComonotonicMinitive, |x, y| {
        f.eval(&l.tuple_meet(x, y)) != l.meet(f.eval(x), f.eval(y))
    })
}

/// `f(x ∨ y) = f(x) ∨ f(y)` for comonotonic `x`, `y`.
pub fn check_comonotonic_maxitive(f: &FunctionTable) -> Result<PropertyReport> {
    let l = f.lattice();
    sweep_comonotonic(f, Property::ComonotonicMaxitive, |x, y| {
        f.eval(&l.tuple_join(x, y)) != l.join(f.eval(x), f.eval(y))
    })
}

/// `f(x) ∈ {x_1, ..., x_n}` over `L^n` (`Full`) or `{0,1}^n` (`Boolean`).
pub fn check_conservative(f: &FunctionTable, domain: Domain) -> Result<PropertyReport> {
    if domain == Domain::Weak {
        return Err(Error::Malformed {
            what: "conservativeness domain",
            detail: "only full and boolean sweeps are defined".into(),
        });
    }
    let tuples = domain_tuples(f.lattice(), f.arity(), domain);
    let found = tuples
        .iter()
        .find(|x| !x.contains(&f.eval(x)))
        .map(|x| Witness::Point { x: x.clone() });
    Ok(PropertyReport::from_search(
        Property::Conservative(domain),
        found,
        describe(domain.name(), tuples.len(), ""),
    ))
}

const MAX_SUBSET_CARRIER: usize = 16;

fn subsets(l: &Lattice) -> Result<impl Iterator<Item = Vec<Elem>> + '_> {
    if l.size() > MAX_SUBSET_CARRIER {
        return Err(Error::Malformed {
            what: "subset sweep",
            detail: format!("carrier of size {} is too large", l.size()),
        });
    }
    Ok((1usize..1 << l.size()).map(move |mask| {
        l.elements()
            .filter(|e| mask >> e.index() & 1 == 1)
            .collect()
    }))
}

/// `f(S^n) ⊆ S` for every nonempty `S ⊆ L`.
pub fn check_conservative_subsets(f: &FunctionTable) -> Result<PropertyReport> {
    let l = f.lattice();
    let mut count = 0usize;
    let mut found = None;
    'outer: for s in subsets(l)? {
        count += 1;
        for x in l.tuples(f.arity()) {
            if x.iter().all(|xi| s.contains(xi)) && !s.contains(&f.eval(&x)) {
                found = Some(Witness::SubsetPoint { subset: s, x });
                break 'outer;
            }
        }
    }
    Ok(PropertyReport::from_search(
        Property::ConservativeSubsets,
        found,
        format!("subsets: {count} x {} tuples", f.len()),
    ))
}

/// For every nonempty `S` and `x`: `f(x) ∈ S` implies some `x_i ∈ S`.
pub fn check_conservative_preimage(f: &FunctionTable) -> Result<PropertyReport> {
    let l = f.lattice();
    let mut count = 0usize;
    let mut found = None;
    'outer: for s in subsets(l)? {
        count += 1;
        for x in l.tuples(f.arity()) {
            if s.contains(&f.eval(&x)) && !x.iter().any(|xi| s.contains(xi)) {
                found = Some(Witness::SubsetPoint { subset: s, x });
                break 'outer;
            }
        }
    }
    Ok(PropertyReport::from_search(
        Property::ConservativePreimage,
        found,
        format!("subsets: {count} x {} tuples", f.len()),
    ))
}

/// Replays a witness against the raw definition of `property`.
pub fn violates(f: &FunctionTable, property: Property, w: &Witness) -> bool {
    let l = f.lattice();
    let n = f.arity();
    let valid = |x: &Tuple| x.arity() == n && x.iter().all(|&e| l.contains(e));
    match (property, w) {
        (Property::Nondecreasing, Witness::Step { lower, upper }) => {
            valid(lower)
                && valid(upper)
                && l.tuple_leq(lower, upper)
                && !l.leq(f.eval(lower), f.eval(upper))
        }
        (Property::Idempotent, Witness::Constant { c }) => f.at_constant(*c) != *c,
        (Property::MinHomogeneous(_), Witness::AtConstant { x, c }) => {
            valid(x) && min_hom_fails(f, l, x, *c)
        }
        (Property::MaxHomogeneous(_), Witness::AtConstant { x, c }) => {
            valid(x) && max_hom_fails(f, l, x, *c)
        }
        (Property::HorizontallyMinitive(_), Witness::AtConstant { x, c }) => {
            valid(x) && hor_min_fails(f, l, x, *c)
        }
        (Property::HorizontallyMaxitive(_), Witness::AtConstant { x, c }) => {
            valid(x) && hor_max_fails(f, l, x, *c)
        }
        (Property::MedianDecomposable(_), Witness::AtCoordinate { x, k }) => {
            valid(x) && *k < n && med_dec_fails(f, l, x, *k)
        }
        (Property::StronglyIdempotent, Witness::AtCoordinate { x, k }) => {
            valid(x) && *k < n && strong_idem_fails(f, x, *k)
        }
        (Property::ConvexRange, Witness::RangeGap { missing })
        | (Property::ComponentwiseConvexRange, Witness::RangeGap { missing }) => {
            let range = f.range();
            !range.contains(missing)
                && l.convex_hull(&range)
                    .map(|h| h.elements(l).contains(missing))
                    .unwrap_or(false)
        }
        (Property::ComponentwiseConvexRange, Witness::SectionGap { k, anchor, missing }) => {
            if !valid(anchor) || *k >= n {
                return false;
            }
            let vals = section_values(f, anchor, *k);
            !vals.contains(missing)
                && l.convex_hull(&vals)
                    .map(|h| h.elements(l).contains(missing))
                    .unwrap_or(false)
        }
        (Property::ComonotonicMinitive, Witness::Pair { x, y }) => {
            valid(x)
                && valid(y)
                && l.is_chain()
                && comonotonic_unchecked(l, x, y)
                && f.eval(&l.tuple_meet(x, y)) != l.meet(f.eval(x), f.eval(y))
        }
        (Property::ComonotonicMaxitive, Witness::Pair { x, y }) => {
            valid(x)
                && valid(y)
                && l.is_chain()
                && comonotonic_unchecked(l, x, y)
                && f.eval(&l.tuple_join(x, y)) != l.join(f.eval(x), f.eval(y))
        }
        (Property::Conservative(_), Witness::Point { x }) => valid(x) && !x.contains(&f.eval(x)),
        (Property::ConservativeSubsets, Witness::SubsetPoint { subset, x }) => {
            valid(x) && x.iter().all(|xi| subset.contains(xi)) && !subset.contains(&f.eval(x))
        }
        (Property::ConservativePreimage, Witness::SubsetPoint { subset, x }) => {
            valid(x) && subset.contains(&f.eval(x)) && !x.iter().any(|xi| subset.contains(xi))
        }
        (Property::Polynomial, Witness::Point { x }) => valid(x) && extension_differs(f, x),
        (Property::Sugeno, Witness::Point { x }) => {
            valid(x) && (extension_differs(f, x) || constant_not_fixed(f, x))
        }
        (Property::Term, Witness::Point { x }) => {
            valid(x)
                && (extension_differs(f, x)
                    || constant_not_fixed(f, x)
                    || (x.iter().all(|&e| e == l.bottom() || e == l.top())
                        && !x.contains(&f.eval(x))))
        }
        _ => false,
    }
}

fn extension_differs(f: &FunctionTable, x: &Tuple) -> bool {
    let alpha = alpha_from_oracle(f);
    eval_dnf(f.lattice(), &alpha, x).map(|v| v != f.eval(x)).unwrap_or(false)
}

fn constant_not_fixed(f: &FunctionTable, x: &Tuple) -> bool {
    x.iter().all(|&e| e == x[0]) && f.eval(x) != x[0]
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::poly::{CoefMap, PolyFunc};

    fn e(i: usize) -> Elem {
        Elem::from_index(i)
    }

    fn chain(m: usize) -> Arc<Lattice> {
        Arc::new(Lattice::chain(m).unwrap())
    }

    fn unary(m: usize, vals: &[usize]) -> FunctionTable {
        FunctionTable::new(chain(m), 1, vals.iter().map(|&v| e(v)).collect()).unwrap()
    }

    fn all(l: &Lattice) -> Vec<Elem> {
        l.elements().collect()
    }

    fn binary_polys(m: usize) -> Vec<FunctionTable> {
        let l = chain(m);
        let mut out = Vec::new();
        for b in 0..m {
            for a1 in b..m {
                for a2 in b..m {
                    for t in a1.max(a2)..m {
                        let alpha = CoefMap::new(2, vec![e(b), e(a1), e(a2), e(t)]).unwrap();
                        out.push(PolyFunc::new(l.clone(), alpha).unwrap().to_table().unwrap());
                    }
                }
            }
        }
        out
    }

    #[test]
    fn range_hull_examples() {
        let l = chain(3);
        let constant = FunctionTable::from_fn(l.clone(), 2, |_| e(1)).unwrap();
        assert_eq!(range_hull(&constant), Interval { lo: e(1), hi: e(1) });
        let proj = FunctionTable::from_fn(l.clone(), 2, |x| x[0]).unwrap();
        assert_eq!(range_hull(&proj), Interval { lo: e(0), hi: e(2) });
        let clamped = FunctionTable::from_fn(l.clone(), 2, |x| l.med3(e(1), x[0], e(2))).unwrap();
        assert_eq!(range_hull(&clamped), Interval { lo: e(1), hi: e(2) });
    }

    #[test]
    fn class_counts() {
        let l = Lattice::chain(3).unwrap();
        assert_eq!(enumerate_class(&l, 3, VectorClass::new(0, 2)).unwrap().len(), 21);
        assert_eq!(enumerate_class(&l, 3, VectorClass::new(1, 3)).unwrap().len(), 26);
        for m in 1..=4 {
            let c = Lattice::chain(m).unwrap();
            assert_eq!(enumerate_class(&c, 2, VectorClass::new(0, 2)).unwrap().len(), m * m);
        }
        assert!(enumerate_class(&l, 2, VectorClass::new(2, 1)).is_err());
        assert!(enumerate_class(&l, 2, VectorClass::new(0, 3)).is_err());
    }

    #[test]
    fn cuts_and_clamp() {
        let l = chain(3);
        let x = [e(1), e(2), e(0)];
        assert_eq!(cut_above(&l, &x, e(1)).coords(), &[e(2), e(2), e(0)]);
        assert_eq!(cut_above(&l, &x, l.bottom()).coords(), &[e(2); 3]);
        let no_top = [e(1), e(0), e(1)];
        assert_eq!(cut_above(&l, &no_top, l.top()).coords(), &no_top);
        assert_eq!(cut_below(&l, &x, e(1)).coords(), &[e(0), e(2), e(0)]);
        assert_eq!(cut_below(&l, &x, l.top()).coords(), &[e(0); 3]);
        let no_bottom = [e(1), e(2), e(1)];
        assert_eq!(cut_below(&l, &no_bottom, l.bottom()).coords(), &no_bottom);

        let full = FunctionTable::from_fn(l.clone(), 2, |x| l.join(x[0], x[1])).unwrap();
        assert_eq!(clamp(&full, &[e(0), e(2)]).coords(), &[e(0), e(2)]);
        let narrow = FunctionTable::from_fn(l.clone(), 2, |x| l.med3(e(1), x[0], e(2))).unwrap();
        let once = clamp(&narrow, &[e(0), e(2)]);
        assert_eq!(once.coords(), &[e(1), e(2)]);
        assert_eq!(clamp(&narrow, &once), once);
    }

    #[test]
    fn nondecreasing_examples() {
        for f in binary_polys(3) {
            assert!(check_nondecreasing(&f).holds);
        }
        let down = unary(2, &[1, 0]);
        let r = check_nondecreasing(&down);
        assert_eq!(
            r.witness,
            Some(Witness::Step {
                lower: Tuple::new(vec![e(0)]),
                upper: Tuple::new(vec![e(1)])
            })
        );
        assert!(r.replay(&down));
    }

    #[test]
    fn idempotency_examples() {
        let u = unary(3, &[0, 0, 2]);
        let r = check_idempotent(&u, &[e(1)]).unwrap();
        assert_eq!(r.witness, Some(Witness::Constant { c: e(1) }));
        assert!(check_idempotent(&u, &[]).is_err());
        for f in binary_polys(3) {
            let hull = range_hull_elements(&f);
            assert!(check_idempotent(&f, &hull).unwrap().holds);
        }
    }

    #[test]
    fn homogeneity_and_horizontal_hold_on_polynomials() {
        for f in binary_polys(3) {
            let s = range_hull_elements(&f);
            for d in [Domain::Full, Domain::Weak] {
                assert!(check_min_homogeneous(&f, &s, d).unwrap().holds);
                assert!(check_max_homogeneous(&f, &s, d).unwrap().holds);
                assert!(check_horizontally_minitive(&f, &s, d).unwrap().holds);
                assert!(check_horizontally_maxitive(&f, &s, d).unwrap().holds);
            }
        }
    }

    #[test]
    fn horizontal_unary_not_polynomial() {
        let u = unary(4, &[0, 0, 1, 3]);
        let l = u.lattice().clone();
        assert!(check_horizontally_minitive(&u, &all(&l), Domain::Full).unwrap().holds);
        assert!(check_horizontally_maxitive(&u, &all(&l), Domain::Full).unwrap().holds);
        assert!(!check_median_decomposable(&u, MedianDomain::Full).holds);
    }

    #[test]
    fn constants_satisfy_everything_horizontal() {
        let l = chain(3);
        for c in l.elements() {
            let f = FunctionTable::from_fn(l.clone(), 2, |_| c).unwrap();
            for s in [vec![e(0)], vec![e(1), e(2)], all(&l)] {
                assert!(check_horizontally_minitive(&f, &s, Domain::Full).unwrap().holds);
                assert!(check_horizontally_maxitive(&f, &s, Domain::Full).unwrap().holds);
            }
        }
    }

    #[test]
    fn median_decomposability() {
        for f in binary_polys(3) {
            assert!(check_median_decomposable(&f, MedianDomain::Full).holds);
        }
        // unary: decomposable exactly when f is the clamp v ↦ med(f(0), v, f(1))
        let l = Lattice::chain(3).unwrap();
        for vals in l.tuples(3) {
            let f = FunctionTable::new(chain(3), 1, vals.coords().to_vec()).unwrap();
            let is_clamp = l
                .elements()
                .all(|v| f.eval(&[v]) == l.med3(f.at_bottom(), v, f.at_top()));
            assert_eq!(check_median_decomposable(&f, MedianDomain::Full).holds, is_clamp);
        }
    }

    #[test]
    fn strong_idempotency_examples() {
        assert!(check_strongly_idempotent(&unary(3, &[0, 0, 2])).holds);
        let v = unary(3, &[0, 0, 1]);
        let r = check_strongly_idempotent(&v);
        assert_eq!(
            r.witness,
            Some(Witness::AtCoordinate {
                x: Tuple::new(vec![e(2)]),
                k: 0
            })
        );
        assert!(r.replay(&v));
        let l = chain(3);
        let corner = FunctionTable::from_fn(l.clone(), 2, |x| {
            if x[0] == l.top() && x[1] == l.top() { l.top() } else { l.bottom() }
        })
        .unwrap();
        assert!(check_strongly_idempotent(&corner).holds);
        let r = check_componentwise_convex_range(&corner);
        assert!(!r.holds && r.replay(&corner));
    }

    #[test]
    fn range_convexity() {
        let u = unary(3, &[0, 0, 2]);
        let r = check_convex_range(&u);
        assert_eq!(r.witness, Some(Witness::RangeGap { missing: e(1) }));
        assert!(!check_componentwise_convex_range(&u).holds);
        for f in binary_polys(3) {
            assert!(check_convex_range(&f).holds);
            assert!(check_componentwise_convex_range(&f).holds);
        }
        let l = chain(3);
        let corner = FunctionTable::from_fn(l.clone(), 2, |x| {
            if x[0] == l.top() && x[1] == l.top() { l.top() } else { l.bottom() }
        })
        .unwrap();
        // the section through (2,·) takes values 0,0,2
        let r = check_componentwise_convex_range(&corner);
        assert_eq!(
            r.witness,
            Some(Witness::SectionGap {
                k: 0,
                anchor: Tuple::new(vec![e(0), e(2)]),
                missing: e(1)
            })
        );
    }

    #[test]
    fn comonotonic_pairs() {
        let l = Lattice::chain(3).unwrap();
        let x = [e(0), e(2), e(1)];
        assert!(are_comonotonic(&l, &x, &[e(1); 3]).unwrap());
        assert!(!are_comonotonic(&l, &x, &[e(2), e(0), e(0)]).unwrap());
        for c in l.elements() {
            for x in l.tuples(3) {
                let up = l.tuple_join_const(&x, c);
                let cut = cut_above(&l, &x, c);
                assert!(are_comonotonic(&l, &up, &cut).unwrap());
            }
        }
        assert!(are_comonotonic(&Lattice::diamond(), &[e(1)], &[e(2)]).is_err());
    }

    #[test]
    fn comonotonic_properties() {
        for f in binary_polys(3) {
            assert!(check_comonotonic_minitive(&f).unwrap().holds);
            assert!(check_comonotonic_maxitive(&f).unwrap().holds);
        }
        let u = unary(4, &[0, 0, 1, 3]);
        assert!(check_comonotonic_minitive(&u).unwrap().holds);
        assert!(check_comonotonic_maxitive(&u).unwrap().holds);

        let dented = unary(3, &[0, 2, 1]);
        let r = check_comonotonic_minitive(&dented).unwrap();
        assert!(!r.holds);
        assert!(r.replay(&dented));
    }

    #[test]
    fn conservativeness() {
        let l = chain(3);
        let med = FunctionTable::from_fn(l.clone(), 3, |x| l.med(x).unwrap()).unwrap();
        assert!(check_conservative(&med, Domain::Full).unwrap().holds);
        let constant = FunctionTable::from_fn(l.clone(), 2, |_| e(1)).unwrap();
        let r = check_conservative(&constant, Domain::Full).unwrap();
        assert!(!r.holds && r.replay(&constant));
        assert!(check_conservative(&constant, Domain::Weak).is_err());

        let mix = FunctionTable::from_fn(l.clone(), 2, |x| {
            if x[0] >= e(1) && x[1] >= e(1) { l.join(x[0], x[1]) } else { l.meet(x[0], x[1]) }
        })
        .unwrap();
        assert!(check_conservative(&mix, Domain::Full).unwrap().holds);
        assert!(check_nondecreasing(&mix).holds);
        assert!(check_conservative_subsets(&mix).unwrap().holds);
        assert!(check_conservative_preimage(&mix).unwrap().holds);

        let r = check_conservative_subsets(&constant).unwrap();
        assert!(!r.holds && r.replay(&constant));
        let r = check_conservative_preimage(&constant).unwrap();
        assert!(!r.holds && r.replay(&constant));
    }

    #[test]
    fn witnesses_replay_on_corrupted_polynomials() {
        let polys = binary_polys(3);
        let l = polys[0].lattice().clone();
        let s_all = all(&l);
        for (i, f) in polys.iter().enumerate() {
            // bump one entry to get a nearby non-polynomial
            let x = f.tuple_at(i % f.len());
            let bumped = e((f.eval(&x).index() + 1) % 3);
            let g = f.with_value(&x, bumped);
            let s = range_hull_elements(&g);
            let mut reports = vec![
                check_nondecreasing(&g),
                check_median_decomposable(&g, MedianDomain::Full),
                check_strongly_idempotent(&g),
                check_convex_range(&g),
                check_componentwise_convex_range(&g),
                check_idempotent(&g, &s).unwrap(),
                check_comonotonic_minitive(&g).unwrap(),
                check_comonotonic_maxitive(&g).unwrap(),
                check_conservative(&g, Domain::Full).unwrap(),
            ];
            for d in [Domain::Full, Domain::Weak, Domain::Boolean] {
                reports.push(check_min_homogeneous(&g, &s_all, d).unwrap());
                reports.push(check_max_homogeneous(&g, &s_all, d).unwrap());
                reports.push(check_horizontally_minitive(&g, &s_all, d).unwrap());
                reports.push(check_horizontally_maxitive(&g, &s_all, d).unwrap());
            }
            assert!(reports.iter().any(|r| !r.holds));
            for r in reports {
                assert!(r.replay(&g), "{} on {:?}", r.property, g.values());
            }
        }
    }

    #[test]
    fn homogeneity_domains_are_nested() {
        let l = chain(3);
        let s = all(&l);
        for vals in Lattice::chain(3).unwrap().tuples(3).step_by(2) {
            let f = FunctionTable::new(l.clone(), 1, vals.into_inner()).unwrap();
            let full = check_min_homogeneous(&f, &s, Domain::Full).unwrap().holds;
            let weak = check_min_homogeneous(&f, &s, Domain::Weak).unwrap().holds;
            let boolean = check_min_homogeneous(&f, &s, Domain::Boolean).unwrap().holds;
            assert!(!full || weak);
            assert!(!weak || boolean);
        }
    }
}
