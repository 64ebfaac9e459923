use std::sync::Arc;

use crate::decide::{run_check, SetChoice};
use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};
use crate::props::{Domain, MedianDomain, Property, PropertyReport};
use crate::table::FunctionTable;

/// One expected verdict of a registered function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub property: Property,
    pub set: SetChoice,
    pub expected: bool,
}

impl Expectation {
    fn new(property: Property, set: SetChoice, expected: bool) -> Self {
        Expectation {
            property,
            set,
            expected,
        }
    }

    fn plain(property: Property, expected: bool) -> Self {
        Self::new(property, SetChoice::Range, expected)
    }

    pub fn label(&self) -> String {
        let uses_set = matches!(
            self.property,
            Property::Idempotent
                | Property::MinHomogeneous(_)
                | Property::MaxHomogeneous(_)
                | Property::HorizontallyMinitive(_)
                | Property::HorizontallyMaxitive(_)
        );
        if uses_set {
            format!("{}{{S={}}}", self.property.name(), self.set.name())
        } else {
            self.property.name()
        }
    }
}

#[derive(Clone, Debug)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub table: FunctionTable,
    pub profile: Vec<Expectation>,
}

#[derive(Clone, Debug)]
pub struct ReplayLine {
    pub expectation: Expectation,
    pub report: PropertyReport,
}

impl ReplayLine {
    /// The verdict matches and any witness reproduces.
    pub fn matches(&self, f: &FunctionTable) -> bool {
        self.report.holds == self.expectation.expected && self.report.replay(f)
    }
}

fn e(i: usize) -> Elem {
    Elem::from_index(i)
}

fn chain(m: usize) -> Arc<Lattice> {
    Arc::new(Lattice::chain(m).expect("small chain"))
}

fn three_chain_named() -> Arc<Lattice> {
    let names = ["0", "c", "1"].map(String::from).to_vec();
    let meet = (0..3).map(|a| (0..3).map(|b| a.min(b)).collect()).collect();
    let join = (0..3).map(|a| (0..3).map(|b| a.max(b)).collect()).collect();
    Arc::new(Lattice::from_tables(names, meet, join).expect("chain tables"))
}

fn unary(l: Arc<Lattice>, vals: &[usize]) -> FunctionTable {
    FunctionTable::new(l, 1, vals.iter().map(|&v| e(v)).collect()).expect("unary shape")
}

fn diamond_function() -> FunctionTable {
    let l = Arc::new(Lattice::diamond());
    let (zero, a, b, one) = (e(0), e(1), e(2), e(3));
    FunctionTable::from_fn(l, 2, |x| {
        if x[0] == one || x[1] == one || (x[0] == b && x[1] == b) {
            one
        } else if x[0] == a || x[1] == a {
            a
        } else {
            zero
        }
    })
    .expect("binary shape")
}

fn ternary_function() -> FunctionTable {
    let l = three_chain_named();
    let (zero, c, one) = (e(0), e(1), e(2));
    let ll = l.clone();
    FunctionTable::from_fn(l, 3, move |x| {
        let med = ll.med(x).expect("odd");
        let min = ll.meet_all(x.iter().copied());
        if med == one {
            one
        } else if med == c && min == c {
            c
        } else {
            zero
        }
    })
    .expect("ternary shape")
}

fn corner_function() -> FunctionTable {
    let l = chain(3);
    let top = l.top();
    FunctionTable::from_fn(l.clone(), 2, |x| {
        if x[0] == top && x[1] == top {
            top
        } else {
            l.bottom()
        }
    })
    .expect("binary shape")
}

fn threshold_mix() -> FunctionTable {
    let l = chain(3);
    FunctionTable::from_fn(l.clone(), 2, |x| {
        if x[0] >= e(1) && x[1] >= e(1) {
            l.join(x[0], x[1])
        } else {
            l.meet(x[0], x[1])
        }
    })
    .expect("binary shape")
}

/// Every registered counterexample with its verified property profile.
pub fn registry() -> Vec<RegistryEntry> {
    use Property::*;
    use SetChoice::{All, Range};
    let ex = Expectation::new;
    let p = Expectation::plain;
    vec![
        RegistryEntry {
            name: "diamond",
            summary: "binary function on the four-element Boolean lattice; nondecreasing, \
                      not weakly homogeneous at (b,b) with c=a, not a polynomial",
            table: diamond_function(),
            profile: vec![
                p(Nondecreasing, true),
                ex(MinHomogeneous(Domain::Weak), Range, false),
                ex(MaxHomogeneous(Domain::Weak), Range, false),
                ex(MinHomogeneous(Domain::Weak), All, false),
                p(MedianDecomposable(MedianDomain::Weak), false),
                p(Polynomial, false),
            ],
        },
        RegistryEntry {
            name: "ternary",
            summary: "ternary function on {0,c,1}; median decomposable on two-valued \
                      vectors only",
            table: ternary_function(),
            profile: vec![
                p(Nondecreasing, true),
                p(MedianDecomposable(MedianDomain::ZeroTwoOnly), true),
                p(MedianDecomposable(MedianDomain::Weak), false),
                p(Polynomial, false),
            ],
        },
        RegistryEntry {
            name: "square-unary",
            summary: "chain-3 unary [0,0,1]; nondecreasing with convex ranges but not \
                      strongly idempotent",
            table: unary(chain(3), &[0, 0, 1]),
            profile: vec![
                p(Nondecreasing, true),
                p(ConvexRange, true),
                p(ComponentwiseConvexRange, true),
                p(StronglyIdempotent, false),
                p(Polynomial, false),
            ],
        },
        RegistryEntry {
            name: "gap-unary",
            summary: "chain-3 unary [0,0,2]; strongly idempotent with a gap in its range",
            table: unary(chain(3), &[0, 0, 2]),
            profile: vec![
                p(Nondecreasing, true),
                p(StronglyIdempotent, true),
                p(ConvexRange, false),
                p(ComponentwiseConvexRange, false),
                p(Polynomial, false),
            ],
        },
        RegistryEntry {
            name: "two-valued-binary",
            summary: "chain-3 binary function that is top only at (2,2); strongly \
                      idempotent without componentwise convex range",
            table: corner_function(),
            profile: vec![
                p(Nondecreasing, true),
                p(StronglyIdempotent, true),
                p(ComponentwiseConvexRange, false),
                p(Polynomial, false),
            ],
        },
        RegistryEntry {
            name: "horizontal-unary",
            summary: "chain-4 unary [0,0,1,3]; comonotonic and horizontal but not \
                      range-idempotent",
            table: unary(chain(4), &[0, 0, 1, 3]),
            profile: vec![
                p(Nondecreasing, true),
                p(ComonotonicMinitive, true),
                p(ComonotonicMaxitive, true),
                ex(HorizontallyMinitive(Domain::Full), Range, true),
                ex(HorizontallyMaxitive(Domain::Full), Range, true),
                ex(Idempotent, Range, false),
                p(Polynomial, false),
            ],
        },
        RegistryEntry {
            name: "meet-d",
            summary: "chain-3 unary x∧1; L-min homogeneous and horizontally L-maxitive, \
                      not a Sugeno integral",
            table: unary(chain(3), &[0, 1, 1]),
            profile: vec![
                ex(MinHomogeneous(Domain::Full), All, true),
                ex(HorizontallyMaxitive(Domain::Full), All, true),
                p(Polynomial, true),
                p(Sugeno, false),
            ],
        },
        RegistryEntry {
            name: "join-d",
            summary: "chain-3 unary x∨1; L-max homogeneous and horizontally L-minitive, \
                      not a Sugeno integral",
            table: unary(chain(3), &[1, 1, 2]),
            profile: vec![
                ex(MaxHomogeneous(Domain::Full), All, true),
                ex(HorizontallyMinitive(Domain::Full), All, true),
                p(Polynomial, true),
                p(Sugeno, false),
            ],
        },
        RegistryEntry {
            name: "threshold-mix",
            summary: "chain-3 binary: x1∨x2 when both are at least 1, x1∧x2 otherwise; \
                      conservative but not a term function",
            table: threshold_mix(),
            profile: vec![
                p(Nondecreasing, true),
                p(Conservative(Domain::Full), true),
                p(Polynomial, false),
                p(Term, false),
            ],
        },
    ]
}

pub fn find(name: &str) -> Result<RegistryEntry> {
    registry()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Unknown {
            what: "counterexample",
            name: name.to_string(),
        })
}

/// Re-runs every expectation of `entry` through the checkers.
pub fn replay(entry: &RegistryEntry) -> Result<Vec<ReplayLine>> {
    entry
        .profile
        .iter()
        .map(|&x| {
            Ok(ReplayLine {
                expectation: x,
                report: run_check(&entry.table, x.property, x.set)?,
            })
        })
        .collect()
}
