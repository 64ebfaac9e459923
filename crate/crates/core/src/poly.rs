//! Polynomial functions in disjunctive and conjunctive normal form.
//!
//! Coefficient maps are set functions `2^[n] -> L` indexed by bitmask: bit
//! `i` of the mask is coordinate `i` (0-based), so mask `0b01` is `{1}` and
//! `0b11` is `{1,2}` in one-based notation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, Tuple};
use crate::table::{graded_tuples, FunctionTable};

/// A set function `2^[n] -> L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefMap {
    arity: usize,
    values: Vec<Elem>,
}

impl CoefMap {
    pub fn new(arity: usize, values: Vec<Elem>) -> Result<Self> {
        if arity >= usize::BITS as usize - 1 || values.len() != 1usize << arity {
            return Err(Error::Malformed {
                what: "coefficient map",
                detail: format!("arity {arity} needs {} values", 1u128 << arity.min(100)),
            });
        }
        Ok(CoefMap { arity, values })
    }

    pub fn constant(arity: usize, c: Elem) -> Self {
        CoefMap {
            arity,
            values: vec![c; 1 << arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn full_mask(&self) -> usize {
        (1 << self.arity) - 1
    }

    #[inline]
    pub fn get(&self, mask: usize) -> Elem {
        self.values[mask]
    }

    pub fn set(&mut self, mask: usize, v: Elem) {
        self.values[mask] = v;
    }

    pub fn validate(&self, lattice: &Lattice) -> Result<()> {
        match self.values.iter().find(|&&v| !lattice.contains(v)) {
            Some(bad) => Err(Error::Malformed {
                what: "coefficient map",
                detail: format!("value index {} out of range", bad.0),
            }),
            None => Ok(()),
        }
    }

    /// Pointwise order.
    pub fn leq(&self, lattice: &Lattice, other: &CoefMap) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| lattice.leq(a, b))
    }

    pub fn display(&self, lattice: &Lattice) -> String {
        let names: Vec<&str> = self.values.iter().map(|&v| lattice.name(v)).collect();
        format!("[{}]", names.join(","))
    }
}

fn check_arity(expected: usize, x: &[Elem]) -> Result<()> {
    if x.len() != expected {
        return Err(Error::ArityMismatch {
            expected,
            got: x.len(),
        });
    }
    Ok(())
}

/// `⋁_I (α(I) ∧ ⋀_{i∈I} x_i)`; the empty meet is top.
pub fn eval_dnf(lattice: &Lattice, alpha: &CoefMap, x: &[Elem]) -> Result<Elem> {
    check_arity(alpha.arity, x)?;
    Ok(dnf_unchecked(lattice, alpha, x))
}

fn dnf_unchecked(lattice: &Lattice, alpha: &CoefMap, x: &[Elem]) -> Elem {
    let size = alpha.values.len();
    let mut meets = vec![lattice.top(); size];
    let mut acc = alpha.values[0];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        meets[mask] = lattice.meet(meets[mask & (mask - 1)], x[low]);
        acc = lattice.join(acc, lattice.meet(alpha.values[mask], meets[mask]));
    }
    acc
}

/// `⋀_I (β(I) ∨ ⋁_{i∈I} x_i)`; the empty join is bottom.
pub fn eval_cnf(lattice: &Lattice, beta: &CoefMap, x: &[Elem]) -> Result<Elem> {
    check_arity(beta.arity, x)?;
    let size = beta.values.len();
    let mut joins = vec![lattice.bottom(); size];
    let mut acc = beta.values[0];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        joins[mask] = lattice.join(joins[mask & (mask - 1)], x[low]);
        acc = lattice.meet(acc, lattice.join(beta.values[mask], joins[mask]));
    }
    Ok(acc)
}

/// `α_f(I) = f(e_I)`.
pub fn alpha_from_oracle(f: &FunctionTable) -> CoefMap {
    let l = f.lattice();
    let n = f.arity();
    let values = (0..1usize << n).map(|mask| f.eval(&l.indicator(n, mask))).collect();
    CoefMap { arity: n, values }
}

/// `β_f(I) = f(e_{[n]∖I})`.
pub fn beta_from_oracle(f: &FunctionTable) -> CoefMap {
    let l = f.lattice();
    let n = f.arity();
    let full = (1usize << n) - 1;
    let values = (0..1usize << n)
        .map(|mask| f.eval(&l.indicator(n, full & !mask)))
        .collect();
    CoefMap { arity: n, values }
}

/// Proper submasks of `mask`, excluding `mask` itself.
fn proper_submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut sub = mask;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        sub = (sub.wrapping_sub(1)) & mask;
        if sub == 0 {
            done = true;
        }
        Some(sub)
    })
}

/// Lower end of the DNF interval: keeps `α(I)` only where it strictly
/// dominates the join over proper subsets, bottom elsewhere.
pub fn alpha_star(lattice: &Lattice, alpha: &CoefMap) -> Result<CoefMap> {
    if !lattice.is_chain() {
        return Err(Error::NotAChain("alpha_star"));
    }
    let values = (0..alpha.values.len())
        .map(|mask| {
            let below = lattice.join_all(proper_submasks(mask).map(|j| alpha.values[j]));
            if lattice.lt(below, alpha.values[mask]) {
                alpha.values[mask]
            } else {
                lattice.bottom()
            }
        })
        .collect();
    Ok(CoefMap {
        arity: alpha.arity,
        values,
    })
}

/// Upper end of the CNF interval, dual of [`alpha_star`].
pub fn beta_star(lattice: &Lattice, beta: &CoefMap) -> Result<CoefMap> {
    if !lattice.is_chain() {
        return Err(Error::NotAChain("beta_star"));
    }
    let values = (0..beta.values.len())
        .map(|mask| {
            let above = lattice.meet_all(proper_submasks(mask).map(|j| beta.values[j]));
            if lattice.lt(beta.values[mask], above) {
                beta.values[mask]
            } else {
                lattice.top()
            }
        })
        .collect();
    Ok(CoefMap {
        arity: beta.arity,
        values,
    })
}

/// First tuple, in graded order, where the polynomial extension of the
/// Boolean restriction of `f` disagrees with `f`. `None` means `f` is a
/// polynomial function.
pub fn extension_mismatch(f: &FunctionTable) -> Option<(Tuple, Elem)> {
    let l = f.lattice();
    let alpha = alpha_from_oracle(f);
    graded_tuples(l, f.arity()).into_iter().find_map(|x| {
        let ext = dnf_unchecked(l, &alpha, &x);
        (ext != f.eval(&x)).then_some((x, ext))
    })
}

fn require_polynomial(f: &FunctionTable) -> Result<()> {
    match extension_mismatch(f) {
        None => Ok(()),
        Some((x, ext)) => Err(Error::NotPolynomial(format!(
            "not a polynomial function: at {} the extension gives {} but the table gives {}",
            f.lattice().fmt_tuple(&x),
            f.lattice().name(ext),
            f.lattice().name(f.eval(&x)),
        ))),
    }
}

/// `(α*_f, α_f)`, the endpoints of the set of DNF coefficient maps of `f`.
pub fn dnf_interval(f: &FunctionTable) -> Result<(CoefMap, CoefMap)> {
    if !f.lattice().is_chain() {
        return Err(Error::NotAChain("dnf_interval"));
    }
    require_polynomial(f)?;
    let alpha = alpha_from_oracle(f);
    let star = alpha_star(f.lattice(), &alpha)?;
    Ok((star, alpha))
}

/// `(β_f, β*_f)`, the endpoints of the set of CNF coefficient maps of `f`.
pub fn cnf_interval(f: &FunctionTable) -> Result<(CoefMap, CoefMap)> {
    if !f.lattice().is_chain() {
        return Err(Error::NotAChain("cnf_interval"));
    }
    require_polynomial(f)?;
    let beta = beta_from_oracle(f);
    let star = beta_star(f.lattice(), &beta)?;
    Ok((beta, star))
}

/// True when the DNF interval is a single point.
pub fn is_unique_dnf(f: &FunctionTable) -> Result<bool> {
    let (lo, hi) = dnf_interval(f)?;
    Ok(lo == hi)
}

/// True when the CNF interval is a single point.
pub fn is_unique_cnf(f: &FunctionTable) -> Result<bool> {
    let (lo, hi) = cnf_interval(f)?;
    Ok(lo == hi)
}

/// A polynomial function given by its DNF coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFunc {
    lattice: Arc<Lattice>,
    alpha: CoefMap,
}

impl PolyFunc {
    pub fn new(lattice: Arc<Lattice>, alpha: CoefMap) -> Result<Self> {
        alpha.validate(&lattice)?;
        Ok(PolyFunc { lattice, alpha })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn arity(&self) -> usize {
        self.alpha.arity
    }

    pub fn alpha(&self) -> &CoefMap {
        &self.alpha
    }

    pub fn eval(&self, x: &[Elem]) -> Result<Elem> {
        eval_dnf(&self.lattice, &self.alpha, x)
    }

    pub fn to_table(&self) -> Result<FunctionTable> {
        let l = self.lattice.clone();
        FunctionTable::from_fn(l, self.alpha.arity, |x| {
            dnf_unchecked(&self.lattice, &self.alpha, x)
        })
    }
}

/// Extends a map on `{0,1}^n` (indexed by the mask of its top coordinates)
/// to the unique polynomial function agreeing with it.
pub fn extend_boolean(lattice: Arc<Lattice>, g: &CoefMap) -> Result<PolyFunc> {
    g.validate(&lattice)?;
    let n = g.arity;
    for mask in 0..1usize << n {
        for i in 0..n {
            let up = mask | 1 << i;
            if up != mask && !lattice.leq(g.get(mask), g.get(up)) {
                return Err(Error::NotMonotone {
                    lower: lattice.indicator(n, mask).indices(),
                    upper: lattice.indicator(n, up).indices(),
                });
            }
        }
    }
    PolyFunc::new(lattice, g.clone())
}

/// The standard simplex containing `x`: a permutation sorting `x`
/// ascendingly, with the associated upper and lower coordinate sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexDecomp {
    /// 0-based coordinates with `x[sigma[0]] <= ... <= x[sigma[n-1]]`.
    pub sigma: Vec<usize>,
    /// `up_sets[i]` is the mask of `{sigma[i], ..., sigma[n-1]}`; the last
    /// entry (`i = n`) is empty.
    pub up_sets: Vec<usize>,
    /// `down_sets[i]` is the mask of `{sigma[0], ..., sigma[i-1]}`; the first
    /// entry is empty.
    pub down_sets: Vec<usize>,
}

/// Stable sort of the coordinates: ties keep ascending index order.
pub fn decompose(lattice: &Lattice, x: &[Elem]) -> Result<SimplexDecomp> {
    if !lattice.is_chain() {
        return Err(Error::NotAChain("decompose"));
    }
    let n = x.len();
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.sort_by(|&a, &b| lattice.cmp_chain(x[a], x[b]));
    let mut up_sets = vec![0usize; n + 1];
    for i in (0..n).rev() {
        up_sets[i] = up_sets[i + 1] | 1 << sigma[i];
    }
    let mut down_sets = vec![0usize; n + 1];
    for i in 0..n {
        down_sets[i + 1] = down_sets[i] | 1 << sigma[i];
    }
    Ok(SimplexDecomp {
        sigma,
        up_sets,
        down_sets,
    })
}

/// The three simplex evaluations of a DNF coefficient map at one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplexForms {
    pub join: Elem,
    pub meet: Elem,
    pub median: Elem,
}

impl SimplexForms {
    pub fn agree(&self) -> bool {
        self.join == self.meet && self.meet == self.median
    }
}

/// Join, meet and median forms over the simplex of `x`, reading the
/// coefficient of each upper set from `alpha`.
pub fn simplex_forms(lattice: &Lattice, alpha: &CoefMap, x: &[Elem]) -> Result<SimplexForms> {
    check_arity(alpha.arity, x)?;
    let d = decompose(lattice, x)?;
    Ok(forms_from(lattice, x, &d.sigma, |i| alpha.get(d.up_sets[i - 1])))
}

/// The same three forms driven by CNF coefficients, using
/// `β(S↓(i-1)) = α(S↑(i))`.
pub fn simplex_forms_beta(lattice: &Lattice, beta: &CoefMap, x: &[Elem]) -> Result<SimplexForms> {
    check_arity(beta.arity, x)?;
    let d = decompose(lattice, x)?;
    Ok(forms_from(lattice, x, &d.sigma, |i| beta.get(d.down_sets[i - 1])))
}

/// Both coefficient readings over a caller-chosen permutation. `sigma` must
/// sort `x` ascendingly; returns `(alpha forms, beta forms)`.
pub fn simplex_forms_for(
    lattice: &Lattice,
    alpha: &CoefMap,
    beta: &CoefMap,
    x: &[Elem],
    sigma: &[usize],
) -> Result<(SimplexForms, SimplexForms)> {
    check_arity(alpha.arity, x)?;
    check_arity(beta.arity, x)?;
    if !lattice.is_chain() {
        return Err(Error::NotAChain("simplex forms"));
    }
    let n = x.len();
    let sorted = sigma.len() == n
        && sigma.windows(2).all(|w| lattice.leq(x[w[0]], x[w[1]]))
        && (0..n).all(|i| sigma.contains(&i));
    if !sorted {
        return Err(Error::Malformed {
            what: "permutation",
            detail: format!("{sigma:?} does not sort the tuple"),
        });
    }
    let mut up = vec![0usize; n + 1];
    for i in (0..n).rev() {
        up[i] = up[i + 1] | 1 << sigma[i];
    }
    let mut down = vec![0usize; n + 1];
    for i in 0..n {
        down[i + 1] = down[i] | 1 << sigma[i];
    }
    let a = forms_from(lattice, x, sigma, |i| alpha.get(up[i - 1]));
    let b = forms_from(lattice, x, sigma, |i| beta.get(down[i - 1]));
    Ok((a, b))
}

/// Every permutation whose simplex contains `x`.
pub fn simplices_containing(lattice: &Lattice, x: &[Elem]) -> Result<Vec<Vec<usize>>> {
    let d = decompose(lattice, x)?;
    // runs of equal values may be permuted freely
    let mut out = vec![Vec::new()];
    let mut i = 0;
    while i < d.sigma.len() {
        let mut j = i + 1;
        while j < d.sigma.len() && x[d.sigma[j]] == x[d.sigma[i]] {
            j += 1;
        }
        let block = &d.sigma[i..j];
        let perms = permutations(block);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p);
                    v
                })
            })
            .collect();
        i = j;
    }
    Ok(out)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// `coef(i)` is the coefficient paired with the `i`-th smallest coordinate,
/// `i` in `1..=n+1`.
fn forms_from<C>(lattice: &Lattice, x: &[Elem], sigma: &[usize], coef: C) -> SimplexForms
where
    C: Fn(usize) -> Elem,
{
    let n = x.len();
    // sorted coordinates padded with bottom before and top after
    let sorted = |i: usize| -> Elem {
        if i == 0 {
            lattice.bottom()
        } else if i > n {
            lattice.top()
        } else {
            x[sigma[i - 1]]
        }
    };
    let join = lattice.join_all((1..=n + 1).map(|i| lattice.meet(coef(i), sorted(i))));
    let meet = lattice.meet_all((1..=n + 1).map(|i| lattice.join(coef(i), sorted(i - 1))));
    let mut args: Vec<Elem> = x.to_vec();
    args.extend((1..=n + 1).map(&coef));
    let median = lattice.med(&args).expect("2n+1 arguments");
    SimplexForms { join, meet, median }
}

/// Evaluates on the standard simplex of `x`. All three forms are computed;
/// disagreement (possible only for non-isotone coefficients) is an error.
pub fn eval_simplex(lattice: &Lattice, alpha: &CoefMap, x: &[Elem]) -> Result<Elem> {
    let forms = simplex_forms(lattice, alpha, x)?;
    if !forms.agree() {
        return Err(Error::SimplexMismatch {
            join: forms.join.index(),
            meet: forms.meet.index(),
            median: forms.median.index(),
        });
    }
    Ok(forms.join)
}

/// A monotone set function with `μ(∅) = 0` and `μ([n]) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuzzyMeasure(CoefMap);

impl FuzzyMeasure {
    pub fn new(lattice: &Lattice, values: CoefMap) -> Result<Self> {
        values.validate(lattice)?;
        if values.get(0) != lattice.bottom() {
            return Err(Error::InvalidMeasure("value on the empty set is not bottom".into()));
        }
        if values.get(values.full_mask()) != lattice.top() {
            return Err(Error::InvalidMeasure("value on the full set is not top".into()));
        }
        for mask in 0..values.values.len() {
            for i in 0..values.arity {
                let up = mask | 1 << i;
                if !lattice.leq(values.get(mask), values.get(up)) {
                    return Err(Error::InvalidMeasure(format!(
                        "not monotone between masks {mask:#b} and {up:#b}"
                    )));
                }
            }
        }
        Ok(FuzzyMeasure(values))
    }

    pub fn coefficients(&self) -> &CoefMap {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.arity
    }

    pub fn get(&self, mask: usize) -> Elem {
        self.0.get(mask)
    }
}

/// The discrete Sugeno integral `⋁_I (μ(I) ∧ ⋀_{i∈I} x_i)`.
pub fn sugeno_eval(lattice: &Lattice, mu: &FuzzyMeasure, x: &[Elem]) -> Result<Elem> {
    eval_dnf(lattice, &mu.0, x)
}

/// A measure whose integral, clamped to `[f(0̄), f(1̄)]`, reproduces the
/// polynomial function `f`: `α_f` with the endpoints forced to bottom and top.
pub fn measure_from_poly(f: &FunctionTable) -> Result<FuzzyMeasure> {
    require_polynomial(f)?;
    let l = f.lattice();
    let mut mu = alpha_from_oracle(f);
    let full = mu.full_mask();
    mu.set(0, l.bottom());
    mu.set(full, l.top());
    FuzzyMeasure::new(l, mu)
}

/// `med(lo, v, hi)`.
pub fn clamp_value(lattice: &Lattice, lo: Elem, v: Elem, hi: Elem) -> Elem {
    lattice.med3(lo, v, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Elem {
        Elem::from_index(i)
    }

    fn cm(vals: &[usize]) -> CoefMap {
        let n = vals.len().trailing_zeros() as usize;
        CoefMap::new(n, vals.iter().map(|&v| e(v)).collect()).unwrap()
    }

    fn chain(m: usize) -> Arc<Lattice> {
        Arc::new(Lattice::chain(m).unwrap())
    }

    /// Every isotone map `2^[2] -> chain(m)`, i.e. every binary polynomial.
    fn isotone_binary(m: usize) -> Vec<CoefMap> {
        let mut out = Vec::new();
        for b in 0..m {
            for a1 in b..m {
                for a2 in b..m {
                    for t in a1.max(a2)..m {
                        out.push(cm(&[b, a1, a2, t]));
                    }
                }
            }
        }
        out
    }

    // Direct transcription of the DNF formula over explicit subsets; the
    // independent oracle for eval_dnf.
    fn dnf_oracle(l: &Lattice, alpha: &CoefMap, x: &[Elem]) -> Elem {
        let n = x.len();
        let mut acc = l.bottom();
        for mask in 0..1usize << n {
            let mut term = alpha.get(mask);
            for (i, &xi) in x.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    term = l.meet(term, xi);
                }
            }
            acc = l.join(acc, term);
        }
        acc
    }

    #[test]
    fn dnf_examples() {
        let l = chain(3);
        let alpha = cm(&[0, 1, 0, 2]);
        assert_eq!(eval_dnf(&l, &alpha, &[e(2), e(2)]).unwrap(), e(2));
        assert_eq!(eval_dnf(&l, &alpha, &[e(2), e(0)]).unwrap(), e(1));
        for a in isotone_binary(3) {
            assert_eq!(eval_dnf(&l, &a, &[e(0), e(0)]).unwrap(), a.get(0));
        }
        assert_eq!(
            eval_dnf(&l, &alpha, &[e(1)]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn dnf_matches_subset_oracle() {
        let l = chain(3);
        for vals in Lattice::chain(3).unwrap().tuples(4) {
            let alpha = CoefMap::new(2, vals.coords().to_vec()).unwrap();
            for x in l.tuples(2) {
                assert_eq!(dnf_unchecked(&l, &alpha, &x), dnf_oracle(&l, &alpha, &x));
            }
        }
    }

    #[test]
    fn cnf_examples() {
        let l = chain(3);
        let beta = cm(&[2, 1, 0, 0]);
        assert_eq!(eval_cnf(&l, &beta, &[e(2), e(1)]).unwrap(), e(1));
        assert_eq!(eval_cnf(&l, &beta, &[e(2), e(2)]).unwrap(), e(2));
        for a in isotone_binary(3) {
            let f = PolyFunc::new(l.clone(), a).unwrap().to_table().unwrap();
            let beta = beta_from_oracle(&f);
            assert_eq!(eval_cnf(&l, &beta, &[e(2), e(2)]).unwrap(), beta.get(0));
            for (x, v) in f.entries() {
                assert_eq!(eval_cnf(&l, &beta, &x).unwrap(), v);
            }
        }
    }

    #[test]
    fn oracle_coefficients() {
        let l = chain(3);
        let proj = FunctionTable::from_fn(l.clone(), 2, |x| x[0]).unwrap();
        assert_eq!(alpha_from_oracle(&proj), cm(&[0, 2, 0, 2]));
        let med = FunctionTable::from_fn(l.clone(), 2, |x| l.med3(x[0], e(1), x[1])).unwrap();
        // med(0,1,0) = 0 at the bottom indicator
        assert_eq!(alpha_from_oracle(&med), cm(&[0, 1, 1, 2]));
        for f in [&proj, &med] {
            let (a, b) = (alpha_from_oracle(f), beta_from_oracle(f));
            for mask in 0..4 {
                assert_eq!(b.get(mask), a.get(3 & !mask));
            }
        }
    }

    #[test]
    fn alpha_star_examples() {
        let l = chain(3);
        assert_eq!(alpha_star(&l, &cm(&[0, 1, 1, 1])).unwrap(), cm(&[0, 1, 1, 0]));
        assert_eq!(alpha_star(&l, &cm(&[2, 2, 2, 2])).unwrap(), cm(&[2, 0, 0, 0]));
        let strict = cm(&[0, 1, 1, 2]);
        let c4 = Lattice::chain(4).unwrap();
        let distinct = cm(&[1, 2, 2, 3]);
        assert_eq!(alpha_star(&c4, &distinct).unwrap(), distinct);
        assert_eq!(alpha_star(&l, &strict).unwrap(), cm(&[0, 1, 1, 2]));
        assert_eq!(
            alpha_star(&Lattice::diamond(), &cm(&[0, 1, 2, 3])),
            Err(Error::NotAChain("alpha_star"))
        );
    }

    #[test]
    fn beta_star_examples() {
        let l = chain(3);
        assert_eq!(beta_star(&l, &cm(&[2, 1, 1, 1])).unwrap(), cm(&[2, 1, 1, 2]));
        assert_eq!(beta_star(&l, &cm(&[1, 1, 1, 1])).unwrap(), cm(&[1, 2, 2, 2]));
        let c4 = Lattice::chain(4).unwrap();
        let distinct = cm(&[2, 1, 1, 0]);
        assert_eq!(beta_star(&c4, &distinct).unwrap(), distinct);
    }

    #[test]
    fn dnf_interval_examples() {
        let l = chain(2);
        let meet = FunctionTable::from_fn(l.clone(), 2, |x| l.meet(x[0], x[1])).unwrap();
        let (lo, hi) = dnf_interval(&meet).unwrap();
        assert_eq!((lo.clone(), hi), (cm(&[0, 0, 0, 1]), cm(&[0, 0, 0, 1])));
        assert!(is_unique_dnf(&meet).unwrap());

        let join = FunctionTable::from_fn(l.clone(), 2, |x| l.join(x[0], x[1])).unwrap();
        let (lo, hi) = dnf_interval(&join).unwrap();
        assert_eq!((lo.clone(), hi.clone()), (cm(&[0, 1, 1, 0]), cm(&[0, 1, 1, 1])));
        assert!(!is_unique_dnf(&join).unwrap());
        for end in [&lo, &hi] {
            for (x, v) in join.entries() {
                assert_eq!(eval_dnf(&l, end, &x).unwrap(), v);
            }
        }

        let l3 = chain(3);
        let bad = FunctionTable::new(l3, 1, vec![e(0), e(0), e(1)]).unwrap();
        assert!(matches!(dnf_interval(&bad), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn dnf_box_is_exactly_the_representations() {
        let l = chain(3);
        let c = Lattice::chain(3).unwrap();
        for alpha in isotone_binary(3) {
            let f = PolyFunc::new(l.clone(), alpha).unwrap().to_table().unwrap();
            let (lo, hi) = dnf_interval(&f).unwrap();
            for g in c.tuples(4) {
                let gamma = CoefMap::new(2, g.into_inner()).unwrap();
                let represents = f.entries().all(|(x, v)| dnf_oracle(&l, &gamma, &x) == v);
                let in_box = lo.leq(&l, &gamma) && gamma.leq(&l, &hi);
                assert_eq!(represents, in_box, "{gamma:?}");
            }
        }
    }

    #[test]
    fn boolean_extension() {
        let l = chain(3);
        let p = extend_boolean(l.clone(), &cm(&[0, 1, 1, 2])).unwrap();
        assert_eq!(p.eval(&[e(2), e(0)]).unwrap(), e(1));
        let constant = extend_boolean(l.clone(), &cm(&[1, 1, 1, 1])).unwrap();
        assert!(constant.to_table().unwrap().values().iter().all(|&v| v == e(1)));
        let err = extend_boolean(l, &cm(&[1, 0, 1, 1])).unwrap_err();
        assert_eq!(
            err,
            Error::NotMonotone {
                lower: vec![0, 0],
                upper: vec![2, 0]
            }
        );
    }

    #[test]
    fn decomposition_sets() {
        let l = chain(3);
        let d = decompose(&l, &[e(2), e(0), e(2)]).unwrap();
        assert_eq!(d.sigma, vec![1, 0, 2]);
        assert_eq!(d.up_sets, vec![0b111, 0b101, 0b100, 0]);
        assert_eq!(d.down_sets, vec![0, 0b010, 0b011, 0b111]);
        for i in 1..=3 {
            assert_eq!(d.down_sets[i - 1], 0b111 & !d.up_sets[i - 1]);
        }
        assert!(decompose(&Lattice::diamond(), &[e(1)]).is_err());
    }

    #[test]
    fn simplex_matches_dnf_on_all_binary_polynomials() {
        let l = chain(3);
        let polys = isotone_binary(3);
        assert_eq!(polys.len(), 20);
        for alpha in polys {
            let f = PolyFunc::new(l.clone(), alpha.clone()).unwrap().to_table().unwrap();
            let beta = beta_from_oracle(&f);
            for (x, v) in f.entries() {
                assert_eq!(eval_simplex(&l, &alpha, &x).unwrap(), v);
                let fb = simplex_forms_beta(&l, &beta, &x).unwrap();
                assert!(fb.agree() && fb.join == v);
            }
            for c in l.elements() {
                let x = [c, c];
                let expect = l.med3(f.at_bottom(), c, f.at_top());
                assert_eq!(eval_simplex(&l, &alpha, &x).unwrap(), expect);
            }
        }
    }

    #[test]
    fn unary_simplex_is_a_clamp() {
        let l = chain(4);
        for a in 0..4 {
            for b in a..4 {
                let alpha = cm(&[a, b]);
                for x in l.elements() {
                    assert_eq!(eval_simplex(&l, &alpha, &[x]).unwrap(), l.med3(e(a), x, e(b)));
                }
            }
        }
    }

    #[test]
    fn non_isotone_coefficients_can_split_the_forms() {
        let l = chain(3);
        let alpha = cm(&[2, 0]);
        assert!(matches!(
            eval_simplex(&l, &alpha, &[e(1)]),
            Err(Error::SimplexMismatch { .. })
        ));
    }

    #[test]
    fn sugeno_examples() {
        let l = chain(3);
        let mu = FuzzyMeasure::new(&l, cm(&[0, 2, 1, 2])).unwrap();
        assert_eq!(sugeno_eval(&l, &mu, &[e(1), e(2)]).unwrap(), e(1));
        for c in l.elements() {
            assert_eq!(sugeno_eval(&l, &mu, &[c, c]).unwrap(), c);
        }
        let unanimity = FuzzyMeasure::new(&l, cm(&[0, 0, 0, 2])).unwrap();
        for x in l.tuples(2) {
            assert_eq!(sugeno_eval(&l, &unanimity, &x).unwrap(), l.meet(x[0], x[1]));
        }
        for mask in 0..4 {
            assert_eq!(sugeno_eval(&l, &mu, &l.indicator(2, mask)).unwrap(), mu.get(mask));
        }
        assert!(FuzzyMeasure::new(&l, cm(&[1, 2, 2, 2])).is_err());
        assert!(FuzzyMeasure::new(&l, cm(&[0, 2, 1, 1])).is_err());
        assert!(FuzzyMeasure::new(&l, cm(&[0, 2, 0, 2])).is_ok());
    }

    #[test]
    fn measure_reproduces_polynomials_after_clamping() {
        let l = chain(3);
        for alpha in isotone_binary(3) {
            let f = PolyFunc::new(l.clone(), alpha).unwrap().to_table().unwrap();
            let mu = measure_from_poly(&f).unwrap();
            for (x, v) in f.entries() {
                let s = sugeno_eval(&l, &mu, &x).unwrap();
                assert_eq!(clamp_value(&l, f.at_bottom(), s, f.at_top()), v);
            }
        }
        let constant = FunctionTable::from_fn(l.clone(), 2, |_| e(1)).unwrap();
        let mu = measure_from_poly(&constant).unwrap();
        assert_eq!(mu.coefficients(), &cm(&[0, 1, 1, 2]));
    }
}
