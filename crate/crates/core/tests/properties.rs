use std::sync::Arc;

use proptest::prelude::*;

use latpoly::decide::{decide_polynomial, decide_sugeno, run_check, SetChoice};
use latpoly::harness::enumerate::{monotone_repair, random_table, rng_for, sample_polynomial};
use latpoly::poly::{
    alpha_from_oracle, alpha_star, beta_from_oracle, eval_cnf, eval_dnf, extend_boolean,
    simplex_forms, simplex_forms_beta, simplices_containing, sugeno_eval, CoefMap, FuzzyMeasure,
};
use latpoly::props::{are_comonotonic, check_nondecreasing, Domain, MedianDomain, Property};
use latpoly::{Elem, FunctionTable, Lattice};

fn chain(m: usize) -> Arc<Lattice> {
    Arc::new(Lattice::chain(m).unwrap())
}

fn elems(v: &[usize]) -> Vec<Elem> {
    v.iter().map(|&i| Elem::from_index(i)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sorts(sigma: &[usize], x: &[usize]) -> bool {
    sigma.windows(2).all(|w| x[w[0]] <= x[w[1]])
}

// max over I of min(alpha(I), min of x over I), chain values as integers
fn naive_dnf(alpha: &[usize], x: &[usize]) -> usize {
    (0..alpha.len())
        .map(|mask| {
            (0..x.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| x[i])
                .fold(alpha[mask], usize::min)
        })
        .max()
        .unwrap()
}

// min over I of max(beta(I), max of x over I)
fn naive_cnf(beta: &[usize], x: &[usize]) -> usize {
    (0..beta.len())
        .map(|mask| {
            (0..x.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| x[i])
                .fold(beta[mask], usize::max)
        })
        .min()
        .unwrap()
}

fn isotone(m: usize, n: usize, raw: Vec<usize>) -> Vec<usize> {
    let mut v: Vec<usize> = raw.into_iter().map(|r| r % m).collect();
    for mask in 0..1usize << n {
        for i in 0..n {
            if mask >> i & 1 == 1 {
                v[mask] = v[mask].max(v[mask & !(1 << i)]);
            }
        }
    }
    v
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<usize>, Vec<usize>)> {
    (2usize..=5, 1usize..=3).prop_flat_map(|(m, n)| {
        (
            Just(m),
            Just(n),
            prop::collection::vec(0..m, 1 << n),
            prop::collection::vec(0..m, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dnf_matches_naive_evaluation((m, n, raw, x) in case()) {
        let l = chain(m);
        let alpha = CoefMap::new(n, elems(&raw)).unwrap();
        let v = eval_dnf(&l, &alpha, &elems(&x)).unwrap();
        prop_assert_eq!(v.index(), naive_dnf(&raw, &x));
        let w = eval_cnf(&l, &alpha, &elems(&x)).unwrap();
        prop_assert_eq!(w.index(), naive_cnf(&raw, &x));
    }

    #[test]
    fn dnf_and_cnf_describe_the_same_function((m, n, raw, _x) in case()) {
        let l = chain(m);
        let alpha = CoefMap::new(n, elems(&isotone(m, n, raw))).unwrap();
        let f = extend_boolean(l.clone(), &alpha).unwrap().to_table().unwrap();
        let beta = beta_from_oracle(&f);
        for (x, v) in f.entries() {
            prop_assert_eq!(eval_cnf(&l, &beta, &x).unwrap(), v);
        }
        prop_assert_eq!(alpha_from_oracle(&f), alpha);
    }

    #[test]
    fn every_map_in_the_dnf_box_represents_f((m, n, raw, pick) in case()) {
        let l = chain(m);
        let alpha = CoefMap::new(n, elems(&isotone(m, n, raw))).unwrap();
        let lo = alpha_star(&l, &alpha).unwrap();
        // a point of the box [alpha*, alpha] chosen coordinatewise
        let mid: Vec<usize> = (0..1usize << n)
            .map(|mask| {
                let (a, b) = (lo.get(mask).index(), alpha.get(mask).index());
                a + pick.get(mask % pick.len()).copied().unwrap_or(0) % (b - a + 1)
            })
            .collect();
        let f = extend_boolean(l.clone(), &alpha).unwrap().to_table().unwrap();
        for (x, v) in f.entries() {
            let xs: Vec<usize> = x.iter().map(|e| e.index()).collect();
            prop_assert_eq!(naive_dnf(&mid, &xs), v.index());
        }
    }

    #[test]
    fn simplex_forms_agree_on_isotone_maps((m, n, raw, x) in case()) {
        let l = chain(m);
        let alpha = CoefMap::new(n, elems(&isotone(m, n, raw))).unwrap();
        let f = extend_boolean(l.clone(), &alpha).unwrap().to_table().unwrap();
        let beta = beta_from_oracle(&f);
        let x = elems(&x);
        let a = simplex_forms(&l, &alpha, &x).unwrap();
        let b = simplex_forms_beta(&l, &beta, &x).unwrap();
        prop_assert!(a.agree());
        prop_assert_eq!(a, b);
        prop_assert_eq!(a.join, f.eval(&x));
    }

    #[test]
    fn sugeno_reproduces_the_measure_on_indicators((m, n, raw, _x) in case()) {
        let l = chain(m);
        let mut v = isotone(m, n, raw);
        v[0] = 0;
        let full = v.len() - 1;
        v[full] = m - 1;
        let mu = FuzzyMeasure::new(&l, CoefMap::new(n, elems(&isotone(m, n, v))).unwrap()).unwrap();
        for mask in 0..1usize << n {
            prop_assert_eq!(sugeno_eval(&l, &mu, &l.indicator(n, mask)).unwrap(), mu.get(mask));
        }
        let f = FunctionTable::from_fn(l.clone(), n, |x| sugeno_eval(&l, &mu, x).unwrap()).unwrap();
        prop_assert!(decide_sugeno(&f).verdict);
    }

    #[test]
    fn simplices_match_brute_force((m, n, _raw, x) in case()) {
        let l = chain(m);
        let mut got = simplices_containing(&l, &elems(&x)).unwrap();
        got.sort();
        let want: Vec<Vec<usize>> = {
            let mut all: Vec<_> = permutations(n).into_iter().filter(|s| sorts(s, &x)).collect();
            all.sort();
            all
        };
        prop_assert_eq!(got, want);
    }

    #[test]
    fn comonotonic_iff_a_common_sorting_permutation_exists(
        (n, x, y) in (1usize..=4).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(0usize..3, n), prop::collection::vec(0usize..3, n))
        })
    ) {
        let l = chain(3);
        let oracle = permutations(n).iter().any(|s| sorts(s, &x) && sorts(s, &y));
        prop_assert_eq!(are_comonotonic(&l, &elems(&x), &elems(&y)).unwrap(), oracle);
    }

    #[test]
    fn median_by_subsets_matches_sorting(xs in prop::collection::vec(0usize..5, 1..=7)) {
        let xs = if xs.len() % 2 == 0 { xs[1..].to_vec() } else { xs };
        let l = chain(5);
        let mut sorted = xs.clone();
        sorted.sort_unstable();
        let want = Elem::from_index(sorted[sorted.len() / 2]);
        prop_assert_eq!(l.med(&elems(&xs)).unwrap(), want);
        prop_assert_eq!(l.med_by_subsets(&elems(&xs)).unwrap(), want);
    }

    #[test]
    fn repaired_tables_are_monotone_and_repair_is_idempotent(
        m in 2usize..=4, n in 1usize..=3, seed in any::<u64>()
    ) {
        let l = chain(m);
        let f = random_table(l, n, &mut rng_for(seed, 0)).unwrap();
        let g = monotone_repair(&f);
        prop_assert!(check_nondecreasing(&g).holds);
        prop_assert_eq!(monotone_repair(&g), g.clone());
        for (x, v) in f.entries() {
            prop_assert!(v <= g.eval(&x));
        }
    }

    #[test]
    fn failing_reports_replay(m in 2usize..=3, n in 1usize..=2, seed in any::<u64>()) {
        let l = chain(m);
        let f = random_table(l, n, &mut rng_for(seed, 1)).unwrap();
        let props = [
            Property::Nondecreasing,
            Property::Idempotent,
            Property::MinHomogeneous(Domain::Full),
            Property::MaxHomogeneous(Domain::Weak),
            Property::HorizontallyMinitive(Domain::Full),
            Property::HorizontallyMaxitive(Domain::Boolean),
            Property::MedianDecomposable(MedianDomain::Full),
            Property::StronglyIdempotent,
            Property::ConvexRange,
            Property::ComponentwiseConvexRange,
            Property::ComonotonicMinitive,
            Property::ComonotonicMaxitive,
            Property::Conservative(Domain::Full),
            Property::Polynomial,
        ];
        for p in props {
            for s in [SetChoice::Range, SetChoice::All] {
                let r = run_check(&f, p, s).unwrap();
                prop_assert!(r.replay(&f), "{} does not replay", p.name());
            }
        }
    }

    #[test]
    fn sampled_polynomials_are_accepted(m in 2usize..=5, n in 1usize..=3, seed in any::<u64>()) {
        let f = sample_polynomial(chain(m), n, seed, 0).unwrap();
        prop_assert!(decide_polynomial(&f).verdict);
    }
}
