//! Finite bounded lattices.
//!
//! Elements are dense indices `0..m`. A [`Lattice`] is either a chain, where
//! the order is index order, or an explicit meet/join table validated as a
//! bounded distributive lattice at construction. Both kinds answer meet, join
//! and order queries through precomputed tables, so every algorithm in the
//! crate is written once against this interface.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Largest supported carrier size; elements are stored as `u8`.
pub const MAX_SIZE: usize = 256;

/// An element index, interpreted relative to one [`Lattice`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u8);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        debug_assert!(i < MAX_SIZE);
        Elem(i as u8)
    }
}

/// A point of `L^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple(Vec<Elem>);

impl Tuple {
    pub fn new(coords: Vec<Elem>) -> Self {
        Tuple(coords)
    }

    pub fn constant(c: Elem, n: usize) -> Self {
        Tuple(vec![c; n])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Elem> {
        self.0
    }

    /// The tuple with coordinate `k` (0-based) replaced by `v`.
    pub fn with(&self, k: usize, v: Elem) -> Tuple {
        let mut out = self.0.clone();
        out[k] = v;
        Tuple(out)
    }

    /// Raw indices, used in error payloads.
    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|e| e.index()).collect()
    }
}

impl Deref for Tuple {
    type Target = [Elem];

    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

impl From<Vec<Elem>> for Tuple {
    fn from(v: Vec<Elem>) -> Self {
        Tuple(v)
    }
}

impl FromIterator<Elem> for Tuple {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        Tuple(iter.into_iter().collect())
    }
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Elem,
    pub hi: Elem,
}

/// Result of [`Lattice::convex_hull`]: an interval on chains, an explicit
/// element set otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hull {
    Interval(Interval),
    Elements(Vec<Elem>),
}

impl Hull {
    pub fn elements(&self, lattice: &Lattice) -> Vec<Elem> {
        match self {
            Hull::Interval(iv) => lattice.interval_elements(*iv),
            Hull::Elements(v) => v.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    Chain,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    kind: LatticeKind,
    size: usize,
    names: Vec<String>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    leq: Vec<bool>,
    bottom: Elem,
    top: Elem,
    total: bool,
    upper_covers: Vec<Vec<Elem>>,
    lower_covers: Vec<Vec<Elem>>,
    rank: Vec<usize>,
}

impl Lattice {
    /// The chain `0 < 1 < ... < m-1`.
    pub fn chain(m: usize) -> Result<Lattice> {
        if m == 0 || m > MAX_SIZE {
            return Err(Error::InvalidSize(m));
        }
        let mut meet = Vec::with_capacity(m * m);
        let mut join = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                meet.push(Elem::from_index(a.min(b)));
                join.push(Elem::from_index(a.max(b)));
            }
        }
        let names = (0..m).map(|i| i.to_string()).collect();
        Ok(Self::assemble(
            LatticeKind::Chain,
            names,
            meet,
            join,
            Elem(0),
            Elem::from_index(m - 1),
        ))
    }

    /// Builds and fully validates a lattice from explicit meet and join
    /// tables. Rejects anything that is not a bounded distributive lattice,
    /// naming the first violated law and its witness.
    pub fn from_tables(
        names: Vec<String>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Result<Lattice> {
        let m = names.len();
        if m == 0 || m > MAX_SIZE {
            return Err(Error::InvalidSize(m));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Malformed {
                    what: "lattice",
                    detail: format!("duplicate element name `{n}`"),
                });
            }
        }
        let flat = |t: &[Vec<usize>], what: &'static str| -> Result<Vec<Elem>> {
            if t.len() != m || t.iter().any(|row| row.len() != m) {
                return Err(Error::Malformed {
                    what,
                    detail: format!("expected a {m}x{m} table"),
                });
            }
            let mut out = Vec::with_capacity(m * m);
            for row in t {
                for &v in row {
                    if v >= m {
                        return Err(Error::Malformed {
                            what,
                            detail: format!("entry {v} out of range"),
                        });
                    }
                    out.push(Elem::from_index(v));
                }
            }
            Ok(out)
        };
        let meet = flat(&meet, "meet table")?;
        let join = flat(&join, "join table")?;
        let mt = |a: usize, b: usize| meet[a * m + b].index();
        let jn = |a: usize, b: usize| join[a * m + b].index();

        for a in 0..m {
            if mt(a, a) != a {
                return Err(law("meet idempotence", &[a]));
            }
            if jn(a, a) != a {
                return Err(law("join idempotence", &[a]));
            }
        }
        for a in 0..m {
            for b in 0..m {
                if mt(a, b) != mt(b, a) {
                    return Err(law("meet commutativity", &[a, b]));
                }
                if jn(a, b) != jn(b, a) {
                    return Err(law("join commutativity", &[a, b]));
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if mt(mt(a, b), c) != mt(a, mt(b, c)) {
                        return Err(law("meet associativity", &[a, b, c]));
                    }
                    if jn(jn(a, b), c) != jn(a, jn(b, c)) {
                        return Err(law("join associativity", &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                if mt(a, jn(a, b)) != a || jn(a, mt(a, b)) != a {
                    return Err(law("absorption", &[a, b]));
                }
                if (mt(a, b) == a) != (jn(a, b) == b) {
                    return Err(law("order agreement", &[a, b]));
                }
            }
        }
        let bottom = (0..m)
            .find(|&z| (0..m).all(|x| jn(z, x) == x))
            .ok_or_else(|| law("bounded below", &[]))?;
        let top = (0..m)
            .find(|&t| (0..m).all(|x| mt(x, t) == x))
            .ok_or_else(|| law("bounded above", &[]))?;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c)) {
                        return Err(law("distributivity", &[a, b, c]));
                    }
                }
            }
        }
        Ok(Self::assemble(
            LatticeKind::Table,
            names,
            meet,
            join,
            Elem::from_index(bottom),
            Elem::from_index(top),
        ))
    }

    /// The four-element Boolean lattice `{0, a, b, 1}` with `a∧b = 0` and
    /// `a∨b = 1`, the smallest distributive lattice that is not a chain.
    pub fn diamond() -> Lattice {
        let names = ["0", "a", "b", "1"].map(String::from).to_vec();
        let meet = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ];
        let join = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ];
        Lattice::from_tables(names, meet, join).expect("diamond tables are a lattice")
    }

    fn assemble(
        kind: LatticeKind,
        names: Vec<String>,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        bottom: Elem,
        top: Elem,
    ) -> Lattice {
        let m = names.len();
        let leq: Vec<bool> = (0..m * m).map(|i| meet[i].index() == i / m).collect();
        let le = |a: usize, b: usize| leq[a * m + b];
        let total = (0..m).all(|a| (0..m).all(|b| le(a, b) || le(b, a)));
        let covers = |a: usize, b: usize| {
            a != b && le(a, b) && !(0..m).any(|c| c != a && c != b && le(a, c) && le(c, b))
        };
        let upper_covers: Vec<Vec<Elem>> = (0..m)
            .map(|a| (0..m).filter(|&b| covers(a, b)).map(Elem::from_index).collect())
            .collect();
        let lower_covers: Vec<Vec<Elem>> = (0..m)
            .map(|b| (0..m).filter(|&a| covers(a, b)).map(Elem::from_index).collect())
            .collect();
        // longest chain from bottom; every strict predecessor has smaller rank
        let mut rank = vec![0usize; m];
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&a| (0..m).filter(|&b| le(b, a)).count());
        for &a in &order {
            rank[a] = lower_covers[a]
                .iter()
                .map(|c| rank[c.index()] + 1)
                .max()
                .unwrap_or(0);
        }
        Lattice {
            kind,
            size: m,
            names,
            meet,
            join,
            leq,
            bottom,
            top,
            total,
            upper_covers,
            lower_covers,
            rank,
        }
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// True when the order is total. Chain-kind lattices always are; a table
    /// lattice may be as well.
    pub fn is_chain(&self) -> bool {
        self.total
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(Elem::from_index)
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.index() < self.size
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Resolves an element by name; on chain-kind lattices decimal indices are
    /// the names.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        self.names
            .iter()
            .position(|n| n == s)
            .map(Elem::from_index)
            .ok_or_else(|| Error::UnknownElement(s.to_string()))
    }

    /// Parses `(x1,...,xn)` (parentheses optional) into a tuple.
    pub fn parse_tuple(&self, s: &str) -> Result<Tuple> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Err(Error::Malformed {
                what: "tuple",
                detail: format!("`{s}` has no coordinates"),
            });
        }
        inner.split(',').map(|p| self.parse_elem(p)).collect()
    }

    pub fn fmt_tuple(&self, x: &[Elem]) -> String {
        let parts: Vec<&str> = x.iter().map(|&e| self.name(e)).collect();
        format!("({})", parts.join(","))
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.size + b.index()]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.size + b.index()]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.size + b.index()]
    }

    #[inline]
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn partial_cmp(&self, a: Elem, b: Elem) -> Option<Ordering> {
        match (self.leq(a, b), self.leq(b, a)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Total comparison; only meaningful when [`Lattice::is_chain`] holds.
    pub fn cmp_chain(&self, a: Elem, b: Elem) -> Ordering {
        self.partial_cmp(a, b).unwrap_or(Ordering::Equal)
    }

    /// Meet of a family; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// Join of a family; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    pub fn upper_covers(&self, a: Elem) -> &[Elem] {
        &self.upper_covers[a.index()]
    }

    pub fn lower_covers(&self, a: Elem) -> &[Elem] {
        &self.lower_covers[a.index()]
    }

    /// Length of the longest chain from bottom to `a`.
    pub fn rank(&self, a: Elem) -> usize {
        self.rank[a.index()]
    }

    pub fn tuple_meet_const(&self, x: &[Elem], c: Elem) -> Tuple {
        x.iter().map(|&xi| self.meet(xi, c)).collect()
    }

    pub fn tuple_join_const(&self, x: &[Elem], c: Elem) -> Tuple {
        x.iter().map(|&xi| self.join(xi, c)).collect()
    }

    pub fn tuple_meet(&self, x: &[Elem], y: &[Elem]) -> Tuple {
        x.iter().zip(y).map(|(&a, &b)| self.meet(a, b)).collect()
    }

    pub fn tuple_join(&self, x: &[Elem], y: &[Elem]) -> Tuple {
        x.iter().zip(y).map(|(&a, &b)| self.join(a, b)).collect()
    }

    pub fn tuple_leq(&self, x: &[Elem], y: &[Elem]) -> bool {
        x.iter().zip(y).all(|(&a, &b)| self.leq(a, b))
    }

    /// Ternary median `(a∧b) ∨ (b∧c) ∨ (c∧a)`.
    #[inline]
    pub fn med3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.join(
            self.join(self.meet(a, b), self.meet(b, c)),
            self.meet(c, a),
        )
    }

    /// Median of an odd-length list. On chains this is the middle order
    /// statistic; otherwise the join over all majority subsets of their meets.
    pub fn med(&self, xs: &[Elem]) -> Result<Elem> {
        if xs.len().is_multiple_of(2) {
            return Err(Error::EvenMedian(xs.len()));
        }
        if self.total {
            let mut v = xs.to_vec();
            v.sort_by(|&a, &b| self.cmp_chain(a, b));
            Ok(v[v.len() / 2])
        } else {
            self.med_by_subsets(xs)
        }
    }

    /// Median through the join-of-meets formula over all subsets of size
    /// `k+1` of a list of length `2k+1`. Valid in every distributive lattice.
    pub fn med_by_subsets(&self, xs: &[Elem]) -> Result<Elem> {
        let len = xs.len();
        if len.is_multiple_of(2) {
            return Err(Error::EvenMedian(len));
        }
        let need = len / 2 + 1;
        let mut acc = self.bottom;
        for_each_k_subset(len, need, |idx| {
            let m = self.meet_all(idx.iter().map(|&i| xs[i]));
            acc = self.join(acc, m);
        });
        Ok(acc)
    }

    pub fn interval(&self, lo: Elem, hi: Elem) -> Result<Interval> {
        if !self.contains(lo) || !self.contains(hi) {
            return Err(Error::UnknownElement(format!("{}/{}", lo.0, hi.0)));
        }
        if !self.leq(lo, hi) {
            return Err(Error::UnorderedInterval);
        }
        Ok(Interval { lo, hi })
    }

    pub fn interval_elements(&self, iv: Interval) -> Vec<Elem> {
        self.elements()
            .filter(|&c| self.leq(iv.lo, c) && self.leq(c, iv.hi))
            .collect()
    }

    /// Smallest convex superset of `set`: everything lying between two of
    /// its members, iterated to a fixpoint.
    pub fn convex_hull(&self, set: &[Elem]) -> Result<Hull> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if self.total {
            let lo = *set.iter().min_by(|&&a, &&b| self.cmp_chain(a, b)).unwrap();
            let hi = *set.iter().max_by(|&&a, &&b| self.cmp_chain(a, b)).unwrap();
            return Ok(Hull::Interval(Interval { lo, hi }));
        }
        let mut inside = vec![false; self.size];
        for &e in set {
            inside[e.index()] = true;
        }
        loop {
            let members: Vec<Elem> = self.elements().filter(|e| inside[e.index()]).collect();
            let mut grew = false;
            for c in self.elements() {
                if inside[c.index()] {
                    continue;
                }
                let between = members.iter().any(|&a| {
                    self.leq(a, c) && members.iter().any(|&b| self.leq(c, b))
                });
                if between {
                    inside[c.index()] = true;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        Ok(Hull::Elements(
            self.elements().filter(|e| inside[e.index()]).collect(),
        ))
    }

    /// All tuples of `L^n` in index order (first coordinate most significant).
    pub fn tuples(&self, n: usize) -> Tuples {
        Tuples {
            m: self.size,
            current: if self.size == 0 { None } else { Some(vec![Elem(0); n]) },
        }
    }

    /// `{bottom, top}^n` in index order.
    pub fn boolean_tuples(&self, n: usize) -> Vec<Tuple> {
        let (b, t) = (self.bottom, self.top);
        let mut out: Vec<Tuple> = (0..1usize << n)
            .map(|bits| {
                (0..n)
                    .map(|k| if bits >> (n - 1 - k) & 1 == 1 { t } else { b })
                    .collect()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The indicator tuple `e_I`: top at coordinates in `mask` (bit `i`
    /// for coordinate `i`, 0-based), bottom elsewhere.
    pub fn indicator(&self, n: usize, mask: usize) -> Tuple {
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { self.top } else { self.bottom })
            .collect()
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LatticeKind::Chain => write!(f, "chain({})", self.size),
            LatticeKind::Table => write!(f, "table{{{}}}", self.names.join(",")),
        }
    }
}

fn law(name: &'static str, witness: &[usize]) -> Error {
    Error::LawViolation {
        law: name,
        witness: witness.to_vec(),
    }
}

/// Calls `f` on every `k`-subset of `0..n`, as ascending index lists, in
/// lexicographic order.
pub fn for_each_k_subset<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Odometer over `L^n`.
pub struct Tuples {
    m: usize,
    current: Option<Vec<Elem>>,
}

impl Iterator for Tuples {
    type Item = Tuple;

    fn next(&mut self) -> Option<Tuple> {
        let cur = self.current.as_mut()?;
        let out = Tuple(cur.clone());
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            if cur[k].index() + 1 < self.m {
                cur[k] = Elem::from_index(cur[k].index() + 1);
                break;
            }
            cur[k] = Elem(0);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Elem {
        Elem::from_index(i)
    }

    fn diamond() -> Lattice {
        Lattice::diamond()
    }

    fn pentagon_tables() -> (Vec<String>, Vec<Vec<usize>>, Vec<Vec<usize>>) {
        // 0 < a < b < 1, 0 < c < 1, c incomparable to a and b
        let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        let le = |x: usize, y: usize| -> bool {
            x == y || x == 0 || y == 4 || (x == 1 && y == 2)
        };
        let mut meet = vec![vec![0; 5]; 5];
        let mut join = vec![vec![0; 5]; 5];
        for x in 0..5 {
            for y in 0..5 {
                // greatest common lower bound / least common upper bound
                let lower: Vec<usize> = (0..5).filter(|&z| le(z, x) && le(z, y)).collect();
                let upper: Vec<usize> = (0..5).filter(|&z| le(x, z) && le(y, z)).collect();
                meet[x][y] = *lower
                    .iter()
                    .find(|&&z| lower.iter().all(|&w| le(w, z)))
                    .unwrap();
                join[x][y] = *upper
                    .iter()
                    .find(|&&z| upper.iter().all(|&w| le(z, w)))
                    .unwrap();
            }
        }
        (names, meet, join)
    }

    #[test]
    fn chain_construction() {
        let two = Lattice::chain(2).unwrap();
        assert_eq!((two.bottom(), two.top()), (e(0), e(1)));
        let one = Lattice::chain(1).unwrap();
        assert_eq!(one.bottom(), one.top());
        let three = Lattice::chain(3).unwrap();
        assert!(three.lt(e(0), e(1)) && three.lt(e(1), e(2)));
        assert_eq!(Lattice::chain(0), Err(Error::InvalidSize(0)));
        assert!(Lattice::chain(257).is_err());
    }

    #[test]
    fn diamond_is_valid_and_not_a_chain() {
        let d = diamond();
        assert_eq!(d.kind(), LatticeKind::Table);
        assert!(!d.is_chain());
        let (a, b) = (e(1), e(2));
        assert!(!d.leq(a, b) && !d.leq(b, a));
        assert_eq!(d.meet(a, b), d.bottom());
        assert_eq!(d.join(a, b), d.top());
        assert_eq!(d.rank(d.top()), 2);
    }

    #[test]
    fn chain_tables_match_make_chain() {
        let names = ["0", "1", "2"].map(String::from).to_vec();
        let meet = (0..3).map(|a| (0..3).map(|b| a.min(b)).collect()).collect();
        let join = (0..3).map(|a| (0..3).map(|b| a.max(b)).collect()).collect();
        let t = Lattice::from_tables(names, meet, join).unwrap();
        let c = Lattice::chain(3).unwrap();
        assert!(t.is_chain());
        for a in c.elements() {
            for b in c.elements() {
                assert_eq!(t.leq(a, b), c.leq(a, b));
                assert_eq!(t.meet(a, b), c.meet(a, b));
            }
        }
    }

    #[test]
    fn pentagon_is_rejected_for_distributivity() {
        let (names, meet, join) = pentagon_tables();
        let err = Lattice::from_tables(names, meet.clone(), join.clone()).unwrap_err();
        let Error::LawViolation { law, witness } = err else {
            panic!("expected a law violation");
        };
        assert_eq!(law, "distributivity");
        // replay the witness
        let (x, y, z) = (witness[0], witness[1], witness[2]);
        assert_ne!(meet[x][join[y][z]], join[meet[x][y]][meet[x][z]]);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let names = ["0", "1"].map(String::from).to_vec();
        let err = Lattice::from_tables(
            names.clone(),
            vec![vec![0, 0], vec![1, 1]],
            vec![vec![0, 1], vec![1, 1]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::LawViolation { .. }));
        let err = Lattice::from_tables(names, vec![vec![0, 0]], vec![vec![0, 1], vec![1, 1]])
            .unwrap_err();
        assert!(matches!(err, Error::Malformed { .. }));
    }

    #[test]
    fn order_queries() {
        let c = Lattice::chain(3).unwrap();
        assert!(c.leq(e(1), e(2)));
        let d = diamond();
        for l in [&c, &d] {
            for x in l.elements() {
                assert!(l.leq(l.bottom(), x));
                assert!(l.leq(x, l.top()));
            }
        }
    }

    #[test]
    fn tuple_constants() {
        let c = Lattice::chain(3).unwrap();
        let x = [e(1), e(2), e(0)];
        assert_eq!(c.tuple_meet_const(&x, e(1)).coords(), &[e(1), e(1), e(0)]);
        assert_eq!(c.tuple_join_const(&x, e(1)).coords(), &[e(1), e(2), e(1)]);
        assert_eq!(c.tuple_meet_const(&x, c.top()).coords(), &x);
    }

    #[test]
    fn medians() {
        let c3 = Lattice::chain(3).unwrap();
        assert_eq!(c3.med(&[e(0), e(1), e(2)]).unwrap(), e(1));
        assert_eq!(c3.med(&[e(2), e(2), e(0)]).unwrap(), e(2));
        assert_eq!(c3.med(&[e(0), e(1)]), Err(Error::EvenMedian(2)));
        let c4 = Lattice::chain(4).unwrap();
        assert_eq!(c4.med(&[e(0), e(3), e(1), e(3), e(2)]).unwrap(), e(2));
        assert_eq!(c4.med_by_subsets(&[e(0), e(3), e(1), e(3), e(2)]).unwrap(), e(2));
        let d = diamond();
        for x in d.elements() {
            for y in d.elements() {
                assert_eq!(d.med(&[x, x, y]).unwrap(), x);
            }
        }
    }

    #[test]
    fn chain_median_matches_subset_formula() {
        for m in 1..=4 {
            let c = Lattice::chain(m).unwrap();
            for len in [3usize, 5] {
                for t in c.tuples(len) {
                    assert_eq!(c.med(&t).unwrap(), c.med_by_subsets(&t).unwrap());
                }
            }
        }
    }

    #[test]
    fn hulls() {
        let c5 = Lattice::chain(5).unwrap();
        let h = c5.convex_hull(&[e(1), e(3)]).unwrap();
        assert_eq!(h, Hull::Interval(Interval { lo: e(1), hi: e(3) }));
        assert_eq!(h.elements(&c5), vec![e(1), e(2), e(3)]);
        assert_eq!(
            c5.convex_hull(&[e(2)]).unwrap(),
            Hull::Interval(Interval { lo: e(2), hi: e(2) })
        );
        assert_eq!(c5.convex_hull(&[]), Err(Error::EmptySet));
        let d = diamond();
        // a and b are incomparable: nothing lies between them
        assert_eq!(d.convex_hull(&[e(1), e(2)]).unwrap().elements(&d), vec![e(1), e(2)]);
        assert_eq!(
            d.convex_hull(&[e(0), e(1), e(3)]).unwrap().elements(&d),
            vec![e(0), e(1), e(2), e(3)]
        );
        assert_eq!(c5.interval(e(3), e(1)), Err(Error::UnorderedInterval));
    }

    #[test]
    fn tuple_iteration_and_parsing() {
        let c = Lattice::chain(3).unwrap();
        let all: Vec<Tuple> = c.tuples(2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[5].coords(), &[e(1), e(2)]);
        assert_eq!(c.boolean_tuples(2).len(), 4);
        assert_eq!(c.parse_tuple("(1, 2)").unwrap().coords(), &[e(1), e(2)]);
        assert!(c.parse_tuple("(1,5)").is_err());
        let d = diamond();
        assert_eq!(d.fmt_tuple(&d.parse_tuple("(b,a)").unwrap()), "(b,a)");
        let mut subsets = Vec::new();
        for_each_k_subset(4, 2, |s| subsets.push(s.to_vec()));
        assert_eq!(subsets.len(), 6);
        assert_eq!(subsets[0], vec![0, 1]);
        assert_eq!(subsets[5], vec![2, 3]);
    }
}

