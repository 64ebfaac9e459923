use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, Tuple};

/// Upper bound on `m^n` for an explicit table.
pub const MAX_ENTRIES: usize = 1 << 24;

/// An explicit total map `L^n -> L`, stored row-major: the entry for `x`
/// sits at `Σ x_k · m^(n-1-k)` (first coordinate most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    lattice: Arc<Lattice>,
    arity: usize,
    values: Vec<Elem>,
}

/// Number of entries of an `n`-ary table over an `m`-element lattice.
pub fn table_len(m: usize, n: usize) -> Option<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|n| m.checked_pow(n))
        .filter(|&len| len <= MAX_ENTRIES)
}

impl FunctionTable {
    pub fn new(lattice: Arc<Lattice>, arity: usize, values: Vec<Elem>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Malformed {
                what: "function table",
                detail: "arity must be at least 1".into(),
            });
        }
        let len = table_len(lattice.size(), arity).ok_or_else(|| Error::Malformed {
            what: "function table",
            detail: format!("{}^{arity} entries is too large", lattice.size()),
        })?;
        if values.len() != len {
            return Err(Error::Malformed {
                what: "function table",
                detail: format!("expected {len} values, got {}", values.len()),
            });
        }
        if let Some(bad) = values.iter().find(|&&v| !lattice.contains(v)) {
            return Err(Error::Malformed {
                what: "function table",
                detail: format!("value index {} out of range", bad.0),
            });
        }
        Ok(FunctionTable {
            lattice,
            arity,
            values,
        })
    }

    /// Tabulates `f` over all of `L^n`.
    pub fn from_fn<F>(lattice: Arc<Lattice>, arity: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[Elem]) -> Elem,
    {
        table_len(lattice.size(), arity).ok_or_else(|| Error::Malformed {
            what: "function table",
            detail: format!("{}^{arity} entries is too large", lattice.size()),
        })?;
        let values = lattice.tuples(arity).map(|x| f(&x)).collect();
        Self::new(lattice, arity, values)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index_of(&self, x: &[Elem]) -> usize {
        debug_assert_eq!(x.len(), self.arity);
        let m = self.lattice.size();
        x.iter().fold(0, |acc, e| acc * m + e.index())
    }

    pub fn tuple_at(&self, mut index: usize) -> Tuple {
        let m = self.lattice.size();
        let mut coords = vec![Elem(0); self.arity];
        for slot in coords.iter_mut().rev() {
            *slot = Elem::from_index(index % m);
            index /= m;
        }
        Tuple::new(coords)
    }

    #[inline]
    pub fn eval(&self, x: &[Elem]) -> Elem {
        self.values[self.index_of(x)]
    }

    pub fn checked_eval(&self, x: &[Elem]) -> Result<Elem> {
        if x.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: x.len(),
            });
        }
        if let Some(bad) = x.iter().find(|&&e| !self.lattice.contains(e)) {
            return Err(Error::UnknownElement(bad.0.to_string()));
        }
        Ok(self.eval(x))
    }

    /// `f(0̄)`.
    pub fn at_bottom(&self) -> Elem {
        self.values[0]
    }

    /// `f(1̄)`.
    pub fn at_top(&self) -> Elem {
        self.values[self.values.len() - 1]
    }

    pub fn at_constant(&self, c: Elem) -> Elem {
        self.eval(&vec![c; self.arity])
    }

    /// `(tuple, value)` pairs in index order.
    pub fn entries(&self) -> impl Iterator<Item = (Tuple, Elem)> + '_ {
        self.lattice.tuples(self.arity).zip(self.values.iter().copied())
    }

    /// The distinct values taken, in element order.
    pub fn range(&self) -> Vec<Elem> {
        let mut seen = vec![false; self.lattice.size()];
        for v in &self.values {
            seen[v.index()] = true;
        }
        self.lattice.elements().filter(|e| seen[e.index()]).collect()
    }

    pub fn with_value(&self, x: &[Elem], v: Elem) -> FunctionTable {
        let mut out = self.clone();
        let i = self.index_of(x);
        out.values[i] = v;
        out
    }

    pub fn display_values(&self) -> String {
        let names: Vec<&str> = self.values.iter().map(|&v| self.lattice.name(v)).collect();
        format!("[{}]", names.join(","))
    }
}

/// All tuples of `L^n` ordered by number of distinct coordinate values, then
/// by index. Decisions report the first counterexample in this order so the
/// simplest disagreement surfaces first.
pub fn graded_tuples(lattice: &Lattice, n: usize) -> Vec<Tuple> {
    let mut all: Vec<(usize, Tuple)> = lattice
        .tuples(n)
        .map(|x| (distinct_count(&x), x))
        .collect();
    all.sort_by_key(|(d, _)| *d);
    all.into_iter().map(|(_, x)| x).collect()
}

pub fn distinct_count(x: &[Elem]) -> usize {
    let mut v = x.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_layout_is_row_major() {
        let l = Arc::new(Lattice::chain(3).unwrap());
        let t = FunctionTable::from_fn(l, 2, |x| x[0]).unwrap();
        assert_eq!(t.len(), 9);
        let x = [Elem(1), Elem(2)];
        assert_eq!(t.index_of(&x), 5);
        assert_eq!(t.tuple_at(5).coords(), &x);
        assert_eq!(t.eval(&x), Elem(1));
        assert_eq!((t.at_bottom(), t.at_top()), (Elem(0), Elem(2)));
        assert_eq!(t.range(), vec![Elem(0), Elem(1), Elem(2)]);
    }

    #[test]
    fn rejects_bad_shapes() {
        let l = Arc::new(Lattice::chain(2).unwrap());
        assert!(FunctionTable::new(l.clone(), 2, vec![Elem(0); 3]).is_err());
        assert!(FunctionTable::new(l.clone(), 1, vec![Elem(0), Elem(2)]).is_err());
        assert!(FunctionTable::new(l.clone(), 0, vec![]).is_err());
        let t = FunctionTable::new(l, 1, vec![Elem(0), Elem(1)]).unwrap();
        assert_eq!(
            t.checked_eval(&[Elem(0), Elem(0)]),
            Err(Error::ArityMismatch { expected: 1, got: 2 })
        );
    }

    #[test]
    fn graded_order_puts_constants_first() {
        let l = Lattice::chain(3).unwrap();
        let g = graded_tuples(&l, 2);
        assert_eq!(g.len(), 9);
        assert!(g[..3].iter().all(|x| distinct_count(x) == 1));
        assert_eq!(g[3].coords(), &[Elem(0), Elem(1)]);
    }
}
