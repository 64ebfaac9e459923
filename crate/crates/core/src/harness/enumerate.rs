use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, Tuple};
use crate::poly::{extend_boolean, CoefMap};
use crate::table::{table_len, FunctionTable};

pub const DEFAULT_CAP: u64 = 1 << 24;

/// The exhaustive cap, overridable through `LATPOLY_CAP`.
pub fn exhaustive_cap() -> u64 {
    std::env::var("LATPOLY_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// `m^(m^n)`, or `None` when it does not fit in 128 bits.
pub fn table_count(m: usize, n: usize) -> Option<u128> {
    let len = table_len(m, n)?;
    (m as u128).checked_pow(u32::try_from(len).ok()?)
}

fn count_label(m: usize, n: usize) -> String {
    match table_count(m, n) {
        Some(c) => c.to_string(),
        None => format!("{m}^({m}^{n})"),
    }
}

/// All `m^(m^n)` tables in lexicographic order of their value vectors.
pub fn enumerate_tables(lattice: Arc<Lattice>, n: usize) -> Result<Tables> {
    let cap = exhaustive_cap();
    let m = lattice.size();
    let count = table_count(m, n)
        .filter(|&c| c <= cap as u128)
        .ok_or_else(|| Error::CapExceeded {
            count: count_label(m, n),
            cap,
            hint: "exhaustive-monotone or a random mode",
        })?;
    let len = table_len(m, n).expect("count fits");
    Ok(Tables {
        lattice,
        arity: n,
        next: Some(vec![Elem(0); len]),
        remaining: count as u64,
    })
}

/// The table at position `index` of [`enumerate_tables`].
pub fn table_at(lattice: Arc<Lattice>, n: usize, mut index: u64) -> Result<FunctionTable> {
    let m = lattice.size() as u64;
    let len = table_len(lattice.size(), n).ok_or_else(|| Error::Malformed {
        what: "function table",
        detail: "too many entries".into(),
    })?;
    let mut values = vec![Elem(0); len];
    for slot in values.iter_mut().rev() {
        *slot = Elem::from_index((index % m) as usize);
        index /= m;
    }
    FunctionTable::new(lattice, n, values)
}

pub struct Tables {
    lattice: Arc<Lattice>,
    arity: usize,
    next: Option<Vec<Elem>>,
    remaining: u64,
}

impl Iterator for Tables {
    type Item = FunctionTable;

    fn next(&mut self) -> Option<FunctionTable> {
        let current = self.next.take()?;
        let m = self.lattice.size();
        let mut succ = current.clone();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            if slot.index() + 1 < m {
                *slot = Elem::from_index(slot.index() + 1);
                carried = false;
                break;
            }
            *slot = Elem(0);
        }
        if !carried {
            self.next = Some(succ);
        }
        self.remaining = self.remaining.saturating_sub(1);
        Some(
            FunctionTable::new(self.lattice.clone(), self.arity, current)
                .expect("enumerated shape is valid"),
        )
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Tuples of `L^n` sorted by total rank, a linear extension of the product
/// order, paired with the table indices of their lower covers.
fn linear_extension(lattice: &Lattice, n: usize) -> Vec<(usize, Vec<usize>)> {
    let m = lattice.size();
    let index_of = |x: &[Elem]| x.iter().fold(0usize, |acc, e| acc * m + e.index());
    let mut tuples: Vec<Tuple> = lattice.tuples(n).collect();
    tuples.sort_by_key(|x| x.iter().map(|&e| lattice.rank(e)).sum::<usize>());
    tuples
        .iter()
        .map(|x| {
            let lower = (0..n)
                .flat_map(|k| {
                    lattice
                        .lower_covers(x[k])
                        .iter()
                        .map(move |&c| index_of(&x.with(k, c)))
                })
                .collect();
            (index_of(x), lower)
        })
        .collect()
}

/// Every nondecreasing table, found by backtracking along a linear
/// extension. Refuses when more than the cap are produced.
pub fn enumerate_monotone(lattice: Arc<Lattice>, n: usize) -> Result<Vec<FunctionTable>> {
    let cap = exhaustive_cap();
    let len = table_len(lattice.size(), n).ok_or_else(|| Error::Malformed {
        what: "function table",
        detail: "too many entries".into(),
    })?;
    let order = linear_extension(&lattice, n);
    let mut values = vec![Elem(0); len];
    let mut out = Vec::new();
    let mut ctx = Backtrack {
        lattice: &lattice,
        order: &order,
        cap,
        out: &mut out,
    };
    ctx.fill(0, &mut values)?;
    let mut tables: Vec<FunctionTable> = out
        .into_iter()
        .map(|v| FunctionTable::new(lattice.clone(), n, v).expect("valid shape"))
        .collect();
    tables.sort_by(|a, b| a.values().cmp(b.values()));
    Ok(tables)
}

struct Backtrack<'a> {
    lattice: &'a Lattice,
    order: &'a [(usize, Vec<usize>)],
    cap: u64,
    out: &'a mut Vec<Vec<Elem>>,
}

impl Backtrack<'_> {
    fn fill(&mut self, pos: usize, values: &mut Vec<Elem>) -> Result<()> {
        if pos == self.order.len() {
            if self.out.len() as u64 >= self.cap {
                return Err(Error::CapExceeded {
                    count: format!("more than {}", self.cap),
                    cap: self.cap,
                    hint: "a random mode",
                });
            }
            self.out.push(values.clone());
            return Ok(());
        }
        let (idx, lower) = &self.order[pos];
        let floor = self
            .lattice
            .join_all(lower.iter().map(|&j| values[j]));
        for v in self.lattice.elements() {
            if self.lattice.leq(floor, v) {
                values[*idx] = v;
                self.fill(pos + 1, values)?;
            }
        }
        Ok(())
    }
}

/// The generator for sample `stream` of a seeded sweep.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A uniformly random table.
pub fn random_table<R: Rng>(lattice: Arc<Lattice>, n: usize, rng: &mut R) -> Result<FunctionTable> {
    let m = lattice.size();
    let len = table_len(m, n).ok_or_else(|| Error::Malformed {
        what: "function table",
        detail: "too many entries".into(),
    })?;
    let values = (0..len).map(|_| Elem::from_index(rng.gen_range(0..m))).collect();
    FunctionTable::new(lattice, n, values)
}

/// Replaces each entry by the join of itself and its lower-cover entries,
/// sweeping upward along a linear extension.
pub fn monotone_repair(f: &FunctionTable) -> FunctionTable {
    let l = f.lattice();
    let mut values = f.values().to_vec();
    for (idx, lower) in linear_extension(l, f.arity()) {
        values[idx] = lower.iter().fold(values[idx], |acc, &j| l.join(acc, values[j]));
    }
    FunctionTable::new(f.lattice_arc().clone(), f.arity(), values).expect("same shape")
}

/// A random table repaired into a nondecreasing one.
pub fn sample_monotone(lattice: Arc<Lattice>, n: usize, seed: u64) -> Result<FunctionTable> {
    sample_monotone_stream(lattice, n, seed, 0)
}

pub fn sample_monotone_stream(
    lattice: Arc<Lattice>,
    n: usize,
    seed: u64,
    stream: u64,
) -> Result<FunctionTable> {
    let mut rng = rng_for(seed, stream);
    Ok(monotone_repair(&random_table(lattice, n, &mut rng)?))
}

/// A random isotone coefficient map: uniform values joined upward over
/// submasks.
pub fn random_isotone_coefs<R: Rng>(lattice: &Lattice, n: usize, rng: &mut R) -> CoefMap {
    let m = lattice.size();
    let mut values: Vec<Elem> = (0..1usize << n)
        .map(|_| Elem::from_index(rng.gen_range(0..m)))
        .collect();
    for mask in 0..values.len() {
        for i in 0..n {
            if mask >> i & 1 == 1 {
                values[mask] = lattice.join(values[mask], values[mask & !(1 << i)]);
            }
        }
    }
    CoefMap::new(n, values).expect("length is 2^n")
}

/// The polynomial function of a random isotone coefficient map.
pub fn sample_polynomial(lattice: Arc<Lattice>, n: usize, seed: u64, stream: u64) -> Result<FunctionTable> {
    let mut rng = rng_for(seed, stream);
    let alpha = random_isotone_coefs(&lattice, n, &mut rng);
    extend_boolean(lattice, &alpha)?.to_table()
}
