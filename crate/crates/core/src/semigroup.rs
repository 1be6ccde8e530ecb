//! Finite semigroups given by their multiplication tables.
//!
//! Elements are the indices `0..n`. The table is stored row-major, so the
//! product `st` lives at `table[s * n + t]`. Classification flags are
//! computed once when the table is validated.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    size: usize,
    table: Vec<usize>,
    identity: Option<usize>,
    is_group: bool,
    is_factorizable: bool,
}

impl Semigroup {
    /// Validates a multiplication table given as rows (`rows[s][t] = st`).
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::TableShape {
                    what: "semigroup row",
                    expected: n,
                    found: row.len(),
                });
            }
            table.extend(row);
        }
        Self::from_flat(n, table)
    }

    /// Validates a row-major table of length `size * size`.
    pub fn from_flat(size: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptySemigroup);
        }
        if table.len() != size * size {
            return Err(Error::TableShape {
                what: "semigroup table",
                expected: size * size,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= size) {
            return Err(Error::IndexOutOfRange {
                what: "semigroup table entry",
                index: bad,
                bound: size,
            });
        }
        let mul = |s: usize, t: usize| table[s * size + t];
        for s in 0..size {
            for t in 0..size {
                let st = mul(s, t);
                for u in 0..size {
                    if mul(st, u) != mul(s, mul(t, u)) {
                        return Err(Error::NotAssociative { s, t, u });
                    }
                }
            }
        }
        Ok(Self::classify(size, table))
    }

    fn classify(size: usize, table: Vec<usize>) -> Self {
        let mul = |s: usize, t: usize| table[s * size + t];
        let identity = (0..size).find(|&e| (0..size).all(|s| mul(e, s) == s && mul(s, e) == s));

        let is_permutation = |values: Vec<usize>| {
            let mut seen = vec![false; size];
            values.into_iter().all(|x| !std::mem::replace(&mut seen[x], true))
        };
        let is_group = identity.is_some()
            && (0..size).all(|s| {
                is_permutation((0..size).map(|t| mul(s, t)).collect())
                    && is_permutation((0..size).map(|t| mul(t, s)).collect())
            });

        let mut hit = vec![false; size];
        for &x in &table {
            hit[x] = true;
        }
        let is_factorizable = hit.iter().all(|&h| h);

        Semigroup {
            size,
            table,
            identity,
            is_group,
            is_factorizable,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.size + t]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn is_group(&self) -> bool {
        self.is_group
    }

    /// Every element is a product, `S = S²`.
    pub fn is_factorizable(&self) -> bool {
        self.is_factorizable
    }

    /// Two-sided inverse of `g`, if `S` is a monoid and one exists.
    pub fn inverse(&self, g: usize) -> Option<usize> {
        let e = self.identity?;
        (0..self.size).find(|&h| self.mul(g, h) == e && self.mul(h, g) == e)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// `S¹`: adjoins a new external identity at index `n`, even when `S`
    /// already has one. The old table is kept on indices `0..n`.
    pub fn adjoin_identity(&self) -> Semigroup {
        let n = self.size;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for s in 0..m {
            for t in 0..m {
                table[s * m + t] = match (s == n, t == n) {
                    (true, _) => t,
                    (false, true) => s,
                    (false, false) => self.mul(s, t),
                };
            }
        }
        Self::classify(m, table)
    }

    /// Index of the external identity produced by [`Semigroup::adjoin_identity`]
    /// when called on a semigroup of this size.
    pub fn adjoined_identity_index(&self) -> usize {
        self.size
    }

    /// The left-zero semigroup on `n` elements (`st = s`).
    pub fn left_zero(n: usize) -> Result<Semigroup> {
        Self::from_flat(n, (0..n * n).map(|i| i / n.max(1)).collect())
    }

    /// The cyclic group of order `n`.
    pub fn cyclic_group(n: usize) -> Result<Semigroup> {
        Self::from_flat(n, (0..n * n).map(|i| (i / n + i % n) % n).collect())
    }

    /// The monoid `{1, x, ..., x^k}` with `x^(k+1) = x^k`.
    pub fn truncated_powers(k: usize) -> Result<Semigroup> {
        let n = k + 1;
        Self::from_flat(n, (0..n * n).map(|i| (i / n + i % n).min(k)).collect())
    }

    /// Applies a relabelling `perm` (old index -> new index) to the table.
    pub fn relabel(&self, perm: &[usize]) -> Vec<usize> {
        let n = self.size;
        let mut out = vec![0; n * n];
        for s in 0..n {
            for t in 0..n {
                out[perm[s] * n + perm[t]] = perm[self.mul(s, t)];
            }
        }
        out
    }
}
