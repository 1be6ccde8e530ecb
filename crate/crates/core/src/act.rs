//! Partial and global right acts of a finite semigroup.
//!
//! A partial act stores one cell per `(a, s)`; `None` marks `a·s` as
//! undefined. Every [`PartialAct`] satisfies the partial action law
//! `(a·s)·t = a·st` (whenever the left side is defined) by construction, and
//! lazily caches the remaining axiom flags.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Anything that acts (partially) on a finite carrier from the right.
pub trait Act {
    fn semigroup(&self) -> &Semigroup;
    fn size(&self) -> usize;
    fn act(&self, a: usize, s: usize) -> Option<usize>;
}

/// Decided axioms of a partial act.
///
/// `um` is only decided over monoids and `inverse_condition` only over
/// groups; otherwise they are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActFlags {
    pub pa: bool,
    pub strong: bool,
    pub unitary: bool,
    pub um: Option<bool>,
    pub partially_defined: bool,
    pub inverse_condition: Option<bool>,
}

#[derive(Clone)]
pub struct PartialAct {
    semigroup: Arc<Semigroup>,
    size: usize,
    table: Vec<Option<usize>>,
    flags: OnceLock<ActFlags>,
}

impl fmt::Debug for PartialAct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialAct")
            .field("size", &self.size)
            .field("rows", &self.rows())
            .finish()
    }
}

impl PartialEq for PartialAct {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.table == other.table && self.semigroup == other.semigroup
    }
}

impl Eq for PartialAct {}

impl Act for PartialAct {
    fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    fn size(&self) -> usize {
        self.size
    }

    #[inline]
    fn act(&self, a: usize, s: usize) -> Option<usize> {
        self.table[a * self.semigroup.size() + s]
    }
}

/// First triple `(a, s, t)` on which the partial action law fails.
fn find_pa_violation<A: Act + ?Sized>(act: &A) -> Option<(usize, usize, usize)> {
    let sg = act.semigroup();
    let n = sg.size();
    for a in 0..act.size() {
        for s in 0..n {
            let Some(b) = act.act(a, s) else { continue };
            for t in 0..n {
                if let Some(c) = act.act(b, t) {
                    if act.act(a, sg.mul(s, t)) != Some(c) {
                        return Some((a, s, t));
                    }
                }
            }
        }
    }
    None
}

impl PartialAct {
    /// Validates a partial act given as rows (`rows[a][s] = a·s`).
    pub fn new(semigroup: Arc<Semigroup>, rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = semigroup.size();
        let m = rows.len();
        let mut table = Vec::with_capacity(m * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::TableShape {
                    what: "act row",
                    expected: n,
                    found: row.len(),
                });
            }
            table.extend(row);
        }
        Self::from_flat(semigroup, m, table)
    }

    pub fn from_flat(semigroup: Arc<Semigroup>, size: usize, table: Vec<Option<usize>>) -> Result<Self> {
        let n = semigroup.size();
        if table.len() != size * n {
            return Err(Error::TableShape {
                what: "act table",
                expected: size * n,
                found: table.len(),
            });
        }
        if let Some(bad) = table.iter().flatten().find(|&&x| x >= size) {
            return Err(Error::IndexOutOfRange {
                what: "act table entry",
                index: *bad,
                bound: size,
            });
        }
        let act = PartialAct {
            semigroup,
            size,
            table,
            flags: OnceLock::new(),
        };
        if let Some((a, s, t)) = find_pa_violation(&act) {
            return Err(Error::PaViolation { a, s, t });
        }
        Ok(act)
    }

    /// Builds an act from a table already known to satisfy the partial
    /// action law. Only for tables produced by this crate's own generators.
    pub(crate) fn from_flat_unchecked(semigroup: Arc<Semigroup>, size: usize, table: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(table.len(), size * semigroup.size());
        let act = PartialAct {
            semigroup,
            size,
            table,
            flags: OnceLock::new(),
        };
        debug_assert!(find_pa_violation(&act).is_none());
        act
    }

    pub fn semigroup_arc(&self) -> &Arc<Semigroup> {
        &self.semigroup
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        let n = self.semigroup.size();
        self.table.chunks(n).map(<[Option<usize>]>::to_vec).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Every product is defined.
    pub fn is_global(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    pub fn to_global(&self) -> Option<GlobalAct> {
        let table = self.table.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(GlobalAct {
            semigroup: self.semigroup.clone(),
            size: self.size,
            table,
        })
    }

    /// Decides every per-act axiom by exhaustive loops; memoized.
    pub fn flags(&self) -> ActFlags {
        *self.flags.get_or_init(|| check_conditions(self))
    }

    pub fn is_strong(&self) -> bool {
        self.flags().strong
    }

    pub fn is_unitary(&self) -> bool {
        self.flags().unitary
    }

    pub fn is_partially_defined(&self) -> bool {
        self.flags().partially_defined
    }
}

/// Decides (PA), (S), (U), (Um), partial definedness and (I).
pub fn check_conditions(act: &PartialAct) -> ActFlags {
    let sg = act.semigroup();
    let n = sg.size();
    let m = act.size();

    let pa = find_pa_violation(act).is_none();

    let mut strong = true;
    let mut partially_defined = true;
    for a in 0..m {
        for s in 0..n {
            let a_s = act.act(a, s);
            for t in 0..n {
                let a_st = act.act(a, sg.mul(s, t));
                let a_s_t = a_s.and_then(|b| act.act(b, t));
                if a_s.is_some() && a_st.is_some() && a_s_t != a_st {
                    strong = false;
                }
                if a_s_t.is_some() != a_st.is_some() {
                    partially_defined = false;
                }
            }
        }
    }

    let mut reached = vec![false; m];
    for x in act.table().iter().flatten() {
        reached[*x] = true;
    }
    let unitary = reached.iter().all(|&r| r);

    let um = sg.identity().map(|e| (0..m).all(|a| act.act(a, e) == Some(a)));

    let inverse_condition = sg.is_group().then(|| {
        (0..m).all(|a| {
            (0..n).all(|g| match act.act(a, g) {
                None => true,
                Some(b) => {
                    let inv = sg.inverse(g).expect("group element has an inverse");
                    act.act(b, inv) == Some(a)
                }
            })
        })
    });

    let flags = ActFlags {
        pa,
        strong,
        unitary,
        um,
        partially_defined,
        inverse_condition,
    };
    if let Some(um) = um {
        // Over a monoid, unitary and (Um) agree under (PA) and (S).
        debug_assert_eq!(pa && unitary && strong, pa && um && strong);
    }
    flags
}

/// A total act satisfying `(b*s)*t = b*st`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GlobalAct {
    semigroup: Arc<Semigroup>,
    size: usize,
    table: Vec<usize>,
}

impl fmt::Debug for GlobalAct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GlobalAct")
            .field("size", &self.size)
            .field("table", &self.table)
            .finish()
    }
}

impl Act for GlobalAct {
    fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    fn size(&self) -> usize {
        self.size
    }

    #[inline]
    fn act(&self, a: usize, s: usize) -> Option<usize> {
        Some(self.apply(a, s))
    }
}

impl GlobalAct {
    pub fn new(semigroup: Arc<Semigroup>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = semigroup.size();
        let m = rows.len();
        let mut table = Vec::with_capacity(m * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::TableShape {
                    what: "global act row",
                    expected: n,
                    found: row.len(),
                });
            }
            table.extend(row);
        }
        Self::from_flat(semigroup, m, table)
    }

    pub fn from_flat(semigroup: Arc<Semigroup>, size: usize, table: Vec<usize>) -> Result<Self> {
        let n = semigroup.size();
        if table.len() != size * n {
            return Err(Error::TableShape {
                what: "global act table",
                expected: size * n,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= size) {
            return Err(Error::IndexOutOfRange {
                what: "global act entry",
                index: bad,
                bound: size,
            });
        }
        let act = GlobalAct { semigroup, size, table };
        if let Some((a, s, t)) = find_pa_violation(&act) {
            return Err(Error::PaViolation { a, s, t });
        }
        Ok(act)
    }

    #[inline]
    pub fn apply(&self, b: usize, s: usize) -> usize {
        self.table[b * self.semigroup.size() + s]
    }

    pub fn semigroup_arc(&self) -> &Arc<Semigroup> {
        &self.semigroup
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.semigroup.size();
        self.table.chunks(n).map(<[usize]>::to_vec).collect()
    }

    /// The same act viewed as a (total) partial act.
    pub fn to_partial(&self) -> PartialAct {
        PartialAct::from_flat_unchecked(
            self.semigroup.clone(),
            self.size,
            self.table.iter().copied().map(Some).collect(),
        )
    }
}

/// Restriction of a global act to a subset of its carrier.
///
/// The subset is sorted and deduplicated; element `i` of the result stands for
/// `subset[i]` of `global`. Returns the act together with that subset.
pub fn restrict(global: &GlobalAct, subset: &[usize]) -> Result<(PartialAct, Vec<usize>)> {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&bad) = subset.iter().find(|&&b| b >= global.size()) {
        return Err(Error::IndexOutOfRange {
            what: "subset element",
            index: bad,
            bound: global.size(),
        });
    }
    let mut position = vec![None; global.size()];
    for (i, &b) in subset.iter().enumerate() {
        position[b] = Some(i);
    }
    let n = global.semigroup().size();
    let table = subset
        .iter()
        .flat_map(|&b| (0..n).map(move |s| (b, s)))
        .map(|(b, s)| position[global.apply(b, s)])
        .collect();
    let act = PartialAct::from_flat_unchecked(global.semigroup.clone(), subset.len(), table);
    debug_assert!(act.is_strong(), "restrictions of global acts are strong");
    Ok((act, subset))
}

/// `S` acting on itself by right multiplication.
pub fn right_regular_act(semigroup: &Arc<Semigroup>) -> GlobalAct {
    GlobalAct {
        semigroup: semigroup.clone(),
        size: semigroup.size(),
        table: semigroup.table().to_vec(),
    }
}

/// The partial `S¹`-act with `a∘1 = a` and `a∘s = a·s` otherwise.
pub fn adjoin_identity_act(act: &PartialAct) -> Result<PartialAct> {
    if !act.is_strong() {
        return Err(Error::NotStrong);
    }
    let sg = act.semigroup();
    let n = sg.size();
    let s1 = Arc::new(sg.adjoin_identity());
    let mut table = Vec::with_capacity(act.size() * (n + 1));
    for a in 0..act.size() {
        table.extend((0..n).map(|s| act.act(a, s)));
        table.push(Some(a));
    }
    let out = PartialAct::from_flat_unchecked(s1, act.size(), table);
    debug_assert!(out.is_strong() && out.is_unitary());
    Ok(out)
}
