//! Morphisms of partial acts and their exhaustive enumeration.

use crate::act::Act;
use crate::error::{Error, Result};

/// A total map between act carriers; `map[a]` is the image of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    map: Vec<usize>,
}

impl Morphism {
    pub fn new(map: Vec<usize>) -> Self {
        Morphism { map }
    }

    pub fn identity(size: usize) -> Self {
        Morphism {
            map: (0..size).collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &Morphism) -> Morphism {
        Morphism {
            map: self.map.iter().map(|&x| then.apply(x)).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.map.len());
        self.map.iter().all(|x| seen.insert(*x))
    }

    pub fn is_surjective(&self, codomain: usize) -> bool {
        let mut hit = vec![false; codomain];
        for &x in &self.map {
            if x < codomain {
                hit[x] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self, codomain: usize) -> bool {
        self.map.len() == codomain && self.is_injective() && self.is_surjective(codomain)
    }
}

fn same_semigroup<A: Act + ?Sized, B: Act + ?Sized>(source: &A, target: &B) -> bool {
    source.semigroup() == target.semigroup()
}

/// Whenever `a·s` is defined, `f(a)∘s` is defined and equals `f(a·s)`.
pub fn is_morphism<A: Act + ?Sized, B: Act + ?Sized>(map: &[usize], source: &A, target: &B) -> bool {
    if map.len() != source.size() || !same_semigroup(source, target) {
        return false;
    }
    if map.iter().any(|&x| x >= target.size()) {
        return false;
    }
    let n = source.semigroup().size();
    (0..source.size()).all(|a| {
        (0..n).all(|s| match source.act(a, s) {
            None => true,
            Some(b) => target.act(map[a], s) == Some(map[b]),
        })
    })
}

/// Partial-map version: only constrains pairs where `f(a)`, `a·s` and
/// `f(a·s)` are all defined.
pub fn is_partial_morphism<A: Act + ?Sized, B: Act + ?Sized>(map: &[Option<usize>], source: &A, target: &B) -> bool {
    if map.len() != source.size() || !same_semigroup(source, target) {
        return false;
    }
    if map.iter().flatten().any(|&x| x >= target.size()) {
        return false;
    }
    let n = source.semigroup().size();
    (0..source.size()).all(|a| {
        (0..n).all(|s| match (map[a], source.act(a, s).and_then(|b| map[b])) {
            (Some(fa), Some(fb)) => target.act(fa, s) == Some(fb),
            _ => true,
        })
    })
}

/// All morphisms `source -> target`, in lexicographic order of their maps.
///
/// Fails when `|target|^|source|` exceeds `bound`.
pub fn enumerate_morphisms<A: Act + ?Sized, B: Act + ?Sized>(
    source: &A,
    target: &B,
    bound: u64,
) -> Result<Vec<Morphism>> {
    enumerate_morphisms_fixing(source, target, &vec![None; source.size()], bound)
}

/// All morphisms agreeing with `fixed` wherever it is `Some`.
///
/// Fixed values are propagated along the source action first; the bound
/// applies to `|target|^k` where `k` counts the elements still free after
/// that propagation.
pub fn enumerate_morphisms_fixing<A: Act + ?Sized, B: Act + ?Sized>(
    source: &A,
    target: &B,
    fixed: &[Option<usize>],
    bound: u64,
) -> Result<Vec<Morphism>> {
    if fixed.len() != source.size() {
        return Err(Error::TableShape {
            what: "fixed images",
            expected: source.size(),
            found: fixed.len(),
        });
    }
    if !same_semigroup(source, target) {
        return Err(Error::SemigroupMismatch);
    }
    if let Some(&bad) = fixed.iter().flatten().find(|&&x| x >= target.size()) {
        return Err(Error::IndexOutOfRange {
            what: "fixed image",
            index: bad,
            bound: target.size(),
        });
    }

    let mut assign = fixed.to_vec();
    let seeds: Vec<usize> = (0..source.size()).filter(|&a| assign[a].is_some()).collect();
    let mut out = Vec::new();
    if !propagate(source, target, &mut assign, seeds) {
        return Ok(out);
    }
    let free = assign.iter().filter(|x| x.is_none()).count();
    let size = (target.size() as u128).checked_pow(free as u32).unwrap_or(u128::MAX);
    if size > bound as u128 {
        return Err(Error::SearchSpaceTooLarge { size, bound });
    }
    search(source, target, &mut assign, &mut out);
    out.sort();
    Ok(out)
}

/// Forces `f(a·s) = f(a)∘s` from every newly assigned element. Returns
/// false on a contradiction.
fn propagate<A: Act + ?Sized, B: Act + ?Sized>(
    source: &A,
    target: &B,
    assign: &mut [Option<usize>],
    mut stack: Vec<usize>,
) -> bool {
    let n = source.semigroup().size();
    while let Some(a) = stack.pop() {
        let fa = assign[a].expect("stacked elements are assigned");
        for s in 0..n {
            let Some(b) = source.act(a, s) else { continue };
            let Some(image) = target.act(fa, s) else {
                return false;
            };
            match assign[b] {
                Some(fb) if fb != image => return false,
                Some(_) => {}
                None => {
                    assign[b] = Some(image);
                    stack.push(b);
                }
            }
        }
    }
    true
}

fn search<A: Act + ?Sized, B: Act + ?Sized>(
    source: &A,
    target: &B,
    assign: &mut [Option<usize>],
    out: &mut Vec<Morphism>,
) {
    let Some(next) = assign.iter().position(Option::is_none) else {
        out.push(Morphism::new(assign.iter().map(|x| x.unwrap()).collect()));
        return;
    };
    for value in 0..target.size() {
        let mut trial = assign.to_vec();
        trial[next] = Some(value);
        if propagate(source, target, &mut trial, vec![next]) {
            search(source, target, &mut trial, out);
        }
    }
}
