//! Every generated globalization of a firm, nonsingular, strong act, up to
//! isomorphism.
//!
//! Each generated globalization is a quotient of `A⊗S` by an act congruence
//! that keeps the embedding injective and (G1) intact. Under (F) a class
//! outside `δ(A)` can never share a block with a class of `δ(A)`: if
//! `δ(b)*t` lands in `ι(A)`, (G1) forces `b·t` defined and then `b⊗t` is
//! already `δ(b·t)`. So the search runs over partitions of the classes
//! outside `δ(A)` only, with each `δ`-class kept as a singleton block.

use std::collections::BTreeSet;

use crate::act::{Act, GlobalAct, PartialAct};
use crate::error::{Error, Result};
use crate::glob::{
    are_isomorphic_globalizations, canonical_from_tensor, embedding_compatible_morphisms, generated_morphism,
    is_globalization, GlobalizationTriple,
};
use crate::hom::{build_hom, is_nonsingular};
use crate::morphism::Morphism;
use crate::tensor::{build_tensor, is_firm_with, TensorAct};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusObject {
    pub triple: GlobalizationTriple,
    /// The congruence on `A⊗S` this object is the quotient by, as blocks of
    /// tensor class indices.
    pub blocks: Vec<Vec<usize>>,
    /// The block of each tensor class.
    pub labels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub objects: Vec<CensusObject>,
    pub initial_index: usize,
    pub terminal_index: usize,
    /// Row-major bitset: bit `i * len + j` is set when there is an
    /// embedding-compatible morphism from object `i` to object `j`.
    reachable: Vec<u64>,
}

impl CensusResult {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn has_morphism(&self, i: usize, j: usize) -> bool {
        let bit = i * self.len() + j;
        self.reachable[bit / 64] >> (bit % 64) & 1 == 1
    }

    /// The unique embedding-compatible morphism from object `i` to object
    /// `j`, if any.
    pub fn morphism(&self, i: usize, j: usize) -> Option<Morphism> {
        if !self.has_morphism(i, j) {
            return None;
        }
        let target = &self.objects[j].labels;
        Some(Morphism::new(
            self.objects[i]
                .blocks
                .iter()
                .map(|members| target[members[0]])
                .collect(),
        ))
    }

    /// The morphism matrix with every entry built.
    pub fn morphism_matrix(&self) -> Vec<Vec<Option<Morphism>>> {
        (0..self.len())
            .map(|i| (0..self.len()).map(|j| self.morphism(i, j)).collect())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.objects.iter().map(|o| o.triple.global().size()).collect()
    }
}

/// Runs the census.
pub fn census(act: &PartialAct, limits: &Limits) -> Result<CensusResult> {
    if !act.is_strong() {
        return Err(Error::precondition("act is not strong"));
    }
    let tensor = build_tensor(act);
    if !is_firm_with(&tensor) {
        return Err(Error::precondition("act is not firm"));
    }
    if !is_nonsingular(act) {
        return Err(Error::precondition("act is not nonsingular"));
    }
    if tensor.size() > limits.census_classes {
        return Err(Error::SearchSpaceTooLarge {
            size: tensor.size() as u128,
            bound: limits.census_classes as u64,
        });
    }

    let free = tensor.size() - act.size();
    let candidates = bell(free);
    if candidates > limits.search_space as u128 {
        return Err(Error::SearchSpaceTooLarge {
            size: candidates,
            bound: limits.search_space,
        });
    }

    let tensor_triple = tensor.triple().expect("firm strong acts globalize through A⊗S");
    let hom_triple = build_hom(act)?.triple().expect("unitary acts embed through λ");

    let mut objects = Vec::new();
    for labels in admissible_congruences(&tensor) {
        let object = quotient(&tensor, &labels)?;
        if !object.triple.is_a_generated() {
            return Err(Error::WellDefinednessFailure(
                "census quotient is not a generated globalization",
            ));
        }
        objects.push(object);
    }
    objects.sort_by(|x, y| order_key(&x.triple).cmp(&order_key(&y.triple)));

    // Isomorphic objects share the kernel of their surjection from A⊗S, so
    // distinct congruences never collide; this is still checked.
    let mut kernels = BTreeSet::new();
    for object in &objects {
        let kernel = canonical_kernel(&tensor, &object.triple)?;
        if !kernels.insert(kernel) {
            return Err(Error::WellDefinednessFailure("two census objects are isomorphic"));
        }
    }

    let find = |target: &GlobalizationTriple| -> Result<usize> {
        let mut hits = Vec::new();
        for (i, object) in objects.iter().enumerate() {
            if are_isomorphic_globalizations(&object.triple, target, limits.search_space)? {
                hits.push(i);
            }
        }
        match hits.as_slice() {
            [i] => Ok(*i),
            _ => Err(Error::WellDefinednessFailure("universal object not found exactly once")),
        }
    };
    let initial_index = find(&tensor_triple)?;
    let terminal_index = find(&hom_triple)?;

    let count = objects.len();
    let mut reachable = vec![0u64; (count * count).div_ceil(64)];
    for (i, source) in objects.iter().enumerate() {
        for (j, target) in objects.iter().enumerate() {
            if factors_through(source, target) {
                let bit = i * count + j;
                reachable[bit / 64] |= 1 << (bit % 64);
            }
        }
    }
    let result = CensusResult {
        objects,
        initial_index,
        terminal_index,
        reachable,
    };
    if count * count <= limits.search_space as usize {
        for i in 0..count {
            for j in 0..count {
                check_entry(&result, i, j, limits)?;
            }
        }
    } else {
        for j in 0..count {
            check_entry(&result, initial_index, j, limits)?;
            check_entry(&result, j, terminal_index, limits)?;
        }
    }
    Ok(result)
}

/// Number of set partitions of `n` elements.
fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// Whether the congruence of `source` is contained in that of `target`,
/// which is when `A⊗S -> target` factors through `source`.
fn factors_through(source: &CensusObject, target: &CensusObject) -> bool {
    source
        .blocks
        .iter()
        .all(|members| members.iter().all(|&x| target.labels[x] == target.labels[members[0]]))
}

/// Checks one matrix entry against a direct search and the canonical
/// formula.
fn check_entry(result: &CensusResult, i: usize, j: usize, limits: &Limits) -> Result<()> {
    let (source, target) = (&result.objects[i].triple, &result.objects[j].triple);
    let mut found = embedding_compatible_morphisms(source, target, limits.search_space)?;
    if found.len() > 1 {
        return Err(Error::WellDefinednessFailure("more than one compatible morphism"));
    }
    let found = found.pop();
    if found != generated_morphism(source, target) || found != result.morphism(i, j) {
        return Err(Error::WellDefinednessFailure("search and canonical morphism disagree"));
    }
    Ok(())
}

fn order_key(triple: &GlobalizationTriple) -> (usize, &[usize], &[usize]) {
    (triple.global().size(), triple.global().table(), triple.iota())
}

/// Block labels on tensor classes, one vector per admissible congruence, in
/// restricted-growth order over the classes outside `δ(A)`.
fn admissible_congruences(tensor: &TensorAct) -> Vec<Vec<usize>> {
    let delta = &tensor.delta().expect("firm acts have δ").map;
    let k = tensor.size();
    let n = tensor.base().semigroup().size();
    let action = tensor.action();

    // δ-classes take labels 0..|A|; the rest are enumerated.
    let mut fixed = vec![None; k];
    for (label, &class) in delta.iter().enumerate() {
        fixed[class] = Some(label);
    }
    let free: Vec<usize> = (0..k).filter(|&x| fixed[x].is_none()).collect();
    let base_labels = delta.len();

    let mut out = Vec::new();
    let mut labels = fixed;
    let mut rgs = Vec::with_capacity(free.len());
    extend(&free, 0, &mut rgs, &mut labels, base_labels, action, n, &mut out);
    out
}

/// A candidate is rejected as soon as two classes sharing a block have
/// images under some `t` that are both labelled and differ.
#[allow(clippy::too_many_arguments)]
fn extend(
    free: &[usize],
    depth: usize,
    rgs: &mut Vec<usize>,
    labels: &mut Vec<Option<usize>>,
    base_labels: usize,
    action: &GlobalAct,
    n: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if !closed_so_far(labels, action, n) {
        return;
    }
    if depth == free.len() {
        out.push(labels.iter().map(|l| l.expect("all classes labelled")).collect());
        return;
    }
    let used = rgs.iter().copied().max().map_or(0, |m| m + 1);
    for block in 0..=used {
        rgs.push(block);
        labels[free[depth]] = Some(base_labels + block);
        extend(free, depth + 1, rgs, labels, base_labels, action, n, out);
        labels[free[depth]] = None;
        rgs.pop();
    }
}

fn closed_so_far(labels: &[Option<usize>], action: &GlobalAct, n: usize) -> bool {
    let k = labels.len();
    for x in 0..k {
        let Some(lx) = labels[x] else { continue };
        for y in x + 1..k {
            if labels[y] != Some(lx) {
                continue;
            }
            for t in 0..n {
                let (ix, iy) = (labels[action.apply(x, t)], labels[action.apply(y, t)]);
                if let (Some(a), Some(b)) = (ix, iy) {
                    if a != b {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Kernel of the canonical surjection `A⊗S -> B`, labelled by first
/// occurrence.
fn canonical_kernel(tensor: &TensorAct, triple: &GlobalizationTriple) -> Result<Vec<usize>> {
    let phi = canonical_from_tensor(tensor, triple)?;
    let mut dense = vec![usize::MAX; triple.global().size()];
    let mut next = 0;
    Ok(phi
        .map()
        .iter()
        .map(|&b| {
            if dense[b] == usize::MAX {
                dense[b] = next;
                next += 1;
            }
            dense[b]
        })
        .collect())
}

/// The quotient of `A⊗S` by a congruence given as block labels.
fn quotient(tensor: &TensorAct, labels: &[usize]) -> Result<CensusObject> {
    let base = tensor.base();
    let n = base.semigroup().size();
    let action = tensor.action();

    // Relabel blocks densely by first occurrence.
    let mut dense = vec![usize::MAX; labels.len()];
    let mut block_of = Vec::with_capacity(labels.len());
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (class, &l) in labels.iter().enumerate() {
        if dense[l] == usize::MAX {
            dense[l] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[dense[l]].push(class);
        block_of.push(dense[l]);
    }

    let mut table = Vec::with_capacity(blocks.len() * n);
    for members in &blocks {
        for t in 0..n {
            let image = block_of[action.apply(members[0], t)];
            if members.iter().any(|&x| block_of[action.apply(x, t)] != image) {
                return Err(Error::WellDefinednessFailure("census partition is not a congruence"));
            }
            table.push(image);
        }
    }
    let global = GlobalAct::from_flat(base.semigroup_arc().clone(), blocks.len(), table)?;
    let delta = &tensor.delta().expect("firm acts have δ").map;
    let iota: Vec<usize> = delta.iter().map(|&d| block_of[d]).collect();
    let triple = is_globalization(base, &global, &iota)?;
    Ok(CensusObject {
        triple,
        blocks,
        labels: block_of,
    })
}
