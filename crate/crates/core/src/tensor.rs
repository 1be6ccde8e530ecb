//! The tensor product `A⊗S` of a partial act with the semigroup.
//!
//! `A⊗S` is the quotient of `A×S` by the smallest equivalence containing
//! `(a, ut) → (a·u, t)` for every defined `a·u`. It carries the global action
//! `(a⊗s)*t = a⊗st` and, for unitary acts, the map `δ(a) = b⊗t` for any
//! decomposition `a = b·t`. For firm and strong acts `(A⊗S, δ)` is the initial
//! generated globalization.

use crate::act::{adjoin_identity_act, Act, GlobalAct, PartialAct};
use crate::error::{Error, Result};
use crate::glob::{is_globalization, GlobalizationTriple};
use crate::morphism::{enumerate_morphisms_fixing, is_morphism, Morphism};
use crate::union_find::UnionFind;

/// A pair `(a, s)` of `A×S`.
pub type Pair = (usize, usize);

/// The embedding `δ: A -> A⊗S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta {
    pub map: Vec<usize>,
    /// Every decomposition `a = b·t` lands in the same class. This is exactly
    /// condition (F); when false the map was built from the first
    /// decomposition found.
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct TensorAct {
    base: PartialAct,
    class_of: Vec<usize>,
    classes: Vec<Vec<Pair>>,
    action: GlobalAct,
    delta: Option<Delta>,
    edges: Vec<(Pair, Pair)>,
}

impl TensorAct {
    pub fn base(&self) -> &PartialAct {
        &self.base
    }

    /// Number of classes.
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// Classes in order of their lexicographically least member, which is
    /// stored first.
    pub fn classes(&self) -> &[Vec<Pair>] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> Pair {
        self.classes[class][0]
    }

    pub fn class_of(&self, a: usize, s: usize) -> usize {
        self.class_of[a * self.base.semigroup().size() + s]
    }

    /// `a⊗s = b⊗t`.
    pub fn tensor_equal(&self, (a, s): Pair, (b, t): Pair) -> bool {
        self.class_of(a, s) == self.class_of(b, t)
    }

    pub fn action(&self) -> &GlobalAct {
        &self.action
    }

    pub fn delta(&self) -> Option<&Delta> {
        self.delta.as_ref()
    }

    /// The generating relation `→`, one edge per `(a, u, t)` with `a·u` defined.
    pub fn edges(&self) -> &[(Pair, Pair)] {
        &self.edges
    }

    /// Condition (F): equal defined products are identified.
    pub fn satisfies_f(&self) -> bool {
        let n = self.base.semigroup().size();
        let mut seen: Vec<Option<usize>> = vec![None; self.base.size()];
        for a in 0..self.base.size() {
            for s in 0..n {
                if let Some(x) = self.base.act(a, s) {
                    let k = self.class_of(a, s);
                    match seen[x] {
                        Some(prev) if prev != k => return false,
                        _ => seen[x] = Some(k),
                    }
                }
            }
        }
        true
    }

    /// `(A⊗S, δ, *)` as a globalization triple, when `δ` exists and is an
    /// injective, verified map.
    pub fn triple(&self) -> Option<GlobalizationTriple> {
        let delta = self.delta.as_ref().filter(|d| d.verified)?;
        is_globalization(&self.base, &self.action, &delta.map).ok()
    }
}

/// Builds `A⊗S` by union-find over the generating relation.
pub fn build_tensor(base: &PartialAct) -> TensorAct {
    let sg = base.semigroup();
    let n = sg.size();
    let m = base.size();
    let mut uf = UnionFind::new(m * n);
    let mut edges = Vec::new();
    for a in 0..m {
        for u in 0..n {
            let Some(b) = base.act(a, u) else { continue };
            for t in 0..n {
                let from = (a, sg.mul(u, t));
                let to = (b, t);
                uf.union(from.0 * n + from.1, to.0 * n + to.1);
                edges.push((from, to));
            }
        }
    }
    let (class_of, count) = uf.labels();
    let mut classes = vec![Vec::new(); count];
    for (i, &k) in class_of.iter().enumerate() {
        classes[k].push((i / n, i % n));
    }
    let table = quotient_action(base, &class_of, &classes).expect("tensor action is well defined");
    let action = GlobalAct::from_flat(base.semigroup_arc().clone(), count, table)
        .expect("tensor action satisfies the action law");

    let delta = base.is_unitary().then(|| {
        let mut map = vec![usize::MAX; m];
        let mut verified = true;
        for b in 0..m {
            for t in 0..n {
                if let Some(a) = base.act(b, t) {
                    let k = class_of[b * n + t];
                    if map[a] == usize::MAX {
                        map[a] = k;
                    } else if map[a] != k {
                        verified = false;
                    }
                }
            }
        }
        Delta { map, verified }
    });

    TensorAct {
        base: base.clone(),
        class_of,
        classes,
        action,
        delta,
        edges,
    }
}

/// Action table `K*t = class(a, st)` computed from the first member of each
/// class and checked against every other member.
pub(crate) fn quotient_action(base: &PartialAct, class_of: &[usize], classes: &[Vec<Pair>]) -> Result<Vec<usize>> {
    let sg = base.semigroup();
    let n = sg.size();
    let mut table = Vec::with_capacity(classes.len() * n);
    for members in classes {
        let (a, s) = members[0];
        for t in 0..n {
            let image = class_of[a * n + sg.mul(s, t)];
            if members[1..]
                .iter()
                .any(|&(b, r)| class_of[b * n + sg.mul(r, t)] != image)
            {
                return Err(Error::WellDefinednessFailure(
                    "tensor action depends on the representative",
                ));
            }
            table.push(image);
        }
    }
    Ok(table)
}

/// Firm partial act: unitary and (F).
pub fn is_firm(base: &PartialAct) -> bool {
    base.is_unitary() && is_firm_with(&build_tensor(base))
}

/// [`is_firm`] reusing an already built tensor product.
pub fn is_firm_with(tensor: &TensorAct) -> bool {
    let f = tensor.satisfies_f();
    if tensor.base().semigroup().is_monoid() {
        debug_assert!(f, "(F) holds over monoids");
    }
    tensor.base().is_unitary() && f
}

/// Firm global act: `μ: B⊗S -> B`, `b⊗s ↦ b*s` is bijective.
pub fn is_firm_global(global: &GlobalAct) -> bool {
    let tensor = build_tensor(&global.to_partial());
    match multiplication_map(&tensor, global) {
        Some(mu) => mu.is_bijective(global.size()),
        None => false,
    }
}

fn multiplication_map(tensor: &TensorAct, global: &GlobalAct) -> Option<Morphism> {
    let mut map = Vec::with_capacity(tensor.size());
    for members in tensor.classes() {
        let (b, s) = members[0];
        let image = global.apply(b, s);
        if members.iter().any(|&(c, t)| global.apply(c, t) != image) {
            return None;
        }
        map.push(image);
    }
    Some(Morphism::new(map))
}

/// The functor on morphisms: `a⊗s ↦ f(a)⊗s`.
pub fn tensor_on_morphism(f: &Morphism, source: &TensorAct, target: &TensorAct) -> Result<Morphism> {
    if !is_morphism(f.map(), source.base(), target.base()) {
        return Err(Error::precondition("map is not a morphism of partial acts"));
    }
    let mut map = Vec::with_capacity(source.size());
    for members in source.classes() {
        let (a, s) = members[0];
        let image = target.class_of(f.apply(a), s);
        if members.iter().any(|&(b, t)| target.class_of(f.apply(b), t) != image) {
            return Err(Error::WellDefinednessFailure("T(f) depends on the representative"));
        }
        map.push(image);
    }
    let out = Morphism::new(map);
    if !is_morphism(out.map(), source.action(), target.action()) {
        return Err(Error::WellDefinednessFailure("T(f) is not equivariant"));
    }
    Ok(out)
}

/// The unit `η_A = δ`, required to be a verified map.
pub fn unit(tensor: &TensorAct) -> Result<Morphism> {
    match tensor.delta() {
        Some(d) if d.verified => Ok(Morphism::new(d.map.clone())),
        _ => Err(Error::precondition("act is not firm")),
    }
}

/// Factors `f: A -> B` through `η_A` as `g(a⊗s) = f(a)*s`, for `A` firm and
/// strong and `B` a firm global act.
pub fn reflection_factor(tensor: &TensorAct, target: &GlobalAct, f: &Morphism) -> Result<Morphism> {
    let base = tensor.base();
    if !base.is_strong() {
        return Err(Error::precondition("act is not strong"));
    }
    if !is_firm_with(tensor) {
        return Err(Error::precondition("act is not firm"));
    }
    if base.semigroup() != target.semigroup() {
        return Err(Error::SemigroupMismatch);
    }
    if !is_firm_global(target) {
        return Err(Error::precondition("target global act is not firm"));
    }
    if !is_morphism(f.map(), base, target) {
        return Err(Error::precondition("map is not a morphism of partial acts"));
    }
    let mut map = Vec::with_capacity(tensor.size());
    for members in tensor.classes() {
        let (a, s) = members[0];
        let image = target.apply(f.apply(a), s);
        if members.iter().any(|&(b, t)| target.apply(f.apply(b), t) != image) {
            return Err(Error::WellDefinednessFailure(
                "reflection factor depends on the representative",
            ));
        }
        map.push(image);
    }
    let g = Morphism::new(map);
    let eta = unit(tensor)?;
    if !is_morphism(g.map(), tensor.action(), target) || eta.then(&g) != *f {
        return Err(Error::WellDefinednessFailure("reflection triangle does not commute"));
    }
    Ok(g)
}

/// All morphisms `g: A⊗S -> B` with `g∘η_A = f`.
pub fn reflection_factors(tensor: &TensorAct, target: &GlobalAct, f: &Morphism, bound: u64) -> Result<Vec<Morphism>> {
    let eta = unit(tensor)?;
    let mut fixed = vec![None; tensor.size()];
    for (a, &k) in eta.map().iter().enumerate() {
        fixed[k] = Some(f.apply(a));
    }
    enumerate_morphisms_fixing(tensor.action(), target, &fixed, bound)
}

/// Comparison `A⊗S -> A⊗S¹`, `a⊗s ↦ a⊗s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorComparison {
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub map: Morphism,
    pub tensor_size: usize,
    pub adjoined_size: usize,
}

pub fn compare_with_adjoined_tensor(base: &PartialAct) -> Result<TensorComparison> {
    let adjoined = adjoin_identity_act(base)?;
    let small = build_tensor(base);
    let big = build_tensor(&adjoined);
    let mut well_defined = true;
    let mut map = Vec::with_capacity(small.size());
    for members in small.classes() {
        let (a, s) = members[0];
        let image = big.class_of(a, s);
        well_defined &= members.iter().all(|&(b, t)| big.class_of(b, t) == image);
        map.push(image);
    }
    let map = Morphism::new(map);
    Ok(TensorComparison {
        well_defined,
        injective: map.is_injective(),
        surjective: map.is_surjective(big.size()),
        tensor_size: small.size(),
        adjoined_size: big.size(),
        map,
    })
}
