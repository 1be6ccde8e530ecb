//! Globalization certificates and the canonical morphisms between
//! generated globalizations.
//!
//! A globalization of a partial act `A` is a global act `B` with an
//! injective `ι: A -> B` such that
//!
//! * (G1) `a·s` is defined iff `ι(a)*s ∈ ι(A)`,
//! * (G2) `ι(a·s) = ι(a)*s` whenever `a·s` is defined.
//!
//! It is generated by `A` when every `b ∈ B` is some `ι(a)*s`. Morphisms of
//! globalizations are equivariant maps commuting with the embeddings.

use crate::act::{Act, GlobalAct, PartialAct};
use crate::error::{Error, Result};
use crate::hom::{build_hom, is_nonsingular, HomAct};
use crate::morphism::{enumerate_morphisms_fixing, is_morphism, Morphism};
use crate::tensor::{build_tensor, is_firm_with, TensorAct};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificates {
    pub g1: bool,
    pub g2: bool,
    pub a_generated: bool,
}

/// `(B, ι, *)` together with its decided certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalizationTriple {
    base: PartialAct,
    global: GlobalAct,
    iota: Vec<usize>,
    certificates: Certificates,
}

impl GlobalizationTriple {
    pub fn base(&self) -> &PartialAct {
        &self.base
    }

    pub fn global(&self) -> &GlobalAct {
        &self.global
    }

    pub fn iota(&self) -> &[usize] {
        &self.iota
    }

    pub fn certificates(&self) -> Certificates {
        self.certificates
    }

    /// (G1) and (G2) both hold.
    pub fn is_globalization(&self) -> bool {
        self.certificates.g1 && self.certificates.g2
    }

    pub fn is_a_generated(&self) -> bool {
        self.is_globalization() && self.certificates.a_generated
    }

    /// Decompositions `(a, s)` with `ι(a)*s = b`, for every `b`.
    fn decompositions(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.global.semigroup().size();
        let mut out = vec![Vec::new(); self.global.size()];
        for (a, &ia) in self.iota.iter().enumerate() {
            for s in 0..n {
                out[self.global.apply(ia, s)].push((a, s));
            }
        }
        out
    }
}

/// Decides (G1), (G2) and generation for `(B, ι)`.
pub fn is_globalization(base: &PartialAct, global: &GlobalAct, iota: &[usize]) -> Result<GlobalizationTriple> {
    if base.semigroup() != global.semigroup() {
        return Err(Error::SemigroupMismatch);
    }
    if iota.len() != base.size() {
        return Err(Error::TableShape {
            what: "embedding",
            expected: base.size(),
            found: iota.len(),
        });
    }
    if let Some(&bad) = iota.iter().find(|&&b| b >= global.size()) {
        return Err(Error::IndexOutOfRange {
            what: "embedding image",
            index: bad,
            bound: global.size(),
        });
    }
    let mut preimage = vec![None; global.size()];
    for (a, &b) in iota.iter().enumerate() {
        if let Some(prev) = preimage[b] {
            return Err(Error::IotaNotInjective { a: prev, b: a });
        }
        preimage[b] = Some(a);
    }

    let n = base.semigroup().size();
    let mut g1 = true;
    let mut g2 = true;
    let mut reached = vec![false; global.size()];
    for a in 0..base.size() {
        for s in 0..n {
            let image = global.apply(iota[a], s);
            reached[image] = true;
            match base.act(a, s) {
                Some(b) => {
                    g1 &= preimage[image].is_some();
                    g2 &= iota[b] == image;
                }
                None => g1 &= preimage[image].is_none(),
            }
        }
    }
    Ok(GlobalizationTriple {
        base: base.clone(),
        global: global.clone(),
        iota: iota.to_vec(),
        certificates: Certificates {
            g1,
            g2,
            a_generated: reached.into_iter().all(|r| r),
        },
    })
}

/// The subact `C = {ι(a)*s}` of a globalization of a unitary act; the unique
/// generated globalization of `A` inside `B`.
pub fn a_generated_subact(triple: &GlobalizationTriple) -> Result<GlobalizationTriple> {
    if !triple.is_globalization() {
        return Err(Error::NotAGlobalization);
    }
    if !triple.base.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let global = &triple.global;
    let n = global.semigroup().size();
    let mut inside = vec![false; global.size()];
    for &ia in &triple.iota {
        for s in 0..n {
            inside[global.apply(ia, s)] = true;
        }
    }
    let members: Vec<usize> = (0..global.size()).filter(|&b| inside[b]).collect();
    let mut position = vec![usize::MAX; global.size()];
    for (i, &b) in members.iter().enumerate() {
        position[b] = i;
    }
    let mut table = Vec::with_capacity(members.len() * n);
    for &b in &members {
        for s in 0..n {
            let image = position[global.apply(b, s)];
            if image == usize::MAX {
                return Err(Error::WellDefinednessFailure("generated subset is not a subact"));
            }
            table.push(image);
        }
    }
    let sub = GlobalAct::from_flat(global.semigroup_arc().clone(), members.len(), table)?;
    let iota: Vec<usize> = triple.iota.iter().map(|&b| position[b]).collect();
    // ι(A) ⊆ C because A is unitary.
    if iota.contains(&usize::MAX) {
        return Err(Error::WellDefinednessFailure("embedding leaves the generated subact"));
    }
    is_globalization(&triple.base, &sub, &iota)
}

fn check_same_base(expected: &PartialAct, triple: &GlobalizationTriple) -> Result<()> {
    if expected != triple.base() {
        return Err(Error::precondition("triple is over a different partial act"));
    }
    Ok(())
}

/// The unique `φ: A⊗S -> B` with `φ∘δ = ι`, namely `φ(a⊗s) = ι(a)*s`.
pub fn canonical_from_tensor(tensor: &TensorAct, triple: &GlobalizationTriple) -> Result<Morphism> {
    let base = tensor.base();
    check_same_base(base, triple)?;
    if !base.is_strong() {
        return Err(Error::precondition("act is not strong"));
    }
    if !is_firm_with(tensor) {
        return Err(Error::precondition("act is not firm"));
    }
    if !triple.is_globalization() {
        return Err(Error::NotAGlobalization);
    }
    let global = triple.global();
    let mut map = Vec::with_capacity(tensor.size());
    for members in tensor.classes() {
        let (a, s) = members[0];
        let image = global.apply(triple.iota[a], s);
        if members.iter().any(|&(b, t)| global.apply(triple.iota[b], t) != image) {
            return Err(Error::WellDefinednessFailure(
                "a⊗s ↦ ι(a)*s depends on the representative",
            ));
        }
        map.push(image);
    }
    let phi = Morphism::new(map);
    let delta = &tensor.delta().expect("firm acts have δ").map;
    let commutes = delta.iter().zip(&triple.iota).all(|(&d, &i)| phi.apply(d) == i);
    if !commutes || !is_morphism(phi.map(), tensor.action(), global) {
        return Err(Error::WellDefinednessFailure(
            "canonical map from A⊗S is not a morphism",
        ));
    }
    Ok(phi)
}

/// The unique `φ: B -> A^S` with `φ∘ι = λ`, namely `φ(ι(a)*s) = f_{a,s}`.
pub fn canonical_to_hom(hom: &HomAct, triple: &GlobalizationTriple) -> Result<Morphism> {
    let base = hom.base();
    check_same_base(base, triple)?;
    if !base.is_unitary() {
        return Err(Error::precondition("act is not unitary"));
    }
    if !is_nonsingular(base) {
        return Err(Error::precondition("act is not nonsingular"));
    }
    if !triple.is_globalization() {
        return Err(Error::NotAGlobalization);
    }
    if !triple.certificates.a_generated {
        return Err(Error::NotAGenerated);
    }
    let mut map = Vec::with_capacity(triple.global.size());
    for pairs in triple.decompositions() {
        let (a, s) = pairs[0];
        let image = hom.index_of_pair(a, s);
        if pairs.iter().any(|&(b, t)| hom.index_of_pair(b, t) != image) {
            return Err(Error::WellDefinednessFailure(
                "ι(a)*s ↦ f_{a,s} depends on the decomposition",
            ));
        }
        map.push(image);
    }
    let phi = Morphism::new(map);
    let lambda = hom.lambda().expect("unitary acts have λ");
    let commutes = triple.iota.iter().zip(lambda).all(|(&i, &l)| phi.apply(i) == l);
    if !commutes || !is_morphism(phi.map(), triple.global(), hom.action()) {
        return Err(Error::WellDefinednessFailure("canonical map to A^S is not a morphism"));
    }
    Ok(phi)
}

/// Checks `A⊗S -> B -> A^S` against the direct `a⊗s ↦ f_{a,s}` and all three
/// triangles through `δ`, `ι` and `λ`.
pub fn check_triangle(base: &PartialAct, triple: &GlobalizationTriple) -> Result<bool> {
    let tensor = build_tensor(base);
    let hom = build_hom(base)?;
    check_triangle_with(&tensor, &hom, triple)
}

/// [`check_triangle`] with prebuilt constructions.
pub fn check_triangle_with(tensor: &TensorAct, hom: &HomAct, triple: &GlobalizationTriple) -> Result<bool> {
    let base = tensor.base();
    if hom.base() != base {
        return Err(Error::precondition("constructions are over different acts"));
    }
    if !base.is_strong() || !is_firm_with(tensor) || !is_nonsingular(base) {
        return Err(Error::precondition("act must be firm, nonsingular and strong"));
    }
    let to_b = canonical_from_tensor(tensor, triple)?;
    let to_hom = canonical_to_hom(hom, triple)?;
    let composite = to_b.then(&to_hom);

    let direct: Vec<usize> = tensor
        .classes()
        .iter()
        .map(|members| hom.index_of_pair(members[0].0, members[0].1))
        .collect();
    let delta = &tensor.delta().expect("firm acts have δ").map;
    let lambda = hom.lambda().expect("unitary acts have λ");
    let iota = triple.iota();

    let ok = composite.map() == direct.as_slice()
        && (0..base.size()).all(|a| {
            to_b.apply(delta[a]) == iota[a]
                && to_hom.apply(iota[a]) == lambda[a]
                && composite.apply(delta[a]) == lambda[a]
        });
    Ok(ok)
}

/// The embedding-compatible morphism `t1 -> t2` when `t1` is generated:
/// `ι1(a)*s ↦ ι2(a)*s`, if that is well defined and equivariant.
pub fn generated_morphism(t1: &GlobalizationTriple, t2: &GlobalizationTriple) -> Option<Morphism> {
    if t1.base != t2.base || !t1.certificates.a_generated {
        return None;
    }
    let mut map = Vec::with_capacity(t1.global.size());
    for pairs in t1.decompositions() {
        let (a, s) = pairs[0];
        let image = t2.global.apply(t2.iota[a], s);
        if pairs.iter().any(|&(b, r)| t2.global.apply(t2.iota[b], r) != image) {
            return None;
        }
        map.push(image);
    }
    is_morphism(&map, &t1.global, &t2.global).then(|| Morphism::new(map))
}

/// All equivariant maps `t1 -> t2` commuting with the embeddings, by search.
pub fn embedding_compatible_morphisms(
    t1: &GlobalizationTriple,
    t2: &GlobalizationTriple,
    bound: u64,
) -> Result<Vec<Morphism>> {
    if t1.base != t2.base {
        return Err(Error::precondition("triples are over different partial acts"));
    }
    let mut fixed = vec![None; t1.global.size()];
    for (&b, &c) in t1.iota.iter().zip(&t2.iota) {
        fixed[b] = Some(c);
    }
    enumerate_morphisms_fixing(&t1.global, &t2.global, &fixed, bound)
}

/// Isomorphism of globalizations: an invertible embedding-compatible
/// morphism. Between generated triples this is mutual existence of the
/// canonical morphisms; otherwise a bijective compatible morphism is
/// searched for.
pub fn are_isomorphic_globalizations(t1: &GlobalizationTriple, t2: &GlobalizationTriple, bound: u64) -> Result<bool> {
    if t1.base != t2.base || t1.global.size() != t2.global.size() {
        return Ok(false);
    }
    if t1.is_a_generated() && t2.is_a_generated() {
        return Ok(generated_morphism(t1, t2).is_some() && generated_morphism(t2, t1).is_some());
    }
    let size = t2.global.size();
    Ok(embedding_compatible_morphisms(t1, t2, bound)?
        .iter()
        .any(|f| f.is_bijective(size)))
}
