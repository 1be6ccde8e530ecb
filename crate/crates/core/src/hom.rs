//! The Hom-set globalization `A^S`.
//!
//! `Hom_p(S, A)` is the set of partial maps `f: S -> A` with
//! `f(st) = f(s)·t` whenever `s, st ∈ dom f`; `S` acts on it by
//! `(f*s)(t) = f(st)`. The functions `f_{a,s}(t) = a·st` form the subact
//! `A^S`, and `λ_a = f_{b,s}` for any `a = b·s` embeds a unitary strong act
//! into it. For unitary, nonsingular and strong acts `(A^S, λ)` is the
//! terminal generated globalization.

use std::collections::HashMap;
use std::fmt;

use crate::act::{adjoin_identity_act, Act, GlobalAct, PartialAct};
use crate::error::{Error, Result};
use crate::glob::{is_globalization, GlobalizationTriple};
use crate::morphism::{is_morphism, Morphism};

/// A partial function `S -> A`, stored densely: `values[t]` is `f(t)` or
/// `None` outside the domain. The dense form is canonical, so structural
/// equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialFn {
    values: Vec<Option<usize>>,
}

impl fmt::Debug for PartialFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

impl PartialFn {
    pub fn new(values: Vec<Option<usize>>) -> Self {
        PartialFn { values }
    }

    /// The function `0` with empty domain on a semigroup of order `n`.
    pub fn zero(n: usize) -> Self {
        PartialFn { values: vec![None; n] }
    }

    pub fn get(&self, t: usize) -> Option<usize> {
        self.values[t]
    }

    pub fn values(&self) -> &[Option<usize>] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().enumerate().filter_map(|(t, v)| v.map(|_| t))
    }

    /// Canonical listing as sorted `(s, f(s))` pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(t, v)| v.map(|x| (t, x)))
            .collect()
    }
}

/// Membership in `Hom_p(S, A)`.
pub fn is_in_hom_p(f: &PartialFn, act: &PartialAct) -> bool {
    let sg = act.semigroup();
    let n = sg.size();
    if f.values.len() != n || f.values.iter().flatten().any(|&x| x >= act.size()) {
        return false;
    }
    (0..n).all(|s| match f.get(s) {
        None => true,
        Some(fs) => (0..n).all(|t| match f.get(sg.mul(s, t)) {
            None => true,
            Some(fst) => act.act(fs, t) == Some(fst),
        }),
    })
}

/// `f*s` with `dom(f*s) = {t : st ∈ dom f}` and `(f*s)(t) = f(st)`.
pub fn act_on_hom_p(act: &PartialAct, f: &PartialFn, s: usize) -> Result<PartialFn> {
    if !is_in_hom_p(f, act) {
        return Err(Error::NotInHomP);
    }
    if s >= act.semigroup().size() {
        return Err(Error::IndexOutOfRange {
            what: "semigroup element",
            index: s,
            bound: act.semigroup().size(),
        });
    }
    Ok(shift(act, f, s))
}

fn shift(act: &PartialAct, f: &PartialFn, s: usize) -> PartialFn {
    let sg = act.semigroup();
    PartialFn {
        values: (0..sg.size()).map(|t| f.get(sg.mul(s, t))).collect(),
    }
}

/// `f_{a,s}`: `t ↦ a·st` where defined.
pub fn f_as(act: &PartialAct, a: usize, s: usize) -> PartialFn {
    let sg = act.semigroup();
    PartialFn {
        values: (0..sg.size()).map(|t| act.act(a, sg.mul(s, t))).collect(),
    }
}

/// `λ_a`: `t ↦ a·t` where defined.
pub fn lambda_of(act: &PartialAct, a: usize) -> PartialFn {
    PartialFn {
        values: (0..act.semigroup().size()).map(|t| act.act(a, t)).collect(),
    }
}

/// Nonsingular: `f_{a,s} = f_{b,t}` with `a·s` defined forces `b·t` defined
/// and equal to `a·s`.
pub fn is_nonsingular(act: &PartialAct) -> bool {
    let n = act.semigroup().size();
    let mut product_of: HashMap<PartialFn, Option<usize>> = HashMap::new();
    let mut nonsingular = true;
    'outer: for a in 0..act.size() {
        for s in 0..n {
            let product = act.act(a, s);
            let seen = *product_of.entry(f_as(act, a, s)).or_insert(product);
            if seen != product {
                nonsingular = false;
                break 'outer;
            }
        }
    }
    debug_assert!(
        nonsingular || !act.semigroup().is_monoid(),
        "acts over monoids are nonsingular"
    );
    nonsingular
}

/// The global act `A^S` with its embedding `λ`.
#[derive(Debug, Clone)]
pub struct HomAct {
    base: PartialAct,
    elements: Vec<PartialFn>,
    representatives: Vec<(usize, usize)>,
    index: HashMap<PartialFn, usize>,
    action: GlobalAct,
    lambda: Option<Vec<usize>>,
    zero_index: Option<usize>,
}

impl HomAct {
    pub fn base(&self) -> &PartialAct {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Distinct `f_{a,s}` in order of their first `(a, s)`.
    pub fn elements(&self) -> &[PartialFn] {
        &self.elements
    }

    /// The first `(a, s)` with `f_{a,s}` equal to element `i`.
    pub fn representative(&self, i: usize) -> (usize, usize) {
        self.representatives[i]
    }

    pub fn index_of(&self, f: &PartialFn) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Index of `f_{a,s}`.
    pub fn index_of_pair(&self, a: usize, s: usize) -> usize {
        self.index[&f_as(&self.base, a, s)]
    }

    pub fn action(&self) -> &GlobalAct {
        &self.action
    }

    /// `λ` as element indices; present only for unitary acts.
    pub fn lambda(&self) -> Option<&[usize]> {
        self.lambda.as_deref()
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.zero_index
    }

    /// `(A^S, λ, *)` as a globalization triple when `λ` exists and is
    /// injective.
    pub fn triple(&self) -> Option<GlobalizationTriple> {
        let lambda = self.lambda.as_ref()?;
        is_globalization(&self.base, &self.action, lambda).ok()
    }
}

/// Builds `A^S` for a strong act.
///
/// The action on each element is computed from its stored representative
/// `(a, s)` as `f_{a,st}` and checked against every other representative.
pub fn build_hom(act: &PartialAct) -> Result<HomAct> {
    if !act.is_strong() {
        return Err(Error::NotStrong);
    }
    let sg = act.semigroup();
    let n = sg.size();
    let m = act.size();

    let mut elements = Vec::new();
    let mut representatives = Vec::new();
    let mut index: HashMap<PartialFn, usize> = HashMap::new();
    let mut pair_index = Vec::with_capacity(m * n);
    for a in 0..m {
        for s in 0..n {
            let f = f_as(act, a, s);
            let i = *index.entry(f.clone()).or_insert_with(|| {
                elements.push(f);
                representatives.push((a, s));
                elements.len() - 1
            });
            pair_index.push(i);
        }
    }

    let mut table = vec![usize::MAX; elements.len() * n];
    for a in 0..m {
        for s in 0..n {
            let i = pair_index[a * n + s];
            for t in 0..n {
                let image = pair_index[a * n + sg.mul(s, t)];
                let cell = &mut table[i * n + t];
                if *cell == usize::MAX {
                    *cell = image;
                } else if *cell != image {
                    return Err(Error::WellDefinednessFailure(
                        "A^S action depends on the representative",
                    ));
                }
            }
        }
    }
    let action = GlobalAct::from_flat(act.semigroup_arc().clone(), elements.len(), table)
        .map_err(|_| Error::WellDefinednessFailure("A^S action violates the action law"))?;

    let lambda = if act.is_unitary() {
        let mut map = Vec::with_capacity(m);
        for a in 0..m {
            match index.get(&lambda_of(act, a)) {
                Some(&i) => map.push(i),
                None => return Err(Error::WellDefinednessFailure("λ_a is not of the form f_{b,s}")),
            }
        }
        Some(map)
    } else {
        None
    };
    let zero_index = index.get(&PartialFn::zero(n)).copied();

    Ok(HomAct {
        base: act.clone(),
        elements,
        representatives,
        index,
        action,
        lambda,
        zero_index,
    })
}

/// The globalization of a partially defined act on `A ∪ {c}` with `c = m`
/// absorbing and `a∘s = c` wherever `a·s` is undefined.
pub fn one_point_globalization(act: &PartialAct) -> Result<GlobalizationTriple> {
    if !act.is_partially_defined() {
        return Err(Error::NotPartiallyDefined);
    }
    let n = act.semigroup().size();
    let m = act.size();
    let c = m;
    let mut table = Vec::with_capacity((m + 1) * n);
    for a in 0..m {
        table.extend((0..n).map(|s| act.act(a, s).unwrap_or(c)));
    }
    table.extend(std::iter::repeat_n(c, n));
    let global = GlobalAct::from_flat(act.semigroup_arc().clone(), m + 1, table)
        .map_err(|_| Error::WellDefinednessFailure("one-point extension is not an action"))?;
    let iota: Vec<usize> = (0..m).collect();
    is_globalization(act, &global, &iota)
}

/// Outcome of comparing `A^S` with the one-point globalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isom1 {
    pub holds: bool,
    /// `λ_a ↦ a`, `0 ↦ c`, as a map from `A^S` to `A ∪ {c}`.
    pub iso: Option<Morphism>,
}

/// For a nonsingular, unitary, partially defined, non-global act: checks
/// `A^S = λ(A) ∪ {0}` and that `λ_a ↦ a`, `0 ↦ c` is an isomorphism onto
/// the one-point globalization.
pub fn check_isom1(act: &PartialAct) -> Result<Isom1> {
    if !is_nonsingular(act) {
        return Err(Error::precondition("act is not nonsingular"));
    }
    if !act.is_unitary() {
        return Err(Error::precondition("act is not unitary"));
    }
    if !act.is_partially_defined() {
        return Err(Error::precondition("act is not partially defined"));
    }
    if act.is_global() {
        return Err(Error::precondition("act is global"));
    }
    let hom = build_hom(act)?;
    let point = one_point_globalization(act)?;
    let lambda = hom.lambda().expect("unitary acts have λ");
    let m = act.size();
    let c = m;

    let fail = Ok(Isom1 {
        holds: false,
        iso: None,
    });
    let Some(zero) = hom.zero_index() else { return fail };
    let mut preimage = vec![None; hom.size()];
    for (a, &i) in lambda.iter().enumerate() {
        if preimage[i].is_some() {
            return fail;
        }
        preimage[i] = Some(a);
    }
    if preimage[zero].is_some() {
        return fail;
    }
    preimage[zero] = Some(c);
    // A^S = λ(A) ∪ {0} exactly when every element got a preimage.
    let Some(map) = preimage.into_iter().collect::<Option<Vec<_>>>() else {
        return fail;
    };
    let iso = Morphism::new(map);
    let holds = iso.is_bijective(m + 1)
        && is_morphism(iso.map(), hom.action(), point.global())
        && lambda.iter().enumerate().all(|(a, &i)| iso.apply(i) == point.iota()[a]);
    Ok(Isom1 {
        holds,
        iso: holds.then_some(iso),
    })
}

/// Comparison `C -> A^S` where `C ⊆ A^{S¹}` holds the `f_{a,s}` with `s ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomComparison {
    pub well_defined: bool,
    pub surjective: bool,
    pub injective: bool,
    /// `C` is all of `A^{S¹}`.
    pub total_on_c: bool,
    pub c_size: usize,
    pub adjoined_size: usize,
    pub hom_size: usize,
}

impl HomComparison {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.total_on_c
    }
}

pub fn compare_with_adjoined_hom(act: &PartialAct) -> Result<HomComparison> {
    let adjoined = adjoin_identity_act(act)?;
    let small = build_hom(act)?;
    let big = build_hom(&adjoined)?;
    let n = act.semigroup().size();

    // image[i] for each element i of A^{S¹} lying in C.
    let mut image: Vec<Option<usize>> = vec![None; big.size()];
    let mut well_defined = true;
    for a in 0..act.size() {
        for s in 0..n {
            let i = big.index_of_pair(a, s);
            let j = small.index_of_pair(a, s);
            match image[i] {
                Some(prev) if prev != j => well_defined = false,
                _ => image[i] = Some(j),
            }
        }
    }
    let c: Vec<usize> = image.iter().flatten().copied().collect();
    let mut hit = vec![false; small.size()];
    for &j in &c {
        hit[j] = true;
    }
    let mut sorted = c.clone();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(HomComparison {
        well_defined,
        surjective: hit.iter().all(|&h| h),
        injective: sorted.len() == c.len(),
        total_on_c: c.len() == big.size(),
        c_size: c.len(),
        adjoined_size: big.size(),
        hom_size: small.size(),
    })
}

/// All of `Hom_p(S, A)` by filtering the `(m+1)^n` partial maps.
pub fn enumerate_hom_p(act: &PartialAct, bound: u64) -> Result<Vec<PartialFn>> {
    let n = act.semigroup().size();
    let m = act.size();
    let size = ((m + 1) as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > bound as u128 {
        return Err(Error::SearchSpaceTooLarge { size, bound });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let f = PartialFn {
            values: digits.iter().map(|&d| d.checked_sub(1)).collect(),
        };
        if is_in_hom_p(&f, act) {
            out.push(f);
        }
        // Odometer over {undefined, 0, .., m-1}^n.
        let mut i = n;
        loop {
            if i == 0 {
                if act.is_strong() {
                    debug_assert!((0..m).all(|a| (0..n).all(|s| out.contains(&f_as(act, a, s)))));
                }
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] <= m {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pf(values: &[Option<usize>]) -> PartialFn {
        PartialFn::new(values.to_vec())
    }

    #[test]
    fn shift_examples() {
        let nsub = fixtures::nsub();
        assert_eq!(act_on_hom_p(&nsub, &PartialFn::zero(4), 2).unwrap(), PartialFn::zero(4));
        let lambda2 = lambda_of(&nsub, 1);
        assert_eq!(lambda2, pf(&[Some(1), Some(0), None, None]));
        assert_eq!(
            act_on_hom_p(&nsub, &lambda2, 1).unwrap(),
            pf(&[Some(0), None, None, None])
        );

        let sl2 = fixtures::sl2();
        let lambda_b = lambda_of(&sl2, 1);
        assert_eq!(act_on_hom_p(&sl2, &lambda_b, 1).unwrap(), lambda_b);
    }

    #[test]
    fn shift_rejects_non_members() {
        let nsub = fixtures::nsub();
        // 1 ↦ 1 and x ↦ 1 would need 1·x = 1.
        let bad = pf(&[Some(0), Some(0), None, None]);
        assert_eq!(act_on_hom_p(&nsub, &bad, 0), Err(Error::NotInHomP));
    }

    #[test]
    fn f_as_examples() {
        assert!(f_as(&fixtures::sl2(), 0, 1).is_zero());
        assert!(f_as(&fixtures::nsub(), 0, 1).is_zero());
        assert_eq!(f_as(&fixtures::nsub(), 1, 0), lambda_of(&fixtures::nsub(), 1));
    }

    #[test]
    fn build_hom_examples() {
        let h = build_hom(&fixtures::triv()).unwrap();
        assert_eq!(h.size(), 1);

        let h = build_hom(&fixtures::sl2()).unwrap();
        assert_eq!(
            h.elements(),
            &[pf(&[Some(0), None]), PartialFn::zero(2), pf(&[Some(1), Some(1)])]
        );
        assert_eq!(h.lambda(), Some(&[0, 2][..]));
        assert_eq!(h.zero_index(), Some(1));

        let h = build_hom(&fixtures::nsub()).unwrap();
        assert_eq!(h.size(), 3);
        assert_eq!(
            h.elements(),
            &[
                pf(&[Some(0), None, None, None]),
                PartialFn::zero(4),
                pf(&[Some(1), Some(0), None, None]),
            ]
        );
        assert_eq!(h.zero_index(), Some(1));
    }

    #[test]
    fn non_unitary_acts_have_no_lambda() {
        let act = fixtures::l2_empty();
        let h = build_hom(&act).unwrap();
        assert!(h.lambda().is_none());
        assert!(h.triple().is_none());
    }

    #[test]
    fn nonsingular_examples() {
        assert!(is_nonsingular(&fixtures::sl2()));
        assert!(is_nonsingular(&fixtures::nsub()));
    }

    #[test]
    fn one_point_examples() {
        let g = one_point_globalization(&fixtures::sl2()).unwrap();
        assert_eq!(g.global().rows(), vec![vec![0, 2], vec![1, 1], vec![2, 2]]);
        assert!(g.is_globalization());

        let g = one_point_globalization(&fixtures::nsub()).unwrap();
        assert_eq!(g.global().size(), 3);
        assert!(g.is_globalization() && g.certificates().a_generated);

        let g = one_point_globalization(&fixtures::triv()).unwrap();
        assert_eq!(g.global().size(), 2);
        assert!(g.is_globalization() && !g.certificates().a_generated);

        assert_eq!(
            one_point_globalization(&fixtures::z2()).unwrap_err(),
            Error::NotPartiallyDefined
        );
    }

    #[test]
    fn isom1_examples() {
        let r = check_isom1(&fixtures::sl2()).unwrap();
        assert!(r.holds);
        assert_eq!(r.iso.unwrap().map(), &[0, 2, 1]);
        assert!(check_isom1(&fixtures::nsub()).unwrap().holds);
        assert_eq!(
            check_isom1(&fixtures::triv()).unwrap_err(),
            Error::precondition("act is global")
        );
    }

    #[test]
    fn adjoined_hom_comparison() {
        let c = compare_with_adjoined_hom(&fixtures::sl2()).unwrap();
        assert!(c.well_defined && c.surjective && c.injective && c.total_on_c);
        let c = compare_with_adjoined_hom(&fixtures::l2_empty()).unwrap();
        assert!(c.well_defined && !c.total_on_c);
    }

    #[test]
    fn hom_p_enumeration() {
        let all = enumerate_hom_p(&fixtures::triv(), 100).unwrap();
        assert_eq!(all, vec![PartialFn::zero(1), pf(&[Some(0)])]);

        let sl2 = fixtures::sl2();
        let all = enumerate_hom_p(&sl2, 100).unwrap();
        for f in build_hom(&sl2).unwrap().elements() {
            assert!(all.contains(f));
        }

        let z2 = fixtures::z2();
        let all = enumerate_hom_p(&z2, 100).unwrap();
        assert!(all.contains(&pf(&[Some(0), None])));
        assert!(all.contains(&pf(&[None, Some(0)])));
        assert_eq!(f_as(&z2, 0, 1), pf(&[None, Some(0)]));
    }
}
