//! Brute-force reference implementations used to cross-check the library.
//!
//! Everything here works on plain tables with the most direct algorithm
//! available: boolean relation matrices closed by Warshall's algorithm,
//! pairwise comparison instead of hashing, and full enumeration of set
//! partitions and bijections.

#![allow(dead_code, clippy::needless_range_loop)]

use globact::{Act, PartialAct};

/// A semigroup table and a partial act table, copied out of the library
/// types.
#[derive(Debug, Clone)]
pub struct Raw {
    pub n: usize,
    pub mul: Vec<usize>,
    pub m: usize,
    pub act: Vec<Option<usize>>,
}

impl Raw {
    pub fn of(a: &PartialAct) -> Self {
        let n = a.semigroup().size();
        let m = a.size();
        let mut mul = Vec::new();
        for s in 0..n {
            for t in 0..n {
                mul.push(a.semigroup().mul(s, t));
            }
        }
        let mut act = Vec::new();
        for x in 0..m {
            for s in 0..n {
                act.push(a.act(x, s));
            }
        }
        Raw { n, mul, m, act }
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.mul[s * self.n + t]
    }

    pub fn act(&self, a: usize, s: usize) -> Option<usize> {
        self.act[a * self.n + s]
    }
}

pub fn is_associative(n: usize, mul: &[usize]) -> bool {
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                if mul[mul[s * n + t] * n + u] != mul[s * n + mul[t * n + u]] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_pa(r: &Raw) -> bool {
    for a in 0..r.m {
        for s in 0..r.n {
            for t in 0..r.n {
                if let Some(b) = r.act(a, s) {
                    if let Some(c) = r.act(b, t) {
                        if r.act(a, r.mul(s, t)) != Some(c) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

pub fn is_strong(r: &Raw) -> bool {
    for a in 0..r.m {
        for s in 0..r.n {
            for t in 0..r.n {
                if let (Some(b), Some(c)) = (r.act(a, s), r.act(a, r.mul(s, t))) {
                    if r.act(b, t) != Some(c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_unitary(r: &Raw) -> bool {
    (0..r.m).all(|x| (0..r.m).any(|b| (0..r.n).any(|t| r.act(b, t) == Some(x))))
}

/// The tensor product by Warshall closure of the generating relation.
#[derive(Debug, Clone)]
pub struct OracleTensor {
    /// Classes as sorted lists of pairs, ordered by least member.
    pub classes: Vec<Vec<(usize, usize)>>,
    /// `action[k * n + t]`.
    pub action: Vec<usize>,
    /// `delta[a]` when every decomposition of `a` agrees.
    pub delta: Option<Vec<usize>>,
}

pub fn oracle_tensor(r: &Raw) -> OracleTensor {
    let (n, m) = (r.n, r.m);
    let size = n * m;
    let mut rel = vec![vec![false; size]; size];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for a in 0..m {
        for u in 0..n {
            if let Some(b) = r.act(a, u) {
                for t in 0..n {
                    let x = a * n + r.mul(u, t);
                    let y = b * n + t;
                    rel[x][y] = true;
                    rel[y][x] = true;
                }
            }
        }
    }
    for k in 0..size {
        for i in 0..size {
            if rel[i][k] {
                for j in 0..size {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut label = vec![0; size];
    for i in 0..size {
        let mut found = None;
        for j in 0..i {
            if rel[j][i] {
                found = Some(label[j]);
                break;
            }
        }
        match found {
            Some(k) => {
                label[i] = k;
                classes[k].push((i / n, i % n));
            }
            None => {
                label[i] = classes.len();
                classes.push(vec![(i / n, i % n)]);
            }
        }
    }
    let mut action = Vec::new();
    for class in &classes {
        for t in 0..n {
            let images: Vec<usize> = class.iter().map(|&(a, s)| label[a * n + r.mul(s, t)]).collect();
            assert!(
                images.iter().all(|&x| x == images[0]),
                "oracle tensor action ill defined"
            );
            action.push(images[0]);
        }
    }
    let mut delta = Some(vec![usize::MAX; m]);
    if !is_unitary(r) {
        delta = None;
    }
    if let Some(d) = delta.as_mut() {
        let mut ok = true;
        for b in 0..m {
            for t in 0..n {
                if let Some(a) = r.act(b, t) {
                    let k = label[b * n + t];
                    if d[a] == usize::MAX {
                        d[a] = k;
                    } else if d[a] != k {
                        ok = false;
                    }
                }
            }
        }
        if !ok {
            delta = None;
        }
    }
    OracleTensor { classes, action, delta }
}

/// `f_{a,s}` for every pair, as plain vectors.
pub fn oracle_functions(r: &Raw) -> Vec<Vec<Option<usize>>> {
    let mut out = Vec::new();
    for a in 0..r.m {
        for s in 0..r.n {
            out.push((0..r.n).map(|t| r.act(a, r.mul(s, t))).collect());
        }
    }
    out
}

/// Number of distinct `f_{a,s}`, by pairwise comparison.
pub fn oracle_hom_size(r: &Raw) -> usize {
    let fs = oracle_functions(r);
    (0..fs.len()).filter(|&i| (0..i).all(|j| fs[j] != fs[i])).count()
}

pub fn oracle_nonsingular(r: &Raw) -> bool {
    let fs = oracle_functions(r);
    for a in 0..r.m {
        for s in 0..r.n {
            for b in 0..r.m {
                for t in 0..r.n {
                    if fs[a * r.n + s] == fs[b * r.n + t] && r.act(a, s).is_some() && r.act(b, t) != r.act(a, s) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All set partitions of `0..k` as block labels.
pub fn all_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        let blocks = cur.iter().copied().max().map_or(0, |x| x + 1);
        for b in 0..=blocks {
            cur.push(b);
            go(i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut Vec::new(), &mut out);
    out
}

/// A quotient of the tensor product that is a generated globalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleObject {
    pub size: usize,
    pub action: Vec<usize>,
    pub iota: Vec<usize>,
}

/// Generated globalizations as quotients of `A⊗S` by every partition of
/// its carrier that is a congruence and keeps (G1), (G2) and injectivity.
pub fn oracle_quotients(r: &Raw) -> Vec<OracleObject> {
    let t = oracle_tensor(r);
    let delta = t.delta.clone().expect("oracle census needs a firm act");
    let n = r.n;
    let k = t.classes.len();
    let mut out = Vec::new();
    for p in all_partitions(k) {
        let size = p.iter().copied().max().map_or(0, |x| x + 1);
        let mut congruence = true;
        for x in 0..k {
            for y in 0..k {
                if p[x] == p[y] {
                    for s in 0..n {
                        if p[t.action[x * n + s]] != p[t.action[y * n + s]] {
                            congruence = false;
                        }
                    }
                }
            }
        }
        if !congruence {
            continue;
        }
        let iota: Vec<usize> = delta.iter().map(|&d| p[d]).collect();
        let injective = (0..r.m).all(|a| (0..r.m).all(|b| a == b || iota[a] != iota[b]));
        if !injective {
            continue;
        }
        let mut action = vec![0; size * n];
        for x in 0..k {
            for s in 0..n {
                action[p[x] * n + s] = p[t.action[x * n + s]];
            }
        }
        let mut ok = true;
        for a in 0..r.m {
            for s in 0..n {
                let image = action[iota[a] * n + s];
                let in_image = iota.contains(&image);
                match r.act(a, s) {
                    Some(b) => ok &= in_image && iota[b] == image,
                    None => ok &= !in_image,
                }
            }
        }
        if ok {
            out.push(OracleObject { size, action, iota });
        }
    }
    out
}

/// All permutations of `0..k`.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism of globalizations by trying every bijection.
pub fn oracle_isomorphic(x: &OracleObject, y: &OracleObject, n: usize) -> bool {
    if x.size != y.size || x.iota.len() != y.iota.len() {
        return false;
    }
    permutations(x.size).into_iter().any(|f| {
        x.iota.iter().zip(&y.iota).all(|(&a, &b)| f[a] == b)
            && (0..x.size).all(|b| (0..n).all(|s| f[x.action[b * n + s]] == y.action[f[b] * n + s]))
    })
}

/// Sizes of one representative per isomorphism class, sorted.
pub fn oracle_census_sizes(r: &Raw) -> Vec<usize> {
    let objects = oracle_quotients(r);
    let mut reps: Vec<&OracleObject> = Vec::new();
    for o in &objects {
        if !reps.iter().any(|q| oracle_isomorphic(q, o, r.n)) {
            reps.push(o);
        }
    }
    let mut sizes: Vec<usize> = reps.iter().map(|o| o.size).collect();
    sizes.sort();
    sizes
}

/// Counts labeled associative tables of order `n` by trying all of them.
pub fn oracle_labeled_semigroups(n: usize) -> usize {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut count = 0;
    let mut table = vec![0; cells];
    for code in 0..total {
        let mut c = code;
        for cell in table.iter_mut() {
            *cell = c % n;
            c /= n;
        }
        if is_associative(n, &table) {
            count += 1;
        }
    }
    count
}

/// Strong partial acts on `m` points over `mul`, up to renaming points, by
/// trying every table.
pub fn oracle_strong_act_count(n: usize, mul: &[usize], m: usize) -> usize {
    let cells = m * n;
    let total = (m + 1).pow(cells as u32);
    let perms = permutations(m);
    let mut canon: Vec<Vec<Option<usize>>> = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut act = vec![None; cells];
        for cell in act.iter_mut() {
            let d = c % (m + 1);
            c /= m + 1;
            *cell = if d == 0 { None } else { Some(d - 1) };
        }
        let r = Raw {
            n,
            mul: mul.to_vec(),
            m,
            act: act.clone(),
        };
        if !is_pa(&r) || !is_strong(&r) {
            continue;
        }
        let least = perms
            .iter()
            .map(|p| {
                let mut out = vec![None; cells];
                for a in 0..m {
                    for s in 0..n {
                        out[p[a] * n + s] = act[a * n + s].map(|b| p[b]);
                    }
                }
                out
            })
            .min()
            .unwrap();
        if !canon.contains(&least) {
            canon.push(least);
        }
    }
    canon.len()
}
