//! Exhaustive generation of small semigroups and acts.
//!
//! Semigroups come out up to isomorphism, acts up to renaming of the act
//! carrier. Both use backtracking with the defining laws checked on every
//! partially filled table.

use std::sync::Arc;

use itertools::Itertools;

use crate::act::{GlobalAct, PartialAct};
use crate::semigroup::Semigroup;

const UNSET: usize = usize::MAX;

/// All associative tables on `0..n`, labeled.
pub fn labeled_semigroup_tables(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut table = vec![UNSET; n * n];
    fill_semigroup(n, 0, &mut table, &mut out);
    out
}

fn fill_semigroup(n: usize, cell: usize, table: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(table.to_vec());
        return;
    }
    for v in 0..n {
        table[cell] = v;
        if associative_so_far(n, table) {
            fill_semigroup(n, cell + 1, table, out);
        }
    }
    table[cell] = UNSET;
}

fn associative_so_far(n: usize, table: &[usize]) -> bool {
    let get = |x: usize, y: usize| table[x * n + y];
    for s in 0..n {
        for t in 0..n {
            let st = get(s, t);
            if st == UNSET {
                continue;
            }
            for u in 0..n {
                let tu = get(t, u);
                if tu == UNSET {
                    continue;
                }
                let (left, right) = (get(st, u), get(s, tu));
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// One representative per isomorphism class of semigroups of order `n`: the
/// table that is least among all its relabelings.
pub fn semigroups_up_to_iso(n: usize) -> Vec<Semigroup> {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    labeled_semigroup_tables(n)
        .into_iter()
        .filter_map(|table| {
            let s = Semigroup::from_flat(n, table).expect("generated tables are associative");
            let least = perms.iter().all(|p| s.relabel(p).as_slice() >= s.table());
            least.then_some(s)
        })
        .collect()
}

/// Semigroups of order `1..=max` up to isomorphism.
pub fn semigroups_up_to(max: usize) -> Vec<Arc<Semigroup>> {
    (1..=max).flat_map(semigroups_up_to_iso).map(Arc::new).collect()
}

/// Strong partial acts of `semigroup` on `m` points, one per orbit under
/// permutations of the carrier.
///
/// For a partial act, (PA) and (S) together say that whenever `a·s` is
/// defined, `(a·s)·t` and `a·st` are both undefined or both defined and
/// equal; that is what the search enforces.
pub fn strong_acts(semigroup: &Arc<Semigroup>, m: usize) -> Vec<PartialAct> {
    let n = semigroup.size();
    let mut cells = vec![None; m * n];
    let mut assigned = vec![false; m * n];
    let mut raw = Vec::new();
    fill_act(semigroup, m, 0, &mut cells, &mut assigned, true, &mut raw);
    canonical_only(m, n, raw)
        .into_iter()
        .map(|t| PartialAct::from_flat(semigroup.clone(), m, t).expect("generated acts satisfy (PA)"))
        .collect()
}

/// Global acts of `semigroup` on `m` points up to renaming of the carrier.
pub fn global_acts(semigroup: &Arc<Semigroup>, m: usize) -> Vec<GlobalAct> {
    let n = semigroup.size();
    let mut cells = vec![None; m * n];
    let mut assigned = vec![false; m * n];
    let mut raw = Vec::new();
    fill_act(semigroup, m, 0, &mut cells, &mut assigned, false, &mut raw);
    canonical_only(m, n, raw)
        .into_iter()
        .map(|t| {
            let t = t.into_iter().map(|x| x.expect("global")).collect();
            GlobalAct::from_flat(semigroup.clone(), m, t).expect("generated acts satisfy the action law")
        })
        .collect()
}

fn fill_act(
    sg: &Semigroup,
    m: usize,
    cell: usize,
    cells: &mut [Option<usize>],
    assigned: &mut [bool],
    allow_undefined: bool,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    let n = sg.size();
    if cell == m * n {
        out.push(cells.to_vec());
        return;
    }
    let choices = (0..m).map(Some).chain(allow_undefined.then_some(None));
    for v in choices {
        cells[cell] = v;
        assigned[cell] = true;
        if strong_so_far(sg, m, cells, assigned) {
            fill_act(sg, m, cell + 1, cells, assigned, allow_undefined, out);
        }
    }
    cells[cell] = None;
    assigned[cell] = false;
}

fn strong_so_far(sg: &Semigroup, m: usize, cells: &[Option<usize>], assigned: &[bool]) -> bool {
    let n = sg.size();
    for a in 0..m {
        for s in 0..n {
            let i = a * n + s;
            let Some(b) = cells[i].filter(|_| assigned[i]) else {
                continue;
            };
            for t in 0..n {
                let (j, k) = (b * n + t, a * n + sg.mul(s, t));
                if assigned[j] && assigned[k] && cells[j] != cells[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Keeps tables that are least among their relabelings by carrier
/// permutations.
fn canonical_only(m: usize, n: usize, tables: Vec<Vec<Option<usize>>>) -> Vec<Vec<Option<usize>>> {
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    tables
        .into_iter()
        .filter(|table| {
            perms
                .iter()
                .all(|p| relabel_act(table, p, m, n).as_slice() >= table.as_slice())
        })
        .collect()
}

/// The table of the same act with each point `a` renamed `perm[a]`.
pub fn relabel_act(table: &[Option<usize>], perm: &[usize], m: usize, n: usize) -> Vec<Option<usize>> {
    let mut out = vec![None; m * n];
    for a in 0..m {
        for s in 0..n {
            out[perm[a] * n + s] = table[a * n + s].map(|b| perm[b]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_semigroup_counts() {
        let labeled: Vec<usize> = (1..=3).map(|n| labeled_semigroup_tables(n).len()).collect();
        assert_eq!(labeled, vec![1, 8, 113]);
        let iso: Vec<usize> = (1..=3).map(|n| semigroups_up_to_iso(n).len()).collect();
        assert_eq!(iso, vec![1, 5, 24]);
    }

    #[test]
    fn strong_acts_are_strong() {
        for s in semigroups_up_to(2) {
            for m in 1..=2 {
                for act in strong_acts(&s, m) {
                    assert!(act.is_strong());
                }
            }
        }
    }

    #[test]
    fn trivial_semigroup_acts() {
        let s = Arc::new(Semigroup::new(vec![vec![0]]).unwrap());
        // One point: undefined or fixed.
        assert_eq!(strong_acts(&s, 1).len(), 2);
        assert_eq!(global_acts(&s, 1).len(), 1);
        // Idempotent self-maps of two points: the identity and a constant.
        assert_eq!(global_acts(&s, 2).len(), 2);
    }
}
