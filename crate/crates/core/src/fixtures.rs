//! Small named partial acts used throughout the tests and documentation.
//!
//! | name       | semigroup                       | act                                      |
//! |------------|---------------------------------|------------------------------------------|
//! | `triv`     | `{1}`                           | `{a}`, `a·1 = a`                         |
//! | `sl2`      | `{1, e}`, `ee = e`              | `{a, b}`, `a·1 = a`, `b·1 = b·e = b`     |
//! | `z2`       | `{1, g}`, `gg = 1`              | `{a}`, `a·1 = a`                         |
//! | `nsub`     | `{1, x, x², x³}`, `x⁴ = x³`     | `{1, 2}`, `1·1 = 1`, `2·1 = 2`, `2·x = 1` |
//! | `l2_empty` | left zero `{x, y}`              | `{a}`, nothing defined                   |
//! | `not_firm` | right zero `{x, y}`             | `{a}`, `a·x = a·y = a`                   |
//! | `singular` | null `{z, w}`, all products `z` | `{a, b}`, `a·z = a·w = b·z = a`          |
//!
//! `nsub` is a finite stand-in for subtraction on the positive integers.

use std::sync::Arc;

use crate::act::PartialAct;
use crate::semigroup::Semigroup;

fn build(semigroup: Semigroup, rows: Vec<Vec<Option<usize>>>) -> PartialAct {
    PartialAct::new(Arc::new(semigroup), rows).expect("fixture tables are valid")
}

pub fn triv() -> PartialAct {
    build(Semigroup::new(vec![vec![0]]).unwrap(), vec![vec![Some(0)]])
}

pub fn sl2() -> PartialAct {
    build(
        Semigroup::new(vec![vec![0, 1], vec![1, 1]]).unwrap(),
        vec![vec![Some(0), None], vec![Some(1), Some(1)]],
    )
}

pub fn z2() -> PartialAct {
    build(Semigroup::cyclic_group(2).unwrap(), vec![vec![Some(0), None]])
}

pub fn nsub() -> PartialAct {
    build(
        Semigroup::truncated_powers(3).unwrap(),
        vec![vec![Some(0), None, None, None], vec![Some(1), Some(0), None, None]],
    )
}

pub fn l2_empty() -> PartialAct {
    build(Semigroup::left_zero(2).unwrap(), vec![vec![None, None]])
}

/// Unitary and strong, but `a·x = a·y` while `a⊗x ≠ a⊗y`. The smallest
/// such act over a non-monoid found by exhaustive search (semigroups of order
/// at most 3, acts of size at most 3).
pub fn not_firm() -> PartialAct {
    build(
        Semigroup::new(vec![vec![0, 1], vec![0, 1]]).unwrap(),
        vec![vec![Some(0), Some(0)]],
    )
}

/// Strong but not nonsingular: `f_{a,z} = f_{b,w}` while `b·w` is
/// undefined. The smallest such act found by exhaustive search over the same
/// range.
pub fn singular() -> PartialAct {
    build(
        Semigroup::new(vec![vec![0, 0], vec![0, 0]]).unwrap(),
        vec![vec![Some(0), Some(0)], vec![Some(0), None]],
    )
}
