//! Garside left normal form, used to decide the word problem.
//!
//! Every braid is written uniquely as `D^k A_1 ... A_r` where `D` is the
//! positive half twist, each `A_j` is a non-trivial simple braid other than
//! `D`, and every adjacent pair is left-weighted. Simple braids are stored as
//! their permutations (strand start position to end position).

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};

type Simple = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Vec<usize>>,
}

fn delta(n: usize) -> Simple {
    (0..n).rev().collect()
}

fn transposition(n: usize, i: usize) -> Simple {
    let mut p: Simple = (0..n).collect();
    p.swap(i, i + 1);
    p
}

fn then(a: &[usize], b: &[usize]) -> Simple {
    a.iter().map(|&v| b[v]).collect()
}

/// Conjugation by the half twist: `b_i -> b_{n-i}`.
fn flip(a: &[usize]) -> Simple {
    let n = a.len();
    (0..n).map(|p| n - 1 - a[n - 1 - p]).collect()
}

fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &v)| i == v)
}

fn is_delta(a: &[usize]) -> bool {
    let n = a.len();
    a.iter().enumerate().all(|(i, &v)| v == n - 1 - i)
}

/// Positions `i` (0-based pair `i, i+1`) whose strands have already crossed
/// at the end of `a`.
fn in_finish(a: &[usize], i: usize) -> bool {
    // strands now at i and i+1
    let mut inv = vec![0; a.len()];
    for (s, &p) in a.iter().enumerate() {
        inv[p] = s;
    }
    inv[i] > inv[i + 1]
}

/// Positions `i` whose strands cross in `b` (so `b` starts with `b_i`).
fn in_start(b: &[usize], i: usize) -> bool {
    b[i] > b[i + 1]
}

/// Makes the pair left-weighted by moving crossings from `b` into `a`.
/// Returns whether anything moved.
fn normalize_pair(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let mut moved = false;
        for i in 0..n.saturating_sub(1) {
            if in_start(b, i) && !in_finish(a, i) {
                let s = transposition(n, i);
                *a = then(a, &s);
                *b = then(&s, b);
                moved = true;
                changed = true;
                break;
            }
        }
        if !moved {
            return changed;
        }
    }
}

fn sweep(factors: &mut [Simple]) -> bool {
    let mut changed = false;
    for idx in (1..factors.len()).rev() {
        let (left, right) = factors.split_at_mut(idx);
        if normalize_pair(&mut left[idx - 1], &mut right[0]) {
            changed = true;
        }
    }
    changed
}

fn trim(factors: &mut Vec<Simple>) {
    while factors.last().is_some_and(|f| is_identity(f)) {
        factors.pop();
    }
}

/// Computes the left normal form of `w`.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    if n <= 1 {
        return GarsideNormalForm {
            strands: n,
            delta_power: 0,
            factors: Vec::new(),
        };
    }
    let d = delta(n);
    // b_i^{-1} = D^{-1} (D b_i^{-1}); D b_i^{-1} is simple with permutation D.s_i
    let letters = w.letters();
    let mut raw: Vec<(bool, Simple)> = letters
        .iter()
        .map(|&l| {
            let i = l.unsigned_abs() as usize - 1;
            let s = transposition(n, i);
            if l > 0 {
                (false, s)
            } else {
                (true, then(&d, &s))
            }
        })
        .collect();
    // y D^{-1} = D^{-1} flip(y): each factor is flipped once per inverse
    // letter to its right
    let mut negatives_right = 0usize;
    for (neg, simple) in raw.iter_mut().rev() {
        if negatives_right % 2 == 1 {
            *simple = flip(simple);
        }
        if *neg {
            negatives_right += 1;
        }
    }
    let mut delta_power = -(negatives_right as i64);

    let mut factors: Vec<Simple> = Vec::new();
    for (_, simple) in raw {
        if is_identity(&simple) {
            continue;
        }
        factors.push(simple);
        sweep(&mut factors);
        trim(&mut factors);
    }
    while sweep(&mut factors) {}
    trim(&mut factors);

    let leading = factors.iter().take_while(|f| is_delta(f)).count();
    delta_power += leading as i64;
    factors.drain(..leading);

    GarsideNormalForm {
        strands: n,
        delta_power,
        factors,
    }
}

pub(crate) fn simple_to_letters(perm: &[usize]) -> Vec<i32> {
    let n = perm.len();
    let mut at: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if perm[at[i]] > perm[at[i + 1]] {
                at.swap(i, i + 1);
                out.push(i as i32 + 1);
                swapped = true;
            }
        }
        if !swapped {
            return out;
        }
    }
}

impl GarsideNormalForm {
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// A word representing this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let half = BraidWord::from_letters_unchecked(n, simple_to_letters(&delta(n)));
        let mut w = half.pow(self.delta_power);
        for f in &self.factors {
            let part = BraidWord::from_letters_unchecked(n, simple_to_letters(f));
            w = w.concat(&part).expect("same strand count");
        }
        w
    }
}

/// Decides equality in the braid group.
///
/// Permutation image and exponent sum are compared first; the normal forms
/// settle the remaining cases.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    if a == b {
        return Ok(true);
    }
    if a.exponent_sum() != b.exponent_sum() || a.perm_of() != b.perm_of() {
        return Ok(false);
    }
    Ok(normal_form(a) == normal_form(b))
}
