//! Homomorphisms from braid and ribbon braid groups onto finite (or
//! finitely described) groups, and the levelwise check of the pentagon
//! relation in them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braid::{pure_generator, BraidWord, FreeGroupWord};
use crate::error::{Error, Result};
use crate::gt::relation_iii_sides;
use crate::perm::Permutation;
use crate::ribbon::RibbonBraid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientKind {
    Symmetric,
    /// Exponent sum (and twist sum on ribbon braids).
    Abelianization,
    /// Unreduced Burau matrices over `Z/N[t]/(t^k - 1)`.
    Burau { modulus: u64, k: usize },
    /// Permutation with twists modulo `N`.
    TwistMod(u64),
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientKind::Symmetric => write!(f, "sym"),
            QuotientKind::Abelianization => write!(f, "ab"),
            QuotientKind::Burau { modulus, k } => write!(f, "burau:{modulus}:{k}"),
            QuotientKind::TwistMod(n) => write!(f, "twist:{n}"),
        }
    }
}

impl FromStr for QuotientKind {
    type Err = Error;

    /// `sym`, `ab`, `burau:N:k` or `twist:N`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |idx: usize| -> Result<u64> {
            let col = parts[..idx].iter().map(|p| p.len() + 1).sum::<usize>() + 1;
            match parts.get(idx).map(|p| p.parse::<u64>()) {
                Some(Ok(v)) if v > 0 => Ok(v),
                _ => Err(Error::parse(col, "expected a positive integer")),
            }
        };
        match parts[0] {
            "sym" if parts.len() == 1 => Ok(QuotientKind::Symmetric),
            "ab" if parts.len() == 1 => Ok(QuotientKind::Abelianization),
            "burau" if parts.len() == 3 => Ok(QuotientKind::Burau {
                modulus: num(1)?,
                k: num(2)? as usize,
            }),
            "twist" if parts.len() == 2 => Ok(QuotientKind::TwistMod(num(1)?)),
            _ => Err(Error::parse(1, format!("unknown quotient {s:?}; expected sym, ab, burau:N:k or twist:N"))),
        }
    }
}

/// An element of `Z/N[t]/(t^k - 1)`: coefficient `i` is that of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicPoly {
    pub modulus: u64,
    pub coeffs: Vec<u64>,
}

impl CyclicPoly {
    fn constant(modulus: u64, k: usize, c: i64) -> Self {
        let mut coeffs = vec![0; k];
        coeffs[0] = c.rem_euclid(modulus as i64) as u64;
        CyclicPoly { modulus, coeffs }
    }

    /// `c t^e`
    fn monomial(modulus: u64, k: usize, c: i64, e: i64) -> Self {
        let mut coeffs = vec![0; k];
        coeffs[e.rem_euclid(k as i64) as usize] = c.rem_euclid(modulus as i64) as u64;
        CyclicPoly { modulus, coeffs }
    }

    fn add(&self, o: &CyclicPoly) -> CyclicPoly {
        CyclicPoly {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| (a + b) % self.modulus)
                .collect(),
        }
    }

    fn mul(&self, o: &CyclicPoly) -> CyclicPoly {
        let k = self.coeffs.len();
        let n = self.modulus as u128;
        let mut out = vec![0u128; k];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, b) in o.coeffs.iter().enumerate() {
                let idx = (i + j) % k;
                out[idx] = (out[idx] + *a as u128 * *b as u128) % n;
            }
        }
        CyclicPoly {
            modulus: self.modulus,
            coeffs: out.into_iter().map(|c| c as u64).collect(),
        }
    }
}

impl fmt::Display for CyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Square matrix over `Z/N[t]/(t^k - 1)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BurauMatrix {
    pub size: usize,
    pub entries: Vec<CyclicPoly>,
}

impl BurauMatrix {
    fn identity(size: usize, modulus: u64, k: usize) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for r in 0..size {
            for c in 0..size {
                entries.push(CyclicPoly::constant(modulus, k, i64::from(r == c)));
            }
        }
        BurauMatrix { size, entries }
    }

    pub fn get(&self, r: usize, c: usize) -> &CyclicPoly {
        &self.entries[r * self.size + c]
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &BurauMatrix) -> Result<BurauMatrix> {
        if self.size != other.size {
            return Err(Error::ArityMismatch {
                expected: self.size,
                found: other.size,
            });
        }
        let n = self.size;
        let zero = CyclicPoly::constant(self.entries[0].modulus, self.entries[0].coeffs.len(), 0);
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = zero.clone();
                for i in 0..n {
                    acc = acc.add(&self.get(r, i).mul(other.get(i, c)));
                }
                entries.push(acc);
            }
        }
        Ok(BurauMatrix { size: n, entries })
    }

    /// Multiplies on the right by the generator image at rows `i, i+1`.
    fn mul_generator(&mut self, i: usize, inverse: bool) {
        let (modulus, k) = (self.entries[0].modulus, self.entries[0].coeffs.len());
        let mono = |c: i64, e: i64| CyclicPoly::monomial(modulus, k, c, e);
        // columns i, i+1 of M times the 2x2 block
        let block = if inverse {
            // ((0, 1), (t^-1, 1 - t^-1))
            [
                [mono(0, 0), mono(1, 0)],
                [mono(1, -1), mono(1, 0).add(&mono(-1, -1))],
            ]
        } else {
            // ((1 - t, t), (1, 0))
            [
                [mono(1, 0).add(&mono(-1, 1)), mono(1, 1)],
                [mono(1, 0), mono(0, 0)],
            ]
        };
        for r in 0..self.size {
            let a = self.get(r, i).clone();
            let b = self.get(r, i + 1).clone();
            let new_i = a.mul(&block[0][0]).add(&b.mul(&block[1][0]));
            let new_j = a.mul(&block[0][1]).add(&b.mul(&block[1][1]));
            self.entries[r * self.size + i] = new_i;
            self.entries[r * self.size + i + 1] = new_j;
        }
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.size)
            .map(|r| {
                let row: Vec<String> = (0..self.size).map(|c| self.get(r, c).to_string()).collect();
                format!("({})", row.join(", "))
            })
            .collect();
        write!(f, "({})", rows.join(", "))
    }
}

/// An image in one of the quotients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientValue {
    Perm(Permutation),
    Abelian { exponent: i64, twist: i64 },
    Burau(BurauMatrix),
    TwistMod { modulus: u64, perm: Permutation, twists: Vec<u64> },
}

impl QuotientValue {
    /// The image of `a` followed by `b`, given the images of `a` and `b`.
    pub fn then(&self, other: &QuotientValue) -> Result<QuotientValue> {
        let mismatch = || Error::NotComposable(format!("quotient values {self} and {other} differ in kind"));
        Ok(match (self, other) {
            (QuotientValue::Perm(a), QuotientValue::Perm(b)) if a.len() == b.len() => QuotientValue::Perm(a.then(b)),
            (
                QuotientValue::Abelian { exponent: e1, twist: t1 },
                QuotientValue::Abelian { exponent: e2, twist: t2 },
            ) => QuotientValue::Abelian {
                exponent: e1 + e2,
                twist: t1 + t2,
            },
            (QuotientValue::Burau(a), QuotientValue::Burau(b)) => QuotientValue::Burau(a.mul(b)?),
            (
                QuotientValue::TwistMod { modulus: n, perm: p1, twists: t1 },
                QuotientValue::TwistMod { modulus: m, perm: p2, twists: t2 },
            ) if n == m && p1.len() == p2.len() => QuotientValue::TwistMod {
                modulus: *n,
                perm: p1.then(p2),
                // twists are indexed by starting position
                twists: (0..p1.len()).map(|i| (t1[i] + t2[p1.apply(i)]) % n).collect(),
            },
            _ => return Err(mismatch()),
        })
    }
}

impl fmt::Display for QuotientValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientValue::Perm(p) => write!(f, "{p}"),
            QuotientValue::Abelian { exponent, twist } => write!(f, "{exponent} | {twist}"),
            QuotientValue::Burau(m) => write!(f, "{m}"),
            QuotientValue::TwistMod { perm, twists, .. } => {
                let t: Vec<String> = twists.iter().map(|t| t.to_string()).collect();
                write!(f, "{perm} | {}", t.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientMap {
    pub kind: QuotientKind,
    pub strands: usize,
}

impl QuotientMap {
    pub fn new(kind: QuotientKind, strands: usize) -> Self {
        QuotientMap { kind, strands }
    }

    pub fn parse(spec: &str, strands: usize) -> Result<Self> {
        Ok(QuotientMap::new(spec.parse()?, strands))
    }

    pub fn eval_braid(&self, w: &BraidWord) -> Result<QuotientValue> {
        self.eval(&RibbonBraid::from_braid(w.clone()))
    }

    pub fn eval(&self, r: &RibbonBraid) -> Result<QuotientValue> {
        if r.strands() != self.strands {
            return Err(Error::ArityMismatch {
                expected: self.strands,
                found: r.strands(),
            });
        }
        let w = r.braid();
        Ok(match self.kind {
            QuotientKind::Symmetric => QuotientValue::Perm(w.perm_of()),
            QuotientKind::Abelianization => QuotientValue::Abelian {
                exponent: w.exponent_sum(),
                twist: r.twists().iter().sum(),
            },
            QuotientKind::Burau { modulus, k } => {
                let mut m = BurauMatrix::identity(self.strands, modulus, k);
                for &l in w.letters() {
                    m.mul_generator(l.unsigned_abs() as usize - 1, l < 0);
                }
                QuotientValue::Burau(m)
            }
            QuotientKind::TwistMod(n) => QuotientValue::TwistMod {
                modulus: n,
                perm: w.perm_of(),
                twists: r.twists().iter().map(|t| t.rem_euclid(n as i64) as u64).collect(),
            },
        })
    }
}

impl fmt::Display for QuotientMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

pub fn quotient_eval(q: &QuotientMap, r: &RibbonBraid) -> Result<QuotientValue> {
    q.eval(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    /// Each level with whether both sides agree there.
    pub levels: Vec<(String, bool)>,
}

impl TowerReport {
    pub fn not_refuted(&self) -> bool {
        self.levels.iter().all(|(_, ok)| *ok)
    }
}

impl fmt::Display for TowerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |ok: bool| -> Vec<&str> {
            self.levels
                .iter()
                .filter(|(_, v)| *v == ok)
                .map(|(n, _)| n.as_str())
                .collect()
        };
        if self.not_refuted() {
            write!(f, "not refuted at levels {}", names(true).join(", "))
        } else {
            write!(f, "refuted at level {}", names(false).join(", "))
        }
    }
}

/// Evaluates both sides of the pentagon relation at each level.
pub fn tower_check_iii(f: &FreeGroupWord, levels: &[QuotientMap]) -> Result<TowerReport> {
    let (lhs, rhs) = relation_iii_sides(f, |i, j| pure_generator(4, i, j).expect("indices in range"))?;
    let mut out = Vec::new();
    for q in levels {
        if q.strands != 4 {
            return Err(Error::ArityMismatch {
                expected: 4,
                found: q.strands,
            });
        }
        out.push((q.to_string(), q.eval_braid(&lhs)? == q.eval_braid(&rhs)?));
    }
    Ok(TowerReport { levels: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.iter().copied()).unwrap()
    }

    #[test]
    fn symmetric_level() {
        let q = QuotientMap::parse("sym", 3).unwrap();
        assert_eq!(q.eval_braid(&w(3, &[1, 2, 1])).unwrap(), q.eval_braid(&w(3, &[2, 1, 2])).unwrap());
        assert_eq!(q.eval_braid(&w(3, &[1, 2])).unwrap(), QuotientValue::Perm("312".parse().unwrap()));
    }

    #[test]
    fn burau_at_one() {
        let q = QuotientMap::parse("burau:2:1", 2).unwrap();
        match q.eval_braid(&w(2, &[1])).unwrap() {
            QuotientValue::Burau(m) => {
                let v: Vec<u64> = m.entries.iter().map(|p| p.coeffs[0]).collect();
                assert_eq!(v, vec![0, 1, 1, 0]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn burau_relations_and_inverses() {
        let q = QuotientMap::parse("burau:5:3", 4).unwrap();
        let id = q.eval_braid(&BraidWord::identity(4)).unwrap();
        assert_eq!(q.eval_braid(&w(4, &[1, 2, 1])).unwrap(), q.eval_braid(&w(4, &[2, 1, 2])).unwrap());
        assert_eq!(q.eval_braid(&w(4, &[1, 3])).unwrap(), q.eval_braid(&w(4, &[3, 1])).unwrap());
        assert_eq!(q.eval_braid(&BraidWord::from_letters_unchecked(4, [2, -2])).unwrap(), id);
        assert_eq!(q.eval_braid(&BraidWord::from_letters_unchecked(4, [-3, 3])).unwrap(), id);
        assert_ne!(q.eval_braid(&w(4, &[1, 1])).unwrap(), id);
    }

    #[test]
    fn abelianization_and_twists() {
        let ab = QuotientMap::parse("ab", 2).unwrap();
        assert_eq!(
            ab.eval_braid(&pure_generator(2, 1, 2).unwrap()).unwrap(),
            QuotientValue::Abelian { exponent: 2, twist: 0 }
        );
        let tw = QuotientMap::parse("twist:3", 2).unwrap();
        let r: RibbonBraid = "1 | 4,-1".parse().unwrap();
        assert_eq!(
            tw.eval(&r).unwrap(),
            QuotientValue::TwistMod {
                modulus: 3,
                perm: "21".parse().unwrap(),
                twists: vec![1, 2]
            }
        );
    }

    #[test]
    fn level_strings() {
        assert!(QuotientKind::from_str("burau:0:2").is_err());
        assert!(QuotientKind::from_str("burau:3").is_err());
        assert!(QuotientKind::from_str("nope").is_err());
        for s in ["sym", "ab", "burau:3:2", "twist:7"] {
            assert_eq!(QuotientKind::from_str(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn tower_examples() {
        let levels: Vec<QuotientMap> = ["sym", "ab", "burau:3:2", "burau:2:4"]
            .iter()
            .map(|s| QuotientMap::parse(s, 4).unwrap())
            .collect();
        let r = tower_check_iii(&FreeGroupWord::identity(2), &levels).unwrap();
        assert!(r.not_refuted());
        assert!(r.to_string().starts_with("not refuted at levels sym"));
        let r = tower_check_iii(&FreeGroupWord::x(), &levels).unwrap();
        assert!(r.levels[0].1);
        assert!(tower_check_iii(&FreeGroupWord::x(), &[QuotientMap::parse("sym", 3).unwrap()]).is_err());
    }
}
