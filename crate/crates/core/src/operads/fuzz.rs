//! Randomized checks of the operad axioms.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::operads::morphism::{Instance, Object, OperadMorphism, TwistRule};
use crate::operads::tree::ParenTree;
use crate::operads::{BraidOperad, Operad, TwistOperad};
use crate::perm::Permutation;
use crate::ribbon::RibbonBraid;

/// Random generation of terms, for the fuzzer.
pub trait Sample: Operad {
    /// A random object of the given arity.
    fn random_object(&self, rng: &mut ChaCha8Rng, arity: usize) -> Self::Object;
    /// A random morphism out of `source` with at most `max_len` crossings.
    fn random_from(&self, rng: &mut ChaCha8Rng, source: &Self::Object, max_len: usize) -> Self::Morphism;
    /// Whether arity-zero inner terms should be drawn.
    fn has_nullary(&self) -> bool {
        self.nullary().is_some()
    }

    fn random(&self, rng: &mut ChaCha8Rng, arity: usize, max_len: usize) -> Self::Morphism {
        let s = self.random_object(rng, arity);
        self.random_from(rng, &s, max_len)
    }
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_one_line(&v).expect("shuffled identity")
}

fn random_shape(rng: &mut ChaCha8Rng, labels: &[usize], stars: bool) -> ParenTree {
    let t = match labels {
        [] => ParenTree::Star,
        [l] => ParenTree::Leaf(*l),
        _ => {
            let split = rng.gen_range(1..labels.len());
            ParenTree::node(
                random_shape(rng, &labels[..split], stars),
                random_shape(rng, &labels[split..], stars),
            )
        }
    };
    if stars && rng.gen_bool(0.2) {
        if rng.gen_bool(0.5) {
            ParenTree::node(ParenTree::Star, t)
        } else {
            ParenTree::node(t, ParenTree::Star)
        }
    } else {
        t
    }
}

impl Sample for TwistOperad<i64> {
    fn random_object(&self, _rng: &mut ChaCha8Rng, arity: usize) -> usize {
        arity
    }

    fn random_from(&self, rng: &mut ChaCha8Rng, source: &usize, _max_len: usize) -> Vec<i64> {
        (0..*source).map(|_| rng.gen_range(-3..=3)).collect()
    }
}

impl Sample for BraidOperad {
    fn random_object(&self, rng: &mut ChaCha8Rng, arity: usize) -> Object {
        let perm = random_perm(rng, arity);
        if self.instance.is_parenthesized() {
            let stars = self.instance == Instance::PaRBStar;
            if arity == 0 && !stars {
                return Object::Tree(ParenTree::Star);
            }
            Object::Tree(random_shape(rng, &perm.one_line(), stars))
        } else {
            Object::Perm(perm)
        }
    }

    fn random_from(&self, rng: &mut ChaCha8Rng, source: &Object, max_len: usize) -> OperadMorphism {
        let n = source.arity();
        let len = if n < 2 { 0 } else { rng.gen_range(0..=max_len) };
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let braid = BraidWord::new(n, letters).expect("letters in range");
        let twists = if self.instance.is_ribbon() {
            (0..n).map(|_| rng.gen_range(-2..=2)).collect()
        } else {
            vec![0; n]
        };
        let payload = RibbonBraid::new(braid, twists).expect("lengths agree");
        let perm = payload.perm_of();
        let src = source.word();
        let mut tgt = vec![0; n];
        for (p, &l) in src.iter().enumerate() {
            tgt[perm.apply(p)] = l;
        }
        let target = match source {
            Object::Perm(_) => Object::Perm(Permutation::from_one_line(&tgt).expect("relabelled word")),
            Object::Tree(_) if n == 0 && self.instance != Instance::PaRBStar => Object::Tree(ParenTree::Star),
            Object::Tree(_) => Object::Tree(random_shape(rng, &tgt, self.instance == Instance::PaRBStar)),
        };
        OperadMorphism::new(self.instance, source.clone(), target, payload).expect("well-formed sample")
    }
}

/// A failed axiom instance.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub law: &'static str,
    pub trial: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub instance: String,
    pub seed: u64,
    pub trials: usize,
    /// Number of individual equations checked.
    pub checks: usize,
    pub failures: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} trials, {} checks, {} failures (seed {})",
            self.instance,
            self.trials,
            self.checks,
            self.failures.len(),
            self.seed
        )?;
        for c in self.failures.iter().take(10) {
            writeln!(f, "  trial {} {}: {}", c.trial, c.law, c.detail)?;
        }
        Ok(())
    }
}

struct Checker<'a, O: Operad> {
    op: &'a O,
    checks: usize,
    failures: Vec<Counterexample>,
    trial: usize,
}

impl<O: Operad> Checker<'_, O> {
    fn expect_equal(&mut self, law: &'static str, lhs: Result<O::Morphism>, rhs: Result<O::Morphism>, context: impl Fn() -> String) {
        self.checks += 1;
        let verdict = match (&lhs, &rhs) {
            (Ok(l), Ok(r)) => self.op.equal(l, r).map_err(|e| e.to_string()),
            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
        };
        let detail = match verdict {
            Ok(true) => return,
            Ok(false) => format!("{}; lhs {:?}; rhs {:?}", context(), lhs.unwrap(), rhs.unwrap()),
            Err(e) => format!("{}; error {e}", context()),
        };
        self.failures.push(Counterexample {
            law,
            trial: self.trial,
            detail,
        });
    }
}

/// Checks sequential and parallel associativity, both unit laws,
/// equivariance and the interchange law with categorical composition on
/// random terms of arity at most `arity_bound`.
pub fn fuzz_operad<O: Sample>(op: &O, name: &str, arity_bound: usize, max_len: usize, trials: usize, seed: u64) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ck = Checker {
        op,
        checks: 0,
        failures: Vec::new(),
        trial: 0,
    };
    let bound = arity_bound.max(1);
    let lo = if op.has_nullary() { 0 } else { 1 };
    for trial in 0..trials {
        ck.trial = trial;
        let p = rng.gen_range(1..=bound);
        let q = rng.gen_range(lo..=bound);
        let r = rng.gen_range(lo..=bound);
        let f = op.random(&mut rng, p, max_len);
        let g = op.random(&mut rng, q, max_len);
        let h = op.random(&mut rng, r, max_len);
        let i = rng.gen_range(1..=p);

        // sequential
        if q > 0 {
            let j = rng.gen_range(1..=q);
            ck.expect_equal(
                "sequential associativity",
                op.compose_at(&f, i, &g).and_then(|fg| op.compose_at(&fg, i + j - 1, &h)),
                op.compose_at(&g, j, &h).and_then(|gh| op.compose_at(&f, i, &gh)),
                || format!("f={f:?} i={i} g={g:?} j={j} h={h:?}"),
            );
        }

        // parallel
        if p >= 2 {
            let mut slots = [rng.gen_range(1..=p), rng.gen_range(1..p)];
            if slots[1] >= slots[0] {
                slots[1] += 1;
            }
            let (a, b) = (slots[0].min(slots[1]), slots[0].max(slots[1]));
            ck.expect_equal(
                "parallel associativity",
                op.compose_at(&f, a, &g).and_then(|fg| op.compose_at(&fg, b + q - 1, &h)),
                op.compose_at(&f, b, &h).and_then(|fh| op.compose_at(&fh, a, &g)),
                || format!("f={f:?} a={a} g={g:?} b={b} h={h:?}"),
            );
        }

        // units
        let unit = op.unit();
        ck.expect_equal("left unit", op.compose_at(&unit, 1, &f), Ok(f.clone()), || format!("f={f:?}"));
        ck.expect_equal("right unit", op.compose_at(&f, i, &unit), Ok(f.clone()), || format!("f={f:?} i={i}"));

        // equivariance
        let s = random_perm(&mut rng, p);
        let t = random_perm(&mut rng, q);
        let phi = Permutation::block_relabel(&s, i, &t);
        let si = s.apply(i - 1) + 1;
        ck.expect_equal(
            "equivariance",
            op.act(&s, &f).and_then(|sf| op.act(&t, &g).and_then(|tg| op.compose_at(&sf, si, &tg))),
            phi.and_then(|phi| op.compose_at(&f, i, &g).and_then(|fg| op.act(&phi, &fg))),
            || format!("s={s} f={f:?} i={i} t={t} g={g:?}"),
        );

        // interchange with categorical composition
        let f2 = op.random_from(&mut rng, &op.target(&f), max_len);
        let g2 = op.random_from(&mut rng, &op.target(&g), max_len);
        ck.expect_equal(
            "interchange",
            op.then(&f, &f2).and_then(|ff| op.then(&g, &g2).and_then(|gg| op.compose_at(&ff, i, &gg))),
            op.compose_at(&f, i, &g).and_then(|fg| op.compose_at(&f2, i, &g2).and_then(|fg2| op.then(&fg, &fg2))),
            || format!("f={f:?} f'={f2:?} i={i} g={g:?} g'={g2:?}"),
        );
    }
    FuzzReport {
        instance: name.to_string(),
        seed,
        trials,
        checks: ck.checks,
        failures: ck.failures,
    }
}

/// The operads the fuzzer can be pointed at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FuzzInstance {
    Twist,
    Braid(Instance),
}

impl fmt::Display for FuzzInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzInstance::Twist => f.write_str("t"),
            FuzzInstance::Braid(i) => write!(f, "{i}"),
        }
    }
}

impl FromStr for FuzzInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("t") {
            Ok(FuzzInstance::Twist)
        } else {
            Ok(FuzzInstance::Braid(s.parse()?))
        }
    }
}

/// Fuzzes `instance` with composite words of at most `max_len` letters.
/// `rule` replaces the twist combination rule, to check that a wrong rule is
/// caught.
pub fn axioms_fuzz(instance: FuzzInstance, arity_bound: usize, max_len: usize, trials: usize, seed: u64, rule: TwistRule) -> FuzzReport {
    let name = instance.to_string();
    match instance {
        FuzzInstance::Twist => fuzz_operad(&TwistOperad::<i64>::with_rule(rule), &name, arity_bound, max_len, trials, seed),
        FuzzInstance::Braid(i) => fuzz_operad(&BraidOperad { instance: i, rule }, &name, arity_bound, max_len, trials, seed),
    }
}
