//! Operads in groupoids: the symmetric and magma object operads, the twist
//! operad `T`, and the (ribbon) braid operads.

mod fuzz;
mod morphism;
mod tree;

use std::fmt;
use std::ops::{Add, Neg};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use fuzz::{axioms_fuzz, fuzz_operad, Counterexample, FuzzInstance, FuzzReport, Sample};
pub use morphism::{
    operad_compose, sigma_act, twist_compose, unital_compose, Instance, MorphismRecord, Object,
    OperadMorphism, TwistRule,
};
pub use tree::{magma_compose, star_forget, NodePath, ParenTree, Side};

/// `t o_k s` in the symmetric operad.
pub fn sigma_compose(t: &Permutation, k: usize, s: &Permutation) -> Result<Permutation> {
    t.compose_at(k, s)
}

/// The structure shared by every operad in groupoids used here. Labels and
/// slots are 1-based.
pub trait Operad {
    type Object: Clone + PartialEq + fmt::Debug;
    type Morphism: Clone + fmt::Debug;

    fn arity(&self, f: &Self::Morphism) -> usize;
    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, object: &Self::Object) -> Result<Self::Morphism>;
    /// The operadic unit in arity one.
    fn unit(&self) -> Self::Morphism;
    /// Categorical composition, `f` first.
    fn then(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn inverse(&self, f: &Self::Morphism) -> Self::Morphism;
    fn compose_at(&self, f: &Self::Morphism, k: usize, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn act(&self, s: &Permutation, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<bool>;

    /// The arity-zero term, for unital operads.
    fn nullary(&self) -> Option<Self::Morphism> {
        None
    }

    fn pow(&self, f: &Self::Morphism, e: i64) -> Result<Self::Morphism> {
        let base = if e < 0 { self.inverse(f) } else { f.clone() };
        let mut out = self.identity(&self.source(f))?;
        for _ in 0..e.unsigned_abs() {
            out = self.then(&out, &base)?;
        }
        Ok(out)
    }
}

/// One of the braid operads, viewed through [`Operad`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidOperad {
    pub instance: Instance,
    pub rule: TwistRule,
}

impl BraidOperad {
    pub fn new(instance: Instance) -> Self {
        BraidOperad {
            instance,
            rule: TwistRule::Block,
        }
    }
}

impl Operad for BraidOperad {
    type Object = Object;
    type Morphism = OperadMorphism;

    fn arity(&self, f: &OperadMorphism) -> usize {
        f.arity()
    }

    fn source(&self, f: &OperadMorphism) -> Object {
        f.source().clone()
    }

    fn target(&self, f: &OperadMorphism) -> Object {
        f.target().clone()
    }

    fn identity(&self, object: &Object) -> Result<OperadMorphism> {
        OperadMorphism::identity(self.instance, object.clone())
    }

    fn unit(&self) -> OperadMorphism {
        OperadMorphism::unit(self.instance)
    }

    fn then(&self, f: &OperadMorphism, g: &OperadMorphism) -> Result<OperadMorphism> {
        f.then(g)
    }

    fn inverse(&self, f: &OperadMorphism) -> OperadMorphism {
        f.inverse()
    }

    fn compose_at(&self, f: &OperadMorphism, k: usize, g: &OperadMorphism) -> Result<OperadMorphism> {
        f.compose_at_with(k, g, self.rule)
    }

    fn act(&self, s: &Permutation, f: &OperadMorphism) -> Result<OperadMorphism> {
        f.act(s)
    }

    fn equal(&self, f: &OperadMorphism, g: &OperadMorphism) -> Result<bool> {
        f.equals(g)
    }

    fn nullary(&self) -> Option<OperadMorphism> {
        OperadMorphism::nullary(self.instance).ok()
    }

    fn pow(&self, f: &OperadMorphism, e: i64) -> Result<OperadMorphism> {
        f.pow(e)
    }
}

/// The twist operad: `T(n)` is the group `C^n` seen as a one-object
/// groupoid, entries indexed by label. Objects are just arities.
///
/// With `C = i64` this is the receiver of the list-of-twists map; other
/// coefficient types (e.g. linear forms) let maps into `T` be solved for
/// symbolically.
#[derive(Clone, Copy, Debug, Default)]
pub struct TwistOperad<C = i64> {
    pub rule: TwistRule,
    _coefficients: std::marker::PhantomData<C>,
}

impl<C> TwistOperad<C> {
    pub fn new() -> Self {
        TwistOperad {
            rule: TwistRule::Block,
            _coefficients: std::marker::PhantomData,
        }
    }

    pub fn with_rule(rule: TwistRule) -> Self {
        TwistOperad {
            rule,
            _coefficients: std::marker::PhantomData,
        }
    }
}

fn check_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::ArityMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

impl<C> Operad for TwistOperad<C>
where
    C: Clone + PartialEq + fmt::Debug + Zero + Add<Output = C> + Neg<Output = C>,
{
    type Object = usize;
    type Morphism = Vec<C>;

    fn arity(&self, f: &Vec<C>) -> usize {
        f.len()
    }

    fn source(&self, f: &Vec<C>) -> usize {
        f.len()
    }

    fn target(&self, f: &Vec<C>) -> usize {
        f.len()
    }

    fn identity(&self, n: &usize) -> Result<Vec<C>> {
        Ok(vec![C::zero(); *n])
    }

    fn unit(&self) -> Vec<C> {
        vec![C::zero()]
    }

    fn then(&self, f: &Vec<C>, g: &Vec<C>) -> Result<Vec<C>> {
        check_len(f.len(), g.len())?;
        Ok(f.iter().zip(g).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    fn inverse(&self, f: &Vec<C>) -> Vec<C> {
        f.iter().map(|a| -a.clone()).collect()
    }

    fn compose_at(&self, f: &Vec<C>, k: usize, g: &Vec<C>) -> Result<Vec<C>> {
        if k == 0 || k > f.len() {
            return Err(Error::IndexOutOfRange {
                what: "composition slot",
                index: k as i64,
                bound: f.len(),
            });
        }
        if g.is_empty() {
            let mut out = f.clone();
            out.remove(k - 1);
            return Ok(out);
        }
        Ok(self.rule.combine(f, k - 1, g))
    }

    fn act(&self, s: &Permutation, f: &Vec<C>) -> Result<Vec<C>> {
        check_len(f.len(), s.len())?;
        let mut out = vec![C::zero(); f.len()];
        for (l, v) in f.iter().enumerate() {
            out[s.apply(l)] = v.clone();
        }
        Ok(out)
    }

    fn equal(&self, f: &Vec<C>, g: &Vec<C>) -> Result<bool> {
        Ok(f == g)
    }

    fn nullary(&self) -> Option<Vec<C>> {
        Some(Vec::new())
    }
}
