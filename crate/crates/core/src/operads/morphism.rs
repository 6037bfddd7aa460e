//! Morphisms of the colored and parenthesized (ribbon) braid operads.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{full_twist, BraidWord};
use crate::error::{Error, Result};
use crate::operads::tree::ParenTree;
use crate::perm::Permutation;
use crate::ribbon::{ribbon_equal, RibbonBraid};

/// The operads in groupoids whose morphisms are (ribbon) braids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Instance {
    CoB,
    CoRB,
    PaB,
    PaRB,
    /// `PaB` with a point in arity zero.
    PaBPlus,
    /// `PaRB` with a point in arity zero.
    PaRBPlus,
    /// Objects are trees with nullary `*` vertices; morphisms are those of
    /// `PaRBPlus` between the pruned trees.
    PaRBStar,
}

impl Instance {
    pub const ALL: [Instance; 7] = [
        Instance::CoB,
        Instance::CoRB,
        Instance::PaB,
        Instance::PaRB,
        Instance::PaBPlus,
        Instance::PaRBPlus,
        Instance::PaRBStar,
    ];

    pub fn is_ribbon(self) -> bool {
        matches!(
            self,
            Instance::CoRB | Instance::PaRB | Instance::PaRBPlus | Instance::PaRBStar
        )
    }

    pub fn is_parenthesized(self) -> bool {
        !matches!(self, Instance::CoB | Instance::CoRB)
    }

    pub fn is_unital(self) -> bool {
        matches!(
            self,
            Instance::PaBPlus | Instance::PaRBPlus | Instance::PaRBStar
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Instance::CoB => "cob",
            Instance::CoRB => "corb",
            Instance::PaB => "pab",
            Instance::PaRB => "parb",
            Instance::PaBPlus => "pab+",
            Instance::PaRBPlus => "parb+",
            Instance::PaRBStar => "parb*",
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Instance::ALL
            .into_iter()
            .find(|i| i.name() == lower)
            .or(match lower.as_str() {
                "pabplus" => Some(Instance::PaBPlus),
                "parbplus" => Some(Instance::PaRBPlus),
                "parbstar" => Some(Instance::PaRBStar),
                _ => None,
            })
            .ok_or_else(|| Error::parse(1, format!("unknown instance {s:?}")))
    }
}

/// How the twist vectors of two morphisms combine under `o_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TwistRule {
    /// `(x_1, .., x_{k-1}, x_k + y_1, .., x_k + y_m, x_{k+1}, .., x_n)`.
    #[default]
    Block,
    /// The entries after the block are all set to `y_m`. Not an operad; kept
    /// so the axiom fuzzer can be checked against a known-bad rule.
    TailOfInner,
}

impl TwistRule {
    /// Combines `outer` and `inner` with the block inserted at 0-based index
    /// `at`.
    pub fn combine<C: Clone + std::ops::Add<Output = C>>(self, outer: &[C], at: usize, inner: &[C]) -> Vec<C> {
        let mut out: Vec<C> = outer[..at].to_vec();
        out.extend(inner.iter().map(|y| outer[at].clone() + y.clone()));
        match self {
            TwistRule::Block => out.extend_from_slice(&outer[at + 1..]),
            TwistRule::TailOfInner => {
                let last = inner.last().cloned().unwrap_or_else(|| outer[at].clone());
                out.extend(std::iter::repeat_n(last, outer.len() - at - 1));
            }
        }
        out
    }
}

/// An object: a permutation for the colored operads, a tree for the
/// parenthesized ones.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Object {
    Perm(Permutation),
    Tree(ParenTree),
}

impl Object {
    /// Labels by position.
    pub fn word(&self) -> Vec<usize> {
        match self {
            Object::Perm(p) => p.one_line(),
            Object::Tree(t) => t.labels(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Object::Perm(p) => p.len(),
            Object::Tree(t) => t.arity(),
        }
    }

    pub fn as_tree(&self) -> Option<&ParenTree> {
        match self {
            Object::Tree(t) => Some(t),
            Object::Perm(_) => None,
        }
    }

    /// The leaf word as a permutation.
    pub fn forget(&self) -> Result<Permutation> {
        match self {
            Object::Perm(p) => Ok(p.clone()),
            Object::Tree(t) => t.forget(),
        }
    }

    /// 1-based position of label `k`.
    pub fn position_of(&self, k: usize) -> Option<usize> {
        self.word().iter().position(|&l| l == k).map(|p| p + 1)
    }

    pub fn compose_at(&self, k: usize, inner: &Object) -> Result<Object> {
        match (self, inner) {
            (Object::Perm(a), Object::Perm(b)) => Ok(Object::Perm(a.compose_at(k, b)?)),
            (Object::Tree(a), Object::Tree(b)) => Ok(Object::Tree(a.compose_at(k, b)?)),
            _ => Err(Error::InvalidMorphism("mixed object kinds".into())),
        }
    }

    pub fn act(&self, s: &Permutation) -> Object {
        match self {
            Object::Perm(p) => Object::Perm(p.then(s)),
            Object::Tree(t) => Object::Tree(t.act(s)),
        }
    }

    pub fn parse_for(instance: Instance, s: &str) -> Result<Object> {
        if instance.is_parenthesized() {
            Ok(Object::Tree(s.parse()?))
        } else {
            Ok(Object::Perm(s.parse()?))
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Perm(p) => write!(f, "{p}"),
            Object::Tree(t) if f.alternate() => write!(f, "{t:#}"),
            Object::Tree(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Debug for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:#}")
    }
}

/// A morphism of one of the braid operads.
///
/// The payload twists are indexed by source position, like every
/// [`RibbonBraid`]. The strand starting at position `p` carries the label
/// `source.word()[p]` and ends at the position of that label in `target`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperadMorphism {
    instance: Instance,
    source: Object,
    target: Object,
    payload: RibbonBraid,
}

impl OperadMorphism {
    pub fn new(instance: Instance, source: Object, target: Object, payload: RibbonBraid) -> Result<Self> {
        let m = OperadMorphism {
            instance,
            source,
            target,
            payload,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let inst = self.instance;
        let n = self.payload.strands();
        for obj in [&self.source, &self.target] {
            match (obj, inst.is_parenthesized()) {
                (Object::Perm(_), false) => {}
                (Object::Tree(t), true) => {
                    if t.has_star() {
                        let allowed = inst == Instance::PaRBStar
                            || (inst.is_unital() && *t == ParenTree::Star);
                        if !allowed {
                            return Err(Error::InvalidMorphism(format!(
                                "`*` leaves are not objects of {inst}"
                            )));
                        }
                    }
                    t.validate()?;
                }
                _ => {
                    return Err(Error::InvalidMorphism(format!(
                        "wrong object kind for {inst}"
                    )))
                }
            }
            if obj.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: obj.arity(),
                });
            }
        }
        if n == 0 && !inst.is_unital() {
            return Err(Error::InvalidMorphism(format!("{inst} has no arity-zero terms")));
        }
        if !inst.is_ribbon() && self.payload.twists().iter().any(|&t| t != 0) {
            return Err(Error::InvalidMorphism(format!("{inst} morphisms carry no twists")));
        }
        let perm = self.payload.perm_of();
        let src = self.source.word();
        let tgt = self.target.word();
        for p in 0..n {
            if tgt[perm.apply(p)] != src[p] {
                return Err(Error::InvalidMorphism(format!(
                    "braid permutation {perm} does not carry {} to {}",
                    self.source, self.target
                )));
            }
        }
        Ok(())
    }

    pub fn identity(instance: Instance, object: Object) -> Result<Self> {
        let n = object.arity();
        OperadMorphism::new(instance, object.clone(), object, RibbonBraid::identity(n))
    }

    /// The operadic unit in arity one.
    pub fn unit(instance: Instance) -> Self {
        let obj = if instance.is_parenthesized() {
            Object::Tree(ParenTree::Leaf(1))
        } else {
            Object::Perm(Permutation::identity(1))
        };
        OperadMorphism::identity(instance, obj).expect("unit is valid")
    }

    /// The unique arity-zero morphism of a unital instance.
    pub fn nullary(instance: Instance) -> Result<Self> {
        if !instance.is_unital() {
            return Err(Error::InvalidMorphism(format!("{instance} has no arity-zero terms")));
        }
        OperadMorphism::identity(instance, Object::Tree(ParenTree::Star))
    }

    /// A morphism whose target is determined by the braid.
    pub fn from_source(instance: Instance, source: Object, payload: RibbonBraid) -> Result<Self> {
        let perm = payload.perm_of();
        let src = source.word();
        if src.len() != payload.strands() {
            return Err(Error::ArityMismatch {
                expected: payload.strands(),
                found: src.len(),
            });
        }
        let mut tgt = vec![0; src.len()];
        for (p, &l) in src.iter().enumerate() {
            tgt[perm.apply(p)] = l;
        }
        let target = match &source {
            Object::Perm(_) => Object::Perm(Permutation::from_one_line(&tgt)?),
            Object::Tree(t) => {
                // same shape when the braid is trivial, otherwise the target
                // must be supplied; use the right comb
                if perm.is_identity() {
                    Object::Tree(t.clone())
                } else {
                    Object::Tree(ParenTree::right_comb(&tgt))
                }
            }
        };
        OperadMorphism::new(instance, source, target, payload)
    }

    pub fn instance(&self) -> Instance {
        self.instance
    }

    pub fn source(&self) -> &Object {
        &self.source
    }

    pub fn target(&self) -> &Object {
        &self.target
    }

    pub fn payload(&self) -> &RibbonBraid {
        &self.payload
    }

    pub fn braid(&self) -> &BraidWord {
        self.payload.braid()
    }

    pub fn arity(&self) -> usize {
        self.payload.strands()
    }

    /// Twists by label: entry `l - 1` is the twist of the strand labelled `l`.
    pub fn twists_by_label(&self) -> Vec<i64> {
        let word = self.source.word();
        let mut out = vec![0; word.len()];
        for (p, &l) in word.iter().enumerate() {
            out[l - 1] = self.payload.twists()[p];
        }
        out
    }

    /// Same braid and twists, between other objects of the same arity.
    pub fn with_instance(&self, instance: Instance) -> Result<Self> {
        OperadMorphism::new(instance, self.source.clone(), self.target.clone(), self.payload.clone())
    }

    fn same_instance(&self, other: &OperadMorphism) -> Result<()> {
        if self.instance != other.instance {
            return Err(Error::InstanceMismatch {
                left: self.instance.to_string(),
                right: other.instance.to_string(),
            });
        }
        Ok(())
    }

    /// Categorical composition, `self` first.
    pub fn then(&self, other: &OperadMorphism) -> Result<Self> {
        self.same_instance(other)?;
        if self.target != other.source {
            return Err(Error::NotComposable(format!(
                "target {} is not source {}",
                self.target, other.source
            )));
        }
        Ok(OperadMorphism {
            instance: self.instance,
            source: self.source.clone(),
            target: other.target.clone(),
            payload: self.payload.compose(&other.payload)?,
        })
    }

    pub fn inverse(&self) -> Self {
        OperadMorphism {
            instance: self.instance,
            source: self.target.clone(),
            target: self.source.clone(),
            payload: self.payload.inverse(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e != 0 && self.source != self.target {
            return Err(Error::NotComposable("power of a non-endomorphism".into()));
        }
        Ok(OperadMorphism {
            instance: self.instance,
            source: self.source.clone(),
            target: self.target.clone(),
            payload: self.payload.pow(e),
        })
    }

    /// Equality of morphisms: same endpoints and equal ribbon braids.
    pub fn equals(&self, other: &OperadMorphism) -> Result<bool> {
        self.same_instance(other)?;
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        ribbon_equal(&self.payload, &other.payload)
    }

    /// Operadic composition at label `k`.
    pub fn compose_at(&self, k: usize, inner: &OperadMorphism) -> Result<Self> {
        self.compose_at_with(k, inner, TwistRule::Block)
    }

    pub fn compose_at_with(&self, k: usize, inner: &OperadMorphism, rule: TwistRule) -> Result<Self> {
        self.same_instance(inner)?;
        let n = self.arity();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                what: "composition slot",
                index: k as i64,
                bound: n,
            });
        }
        if inner.arity() == 0 {
            return self.fill(k, inner);
        }
        let m = inner.arity();
        let source = self.source.compose_at(k, &inner.source)?;
        let target = self.target.compose_at(k, &inner.target)?;
        let j = self.source.position_of(k).expect("label present");
        let x_k = self.payload.twists()[j - 1];
        let mut block = inner.payload.braid().clone();
        if x_k != 0 {
            block = full_twist(m)?.pow(x_k).concat(&block)?;
        }
        let braid = block
            .embed(j - 1, n + m - 1)?
            .concat(&self.payload.braid().cable(j, m)?)?;
        let twists = rule.combine(self.payload.twists(), j - 1, inner.payload.twists());
        Ok(OperadMorphism {
            instance: self.instance,
            source,
            target,
            payload: RibbonBraid::new(braid, twists)?,
        })
    }

    /// Composition with an arity-zero term: removes the strand labelled `k`.
    fn fill(&self, k: usize, nullary: &OperadMorphism) -> Result<Self> {
        if !self.instance.is_unital() {
            return Err(Error::InvalidMorphism(format!(
                "{} has no arity-zero terms",
                self.instance
            )));
        }
        let j = self.source.position_of(k).expect("label present");
        let payload = self.payload.delete_strand(j)?;
        let fill_tree = |obj: &Object, plug: &Object| -> Result<Object> {
            let t = obj.as_tree().expect("parenthesized");
            let plug = plug.as_tree().expect("parenthesized");
            if self.instance == Instance::PaRBStar {
                Ok(Object::Tree(t.compose_at(k, plug)?))
            } else {
                Ok(Object::Tree(
                    t.star_out(k)?.prune().unwrap_or(ParenTree::Star),
                ))
            }
        };
        let source = fill_tree(&self.source, &nullary.source)?;
        let target = fill_tree(&self.target, &nullary.target)?;
        Ok(OperadMorphism {
            instance: self.instance,
            source,
            target,
            payload,
        })
    }

    /// Relabels source and target by `s`; the braid and its source-indexed
    /// twists are unchanged, so the twists by label are permuted by `s`.
    pub fn act(&self, s: &Permutation) -> Result<Self> {
        if s.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: s.len(),
            });
        }
        Ok(OperadMorphism {
            instance: self.instance,
            source: self.source.act(s),
            target: self.target.act(s),
            payload: self.payload.clone(),
        })
    }
}

impl fmt::Display for OperadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:#} -> {:#} : {}", self.instance, self.source, self.target, self.payload)
    }
}

impl fmt::Debug for OperadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized form of a morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismRecord {
    pub instance: String,
    pub n: usize,
    pub source: String,
    pub target: String,
    pub word: String,
    pub twists: Vec<i64>,
}

impl From<&OperadMorphism> for MorphismRecord {
    fn from(m: &OperadMorphism) -> Self {
        MorphismRecord {
            instance: m.instance.to_string(),
            n: m.arity(),
            source: m.source.to_string(),
            target: m.target.to_string(),
            word: m.braid().to_string(),
            twists: m.payload.twists().to_vec(),
        }
    }
}

impl TryFrom<&MorphismRecord> for OperadMorphism {
    type Error = Error;

    fn try_from(r: &MorphismRecord) -> Result<Self> {
        let instance: Instance = r.instance.parse()?;
        let source = Object::parse_for(instance, &r.source)?;
        let target = Object::parse_for(instance, &r.target)?;
        let twists = if r.twists.is_empty() && r.n > 0 {
            vec![0; r.n]
        } else {
            r.twists.clone()
        };
        let braid = BraidWord::parse(r.n, &r.word)?;
        OperadMorphism::new(instance, source, target, RibbonBraid::new(braid, twists)?)
    }
}

/// Operadic composition at label `k`.
pub fn operad_compose(a: &OperadMorphism, k: usize, b: &OperadMorphism) -> Result<OperadMorphism> {
    a.compose_at(k, b)
}

pub fn sigma_act(s: &Permutation, a: &OperadMorphism) -> Result<OperadMorphism> {
    a.act(s)
}

/// Composition with the arity-zero term at label `i`: deletes that strand.
pub fn unital_compose(a: &OperadMorphism, i: usize) -> Result<OperadMorphism> {
    let star = OperadMorphism::nullary(a.instance())?;
    a.compose_at(i, &star)
}

/// `(a_1, .., a_n) o_i (b_1, .., b_m)` in the twist operad.
pub fn twist_compose(a: &[i64], i: usize, b: &[i64]) -> Result<Vec<i64>> {
    if i == 0 || i > a.len() {
        return Err(Error::IndexOutOfRange {
            what: "composition slot",
            index: i as i64,
            bound: a.len(),
        });
    }
    Ok(TwistRule::Block.combine(a, i - 1, b))
}
