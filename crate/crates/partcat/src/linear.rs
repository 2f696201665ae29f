//! Formal linear combinations of partitions with exact coefficients, the
//! scaled composition making `T` a strict monoidal functor, the projection
//! calculus, separated components and the dotted-partition basis.
//!
//! Every combination carries a context `N`; combinations from different
//! contexts never mix. Composition multiplies each partition pair by
//! `N^{rl}` where `rl` is the loop count of the stacked diagram.

use crate::error::{PartError, Result};
use crate::generators;
use crate::partition::{Partition, Regime};
use crate::scalar::{Field, Scalar};
use crate::signature::Signature;
use std::collections::BTreeMap;

/// The dotted alphabet: `•` types the complement of the all-ones direction,
/// `↓` the all-ones direction itself.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DotLetter {
    /// `•`
    Dot,
    /// `↓`
    Single,
}

/// A word over the dotted alphabet, one letter per point of a row.
pub type DottedWord = Vec<DotLetter>;

/// A signature-homogeneous formal sum of canonical partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCombination<S> {
    sig: Signature,
    n: u32,
    terms: BTreeMap<Partition, S>,
}

/// The concrete combination type over Q(sqrt N).
pub type Lin = LinearCombination<Scalar>;

impl<S: Field> LinearCombination<S> {
    /// The zero combination of a given signature and context.
    pub fn zero(sig: Signature, n: u32) -> Self {
        LinearCombination { sig, n, terms: BTreeMap::new() }
    }

    /// A single partition with coefficient one.
    pub fn from_partition(p: Partition, n: u32) -> Self {
        let sig = p.signature();
        let mut terms = BTreeMap::new();
        terms.insert(p, S::one());
        LinearCombination { sig, n, terms }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// The context N.
    pub fn context(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &S)> {
        self.terms.iter()
    }

    /// Coefficient of `p` (zero if absent).
    pub fn coeff(&self, p: &Partition) -> S {
        self.terms.get(p).cloned().unwrap_or_else(S::zero)
    }

    /// Add `c * p`, dropping the term if it cancels.
    pub fn accumulate(&mut self, p: Partition, c: S) -> Result<()> {
        if p.signature() != self.sig {
            return Err(PartError::SignatureMismatch(
                p.signature().to_string(),
                self.sig.to_string(),
            ));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    fn check_context(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(PartError::ContextMismatch(self.n, rhs.n));
        }
        Ok(())
    }

    /// Sum of two combinations with equal signature and context.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_context(rhs)?;
        if self.sig != rhs.sig {
            return Err(PartError::SignatureMismatch(self.sig.to_string(), rhs.sig.to_string()));
        }
        let mut out = self.clone();
        for (p, c) in rhs.terms.iter() {
            out.accumulate(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.scale(&(S::zero() - S::one())))
    }

    /// Scale every coefficient by `c`.
    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig.clone(), self.n);
        }
        let terms = self.terms.iter().map(|(p, v)| (p.clone(), v.clone() * c.clone())).collect();
        LinearCombination { sig: self.sig.clone(), n: self.n, terms }
    }

    /// Bilinear tensor product.
    pub fn tensor(&self, rhs: &Self) -> Result<Self> {
        self.check_context(rhs)?;
        let mut upper = self.sig.upper().to_vec();
        upper.extend_from_slice(rhs.sig.upper());
        let mut lower = self.sig.lower().to_vec();
        lower.extend_from_slice(rhs.sig.lower());
        let mut out = Self::zero(Signature::new(upper, lower), self.n);
        for (p, a) in self.terms.iter() {
            for (q, b) in rhs.terms.iter() {
                out.accumulate(p.tensor(q)?, a.clone() * b.clone())?;
            }
        }
        Ok(out)
    }

    /// Bilinear composition `self ∘ p`, each pair scaled by `N^{rl}`.
    pub fn compose(&self, p: &Self) -> Result<Self> {
        self.check_context(p)?;
        if !p.sig.composable_with(&self.sig) {
            return Err(PartError::SignatureMismatch(
                crate::signature::word_string(p.sig.lower()),
                crate::signature::word_string(self.sig.upper()),
            ));
        }
        let sig = Signature::new(p.sig.upper().to_vec(), self.sig.lower().to_vec());
        let mut out = Self::zero(sig, self.n);
        for (qp, a) in self.terms.iter() {
            for (pp, b) in p.terms.iter() {
                let (r, loops) = qp.compose(pp)?;
                let factor = S::nat((self.n as u64).pow(loops));
                out.accumulate(r, a.clone() * b.clone() * factor)?;
            }
        }
        Ok(out)
    }

    /// Termwise involution. The paper's involution is antilinear; over the
    /// real scalar fields used here that is plain linearity.
    pub fn involute(&self) -> Self {
        let sig = Signature::new(self.sig.lower().to_vec(), self.sig.upper().to_vec());
        let mut out = Self::zero(sig, self.n);
        for (p, c) in self.terms.iter() {
            out.accumulate(p.involute(), c.clone()).expect("involution preserves signatures");
        }
        out
    }
}

fn require_plain(sig: &Signature) -> Result<()> {
    let plain =
        sig.upper().iter().chain(sig.lower().iter()).all(|&c| Regime::Plain.admits(c));
    if plain {
        Ok(())
    } else {
        Err(PartError::WrongRegime("projection calculus lives in the plain regime"))
    }
}

/// The projective combination for one dotted letter:
/// `π^↓ = (1/N)·disconnecter` and `π^• = id − (1/N)·disconnecter`.
pub fn pi<S: Field>(letter: DotLetter, n: u32) -> LinearCombination<S> {
    assert!(n >= 1, "context N must be positive");
    let inv_n = S::nat(n as u64).inv();
    let mut out = LinearCombination::zero(generators::idpart().signature(), n);
    match letter {
        DotLetter::Single => {
            out.accumulate(generators::disconnecter(), inv_n).unwrap();
        }
        DotLetter::Dot => {
            out.accumulate(generators::idpart(), S::one()).unwrap();
            out.accumulate(generators::disconnecter(), S::zero() - inv_n).unwrap();
        }
    }
    out
}

/// `π^{⊗w}` for a dotted word (the empty word gives the empty partition).
pub fn pi_word<S: Field>(word: &[DotLetter], n: u32) -> LinearCombination<S> {
    let mut out = LinearCombination::from_partition(Partition::empty(), n);
    for &letter in word {
        out = out.tensor(&pi(letter, n)).expect("contexts agree");
    }
    out
}

/// The separated component `π^{⊗w2} · lc · π^{⊗w1}`.
pub fn sandwich<S: Field>(
    lc: &LinearCombination<S>,
    w1: &[DotLetter],
    w2: &[DotLetter],
) -> Result<LinearCombination<S>> {
    require_plain(lc.signature())?;
    if w1.len() != lc.signature().upper().len() {
        return Err(PartError::ArityMismatch {
            expected: lc.signature().upper().len(),
            got: w1.len(),
        });
    }
    if w2.len() != lc.signature().lower().len() {
        return Err(PartError::ArityMismatch {
            expected: lc.signature().lower().len(),
            got: w2.len(),
        });
    }
    let n = lc.context();
    let left: LinearCombination<S> = pi_word(w2, n);
    let right: LinearCombination<S> = pi_word(w1, n);
    left.compose(&lc.compose(&right)?)
}

/// True iff `lc` equals its own `(w1, w2)` sandwich.
pub fn is_separated<S: Field>(
    lc: &LinearCombination<S>,
    w1: &[DotLetter],
    w2: &[DotLetter],
) -> Result<bool> {
    Ok(sandwich(lc, w1, w2)? == *lc)
}

/// The canonical dotted word of a partition: `↓` on singleton points, `•`
/// everywhere else.
pub fn canonical_dotted_word(p: &Partition) -> (DottedWord, DottedWord) {
    let k = p.num_upper();
    let letter = |pt: usize| {
        if p.is_singleton(pt) {
            DotLetter::Single
        } else {
            DotLetter::Dot
        }
    };
    ((0..k).map(letter).collect(), (k..p.len()).map(letter).collect())
}

/// The dotted partition: `p` sandwiched at its canonical word.
pub fn dotted<S: Field>(p: &Partition, n: u32) -> Result<LinearCombination<S>> {
    let (w1, w2) = canonical_dotted_word(p);
    sandwich(&LinearCombination::from_partition(p.clone(), n), &w1, &w2)
}

/// Expand `lc` in the dotted basis. The basis-change matrix is triangular
/// in the block count, so peeling minimal-block terms terminates.
pub fn to_dotted_basis<S: Field>(
    lc: &LinearCombination<S>,
) -> Result<BTreeMap<Partition, S>> {
    require_plain(lc.signature())?;
    let mut rest = lc.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (p, c) = rest
            .terms()
            .min_by_key(|(p, _)| (p.num_blocks(), (*p).clone()))
            .map(|(p, c)| (p.clone(), c.clone()))
            .expect("nonzero combination has terms");
        rest = rest.sub(&dotted::<S>(&p, lc.context())?.scale(&c))?;
        out.insert(p, c);
    }
    Ok(out)
}

/// Assemble a combination from dotted-basis coefficients.
pub fn from_dotted_basis<S: Field>(
    coeffs: &BTreeMap<Partition, S>,
    sig: Signature,
    n: u32,
) -> Result<LinearCombination<S>> {
    let mut out = LinearCombination::zero(sig, n);
    for (p, c) in coeffs {
        out = out.add(&dotted::<S>(p, n)?.scale(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{disconnecter, idpart, pairpart, singleton};
    use crate::partition::Color::Line;

    fn lp(p: Partition, n: u32) -> Lin {
        Lin::from_partition(p, n)
    }

    #[test]
    fn disconnecter_squares_to_n_disconnecter() {
        // the loop convention: an isolated middle singleton is one loop
        let n = 5;
        let d = lp(disconnecter(), n);
        let dd = d.compose(&d).unwrap();
        assert_eq!(dd.num_terms(), 1);
        assert_eq!(dd.coeff(&disconnecter()), Scalar::from_integer(5));
    }

    #[test]
    fn pi_projections() {
        for n in 2..=4 {
            let dot: Lin = pi(DotLetter::Dot, n);
            let sing: Lin = pi(DotLetter::Single, n);
            // idempotent, orthogonal, summing to the identity
            assert_eq!(dot.compose(&dot).unwrap(), dot);
            assert_eq!(sing.compose(&sing).unwrap(), sing);
            assert!(dot.compose(&sing).unwrap().is_zero());
            assert!(sing.compose(&dot).unwrap().is_zero());
            assert_eq!(dot.add(&sing).unwrap(), lp(idpart(), n));
            // projective: p* = p
            assert_eq!(dot.involute(), dot);
            assert_eq!(sing.involute(), sing);
        }
    }

    #[test]
    fn dotted_pair_expansion() {
        // dotted(⊓) = ⊓ − (1/N)(↓⊗↓)
        let n = 3;
        let d: Lin = dotted(&pairpart(), n).unwrap();
        let broken = singleton().tensor(&singleton()).unwrap();
        assert_eq!(d.num_terms(), 2);
        assert_eq!(d.coeff(&pairpart()), Scalar::from_integer(1));
        assert_eq!(d.coeff(&broken), Scalar::ratio(-1, 3));
    }

    #[test]
    fn id_compose_is_identity() {
        let n = 4;
        let p = lp(pairpart(), n);
        let id2: Lin = lp(idpart(), n).tensor(&lp(idpart(), n)).unwrap();
        assert_eq!(id2.compose(&p).unwrap(), p);
    }

    #[test]
    fn scale_zero_clears() {
        let p = lp(pairpart(), 3).scale(&Scalar::from_integer(0));
        assert!(p.is_zero());
    }

    #[test]
    fn context_mismatch_is_hard_error() {
        let a = lp(pairpart(), 3);
        let b = lp(pairpart(), 4);
        assert!(matches!(a.add(&b), Err(PartError::ContextMismatch(3, 4))));
    }

    #[test]
    fn sandwich_partition_of_unity() {
        // Σ over all word pairs recovers the combination
        let n = 3;
        let p = lp(
            Partition::make(&[Line], &[Line, Line], &[vec![0, 1], vec![2]]).unwrap(),
            n,
        );
        let words1 = all_words(1);
        let words2 = all_words(2);
        let mut sum = Lin::zero(p.signature().clone(), n);
        for w1 in &words1 {
            for w2 in &words2 {
                sum = sum.add(&sandwich(&p, w1, w2).unwrap()).unwrap();
            }
        }
        assert_eq!(sum, p);
    }

    #[test]
    fn dotted_basis_roundtrip() {
        let n = 3;
        let p = Partition::make(&[Line; 2], &[Line; 2], &[vec![0, 2], vec![1], vec![3]]).unwrap();
        let q = Partition::make(&[Line; 2], &[Line; 2], &[vec![0, 1, 2, 3]]).unwrap();
        let lc = lp(p, n).scale(&Scalar::ratio(2, 7)).add(&lp(q, n).scale(&Scalar::ratio(5, 2))).unwrap();
        let coeffs = to_dotted_basis(&lc).unwrap();
        let back = from_dotted_basis(&coeffs, lc.signature().clone(), n).unwrap();
        assert_eq!(back, lc);
    }

    pub(super) fn all_words(len: usize) -> Vec<DottedWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                for l in [DotLetter::Dot, DotLetter::Single] {
                    let mut w2 = w.clone();
                    w2.push(l);
                    next.push(w2);
                }
            }
            out = next;
        }
        out
    }
}
