//! Exact division-ring arithmetic.
//!
//! Two coordinate rings are supported behind the [`DivisionRing`] trait:
//! finite fields GF(p^k) ([`GaloisField`]) and the rational quaternions
//! ([`Quaternions`]). Elements are plain values in canonical form, so
//! structural equality is ring equality.

mod galois;
pub mod poly;
mod quaternion;

use std::fmt;
use std::hash::Hash;

use rand::Rng;

use crate::error::Result;

pub use galois::{GaloisField, GfElem};
pub use quaternion::{Quaternion, Quaternions};

/// A division ring with exact, canonical elements.
pub trait DivisionRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Number of elements, or `None` for an infinite ring.
    fn order(&self) -> Option<u64>;

    fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Every element exactly once, in a fixed order. Finite rings only.
    fn elements(&self) -> Result<Vec<Self::Elem>>;

    /// A random element. For infinite rings `bound` caps the size of
    /// numerators and denominators; finite rings sample uniformly.
    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, bound: u32) -> Self::Elem;

    fn parse_element(&self, text: &str) -> Result<Self::Elem>;
    fn format_element(&self, a: &Self::Elem) -> String;

    /// How many comma-separated tokens one element occupies in text form.
    fn element_arity(&self) -> usize;

    /// Whether multiplication commutes for every pair of elements.
    fn is_commutative(&self) -> bool;
}

/// What ring to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    FiniteField { p: u64, k: u32, modulus: Option<Vec<u32>> },
    RationalQuaternion,
}

impl RingDescriptor {
    /// GF(p^k) with the lexicographically least monic irreducible modulus.
    pub fn finite(p: u64, k: u32) -> Self {
        RingDescriptor::FiniteField { p, k, modulus: None }
    }

    pub fn finite_with_modulus(p: u64, k: u32, modulus: Vec<u32>) -> Self {
        RingDescriptor::FiniteField { p, k, modulus: Some(modulus) }
    }
}

/// A constructed ring, dispatched at runtime by callers that need both kinds.
#[derive(Debug, Clone)]
pub enum RingContext {
    Finite(GaloisField),
    Quaternion(Quaternions),
}

impl RingContext {
    pub fn make(descriptor: &RingDescriptor) -> Result<Self> {
        match descriptor {
            RingDescriptor::FiniteField { p, k, modulus } => {
                let field = match modulus {
                    Some(m) => GaloisField::with_modulus(*p, *k, m.clone())?,
                    None => GaloisField::new(*p, *k)?,
                };
                Ok(RingContext::Finite(field))
            }
            RingDescriptor::RationalQuaternion => Ok(RingContext::Quaternion(Quaternions)),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
