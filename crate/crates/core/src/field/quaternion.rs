use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use rand::Rng;

use super::DivisionRing;
use crate::error::{Error, Result};

/// `a + b·i + c·j + d·k` with exact rational components.
///
/// `BigRational` keeps every component in lowest terms with a positive
/// denominator, so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        Quaternion::new(r(a), r(b), r(c), r(d))
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_integers(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_integers(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// Reduced norm a² + b² + c² + d².
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn add(&self, o: &Self) -> Self {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Hamilton product.
    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        // the norm is a sum of squares, zero only at zero
        if n.is_zero() {
            debug_assert!(self.is_zero());
            return Err(Error::ZeroInverse);
        }
        let c = self.conjugate();
        Ok(Quaternion::new(&c.a / &n, &c.b / &n, &c.c / &n, &c.d / &n))
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Largest absolute numerator or denominator among the components.
    pub fn height(&self) -> BigInt {
        self.components().iter().flat_map(|r| [r.numer().abs(), r.denom().clone()]).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split_whitespace()
            .map(BigRational::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("quaternion", s))?;
        match <[BigRational; 4]>::try_from(parts) {
            Ok([a, b, c, d]) => Ok(Quaternion::new(a, b, c, d)),
            Err(_) => Err(Error::parse("quaternion", s)),
        }
    }
}

/// The rational quaternion algebra (−1, −1)_Q, a non-commutative division ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Quaternions;

fn random_rational<G: Rng + ?Sized>(rng: &mut G, bound: u32) -> BigRational {
    let bound = i64::from(bound.max(1));
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl DivisionRing for Quaternions {
    type Elem = Quaternion;

    fn zero(&self) -> Quaternion {
        Quaternion::zero()
    }

    fn one(&self) -> Quaternion {
        Quaternion::one()
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.add(b)
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        a.neg()
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.mul(b)
    }

    fn inv(&self, a: &Quaternion) -> Result<Quaternion> {
        a.inv()
    }

    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Result<Vec<Quaternion>> {
        Err(Error::Unsupported("element enumeration"))
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, bound: u32) -> Quaternion {
        Quaternion::new(
            random_rational(rng, bound),
            random_rational(rng, bound),
            random_rational(rng, bound),
            random_rational(rng, bound),
        )
    }

    fn parse_element(&self, text: &str) -> Result<Quaternion> {
        text.parse()
    }

    fn format_element(&self, a: &Quaternion) -> String {
        a.to_string()
    }

    fn element_arity(&self) -> usize {
        1
    }

    fn is_commutative(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = Quaternion::one().neg();
        assert_eq!(i.mul(&i), minus_one);
        assert_eq!(j.mul(&j), minus_one);
        assert_eq!(k.mul(&k), minus_one);
        assert_eq!(i.mul(&j).mul(&k), minus_one);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
    }

    #[test]
    fn seeded_ring_axioms() {
        let h = Quaternions;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut noncommuting = 0;
        for _ in 0..1000 {
            let a = h.random_element(&mut rng, 8);
            let b = h.random_element(&mut rng, 8);
            let c = h.random_element(&mut rng, 8);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(b.add(&c).mul(&a), b.mul(&a).add(&c.mul(&a)));
            if !a.is_zero() {
                let inv = a.inv().unwrap();
                assert_eq!(a.mul(&inv), Quaternion::one());
                assert_eq!(inv.mul(&a), Quaternion::one());
            }
            if a.mul(&b) != b.mul(&a) {
                noncommuting += 1;
            }
        }
        assert!(noncommuting > 0);
    }

    #[test]
    fn canonical_components() {
        let q: Quaternion = "2/4 -3/6 0/5 4/-8".parse().unwrap();
        assert_eq!(q, "1/2 -1/2 0 -1/2".parse().unwrap());
        for r in q.components() {
            assert!(r.denom().is_positive());
        }
        assert_eq!(q.to_string(), "1/2 -1/2 0 -1/2");
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Quaternion::zero().inv(), Err(Error::ZeroInverse));
        assert!("1 2 3".parse::<Quaternion>().is_err());
        assert_eq!(Quaternions.elements(), Err(Error::Unsupported("element enumeration")));
    }
}
