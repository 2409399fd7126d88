use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::{is_prime, poly, DivisionRing};
use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 20;

/// An element of GF(p^k), stored as the integer `c0 + c1·p + … + c{k-1}·p^{k-1}`
/// of its coefficient vector over Z_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GfElem(pub u32);

impl GfElem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field GF(p^k) = Z_p[x] / (f).
///
/// Multiplication goes through discrete log/exp tables built once from a
/// primitive element; addition is digit-wise mod p.
#[derive(Clone)]
pub struct GaloisField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Arc<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.k, self.modulus)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

fn check_size(p: u64, k: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::FieldTooLarge { p, k });
    }
    match p.checked_pow(k) {
        Some(q) if q <= MAX_ORDER => Ok(q as u32),
        _ => Err(Error::FieldTooLarge { p, k }),
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl GaloisField {
    /// GF(p^k) with the lexicographically least monic irreducible modulus.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        check_size(p, k)?;
        let modulus = poly::least_irreducible(p, k);
        Self::build(p, k, modulus)
    }

    pub fn with_modulus(p: u64, k: u32, modulus: Vec<u32>) -> Result<Self> {
        check_size(p, k)?;
        let m: Vec<u64> = modulus.iter().map(|&c| u64::from(c)).collect();
        let valid =
            m.len() == k as usize + 1 && m.iter().all(|&c| c < p) && m[k as usize] == 1 && poly::is_irreducible(&m, p);
        if !valid {
            return Err(Error::ReducibleModulus(modulus));
        }
        Self::build(p, k, m)
    }

    fn build(p: u64, k: u32, modulus: Vec<u64>) -> Result<Self> {
        let q = p.pow(k);
        let to_poly = |mut n: u64| -> Vec<u64> {
            let mut c = Vec::with_capacity(k as usize);
            for _ in 0..k {
                c.push(n % p);
                n /= p;
            }
            poly::trim(c)
        };
        let from_poly = |c: &[u64]| -> u32 { c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32 };

        let factors = prime_factors(q - 1);
        let one = vec![1u64];
        let generator = (1..q)
            .map(to_poly)
            .find(|g| factors.iter().all(|r| poly::powmod(g, (q - 1) / r, &modulus, p) != one))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = one.clone();
        for i in 0..q - 1 {
            let idx = from_poly(&cur);
            exp.push(idx);
            log[idx as usize] = i as u32;
            cur = poly::mulmod(&cur, &generator, &modulus, p);
        }
        debug_assert_eq!(cur, one);

        Ok(GaloisField {
            p: p as u32,
            k,
            q: q as u32,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            tables: Arc::new(Tables { exp, log }),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, low degree first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coefficient vector of length k, low degree first.
    pub fn coefficients(&self, a: GfElem) -> Vec<u32> {
        let mut n = a.0;
        (0..self.k)
            .map(|_| {
                let c = n % self.p;
                n /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<GfElem> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::parse("field element", &format!("{coeffs:?}")));
        }
        Ok(GfElem(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)))
    }

    fn digitwise(&self, a: u32, b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut x, mut y) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += op(x % self.p, y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }
}

impl DivisionRing for GaloisField {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(0)
    }

    fn one(&self) -> GfElem {
        GfElem(1)
    }

    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if self.k == 1 {
            GfElem((a.0 + b.0) % self.p)
        } else {
            GfElem(self.digitwise(a.0, b.0, |x, y| x + y))
        }
    }

    fn neg(&self, a: &GfElem) -> GfElem {
        if self.k == 1 {
            GfElem((self.p - a.0) % self.p)
        } else {
            GfElem(self.digitwise(a.0, 0, |x, _| self.p - x))
        }
    }

    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if a.0 == 0 || b.0 == 0 {
            return GfElem(0);
        }
        let t = &self.tables;
        let e = (t.log[a.index()] + t.log[b.index()]) % (self.q - 1);
        GfElem(t.exp[e as usize])
    }

    fn inv(&self, a: &GfElem) -> Result<GfElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let t = &self.tables;
        let e = (self.q - 1 - t.log[a.index()]) % (self.q - 1);
        Ok(GfElem(t.exp[e as usize]))
    }

    fn order(&self) -> Option<u64> {
        Some(u64::from(self.q))
    }

    fn elements(&self) -> Result<Vec<GfElem>> {
        Ok((0..self.q).map(GfElem).collect())
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, _bound: u32) -> GfElem {
        GfElem(rng.gen_range(0..self.q))
    }

    fn parse_element(&self, text: &str) -> Result<GfElem> {
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("field element", text))?;
        self.from_coefficients(&coeffs).map_err(|_| Error::parse("field element", text))
    }

    fn format_element(&self, a: &GfElem) -> String {
        self.coefficients(*a).iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    fn element_arity(&self) -> usize {
        self.k as usize
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook product of coefficient vectors reduced by the modulus.
    fn reference_mul(f: &GaloisField, a: GfElem, b: GfElem) -> GfElem {
        let p = u64::from(f.characteristic());
        let ca: Vec<u64> = f.coefficients(a).iter().map(|&c| c.into()).collect();
        let cb: Vec<u64> = f.coefficients(b).iter().map(|&c| c.into()).collect();
        let m: Vec<u64> = f.modulus().iter().map(|&c| c.into()).collect();
        let mut prod = vec![0u64; ca.len() + cb.len()];
        for (i, x) in ca.iter().enumerate() {
            for (j, y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let k = f.degree() as usize;
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, &mi) in m.iter().enumerate() {
                prod[d - k + i] = (prod[d - k + i] + p * p - c * mi) % p;
            }
        }
        let coeffs: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        f.from_coefficients(&coeffs).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = GaloisField::new(3, 1).unwrap();
        assert_eq!(f.add(&GfElem(2), &GfElem(2)), GfElem(1));
        assert_eq!(f.elements().unwrap(), vec![GfElem(0), GfElem(1), GfElem(2)]);
        assert_eq!(GaloisField::new(2, 1).unwrap().elements().unwrap(), vec![GfElem(0), GfElem(1)]);
    }

    #[test]
    fn gf4_x_squared() {
        let f = GaloisField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let x = f.from_coefficients(&[0, 1]).unwrap();
        let x_plus_1 = f.from_coefficients(&[1, 1]).unwrap();
        assert_eq!(f.mul(&x, &x), x_plus_1);
        assert_eq!(reference_mul(&f, x, x), x_plus_1);
    }

    #[test]
    fn gf9_enumeration_is_distinct() {
        let f = GaloisField::new(3, 2).unwrap();
        let elems = f.elements().unwrap();
        assert_eq!(elems.len(), 9);
        let set: std::collections::HashSet<_> = elems.iter().collect();
        assert_eq!(set.len(), 9);
    }

    #[test]
    fn table_mul_matches_schoolbook() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 1)] {
            let f = GaloisField::new(p, k).unwrap();
            for a in f.elements().unwrap() {
                for b in f.elements().unwrap() {
                    assert_eq!(f.mul(&a, &b), reference_mul(&f, a, b), "{f:?} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn cayley_axioms_up_to_nine() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = GaloisField::new(p, k).unwrap();
            let els = f.elements().unwrap();
            for a in &els {
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                if *a != f.zero() {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, &inv), f.one());
                    let count = els.iter().filter(|b| f.mul(a, b) == f.one()).count();
                    assert_eq!(count, 1, "unique inverse");
                }
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in &els {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GaloisField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(GaloisField::new(1, 1).unwrap_err(), Error::NotPrime(1));
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(matches!(GaloisField::with_modulus(2, 2, vec![1, 0, 1]), Err(Error::ReducibleModulus(_))));
        assert!(GaloisField::with_modulus(3, 2, vec![1, 0, 1]).is_ok());
        assert_eq!(GaloisField::new(3, 1).unwrap().inv(&GfElem(0)), Err(Error::ZeroInverse));
    }

    #[test]
    fn text_round_trip() {
        let f = GaloisField::new(3, 2).unwrap();
        let a = f.parse_element("2,1").unwrap();
        assert_eq!(f.coefficients(a), vec![2, 1]);
        assert_eq!(f.format_element(&a), "2,1");
        assert!(f.parse_element("3,0").is_err());
        assert!(f.parse_element("1").is_err());
    }
}
