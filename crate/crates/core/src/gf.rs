//! Exact arithmetic in GF(p^f).
//!
//! Elements are coefficient vectors over GF(p) reduced modulo a fixed monic
//! irreducible polynomial of degree `f`. The default modulus is the
//! lexicographically smallest irreducible, comparing coefficients from the
//! constant term upwards, so every run builds the same field model.
//!
//! The integer encoding of an element is `sum c_i p^i`; it orders elements,
//! breaks ties, and indexes the vector domains built on top of the field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, prime_divisors};

/// Parameters of GF(p^f): characteristic, degree and modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    f: u32,
    /// Low-degree first, length `f + 1`, leading coefficient 1.
    modulus: Vec<u32>,
    order: u64,
}

impl FieldSpec {
    /// GF(p^f) with the default (lexicographically smallest) modulus.
    pub fn new(p: u32, f: u32) -> Result<Arc<FieldSpec>> {
        let order = Self::check_params(p, f)?;
        let modulus = smallest_irreducible(p, f);
        Ok(Arc::new(FieldSpec {
            p,
            f,
            modulus,
            order,
        }))
    }

    /// GF(p^f) with an explicit modulus given low-degree first (`f + 1` entries).
    pub fn with_modulus(p: u32, f: u32, modulus: Vec<u32>) -> Result<Arc<FieldSpec>> {
        let order = Self::check_params(p, f)?;
        if modulus.len() != f as usize + 1 {
            return Err(Error::domain(format!(
                "modulus must have {} coefficients, got {}",
                f + 1,
                modulus.len()
            )));
        }
        if modulus[f as usize] != 1 {
            return Err(Error::domain("modulus must be monic"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::domain("modulus coefficients must lie in 0..p"));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::domain(format!(
                "modulus {modulus:?} is not irreducible over GF({p})"
            )));
        }
        Ok(Arc::new(FieldSpec {
            p,
            f,
            modulus,
            order,
        }))
    }

    fn check_params(p: u32, f: u32) -> Result<u64> {
        if !is_prime(p as u64) {
            return Err(Error::domain(format!("characteristic {p} is not prime")));
        }
        if f == 0 {
            return Err(Error::domain("extension degree must be at least 1"));
        }
        (p as u64)
            .checked_pow(f)
            .filter(|&q| q < (1u64 << 62))
            .ok_or_else(|| Error::domain(format!("field of order {p}^{f} is too large")))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// Field order `q = p^f`.
    pub fn q(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            spec: Arc::clone(self),
            coeffs: vec![0; self.f as usize],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.scalar(1)
    }

    /// Image of an integer in the prime field.
    pub fn scalar(self: &Arc<Self>, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = (c % self.p as u64) as u32;
        e
    }

    /// The class of `x`, a root of the modulus.
    pub fn root(self: &Arc<Self>) -> FieldElement {
        if self.f == 1 {
            // x = -c0 in GF(p)[x]/(x + c0)
            return self.scalar((self.p - self.modulus[0]) as u64);
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.f as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::domain(format!(
                "expected {} coefficients in 0..{}",
                self.f, self.p
            )));
        }
        Ok(FieldElement {
            spec: Arc::clone(self),
            coeffs: coeffs.to_vec(),
        })
    }

    /// Element with integer encoding `code = sum c_i p^i`.
    pub fn element(self: &Arc<Self>, code: u64) -> Result<FieldElement> {
        if code >= self.order {
            return Err(Error::domain(format!(
                "encoding {code} out of range for GF({})",
                self.order
            )));
        }
        let mut e = self.zero();
        let mut rest = code;
        for c in e.coeffs.iter_mut() {
            *c = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        Ok(e)
    }

    /// All elements in increasing encoding order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |code| self.element(code).expect("code below q"))
    }

    /// The generator of the full multiplicative group with smallest encoding.
    pub fn primitive_element(self: &Arc<Self>) -> FieldElement {
        self.subfield_generator(self.f).expect("f divides itself")
    }

    /// Generator of the multiplicative group of the subfield of order `p^k`,
    /// chosen with the smallest encoding.
    pub fn subfield_generator(self: &Arc<Self>, k: u32) -> Result<FieldElement> {
        if k == 0 || !self.f.is_multiple_of(k) {
            return Err(Error::domain(format!(
                "{k} does not divide the extension degree {}",
                self.f
            )));
        }
        let target = (self.p as u64).pow(k) - 1;
        (1..self.order)
            .map(|code| self.element(code).expect("code below q"))
            .find(|e| e.multiplicative_order() == Some(target))
            .ok_or_else(|| {
                Error::integrity("no element of the expected order; modulus is reducible")
            })
    }

    pub fn automorphism(self: &Arc<Self>, k: i64) -> FieldAutomorphism {
        FieldAutomorphism::new(self, k)
    }

    fn same(&self, other: &FieldSpec) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

/// An element of GF(p^f); coefficients are always fully reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn encoding(&self) -> u64 {
        let p = self.spec.p as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c as u64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.spec.same(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let p = self.spec.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| ((a as u64 + b as u64) % p as u64) as u32)
            .collect();
        Ok(FieldElement {
            spec: Arc::clone(&self.spec),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        self.checked_add(&other.negated())
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let spec = &self.spec;
        let p = spec.p as u64;
        let f = spec.f as usize;
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u64 * b as u64) % p;
            }
        }
        // Reduce from the top using the monic modulus.
        for top in (f..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &m) in spec.modulus[..f].iter().enumerate() {
                let k = top - f + j;
                prod[k] = (prod[k] + c * (p - m as u64)) % p;
            }
        }
        Ok(FieldElement {
            spec: Arc::clone(spec),
            coeffs: prod[..f].iter().map(|&c| c as u32).collect(),
        })
    }

    fn negated(&self) -> FieldElement {
        let p = self.spec.p;
        FieldElement {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.spec.order - 2))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.checked_mul(&other.inv()?)
    }

    /// `x^(p^k)`; `k` is taken modulo `f`, so negative powers are allowed.
    pub fn frobenius_pow(&self, k: i64) -> FieldElement {
        let f = self.spec.f as i64;
        let steps = k.rem_euclid(f);
        let mut x = self.clone();
        for _ in 0..steps {
            x = x.pow(self.spec.p as u64);
        }
        x
    }

    /// The Suzuki automorphism `x -> x^(2^(m+1))` of GF(2^(2m+1)).
    pub fn suzuki_sigma(&self) -> Result<FieldElement> {
        let spec = &self.spec;
        if spec.p != 2 || spec.f.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "sigma needs p = 2 and odd degree, got GF({}^{})",
                spec.p, spec.f
            )));
        }
        let m = (spec.f as i64 - 1) / 2;
        Ok(self.frobenius_pow(m + 1))
    }

    /// Order in the multiplicative group; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.spec.order - 1;
        let mut order = n;
        for r in prime_divisors(n) {
            while order.is_multiple_of(r) && self.pow(order / r).is_one() {
                order /= r;
            }
        }
        Some(order)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.spec.order, self.encoding())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encoding())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live in different fields; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}

/// The automorphism `x -> x^(p^k)` of GF(p^f), `0 <= k < f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldAutomorphism {
    spec: Arc<FieldSpec>,
    k: u32,
}

impl FieldAutomorphism {
    pub fn new(spec: &Arc<FieldSpec>, k: i64) -> Self {
        FieldAutomorphism {
            spec: Arc::clone(spec),
            k: k.rem_euclid(spec.f as i64) as u32,
        }
    }

    pub fn identity(spec: &Arc<FieldSpec>) -> Self {
        Self::new(spec, 0)
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if !self.spec.same(&x.spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(x.frobenius_pow(self.k as i64))
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &FieldAutomorphism) -> Result<FieldAutomorphism> {
        if !self.spec.same(&other.spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(FieldAutomorphism::new(
            &self.spec,
            self.k as i64 + other.k as i64,
        ))
    }

    pub fn order(&self) -> u32 {
        let f = self.spec.f;
        f / gcd(self.k, f)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// Polynomials over GF(p), low-degree first, no trailing zeros.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Remainder of `a` modulo a nonzero `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inverse(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        for (j, &mj) in m.iter().enumerate() {
            let k = top - dm + j;
            r[k] = (r[k] + c * (p - mj)) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = poly_rem(&[1], m, p);
    let mut base = poly_rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, m, p);
        }
        base = poly_mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^k) mod m`.
fn x_pow_p_pow(k: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = poly_rem(&[0, 1], m, p);
    for _ in 0..k {
        r = poly_powmod(&r, p, m, p);
    }
    r
}

/// Rabin's test for a monic polynomial of degree `f >= 1`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    let f = (m.len() - 1) as u32;
    let p = p as u64;
    if f == 1 {
        return true;
    }
    let sub_x = |mut r: Vec<u64>| {
        r.resize(r.len().max(2), 0);
        r[1] = (r[1] + p - 1) % p;
        trim(r)
    };
    if sub_x(x_pow_p_pow(f, &m, p)) != poly_rem(&[], &m, p) {
        return false;
    }
    prime_divisors(f as u64).into_iter().all(|l| {
        let h = sub_x(x_pow_p_pow(f / l as u32, &m, p));
        poly_gcd(&m, &h, p).len() == 1
    })
}

/// Smallest monic irreducible of degree `f`, comparing `c_0` first.
fn smallest_irreducible(p: u32, f: u32) -> Vec<u32> {
    let total = (p as u64).pow(f);
    (0..total)
        .map(|n| {
            // c_0 is the most significant digit of n
            let mut coeffs = vec![0u32; f as usize + 1];
            let mut rest = n;
            for i in (0..f as usize).rev() {
                coeffs[i] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            coeffs[f as usize] = 1;
            coeffs
        })
        .find(|c| is_irreducible(c, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8_conway() -> Arc<FieldSpec> {
        // x^3 + x + 1
        FieldSpec::with_modulus(2, 3, vec![1, 1, 0, 1]).unwrap()
    }

    #[test]
    fn mul_reduces_modulo_x3_x_1() {
        let k = gf8_conway();
        let x = k.root();
        let x2 = &x * &x;
        let prod = &x * &x2;
        // x^3 = x + 1
        assert_eq!(prod.coeffs(), &[1, 1, 0]);
    }

    #[test]
    fn char_two_addition_and_unit_inverse() {
        let k = FieldSpec::new(2, 3).unwrap();
        for a in k.elements() {
            assert!((&a + &a).is_zero());
        }
        assert_eq!(k.one().inv().unwrap(), k.one());
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = FieldSpec::new(2, 3).unwrap().one();
        let b = FieldSpec::new(3, 2).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(Error::SpecMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::SpecMismatch));
    }

    #[test]
    fn default_modulus_is_lexicographic_from_constant_term() {
        // (c0,c1,c2): (1,0,1) = 1 + x^2 + x^3 precedes (1,1,0) = 1 + x + x^3
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(5, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^4 + 1 = (x+1)^4 over GF(2); x^4 + x^2 + 1 = (x^2+x+1)^2
        assert!(FieldSpec::with_modulus(2, 4, vec![1, 0, 0, 0, 1]).is_err());
        assert!(FieldSpec::with_modulus(2, 4, vec![1, 0, 1, 0, 1]).is_err());
        assert!(FieldSpec::with_modulus(2, 4, vec![1, 1, 0, 0, 1]).is_ok());
        assert!(FieldSpec::new(4, 1).is_err());
        assert!(FieldSpec::new(2, 0).is_err());
    }

    fn exhaustive_axioms(k: &Arc<FieldSpec>) {
        let els: Vec<_> = k.elements().collect();
        for a in &els {
            if !a.is_zero() {
                assert!((a * &a.inv().unwrap()).is_one());
            }
            assert!((a + &(-a)).is_zero());
            for b in &els {
                assert_eq!(a * b, b * a);
                for c in &els {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    assert_eq!(&(a + b) + c, a + &(b + c));
                }
            }
        }
    }

    #[test]
    fn field_axioms_gf8_gf9() {
        exhaustive_axioms(&FieldSpec::new(2, 3).unwrap());
        exhaustive_axioms(&FieldSpec::new(3, 2).unwrap());
    }

    #[test]
    fn frobenius_is_a_ring_homomorphism() {
        for k in [FieldSpec::new(2, 3).unwrap(), FieldSpec::new(2, 6).unwrap()] {
            let els: Vec<_> = k.elements().collect();
            for a in &els {
                assert_eq!(a.frobenius_pow(0), *a);
                assert_eq!(a.frobenius_pow(1).frobenius_pow(k.f() as i64 - 1), *a);
                for b in &els {
                    assert_eq!(
                        (a + b).frobenius_pow(1),
                        a.frobenius_pow(1) + b.frobenius_pow(1)
                    );
                    assert_eq!(
                        (a * b).frobenius_pow(1),
                        a.frobenius_pow(1) * b.frobenius_pow(1)
                    );
                }
            }
        }
        let k4 = FieldSpec::new(2, 2).unwrap();
        let x = k4.root();
        assert_eq!(x.frobenius_pow(1), &x * &x);
    }

    #[test]
    fn sigma_squared_is_squaring() {
        let k8 = FieldSpec::new(2, 3).unwrap();
        assert!(k8.zero().suzuki_sigma().unwrap().is_zero());
        assert!(k8.one().suzuki_sigma().unwrap().is_one());
        let x = k8.root();
        assert_eq!(x.suzuki_sigma().unwrap(), x.pow(4));
        for k in [k8, FieldSpec::new(2, 5).unwrap()] {
            for a in k.elements() {
                let s2 = a.suzuki_sigma().unwrap().suzuki_sigma().unwrap();
                assert_eq!(s2, a.frobenius_pow(1));
            }
        }
        assert!(FieldSpec::new(2, 4).unwrap().one().suzuki_sigma().is_err());
        assert!(FieldSpec::new(3, 3).unwrap().one().suzuki_sigma().is_err());
    }

    #[test]
    fn subfield_generators() {
        let k2 = FieldSpec::new(2, 3).unwrap();
        assert!(k2.subfield_generator(1).unwrap().is_one());
        let z = k2.subfield_generator(3).unwrap();
        // exhaustive powering oracle
        let mut order = 1;
        let mut acc = z.clone();
        while !acc.is_one() {
            acc = &acc * &z;
            order += 1;
        }
        assert_eq!(order, 7);
        assert!(k2.subfield_generator(2).is_err());

        let k64 = FieldSpec::new(2, 6).unwrap();
        let z = k64.subfield_generator(2).unwrap();
        assert!(!z.is_one());
        assert!(z.pow(3).is_one());
        // smallest such encoding among all 64 elements
        let first = k64
            .elements()
            .find(|e| !e.is_one() && e.pow(3).is_one())
            .unwrap();
        assert_eq!(z, first);
    }

    #[test]
    fn subfield_generator_powers_form_subfield() {
        for (p, f, k) in [(2, 6, 2), (2, 6, 3), (3, 4, 2), (2, 4, 2)] {
            let spec = FieldSpec::new(p, f).unwrap();
            let z = spec.subfield_generator(k).unwrap();
            let order = (p as u64).pow(k) - 1;
            assert_eq!(z.multiplicative_order(), Some(order));
            let mut sub: Vec<FieldElement> = (0..order).map(|e| z.pow(e)).collect();
            sub.push(spec.zero());
            for a in &sub {
                for b in &sub {
                    assert!(sub.contains(&(a + b)));
                }
            }
        }
    }

    #[test]
    fn automorphism_group_is_cyclic_of_order_f() {
        let k = FieldSpec::new(2, 6).unwrap();
        let phi = k.automorphism(1);
        assert_eq!(phi.order(), 6);
        assert_eq!(k.automorphism(2).order(), 3);
        let mut acc = FieldAutomorphism::identity(&k);
        for _ in 0..6 {
            acc = acc.compose(&phi).unwrap();
        }
        assert_eq!(acc, FieldAutomorphism::identity(&k));
        assert_eq!(k.automorphism(-1).exponent(), 5);
    }

    #[test]
    fn encoding_round_trip() {
        let k = FieldSpec::new(3, 2).unwrap();
        for code in 0..9 {
            assert_eq!(k.element(code).unwrap().encoding(), code);
        }
        assert!(k.element(9).is_err());
    }
}
