//! Exact arithmetic over the rationals, prime fields and towers of simple
//! algebraic extensions.
//!
//! A [`Field`] is a cheap handle (internally reference counted) describing one
//! of three kinds of coefficient domain: `Q`, `GF(p)` or a simple extension
//! `K[t]/(m)` of another field. Elements carry a canonical representation so
//! that equality is plain representation equality: reduced fractions over `Q`,
//! least residues in `GF(p)`, and reduced coordinate vectors of length
//! `deg m` in an extension.
//!
//! Characteristics 2 and 3 are rejected at construction; the whole pipeline
//! assumes they do not occur (the quartic and cubic root formulas divide by 2
//! and 3, and the quadric normal forms need char != 2). Extension towers are
//! limited to depth 2.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

mod factor;
mod upoly;

pub use upoly::UPoly;

/// Maximum allowed extension tower depth.
pub const MAX_TOWER_DEPTH: usize = 2;

#[derive(Debug, thiserror::Error)]
pub enum ArithError {
    #[error("characteristic {0} is not supported (must be a prime other than 2 and 3)")]
    BadCharacteristic(u64),
    #[error("reducible minimal polynomial")]
    ReducibleMinPoly,
    #[error("minimal polynomial must be monic of degree >= 1")]
    BadMinPoly,
    #[error("extension tower depth would exceed {MAX_TOWER_DEPTH}")]
    TowerTooDeep,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("factorization is not implemented over this field")]
    UnsupportedField,
}

#[derive(Debug)]
enum FieldRepr {
    Rationals,
    Prime { p: u64 },
    Extension { base: Field, minpoly: UPoly, gen: String },
}

/// A coefficient field: `Q`, `GF(p)` or a simple algebraic extension.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldRepr>);

/// An element of some [`Field`]. The owning field is tracked by the caller;
/// all operations go through the field handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Rat(BigRational),
    Fp(u64),
    /// Coordinates with respect to the power basis of the extension
    /// generator, ascending, of length exactly `deg(minpoly)`.
    Ext(Vec<Elem>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (FieldRepr::Rationals, FieldRepr::Rationals) => true,
            (FieldRepr::Prime { p: a }, FieldRepr::Prime { p: b }) => a == b,
            (
                FieldRepr::Extension { base: b1, minpoly: m1, .. },
                FieldRepr::Extension { base: b2, minpoly: m2, .. },
            ) => b1 == b2 && m1.coeffs() == m2.coeffs(),
            _ => false,
        }
    }
}
impl Eq for Field {}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "non-invertible element mod {p}");
    t.rem_euclid(p as i128) as u64
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldRepr::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field, ArithError> {
        if p == 2 || p == 3 || !is_prime_u64(p) || p >= (1 << 62) {
            return Err(ArithError::BadCharacteristic(p));
        }
        Ok(Field(Arc::new(FieldRepr::Prime { p })))
    }

    /// Extend this field by a monic irreducible polynomial. A linear minimal
    /// polynomial collapses to the base field. Irreducibility is verified.
    pub fn extend(&self, minpoly: &UPoly, gen: &str) -> Result<Field, ArithError> {
        self.extend_inner(minpoly, gen, true)
    }

    /// Same as [`Field::extend`] but skips the irreducibility check; for
    /// internal use when the factorization that produced `minpoly` already
    /// guarantees it.
    pub(crate) fn extend_unchecked(&self, minpoly: &UPoly, gen: &str) -> Result<Field, ArithError> {
        self.extend_inner(minpoly, gen, false)
    }

    fn extend_inner(&self, minpoly: &UPoly, gen: &str, check: bool) -> Result<Field, ArithError> {
        if minpoly.is_zero() || minpoly.field() != self {
            return Err(ArithError::BadMinPoly);
        }
        let d = minpoly.degree();
        if d == 0 || !self.is_one(minpoly.lead()) {
            return Err(ArithError::BadMinPoly);
        }
        if d == 1 {
            // collapse: a linear minimal polynomial forces no extension
            return Ok(self.clone());
        }
        if self.depth() + 1 > MAX_TOWER_DEPTH {
            return Err(ArithError::TowerTooDeep);
        }
        if check {
            let facs = minpoly.factor_seeded(0x5eed)?;
            if facs.len() != 1 || facs[0].1 != 1 {
                return Err(ArithError::ReducibleMinPoly);
            }
        }
        Ok(Field(Arc::new(FieldRepr::Extension {
            base: self.clone(),
            minpoly: minpoly.clone(),
            gen: gen.to_string(),
        })))
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, FieldRepr::Rationals)
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(&*self.0, FieldRepr::Prime { .. })
    }

    pub fn is_extension(&self) -> bool {
        matches!(&*self.0, FieldRepr::Extension { .. })
    }

    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            FieldRepr::Extension { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn minpoly(&self) -> Option<&UPoly> {
        match &*self.0 {
            FieldRepr::Extension { minpoly, .. } => Some(minpoly),
            _ => None,
        }
    }

    pub fn gen_name(&self) -> Option<&str> {
        match &*self.0 {
            FieldRepr::Extension { gen, .. } => Some(gen),
            _ => None,
        }
    }

    /// Tower depth: 0 for `Q` and `GF(p)`, +1 per extension level.
    pub fn depth(&self) -> usize {
        match &*self.0 {
            FieldRepr::Extension { base, .. } => base.depth() + 1,
            _ => 0,
        }
    }

    /// 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldRepr::Rationals => 0,
            FieldRepr::Prime { p } => *p,
            FieldRepr::Extension { base, .. } => base.characteristic(),
        }
    }

    /// Degree over the prime field (or over `Q`).
    pub fn absolute_degree(&self) -> usize {
        match &*self.0 {
            FieldRepr::Extension { base, minpoly, .. } => base.absolute_degree() * minpoly.degree(),
            _ => 1,
        }
    }

    /// Number of elements of a finite field.
    pub fn size(&self) -> Option<BigUint> {
        let p = self.characteristic();
        if p == 0 {
            return None;
        }
        Some(BigUint::from(p).pow(self.absolute_degree() as u32))
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            FieldRepr::Rationals => Elem::Rat(BigRational::zero()),
            FieldRepr::Prime { .. } => Elem::Fp(0),
            FieldRepr::Extension { base, minpoly, .. } => {
                Elem::Ext(vec![base.zero(); minpoly.degree()])
            }
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match &*self.0 {
            FieldRepr::Rationals => Elem::Rat(BigRational::from(BigInt::from(n))),
            FieldRepr::Prime { p } => Elem::Fp((n as i128).rem_euclid(*p as i128) as u64),
            FieldRepr::Extension { base, minpoly, .. } => {
                let mut v = vec![base.zero(); minpoly.degree()];
                v[0] = base.from_i64(n);
                Elem::Ext(v)
            }
        }
    }

    pub fn from_rational(&self, num: i64, den: i64) -> Elem {
        assert!(den != 0);
        self.div(&self.from_i64(num), &self.from_i64(den)).expect("nonzero denominator")
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            FieldRepr::Rationals => Elem::Rat(BigRational::from(n.clone())),
            FieldRepr::Prime { p } => {
                let r = n.mod_floor_u64(*p);
                Elem::Fp(r)
            }
            FieldRepr::Extension { base, minpoly, .. } => {
                let mut v = vec![base.zero(); minpoly.degree()];
                v[0] = base.from_bigint(n);
                Elem::Ext(v)
            }
        }
    }

    /// The extension generator as an element of `self`.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            FieldRepr::Extension { base, minpoly, .. } => {
                let d = minpoly.degree();
                let mut v = vec![base.zero(); d];
                if d >= 2 {
                    v[1] = base.one();
                }
                Some(Elem::Ext(v))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_zero(),
            Elem::Fp(x) => *x == 0,
            Elem::Ext(v) => {
                let base = self.base().expect("Ext elem over non-extension field");
                v.iter().all(|c| base.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldRepr::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (FieldRepr::Prime { p }, Elem::Fp(x), Elem::Fp(y)) => {
                let s = x + y;
                Elem::Fp(if s >= *p { s - p } else { s })
            }
            (FieldRepr::Extension { base, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                Elem::Ext(x.iter().zip(y).map(|(u, v)| base.add(u, v)).collect())
            }
            _ => panic!("element does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (FieldRepr::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (FieldRepr::Prime { p }, Elem::Fp(x)) => Elem::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldRepr::Extension { base, .. }, Elem::Ext(x)) => {
                Elem::Ext(x.iter().map(|c| base.neg(c)).collect())
            }
            _ => panic!("element does not belong to field {self}"),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldRepr::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (FieldRepr::Prime { p }, Elem::Fp(x), Elem::Fp(y)) => Elem::Fp(mul_mod(*x, *y, *p)),
            (FieldRepr::Extension { base, minpoly, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                let prod = upoly::raw_mul(base, x, y);
                let red = upoly::raw_rem(base, &prod, minpoly.coeffs());
                Elem::Ext(upoly::raw_pad(base, red, minpoly.degree()))
            }
            _ => panic!("element does not belong to field {self}"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem, ArithError> {
        if self.is_zero(a) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (FieldRepr::Rationals, Elem::Rat(x)) => Elem::Rat(x.recip()),
            (FieldRepr::Prime { p }, Elem::Fp(x)) => Elem::Fp(inv_mod(*x, *p)),
            (FieldRepr::Extension { base, minpoly, .. }, Elem::Ext(x)) => {
                let f = UPoly::from_coeffs(base.clone(), minpoly.var(), x.clone());
                let (g, _, t) = minpoly.xgcd(&f);
                // gcd must be a nonzero constant since minpoly is irreducible
                debug_assert_eq!(g.degree(), 0);
                let c = base.inv(g.lead())?;
                let inv = t.scale(&c);
                Elem::Ext(upoly::raw_pad(base, inv.coeffs().to_vec(), minpoly.degree()))
            }
            _ => panic!("element does not belong to field {self}"),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, e: i64) -> Elem {
        if e < 0 {
            let inv = self.inv(a).expect("negative power of zero");
            return self.pow(&inv, -e);
        }
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_biguint(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
        }
        acc
    }

    /// True when `other` appears in the tower under `self` (or equals it).
    pub fn has_subfield(&self, other: &Field) -> bool {
        if self == other {
            return true;
        }
        match &*self.0 {
            FieldRepr::Extension { base, .. } => base.has_subfield(other),
            _ => false,
        }
    }

    /// Embed an element of a subfield of `self` into `self`.
    pub fn embed(&self, from: &Field, a: &Elem) -> Elem {
        if self == from {
            return a.clone();
        }
        match &*self.0 {
            FieldRepr::Extension { base, minpoly, .. } => {
                let inner = base.embed(from, a);
                let mut v = vec![base.zero(); minpoly.degree()];
                v[0] = inner;
                Elem::Ext(v)
            }
            _ => panic!("{from} is not a subfield of {self}"),
        }
    }

    /// If `a` actually lies in the base field of this extension, return it
    /// there.
    pub fn try_descend(&self, a: &Elem) -> Option<Elem> {
        match (&*self.0, a) {
            (FieldRepr::Extension { base, .. }, Elem::Ext(v)) => {
                if v[1..].iter().all(|c| base.is_zero(c)) {
                    Some(v[0].clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// A uniformly random element (used by randomized factoring).
    pub fn random(&self, rng: &mut impl rand::Rng) -> Elem {
        match &*self.0 {
            FieldRepr::Rationals => Elem::Rat(BigRational::from(BigInt::from(rng.gen_range(-50i64..=50)))),
            FieldRepr::Prime { p } => Elem::Fp(rng.gen_range(0..*p)),
            FieldRepr::Extension { base, minpoly, .. } => {
                Elem::Ext((0..minpoly.degree()).map(|_| base.random(rng)).collect())
            }
        }
    }

    /// Format an element using the tower's generator names.
    pub fn fmt_elem(&self, a: &Elem) -> String {
        match (&*self.0, a) {
            (FieldRepr::Rationals, Elem::Rat(r)) => format!("{r}"),
            (FieldRepr::Prime { .. }, Elem::Fp(x)) => format!("{x}"),
            (FieldRepr::Extension { base, gen, .. }, Elem::Ext(v)) => {
                let mut parts: Vec<String> = Vec::new();
                for (i, c) in v.iter().enumerate() {
                    if base.is_zero(c) {
                        continue;
                    }
                    let cs = base.fmt_elem(c);
                    let cs = if cs.contains(['+', '-']) && !cs.starts_with('-') || cs.contains(' ') {
                        format!("({cs})")
                    } else {
                        cs
                    };
                    let part = match i {
                        0 => cs,
                        1 if base.is_one(c) => gen.clone(),
                        1 => format!("{cs}*{gen}"),
                        _ if base.is_one(c) => format!("{gen}^{i}"),
                        _ => format!("{cs}*{gen}^{i}"),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" + ")
                }
            }
            _ => panic!("element does not belong to field"),
        }
    }

    /// Rational value of an element of `Q` (panics otherwise).
    pub fn as_rational(a: &Elem) -> &BigRational {
        match a {
            Elem::Rat(r) => r,
            _ => panic!("not a rational element"),
        }
    }

    /// Approximate a tower element numerically by substituting complex root
    /// approximations for the generators; used only for diagnostics.
    pub fn sqrt(&self, a: &Elem) -> Option<Elem> {
        // roots of y^2 - a in this field
        let var = "y".to_string();
        let f = UPoly::from_coeffs(
            self.clone(),
            &var,
            vec![self.neg(a), self.zero(), self.one()],
        );
        let roots = f.roots_in(self).ok()?;
        roots.into_iter().next().map(|(r, _)| r)
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}
impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldRepr::Rationals => write!(f, "Q"),
            FieldRepr::Prime { p } => write!(f, "GF({p})"),
            FieldRepr::Extension { base, minpoly, gen } => {
                write!(f, "{base}({gen} | {})", minpoly)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn rational_basics() {
        let q = Field::rationals();
        let a = q.from_rational(2, 3);
        let b = q.from_rational(-1, 6);
        assert_eq!(q.add(&a, &b), q.from_rational(1, 2));
        assert_eq!(q.mul(&a, &b), q.from_rational(-1, 9));
        assert!(q.is_one(&q.mul(&a, &q.inv(&a).unwrap())));
    }

    #[test]
    fn char_2_and_3_rejected() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(3).is_err());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(32003).is_ok());
    }

    #[test]
    fn prime_field_ops() {
        let f = Field::prime(101).unwrap();
        let a = f.from_i64(-5);
        assert_eq!(a, Elem::Fp(96));
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
    }

    #[test]
    fn linear_minpoly_collapses() {
        let q = Field::rationals();
        let t = UPoly::from_coeffs(q.clone(), "t", vec![q.from_i64(-2), q.one()]);
        let l = q.extend(&t, "g").unwrap();
        assert_eq!(l, q);
    }

    #[test]
    fn quadratic_extension_defining_relation() {
        let q = Field::rationals();
        // t^2 - 2
        let t2 = UPoly::from_coeffs(q.clone(), "t", vec![q.from_i64(-2), q.zero(), q.one()]);
        let l = q.extend(&t2, "s2").unwrap();
        let g = l.generator().unwrap();
        assert_eq!(l.mul(&g, &g), l.from_i64(2));
        let inv = l.inv(&g).unwrap();
        assert!(l.is_one(&l.mul(&g, &inv)));
    }

    #[test]
    fn reducible_minpoly_rejected() {
        let q = Field::rationals();
        // t^2 - 1 = (t-1)(t+1)
        let f = UPoly::from_coeffs(q.clone(), "t", vec![q.from_i64(-1), q.zero(), q.one()]);
        assert!(matches!(q.extend(&f, "g"), Err(ArithError::ReducibleMinPoly)));
    }

    #[test]
    fn tower_depth_limit() {
        let q = Field::rationals();
        let t2 = UPoly::from_coeffs(q.clone(), "t", vec![q.from_i64(-2), q.zero(), q.one()]);
        let l1 = q.extend(&t2, "a").unwrap();
        // u^2 - a over l1
        let g = l1.generator().unwrap();
        let u2 = UPoly::from_coeffs(l1.clone(), "u", vec![l1.neg(&g), l1.zero(), l1.one()]);
        let l2 = l1.extend(&u2, "b").unwrap();
        assert_eq!(l2.depth(), 2);
        let h = l2.generator().unwrap();
        let v2 = UPoly::from_coeffs(l2.clone(), "v", vec![l2.neg(&h), l2.zero(), l2.one()]);
        assert!(matches!(l2.extend(&v2, "c"), Err(ArithError::TowerTooDeep)));
    }

    #[test]
    fn field_axioms_randomized() {
        let q = Field::rationals();
        let f101 = Field::prime(101).unwrap();
        let t2 = UPoly::from_coeffs(q.clone(), "t", vec![q.from_i64(-2), q.zero(), q.one()]);
        let l = q.extend(&t2, "s").unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for field in [&q, &f101, &l] {
            for _ in 0..50 {
                let a = field.random(&mut rng);
                let b = field.random(&mut rng);
                let c = field.random(&mut rng);
                let ab_c = field.mul(&field.add(&a, &b), &c);
                let ac_bc = field.add(&field.mul(&a, &c), &field.mul(&b, &c));
                assert_eq!(ab_c, ac_bc, "distributivity in {field}");
                let assoc1 = field.mul(&field.mul(&a, &b), &c);
                let assoc2 = field.mul(&a, &field.mul(&b, &c));
                assert_eq!(assoc1, assoc2, "associativity in {field}");
                if !field.is_zero(&a) {
                    let inv = field.inv(&a).unwrap();
                    assert!(field.is_one(&field.mul(&a, &inv)), "inverse in {field}");
                }
            }
        }
    }
}
