//! Dense univariate polynomials over a [`Field`].

use super::{ArithError, Elem, Field};
use num_bigint::BigUint;
use std::fmt;

/// A univariate polynomial with coefficients in a single [`Field`],
/// stored densely in ascending degree with a nonzero leading coefficient
/// (the zero polynomial has an empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    var: String,
    coeffs: Vec<Elem>,
}

// ---- raw coefficient-slice helpers, shared with extension arithmetic ----

pub(crate) fn raw_trim(field: &Field, mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().is_some_and(|c| field.is_zero(c)) {
        v.pop();
    }
    v
}

pub(crate) fn raw_pad(field: &Field, mut v: Vec<Elem>, len: usize) -> Vec<Elem> {
    while v.len() < len {
        v.push(field.zero());
    }
    v
}

pub(crate) fn raw_mul(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if field.is_zero(y) {
                continue;
            }
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    raw_trim(field, out)
}

/// Remainder of `a` by `b` (b nonzero, leading coefficient invertible).
pub(crate) fn raw_rem(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let b = raw_trim(field, b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = raw_trim(field, a.to_vec());
    let db = b.len() - 1;
    let lb_inv = field.inv(&b[db]).expect("invertible leading coefficient");
    while r.len() > db {
        let dr = r.len() - 1;
        let q = field.mul(&r[dr], &lb_inv);
        for (k, bc) in b.iter().enumerate() {
            let idx = dr - db + k;
            let t = field.mul(&q, bc);
            r[idx] = field.sub(&r[idx], &t);
        }
        r = raw_trim(field, r);
    }
    r
}

impl UPoly {
    pub fn from_coeffs(field: Field, var: &str, coeffs: Vec<Elem>) -> UPoly {
        let coeffs = raw_trim(&field, coeffs);
        UPoly { field, var: var.to_string(), coeffs }
    }

    pub fn zero(field: Field, var: &str) -> UPoly {
        UPoly { field, var: var.to_string(), coeffs: Vec::new() }
    }

    pub fn constant(field: Field, var: &str, c: Elem) -> UPoly {
        UPoly::from_coeffs(field, var, vec![c])
    }

    pub fn x(field: Field, var: &str) -> UPoly {
        let coeffs = vec![field.zero(), field.one()];
        UPoly { field, var: var.to_string(), coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &Elem {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        UPoly::from_coeffs(self.field.clone(), &self.var, v)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UPoly {
        let v = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        UPoly { field: self.field.clone(), var: self.var.clone(), coeffs: v }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let v = raw_mul(&self.field, &self.coeffs, &other.coeffs);
        UPoly { field: self.field.clone(), var: self.var.clone(), coeffs: v }
    }

    pub fn scale(&self, c: &Elem) -> UPoly {
        if self.field.is_zero(c) {
            return UPoly::zero(self.field.clone(), &self.var);
        }
        let v = self.coeffs.iter().map(|x| self.field.mul(x, c)).collect();
        UPoly { field: self.field.clone(), var: self.var.clone(), coeffs: v }
    }

    pub fn shift_mul(&self, k: usize) -> UPoly {
        // multiply by x^k
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.field.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { field: self.field.clone(), var: self.var.clone(), coeffs: v }
    }

    pub fn pow(&self, e: usize) -> UPoly {
        let mut acc = UPoly::constant(self.field.clone(), &self.var, self.field.one());
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("invertible lead");
        self.scale(&inv)
    }

    pub fn divrem(&self, other: &UPoly) -> Result<(UPoly, UPoly), ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let f = &self.field;
        let db = other.degree();
        let lb_inv = f.inv(other.lead())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); self.coeffs.len().saturating_sub(db)];
        while r.len() > db || (r.len() == db + 1 && db == 0 && !r.is_empty()) {
            if r.len() <= db {
                break;
            }
            let dr = r.len() - 1;
            let c = f.mul(&r[dr], &lb_inv);
            q[dr - db] = c.clone();
            for (k, bc) in other.coeffs.iter().enumerate() {
                let idx = dr - db + k;
                let t = f.mul(&c, bc);
                r[idx] = f.sub(&r[idx], &t);
            }
            r = raw_trim(f, r);
            if r.is_empty() {
                break;
            }
        }
        Ok((
            UPoly::from_coeffs(f.clone(), &self.var, q),
            UPoly::from_coeffs(f.clone(), &self.var, r),
        ))
    }

    pub fn rem(&self, other: &UPoly) -> UPoly {
        let v = raw_rem(&self.field, &self.coeffs, &other.coeffs);
        UPoly { field: self.field.clone(), var: self.var.clone(), coeffs: v }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g.
    /// g is not normalized to be monic.
    pub fn xgcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let f = self.field.clone();
        let var = self.var.clone();
        let zero = || UPoly::zero(f.clone(), &var);
        let one = || UPoly::constant(f.clone(), &var, f.one());
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one(), zero());
        let (mut t0, mut t1) = (zero(), one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            (r0, r1) = (r1, r);
            let ns = s0.sub(&q.mul(&s1));
            (s0, s1) = (s1, ns);
            let nt = t0.sub(&q.mul(&t1));
            (t0, t1) = (t1, nt);
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero(self.field.clone(), &self.var);
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_i64(i as i64)))
            .collect();
        UPoly::from_coeffs(self.field.clone(), &self.var, v)
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, x), c);
        }
        acc
    }

    /// Evaluate with coefficients embedded into a larger field.
    pub fn eval_in(&self, target: &Field, x: &Elem) -> Elem {
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            let ce = target.embed(&self.field, c);
            acc = target.add(&target.mul(&acc, x), &ce);
        }
        acc
    }

    /// Map coefficients into an extension field of the coefficient field.
    pub fn embed_into(&self, target: &Field) -> UPoly {
        let v = self.coeffs.iter().map(|c| target.embed(&self.field, c)).collect();
        UPoly { field: target.clone(), var: self.var.clone(), coeffs: v }
    }

    /// Substitute x -> x + c.
    pub fn translate(&self, c: &Elem) -> UPoly {
        let f = &self.field;
        let x_plus_c = UPoly::from_coeffs(f.clone(), &self.var, vec![c.clone(), f.one()]);
        self.compose(&x_plus_c)
    }

    pub fn compose(&self, inner: &UPoly) -> UPoly {
        let mut acc = UPoly::zero(self.field.clone(), &self.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UPoly::constant(self.field.clone(), &self.var, c.clone()));
        }
        acc
    }

    /// self^e mod m (exponent may be huge).
    pub fn pow_mod(&self, e: &BigUint, m: &UPoly) -> UPoly {
        let mut acc = UPoly::constant(self.field.clone(), &self.var, self.field.one());
        let mut b = self.rem(m);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
        }
        acc
    }

    /// Squarefree decomposition: product of f_i^i equals `self` up to the
    /// leading coefficient; the returned parts are monic and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        assert!(!self.is_zero());
        let p = self.field.characteristic();
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        if p == 0 {
            return yun(&f);
        }
        squarefree_char_p(&f, p)
    }

    /// Full factorization into monic irreducibles with multiplicities.
    /// The product of factors^mult times the leading coefficient of `self`
    /// reproduces `self`.
    pub fn factor_seeded(&self, seed: u64) -> Result<Vec<(UPoly, usize)>, ArithError> {
        super::factor::factor(self, seed)
    }

    pub fn factor(&self) -> Result<Vec<(UPoly, usize)>, ArithError> {
        self.factor_seeded(0x9e3779b97f4a7c15)
    }

    /// All roots of `self` lying in `k` (a field containing the coefficient
    /// field), with multiplicity.
    pub fn roots_in(&self, k: &Field) -> Result<Vec<(Elem, usize)>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let f = if k == &self.field { self.clone() } else { self.embed_into(k) };
        let mut out = Vec::new();
        for (fac, mult) in f.factor()? {
            if fac.degree() == 1 {
                // monic x + c  ->  root -c
                let root = k.neg(&fac.coeff(0));
                out.push((root, mult));
            }
        }
        Ok(out)
    }
}

fn yun(f: &UPoly) -> Vec<(UPoly, usize)> {
    // Yun's algorithm, characteristic zero; f monic nonconstant
    let fp = f.derivative();
    let mut out = Vec::new();
    let a0 = f.gcd(&fp);
    let mut b = f.divrem(&a0).unwrap().0;
    let mut c = fp.divrem(&a0).unwrap().0;
    let mut i = 1usize;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree() > 0 {
                out.push((b.monic(), i));
            }
            break;
        }
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.divrem(&a).unwrap().0;
        c = d.divrem(&a).unwrap().0;
        i += 1;
        if b.degree() == 0 {
            break;
        }
    }
    out
}

fn squarefree_char_p(f: &UPoly, p: u64) -> Vec<(UPoly, usize)> {
    let fp = f.derivative();
    if fp.is_zero() {
        // f = g(x^p); take p-th root of coefficients
        let g = pth_root_poly(f, p);
        let inner = g.squarefree_decomposition();
        return inner.into_iter().map(|(h, m)| (h, m * p as usize)).collect();
    }
    let mut out: Vec<(UPoly, usize)> = Vec::new();
    let g = f.gcd(&fp);
    let mut w = f.divrem(&g).unwrap().0; // squarefree part with each factor once
    // factors of w: multiplicity not divisible by p handled by the loop
    let mut rest = g.clone();
    let mut i = 1usize;
    let mut wcur = w.clone();
    while wcur.degree() > 0 {
        let y = wcur.gcd(&rest);
        let fi = wcur.divrem(&y).unwrap().0;
        if fi.degree() > 0 {
            out.push((fi.monic(), i));
        }
        wcur = y.clone();
        rest = rest.divrem(&y).unwrap().0;
        i += 1;
    }
    let _ = &mut w;
    if rest.degree() > 0 {
        // remaining part is a p-th power
        let g2 = pth_root_poly(&rest, p);
        for (h, m) in g2.squarefree_decomposition() {
            // merge with existing entries if the same factor appears
            let mm = m * p as usize;
            if let Some(e) = out.iter_mut().find(|(hh, _)| hh == &h) {
                e.1 += mm;
            } else {
                out.push((h, mm));
            }
        }
    }
    out
}

fn pth_root_poly(f: &UPoly, p: u64) -> UPoly {
    let field = f.field().clone();
    let q = field.size().expect("finite field");
    let exp = &q / BigUint::from(p); // c^(q/p) is the p-th root of c
    let mut v = Vec::new();
    let mut i = 0usize;
    while i <= f.degree() {
        let c = f.coeff(i);
        v.push(field.pow_biguint(&c, &exp));
        i += p as usize;
    }
    UPoly::from_coeffs(field, f.var(), v)
}

impl fmt::Display for UPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let cs = self.field.fmt_elem(c);
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(out, "-")?;
                }
                first = false;
            } else {
                write!(out, " {sign} ")?;
            }
            let needs_parens = mag.contains(['+', '-', ' ']);
            let mag = if needs_parens && i > 0 { format!("({mag})") } else { mag };
            match i {
                0 => write!(out, "{mag}")?,
                1 if mag == "1" => write!(out, "{}", self.var)?,
                1 => write!(out, "{mag}*{}", self.var)?,
                _ if mag == "1" => write!(out, "{}^{i}", self.var)?,
                _ => write!(out, "{mag}*{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(coeffs: &[i64]) -> UPoly {
        let q = Field::rationals();
        let v = coeffs.iter().map(|&c| q.from_i64(c)).collect();
        UPoly::from_coeffs(q, "x", v)
    }

    #[test]
    fn divrem_roundtrip() {
        let f = qpoly(&[1, 0, -3, 0, 1]); // x^4 - 3x^2 + 1
        let g = qpoly(&[1, 2, 1]); // x^2 + 2x + 1
        let (quo, rem) = f.divrem(&g).unwrap();
        assert_eq!(quo.mul(&g).add(&rem), f);
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = qpoly(&[-1, 0, 1]); // (x-1)(x+1)
        let g = qpoly(&[-1, 1]).mul(&qpoly(&[5, 1]));
        let d = f.gcd(&g);
        assert_eq!(d, qpoly(&[-1, 1]).monic());
    }

    #[test]
    fn xgcd_bezout() {
        let f = qpoly(&[2, 0, 1]);
        let g = qpoly(&[1, 1]);
        let (d, s, t) = f.xgcd(&g);
        assert_eq!(s.mul(&f).add(&t.mul(&g)), d);
    }

    #[test]
    fn squarefree_decomposition_q() {
        // (x-1)^2 (x+2)
        let f = qpoly(&[-1, 1]).mul(&qpoly(&[-1, 1])).mul(&qpoly(&[2, 1]));
        let parts = f.squarefree_decomposition();
        let mut prod = qpoly(&[1]);
        for (g, m) in &parts {
            prod = prod.mul(&g.pow(*m));
        }
        assert_eq!(prod, f.monic());
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn eval_horner() {
        let f = qpoly(&[1, 2, 3]);
        let q = Field::rationals();
        assert_eq!(f.eval(&q.from_i64(2)), q.from_i64(17));
    }
}
