//! Finite fields GF(p^k) in the polynomial basis.
//!
//! An element is stored as an integer code in `[0, q)`. Its little-endian
//! base-`p` digits `d_0, ..., d_{k-1}` are the coefficients of
//! `d_0 + d_1 x + ... + d_{k-1} x^{k-1}` modulo the field's irreducible
//! polynomial. Code 0 is zero and code 1 is one in every field.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted.
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields up to this order get precomputed operation tables.
const TABLE_LIMIT: u32 = 256;

/// Parameters of a finite field, as they appear in JSON.
///
/// `poly` lists the coefficients `c_0..c_k` of a monic irreducible polynomial
/// of degree `k` over GF(p). It is absent for prime fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec {
            p,
            k: 1,
            poly: None,
        }
    }

    /// Default irreducible polynomials for the small extension fields.
    pub fn builtin_extension(q: u32) -> Option<Self> {
        let (p, poly) = match q {
            4 => (2, vec![1, 1, 1]),
            8 => (2, vec![1, 1, 0, 1]),
            9 => (3, vec![1, 0, 1]),
            16 => (2, vec![1, 1, 0, 0, 1]),
            25 => (5, vec![2, 0, 1]),
            27 => (3, vec![1, 2, 0, 1]),
            _ => return None,
        };
        Some(FieldSpec {
            p,
            k: poly.len() as u32 - 1,
            poly: Some(poly),
        })
    }

    /// Resolves `(p, k, poly)` as given on a command line: prime fields need
    /// no polynomial, extension fields fall back to the built-in table.
    pub fn resolve(p: u32, k: u32, poly: Option<Vec<u32>>) -> Result<Self> {
        if k <= 1 || poly.is_some() {
            return Ok(FieldSpec { p, k, poly });
        }
        let q = p
            .checked_pow(k)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{k} is too large")))?;
        FieldSpec::builtin_extension(q)
            .filter(|s| s.p == p)
            .ok_or_else(|| {
                Error::InvalidField(format!(
                    "no built-in irreducible polynomial for GF({p}^{k}); supply one"
                ))
            })
    }
}

/// Raw element code. Only meaningful together with the [`Field`] it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a code without range checking; see [`Field::elem`].
    pub const fn from_code(code: u32) -> Self {
        Elem(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    /// Reduction polynomial with the leading coefficient dropped, `c_0..c_{k-1}`.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// A validated finite field. Cheap to clone; clones share arithmetic tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let FieldSpec { p, k, ref poly } = spec;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not prime"
            )));
        }
        if k == 0 {
            return Err(Error::InvalidField(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("order {p}^{k} exceeds {MAX_ORDER}")))?;

        let modulus = match (k, poly) {
            (1, None) => vec![0],
            (1, Some(c)) => {
                check_poly(p, 1, c)?;
                vec![0]
            }
            (_, None) => {
                return Err(Error::InvalidField(format!(
                    "GF({p}^{k}) needs an irreducible polynomial"
                )))
            }
            (_, Some(c)) => {
                check_poly(p, k, c)?;
                if !is_irreducible(p, c) {
                    return Err(Error::InvalidField(format!(
                        "polynomial {c:?} is reducible over GF({p})"
                    )));
                }
                c[..k as usize].to_vec()
            }
        };
        // Prime fields never carry a polynomial, so equal fields compare equal.
        let spec = if k == 1 { FieldSpec::prime(p) } else { spec };

        let mut inner = Inner {
            spec,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    pub fn prime(p: u32) -> Result<Self> {
        Field::new(FieldSpec::prime(p))
    }

    /// GF(q) from the built-in table (any prime `q`, or an extension order
    /// listed in [`FieldSpec::builtin_extension`]).
    pub fn with_order(q: u32) -> Result<Self> {
        if is_prime(q) {
            return Field::prime(q);
        }
        let spec = FieldSpec::builtin_extension(q)
            .ok_or_else(|| Error::InvalidField(format!("no built-in field of order {q}")))?;
        Field::new(spec)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code < self.0.q {
            Ok(Elem(code))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.0.q })
        }
    }

    /// All elements, codes ascending.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.add[self.index(a, b)]),
            None => Elem(self.0.add_slow(a.0, b.0)),
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.mul[self.index(a, b)]),
            None => Elem(self.0.mul_slow(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.neg[a.0 as usize]),
            None => Elem(self.0.neg_slow(a.0)),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => Elem(t.inv[a.0 as usize]),
            None => Elem(self.0.pow_slow(a.0, u64::from(self.0.q) - 2)),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    fn index(&self, a: Elem, b: Elem) -> usize {
        a.0 as usize * self.0.q as usize + b.0 as usize
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0.spec;
        if s.k == 1 {
            write!(f, "GF({})", s.p)
        } else {
            write!(
                f,
                "GF({}^{}; {:?})",
                s.p,
                s.k,
                s.poly.as_deref().unwrap_or(&[])
            )
        }
    }
}

impl Inner {
    fn digits(&self, mut code: u32) -> Vec<u32> {
        let p = self.spec.p;
        (0..self.spec.k)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.spec.p + d)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p;
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.pack(&sum)
    }

    fn neg_slow(&self, a: u32) -> u32 {
        let p = self.spec.p;
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (p - x) % p).collect();
        self.pack(&d)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = u64::from(self.spec.p);
        let k = self.spec.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(x) * u64::from(y)) % p;
            }
        }
        // x^k = -(c_0 + ... + c_{k-1} x^{k-1})
        for deg in (k..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &c) in self.modulus.iter().enumerate() {
                let t = lead * u64::from(c) % p;
                let slot = &mut prod[deg - k + i];
                *slot = (*slot + p - t) % p;
            }
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&d| d as u32).collect();
        self.pack(&digits)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q;
    let mut add = Vec::with_capacity((q * q) as usize);
    let mut mul = Vec::with_capacity((q * q) as usize);
    for a in 0..q {
        for b in 0..q {
            add.push(inner.add_slow(a, b));
            mul.push(inner.mul_slow(a, b));
        }
    }
    let neg = (0..q).map(|a| inner.neg_slow(a)).collect();
    let mut inv = vec![0; q as usize];
    for a in 1..q {
        inv[a as usize] = (1..q)
            .find(|&b| mul[(a * q + b) as usize] == 1)
            .unwrap_or(0);
    }
    Tables { add, mul, neg, inv }
}

fn check_poly(p: u32, k: u32, c: &[u32]) -> Result<()> {
    if c.len() != k as usize + 1 {
        return Err(Error::InvalidField(format!(
            "polynomial must have {} coefficients, got {}",
            k + 1,
            c.len()
        )));
    }
    if c[k as usize] != 1 {
        return Err(Error::InvalidField("polynomial must be monic".into()));
    }
    if let Some(&bad) = c.iter().find(|&&x| x >= p) {
        return Err(Error::InvalidField(format!(
            "coefficient {bad} is not reduced mod {p}"
        )));
    }
    Ok(())
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|&d: &u64| d * d <= u64::from(n))
            .all(|d| !u64::from(n).is_multiple_of(d))
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let p = u64::from(p);
    let mut r: Vec<u64> = a.iter().map(|&x| u64::from(x)).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap_or(0);
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            let t = lead * u64::from(c) % p;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
    }
    r.into_iter().map(|x| x as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=k/2`.
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut code = low;
            for _ in 0..d {
                divisor.push((code % u64::from(p)) as u32);
                code /= u64::from(p);
            }
            divisor.push(1);
            if poly_rem(p, poly, &divisor).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// An element bundled with its field, for checked arithmetic between values
/// whose provenance is not known statically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    elem: Elem,
}

impl FieldElement {
    pub fn new(field: &Field, code: u32) -> Result<Self> {
        Ok(FieldElement {
            elem: field.elem(code)?,
            field: field.clone(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn code(&self) -> u32 {
        self.elem.code()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, elem: Elem) -> Self {
        FieldElement {
            field: self.field.clone(),
            elem,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.elem, other.elem)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.elem, other.elem)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.elem))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.elem)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.elem, e))
    }
}

/// Every element of the field described by `spec`, codes ascending.
pub fn enumerate_elements(spec: &FieldSpec) -> Result<Vec<FieldElement>> {
    let field = Field::new(spec.clone())?;
    Ok(field
        .elements()
        .map(|e| FieldElement {
            field: field.clone(),
            elem: e,
        })
        .collect())
}
