//! Exact scalar fields: prime fields, small extension fields and the rationals.
//!
//! A [`Field`] is a cheap handle; all arithmetic goes through it.  Elements
//! of finite fields are stored as integer codes (`Σ cᵢ pⁱ` for extension
//! fields), rationals as reduced big fractions.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fin(u32),
    Rat(BigRational),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u32),
    /// `modulus` lists coefficients low to high and is monic of degree `k`.
    Extension { p: u32, k: u32, modulus: Vec<u32> },
    Rationals,
}

struct ExtTables {
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    kind: FieldKind,
    ext: Option<ExtTables>,
}

#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let m = poly_trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = pow_mod(m[dm] as u64, p as u64 - 2, p as u64) as u32;
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
        for i in 0..=dm {
            let idx = dr - dm + i;
            r[idx] = ((r[idx] as u64 + (p - c) as u64 * m[i] as u64) % p as u64) as u32;
        }
        r = poly_trim(r);
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn digits(mut code: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// True when the monic `modulus` has no monic factor of degree `1..=k/2`.
pub fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let m = poly_trim(modulus.to_vec());
    if m.len() < 2 {
        return false;
    }
    let k = (m.len() - 1) as u32;
    for d in 1..=k / 2 {
        for code in 0..p.pow(d) {
            let mut f = digits(code, p, d);
            f.push(1);
            if poly_rem(&m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible of degree `k` over `F_p`, coefficients ordered
/// lexicographically from the constant term.
pub fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    for code in 0..p.pow(k) {
        let mut f = digits(code, p, k);
        f.push(1);
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p as u64) || p >= 1 << 31 {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Field(Arc::new(Inner { kind: FieldKind::Prime(p), ext: None })))
    }

    pub fn rationals() -> Field {
        Field(Arc::new(Inner { kind: FieldKind::Rationals, ext: None }))
    }

    /// `F_{p^k}` using the default modulus.
    pub fn galois(p: u32, k: u32) -> Result<Field> {
        if k == 1 {
            return Field::prime(p);
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Field::extension(p, default_modulus(p, k))
    }

    pub fn extension(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let modulus: Vec<u32> = modulus.into_iter().map(|c| c % p).collect();
        let modulus = poly_trim(modulus);
        if modulus.len() < 2 || modulus.last() != Some(&1) || !is_irreducible(p, &modulus) {
            return Err(Error::ReduciblePolynomial { p, modulus });
        }
        let k = (modulus.len() - 1) as u32;
        if k == 1 {
            return Field::prime(p);
        }
        let q = p.checked_pow(k).filter(|&q| q <= 4096).ok_or(Error::FieldTooLargeForEnumeration {
            needed: (p as u128).pow(k),
            budget: 4096,
        })?;
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p);
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = ((prod[i + j] as u64 + *x as u64 * *y as u64) % p as u64) as u32;
                    }
                }
                let mut r = poly_rem(&prod, &modulus, p);
                r.resize(k as usize, 0);
                mul[(a * q + b) as usize] = undigits(&r, p);
            }
        }
        let neg = (0..q)
            .map(|a| undigits(&digits(a, p, k).iter().map(|d| (p - d) % p).collect::<Vec<_>>(), p))
            .collect();
        let mut inv = vec![0; n];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
        }
        Ok(Field(Arc::new(Inner {
            kind: FieldKind::Extension { p, k, modulus },
            ext: Some(ExtTables { q, add, mul, neg, inv }),
        })))
    }

    /// Parses `q`, `p7`, `F7`, `7`, `p2^2`, `F3^3`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if matches!(t, "q" | "Q" | "rationals" | "QQ") {
            return Ok(Field::rationals());
        }
        let body = t.trim_start_matches(['p', 'P', 'F', 'f']).trim_start_matches('_');
        let (ps, ks) = match body.split_once('^') {
            Some((a, b)) => (a, Some(b)),
            None => (body, None),
        };
        let p: u32 = ps.parse().map_err(|_| Error::Schema(format!("bad field `{s}`")))?;
        let k: u32 = match ks {
            Some(k) => k.parse().map_err(|_| Error::Schema(format!("bad field `{s}`")))?,
            None => 1,
        };
        Field::galois(p, k)
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0.kind
    }

    pub fn name(&self) -> String {
        match &self.0.kind {
            FieldKind::Prime(p) => format!("F{p}"),
            FieldKind::Extension { p, k, .. } => format!("F{p}^{k}"),
            FieldKind::Rationals => "Q".to_string(),
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match &self.0.kind {
            FieldKind::Prime(p) => *p,
            FieldKind::Extension { p, .. } => *p,
            FieldKind::Rationals => 0,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match &self.0.kind {
            FieldKind::Prime(p) => Some(*p as u64),
            FieldKind::Extension { .. } => self.0.ext.as_ref().map(|t| t.q as u64),
            FieldKind::Rationals => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Every element, in code order, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.order().map(|q| (0..q as u32).map(Scalar::Fin).collect())
    }

    pub fn zero(&self) -> Scalar {
        match self.0.kind {
            FieldKind::Rationals => Scalar::Rat(BigRational::zero()),
            _ => Scalar::Fin(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.0.kind {
            FieldKind::Rationals => Scalar::Rat(BigRational::one()),
            _ => Scalar::Fin(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match &self.0.kind {
            FieldKind::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            _ => {
                let p = self.characteristic() as i64;
                Scalar::Fin(n.rem_euclid(p) as u32)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &self.0.kind {
            FieldKind::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                Scalar::Fin(n.mod_floor(&p).to_u32().unwrap())
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fin(x) => *x == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fin(x) => *x == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fin(x), Scalar::Fin(y)) => match &self.0.ext {
                Some(t) => Scalar::Fin(t.add[(*x * t.q + *y) as usize]),
                None => {
                    let p = self.characteristic() as u64;
                    Scalar::Fin(((*x as u64 + *y as u64) % p) as u32)
                }
            },
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar kinds differ"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fin(x) => match &self.0.ext {
                Some(t) => Scalar::Fin(t.neg[*x as usize]),
                None => {
                    let p = self.characteristic();
                    Scalar::Fin((p - x) % p)
                }
            },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fin(x), Scalar::Fin(y)) => match &self.0.ext {
                Some(t) => Scalar::Fin(t.mul[(*x * t.q + *y) as usize]),
                None => {
                    let p = self.characteristic() as u64;
                    Scalar::Fin(((*x as u64 * *y as u64) % p) as u32)
                }
            },
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar kinds differ"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::NotInvertible("0".into()));
        }
        Ok(match a {
            Scalar::Fin(x) => match &self.0.ext {
                Some(t) => Scalar::Fin(t.inv[*x as usize]),
                None => {
                    let p = self.characteristic() as u64;
                    Scalar::Fin(pow_mod(*x as u64, p - 2, p) as u32)
                }
            },
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        r
    }

    /// `a ↦ a^p`; the identity on the rationals.
    pub fn frobenius(&self, a: &Scalar) -> Scalar {
        match self.characteristic() {
            0 => a.clone(),
            p => self.pow(a, p as u64),
        }
    }

    /// `binom(m, n)` in the field.  In characteristic `p` this uses Lucas'
    /// theorem on base-`p` digits.
    pub fn binomial(&self, m: u64, n: u64) -> Scalar {
        if n > m {
            return self.zero();
        }
        let p = self.characteristic() as u64;
        if p == 0 {
            return self.from_bigint(&big_binomial(m, n));
        }
        let (mut mm, mut nn) = (m, n);
        let mut acc = 1u64;
        while mm > 0 || nn > 0 {
            let (a, b) = (mm % p, nn % p);
            if b > a {
                return self.zero();
            }
            acc = acc * small_binomial_mod(a, b, p) % p;
            mm /= p;
            nn /= p;
        }
        self.from_i64(acc as i64)
    }

    /// `n!` in the field (zero once `n ≥ p`).
    pub fn factorial(&self, n: u64) -> Scalar {
        let mut r = self.one();
        for i in 2..=n {
            r = self.mul(&r, &self.from_i64(i as i64));
            if self.is_zero(&r) {
                break;
            }
        }
        r
    }

    /// `n!`, failing when it is not a unit.
    pub fn factorial_unit(&self, n: u64) -> Result<Scalar> {
        let p = self.characteristic() as u64;
        if p != 0 && n >= p {
            return Err(Error::NotInvertible(format!("{n}! in characteristic {p}")));
        }
        Ok(self.factorial(n))
    }

    pub fn format(&self, a: &Scalar) -> String {
        match (a, &self.0.kind) {
            (Scalar::Fin(x), FieldKind::Extension { p, k, .. }) => {
                let ds = digits(*x, *p, *k);
                format!("[{}]", ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
            }
            (Scalar::Fin(x), _) => x.to_string(),
            (Scalar::Rat(r), _) => format!("{}/{}", r.numer(), r.denom()),
        }
    }

    /// Short human form: rationals print as integers when possible.
    pub fn pretty(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) if r.is_integer() => r.numer().to_string(),
            _ => self.format(a),
        }
    }

    pub fn to_json(&self, a: &Scalar) -> Value {
        match (a, &self.0.kind) {
            (Scalar::Fin(x), FieldKind::Extension { p, k, .. }) => {
                Value::Array(digits(*x, *p, *k).into_iter().map(Value::from).collect())
            }
            _ => Value::String(self.format(a)),
        }
    }

    pub fn from_json(&self, v: &Value) -> Result<Scalar> {
        let bad = || Error::Schema(format!("cannot read scalar {v} over {}", self.name()));
        match (&self.0.kind, v) {
            (FieldKind::Extension { p, k, .. }, Value::Array(cs)) => {
                if cs.len() > *k as usize {
                    return Err(bad());
                }
                let mut ds = Vec::with_capacity(*k as usize);
                for c in cs {
                    let n = c.as_i64().ok_or_else(bad)?;
                    ds.push(n.rem_euclid(*p as i64) as u32);
                }
                ds.resize(*k as usize, 0);
                Ok(Scalar::Fin(undigits(&ds, *p)))
            }
            (_, Value::Number(n)) => Ok(self.from_i64(n.as_i64().ok_or_else(bad)?)),
            (_, Value::String(s)) => self.parse_scalar(s),
            _ => Err(bad()),
        }
    }

    /// Reads `"a"`, `"a/b"`, or `"[c0,c1,…]"` over an extension field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Schema(format!("cannot read scalar `{s}` over {}", self.name()));
        if let Some(inner) = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if !matches!(self.0.kind, FieldKind::Extension { .. }) {
                return Err(bad());
            }
            let cs = inner
                .split(',')
                .filter(|c| !c.trim().is_empty())
                .map(|c| c.trim().parse::<i64>().map(Value::from).map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return self.from_json(&Value::Array(cs)).map_err(|_| bad());
        }
        let (ns, ds) = match s.trim().split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s.trim(), None),
        };
        let n: BigInt = ns.parse().map_err(|_| bad())?;
        let num = self.from_bigint(&n);
        match ds {
            None => Ok(num),
            Some(d) => {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                let den = self.from_bigint(&d);
                self.div(&num, &den).map_err(|_| bad())
            }
        }
    }

    pub fn field_json(&self) -> Value {
        match &self.0.kind {
            FieldKind::Prime(p) => serde_json::json!({ "prime": p }),
            FieldKind::Extension { p, modulus, .. } => {
                serde_json::json!({ "extension": { "p": p, "modulus": modulus } })
            }
            FieldKind::Rationals => Value::String("rationals".into()),
        }
    }

    pub fn from_field_json(v: &Value) -> Result<Field> {
        match v {
            Value::String(s) => Field::parse(s),
            Value::Object(m) => {
                if let Some(p) = m.get("prime").and_then(Value::as_u64) {
                    return Field::prime(p as u32);
                }
                if let Some(e) = m.get("extension") {
                    let p = e.get("p").and_then(Value::as_u64).ok_or_else(|| Error::Schema("extension.p".into()))?;
                    if let Some(ms) = e.get("modulus").and_then(Value::as_array) {
                        let modulus = ms.iter().map(|c| c.as_u64().unwrap_or(0) as u32).collect();
                        return Field::extension(p as u32, modulus);
                    }
                    let k = e.get("k").and_then(Value::as_u64).ok_or_else(|| Error::Schema("extension.k".into()))?;
                    return Field::galois(p as u32, k as u32);
                }
                Err(Error::Schema(format!("unknown field {v}")))
            }
            _ => Err(Error::Schema(format!("unknown field {v}"))),
        }
    }

    /// Integer value of a rational scalar, if it has one.
    pub fn as_integer(&self, a: &Scalar) -> Option<BigInt> {
        match a {
            Scalar::Rat(r) if r.is_integer() => Some(r.numer().clone()),
            Scalar::Fin(x) if !matches!(self.0.kind, FieldKind::Extension { .. }) => Some(BigInt::from(*x)),
            _ => None,
        }
    }

    /// Roots in the field of `Σ coeffs[i] xⁱ`.  Finite fields are searched
    /// exhaustively; over ℚ the rational root test is used.
    pub fn roots(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let eval = |x: &Scalar| {
            coeffs.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
        };
        if let Some(all) = self.elements() {
            return all.into_iter().filter(|x| self.is_zero(&eval(x))).collect();
        }
        let mut cs: Vec<BigRational> = coeffs
            .iter()
            .map(|c| match c {
                Scalar::Rat(r) => r.clone(),
                _ => unreachable!(),
            })
            .collect();
        while cs.last().is_some_and(|c| c.is_zero()) {
            cs.pop();
        }
        if cs.len() <= 1 {
            return vec![];
        }
        let mut roots = vec![];
        while cs.first().is_some_and(|c| c.is_zero()) {
            cs.remove(0);
            if !roots.contains(&self.zero()) {
                roots.push(self.zero());
            }
        }
        if cs.len() <= 1 {
            return roots;
        }
        let lcm = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = cs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for sign in [1, -1] {
                    let cand = Scalar::Rat(BigRational::new(BigInt::from(sign) * num.clone(), den.clone()));
                    if self.is_zero(&eval(&cand)) && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.to_u64().expect("coefficient too large for rational root search");
    let mut out = vec![];
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

fn big_binomial(m: u64, n: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..n {
        r = r * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    r
}

fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.inv(&f.from_i64(3)).unwrap(), f.from_i64(5));
    }

    #[test]
    fn rejects_composite_and_reducible() {
        assert_eq!(Field::prime(6).unwrap_err(), Error::NotPrime(6));
        assert!(matches!(Field::extension(2, vec![1, 0, 1]), Err(Error::ReduciblePolynomial { .. })));
    }

    #[test]
    fn f4_generator_has_order_three() {
        let f = Field::extension(2, vec![1, 1, 1]).unwrap();
        let x = Scalar::Fin(2);
        assert!(!f.is_one(&x));
        assert!(f.is_one(&f.pow(&x, 3)));
    }

    #[test]
    fn lucas_small_cases() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.binomial(4, 1), f.from_i64(1));
        assert_eq!(f.binomial(3, 1), f.zero());
        let q = Field::rationals();
        assert_eq!(q.binomial(6, 3), q.from_i64(20));
    }

    #[test]
    fn factorial_unit_fails_past_p() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.factorial_unit(4).unwrap(), f.from_i64(24));
        assert!(matches!(f.factorial_unit(5), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn rational_parse_and_format() {
        let q = Field::rationals();
        let x = q.parse_scalar("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
    }

    #[test]
    fn rational_roots() {
        let q = Field::rationals();
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
        let cs = [q.from_i64(1), q.from_i64(-3), q.from_i64(2)];
        let roots = q.roots(&cs);
        assert_eq!(roots, vec![q.parse_scalar("1/2").unwrap(), q.one()]);
        assert!(q.roots(&[q.from_i64(-1), q.zero(), q.zero(), q.one()]).len() == 1);
    }
}
