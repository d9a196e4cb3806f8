//! Exact arithmetic in F_{p^e} with a fixed polynomial-basis presentation.
//!
//! Nonzero elements are stored by their discrete logarithm with respect to the
//! designated primitive element ε (the residue class of X), so multiplication
//! is exponent addition and addition goes through a Zech-logarithm table. The
//! in-memory code of an element doubles as its canonical enumeration index:
//! `0` first, then ε⁰, ε¹, …, ε^{Q−2}.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

pub type FieldRef = Arc<Field>;

/// An element of a [`Field`], stored as `0` (zero) or `j + 1` (for ε^j).
///
/// The derived ordering is the canonical element order used for every
/// enumeration and tie-break in the crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Exponent j with `self = ε^j`, or `None` for zero.
    #[inline]
    pub fn exponent(self) -> Option<u32> {
        self.0.checked_sub(1)
    }

    /// Position in the canonical element order.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn from_index(index: u32) -> Elem {
        Elem(index)
    }
}

/// A finite field F_{p^e} presented as F_p[X]/(m(X)) with m monic, irreducible
/// and primitive.
pub struct Field {
    p: u32,
    e: u32,
    order: u32,
    /// `Some(q)` when e is even, so the field is F_{q²}.
    q: Option<u32>,
    /// Lower coefficients c_0..c_{e-1} of the monic modulus X^e + Σ c_i X^i.
    modulus: Vec<u32>,
    /// exp[j] = packed coordinates of ε^j.
    exp: Vec<u32>,
    /// log[packed] = element code.
    log: Vec<u32>,
    /// zech[j] = code of 1 + ε^j.
    zech: Vec<u32>,
    /// Exponent of −1.
    neg_one: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "p={} e={} mod={}", self.p, self.e, m.join(","))
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses the `p=<p> e=<e> mod=<c_0,...,c_{e-1}>` presentation.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("field presentation", s);
        let mut parts = s.split(' ');
        let p = parts
            .next()
            .and_then(|t| t.strip_prefix("p="))
            .ok_or_else(bad)?;
        let e = parts
            .next()
            .and_then(|t| t.strip_prefix("e="))
            .ok_or_else(bad)?;
        let m = parts
            .next()
            .and_then(|t| t.strip_prefix("mod="))
            .ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        let p: u32 = parse_decimal(p).ok_or_else(bad)?;
        let e: u32 = parse_decimal(e).ok_or_else(bad)?;
        let modulus = m
            .split(',')
            .map(|c| parse_decimal(c).ok_or_else(bad))
            .collect::<Result<Vec<u32>>>()?;
        Field::new(p, e, &modulus)
    }
}

/// Strict decimal parse: no sign, no leading zeros (except "0" itself).
pub(crate) fn parse_decimal<T: FromStr>(s: &str) -> Option<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    s.parse().ok()
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `n` as p^s, if it is a prime power.
pub fn prime_power(n: u32) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut s = 0;
    while m.is_multiple_of(p) {
        m /= p;
        s += 1;
    }
    (m == 1).then_some((p, s))
}

// Dense polynomials over F_p, low coefficient first; used only to vet moduli.
fn fp_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = fp_trim(a.to_vec());
    let b = fp_trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        k >>= 1;
    }
    r as u32
}

fn fp_is_irreducible(full: &[u32], p: u32) -> bool {
    let deg = full.len() - 1;
    // Any factorization has a monic factor of degree at most deg/2.
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for t in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = t;
            for _ in 0..d {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if fp_rem(full, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds F_{p^e} from the lower coefficients of a monic modulus.
    ///
    /// `modulus[i]` is the coefficient of X^i in m(X) = X^e + Σ c_i X^i.
    pub fn new(p: u32, e: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::FieldTooLarge { p, e });
        }
        let order = (p as u64)
            .checked_pow(e)
            .filter(|&o| o <= MAX_ORDER as u64)
            .ok_or(Error::FieldTooLarge { p, e })? as u32;
        if modulus.len() != e as usize {
            return Err(Error::ModulusLength {
                expected: e as usize,
                got: modulus.len(),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::ModulusCoefficient(c));
        }
        let mut full = modulus.to_vec();
        full.push(1);
        if !fp_is_irreducible(&full, p) {
            return Err(Error::ReducibleModulus { p });
        }

        let pack = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let n = order - 1;
        let mut exp = Vec::with_capacity(n as usize);
        let mut cur = vec![0u32; e as usize];
        cur[0] = 1;
        let mut log = vec![u32::MAX; order as usize];
        log[0] = 0;
        for j in 0..n {
            let packed = pack(&cur);
            if j > 0 && packed == 1 {
                return Err(Error::NotPrimitive {
                    order: j,
                    expected: n,
                });
            }
            exp.push(packed);
            log[packed as usize] = j + 1;
            // cur *= X, reducing X^e = −Σ c_i X^i.
            let top = cur[e as usize - 1];
            for i in (1..e as usize).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..e as usize {
                cur[i] = (cur[i] + (p - top) * modulus[i]) % p;
            }
        }
        debug_assert_eq!(pack(&cur), 1);

        let mut field = Field {
            p,
            e,
            order,
            q: e.is_multiple_of(2).then(|| p.pow(e / 2)),
            modulus: modulus.to_vec(),
            exp,
            log,
            zech: Vec::new(),
            neg_one: 0,
        };
        field.zech = (0..n)
            .map(|j| {
                let s = field.add_packed(field.exp[0], field.exp[j as usize]);
                field.log[s as usize]
            })
            .collect();
        field.neg_one = if p == 2 { 0 } else { n / 2 };
        Ok(field)
    }

    /// F_{q²} with the default presentation for `q`.
    ///
    /// q = 3, 4, 5, 7 use ε²=ε+1, ε⁴=ε+1, ε²=ε+3 and ε²=ε+4 respectively;
    /// q = 2 uses ε²=ε+1; anything else takes the smallest primitive modulus.
    pub fn for_q(q: u32) -> Result<FieldRef> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let e = 2 * s;
        let modulus: Option<Vec<u32>> = match q {
            2 => Some(vec![1, 1]),
            3 => Some(vec![2, 2]),
            4 => Some(vec![1, 1, 0, 0]),
            5 => Some(vec![2, 4]),
            7 => Some(vec![3, 6]),
            _ => None,
        };
        let field = match modulus {
            Some(m) => Field::new(p, e, &m)?,
            None => Field::smallest_primitive(p, e)?,
        };
        Ok(Arc::new(field))
    }

    /// The primitive presentation with the numerically smallest packed
    /// lower-coefficient vector (c_0 least significant).
    pub fn smallest_primitive(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let count = (p as u64)
            .checked_pow(e)
            .filter(|&o| o <= MAX_ORDER as u64)
            .ok_or(Error::FieldTooLarge { p, e })?;
        for t in 0..count as u32 {
            let mut v = t;
            let m: Vec<u32> = (0..e)
                .map(|_| {
                    let c = v % p;
                    v /= p;
                    c
                })
                .collect();
            if let Ok(f) = Field::new(p, e, &m) {
                return Ok(f);
            }
        }
        unreachable!("every finite field has a primitive modulus")
    }

    fn add_packed(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// q with field order q², if the degree is even.
    pub fn q(&self) -> Option<u32> {
        self.q
    }

    pub fn require_square(&self) -> Result<u32> {
        self.q.ok_or(Error::OddDegree(self.e))
    }

    #[inline]
    fn n(&self) -> u32 {
        self.order - 1
    }

    /// The designated primitive element ε.
    pub fn eps(&self) -> Elem {
        self.eps_pow(1)
    }

    /// ε^j for any j ≥ 0.
    #[inline]
    pub fn eps_pow(&self, j: u64) -> Elem {
        Elem((j % self.n() as u64) as u32 + 1)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem)
    }

    /// Nonzero elements ε⁰, ε¹, … in canonical order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.order).map(Elem)
    }

    /// Image of the integer `n` under Z → F_p ⊆ F.
    pub fn from_int(&self, n: i64) -> Elem {
        let r = n.rem_euclid(self.p as i64) as u32;
        Elem(self.log[r as usize])
    }

    /// Polynomial-basis coordinates (coefficient of ε^i at index i).
    pub fn coords(&self, a: Elem) -> Vec<u32> {
        let mut v = match a.exponent() {
            None => 0,
            Some(j) => self.exp[j as usize],
        };
        (0..self.e)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Elem> {
        if coords.len() != self.e as usize {
            return Err(Error::Dimension(format!(
                "expected {} coordinates, got {}",
                self.e,
                coords.len()
            )));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= self.p) {
            return Err(Error::OutOfRange(format!(
                "coordinate {c} not a residue mod {}",
                self.p
            )));
        }
        let packed = coords.iter().rev().fold(0u32, |acc, &c| acc * self.p + c);
        Ok(Elem(self.log[packed as usize]))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let s = a.0 - 1 + b.0 - 1;
        let n = self.n();
        Elem(if s >= n { s - n } else { s } + 1)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.n();
        let (ea, eb) = (a.0 - 1, b.0 - 1);
        let d = if eb >= ea { eb - ea } else { eb + n - ea };
        let z = self.zech[d as usize];
        if z == 0 {
            return Elem::ZERO;
        }
        let s = ea + z - 1;
        Elem(if s >= n { s - n } else { s } + 1)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 || self.neg_one == 0 {
            return a;
        }
        self.mul(a, Elem(self.neg_one + 1))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        let j = a.exponent()?;
        Some(Elem((self.n() - j) % self.n() + 1))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        match a.exponent() {
            None if k == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(j) => self.eps_pow(j as u64 * (k % self.n() as u64)),
        }
    }

    /// Frobenius conjugation x ↦ x^q. Panics on odd-degree fields; see
    /// [`Field::conj_q`] for the checked form.
    #[inline]
    pub fn conj(&self, a: Elem) -> Elem {
        let q = self.q.expect("conjugation requires a field of even degree");
        match a.exponent() {
            None => Elem::ZERO,
            Some(j) => Elem(((j as u64 * q as u64) % self.n() as u64) as u32 + 1),
        }
    }

    pub fn conj_q(&self, a: Elem) -> Result<Elem> {
        self.require_square()?;
        Ok(self.conj(a))
    }

    /// The norm x^{q+1}, landing in F_q.
    pub fn norm(&self, a: Elem) -> Result<Elem> {
        let q = self.require_square()?;
        Ok(self.pow(a, q as u64 + 1))
    }

    /// Smallest ε^j (by j) whose norm is `c`, or `None` if c ∉ F_q*.
    pub fn norm_preimage(&self, c: Elem) -> Result<Option<Elem>> {
        let q = self.require_square()?;
        Ok(self.nonzero().find(|&x| self.pow(x, q as u64 + 1) == c))
    }

    /// Whether `a` lies in the subfield F_q.
    pub fn in_subfield(&self, a: Elem) -> Result<bool> {
        Ok(self.conj_q(a)? == a)
    }

    pub fn dot(&self, u: &[Elem], v: &[Elem]) -> Elem {
        u.iter()
            .zip(v)
            .fold(Elem::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    pub fn format_elem(&self, a: Elem) -> String {
        format_elem(a)
    }

    /// Parses `"0"` or `"e^j"` with 0 ≤ j ≤ Q−2.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        if s == "0" {
            return Ok(Elem::ZERO);
        }
        let j: u32 = s
            .strip_prefix("e^")
            .and_then(parse_decimal)
            .ok_or_else(|| Error::parse("field element", s))?;
        if j >= self.n() {
            return Err(Error::parse("field element", s));
        }
        Ok(Elem(j + 1))
    }

    pub fn parse_vector(&self, s: &str) -> Result<Vec<Elem>> {
        s.split(',').map(|t| self.parse_elem(t.trim())).collect()
    }
}

pub fn format_elem(a: Elem) -> String {
    match a.exponent() {
        None => "0".to_string(),
        Some(j) => format!("e^{j}"),
    }
}

pub fn format_vector(v: &[Elem]) -> String {
    v.iter()
        .map(|&a| format_elem(a))
        .collect::<Vec<_>>()
        .join(",")
}

/// Field-tagged element with checked arithmetic.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: FieldRef,
    elem: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn new(field: &FieldRef, elem: Elem) -> Self {
        Scalar {
            field: field.clone(),
            elem,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.elem)
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        if !Arc::ptr_eq(&self.field, &other.field) && *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (self.elem, other.elem);
        let elem = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(Scalar::new(f, elem))
    }

    pub fn conj_q(&self) -> Result<Scalar> {
        Ok(Scalar::new(&self.field, self.field.conj_q(self.elem)?))
    }

    pub fn norm(&self) -> Result<Scalar> {
        Ok(Scalar::new(&self.field, self.field.norm(self.elem)?))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.elem == other.elem
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_elem(self.elem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldRef {
        Field::for_q(3).unwrap()
    }

    // Repeated multiplication by X over explicit coordinate vectors, with no
    // use of the log tables.
    fn coord_pow_x(p: u32, modulus: &[u32], k: usize) -> Vec<u32> {
        let e = modulus.len();
        let mut cur = vec![0; e];
        cur[0] = 1;
        for _ in 0..k {
            let top = cur[e - 1];
            for i in (1..e).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..e {
                cur[i] = (cur[i] + (p - top) * modulus[i]) % p;
            }
        }
        cur
    }

    #[test]
    fn default_presentations() {
        let f = f9();
        let e = f.eps();
        // ε² = ε + 1
        assert_eq!(f.mul(e, e), f.add(e, Elem::ONE));
        let f16 = Field::for_q(4).unwrap();
        assert_eq!(f16.order(), 16);
        let e = f16.eps();
        assert_eq!(f16.pow(e, 4), f16.add(e, Elem::ONE));
        let f25 = Field::for_q(5).unwrap();
        let e = f25.eps();
        assert_eq!(f25.mul(e, e), f25.add(e, f25.from_int(3)));
        let f49 = Field::for_q(7).unwrap();
        let e = f49.eps();
        assert_eq!(f49.mul(e, e), f49.add(e, f49.from_int(4)));
    }

    #[test]
    fn field_make_errors() {
        assert_eq!(
            Field::new(3, 2, &[2, 0]).unwrap_err(),
            Error::ReducibleModulus { p: 3 }
        );
        assert_eq!(Field::new(4, 2, &[1, 1]).unwrap_err(), Error::NotPrime(4));
        // X² + 1 over F_3 is irreducible but X has order 4.
        assert!(matches!(
            Field::new(3, 2, &[1, 0]).unwrap_err(),
            Error::NotPrimitive {
                order: 4,
                expected: 8
            }
        ));
        assert!(matches!(
            Field::new(2, 17, &[0; 17]),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(matches!(
            Field::new(3, 2, &[1]),
            Err(Error::ModulusLength { .. })
        ));
    }

    #[test]
    fn arith_examples() {
        let f = f9();
        let e = f.eps();
        assert_eq!(f.mul(e, e), f.add(e, Elem::ONE));
        let a = f.eps_pow(5);
        assert_eq!(f.mul(a, Elem::ONE), a);
        // ε⁴ via coordinates only: X⁴ mod (X² + 2X + 2) over F_3.
        let oracle = coord_pow_x(3, &[2, 2], 4);
        assert_eq!(oracle, vec![2, 0]);
        assert_eq!(f.pow(e, 4), f.from_coords(&oracle).unwrap());
        assert_eq!(f.pow(e, 4), f.from_int(-1));
        assert_eq!(f.div(a, Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn log_tables_agree_with_coordinate_oracle() {
        for q in [2, 3, 4, 5, 7, 8] {
            let f = Field::for_q(q).unwrap();
            for j in 0..f.order() as usize - 1 {
                let c = coord_pow_x(f.characteristic(), f.modulus(), j);
                assert_eq!(f.coords(f.eps_pow(j as u64)), c);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3, 4] {
            let f = Field::for_q(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    // addition agrees with coordinate-wise addition
                    let s: Vec<u32> = f
                        .coords(a)
                        .iter()
                        .zip(f.coords(b))
                        .map(|(x, y)| (x + y) % f.characteristic())
                        .collect();
                    assert_eq!(f.coords(f.add(a, b)), s);
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn conj_and_norm() {
        let f = f9();
        let e = f.eps();
        // ε³ = ε·ε² = ε² + ε = 2ε + 1
        assert_eq!(f.conj(e), f.pow(e, 3));
        assert_eq!(f.conj(e), f.from_coords(&[1, 2]).unwrap());
        assert_eq!(f.conj(Elem::ONE), Elem::ONE);
        assert_eq!(f.conj(Elem::ZERO), Elem::ZERO);
        assert_eq!(f.norm(e).unwrap(), f.from_int(2));
        assert_eq!(f.norm(Elem::ZERO).unwrap(), Elem::ZERO);
        assert_eq!(f.norm(Elem::ONE).unwrap(), Elem::ONE);

        let odd = Arc::new(Field::new(2, 3, &[1, 1, 0]).unwrap());
        assert_eq!(odd.conj_q(Elem::ONE), Err(Error::OddDegree(3)));
    }

    #[test]
    fn conj_is_automorphism_and_norm_in_subfield() {
        for q in [2, 3, 4, 5, 7] {
            let f = Field::for_q(q).unwrap();
            let mut fixed = 0;
            let mut norms = std::collections::BTreeSet::new();
            for a in f.elements() {
                assert_eq!(f.conj(f.conj(a)), a);
                if f.conj(a) == a {
                    fixed += 1;
                }
                let n = f.norm(a).unwrap();
                assert_eq!(n, f.mul(a, f.conj(a)));
                assert!(f.in_subfield(n).unwrap());
                norms.insert(n);
                for b in f.elements().step_by(3) {
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                }
            }
            assert_eq!(fixed, q);
            assert_eq!(norms.len() as u32, q);
        }
    }

    #[test]
    fn primitive_and_power_sums() {
        for q in [2, 3, 4, 5] {
            let f = Field::for_q(q).unwrap();
            let big_q = f.order() as u64;
            let mut seen = std::collections::HashSet::new();
            let mut x = Elem::ONE;
            for _ in 0..big_q - 1 {
                seen.insert(x);
                x = f.mul(x, f.eps());
            }
            assert_eq!(seen.len() as u64, big_q - 1);
            for a in f.nonzero() {
                assert_eq!(f.pow(a, big_q - 1), Elem::ONE);
            }
            for i in 0..big_q {
                // 0^0 = 1 convention, matching Σ t^0 = Q·1 = 0
                let s = f
                    .elements()
                    .fold(Elem::ZERO, |acc, t| f.add(acc, f.pow(t, i)));
                let expected = if i == big_q - 1 {
                    f.from_int(-1)
                } else {
                    Elem::ZERO
                };
                assert_eq!(s, expected, "q={q} i={i}");
            }
        }
    }

    #[test]
    fn text_forms() {
        let f = f9();
        assert_eq!(f.to_string(), "p=3 e=2 mod=2,2");
        let g: Field = "p=3 e=2 mod=2,2".parse().unwrap();
        assert_eq!(g, *f);
        assert!("p=3 e=2 mod=2,02".parse::<Field>().is_err());
        assert!("p=3  e=2 mod=2,2".parse::<Field>().is_err());
        for a in f.elements() {
            assert_eq!(f.parse_elem(&format_elem(a)).unwrap(), a);
        }
        assert!(f.parse_elem("e^8").is_err());
        assert!(f.parse_elem("e^01").is_err());
        assert!(f.parse_elem("1").is_err());
        assert_eq!(format_elem(f.eps_pow(3)), "e^3");
    }

    #[test]
    fn scalar_checks_fields() {
        let f = f9();
        let g = Field::for_q(2).unwrap();
        let a = Scalar::new(&f, f.eps());
        let b = Scalar::new(&g, Elem::ONE);
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap_err(), Error::FieldMismatch);
        let c = a.arith(&a, ArithOp::Mul).unwrap();
        assert_eq!(c.coords(), vec![1, 1]);
        assert_eq!(
            a.arith(&Scalar::new(&f, Elem::ZERO), ArithOp::Div)
                .unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(a.norm().unwrap().elem(), f.from_int(2));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }
}
