//! Univariate polynomials over a [`Field`].

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::{format_elem, Elem, Field};

/// Coefficients low degree first; never has a trailing zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::new(vec![Elem::ONE])
    }

    /// X^n
    pub fn monomial(n: usize) -> Poly {
        let mut c = vec![Elem::ZERO; n + 1];
        c[n] = Elem::ONE;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, f: &Field, c: Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, f: &Field, mut k: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            k >>= 1;
        }
        acc
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, f: &Field, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading()).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - d];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + d], lead_inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
        }
        rem.truncate(d);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, f: &Field, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(f, divisor)?.1)
    }

    pub fn monic(&self, f: &Field) -> Poly {
        match f.inv(self.leading()) {
            Some(inv) => self.scale(f, inv),
            None => Poly::zero(),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, f: &Field, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// self^k mod m by square-and-multiply.
    pub fn pow_mod(&self, f: &Field, mut k: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(f, m)?;
        let mut acc = Poly::one().rem(f, m)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m)?;
            }
            base = base.mul(f, &base).rem(f, m)?;
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn has_root(&self, f: &Field) -> bool {
        f.elements().any(|a| self.eval(f, a).is_zero())
    }

    /// Ben-Or irreducibility test: no factor of degree i ≤ d/2 divides
    /// X^{Q^i} − X.
    pub fn is_irreducible(&self, f: &Field) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let x = Poly::monomial(1);
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            h = h
                .pow_mod(f, f.order() as u64, self)
                .expect("nonzero modulus");
            let g = self.gcd(f, &h.sub(f, &x));
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Comma-separated coefficients, constant term first, in `"0"`/`"e^j"` form.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|&c| format_elem(c))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(f: &Field, s: &str) -> Result<Poly> {
        let coeffs = f.parse_vector(s)?;
        let p = Poly::new(coeffs.clone());
        // canonical text has no trailing zeros except the lone zero polynomial
        if p.coeffs.len() != coeffs.len() && s != "0" {
            return Err(Error::parse("polynomial", s));
        }
        Ok(p)
    }
}

/// Ordering of monic polynomials of equal degree used for "smallest" choices:
/// lexicographic on (c_{d−1}, …, c_0) in canonical element order.
pub fn monic_order(a: &Poly, b: &Poly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
}

/// All monic polynomials of degree `d`, in [`monic_order`].
pub fn monic_polys(f: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let base = f.order() as u64;
    let count = base
        .checked_pow(d as u32)
        .expect("degree too large to enumerate");
    (0..count).map(move |mut t| {
        let mut c = vec![Elem::ZERO; d + 1];
        for slot in c.iter_mut().take(d) {
            *slot = Elem::from_index((t % base) as u32);
            t /= base;
        }
        c[d] = Elem::ONE;
        Poly::new(c)
    })
}

/// The first monic irreducible polynomial of degree `d` in [`monic_order`].
pub fn smallest_irreducible(f: &Field, d: usize) -> Result<Poly> {
    if d == 0 {
        return Err(Error::OutOfRange(
            "irreducible polynomial degree must be at least 1".into(),
        ));
    }
    Ok(monic_polys(f, d)
        .find(|p| p.is_irreducible(f))
        .expect("irreducible polynomials exist in every degree"))
}
