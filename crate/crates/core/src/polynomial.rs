//! Dense univariate polynomials over a generic coefficient ring.
//!
//! [`Polynomial`] is a polynomial in `q`; [`InvQPolynomial`] is a polynomial in
//! `1/q`, used for the polymer-gas sum. Coefficients are stored in ascending
//! powers with trailing zeros trimmed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(T::one()), |acc, _| &acc * self)
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, o: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, o: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, o: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial { coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect() }
    }
}

impl<T: Scalar + Signed> Polynomial<T> {
    /// True iff the coefficient of `q^(d-k)` has sign `(-1)^k` or is zero,
    /// where `d` is the degree.
    pub fn alternates_in_sign(&self) -> bool {
        let Some(d) = self.degree() else {
            return true;
        };
        (0..=d).all(|k| {
            let c = &self.coeffs[d - k];
            c.is_zero() || (c.is_positive() == (k % 2 == 0))
        })
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, |f, k| match k {
            0 => Ok(()),
            1 => write!(f, "q"),
            _ => write!(f, "q^{k}"),
        })
    }
}

fn write_terms<T: Scalar + fmt::Display + Signed>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: impl Fn(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        match (first, c.is_negative()) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        if k == 0 || !mag.is_one() {
            write!(f, "{mag}")?;
        }
        var(f, k)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn coeffs_to_json<T: fmt::Display>(coeffs: &[T]) -> Vec<Value> {
    coeffs.iter().map(|c| Value::String(c.to_string())).collect()
}

fn coeffs_from_json<T: Scalar + FromStr>(v: &Value) -> Result<Vec<T>> {
    let bad = |msg: &str| Error::Parse { line: 0, msg: msg.to_string() };
    let arr = v.as_array().ok_or_else(|| bad("coefficients must be an array"))?;
    arr.iter()
        .map(|c| {
            let s = match c {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(bad("coefficient must be a string or integer")),
            };
            s.parse::<T>().map_err(|_| bad("unparsable coefficient"))
        })
        .collect()
}

impl<T: Scalar + fmt::Display + FromStr> Polynomial<T> {
    /// `{ "degree": n, "coefficients": [c_0, .., c_n] }`, ascending powers,
    /// coefficients as decimal strings. The zero polynomial is `degree 0,
    /// ["0"]`.
    pub fn to_json(&self) -> Value {
        if self.is_zero() {
            return json!({ "degree": 0, "coefficients": ["0"] });
        }
        json!({ "degree": self.degree().unwrap(), "coefficients": coeffs_to_json(&self.coeffs) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let coeffs = coeffs_from_json(&v["coefficients"])?;
        let p = Self::new(coeffs);
        let degree = v["degree"].as_u64().ok_or(Error::Parse {
            line: 0,
            msg: "missing degree".into(),
        })?;
        if p.degree().unwrap_or(0) as u64 != degree {
            return Err(Error::Parse { line: 0, msg: "degree does not match coefficients".into() });
        }
        Ok(p)
    }
}

/// Polynomial in `1/q`: `coefficients()[k]` multiplies `q^-k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvQPolynomial<T>(Polynomial<T>);

impl<T: Scalar> InvQPolynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        InvQPolynomial(Polynomial::new(coeffs))
    }

    pub fn coefficients(&self) -> &[T] {
        self.0.coefficients()
    }

    pub fn coeff(&self, k: usize) -> T {
        self.0.coeff(k)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// `q^n * self` as a polynomial in `q`. Requires `degree <= n`.
    pub fn times_q_pow(&self, n: usize) -> Polynomial<T> {
        let d = self.degree().unwrap_or(0);
        assert!(d <= n, "q^{n} * (polynomial of degree {d} in 1/q) is not a polynomial");
        let mut coeffs = vec![T::zero(); n + 1];
        for (k, c) in self.coefficients().iter().enumerate() {
            coeffs[n - k] = c.clone();
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar + fmt::Display + FromStr> InvQPolynomial<T> {
    /// `{ "inv_q_coefficients": [1, a_1, ..] }`.
    pub fn to_json(&self) -> Value {
        let c = if self.0.is_zero() { vec![Value::from("0")] } else { coeffs_to_json(self.coefficients()) };
        json!({ "inv_q_coefficients": c })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        Ok(Self::new(coeffs_from_json(&v["inv_q_coefficients"])?))
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Display for InvQPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // lowest power of 1/q first reads naturally: 1 - 3/q + 2/q^2
        let mut first = true;
        for (k, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}/q")?,
                _ => write!(f, "{mag}/q^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
