//! Exact multivariate Laurent polynomials over the integers.
//!
//! A [`LaurentPoly`] is a finite map from exponent vectors (one signed
//! exponent per variable) to nonzero [`BigInt`] coefficients. Every cluster
//! variable and every symbolic frieze entry in this crate is one of these.
//!
//! The representation is canonical: zero coefficients are never stored and
//! terms live in a `BTreeMap`, so structural equality is polynomial equality
//! and iteration order is lexicographic in the exponent vector.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors produced by Laurent polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable count mismatch ({left} vs {right})")]
    VarCountMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("quotient is not a Laurent polynomial")]
    NotDivisible,
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("evaluation point coordinate {index} is not positive")]
    NonPositivePoint { index: usize },
}

/// Exponent vector of a single monomial.
pub type Exponents = Vec<i32>;

/// A Laurent polynomial in `nvars` variables with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The coordinate function `x_{index+1}` (zero-based `index`).
    ///
    /// Panics if `index >= nvars`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::monomial(nvars, exps, 1)
    }

    /// `c * x^exps`. Panics if `exps.len() != nvars`.
    pub fn monomial(nvars: usize, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector has wrong length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut map: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(LaurentError::VarCountMismatch {
                    left: nvars,
                    right: exps.len(),
                });
            }
            *map.entry(exps).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { nvars, terms: map })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            Err(LaurentError::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_compatible(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                accumulate(&mut terms, add_exps(ea, eb), ca * cb);
            }
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exps(e, shift), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms (zeros for the zero
    /// polynomial). `self * x^(-min)` is a polynomial with no monomial factor.
    pub fn min_exponents(&self) -> Exponents {
        let mut min: Option<Exponents> = None;
        for e in self.terms.keys() {
            match &mut min {
                None => min = Some(e.clone()),
                Some(m) => m.iter_mut().zip(e).for_each(|(a, &b)| *a = (*a).min(b)),
            }
        }
        min.unwrap_or_else(|| vec![0; self.nvars])
    }

    fn max_exponents(&self) -> Exponents {
        let mut max = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            max.iter_mut().zip(e).for_each(|(a, &b)| *a = (*a).max(b));
        }
        max
    }

    /// True when every term has nonnegative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact division: returns `r` with `r * divisor == self`, or
    /// [`LaurentError::NotDivisible`] if no Laurent polynomial `r` exists.
    ///
    /// Both operands are split as `x^shift * P` with `P` a polynomial free of
    /// monomial factors; since each `x_i` is prime in `Z[x]`, the quotient of
    /// the polynomial parts must itself be a polynomial, which is found by
    /// single-divisor reduction under lex order.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }

        let p_shift = self.min_exponents();
        let q_shift = divisor.min_exponents();
        let p = self.shift(&negate(&p_shift));
        let q = divisor.shift(&negate(&q_shift));

        // Componentwise degree bound on the quotient.
        let p_max = p.max_exponents();
        let q_max = q.max_exponents();
        let bound: Vec<i32> = p_max.iter().zip(&q_max).map(|(a, b)| a - b).collect();
        if bound.iter().any(|&b| b < 0) {
            return Err(LaurentError::NotDivisible);
        }

        let (lead_exp, lead_coeff) = q
            .terms
            .last_key_value()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("divisor is nonzero");

        let mut rem = p.terms;
        let mut quotient = BTreeMap::new();
        while let Some((exps, coeff)) = rem.last_key_value() {
            let step: Exponents = exps.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
            if step.iter().zip(&bound).any(|(&s, &b)| s < 0 || s > b) {
                return Err(LaurentError::NotDivisible);
            }
            let (c, r) = coeff.div_rem(&lead_coeff);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (qe, qc) in &q.terms {
                accumulate(&mut rem, add_exps(qe, &step), -(&c * qc));
            }
            quotient.insert(step, c);
        }

        let net: Exponents = p_shift.iter().zip(&q_shift).map(|(a, b)| a - b).collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: quotient,
        }
        .shift(&net))
    }

    /// Exact value at a point with positive rational coordinates.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational, LaurentError> {
        if point.len() != self.nvars {
            return Err(LaurentError::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        if let Some(index) = point.iter().position(|v| !v.is_positive()) {
            return Err(LaurentError::NonPositivePoint { index });
        }
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut num = c.clone();
            let mut den = BigInt::one();
            for (v, &e) in point.iter().zip(exps) {
                let k = e.unsigned_abs();
                if e >= 0 {
                    num *= v.numer().pow(k);
                    den *= v.denom().pow(k);
                } else {
                    num *= v.denom().pow(k);
                    den *= v.numer().pow(k);
                }
            }
            total += BigRational::new(num, den);
        }
        Ok(total)
    }

    /// Value at `(1, ..., 1)`: the sum of the coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

fn add_exps(a: &[i32], b: &[i32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn negate(a: &[i32]) -> Exponents {
    a.iter().map(|x| -x).collect()
}

fn accumulate(terms: &mut BTreeMap<Exponents, BigInt>, exps: Exponents, c: BigInt) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(exps) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// Operator forms panic on mismatched variable counts; use the `checked_*`
// methods when operands come from untrusted input.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("mismatched variable counts")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("mismatched variable counts")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("mismatched variable counts")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &[i32]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Renders as `numerator/denominator` with a monomial denominator, e.g.
/// `(1 + x1 + x2)/(x1*x2)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let den: Exponents = self.min_exponents().iter().map(|&m| (-m).max(0)).collect();
        let numer = self.shift(&den);
        let mut terms: Vec<(&Exponents, &BigInt)> = numer.terms().collect();
        // Ascending total degree, then x1 before x2.
        terms.sort_by(|(a, _), (b, _)| {
            let da: i32 = a.iter().sum();
            let db: i32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });

        let has_den = den.iter().any(|&d| d > 0);
        let wrap = has_den && terms.len() > 1;
        if wrap {
            f.write_str("(")?;
        }
        for (idx, (exps, c)) in terms.iter().enumerate() {
            let constant = exps.iter().all(|&e| e == 0);
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, exps)?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        if has_den {
            let multi = den.iter().filter(|&&d| d > 0).count() > 1;
            f.write_str("/")?;
            if multi {
                f.write_str("(")?;
            }
            write_monomial(f, &den)?;
            if multi {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    coeff: String,
    exps: Vec<i32>,
}

/// JSON form: `[{"coeff": "<decimal>", "exps": [..]}, ...]`, sorted by
/// exponent vector.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .terms
            .iter()
            .map(|(e, c)| WireTerm {
                coeff: c.to_string(),
                exps: e.clone(),
            })
            .collect();
        wire.serialize(s)
    }
}

impl LaurentPoly {
    /// Parses the JSON wire form. The variable count cannot be recovered from
    /// an empty term list, so it is passed explicitly.
    pub fn from_wire(nvars: usize, value: &serde_json::Value) -> Result<Self, String> {
        let wire: Vec<WireTerm> =
            serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        terms_from_wire(Some(nvars), wire)
    }
}

fn terms_from_wire(nvars: Option<usize>, wire: Vec<WireTerm>) -> Result<LaurentPoly, String> {
    let nvars = match nvars.or_else(|| wire.first().map(|t| t.exps.len())) {
        Some(n) => n,
        None => return Err("cannot infer variable count of an empty polynomial".into()),
    };
    let mut terms = Vec::with_capacity(wire.len());
    for t in wire {
        let c: BigInt = t
            .coeff
            .parse()
            .map_err(|_| format!("invalid coefficient {:?}", t.coeff))?;
        terms.push((t.exps, c));
    }
    LaurentPoly::from_terms(nvars, terms).map_err(|e| e.to_string())
}

/// Deserialization infers the variable count from the first term; the zero
/// polynomial (empty array) must go through [`LaurentPoly::from_wire`].
impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Vec::<WireTerm>::deserialize(d)?;
        terms_from_wire(None, wire).map_err(D::Error::custom)
    }
}
