//! Pluggable commutative coefficient rings.
//!
//! Every ring here is a commutative ring with identity. Values are kept in a
//! canonical representation so that structural equality is ring equality:
//! residues reduced into `[0, n)`, rationals in lowest terms with positive
//! denominator, Laurent polynomials with no stored zero coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid ring spec: {0}")]
    InvalidRingSpec(String),
    #[error("cannot parse {text:?} as an element of {ring}")]
    BadLiteral { ring: String, text: String },
    #[error("element does not belong to ring {0}")]
    WrongRing(String),
    #[error("divisibility is not decidable for ring {0}")]
    NonPrincipalUnsupported(String),
}

/// Description of a supported coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// The integers `Z`, arbitrary precision.
    Integers,
    /// `Z/nZ` for `n >= 2`.
    IntegersMod(u64),
    /// The rationals `Q`.
    Rationals,
    /// The field with `p` elements, `p` prime.
    PrimeField(u64),
    /// Laurent polynomials over `Z` or `Q` in one or two variables.
    LaurentPoly { base: LaurentBase, vars: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LaurentBase {
    Integers,
    Rationals,
}

/// A value in one of the supported rings.
///
/// Interpretation depends on the owning [`RingSpec`]; the variants carry
/// enough structure that equal ring elements are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingElem {
    Int(BigInt),
    Mod(u64),
    Rat(BigRational),
    /// Exponent vector -> base coefficient; no zero coefficients stored.
    Laurent(BTreeMap<Vec<i64>, RingElem>),
}

impl RingSpec {
    pub fn integers_mod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::InvalidRingSpec(format!(
                "modulus must be >= 2, got {n}"
            )));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if !is_prime_u64(p) {
            return Err(RingError::InvalidRingSpec(format!("{p} is not prime")));
        }
        Ok(RingSpec::PrimeField(p))
    }

    pub fn laurent(base: LaurentBase, vars: usize) -> Result<Self, RingError> {
        if !(1..=2).contains(&vars) {
            return Err(RingError::InvalidRingSpec(format!(
                "laurent rings support 1 or 2 variables, got {vars}"
            )));
        }
        Ok(RingSpec::LaurentPoly { base, vars })
    }

    /// Parse a CLI ring selector: `int`, `mod:<n>`, `rat`, `gf:<p>`,
    /// `laurent:<1|2>` (integer base).
    pub fn parse(s: &str) -> Result<Self, RingError> {
        let bad = |m: &str| RingError::InvalidRingSpec(m.to_string());
        match s {
            "int" => Ok(RingSpec::Integers),
            "rat" => Ok(RingSpec::Rationals),
            _ => {
                if let Some(n) = s.strip_prefix("mod:") {
                    let n: u64 = n.parse().map_err(|_| bad(s))?;
                    RingSpec::integers_mod(n)
                } else if let Some(p) = s.strip_prefix("gf:") {
                    let p: u64 = p.parse().map_err(|_| bad(s))?;
                    RingSpec::prime_field(p)
                } else if let Some(v) = s.strip_prefix("laurent:") {
                    let v: usize = v.parse().map_err(|_| bad(s))?;
                    RingSpec::laurent(LaurentBase::Integers, v)
                } else {
                    Err(bad(s))
                }
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Rationals => true,
            // primality is re-checked so that a hand-built spec with a
            // composite modulus cannot masquerade as a field
            RingSpec::PrimeField(p) => is_prime_u64(*p),
            RingSpec::IntegersMod(n) => is_prime_u64(*n),
            _ => false,
        }
    }

    pub fn zero(&self) -> RingElem {
        match self {
            RingSpec::Integers => RingElem::Int(BigInt::zero()),
            RingSpec::IntegersMod(_) | RingSpec::PrimeField(_) => RingElem::Mod(0),
            RingSpec::Rationals => RingElem::Rat(BigRational::zero()),
            RingSpec::LaurentPoly { .. } => RingElem::Laurent(BTreeMap::new()),
        }
    }

    pub fn one(&self) -> RingElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> RingElem {
        match self {
            RingSpec::Integers => RingElem::Int(BigInt::from(value)),
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => {
                RingElem::Mod((value.rem_euclid(*n as i64)) as u64)
            }
            RingSpec::Rationals => RingElem::Rat(BigRational::from(BigInt::from(value))),
            RingSpec::LaurentPoly { base, vars } => {
                let c = base.spec().from_i64(value);
                laurent_from_terms(vec![(vec![0; *vars], c)])
            }
        }
    }

    /// The monomial `c * x1^e1 [* x2^e2]` of a Laurent ring.
    pub fn laurent_monomial(&self, coeff: i64, exps: &[i64]) -> Result<RingElem, RingError> {
        match self {
            RingSpec::LaurentPoly { base, .. } => {
                self.laurent_term(base.spec().from_i64(coeff), exps)
            }
            _ => Err(RingError::WrongRing(self.to_string())),
        }
    }

    /// A monomial with a base-ring coefficient.
    pub fn laurent_term(&self, coeff: RingElem, exps: &[i64]) -> Result<RingElem, RingError> {
        match self {
            RingSpec::LaurentPoly { vars, .. } => {
                if exps.len() != *vars {
                    return Err(RingError::WrongRing(self.to_string()));
                }
                Ok(laurent_from_terms(vec![(exps.to_vec(), coeff)]))
            }
            _ => Err(RingError::WrongRing(self.to_string())),
        }
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        match a {
            RingElem::Int(x) => x.is_zero(),
            RingElem::Mod(x) => *x == 0,
            RingElem::Rat(x) => x.is_zero(),
            RingElem::Laurent(m) => m.is_empty(),
        }
    }

    pub fn eq(&self, a: &RingElem, b: &RingElem) -> bool {
        a == b
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (self, a, b) {
            (RingSpec::Integers, RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x + y),
            (
                RingSpec::IntegersMod(n) | RingSpec::PrimeField(n),
                RingElem::Mod(x),
                RingElem::Mod(y),
            ) => RingElem::Mod(((u128::from(*x) + u128::from(*y)) % u128::from(*n)) as u64),
            (RingSpec::Rationals, RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x + y),
            (RingSpec::LaurentPoly { base, .. }, RingElem::Laurent(x), RingElem::Laurent(y)) => {
                let bs = base.spec();
                let mut out = x.clone();
                for (exp, c) in y {
                    let entry = out.entry(exp.clone()).or_insert_with(|| bs.zero());
                    *entry = bs.add(entry, c);
                    if bs.is_zero(entry) {
                        out.remove(exp);
                    }
                }
                RingElem::Laurent(out)
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        match (self, a) {
            (RingSpec::Integers, RingElem::Int(x)) => RingElem::Int(-x),
            (RingSpec::IntegersMod(n) | RingSpec::PrimeField(n), RingElem::Mod(x)) => {
                RingElem::Mod(if *x == 0 { 0 } else { n - x })
            }
            (RingSpec::Rationals, RingElem::Rat(x)) => RingElem::Rat(-x),
            (RingSpec::LaurentPoly { base, .. }, RingElem::Laurent(m)) => {
                let bs = base.spec();
                RingElem::Laurent(m.iter().map(|(e, c)| (e.clone(), bs.neg(c))).collect())
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (self, a, b) {
            (RingSpec::Integers, RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x * y),
            (
                RingSpec::IntegersMod(n) | RingSpec::PrimeField(n),
                RingElem::Mod(x),
                RingElem::Mod(y),
            ) => RingElem::Mod(((u128::from(*x) * u128::from(*y)) % u128::from(*n)) as u64),
            (RingSpec::Rationals, RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x * y),
            (RingSpec::LaurentPoly { base, .. }, RingElem::Laurent(x), RingElem::Laurent(y)) => {
                let bs = base.spec();
                let mut out: BTreeMap<Vec<i64>, RingElem> = BTreeMap::new();
                for (ea, ca) in x {
                    for (eb, cb) in y {
                        let exp: Vec<i64> = ea.iter().zip(eb).map(|(p, q)| p + q).collect();
                        let prod = bs.mul(ca, cb);
                        let entry = out.entry(exp.clone()).or_insert_with(|| bs.zero());
                        *entry = bs.add(entry, &prod);
                        if bs.is_zero(entry) {
                            out.remove(&exp);
                        }
                    }
                }
                RingElem::Laurent(out)
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        match (self, a) {
            (RingSpec::Integers, RingElem::Int(x)) => x.abs().is_one(),
            (RingSpec::IntegersMod(n) | RingSpec::PrimeField(n), RingElem::Mod(x)) => {
                x.gcd(n) == 1
            }
            (RingSpec::Rationals, RingElem::Rat(x)) => !x.is_zero(),
            (RingSpec::LaurentPoly { base, .. }, RingElem::Laurent(m)) => {
                // Units are monomials with a unit coefficient.
                m.len() == 1 && base.spec().is_unit(m.values().next().unwrap())
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    /// Multiplicative inverse, when `a` is a unit.
    pub fn inverse(&self, a: &RingElem) -> Option<RingElem> {
        if !self.is_unit(a) {
            return None;
        }
        match (self, a) {
            (RingSpec::Integers, RingElem::Int(_)) => Some(a.clone()),
            (RingSpec::IntegersMod(n) | RingSpec::PrimeField(n), RingElem::Mod(x)) => {
                Some(RingElem::Mod(mod_inverse(*x, *n)?))
            }
            (RingSpec::Rationals, RingElem::Rat(x)) => Some(RingElem::Rat(x.recip())),
            (RingSpec::LaurentPoly { base, .. }, RingElem::Laurent(m)) => {
                let (exp, c) = m.iter().next().unwrap();
                let inv = base.spec().inverse(c)?;
                Some(laurent_from_terms(vec![(
                    exp.iter().map(|e| -e).collect(),
                    inv,
                )]))
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    /// Decide `b` in the principal ideal `(a)`.
    pub fn divides(&self, a: &RingElem, b: &RingElem) -> Result<bool, RingError> {
        match (self, a, b) {
            (RingSpec::Integers, RingElem::Int(x), RingElem::Int(y)) => {
                if x.is_zero() {
                    Ok(y.is_zero())
                } else {
                    Ok((y % x).is_zero())
                }
            }
            (RingSpec::IntegersMod(n) | RingSpec::PrimeField(n), RingElem::Mod(x), RingElem::Mod(y)) => {
                // (x) = (gcd(x, n)) in Z/n.
                let g = x.gcd(n);
                Ok(if g == 0 { *y == 0 } else { y % g == 0 })
            }
            (RingSpec::Rationals, RingElem::Rat(x), RingElem::Rat(y)) => {
                Ok(!x.is_zero() || y.is_zero())
            }
            (RingSpec::LaurentPoly { .. }, _, _) => {
                Err(RingError::NonPrincipalUnsupported(self.to_string()))
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    /// Canonical generator of the principal ideal `(a)`.
    ///
    /// Over `Z` this is `|a|`, over `Z/n` it is `gcd(a, n)`, over a field it
    /// is `1` for `a != 0`.
    pub fn principal_generator(&self, a: &RingElem) -> Result<RingElem, RingError> {
        match (self, a) {
            (RingSpec::Integers, RingElem::Int(x)) => Ok(RingElem::Int(x.abs())),
            (RingSpec::IntegersMod(n) | RingSpec::PrimeField(n), RingElem::Mod(x)) => {
                Ok(RingElem::Mod(if *x == 0 { 0 } else { x.gcd(n) }))
            }
            (RingSpec::Rationals, RingElem::Rat(x)) => Ok(if x.is_zero() {
                self.zero()
            } else {
                self.one()
            }),
            (RingSpec::LaurentPoly { .. }, _) => {
                Err(RingError::NonPrincipalUnsupported(self.to_string()))
            }
            _ => panic!("ring element does not match ring {self}"),
        }
    }

    /// Parse a coefficient literal: `3`, `-2`, `2/5`, `x`, `y^-2`, `x^3`.
    pub fn parse_literal(&self, text: &str) -> Result<RingElem, RingError> {
        let bad = || RingError::BadLiteral {
            ring: self.to_string(),
            text: text.to_string(),
        };
        let t = text.trim();
        match self {
            RingSpec::Integers => {
                let v: BigInt = t.parse().map_err(|_| bad())?;
                Ok(RingElem::Int(v))
            }
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => {
                let v: i128 = t.parse().map_err(|_| bad())?;
                Ok(RingElem::Mod(v.rem_euclid(i128::from(*n)) as u64))
            }
            RingSpec::Rationals => {
                if let Some((num, den)) = t.split_once('/') {
                    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(RingElem::Rat(BigRational::new(n, d)))
                } else {
                    let v: BigInt = t.parse().map_err(|_| bad())?;
                    Ok(RingElem::Rat(BigRational::from(v)))
                }
            }
            RingSpec::LaurentPoly { vars, .. } => {
                if let Ok(v) = t.parse::<i64>() {
                    return Ok(self.from_i64(v));
                }
                let (var, exp) = match t.split_once('^') {
                    Some((v, e)) => (v.trim(), e.trim().parse::<i64>().map_err(|_| bad())?),
                    None => (t, 1),
                };
                let idx = match var {
                    "x" => 0,
                    "y" if *vars == 2 => 1,
                    _ => return Err(bad()),
                };
                let mut exps = vec![0i64; *vars];
                exps[idx] = exp;
                self.laurent_monomial(1, &exps)
            }
        }
    }

    pub fn display(&self, a: &RingElem) -> String {
        match a {
            RingElem::Int(x) => x.to_string(),
            RingElem::Mod(x) => x.to_string(),
            RingElem::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            RingElem::Laurent(m) => {
                if m.is_empty() {
                    return "0".to_string();
                }
                let base = match self {
                    RingSpec::LaurentPoly { base, .. } => base.spec(),
                    _ => panic!("ring element does not match ring {self}"),
                };
                let names = ["x", "y"];
                let mut parts = Vec::new();
                for (exp, c) in m {
                    let mut factors = Vec::new();
                    let coeff = base.display(c);
                    let unit_coeff = coeff == "1";
                    let neg_unit_coeff = coeff == "-1";
                    for (i, e) in exp.iter().enumerate() {
                        match e {
                            0 => {}
                            1 => factors.push(names[i].to_string()),
                            _ => factors.push(format!("{}^{}", names[i], e)),
                        }
                    }
                    let term = if factors.is_empty() {
                        coeff
                    } else if unit_coeff {
                        factors.join("*")
                    } else if neg_unit_coeff {
                        format!("-{}", factors.join("*"))
                    } else {
                        format!("{}*{}", coeff, factors.join("*"))
                    };
                    parts.push(term);
                }
                parts.join(" + ")
            }
        }
    }
}

impl LaurentBase {
    pub fn spec(&self) -> RingSpec {
        match self {
            LaurentBase::Integers => RingSpec::Integers,
            LaurentBase::Rationals => RingSpec::Rationals,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "int"),
            RingSpec::IntegersMod(n) => write!(f, "mod:{n}"),
            RingSpec::Rationals => write!(f, "rat"),
            RingSpec::PrimeField(p) => write!(f, "gf:{p}"),
            RingSpec::LaurentPoly { base, vars } => {
                let b = match base {
                    LaurentBase::Integers => "int",
                    LaurentBase::Rationals => "rat",
                };
                write!(f, "laurent:{vars}[{b}]")
            }
        }
    }
}

fn laurent_from_terms(terms: Vec<(Vec<i64>, RingElem)>) -> RingElem {
    let mut m = BTreeMap::new();
    for (exp, c) in terms {
        let zero = match &c {
            RingElem::Int(x) => x.is_zero(),
            RingElem::Rat(x) => x.is_zero(),
            _ => false,
        };
        if !zero {
            m.insert(exp, c);
        }
    }
    RingElem::Laurent(m)
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (i128::from(n), i128::from(a));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(i128::from(n)) as u64)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((u128::from(x) * u128::from(x)) % u128::from(n)) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = u128::from(modulus);
    let mut result: u128 = 1;
    let mut b = u128::from(base % modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}
