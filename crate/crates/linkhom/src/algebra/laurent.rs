//! Sparse Laurent polynomials in one variable `v` over the rationals, and the
//! quantum integers built from them.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::{qq, QQ};

/// A Laurent polynomial in `v` with rational coefficients, stored sparsely as
/// an exponent-to-coefficient map with no zero entries.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, QQ>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, QQ::one())
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, QQ::one())
    }

    pub fn constant(c: QQ) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(qq(n))
    }

    /// `c * v^exp`.
    pub fn monomial(exp: i64, c: QQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, QQ)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> QQ {
        self.terms.get(&exp).cloned().unwrap_or_else(QQ::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &QQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: QQ) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(QQ::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &QQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by `v^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Substitute `v -> v^{-1}`.
    pub fn mirror(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute `v -> v^m` (m nonzero).
    pub fn scale_exponents(&self, m: i64) -> Self {
        assert!(m != 0, "exponent scale must be nonzero");
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        }
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dmax, dlead) = {
            let (e, c) = d.terms.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rmax, rlead) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (*e, c.clone())
            };
            let qe = rmax - dmax;
            let qc = rlead / &dlead;
            let t = Self::monomial(qe, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
            if let Some(new_max) = rem.max_deg() {
                if new_max >= rmax {
                    return None;
                }
                if new_max - dmax < self.min_deg().unwrap() - d.max_deg().unwrap() - 1 {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Evaluate at `v = x` for a rational `x != 0`.
    pub fn eval(&self, x: &QQ) -> QQ {
        let mut acc = QQ::zero();
        for (e, c) in &self.terms {
            let mut p = QQ::one();
            let n = e.unsigned_abs();
            for _ in 0..n {
                p *= x;
            }
            if *e < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        acc
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, exp: i64, mag: &QQ) -> fmt::Result {
    let coeff_part = if mag.is_one() && exp != 0 {
        String::new()
    } else if mag.is_integer() {
        format!("{}", mag.numer())
    } else {
        format!("({})", mag)
    };
    let var_part = match exp {
        0 => String::new(),
        1 => "v".to_string(),
        e => format!("v^{}", e),
    };
    write!(f, "{}{}", coeff_part, var_part)
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: terms in increasing exponent, e.g. `v^-2 + 2 + v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_term(f, *e, &c.abs())?;
        }
        Ok(())
    }
}

/// Quantum integer `[a] = v^{a-1} + v^{a-3} + ... + v^{1-a}`, with `[-a] = -[a]`.
pub fn quantum_int(a: i64) -> LaurentPoly {
    if a == 0 {
        return LaurentPoly::zero();
    }
    if a < 0 {
        return quantum_int(-a).neg();
    }
    LaurentPoly::from_terms((0..a).map(|j| (a - 1 - 2 * j, QQ::one())))
}

/// Quantum factorial `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 1..=n {
        acc = acc.mul(&quantum_int(i as i64));
    }
    acc
}

/// Quantum binomial `[n choose k] = [n]! / ([k]! [n-k]!)`, computed by exact division.
pub fn quantum_binomial(n: u32, k: u32) -> LaurentPoly {
    assert!(k <= n, "binomial requires k <= n");
    let num = quantum_factorial(n);
    let den = quantum_factorial(k).mul(&quantum_factorial(n - k));
    num.div_exact(&den)
        .expect("quantum binomial division is exact")
}
