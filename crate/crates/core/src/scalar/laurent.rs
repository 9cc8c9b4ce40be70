use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Rational, Ring, ScalarError};

/// Exponent vector, one signed entry per ring variable.
pub type Exponents = Vec<i32>;

/// Multivariate Laurent polynomial with rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is
/// lexicographic and the representation is canonical: zero coefficients are
/// never stored and the empty map is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ring: Ring,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero(ring: Ring) -> Self {
        LaurentPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            let n = p.ring.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    /// The polynomial consisting of the single variable `ring[index]`.
    pub fn variable(ring: Ring, index: usize) -> Self {
        let mut exps = vec![0; ring.len()];
        exps[index] = 1;
        Self::monomial(ring, exps, Rational::one())
    }

    pub fn monomial(ring: Ring, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), ring.len(), "exponent vector length must match the ring");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms<I>(ring: Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Units of a Laurent ring over a field are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.ring.len());
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), ScalarError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(ScalarError::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring.clone());
        }
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if !self.is_unit() {
            return Err(ScalarError::NotUnit(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(
            self.ring.clone(),
            e.iter().map(|x| -x).collect(),
            c.recip(),
        ))
    }

    /// Substitutes the assigned variables; unassigned ones are kept.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<String, Rational>,
    ) -> Result<Self, ScalarError> {
        let values: Vec<Option<&Rational>> =
            self.ring.vars().iter().map(|v| assignment.get(v)).collect();
        for (e, _) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if x < 0 && values[i].is_some_and(|v| v.is_zero()) {
                    return Err(ScalarError::ZeroDenominator(self.ring.vars()[i].clone()));
                }
            }
        }
        let mut out = Self::zero(self.ring.clone());
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = e.clone();
            for (i, value) in values.iter().enumerate() {
                if let Some(v) = value {
                    coeff *= pow(v, e[i]);
                    rest[i] = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        Ok(out)
    }
}

fn pow(base: &Rational, exp: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Renders a rational as `p` or `p/q`.
pub(crate) fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: terms in descending lexicographic order of their
    /// exponent vectors, variables in ring order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (exps, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", render_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", render_rational(&abs))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self} in {})", self.ring)
    }
}
