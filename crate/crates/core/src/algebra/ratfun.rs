use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Quotient of polynomials kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InexactDivision("rational function with zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let g = Polynomial::gcd(&num, &den);
        let mut num = num.div_rem(&g).0;
        let mut den = den.div_rem(&g).0;
        let lc = den.leading().unwrap().clone();
        if !num_traits::One::is_one(&lc) {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Monic; equal to 1 for polynomials.
    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::InexactDivision("division by the zero rational function".into()));
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduced(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

/// Dense matrix of rational functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl RatFunMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatFunMatrix { rows, cols, entries: vec![RationalFunction::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatFunMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    /// Monic lcm of the reduced entry denominators.
    pub fn common_denominator(&self) -> Polynomial {
        self.entries
            .iter()
            .fold(Polynomial::one(), |acc, e| Polynomial::lcm(&acc, e.denominator()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl fmt::Display for RatFunMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
