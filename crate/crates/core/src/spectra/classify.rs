use serde::Serialize;

use super::gamma::gamma;
use crate::algebra::{charpoly, Polynomial, QMatrix, Rational};
use crate::error::Result;

/// A set of eigenvalues sharing multiplicity and E-main status: either one
/// rational eigenvalue or all roots of a square-free polynomial with no
/// rational roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigenClass {
    /// Monic, square-free; linear exactly when `root` is set.
    pub poly: Polynomial,
    pub root: Option<Rational>,
    pub multiplicity: usize,
    pub e_main: bool,
}

impl EigenClass {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn label(&self) -> String {
        match &self.root {
            Some(r) => crate::algebra::display_rational(r),
            None => format!("roots of {}", self.poly),
        }
    }
}

/// Serializable view used in reports.
#[derive(Clone, Debug, Serialize)]
pub struct EigenClassJson {
    pub eigenvalue: String,
    pub polynomial: Polynomial,
    pub multiplicity: usize,
    pub e_main: bool,
}

impl From<&EigenClass> for EigenClassJson {
    fn from(c: &EigenClass) -> Self {
        EigenClassJson { eigenvalue: c.label(), polynomial: c.poly.clone(), multiplicity: c.multiplicity, e_main: c.e_main }
    }
}

fn split_rational(poly: Polynomial, multiplicity: usize, e_main: bool, out: &mut Vec<EigenClass>) {
    if poly.is_constant() {
        return;
    }
    let mut rest = poly.clone();
    for r in poly.rational_roots() {
        let lin = Polynomial::linear(&r);
        rest = rest.div_rem(&lin).0;
        out.push(EigenClass { poly: lin, root: Some(r), multiplicity, e_main });
    }
    if !rest.is_constant() {
        out.push(EigenClass { poly: rest.monic(), root: None, multiplicity, e_main });
    }
}

/// Splits the eigenvalues of a matrix with characteristic polynomial
/// `charpoly` by multiplicity and by whether they divide the reduced
/// denominator `g` of its main function.
pub fn classify_by_denominator(charpoly: &Polynomial, g: &Polynomial) -> Vec<EigenClass> {
    let mut out = Vec::new();
    for (part, e) in charpoly.square_free_decomposition() {
        let main = Polynomial::gcd(&part, g);
        let non_main = part.div_rem(&main).0;
        split_rational(main, e, true, &mut out);
        split_rational(non_main, e, false, &mut out);
    }
    out.sort_by(|a, b| match (&a.root, &b.root) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => a.poly.degree().cmp(&b.poly.degree()).then_with(|| a.poly.coeffs().cmp(b.poly.coeffs())),
    });
    out
}

/// E-main classification of the eigenvalues of a symmetric M: θ is E-main
/// exactly when (λ − θ) divides the reduced denominator of Γ_M(E).
pub fn classify_e_main(m: &QMatrix, e: &QMatrix) -> Result<Vec<EigenClass>> {
    let mf = gamma(m, e)?;
    Ok(classify_by_denominator(&charpoly(m)?, &mf.reduced_denominator))
}
