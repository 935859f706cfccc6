use super::classify::EigenClass;
use crate::algebra::{Polynomial, Rational};

/// One carry-forward row: eigenvalues of a class polynomial, the multiplicity
/// they are guaranteed to keep in the join and the multiplicity observed.
///
/// Per-factor rows have `factor = Some(i)`; rows with `factor = None`
/// combine the guarantees of every factor sharing the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerRow {
    pub factor: Option<usize>,
    pub class: Polynomial,
    pub root: Option<Rational>,
    pub factor_multiplicity: Option<usize>,
    pub e_main: Option<bool>,
    pub bound: usize,
    pub observed: usize,
}

impl LedgerRow {
    pub fn holds(&self) -> bool {
        self.observed >= self.bound
    }
}

/// Pairwise coprime refinement of square-free polynomials: every input is a
/// product of some of the returned polynomials.
pub(crate) fn coprime_basis(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in polys {
        let mut pending = vec![p.monic()];
        while let Some(mut q) = pending.pop() {
            if q.is_constant() {
                continue;
            }
            let mut i = 0;
            while i < basis.len() {
                let g = Polynomial::gcd(&q, &basis[i]);
                if g.is_constant() {
                    i += 1;
                    continue;
                }
                let b = basis.swap_remove(i);
                let b_rest = b.div_rem(&g).0;
                q = q.div_rem(&g).0;
                pending.push(b_rest);
                pending.push(g);
                i = 0;
                if q.is_constant() {
                    break;
                }
            }
            if !q.is_constant() {
                basis.push(q.monic());
            }
        }
    }
    basis
}

/// Guaranteed multiplicity in the join of a factor eigenvalue class:
/// unchanged when not main, reduced by the side width p when main.
pub fn class_bound(class: &EigenClass, p: usize) -> usize {
    if class.e_main {
        class.multiplicity.saturating_sub(p)
    } else {
        class.multiplicity
    }
}

/// Builds per-factor and combined rows against the join polynomial `join_charpoly`.
pub fn carry_forward_rows(classes: &[Vec<EigenClass>], p: usize, join_charpoly: &Polynomial) -> Vec<LedgerRow> {
    let yun = join_charpoly.square_free_decomposition();
    let mut inputs: Vec<Polynomial> = classes.iter().flatten().map(|c| c.poly.clone()).collect();
    inputs.extend(yun.iter().map(|(a, _)| a.clone()));
    let mut basis = coprime_basis(&inputs);
    basis.sort_by_key(sort_key);
    let observed = |b: &Polynomial| yun.iter().find(|(a, _)| b.divides(a)).map_or(0, |(_, e)| *e);

    let mut rows = Vec::new();
    for b in &basis {
        let root = linear_root(b);
        let mut total = 0;
        let mut hits = 0;
        for (i, factor_classes) in classes.iter().enumerate() {
            let Some(c) = factor_classes.iter().find(|c| b.divides(&c.poly)) else { continue };
            let bound = class_bound(c, p);
            total += bound;
            hits += 1;
            rows.push(LedgerRow {
                factor: Some(i),
                class: b.clone(),
                root: root.clone(),
                factor_multiplicity: Some(c.multiplicity),
                e_main: Some(c.e_main),
                bound,
                observed: observed(b),
            });
        }
        if hits > 1 {
            rows.push(LedgerRow {
                factor: None,
                class: b.clone(),
                root: root.clone(),
                factor_multiplicity: None,
                e_main: None,
                bound: total,
                observed: observed(b),
            });
        }
    }
    rows
}

fn linear_root(b: &Polynomial) -> Option<Rational> {
    (b.degree() == Some(1)).then(|| -b.coeff(0))
}

fn sort_key(b: &Polynomial) -> (usize, Option<Rational>, Vec<Rational>) {
    (b.degree().unwrap_or(0).min(2), linear_root(b), b.coeffs().to_vec())
}
