//! Independent brute-force oracle: finds ALL singular vectors of a
//! prescribed weight in M(lambda), or in the Kac quotient model, by exact
//! null-space computation. The oracle never consults the chain family or
//! the c/d coefficients; it enumerates weight spaces generically.

use std::collections::BTreeMap;

use crate::algebra::SuperAlgebra;
use crate::coeff::Rat;
use crate::error::{Error, Result};
use crate::glmn;
use crate::kac::{i_lambda_weight_span, KacContext};
use crate::linalg::{nullspace, Echelon, QMatrix};
use crate::pbw::{weight_monomials, Element, PbwMonomial};
use crate::verma::{act_gen, VermaVector};
use crate::weight::{Root, Weight};

/// The stacked matrix of raising actions out of one weight space, with the
/// monomial basis indexing its columns.
pub struct RaisingMatrix {
    pub matrix: QMatrix,
    pub basis: Vec<PbwMonomial>,
}

/// Expresses an element of a single weight space as coordinates over its
/// monomial basis.
pub fn coords_in_basis(
    elem: &Element<Rat>,
    index: &BTreeMap<PbwMonomial, usize>,
) -> Result<Vec<Rat>> {
    let mut out = vec![Rat::zero(); index.len()];
    for (m, c) in elem.terms() {
        let Some(&i) = index.get(m) else {
            return Err(Error::InternalConsistency(format!(
                "monomial {m:?} missing from the enumerated weight-space basis"
            )));
        };
        out[i] = c.clone();
    }
    Ok(out)
}

fn basis_index(basis: &[PbwMonomial]) -> BTreeMap<PbwMonomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

/// The stacked matrix of the actions of `raisings` from the mu-weight space
/// of M(lambda) into the respective target weight spaces; entries exact.
pub fn raising_action_matrix_with(
    alg: &SuperAlgebra,
    lam: &Weight,
    mu: &Weight,
    raisings: &[usize],
) -> Result<RaisingMatrix> {
    let basis = weight_monomials(alg, &mu.sub(lam));
    let columns: Vec<VermaVector> = basis
        .iter()
        .map(|m| {
            VermaVector::from_expansion(
                lam.clone(),
                Element::from_monomial(m.clone(), Rat::one()),
            )
        })
        .collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for &g in raisings {
        let alpha = alg.gen_weight(g);
        let target = weight_monomials(alg, &mu.add(&alpha).sub(lam));
        let index = basis_index(&target);
        let mut block: Vec<Vec<Rat>> = vec![vec![Rat::zero(); basis.len()]; target.len()];
        for (j, v) in columns.iter().enumerate() {
            let image = act_gen(alg, g, v);
            let coords = coords_in_basis(&image.expansion, &index)?;
            for (r, c) in coords.into_iter().enumerate() {
                block[r][j] = c;
            }
        }
        rows.extend(block);
    }
    let matrix = if rows.is_empty() {
        QMatrix::zeros(0, basis.len())
    } else {
        QMatrix::from_rows(rows)
    };
    Ok(RaisingMatrix { matrix, basis })
}

/// Simple raisings suffice to characterize singular vectors; this is the
/// default system (sufficiency against all positive raisings is asserted in
/// the verification suite).
pub fn raising_action_matrix(
    alg: &SuperAlgebra,
    lam: &Weight,
    mu: &Weight,
) -> Result<RaisingMatrix> {
    raising_action_matrix_with(alg, lam, mu, &alg.simple_positive_gens)
}

/// Formula vector, oracle null-space basis, match scalar, and uniqueness
/// verdict for one (algebra, lambda, mu) instance.
#[derive(Clone, Debug)]
pub struct SingularVectorReport {
    pub algebra: String,
    pub lam: Weight,
    pub mu: Weight,
    /// Set when `lam - mu` is an odd positive root.
    pub beta: Option<Root>,
    pub basis: Vec<PbwMonomial>,
    /// Canonical kernel basis (quotient representatives in the Kac model).
    pub nullspace: Vec<Vec<Rat>>,
    /// `r` with `formula = r * normalized oracle generator`, when the closed
    /// formula applies and the oracle generator is unique.
    pub formula_match: Option<Rat>,
    pub unique: bool,
    pub quotient: bool,
}

impl SingularVectorReport {
    pub fn nullspace_dim(&self) -> usize {
        self.nullspace.len()
    }

    /// Rebuilds the i-th kernel vector as a Verma vector.
    pub fn kernel_vector(&self, i: usize) -> VermaVector {
        let mut e = Element::zero();
        for (m, c) in self.basis.iter().zip(&self.nullspace[i]) {
            e.add_term(m.clone(), c.clone());
        }
        VermaVector::from_expansion(self.lam.clone(), e)
    }
}

/// Finds all weight-mu singular vectors of M(lambda) by exact null-space
/// computation; with a `KacContext`, works in the quotient model
/// K(lambda) = M(lambda)/I_lambda instead (annihilation modulo the
/// components of I_lambda, vectors modulo its mu-component).
pub fn find_singular(
    alg: &SuperAlgebra,
    lam: &Weight,
    mu: &Weight,
    quotient: Option<&KacContext>,
) -> Result<SingularVectorReport> {
    if let Some(ctx) = quotient {
        if ctx.lam != *lam {
            return Err(Error::InvalidConstruction(
                "Kac context weight does not match lambda".into(),
            ));
        }
    }
    let basis = weight_monomials(alg, &mu.sub(lam));
    let index = basis_index(&basis);
    let raisings = &alg.simple_positive_gens;

    // Row-reduced I_lambda components at mu and at each raising target.
    let i_mu = match quotient {
        Some(ctx) => Some(span_echelon(alg, ctx, mu, &index)?),
        None => None,
    };

    let columns: Vec<VermaVector> = basis
        .iter()
        .map(|m| {
            VermaVector::from_expansion(
                lam.clone(),
                Element::from_monomial(m.clone(), Rat::one()),
            )
        })
        .collect();

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for &g in raisings {
        let alpha = alg.gen_weight(g);
        let target_mu = mu.add(&alpha);
        let target = weight_monomials(alg, &target_mu.sub(lam));
        let target_index = basis_index(&target);
        let i_target = match quotient {
            Some(ctx) => Some(span_echelon(alg, ctx, &target_mu, &target_index)?),
            None => None,
        };
        let mut block: Vec<Vec<Rat>> = vec![vec![Rat::zero(); basis.len()]; target.len()];
        for (j, v) in columns.iter().enumerate() {
            let image = act_gen(alg, g, v);
            let mut coords = coords_in_basis(&image.expansion, &target_index)?;
            if let Some(ech) = &i_target {
                coords = ech.reduce(&coords);
            }
            for (r, c) in coords.into_iter().enumerate() {
                block[r][j] = c;
            }
        }
        rows.extend(block);
    }
    let matrix = if rows.is_empty() {
        QMatrix::zeros(0, basis.len())
    } else {
        QMatrix::from_rows(rows)
    };
    let mut kernel = nullspace(&matrix);

    if let Some(ech) = &i_mu {
        // Vectors of I_lambda are themselves singular in the quotient; they
        // must lie in the kernel of the reduced system.
        let mut kernel_ech = Echelon::new(basis.len());
        for v in &kernel {
            kernel_ech.insert(v);
        }
        for row in ech_rows(ech) {
            if !kernel_ech.contains(&row) {
                return Err(Error::InternalConsistency(
                    "I_lambda component escapes the quotient kernel".into(),
                ));
            }
        }
        // Quotient representatives: reduce kernel vectors modulo I_lambda,
        // then re-echelonize for a canonical basis.
        let mut reps = Echelon::new(basis.len());
        for v in &kernel {
            let red = ech.reduce(v);
            reps.insert(&red);
        }
        kernel = ech_rows(&reps);
    }

    // Closed-formula comparison when mu = lambda - beta for an odd positive
    // root beta with an available chain formula.
    let beta = alg
        .root_of_weight(&lam.sub(mu))
        .filter(|r| r.positive && r.parity.is_odd());
    let mut formula_match = None;
    if let Some(beta_root) = &beta {
        if kernel.len() == 1 {
            if let Ok(formula) = glmn::singular_vector_formula(alg, lam, beta_root) {
                let (s, t) = glmn::beta_st(alg, beta_root)?;
                let formula_coords = match &i_mu {
                    Some(ech) => ech.reduce(&coords_in_basis(&formula.expansion, &index)?),
                    None => coords_in_basis(&formula.expansion, &index)?,
                };
                let lead = glmn::leading_chain_monomial(alg, s, t);
                let lead_idx = index.get(&lead).copied();
                let generator = normalize_kernel_vector(&kernel[0], lead_idx);
                formula_match = vector_ratio(&formula_coords, &generator);
            }
        }
    }

    Ok(SingularVectorReport {
        algebra: alg.name.clone(),
        lam: lam.clone(),
        mu: mu.clone(),
        beta,
        basis,
        nullspace: kernel,
        formula_match,
        unique: false,
        quotient: quotient.is_some(),
    }
    .finalize())
}

impl SingularVectorReport {
    fn finalize(mut self) -> Self {
        self.unique = self.nullspace.len() == 1;
        self
    }
}

fn ech_rows(ech: &Echelon) -> Vec<Vec<Rat>> {
    // Reconstructs the reduced rows by reducing nothing: Echelon stores RREF
    // rows already; reduce the unit rows of its own span.
    ech.rows_cloned()
}

/// Scales a kernel vector so the leading chain monomial (when present with
/// nonzero coordinate) carries coefficient 1; otherwise first pivot = 1.
fn normalize_kernel_vector(v: &[Rat], lead_idx: Option<usize>) -> Vec<Rat> {
    let pivot = lead_idx
        .filter(|&i| !v[i].is_zero())
        .or_else(|| v.iter().position(|c| !c.is_zero()));
    match pivot {
        Some(i) => {
            let p = v[i].clone();
            v.iter().map(|c| c / &p).collect()
        }
        None => v.to_vec(),
    }
}

/// Some(r) with `x = r * y` for exact scalar multiples.
fn vector_ratio(x: &[Rat], y: &[Rat]) -> Option<Rat> {
    debug_assert_eq!(x.len(), y.len());
    let Some(i) = y.iter().position(|c| !c.is_zero()) else {
        return if x.iter().all(Rat::is_zero) {
            Some(Rat::one())
        } else {
            None
        };
    };
    let r = x[i].checked_div(&y[i]).expect("nonzero pivot");
    for (a, b) in x.iter().zip(y) {
        if *a != b * &r {
            return None;
        }
    }
    Some(r)
}

/// Row-reduced mu-component of I_lambda in the given basis coordinates.
fn span_echelon(
    alg: &SuperAlgebra,
    ctx: &KacContext,
    mu: &Weight,
    index: &BTreeMap<PbwMonomial, usize>,
) -> Result<Echelon> {
    let mut ech = Echelon::new(index.len());
    for v in i_lambda_weight_span(alg, ctx, mu)? {
        let coords = coords_in_basis(&v.expansion, index)?;
        ech.insert(&coords);
    }
    Ok(ech)
}
