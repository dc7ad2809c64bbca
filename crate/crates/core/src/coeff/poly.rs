use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::rat::Rat;

/// Monomial key: sorted `(variable, exponent)` pairs with positive exponents.
type VarPows = Vec<(u32, u32)>;

/// Sparse multivariate polynomial in Cartan coordinate symbols with exact
/// rational coefficients.
///
/// Symbols are indexed by the ambient algebra's Cartan basis order, so the
/// same polynomial type serves both the Shapovalov `C_k` elements (symbols
/// `H_i`) and symbolic highest weights (symbols `a_i`, `b_j`). Terms are kept
/// in a canonical sorted form, so equality is structural and the zero
/// polynomial is the empty term map.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CartanPoly {
    terms: BTreeMap<VarPows, Rat>,
}

impl CartanPoly {
    pub fn zero() -> Self {
        CartanPoly::default()
    }

    pub fn one() -> Self {
        CartanPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = CartanPoly::default();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The monomial `H_var`.
    pub fn var(var: u32) -> Self {
        let mut p = CartanPoly::default();
        p.terms.insert(vec![(var, 1)], Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the value of a constant polynomial, if it is one.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Vec::new()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[(u32, u32)], &Rat)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn insert_term(&mut self, key: VarPows, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert_term(k.clone(), v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        CartanPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return CartanPoly::zero();
        }
        CartanPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = CartanPoly::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.insert_term(merge_pows(ka, kb), va * vb);
            }
        }
        out
    }

    /// Substitutes `values[i]` for symbol `i`, evaluated exactly.
    pub fn eval(&self, values: &[Rat]) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (key, coeff) in &self.terms {
            let mut term = coeff.clone();
            for &(var, exp) in key {
                let v = values
                    .get(var as usize)
                    .ok_or(Error::MissingCoordinate(var as usize))?;
                term *= &v.pow(exp);
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Substitutes `H_i -> H_i + shifts[i]`; symbols beyond `shifts` are left
    /// untouched. Used when a Cartan coefficient commutes across a monomial
    /// of known weight.
    pub fn shift(&self, shifts: &[Rat]) -> Self {
        if shifts.iter().all(Rat::is_zero) {
            return self.clone();
        }
        let mut out = CartanPoly::zero();
        for (key, coeff) in &self.terms {
            // Expand prod_i (H_i + c_i)^{e_i} by repeated multiplication;
            // degrees are tiny throughout the engine.
            let mut expanded = CartanPoly::constant(coeff.clone());
            for &(var, exp) in key {
                let shift = shifts.get(var as usize).cloned().unwrap_or_else(Rat::zero);
                let base = CartanPoly::var(var).add(&CartanPoly::constant(shift));
                for _ in 0..exp {
                    expanded = expanded.mul(&base);
                }
            }
            out = out.add(&expanded);
        }
        out
    }

    /// Renders the polynomial with a caller-supplied symbol namer. Constant
    /// terms print last, matching the usual `a_2 - a_1 + 1` layout.
    pub fn format(&self, namer: &dyn Fn(u32) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        // Constants last, positive terms before negative ones within the
        // variable part; this reads like the usual `H_t - H_{t-1} - 1`.
        let mut keys: Vec<&VarPows> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k.is_empty(), self.terms[*k].is_negative(), (*k).clone()));
        let mut out = String::new();
        for (i, key) in keys.iter().enumerate() {
            let coeff = &self.terms[*key];
            let mag = if coeff.is_negative() { -coeff } else { coeff.clone() };
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let vars: String = key
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        namer(v)
                    } else {
                        format!("{}^{}", namer(v), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            if key.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&vars);
            } else {
                out.push_str(&format!("{mag}*{vars}"));
            }
        }
        out
    }
}

fn merge_pows(a: &[(u32, u32)], b: &[(u32, u32)]) -> VarPows {
    let mut out: VarPows = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl fmt::Debug for CartanPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(&|v| format!("H{v}")))
    }
}
