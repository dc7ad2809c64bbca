//! Output documents: plain text, LaTeX, and the versioned JSON schema.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use oddsing_core::coeff::{CartanPoly, Rat};
use oddsing_core::SuperAlgebra;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Document {
    pub schema_version: u32,
    pub instance: Instance,
    pub result: DocResult,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Instance {
    pub algebra: String,
    pub ranks: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub lambda: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Default)]
pub struct DocResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nullspace_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub match_scalar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Term {
    pub monomial: Vec<String>,
    pub coefficient: Coefficient,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
#[serde(untagged)]
pub enum Coefficient {
    Scalar(String),
    Poly(Vec<PolyTerm>),
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PolyTerm {
    pub coeff: String,
    pub vars: Vec<(String, u32)>,
}

/// One symbolic or numeric formula term: factor labels plus a coefficient.
/// Symbolic coefficients stay factored (the product of c-values outside J),
/// matching the worked layout; the expanded polynomial feeds the JSON form.
pub enum ChainCoeff {
    Num(Rat),
    Poly(Vec<CartanPoly>),
}

impl ChainCoeff {
    pub fn expanded(&self) -> Option<CartanPoly> {
        match self {
            ChainCoeff::Num(_) => None,
            ChainCoeff::Poly(fs) => {
                Some(fs.iter().fold(CartanPoly::one(), |acc, f| acc.mul(f)))
            }
        }
    }
}

fn render_factors(
    factors: &[CartanPoly],
    namer: &dyn Fn(u32) -> String,
    latex: bool,
) -> String {
    let mut out = String::new();
    for f in factors {
        if let Some(c) = f.as_constant() {
            out.push_str(&format!("{c}"));
            if !latex {
                out.push(' ');
            }
        } else if latex {
            out.push_str(&format!("({})", latex_poly(f, namer)));
        } else {
            out.push_str(&format!("({})", f.format(namer)));
        }
    }
    out
}

pub struct ChainTerm {
    pub factors: Vec<String>,
    pub coeff: ChainCoeff,
}

pub fn poly_to_json(p: &CartanPoly, namer: &dyn Fn(u32) -> String) -> Vec<PolyTerm> {
    p.terms()
        .map(|(vars, coeff)| PolyTerm {
            coeff: coeff.to_string(),
            vars: vars.iter().map(|&(v, e)| (namer(v), e)).collect(),
        })
        .collect()
}

pub fn terms_to_json(terms: &[ChainTerm], namer: &dyn Fn(u32) -> String) -> Vec<Term> {
    terms
        .iter()
        .map(|t| Term {
            monomial: t.factors.clone(),
            coefficient: match &t.coeff {
                ChainCoeff::Num(r) => Coefficient::Scalar(r.to_string()),
                ChainCoeff::Poly(_) => Coefficient::Poly(poly_to_json(
                    &t.coeff.expanded().expect("polynomial coefficient"),
                    namer,
                )),
            },
        })
        .collect()
}

/// Plain rendering of a chain expression applied to the highest weight
/// vector, e.g. `E(1,1bar)E(1bar,2bar) v+ + (a2 - a1) E(1,2bar) v+`.
pub fn render_plain(terms: &[ChainTerm], namer: &dyn Fn(u32) -> String) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let product = t.factors.join("");
        match &t.coeff {
            ChainCoeff::Num(r) => {
                let mag = if r.is_negative() { -r } else { r.clone() };
                if i == 0 {
                    if r.is_negative() {
                        out.push_str("- ");
                    }
                } else if r.is_negative() {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                if !mag.is_one() {
                    out.push_str(&format!("{mag} "));
                }
            }
            ChainCoeff::Poly(fs) => {
                if i > 0 {
                    out.push_str(" + ");
                }
                let nontrivial: Vec<CartanPoly> = fs
                    .iter()
                    .filter(|f| f.as_constant() != Some(Rat::one()))
                    .cloned()
                    .collect();
                if !nontrivial.is_empty() {
                    out.push_str(&render_factors(&nontrivial, namer, false));
                    if !out.ends_with(' ') {
                        out.push(' ');
                    }
                }
            }
        }
        out.push_str(&product);
        out.push_str(" v+");
    }
    out
}

/// LaTeX rendering of generator labels: `E(1,1bar)` -> `E_{1,\overline{1}}`,
/// `e(d1-e1)` -> `e_{\delta_{1}-\epsilon_{1}}`, `H(d1)` -> `H_{\delta_{1}}`.
pub fn label_to_latex(label: &str) -> String {
    let Some(open) = label.find('(') else {
        return label.to_string();
    };
    let head = &label[..open];
    let body = &label[open + 1..label.len() - 1];
    let indices: String = body
        .split(',')
        .map(index_to_latex)
        .collect::<Vec<_>>()
        .join(",");
    format!("{head}_{{{indices}}}")
}

fn index_to_latex(tok: &str) -> String {
    // gl index: `3` or `3bar`; osp root body: signed d/e atoms like `d1-e1`.
    if let Some(k) = tok.strip_suffix("bar") {
        return format!("\\overline{{{k}}}");
    }
    if tok.chars().all(|c| c.is_ascii_digit()) {
        return tok.to_string();
    }
    let mut out = String::new();
    let mut atom = String::new();
    let flush = |atom: &mut String, out: &mut String| {
        if atom.is_empty() {
            return;
        }
        let body = atom.clone();
        atom.clear();
        if let Some(k) = body.strip_prefix('d') {
            out.push_str(&format!("\\delta_{{{k}}}"));
        } else if let Some(k) = body.strip_prefix('e') {
            out.push_str(&format!("\\epsilon_{{{k}}}"));
        } else {
            out.push_str(&body);
        }
    };
    for ch in tok.chars() {
        match ch {
            '+' | '-' => {
                flush(&mut atom, &mut out);
                out.push(ch);
            }
            c => atom.push(c),
        }
    }
    flush(&mut atom, &mut out);
    out
}

/// LaTeX rendering of a chain expression (no `v+` marker; the golden files
/// pin the bare expressions).
pub fn render_latex(terms: &[ChainTerm], namer: &dyn Fn(u32) -> String) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let product: String = t.factors.iter().map(|f| label_to_latex(f)).collect();
        match &t.coeff {
            ChainCoeff::Num(r) => {
                let mag = if r.is_negative() { -r } else { r.clone() };
                if i == 0 {
                    if r.is_negative() {
                        out.push('-');
                    }
                } else if r.is_negative() {
                    out.push('-');
                } else {
                    out.push('+');
                }
                if !mag.is_one() {
                    out.push_str(&format!("{mag}"));
                }
            }
            ChainCoeff::Poly(fs) => {
                if i > 0 {
                    out.push('+');
                }
                let nontrivial: Vec<CartanPoly> = fs
                    .iter()
                    .filter(|f| f.as_constant() != Some(Rat::one()))
                    .cloned()
                    .collect();
                out.push_str(&render_factors(&nontrivial, namer, true));
            }
        }
        out.push_str(&product);
    }
    out
}

/// Polynomial in LaTeX: reuse the canonical textual layout with latex
/// symbol names, drop explicit `*` and spaces.
pub fn latex_poly(p: &CartanPoly, namer: &dyn Fn(u32) -> String) -> String {
    p.format(namer).replace("*", "").replace(' ', "")
}

/// Symbol namers for the two display contexts.
pub fn ab_namer(alg: &SuperAlgebra, latex: bool) -> impl Fn(u32) -> String + '_ {
    move |var: u32| {
        for i in 1..=alg.delta_rank {
            if oddsing_core::glmn::delta_symbol(alg, i) == var {
                return if latex {
                    format!("a_{{{i}}}")
                } else {
                    format!("a{i}")
                };
            }
        }
        for j in 1..=alg.eps_rank {
            if oddsing_core::glmn::eps_symbol(alg, j) == var {
                return if latex {
                    format!("b_{{{j}}}")
                } else {
                    format!("b{j}")
                };
            }
        }
        format!("x{var}")
    }
}

/// Namer rendering Cartan symbols in H-notation, e.g. `H(2bar)` (plain) or
/// `H_{\overline{2}}` (latex); gl diagonal labels `E(k,k)` become `H(k)`.
pub fn h_namer(alg: &SuperAlgebra, latex: bool) -> impl Fn(u32) -> String + '_ {
    move |var: u32| {
        let gen = alg.cartan_gens[var as usize];
        let label = &alg.gen(gen).label;
        let h_label = match label.strip_prefix("E(") {
            Some(rest) => {
                let first = rest
                    .trim_end_matches(')')
                    .split(',')
                    .next()
                    .expect("diagonal label");
                format!("H({first})")
            }
            None => label.clone(),
        };
        if latex {
            label_to_latex(&h_label)
        } else {
            h_label
        }
    }
}
