//! Flag-value parsers: ranks, roots, and exact or symbolic weight entries.

use oddsing_core::coeff::{CartanPoly, Rat};
use oddsing_core::glmn::{delta_symbol, eps_symbol};
use oddsing_core::weight::{Root, Weight};
use oddsing_core::SuperAlgebra;

use crate::CliError;

pub fn parse_ranks(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected two comma-separated ranks, e.g. 2,1".into());
    }
    let m = parts[0].trim().parse::<usize>().map_err(|e| e.to_string())?;
    let n = parts[1].trim().parse::<usize>().map_err(|e| e.to_string())?;
    if m == 0 || n == 0 {
        return Err("ranks must be positive".into());
    }
    Ok((m, n))
}

/// Root syntax: `d<s>-e<t>` or `d<s>+e<t>`, e.g. `d2-e1`.
pub struct BetaSpec {
    pub s: usize,
    pub t: usize,
    pub plus: bool,
}

pub fn parse_beta(s: &str) -> Result<BetaSpec, CliError> {
    let usage = || {
        CliError::Usage(format!(
            "cannot parse root `{s}`: expected d<s>-e<t> or d<s>+e<t>"
        ))
    };
    let body = s.trim();
    let (plus, parts) = if let Some((a, b)) = body.split_once('+') {
        (true, (a, b))
    } else if let Some((a, b)) = body.split_once('-') {
        (false, (a, b))
    } else {
        return Err(usage());
    };
    let (d, e) = parts;
    let s_idx = d
        .trim()
        .strip_prefix('d')
        .and_then(|x| x.parse::<usize>().ok())
        .ok_or_else(usage)?;
    let t_idx = e
        .trim()
        .strip_prefix('e')
        .and_then(|x| x.parse::<usize>().ok())
        .ok_or_else(usage)?;
    if s_idx == 0 || t_idx == 0 {
        return Err(usage());
    }
    Ok(BetaSpec {
        s: s_idx,
        t: t_idx,
        plus,
    })
}

pub fn beta_root(alg: &SuperAlgebra, spec: &BetaSpec) -> Result<Root, CliError> {
    let d = Weight::delta_unit(alg.delta_rank, alg.eps_rank, spec.s);
    let e = Weight::eps_unit(alg.delta_rank, alg.eps_rank, spec.t);
    let w = if spec.plus { d.add(&e) } else { d.sub(&e) };
    alg.root_of_weight(&w)
        .filter(|r| r.positive && r.parity.is_odd())
        .ok_or_else(|| {
            CliError::Math(oddsing_core::Error::NotOddPositiveRoot(
                format!("{w}"),
                alg.name.clone(),
            ))
        })
}

/// A weight whose entries are either all exact rationals or symbolic
/// Cartan-polynomial expressions in a's and b's (display order:
/// `a_m,...,a_1,b_1,...,b_n`).
pub enum LambdaSpec {
    Numeric(Weight),
    Symbolic {
        delta: Vec<CartanPoly>,
        eps: Vec<CartanPoly>,
    },
}

pub fn parse_lambda(alg: &SuperAlgebra, s: &str) -> Result<LambdaSpec, CliError> {
    let entries: Vec<&str> = s.split(',').map(str::trim).collect();
    let expected = alg.delta_rank + alg.eps_rank;
    if entries.len() != expected {
        return Err(CliError::Usage(format!(
            "lambda needs {expected} entries for {}, got {}",
            alg.name,
            entries.len()
        )));
    }
    if entries.iter().all(|e| Rat::parse(e).is_ok()) {
        let vals: Vec<Rat> = entries.iter().map(|e| Rat::parse(e).unwrap()).collect();
        let (a, b) = vals.split_at(alg.delta_rank);
        return Ok(LambdaSpec::Numeric(Weight::from_display(a, b)));
    }
    let polys: Vec<CartanPoly> = entries
        .iter()
        .map(|e| parse_symbolic_entry(alg, e))
        .collect::<Result<_, _>>()?;
    let (a_desc, b) = polys.split_at(alg.delta_rank);
    let delta: Vec<CartanPoly> = a_desc.iter().rev().cloned().collect();
    Ok(LambdaSpec::Symbolic {
        delta,
        eps: b.to_vec(),
    })
}

/// Linear expressions over the symbols `a<i>`, `b<j>` and exact rational
/// constants, e.g. `-a2-1` or `b1+3/2`.
fn parse_symbolic_entry(alg: &SuperAlgebra, entry: &str) -> Result<CartanPoly, CliError> {
    let bad = |detail: &str| {
        CliError::Usage(format!("cannot parse lambda entry `{entry}`: {detail}"))
    };
    let mut acc = CartanPoly::zero();
    let mut term = String::new();
    let mut sign = Rat::one();
    let flush = |term: &mut String, sign: &Rat, acc: &mut CartanPoly| -> Result<(), CliError> {
        if term.is_empty() {
            return Ok(());
        }
        let atom = term.trim().to_string();
        term.clear();
        let poly = if let Some(rest) = atom.strip_prefix('a') {
            let i: usize = rest
                .parse()
                .map_err(|_| bad("bad a-symbol subscript"))?;
            if i == 0 || i > alg.delta_rank {
                return Err(bad("a-symbol subscript out of range"));
            }
            CartanPoly::var(delta_symbol(alg, i))
        } else if let Some(rest) = atom.strip_prefix('b') {
            let j: usize = rest
                .parse()
                .map_err(|_| bad("bad b-symbol subscript"))?;
            if j == 0 || j > alg.eps_rank {
                return Err(bad("b-symbol subscript out of range"));
            }
            CartanPoly::var(eps_symbol(alg, j))
        } else {
            CartanPoly::constant(
                Rat::parse(&atom).map_err(|_| bad("expected a rational or a/b symbol"))?,
            )
        };
        *acc = acc.add(&poly.scale(sign));
        Ok(())
    };
    for ch in entry.chars() {
        match ch {
            '+' => {
                flush(&mut term, &sign, &mut acc)?;
                sign = Rat::one();
            }
            '-' => {
                flush(&mut term, &sign, &mut acc)?;
                sign = -Rat::one();
            }
            c if c.is_whitespace() => {}
            c => term.push(c),
        }
    }
    flush(&mut term, &sign, &mut acc)?;
    Ok(acc)
}
