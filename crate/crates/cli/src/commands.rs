//! The five subcommands: singular, shapovalov, verify, kac-check, sweep.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use oddsing_core::algebra::gl_cached;
use oddsing_core::coeff::{CartanPoly, Rat};
use oddsing_core::glmn::{
    self, atypicality_relation, c_values_generic, chain_formula, odd_root,
};
use oddsing_core::kac::{self, kac_context};
use oddsing_core::osp::{osp_cached, OspFamily, OspRealization};
use oddsing_core::sampling;
use oddsing_core::solver::find_singular;
use oddsing_core::weight::{Root, Weight};
use oddsing_core::{SuperAlgebra};

use crate::parse::{beta_root, parse_beta, parse_lambda, LambdaSpec};
use crate::render::{
    ab_namer, h_namer, render_latex, render_plain, terms_to_json, ChainCoeff, ChainTerm,
    DocResult, Document, Format, Instance, SCHEMA_VERSION,
};
use crate::{AlgebraFlags, CliError, OutputFlags};

pub enum AlgebraHandle {
    Gl(Arc<SuperAlgebra>),
    Osp(Arc<OspRealization>),
}

impl AlgebraHandle {
    pub fn algebra(&self) -> &SuperAlgebra {
        match self {
            AlgebraHandle::Gl(a) => a,
            AlgebraHandle::Osp(r) => &r.algebra,
        }
    }
}

pub fn build_algebra(flags: &AlgebraFlags) -> Result<AlgebraHandle, CliError> {
    let (m, n) = flags.ranks;
    match flags.alg {
        crate::AlgKind::Gl => {
            if flags.family.is_some() {
                return Err(CliError::Usage(
                    "--family only applies to --alg osp".into(),
                ));
            }
            Ok(AlgebraHandle::Gl(gl_cached(m, n)))
        }
        crate::AlgKind::Osp => {
            let family = match flags.family.unwrap_or(crate::FamilyArg::Even) {
                crate::FamilyArg::Even => OspFamily::Even,
                crate::FamilyArg::Odd => OspFamily::Odd,
            };
            Ok(AlgebraHandle::Osp(osp_cached(family, m, n)))
        }
    }
}

fn instance_block(
    flags: &AlgebraFlags,
    handle: &AlgebraHandle,
    lambda: Vec<String>,
    beta: Option<String>,
) -> Instance {
    Instance {
        algebra: handle.algebra().name.clone(),
        ranks: [flags.ranks.0, flags.ranks.1],
        family: match handle {
            AlgebraHandle::Gl(_) => None,
            AlgebraHandle::Osp(r) => Some(
                match r.family {
                    OspFamily::Even => "even",
                    OspFamily::Odd => "odd",
                }
                .to_string(),
            ),
        },
        lambda,
        beta,
    }
}

fn emit(doc_text: String, out: &OutputFlags) -> Result<(), CliError> {
    match &out.out {
        None => {
            println!("{doc_text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, doc_text + "\n")
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display()))),
    }
}

fn emit_json(doc: &impl Serialize, out: &OutputFlags) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(doc)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    emit(text, out)
}

/// `singular`: the closed-formula vector in chain form, with symbolic
/// lambda entries allowed for gl (the Shapovalov specialization pattern).
pub fn cmd_singular(
    flags: &AlgebraFlags,
    beta_str: &str,
    lambda_str: &str,
    out: &OutputFlags,
) -> Result<(), CliError> {
    let handle = build_algebra(flags)?;
    let alg = handle.algebra();
    let spec = parse_beta(beta_str)?;
    let beta = beta_root(alg, &spec)?;
    let lambda = parse_lambda(alg, lambda_str)?;

    // The shipped osp(6|2) plus-case instance prints its 15-term expression
    // for numeric atypical weights; every other plus-case root is an open
    // problem and errors below via beta_st.
    if let (AlgebraHandle::Osp(real), LambdaSpec::Numeric(lam), true) =
        (&handle, &lambda, spec.plus)
    {
        if real.family == OspFamily::Even && real.m == 3 && real.n == 1 && spec.s == 1 && spec.t == 1
        {
            let terms: Vec<ChainTerm> = oddsing_core::osp::osp62_example_terms(real, lam)
                .map_err(CliError::Math)?
                .into_iter()
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, word)| ChainTerm {
                    factors: word.iter().map(|&g| alg.gen(g).label.clone()).collect(),
                    coeff: ChainCoeff::Num(c),
                })
                .collect();
            let namer = ab_namer(alg, false);
            return match out.format {
                Format::Plain => emit(render_plain(&terms, &namer), out),
                Format::Latex => {
                    let namer_latex = ab_namer(alg, true);
                    emit(render_latex(&terms, &namer_latex), out)
                }
                Format::Json => {
                    let doc = Document {
                        schema_version: SCHEMA_VERSION,
                        instance: instance_block(
                            flags,
                            &handle,
                            lambda_entries(lam),
                            Some(beta_str.into()),
                        ),
                        result: DocResult {
                            terms: Some(terms_to_json(&terms, &namer)),
                            ..DocResult::default()
                        },
                    };
                    emit_json(&doc, out)
                }
            };
        }
    }

    let (s, t) = glmn::beta_st(alg, &beta).map_err(CliError::Math)?;
    let (terms, lambda_display): (Vec<ChainTerm>, Vec<String>) = match &lambda {
        LambdaSpec::Numeric(lam) => {
            if !alg.is_atypical(lam, &beta).map_err(CliError::Math)? {
                let value = atypicality_relation(s, t, &lam.delta, &lam.eps);
                return Err(CliError::Math(oddsing_core::Error::NotAtypical {
                    relation: format!("a_{s} + b_{t} + {s} - {t} = {value} != 0"),
                }));
            }
            let datum = c_values_generic(s, t, &lam.delta, &lam.eps);
            let terms = chain_formula(alg, &datum)
                .into_iter()
                .filter(|(_, d, _)| !d.is_zero())
                .map(|(_, d, word)| ChainTerm {
                    factors: word.iter().map(|&g| alg.gen(g).label.clone()).collect(),
                    coeff: ChainCoeff::Num(d),
                })
                .collect();
            (terms, lambda_entries(lam))
        }
        LambdaSpec::Symbolic { delta, eps } => {
            if matches!(handle, AlgebraHandle::Osp(_)) {
                return Err(CliError::Usage(
                    "symbolic lambda entries are supported for gl only; pass exact rationals"
                        .into(),
                ));
            }
            let relation = atypicality_relation(s, t, delta, eps);
            if !relation.is_zero() {
                let namer = ab_namer(alg, false);
                return Err(CliError::Math(oddsing_core::Error::NotAtypical {
                    relation: format!(
                        "a_{s} + b_{t} + {s} - {t} = {} != 0",
                        relation.format(&namer)
                    ),
                }));
            }
            let datum = c_values_generic(s, t, delta, eps);
            let terms = chain_formula(alg, &datum)
                .into_iter()
                .filter(|(_, d, _)| !d.is_zero())
                .map(|(j, _, word)| ChainTerm {
                    factors: word.iter().map(|&g| alg.gen(g).label.clone()).collect(),
                    coeff: ChainCoeff::Poly(
                        datum
                            .c
                            .iter()
                            .enumerate()
                            .filter(|(pos, _)| !j.contains(*pos))
                            .map(|(_, c)| c.clone())
                            .collect(),
                    ),
                })
                .collect();
            let namer = ab_namer(alg, false);
            let display = delta
                .iter()
                .rev()
                .chain(eps.iter())
                .map(|p| p.format(&namer))
                .collect();
            (terms, display)
        }
    };

    let namer_plain = ab_namer(alg, false);
    let namer_latex = ab_namer(alg, true);
    match out.format {
        Format::Plain => emit(render_plain(&terms, &namer_plain), out),
        Format::Latex => emit(render_latex(&terms, &namer_latex), out),
        Format::Json => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                instance: instance_block(flags, &handle, lambda_display, Some(beta_str.into())),
                result: DocResult {
                    terms: Some(terms_to_json(&terms, &namer_plain)),
                    ..DocResult::default()
                },
            };
            emit_json(&doc, out)
        }
    }
}

fn lambda_entries(lam: &Weight) -> Vec<String> {
    lam.delta
        .iter()
        .rev()
        .chain(lam.eps.iter())
        .map(Rat::to_string)
        .collect()
}

/// `shapovalov`: theta_beta in U(b^-) with Cartan polynomials kept to the
/// right of their chain monomials.
pub fn cmd_shapovalov(
    flags: &AlgebraFlags,
    beta_str: &str,
    out: &OutputFlags,
) -> Result<(), CliError> {
    let handle = build_algebra(flags)?;
    let alg = handle.algebra();
    let spec = parse_beta(beta_str)?;
    let beta = beta_root(alg, &spec)?;
    let (s, t) = glmn::beta_st(alg, &beta).map_err(CliError::Math)?;

    // Chain form with C-polynomial coefficients (paper normal form
    // E_J * prod C_k), which specializes coefficient-wise.
    let delta_polys: Vec<CartanPoly> = (1..=alg.delta_rank)
        .map(|i| CartanPoly::var(glmn::delta_symbol(alg, i)))
        .collect();
    let eps_polys: Vec<CartanPoly> = (1..=alg.eps_rank)
        .map(|j| CartanPoly::var(glmn::eps_symbol(alg, j)))
        .collect();
    let datum = c_values_generic(s, t, &delta_polys, &eps_polys);
    let terms: Vec<ChainTerm> = chain_formula(alg, &datum)
        .into_iter()
        .map(|(j, _, word)| ChainTerm {
            factors: word.iter().map(|&g| alg.gen(g).label.clone()).collect(),
            coeff: ChainCoeff::Poly(
                datum
                    .c
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| !j.contains(*pos))
                    .map(|(_, c)| c.clone())
                    .collect(),
            ),
        })
        .collect();

    let namer_plain = h_namer(alg, false);
    let namer_latex = h_namer(alg, true);
    match out.format {
        Format::Plain => {
            // Cartan factors act on v+ first, so they read to the right.
            let mut s_out = String::new();
            for (i, tm) in terms.iter().enumerate() {
                if i > 0 {
                    s_out.push_str(" + ");
                }
                s_out.push_str(&tm.factors.join(""));
                if let ChainCoeff::Poly(fs) = &tm.coeff {
                    if !fs.is_empty() {
                        let rendered: Vec<String> = fs
                            .iter()
                            .map(|p| format!("({})", p.format(&namer_plain)))
                            .collect();
                        s_out.push_str(&format!(" * {}", rendered.join("")));
                    }
                }
            }
            emit(s_out, out)
        }
        Format::Latex => {
            let mut s_out = String::new();
            for (i, tm) in terms.iter().enumerate() {
                if i > 0 {
                    s_out.push('+');
                }
                let product: String = tm
                    .factors
                    .iter()
                    .map(|f| crate::render::label_to_latex(f))
                    .collect();
                s_out.push_str(&product);
                if let ChainCoeff::Poly(fs) = &tm.coeff {
                    let rendered: Vec<String> = fs
                        .iter()
                        .map(|p| format!("({})", crate::render::latex_poly(p, &namer_latex)))
                        .collect();
                    s_out.push_str(&rendered.join(""));
                }
            }
            emit(s_out, out)
        }
        Format::Json => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                instance: instance_block(flags, &handle, Vec::new(), Some(beta_str.into())),
                result: DocResult {
                    terms: Some(terms_to_json(&terms, &namer_plain)),
                    ..DocResult::default()
                },
            };
            emit_json(&doc, out)
        }
    }
}

fn numeric_lambda(alg: &SuperAlgebra, lambda_str: &str) -> Result<Weight, CliError> {
    match parse_lambda(alg, lambda_str)? {
        LambdaSpec::Numeric(w) => Ok(w),
        LambdaSpec::Symbolic { .. } => Err(CliError::Usage(
            "this command needs a numeric lambda (exact rationals)".into(),
        )),
    }
}

/// `verify`: run the exact oracle at weight lambda - beta, report the
/// null-space dimension and the formula match scalar. Timing goes to
/// stderr so output documents stay byte-identical across runs.
pub fn cmd_verify(
    flags: &AlgebraFlags,
    beta_str: &str,
    lambda_str: &str,
    with_kac: bool,
    out: &OutputFlags,
) -> Result<(), CliError> {
    let handle = build_algebra(flags)?;
    let alg = handle.algebra();
    let spec = parse_beta(beta_str)?;
    let beta = beta_root(alg, &spec)?;
    let lam = numeric_lambda(alg, lambda_str)?;
    let mu = lam.sub(&beta.weight);

    let started = Instant::now();
    let report = find_singular(alg, &lam, &mu, None).map_err(CliError::Math)?;

    // The shipped osp(6|2) plus-case instance gets its own formula match.
    let match_scalar = match (&report.formula_match, &handle) {
        (Some(r), _) => Some(r.clone()),
        (None, AlgebraHandle::Osp(real))
            if real.family == OspFamily::Even
                && real.m == 3
                && real.n == 1
                && spec.plus
                && spec.s == 1
                && spec.t == 1
                && report.unique =>
        {
            oddsing_core::osp::osp62_example_vector(real, &lam)
                .ok()
                .and_then(|v| v.scalar_ratio(&report.kernel_vector(0)))
        }
        _ => None,
    };

    let mut verdicts: BTreeMap<String, String> = BTreeMap::new();
    if with_kac {
        match handle {
            AlgebraHandle::Gl(_) => {
                let ctx = kac_context(alg, &lam).map_err(CliError::Math)?;
                kac_verdicts(alg, &ctx, &beta, &mut verdicts)?;
            }
            AlgebraHandle::Osp(_) => {
                return Err(CliError::Usage(
                    "--kac applies to gl(m|n) only".into(),
                ));
            }
        }
    }
    let elapsed = started.elapsed();
    eprintln!("verify: {elapsed:.2?}");

    match out.format {
        Format::Plain | Format::Latex => {
            let mut line = format!(
                "dim={}, match={}",
                report.nullspace_dim(),
                match_scalar
                    .as_ref()
                    .map(Rat::to_string)
                    .unwrap_or_else(|| "none".into())
            );
            for (k, v) in &verdicts {
                line.push_str(&format!("\n{k}: {v}"));
            }
            emit(line, out)
        }
        Format::Json => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                instance: instance_block(
                    flags,
                    &handle,
                    lambda_entries(&lam),
                    Some(beta_str.into()),
                ),
                result: DocResult {
                    nullspace_dim: Some(report.nullspace_dim()),
                    match_scalar: match_scalar.as_ref().map(Rat::to_string),
                    verdicts: if verdicts.is_empty() {
                        None
                    } else {
                        Some(verdicts)
                    },
                    ..DocResult::default()
                },
            };
            emit_json(&doc, out)
        }
    }
}

fn kac_verdicts(
    alg: &SuperAlgebra,
    ctx: &kac::KacContext,
    beta: &Root,
    verdicts: &mut BTreeMap<String, String>,
) -> Result<(), CliError> {
    let scalar = kac::kac_reduction_scalar(alg, ctx, beta).map_err(CliError::Math)?;
    verdicts.insert("kac_reduction_scalar".into(), scalar.to_string());
    let lam_minus = ctx.lam.sub(&beta.weight);
    if lam_minus.is_dominant_integral() {
        let verdict = kac::singular_in_kac(alg, ctx, beta).map_err(CliError::Math)?;
        verdicts.insert(
            "kac".into(),
            if verdict.descends {
                format!(
                    "descends, unique (quotient dim={})",
                    verdict.report.nullspace_dim()
                )
            } else {
                "maps to zero in K(lambda)".into()
            },
        );
    } else {
        let s = glmn::singular_vector_formula(alg, &ctx.lam, beta).map_err(CliError::Math)?;
        let in_i = kac::in_i_lambda(alg, ctx, &s).map_err(CliError::Math)?;
        verdicts.insert(
            "kac".into(),
            if in_i {
                "lambda - beta not dominant integral; formula vector maps to zero in K(lambda)"
                    .into()
            } else {
                "lambda - beta not dominant integral; descent theorem does not apply".into()
            },
        );
    }
    Ok(())
}

/// `kac-check`: the Kac-module verdict on its own.
pub fn cmd_kac_check(
    flags: &AlgebraFlags,
    beta_str: &str,
    lambda_str: &str,
    out: &OutputFlags,
) -> Result<(), CliError> {
    let handle = build_algebra(flags)?;
    if matches!(handle, AlgebraHandle::Osp(_)) {
        return Err(CliError::Usage(
            "Kac-module checks are implemented for gl(m|n) only".into(),
        ));
    }
    let alg = handle.algebra();
    let spec = parse_beta(beta_str)?;
    let beta = beta_root(alg, &spec)?;
    let lam = numeric_lambda(alg, lambda_str)?;
    if !alg.is_atypical(&lam, &beta).map_err(CliError::Math)? {
        let (s, t) = glmn::beta_st(alg, &beta).map_err(CliError::Math)?;
        let value = atypicality_relation(s, t, &lam.delta, &lam.eps);
        return Err(CliError::Math(oddsing_core::Error::NotAtypical {
            relation: format!("a_{s} + b_{t} + {s} - {t} = {value} != 0"),
        }));
    }
    let ctx = kac_context(alg, &lam).map_err(CliError::Math)?;
    let mut verdicts = BTreeMap::new();
    kac_verdicts(alg, &ctx, &beta, &mut verdicts)?;

    match out.format {
        Format::Plain | Format::Latex => {
            let lines: Vec<String> = verdicts
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect();
            emit(lines.join("\n"), out)
        }
        Format::Json => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                instance: instance_block(
                    flags,
                    &handle,
                    lambda_entries(&lam),
                    Some(beta_str.into()),
                ),
                result: DocResult {
                    verdicts: Some(verdicts),
                    ..DocResult::default()
                },
            };
            emit_json(&doc, out)
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepDocument {
    pub schema_version: u32,
    pub sweep: SweepBlock,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepBlock {
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub max_ranks: [usize; 2],
    pub samples: usize,
    pub seed: u64,
    pub instances: Vec<SweepInstance>,
    pub all_pass: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepInstance {
    pub algebra: String,
    pub beta: String,
    pub lambda: Vec<String>,
    pub nullspace_dim: usize,
    pub match_scalar: Option<String>,
    pub pass: bool,
}

/// `sweep`: deterministic verification sweep over all minus-case odd roots
/// and seeded atypical weights up to the given rank bounds. Instances run
/// concurrently; output assembly is ordered by instance key.
pub fn cmd_sweep(
    alg_kind: crate::AlgKind,
    family: Option<crate::FamilyArg>,
    max_ranks: (usize, usize),
    samples: usize,
    seed: u64,
    out: &OutputFlags,
) -> Result<(), CliError> {
    if max_ranks.0 == 0 || max_ranks.1 == 0 {
        return Err(CliError::Usage("sweep needs positive rank bounds".into()));
    }
    if samples == 0 {
        return Err(CliError::Usage("sweep needs at least one sample".into()));
    }

    // Instance keys: (m, n, s, t, sample); each key seeds its own stream so
    // parallel evaluation is deterministic.
    let mut keys: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
    for m in 1..=max_ranks.0 {
        for n in 1..=max_ranks.1 {
            let handle = build_algebra(&AlgebraFlags {
                alg: alg_kind,
                family,
                ranks: (m, n),
            })?;
            let alg = handle.algebra();
            for s in 1..=alg.delta_rank {
                for t in 1..=alg.eps_rank {
                    for k in 0..samples {
                        keys.push((m, n, s, t, k));
                    }
                }
            }
        }
    }

    let instances: Vec<SweepInstance> = keys
        .par_iter()
        .map(|&(m, n, s, t, k)| {
            let handle = build_algebra(&AlgebraFlags {
                alg: alg_kind,
                family,
                ranks: (m, n),
            })
            .expect("ranks validated above");
            let alg = handle.algebra();
            let beta = odd_root(alg, s, t).expect("minus-case odd root");
            let mut rng = sampling::rng(
                seed ^ (m as u64) << 24 ^ (n as u64) << 16 ^ (s as u64) << 8 ^ t as u64,
            );
            let mut lam = sampling::atypical_weight(alg, &beta, &mut rng);
            for _ in 0..k {
                lam = sampling::atypical_weight(alg, &beta, &mut rng);
            }
            let mu = lam.sub(&beta.weight);
            let report = find_singular(alg, &lam, &mu, None).expect("oracle run");
            let pass = report.unique && report.formula_match == Some(Rat::one());
            SweepInstance {
                algebra: alg.name.clone(),
                beta: format!("d{s}-e{t}"),
                lambda: lambda_entries(&lam),
                nullspace_dim: report.nullspace_dim(),
                match_scalar: report.formula_match.as_ref().map(Rat::to_string),
                pass,
            }
        })
        .collect();

    let all_pass = instances.iter().all(|i| i.pass);
    let family_str = match (alg_kind, family) {
        (crate::AlgKind::Osp, Some(crate::FamilyArg::Odd)) => Some("odd".to_string()),
        (crate::AlgKind::Osp, _) => Some("even".to_string()),
        _ => None,
    };
    let doc = SweepDocument {
        schema_version: SCHEMA_VERSION,
        sweep: SweepBlock {
            algebra: match alg_kind {
                crate::AlgKind::Gl => "gl".into(),
                crate::AlgKind::Osp => "osp".into(),
            },
            family: family_str,
            max_ranks: [max_ranks.0, max_ranks.1],
            samples,
            seed,
            instances,
            all_pass,
        },
    };

    match out.format {
        Format::Json => emit_json(&doc, out)?,
        Format::Plain | Format::Latex => {
            let mut lines = Vec::new();
            for i in &doc.sweep.instances {
                lines.push(format!(
                    "{} beta={} lambda=({}) dim={} match={} {}",
                    i.algebra,
                    i.beta,
                    i.lambda.join(","),
                    i.nullspace_dim,
                    i.match_scalar.as_deref().unwrap_or("none"),
                    if i.pass { "ok" } else { "FAIL" }
                ));
            }
            lines.push(format!(
                "{}: {} instances",
                if doc.sweep.all_pass { "all-pass" } else { "FAILURES" },
                doc.sweep.instances.len()
            ));
            emit(lines.join("\n"), out)?;
        }
    }
    if !all_pass {
        return Err(CliError::Internal(
            "sweep found failing instances".into(),
        ));
    }
    Ok(())
}

/// Round-trip helper used by the test suite: a JSON document parses back to
/// the same structural value.
pub fn roundtrip_document(text: &str) -> Result<Document, serde_json::Error> {
    serde_json::from_str(text)
}
