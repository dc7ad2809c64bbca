//! Ortho-symplectic instantiations: osp(2m|2n) and osp(2m+1|2n) realized
//! inside an ambient gl via an explicit Chevalley generator table, with
//! structure constants derived by bracketing in the ambient algebra and
//! re-expressing in the osp basis. Bracket closure failure is a
//! construction error (it signals a transcription bug in the table).
//!
//! Index conventions follow the weight layout `(a_n,...,a_1 | b_1,...,b_m)`:
//! the derived algebra has `delta_rank = n` and `eps_rank = m`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::algebra::{CartanCoord, GenKind, Generator, LinComb, SuperAlgebra};
use crate::coeff::Rat;
use crate::error::{Error, Result};
use crate::glmn;
use crate::pbw::straighten;
use crate::verma::VermaVector;
use crate::weight::{Parity, Root, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OspFamily {
    /// osp(2m|2n)
    Even,
    /// osp(2m+1|2n)
    Odd,
}

/// The derived osp algebra together with its ambient gl realization.
pub struct OspRealization {
    pub family: OspFamily,
    /// Number of eps coordinates (orthogonal side parameter).
    pub m: usize,
    /// Number of delta coordinates (symplectic side parameter).
    pub n: usize,
    pub ambient: SuperAlgebra,
    pub algebra: SuperAlgebra,
    /// Ambient linear combination realizing each derived basis element,
    /// aligned with `algebra.basis`.
    pub embeddings: Vec<LinComb>,
}

impl OspRealization {
    pub fn name(&self) -> &str {
        &self.algebra.name
    }
}

fn root_name(w: &Weight) -> String {
    // Positive components print first: eps_3 - eps_2 reads `e3-e2`.
    let mut parts: Vec<String> = Vec::new();
    let mut atom = |c: &Rat, sym: &str, k: usize| {
        if c.is_zero() {
            return;
        }
        let var = if c.is_one() {
            format!("{sym}{k}")
        } else if (-c).is_one() {
            format!("-{sym}{k}")
        } else {
            format!("{c}{sym}{k}")
        };
        parts.push(var);
    };
    for (i, c) in w.delta.iter().enumerate() {
        atom(c, "d", i + 1);
    }
    for (j, c) in w.eps.iter().enumerate() {
        atom(c, "e", j + 1);
    }
    parts.sort_by_key(|p| p.starts_with('-'));
    let mut out = String::new();
    for (k, p) in parts.iter().enumerate() {
        if k > 0 && !p.starts_with('-') {
            out.push('+');
        }
        out.push_str(p);
    }
    out
}

/// Builds the osp realization. For the even family `m >= 2` matches the
/// listed simple system; `m = 1` follows the root-system definition (the
/// `eps_{m-1} + eps_m` simple root is absent). Simple roots are computed
/// from the positive system either way.
pub fn build_osp(family: OspFamily, m: usize, n: usize) -> Result<OspRealization> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidConstruction("osp requires m, n >= 1".into()));
    }
    let unbarred_count = match family {
        OspFamily::Even => 2 * m,
        OspFamily::Odd => 2 * m + 1,
    };
    let ambient = SuperAlgebra::gl(2 * n, unbarred_count)?;
    let name = match family {
        OspFamily::Even => format!("osp({}|{})", 2 * m, 2 * n),
        OspFamily::Odd => format!("osp({}|{})", 2 * m + 1, 2 * n),
    };

    // Ambient generator index helpers: barred subscript i (1..=2n) and
    // unbarred subscript k (1..=unbarred_count).
    let ap = 2 * n + unbarred_count;
    let bar = |i: usize| 2 * n - i;
    let unb = |k: usize| 2 * n + k - 1;
    let e = |r: usize, c: usize| r * ap + c;
    let extra = unbarred_count; // index of the extra odd-family column

    let dw = |i: usize| Weight::delta_unit(n, m, i);
    let ew = |k: usize| Weight::eps_unit(n, m, k);

    let mut basis: Vec<Generator> = Vec::new();
    let mut embeddings: Vec<LinComb> = Vec::new();

    // Cartan: H_{delta_i} = E_{ibar,ibar} - E_{(i+n)bar,(i+n)bar},
    //         H_{eps_k}  = E_{k,k} - E_{k+m,k+m}.
    for i in 1..=n {
        basis.push(Generator {
            label: format!("H(d{i})"),
            parity: Parity::Even,
            kind: GenKind::Cartan(CartanCoord::Delta(i - 1)),
        });
        embeddings.push(vec![
            (e(bar(i), bar(i)), Rat::one()),
            (e(bar(i + n), bar(i + n)), -Rat::one()),
        ]);
    }
    for k in 1..=m {
        basis.push(Generator {
            label: format!("H(e{k})"),
            parity: Parity::Even,
            kind: GenKind::Cartan(CartanCoord::Eps(k - 1)),
        });
        embeddings.push(vec![
            (e(unb(k), unb(k)), Rat::one()),
            (e(unb(k + m), unb(k + m)), -Rat::one()),
        ]);
    }

    let push_root =
        |basis: &mut Vec<Generator>,
         embeddings: &mut Vec<LinComb>,
         w: Weight,
         parity: Parity,
         positive: bool,
         combo: LinComb| {
            basis.push(Generator {
                label: format!("e({})", root_name(&w)),
                parity,
                kind: GenKind::Root(Root {
                    weight: w,
                    parity,
                    positive,
                }),
            });
            embeddings.push(combo);
        };

    // Symplectic block (delta roots), all even.
    for i in 1..=n {
        push_root(
            &mut basis,
            &mut embeddings,
            dw(i).scale(&Rat::int(2)),
            Parity::Even,
            true,
            vec![(e(bar(i), bar(i + n)), Rat::one())],
        );
        push_root(
            &mut basis,
            &mut embeddings,
            dw(i).scale(&Rat::int(-2)),
            Parity::Even,
            false,
            vec![(e(bar(i + n), bar(i)), Rat::one())],
        );
    }
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            // e_{delta_i - delta_j} = E_{ibar,jbar} - E_{(j+n)bar,(i+n)bar}.
            push_root(
                &mut basis,
                &mut embeddings,
                dw(i).sub(&dw(j)),
                Parity::Even,
                i > j,
                vec![
                    (e(bar(i), bar(j)), Rat::one()),
                    (e(bar(j + n), bar(i + n)), -Rat::one()),
                ],
            );
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            push_root(
                &mut basis,
                &mut embeddings,
                dw(j).add(&dw(i)),
                Parity::Even,
                true,
                vec![
                    (e(bar(i), bar(j + n)), Rat::one()),
                    (e(bar(j), bar(i + n)), Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                dw(j).add(&dw(i)).neg(),
                Parity::Even,
                false,
                vec![
                    (e(bar(j + n), bar(i)), Rat::one()),
                    (e(bar(i + n), bar(j)), Rat::one()),
                ],
            );
        }
    }

    // Orthogonal block (eps roots), all even.
    for k in 1..=m {
        for l in 1..=m {
            if k == l {
                continue;
            }
            push_root(
                &mut basis,
                &mut embeddings,
                ew(k).sub(&ew(l)),
                Parity::Even,
                k < l,
                vec![
                    (e(unb(k), unb(l)), Rat::one()),
                    (e(unb(l + m), unb(k + m)), -Rat::one()),
                ],
            );
        }
    }
    for k in 1..=m {
        for l in k + 1..=m {
            push_root(
                &mut basis,
                &mut embeddings,
                ew(k).add(&ew(l)),
                Parity::Even,
                true,
                vec![
                    (e(unb(k), unb(l + m)), Rat::one()),
                    (e(unb(l), unb(k + m)), -Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                ew(k).add(&ew(l)).neg(),
                Parity::Even,
                false,
                vec![
                    (e(unb(l + m), unb(k)), Rat::one()),
                    (e(unb(k + m), unb(l)), -Rat::one()),
                ],
            );
        }
    }

    // Mixed block (odd roots).
    for i in 1..=n {
        for k in 1..=m {
            push_root(
                &mut basis,
                &mut embeddings,
                dw(i).add(&ew(k)),
                Parity::Odd,
                true,
                vec![
                    (e(unb(k), bar(i + n)), Rat::one()),
                    (e(bar(i), unb(k + m)), Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                dw(i).add(&ew(k)).neg(),
                Parity::Odd,
                false,
                vec![
                    (e(unb(k + m), bar(i)), Rat::one()),
                    (e(bar(i + n), unb(k)), -Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                dw(i).sub(&ew(k)),
                Parity::Odd,
                true,
                vec![
                    (e(unb(k + m), bar(i + n)), Rat::one()),
                    (e(bar(i), unb(k)), Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                ew(k).sub(&dw(i)),
                Parity::Odd,
                false,
                vec![
                    (e(unb(k), bar(i)), Rat::one()),
                    (e(bar(i + n), unb(k + m)), -Rat::one()),
                ],
            );
        }
    }

    // Odd family: short roots.
    if family == OspFamily::Odd {
        for k in 1..=m {
            push_root(
                &mut basis,
                &mut embeddings,
                ew(k),
                Parity::Even,
                true,
                vec![
                    (e(unb(k), unb(extra)), Rat::one()),
                    (e(unb(extra), unb(k + m)), -Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                ew(k).neg(),
                Parity::Even,
                false,
                vec![
                    (e(unb(extra), unb(k)), Rat::one()),
                    (e(unb(k + m), unb(extra)), -Rat::one()),
                ],
            );
        }
        for i in 1..=n {
            push_root(
                &mut basis,
                &mut embeddings,
                dw(i),
                Parity::Odd,
                true,
                vec![
                    (e(unb(extra), bar(i + n)), Rat::one()),
                    (e(bar(i), unb(extra)), Rat::one()),
                ],
            );
            push_root(
                &mut basis,
                &mut embeddings,
                dw(i).neg(),
                Parity::Odd,
                false,
                vec![
                    (e(unb(extra), bar(i)), Rat::one()),
                    (e(bar(i + n), unb(extra)), -Rat::one()),
                ],
            );
        }
    }

    // Parity sanity against the ambient: every embedding must be
    // homogeneous of the declared parity.
    for (g, combo) in embeddings.iter().enumerate() {
        for &(a, _) in combo {
            if ambient.gen(a).parity != basis[g].parity {
                return Err(Error::ClosureFailure {
                    algebra: name,
                    detail: format!("{} is not parity-homogeneous", basis[g].label),
                });
            }
        }
    }

    // Derived structure constants: bracket in the ambient, re-express.
    let dim = basis.len();
    let mut table: Vec<Vec<LinComb>> = vec![vec![Vec::new(); dim]; dim];
    for x in 0..dim {
        for y in 0..dim {
            let ambient_result = ambient.bracket_lin(&embeddings[x], &embeddings[y]);
            table[x][y] = reexpress(
                &name, &ambient, &basis, &embeddings, x, y, ambient_result, n, m,
            )?;
        }
    }

    // Weyl vector: half-sum of positive even roots minus positive odd roots.
    let mut half_sum = Weight::zero(n, m);
    for gen in &basis {
        if let Some(r) = gen.root() {
            if r.positive {
                if r.parity.is_odd() {
                    half_sum = half_sum.sub(&r.weight);
                } else {
                    half_sum = half_sum.add(&r.weight);
                }
            }
        }
    }
    let rho = half_sum.scale(&Rat::new(1, 2).expect("nonzero denominator"));

    let algebra = SuperAlgebra::from_table(name, n, m, basis, table, rho)?;
    Ok(OspRealization {
        family,
        m,
        n,
        ambient,
        algebra,
        embeddings,
    })
}

/// Re-expresses an ambient bracket value in the derived basis: zero-weight
/// results must lie in the embedded Cartan, root-weight results must be
/// exact multiples of the table entry.
#[allow(clippy::too_many_arguments)]
fn reexpress(
    name: &str,
    _ambient: &SuperAlgebra,
    basis: &[Generator],
    embeddings: &[LinComb],
    x: usize,
    y: usize,
    result: LinComb,
    n: usize,
    m: usize,
) -> Result<LinComb> {
    if result.is_empty() {
        return Ok(Vec::new());
    }
    let fail = |detail: String| Error::ClosureFailure {
        algebra: name.to_string(),
        detail,
    };
    let gen_root = |g: usize| -> Weight {
        basis[g]
            .root()
            .map(|r| r.weight.clone())
            .unwrap_or_else(|| Weight::zero(n, m))
    };
    let weight = gen_root(x).add(&gen_root(y));

    if weight.is_zero() {
        // Solve over the embedded Cartan: coefficients are read off the
        // first ambient diagonal of each H, the rest must match exactly.
        let mut combo: LinComb = Vec::new();
        let mut ambient_accum: LinComb = Vec::new();
        for (g, emb) in embeddings.iter().enumerate().take(n + m) {
            let lead = emb[0].0;
            let coeff = result
                .iter()
                .find(|(a, _)| *a == lead)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Rat::zero);
            if !coeff.is_zero() {
                for (a, c) in emb {
                    ambient_accum.push((*a, c * &coeff));
                }
                combo.push((g, coeff));
            }
        }
        let ambient_accum = crate::algebra::normalize_lincomb(ambient_accum);
        if ambient_accum != crate::algebra::normalize_lincomb(result) {
            return Err(fail(format!(
                "[{}, {}] does not lie in the embedded Cartan",
                basis[x].label, basis[y].label
            )));
        }
        return Ok(combo);
    }

    let target = basis
        .iter()
        .position(|g| g.root().map(|r| &r.weight) == Some(&weight))
        .ok_or_else(|| {
            fail(format!(
                "[{}, {}] has weight {weight} outside the root system",
                basis[x].label, basis[y].label
            ))
        })?;
    let emb = &embeddings[target];
    let lead = emb[0].0;
    let ratio = result
        .iter()
        .find(|(a, _)| *a == lead)
        .map(|(_, c)| c.checked_div(&emb[0].1).expect("unit lead"))
        .unwrap_or_else(Rat::zero);
    let scaled: LinComb = emb.iter().map(|(a, c)| (*a, c * &ratio)).collect();
    if crate::algebra::normalize_lincomb(scaled) != crate::algebra::normalize_lincomb(result) {
        return Err(fail(format!(
            "[{}, {}] is not proportional to the {} table entry",
            basis[x].label, basis[y].label, basis[target].label
        )));
    }
    if ratio.is_zero() {
        return Ok(Vec::new());
    }
    Ok(vec![(target, ratio)])
}

static OSP_CACHE: Lazy<Mutex<HashMap<(OspFamily, usize, usize), Arc<OspRealization>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Cached realization; derived structure constants are computed once per
/// rank (ambient bracketing is quadratic in basis size).
pub fn osp_cached(family: OspFamily, m: usize, n: usize) -> Arc<OspRealization> {
    let mut cache = OSP_CACHE.lock().unwrap();
    cache
        .entry((family, m, n))
        .or_insert_with(|| Arc::new(build_osp(family, m, n).expect("osp construction")))
        .clone()
}

/// Exact atypicality test `(lambda + rho, beta) = 0` in the osp form; works
/// for both `delta_s - eps_t` and `delta_s + eps_t`.
pub fn osp_atypicality(real: &OspRealization, lam: &Weight, beta: &Root) -> Result<bool> {
    real.algebra.is_atypical(lam, beta)
}

/// The closed-formula singular vector for minus-case roots
/// `beta = delta_s - eps_t`, reusing the chain machinery with the osp index
/// conventions. Plus-case roots are an unsupported open problem.
pub fn osp_singular_formula(
    real: &OspRealization,
    lam: &Weight,
    beta: &Root,
) -> Result<VermaVector> {
    glmn::singular_vector_formula(&real.algebra, lam, beta)
}

/// The 15 chain terms of the osp(6|2), beta = delta_1 + eps_1 singular
/// vector, with every coefficient polynomial in (b_1, b_2, b_3) evaluated
/// exactly: `(coefficient, factor generators)` in the written order.
/// Requires lambda = (a | b_1, b_2, b_3) with a = b_1 + 4.
pub fn osp62_example_terms(
    real: &OspRealization,
    lam: &Weight,
) -> Result<Vec<(Rat, Vec<usize>)>> {
    if real.family != OspFamily::Even || real.m != 3 || real.n != 1 {
        return Err(Error::InvalidConstruction(
            "the worked plus-case vector is specific to osp(6|2)".into(),
        ));
    }
    let alg = &real.algebra;
    let beta = alg
        .root_of_weight(&Weight::delta_unit(1, 3, 1).add(&Weight::eps_unit(1, 3, 1)))
        .expect("delta_1 + eps_1 root");
    if !alg.is_atypical(lam, &beta)? {
        return Err(Error::NotAtypical {
            relation: format!("a - b_1 - 4 != 0 for lambda = {lam}"),
        });
    }

    let one = Rat::one();
    let b1 = &lam.eps[0];
    let b2 = &lam.eps[1];
    let b3 = &lam.eps[2];
    // Recurring factors of the printed coefficients.
    let p12 = &(b1 - b2); // b1 - b2
    let q12 = &(&(b1 + b2) + &Rat::int(3)); // b1 + b2 + 3
    let p13 = &(&(b1 - b3) + &Rat::int(2)); // b1 - b3 + 2
    let q13 = &(&(b1 + b3) + &Rat::int(2)); // b1 + b3 + 2
    let p23 = &(&(b2 - b3) + &Rat::int(2)); // b2 - b3 + 2
    let q23 = &(&(b2 + b3) + &Rat::int(2)); // b2 + b3 + 2
    let p12_1 = &(p12 + &one); // b1 - b2 + 1

    let d = |_: ()| Weight::delta_unit(1, 3, 1);
    let e = |k: usize| Weight::eps_unit(1, 3, k);
    // Negative roots used by the factors.
    let up = |k: usize, l: usize| e(l).sub(&e(k)); // eps_l - eps_k (k < l)
    let cap = |k: usize, l: usize| e(k).add(&e(l)).neg(); // -eps_k - eps_l
    let cross = |k: usize| e(k).sub(&d(())); // eps_k - delta
    let capd = |k: usize| e(k).add(&d(())).neg(); // -eps_k - delta

    let terms: Vec<(Rat, Vec<Weight>)> = vec![
        (one.clone(), vec![up(2, 3), cap(2, 3), up(1, 2), up(1, 2), cross(1)]),
        (-(q23 * &one), vec![up(2, 3), cap(1, 3), up(1, 2), cross(1)]),
        (-(p23 * &one), vec![cap(2, 3), up(1, 3), up(1, 2), cross(1)]),
        (
            -(&(Rat::int(2) * b1) + &Rat::int(4)),
            vec![up(2, 3), cap(2, 3), up(1, 2), cross(2)],
        ),
        (
            -(&(p12 * q12) + &(p23 * q23)),
            vec![cap(1, 2), up(1, 2), cross(1)],
        ),
        (-(p12 * q12), vec![cap(1, 3), up(1, 3), cross(1)]),
        (q12 * q13, vec![up(2, 3), up(1, 2), capd(3)]),
        (q12 * p13, vec![cap(2, 3), up(1, 2), cross(3)]),
        (
            &(p12_1 * q23) - &(p12 * q12),
            vec![up(2, 3), cap(1, 3), cross(2)],
        ),
        (
            &(p12_1 * p23) - &(p12 * q12),
            vec![cap(2, 3), up(1, 3), cross(2)],
        ),
        (
            &(&(p12 * p12) * q12) + &(&(p12_1 * p23) * q23),
            vec![cap(1, 2), cross(2)],
        ),
        (&(q12 * p13) * q13, vec![up(1, 2), capd(2)]),
        (&(p12 * q12) * q13, vec![up(1, 3), capd(3)]),
        (&(p12 * q12) * p13, vec![cap(1, 3), cross(3)]),
        (&(p12_1 * q12) * &(p13 * q13), vec![capd(1)]),
    ];

    Ok(terms
        .into_iter()
        .map(|(coeff, roots)| {
            let word: Vec<usize> = roots
                .iter()
                .map(|w| {
                    alg.root_gen(w)
                        .unwrap_or_else(|| panic!("missing osp root vector for {w}"))
                })
                .collect();
            (coeff, word)
        })
        .collect())
}

/// The 15-term singular vector itself, straightened into the PBW basis.
pub fn osp62_example_vector(real: &OspRealization, lam: &Weight) -> Result<VermaVector> {
    let alg = &real.algebra;
    let mut expansion = crate::pbw::Element::zero();
    for (coeff, word) in osp62_example_terms(real, lam)? {
        if coeff.is_zero() {
            continue;
        }
        expansion = expansion.add(&straighten::<Rat>(alg, &word).scale(&coeff));
    }
    Ok(VermaVector::from_expansion(lam.clone(), expansion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glmn::odd_root;
    use crate::verma::act_gen;

    fn r(x: i64) -> Rat {
        Rat::int(x)
    }

    #[test]
    fn osp62_rho_matches_listed_value() {
        let real = osp_cached(OspFamily::Even, 3, 1);
        // rho = (-2 | 2, 1, 0)
        let expected = Weight {
            delta: vec![r(-2)],
            eps: vec![r(2), r(1), r(0)],
        };
        assert_eq!(real.algebra.rho, expected);
    }

    #[test]
    fn even_family_odd_roots_are_delta_pm_eps() {
        let real = osp_cached(OspFamily::Even, 2, 2);
        let alg = &real.algebra;
        let odd: Vec<Weight> = alg
            .odd_positive_roots()
            .into_iter()
            .map(|r| r.weight)
            .collect();
        let mut expected = Vec::new();
        for i in 1..=2 {
            for k in 1..=2 {
                expected.push(Weight::delta_unit(2, 2, i).add(&Weight::eps_unit(2, 2, k)));
                expected.push(Weight::delta_unit(2, 2, i).sub(&Weight::eps_unit(2, 2, k)));
            }
        }
        expected.sort();
        assert_eq!(odd, expected);
    }

    #[test]
    fn mixed_bracket_lands_in_the_cartan() {
        let real = osp_cached(OspFamily::Even, 2, 1);
        let alg = &real.algebra;
        let plus = alg
            .root_gen(&Weight::delta_unit(1, 2, 1).sub(&Weight::eps_unit(1, 2, 1)))
            .unwrap();
        let minus = alg
            .root_gen(&Weight::eps_unit(1, 2, 1).sub(&Weight::delta_unit(1, 2, 1)))
            .unwrap();
        let b = alg.bracket(plus, minus);
        assert!(!b.is_empty());
        assert!(b.iter().all(|(g, _)| alg.gen(*g).is_cartan()));
    }

    #[test]
    fn dimensions_match_the_classical_count() {
        // dim osp(2m|2n) = m(2m-1) + n(2n+1) + 4mn
        for (m, n) in [(1usize, 1usize), (2, 1), (2, 2), (3, 1)] {
            let real = osp_cached(OspFamily::Even, m, n);
            let expected = m * (2 * m - 1) + n * (2 * n + 1) + 4 * m * n;
            assert_eq!(real.algebra.dim(), expected, "osp({}|{})", 2 * m, 2 * n);
        }
        // dim osp(2m+1|2n) adds 2m short even and 2n short odd roots.
        for (m, n) in [(1usize, 1usize), (2, 1)] {
            let real = osp_cached(OspFamily::Odd, m, n);
            let expected = m * (2 * m - 1) + n * (2 * n + 1) + 4 * m * n + 2 * m + 2 * n;
            assert_eq!(real.algebra.dim(), expected, "osp({}|{})", 2 * m + 1, 2 * n);
        }
    }

    #[test]
    fn atypicality_examples() {
        // osp(6|2), beta = d1+e1, lambda = (b1+4 | b1,b2,b3).
        let real = osp_cached(OspFamily::Even, 3, 1);
        let alg = &real.algebra;
        let beta = alg
            .root_of_weight(&Weight::delta_unit(1, 3, 1).add(&Weight::eps_unit(1, 3, 1)))
            .unwrap();
        let lam = Weight {
            delta: vec![r(1)],
            eps: vec![r(-3), r(2), r(0)],
        };
        assert!(osp_atypicality(&real, &lam, &beta).unwrap());

        // osp(4|2), beta = d1-e1: a_1 - 2 + 1 = -(b_1 + 2 - 1) i.e. a1+b1 = 0.
        let real42 = osp_cached(OspFamily::Even, 2, 1);
        let beta_minus = odd_root(&real42.algebra, 1, 1).unwrap();
        let lam42 = Weight {
            delta: vec![r(5)],
            eps: vec![r(-5), r(1)],
        };
        assert!(osp_atypicality(&real42, &lam42, &beta_minus).unwrap());
        let generic = Weight {
            delta: vec![r(5)],
            eps: vec![r(3), r(1)],
        };
        assert!(!osp_atypicality(&real42, &generic, &beta_minus).unwrap());
    }

    #[test]
    fn minimal_minus_case_formula_is_one_term() {
        // osp(2|2): beta = d1 - e1, chain empty.
        let real = osp_cached(OspFamily::Even, 1, 1);
        let alg = &real.algebra;
        let beta = odd_root(alg, 1, 1).unwrap();
        let lam = Weight {
            delta: vec![r(3)],
            eps: vec![r(-3)],
        };
        let v = osp_singular_formula(&real, &lam, &beta).unwrap();
        assert_eq!(v.expansion.term_count(), 1);
        for &g in &alg.simple_positive_gens {
            assert!(act_gen(alg, g, &v).is_zero());
        }
    }

    #[test]
    fn osp42_minus_case_formula_is_singular() {
        let real = osp_cached(OspFamily::Even, 2, 1);
        let alg = &real.algebra;
        for t in 1..=2 {
            let beta = odd_root(alg, 1, t).unwrap();
            // atypicality: b_t = t - 1 - a_1 with rho = (a side) ... solved
            // generically from the algebra's rho.
            let a1 = r(4);
            let bt = -(&a1 + &alg.rho.delta[0]) - &alg.rho.eps[t - 1];
            let mut eps = vec![r(7), r(1)];
            eps[t - 1] = bt;
            let lam = Weight { delta: vec![a1], eps };
            assert!(osp_atypicality(&real, &lam, &beta).unwrap());
            let v = osp_singular_formula(&real, &lam, &beta).unwrap();
            assert!(!v.is_zero());
            for &g in &alg.simple_positive_gens {
                assert!(act_gen(alg, g, &v).is_zero(), "t={t} {}", alg.gen(g).label);
            }
        }
    }

    #[test]
    fn plus_case_formula_is_an_unsupported_root() {
        let real = osp_cached(OspFamily::Even, 2, 1);
        let alg = &real.algebra;
        let beta = alg
            .root_of_weight(&Weight::delta_unit(1, 2, 1).add(&Weight::eps_unit(1, 2, 1)))
            .unwrap();
        let lam = Weight {
            delta: vec![r(0)],
            eps: vec![r(0), r(0)],
        };
        assert!(matches!(
            osp_singular_formula(&real, &lam, &beta),
            Err(Error::UnsupportedRoot(_))
        ));
    }

    #[test]
    fn odd_family_builds_and_has_short_roots() {
        let real = osp_cached(OspFamily::Odd, 2, 1);
        let alg = &real.algebra;
        assert!(alg
            .root_gen(&Weight::eps_unit(1, 2, 2))
            .is_some());
        assert!(alg.root_gen(&Weight::delta_unit(1, 2, 1)).is_some());
        // Short odd roots are non-isotropic; mixed roots are isotropic.
        let short = alg
            .root_of_weight(&Weight::delta_unit(1, 2, 1))
            .unwrap();
        assert!(!short.is_isotropic());
        let mixed = odd_root(alg, 1, 1).unwrap();
        assert!(mixed.is_isotropic());
    }

    #[test]
    fn osp62_example_vector_is_singular_at_integer_points() {
        let real = osp_cached(OspFamily::Even, 3, 1);
        let alg = &real.algebra;
        let lam = Weight {
            delta: vec![r(4)],
            eps: vec![r(0), r(0), r(0)],
        };
        let v = osp62_example_vector(&real, &lam).unwrap();
        assert!(!v.is_zero());
        for &g in &alg.simple_positive_gens {
            assert!(act_gen(alg, g, &v).is_zero(), "{}", alg.gen(g).label);
        }
    }

    #[test]
    fn osp62_example_rejects_non_atypical_weights() {
        let real = osp_cached(OspFamily::Even, 3, 1);
        let lam = Weight {
            delta: vec![r(0)],
            eps: vec![r(0), r(0), r(0)],
        };
        assert!(matches!(
            osp62_example_vector(&real, &lam),
            Err(Error::NotAtypical { .. })
        ));
    }
}
