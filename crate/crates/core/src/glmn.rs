//! Closed chain formulas for odd singular vectors: c-values, the subset
//! family over the open chain between s-bar and t, the d_J coefficients,
//! the singular vector S_{-beta}, and the Shapovalov element theta_beta.
//!
//! The machinery is written against any algebra whose index set splits into
//! a barred delta block and an unbarred epsilon block with root vectors for
//! all block-difference roots, so the derived osp algebras reuse it.

use crate::algebra::SuperAlgebra;
use crate::coeff::{CartanPoly, CoeffRing, Rat};
use crate::error::{Error, Result};
use crate::pbw::{straighten, Element, PbwMonomial};
use crate::verma::VermaVector;
use crate::weight::{Root, Weight};

/// Splits an odd positive root `delta_s - eps_t` into `(s, t)` (1-based).
///
/// Roots of the shape `delta_s + eps_t` (osp plus case) are reported as
/// unsupported; anything else is not an odd positive root of the expected
/// form.
pub fn beta_st(alg: &SuperAlgebra, beta: &Root) -> Result<(usize, usize)> {
    let w = &beta.weight;
    let mut s = None;
    let mut plus_t = None;
    let mut minus_t = None;
    let mut ok = true;
    for (i, c) in w.delta.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() && s.is_none() {
            s = Some(i + 1);
        } else {
            ok = false;
        }
    }
    for (j, c) in w.eps.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if (-c).is_one() && minus_t.is_none() && plus_t.is_none() {
            minus_t = Some(j + 1);
        } else if c.is_one() && minus_t.is_none() && plus_t.is_none() {
            plus_t = Some(j + 1);
        } else {
            ok = false;
        }
    }
    match (ok, s, minus_t, plus_t) {
        (true, Some(s), Some(t), None) => {
            if alg.root_gen(w).is_none() {
                return Err(Error::NotOddPositiveRoot(
                    format!("{w}"),
                    alg.name.clone(),
                ));
            }
            Ok((s, t))
        }
        (true, Some(_), None, Some(_)) => Err(Error::UnsupportedRoot(
            "no closed formula is available for roots of the form delta_s + eps_t; \
             finding one is an open problem (the osp(6|2) instance is shipped as \
             verified example data)"
                .into(),
        )),
        _ => Err(Error::NotOddPositiveRoot(
            format!("{w}"),
            alg.name.clone(),
        )),
    }
}

/// The root `delta_s - eps_t` of `alg`.
pub fn odd_root(alg: &SuperAlgebra, s: usize, t: usize) -> Result<Root> {
    let w = Weight::delta_unit(alg.delta_rank, alg.eps_rank, s)
        .sub(&Weight::eps_unit(alg.delta_rank, alg.eps_rank, t));
    alg.root_of_weight(&w)
        .filter(|r| r.positive && r.parity.is_odd())
        .ok_or_else(|| Error::NotOddPositiveRoot(format!("{w}"), alg.name.clone()))
}

/// The c-values along the open chain `(s-1)bar, ..., 1bar, 1, ..., t-1`,
/// indexed by chain position in that order.
#[derive(Clone, Debug, PartialEq)]
pub struct AtypicalityDatum<R: CoeffRing> {
    pub s: usize,
    pub t: usize,
    pub c: Vec<R>,
}

impl<R: CoeffRing> AtypicalityDatum<R> {
    pub fn chain_len(&self) -> usize {
        self.s + self.t - 2
    }
}

/// c-values from explicit coordinate sequences: `delta[i]` holds `a_{i+1}`
/// and `eps[j]` holds `b_{j+1}`, in any coefficient ring.
pub fn c_values_generic<R: CoeffRing>(
    s: usize,
    t: usize,
    delta: &[R],
    eps: &[R],
) -> AtypicalityDatum<R> {
    let mut c = Vec::with_capacity(s + t - 2);
    // Barred chain positions u = s-1, ..., 1: c_ubar = a_s - a_u + s - u - 1.
    for u in (1..s).rev() {
        let offset = R::from_rat(&Rat::int((s - u) as i64 - 1));
        c.push(delta[s - 1].sub(&delta[u - 1]).add(&offset));
    }
    // Unbarred chain positions j = 1, ..., t-1: c_j = b_t - b_j - (t - j).
    for j in 1..t {
        let offset = R::from_rat(&Rat::int((t - j) as i64));
        c.push(eps[t - 1].sub(&eps[j - 1]).sub(&offset));
    }
    AtypicalityDatum { s, t, c }
}

/// The atypicality relation value `a_s + b_t + s - t` in any ring; the
/// weight is `(delta_s - eps_t)`-atypical exactly when this vanishes.
pub fn atypicality_relation<R: CoeffRing>(s: usize, t: usize, delta: &[R], eps: &[R]) -> R {
    delta[s - 1]
        .add(&eps[t - 1])
        .add(&R::from_rat(&Rat::int(s as i64 - t as i64)))
}

/// Exact c-values of a numeric weight for `beta = delta_s - eps_t`.
pub fn c_values(alg: &SuperAlgebra, lam: &Weight, beta: &Root) -> Result<AtypicalityDatum<Rat>> {
    let (s, t) = beta_st(alg, beta)?;
    if lam.delta_rank() != alg.delta_rank || lam.eps_rank() != alg.eps_rank {
        return Err(Error::RankMismatch(
            alg.delta_rank,
            alg.eps_rank,
            lam.delta_rank(),
            lam.eps_rank(),
        ));
    }
    Ok(c_values_generic(s, t, &lam.delta, &lam.eps))
}

/// Subset of the open chain between s-bar and t, stored as a bitmask over
/// the chain positions in I-order; cardinality ranges over 0..=s+t-2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainSubset {
    pub mask: u32,
    pub len: u32,
}

impl ChainSubset {
    pub fn empty(len: usize) -> Self {
        ChainSubset { mask: 0, len: len as u32 }
    }

    pub fn full(len: usize) -> Self {
        ChainSubset {
            mask: if len == 0 { 0 } else { (1u32 << len) - 1 },
            len: len as u32,
        }
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.mask >> pos & 1 == 1
    }

    pub fn cardinality(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len as usize).filter(|&p| self.contains(p))
    }
}

/// All `2^len` chain subsets, in descending mask order; this matches the
/// layout of the worked formulas (full chain first, empty set last).
pub fn chain_subsets(len: usize) -> Vec<ChainSubset> {
    (0..1u64 << len)
        .rev()
        .map(|m| ChainSubset {
            mask: m as u32,
            len: len as u32,
        })
        .collect()
}

/// `d_J`: the product of the c-values at chain positions NOT in `J`; the
/// full chain carries the empty product 1.
pub fn d_coefficient<R: CoeffRing>(datum: &AtypicalityDatum<R>, j: ChainSubset) -> R {
    debug_assert_eq!(datum.chain_len(), j.len as usize);
    let mut acc = R::one();
    for (pos, c) in datum.c.iter().enumerate() {
        if !j.contains(pos) {
            acc = acc.mul(c);
        }
    }
    acc
}

/// I-position of the node at a given chain position for `beta = d_s - e_t`:
/// chain position 0 is `(s-1)bar`, ascending to `t-1`.
fn chain_node_position(alg: &SuperAlgebra, s: usize, q: usize) -> usize {
    alg.delta_rank - s + 1 + q
}

fn node_weight(alg: &SuperAlgebra, pos: usize) -> Weight {
    let dr = alg.delta_rank;
    if pos < dr {
        Weight::delta_unit(dr, alg.eps_rank, dr - pos)
    } else {
        Weight::eps_unit(dr, alg.eps_rank, pos - dr + 1)
    }
}

/// The factor generators of the chain product `E_J`, in the written order
/// (leftmost factor lowers from t, rightmost lowers onto s-bar).
pub fn chain_word(alg: &SuperAlgebra, s: usize, t: usize, j: ChainSubset) -> Vec<usize> {
    let dr = alg.delta_rank;
    let mut path: Vec<usize> = Vec::with_capacity(j.cardinality() as usize + 2);
    path.push(dr - s);
    path.extend(j.members().map(|q| chain_node_position(alg, s, q)));
    path.push(dr + t - 1);
    let mut word = Vec::with_capacity(path.len() - 1);
    for k in (0..path.len() - 1).rev() {
        let root = node_weight(alg, path[k + 1]).sub(&node_weight(alg, path[k]));
        let gen = alg
            .root_gen(&root)
            .unwrap_or_else(|| panic!("missing chain root vector for {root}"));
        word.push(gen);
    }
    word
}

/// The PBW monomial of the full-chain factor multiset (the leading term of
/// the closed formula, coefficient 1).
pub fn leading_chain_monomial(alg: &SuperAlgebra, s: usize, t: usize) -> PbwMonomial {
    let word = chain_word(alg, s, t, ChainSubset::full(s + t - 2));
    let mut positions: Vec<u32> = word.iter().map(|&g| alg.pbw_position(g) as u32).collect();
    positions.sort_unstable();
    PbwMonomial::from_sorted_positions(alg, &positions)
}

/// One term per subset J: `(J, d_J, factor generators of E_J)`, in the
/// written order (descending mask).
pub fn chain_formula<R: CoeffRing>(
    alg: &SuperAlgebra,
    datum: &AtypicalityDatum<R>,
) -> Vec<(ChainSubset, R, Vec<usize>)> {
    chain_subsets(datum.chain_len())
        .into_iter()
        .map(|j| {
            let d = d_coefficient(datum, j);
            let word = chain_word(alg, datum.s, datum.t, j);
            (j, d, word)
        })
        .collect()
}

/// The closed-formula singular vector `S_{-beta} v_lambda` for a
/// beta-atypical weight; the returned expansion is PBW-normal with the
/// full-chain monomial carrying coefficient 1.
pub fn singular_vector_formula(
    alg: &SuperAlgebra,
    lam: &Weight,
    beta: &Root,
) -> Result<VermaVector> {
    let (s, t) = beta_st(alg, beta)?;
    if !alg.is_atypical(lam, beta)? {
        let value = atypicality_relation(s, t, &lam.delta, &lam.eps);
        return Err(Error::NotAtypical {
            relation: format!("a_{s} + b_{t} + {s} - {t} = {value} != 0"),
        });
    }
    let datum = c_values_generic(s, t, &lam.delta, &lam.eps);
    let mut expansion: Element<Rat> = Element::zero();
    for (_, d, word) in chain_formula(alg, &datum) {
        if d.is_zero() {
            continue;
        }
        expansion = expansion.add(&straighten::<Rat>(alg, &word).scale(&d));
    }
    Ok(VermaVector::from_expansion(lam.clone(), expansion))
}

/// Cartan symbol index of `a_i` (the Cartan element dual to `delta_i`).
pub fn delta_symbol(alg: &SuperAlgebra, i: usize) -> u32 {
    cartan_symbol(alg, crate::algebra::CartanCoord::Delta(i - 1))
}

/// Cartan symbol index of `b_j`.
pub fn eps_symbol(alg: &SuperAlgebra, j: usize) -> u32 {
    cartan_symbol(alg, crate::algebra::CartanCoord::Eps(j - 1))
}

fn cartan_symbol(alg: &SuperAlgebra, coord: crate::algebra::CartanCoord) -> u32 {
    for (k, &g) in alg.cartan_gens.iter().enumerate() {
        if let crate::algebra::GenKind::Cartan(c) = alg.gen(g).kind {
            if c == coord {
                return k as u32;
            }
        }
    }
    panic!("no Cartan generator for {coord:?}");
}

/// The Shapovalov element `theta_beta` in U(b^-): chain terms with their
/// Cartan-polynomial products `C_k` kept to the right of the monomials, so
/// specializing the coefficients at any beta-atypical weight reproduces the
/// singular vector formula.
pub fn shapovalov_element(alg: &SuperAlgebra, beta: &Root) -> Result<Element<CartanPoly>> {
    let (s, t) = beta_st(alg, beta)?;
    let delta_polys: Vec<CartanPoly> = (1..=alg.delta_rank)
        .map(|i| CartanPoly::var(delta_symbol(alg, i)))
        .collect();
    let eps_polys: Vec<CartanPoly> = (1..=alg.eps_rank)
        .map(|j| CartanPoly::var(eps_symbol(alg, j)))
        .collect();
    let datum = c_values_generic(s, t, &delta_polys, &eps_polys);
    let mut out: Element<CartanPoly> = Element::zero();
    for (_, d, word) in chain_formula(alg, &datum) {
        out = out.add(&straighten::<CartanPoly>(alg, &word).scale(&d));
    }
    Ok(out)
}

/// Substitutes the weight's Cartan coordinates into every coefficient.
pub fn specialize(
    alg: &SuperAlgebra,
    theta: &Element<CartanPoly>,
    lam: &Weight,
) -> Result<Element<Rat>> {
    let values = alg.cartan_values(lam);
    let mut out = Element::zero();
    for (m, p) in theta.terms() {
        out.add_term(m.clone(), p.eval(&values)?);
    }
    Ok(out)
}
