//! PBW monomials and the straightening (normal ordering) engine for U(g),
//! generic over the coefficient ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{GenClass, SuperAlgebra};
use crate::coeff::{CoeffRing, Rat};
use crate::weight::Weight;

/// Normally ordered exponent sequence over the algebra basis.
///
/// Factors are `(pbw_position, exponent)` pairs, strictly increasing in
/// position. Odd generators carry exponent exactly 1: in U(g) an odd square
/// rewrites to `[x,x]/2`, which vanishes for the isotropic root vectors of
/// gl and osp. The empty sequence is the unit monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct PbwMonomial {
    factors: Vec<(u32, u32)>,
}

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial { factors: Vec::new() }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Single generator with an exponent.
    pub fn power(alg: &SuperAlgebra, gen: usize, exp: u32) -> Self {
        if exp == 0 {
            return PbwMonomial::unit();
        }
        debug_assert!(exp == 1 || !alg.gen(gen).parity.is_odd());
        PbwMonomial {
            factors: vec![(alg.pbw_position(gen) as u32, exp)],
        }
    }

    /// Builds a monomial from a non-decreasing position sequence.
    pub(crate) fn from_sorted_positions(alg: &SuperAlgebra, word: &[u32]) -> Self {
        let mut factors: Vec<(u32, u32)> = Vec::new();
        for &pos in word {
            match factors.last_mut() {
                Some((p, e)) if *p == pos => *e += 1,
                _ => factors.push((pos, 1)),
            }
        }
        debug_assert!(factors.iter().all(|&(p, e)| {
            e == 1 || !alg.gen(alg.gen_at_position(p as usize)).parity.is_odd()
        }));
        PbwMonomial { factors }
    }

    /// `(generator index, exponent)` pairs in PBW order.
    pub fn gens<'a>(&'a self, alg: &'a SuperAlgebra) -> impl Iterator<Item = (usize, u32)> + 'a {
        self.factors
            .iter()
            .map(move |&(p, e)| (alg.gen_at_position(p as usize), e))
    }

    /// The position sequence with exponents expanded.
    pub fn letters(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &(p, e) in &self.factors {
            out.extend(std::iter::repeat(p).take(e as usize));
        }
        out
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn weight(&self, alg: &SuperAlgebra) -> Weight {
        let mut w = Weight::zero(alg.delta_rank, alg.eps_rank);
        for (gen, exp) in self.gens(alg) {
            let gw = alg.gen_weight(gen);
            w = w.add(&gw.scale(&Rat::int(exp as i64)));
        }
        w
    }

    /// True when every factor is a lowering generator.
    pub fn is_lowering(&self, alg: &SuperAlgebra) -> bool {
        self.gens(alg)
            .all(|(g, _)| matches!(alg.class(g), GenClass::NegOdd | GenClass::NegEven))
    }

    /// True when every factor is an odd lowering generator.
    pub fn is_purely_odd_lowering(&self, alg: &SuperAlgebra) -> bool {
        self.gens(alg).all(|(g, _)| alg.class(g) == GenClass::NegOdd)
    }

    pub fn format(&self, alg: &SuperAlgebra) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.gens(alg)
            .map(|(g, e)| {
                if e == 1 {
                    alg.gen(g).label.clone()
                } else {
                    format!("{}^{}", alg.gen(g).label, e)
                }
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

/// Sparse linear combination of PBW monomials with coefficients in `R`.
///
/// No zero coefficients are stored. For `R = CartanPoly` the coefficient is
/// understood to sit to the right of its monomial (the U(n^-)U(h) normal
/// form of U(b^-)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<R: CoeffRing> {
    terms: BTreeMap<PbwMonomial, R>,
}

impl<R: CoeffRing> Element<R> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        Element::from_monomial(PbwMonomial::unit(), R::one())
    }

    pub fn from_monomial(m: PbwMonomial, c: R) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&R> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (m, v) in self.terms() {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    /// The common weight of all monomials, when well defined.
    pub fn weight(&self, alg: &SuperAlgebra) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = it.next()?.weight(alg);
        for m in it {
            if m.weight(alg) != first {
                return None;
            }
        }
        Some(first)
    }
}

impl Element<Rat> {
    /// Some(r) with `self = r * other` when the two elements are exact
    /// scalar multiples; `Some(1)` when both are zero.
    pub fn scalar_ratio(&self, other: &Element<Rat>) -> Option<Rat> {
        if other.is_zero() {
            return if self.is_zero() { Some(Rat::one()) } else { None };
        }
        let (m, c) = other.terms().next().expect("nonzero element");
        let ratio = match self.coeff(m) {
            Some(v) => v.checked_div(c).expect("nonzero reference coefficient"),
            None => Rat::zero(),
        };
        if *self == other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }
}

impl<R: CoeffRing> fmt::Display for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| format!("{:?}*[{:?}]", c, m.factors))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

enum Violation {
    Swap(usize),
    OddSquare(usize),
}

fn find_violations(alg: &SuperAlgebra, word: &[u32], all: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        if word[i] > word[i + 1] {
            out.push(Violation::Swap(i));
        } else if word[i] == word[i + 1] {
            let gen = alg.gen_at_position(word[i] as usize);
            if alg.gen(gen).parity.is_odd() {
                out.push(Violation::OddSquare(i));
            }
        }
        if !all && !out.is_empty() {
            break;
        }
    }
    out
}

fn straighten_core<R: CoeffRing>(
    alg: &SuperAlgebra,
    start: Vec<(Vec<u32>, R)>,
    mut pick: impl FnMut(usize) -> usize,
    schedule_all: bool,
) -> Element<R> {
    let mut out = Element::zero();
    let mut stack = start;
    while let Some((word, coeff)) = stack.pop() {
        if coeff.is_zero() {
            continue;
        }
        let violations = find_violations(alg, &word, schedule_all);
        if violations.is_empty() {
            out.add_term(PbwMonomial::from_sorted_positions(alg, &word), coeff);
            continue;
        }
        let v = &violations[pick(violations.len())];
        match *v {
            Violation::Swap(i) => {
                let (gi, gj) = (
                    alg.gen_at_position(word[i] as usize),
                    alg.gen_at_position(word[i + 1] as usize),
                );
                // x y = (-1)^{|x||y|} y x + [x, y}
                let sign = alg.gen(gi).parity.swap_sign(alg.gen(gj).parity);
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                let signed = if sign < 0 { coeff.neg() } else { coeff.clone() };
                stack.push((swapped, signed));
                for (g, c) in alg.bracket(gi, gj) {
                    let mut reduced = Vec::with_capacity(word.len() - 1);
                    reduced.extend_from_slice(&word[..i]);
                    reduced.push(alg.pbw_position(g) as u32);
                    reduced.extend_from_slice(&word[i + 2..]);
                    stack.push((reduced, coeff.mul(&R::from_rat(&c))));
                }
            }
            Violation::OddSquare(i) => {
                // x^2 = [x, x]/2 for odd x.
                let gen = alg.gen_at_position(word[i] as usize);
                let half = Rat::new(1, 2).expect("nonzero denominator");
                for (g, c) in alg.bracket(gen, gen) {
                    let mut reduced = Vec::with_capacity(word.len() - 1);
                    reduced.extend_from_slice(&word[..i]);
                    reduced.push(alg.pbw_position(g) as u32);
                    reduced.extend_from_slice(&word[i + 2..]);
                    stack.push((reduced, coeff.mul(&R::from_rat(&(&c * &half)))));
                }
            }
        }
    }
    out
}

/// Expresses the product of the word's generators in the PBW basis of U(g).
///
/// Rewrites via `xy = (-1)^{|x||y|} yx + [x,y}`; terminates because every
/// swap reduces the inversion count at fixed length and every bracket or
/// odd-square step strictly reduces length.
pub fn straighten<R: CoeffRing>(alg: &SuperAlgebra, word: &[usize]) -> Element<R> {
    let positions: Vec<u32> = word
        .iter()
        .map(|&g| alg.pbw_position(g) as u32)
        .collect();
    straighten_core(alg, vec![(positions, R::one())], |_| 0, false)
}

/// Straightening with a seeded random choice among the current violations at
/// every step. Order-independence of the normal form (any schedule yields
/// the same element) is part of the verification suite.
pub fn straighten_scheduled<R: CoeffRing>(
    alg: &SuperAlgebra,
    word: &[usize],
    seed: u64,
) -> Element<R> {
    let mut state = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut next = move || {
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    let positions: Vec<u32> = word
        .iter()
        .map(|&g| alg.pbw_position(g) as u32)
        .collect();
    straighten_core(
        alg,
        vec![(positions, R::one())],
        move |n| (next() % n as u64) as usize,
        true,
    )
}

/// PBW-normal product, bilinear in both arguments. Coefficients commute
/// across monomials up to the Cartan shift supplied by the ring contract.
pub fn multiply<R: CoeffRing>(alg: &SuperAlgebra, x: &Element<R>, y: &Element<R>) -> Element<R> {
    let mut out = Element::zero();
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let shifts = alg.cartan_values(&my.weight(alg));
            let coeff = cx.shift_cartan(&shifts).mul(cy);
            if coeff.is_zero() {
                continue;
            }
            let mut word = mx.letters();
            word.extend(my.letters());
            let st = straighten_core(alg, vec![(word, R::one())], |_| 0, false);
            for (m, c) in st.terms() {
                out.add_term(m.clone(), c.mul(&coeff));
            }
        }
    }
    out
}

/// Complete, duplicate-free enumeration of the PBW monomials in U(n^-) of
/// the given weight, by bounded depth-first search over negative-root
/// multisets. A target outside the non-positive root cone yields an empty
/// sequence.
pub fn weight_monomials(alg: &SuperAlgebra, target: &Weight) -> Vec<PbwMonomial> {
    let Some(coords) = alg.simple_decomposition(&target.neg()) else {
        return Vec::new();
    };
    if coords.iter().any(|c| c.is_negative() || !c.is_integer()) {
        return Vec::new();
    }
    let gens = &alg.negative_gens;
    let mut out = Vec::new();
    let mut factors: Vec<(u32, u32)> = Vec::new();
    dfs(alg, gens, 0, &coords, &mut factors, &mut out);
    out.sort();
    out
}

fn dfs(
    alg: &SuperAlgebra,
    gens: &[usize],
    idx: usize,
    remaining: &[Rat],
    factors: &mut Vec<(u32, u32)>,
    out: &mut Vec<PbwMonomial>,
) {
    if remaining.iter().all(Rat::is_zero) {
        // Later generators must all take exponent zero.
        out.push(PbwMonomial { factors: factors.clone() });
        return;
    }
    if idx == gens.len() {
        return;
    }
    let gen = gens[idx];
    let root_coords = alg.gen_simple_coords(gen).expect("lowering generator");
    let mut max_exp: Option<u64> = None;
    for (rem, rc) in remaining.iter().zip(root_coords) {
        if rc.is_positive() {
            let bound = num::ToPrimitive::to_u64(
                &(rem.big() / rc.big()).floor().to_integer(),
            )
            .expect("exponent bound fits in u64");
            max_exp = Some(max_exp.map_or(bound, |m| m.min(bound)));
        }
    }
    let mut max_exp = max_exp.unwrap_or(0);
    if alg.gen(gen).parity.is_odd() {
        max_exp = max_exp.min(1);
    }
    for e in 0..=max_exp {
        if e == 0 {
            dfs(alg, gens, idx + 1, remaining, factors, out);
            continue;
        }
        let next: Vec<Rat> = remaining
            .iter()
            .zip(root_coords)
            .map(|(rem, rc)| rem - &(rc * &Rat::int(e as i64)))
            .collect();
        factors.push((alg.pbw_position(gen) as u32, e as u32));
        dfs(alg, gens, idx + 1, &next, factors, out);
        factors.pop();
    }
}
