//! The Verma module M(lambda) as a computational object: evaluation of
//! `u . v_lambda` in the PBW basis of U(n^-) v_lambda, and weight-space
//! bases.

use crate::algebra::{GenClass, GenKind, SuperAlgebra};
use crate::coeff::Rat;
use crate::pbw::{straighten, weight_monomials, Element, PbwMonomial};
use crate::weight::Weight;

/// A vector of M(lambda), stored as an element of U(n^-) applied to the
/// highest weight vector. Every monomial factor is a lowering generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaVector {
    pub highest_weight: Weight,
    pub expansion: Element<Rat>,
}

impl VermaVector {
    /// The highest weight vector `v_lambda` itself.
    pub fn highest(lam: Weight) -> Self {
        VermaVector {
            highest_weight: lam,
            expansion: Element::unit(),
        }
    }

    pub fn from_expansion(lam: Weight, expansion: Element<Rat>) -> Self {
        VermaVector {
            highest_weight: lam,
            expansion,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.expansion.is_zero()
    }

    /// Weight of the vector: lambda plus the expansion weight, when the
    /// expansion is weight-homogeneous.
    pub fn weight(&self, alg: &SuperAlgebra) -> Option<Weight> {
        self.expansion
            .weight(alg)
            .map(|w| self.highest_weight.add(&w))
    }

    pub fn add(&self, rhs: &VermaVector) -> VermaVector {
        debug_assert_eq!(self.highest_weight, rhs.highest_weight);
        VermaVector {
            highest_weight: self.highest_weight.clone(),
            expansion: self.expansion.add(&rhs.expansion),
        }
    }

    pub fn sub(&self, rhs: &VermaVector) -> VermaVector {
        debug_assert_eq!(self.highest_weight, rhs.highest_weight);
        VermaVector {
            highest_weight: self.highest_weight.clone(),
            expansion: self.expansion.sub(&rhs.expansion),
        }
    }

    pub fn scale(&self, c: &Rat) -> VermaVector {
        VermaVector {
            highest_weight: self.highest_weight.clone(),
            expansion: self.expansion.scale(c),
        }
    }

    /// Ratio `r` with `self = r * other`, when the vectors are exact scalar
    /// multiples ("unique up to scalar" claims need the ratio, not just
    /// equality).
    pub fn scalar_ratio(&self, other: &VermaVector) -> Option<Rat> {
        if self.highest_weight != other.highest_weight {
            return None;
        }
        self.expansion.scalar_ratio(&other.expansion)
    }
}

/// Evaluates `u . v` where `u` is an element of U(g) with rational
/// coefficients: straightens within U(g) first, then projects (raising tail
/// annihilates, Cartan tail evaluates on the highest weight).
pub fn act(alg: &SuperAlgebra, u: &Element<Rat>, v: &VermaVector) -> VermaVector {
    let lam = &v.highest_weight;
    let mut out = Element::zero();
    for (mu, cu) in u.terms() {
        for (mv, cv) in v.expansion.terms() {
            let mut word: Vec<usize> = Vec::new();
            for (gen, exp) in mu.gens(alg) {
                word.extend(std::iter::repeat(gen).take(exp as usize));
            }
            for (gen, exp) in mv.gens(alg) {
                word.extend(std::iter::repeat(gen).take(exp as usize));
            }
            let st = straighten::<Rat>(alg, &word);
            for (mono, c) in st.terms() {
                if let Some((lowering, scalar)) = project_monomial(alg, mono, lam) {
                    out.add_term(lowering, &(c * cu) * &(cv * &scalar));
                }
            }
        }
    }
    VermaVector::from_expansion(lam.clone(), out)
}

/// Convenience: action of a single generator.
pub fn act_gen(alg: &SuperAlgebra, gen: usize, v: &VermaVector) -> VermaVector {
    act(alg, &Element::from_monomial(PbwMonomial::power(alg, gen, 1), Rat::one()), v)
}

/// Projects a PBW-normal monomial of U(g) onto U(n^-) v_lambda: monomials
/// ending in a raising generator vanish, Cartan factors evaluate at lambda.
fn project_monomial(
    alg: &SuperAlgebra,
    mono: &PbwMonomial,
    lam: &Weight,
) -> Option<(PbwMonomial, Rat)> {
    let mut scalar = Rat::one();
    let mut lowering: Vec<usize> = Vec::new();
    for (gen, exp) in mono.gens(alg) {
        match alg.class(gen) {
            GenClass::NegOdd | GenClass::NegEven => {
                lowering.extend(std::iter::repeat(gen).take(exp as usize));
            }
            GenClass::Cartan => {
                let value = match alg.gen(gen).kind {
                    GenKind::Cartan(coord) => match coord {
                        crate::algebra::CartanCoord::Delta(i) => lam.delta[i].clone(),
                        crate::algebra::CartanCoord::Eps(j) => lam.eps[j].clone(),
                    },
                    GenKind::Root(_) => unreachable!(),
                };
                scalar *= &value.pow(exp);
                if scalar.is_zero() {
                    return None;
                }
            }
            GenClass::Raising => return None,
        }
    }
    // The lowering prefix of a normal monomial is itself normal.
    let positions: Vec<u32> = lowering
        .iter()
        .map(|&g| alg.pbw_position(g) as u32)
        .collect();
    debug_assert!(positions.windows(2).all(|w| w[0] <= w[1]));
    Some((PbwMonomial::from_sorted_positions(alg, &positions), scalar))
}

/// VermaVectors whose expansions are the single PBW monomials of weight
/// `mu - lambda`; linearly independent by PBW.
pub fn weight_space_basis(alg: &SuperAlgebra, lam: &Weight, mu: &Weight) -> Vec<VermaVector> {
    weight_monomials(alg, &mu.sub(lam))
        .into_iter()
        .map(|m| VermaVector::from_expansion(lam.clone(), Element::from_monomial(m, Rat::one())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gl_cached;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn gen_by_label(alg: &SuperAlgebra, label: &str) -> usize {
        alg.basis
            .iter()
            .position(|g| g.label == label)
            .unwrap_or_else(|| panic!("no generator {label}"))
    }

    #[test]
    fn gl11_raising_on_lowered_vector_vanishes_at_atypical_weight() {
        let alg = gl_cached(1, 1);
        // lambda = (a | -a) with a = 5
        let lam = Weight::from_display(&[r(5)], &[r(-5)]);
        let low = gen_by_label(&alg, "E(1,1bar)");
        let raise = gen_by_label(&alg, "E(1bar,1)");
        let v = act_gen(&alg, low, &VermaVector::highest(lam));
        assert!(act_gen(&alg, raise, &v).is_zero());
    }

    #[test]
    fn unit_acts_as_identity() {
        let alg = gl_cached(2, 1);
        let lam = Weight::from_display(&[r(3), r(1)], &[r(2)]);
        let low = gen_by_label(&alg, "E(1,2bar)");
        let v = act_gen(&alg, low, &VermaVector::highest(lam));
        assert_eq!(act(&alg, &Element::unit(), &v), v);
    }

    #[test]
    fn highest_weight_vector_is_singular() {
        let alg = gl_cached(2, 2);
        let lam = Weight::from_display(&[r(4), r(1)], &[r(0), r(-2)]);
        let v = VermaVector::highest(lam);
        for &g in &alg.positive_gens {
            assert!(act_gen(&alg, g, &v).is_zero(), "{}", alg.gen(g).label);
        }
    }

    #[test]
    fn cartan_acts_by_the_vector_weight() {
        let alg = gl_cached(2, 1);
        let lam = Weight::from_display(&[r(3), r(1)], &[r(-4)]);
        let low = gen_by_label(&alg, "E(1,2bar)");
        let v = act_gen(&alg, low, &VermaVector::highest(lam.clone()));
        let mu = v.weight(&alg).unwrap();
        for (k, &h) in alg.cartan_gens.iter().enumerate() {
            let hv = act_gen(&alg, h, &v);
            assert_eq!(hv, v.scale(&alg.weight_on_cartan(&mu, k)));
        }
    }

    #[test]
    fn weight_space_basis_at_lambda_is_the_highest_vector() {
        let alg = gl_cached(2, 1);
        let lam = Weight::from_display(&[r(1), r(0)], &[r(2)]);
        let basis = weight_space_basis(&alg, &lam, &lam);
        assert_eq!(basis, vec![VermaVector::highest(lam)]);
    }

    #[test]
    fn gl21_weight_space_at_minus_beta_has_the_two_listed_monomials() {
        let alg = gl_cached(2, 1);
        let lam = Weight::from_display(&[r(2), r(0)], &[r(-3)]);
        let beta = Weight::delta_unit(2, 1, 2).sub(&Weight::eps_unit(2, 1, 1));
        let basis = weight_space_basis(&alg, &lam, &lam.sub(&beta));
        assert_eq!(basis.len(), 2);
        let chain = straighten::<Rat>(
            &alg,
            &[gen_by_label(&alg, "E(1,1bar)"), gen_by_label(&alg, "E(1bar,2bar)")],
        );
        let single = straighten::<Rat>(&alg, &[gen_by_label(&alg, "E(1,2bar)")]);
        let expansions: Vec<&Element<Rat>> = basis.iter().map(|v| &v.expansion).collect();
        assert!(expansions.contains(&&chain));
        assert!(expansions.contains(&&single));
    }

    #[test]
    fn module_action_identity_on_basis_pairs() {
        let alg = gl_cached(2, 1);
        let lam = Weight::from_display(&[r(2), r(-1)], &[Rat::new(1, 2).unwrap()]);
        let low = gen_by_label(&alg, "E(1,1bar)");
        let seed = act_gen(&alg, low, &VermaVector::highest(lam));
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                let sign = alg.gen(x).parity.swap_sign(alg.gen(y).parity);
                let lhs = act_gen(&alg, x, &act_gen(&alg, y, &seed))
                    .sub(&act_gen(&alg, y, &act_gen(&alg, x, &seed)).scale(&r(sign)));
                let mut rhs = VermaVector::from_expansion(
                    seed.highest_weight.clone(),
                    Element::zero(),
                );
                for (g, c) in alg.bracket(x, y) {
                    rhs = rhs.add(&act_gen(&alg, g, &seed).scale(&c));
                }
                assert_eq!(lhs, rhs, "x={} y={}", alg.gen(x).label, alg.gen(y).label);
            }
        }
    }
}
