//! Coefficient rings of the enveloping algebra: exact rationals and
//! polynomials in Cartan coordinate symbols.

mod poly;
mod rat;

pub use poly::CartanPoly;
pub use rat::Rat;

/// Ring-operations contract supplied to the generic straightening engine.
///
/// One engine serves both Verma-module evaluation (coefficients in [`Rat`])
/// and Shapovalov elements (coefficients in [`CartanPoly`], kept to the right
/// of the PBW monomial they decorate).
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    /// Rewrites the coefficient after commuting it leftward across a monomial
    /// whose weight takes the value `shifts[i]` on the `i`-th Cartan basis
    /// element. The identity for scalar rings.
    fn shift_cartan(&self, shifts: &[Rat]) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

impl CoeffRing for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn shift_cartan(&self, _shifts: &[Rat]) -> Self {
        self.clone()
    }
}

impl CoeffRing for CartanPoly {
    fn zero() -> Self {
        CartanPoly::zero()
    }
    fn one() -> Self {
        CartanPoly::one()
    }
    fn is_zero(&self) -> bool {
        CartanPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        CartanPoly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        CartanPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        CartanPoly::mul(self, rhs)
    }
    fn from_rat(r: &Rat) -> Self {
        CartanPoly::constant(r.clone())
    }
    fn shift_cartan(&self, shifts: &[Rat]) -> Self {
        self.shift(shifts)
    }
}
