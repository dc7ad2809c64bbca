use std::fmt;

use crate::coeff::Rat;
use crate::error::{Error, Result};

/// Z/2 parity of a homogeneous element.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    /// Koszul sign picked up when two homogeneous elements swap.
    pub fn swap_sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// Exact weight in h*, stored on the delta/epsilon basis.
///
/// `delta[i]` is the coefficient of `delta_{i+1}` and `eps[j]` of
/// `eps_{j+1}`, so a gl(m|n) weight `(a_m,...,a_1 | b_1,...,b_n)` has
/// `delta = [a_1,...,a_m]` and `eps = [b_1,...,b_n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Weight {
    pub delta: Vec<Rat>,
    pub eps: Vec<Rat>,
}

impl Weight {
    pub fn zero(delta_rank: usize, eps_rank: usize) -> Self {
        Weight {
            delta: vec![Rat::zero(); delta_rank],
            eps: vec![Rat::zero(); eps_rank],
        }
    }

    /// `delta_i` as a weight (1-based subscript).
    pub fn delta_unit(delta_rank: usize, eps_rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(delta_rank, eps_rank);
        w.delta[i - 1] = Rat::one();
        w
    }

    /// `eps_j` as a weight (1-based subscript).
    pub fn eps_unit(delta_rank: usize, eps_rank: usize, j: usize) -> Self {
        let mut w = Weight::zero(delta_rank, eps_rank);
        w.eps[j - 1] = Rat::one();
        w
    }

    /// Builds a weight from the display layout `(a_m,...,a_1 | b_1,...,b_n)`.
    pub fn from_display(a_desc: &[Rat], b: &[Rat]) -> Self {
        Weight {
            delta: a_desc.iter().rev().cloned().collect(),
            eps: b.to_vec(),
        }
    }

    pub fn delta_rank(&self) -> usize {
        self.delta.len()
    }

    pub fn eps_rank(&self) -> usize {
        self.eps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().all(Rat::is_zero) && self.eps.iter().all(Rat::is_zero)
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        Weight {
            delta: self.delta.iter().zip(&rhs.delta).map(|(a, b)| a + b).collect(),
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        Weight {
            delta: self.delta.iter().zip(&rhs.delta).map(|(a, b)| a - b).collect(),
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            delta: self.delta.iter().map(|a| -a).collect(),
            eps: self.eps.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            delta: self.delta.iter().map(|a| a * c).collect(),
            eps: self.eps.iter().map(|a| a * c).collect(),
        }
    }

    /// The invariant symmetric form: `(delta_i, delta_j) = -(eps_i, eps_j) =
    /// [i = j]` and `(delta_i, eps_k) = 0`.
    pub fn form(&self, rhs: &Weight) -> Result<Rat> {
        if self.delta_rank() != rhs.delta_rank() || self.eps_rank() != rhs.eps_rank() {
            return Err(Error::RankMismatch(
                self.delta_rank(),
                self.eps_rank(),
                rhs.delta_rank(),
                rhs.eps_rank(),
            ));
        }
        let mut acc = Rat::zero();
        for (a, b) in self.delta.iter().zip(&rhs.delta) {
            acc += &(a * b);
        }
        for (a, b) in self.eps.iter().zip(&rhs.eps) {
            acc -= &(a * b);
        }
        Ok(acc)
    }

    /// Integrality: all pairwise differences within each block are integers.
    pub fn is_integral(&self) -> bool {
        block_diffs_hold(&self.delta, |d| d.is_integer())
            && block_diffs_hold(&self.eps, |d| d.is_integer())
    }

    /// Dominance: the display sequences `(a_m,...,a_1)` and `(b_1,...,b_n)`
    /// are weakly decreasing, i.e. all block differences are >= 0.
    pub fn is_dominant(&self) -> bool {
        // delta stored ascending by subscript: a_{k+1} <= a_{k+2} required.
        self.delta.windows(2).all(|w| w[1] >= w[0])
            && self.eps.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.is_integral() && self.is_dominant()
    }
}

fn block_diffs_hold(block: &[Rat], pred: impl Fn(&Rat) -> bool) -> bool {
    block.windows(2).all(|w| pred(&(&w[1] - &w[0])))
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.delta.iter().rev().map(|r| r.to_string()).collect();
        let b: Vec<String> = self.eps.iter().map(|r| r.to_string()).collect();
        write!(f, "({} | {})", a.join(","), b.join(","))
    }
}

/// A root together with its parity and sign of positivity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub positive: bool,
}

impl Root {
    /// Isotropy test `(beta, beta) = 0`; the odd roots `delta_i - eps_p` of
    /// gl(m|n) are isotropic.
    pub fn is_isotropic(&self) -> bool {
        self.weight
            .form(&self.weight)
            .map(|v| v.is_zero())
            .unwrap_or(false)
    }
}
