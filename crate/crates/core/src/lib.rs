//! Exact symbolic computation of odd singular vectors in Verma and Kac
//! modules of the Lie superalgebras gl(m|n) and osp.
//!
//! The crate has two independent routes to every singular vector: closed
//! chain formulas (`glmn`, `osp`) and a brute-force exact null-space oracle
//! (`solver`) that enumerates weight spaces generically and solves the
//! annihilation equations over the rationals. All arithmetic is exact; no
//! floating point appears anywhere.

pub mod algebra;
pub mod coeff;
pub mod error;
pub mod glmn;
pub mod kac;
pub mod linalg;
pub mod osp;
pub mod pbw;
pub mod sampling;
pub mod solver;
pub mod verma;
pub mod weight;

pub use algebra::{gl_cached, GenClass, Generator, SuperAlgebra};
pub use coeff::{CartanPoly, CoeffRing, Rat};
pub use error::{Error, Result};
pub use pbw::{multiply, straighten, weight_monomials, Element, PbwMonomial};
pub use verma::{act, act_gen, weight_space_basis, VermaVector};
pub use weight::{Parity, Root, Weight};
